use crate::element::{ElementLabel, ElementSet, GroundSet};
use crate::error::{Error, Result};
use crate::functors::{Expansion, ExpansionVector};
use crate::matroid::{Family, Matroid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub label: ElementLabel,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(label: ElementLabel, u: usize, v: usize) -> Self {
        Self { label, u, v }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Undirected multigraph on vertices `1..=vertex_count`; loops and parallel
/// edges allowed. Edges are kept in label order with `u <= v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            for w in [e.u, e.v] {
                if w == 0 || w > vertex_count {
                    return Err(Error::VertexOutOfRange(w));
                }
            }
        }
        GroundSet::new(edges.iter().map(|e| e.label))?;
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|e| Edge::new(e.label, e.u.min(e.v), e.u.max(e.v)))
            .collect();
        edges.sort_by_key(|e| e.label);
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.edges.iter().map(|e| e.label)).expect("labels validated")
    }

    /// Connected once loops are ignored.
    pub fn is_connected(&self) -> bool {
        let mut dsu = Dsu::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for e in &self.edges {
            if dsu.union(e.u - 1, e.v - 1) {
                parts -= 1;
            }
        }
        parts <= 1
    }

    /// Replaces each edge by `alpha[i]` parallel copies (loops stay loops);
    /// `alpha` follows the canonical order of the edge labels, and copies get
    /// the same labels as the matching expansion of the edge ground.
    pub fn parallel_expansion(&self, alpha: &ExpansionVector) -> Result<MultiGraph> {
        let ground = self.ground();
        let exp = Expansion::new(&ground, alpha)?;
        let mut edges = Vec::new();
        for (p, label) in ground.labels().iter().enumerate() {
            let e = self.edges.iter().find(|e| e.label == *label).expect("edge present");
            for q in exp.copies_of(p).iter() {
                edges.push(Edge::new(exp.ground().label(q), e.u, e.v));
            }
        }
        MultiGraph::new(self.vertex_count, edges)
    }
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push((a, b));
        true
    }

    fn undo(&mut self) {
        let (a, b) = self.history.pop().expect("union to undo");
        self.parent[b] = b;
        self.size[a] -= self.size[b];
    }
}

/// Spanning-tree matroid of a connected multigraph.
pub fn graphic_matroid(g: &MultiGraph) -> Result<Matroid> {
    if g.edges.is_empty() {
        return Err(Error::NoEdges);
    }
    if !g.is_connected() {
        return Err(Error::GraphNotConnected);
    }
    let ground = g.ground();
    // (position in ground, u, v) for the non-loop edges
    let links: Vec<(usize, usize, usize)> = g
        .edges
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| (ground.index_of(&e.label).expect("edge label"), e.u - 1, e.v - 1))
        .collect();
    let mut trees = Vec::new();
    let mut dsu = Dsu::new(g.vertex_count);
    spanning_trees(&links, 0, g.vertex_count - 1, ElementSet::EMPTY, &mut dsu, &mut trees);
    Ok(Matroid::from_family_unchecked(Family::new(ground, trees)?))
}

fn spanning_trees(
    links: &[(usize, usize, usize)],
    at: usize,
    need: usize,
    acc: ElementSet,
    dsu: &mut Dsu,
    out: &mut Vec<ElementSet>,
) {
    if need == 0 {
        out.push(acc);
        return;
    }
    if links.len() - at < need {
        return;
    }
    let (pos, u, v) = links[at];
    if dsu.union(u, v) {
        spanning_trees(links, at + 1, need - 1, acc.insert(pos), dsu, out);
        dsu.undo();
    }
    spanning_trees(links, at + 1, need, acc, dsu, out);
}
