//! Brute-force oracles and the shared matroid corpus for integration tests.
//!
//! Oracles work on plain sorted position lists and follow the textbook
//! definitions directly; they share no code with the library beyond the
//! types used to hand results back for comparison.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use matroids::families::{
    graphic_matroid, partition_matroid, transversal_matroid, uniform, Edge, MultiGraph, SetSystem,
};
use matroids::{add_coloop, direct_sum, ElementLabel, ElementSet, ExpansionVector, Family, GroundSet, Matroid};
use rand::Rng;

pub type Set = Vec<usize>;

pub fn to_set(s: ElementSet) -> Set {
    (0..64).filter(|i| s.0 >> i & 1 == 1).collect()
}

pub fn from_set(s: &[usize]) -> ElementSet {
    ElementSet(s.iter().fold(0u64, |acc, &i| acc | 1 << i))
}

pub fn sets_of(members: &[ElementSet]) -> Vec<Set> {
    members.iter().map(|&m| to_set(m)).collect()
}

fn all_subsets(n: usize) -> Vec<Set> {
    (0u64..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

fn is_sub(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Matroid test through the independence axioms: the down-closure must be
/// closed under augmentation and its maximal sets must be exactly the family.
pub fn oracle_is_matroid(n: usize, family: &[Set]) -> bool {
    if family.is_empty() {
        return false;
    }
    let fam: BTreeSet<Set> = family.iter().cloned().collect();
    for a in &fam {
        for b in &fam {
            if a != b && is_sub(a, b) {
                return false;
            }
        }
    }
    let indep: BTreeSet<Set> = all_subsets(n)
        .into_iter()
        .filter(|s| fam.iter().any(|b| is_sub(s, b)))
        .collect();
    for i in &indep {
        for j in &indep {
            if i.len() < j.len() {
                let augments = j.iter().filter(|x| !i.contains(x)).any(|&x| {
                    let mut k = i.clone();
                    k.push(x);
                    k.sort();
                    indep.contains(&k)
                });
                if !augments {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimal sets contained in no basis.
pub fn oracle_circuits(n: usize, bases: &[Set]) -> Vec<Set> {
    let dependent: Vec<Set> = all_subsets(n)
        .into_iter()
        .filter(|s| !bases.iter().any(|b| is_sub(s, b)))
        .collect();
    let mut out: Vec<Set> = dependent
        .iter()
        .filter(|d| !dependent.iter().any(|e| e.len() < d.len() && is_sub(e, d)))
        .cloned()
        .collect();
    out.sort();
    out
}

/// Every symmetric difference of two distinct circuits contains a circuit.
pub fn oracle_is_binary(n: usize, bases: &[Set]) -> bool {
    let circuits = oracle_circuits(n, bases);
    for c1 in &circuits {
        for c2 in &circuits {
            if c1 == c2 {
                continue;
            }
            let diff: Set = (0..n).filter(|x| c1.contains(x) != c2.contains(x)).collect();
            if !circuits.iter().any(|c| is_sub(c, &diff)) {
                return false;
            }
        }
    }
    true
}

/// Edge subsets of size `vertices - 1` that contain no cycle, for a
/// connected graph. Edges are `(u, v)` with 1-based vertices.
pub fn oracle_spanning_trees(vertices: usize, edges: &[(usize, usize)]) -> Vec<Set> {
    let mut out = Vec::new();
    for s in all_subsets(edges.len()) {
        if s.len() + 1 != vertices {
            continue;
        }
        let mut comp: Vec<usize> = (0..=vertices).collect();
        let mut acyclic = true;
        for &e in &s {
            let (cu, cv) = (comp[edges[e].0], comp[edges[e].1]);
            if cu == cv {
                acyclic = false;
                break;
            }
            for c in comp.iter_mut() {
                if *c == cv {
                    *c = cu;
                }
            }
        }
        if acyclic {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Whether `s` can be matched into distinct members of `sets`.
fn oracle_matchable(s: &[usize], sets: &[Set]) -> bool {
    fn go(s: &[usize], sets: &[Set], used: &mut Vec<bool>) -> bool {
        let Some((&x, rest)) = s.split_first() else {
            return true;
        };
        for j in 0..sets.len() {
            if !used[j] && sets[j].contains(&x) {
                used[j] = true;
                if go(rest, sets, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(s, sets, &mut vec![false; sets.len()])
}

/// Largest partial transversals.
pub fn oracle_transversal_bases(n: usize, sets: &[Set]) -> Vec<Set> {
    let partial: Vec<Set> = all_subsets(n)
        .into_iter()
        .filter(|s| oracle_matchable(s, sets))
        .collect();
    let r = partial.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<Set> = partial.into_iter().filter(|s| s.len() == r).collect();
    out.sort();
    out
}

/// Every subfamily covers at least as many elements as it has members.
pub fn oracle_hall(sets: &[Set]) -> bool {
    all_subsets(sets.len()).iter().all(|j| {
        let cover: BTreeSet<usize> = j.iter().flat_map(|&i| sets[i].iter().copied()).collect();
        cover.len() >= j.len()
    })
}

/// Expansion by definition: element `i` becomes positions
/// `offset[i]..offset[i] + alpha[i]`; members expand to every choice of one
/// copy per element.
pub fn oracle_expand(alpha: &[u32], family: &[Set]) -> (usize, Vec<Set>) {
    let mut offset = vec![0usize];
    for &k in alpha {
        offset.push(offset.last().unwrap() + k as usize);
    }
    let offset = &offset;
    let mut out = BTreeSet::new();
    for a in family {
        let mut partial: Vec<Set> = vec![vec![]];
        for &x in a {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    (0..alpha[x] as usize).map(move |j| {
                        let mut q = p.clone();
                        q.push(offset[x] + j);
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    (*offset.last().unwrap(), out.into_iter().collect())
}

fn maximal(family: &[Set]) -> Vec<Set> {
    family
        .iter()
        .filter(|a| !family.iter().any(|b| b.len() > a.len() && is_sub(a, b)))
        .cloned()
        .collect()
}

/// Classes of `x ~ y  iff  {A \ x : x ∈ A} = {A \ y : y ∈ A}` over the
/// maximal members, as sorted lists ordered by least member.
pub fn oracle_trace_classes(n: usize, family: &[Set]) -> Vec<Set> {
    let family = &maximal(family);
    let trace = |x: usize| -> BTreeSet<Set> {
        family
            .iter()
            .filter(|a| a.contains(&x))
            .map(|a| a.iter().copied().filter(|&y| y != x).collect())
            .collect()
    };
    let traces: Vec<BTreeSet<Set>> = (0..n).map(trace).collect();
    let mut classes: Vec<Set> = Vec::new();
    for x in 0..n {
        match classes.iter_mut().find(|c| traces[c[0]] == traces[x]) {
            Some(c) => c.push(x),
            None => classes.push(vec![x]),
        }
    }
    classes
}

/// Contraction by definition: class images of the members, then maximal ones.
pub fn oracle_contract(n: usize, family: &[Set]) -> (Vec<Set>, Vec<Set>) {
    let classes = oracle_trace_classes(n, family);
    let images: BTreeSet<Set> = maximal(family)
        .iter()
        .map(|a| {
            (0..classes.len())
                .filter(|&c| classes[c].iter().any(|x| a.contains(x)))
                .collect()
        })
        .collect();
    let images: Vec<Set> = images.into_iter().collect();
    (classes, maximal(&images))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Tries every bijection of the grounds.
pub fn oracle_isomorphic(n1: usize, a: &[Set], n2: usize, b: &[Set]) -> bool {
    if n1 != n2 || a.len() != b.len() {
        return false;
    }
    let target: BTreeSet<Set> = b.iter().cloned().collect();
    permutations(n1).into_iter().any(|p| {
        a.iter().all(|s| {
            let mut t: Set = s.iter().map(|&x| p[x]).collect();
            t.sort();
            target.contains(&t)
        })
    })
}

/// Exchange-graph connectivity by explicit construction. Returns `None`
/// when every compatible pair is connected, otherwise the lexicographically
/// least `(class minimum, first sequence not reachable from it)`.
pub fn oracle_te(bases: &[Set], class: u8, m: usize) -> Option<(Vec<Set>, Vec<Set>)> {
    let basis_set: HashSet<Set> = bases.iter().cloned().collect();
    let mut seqs: Vec<Vec<Set>> = vec![vec![]];
    for _ in 0..m {
        seqs = seqs
            .into_iter()
            .flat_map(|s| {
                bases.iter().map(move |b| {
                    let mut t = s.clone();
                    t.push(b.clone());
                    t
                })
            })
            .collect();
    }
    seqs.sort();
    let index: HashMap<Vec<Set>, usize> = seqs.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut parent: Vec<usize> = (0..seqs.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let replace = |a: &[usize], out: &[usize], inn: &[usize]| -> Set {
        let mut s: Set = a
            .iter()
            .copied()
            .filter(|x| !out.contains(x))
            .chain(inn.iter().copied())
            .collect();
        s.sort();
        s.dedup();
        s
    };
    for (i, seq) in seqs.iter().enumerate() {
        let mut targets: Vec<Vec<Set>> = Vec::new();
        for r in 0..m {
            for s in 0..m {
                if r == s {
                    continue;
                }
                let (ar, as_) = (&seq[r], &seq[s]);
                let moves: Vec<(Set, Set)> = if class == 3 {
                    let subs = |a: &Set| -> Vec<Set> {
                        all_subsets(a.len())
                            .into_iter()
                            .map(|p| p.iter().map(|&k| a[k]).collect())
                            .collect()
                    };
                    subs(ar)
                        .into_iter()
                        .flat_map(|u| subs(as_).into_iter().map(move |v| (u.clone(), v)))
                        .collect()
                } else {
                    ar.iter()
                        .flat_map(|&x| as_.iter().map(move |&y| (vec![x], vec![y])))
                        .collect()
                };
                for (u, v) in moves {
                    let nr = replace(ar, &u, &v);
                    let ns = replace(as_, &v, &u);
                    if nr.len() != ar.len() || ns.len() != as_.len() {
                        continue;
                    }
                    if basis_set.contains(&nr) && basis_set.contains(&ns) {
                        let mut t = seq.clone();
                        t[r] = nr;
                        t[s] = ns;
                        targets.push(t);
                    }
                }
            }
        }
        if class == 2 {
            for p in permutations(m) {
                targets.push(p.iter().map(|&k| seq[k].clone()).collect());
            }
        }
        for t in targets {
            let j = index[&t];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let union_key = |s: &Vec<Set>| -> Vec<usize> {
        let mut all: Vec<usize> = s.iter().flatten().copied().collect();
        all.sort();
        all
    };
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, s) in seqs.iter().enumerate() {
        groups.entry(union_key(s)).or_default().push(i);
    }
    let mut best: Option<(Vec<Set>, Vec<Set>)> = None;
    for members in groups.values() {
        let root = find(&mut parent, members[0]);
        if let Some(&j) = members.iter().find(|&&j| find(&mut parent, j) != root) {
            let cand = (seqs[members[0]].clone(), seqs[j].clone());
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best
}

pub fn x(i: u32) -> ElementLabel {
    ElementLabel::new(i)
}

pub fn system(n: usize, sets: &[&[u32]]) -> SetSystem {
    let ground = GroundSet::standard(n);
    let members: Vec<ElementSet> = sets
        .iter()
        .map(|s| ground.subset(&s.iter().map(|&i| x(i)).collect::<Vec<_>>()).unwrap())
        .collect();
    SetSystem::unnamed(ground, members).unwrap()
}

pub fn graph(vertices: usize, edges: &[(usize, usize)]) -> MultiGraph {
    let edges = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| Edge::new(x(i as u32 + 1), u, v))
        .collect();
    MultiGraph::new(vertices, edges).unwrap()
}

/// Moves every label `xI` to `x(I + by)`.
pub fn shifted(m: &Matroid, by: u32) -> Matroid {
    m.relabel(|l| ElementLabel {
        base_id: l.base_id + by,
        copy_id: l.copy_id,
    })
    .unwrap()
}

fn set_partitions(n: usize) -> Vec<Vec<Set>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in set_partitions(n - 1) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].push(n - 1);
            out.push(q);
        }
        let mut q = p.clone();
        q.push(vec![n - 1]);
        out.push(q);
    }
    out
}

pub fn partition_system(n: usize, blocks: &[Set]) -> SetSystem {
    SetSystem::unnamed(GroundSet::standard(n), blocks.iter().map(|b| from_set(b))).unwrap()
}

/// Connected multigraphs with at most five edges.
pub fn small_graphs() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("edge", graph(2, &[(1, 2)])),
        ("loop", graph(1, &[(1, 1)])),
        ("digon", graph(2, &[(1, 2), (1, 2)])),
        ("theta", graph(2, &[(1, 2), (1, 2), (1, 2)])),
        ("path2", graph(3, &[(1, 2), (2, 3)])),
        ("triangle", graph(3, &[(1, 2), (2, 3), (1, 3)])),
        ("triangle+parallel", graph(3, &[(1, 2), (2, 3), (1, 3), (1, 3)])),
        ("triangle+loop", graph(3, &[(1, 2), (2, 3), (1, 3), (2, 2)])),
        ("double path", graph(3, &[(1, 2), (1, 2), (2, 3), (2, 3)])),
        ("square", graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)])),
        ("square+chord", graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])),
        ("digon+triangle", graph(4, &[(1, 2), (1, 2), (2, 3), (3, 1), (3, 4)])),
        ("star+parallel", graph(4, &[(1, 2), (1, 3), (1, 4), (1, 4)])),
        ("pentagon", graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])),
    ]
}

/// Set systems with at most three members.
pub fn small_systems() -> Vec<(&'static str, SetSystem)> {
    vec![
        ("two sets", system(3, &[&[1, 2], &[1, 3]])),
        ("three sets", system(3, &[&[1, 2], &[1, 3], &[3]])),
        ("shared tail", system(4, &[&[1, 2, 3], &[3, 4]])),
        ("chain", system(4, &[&[1, 2], &[2, 3], &[3, 4]])),
        ("funnel", system(5, &[&[1, 2, 3, 4], &[4, 5], &[5]])),
        ("crowded", system(2, &[&[1], &[1], &[1, 2]])),
        ("twins", system(3, &[&[1, 2, 3], &[1, 2, 3]])),
        ("spread", system(5, &[&[1, 2], &[3, 4], &[5]])),
    ]
}

/// The fixed corpus: uniform, partition, graphic and transversal matroids,
/// plus direct sums and coloop extensions of a few of them.
pub fn corpus() -> Vec<(String, Matroid)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for t in 0..=n.min(3) {
            out.push((format!("U({t},{n})"), uniform(t, n).unwrap()));
        }
    }
    for n in 1..=4 {
        for blocks in set_partitions(n) {
            for t in 1..=blocks.len() {
                let p = partition_system(n, &blocks);
                out.push((format!("P{blocks:?},{t}"), partition_matroid(&p, t).unwrap()));
            }
        }
    }
    for (blocks, t) in [
        (vec![vec![0, 1], vec![2], vec![3, 4]], 2),
        (vec![vec![0, 1, 2], vec![3, 4, 5]], 1),
        (vec![vec![0, 1, 2], vec![3, 4, 5]], 2),
        (vec![vec![0, 1], vec![2, 3], vec![4, 5]], 2),
        (vec![vec![0, 1], vec![2, 3], vec![4, 5]], 3),
        (vec![vec![0], vec![1], vec![2], vec![3, 4, 5]], 3),
    ] {
        let n = blocks.iter().map(Vec::len).sum();
        let p = partition_system(n, &blocks);
        out.push((format!("P{blocks:?},{t}"), partition_matroid(&p, t).unwrap()));
    }
    for (name, g) in small_graphs() {
        out.push((format!("M({name})"), graphic_matroid(&g).unwrap()));
    }
    for (name, s) in small_systems() {
        out.push((format!("M[{name}]"), transversal_matroid(&s).unwrap()));
    }
    let u12 = uniform(1, 2).unwrap();
    let u23 = uniform(2, 3).unwrap();
    let tri = graphic_matroid(&small_graphs()[5].1).unwrap();
    let tr = transversal_matroid(&small_systems()[0].1).unwrap();
    out.push(("U(1,2)+U(1,2)".into(), direct_sum(&u12, &shifted(&u12, 2)).unwrap()));
    out.push(("U(1,2)+U(2,3)".into(), direct_sum(&u12, &shifted(&u23, 2)).unwrap()));
    out.push((
        "M(triangle)+U(1,1)".into(),
        direct_sum(&tri, &shifted(&uniform(1, 1).unwrap(), 3)).unwrap(),
    ));
    out.push(("U(2,3)+coloop".into(), add_coloop(&u23, x(9)).unwrap()));
    out.push(("U(1,2)+coloop".into(), add_coloop(&u12, x(5)).unwrap()));
    out.push(("M[two sets]+coloop".into(), add_coloop(&tr, x(4)).unwrap()));
    out.push((
        "(U(1,2)+U(1,2))+coloop".into(),
        add_coloop(&direct_sum(&u12, &shifted(&u12, 2)).unwrap(), x(7)).unwrap(),
    ));
    out
}

/// A random family on `n` elements; with `equicardinal` all members share one size.
pub fn random_family<R: Rng>(rng: &mut R, n: usize, max_members: usize, equicardinal: bool) -> Family {
    let k = rng.gen_range(0..=n);
    let count = rng.gen_range(1..=max_members);
    let members = (0..count).map(|_| {
        let size = if equicardinal { k } else { rng.gen_range(0..=n) };
        let mut idx: Vec<usize> = (0..n).collect();
        for i in 0..size {
            let j = rng.gen_range(i..n);
            idx.swap(i, j);
        }
        ElementSet::from_indices(idx[..size].iter().copied())
    });
    Family::new(GroundSet::standard(n), members.collect::<Vec<_>>()).unwrap()
}

/// Multiplicity vectors with entries in `1..=max`.
pub fn all_alphas(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|a| {
                (1..=max).map(move |k| {
                    let mut b = a.clone();
                    b.push(k);
                    b
                })
            })
            .collect();
    }
    out
}

pub mod strategies {
    use super::*;
    use matroids::families::uniform;
    use proptest::prelude::*;

    pub fn uniform_matroid() -> impl Strategy<Value = Matroid> {
        (1usize..=6)
            .prop_flat_map(|n| (0..=n.min(4), Just(n)))
            .prop_map(|(t, n)| uniform(t, n).unwrap())
    }

    pub fn graphic() -> impl Strategy<Value = Matroid> {
        (1usize..=4)
            .prop_flat_map(|v| (Just(v), proptest::collection::vec((1..=v, 1..=v), 1..=6)))
            .prop_filter_map("connected", |(v, edges)| graphic_matroid(&graph(v, &edges)).ok())
    }

    pub fn transversal() -> impl Strategy<Value = Matroid> {
        (1usize..=5)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec(0u64..1 << n, 1..=3)))
            .prop_map(|(n, sets)| {
                let s = SetSystem::unnamed(GroundSet::standard(n), sets.into_iter().map(ElementSet)).unwrap();
                transversal_matroid(&s).unwrap()
            })
    }

    pub fn partition() -> impl Strategy<Value = Matroid> {
        proptest::collection::vec(0usize..4, 1..=6).prop_flat_map(|assign| {
            let mut blocks: Vec<Set> = Vec::new();
            let mut seen: Vec<usize> = Vec::new();
            for (i, b) in assign.iter().enumerate() {
                match seen.iter().position(|s| s == b) {
                    Some(k) => blocks[k].push(i),
                    None => {
                        seen.push(*b);
                        blocks.push(vec![i]);
                    }
                }
            }
            let n = assign.len();
            let k = blocks.len();
            (1..=k).prop_map(move |t| partition_matroid(&partition_system(n, &blocks), t).unwrap())
        })
    }

    /// Small matroids from every constructor.
    pub fn matroid() -> impl Strategy<Value = Matroid> {
        prop_oneof![uniform_matroid(), graphic(), transversal(), partition()]
    }

    pub fn alpha_for(n: usize, max: u32) -> impl Strategy<Value = ExpansionVector> {
        proptest::collection::vec(1..=max, n).prop_map(|v| ExpansionVector::new(v).unwrap())
    }

    /// Any family on up to six elements.
    pub fn family() -> impl Strategy<Value = Family> {
        (1usize..=6)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec(0u64..1 << n, 1..=8)))
            .prop_map(|(n, sets)| {
                Family::new(
                    GroundSet::standard(n),
                    sets.into_iter().map(ElementSet).collect::<Vec<_>>(),
                )
                .unwrap()
            })
    }

    /// Equicardinal families, which are antichains.
    pub fn antichain() -> impl Strategy<Value = Family> {
        (1usize..=5)
            .prop_flat_map(|n| (Just(n), 0..=n))
            .prop_flat_map(|(n, k)| {
                let layer: Vec<ElementSet> = ElementSet::full(n).subsets().filter(|s| s.len() == k).collect();
                let len = layer.len();
                (Just(n), proptest::sample::subsequence(layer, 1..=len))
            })
            .prop_map(|(n, sets)| Family::new(GroundSet::standard(n), sets).unwrap())
    }
}

pub mod lemmas {
    use std::collections::HashMap;

    use matroids::exchange::{compatible, lift_sequence, project_sequence, single_subset_exchange, BasisSequence};
    use matroids::{expand, ElementSet, Expansion, ExpansionVector, Matroid};

    /// Counterexample counts for the lifting and projection lemmas on one
    /// matroid and multiplicity vector.
    #[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
    pub struct Counts {
        pub cases: u64,
        pub lift: u64,
        pub projection: u64,
        pub exchange_projection: u64,
        pub exchange_lifting: u64,
    }

    impl Counts {
        pub fn failures(&self) -> u64 {
            self.lift + self.projection + self.exchange_projection + self.exchange_lifting
        }

        pub fn add(&mut self, o: Counts) {
            self.cases += o.cases;
            self.lift += o.lift;
            self.projection += o.projection;
            self.exchange_projection += o.exchange_projection;
            self.exchange_lifting += o.exchange_lifting;
        }
    }

    fn sequences(bases: &[ElementSet], len: usize) -> Vec<Vec<ElementSet>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|s| {
                    bases.iter().map(move |&b| {
                        let mut t = s.clone();
                        t.push(b);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Lifts exist for every sequence of length 2 and 3, land on bases,
    /// project back, and keep compatibility. Projections of length-2
    /// sequences of the expansion are compatible sequences of bases.
    /// Single subset exchanges between compatible pairs of the expansion
    /// project to, and lift from, single subset exchanges of the base matroid.
    pub fn check(m: &Matroid, alpha: &ExpansionVector) -> Counts {
        let exp = Expansion::new(m.ground(), alpha).unwrap();
        let me = expand(m, alpha).unwrap();
        let mut c = Counts::default();

        for len in [2, 3] {
            let mut by_union: HashMap<Vec<u32>, BasisSequence> = HashMap::new();
            for seq in sequences(m.bases(), len) {
                c.cases += 1;
                let lifted = lift_sequence(&exp, &seq);
                let Ok(lifted) = BasisSequence::new(&me, lifted) else {
                    c.lift += 1;
                    continue;
                };
                if project_sequence(&exp, lifted.bases()) != seq {
                    c.lift += 1;
                }
                let base = BasisSequence::new(m, seq).unwrap();
                match by_union.get(base.union_multiset()) {
                    Some(first) => {
                        if !compatible(first, &lifted).unwrap() {
                            c.lift += 1;
                        }
                    }
                    None => {
                        by_union.insert(base.union_multiset().to_vec(), lifted);
                    }
                }
            }
        }

        let mut groups: HashMap<(ElementSet, ElementSet), Vec<(ElementSet, ElementSet)>> = HashMap::new();
        for &a in me.bases() {
            for &b in me.bases() {
                groups.entry((a.union(b), a.intersection(b))).or_default().push((a, b));
            }
        }
        for group in groups.values() {
            let projected: Vec<(ElementSet, ElementSet)> =
                group.iter().map(|&(a, b)| (exp.project(a), exp.project(b))).collect();
            let key = |(a, b): (ElementSet, ElementSet)| (a.union(b), a.intersection(b));
            for &(a, b) in &projected {
                c.cases += 1;
                if !m.is_basis(a) || !m.is_basis(b) || key((a, b)) != key(projected[0]) {
                    c.projection += 1;
                }
            }
            for (i, &lift_a) in group.iter().enumerate() {
                for (j, &lift_b) in group.iter().enumerate() {
                    c.cases += 1;
                    let upstairs = single_subset_exchange(|s| me.is_basis(s), lift_a, lift_b);
                    let downstairs = single_subset_exchange(|s| m.is_basis(s), projected[i], projected[j]);
                    if upstairs && !downstairs {
                        c.exchange_projection += 1;
                    }
                    if downstairs && !upstairs {
                        c.exchange_lifting += 1;
                    }
                }
            }
        }
        c
    }
}
