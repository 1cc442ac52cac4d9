//! Isomorphism of explicit set families by backtracking over element images.
//!
//! Candidates for an element must share its basis-degree. After each
//! assignment the multiset of member traces on the assigned elements is
//! compared on both sides, which prunes most branches early.

use std::collections::HashMap;

use crate::element::{ElementLabel, ElementSet};
use crate::matroid::{remap, Family, Matroid};

/// A bijection between two ground sets, by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    map: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    pub fn from_positions(map: Vec<usize>) -> Self {
        Self { map }
    }

    /// `image(i)` is the target position of source position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn positions(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, set: ElementSet) -> ElementSet {
        remap(set, &self.map)
    }

    pub fn inverse(&self) -> Relabeling {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Relabeling { map: inv }
    }

    pub fn label_pairs(&self, from: &Family, to: &Family) -> Vec<(ElementLabel, ElementLabel)> {
        self.map
            .iter()
            .enumerate()
            .map(|(i, &j)| (from.ground().label(i), to.ground().label(j)))
            .collect()
    }

    /// True iff this map carries `from`'s members exactly onto `to`'s.
    pub fn carries(&self, from: &Family, to: &Family) -> bool {
        if from.ground().len() != self.map.len() || to.ground().len() != self.map.len() {
            return false;
        }
        let mut seen = vec![false; self.map.len()];
        for &j in &self.map {
            if j >= seen.len() || std::mem::replace(&mut seen[j], true) {
                return false;
            }
        }
        let mut image: Vec<ElementSet> = from.members().iter().map(|&m| self.apply(m)).collect();
        image.sort();
        image == to.members()
    }
}

pub fn matroids_isomorphic(a: &Matroid, b: &Matroid) -> Option<Relabeling> {
    families_isomorphic(a.family(), b.family())
}

pub fn families_isomorphic(a: &Family, b: &Family) -> Option<Relabeling> {
    let n = a.ground().len();
    if n != b.ground().len() || a.len() != b.len() {
        return None;
    }
    let mut sizes_a: Vec<usize> = a.members().iter().map(|m| m.len()).collect();
    let mut sizes_b: Vec<usize> = b.members().iter().map(|m| m.len()).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return None;
    }
    let deg_a = degrees(a);
    let deg_b = degrees(b);
    let mut sorted_a = deg_a.clone();
    let mut sorted_b = deg_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    // Rarest degree classes first, ties in canonical order.
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &d in &deg_a {
        *class_size.entry(d).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (class_size[&deg_a[i]], i));

    let mut search = Search {
        a: a.members(),
        b: b.members(),
        deg_a: &deg_a,
        deg_b: &deg_b,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0, ElementSet::EMPTY, ElementSet::EMPTY) {
        Some(Relabeling { map: search.map })
    } else {
        None
    }
}

fn degrees(f: &Family) -> Vec<usize> {
    let mut deg = vec![0; f.ground().len()];
    for m in f.members() {
        for i in m.iter() {
            deg[i] += 1;
        }
    }
    deg
}

struct Search<'a> {
    a: &'a [ElementSet],
    b: &'a [ElementSet],
    deg_a: &'a [usize],
    deg_b: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, dom: ElementSet, img: ElementSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        for j in 0..self.used.len() {
            if self.used[j] || self.deg_b[j] != self.deg_a[i] {
                continue;
            }
            self.map[i] = j;
            self.used[j] = true;
            let (dom2, img2) = (dom.insert(i), img.insert(j));
            if self.traces_agree(dom2, img2) && self.extend(depth + 1, dom2, img2) {
                return true;
            }
            self.used[j] = false;
            self.map[i] = usize::MAX;
        }
        false
    }

    fn traces_agree(&self, dom: ElementSet, img: ElementSet) -> bool {
        let mut left: Vec<ElementSet> = self
            .a
            .iter()
            .map(|m| ElementSet::from_indices(m.intersection(dom).iter().map(|k| self.map[k])))
            .collect();
        let mut right: Vec<ElementSet> = self.b.iter().map(|m| m.intersection(img)).collect();
        left.sort_unstable_by_key(|s| s.0);
        right.sort_unstable_by_key(|s| s.0);
        left == right
    }
}
