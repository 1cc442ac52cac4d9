//! Bounded connectivity checks for the exchange graphs on basis sequences.
//!
//! All `|B|^m` sequences of length `m` are grouped by multiset union; each
//! group is searched breadth-first under the chosen move set. Moves never
//! change the multiset union, so a search never leaves its group.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::element::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TeClass {
    /// Symmetric exchanges.
    One,
    /// Symmetric exchanges and reorderings.
    Two,
    /// Symmetric subset exchanges.
    Three,
}

impl TeClass {
    pub const ALL: [TeClass; 3] = [TeClass::One, TeClass::Two, TeClass::Three];

    pub fn number(self) -> u8 {
        match self {
            TeClass::One => 1,
            TeClass::Two => 2,
            TeClass::Three => 3,
        }
    }

    pub fn from_number(i: u8) -> Option<Self> {
        match i {
            1 => Some(TeClass::One),
            2 => Some(TeClass::Two),
            3 => Some(TeClass::Three),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of sequences the search may visit.
    pub max_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_nodes: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TeVerdict {
    HoldsAtM,
    /// Two compatible sequences in different components; the
    /// lexicographically least such pair.
    FailsAtM {
        witness: (Vec<ElementSet>, Vec<ElementSet>),
    },
    BudgetExceeded,
}

impl TeVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            TeVerdict::HoldsAtM => "holds_at_m",
            TeVerdict::FailsAtM { .. } => "fails_at_m",
            TeVerdict::BudgetExceeded => "budget_exceeded",
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, TeVerdict::HoldsAtM)
    }
}

impl fmt::Display for TeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeOutcome {
    pub verdict: TeVerdict,
    /// Sequences visited by the searches.
    pub explored: u64,
    /// Compatibility classes with more than one member.
    pub nontrivial_classes: u64,
}

impl TeOutcome {
    fn budget(explored: u64) -> Self {
        Self {
            verdict: TeVerdict::BudgetExceeded,
            explored,
            nontrivial_classes: 0,
        }
    }
}

/// Sequences of length `len` over the bases of `m`, encoded as mixed-radix
/// integers with the first entry most significant, so numeric order is
/// lexicographic order.
struct Space<'a> {
    bases: &'a [ElementSet],
    index: HashMap<ElementSet, u64>,
    len: usize,
    radix: u64,
}

impl<'a> Space<'a> {
    fn new(m: &'a Matroid, len: usize) -> Self {
        let bases = m.bases();
        Self {
            bases,
            index: bases.iter().enumerate().map(|(i, &b)| (b, i as u64)).collect(),
            len,
            radix: bases.len() as u64,
        }
    }

    fn size(&self) -> Option<u64> {
        self.radix.checked_pow(self.len as u32)
    }

    fn decode(&self, mut code: u64, out: &mut Vec<u64>) {
        out.clear();
        out.resize(self.len, 0);
        for k in (0..self.len).rev() {
            out[k] = code % self.radix;
            code /= self.radix;
        }
    }

    fn encode(&self, idx: &[u64]) -> u64 {
        idx.iter().fold(0, |acc, &i| acc * self.radix + i)
    }

    fn sets(&self, code: u64) -> Vec<ElementSet> {
        let mut idx = Vec::new();
        self.decode(code, &mut idx);
        idx.iter().map(|&i| self.bases[i as usize]).collect()
    }

    fn union_key(&self, idx: &[u64], n: usize) -> Vec<u8> {
        let mut key = vec![0u8; n];
        for &i in idx {
            for e in self.bases[i as usize].iter() {
                key[e] += 1;
            }
        }
        key
    }

    fn neighbors(&self, class: TeClass, code: u64, out: &mut Vec<u64>) {
        out.clear();
        let mut idx = Vec::new();
        self.decode(code, &mut idx);
        let mut push = |idx: &mut Vec<u64>, r: usize, nr: u64, s: usize, ns: u64| {
            let (or, os) = (idx[r], idx[s]);
            idx[r] = nr;
            idx[s] = ns;
            out.push(self.encode(idx));
            idx[r] = or;
            idx[s] = os;
        };
        for r in 0..self.len {
            for s in r + 1..self.len {
                let (ar, as_) = (self.bases[idx[r] as usize], self.bases[idx[s] as usize]);
                // Elements common to both entries never take part in a move
                // that keeps both entries bases.
                let (dr, ds) = (ar.difference(as_), as_.difference(ar));
                match class {
                    TeClass::One | TeClass::Two => {
                        for x in dr.iter() {
                            for y in ds.iter() {
                                let nr = self.index.get(&ar.remove(x).insert(y));
                                let ns = self.index.get(&as_.remove(y).insert(x));
                                if let (Some(&nr), Some(&ns)) = (nr, ns) {
                                    push(&mut idx, r, nr, s, ns);
                                }
                            }
                        }
                    }
                    TeClass::Three => {
                        let vs: Vec<ElementSet> = ds.subsets().collect();
                        for u in dr.subsets().skip(1) {
                            for &v in vs.iter().filter(|v| v.len() == u.len()) {
                                let nr = self.index.get(&ar.difference(u).union(v));
                                let ns = self.index.get(&as_.difference(v).union(u));
                                if let (Some(&nr), Some(&ns)) = (nr, ns) {
                                    push(&mut idx, r, nr, s, ns);
                                }
                            }
                        }
                    }
                }
            }
        }
        if class == TeClass::Two {
            for k in 0..self.len.saturating_sub(1) {
                if idx[k] != idx[k + 1] {
                    let (a, b) = (idx[k], idx[k + 1]);
                    push(&mut idx, k, b, k + 1, a);
                }
            }
        }
    }

    /// Component label of every member of a sorted class; labels are
    /// assigned in order of each component's least member.
    fn components(&self, class: TeClass, members: &[u64]) -> Vec<u32> {
        let mut comp = vec![u32::MAX; members.len()];
        let mut next = 0;
        let mut queue = VecDeque::new();
        let mut nbrs = Vec::new();
        for start in 0..members.len() {
            if comp[start] != u32::MAX {
                continue;
            }
            comp[start] = next;
            queue.push_back(start);
            while let Some(i) = queue.pop_front() {
                self.neighbors(class, members[i], &mut nbrs);
                for &c in &nbrs {
                    let j = members.binary_search(&c).expect("moves stay in the class");
                    if comp[j] == u32::MAX {
                        comp[j] = next;
                        queue.push_back(j);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Members of each compatibility class, in increasing code order.
    fn classes(&self, n: usize) -> Vec<Vec<u64>> {
        let total = self.size().expect("size checked by caller");
        let mut ids: HashMap<Vec<u8>, usize> = HashMap::new();
        let mut classes: Vec<Vec<u64>> = Vec::new();
        let mut idx = Vec::new();
        for code in 0..total {
            self.decode(code, &mut idx);
            let key = self.union_key(&idx, n);
            let next = classes.len();
            let c = *ids.entry(key).or_insert(next);
            if c == next {
                classes.push(Vec::new());
            }
            classes[c].push(code);
        }
        classes
    }
}

/// Checks whether every two compatible sequences of length `len` are joined
/// by moves of `class`. The verdict is about this length only.
pub fn te_check(m: &Matroid, class: TeClass, len: usize, limits: Limits) -> Result<TeOutcome> {
    if len < 2 {
        return Err(Error::SequenceTooShort);
    }
    let space = Space::new(m, len);
    match space.size() {
        Some(total) if total <= limits.max_nodes => {}
        _ => return Ok(TeOutcome::budget(0)),
    }
    let classes: Vec<Vec<u64>> = space
        .classes(m.ground().len())
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect();
    let explored = classes.iter().map(|c| c.len() as u64).sum();
    let failure = classes
        .par_iter()
        .filter_map(|members| {
            let comp = space.components(class, members);
            comp.iter().position(|&c| c != 0).map(|j| (members[0], members[j]))
        })
        .min();
    let verdict = match failure {
        None => TeVerdict::HoldsAtM,
        Some((a, b)) => TeVerdict::FailsAtM {
            witness: (space.sets(a), space.sets(b)),
        },
    };
    Ok(TeOutcome {
        verdict,
        explored,
        nontrivial_classes: classes.len() as u64,
    })
}

/// `TE(1)` through the characterization "TE(2), and every pair of bases can
/// be reversed by symmetric exchanges alone".
pub fn te1_via_lemma(m: &Matroid, len: usize, limits: Limits) -> Result<TeOutcome> {
    let two = te_check(m, TeClass::Two, len, limits)?;
    if !two.verdict.holds() {
        return Ok(two);
    }
    let pairs = Space::new(m, 2);
    let total = pairs.size().unwrap_or(u64::MAX);
    if two.explored.saturating_add(total) > limits.max_nodes {
        return Ok(TeOutcome::budget(two.explored));
    }
    let classes = pairs.classes(m.ground().len());
    let explored: u64 = classes.iter().filter(|c| c.len() > 1).map(|c| c.len() as u64).sum();
    let nb = pairs.radix;
    let failure = classes
        .par_iter()
        .filter(|c| c.len() > 1)
        .filter_map(|members| {
            let comp = pairs.components(TeClass::One, members);
            members
                .iter()
                .enumerate()
                .filter_map(|(j, &code)| {
                    let (a, b) = (code / nb, code % nb);
                    let swapped = b * nb + a;
                    let k = members.binary_search(&swapped).expect("swap is compatible");
                    (comp[j] != comp[k]).then_some((code, swapped))
                })
                .min()
        })
        .min();
    let verdict = match failure {
        None => TeVerdict::HoldsAtM,
        Some((a, b)) => TeVerdict::FailsAtM {
            witness: (pairs.sets(a), pairs.sets(b)),
        },
    };
    Ok(TeOutcome {
        verdict,
        explored: two.explored + explored,
        nontrivial_classes: two.nontrivial_classes,
    })
}
