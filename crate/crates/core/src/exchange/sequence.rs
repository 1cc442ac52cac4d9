use crate::element::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// An ordered tuple of bases of one matroid, with its multiset union cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisSequence {
    bases: Vec<ElementSet>,
    union: Vec<u32>,
}

impl BasisSequence {
    pub fn new(m: &Matroid, bases: Vec<ElementSet>) -> Result<Self> {
        if let Some(b) = bases.iter().find(|&&b| !m.is_basis(b)) {
            return Err(Error::NotABasis(m.ground().format_set(*b)));
        }
        let mut union = vec![0; m.ground().len()];
        for b in &bases {
            for i in b.iter() {
                union[i] += 1;
            }
        }
        Ok(Self { bases, union })
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    /// Number of entries containing each ground position.
    pub fn union_multiset(&self) -> &[u32] {
        &self.union
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }
}

/// One step of the exchange graphs. Positions `r`, `s` index the sequence,
/// `x`, `y` the ground.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// `x ∈ A_r` trades places with `y ∈ A_s`.
    SymmetricExchange { r: usize, s: usize, x: usize, y: usize },
    /// Entry `k` of the result is entry `perm[k]` of the input.
    Permutation(Vec<usize>),
    /// `U ⊆ A_r` trades places with `V ⊆ A_s`.
    SubsetExchange {
        r: usize,
        s: usize,
        u: ElementSet,
        v: ElementSet,
    },
}

impl Move {
    /// The move undoing `self` on the sequence it was applied to.
    pub fn inverse(&self) -> Move {
        match self {
            Move::SymmetricExchange { r, s, x, y } => Move::SymmetricExchange {
                r: *r,
                s: *s,
                x: *y,
                y: *x,
            },
            Move::Permutation(p) => {
                let mut inv = vec![0; p.len()];
                for (k, &j) in p.iter().enumerate() {
                    inv[j] = k;
                }
                Move::Permutation(inv)
            }
            Move::SubsetExchange { r, s, u, v } => Move::SubsetExchange {
                r: *r,
                s: *s,
                u: *v,
                v: *u,
            },
        }
    }
}

/// Equal length and equal multiset unions.
pub fn compatible(a: &BasisSequence, b: &BasisSequence) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.union == b.union)
}

/// `E(x; A_r, A_s)`: the `y ∈ A_s` for which `A_r - x + y` and `A_s - y + x`
/// are both bases.
pub fn exchange_candidates(m: &Matroid, ar: ElementSet, as_: ElementSet, x: usize) -> Result<ElementSet> {
    if !ar.contains(x) {
        return Err(Error::InvalidMove(format!(
            "element {} not in the first basis",
            label(m, x)
        )));
    }
    Ok(ElementSet::from_indices(as_.iter().filter(|&y| {
        m.is_basis(ar.remove(x).insert(y)) && m.is_basis(as_.remove(y).insert(x))
    })))
}

/// `E(U; A_r, A_s)`: every `V ⊆ A_s` for which `(A_r \ U) ∪ V` and
/// `(A_s \ V) ∪ U` are both bases.
pub fn subset_exchange_candidates(
    m: &Matroid,
    ar: ElementSet,
    as_: ElementSet,
    u: ElementSet,
) -> Result<Vec<ElementSet>> {
    if !u.is_subset(ar) {
        return Err(Error::InvalidMove(format!(
            "{{{}}} not contained in the first basis",
            m.ground().format_set(u)
        )));
    }
    let mut out: Vec<ElementSet> = as_
        .subsets()
        .filter(|&v| m.is_basis(ar.difference(u).union(v)) && m.is_basis(as_.difference(v).union(u)))
        .collect();
    out.sort();
    Ok(out)
}

fn label(m: &Matroid, i: usize) -> String {
    if i < m.ground().len() {
        m.ground().label(i).to_string()
    } else {
        format!("#{i}")
    }
}

fn check_positions(seq: &BasisSequence, r: usize, s: usize) -> Result<()> {
    if r >= seq.len() || s >= seq.len() {
        return Err(Error::InvalidMove(format!(
            "position out of range for a sequence of length {}",
            seq.len()
        )));
    }
    if r == s {
        return Err(Error::InvalidMove("exchange positions coincide".into()));
    }
    Ok(())
}

/// Applies `mv`, rejecting it when its validity condition fails.
pub fn apply_move(m: &Matroid, seq: &BasisSequence, mv: &Move) -> Result<BasisSequence> {
    let mut bases = seq.bases.clone();
    match mv {
        Move::SymmetricExchange { r, s, x, y } => {
            check_positions(seq, *r, *s)?;
            let (ar, as_) = (bases[*r], bases[*s]);
            if !exchange_candidates(m, ar, as_, *x)?.contains(*y) {
                return Err(Error::InvalidMove(format!(
                    "{} is not an exchange partner of {}",
                    label(m, *y),
                    label(m, *x)
                )));
            }
            bases[*r] = ar.remove(*x).insert(*y);
            bases[*s] = as_.remove(*y).insert(*x);
        }
        Move::Permutation(perm) => {
            let mut seen = vec![false; seq.len()];
            if perm.len() != seq.len()
                || perm
                    .iter()
                    .any(|&j| j >= seq.len() || std::mem::replace(&mut seen[j], true))
            {
                return Err(Error::InvalidMove("not a permutation of the positions".into()));
            }
            bases = perm.iter().map(|&j| seq.bases[j]).collect();
        }
        Move::SubsetExchange { r, s, u, v } => {
            check_positions(seq, *r, *s)?;
            let (ar, as_) = (bases[*r], bases[*s]);
            if !v.is_subset(as_) {
                return Err(Error::InvalidMove(format!(
                    "{{{}}} not contained in the second basis",
                    m.ground().format_set(*v)
                )));
            }
            if !subset_exchange_candidates(m, ar, as_, *u)?.contains(v) {
                return Err(Error::InvalidMove(format!(
                    "{{{}}} is not an exchange partner of {{{}}}",
                    m.ground().format_set(*v),
                    m.ground().format_set(*u)
                )));
            }
            bases[*r] = ar.difference(*u).union(*v);
            bases[*s] = as_.difference(*v).union(*u);
        }
    }
    let out = BasisSequence::new(m, bases)?;
    debug_assert_eq!(out.union, seq.union);
    Ok(out)
}
