//! Expansion by a multiplicity vector, its projection back to the base
//! ground, and the contraction quotient that undoes it.

use std::collections::HashMap;

use crate::element::{ElementLabel, ElementSet, GroundSet};
use crate::error::{Error, Result};
use crate::matroid::{Family, Matroid};

/// Positive per-element multiplicities, aligned with a ground set's order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpansionVector(Vec<u32>);

impl ExpansionVector {
    pub fn new(multiplicities: Vec<u32>) -> Result<Self> {
        if multiplicities.contains(&0) {
            return Err(Error::ZeroMultiplicity);
        }
        Ok(Self(multiplicities))
    }

    /// The all-ones vector.
    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// `self + e_i`: one more copy of position `i`.
    pub fn plus_unit(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// The expanded ground of a base ground under an expansion vector, with the
/// position bookkeeping needed to expand and project subsets.
///
/// Copy `j` of a plain label `xI` is `xI.J`. When the base ground already
/// carries copy indices, base positions are flattened to fresh ids first, so
/// copy `j` of the `p`-th element (1-based) is `xP.J`.
#[derive(Debug, Clone)]
pub struct Expansion {
    base: GroundSet,
    ground: GroundSet,
    origin: Vec<(usize, u32)>,
    copies: Vec<ElementSet>,
}

impl Expansion {
    pub fn new(base: &GroundSet, alpha: &ExpansionVector) -> Result<Self> {
        if alpha.len() != base.len() {
            return Err(Error::MisalignedAlpha {
                expected: base.len(),
                got: alpha.len(),
            });
        }
        let flatten = base.labels().iter().any(ElementLabel::is_expanded);
        let mut labels = Vec::new();
        let mut origin = Vec::new();
        for (p, l) in base.labels().iter().enumerate() {
            let id = if flatten { p as u32 + 1 } else { l.base_id };
            for j in 1..=alpha.get(p) {
                labels.push(ElementLabel::copy(id, j));
                origin.push((p, j));
            }
        }
        let ground = GroundSet::new(labels.iter().copied())?;
        // Labels were generated in canonical order, so positions line up.
        debug_assert_eq!(ground.labels(), &labels[..]);
        let mut copies = vec![ElementSet::EMPTY; base.len()];
        for (q, &(p, _)) in origin.iter().enumerate() {
            copies[p] = copies[p].insert(q);
        }
        Ok(Self {
            base: base.clone(),
            ground,
            origin,
            copies,
        })
    }

    pub fn base(&self) -> &GroundSet {
        &self.base
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// `(base position, copy index)` of an expanded position.
    pub fn origin(&self, q: usize) -> (usize, u32) {
        self.origin[q]
    }

    /// All copies of base position `p`.
    pub fn copies_of(&self, p: usize) -> ElementSet {
        self.copies[p]
    }

    /// Expanded position of copy `j` (1-based) of base position `p`.
    pub fn position(&self, p: usize, j: u32) -> usize {
        self.copies[p].iter().nth(j as usize - 1).expect("copy in range")
    }

    /// Every copy of every member of `set`.
    pub fn expand_set(&self, set: ElementSet) -> ElementSet {
        set.iter().fold(ElementSet::EMPTY, |acc, p| acc.union(self.copies[p]))
    }

    /// All ways of picking one copy of each member of `set`.
    pub fn choices(&self, set: ElementSet) -> Vec<ElementSet> {
        let mut out = vec![ElementSet::EMPTY];
        for p in set.iter() {
            out = out
                .iter()
                .flat_map(|&acc| self.copies[p].iter().map(move |q| acc.insert(q)))
                .collect();
        }
        out
    }

    pub fn expand_members(&self, members: &[ElementSet]) -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = members.iter().flat_map(|&m| self.choices(m)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn expand_family(&self, family: &Family) -> Family {
        Family::new(self.ground.clone(), self.expand_members(family.members()))
            .expect("expansion stays inside the expanded ground")
    }

    /// Base positions having at least one copy in `set`.
    pub fn project(&self, set: ElementSet) -> ElementSet {
        ElementSet::from_indices(set.iter().map(|q| self.origin[q].0))
    }
}

/// All copies of every member of `set`.
pub fn expand_set(ground: &GroundSet, set: ElementSet, alpha: &ExpansionVector) -> Result<(GroundSet, ElementSet)> {
    let e = Expansion::new(ground, alpha)?;
    let s = e.expand_set(set);
    Ok((e.ground, s))
}

pub fn expand_family(family: &Family, alpha: &ExpansionVector) -> Result<Family> {
    Ok(Expansion::new(family.ground(), alpha)?.expand_family(family))
}

/// Expansion of a matroid; the result is again a matroid.
pub fn expand(m: &Matroid, alpha: &ExpansionVector) -> Result<Matroid> {
    let f = expand_family(m.family(), alpha)?;
    Ok(Matroid::from_family_unchecked(f))
}

/// Label-level projection: `xI.J` becomes `xI`.
pub fn project(labels: &[ElementLabel]) -> Result<Vec<ElementLabel>> {
    let mut out = labels
        .iter()
        .map(|l| {
            if l.copy_id.is_some() {
                Ok(ElementLabel::new(l.base_id))
            } else {
                Err(Error::NoCopyIndex(*l))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Quotient of a family by the trace equivalence.
///
/// Each class is labeled by its least original element, so the contracted
/// ground is a subset of the original labels.
#[derive(Debug, Clone)]
pub struct ContractionResult {
    pub contracted: Family,
    pub alpha: ExpansionVector,
    /// Class index of every original position.
    pub class_map: Vec<usize>,
    pub classes: Vec<ElementSet>,
}

impl ContractionResult {
    pub fn is_trivial(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn class_of_label(&self, original: &GroundSet, label: &ElementLabel) -> Option<ElementLabel> {
        let i = original.index_of(label)?;
        Some(self.contracted.ground().label(self.class_map[i]))
    }

    /// Position map from the expansion of the contracted family by `alpha`
    /// onto the original ground: copy `j` of class `c` goes to the `j`-th
    /// member of `c`.
    pub fn expansion_relabeling(&self, expansion: &Expansion) -> Vec<usize> {
        (0..expansion.ground().len())
            .map(|q| {
                let (c, j) = expansion.origin(q);
                self.classes[c].iter().nth(j as usize - 1).expect("copy in class")
            })
            .collect()
    }

    pub fn contracted_matroid(&self) -> Result<Matroid> {
        self.contracted.clone().into_matroid()
    }
}

/// Contraction of `family` (taken over its inclusion-maximal members).
pub fn contract(family: &Family) -> Result<ContractionResult> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let maximal = family.maximal();
    let members = maximal.members();
    let n = family.ground().len();

    // Elements with identical trace lists {A \ x : x ∈ A} are equivalent;
    // elements in no member all share the empty list.
    let mut class_of_trace: HashMap<Vec<ElementSet>, usize> = HashMap::new();
    let mut class_map = Vec::with_capacity(n);
    let mut classes: Vec<ElementSet> = Vec::new();
    for x in 0..n {
        let mut trace: Vec<ElementSet> = members.iter().filter(|a| a.contains(x)).map(|a| a.remove(x)).collect();
        trace.sort_unstable_by_key(|s| s.0);
        let next = classes.len();
        let c = *class_of_trace.entry(trace).or_insert(next);
        if c == next {
            classes.push(ElementSet::EMPTY);
        }
        classes[c] = classes[c].insert(x);
        class_map.push(c);
    }

    let reps: Vec<ElementLabel> = classes
        .iter()
        .map(|c| family.ground().label(c.iter().next().expect("non-empty class")))
        .collect();
    let ground = GroundSet::new(reps)?;
    debug_assert!(
        (0..classes.len()).all(|c| ground.label(c) == family.ground().label(classes[c].iter().next().unwrap()))
    );
    let images: Vec<ElementSet> = members
        .iter()
        .map(|a| ElementSet::from_indices(a.iter().map(|x| class_map[x])))
        .collect();
    let contracted = Family::new(ground, images)?.maximal();
    let alpha = ExpansionVector::new(classes.iter().map(|c| c.len() as u32).collect())?;
    Ok(ContractionResult {
        contracted,
        alpha,
        class_map,
        classes,
    })
}

pub fn is_contracted(family: &Family) -> Result<bool> {
    Ok(contract(family)?.is_trivial())
}
