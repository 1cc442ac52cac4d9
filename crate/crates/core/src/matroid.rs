//! Explicit matroids given by their basis lists.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use crate::element::{ElementLabel, ElementSet, GroundSet};
use crate::error::{Error, Result};

/// A ground set together with a family of its subsets, kept sorted and
/// deduplicated in canonical order. No matroid axiom is assumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    ground: GroundSet,
    members: Vec<ElementSet>,
}

impl Family {
    pub fn new<I: IntoIterator<Item = ElementSet>>(ground: GroundSet, members: I) -> Result<Self> {
        let full = ground.full();
        let mut members: Vec<ElementSet> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !m.is_subset(full)) {
            let i = bad.difference(full).iter().next().unwrap_or(0);
            return Err(Error::PositionOutsideGround(i));
        }
        members.sort();
        members.dedup();
        Ok(Self { ground, members })
    }

    /// Builds a family from label lists; every label must be in `ground`.
    pub fn from_labels<'a, I, S>(ground: GroundSet, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = &'a ElementLabel>,
    {
        let sets = members
            .into_iter()
            .map(|m| ground.subset(m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, sets)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: ElementSet) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    /// Inclusion-maximal members.
    pub fn maximal(&self) -> Family {
        Family {
            ground: self.ground.clone(),
            members: maximal_elements(&self.members),
        }
    }

    pub fn is_matroid(&self) -> Result<bool> {
        is_matroid(&self.ground, &self.members)
    }

    pub fn into_matroid(self) -> Result<Matroid> {
        if self.members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if !self.is_matroid()? {
            return Err(Error::NotAMatroid);
        }
        Ok(Matroid::from_family_unchecked(self))
    }

    /// Moves every member onto a new ground through an index map
    /// (`map[i]` is the new position of old position `i`).
    pub fn remap(&self, ground: GroundSet, map: &[usize]) -> Family {
        let members = self.members.iter().map(|&m| remap(m, map));
        Family::new(ground, members).expect("remap stays inside the new ground")
    }
}

/// `map[i]` is the image position of position `i`.
pub fn remap(set: ElementSet, map: &[usize]) -> ElementSet {
    ElementSet::from_indices(set.iter().map(|i| map[i]))
}

fn maximal_elements(members: &[ElementSet]) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = members
        .iter()
        .copied()
        .filter(|&a| !members.iter().any(|&b| a.is_proper_subset(b)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// True iff no member properly contains another.
pub fn is_antichain(family: &[ElementSet]) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(!family.iter().any(|&a| family.iter().any(|&b| a.is_proper_subset(b))))
}

/// Antichain condition plus the basis exchange axiom, checked over every
/// pair of members and every exchange element.
pub fn is_matroid(ground: &GroundSet, family: &[ElementSet]) -> Result<bool> {
    let full = ground.full();
    for m in family {
        if !m.is_subset(full) {
            let i = m.difference(full).iter().next().unwrap_or(0);
            return Err(Error::PositionOutsideGround(i));
        }
    }
    if !is_antichain(family)? {
        return Ok(false);
    }
    let members: HashSet<ElementSet> = family.iter().copied().collect();
    for &b1 in family {
        for &b2 in family {
            for x in b1.difference(b2).iter() {
                let base = b1.remove(x);
                let ok = b2.difference(b1).iter().any(|y| members.contains(&base.insert(y)));
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A matroid on an explicit ground set, stored by its bases.
#[derive(Debug, Clone)]
pub struct Matroid {
    family: Family,
    circuits: OnceLock<Vec<ElementSet>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// Validates `bases` against the matroid axioms.
    pub fn new<I: IntoIterator<Item = ElementSet>>(ground: GroundSet, bases: I) -> Result<Self> {
        Family::new(ground, bases)?.into_matroid()
    }

    pub fn from_labels<'a, I, S>(ground: GroundSet, bases: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = &'a ElementLabel>,
    {
        Family::from_labels(ground, bases)?.into_matroid()
    }

    /// Caller guarantees that the family is a non-empty matroid basis set.
    pub(crate) fn from_family_unchecked(family: Family) -> Self {
        debug_assert!(!family.is_empty());
        Self {
            family,
            circuits: OnceLock::new(),
        }
    }

    /// The matroid whose only basis is the whole ground set.
    pub fn free(ground: GroundSet) -> Self {
        let full = ground.full();
        Self::from_family_unchecked(Family::new(ground, [full]).expect("full set"))
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }

    pub fn bases(&self) -> &[ElementSet] {
        self.family.members()
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn into_family(self) -> Family {
        self.family
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        self.family.contains(set)
    }

    pub fn basis_index(&self, set: ElementSet) -> Option<usize> {
        self.family.members().binary_search(&set).ok()
    }

    pub fn rank(&self) -> usize {
        self.bases()[0].len()
    }

    /// Largest `|B ∩ set|` over the bases.
    pub fn rank_of(&self, set: ElementSet) -> usize {
        self.bases()
            .iter()
            .map(|&b| b.intersection(set).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, set: ElementSet) -> bool {
        self.bases().iter().any(|&b| set.is_subset(b))
    }

    /// Every subset of every basis.
    pub fn independent_sets(&self) -> HashSet<ElementSet> {
        let mut out = HashSet::new();
        for &b in self.bases() {
            for s in b.subsets() {
                out.insert(s);
            }
        }
        out
    }

    /// Minimal dependent sets, in canonical order. Computed once per matroid.
    pub fn circuits(&self) -> &[ElementSet] {
        self.circuits.get_or_init(|| {
            let indep = self.independent_sets();
            let full = self.ground().full();
            let mut found = BTreeSet::new();
            // Dropping any element of a circuit leaves an independent set, so
            // every circuit is some independent set plus one element.
            for &i in &indep {
                for e in full.difference(i).iter() {
                    let c = i.insert(e);
                    if indep.contains(&c) {
                        continue;
                    }
                    if c.iter().all(|f| indep.contains(&c.remove(f))) {
                        found.insert(c);
                    }
                }
            }
            found.into_iter().collect()
        })
    }

    /// Restriction to `keep`: the inclusion-maximal traces `B ∩ keep`.
    pub fn restriction(&self, keep: ElementSet) -> Result<Matroid> {
        let full = self.ground().full();
        if !keep.is_subset(full) {
            let i = keep.difference(full).iter().next().unwrap_or(0);
            return Err(Error::PositionOutsideGround(i));
        }
        let ground = GroundSet::new(self.ground().labels_of(keep))?;
        let mut map = vec![usize::MAX; self.ground().len()];
        for (new, old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let traces: Vec<ElementSet> = self
            .bases()
            .iter()
            .map(|&b| remap(b.intersection(keep), &map))
            .collect();
        let family = Family::new(ground, maximal_elements(&traces))?;
        Ok(Matroid::from_family_unchecked(family))
    }

    pub fn restriction_to_labels(&self, keep: &[ElementLabel]) -> Result<Matroid> {
        self.restriction(self.ground().subset(keep)?)
    }

    /// Relabels the ground through `f`, which must be injective.
    pub fn relabel<F: Fn(ElementLabel) -> ElementLabel>(&self, f: F) -> Result<Matroid> {
        let new_labels: Vec<ElementLabel> = self.ground().labels().iter().map(|&l| f(l)).collect();
        let ground = GroundSet::new(new_labels.iter().copied())?;
        let map: Vec<usize> = new_labels
            .iter()
            .map(|l| ground.index_of(l).expect("label present"))
            .collect();
        Ok(Matroid::from_family_unchecked(self.family.remap(ground, &map)))
    }
}

/// Direct sum on disjoint ground sets: bases are all unions `B1 ∪ B2`.
pub fn direct_sum(m1: &Matroid, m2: &Matroid) -> Result<Matroid> {
    if m1.ground().labels().iter().any(|l| m2.ground().contains(l)) {
        return Err(Error::NotDisjoint);
    }
    let ground = GroundSet::new(m1.ground().labels().iter().chain(m2.ground().labels()).copied())?;
    let position = |g: &GroundSet| -> Vec<usize> {
        g.labels()
            .iter()
            .map(|l| ground.index_of(l).expect("label present"))
            .collect()
    };
    let (map1, map2) = (position(m1.ground()), position(m2.ground()));
    let mut bases = Vec::with_capacity(m1.bases().len() * m2.bases().len());
    for &b1 in m1.bases() {
        for &b2 in m2.bases() {
            bases.push(remap(b1, &map1).union(remap(b2, &map2)));
        }
    }
    Ok(Matroid::from_family_unchecked(Family::new(ground, bases)?))
}

/// Appends `z` to every basis.
pub fn add_coloop(m: &Matroid, z: ElementLabel) -> Result<Matroid> {
    if m.ground().contains(&z) {
        return Err(Error::AlreadyPresent(z));
    }
    direct_sum(m, &Matroid::free(GroundSet::new([z])?))
}
