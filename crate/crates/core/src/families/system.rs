use crate::element::{ElementSet, GroundSet};
use crate::error::{Error, Result};

/// An indexed family of subsets of a ground set. Members may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    ground: GroundSet,
    members: Vec<(String, ElementSet)>,
}

impl SetSystem {
    pub fn new(ground: GroundSet, members: Vec<(String, ElementSet)>) -> Result<Self> {
        let full = ground.full();
        for (_, m) in &members {
            if !m.is_subset(full) {
                let i = m.difference(full).iter().next().unwrap_or(0);
                return Err(Error::PositionOutsideGround(i));
            }
        }
        Ok(Self { ground, members })
    }

    /// Members named `A1, A2, ...` in order.
    pub fn unnamed<I: IntoIterator<Item = ElementSet>>(ground: GroundSet, sets: I) -> Result<Self> {
        let members = sets
            .into_iter()
            .enumerate()
            .map(|(j, s)| (format!("A{}", j + 1), s))
            .collect();
        Self::new(ground, members)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[(String, ElementSet)] {
        &self.members
    }

    pub fn sets(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.members.iter().map(|(_, s)| *s)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Pairwise disjoint, non-empty members covering the ground.
    pub fn is_partition(&self) -> bool {
        let mut seen = ElementSet::EMPTY;
        for s in self.sets() {
            if s.is_empty() || !s.is_disjoint(seen) {
                return false;
            }
            seen = seen.union(s);
        }
        seen == self.ground.full()
    }
}
