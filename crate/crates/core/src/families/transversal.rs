use std::collections::HashSet;

use crate::element::ElementSet;
use crate::error::Result;
use crate::functors::{Expansion, ExpansionVector};
use crate::matroid::{Family, Matroid};

use super::SetSystem;

/// Maximum matching of the bipartite graph members × ground by augmenting
/// paths; entry `j` is the ground position matched to member `j`.
pub fn maximum_matching(system: &SetSystem) -> Vec<Option<usize>> {
    let sets: Vec<ElementSet> = system.sets().collect();
    let mut owner: Vec<Option<usize>> = vec![None; system.ground().len()];
    for j in 0..sets.len() {
        let mut seen = vec![false; owner.len()];
        augment(j, &sets, &mut owner, &mut seen);
    }
    let mut matched = vec![None; sets.len()];
    for (x, o) in owner.iter().enumerate() {
        if let Some(j) = o {
            matched[*j] = Some(x);
        }
    }
    matched
}

fn augment(j: usize, sets: &[ElementSet], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for x in sets[j].iter() {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let free = match owner[x] {
            None => true,
            Some(k) => augment(k, sets, owner, seen),
        };
        if free {
            owner[x] = Some(j);
            return true;
        }
    }
    false
}

/// True iff some matching covers every member.
pub fn has_transversal(system: &SetSystem) -> bool {
    maximum_matching(system).iter().all(Option::is_some)
}

/// Matroid whose independent sets are the partial transversals of `system`.
/// Ground elements in no member become loops.
pub fn transversal_matroid(system: &SetSystem) -> Result<Matroid> {
    let sets: Vec<ElementSet> = system.sets().collect();
    let rank = maximum_matching(system).iter().flatten().count();
    let mut found = HashSet::new();
    let mut visited = HashSet::new();
    endpoint_sets(&sets, 0, ElementSet::EMPTY, rank, &mut visited, &mut found);
    let family = Family::new(system.ground().clone(), found)?;
    Ok(Matroid::from_family_unchecked(family))
}

// Each member is either left unmatched or matched to an unused element of
// it; a state (member index, used elements) is explored at most once.
fn endpoint_sets(
    sets: &[ElementSet],
    j: usize,
    used: ElementSet,
    rank: usize,
    visited: &mut HashSet<(usize, ElementSet)>,
    out: &mut HashSet<ElementSet>,
) {
    if used.len() == rank {
        out.insert(used);
        return;
    }
    if used.len() + (sets.len() - j) < rank || !visited.insert((j, used)) {
        return;
    }
    for x in sets[j].difference(used).iter() {
        endpoint_sets(sets, j + 1, used.insert(x), rank, visited, out);
    }
    endpoint_sets(sets, j + 1, used, rank, visited, out);
}

/// Replaces every member by its full expansion.
pub fn expand_presentation(system: &SetSystem, alpha: &ExpansionVector) -> Result<SetSystem> {
    let exp = Expansion::new(system.ground(), alpha)?;
    let members = system
        .members()
        .iter()
        .map(|(name, s)| (name.clone(), exp.expand_set(*s)))
        .collect();
    SetSystem::new(exp.ground().clone(), members)
}
