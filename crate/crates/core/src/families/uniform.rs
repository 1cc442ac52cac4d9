use crate::element::{ElementSet, GroundSet};
use crate::error::{Error, Result};
use crate::matroid::{Family, Matroid};

use super::SetSystem;

/// `U_{t,n}` on `x1, ..., xn`.
pub fn uniform(t: usize, n: usize) -> Result<Matroid> {
    uniform_on(t, GroundSet::standard(n))
}

/// Every `t`-subset of `ground` is a basis.
pub fn uniform_on(t: usize, ground: GroundSet) -> Result<Matroid> {
    let n = ground.len();
    if t > n {
        return Err(Error::RankTooLarge { t, n });
    }
    let bases = ground.full().subsets().filter(|s| s.len() == t);
    Ok(Matroid::from_family_unchecked(Family::new(ground, bases)?))
}

/// Bases are the `t`-sets meeting every block of `partition` at most once.
pub fn partition_matroid(partition: &SetSystem, t: usize) -> Result<Matroid> {
    if !partition.is_partition() {
        return Err(Error::NotAPartition);
    }
    let blocks: Vec<ElementSet> = partition.sets().collect();
    if t > blocks.len() {
        return Err(Error::RankTooLarge { t, n: blocks.len() });
    }
    let mut bases = Vec::new();
    pick(&blocks, 0, t, ElementSet::EMPTY, &mut bases);
    Ok(Matroid::from_family_unchecked(Family::new(
        partition.ground().clone(),
        bases,
    )?))
}

fn pick(blocks: &[ElementSet], from: usize, left: usize, acc: ElementSet, out: &mut Vec<ElementSet>) {
    if left == 0 {
        out.push(acc);
        return;
    }
    for b in from..blocks.len() {
        if blocks.len() - b < left {
            break;
        }
        for e in blocks[b].iter() {
            pick(blocks, b + 1, left - 1, acc.insert(e), out);
        }
    }
}
