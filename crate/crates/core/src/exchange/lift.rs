use crate::element::ElementSet;
use crate::functors::Expansion;

/// Lifts a basis sequence of `M` to one of `M^α`: the `o`-th entry (0-based)
/// containing base element `x` gets copy `(o mod k_x) + 1` of it. The copy
/// counts depend only on the multiset union, so compatible sequences lift
/// to compatible sequences.
pub fn lift_sequence(expansion: &Expansion, bases: &[ElementSet]) -> Vec<ElementSet> {
    let mut seen = vec![0u32; expansion.base().len()];
    bases
        .iter()
        .map(|b| {
            ElementSet::from_indices(b.iter().map(|x| {
                let k = expansion.copies_of(x).len() as u32;
                let j = seen[x] % k + 1;
                seen[x] += 1;
                expansion.position(x, j)
            }))
        })
        .collect()
}

pub fn project_sequence(expansion: &Expansion, bases: &[ElementSet]) -> Vec<ElementSet> {
    bases.iter().map(|&b| expansion.project(b)).collect()
}

/// Whether `(b1, b2)` arises from `(a1, a2)` by one symmetric subset
/// exchange, given the basis predicate of the ambient matroid.
pub fn single_subset_exchange<F>(
    is_basis: F,
    (a1, a2): (ElementSet, ElementSet),
    (b1, b2): (ElementSet, ElementSet),
) -> bool
where
    F: Fn(ElementSet) -> bool,
{
    a1.subsets().any(|u| {
        a2.subsets()
            .any(|v| a1.difference(u).union(v) == b1 && a2.difference(v).union(u) == b2 && is_basis(b1) && is_basis(b2))
    })
}
