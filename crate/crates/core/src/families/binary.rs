use crate::matroid::Matroid;

/// Every symmetric difference of two distinct circuits contains a circuit,
/// i.e. is dependent.
pub fn is_binary(m: &Matroid) -> bool {
    let circuits = m.circuits();
    let indep = m.independent_sets();
    circuits.iter().enumerate().all(|(i, &c1)| {
        circuits[i + 1..]
            .iter()
            .all(|&c2| !indep.contains(&c1.symmetric_difference(c2)))
    })
}
