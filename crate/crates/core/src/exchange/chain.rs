use crate::element::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

use super::sequence::{exchange_candidates, Move};

/// Reverses `(a1, a2)` by swapping the `p`-th element of `a1 \ a2` with the
/// `p`-th element of `a2 \ a1`, one symmetric exchange per step. Every step is
/// checked against `E(x; A_1, A_2)` of the current pair, so a matroid where a
/// step is not an exchange is reported as an error.
pub fn uniform_swap_chain(m: &Matroid, a1: ElementSet, a2: ElementSet) -> Result<Vec<Move>> {
    if a1.len() != a2.len() {
        return Err(Error::SizeMismatch(a1.len(), a2.len()));
    }
    for b in [a1, a2] {
        if !m.is_basis(b) {
            return Err(Error::NotABasis(m.ground().format_set(b)));
        }
    }
    let (mut first, mut second) = (a1, a2);
    let mut moves = Vec::new();
    for (x, y) in a1.difference(a2).iter().zip(a2.difference(a1).iter()) {
        if !exchange_candidates(m, first, second, x)?.contains(y) {
            return Err(Error::InvalidMove(format!(
                "{} cannot be exchanged for {}",
                m.ground().label(x),
                m.ground().label(y)
            )));
        }
        first = first.remove(x).insert(y);
        second = second.remove(y).insert(x);
        moves.push(Move::SymmetricExchange { r: 0, s: 1, x, y });
    }
    Ok(moves)
}
