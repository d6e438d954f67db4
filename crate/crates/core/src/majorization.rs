//! Majorization (dominance) order on degree sequences and its lattice meet.
//!
//! All operations require operands of equal length. Nothing is padded
//! implicitly; use [`DegreeSequence::zero_padded`] first.

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

fn check_lengths(a: &DegreeSequence, b: &DegreeSequence) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(())
}

/// `a ≽ b`: equal sums and every prefix sum of `a` at least that of `b`.
pub fn majorizes(a: &DegreeSequence, b: &DegreeSequence) -> Result<bool> {
    check_lengths(a, b)?;
    if a.sum() != b.sum() {
        return Ok(false);
    }
    Ok(a.prefix_sums().iter().zip(b.prefix_sums()).all(|(x, y)| x >= y))
}

/// `a ≻ b`: `a ≽ b` with at least one strict prefix inequality.
pub fn strictly_majorizes(a: &DegreeSequence, b: &DegreeSequence) -> Result<bool> {
    Ok(majorizes(a, b)? && a.prefix_sums().iter().zip(b.prefix_sums()).any(|(x, y)| x > y))
}

/// Lattice meet `a ∧ b`, the sequence whose prefix sums are the pointwise
/// minima of the operands' prefix sums.
///
/// Sums may differ, in which case the result has the smaller sum. The minimum
/// of two concave prefix curves is concave, so the result is nonincreasing.
pub fn meet(a: &DegreeSequence, b: &DegreeSequence) -> Result<DegreeSequence> {
    check_lengths(a, b)?;
    let prefix: Vec<u64> =
        a.prefix_sums().iter().zip(b.prefix_sums()).map(|(&x, &y)| x.min(y)).collect();
    Ok(DegreeSequence::from_prefix_unchecked(prefix))
}
