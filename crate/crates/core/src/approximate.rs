//! One-pass graphic approximation of a degree sequence.

use crate::error::{Error, Result};
use crate::sequence::{max_degree_sum, Degree, DegreeSequence};
use crate::threshold::ThresholdParams;

/// The even sum the approximation targets: `s` itself, or `s - 1` when odd.
pub fn target_sum(a: &DegreeSequence) -> u64 {
    a.sum() & !1
}

/// Returns `a ∧ T(n, s')`, a graphic sequence of the same length.
///
/// `s'` is the sum of `a` rounded down to even. Since the result is majorized
/// by the threshold sequence `T(n, s')`, it is graphic. `T` is never built:
/// each entry comes from [`ThresholdParams`] in constant time, and the
/// running prefix minima yield both the output values and their prefix sums
/// in the same pass.
///
/// Graphic inputs are not special-cased; check [`DegreeSequence::is_graphic`]
/// first if a no-op is wanted for them.
pub fn approximate(a: &DegreeSequence) -> Result<DegreeSequence> {
    let n = a.len();
    let target = target_sum(a);
    if target > max_degree_sum(n) {
        return Err(Error::NotPotentiallyGraphic { n, sum: target });
    }
    let t = ThresholdParams::new(n, target)?;

    let mut values: Vec<Degree> = Vec::with_capacity(n);
    let mut prefix: Vec<u64> = Vec::with_capacity(n + 1);
    prefix.push(0);
    let (mut a_sum, mut t_sum, mut b_sum) = (0u64, 0u64, 0u64);
    for (i, &d) in a.values().iter().enumerate() {
        a_sum += d as u64;
        t_sum += t.value_unchecked(i + 1) as u64;
        let next = a_sum.min(t_sum);
        values.push((next - b_sum) as Degree);
        b_sum = next;
        prefix.push(b_sum);
    }
    Ok(DegreeSequence::from_parts_unchecked(values, prefix))
}
