//! Distances between degree sequences and between their degree distributions.

use std::cmp::Ordering;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::sequence::{Degree, DegreeSequence};

/// Positional L1 distance `Σ |a_i - b_i|`.
pub fn discrepancy(a: &DegreeSequence, b: &DegreeSequence) -> Result<u64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.values().iter().zip(b.values()).map(|(&x, &y)| x.abs_diff(y) as u64).sum())
}

/// Empirical distribution of degree values: value `d` has mass `r_d / n`,
/// where `r_d` counts the entries equal to `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePmf {
    n: usize,
    // (degree, count) with count > 0, ascending by degree
    counts: Vec<(Degree, u64)>,
}

impl DegreePmf {
    pub fn population(&self) -> usize {
        self.n
    }

    pub fn count(&self, d: Degree) -> u64 {
        self.counts
            .binary_search_by_key(&d, |&(v, _)| v)
            .map(|i| self.counts[i].1)
            .unwrap_or(0)
    }

    pub fn mass(&self, d: Degree) -> Ratio<u64> {
        Ratio::new(self.count(d), self.n as u64)
    }

    /// Degree values with non-zero mass, ascending, with their masses.
    pub fn support(&self) -> impl Iterator<Item = (Degree, Ratio<u64>)> + '_ {
        self.counts.iter().map(|&(d, c)| (d, Ratio::new(c, self.n as u64)))
    }
}

pub fn degree_pmf(a: &DegreeSequence) -> Result<DegreePmf> {
    if a.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut counts: Vec<(Degree, u64)> = Vec::new();
    // values are nonincreasing, so runs arrive in descending order
    for &d in a.values().iter().rev() {
        match counts.last_mut() {
            Some((v, c)) if *v == d => *c += 1,
            _ => counts.push((d, 1)),
        }
    }
    Ok(DegreePmf { n: a.len(), counts })
}

/// Whether the degree-0 bin takes part in a distribution distance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ZeroBin {
    #[default]
    Include,
    Skip,
}

/// Absolute count differences `|r_d - r'_d|` over the union of supports.
fn count_gaps(p: &DegreePmf, q: &DegreePmf, zero: ZeroBin) -> Result<Vec<u64>> {
    if p.n != q.n {
        return Err(Error::PopulationMismatch { left: p.n, right: q.n });
    }
    let (mut i, mut j) = (0, 0);
    let mut gaps = Vec::new();
    loop {
        let (d, gap) = match (p.counts.get(i), q.counts.get(j)) {
            (None, None) => break,
            (Some(&(d, c)), None) => {
                i += 1;
                (d, c)
            }
            (None, Some(&(d, c))) => {
                j += 1;
                (d, c)
            }
            (Some(&(dp, cp)), Some(&(dq, cq))) => match dp.cmp(&dq) {
                Ordering::Less => {
                    i += 1;
                    (dp, cp)
                }
                Ordering::Greater => {
                    j += 1;
                    (dq, cq)
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (dp, cp.abs_diff(cq))
                }
            },
        };
        if d == 0 && zero == ZeroBin::Skip {
            continue;
        }
        gaps.push(gap);
    }
    Ok(gaps)
}

/// Total variation as the largest per-value probability difference,
/// `sup_ω |P_ω - Q_ω|`.
pub fn total_variation(p: &DegreePmf, q: &DegreePmf) -> Result<Ratio<u64>> {
    total_variation_with(p, q, ZeroBin::Include)
}

pub fn total_variation_with(p: &DegreePmf, q: &DegreePmf, zero: ZeroBin) -> Result<Ratio<u64>> {
    let max_gap = count_gaps(p, q, zero)?.into_iter().max().unwrap_or(0);
    Ok(Ratio::new(max_gap, p.n as u64))
}

/// Standard total variation, `½ Σ_ω |P_ω - Q_ω|`.
pub fn total_variation_l1(p: &DegreePmf, q: &DegreePmf) -> Result<Ratio<u64>> {
    total_variation_l1_with(p, q, ZeroBin::Include)
}

pub fn total_variation_l1_with(p: &DegreePmf, q: &DegreePmf, zero: ZeroBin) -> Result<Ratio<u64>> {
    let total: u64 = count_gaps(p, q, zero)?.into_iter().sum();
    Ok(Ratio::new(total, 2 * p.n as u64))
}

/// Reporting-boundary conversion of an exact ratio.
pub fn ratio_to_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
