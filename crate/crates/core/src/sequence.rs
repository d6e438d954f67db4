//! Degree sequences and graphicality predicates.

use std::fmt;
use std::io::{self, Write};

use crate::error::{Error, Result};

/// A single vertex degree.
pub type Degree = u32;

/// A nonincreasing sequence of non-negative integers with cached prefix sums.
///
/// The length is part of the identity: trailing zeros are kept, so `⟨1,1⟩`
/// and `⟨1,1,0⟩` are different sequences. Degrees are not bounded by `n - 1`
/// here; that bound only matters to the graphicality tests.
#[derive(Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    values: Vec<Degree>,
    // prefix[k] = values[0] + ... + values[k-1]; prefix[0] = 0, prefix[n] = sum.
    prefix: Vec<u64>,
}

/// `n(n-1)`, the largest even sum a simple graph on `n` vertices can have.
pub fn max_degree_sum(n: usize) -> u64 {
    let n = n as u64;
    n.saturating_mul(n.saturating_sub(1))
}

impl DegreeSequence {
    /// Sorts raw degrees into a sequence, rejecting negative or oversized entries.
    pub fn from_unsorted(raw: &[i64]) -> Result<Self> {
        let mut degrees = Vec::with_capacity(raw.len());
        for (index, &value) in raw.iter().enumerate() {
            match Degree::try_from(value) {
                Ok(d) => degrees.push(d),
                Err(_) => return Err(Error::InvalidDegree { index, value }),
            }
        }
        Ok(Self::from_degrees(degrees))
    }

    /// Sorts degrees nonincreasing with a binned (counting) sort.
    pub fn from_degrees(mut degrees: Vec<Degree>) -> Self {
        binned_sort_desc(&mut degrees);
        Self::from_sorted_unchecked(degrees)
    }

    /// Wraps values that are already nonincreasing.
    pub fn from_nonincreasing(values: Vec<Degree>) -> Result<Self> {
        if let Some(i) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotSorted { index: i + 1 });
        }
        Ok(Self::from_sorted_unchecked(values))
    }

    pub(crate) fn from_sorted_unchecked(values: Vec<Degree>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        let mut prefix = Vec::with_capacity(values.len() + 1);
        let mut acc = 0u64;
        prefix.push(0);
        for &v in &values {
            acc += v as u64;
            prefix.push(acc);
        }
        DegreeSequence { values, prefix }
    }

    /// Builds a sequence directly from its prefix-sum curve.
    ///
    /// `prefix` must start at 0 and have nonincreasing increments.
    pub(crate) fn from_prefix_unchecked(prefix: Vec<u64>) -> Self {
        let values: Vec<Degree> = prefix.windows(2).map(|w| (w[1] - w[0]) as Degree).collect();
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        DegreeSequence { values, prefix }
    }

    pub(crate) fn from_parts_unchecked(values: Vec<Degree>, prefix: Vec<u64>) -> Self {
        debug_assert_eq!(values.len() + 1, prefix.len());
        DegreeSequence { values, prefix }
    }

    /// The all-zero sequence of length `n`.
    pub fn zeros(n: usize) -> Self {
        DegreeSequence { values: vec![0; n], prefix: vec![0; n + 1] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.prefix[self.values.len()]
    }

    pub fn values(&self) -> &[Degree] {
        &self.values
    }

    /// Sum of the first `k` entries, `0 <= k <= n`.
    pub fn prefix(&self, k: usize) -> u64 {
        self.prefix[k]
    }

    /// All prefix sums, `n + 1` entries starting with 0.
    pub fn prefix_sums(&self) -> &[u64] {
        &self.prefix
    }

    pub fn max_degree(&self) -> Degree {
        self.values.first().copied().unwrap_or(0)
    }

    /// Number of non-zero entries.
    pub fn nonzero_count(&self) -> usize {
        self.values.partition_point(|&d| d > 0)
    }

    /// Extends the sequence with zeros up to `len` entries.
    pub fn zero_padded(&self, len: usize) -> Result<Self> {
        if len < self.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: len });
        }
        let mut values = self.values.clone();
        values.resize(len, 0);
        let mut prefix = self.prefix.clone();
        prefix.resize(len + 1, self.sum());
        Ok(DegreeSequence { values, prefix })
    }

    pub fn into_values(self) -> Vec<Degree> {
        self.values
    }

    /// Even sum no larger than `n(n-1)`.
    pub fn is_potentially_graphic(&self) -> bool {
        let s = self.sum();
        s.is_multiple_of(2) && s <= max_degree_sum(self.len())
    }

    /// Erdős–Gallai test in a single linear scan.
    ///
    /// For each `k`, checks `prefix[k] <= k(k-1) + Σ_{i>k} min(d_i, k)`. The
    /// tail sum is split at the crossing index `c(k)`, the last position whose
    /// degree is at least `k`; `c` only moves left as `k` grows.
    pub fn is_graphic(&self) -> bool {
        let n = self.len();
        let s = self.sum();
        if !s.is_multiple_of(2) || s > max_degree_sum(n) {
            return false;
        }
        let d = &self.values;
        // crossing = number of entries with degree >= k
        let mut crossing = n;
        for k in 1..=n {
            let kk = k as u64;
            // Past this point the remaining inequalities hold automatically.
            if (d[k - 1] as u64) < kk.saturating_sub(1) {
                break;
            }
            while crossing > 0 && (d[crossing - 1] as u64) < kk {
                crossing -= 1;
            }
            let tail = if crossing > k {
                kk * (crossing - k) as u64 + (s - self.prefix[crossing])
            } else {
                s - self.prefix[k]
            };
            if self.prefix[k] > kk * (kk - 1) + tail {
                return false;
            }
        }
        true
    }

    /// Parses whitespace-separated decimal integers in any order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            for token in line.split_whitespace() {
                let value: i64 = token
                    .parse()
                    .map_err(|_| Error::Parse { line: line_no + 1, token: token.to_string() })?;
                raw.push(value);
            }
        }
        Self::from_unsorted(&raw)
    }

    /// Writes one degree per line.
    pub fn write_plain<W: Write>(&self, mut out: W) -> io::Result<()> {
        for v in &self.values {
            writeln!(out, "{v}")?;
        }
        out.flush()
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() > 32 {
            return write!(f, "⟨{} entries, sum {}⟩", self.len(), self.sum());
        }
        write!(f, "⟨")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "⟩")
    }
}

impl TryFrom<&[i64]> for DegreeSequence {
    type Error = Error;

    fn try_from(raw: &[i64]) -> Result<Self> {
        Self::from_unsorted(raw)
    }
}

// Counting sort when the value range is comparable to n, otherwise a plain
// comparison sort.
fn binned_sort_desc(values: &mut [Degree]) {
    let Some(&max) = values.iter().max() else { return };
    let max = max as usize;
    if max > 4 * values.len() + 1024 {
        values.sort_unstable_by(|a, b| b.cmp(a));
        return;
    }
    let mut bins = vec![0usize; max + 1];
    for &v in values.iter() {
        bins[v as usize] += 1;
    }
    let mut pos = 0;
    for (value, &count) in bins.iter().enumerate().rev() {
        values[pos..pos + count].fill(value as Degree);
        pos += count;
    }
}
