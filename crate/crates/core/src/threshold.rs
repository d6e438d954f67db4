//! The maximal graphic threshold sequence `T(n, s)`.
//!
//! `T(n, s)` is the threshold sequence of length `n` and even sum `s` with the
//! fewest non-zero entries. In closed form it is
//!
//! ```text
//! T(n, s) = ⟨(p+1)^q, p^(p+1-q), q, 0, …, 0⟩
//! ```
//!
//! where `p` is the largest integer with `p(p+1) <= s` and `q = (s - p(p+1)) / 2`.
//! The `q` entry is present only when `q > 0`, and zeros pad to length `n`.

use crate::error::{Error, Result};
use crate::realize::Graph;
use crate::sequence::{max_degree_sum, Degree, DegreeSequence};

fn validate(n: usize, s: u64) -> Result<()> {
    if !s.is_multiple_of(2) {
        return Err(Error::OddSum { sum: s });
    }
    if s > max_degree_sum(n) {
        return Err(Error::NotPotentiallyGraphic { n, sum: s });
    }
    Ok(())
}

/// Largest `p` with `p(p+1) <= s`.
///
/// The floating-point root is only a starting guess; the loops make the
/// result exact for every `u64`.
pub fn pronic_root(s: u64) -> u64 {
    let fits = |p: u64| (p as u128) * (p as u128 + 1) <= s as u128;
    let guess = ((((4.0 * s as f64 + 1.0).sqrt() - 1.0) / 2.0).floor()).max(0.0) as u64;
    let mut p = guess;
    while p > 0 && !fits(p) {
        p -= 1;
    }
    while fits(p + 1) {
        p += 1;
    }
    p
}

/// Parameters of `T(n, s)`, giving constant-time access to any entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdParams {
    n: usize,
    sum: u64,
    p: u64,
    q: u64,
    nonzero: usize,
}

impl ThresholdParams {
    pub fn new(n: usize, s: u64) -> Result<Self> {
        validate(n, s)?;
        let p = pronic_root(s);
        let q = (s - p * (p + 1)) / 2;
        let nonzero = if s == 0 {
            0
        } else if q == 0 {
            p as usize + 1
        } else {
            p as usize + 2
        };
        Ok(ThresholdParams { n, sum: s, p, q, nonzero })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `m`, the number of non-zero entries: the least `k` with `s <= k(k-1)`.
    pub fn nonzero_count(&self) -> usize {
        self.nonzero
    }

    /// Entry `i` (1-based) of `T(n, s)`.
    pub fn value(&self, i: usize) -> Result<Degree> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(self.value_unchecked(i))
    }

    #[inline]
    pub(crate) fn value_unchecked(&self, i: usize) -> Degree {
        let i = i as u64;
        let d = if i <= self.q {
            self.p + 1
        } else if i <= self.p + 1 {
            self.p
        } else if i == self.p + 2 {
            self.q
        } else {
            0
        };
        d as Degree
    }
}

pub fn threshold_params(n: usize, s: u64) -> Result<ThresholdParams> {
    ThresholdParams::new(n, s)
}

pub fn threshold_value(params: &ThresholdParams, i: usize) -> Result<Degree> {
    params.value(i)
}

/// `T(n, s)` materialized from the closed form.
pub fn threshold_sequence(n: usize, s: u64) -> Result<DegreeSequence> {
    let t = ThresholdParams::new(n, s)?;
    let (p, q) = (t.p as usize, t.q as usize);
    let mut values: Vec<Degree> = Vec::with_capacity(n);
    values.resize(q, (p + 1) as Degree);
    values.resize(p + 1, p as Degree);
    if q > 0 {
        values.push(q as Degree);
    }
    // zero pad of max(0, n - p - 2) entries, or none when p = n - 1
    values.resize(n, 0);
    Ok(DegreeSequence::from_sorted_unchecked(values))
}

/// Least `k` with `s <= k(k-1)`, by direct search.
fn min_order(s: u64) -> usize {
    let mut k = 0u64;
    while k * k.saturating_sub(1) < s {
        k += 1;
    }
    k as usize
}

/// `T(n, s)` evaluated by its defining recursion.
///
/// Slow (`O(n·√s)`) and recursive to depth `O(n)`; intended as an independent
/// check of [`threshold_sequence`].
pub fn threshold_sequence_recursive(n: usize, s: u64) -> Result<DegreeSequence> {
    validate(n, s)?;
    Ok(DegreeSequence::from_sorted_unchecked(recurse(n, s)))
}

fn recurse(n: usize, s: u64) -> Vec<Degree> {
    if s == 0 {
        return vec![0; n];
    }
    let m = min_order(s);
    if n > m {
        let mut gamma = recurse(m, s);
        gamma.resize(n, 0);
        gamma
    } else {
        let inner = recurse(n - 1, s - 2 * (n as u64 - 1));
        let mut out = Vec::with_capacity(n);
        out.push((n - 1) as Degree);
        out.extend(inner.into_iter().map(|g| g + 1));
        out
    }
}

enum Step {
    Isolated(usize),
    Dominating,
}

/// Realizes `T(n, s)` by adding isolated and dominating vertices.
///
/// Vertices are labeled in insertion order. The steps mirror the recursion:
/// the `n <= m` case adds one dominating vertex, the `n > m` case adds
/// `n - m` isolated ones.
pub fn threshold_graph(n: usize, s: u64) -> Result<Graph> {
    validate(n, s)?;
    let mut steps = Vec::new();
    let (mut n_cur, mut s_cur) = (n, s);
    while s_cur > 0 {
        let m = ThresholdParams::new(n_cur, s_cur)?.nonzero_count();
        if n_cur > m {
            steps.push(Step::Isolated(n_cur - m));
            n_cur = m;
        } else {
            steps.push(Step::Dominating);
            s_cur -= 2 * (n_cur as u64 - 1);
            n_cur -= 1;
        }
    }

    let mut vertices = n_cur;
    let mut edges = Vec::with_capacity((s / 2) as usize);
    for step in steps.iter().rev() {
        match *step {
            Step::Isolated(k) => vertices += k,
            Step::Dominating => {
                edges.extend((0..vertices).map(|u| (u, vertices)));
                vertices += 1;
            }
        }
    }
    debug_assert_eq!(vertices, n);
    Graph::from_edges(n, edges)
}
