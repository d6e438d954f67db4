//! Brute-force oracles shared by the integration tests. None of these call
//! into the graphicality or threshold code they are used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use degseq::DegreeSequence;

/// Sorted (nonincreasing) degree sequences of every labeled simple graph on
/// `n` vertices, by enumerating all `2^(n(n-1)/2)` edge subsets.
pub fn realizable_sequences(n: usize) -> HashSet<Vec<u32>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut deg = vec![0u32; n];
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        seen.insert(deg);
    }
    seen
}

/// Every nonincreasing sequence of length `n` with entries in `0..=max`.
pub fn nonincreasing_sequences(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            go(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}

/// Every partition of `total` into at most `parts` parts, zero-padded to
/// length `parts`, nonincreasing.
pub fn partitions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=cap.min(left)).rev() {
            if (v as u64) * (slots as u64) < left as u64 {
                break;
            }
            cur.push(v);
            go(left - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, parts, &mut Vec::new(), &mut out);
    out
}

/// Prefix-sum dominance with equal totals, straight from the definition.
pub fn dominates(a: &[u32], b: &[u32]) -> bool {
    assert_eq!(a.len(), b.len());
    let (mut x, mut y) = (0u64, 0u64);
    for (&p, &q) in a.iter().zip(b) {
        x += p as u64;
        y += q as u64;
        if x < y {
            return false;
        }
    }
    x == y
}

pub fn seq(values: &[u32]) -> DegreeSequence {
    DegreeSequence::from_nonincreasing(values.to_vec()).unwrap()
}
