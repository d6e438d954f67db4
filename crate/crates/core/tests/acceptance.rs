//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any failed.
//!
//! `cargo test --test acceptance`

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{nonincreasing_sequences, partitions, realizable_sequences, seq};
use degseq::approximate::target_sum;
use degseq::harness::{run_experiment, shift_bound, ExperimentConfig, Metric};
use degseq::sampling::InverseCdf;
use degseq::{
    approximate, degree_pmf, degrees_of, havel_hakimi, strictly_majorizes, threshold_sequence,
    threshold_sequence_recursive, total_variation, DegreeSequence,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

/// Criterion 1: Closed form equals the recursion for every n <= 50 and even s <= n(n-1).
fn closed_form_equivalence() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut mismatches) = (0u64, 0u64);
    for n in 0..=50usize {
        for s in (0..=(n * n.saturating_sub(1)) as u64).step_by(2) {
            checked += 1;
            if threshold_sequence(n, s).unwrap() != threshold_sequence_recursive(n, s).unwrap() {
                mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && elapsed < Duration::from_secs(10),
        format!("{checked} (n, s) pairs, {mismatches} mismatches, {}", secs(elapsed)),
    )
}

#[derive(Clone, Copy, Debug)]
enum Shape {
    PowerLaw(f64),
    Uniform,
    Oversized,
    Hubs,
    Dense,
}

/// A random potentially-graphic sequence of length `n`.
fn random_input(rng: &mut StdRng, n: usize, shape: Shape) -> DegreeSequence {
    let top = (n - 1) as u32;
    let mut raw: Vec<u32> = match shape {
        Shape::PowerLaw(g) => {
            let dist = InverseCdf::power_law(n - 1, g).unwrap();
            let seed = rng.random();
            dist.sample_sequence(n, seed).into_values()
        }
        Shape::Uniform => (0..n).map(|_| rng.random_range(0..=top)).collect(),
        Shape::Oversized => (0..n).map(|_| rng.random_range(0..=2 * top + 2)).collect(),
        Shape::Hubs => {
            let hubs = rng.random_range(1..=n.min(8));
            (0..n).map(|i| if i < hubs { rng.random_range(top / 2..=top + 3) } else { rng.random_range(0..=2) }).collect()
        }
        Shape::Dense => (0..n).map(|_| top.saturating_sub(rng.random_range(0..=3))).collect(),
    };
    let n64 = n as u64;
    loop {
        let sum: u64 = raw.iter().map(|&d| d as u64).sum();
        if sum % 2 == 1 {
            if raw[0] > 0 {
                raw[0] -= 1;
            } else {
                raw[0] += 1;
            }
            continue;
        }
        if sum > n64 * (n64 - 1) {
            raw.iter_mut().for_each(|d| *d /= 2);
            continue;
        }
        break;
    }
    DegreeSequence::from_degrees(raw)
}

fn pick_length(rng: &mut StdRng, case: usize) -> usize {
    match case {
        0..10 => 1_000_000,
        10..100 => 100_000,
        100..1_000 => rng.random_range(10_000..100_000),
        1_000..10_000 => rng.random_range(1_000..10_000),
        _ => rng.random_range(2..1_000),
    }
}

fn pick_shape(rng: &mut StdRng) -> Shape {
    match rng.random_range(0..8) {
        0 => Shape::PowerLaw(1.5),
        1 => Shape::PowerLaw(2.0),
        2 => Shape::PowerLaw(2.5),
        3 => Shape::PowerLaw(3.0),
        4 => Shape::Uniform,
        5 => Shape::Oversized,
        6 => Shape::Hubs,
        _ => Shape::Dense,
    }
}

struct Corpus {
    graphicality: Outcome,
    bound_checked: u64,
    bound_failures: u64,
}

/// Criterion 2: every approximation is graphic, and a subsample also realizes
/// with an exact degree round trip. Also collects the distribution-shift bound
/// check.
fn output_graphicality() -> Corpus {
    const CASES: usize = 100_000;
    const REALIZE: usize = 1_000;
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (mut failures, mut realized, mut realize_failures, mut largest) = (0u64, 0usize, 0u64, 0usize);
    let (mut bound_checked, mut bound_failures) = (0u64, 0u64);
    let mut want_realization = false;
    for case in 0..CASES {
        let n = pick_length(&mut rng, case);
        let shape = pick_shape(&mut rng);
        let a = random_input(&mut rng, n, shape);
        debug_assert!(a.is_potentially_graphic());
        largest = largest.max(n);
        let b = match approximate(&a) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("  case {case} ({shape:?}, n={n}): {e}");
                failures += 1;
                continue;
            }
        };
        if !b.is_graphic() || b.len() != n || b.sum() != target_sum(&a) {
            eprintln!("  case {case} ({shape:?}, n={n}): output not graphic");
            failures += 1;
        }

        let tv = total_variation(&degree_pmf(&a).unwrap(), &degree_pmf(&b).unwrap()).unwrap();
        bound_checked += 1;
        if tv > shift_bound(n, a.sum()) {
            bound_failures += 1;
        }

        if case % (CASES / REALIZE) == 0 {
            want_realization = true;
        }
        if want_realization && realized < REALIZE && b.sum() <= 4_000_000 {
            want_realization = false;
            realized += 1;
            match havel_hakimi(&b) {
                Ok(g) if degrees_of(&g) == b => {}
                _ => realize_failures += 1,
            }
        }
    }
    let pass = failures == 0 && realize_failures == 0 && realized >= REALIZE;
    Corpus {
        graphicality: outcome(
            pass,
            format!(
                "{CASES} inputs up to n={largest}: {failures} non-graphic outputs; \
                 {realized} realized, {realize_failures} round-trip failures; {}",
                secs(start.elapsed())
            ),
        ),
        bound_checked,
        bound_failures,
    }
}

fn figure_config() -> ExperimentConfig {
    ExperimentConfig {
        lengths: vec![1_000, 10_000, 100_000],
        trials_per_length: 30,
        exponent: 2.0,
        base_seed: 1,
        metric: Metric::TvSup,
        ..Default::default()
    }
}

/// 3 and 4. Runs the power-law experiment once; returns the bound check over
/// its trials and the decay check over its summaries.
fn experiment_criteria(corpus: &Corpus) -> (Outcome, Outcome) {
    let start = Instant::now();
    let res = run_experiment(&figure_config());
    let elapsed = start.elapsed();
    let res = match res {
        Ok(r) => r,
        Err(e) => {
            let msg = format!("experiment failed: {e}");
            return (outcome(false, msg.clone()), outcome(false, msg));
        }
    };

    let exact_failures = res.records.iter().filter(|r| !r.exact.is_some_and(|e| e.tv <= e.bound)).count() as u64;
    let worst = res
        .records
        .iter()
        .filter_map(|r| r.exact.map(|e| e.tv / e.bound))
        .max()
        .unwrap_or(Ratio::from_integer(0));
    let total = corpus.bound_checked + res.records.len() as u64;
    let failures = corpus.bound_failures + exact_failures;
    let bound = outcome(
        failures == 0,
        format!(
            "{total} trials ({} random corpus + {} power-law), {failures} violations; \
             largest tv/bound in power-law trials {:.3}",
            corpus.bound_checked,
            res.records.len(),
            *worst.numer() as f64 / *worst.denom() as f64
        ),
    );

    let means: Vec<f64> = res.summaries.iter().map(|s| s.mean_tv).collect();
    let decreasing = means.windows(2).all(|w| w[1] < w[0]);
    let factor = means[0] / means[2];
    let trend = outcome(
        decreasing && factor >= 3.0 && elapsed < Duration::from_secs(300),
        format!(
            "mean sup-TV {} (factor {factor:.1} from n=1e3 to 1e5), {}",
            res.summaries
                .iter()
                .map(|s| format!("n={}: {:.5}±{:.5}", s.n, s.mean_tv, s.std_tv))
                .collect::<Vec<_>>()
                .join(", "),
            secs(elapsed)
        ),
    );
    (bound, trend)
}

/// Criterion 5: No graphic partition of an even p <= 14 strictly majorizes T(n, p).
fn threshold_maximality() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut counterexamples) = (0u64, 0u64);
    for p in (0..=14u32).step_by(2) {
        for n in 1..=(p as usize).max(1) {
            if p as u64 > (n * (n - 1)) as u64 {
                continue;
            }
            let t = threshold_sequence(n, p as u64).unwrap();
            for part in partitions(p, n) {
                let b = seq(&part);
                checked += 1;
                if b.is_graphic() && strictly_majorizes(&b, &t).unwrap() {
                    eprintln!("  {part:?} strictly majorizes T({n},{p})");
                    counterexamples += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        counterexamples == 0 && elapsed < Duration::from_secs(60),
        format!("{checked} partitions, {counterexamples} counterexamples, {}", secs(elapsed)),
    )
}

/// Criterion 6: Erdős–Gallai agrees with graph enumeration (n <= 7) and with
/// Havel–Hakimi on random sequences.
fn oracle_agreement() -> Outcome {
    let (mut exhaustive, mut disagreements) = (0u64, 0u64);
    for n in 0..=7 {
        let realizable = realizable_sequences(n);
        for values in nonincreasing_sequences(n, n as u32) {
            exhaustive += 1;
            if seq(&values).is_graphic() != realizable.contains(&values) {
                disagreements += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(6);
    let mut graphic = 0;
    for _ in 0..10_000 {
        let n = rng.random_range(1..300);
        let cap = rng.random_range(1..=n as u32 + 2);
        let a = DegreeSequence::from_degrees((0..n).map(|_| rng.random_range(0..=cap)).collect());
        let hh = havel_hakimi(&a);
        if a.is_graphic() {
            graphic += 1;
        }
        if hh.is_ok() != a.is_graphic() || hh.is_ok_and(|g| degrees_of(&g) != a) {
            disagreements += 1;
        }
    }
    outcome(
        disagreements == 0,
        format!("{exhaustive} exhaustive + 10000 random ({graphic} graphic), {disagreements} disagreements"),
    )
}

fn timing_input(n: usize) -> DegreeSequence {
    let mut rng = StdRng::seed_from_u64(n as u64);
    let top = (n - 1) as f64;
    // heavy tail: floor(1/u) is power-law with exponent 2
    let raw: Vec<u32> = (0..n)
        .map(|_| {
            let u: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
            (1.0 / u).floor().min(top) as u32
        })
        .collect();
    random_even(raw)
}

fn random_even(mut raw: Vec<u32>) -> DegreeSequence {
    if raw.iter().map(|&d| d as u64).sum::<u64>() % 2 == 1 {
        raw[0] += 1;
    }
    DegreeSequence::from_degrees(raw)
}

fn median_of(reps: usize, a: &DegreeSequence) -> (Duration, Duration) {
    let mut times: Vec<Duration> = (0..reps)
        .map(|_| {
            let start = Instant::now();
            let b = approximate(a).unwrap();
            let t = start.elapsed();
            assert_eq!(b.len(), a.len());
            t
        })
        .collect();
    let slowest = *times.iter().max().unwrap();
    times.sort_unstable();
    (times[reps / 2], slowest)
}

/// glibc hands allocations above its mmap threshold (at most 32 MiB) back to
/// the kernel on free, so every n = 1e7 call page-faults fresh memory while
/// n = 1e6 calls reuse the heap. Raising the thresholds puts both sizes on
/// recycled memory.
#[cfg(all(target_os = "linux", target_env = "gnu"))]
fn recycle_large_allocations() -> &'static str {
    unsafe {
        libc::mallopt(libc::M_MMAP_THRESHOLD, 1 << 30);
        libc::mallopt(libc::M_TRIM_THRESHOLD, i32::MAX);
    }
    "heap recycled at both sizes"
}

#[cfg(not(all(target_os = "linux", target_env = "gnu")))]
fn recycle_large_allocations() -> &'static str {
    "default allocator"
}

/// Criterion 7: One pass: n = 1e7 under 5 s, and 1e6 → 1e7 scales linearly.
fn one_pass_performance() -> Outcome {
    let small = timing_input(1_000_000);
    let large = timing_input(10_000_000);
    // the first call at each size carries the allocator's page faults
    let (_, cold_large) = median_of(1, &large);
    let allocator = recycle_large_allocations();
    median_of(3, &small);
    median_of(2, &large);
    let (t_small, _) = median_of(21, &small);
    let (t_large, slowest) = median_of(9, &large);
    let ratio = t_large.as_secs_f64() / t_small.as_secs_f64();
    outcome(
        cold_large.max(slowest) < Duration::from_secs(5) && (8.0..=13.0).contains(&ratio),
        format!(
            "median n=1e6 {}, n=1e7 {}, ratio {ratio:.2}; slowest n=1e7 call {} ({allocator})",
            secs(t_small),
            secs(t_large),
            secs(cold_large.max(slowest))
        ),
    )
}

/// Criterion 8: Two `experiment` runs with one config write byte-identical CSV.
fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| -> Result<(Vec<u8>, Vec<u8>), String> {
        let csv = dir.path().join(format!("{tag}.csv"));
        let raw = dir.path().join(format!("{tag}-raw.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_degseq"))
            .args(["experiment", "--lengths", "1000,10000", "--trials", "30", "--exponent", "2", "--seed", "8"])
            .args(["--metric", "tv", "--csv"])
            .arg(&csv)
            .arg("--raw")
            .arg(&raw)
            .stderr(std::process::Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("exit status {status}"));
        }
        Ok((std::fs::read(csv).map_err(|e| e.to_string())?, std::fs::read(raw).map_err(|e| e.to_string())?))
    };
    match (run("first"), run("second")) {
        (Ok(a), Ok(b)) => outcome(
            a == b,
            format!("summary {} bytes, raw {} bytes, identical: {}", a.0.len(), a.1.len(), a == b),
        ),
        (Err(e), _) | (_, Err(e)) => outcome(false, e),
    }
}

fn main() -> ExitCode {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    // timing first, before anything else warms up rayon's pool
    results.push(("AC7 one-pass performance", one_pass_performance()));
    results.push(("AC1 closed form = recursion", closed_form_equivalence()));
    let corpus = output_graphicality();
    let (bound, trend) = experiment_criteria(&corpus);
    results.push(("AC2 output graphicality", corpus.graphicality));
    results.push(("AC3 distribution-shift bound", bound));
    results.push(("AC4 convergence trend", trend));
    results.push(("AC5 threshold maximality", threshold_maximality()));
    results.push(("AC6 oracle agreement", oracle_agreement()));
    results.push(("AC8 experiment determinism", cli_determinism()));

    results.sort_by_key(|(name, _)| *name);
    let mut failed = 0;
    for (name, o) in &results {
        println!("[{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} acceptance criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
