//! Convergence experiment: draw non-graphic power-law sequences, approximate
//! them, and measure how far the degree distribution moved.
//!
//! Every trial derives its own seed from `(base_seed, n, trial_index)`, so
//! trials can run in any order or in parallel and reruns of a subset give the
//! same records.

use std::fmt::Write as _;
use std::io::{Read, Write};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::approximate::approximate;
use crate::error::{Error, Result};
use crate::metrics::{degree_pmf, discrepancy, ratio_to_f64, total_variation_l1_with, total_variation_with, ZeroBin};
use crate::sampling::{derive_seed, PowerLawSampler};

/// Which total-variation form the experiment reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Metric {
    /// `sup_ω |P_ω - Q_ω|`
    #[default]
    TvSup,
    /// `½ Σ_ω |P_ω - Q_ω|`
    TvL1,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub lengths: Vec<usize>,
    pub trials_per_length: u32,
    pub exponent: f64,
    pub base_seed: u64,
    pub metric: Metric,
    pub max_attempts: u32,
    pub zero_bin: ZeroBin,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            lengths: vec![100, 1_000, 10_000, 100_000],
            trials_per_length: 30,
            exponent: 2.0,
            base_seed: 1,
            metric: Metric::TvSup,
            max_attempts: 1_000,
            zero_bin: ZeroBin::Include,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.lengths.is_empty() {
            return Err(Error::InvalidParameter("no sequence lengths given".into()));
        }
        if let Some(&n) = self.lengths.iter().find(|&&n| n < 3) {
            return Err(Error::InvalidParameter(format!("sequence length {n} is below 3")));
        }
        if self.trials_per_length == 0 {
            return Err(Error::InvalidParameter("trials per length must be at least 1".into()));
        }
        if self.max_attempts == 0 {
            return Err(Error::InvalidParameter("max attempts must be at least 1".into()));
        }
        if !(self.exponent.is_finite() && self.exponent > 1.0) {
            return Err(Error::InvalidParameter(format!("exponent must exceed 1, got {}", self.exponent)));
        }
        Ok(())
    }

    pub fn trial_seed(&self, n: usize, trial_index: u32) -> u64 {
        derive_seed(self.base_seed, &[n as u64, trial_index as u64])
    }
}

/// Exact distance and bound behind a record's floating-point columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactDistance {
    pub tv: Ratio<u64>,
    pub bound: Ratio<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub n: usize,
    pub trial: u32,
    pub seed: u64,
    pub s: u64,
    pub attempts: u32,
    pub tv: f64,
    pub discrepancy: u64,
    pub bound: f64,
    /// Present on freshly computed records; absent on records read from CSV.
    pub exact: Option<ExactDistance>,
}

impl TrialRecord {
    /// `tv <= (⌊√s⌋ + 2) / n`, compared exactly when possible.
    pub fn within_bound(&self) -> bool {
        match self.exact {
            Some(e) => e.tv <= e.bound,
            None => self.tv <= self.bound,
        }
    }
}

/// Distribution-shift bound `(⌊√s⌋ + 2) / n` for a sequence of length `n` and sum `s`.
pub fn shift_bound(n: usize, s: u64) -> Ratio<u64> {
    Ratio::new(s.isqrt() + 2, n as u64)
}

pub fn run_trial(config: &ExperimentConfig, n: usize, trial_index: u32) -> Result<TrialRecord> {
    let sampler = PowerLawSampler::new(n, config.exponent)?;
    run_trial_with(config, &sampler, n, trial_index)
}

fn run_trial_with(config: &ExperimentConfig, sampler: &PowerLawSampler, n: usize, trial_index: u32) -> Result<TrialRecord> {
    let annotate = |e: Error| Error::Trial { n, trial_index, source: Box::new(e) };
    let seed = config.trial_seed(n, trial_index);
    let draw = sampler.sample_nongraphic_even(seed, config.max_attempts).map_err(annotate)?;
    let original = &draw.sequence;
    let approx = approximate(original).map_err(annotate)?;

    let (p, q) = (degree_pmf(original).map_err(annotate)?, degree_pmf(&approx).map_err(annotate)?);
    let tv = match config.metric {
        Metric::TvSup => total_variation_with(&p, &q, config.zero_bin),
        Metric::TvL1 => total_variation_l1_with(&p, &q, config.zero_bin),
    }
    .map_err(annotate)?;
    let bound = shift_bound(n, original.sum());

    Ok(TrialRecord {
        n,
        trial: trial_index,
        seed,
        s: original.sum(),
        attempts: draw.attempts,
        tv: ratio_to_f64(tv),
        discrepancy: discrepancy(original, &approx).map_err(annotate)?,
        bound: ratio_to_f64(bound),
        exact: Some(ExactDistance { tv, bound }),
    })
}

/// Aggregate over all trials at one length.
#[derive(Clone, Debug, PartialEq)]
pub struct LengthSummary {
    pub n: usize,
    pub mean_tv: f64,
    /// Sample standard deviation (`n - 1` denominator); 0 for a single trial.
    pub std_tv: f64,
    pub mean_discrepancy: f64,
    pub mean_attempts: f64,
    pub max_bound: f64,
    pub trials: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentResults {
    pub records: Vec<TrialRecord>,
    pub summaries: Vec<LengthSummary>,
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResults> {
    config.validate()?;
    let mut records = Vec::with_capacity(config.lengths.len() * config.trials_per_length as usize);
    for &n in &config.lengths {
        let sampler = PowerLawSampler::new(n, config.exponent)?;
        let batch: Vec<TrialRecord> = (0..config.trials_per_length)
            .into_par_iter()
            .map(|t| run_trial_with(config, &sampler, n, t))
            .collect::<Result<_>>()?;
        records.extend(batch);
    }
    let summaries = summarize(&records);
    Ok(ExperimentResults { records, summaries })
}

/// Groups records by length (ascending) and aggregates each group in record order.
pub fn summarize(records: &[TrialRecord]) -> Vec<LengthSummary> {
    let mut lengths: Vec<usize> = records.iter().map(|r| r.n).collect();
    lengths.sort_unstable();
    lengths.dedup();
    lengths
        .into_iter()
        .map(|n| {
            let group: Vec<&TrialRecord> = records.iter().filter(|r| r.n == n).collect();
            let k = group.len() as f64;
            let mean = |f: &dyn Fn(&TrialRecord) -> f64| group.iter().map(|r| f(r)).sum::<f64>() / k;
            let mean_tv = mean(&|r| r.tv);
            let std_tv = if group.len() > 1 {
                (group.iter().map(|r| (r.tv - mean_tv).powi(2)).sum::<f64>() / (k - 1.0)).sqrt()
            } else {
                0.0
            };
            LengthSummary {
                n,
                mean_tv,
                std_tv,
                mean_discrepancy: mean(&|r| r.discrepancy as f64),
                mean_attempts: mean(&|r| r.attempts as f64),
                max_bound: group.iter().map(|r| r.bound).fold(0.0, f64::max),
                trials: group.len(),
            }
        })
        .collect()
}

pub const RAW_HEADER: [&str; 8] = ["n", "trial", "seed", "s", "attempts", "tv", "discrepancy", "bound"];
pub const SUMMARY_HEADER: [&str; 5] = ["n", "mean_tv", "std_tv", "mean_discrepancy", "trials"];

pub fn write_raw_csv<W: Write>(records: &[TrialRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RAW_HEADER)?;
    for r in records {
        w.write_record([
            r.n.to_string(),
            r.trial.to_string(),
            r.seed.to_string(),
            r.s.to_string(),
            r.attempts.to_string(),
            r.tv.to_string(),
            r.discrepancy.to_string(),
            r.bound.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary_csv<W: Write>(summaries: &[LengthSummary], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SUMMARY_HEADER)?;
    for s in summaries {
        w.write_record([
            s.n.to_string(),
            s.mean_tv.to_string(),
            s.std_tv.to_string(),
            s.mean_discrepancy.to_string(),
            s.trials.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn field<T: std::str::FromStr>(row: &csv::StringRecord, i: usize, line: usize) -> Result<T> {
    let raw = row.get(i).unwrap_or("");
    raw.parse().map_err(|_| Error::Parse { line, token: raw.to_string() })
}

/// Reads records written by [`write_raw_csv`].
pub fn read_raw_csv<R: Read>(input: R) -> Result<Vec<TrialRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(RAW_HEADER) {
        return Err(Error::InvalidParameter(format!("unexpected header {header:?}")));
    }
    let mut records = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        let line = i + 2;
        records.push(TrialRecord {
            n: field(&row, 0, line)?,
            trial: field(&row, 1, line)?,
            seed: field(&row, 2, line)?,
            s: field(&row, 3, line)?,
            attempts: field(&row, 4, line)?,
            tv: field(&row, 5, line)?,
            discrepancy: field(&row, 6, line)?,
            bound: field(&row, 7, line)?,
            exact: None,
        });
    }
    Ok(records)
}

/// Renders mean TV against sequence length as an SVG chart: logarithmic x
/// axis, one marker per length with a ±1 standard deviation error bar.
pub fn emit_plot<W: Write>(summaries: &[LengthSummary], mut out: W) -> Result<()> {
    out.write_all(render_svg(summaries).as_bytes())?;
    out.flush()?;
    Ok(())
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

pub fn render_svg(summaries: &[LengthSummary]) -> String {
    let (lo, hi) = summaries.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
        let x = (s.n as f64).log10();
        (lo.min(x), hi.max(x))
    });
    let (x_lo, x_hi) = if summaries.is_empty() {
        (0.0, 1.0)
    } else {
        (lo.floor(), if hi.ceil() > lo.floor() { hi.ceil() } else { lo.floor() + 1.0 })
    };
    let y_top = summaries.iter().map(|s| s.mean_tv + s.std_tv).fold(0.0, f64::max);
    let y_hi = if y_top > 0.0 { y_top * 1.1 } else { 1.0 };

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |n: f64| LEFT + (n.log10() - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| TOP + (1.0 - y.max(0.0) / y_hi) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let (x0, x1, y0, y1) = (LEFT, WIDTH - RIGHT, TOP, HEIGHT - BOTTOM);
    let _ = writeln!(svg, r#"<g class="axes" stroke="black" stroke-width="1">"#);
    let _ = writeln!(svg, r#"<line x1="{x0:.2}" y1="{y1:.2}" x2="{x1:.2}" y2="{y1:.2}"/>"#);
    let _ = writeln!(svg, r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{y1:.2}"/>"#);
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g class="x-ticks" text-anchor="middle">"#);
    for e in (x_lo as i32)..=(x_hi as i32) {
        let x = px(10f64.powi(e));
        let _ = writeln!(svg, r#"<line x1="{x:.2}" y1="{y1:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#, y1 + 5.0);
        let _ = writeln!(svg, r#"<text x="{x:.2}" y="{:.2}">1e{e}</text>"#, y1 + 20.0);
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g class="y-ticks" text-anchor="end">"#);
    for i in 0..=5 {
        let v = y_hi * i as f64 / 5.0;
        let y = py(v);
        let _ = writeln!(svg, r#"<line x1="{:.2}" y1="{y:.2}" x2="{x0:.2}" y2="{y:.2}" stroke="black"/>"#, x0 - 5.0);
        let _ = writeln!(svg, r#"<text x="{:.2}" y="{:.2}">{v:.4}</text>"#, x0 - 8.0, y + 4.0);
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">sequence length n</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">mean total variation</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    let _ = writeln!(svg, r#"<g class="series" id="mean-tv" stroke="steelblue" fill="steelblue">"#);
    for s in summaries {
        let x = px(s.n as f64);
        let (y, y_lo, y_hi_bar) = (py(s.mean_tv), py(s.mean_tv - s.std_tv), py(s.mean_tv + s.std_tv));
        let _ = writeln!(svg, r#"<g class="errorbar" data-n="{}">"#, s.n);
        let _ = writeln!(svg, r#"<line x1="{x:.2}" y1="{y_lo:.2}" x2="{x:.2}" y2="{y_hi_bar:.2}"/>"#);
        for cap in [y_lo, y_hi_bar] {
            let _ = writeln!(svg, r#"<line x1="{:.2}" y1="{cap:.2}" x2="{:.2}" y2="{cap:.2}"/>"#, x - 5.0, x + 5.0);
        }
        let _ = writeln!(svg, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3.5"/>"#);
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    svg
}
