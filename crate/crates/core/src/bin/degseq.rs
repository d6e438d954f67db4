use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use degseq::harness::{self, ExperimentConfig, Metric};
use degseq::metrics::{ratio_to_f64, total_variation_l1_with, total_variation_with};
use degseq::sampling::PowerLawSampler;
use degseq::{approximate, degree_pmf, discrepancy, havel_hakimi, threshold_graph, threshold_sequence};
use degseq::{DegreeSequence, Error, ZeroBin};

#[derive(Parser)]
#[command(name = "degseq", version, about = "Graphic approximation of degree sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether a sequence is graphic.
    Check {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Print the maximal threshold sequence T(n, s), or its graph.
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sum: u64,
        /// Emit the threshold graph as an edge list instead.
        #[arg(long)]
        graph: bool,
    },
    /// Replace a non-graphic sequence by its one-pass graphic approximation.
    Approximate {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Realize a graphic sequence as an edge list (Havel–Hakimi).
    Realize {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a power-law degree sequence.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2.0)]
        exponent: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Redraw until the sequence has even sum and is not graphic.
        #[arg(long)]
        require_nongraphic: bool,
        #[arg(long, default_value_t = 1000)]
        max_attempts: u32,
    },
    /// Distance between two sequences.
    Distance {
        #[arg(long, value_enum, default_value_t = DistanceMetric::Tv)]
        metric: DistanceMetric,
        /// Leave degree 0 out of the distribution distances.
        #[arg(long)]
        skip_zero_bin: bool,
        file_a: PathBuf,
        file_b: PathBuf,
    },
    /// Run the total-variation convergence experiment.
    Experiment {
        #[arg(long, value_delimiter = ',', default_values_t = [100usize, 1_000, 10_000, 100_000])]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 30)]
        trials: u32,
        #[arg(long, default_value_t = 2.0)]
        exponent: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = TvMetric::Tv)]
        metric: TvMetric,
        #[arg(long, default_value_t = 1000)]
        max_attempts: u32,
        #[arg(long)]
        skip_zero_bin: bool,
        /// Per-length summary CSV.
        #[arg(long)]
        csv: PathBuf,
        /// SVG chart of the summary.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Per-trial CSV.
        #[arg(long)]
        raw: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DistanceMetric {
    Tv,
    TvL1,
    Discrepancy,
}

#[derive(Clone, Copy, ValueEnum)]
enum TvMetric {
    Tv,
    TvL1,
}

fn zero_bin(skip: bool) -> ZeroBin {
    if skip {
        ZeroBin::Skip
    } else {
        ZeroBin::Include
    }
}

fn read_sequence(path: Option<&Path>) -> Result<DegreeSequence, Error> {
    let mut text = String::new();
    match path {
        Some(p) => File::open(p)?.read_to_string(&mut text)?,
        None => io::stdin().read_to_string(&mut text)?,
    };
    DegreeSequence::parse(&text)
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Check { input } => {
            let a = read_sequence(input.as_deref())?;
            println!("n {}", a.len());
            println!("sum {}", a.sum());
            println!("potentially_graphic {}", a.is_potentially_graphic());
            println!("graphic {}", a.is_graphic());
        }
        Command::Threshold { n, sum, graph } => {
            let out = output(None)?;
            if graph {
                threshold_graph(n, sum)?.write_edge_list(out)?;
            } else {
                threshold_sequence(n, sum)?.write_plain(out)?;
            }
        }
        Command::Approximate { input, out } => {
            let a = read_sequence(input.as_deref())?;
            let b = if a.is_graphic() { a } else { approximate(&a)? };
            b.write_plain(output(out.as_deref())?)?;
        }
        Command::Realize { input, out } => {
            let a = read_sequence(input.as_deref())?;
            havel_hakimi(&a)?.write_edge_list(output(out.as_deref())?)?;
        }
        Command::Sample { n, exponent, seed, require_nongraphic, max_attempts } => {
            let sampler = PowerLawSampler::new(n, exponent)?;
            let seq = if require_nongraphic {
                let draw = sampler.sample_nongraphic_even(seed, max_attempts)?;
                eprintln!("accepted after {} attempts", draw.attempts);
                draw.sequence
            } else {
                sampler.sample(seed)
            };
            seq.write_plain(output(None)?)?;
        }
        Command::Distance { metric, skip_zero_bin, file_a, file_b } => {
            let a = read_sequence(Some(&file_a))?;
            let b = read_sequence(Some(&file_b))?;
            let value = match metric {
                DistanceMetric::Discrepancy => discrepancy(&a, &b)? as f64,
                DistanceMetric::Tv => {
                    ratio_to_f64(total_variation_with(&degree_pmf(&a)?, &degree_pmf(&b)?, zero_bin(skip_zero_bin))?)
                }
                DistanceMetric::TvL1 => ratio_to_f64(total_variation_l1_with(
                    &degree_pmf(&a)?,
                    &degree_pmf(&b)?,
                    zero_bin(skip_zero_bin),
                )?),
            };
            println!("{value}");
        }
        Command::Experiment {
            lengths,
            trials,
            exponent,
            seed,
            metric,
            max_attempts,
            skip_zero_bin,
            csv,
            plot,
            raw,
        } => {
            let config = ExperimentConfig {
                lengths,
                trials_per_length: trials,
                exponent,
                base_seed: seed,
                metric: match metric {
                    TvMetric::Tv => Metric::TvSup,
                    TvMetric::TvL1 => Metric::TvL1,
                },
                max_attempts,
                zero_bin: zero_bin(skip_zero_bin),
            };
            let results = harness::run_experiment(&config)?;
            harness::write_summary_csv(&results.summaries, File::create(&csv)?)?;
            if let Some(path) = raw {
                harness::write_raw_csv(&results.records, File::create(path)?)?;
            }
            if let Some(path) = plot {
                harness::emit_plot(&results.summaries, File::create(path)?)?;
            }
            for s in &results.summaries {
                eprintln!(
                    "n={:>9} mean_tv={:.6} std_tv={:.6} mean_discrepancy={:.1} mean_attempts={:.2}",
                    s.n, s.mean_tv, s.std_tv, s.mean_discrepancy, s.mean_attempts
                );
            }
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e.root() {
        Error::SamplingExhausted { .. } => 3,
        Error::Io(_) => 4,
        Error::Csv(c) if c.is_io_error() => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("degseq: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
