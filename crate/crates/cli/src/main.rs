use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use trapcover_cli::*;
use trapcover_cover::{EliminateOptions, Schedule};
use trapcover_decoders::{GallagerBConfig, MinSumConfig};
use trapcover_search::{ScanConfig, SearchConfig};
use trapcover_sim::{ChannelSpec, DecoderSpec, StopRule};

#[derive(Parser)]
#[command(name = "trapcover", version, about = "LDPC trapping-set hunting and graph-cover elimination")]
struct Cli {
    /// Worker threads for search and simulation (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output directory; artifacts go to stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural profile: dimensions, rank, rate, girth, degree histograms.
    Profile {
        #[arg(long)]
        code: PathBuf,
    },
    /// Find trapping sets by exhaustive decoding or topological scan.
    Hunt {
        #[arg(long)]
        code: PathBuf,
        /// Exhaustive instanton search up to this error weight.
        #[arg(long)]
        k_max: Option<usize>,
        /// Topological scan: maximum trapping-set size a.
        #[arg(long)]
        ts_a: Option<usize>,
        /// Topological scan: maximum odd-check count b.
        #[arg(long)]
        ts_b: Option<usize>,
        /// Gallager B iteration cap.
        #[arg(long, default_value_t = 50)]
        iters: usize,
        /// Certify critical numbers of scanned sets within this halo radius.
        #[arg(long)]
        certify_halo: Option<usize>,
        #[arg(long, default_value_t = 100_000_000)]
        pattern_budget: u64,
        #[arg(long, default_value_t = 10_000_000)]
        subset_budget: u64,
    },
    /// Build a cover that eliminates the census's trapping sets.
    Eliminate {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        census: PathBuf,
        #[arg(long, value_parser = ["random", "unique-edge", "relaxed-freeze", "manual"], default_value = "random")]
        schedule: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        copies: usize,
        /// Edges for the manual schedule, as "check:var,check:var,...".
        #[arg(long)]
        manual_edges: Option<String>,
        /// Verify elimination of this signature in the cover: a.
        #[arg(long)]
        ts_a: Option<usize>,
        /// Verify elimination of this signature in the cover: b.
        #[arg(long)]
        ts_b: Option<usize>,
        /// Also exhaustively decode cover error patterns up to this weight.
        #[arg(long, default_value_t = 0)]
        k_max: usize,
        #[arg(long, default_value_t = 100_000_000)]
        pattern_budget: u64,
        #[arg(long, default_value_t = 10_000_000)]
        subset_budget: u64,
    },
    /// Monte Carlo FER sweep with slope fit.
    Simulate {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_parser = ["gallager-b", "min-sum"], default_value = "gallager-b")]
        decoder: String,
        /// Iteration cap (default 50 for gallager-b, 500 for min-sum).
        #[arg(long)]
        iters: Option<usize>,
        /// BSC sweep: comma-separated crossover probabilities.
        #[arg(long)]
        alpha_list: Option<String>,
        /// AWGN sweep: comma-separated Eb/N0 values in dB.
        #[arg(long)]
        snr_db_list: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000_000)]
        max_frames: u64,
        #[arg(long, default_value_t = 100)]
        target_failures: u64,
    },
    /// Emit the convolutional unwrapping of a swap plan.
    Unwrap {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        plan: PathBuf,
        #[arg(long, default_value_t = 1)]
        periods: usize,
    },
}

fn write_artifact(out: &Option<PathBuf>, name: &str, content: &str) -> Result<()> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .and_then(|()| std::fs::write(dir.join(name), content))
                .map_err(|e| CliError::Input(format!("writing {name}: {e}")))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_list(list: &str, what: &str) -> Result<Vec<f64>> {
    list.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Input(format!("bad {what} value {tok:?}")))
        })
        .collect()
}

fn parse_manual_edges(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|pair| {
            let (c, v) = pair
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("bad edge {pair:?}, want check:var")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Input(format!("bad edge index {s:?}")))
            };
            Ok((parse(c)?, parse(v)?))
        })
        .collect()
}

fn run(cli: Cli) -> Result<()> {
    if let Some(workers) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| CliError::Input(format!("worker pool: {e}")))?;
    }
    match cli.command {
        Command::Profile { code } => {
            let matrix = load_code(&code)?;
            write_artifact(&cli.out, "profile.txt", &cmd_profile(&matrix))
        }
        Command::Hunt {
            code,
            k_max,
            ts_a,
            ts_b,
            iters,
            certify_halo,
            pattern_budget,
            subset_budget,
        } => {
            let matrix = load_code(&code)?;
            let signature = match (ts_a, ts_b) {
                (Some(a), Some(b)) => Some((a, b)),
                (None, None) => None,
                _ => return Err(CliError::Input("--ts-a and --ts-b go together".into())),
            };
            let opts = HuntOptions {
                k_max,
                signature,
                decoder_iters: iters,
                certify_halo,
                pattern_budget,
                subset_budget,
            };
            let code_id = code.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            let census = cmd_hunt(&matrix, &code_id, &opts)?;
            write_artifact(&cli.out, "census.json", &census)
        }
        Command::Eliminate {
            code,
            census,
            schedule,
            seed,
            copies,
            manual_edges,
            ts_a,
            ts_b,
            k_max,
            pattern_budget,
            subset_budget,
        } => {
            let matrix = load_code(&code)?;
            let census_json = std::fs::read_to_string(&census)
                .map_err(|e| CliError::Input(format!("{}: {e}", census.display())))?;
            let schedule = match schedule.as_str() {
                "random" => Schedule::Random { seed },
                "unique-edge" => Schedule::UniqueEdge,
                "relaxed-freeze" => Schedule::RelaxedFreeze { seed },
                "manual" => Schedule::Manual {
                    edges: parse_manual_edges(manual_edges.as_deref().ok_or_else(|| {
                        CliError::Input("manual schedule needs --manual-edges".into())
                    })?)?,
                },
                _ => unreachable!("clap validates"),
            };
            let signature = match (ts_a, ts_b) {
                (Some(a), Some(b)) => Some((a, b)),
                (None, None) => None,
                _ => return Err(CliError::Input("--ts-a and --ts-b go together".into())),
            };
            let options = EliminateOptions { copies, ..Default::default() };
            let artifacts = cmd_eliminate(
                &matrix,
                &census_json,
                schedule,
                &options,
                signature,
                k_max,
                &ScanConfig { subset_budget },
                &SearchConfig { pattern_budget, ..Default::default() },
            )?;
            write_artifact(&cli.out, "cover.alist", &artifacts.cover_alist)?;
            write_artifact(&cli.out, "plan.json", &artifacts.plan_json)?;
            write_artifact(&cli.out, "report.json", &artifacts.report_json)
        }
        Command::Simulate {
            code,
            decoder,
            iters,
            alpha_list,
            snr_db_list,
            seed,
            max_frames,
            target_failures,
        } => {
            let matrix = load_code(&code)?;
            let decoder = match decoder.as_str() {
                "gallager-b" => DecoderSpec::GallagerB(GallagerBConfig {
                    max_iters: iters.unwrap_or(GallagerBConfig::default().max_iters),
                }),
                "min-sum" => DecoderSpec::MinSum(MinSumConfig {
                    max_iters: iters.unwrap_or(MinSumConfig::default().max_iters),
                }),
                _ => unreachable!("clap validates"),
            };
            let points: Vec<ChannelSpec> = match (&alpha_list, &snr_db_list) {
                (Some(alphas), None) => parse_list(alphas, "alpha")?
                    .into_iter()
                    .map(|alpha| ChannelSpec::Bsc { alpha })
                    .collect(),
                (None, Some(snrs)) => {
                    let profile = trapcover_core::code_profile(&matrix);
                    parse_list(snrs, "SNR")?
                        .into_iter()
                        .map(|db| ChannelSpec::awgn_from_db(db, profile.rate))
                        .collect()
                }
                _ => {
                    return Err(CliError::Input(
                        "give exactly one of --alpha-list or --snr-db-list".into(),
                    ))
                }
            };
            let stop = StopRule { target_failures, max_frames };
            let code_id = code.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            let (csv, slope) = cmd_simulate(&matrix, &code_id, &decoder, &points, &stop, seed)?;
            write_artifact(&cli.out, "fer.csv", &csv)?;
            write_artifact(&cli.out, "slope.json", &slope)
        }
        Command::Unwrap { code, plan, periods } => {
            let matrix = load_code(&code)?;
            let plan_json = std::fs::read_to_string(&plan)
                .map_err(|e| CliError::Input(format!("{}: {e}", plan.display())))?;
            let alist = cmd_unwrap(&matrix, &plan_json, periods)?;
            write_artifact(&cli.out, "convolutional.alist", &alist)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
