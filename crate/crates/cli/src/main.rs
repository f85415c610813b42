use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bdtw_cli::bench::{run_bench, BenchAlgorithm, BenchConfig};
use bdtw_cli::report::mean_json;
use bdtw_cli::structure::{run_struct, FrequencyTables, StructConfig};
use bdtw_cli::{random_instance, CliError};
use bdtw_core::{
    block_profile, dtw_sq_blocks, dtw_sq_dp, mss_solve, parse_events, parse_strings, parse_weight,
    sample_to_string, Algorithm, MeanProblem, MssInstance, Objective, SamplingConfig, SamplingMode,
    StateMap, TimeSpan, Weight,
};
use clap::{Parser, Subcommand};

/// Largest input length the exhaustive solver is offered for.
const EXHAUSTIVE_MAX_N: usize = 13;

#[derive(Parser)]
#[command(name = "bdtw", version, about = "Exact dtw means of binary strings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Squared dtw distance between the two strings in FILE.
    Dtw {
        /// One string per line; `-` reads stdin.
        file: PathBuf,
        /// Also print an optimal warping path (1-based index pairs).
        #[arg(long)]
        path: bool,
        /// Cross-check the block algorithm against the full table.
        #[arg(long)]
        verify: bool,
    },
    /// Min 1-separated sum of a positive integer sequence.
    Mss {
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<usize>,
        #[arg(long)]
        r: usize,
    },
    /// Mean or center of the strings in FILE, as JSON.
    Mean {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        algo: Algorithm,
        #[arg(long, default_value = "sum")]
        objective: Objective,
        /// One weight per line (integer, decimal, or p/q).
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Print YES if the optimum is at most this value, NO (exit 1) otherwise.
        #[arg(long)]
        threshold: Option<String>,
    },
    /// Random strings with a target sparsity.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sparsity: f64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, env = "BDTW_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Wall times of the fast and baseline mean solvers, as CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "10")]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1000")]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0.1")]
        sparsity: Vec<f64>,
        /// Instances per grid cell.
        #[arg(long, default_value_t = 1)]
        seeds: usize,
        #[arg(long, value_delimiter = ',', default_value = "fast,baseline")]
        algos: Vec<BenchAlgorithm>,
        #[arg(long, default_value_t = 2000)]
        baseline_cap: usize,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
        #[arg(long, env = "BDTW_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Mean length and first symbol against input statistics, as CSV.
    Struct {
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0.05,0.1,0.2,0.5,0.8,1.0"
        )]
        sparsity: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "5,15,40")]
        k: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        runs: usize,
        #[arg(long, env = "BDTW_SEED", default_value_t = 0)]
        seed: u64,
        /// Write the frequency tables here instead of stderr.
        #[arg(long)]
        tables: Option<PathBuf>,
    },
    /// Turn `timestamp_ms,sensor,value` events into one string per sensor.
    Ingest {
        file: PathBuf,
        /// Interval length: milliseconds, or with an `s`, `m` or `h` suffix.
        #[arg(long, value_parser = parse_interval)]
        interval: i64,
        #[arg(long, default_value = "state-at-end")]
        mode: SamplingMode,
        #[arg(long)]
        state_map: Option<StateMap>,
        /// `start:end` in epoch milliseconds; defaults to the event range.
        #[arg(long, value_parser = parse_span)]
        span: Option<TimeSpan>,
        /// Only emit these sensors.
        #[arg(long, value_delimiter = ',')]
        sensor: Vec<String>,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        initial_state: u8,
    },
}

fn parse_interval(s: &str) -> Result<i64, String> {
    let (digits, unit) = match s.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        Some((i, _)) => s.split_at(i),
        None => (s, "ms"),
    };
    let scale = match unit {
        "ms" => 1,
        "s" => 1_000,
        "m" => 60_000,
        "h" => 3_600_000,
        other => return Err(format!("unknown interval unit {other:?}")),
    };
    let value: i64 = digits.parse().map_err(|e| format!("{e}"))?;
    match value.checked_mul(scale) {
        Some(ms) if ms > 0 => Ok(ms),
        _ => Err("interval must be a positive number of milliseconds".into()),
    }
}

fn parse_span(s: &str) -> Result<TimeSpan, String> {
    let (a, b) = s.split_once(':').ok_or("expected start:end")?;
    let start = a.trim().parse().map_err(|e| format!("{e}"))?;
    let end = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok(TimeSpan { start, end })
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn read_weights(path: &Path) -> Result<Vec<Weight>, CliError> {
    read_input(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_weight(l).map_err(CliError::from))
        .collect()
}

fn cmd_dtw(
    file: &Path,
    path: bool,
    verify: bool,
    out: &mut impl Write,
) -> Result<ExitCode, CliError> {
    let strings = parse_strings(&read_input(file)?)?;
    let [x, y] = strings.as_slice() else {
        return Err(CliError::Usage(format!(
            "expected exactly 2 strings, found {}",
            strings.len()
        )));
    };
    let d = dtw_sq_blocks(&block_profile(x), &block_profile(y));
    let dp = (verify || path).then(|| dtw_sq_dp(x, y, path));
    if let Some(dp) = &dp {
        if verify && dp.squared_distance != d {
            return Err(CliError::Consistency(format!(
                "block algorithm gave {d}, full table gave {}",
                dp.squared_distance
            )));
        }
    }
    writeln!(out, "{d}")?;
    if let Some(p) = dp.and_then(|r| r.path) {
        let pairs: Vec<String> = p.pairs.iter().map(|(i, j)| format!("{i},{j}")).collect();
        writeln!(out, "{}", pairs.join(" "))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_mean(
    file: &Path,
    algo: Algorithm,
    objective: Objective,
    weights: Option<&Path>,
    threshold: Option<&str>,
    out: &mut impl Write,
) -> Result<ExitCode, CliError> {
    let strings = parse_strings(&read_input(file)?)?;
    let weights = weights.map(read_weights).transpose()?;
    let threshold = threshold.map(parse_weight).transpose()?;
    let problem = MeanProblem::new(strings, weights, objective)?;
    if algo == Algorithm::Exhaustive && problem.max_len() > EXHAUSTIVE_MAX_N {
        return Err(CliError::Usage(format!(
            "exhaustive search needs n <= {EXHAUSTIVE_MAX_N} (got {})",
            problem.max_len()
        )));
    }
    let result = problem.solve(algo)?;
    serde_json::to_writer(&mut *out, &mean_json(&result)).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(match threshold {
        Some(c) if result.objective_value <= c => {
            writeln!(out, "YES")?;
            ExitCode::SUCCESS
        }
        Some(_) => {
            writeln!(out, "NO")?;
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    })
}

fn cmd_ingest(
    file: &Path,
    config: SamplingConfig,
    state_map: &StateMap,
    span: Option<TimeSpan>,
    sensors: &[String],
    out: &mut impl Write,
) -> Result<ExitCode, CliError> {
    let grouped = parse_events(read_input(file)?.as_bytes(), state_map)?;
    let span = match span {
        Some(s) => s,
        None => {
            // Smallest whole-interval span covering every event.
            let stamps = grouped.values().flatten().map(|e| e.timestamp);
            let (Some(lo), Some(hi)) = (stamps.clone().min(), stamps.max()) else {
                return Err(CliError::Usage("no events in input".into()));
            };
            let intervals = (hi - lo) / config.interval + 1;
            TimeSpan {
                start: lo,
                end: lo + intervals * config.interval,
            }
        }
    };
    for sensor in sensors {
        if !grouped.contains_key(sensor) {
            return Err(CliError::Usage(format!("no events for sensor {sensor:?}")));
        }
    }
    for (sensor, events) in &grouped {
        if sensors.is_empty() || sensors.contains(sensor) {
            let s = sample_to_string(events, &config, span)?;
            writeln!(out, "# {sensor}")?;
            writeln!(out, "{s}")?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Dtw { file, path, verify } => cmd_dtw(&file, path, verify, &mut out)?,
        Command::Mss { values, r } => {
            let value = mss_solve(&MssInstance::new(values, r)?)?;
            writeln!(out, "{value}")?;
            ExitCode::SUCCESS
        }
        Command::Mean {
            file,
            algo,
            objective,
            weights,
            threshold,
        } => cmd_mean(
            &file,
            algo,
            objective,
            weights.as_deref(),
            threshold.as_deref(),
            &mut out,
        )?,
        Command::Gen {
            n,
            sparsity,
            k,
            seed,
        } => {
            for s in random_instance(k, n, sparsity, seed)? {
                writeln!(out, "{s}")?;
            }
            ExitCode::SUCCESS
        }
        Command::Bench {
            k,
            n,
            sparsity,
            seeds,
            algos,
            baseline_cap,
            repetitions,
            seed,
        } => {
            let config = BenchConfig {
                ks: k,
                ns: n,
                sparsities: sparsity,
                seeds,
                base_seed: seed,
                algorithms: algos,
                baseline_cap,
                repetitions,
            };
            let mut writer = csv::Writer::from_writer(&mut out);
            for record in run_bench(&config)? {
                writer.serialize(record)?;
            }
            writer.flush()?;
            ExitCode::SUCCESS
        }
        Command::Struct {
            sparsity,
            k,
            n,
            runs,
            seed,
            tables,
        } => {
            let config = StructConfig {
                sparsities: sparsity,
                ks: k,
                n,
                runs,
                base_seed: seed,
            };
            let records = run_struct(&config)?;
            let mut writer = csv::Writer::from_writer(&mut out);
            for record in &records {
                writer.serialize(record)?;
            }
            writer.flush()?;
            let rendered = FrequencyTables::from_records(&config, &records).render();
            match tables {
                Some(path) => std::fs::write(&path, rendered)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
                None => eprint!("{rendered}"),
            }
            ExitCode::SUCCESS
        }
        Command::Ingest {
            file,
            interval,
            mode,
            state_map,
            span,
            sensor,
            initial_state,
        } => {
            let mut config = SamplingConfig::new(interval, mode)?;
            config.initial_state = initial_state;
            let state_map = state_map.unwrap_or_default();
            cmd_ingest(&file, config, &state_map, span, &sensor, &mut out)?
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bdtw: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        assert_eq!(parse_interval("250"), Ok(250));
        assert_eq!(parse_interval("30s"), Ok(30_000));
        assert_eq!(parse_interval("5m"), Ok(300_000));
        assert_eq!(parse_interval("1h"), Ok(3_600_000));
        assert!(parse_interval("0").is_err());
        assert!(parse_interval("3d").is_err());
    }

    #[test]
    fn spans() {
        assert_eq!(parse_span("0:100"), Ok(TimeSpan { start: 0, end: 100 }));
        assert!(parse_span("100").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
