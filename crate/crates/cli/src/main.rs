//! `wgmin` — order checks, verification sweeps, counterexample reproduction
//! and sampling for series minima of Weibull-G components.
//!
//! Exit codes are a stable contract:
//!   0  the checked property holds / the command succeeded
//!   1  the checked property fails
//!   2  the check is inconclusive or not computable in the given regime
//!   3  configuration or I/O error
//!   4  usage error

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use wgmin_core::baseline::{BaselineModel, OddsFunction};
use wgmin_core::majorization::{cone_membership, majorizes, ConeMembership, ParamVector};
use wgmin_core::orderlab::{
    check_order, log_density_ratio, monotonicity_report, Grid, Monotonicity, OrderVerdict,
    Relation, VerdictStatus,
};
use wgmin_core::presets::{ce31_non_outlier_pair, ce31_outlier_pair, ce32_pair};
use wgmin_core::systems::SystemSpec;
use wgmin_core::theorems::{verify_theorem, TheoremId};
use wgmin_core::{Error, SystemConfig};

const EXIT_HOLDS: i32 = 0;
const EXIT_FAILS: i32 = 1;
const EXIT_INCONCLUSIVE: i32 = 2;
const EXIT_CONFIG: i32 = 3;
const EXIT_USAGE: i32 = 4;

const EXIT_HELP: &str = "Exit codes: 0 holds/success, 1 fails, 2 inconclusive, \
3 configuration or I/O error, 4 usage error.";

#[derive(Parser)]
#[command(name = "wgmin", version, about, after_help = EXIT_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a stochastic order between two series minima given as JSON configs.
    Check {
        /// Order relation: st, hr or lr.
        #[arg(value_parser = parse_relation)]
        relation: Relation,
        /// JSON config of the putatively smaller system.
        smaller: PathBuf,
        /// JSON config of the putatively larger system.
        larger: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce a named counterexample: one CSV per figure panel plus a summary.
    Reproduce {
        /// Counterexample id: ce-3.1 or ce-3.2.
        id: String,
        #[command(flatten)]
        grid: GridArgs,
        /// Output directory for the CSV files and the summary.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run a randomized verification sweep for one ordering theorem.
    Verify {
        /// Theorem id: t3.1 through t3.7.
        #[arg(value_parser = parse_theorem)]
        id: TheoremId,
        /// Number of random trials (defaults to the theorem's standard count).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also write the full JSON report (all trial records) to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw seeded samples of the series minimum and emit them as CSV.
    Sample {
        /// JSON config of the system to sample.
        config: PathBuf,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether the first vector majorizes the second: `check-majorize X... -- Y...`.
    CheckMajorize {
        /// Entries of the candidate dominating vector.
        #[arg(required = true)]
        x: Vec<f64>,
        /// Entries of the dominated vector, after `--`.
        #[arg(last = true, required = true)]
        y: Vec<f64>,
    },
}

#[derive(Args)]
struct GridArgs {
    /// Number of grid points (default: 500 for check, 2000 for reproduce).
    #[arg(long)]
    grid_points: Option<usize>,
    /// Lower end of the y-grid; the evaluation abscissa is x = -ln y.
    #[arg(long, default_value_t = 0.01)]
    y_min: f64,
    /// Upper end of the y-grid.
    #[arg(long, default_value_t = 0.99)]
    y_max: f64,
}

impl GridArgs {
    fn build(&self, default_points: usize) -> Result<Grid, CliError> {
        Grid::new(self.y_min, self.y_max, self.grid_points.unwrap_or(default_points))
            .map_err(|e| CliError::usage(format!("invalid grid flags: {e}")))
    }
}

#[derive(Serialize)]
struct GridEcho {
    y_min: f64,
    y_max: f64,
    points: usize,
}

impl GridEcho {
    fn of(grid: &Grid) -> Self {
        let ys = grid.ys();
        GridEcho {
            y_min: ys.iter().cloned().fold(f64::INFINITY, f64::min),
            y_max: ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
            points: grid.len(),
        }
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: String) -> Self {
        CliError { code: EXIT_USAGE, message }
    }

    fn config(message: String) -> Self {
        CliError { code: EXIT_CONFIG, message }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedRegime | Error::UnsupportedGenerator(_) => EXIT_INCONCLUSIVE,
            _ => EXIT_CONFIG,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::config(format!("i/o error: {e}"))
    }
}

fn parse_relation(s: &str) -> Result<Relation, String> {
    Relation::from_str(s).map_err(|e| e.to_string())
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::from_str(s).map_err(|e| e.to_string())
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Check { relation, smaller, larger, grid, out } => {
            cmd_check(relation, &smaller, &larger, &grid, out.as_deref())
        }
        Command::Reproduce { id, grid, out } => cmd_reproduce(&id, &grid, &out),
        Command::Verify { id, trials, seed, out } => cmd_verify(id, trials, seed, out.as_deref()),
        Command::Sample { config, count, seed, out } => {
            cmd_sample(&config, count, seed, out.as_deref())
        }
        Command::CheckMajorize { x, y } => cmd_check_majorize(&x, &y),
    }
}

fn load_system(path: &Path) -> Result<(SystemConfig, SystemSpec), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
    let cfg = SystemConfig::from_json(&text)
        .map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
    let spec = cfg
        .build()
        .map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
    Ok((cfg, spec))
}

/// Prints the report to stdout and mirrors it byte-for-byte into `out`.
fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    println!("{text}");
    if let Some(path) = out {
        fs::write(path, format!("{text}\n"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------- check ----

#[derive(Serialize)]
struct CheckReport {
    command: &'static str,
    relation: Relation,
    grid: GridEcho,
    smaller: SystemConfig,
    larger: SystemConfig,
    verdict: OrderVerdict,
}

fn cmd_check(
    relation: Relation,
    smaller_path: &Path,
    larger_path: &Path,
    grid_args: &GridArgs,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let (smaller_cfg, smaller) = load_system(smaller_path)?;
    let (larger_cfg, larger) = load_system(larger_path)?;
    let grid = grid_args.build(500)?;
    let verdict = check_order(relation, &smaller, &larger, &grid)?;
    let report = CheckReport {
        command: "check",
        relation,
        grid: GridEcho::of(&grid),
        smaller: smaller_cfg,
        larger: larger_cfg,
        verdict,
    };
    let code = match report.verdict.status {
        VerdictStatus::Holds => EXIT_HOLDS,
        VerdictStatus::Fails => EXIT_FAILS,
        VerdictStatus::Inconclusive => EXIT_INCONCLUSIVE,
    };
    emit(&to_pretty(&report), out)?;
    Ok(code)
}

// ------------------------------------------------------------ reproduce ----

struct Panel {
    file: &'static str,
    curve: &'static str,
    values: Vec<f64>,
}

#[derive(Serialize)]
struct PanelSummary {
    file: String,
    curve: String,
    classification: Monotonicity,
}

#[derive(Serialize)]
struct ReproduceSummary {
    command: &'static str,
    id: String,
    grid: GridEcho,
    pairs: Vec<PairEcho>,
    panels: Vec<PanelSummary>,
}

#[derive(Serialize)]
struct PairEcho {
    label: &'static str,
    smaller: SystemConfig,
    larger: SystemConfig,
}

fn odds_panel(
    odds: &OddsFunction,
    xs: &[f64],
    f: impl Fn(&OddsFunction, f64) -> Result<f64, Error>,
) -> Result<Vec<f64>, CliError> {
    xs.iter().map(|&x| f(odds, x).map_err(CliError::from)).collect()
}

fn ratio_panel(
    smaller: &SystemSpec,
    larger: &SystemSpec,
    grid: &Grid,
) -> Result<Vec<f64>, CliError> {
    Ok(log_density_ratio(smaller, larger, grid)?
        .into_iter()
        .map(|v| v.unwrap_or(f64::NAN))
        .collect())
}

fn write_panel_csv(
    dir: &Path,
    id: &str,
    grid: &Grid,
    panel: &Panel,
) -> Result<(), CliError> {
    let xs = grid.xs();
    let mut text = String::new();
    let _ = writeln!(text, "# command: reproduce {id}");
    let _ = writeln!(text, "# curve: {}", panel.curve);
    let echo = GridEcho::of(grid);
    let _ = writeln!(
        text,
        "# grid: y_min={} y_max={} points={}",
        echo.y_min, echo.y_max, echo.points
    );
    let _ = writeln!(text, "y,x,value");
    for (i, &x) in xs.iter().enumerate() {
        // xs are increasing while ys are stored decreasing: match them up.
        let y = grid.ys()[i];
        let _ = writeln!(text, "{y},{x},{}", panel.values[i]);
    }
    fs::write(dir.join(panel.file), text)?;
    Ok(())
}

fn cmd_reproduce(id: &str, grid_args: &GridArgs, outdir: &Path) -> Result<i32, CliError> {
    let grid = grid_args.build(2000)?;
    let xs = grid.xs();
    fs::create_dir_all(outdir)?;

    let (pairs, panels): (Vec<PairEcho>, Vec<Panel>) = match id {
        "ce-3.1" => {
            let odds = OddsFunction::new(BaselineModel::BurrXii { c: 3.0, k: 0.35 }, 1.0)?;
            let (out_s, out_l) = ce31_outlier_pair();
            let (non_s, non_l) = ce31_non_outlier_pair();
            let panels = vec![
                Panel {
                    file: "ce-3.1-figure1a.csv",
                    curve: "first derivative of the baseline odds",
                    values: odds_panel(&odds, &xs, |w, x| w.derivative(x, 1))?,
                },
                Panel {
                    file: "ce-3.1-figure1b.csv",
                    curve: "x * w'(x) / w(x)",
                    values: odds_panel(&odds, &xs, |w, x| {
                        Ok(x * w.derivative(x, 1)? / w.value(x)?)
                    })?,
                },
                Panel {
                    file: "ce-3.1-figure1c.csv",
                    curve: "x * w''(x) / w'(x)",
                    values: odds_panel(&odds, &xs, |w, x| {
                        Ok(x * w.derivative(x, 2)? / w.derivative(x, 1)?)
                    })?,
                },
                Panel {
                    file: "ce-3.1-figure2a.csv",
                    curve: "log density ratio, multiple-outlier pair",
                    values: ratio_panel(&out_s, &out_l, &grid)?,
                },
                Panel {
                    file: "ce-3.1-figure2b.csv",
                    curve: "log density ratio, non-outlier pair",
                    values: ratio_panel(&non_s, &non_l, &grid)?,
                },
            ];
            let pairs = vec![
                PairEcho {
                    label: "multiple-outlier",
                    smaller: SystemConfig::from_spec(&out_s),
                    larger: SystemConfig::from_spec(&out_l),
                },
                PairEcho {
                    label: "non-outlier",
                    smaller: SystemConfig::from_spec(&non_s),
                    larger: SystemConfig::from_spec(&non_l),
                },
            ];
            (pairs, panels)
        }
        "ce-3.2" => {
            let odds = OddsFunction::new(
                BaselineModel::Weibull { rate: 0.02, shape: 2.0 },
                1.0,
            )?;
            let (s, l) = ce32_pair();
            let panels = vec![
                Panel {
                    file: "ce-3.2-figure3a.csv",
                    curve: "first derivative of the baseline odds (increasing = convex odds)",
                    values: odds_panel(&odds, &xs, |w, x| w.derivative(x, 1))?,
                },
                Panel {
                    file: "ce-3.2-figure3b.csv",
                    curve: "second derivative of the baseline odds (increasing = 2-convex odds)",
                    values: odds_panel(&odds, &xs, |w, x| w.derivative(x, 2))?,
                },
                Panel {
                    file: "ce-3.2-figure3c.csv",
                    curve: "log density ratio",
                    values: ratio_panel(&s, &l, &grid)?,
                },
            ];
            let pairs = vec![PairEcho {
                label: "multiple-outlier",
                smaller: SystemConfig::from_spec(&s),
                larger: SystemConfig::from_spec(&l),
            }];
            (pairs, panels)
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown counterexample id '{other}' (expected ce-3.1 or ce-3.2)"
            )))
        }
    };

    let mut summaries = Vec::new();
    for panel in &panels {
        write_panel_csv(outdir, id, &grid, panel)?;
        let finite: (Vec<f64>, Vec<f64>) = xs
            .iter()
            .zip(&panel.values)
            .filter(|(_, v)| v.is_finite())
            .map(|(&x, &v)| (x, v))
            .unzip();
        summaries.push(PanelSummary {
            file: panel.file.to_string(),
            curve: panel.curve.to_string(),
            classification: monotonicity_report(&finite.0, &finite.1, 1e-9)?,
        });
    }
    let summary = ReproduceSummary {
        command: "reproduce",
        id: id.to_string(),
        grid: GridEcho::of(&grid),
        pairs,
        panels: summaries,
    };
    let text = to_pretty(&summary);
    fs::write(outdir.join(format!("{id}-summary.json")), format!("{text}\n"))?;
    println!("{text}");
    Ok(EXIT_HOLDS)
}

// --------------------------------------------------------------- verify ----

#[derive(Serialize)]
struct VerifySummary<'a> {
    command: &'static str,
    id: TheoremId,
    relation: Relation,
    seed: u64,
    trials: usize,
    passes: usize,
    failures: usize,
    counterexample: Option<&'a wgmin_core::theorems::TrialRecord>,
}

fn cmd_verify(
    id: TheoremId,
    trials: Option<usize>,
    seed: u64,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let trials = trials.unwrap_or_else(|| id.default_trials());
    if trials == 0 {
        return Err(CliError::usage("--trials must be positive".into()));
    }
    let report = verify_theorem(id, seed, trials)?;
    let summary = VerifySummary {
        command: "verify",
        id: report.id,
        relation: report.relation,
        seed: report.seed,
        trials: report.trials,
        passes: report.passes,
        failures: report.failures,
        counterexample: report.counterexample(),
    };
    println!("{}", to_pretty(&summary));
    if let Some(path) = out {
        fs::write(path, format!("{}\n", to_pretty(&report)))?;
    }
    Ok(if report.all_passed() { EXIT_HOLDS } else { EXIT_FAILS })
}

// --------------------------------------------------------------- sample ----

/// 64-bit FNV-1a over the resolved config JSON; stamped into the CSV header
/// so a sample file can be traced back to the exact system it came from.
fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn cmd_sample(
    config_path: &Path,
    count: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    if count == 0 {
        return Err(CliError::usage("--count must be positive".into()));
    }
    let (cfg, spec) = load_system(config_path)?;
    let draws = spec.min_sample(seed, count)?;
    let resolved = serde_json::to_string(&cfg).expect("config serializes");
    let mut text = String::new();
    let _ = writeln!(text, "# command: sample");
    let _ = writeln!(text, "# seed: {seed}");
    let _ = writeln!(text, "# count: {count}");
    let _ = writeln!(text, "# config-hash: {:016x}", fnv1a(resolved.as_bytes()));
    let _ = writeln!(text, "# config: {resolved}");
    let _ = writeln!(text, "index,value");
    for (i, v) in draws.iter().enumerate() {
        let _ = writeln!(text, "{i},{v}");
    }
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(EXIT_HOLDS)
}

// ------------------------------------------------------- check-majorize ----

#[derive(Serialize)]
struct MajorizeReport {
    command: &'static str,
    x: Vec<f64>,
    y: Vec<f64>,
    majorizes: bool,
    x_cone: ConeMembership,
    y_cone: ConeMembership,
}

fn cmd_check_majorize(x: &[f64], y: &[f64]) -> Result<i32, CliError> {
    let xv = ParamVector::new(x.to_vec())?;
    let yv = ParamVector::new(y.to_vec())?;
    let report = MajorizeReport {
        command: "check-majorize",
        x: x.to_vec(),
        y: y.to_vec(),
        majorizes: majorizes(&xv, &yv)?,
        x_cone: cone_membership(&xv),
        y_cone: cone_membership(&yv),
    };
    println!("{}", to_pretty(&report));
    Ok(if report.majorizes { EXIT_HOLDS } else { EXIT_FAILS })
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}
