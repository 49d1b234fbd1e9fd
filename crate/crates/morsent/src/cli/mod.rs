//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 numerical
//! failure, 3 invariant violation.

mod format;
mod svg;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::entropy::{
    bbm_check, entropy_density_curve, reference_cells, scan_cells, variance_uncertainty, CellIssue,
    DensityCurve, EntropyResult, GridSpec, ScanReport, Space, UncertaintyResult,
};
use crate::golden;
use crate::morse::MorseParams;
use crate::quad::QuadConfig;

pub use format::{density_csv, table_csv};
pub use svg::render_density_svg;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Usage = 1,
    Numerical = 2,
    Violation = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => Exit::Usage,
            CliError::Numerical(_) => Exit::Numerical,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "morsent",
    version,
    about = "Information entropies of Morse oscillator eigenstates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy table over (n, lambda) cells; defaults to the reference table
    Table {
        #[command(flatten)]
        common: CommonArgs,
        /// Compare against the embedded reference table
        #[arg(long)]
        golden: bool,
    },
    /// Entropies, BBM margin and Robertson product of a single state
    Entropy {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Probability and entropy densities on a grid
    Density {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value = "x")]
        space: SpaceArg,
        /// `auto` or `lo:hi:count`
        #[arg(long, default_value = "auto", allow_hyphen_values = true)]
        grid: String,
        /// Also write an SVG line chart of the entropy densities
        #[arg(long)]
        svg: bool,
    },
    /// Verify the BBM inequality for every bound state in a range
    Check {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Depth parameters: comma list of values or `lo:hi[:step]` ranges
    #[arg(long)]
    pub lambda: Option<String>,
    /// Quantum numbers: comma list of values or `lo:hi` ranges
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub hbar: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub mu: f64,
    #[arg(long, default_value_t = 1e-10, allow_negative_numbers = true)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 1e-12, allow_negative_numbers = true)]
    pub abs_tol: f64,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Decimals shown in CSV and pretty output
    #[arg(long, default_value_t = 4)]
    pub precision: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum OutputFormat {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    X,
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Table,
    Entropy,
    Density,
    Check,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub lambdas: Option<Vec<f64>>,
    pub ns: Option<Vec<usize>>,
    pub alpha: f64,
    pub hbar: f64,
    pub mu: f64,
    pub quad: QuadConfig,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub precision: usize,
    pub space: Space,
    pub grid: GridSpec,
    pub svg: bool,
    pub golden: bool,
}

impl RunConfig {
    /// Parse command-line words (including the program name).
    pub fn parse_from<I, T>(args: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
        RunConfig::try_from(cli).map_err(CliError::Usage)
    }

    pub fn base_params(&self) -> Result<MorseParams, CliError> {
        // any positive λ will do; only the unit system is taken from here
        Ok(MorseParams::with_units(
            1.0, self.alpha, self.hbar, self.mu,
        )?)
    }

    fn params(&self, lambda: f64) -> Result<MorseParams, CliError> {
        Ok(MorseParams::with_units(
            lambda, self.alpha, self.hbar, self.mu,
        )?)
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = String;

    fn try_from(cli: Cli) -> Result<Self, String> {
        let (command, common, space, grid, svg, golden) = match cli.command {
            Command::Table { common, golden } => (
                CommandKind::Table,
                common,
                SpaceArg::X,
                "auto".to_string(),
                false,
                golden,
            ),
            Command::Entropy { common } => (
                CommandKind::Entropy,
                common,
                SpaceArg::X,
                "auto".to_string(),
                false,
                false,
            ),
            Command::Density {
                common,
                space,
                grid,
                svg,
            } => (CommandKind::Density, common, space, grid, svg, false),
            Command::Check { common } => (
                CommandKind::Check,
                common,
                SpaceArg::X,
                "auto".to_string(),
                false,
                false,
            ),
        };
        let quad = QuadConfig::new(
            common.rel_tol,
            common.abs_tol,
            QuadConfig::default().max_subdivisions,
        )
        .map_err(|e| e.to_string())?;
        for (name, v) in [
            ("alpha", common.alpha),
            ("hbar", common.hbar),
            ("mu", common.mu),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("--{name} must be positive, got {v}"));
            }
        }
        let format = common
            .format
            .unwrap_or_else(|| infer_format(command, common.out.as_deref()));
        Ok(RunConfig {
            command,
            lambdas: common
                .lambda
                .as_deref()
                .map(parse_lambda_list)
                .transpose()?,
            ns: common.n.as_deref().map(parse_n_list).transpose()?,
            alpha: common.alpha,
            hbar: common.hbar,
            mu: common.mu,
            quad,
            format,
            out: common.out,
            precision: common.precision,
            space: match space {
                SpaceArg::X => Space::Position,
                SpaceArg::P => Space::Momentum,
            },
            grid: parse_grid(&grid)?,
            svg,
            golden,
        })
    }
}

fn infer_format(command: CommandKind, out: Option<&Path>) -> OutputFormat {
    match out.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("json") => OutputFormat::Json,
        Some("csv") => OutputFormat::Csv,
        _ if command == CommandKind::Density => OutputFormat::Csv,
        _ => OutputFormat::Pretty,
    }
}

fn parse_f64(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("not a finite number: {s:?}"))
}

/// `1,2,3`, `1:8:0.5`, `2:5` (unit step), or a comma-separated mix.
pub fn parse_lambda_list(spec: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for item in spec.split(',').filter(|s| !s.trim().is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        match parts.len() {
            1 => out.push(parse_f64(parts[0])?),
            2 | 3 => {
                let lo = parse_f64(parts[0])?;
                let hi = parse_f64(parts[1])?;
                let step = if parts.len() == 3 {
                    parse_f64(parts[2])?
                } else {
                    1.0
                };
                if !(step > 0.0) {
                    return Err(format!("range step must be positive in {item:?}"));
                }
                let count = ((hi - lo) / step + 1e-9).floor();
                if count >= 0.0 {
                    if count > 1e6 {
                        return Err(format!("range {item:?} has too many points"));
                    }
                    // multiply rather than accumulate so 0.6 + 3·0.2 stays clean
                    out.extend((0..=count as usize).map(|i| {
                        let v = lo + step * i as f64;
                        (v * 1e12).round() / 1e12
                    }));
                }
            }
            _ => return Err(format!("bad lambda item {item:?}")),
        }
    }
    Ok(out)
}

/// `0,1,2` or `0:3`, or a comma-separated mix.
pub fn parse_n_list(spec: &str) -> Result<Vec<usize>, String> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a non-negative integer: {s:?}"))
    };
    let mut out = Vec::new();
    for item in spec.split(',').filter(|s| !s.trim().is_empty()) {
        match item.split_once(':') {
            None => out.push(parse(item)?),
            Some((lo, hi)) => {
                let (lo, hi) = (parse(lo)?, parse(hi)?);
                out.extend(lo..=hi);
            }
        }
    }
    Ok(out)
}

pub fn parse_grid(spec: &str) -> Result<GridSpec, String> {
    if spec.trim() == "auto" {
        return Ok(GridSpec::Auto);
    }
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!(
            "grid must be `auto` or `lo:hi:count`, got {spec:?}"
        ));
    }
    let lo = parse_f64(parts[0])?;
    let hi = parse_f64(parts[1])?;
    let count: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| format!("bad grid count {:?}", parts[2]))?;
    if !(lo < hi) || count < 2 {
        return Err(format!("grid needs lo < hi and count >= 2, got {spec:?}"));
    }
    Ok(GridSpec::Explicit { lo, hi, count })
}

/// Destination streams for one invocation.
pub struct Io<'a> {
    pub stdout: &'a mut (dyn Write + Send),
    pub stderr: &'a mut (dyn Write + Send),
}

impl Io<'_> {
    fn note(&mut self, msg: impl AsRef<str>) {
        let _ = writeln!(self.stderr, "{}", msg.as_ref());
    }
}

fn write_artifact(io: &mut Io, out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, body).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => io
            .stdout
            .write_all(body.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("results serialize to JSON");
    s.push('\n');
    s
}

fn report_diagnostics(io: &mut Io, report: &ScanReport) {
    for d in &report.diagnostics {
        match &d.issue {
            CellIssue::Invalid(e) => {
                io.note(format!("skipping n={} lambda={}: {e}", d.n, d.lambda))
            }
            CellIssue::Failed(e) => io.note(format!("n={} lambda={} failed: {e}", d.n, d.lambda)),
        }
    }
}

fn render_results(cfg: &RunConfig, results: &[EntropyResult]) -> String {
    match cfg.format {
        OutputFormat::Csv => table_csv(results, cfg.precision),
        OutputFormat::Json => json(results),
        OutputFormat::Pretty => format::table_pretty(results, cfg.precision),
    }
}

/// Table cells implied by the selectors.
fn table_cells(cfg: &RunConfig) -> Result<Vec<(usize, f64)>, CliError> {
    let reference = reference_cells();
    let cells = match (&cfg.ns, &cfg.lambdas) {
        (None, None) => reference,
        (Some(ns), None) => ns
            .iter()
            .flat_map(|&n| reference.iter().filter(move |c| c.0 == n).copied())
            .collect(),
        (None, Some(ls)) => {
            let mut cells = Vec::new();
            for &l in ls {
                let count = cfg.params(l).map(|p| p.bound_state_count()).unwrap_or(0);
                cells.extend((0..count).map(|n| (n, l)));
            }
            cells.sort_by_key(|c| c.0);
            cells
        }
        (Some(ns), Some(ls)) => ns
            .iter()
            .flat_map(|&n| ls.iter().map(move |&l| (n, l)))
            .collect(),
    };
    Ok(cells)
}

fn run_scan(cfg: &RunConfig, io: &mut Io, cells: &[(usize, f64)]) -> Result<ScanReport, CliError> {
    if cells.is_empty() {
        return Err(CliError::Usage("selection is empty".into()));
    }
    let report = scan_cells(&cfg.base_params()?, cells, &cfg.quad);
    report_diagnostics(io, &report);
    if report.results.is_empty() && !report.has_failures() {
        return Err(CliError::Usage("no bound states in the selection".into()));
    }
    Ok(report)
}

/// Entropy table; with `golden`, deviations from the reference table.
pub fn cmd_table(cfg: &RunConfig, io: &mut Io) -> Result<Exit, CliError> {
    let cells = table_cells(cfg)?;
    let report = run_scan(cfg, io, &cells)?;
    write_artifact(
        io,
        cfg.out.as_deref(),
        &render_results(cfg, &report.results),
    )?;

    let mut exit = Exit::Success;
    if cfg.golden {
        let cmp = golden::compare(&report.results);
        io.note(format!(
            "golden: {} rows compared, max |dS_x| = {:.2e}, max |dS_p| = {:.2e}, max |d sum| = {:.2e} \
             (tolerances {:.1e} / {:.1e})",
            cmp.deltas.len(),
            cmp.max_abs_d_s_x,
            cmp.max_abs_d_s_p,
            cmp.max_abs_d_sum,
            golden::ENTROPY_TOLERANCE,
            golden::SUM_TOLERANCE
        ));
        for d in cmp.deltas.iter().filter(|d| !d.within_tolerance()) {
            io.note(format!(
                "golden: n={} lambda={} outside tolerance (dS_x = {:+.4e}, dS_p = {:+.4e}, d sum = {:+.4e})",
                d.n, d.lambda, d.d_s_x, d.d_s_p, d.d_sum
            ));
        }
        if cmp.unmatched > 0 {
            io.note(format!(
                "golden: {} computed rows have no reference value",
                cmp.unmatched
            ));
        }
        if !cmp.passes() {
            exit = Exit::Violation;
        }
    }
    if report.has_failures() {
        return Ok(Exit::Numerical);
    }
    Ok(exit)
}

fn single<T: Copy + std::fmt::Display>(
    values: Option<&Vec<T>>,
    default: Option<T>,
    what: &str,
) -> Result<T, CliError> {
    match values.map(|v| v.as_slice()) {
        None => default.ok_or_else(|| CliError::Usage(format!("--{what} is required"))),
        Some([v]) => Ok(*v),
        Some(_) => Err(CliError::Usage(format!(
            "exactly one --{what} value is required"
        ))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntropyReport {
    #[serde(flatten)]
    pub entropy: EntropyResult,
    #[serde(flatten)]
    pub uncertainty: UncertaintyResult,
}

/// Full report for one state.
pub fn cmd_entropy(cfg: &RunConfig, io: &mut Io) -> Result<Exit, CliError> {
    let lambda = single(cfg.lambdas.as_ref(), None, "lambda")?;
    let n = single(cfg.ns.as_ref(), Some(0), "n")?;
    let params = cfg.params(lambda)?;
    if params.bound_state_count() == 0 {
        return Err(CliError::Usage(format!(
            "no bound states for lambda = {lambda}"
        )));
    }
    let state = params.eigenstate(n)?;
    let report = EntropyReport {
        entropy: bbm_check(&params, &state, &cfg.quad)?,
        uncertainty: variance_uncertainty(&params, &state, &cfg.quad)?,
    };
    let body = match cfg.format {
        OutputFormat::Json => json(&report),
        OutputFormat::Csv => format::entropy_csv(&report, cfg.precision),
        OutputFormat::Pretty => format::entropy_pretty(&report, cfg.precision),
    };
    write_artifact(io, cfg.out.as_deref(), &body)?;
    Ok(Exit::Success)
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("density");
    let mut name = format!("{stem}{suffix}");
    if let Some(ext) = path.extension().and_then(|e| e.to_str()) {
        name.push('.');
        name.push_str(ext);
    }
    path.with_file_name(name)
}

/// Density curves of one `n` across the requested depths.
pub fn cmd_density(cfg: &RunConfig, io: &mut Io) -> Result<Exit, CliError> {
    let n = single(cfg.ns.as_ref(), Some(0), "n")?;
    let lambdas = cfg
        .lambdas
        .clone()
        .ok_or_else(|| CliError::Usage("--lambda is required".into()))?;
    if lambdas.is_empty() {
        return Err(CliError::Usage("--lambda selects nothing".into()));
    }
    let curves = lambdas
        .iter()
        .map(|&l| {
            let params = cfg.params(l)?;
            let state = params.eigenstate(n)?;
            Ok(entropy_density_curve(&params, &state, cfg.space, cfg.grid)?)
        })
        .collect::<Result<Vec<DensityCurve>, CliError>>()?;

    match (cfg.format, cfg.out.as_deref(), curves.len()) {
        (OutputFormat::Json, out, _) => write_artifact(io, out, &json(&curves))?,
        (_, out, 1) => write_artifact(io, out, &density_csv(&curves[0], cfg.precision))?,
        (_, Some(out), _) => {
            for c in &curves {
                let path = with_suffix(out, &format!("_lambda{}", c.lambda));
                write_artifact(io, Some(&path), &density_csv(c, cfg.precision))?;
            }
        }
        (_, None, _) => {
            let mut body = String::new();
            for c in &curves {
                body.push_str(&format!(
                    "# n={} lambda={} space={}\n",
                    c.n,
                    c.lambda,
                    space_tag(c.space)
                ));
                body.push_str(&density_csv(c, cfg.precision));
            }
            write_artifact(io, None, &body)?;
        }
    }

    if cfg.svg {
        let path = match cfg.out.as_deref() {
            Some(out) => out.with_extension("svg"),
            None => PathBuf::from(format!("entropy_density_{}_n{n}.svg", space_tag(cfg.space))),
        };
        write_artifact(io, Some(&path), &render_density_svg(&curves))?;
        io.note(format!("wrote {}", path.display()));
    }
    Ok(Exit::Success)
}

pub(crate) fn space_tag(space: Space) -> &'static str {
    match space {
        Space::Position => "x",
        Space::Momentum => "p",
    }
}

#[derive(Debug, Serialize)]
struct CheckVerdict<'a> {
    states: usize,
    violations: usize,
    min_margin: f64,
    results: &'a [EntropyResult],
}

/// BBM verdict over every bound state in the selected range.
pub fn cmd_check(cfg: &RunConfig, io: &mut Io) -> Result<Exit, CliError> {
    let lambdas = cfg
        .lambdas
        .as_ref()
        .ok_or_else(|| CliError::Usage("--lambda range is required".into()))?;
    let mut cells = Vec::new();
    for &l in lambdas {
        let count = cfg.params(l)?.bound_state_count();
        let ns: Vec<usize> = match &cfg.ns {
            Some(ns) => ns.iter().copied().filter(|&n| n < count).collect(),
            None => (0..count).collect(),
        };
        cells.extend(ns.into_iter().map(|n| (n, l)));
    }
    if cells.is_empty() {
        return Err(CliError::Usage(
            "no bound states in the selected range".into(),
        ));
    }
    let report = run_scan(cfg, io, &cells)?;
    let violations: Vec<&EntropyResult> = report
        .results
        .iter()
        .filter(|r| !r.satisfies_bound())
        .collect();
    let min_margin = report
        .results
        .iter()
        .map(|r| r.margin)
        .fold(f64::INFINITY, f64::min);

    let body = match cfg.format {
        OutputFormat::Json => json(&CheckVerdict {
            states: report.results.len(),
            violations: violations.len(),
            min_margin,
            results: &report.results,
        }),
        _ => render_results(cfg, &report.results),
    };
    write_artifact(io, cfg.out.as_deref(), &body)?;
    for v in &violations {
        io.note(format!(
            "VIOLATION n={} lambda={}: margin {:e} below -(errors) {:e}",
            v.n,
            v.lambda,
            v.margin,
            -(v.s_x_err + v.s_p_err)
        ));
    }
    io.note(format!(
        "checked {} states, {} violations, min margin {:.6}",
        report.results.len(),
        violations.len(),
        min_margin
    ));
    if report.has_failures() {
        Ok(Exit::Numerical)
    } else if violations.is_empty() {
        Ok(Exit::Success)
    } else {
        Ok(Exit::Violation)
    }
}

fn dispatch(cfg: &RunConfig, io: &mut Io) -> Exit {
    let outcome = match cfg.command {
        CommandKind::Table => cmd_table(cfg, io),
        CommandKind::Entropy => cmd_entropy(cfg, io),
        CommandKind::Density => cmd_density(cfg, io),
        CommandKind::Check => cmd_check(cfg, io),
    };
    outcome.unwrap_or_else(|e| {
        io.note(format!("error: {e}"));
        e.exit()
    })
}

/// Run one configured command, capping parallelism at `threads` (0 = auto).
pub fn run(cfg: &RunConfig, threads: usize, io: &mut Io) -> Exit {
    if threads == 0 {
        return dispatch(cfg, io);
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| dispatch(cfg, io)),
        Err(e) => {
            io.note(format!("error: cannot start thread pool: {e}"));
            Exit::Numerical
        }
    }
}

/// Thread cap from `MORSENT_THREADS`; unset, empty or unparsable means auto.
pub fn threads_from_env() -> usize {
    std::env::var("MORSENT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_lists_and_ranges() {
        assert_eq!(parse_lambda_list("1,2,3").unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(parse_lambda_list("2:5").unwrap(), vec![2.0, 3.0, 4.0, 5.0]);
        let r = parse_lambda_list("0.6:10:0.2").unwrap();
        assert_eq!(r.len(), 48);
        assert_eq!(r[1], 0.8);
        assert_eq!(r[47], 10.0);
        assert_eq!(parse_lambda_list("1,3:4").unwrap(), vec![1.0, 3.0, 4.0]);
        assert!(parse_lambda_list("5:1").unwrap().is_empty());
        assert!(parse_lambda_list("1:2:0").is_err());
        assert!(parse_lambda_list("x").is_err());
        assert!(parse_lambda_list("1:2:3:4").is_err());
    }

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("0,2").unwrap(), vec![0, 2]);
        assert_eq!(parse_n_list("1:3").unwrap(), vec![1, 2, 3]);
        assert!(parse_n_list("-1").is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("auto").unwrap(), GridSpec::Auto);
        assert_eq!(
            parse_grid("-2:8:101").unwrap(),
            GridSpec::Explicit {
                lo: -2.0,
                hi: 8.0,
                count: 101
            }
        );
        assert!(parse_grid("3:1:10").is_err());
        assert!(parse_grid("0:1:1").is_err());
        assert!(parse_grid("0:1").is_err());
    }

    #[test]
    fn config_from_words() {
        let cfg =
            RunConfig::parse_from(["morsent", "table", "--golden", "--format", "csv"]).unwrap();
        assert_eq!(cfg.command, CommandKind::Table);
        assert!(cfg.golden);
        assert_eq!(cfg.format, OutputFormat::Csv);
        assert_eq!(cfg.quad, QuadConfig::default());

        let cfg =
            RunConfig::parse_from(["morsent", "density", "--space", "p", "--lambda", "2"]).unwrap();
        assert_eq!(cfg.space, Space::Momentum);
        assert_eq!(cfg.format, OutputFormat::Csv);

        let cfg = RunConfig::parse_from(["morsent", "entropy", "--lambda", "1", "--out", "r.json"])
            .unwrap();
        assert_eq!(cfg.format, OutputFormat::Json);

        assert!(RunConfig::parse_from(["morsent", "table", "--rel-tol", "-1"]).is_err());
        assert!(RunConfig::parse_from(["morsent", "table", "--alpha", "0"]).is_err());
        assert!(RunConfig::parse_from(["morsent", "density", "--grid", "1:0:5"]).is_err());
    }

    #[test]
    fn suffixed_paths() {
        assert_eq!(
            with_suffix(Path::new("/tmp/out.csv"), "_lambda2"),
            PathBuf::from("/tmp/out_lambda2.csv")
        );
    }
}
