//! `lft` command-line front-end.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::analytic::{lagrangian_eval, ModelParams, PolynomialLagrangian, VelocitySet};
use crate::audit;
use crate::branches::{enumerate_branches, swallow_tail_curve, xi_remap, xi_trace, XiRemap};
use crate::conjugate::{
    biconjugate, conjugate_bruteforce, conjugate_fast, effective_domain, EffectiveDomain,
    SampledFunction, SlopeGrid,
};
use crate::io::{
    fmt_f64, parse_coefficients, parse_grid_spec, parse_sampled_csv, CsvWriter, GridSpec,
};

/// Vacuum data of the path-integral construction, quoted for comparison
/// (`κ = 1`); it has no closed form here.
pub const HPI_ENERGY: f64 = 0.5;
pub const HPI_MOMENTUM: f64 = 0.0;
pub const HPI_VELOCITY: f64 = 0.0;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(String),
    #[error("{0} audit(s) failed")]
    AuditFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
            CliError::AuditFailed(_) => 1,
        }
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Io(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "lft",
    version,
    about = "Legendre-Fenchel Hamiltonians for non-convex Lagrangians"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Single-valued Hamiltonian with the two reference guides
    Hamiltonian(RunArgs),
    /// Original Lagrangian and its convex hull
    Lagrangian(RunArgs),
    /// Swallow-tail samples of the multi-valued Hamiltonian
    Branches {
        #[command(flatten)]
        run: RunArgs,
        /// Append the momentum-remap table and the velocity trace
        #[arg(long)]
        xi: bool,
    },
    /// Vacuum states of the three constructions
    Vacuum {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        kappa: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Conjugate of sampled data (`x,f` CSV, `-` for stdin) or of a polynomial
    Conjugate {
        input: Option<PathBuf>,
        /// Polynomial coefficients `c0,c1,...` sampled on --grid
        #[arg(long, allow_hyphen_values = true, conflicts_with = "input")]
        poly: Option<String>,
        #[command(flatten)]
        run: RunArgs,
        /// Emit the convex hull on the input abscissae instead
        #[arg(long)]
        biconjugate: bool,
        /// Use the exhaustive O(N·M) transform
        #[arg(long)]
        oracle: bool,
    },
    /// Run the built-in consistency checks
    Audit {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub kappa: f64,
    /// Velocity grid `min,max,points`
    #[arg(long, default_value = "-3,3,4001", value_parser = grid_arg, allow_hyphen_values = true)]
    pub grid: GridSpec,
    /// Momentum grid `min,max,points`
    #[arg(long, default_value = "-2,2,4001", value_parser = grid_arg, allow_hyphen_values = true)]
    pub slopes: GridSpec,
    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn grid_arg(s: &str) -> Result<GridSpec, String> {
    parse_grid_spec(s).map_err(|e| e.to_string())
}

/// Validated settings shared by the table-emitting commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: ModelParams,
    pub grid: GridSpec,
    pub slopes: GridSpec,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> Result<Self, CliError> {
        let params = ModelParams::new(args.kappa).map_err(|e| CliError::Invalid(e.to_string()))?;
        Ok(RunConfig {
            params,
            grid: args.grid,
            slopes: args.slopes,
            output_path: args.out.clone(),
        })
    }

    fn require_nonconvex(&self) -> Result<(), CliError> {
        if self.params.is_convex_regime() {
            Err(CliError::Invalid(format!(
                "kappa must be positive for this command, got {}",
                self.params.kappa()
            )))
        } else {
            Ok(())
        }
    }

    fn slope_grid(&self) -> Result<SlopeGrid, CliError> {
        SlopeGrid::new(self.slopes.values()).map_err(|e| CliError::Invalid(e.to_string()))
    }
}

pub fn write_hamiltonian<W: Write>(cfg: &RunConfig, out: W) -> Result<W, CliError> {
    cfg.require_nonconvex()?;
    let params = &cfg.params;
    let apex = params.hamiltonian(0.0);
    let slope = params.kappa().sqrt();
    let mut w =
        CsvWriter::new(out, &["p", "H_lft", "H_ref_upper", "H_ref_lower"]).map_err(io_err)?;
    for p in cfg.slopes.values() {
        w.numbers(&[p, params.hamiltonian(p), apex + slope * p, apex - slope * p])
            .map_err(io_err)?;
    }
    Ok(w.into_inner())
}

pub fn write_lagrangian<W: Write>(cfg: &RunConfig, out: W) -> Result<W, CliError> {
    let params = &cfg.params;
    let mut w = CsvWriter::with_preamble(
        out,
        &["the path-integral effective Lagrangian has no closed form and is not emitted"],
        &["v", "L_original", "L_lft"],
    )
    .map_err(io_err)?;
    for v in cfg.grid.values() {
        w.numbers(&[v, lagrangian_eval(v, params), params.revised_lagrangian(v)])
            .map_err(io_err)?;
    }
    Ok(w.into_inner())
}

/// Velocity grid with the two cusp velocities `±√(κ/3)` merged in.
fn grid_with_cusps(cfg: &RunConfig) -> Vec<f64> {
    let mut vs = cfg.grid.values();
    let c = (cfg.params.kappa() / 3.0).sqrt();
    for v in [-c, c] {
        if v > cfg.grid.min && v < cfg.grid.max {
            if let Err(i) = vs.binary_search_by(|x| x.total_cmp(&v)) {
                vs.insert(i, v);
            }
        }
    }
    vs
}

pub fn write_branches<W: Write>(cfg: &RunConfig, xi: bool, out: W) -> Result<W, CliError> {
    cfg.require_nonconvex()?;
    let params = &cfg.params;
    let set = enumerate_branches(params).map_err(|e| CliError::Invalid(e.to_string()))?;
    let vs = grid_with_cusps(cfg);
    let trace = xi_trace(&vs, params).map_err(|e| CliError::Invalid(e.to_string()))?;
    let mut w = CsvWriter::new(out, &["v", "p", "H", "branch"]).map_err(io_err)?;
    for ((v, (p, h)), t) in vs.iter().zip(swallow_tail_curve(&vs, params)).zip(&trace) {
        w.row(&[
            fmt_f64(*v),
            fmt_f64(p),
            fmt_f64(h),
            t.label.as_str().to_string(),
        ])
        .map_err(io_err)?;
    }
    let mut out = w.into_inner();
    if !xi {
        return Ok(out);
    }
    debug_assert_eq!(set.params(), params);

    let remap = XiRemap::from_params(params).map_err(|e| CliError::Invalid(e.to_string()))?;
    writeln!(out).map_err(io_err)?;
    let mut w = CsvWriter::new(out, &["p", "xi1", "xi2", "xi3", "multiplicity"]).map_err(io_err)?;
    for p in cfg.slopes.values() {
        let xs = xi_remap(p, &remap);
        let mut row = vec![fmt_f64(p)];
        row.extend(xs.values.iter().map(|x| x.map(fmt_f64).unwrap_or_default()));
        row.push(xs.multiplicity().to_string());
        w.row(&row).map_err(io_err)?;
    }
    let mut out = w.into_inner();
    writeln!(out).map_err(io_err)?;
    let mut w = CsvWriter::new(out, &["v", "p", "branch", "xi"]).map_err(io_err)?;
    for t in &trace {
        w.row(&[
            fmt_f64(t.velocity),
            fmt_f64(t.momentum),
            t.label.as_str().to_string(),
            fmt_f64(t.xi),
        ])
        .map_err(io_err)?;
    }
    Ok(w.into_inner())
}

fn join(xs: &[f64]) -> String {
    xs.iter().map(|&x| fmt_f64(x)).collect::<Vec<_>>().join(",")
}

fn velocity_text(set: &VelocitySet) -> String {
    match set {
        VelocitySet::Finite(vs) => join(vs),
        VelocitySet::Interval { lo, hi } => format!("[{},{}]", fmt_f64(*lo), fmt_f64(*hi)),
    }
}

pub fn write_vacuum<W: Write>(params: &ModelParams, mut out: W) -> Result<W, CliError> {
    let lft = params.vacuum_lft();
    writeln!(out, "# vacuum states, kappa = {}", fmt_f64(params.kappa())).map_err(io_err)?;
    writeln!(
        out,
        "lft: H0={} p0={} velocity={}",
        fmt_f64(lft.energy),
        join(&lft.momenta),
        velocity_text(&lft.velocity_set)
    )
    .map_err(io_err)?;
    match params.vacuum_cusp() {
        Ok(cusp) => writeln!(
            out,
            "cusp: H0={} p0={} velocity={} (paired by position)",
            fmt_f64(cusp.energy),
            join(&cusp.momenta),
            velocity_text(&cusp.velocity_set)
        ),
        Err(e) => writeln!(out, "cusp: none ({e})"),
    }
    .map_err(io_err)?;
    writeln!(
        out,
        "hpi: H0={} p0={} velocity={} (quoted literal for kappa = 1, not computed)",
        fmt_f64(HPI_ENERGY),
        fmt_f64(HPI_MOMENTUM),
        fmt_f64(HPI_VELOCITY)
    )
    .map_err(io_err)?;
    Ok(out)
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

pub enum ConjugateSource {
    Samples(SampledFunction),
    Polynomial(PolynomialLagrangian),
}

pub fn write_conjugate<W: Write>(
    cfg: &RunConfig,
    source: ConjugateSource,
    hull_only: bool,
    oracle: bool,
    out: W,
) -> Result<W, CliError> {
    let (samples, domain) = match source {
        ConjugateSource::Samples(f) => (f, EffectiveDomain::AllMomenta),
        ConjugateSource::Polynomial(poly) => {
            let domain = effective_domain(&poly);
            if domain == EffectiveDomain::Empty {
                return Err(CliError::Domain(
                    "conjugate is +inf for every momentum (Lagrangian unbounded below)".into(),
                ));
            }
            let f = SampledFunction::sample(cfg.grid.min, cfg.grid.max, cfg.grid.points, |v| {
                poly.eval(v)
            })
            .map_err(|e| CliError::Invalid(e.to_string()))?;
            (f, domain)
        }
    };
    if hull_only {
        let hull = biconjugate(&samples);
        let mut w = CsvWriter::new(out, &["x", "f", "hull"]).map_err(io_err)?;
        for ((x, f), h) in samples
            .abscissae()
            .iter()
            .zip(samples.values())
            .zip(hull.values())
        {
            w.numbers(&[*x, *f, *h]).map_err(io_err)?;
        }
        return Ok(w.into_inner());
    }
    let g = cfg.slope_grid()?;
    let mut result = if oracle {
        conjugate_bruteforce(&samples, &g)
    } else {
        conjugate_fast(&samples, &g)
    };
    for (flag, &p) in result.finite.iter_mut().zip(g.slopes()) {
        *flag = domain.contains(p);
    }
    let mut w = CsvWriter::new(out, &["p", "conjugate", "finite", "argsup_x"]).map_err(io_err)?;
    for j in 0..g.len() {
        let value = if result.finite[j] {
            fmt_f64(result.values[j])
        } else {
            String::new()
        };
        w.row(&[
            fmt_f64(g.slopes()[j]),
            value,
            result.finite[j].to_string(),
            fmt_f64(samples.abscissae()[result.argsup[j]]),
        ])
        .map_err(io_err)?;
    }
    Ok(w.into_inner())
}

pub fn write_audit<W: Write>(mut out: W) -> Result<W, CliError> {
    let reports = audit::run_all();
    for r in &reports {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{tag} {}: {}", r.name, r.detail).map_err(io_err)?;
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        out.flush().map_err(io_err)?;
        return Err(CliError::AuditFailed(failed));
    }
    Ok(out)
}

fn with_output(
    path: Option<&PathBuf>,
    emit: impl FnOnce(Box<dyn Write>) -> Result<Box<dyn Write>, CliError>,
) -> Result<(), CliError> {
    let sink: Box<dyn Write> = match path {
        Some(p) => {
            let file =
                File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut sink = emit(sink)?;
    sink.flush().map_err(io_err)
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Hamiltonian(args) => {
            let cfg = RunConfig::from_args(&args)?;
            with_output(cfg.output_path.as_ref(), |w| write_hamiltonian(&cfg, w))
        }
        Command::Lagrangian(args) => {
            let cfg = RunConfig::from_args(&args)?;
            with_output(cfg.output_path.as_ref(), |w| write_lagrangian(&cfg, w))
        }
        Command::Branches { run, xi } => {
            let cfg = RunConfig::from_args(&run)?;
            with_output(cfg.output_path.as_ref(), |w| write_branches(&cfg, xi, w))
        }
        Command::Vacuum { kappa, out } => {
            let params = ModelParams::new(kappa).map_err(|e| CliError::Invalid(e.to_string()))?;
            with_output(out.as_ref(), |w| write_vacuum(&params, w))
        }
        Command::Conjugate {
            input,
            poly,
            run,
            biconjugate,
            oracle,
        } => {
            let cfg = RunConfig::from_args(&run)?;
            let source = match (input, poly) {
                (Some(path), None) => {
                    let text = read_input(&path)?;
                    let f = parse_sampled_csv(&text)
                        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
                    ConjugateSource::Samples(f)
                }
                (None, Some(spec)) => {
                    let coeffs =
                        parse_coefficients(&spec).map_err(|e| CliError::Invalid(e.to_string()))?;
                    let poly = PolynomialLagrangian::new(coeffs)
                        .map_err(|e| CliError::Invalid(e.to_string()))?;
                    ConjugateSource::Polynomial(poly)
                }
                _ => {
                    return Err(CliError::Invalid(
                        "give exactly one of an input CSV or --poly".into(),
                    ))
                }
            };
            with_output(cfg.output_path.as_ref(), |w| {
                write_conjugate(&cfg, source, biconjugate, oracle, w)
            })
        }
        Command::Audit { out } => with_output(out.as_ref(), write_audit),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("lft: {e}");
            e.exit_code()
        }
    }
}
