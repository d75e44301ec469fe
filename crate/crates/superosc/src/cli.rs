//! The `superosc` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superosc_core::analysis::{
    bound_configuration, compare_methods, default_domain, default_region, dynamic_range, find_zeros, local_frequencies,
    sample_uniform, sigma_bounds, verify_bandlimit, BoundFamily, SpectrumWindow, Taper, DEFAULT_RESOLUTION,
    DEFAULT_ZERO_TOL,
};
use superosc_core::constructors::{Displacements, Family, SuperoscillationRequest};
use superosc_core::quantum::{
    build_potential, critical_lift, solve_ground_state, LiftedWavefunction, PotentialSpec, PotentialStatus,
};
use superosc_core::scalar::Precision;
use superosc_core::ProductSignalSpec;

use crate::io::{self, AdditiveDocument, EigenSummary, Format, IoError};
use crate::number::{parse_interval, parse_list, parse_number};

/// Scan resolution used to locate the extrema of `ψ` for lift selection.
const LIFT_RESOLUTION: usize = 100_000;

/// Samples written by `dynrange --out *.csv`.
const PLOT_SAMPLES: usize = 4001;

#[derive(Debug, Parser)]
#[command(name = "superosc", version, about = "Construct and analyse superoscillating functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a product of bandlimited factors and write it as JSON.
    Synth(SynthArgs),
    /// Spectrum of a product and its out-of-band energy.
    Spectrum(SpectrumArgs),
    /// Zeros of a product and the local frequency between them.
    Zeros(ZerosArgs),
    /// Dynamic range over the superoscillating region.
    Dynrange(DynrangeArgs),
    /// Lower and upper bounds on the dynamic range of a centred translate build.
    Bounds(BoundsArgs),
    /// Dynamic range of the product against the minimum-energy interpolant through the same zeros.
    Compare(CompareArgs),
    /// Potential whose zero-energy state is the lifted product.
    Potential(PotentialArgs),
    /// Ground state of a potential written by `potential`.
    Eigen(EigenArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    SineTranslate,
    SineAntisymmetric,
    SincTranslate,
    SincVaried,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::SineTranslate => Family::SineTranslate,
            FamilyArg::SineAntisymmetric => Family::SineAntisymmetric,
            FamilyArg::SincTranslate => Family::SincTranslate,
            FamilyArg::SincVaried => Family::SincVaried,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BoundFamilyArg {
    SineTranslate,
    SincTranslate,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Total bandlimit; a comma-separated list of per-factor bandlimits for sinc-varied.
    #[arg(long)]
    pub omega: String,
    /// Number of factors.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated shifts; the (N-1)/2 positive shifts for sine-antisymmetric.
    #[arg(long, conflicts_with = "local_omega", allow_hyphen_values = true)]
    pub eps: Option<String>,
    /// Target local frequency; shifts are spaced pi/omega.
    #[arg(long)]
    pub local_omega: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// Analyse exactly one period of this length.
    #[arg(long, conflicts_with = "window")]
    pub period: Option<String>,
    /// Tapered window `lo,hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Largest accepted out-of-band energy fraction.
    #[arg(long)]
    pub tol: Option<String>,
    /// `.csv` for `omega,magnitude`, `.json` for the full report.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// Search interval `lo,hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<String>,
    #[arg(long)]
    pub scan_dt: Option<String>,
    #[arg(long)]
    pub tol: Option<String>,
    /// `.csv` for the zeros, `.json` for zeros and local frequencies.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DynrangeArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// `lo,hi` or `auto`.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub region: String,
    /// `.json` for the report, `.csv` for `t,value` samples over the domain.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    pub family: BoundFamilyArg,
    #[arg(long)]
    pub n: usize,
    /// Spacing between adjacent shifts.
    #[arg(long)]
    pub eps: String,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// `lo,hi` or `auto`.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub region: String,
    #[arg(long, default_value_t = 256)]
    pub precision_bits: u32,
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[arg(long)]
    pub spec: PathBuf,
    /// A number, or `auto-critical` for the smallest safe positive lift.
    #[arg(long, allow_hyphen_values = true)]
    pub lift: String,
    #[arg(long, default_value_t = 1024)]
    pub grid: usize,
    /// `.json` for the full potential (input to `eigen`), `.csv` for `x,V`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EigenArgs {
    /// Potential JSON written by `potential`.
    #[arg(long)]
    pub potential: PathBuf,
    /// `.csv` for `x,psi_lifted,ground_vec`, `.json` for the summary.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Core(#[from] superosc_core::Error),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    /// 1 for bad input, 2 for numerical failure.
    pub fn exit_code(&self) -> u8 {
        use superosc_core::Error as E;
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Core(e) => match e {
                E::InvalidParameter(_) | E::Incommensurate(_) | E::NotExpandable(_) | E::GridPeriodMismatch { .. } => 1,
                E::NotPositiveDefinite { .. }
                | E::BoundRegime(_)
                | E::SingularPotential { .. }
                | E::NotConverged { .. }
                | E::Precision(_) => 2,
            },
        }
    }
}

impl From<String> for CliError {
    fn from(s: String) -> Self {
        CliError::Invalid(s)
    }
}

type Outcome = Result<Value, CliError>;

/// Parses `args` (program name first), runs the subcommand, prints the
/// summary line to `stdout` and diagnostics to `stderr`. Returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    if !text.contains("Usage:") {
                        let usage = <Cli as clap::CommandFactory>::command().render_usage();
                        let _ = writeln!(stderr, "\n{usage}");
                    }
                    1
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(summary) => {
            let _ = writeln!(stdout, "{summary}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command) -> Outcome {
    match command {
        Command::Synth(a) => synth(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Zeros(a) => zeros(a),
        Command::Dynrange(a) => dynrange(a),
        Command::Bounds(a) => bounds(a),
        Command::Compare(a) => compare(a),
        Command::Potential(a) => potential(a),
        Command::Eigen(a) => eigen(a),
    }
}

fn out_display(out: &Option<PathBuf>) -> Value {
    out.as_ref().map_or(Value::Null, |p| Value::String(p.display().to_string()))
}

fn optional_number(s: &Option<String>) -> Result<Option<f64>, CliError> {
    Ok(s.as_deref().map(parse_number).transpose()?)
}

fn region_arg(spec: &ProductSignalSpec, s: &str) -> Result<(f64, f64), CliError> {
    if s.trim().eq_ignore_ascii_case("auto") {
        Ok(default_region(spec)?)
    } else {
        Ok(parse_interval(s)?)
    }
}

fn synth(a: &SynthArgs) -> Outcome {
    let family: Family = a.family.into();
    let request = if let Family::SincVaried = family {
        let bandlimits = parse_list(&a.omega)?;
        if a.n.is_some_and(|n| n != bandlimits.len()) {
            return Err(CliError::Invalid(format!("--n does not match the {} bandlimits given", bandlimits.len())));
        }
        SuperoscillationRequest {
            family,
            omega: bandlimits.iter().sum(),
            count: bandlimits.len(),
            displacements: Displacements::List(Vec::new()),
            bandlimits,
        }
    } else {
        let omega = parse_number(&a.omega)?;
        let count = a.n.ok_or_else(|| CliError::Invalid("--n is required for this family".into()))?;
        let displacements = match (&a.eps, &a.local_omega) {
            (Some(e), None) => Displacements::List(parse_list(e)?),
            (None, Some(w)) => Displacements::LocalFrequency(parse_number(w)?),
            _ => return Err(CliError::Invalid("exactly one of --eps and --local-omega is required".into())),
        };
        SuperoscillationRequest { family, omega, count, displacements, bandlimits: Vec::new() }
    };
    let spec = request.build()?.canonical();
    if let Some(out) = &a.out {
        io::write_spec(out, &spec)?;
    }
    Ok(json!({
        "command": "synth",
        "factors": spec.len(),
        "omega_total": spec.bandlimit(),
        "period": spec.period(),
        "prescribed_zeros": spec.prescribed_zeros(),
        "out": out_display(&a.out),
    }))
}

fn spectrum(a: &SpectrumArgs) -> Outcome {
    let spec = io::read_spec(&a.spec)?;
    let omega = spec.bandlimit();
    let window = match (optional_number(&a.period)?, &a.window) {
        (Some(period), _) => {
            if spec.period().is_none() {
                return Err(CliError::Invalid("--period needs a periodic (all-sine, commensurate) product".into()));
            }
            if period <= 0.0 {
                return Err(CliError::Invalid(format!("--period must be positive, got {period}")));
            }
            let kmax = (omega * period / (2.0 * std::f64::consts::PI)).ceil() as usize;
            let samples = (4 * kmax + 4).max(64);
            SpectrumWindow::Periodic { period, samples: samples + samples % 2 }
        }
        (None, Some(w)) => {
            let (lo, hi) = parse_interval(w)?;
            SpectrumWindow::Windowed {
                lo,
                hi,
                dt: std::f64::consts::PI / (4.0 * omega),
                taper: Taper::Tukey { alpha: 0.5 },
            }
        }
        (None, None) => SpectrumWindow::auto(&spec),
    };
    let default_tol = match window {
        SpectrumWindow::Periodic { .. } => 1e-10,
        SpectrumWindow::Windowed { .. } => 1e-6,
    };
    let tol = optional_number(&a.tol)?.unwrap_or(default_tol);
    let r = verify_bandlimit(&spec, tol, window)?;
    if let Some(out) = &a.out {
        match Format::of(out)? {
            Format::Csv => io::write_spectrum_csv(out, &r)?,
            Format::Json => io::write_json(out, &r)?,
        }
    }
    Ok(json!({
        "command": "spectrum",
        "omega": r.omega,
        "bins": r.frequencies.len(),
        "in_band_energy": r.in_band_energy,
        "out_band_energy": r.out_band_energy,
        "total_energy": r.total_energy,
        "relative_out_of_band": r.relative_out_of_band(),
        "tolerance": r.tolerance,
        "passed": r.passed,
        "reference_deviation": r.reference_deviation,
        "out": out_display(&a.out),
    }))
}

fn zeros(a: &ZerosArgs) -> Outcome {
    let spec = io::read_spec(&a.spec)?;
    let (lo, hi) = match &a.range {
        Some(r) => parse_interval(r)?,
        None => {
            let region = default_region(&spec)?;
            default_domain(&spec, 0.5 * (region.0 + region.1))
        }
    };
    let scan_dt = match optional_number(&a.scan_dt)? {
        Some(dt) => dt,
        None => {
            let z = spec.prescribed_zeros();
            let gap = z.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
            let lattice = spec.factors().iter().map(|f| f.zero_spacing()).fold(f64::INFINITY, f64::min);
            gap.min(lattice) / 8.0
        }
    };
    let tol = optional_number(&a.tol)?.unwrap_or(DEFAULT_ZERO_TOL);
    let z = find_zeros(&spec, lo, hi, scan_dt, tol)?;
    let local = if z.zeros.len() >= 2 { local_frequencies(&z)? } else { Vec::new() };
    if let Some(out) = &a.out {
        match Format::of(out)? {
            Format::Csv => io::write_csv(out, &["t"], z.zeros.iter().map(|t| vec![*t]))?,
            Format::Json => io::write_json(out, &json!({ "zeros": z, "local_frequencies": local }))?,
        }
    }
    let max_local = local.iter().map(|p| p.1).fold(f64::NAN, f64::max);
    Ok(json!({
        "command": "zeros",
        "range": [lo, hi],
        "count": z.zeros.len(),
        "touch_candidates": z.touch_candidates.len(),
        "max_local_frequency": max_local,
        "max_local_frequency_over_bandlimit": max_local / spec.bandlimit(),
        "out": out_display(&a.out),
    }))
}

fn dynrange(a: &DynrangeArgs) -> Outcome {
    let spec = io::read_spec(&a.spec)?;
    let region = region_arg(&spec, &a.region)?;
    let r = dynamic_range(&spec, Some(region), DEFAULT_RESOLUTION)?;
    if let Some(out) = &a.out {
        match Format::of(out)? {
            Format::Json => io::write_json(out, &r)?,
            Format::Csv => {
                let (t0, t1) = r.domain;
                let dt = (t1 - t0) / (PLOT_SAMPLES - 1) as f64;
                io::write_samples_csv(out, &sample_uniform(&spec, t0, dt, PLOT_SAMPLES)?)?
            }
        }
    }
    Ok(json!({
        "command": "dynrange",
        "sigma": r.sigma,
        "global_max_abs": r.global_max_abs,
        "global_argmax": r.global_argmax,
        "superosc_max_abs": r.superosc_max_abs,
        "superosc_argmax": r.superosc_argmax,
        "region": [r.region.0, r.region.1],
        "domain": [r.domain.0, r.domain.1],
        "region_covers_maximum": r.region_covers_maximum,
        "out": out_display(&a.out),
    }))
}

fn bounds(a: &BoundsArgs) -> Outcome {
    let family = match a.family {
        BoundFamilyArg::SineTranslate => BoundFamily::SineTranslate,
        BoundFamilyArg::SincTranslate => BoundFamily::SincTranslate,
    };
    let eps = parse_number(&a.eps)?;
    let omega = std::f64::consts::PI;
    let b = sigma_bounds(family, a.n, eps, omega)?;
    let cfg = bound_configuration(family, a.n, eps, omega)?;
    let r = superosc_core::analysis::dynamic_range_on(&cfg.spec, cfg.domain, cfg.region, DEFAULT_RESOLUTION)?
        .with_bounds(b.lower, b.upper);
    Ok(json!({
        "command": "bounds",
        "family": family,
        "n": a.n,
        "eps": eps,
        "omega": omega,
        "lower": b.lower,
        "upper": b.upper,
        "sigma": r.sigma,
        "within": r.within_bounds(),
        "lobe_location": b.lobe_location,
        "midpoint": b.midpoint,
    }))
}

fn compare(a: &CompareArgs) -> Outcome {
    let spec = io::read_spec(&a.spec)?;
    let region = region_arg(&spec, &a.region)?;
    if a.precision_bits < 53 {
        return Err(CliError::Invalid(format!("--precision-bits must be at least 53, got {}", a.precision_bits)));
    }
    let c = compare_methods(&spec, Some(region), Precision::from_bits(a.precision_bits), DEFAULT_RESOLUTION)?;
    Ok(json!({
        "command": "compare",
        "sigma_multiplicative": c.multiplicative.sigma,
        "sigma_additive": c.additive.sigma,
        "ratio": c.ratio(),
        "region": [c.multiplicative.region.0, c.multiplicative.region.1],
        "domain": [c.multiplicative.domain.0, c.multiplicative.domain.1],
        "status": c.solution.status,
        "additive": AdditiveDocument::from(&c.solution),
    }))
}

fn describe_singularities(p: &PotentialSpec, crit: f64) -> String {
    const SHOWN: usize = 8;
    let xs: Vec<String> = p.singularities.iter().take(SHOWN).map(|s| format!("{:.6}", s.x)).collect();
    let more = p.singularities.len().saturating_sub(SHOWN);
    let list = if more > 0 { format!("{} and {more} more", xs.join(", ")) } else { xs.join(", ") };
    match p.status {
        PotentialStatus::CrossingSingularities => format!(
            "crossing singularities: psi + C changes sign, potential is unphysical; diverges at x = {list} \
             (C = {}, critical lift {crit})",
            p.lift
        ),
        _ => format!("touching singularity: psi + C reaches zero at x = {list} (C = {}, critical lift {crit})", p.lift),
    }
}

fn potential(a: &PotentialArgs) -> Outcome {
    let spec = io::read_spec(&a.spec)?;
    let psi = spec.expand_to_harmonics()?;
    let crit = critical_lift(&psi, LIFT_RESOLUTION);
    let w = if a.lift.trim().eq_ignore_ascii_case("auto-critical") {
        LiftedWavefunction::sufficient(psi, 1.0, LIFT_RESOLUTION)?
    } else {
        LiftedWavefunction::new(psi, parse_number(&a.lift)?)?
    };
    let p = build_potential(&w, a.grid)?;
    if !p.is_regular() {
        let c = if w.lift < 0.0 { crit.negative } else { crit.positive };
        return Err(CliError::Numerical(describe_singularities(&p, c)));
    }
    if let Some(out) = &a.out {
        match Format::of(out)? {
            Format::Json => io::write_json(out, &p)?,
            Format::Csv => io::write_potential_csv(out, &p)?,
        }
    }
    Ok(json!({
        "command": "potential",
        "n": p.n,
        "period": p.period,
        "C": p.lift,
        "critical_lift": crit.positive,
        "critical_lift_negative": crit.negative,
        "status": p.status,
        "sup_norm": p.sup_norm(),
        "out": out_display(&a.out),
    }))
}

fn eigen(a: &EigenArgs) -> Outcome {
    if Format::of(&a.potential)? != Format::Json {
        return Err(CliError::Invalid(format!(
            "{}: eigen reads the JSON written by `potential`",
            a.potential.display()
        )));
    }
    let p = io::read_potential(&a.potential)?;
    check_potential(&p)?;
    let r = solve_ground_state(&p)?;
    let summary = EigenSummary::from(&r);
    if let Some(out) = &a.out {
        match Format::of(out)? {
            Format::Json => io::write_json(out, &summary)?,
            Format::Csv => io::write_eigen_csv(out, &r)?,
        }
    }
    let mut v = serde_json::to_value(&summary).map_err(|e| CliError::Invalid(e.to_string()))?;
    v["command"] = json!("eigen");
    v["residual"] = json!(r.residual);
    v["out"] = out_display(&a.out);
    Ok(v)
}

fn check_potential(p: &PotentialSpec) -> Result<(), CliError> {
    let n = p.n;
    if p.x.len() != n || p.v.len() != n || p.psi_lifted.len() != n || p.singular.len() != n {
        return Err(CliError::Invalid(format!("potential arrays do not all have length n = {n}")));
    }
    if p.period <= 0.0 || p.period.is_nan() {
        return Err(CliError::Invalid(format!("potential period must be positive, got {}", p.period)));
    }
    Ok(())
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}
