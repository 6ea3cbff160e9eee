use clap::{Args, Parser, Subcommand, ValueEnum};
use invsq::checks::Suite;
use invsq::commands::{self, DispersiveGrid, Format, GridSpec, Input, KernelConfig, Profile, TransformKind};
use invsq::tolerances::{Hooks, Tolerances};
use invsq::{exit, CliError, CliResult};
use invsq_core::params::make_params;
use invsq_core::riesz::Direction;
use invsq_core::waveop::KernelOptions;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  2  invalid arguments, unreadable input or unwritable output
  3  domain error (subcritical coupling, order outside its window, pole, resonance, bad grid)
  4  verification failure (verify only; the report lists the failing checks)
  5  numerical non-convergence

Tolerance flags can also be set through INVSQ_TOL_<NAME>, e.g. INVSQ_TOL_KERNEL=1e-6.";

#[derive(Parser, Debug)]
#[command(name = "invsq", version, about = "Transforms, wave-operator and Riesz kernels for -Δ + a/|x|²", after_help = EXIT_CODES)]
struct Cli {
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[command(flatten)]
    tol: TolArgs,
    /// Scales every A⁺ coefficient; a sensitivity canary for `verify kernels`
    #[arg(long, global = true, hide = true, env = "INVSQ_HOOK_A_PLUS_SCALE")]
    hook_a_plus_scale: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct Problem {
    #[arg(long)]
    d: u32,
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
}

#[derive(Args, Debug)]
struct Modes {
    /// Single degree
    #[arg(long, conflicts_with = "k_max")]
    k: Option<u32>,
    /// All degrees 0..=k_max
    #[arg(long)]
    k_max: Option<u32>,
}

impl Modes {
    fn list(&self) -> Vec<u32> {
        match (self.k, self.k_max) {
            (Some(k), _) => vec![k],
            (None, Some(m)) => (0..=m).collect(),
            (None, None) => vec![0],
        }
    }
}

/// Either explicit s values or a log-spaced range.
#[derive(Args, Debug)]
struct Points {
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["rmin", "rmax", "n"])]
    s: Vec<f64>,
    #[arg(long)]
    rmin: Option<f64>,
    #[arg(long)]
    rmax: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    /// Add oracle and relgap columns
    #[arg(long)]
    oracle: bool,
}

impl Points {
    fn s_values(&self) -> CliResult<Vec<f64>> {
        if !self.s.is_empty() {
            return Ok(self.s.clone());
        }
        let (lo, hi, n) = (self.rmin.unwrap_or(0.3), self.rmax.unwrap_or(3.0), self.n.unwrap_or(8));
        if !(lo > 0.0 && hi > lo) || n < 2 {
            return Err(CliError::Usage("need 0 < rmin < rmax and n >= 2".into()));
        }
        Ok((0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect())
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Spectral indices, mode orders and admissible L^p intervals (JSON)
    Params {
        #[command(flatten)]
        problem: Problem,
        #[arg(long, default_value_t = 4)]
        k_max: u32,
        /// Orders of the R^alpha / W on W^{alpha,p} sweep; default is the window interior
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        alpha: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        beta: Vec<f64>,
    },
    /// Modified wave-operator kernel K~_k(r, s)
    Kernel {
        #[command(flatten)]
        problem: Problem,
        #[command(flatten)]
        modes: Modes,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[command(flatten)]
        points: Points,
    },
    /// Kernel of R^alpha, or of R^{-beta} with --direction inverse
    Riesz {
        #[command(flatten)]
        problem: Problem,
        #[command(flatten)]
        modes: Modes,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
        direction: DirectionArg,
        #[command(flatten)]
        points: Points,
    },
    /// Bessel, Hankel or wave-operator transform of one radial profile
    Transform {
        #[command(flatten)]
        problem: Problem,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = ProfileArg::Gaussian, conflicts_with = "input")]
        profile: ProfileArg,
        /// CSV of r,value samples, interpolated in log r onto the grid
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-3)]
        rmin: f64,
        #[arg(long, default_value_t = 40.0)]
        rmax: f64,
        #[arg(long, default_value_t = 4096)]
        n: usize,
    },
    /// sup |e^{-itL_a} f| for a radial Gaussian f
    Dispersive {
        #[command(flatten)]
        problem: Problem,
        #[arg(long, value_delimiter = ',', default_value = "1,2,5,10,20,35,50")]
        t: Vec<f64>,
        #[arg(long, default_value_t = 1e-3)]
        rmin: f64,
        #[arg(long, default_value_t = 400.0)]
        rmax: f64,
        /// Upper end of the spectral band
        #[arg(long, default_value_t = 8.0)]
        lmax: f64,
        /// Space grid size; sets the shared log step (default step 7e-4)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run verification suites and print a JSON report
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum DirectionArg {
    Forward,
    Inverse,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum KindArg {
    Bessel,
    Hankel,
    W,
    Wstar,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ProfileArg {
    Gaussian,
    Bump,
    Adapted,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SuiteArg {
    Specfun,
    Transforms,
    Kernels,
    Riesz,
    Multiplier,
    Harmonics,
    All,
}

#[derive(Args, Debug, Default)]
struct TolArgs {
    #[arg(long, global = true, env = "INVSQ_TOL_WRONSKIAN")]
    tol_wronskian: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_INTEGRAL")]
    tol_integral: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_HYP_NEAR_ONE")]
    tol_hyp_near_one: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_PLANCHEREL")]
    tol_plancherel: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_INVOLUTION")]
    tol_involution: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_FREE_IDENTITY")]
    tol_free_identity: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_FREE_KERNEL")]
    tol_free_kernel: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_KERNEL")]
    tol_kernel: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_DIAGONAL")]
    tol_diagonal: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_GROWTH")]
    tol_growth: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_RIESZ")]
    tol_riesz: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_EVEN_CONTINUITY")]
    tol_even_continuity: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_APPENDIX_CAP")]
    tol_appendix_cap: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_PARSEVAL")]
    tol_parseval: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_UNITARITY")]
    tol_unitarity: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_INTERTWINING")]
    tol_intertwining: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_DISPERSIVE_FREE")]
    tol_dispersive_free: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_DISPERSIVE_BAND")]
    tol_dispersive_band: Option<f64>,
    #[arg(long, global = true, env = "INVSQ_TOL_SOBOLEV_BAND")]
    tol_sobolev_band: Option<f64>,
}

impl TolArgs {
    fn resolve(&self) -> Tolerances {
        let mut t = Tolerances::default();
        let pairs = [
            (self.tol_wronskian, &mut t.wronskian),
            (self.tol_integral, &mut t.integral),
            (self.tol_hyp_near_one, &mut t.hyp_near_one),
            (self.tol_plancherel, &mut t.plancherel),
            (self.tol_involution, &mut t.involution),
            (self.tol_free_identity, &mut t.free_identity),
            (self.tol_free_kernel, &mut t.free_kernel),
            (self.tol_kernel, &mut t.kernel),
            (self.tol_diagonal, &mut t.diagonal),
            (self.tol_growth, &mut t.growth),
            (self.tol_riesz, &mut t.riesz),
            (self.tol_even_continuity, &mut t.even_continuity),
            (self.tol_appendix_cap, &mut t.appendix_cap),
            (self.tol_parseval, &mut t.parseval),
            (self.tol_unitarity, &mut t.unitarity),
            (self.tol_intertwining, &mut t.intertwining),
            (self.tol_dispersive_free, &mut t.dispersive_free),
            (self.tol_dispersive_band, &mut t.dispersive_band),
            (self.tol_sobolev_band, &mut t.sobolev_band),
        ];
        for (v, slot) in pairs {
            if let Some(v) = v {
                *slot = v;
            }
        }
        t
    }
}

fn run(cli: Cli) -> CliResult<String> {
    let format = match cli.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let hooks = Hooks { a_plus_scale: cli.hook_a_plus_scale.unwrap_or(1.0) };
    match cli.cmd {
        Cmd::Params { problem, k_max, alpha, beta } => commands::cmd_params(problem.d, problem.a, k_max, &alpha, &beta),
        Cmd::Kernel { problem, modes, p, points } => {
            let cfg = KernelConfig { params: make_params(problem.d, problem.a)?, ks: modes.list(), r: points.r, s: points.s_values()?, oracle: points.oracle };
            let opts = KernelOptions { a_plus_scale: hooks.a_plus_scale, ..KernelOptions::default() };
            Ok(commands::cmd_kernel(&cfg, p, &opts)?.render(format))
        }
        Cmd::Riesz { problem, modes, alpha, direction, points } => {
            let cfg = KernelConfig { params: make_params(problem.d, problem.a)?, ks: modes.list(), r: points.r, s: points.s_values()?, oracle: points.oracle };
            let dir = match direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Inverse => Direction::Inverse,
            };
            Ok(commands::cmd_riesz(&cfg, alpha, dir)?.render(format))
        }
        Cmd::Transform { problem, k, kind, profile, input, rmin, rmax, n } => {
            let params = make_params(problem.d, problem.a)?;
            let kind = match kind {
                KindArg::Bessel => TransformKind::Bessel,
                KindArg::Hankel => TransformKind::Hankel,
                KindArg::W => TransformKind::W,
                KindArg::Wstar => TransformKind::WStar,
            };
            let input = match input {
                Some(path) => Input::Samples(commands::read_samples(&std::fs::read_to_string(path)?)?),
                None => Input::Profile(match profile {
                    ProfileArg::Gaussian => Profile::Gaussian,
                    ProfileArg::Bump => Profile::Bump,
                    ProfileArg::Adapted => Profile::Adapted,
                }),
            };
            Ok(commands::cmd_transform(&params, k, kind, &GridSpec { r_min: rmin, r_max: rmax, n }, &input)?.render(format))
        }
        Cmd::Dispersive { problem, t, rmin, rmax, lmax, n } => {
            let params = make_params(problem.d, problem.a)?;
            let h = match n {
                Some(n) => commands::step_from_count(rmin, rmax, n)?,
                None => DispersiveGrid::default().h,
            };
            let (table, warnings) = commands::cmd_dispersive(&params, &t, &DispersiveGrid { r_min: rmin, r_max: rmax, l_max: lmax, h })?;
            for w in warnings {
                eprintln!("warning: t = {}: spectral mass {:.3e} sits where the phase is under-resolved", w.t, w.unresolved_fraction);
            }
            Ok(table.render(format))
        }
        Cmd::Verify { suite } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Specfun => vec![Suite::Specfun],
                SuiteArg::Transforms => vec![Suite::Transforms],
                SuiteArg::Kernels => vec![Suite::Kernels],
                SuiteArg::Riesz => vec![Suite::Riesz],
                SuiteArg::Multiplier => vec![Suite::Multiplier],
                SuiteArg::Harmonics => vec![Suite::Harmonics],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let (json, report) = commands::cmd_verify(&suites, &cli.tol.resolve(), &hooks);
            if report.passed() {
                Ok(json)
            } else {
                // the report still goes out before the failing exit
                emit(&cli.out, &json)?;
                Err(CliError::VerifyFailed(report.failures()))
            }
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let out = cli.out.clone();
    match run(cli).and_then(|text| emit(&out, &text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
