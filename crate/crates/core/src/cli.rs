//! Command-line front end.
//!
//! [`run`] takes the argument vector and returns the exit code together with
//! the text written to standard output and standard error, so every
//! subcommand can be exercised in tests without spawning a process.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when an internal
//! consistency check fails.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::center::{
    check_membership, inner_window, make_generator, solve_component, CenterError, GeneratorSpec,
    Variant,
};
use crate::gentle::{build_lambda, GentleQuiver, OmegaParams};
use crate::hom::{hom_basis, hom_dim_closed_form};
use crate::model::{emit_ar_dot, Family, Model, Window};
use crate::ring::{reconcile, theorem_case};
use crate::{acceptance, with_field, Field};

#[derive(Debug, Parser)]
#[command(
    name = "gentle-center",
    version,
    about = "Graded centers of derived discrete algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
}

impl ParamArgs {
    fn params(&self) -> Result<OmegaParams, Failure> {
        OmegaParams::new(self.r, self.n, self.m).map_err(|e| Failure::input(e.to_string()))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a quiver file: gentleness, one cycle, clock condition.
    Validate { file: PathBuf },
    /// Print the quiver of Λ(r, n, m) in the text format.
    Lambda {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Basis of Hom(V, Σ^p V) and its closed-form dimension.
    Hom {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        index: u32,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long)]
        p: u32,
    },
    /// Solve for the degree-p component of the center on a window.
    Center {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = Variant::Graded)]
        variant: Variant,
        #[arg(long, default_value_t = 3)]
        field: u32,
        /// Outer window half-width; the inner window is derived from the margin.
        #[arg(long, default_value_t = 10)]
        window: i64,
        /// Check one explicit element instead of solving, e.g. `eta'(2)`,
        /// `eta''(0)`, `eta0(1)`, `eta^2`, `id`.
        #[arg(long)]
        generator: Option<GeneratorSpec>,
    },
    /// Presentation of the center; optionally reconcile it with the solver.
    Ring {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 3)]
        char: u32,
        #[arg(long, default_value_t = Variant::Graded)]
        variant: Variant,
        #[arg(long)]
        reconcile: bool,
        /// Highest degree compared by `--reconcile` (default 2n).
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, default_value_t = 10)]
        window: i64,
    },
    /// Run the acceptance checks.
    Check {
        /// Run every check.
        #[arg(long)]
        grid: bool,
        /// Run only the listed checks (1-9).
        #[arg(long = "only", value_name = "ID")]
        only: Vec<u8>,
    },
    /// Auslander-Reiten style diagram of a window in dot format.
    Ar {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 2)]
        window: i64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
    stdout: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
            stdout: String::new(),
        }
    }

    fn consistency(message: impl Into<String>, stdout: String) -> Self {
        Failure {
            code: 2,
            message: message.into(),
            stdout,
        }
    }
}

impl From<CenterError> for Failure {
    fn from(e: CenterError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<crate::gf::GfError> for Failure {
    fn from(e: crate::gf::GfError) -> Self {
        Failure::input(e.to_string())
    }
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = match cli.command {
        Command::Check { grid, only } => check(grid, &only),
        command => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(1)
                .build()
                .expect("single-thread pool");
            pool.install(|| dispatch(command))
        }
    };
    match result {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: f.stdout,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Lambda { params } => Ok(build_lambda(params.params()?).to_text()),
        Command::Hom {
            params,
            family,
            index,
            a,
            b,
            p,
        } => hom(params.params()?, family, index, a, b, p),
        Command::Center {
            params,
            p,
            variant,
            field,
            window,
            generator,
        } => {
            let params = params.params()?;
            let outer = window_arg(window)?;
            with_field!(field, F => center::<F>(params, p, variant, outer, generator))?
        }
        Command::Ring {
            params,
            char,
            variant,
            reconcile,
            bound,
            window,
        } => ring(params.params()?, char, variant, reconcile, bound, window),
        Command::Ar { params, window } => {
            let model = Model::new(params.params()?);
            emit_ar_dot(&model, window_arg(window)?).map_err(|e| Failure::input(e.to_string()))
        }
        Command::Check { .. } => unreachable!("handled by run"),
    }
}

fn window_arg(w: i64) -> Result<Window, Failure> {
    if w < 0 {
        Err(Failure::input(format!(
            "window must be nonnegative, got {w}"
        )))
    } else {
        Ok(Window::new(w))
    }
}

fn validate(path: &std::path::Path) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let quiver = GentleQuiver::parse(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let mut out = String::new();
    let violations = quiver.gentle_violations();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let clock = match quiver.clock_condition() {
        Ok(true) => "satisfied",
        Ok(false) => "fails",
        Err(_) => "not applicable",
    };
    writeln!(
        out,
        "gentle: {}, one-cycle: {}, clock condition: {}",
        yes_no(violations.is_empty()),
        yes_no(quiver.is_one_cycle()),
        clock
    )
    .unwrap();
    for v in violations {
        writeln!(out, "violation: {v}").unwrap();
    }
    if let Ok((cw, acw)) = quiver.clock_counts() {
        writeln!(out, "relations: {cw} clockwise, {acw} anticlockwise").unwrap();
    }
    Ok(out)
}

fn hom(
    params: OmegaParams,
    family: Family,
    index: u32,
    a: i64,
    b: i64,
    p: u32,
) -> Result<String, Failure> {
    let model = Model::new(params);
    let v = model
        .vertex(family, index, a, b)
        .map_err(|e| Failure::input(e.to_string()))?;
    let space = hom_basis(&model, &v, p).map_err(|e| Failure::input(e.to_string()))?;
    let closed = hom_dim_closed_form(&model, &v, p).map_err(|e| Failure::input(e.to_string()))?;
    let mut out = String::new();
    writeln!(out, "source: {}", space.source).unwrap();
    writeln!(out, "target: {}", space.target).unwrap();
    let names: Vec<String> = space.basis.iter().map(|b| b.to_string()).collect();
    writeln!(out, "basis: [{}]", names.join(", ")).unwrap();
    writeln!(out, "dim: {}", space.dim()).unwrap();
    writeln!(out, "closed form: {closed}").unwrap();
    if space.dim() != closed as usize {
        return Err(Failure::consistency("model and closed form disagree", out));
    }
    Ok(out)
}

fn center<F: Field>(
    params: OmegaParams,
    p: u32,
    variant: Variant,
    outer: Window,
    generator: Option<GeneratorSpec>,
) -> Result<String, Failure> {
    let model = Model::new(params);
    let inner = inner_window(params, outer)?;
    let mut out = String::new();
    writeln!(
        out,
        "params: {params}, degree: {p}, variant: {variant}, field: F{}",
        F::characteristic()
    )
    .unwrap();
    writeln!(
        out,
        "window: outer {}, inner {}",
        outer.half_width, inner.half_width
    )
    .unwrap();
    if let Some(spec) = generator {
        let el = make_generator::<F>(&model, spec, outer)?.with_variant(variant);
        if el.degree() != p {
            return Err(Failure::input(format!(
                "{spec} has degree {}, not {p}",
                el.degree()
            )));
        }
        match check_membership(&model, &el, inner)? {
            None => writeln!(out, "{spec}: member").unwrap(),
            Some(v) => writeln!(out, "{spec}: not a member: {v}").unwrap(),
        }
        return Ok(out);
    }
    let sol = solve_component::<F>(&model, p, variant, outer, inner)?;
    writeln!(out, "dim: {}", sol.dim()).unwrap();
    writeln!(out, "global: {}", sol.global_dim()).unwrap();
    for (class, d) in &sol.class_dims {
        writeln!(out, "class {class}: {d}").unwrap();
    }
    Ok(out)
}

fn ring(
    params: OmegaParams,
    char: u32,
    variant: Variant,
    with_reconcile: bool,
    bound: Option<u32>,
    window: i64,
) -> Result<String, Failure> {
    if !crate::gf::is_prime(char) {
        return Err(Failure::input(format!(
            "characteristic {char} is not a prime"
        )));
    }
    if !with_reconcile {
        return Ok(format!("{}\n", theorem_case(params, char, variant)));
    }
    let outer = window_arg(window)?;
    let bound = bound.unwrap_or(2 * params.n() as u32);
    let report = with_field!(char, F => reconcile::<F>(params, variant, bound, outer))??;
    let out = format!("{report}\n");
    if report.mismatch() {
        Err(Failure::consistency(
            "solver and presentation disagree",
            out,
        ))
    } else {
        Ok(out)
    }
}

fn check(grid: bool, only: &[u8]) -> Result<String, Failure> {
    let ids: Vec<u8> = if grid {
        acceptance::ALL.to_vec()
    } else if only.is_empty() {
        return Err(Failure::input("check needs --grid or --only ID"));
    } else {
        only.to_vec()
    };
    let mut out = String::new();
    let mut failed = 0;
    for id in ids {
        let report =
            acceptance::run(id).ok_or_else(|| Failure::input(format!("no check with id {id}")))?;
        if !report.passed {
            failed += 1;
        }
        writeln!(out, "{report}").unwrap();
    }
    if failed > 0 {
        Err(Failure::consistency(
            format!("{failed} check(s) failed"),
            out,
        ))
    } else {
        Ok(out)
    }
}
