//! `qsp`: normal ordering, actions, Hopf costructures and identity
//! verification for the Cartan calculus on the quantum superplane.

mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use qsp_core::algebra::CalculusType;
use qsp_core::calculus::{identity_catalog, verify_identity, Calculus, CalculusError, VerifyResult};
use qsp_core::coeffs::Mode;
use qsp_core::covariance::{family_side_conditions, solve_family, CovarianceError};
use qsp_core::exprio::{eval_dual_str, ExprError, Report, ReportFormat};
use qsp_core::hopf::{coproduct_a, coproduct_u, left_act, pair, HopfError};

use config::{parse_format, parse_mode, Overrides, Settings};

#[derive(Parser)]
#[command(name = "qsp", version, about = "Exact Cartan calculus on the quantum superplane")]
struct Cli {
    /// Calculus type: I, II or III [default: II].
    #[arg(long = "type", global = true, value_parser = parse_mode)]
    mode: Option<Mode>,
    /// Specialise a parameter, e.g. `r=1` or `q=3/2`; repeatable.
    #[arg(long = "param", global = true, value_name = "NAME=RAT")]
    params: Vec<String>,
    /// Exponent bound for basis sweeps [default: 6].
    #[arg(long, global = true, value_name = "D")]
    bound: Option<i32>,
    /// Output format: text or json [default: text].
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<ReportFormat>,
    /// File of `key=value` defaults (type, param, bound, format).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical normal form of an expression.
    Normalize { expr: String },
    /// Compare two expressions written `LHS == RHS`.
    Check { equation: String },
    /// Apply an operator to a function or form.
    Act {
        op: String,
        expr: String,
        /// Read OP as an element of the dual algebra (T, K, Nb).
        #[arg(long)]
        dual: bool,
    },
    /// Pair a dual-algebra element with a function.
    Pair { u: String, a: String },
    /// Coproduct of a function, or of a dual element with `--dual`.
    Coproduct {
        expr: String,
        #[arg(long)]
        dual: bool,
    },
    /// Run catalog identities and emit a report.
    Verify {
        /// Run every applicable identity (the default).
        #[arg(long, value_parser = ["all"], conflicts_with = "id")]
        suite: Option<String>,
        /// Identity ID; `*` and `?` wildcards select several.
        #[arg(long)]
        id: Option<String>,
    },
    /// Solve the covariance constraints for the three families.
    SolveTypes,
}

/// Failure classes mapped to exit codes.
enum Failure {
    /// Bad usage or input: exit 2.
    Input(String),
    /// An engine invariant broke: exit 3.
    Invariant(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Invariant(e.to_string())
        }
    }
}

impl From<HopfError> for Failure {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::NotAFunction(_) => Failure::Input(e.to_string()),
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<CovarianceError> for Failure {
    fn from(e: CovarianceError) -> Self {
        match e {
            CovarianceError::UnderdeterminedSystem(_) | CovarianceError::InconsistentSideConditions(_) => {
                Failure::Input(e.to_string())
            }
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<CalculusError> for Failure {
    fn from(e: CalculusError) -> Self {
        match e {
            CalculusError::NotAFunctionArgument(_)
            | CalculusError::UnknownIdentity(_)
            | CalculusError::NotApplicable(_) => Failure::Input(e.to_string()),
            CalculusError::Expr(e) => e.into(),
            CalculusError::Hopf(e) => e.into(),
            CalculusError::Covariance(e) => e.into(),
            CalculusError::Algebra(_) => Failure::Invariant(e.to_string()),
        }
    }
}

/// What a command printed and whether it certifies a failure.
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failed: false }
    }
}

fn build_calculus(s: &Settings) -> Result<Calculus, Failure> {
    let ct = CalculusType::for_mode(s.mode);
    if s.assignment.is_empty() {
        Calculus::new(ct).map_err(|e| Failure::Invariant(e.to_string()))
    } else {
        Calculus::specialized(&ct, s.assignment.clone()).map_err(|e| Failure::Input(format!("bad parameter assignment: {e}")))
    }
}

fn as_json(s: &Settings, fields: serde_json::Value) -> String {
    let mut obj = json!({ "type": s.mode.label() });
    if let (Some(o), Some(f)) = (obj.as_object_mut(), fields.as_object()) {
        o.extend(f.clone());
    }
    obj.to_string()
}

fn single(s: &Settings, text: String) -> Outcome {
    match s.format {
        ReportFormat::Text => Outcome::ok(text),
        ReportFormat::Json => Outcome::ok(as_json(s, json!({ "result": text }))),
    }
}

fn check(s: &Settings, calc: &Calculus, equation: &str) -> Result<Outcome, Failure> {
    let (lhs, rhs) = equation
        .split_once("==")
        .ok_or_else(|| Failure::Input("expected `LHS == RHS`".to_owned()))?;
    let r = calc.parse(lhs)?.sub(&calc.parse(rhs)?);
    let residual = calc.text(&r);
    let status = if r.is_zero() { "PASS" } else { "FAIL" };
    let text = match s.format {
        ReportFormat::Text if r.is_zero() => status.to_owned(),
        ReportFormat::Text => format!("{status} {residual}"),
        ReportFormat::Json => as_json(s, json!({ "status": status, "residual": residual })),
    };
    Ok(Outcome {
        text,
        failed: !r.is_zero(),
    })
}

fn glob_ids(pattern: &str, calc: &Calculus) -> Vec<&'static str> {
    let m = wildmatch::WildMatch::new(pattern);
    identity_catalog()
        .into_iter()
        .filter(|spec| m.matches(spec.id) && spec.applies_to(calc.ct()))
        .map(|spec| spec.id)
        .collect()
}

/// Runs the selected identities in parallel; results keep catalog order.
fn run_identities(ids: &[&str], calc: &Calculus, bound: i32) -> Result<Vec<VerifyResult>, Failure> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(ids.len().max(1));
    let mut slots: Vec<Option<Result<VerifyResult, CalculusError>>> = vec![None; ids.len()];
    std::thread::scope(|scope| {
        let chunks: Vec<_> = slots.chunks_mut(ids.len().div_ceil(workers).max(1)).collect();
        let mut start = 0;
        for chunk in chunks {
            let these = &ids[start..start + chunk.len()];
            start += chunk.len();
            scope.spawn(move || {
                for (slot, id) in chunk.iter_mut().zip(these) {
                    *slot = Some(verify_identity(id, calc, bound));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.expect("every slot is filled").map_err(Failure::from))
        .collect()
}

fn verify(s: &Settings, calc: &Calculus, id: Option<&str>) -> Result<Outcome, Failure> {
    let ids: Vec<&str> = match id {
        Some(pat) if pat.contains(['*', '?']) => {
            let ids = glob_ids(pat, calc);
            if ids.is_empty() {
                return Err(Failure::Input(format!("no applicable identity matches `{pat}`")));
            }
            ids
        }
        Some(exact) => vec![exact],
        None => glob_ids("*", calc),
    };
    let results = run_identities(&ids, calc, s.bound)?;
    let report = Report::new(s.mode.label(), &s.assignment, &results);
    Ok(Outcome {
        text: report.emit(s.format).trim_end().to_owned(),
        failed: report.has_unexpected_failure(),
    })
}

fn solve_types(s: &Settings) -> Result<Outcome, Failure> {
    let labels = ["Q", "Q11", "Q12", "Q21", "Q22", "Q'"];
    let mut text = Vec::new();
    let mut entries = Vec::new();
    for mode in [Mode::TypeI, Mode::TypeII, Mode::TypeIII] {
        let (ps, side) = family_side_conditions(mode);
        let names = ps.vars().to_vec();
        let ct = solve_family(ps, &side)?;
        let given: Vec<(String, String)> = side
            .iter()
            .map(|(u, v)| (u.name().to_owned(), v.fmt_with(&names)))
            .collect();
        let solved: Vec<(String, String)> = labels
            .iter()
            .zip(ct.values())
            .filter(|(l, _)| !given.iter().any(|(g, _)| g == *l))
            .map(|(l, v)| ((*l).to_owned(), v.fmt_with(&names)))
            .collect();
        let cond: Vec<String> = given.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        text.push(format!("Type {}: {}", mode.label(), cond.join(", ")));
        for (k, v) in &solved {
            text.push(format!("  {k} = {v}"));
        }
        let pairs = |v: &[(String, String)]| -> Vec<serde_json::Value> {
            v.iter().map(|(k, x)| json!({ "name": k, "value": x })).collect()
        };
        entries.push(json!({
            "type": mode.label(),
            "sideConditions": pairs(&given),
            "values": pairs(&solved),
        }));
    }
    Ok(Outcome::ok(match s.format {
        ReportFormat::Text => text.join("\n"),
        ReportFormat::Json => json!({ "families": entries }).to_string(),
    }))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let flags = Overrides {
        mode: cli.mode,
        params: cli.params,
        bound: cli.bound,
        format: cli.format,
    };
    let s = config::resolve(flags, cli.config.as_deref()).map_err(Failure::Input)?;
    if let Command::SolveTypes = cli.command {
        return solve_types(&s);
    }
    let calc = build_calculus(&s)?;
    let names = calc.names().to_vec();
    match &cli.command {
        Command::Normalize { expr } => Ok(single(&s, calc.text(&calc.parse(expr)?))),
        Command::Check { equation } => check(&s, &calc, equation),
        Command::Act { op, expr, dual } => {
            let f = calc.parse(expr)?;
            let r = if *dual {
                left_act(&calc, &eval_dual_str(op, &calc)?, &f)?
            } else {
                calc.act(&calc.parse(op)?, &f)?
            };
            Ok(single(&s, calc.text(&r)))
        }
        Command::Pair { u, a } => {
            let v = pair(&calc, &eval_dual_str(u, &calc)?, &calc.parse(a)?)?;
            Ok(single(&s, v.fmt_with(&names)))
        }
        Command::Coproduct { expr, dual } => {
            let text = if *dual {
                coproduct_u(&eval_dual_str(expr, &calc)?).text(&names)
            } else {
                coproduct_a(&calc, &calc.parse(expr)?)?.text(&names)
            };
            Ok(single(&s, text))
        }
        Command::Verify { id, .. } => verify(&s, &calc, id.as_deref()),
        Command::SolveTypes => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // A closed pipe downstream is not an engine failure.
            let _ = writeln!(std::io::stdout(), "{}", out.text);
            ExitCode::from(u8::from(out.failed))
        }
        Err(f) => {
            eprintln!("qsp: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
