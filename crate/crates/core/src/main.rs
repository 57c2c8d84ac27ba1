use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use gammacert::certify::{
    self, GridSpec, Status, Theorem1Inputs, Theorem2Inputs, VerificationReport,
};
use gammacert::functions::{self, HFunction};
use gammacert::{Enclosure, Error};

const USAGE_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "gammacert",
    version,
    about = "Certified monotonicity checks for gamma-function ratios"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest n for the sequence checks.
    #[arg(long, default_value_t = 200, global = true)]
    n_max: u64,

    /// Left end of the F grid; the G grid starts at the larger of this and 1 + 2^-10.
    #[arg(long, default_value_t = 0.0, global = true)]
    grid_from: f64,

    #[arg(long, default_value_t = 50.0, global = true)]
    grid_to: f64,

    #[arg(long, default_value_t = 0.01, global = true)]
    grid_step: f64,

    /// Output file, or directory for report-all. Standard output by default.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an enclosure of one function value.
    Eval {
        #[arg(value_enum)]
        target: Target,
        /// x for real-valued targets, n for omega and omega_term.
        arg: String,
    },
    /// Replay one result and print its report.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
    },
    /// Tabulate a unit-ball volume sequence.
    Sequence {
        n_from: u64,
        n_to: u64,
        #[arg(value_enum)]
        exponent: Exponent,
    },
    /// Run every verification and write one JSON report each plus a summary.
    ReportAll,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "omega")]
    Omega,
    #[value(name = "omega_term")]
    OmegaTerm,
    #[value(name = "q")]
    Q,
    #[value(name = "h")]
    H,
    #[value(name = "h1")]
    H1,
    #[value(name = "h2")]
    H2,
    #[value(name = "h2p")]
    H2p,
    #[value(name = "h2pp")]
    H2pp,
    #[value(name = "h2ppp")]
    H2ppp,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Theorem {
    Lemma2,
    Theorem1,
    Theorem2,
    Remark1,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Exponent {
    /// Omega_n
    #[value(name = "unit")]
    Unit,
    /// Omega_n^(1/n)
    #[value(name = "inv_n")]
    InvN,
    /// Omega_n^(1/(n ln n))
    #[value(name = "inv_nlnn")]
    InvNlnN,
    /// Omega_n^(1/[ln(n^2/4+1) - ln(n/2+1)])
    #[value(name = "paper")]
    Paper,
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(format!("I/O error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, UsageError> {
    validate(cli)?;
    match &cli.command {
        Command::Eval { target, arg } => {
            let (argument, value) = eval(*target, arg)?;
            let text = match cli.format {
                Format::Text => format!(
                    "{} = {}\nlo  = {:?}\nhi  = {:?}\nmid = {:?}\n",
                    call_label(*target, &argument),
                    value,
                    value.lo(),
                    value.hi(),
                    value.mid()
                ),
                Format::Json => pretty(&json!({
                    "target": target_name(*target),
                    "argument": argument,
                    "lo": format!("{:?}", value.lo()),
                    "hi": format!("{:?}", value.hi()),
                    "mid": value.mid(),
                })),
            };
            emit(cli.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify { theorem } => {
            let report = verify(cli, *theorem)?;
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            emit(cli.out.as_deref(), &text)?;
            Ok(report.overall.exit_code() as u8)
        }
        Command::Sequence {
            n_from,
            n_to,
            exponent,
        } => {
            let text = sequence(*n_from, *n_to, *exponent, cli.format)?;
            emit(cli.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::ReportAll => report_all(cli),
    }
}

fn validate(cli: &Cli) -> Result<(), UsageError> {
    let finite = cli.grid_from.is_finite() && cli.grid_to.is_finite() && cli.grid_step.is_finite();
    if !finite || cli.grid_from >= cli.grid_to || cli.grid_step <= 0.0 {
        return Err(UsageError(format!(
            "invalid grid: from {} to {} step {}",
            cli.grid_from, cli.grid_to, cli.grid_step
        )));
    }
    if cli.grid_from < 0.0 {
        return Err(UsageError("grid must start at x >= 0".into()));
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("value serializes") + "\n"
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn target_name(t: Target) -> String {
    t.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn call_label(t: Target, argument: &serde_json::Value) -> String {
    format!("{}({argument})", target_name(t))
}

fn parse_real(s: &str) -> Result<f64, UsageError> {
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| UsageError(format!("expected a finite real argument, got {s:?}")))
}

fn parse_n(s: &str) -> Result<u64, UsageError> {
    s.parse::<u64>().map_err(|_| {
        UsageError(format!(
            "expected a nonnegative integer argument, got {s:?}"
        ))
    })
}

fn eval(target: Target, arg: &str) -> Result<(serde_json::Value, Enclosure), UsageError> {
    let h = |which: HFunction| -> Result<(serde_json::Value, Enclosure), UsageError> {
        let x = parse_real(arg)?;
        Ok((json!(x), functions::h_family(which, x)?))
    };
    match target {
        Target::Omega => {
            let n = parse_n(arg)?;
            Ok((json!(n), functions::unit_ball_volume(n)?))
        }
        Target::OmegaTerm => {
            let n = parse_n(arg)?;
            Ok((json!(n), functions::omega_sequence_term(n)?))
        }
        Target::F => {
            let x = parse_real(arg)?;
            Ok((json!(x), functions::f_ratio(x)?))
        }
        Target::G => {
            let x = parse_real(arg)?;
            Ok((json!(x), functions::g_power(x)?))
        }
        Target::Q => {
            let x = parse_real(arg)?;
            Ok((json!(x), functions::q_func(x)?))
        }
        Target::H => h(HFunction::H),
        Target::H1 => h(HFunction::H1),
        Target::H2 => h(HFunction::H2),
        Target::H2p => h(HFunction::H2p),
        Target::H2pp => h(HFunction::H2pp),
        Target::H2ppp => h(HFunction::H2ppp),
    }
}

fn verify(cli: &Cli, theorem: Theorem) -> Result<VerificationReport, UsageError> {
    Ok(match theorem {
        Theorem::Lemma2 => certify::verify_lemma2(),
        Theorem::Theorem1 => {
            let inputs = Theorem1Inputs {
                f_grid: GridSpec {
                    from: cli.grid_from,
                    to: cli.grid_to,
                    step: cli.grid_step,
                },
                ..Default::default()
            };
            certify::verify_theorem1_with(&inputs)?
        }
        Theorem::Theorem2 => {
            let from = cli.grid_from.max(certify::G_GRID_FROM);
            if from >= cli.grid_to {
                return Err(UsageError(format!(
                    "G grid is empty: from {from} to {}",
                    cli.grid_to
                )));
            }
            let inputs = Theorem2Inputs {
                g_grid: GridSpec {
                    from,
                    to: cli.grid_to,
                    step: cli.grid_step,
                },
                ..Default::default()
            };
            certify::verify_theorem2_with(cli.n_max, &inputs)?
        }
        Theorem::Remark1 => certify::verify_remark1(cli.n_max)?,
    })
}

fn sequence(
    n_from: u64,
    n_to: u64,
    exponent: Exponent,
    format: Format,
) -> Result<String, UsageError> {
    let min = match exponent {
        Exponent::Unit | Exponent::InvN => 1,
        Exponent::InvNlnN => 2,
        Exponent::Paper => 3,
    };
    if n_from < min || n_from >= n_to {
        return Err(UsageError(format!(
            "need {min} <= n_from < n_to for this exponent, got {n_from}..{n_to}"
        )));
    }
    let value = |n: u64| -> Result<Enclosure, Error> {
        match exponent {
            Exponent::Unit => functions::unit_ball_volume(n),
            Exponent::InvN => functions::omega_root_n(n),
            Exponent::InvNlnN => functions::omega_root_n_ln_n(n),
            Exponent::Paper => functions::omega_sequence_term(n),
        }
    };
    let mut rows = Vec::new();
    let mut prev: Option<Enclosure> = None;
    for n in n_from..=n_to {
        let v = value(n)?;
        let diff = prev.map(|p| {
            if v.strictly_below(&p) {
                "-"
            } else if p.strictly_below(&v) {
                "+"
            } else {
                "?"
            }
        });
        rows.push((n, v, diff));
        prev = Some(v);
    }
    Ok(match format {
        Format::Text => {
            let mut s = format!("{:>8} {:>24} {:>24} {:>5}\n", "n", "lo", "hi", "diff");
            for (n, v, d) in &rows {
                s += &format!(
                    "{n:>8} {:>24} {:>24} {:>5}\n",
                    format!("{:?}", v.lo()),
                    format!("{:?}", v.hi()),
                    d.unwrap_or("")
                );
            }
            s
        }
        Format::Json => pretty(&json!(rows
            .iter()
            .map(|(n, v, d)| json!({ "n": n, "value": v, "diff": d }))
            .collect::<Vec<_>>())),
    })
}

fn report_all(cli: &Cli) -> Result<u8, UsageError> {
    let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("reports"));
    fs::create_dir_all(&dir)?;
    let mut summary = Vec::new();
    let mut worst = Status::Pass;
    for theorem in [
        Theorem::Lemma2,
        Theorem::Theorem1,
        Theorem::Theorem2,
        Theorem::Remark1,
    ] {
        let report = verify(cli, theorem)?;
        let name = report.theorem.name();
        fs::write(dir.join(format!("{name}.json")), report.to_json() + "\n")?;
        worst = worst.min(report.overall);
        let failing: Vec<String> = report
            .failing_steps()
            .iter()
            .map(|s| s.to_string())
            .collect();
        summary.push((name, report.overall, failing));
    }
    let doc = json!({
        "overall": worst,
        "reports": summary
            .iter()
            .map(|(name, status, failing)| json!({
                "theorem": name,
                "overall": status,
                "file": format!("{name}.json"),
                "non_passing_steps": failing,
            }))
            .collect::<Vec<_>>(),
    });
    fs::write(dir.join("summary.json"), pretty(&doc))?;
    let mut text = String::new();
    for (name, status, _) in &summary {
        text += &format!("{name}: {}\n", status.label());
    }
    text += &format!("overall: {}\n", worst.label());
    match cli.format {
        Format::Text => print!("{text}"),
        Format::Json => print!("{}", pretty(&doc)),
    }
    Ok(worst.exit_code() as u8)
}
