mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use aqtab_core::oracle::{sweep_dirac_equivalence, sweep_overlap, sweep_positional_lemma};
use aqtab_core::{
    build_quasitableau, build_signed_tableau, classify, dirac_index_nonzero,
    mediocre_necessary_check, nonvanishing_nice, CriteriaError, LambdaParam, ParabolicDatum,
    RangeLabel, SweepReport,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Tableau calculus for A_q(lambda) of U(p,q): signed tableaux,
/// quasitableaux, range classification and non-vanishing verdicts.
#[derive(Parser)]
#[command(name = "aqtab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the signed tableau and the quasitableau.
    Build {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Mark each cell with its block index.
        #[arg(long)]
        show_blocks: bool,
    },
    /// Report which positivity ranges lambda lies in.
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide whether A_q(lambda) is nonzero.
    Nonvanishing {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide whether the Dirac index of A_q(lambda) is nonzero.
    Dirac {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run exhaustive verification sweeps.
    Verify {
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Gap bound for the lambda grid; defaults to n_max + 2.
        #[arg(long)]
        span: Option<usize>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// JSON file with {"pairs": [[p,q],...], "lambda": [...]}; '-' reads stdin.
    #[arg(long, conflicts_with_all = ["pairs", "lambda"])]
    input: Option<PathBuf>,
    /// Inline pairs, e.g. "2,1;3,1;0,2".
    #[arg(long, allow_hyphen_values = true)]
    pairs: Option<String>,
    /// Inline lambda, e.g. "0,2,4".
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Overlap,
    Dirac,
    Positional,
    All,
}

/// Exit statuses: affirmative, negative, invalid or undecidable.
const YES: u8 = 0;
const NO: u8 = 1;
const UNDECIDED: u8 = 2;

/// Writes to stdout; a closed pipe on the reading side is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json<T: Serialize>(value: &T) {
    let mut text = serde_json::to_string_pretty(value).expect("output is serializable");
    text.push('\n');
    emit(&text);
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDocument<'a> {
    error: ErrorBody<'a>,
}

fn fail(kind: &str, message: impl std::fmt::Display, code: u8) -> ExitCode {
    print_json(&ErrorDocument {
        error: ErrorBody {
            kind,
            message: message.to_string(),
        },
    });
    ExitCode::from(code)
}

fn criteria_failure(err: &CriteriaError) -> ExitCode {
    let (kind, code) = match err {
        CriteriaError::NotInNiceRange => ("not_in_nice_range", UNDECIDED),
        CriteriaError::NotInMediocreRange => ("not_in_mediocre_range", UNDECIDED),
        CriteriaError::ModuleVanishes { .. } => ("module_vanishes", NO),
        CriteriaError::PreconditionViolated(_) => ("precondition_violated", UNDECIDED),
        CriteriaError::InternalContradiction(_) => ("internal_contradiction", UNDECIDED),
    };
    fail(kind, err, code)
}

fn load(args: &InputArgs) -> Result<(ParabolicDatum, LambdaParam), ExitCode> {
    input::load(
        args.input.as_deref(),
        args.pairs.as_deref(),
        args.lambda.as_deref(),
    )
    .map_err(|e| fail(e.kind(), &e, UNDECIDED))
}

#[derive(Serialize)]
struct BuildOutput {
    signed: render::TableauJson,
    quasitableau: render::TableauJson,
}

fn cmd_build(datum: &ParabolicDatum, lambda: &LambdaParam, format: Format, blocks: bool) {
    let signed = build_signed_tableau(datum);
    let quasi = build_quasitableau(datum, lambda);
    match format {
        Format::Json => print_json(&BuildOutput {
            signed: render::to_json(&signed),
            quasitableau: render::to_json(&quasi),
        }),
        Format::Ascii => emit(&format!(
            "signed tableau\n{}\nquasitableau\n{}",
            render::to_ascii(&signed, blocks),
            render::to_ascii(&quasi, blocks)
        )),
        Format::Latex => emit(&format!(
            "% signed tableau\n{}% quasitableau\n{}",
            render::to_latex(&signed, blocks),
            render::to_latex(&quasi, blocks)
        )),
    }
}

#[derive(Serialize)]
struct NonvanishingReport {
    status: &'static str,
    range: RangeLabel,
    method: &'static str,
    failing_pair: Option<usize>,
}

fn cmd_nonvanishing(datum: &ParabolicDatum, lambda: &LambdaParam) -> ExitCode {
    let class = classify(datum, lambda);
    let (method, check) = if class.nice {
        ("nice_criterion", nonvanishing_nice(datum, lambda))
    } else {
        (
            "mediocre_necessary",
            mediocre_necessary_check(datum, lambda),
        )
    };
    let check = match check {
        Ok(c) => c,
        Err(e) => return criteria_failure(&e),
    };
    let (status, code) = match (check.holds, class.nice) {
        (true, true) => ("nonzero", YES),
        (false, _) => ("vanishes", NO),
        (true, false) => ("inconclusive", UNDECIDED),
    };
    print_json(&NonvanishingReport {
        status,
        range: class.label,
        method,
        failing_pair: check.failing_pair,
    });
    ExitCode::from(code)
}

fn cmd_dirac(datum: &ParabolicDatum, lambda: &LambdaParam) -> ExitCode {
    match dirac_index_nonzero(datum, lambda) {
        Ok(verdict) => {
            print_json(&verdict);
            ExitCode::from(if verdict.dirac_index_nonzero == Some(true) {
                YES
            } else {
                NO
            })
        }
        Err(e) => criteria_failure(&e),
    }
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    reports: Vec<SweepReport>,
}

fn cmd_verify(which: Which, n_max: usize, span: Option<usize>) -> ExitCode {
    if n_max < 2 {
        return fail("usage", "--n-max must be at least 2", UNDECIDED);
    }
    let span = span.unwrap_or(n_max + 2);
    let mut reports: Vec<SweepReport> = Vec::new();
    if matches!(which, Which::Overlap | Which::All) {
        reports.push(sweep_overlap(n_max));
    }
    if matches!(which, Which::Dirac | Which::All) {
        reports.push(sweep_dirac_equivalence(n_max, span));
    }
    if matches!(which, Which::Positional | Which::All) {
        reports.push(sweep_positional_lemma(n_max));
    }
    let passed = reports.iter().all(SweepReport::passed);
    print_json(&VerifyOutput { passed, reports });
    ExitCode::from(if passed { YES } else { NO })
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Verify { which, n_max, span } => cmd_verify(which, n_max, span),
        Command::Build {
            input,
            format,
            show_blocks,
        } => match load(&input) {
            Ok((d, l)) => {
                cmd_build(&d, &l, format, show_blocks);
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
        Command::Classify { input } => match load(&input) {
            Ok((d, l)) => {
                print_json(&classify(&d, &l));
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
        Command::Nonvanishing { input } => match load(&input) {
            Ok((d, l)) => cmd_nonvanishing(&d, &l),
            Err(code) => code,
        },
        Command::Dirac { input } => match load(&input) {
            Ok((d, l)) => cmd_dirac(&d, &l),
            Err(code) => code,
        },
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            ExitCode::SUCCESS
        }
        Err(e) => fail("usage", e.render().to_string().trim_end(), UNDECIDED),
    }
}
