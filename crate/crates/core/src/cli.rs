//! Command-line front end. `main` only forwards to [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::fusion::{fuse_linguistic, fuse_quant, fusion_matrix, MatrixKind};
use crate::risk_position::{classify_readiness, component_scores, risk_position, Orientation};
use crate::scales::{fused_term_score, parse_term, term_score, FusedTerm, LinguisticTerm};
use crate::workbench::{
    compare_scenarios, list_runs, load_scenario_with, render_delta_text,
    render_priority_structured, render_priority_text, render_report_structured, render_report_text,
    run_report, store_run, LoadOptions, WorkbenchError,
};

/// Environment variable naming the default run store directory.
pub const STORE_ENV: &str = "RISKPOS_STORE";

#[derive(Debug, Parser)]
#[command(
    name = "riskpos",
    version,
    about = "Country risk position and asset prioritization"
)]
pub struct Cli {
    /// Rescale scenario weights that do not sum to 1 instead of rejecting them
    #[arg(long, global = true)]
    normalize_weights: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a rating scale
    Scale {
        #[command(subcommand)]
        action: ScaleAction,
    },
    /// Fuse two individual-scale terms
    Fuse {
        a: String,
        b: String,
        #[arg(long, conflicts_with = "linguistic")]
        quantitative: bool,
        #[arg(long)]
        linguistic: bool,
    },
    /// Print a 5x5 fusion matrix
    Matrix { kind: MatrixArg },
    /// Print the components and risk position of a scenario's country
    RiskPosition {
        scenario: PathBuf,
        #[arg(long)]
        orientation: Option<OrientationArg>,
    },
    /// Print the priority vector of a scenario
    Prioritize {
        scenario: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the full assessment report, optionally storing the run
    Report {
        scenario: PathBuf,
        #[arg(long, env = STORE_ENV)]
        store: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare two scenarios
    Compare { a: PathBuf, b: PathBuf },
    /// Check a scenario's invariants
    Validate { scenario: PathBuf },
    /// List stored runs
    Runs {
        #[arg(long, env = STORE_ENV)]
        store: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum ScaleAction {
    Show { which: ScaleArg },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScaleArg {
    Individual,
    Fused,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixArg {
    Linguistic,
    Quantitative,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrientationArg {
    Literal,
    Oriented,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Workbench(#[from] WorkbenchError),
    #[error(transparent)]
    Scale(#[from] crate::scales::ScaleError),
    #[error(transparent)]
    Risk(#[from] crate::risk_position::RiskError),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Workbench(e) => e.exit_code(),
            CliError::Output(_) => 2,
            _ => 1,
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Workbench(w) = &e {
                for v in w.violations() {
                    let _ = writeln!(err, "  {v}");
                }
            }
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let options = LoadOptions {
        normalize_weights: cli.normalize_weights,
    };
    match cli.command {
        Command::Scale {
            action: ScaleAction::Show { which },
        } => write!(out, "{}", render_scale(which))?,
        Command::Fuse {
            a,
            b,
            quantitative,
            linguistic,
        } => {
            let (a, b) = (parse_term(&a)?, parse_term(&b)?);
            let fused = fuse_linguistic(a, b);
            let score = fuse_quant(a, b);
            if quantitative {
                writeln!(out, "{score}")?;
            } else if linguistic {
                writeln!(out, "{fused}")?;
            } else {
                writeln!(out, "{fused} ({score})")?;
            }
        }
        Command::Matrix { kind } => {
            let kind = match kind {
                MatrixArg::Linguistic => MatrixKind::Linguistic,
                MatrixArg::Quantitative => MatrixKind::Quantitative,
            };
            write!(out, "{}", fusion_matrix(kind).render())?;
        }
        Command::RiskPosition {
            scenario,
            orientation,
        } => {
            let s = load_scenario_with(&scenario, &options)?;
            let orientation = match orientation {
                Some(OrientationArg::Literal) => Orientation::Literal,
                Some(OrientationArg::Oriented) => Orientation::Oriented,
                None => s.orientation,
            };
            let c = component_scores(&s.country, orientation);
            let value = risk_position(&c, &s.country.weights)?;
            let w = s.country.weights.as_array();
            writeln!(out, "Country:          {}", s.country.name())?;
            writeln!(out, "Orientation:      {orientation}")?;
            writeln!(
                out,
                "SEI position:     {:.1} (level {}, weight {:.4})",
                c.sei,
                s.country.sei.level(),
                w[0]
            )?;
            writeln!(
                out,
                "Unreadiness:      {:.1} (readiness level {}, weight {:.4})",
                c.readiness,
                classify_readiness(&s.country.readiness),
                w[1]
            )?;
            writeln!(
                out,
                "Adverse exposure: {:.1} (level {}, weight {:.4})",
                c.adverse,
                s.country.adverse.level(),
                w[2]
            )?;
            writeln!(out, "Risk position:    {value:.4}")?;
        }
        Command::Prioritize { scenario, format } => {
            let s = load_scenario_with(&scenario, &options)?;
            let report = run_report(&s)?;
            match format {
                Format::Text => write!(out, "{}", render_priority_text(&report))?,
                Format::Structured => write!(out, "{}", render_priority_structured(&report))?,
            }
        }
        Command::Report {
            scenario,
            store,
            format,
        } => {
            let s = load_scenario_with(&scenario, &options)?;
            let report = run_report(&s)?;
            match format {
                Format::Text => write!(out, "{}", render_report_text(&report))?,
                Format::Structured => write!(out, "{}", render_report_structured(&report))?,
            }
            if let Some(dir) = store {
                let id = store_run(&s, &report, &dir)?;
                writeln!(err, "stored run {id} in {}", dir.display())?;
            }
        }
        Command::Compare { a, b } => {
            let a = load_scenario_with(&a, &options)?;
            let b = load_scenario_with(&b, &options)?;
            write!(out, "{}", render_delta_text(&compare_scenarios(&a, &b)?))?;
        }
        Command::Validate { scenario } => match load_scenario_with(&scenario, &options) {
            Ok(s) => writeln!(
                out,
                "ok: {} ({} assets)",
                scenario.display(),
                s.assets.len()
            )?,
            Err(e @ WorkbenchError::Validation(_)) => {
                writeln!(out, "invalid: {}", scenario.display())?;
                for v in e.violations() {
                    writeln!(out, "  {v}")?;
                }
                return Ok(1);
            }
            Err(e) => return Err(e.into()),
        },
        Command::Runs { store } => {
            for id in list_runs(&store)? {
                writeln!(out, "{id}")?;
            }
        }
    }
    Ok(0)
}

fn render_scale(which: ScaleArg) -> String {
    let mut out = String::new();
    match which {
        ScaleArg::Individual => {
            out.push_str("Individual scale\n");
            out.push_str(&format!(
                "  {:<4}  {:<10}  {:>5}\n",
                "Term", "Name", "Score"
            ));
            for t in LinguisticTerm::ALL {
                out.push_str(&format!(
                    "  {:<4}  {:<10}  {:>5}\n",
                    t.code(),
                    t.name(),
                    term_score(t)
                ));
            }
        }
        ScaleArg::Fused => {
            out.push_str("Fused scale\n");
            out.push_str(&format!(
                "  {:<4}  {:<17}  {:>5}\n",
                "Term", "Name", "Score"
            ));
            for t in FusedTerm::ALL {
                out.push_str(&format!(
                    "  {:<4}  {:<17}  {:>5}\n",
                    t.code(),
                    t.name(),
                    fused_term_score(t)
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("riskpos").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn fuse_variants() {
        assert_eq!(run_args(&["fuse", "M", "high"]).1, "MH (3.5)\n");
        assert_eq!(run_args(&["fuse", "V", "X", "--quantitative"]).1, "3.0\n");
        assert_eq!(run_args(&["fuse", "x", "v", "--linguistic"]).1, "M\n");
        let (code, _, err) = run_args(&["fuse", "extreme", "V"]);
        assert_eq!(code, 1);
        assert!(err.contains("unknown term"));
    }

    #[test]
    fn scales() {
        let (code, out, _) = run_args(&["scale", "show", "individual"]);
        assert_eq!(code, 0);
        assert!(out.contains("  V     Very low      1.0\n"));
        let (_, out, _) = run_args(&["scale", "show", "fused"]);
        assert!(out.contains("  HX    High to very high    4.5\n"));
        assert_eq!(out.lines().count(), 11);
    }

    #[test]
    fn bad_usage_exits_one() {
        assert_eq!(run_args(&["matrix", "diagonal"]).0, 1);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn missing_file_is_io() {
        let (code, _, err) = run_args(&["validate", "/definitely/not/here.json"]);
        assert_eq!(code, 2);
        assert!(err.contains("not/here.json"));
    }
}
