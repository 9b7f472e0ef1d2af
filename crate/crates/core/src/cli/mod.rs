//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns the exit code together
//! with everything that would be written to stdout and stderr, so the binary
//! is a thin wrapper and tests can compare output byte for byte.

mod parse;

pub use parse::{parse_series, render_expr, ParseError, SeriesExpr};

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::enumerate::{count_forests, count_trees, CountTable, TreeFamily};
use crate::error::Error;
use crate::lagrange::{
    compositional_inverse, lif_verify_with, solve_functional_equation, CoefficientFormula,
    LagrangeFormula, LifReport,
};
use crate::series::Series;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lagrange",
    version,
    about = "Exact power series: solve A = z*phi(A), Lagrange inversion, compositional inverses"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve A = z*phi(A) and print a_0..a_N.
    Solve {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        n: usize,
    },
    /// Print [z^N] H(A(z)) computed by the inversion formula.
    Coeff {
        #[arg(long)]
        h: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        n: usize,
    },
    /// Check n [z^n] H(A) = [z^(n-1)] H' phi^n for n = 0..=max-n.
    Verify {
        #[arg(long)]
        h: String,
        #[arg(long)]
        phi: String,
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Print the compositional inverse of F up to z^N.
    Inverse {
        #[arg(long)]
        f: String,
        #[arg(long)]
        n: usize,
    },
    /// Count t-ary plane trees by vertex number.
    CountTrees {
        #[arg(long)]
        t: usize,
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Count ordered k-forests of t-ary plane trees by vertex number.
    CountForests {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        #[arg(long = "max-n")]
        max_n: usize,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(stderr: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_formula(argv, &LagrangeFormula)
}

/// Like [`run`], but `coeff` and `verify` use the given coefficient formula.
pub fn run_with_formula<I, T>(argv: I, formula: &dyn CoefficientFormula) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut session = Session {
        json: cli.json,
        stderr: String::new(),
    };
    match session.dispatch(cli.command, formula) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: session.stderr,
        },
        Err(msg) => {
            let _ = writeln!(session.stderr, "error: {msg}");
            Outcome::usage(session.stderr)
        }
    }
}

struct Session {
    json: bool,
    stderr: String,
}

impl Session {
    fn series_arg(&mut self, flag: &str, text: &str, precision: usize) -> Result<Series, String> {
        let expr = SeriesExpr::parse(text).map_err(|e| format!("--{flag}: {e}"))?;
        let (series, dropped) = expr.to_series(precision);
        for power in dropped {
            let _ = writeln!(
                self.stderr,
                "warning: --{flag}: term z^{power} exceeds precision {precision} and was dropped"
            );
        }
        Ok(series)
    }

    fn emit<T: Serialize + ?Sized>(&self, value: &T, plain: String) -> String {
        if self.json {
            let mut s = serde_json::to_string(value).expect("serializable output");
            s.push('\n');
            s
        } else {
            plain + "\n"
        }
    }

    fn dispatch(
        &mut self,
        command: Command,
        formula: &dyn CoefficientFormula,
    ) -> Result<(i32, String), String> {
        let lib = |e: Error| e.to_string();
        match command {
            Command::Solve { phi, n } => {
                let phi = self.series_arg("phi", &phi, n)?;
                let a = solve_functional_equation(&phi, n).map_err(lib)?;
                Ok((EXIT_OK, self.emit(&a, a.to_string())))
            }
            Command::Coeff { h, phi, n } => {
                let h = self.series_arg("h", &h, n)?;
                let phi = self.series_arg("phi", &phi, n)?;
                let c = formula.coefficient(&h, &phi, n).map_err(lib)?;
                Ok((EXIT_OK, self.emit(&c, c.to_string())))
            }
            Command::Verify { h, phi, max_n } => {
                let h = self.series_arg("h", &h, max_n)?;
                let phi = self.series_arg("phi", &phi, max_n)?;
                let rows = lif_verify_with(formula, &h, &phi, max_n).map_err(lib)?;
                let code = if rows.iter().all(|r| r.holds) {
                    EXIT_OK
                } else {
                    EXIT_VERIFY_FAILED
                };
                Ok((code, self.emit(&rows, render_report(&rows))))
            }
            Command::Inverse { f, n } => {
                let f = self.series_arg("f", &f, n)?;
                let g = compositional_inverse(&f).map_err(lib)?;
                Ok((EXIT_OK, self.emit(&g, g.to_string())))
            }
            Command::CountTrees { t, max_n } => {
                let table = count_trees(family(t)?, max_n);
                Ok((EXIT_OK, self.emit_table(&table)))
            }
            Command::CountForests { t, k, max_n } => {
                let table = count_forests(family(t)?, k, max_n);
                Ok((EXIT_OK, self.emit_table(&table)))
            }
        }
    }

    fn emit_table(&self, table: &CountTable) -> String {
        self.emit(table, table.render())
    }
}

fn family(t: usize) -> Result<TreeFamily, String> {
    TreeFamily::new(t).ok_or_else(|| "--t must be at least 1".to_string())
}

/// Plain-text table of a verification run, one row per degree.
pub fn render_report(rows: &[LifReport]) -> String {
    let mut out = String::from("n\tlhs_times_n\trhs\tstatus");
    for r in rows {
        let status = if r.holds { "holds" } else { "FAILS" };
        let _ = write!(out, "\n{}\t{}\t{}\t{}", r.n, r.lhs_times_n, r.rhs, status);
    }
    let failed = rows.iter().filter(|r| !r.holds).count();
    if failed == 0 {
        let _ = write!(out, "\nall {} rows hold", rows.len());
    } else {
        let _ = write!(out, "\n{failed} of {} rows fail", rows.len());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("lagrange").chain(args.iter().copied()))
    }

    #[test]
    fn count_commands() {
        let out = go(&["count-trees", "--t", "2", "--max-n", "7"]);
        assert_eq!(out.stdout, "[0, 1, 0, 1, 0, 2, 0, 5]\n");
        let out = go(&[
            "count-forests",
            "--t",
            "2",
            "--k",
            "2",
            "--max-n",
            "6",
            "--json",
        ]);
        assert_eq!(out.stdout, "[\"0\",\"0\",\"1\",\"0\",\"2\",\"0\",\"5\"]\n");
        assert_eq!(
            go(&["count-trees", "--t", "0", "--max-n", "3"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(go(&[]).code, EXIT_USAGE);
        assert_eq!(go(&["solve", "--phi", "1+z"]).code, EXIT_USAGE);
        assert_eq!(go(&["bogus"]).code, EXIT_USAGE);
        let out = go(&["solve", "--phi", "z^-1", "--n", "3"]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.stderr.contains("syntax error"), "{}", out.stderr);
        let out = go(&["inverse", "--f", "1 + z", "--n", "3"]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.stderr.contains("compositional inverse"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = go(&["--help"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("verify"));
    }

    #[test]
    fn dropped_terms_warn() {
        let out = go(&["solve", "--phi", "1 + z^9", "--n", "3"]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout, "[0, 1, 0, 0]\n");
        assert!(out.stderr.contains("z^9"));
    }

    #[test]
    fn inverse_command() {
        let out = go(&["inverse", "--f", "z - z^2", "--n", "5"]);
        assert_eq!(out.stdout, "[0, 1, 1, 2, 5, 14]\n");
        let out = go(&["--json", "inverse", "--f", "2*z", "--n", "2"]);
        assert_eq!(out.stdout, "[\"0\",\"1/2\",\"0\"]\n");
    }
}
