//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check or a computation
//! fails, 2 on invalid arguments.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::kl::recursion::p_recursion;
use crate::kl::report::KlReport;
use crate::kl::{b_components, p_closed_form, q_poly, r_poly, uniform_nonequiv};
use crate::matroid::{GraphMatroid, MAX_EDGES};
use crate::symfunc::SchurPoly;
use crate::verify::{run_suite, Check, Mutation, SuiteConfig};

/// Largest degree accepted by `compute` and `expand`.
pub const MAX_DEGREE: usize = 24;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "eqkl",
    version,
    about = "Equivariant Kazhdan–Lusztig polynomials of thagomizer matroids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// The graphic matroid of K_{1,1,n}
    Thagomizer,
    /// The cycle matroid on k elements
    Uniform,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursion,
    Convolution,
    ClosedForm,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an equivariant or non-equivariant KL polynomial
    Compute {
        #[arg(value_enum)]
        target: Target,
        /// Size parameter: n for thagomizers, k for uniform matroids
        #[arg(long = "n", visible_alias = "k", value_name = "N")]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print the dimension polynomial instead of the Schur expansion
        #[arg(long)]
        nonequivariant: bool,
        /// Print all three computations and their comparison (thagomizer only)
        #[arg(long, conflicts_with = "nonequivariant")]
        report: bool,
        #[arg(long, value_enum, default_value = "convolution")]
        method: Method,
        /// Attach wall-clock timings to the report
        #[arg(long, requires = "report")]
        timings: bool,
    },
    /// Run the verification suite
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        series_order: usize,
        #[arg(long, default_value_t = 5)]
        oracle_max_n: usize,
        /// Comma-separated subset of checks (default: all)
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Negative control that must make the suite fail
        #[arg(long, value_enum)]
        mutate: Option<Mutation>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print P_n in the Schur and h bases with its B-series components
    Expand {
        #[arg(long = "n", value_name = "N")]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// KL polynomial of a graph given as {"vertices": v, "edges": [[a,b],...]}
    Matroid {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn failed(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_FAILED,
        message: message.into(),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn check_degree(n: usize, min: usize, what: &str) -> Result<(), Failure> {
    if n < min {
        return Err(usage(format!("{what} must be at least {min}, got {n}")));
    }
    if n > MAX_DEGREE {
        return Err(usage(format!("{what} must be at most {MAX_DEGREE}, got {n}")));
    }
    Ok(())
}

fn thagomizer_poly(n: usize, method: Method) -> Result<SchurPoly, Failure> {
    match method {
        Method::Recursion => p_recursion(n).map_err(|e| failed(e.to_string())),
        Method::Convolution => Ok(r_poly(n)),
        Method::ClosedForm => Ok(p_closed_form(n)),
    }
}

fn render_schur(f: &SchurPoly, format: Format) -> String {
    match format {
        Format::Text => f.to_string(),
        Format::Json => to_json(f),
    }
}

fn compute(
    target: Target,
    n: usize,
    format: Format,
    nonequivariant: bool,
    report: bool,
    method: Method,
    timings: bool,
) -> Result<(String, i32), Failure> {
    match target {
        Target::Thagomizer => {
            check_degree(n, 1, "--n")?;
            if report {
                let r = KlReport::build(n, timings).map_err(|e| failed(e.to_string()))?;
                let code = if r.equal.all() { EXIT_OK } else { EXIT_FAILED };
                let text = match format {
                    Format::Json => to_json(&r),
                    Format::Text => report_text(&r),
                };
                return Ok((text, code));
            }
            let f = thagomizer_poly(n, method)?;
            let text = if nonequivariant {
                poly_output(&f.dimension(), format)
            } else {
                render_schur(&f, format)
            };
            Ok((text, EXIT_OK))
        }
        Target::Uniform => {
            check_degree(n, 2, "--k")?;
            if report {
                return Err(usage("--report is only available for thagomizer"));
            }
            let text = if nonequivariant {
                poly_output(&uniform_nonequiv(n), format)
            } else {
                render_schur(&q_poly(n), format)
            };
            Ok((text, EXIT_OK))
        }
    }
}

fn poly_output(p: &crate::poly::IntPoly, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => to_json(p),
    }
}

fn report_text(r: &KlReport) -> String {
    let mut out = format!("n = {}\n", r.n);
    out.push_str(&format!("recursion:\n{}\n", r.p_recursion));
    out.push_str(&format!("convolution:\n{}\n", r.r_poly));
    out.push_str(&format!("closed form:\n{}\n", r.p_closed_form));
    out.push_str(&format!(
        "equal: recursion/convolution {}, convolution/closed-form {}, recursion/closed-form {}\n",
        r.equal.recursion_convolution, r.equal.convolution_closed_form, r.equal.recursion_closed_form
    ));
    if let Some(d) = &r.first_difference {
        out.push_str(&format!("first difference ({}): {}\n", d.pair, d.difference));
    }
    out.push_str(&format!("nonequivariant: {}", r.nonequiv));
    if let Some(t) = &r.timings {
        out.push_str(&format!(
            "\ntimings (ms): recursion {:.3}, convolution {:.3}, closed form {:.3}",
            t.recursion_ms, t.convolution_ms, t.closed_form_ms
        ));
    }
    out
}

fn expand(n: usize, format: Format) -> Result<String, Failure> {
    check_degree(n, 1, "--n")?;
    let p = r_poly(n);
    let h = p.to_h();
    let b = b_components(n);
    Ok(match format {
        Format::Json => to_json(&json!({
            "n": n,
            "schur": p,
            "h": h,
            "b_series": {
                "b1": b.b1,
                "b2": b.b2,
                "b3": b.b3,
                "b4": b.b4,
                "total": b.total(),
            },
        })),
        Format::Text => {
            let mut out = format!("Schur basis:\n{p}\n\nh basis:\n{h}\n");
            for (i, c) in b.components().iter().enumerate() {
                out.push_str(&format!("\nB{}:\n{c}\n", i + 1));
            }
            out.push_str(&format!("\nB total:\n{}", b.total()));
            out
        }
    })
}

fn matroid(graph: &PathBuf, format: Format) -> Result<String, Failure> {
    let raw = std::fs::read_to_string(graph).map_err(|e| usage(format!("cannot read {}: {e}", graph.display())))?;
    let m: GraphMatroid = serde_json::from_str(&raw).map_err(|e| {
        usage(format!(
            "invalid graph in {} (at most {MAX_EDGES} edges): {e}",
            graph.display()
        ))
    })?;
    let lattice = m.flats();
    let kl = lattice.kl_poly().map_err(|e| failed(e.to_string()))?;
    let chi = lattice.char_poly();
    Ok(match format {
        Format::Json => to_json(&json!({
            "edges": m.num_edges(),
            "rank": m.full_rank(),
            "flats": lattice.len(),
            "characteristic": chi,
            "kl": kl,
        })),
        Format::Text => format!(
            "edges: {}\nrank: {}\nflats: {}\ncharacteristic: {chi}\nkl: {kl}",
            m.num_edges(),
            m.full_rank(),
            lattice.len()
        ),
    })
}

fn dispatch(command: Command) -> Result<(String, i32), Failure> {
    match command {
        Command::Compute {
            target,
            n,
            format,
            nonequivariant,
            report,
            method,
            timings,
        } => compute(target, n, format, nonequivariant, report, method, timings),
        Command::Verify {
            max_n,
            series_order,
            oracle_max_n,
            checks,
            mutate,
            format,
        } => {
            let config = SuiteConfig {
                max_n,
                series_order,
                oracle_max_n,
                checks: if checks.is_empty() { Check::ALL.to_vec() } else { checks },
                mutate,
            };
            let report = run_suite(&config).map_err(|e| usage(e.to_string()))?;
            let code = if report.passed { EXIT_OK } else { EXIT_FAILED };
            let text = match format {
                Format::Json => to_json(&report),
                Format::Text => report.to_text(),
            };
            Ok((text, code))
        }
        Command::Expand { n, format } => Ok((expand(n, format)?, EXIT_OK)),
        Command::Matroid { graph, format } => Ok((matroid(&graph, format)?, EXIT_OK)),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("eqkl").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_text() {
        let (code, out, _) = call(&["compute", "thagomizer", "--n", "4", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out, "s[4]: 1 + 3t\ns[3,1]: 2t\ns[2,2]: t + t^2\n");
        let (_, out, _) = call(&["compute", "thagomizer", "--n", "1"]);
        assert_eq!(out, "s[1]: 1\n");
        let (_, out, _) = call(&["compute", "uniform", "--k", "4", "--nonequivariant"]);
        assert_eq!(out, "1 + 2t\n");
    }

    #[test]
    fn methods_agree() {
        let outputs: Vec<String> = ["recursion", "convolution", "closed-form"]
            .iter()
            .map(|m| call(&["compute", "thagomizer", "--n", "6", "--method", m]).1)
            .collect();
        assert_eq!(outputs[0], outputs[1]);
        assert_eq!(outputs[1], outputs[2]);
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(call(&["compute", "thagomizer", "--n", "0"]).0, 2);
        assert_eq!(call(&["compute", "uniform", "--k", "1"]).0, 2);
        assert_eq!(call(&["compute", "thagomizer", "--n", "99"]).0, 2);
        assert_eq!(call(&["compute", "thagomizer"]).0, 2);
        assert_eq!(call(&["verify", "--series-order", "1"]).0, 2);
        assert_eq!(call(&["verify", "--oracle-max-n", "9"]).0, 2);
        assert_eq!(call(&["verify", "--checks", "nonsense"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
