//! Command-line front end. [`run`] takes the argument list and an output
//! sink and returns the process exit status:
//! 0 success, 1 invalid arguments, 2 verification failed, 3 search budget
//! exhausted.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::constructions::{
    block_cover, cover_333, cover_k1_general, cover_k2_general, cover_k3_general,
    fractional_cover_2d, kcover_2d, lifted_cover_2d, mass_certificate_2d, simplex_fractional_cover,
};
use crate::cover::{FractionalCover, IntegerCover, MassCertificate};
use crate::error::Error;
use crate::grid::GridShape;
use crate::lp::f_star;
use crate::rational::{to_decimal, Rational};
use crate::search::{f_int, SearchConfig};
use crate::verify::{
    check_d3_conjecture, check_duality_conjecture, check_mega_conjecture, verify_cover,
    verify_fractional_cover, verify_mass_certificate, write_csv,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNPROVEN: i32 = 3;

const DECIMAL_DIGITS: usize = 12;

#[derive(Parser, Debug)]
#[command(
    name = "tricover",
    version,
    about = "Hyperplane k-covers of triangular grids"
)]
struct Cli {
    /// Add decimal approximations next to exact rationals.
    #[arg(long, global = true)]
    decimal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact fractional optimum f*(n,d) with primal cover and dual masses.
    Fstar {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Minimum integer k-cover f(n,d,k) by branch-and-bound.
    Fint {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
        /// Node budget.
        #[arg(long)]
        nodes: Option<u64>,
        /// Force the residual LP bound on or off.
        #[arg(long)]
        lp_bound: Option<bool>,
    },
    /// Emit a closed-form cover or certificate.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Check a mass certificate file.
    Certify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check an integer or fractional cover file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Required multiplicity for integer covers (defaults to the file's k).
        #[arg(long)]
        k: Option<u32>,
    },
    /// Tabulate f(n,d,k) against a predicted slope as CSV.
    Sweep {
        #[arg(long, value_enum)]
        conjecture: Conjecture,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        nmax: u32,
        #[arg(long, default_value_t = 2)]
        nmin: u32,
        /// Dimension for the `mega` sweep.
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 1_000_000)]
        nodes: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Kcover2d,
    Block,
    Lift,
    K1,
    K2,
    K3,
    Simplex,
    Cover333,
    Frac2d,
    Mass2d,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Conjecture {
    Duality,
    D3,
    Mega,
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and executes the command,
/// writing artifacts to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn need(value: Option<u32>, name: &str, family: Family) -> Result<u32, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{name} is required for {family:?}")))
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("artifacts serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn with_decimal(value: impl Serialize, key: &str, exact: Option<&Rational>, on: bool) -> Value {
    let mut v = serde_json::to_value(value).expect("artifacts serialize");
    if let (true, Some(x), Value::Object(map)) = (on, exact, &mut v) {
        map.insert(
            format!("{key}_decimal"),
            Value::String(to_decimal(x, DECIMAL_DIGITS)),
        );
    }
    v
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let decimal = cli.decimal;
    match cli.command {
        Command::Fstar { n, d } => {
            let sol = f_star(GridShape::new(n, d)?)?;
            let v = with_decimal(&sol, "optimum", Some(&sol.optimum), decimal);
            emit(out, &v)?;
            Ok(EXIT_OK)
        }
        Command::Fint {
            n,
            d,
            k,
            nodes,
            lp_bound,
        } => {
            let shape = GridShape::new(n, d)?;
            let mut config = SearchConfig::for_shape(shape);
            if let Some(limit) = nodes {
                config = config.with_node_limit(limit);
            }
            if let Some(on) = lp_bound {
                config = config.with_lp_bound(on);
            }
            let res = f_int(shape, k, config)?;
            if res.cover.uses_nonstandard() {
                writeln!(
                    err,
                    "note: the optimum found uses a non-standard hyperplane"
                )?;
            }
            emit(out, &res)?;
            Ok(if res.proven { EXIT_OK } else { EXIT_UNPROVEN })
        }
        Command::Construct { family, n, d, k } => construct(family, n, d, k, decimal, out, err),
        Command::Certify { input } => {
            let text = std::fs::read_to_string(&input)?;
            let cert: MassCertificate = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let report = verify_mass_certificate(&cert);
            let bound = report.certified_bound.clone();
            emit(
                out,
                &with_decimal(&report, "certified_bound", bound.as_ref(), decimal),
            )?;
            Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Verify { input, k } => {
            let text = std::fs::read_to_string(&input)?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let report = if value.get("multiplicities").is_some() {
                let cover: IntegerCover = serde_json::from_value(value)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
                verify_cover(&cover, k.unwrap_or(cover.k()))
            } else if value.get("weights").is_some() {
                let cover: FractionalCover = serde_json::from_value(value)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
                verify_fractional_cover(&cover)
            } else {
                return Err(Failure::Usage(format!(
                    "{}: expected an integer or fractional cover",
                    input.display()
                )));
            };
            emit(out, &report)?;
            Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Sweep {
            conjecture,
            k,
            nmax,
            nmin,
            d,
            nodes,
        } => {
            if nmin == 0 || nmin > nmax {
                return Err(Failure::Usage(format!("empty range {nmin}..={nmax}")));
            }
            let rows = match conjecture {
                Conjecture::Duality => check_duality_conjecture(k, nmin..=nmax, nodes)?,
                Conjecture::D3 => check_d3_conjecture(k, nmin..=nmax, nodes)?,
                Conjecture::Mega => check_mega_conjecture(d, k, nmin..=nmax, nodes)?,
            };
            write_csv(&rows, &mut *out)?;
            Ok(if rows.iter().all(|r| r.proven) {
                EXIT_OK
            } else {
                EXIT_UNPROVEN
            })
        }
    }
}

fn construct(
    family: Family,
    n: Option<u32>,
    d: Option<u32>,
    k: Option<u32>,
    decimal: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let shape = |n, d| GridShape::new(n, d).map_err(Failure::from);
    let fractional = |c: FractionalCover| {
        let total = c.total_weight();
        with_decimal(&c, "total_weight", Some(&total), decimal)
    };
    let value = match family {
        Family::Kcover2d => {
            serde_json::to_value(kcover_2d(need(n, "n", family)?, need(k, "k", family)?)?)
        }
        Family::Lift => serde_json::to_value(lifted_cover_2d(
            need(n, "n", family)?,
            need(k, "k", family)?,
        )?),
        Family::Block => {
            let s = shape(need(n, "n", family)?, need(d, "d", family)?)?;
            let k = need(k, "k", family)?;
            match block_cover(s, k) {
                Ok(c) => serde_json::to_value(c),
                Err(Error::GridTooSmall { needed, .. }) => {
                    writeln!(
                        err,
                        "note: block cover needs n >= {needed}; solving {s} exactly instead"
                    )?;
                    let res = f_int(s, k, SearchConfig::for_shape(s))?;
                    serde_json::to_value(res.cover)
                }
                Err(e) => return Err(e.into()),
            }
        }
        Family::K1 => serde_json::to_value(cover_k1_general(shape(
            need(n, "n", family)?,
            need(d, "d", family)?,
        )?)),
        Family::K2 => serde_json::to_value(cover_k2_general(shape(
            need(n, "n", family)?,
            need(d, "d", family)?,
        )?)),
        Family::K3 => serde_json::to_value(cover_k3_general(shape(
            need(n, "n", family)?,
            need(d, "d", family)?,
        )?)?),
        Family::Simplex => Ok(fractional(simplex_fractional_cover(need(d, "d", family)?)?)),
        Family::Cover333 => Ok(fractional(cover_333())),
        Family::Frac2d => Ok(fractional(fractional_cover_2d(need(n, "n", family)?)?)),
        Family::Mass2d => {
            let cert = mass_certificate_2d(need(n, "n", family)?)?;
            let total = cert.total_mass();
            Ok(with_decimal(&cert, "total_mass", Some(&total), decimal))
        }
    }
    .expect("artifacts serialize");
    emit(out, &value)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tricover").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn fstar_json() {
        let (code, out, _) = call(&["fstar", "--n", "5", "--d", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["optimum"], "18/5");
        assert_eq!(v["status"], "optimal");
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(call(&["fstar", "--n", "0", "--d", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["fstar", "--n", "x"]).0, EXIT_USAGE);
        assert_eq!(call(&["construct", "--family", "k1"]).0, EXIT_USAGE);
        assert_eq!(call(&["nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn decimal_flag() {
        let (_, out, _) = call(&["--decimal", "fstar", "--n", "3", "--d", "2"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["optimum"], "9/4");
        assert_eq!(v["optimum_decimal"], "2.250000000000");
    }
}
