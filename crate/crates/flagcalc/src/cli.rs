//! Argument parsing and dispatch for the `flagcalc` binary.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use flagcalc_core::cohomology::si_coh;
use flagcalc_core::ktheory::{si_k, si_k_matrix};
use flagcalc_core::{
    ActionMatrix, CohClass, Error, KClass, Localization, MotivicBasis, MotivicBasisKind, RootSystem, MAX_RANK,
};

use crate::render::{self, Cell, MatrixHeader};
use crate::text::{cohclass_text, fixed_point_label, kclass_text, laurent_text, BasisSymbol, ClassExpression};
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MATH: i32 = 3;

/// Lowers the largest accepted rank.
pub const MAX_RANK_VAR: &str = "FLAGCALC_MAX_RANK";

#[derive(Debug, Parser)]
#[command(
    name = "flagcalc",
    version,
    about = "Schubert calculus on flag varieties: Weyl group actions in K-theory and cohomology"
)]
struct Cli {
    /// Cartan type letter (A, B, C, D or G)
    #[arg(long = "type", global = true, default_value = "A")]
    cartan_type: String,
    /// Rank of the root system
    #[arg(long, global = true, default_value_t = 2)]
    rank: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the matrix of s_i acting on a basis
    Matrix {
        #[arg(long)]
        gen: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Schubert)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
        /// Skip the involution check before printing
        #[arg(long)]
        no_check: bool,
    },
    /// Apply s_i to a class such as "e[1,0]*O[] + O[1]"
    Act {
        #[arg(long)]
        gen: usize,
        expression: String,
    },
    /// Run a property suite
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Print the restrictions of a class to every fixed point
    Restrict { expression: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Schubert,
    Ideal,
    Fixed,
    Coh,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Ascii,
    Csv,
    Json,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotInSpan(_) | Error::OracleInconsistency(_) | Error::InternalError(_) => EXIT_MATH,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_USAGE, message: format!("write failed: {e}") }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "flagcalc: {}", f.message);
            f.code
        }
    }
}

fn rank_cap() -> Result<usize, Failure> {
    match std::env::var(MAX_RANK_VAR) {
        Err(_) => Ok(MAX_RANK),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|cap| cap.min(MAX_RANK))
            .map_err(|_| Failure::usage(format!("{MAX_RANK_VAR} must be a number, got {v:?}"))),
    }
}

fn root_system(cli: &Cli) -> Result<RootSystem, Failure> {
    let mut chars = cli.cartan_type.chars();
    let letter = match (chars.next(), chars.next()) {
        (Some(c), None) => c.to_ascii_uppercase(),
        _ => return Err(Failure::usage(format!("type must be a single letter, got {:?}", cli.cartan_type))),
    };
    let cap = rank_cap()?;
    if cli.rank > cap {
        return Err(Failure::usage(format!("rank {} exceeds the cap {cap}", cli.rank)));
    }
    Ok(RootSystem::build(letter, cli.rank)?)
}

fn check_gen(rs: &RootSystem, gen: usize) -> Result<(), Failure> {
    if gen == 0 || gen > rs.rank() {
        return Err(Error::BadIndex { index: gen, rank: rs.rank() }.into());
    }
    Ok(())
}

fn parse(rs: &RootSystem, input: &str) -> Result<ClassExpression, Failure> {
    ClassExpression::parse(rs, input).map_err(|e| Failure::usage(format!("{e}\n{}", e.caret(input))))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let rs = root_system(cli)?;
    match &cli.command {
        Command::Matrix { gen, basis, format, no_check } => {
            check_gen(&rs, *gen)?;
            let text = match basis {
                BasisArg::Coh => {
                    let order = rs.all_elements();
                    let columns = order
                        .iter()
                        .map(|w| si_coh(&rs, *gen, &CohClass::basis(w.clone())))
                        .collect::<Result<Vec<_>, _>>()?;
                    let m = ActionMatrix::from_columns(order, &columns);
                    emit(&rs, *gen, "coh", BasisSymbol::X, &m, *format, !no_check)?
                }
                BasisArg::Schubert => {
                    let m = si_k_matrix(&rs, *gen)?;
                    emit(&rs, *gen, "schubert", BasisSymbol::O, &m, *format, !no_check)?
                }
                BasisArg::Ideal => {
                    let m = MotivicBasis::new(&rs, MotivicBasisKind::Ideal).action_matrix(&rs, *gen)?;
                    emit(&rs, *gen, "ideal", BasisSymbol::I, &m, *format, !no_check)?
                }
                BasisArg::Fixed => {
                    let m = MotivicBasis::new(&rs, MotivicBasisKind::FixedPoint).action_matrix(&rs, *gen)?;
                    emit(&rs, *gen, "fixed", BasisSymbol::FP, &m, *format, !no_check)?
                }
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Act { gen, expression } => {
            check_gen(&rs, *gen)?;
            let expr = parse(&rs, expression)?;
            let text = match expr.basis {
                BasisSymbol::X => {
                    let c = expr.to_cohclass().map_err(|e| Failure::usage(e.message))?;
                    cohclass_text(&rs, &si_coh(&rs, *gen, &c)?)
                }
                BasisSymbol::O => kclass_text(&rs, BasisSymbol::O, &si_k(&rs, *gen, &k_class(&expr)?)?),
                symbol => {
                    let basis = motivic_basis(&rs, symbol);
                    let image = si_k(&rs, *gen, &basis.to_schubert(&k_class(&expr)?))?;
                    kclass_text(&rs, symbol, &basis.from_schubert(&image)?)
                }
            };
            writeln!(out, "{text}")?;
        }
        Command::Verify { suite } => {
            let report = verify::run(&rs, *suite);
            write!(out, "{report}")?;
            return Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY });
        }
        Command::Restrict { expression } => {
            let expr = parse(&rs, expression)?;
            let u = match expr.basis {
                BasisSymbol::X => return Err(Failure::usage("restrict takes a K-theory class (O, I or FP)")),
                BasisSymbol::O => k_class(&expr)?,
                symbol => motivic_basis(&rs, symbol).to_schubert(&k_class(&expr)?),
            };
            let loc = Localization::new(&rs)?;
            let r = loc.restrict(&u);
            for w in loc.elements() {
                writeln!(out, "{}: {}", fixed_point_label(w), laurent_text(&rs, &r.get(w)))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn k_class(expr: &ClassExpression) -> Result<KClass, Failure> {
    expr.to_kclass().map_err(|e| Failure::usage(e.message))
}

fn motivic_basis(rs: &RootSystem, symbol: BasisSymbol) -> MotivicBasis {
    let kind = if symbol == BasisSymbol::I { MotivicBasisKind::Ideal } else { MotivicBasisKind::FixedPoint };
    MotivicBasis::new(rs, kind)
}

fn emit<C: Cell>(
    rs: &RootSystem,
    gen: usize,
    basis: &'static str,
    symbol: BasisSymbol,
    m: &ActionMatrix<C>,
    format: FormatArg,
    check: bool,
) -> Result<String, Failure> {
    if check && !m.compose(m).is_identity() {
        return Err(Error::OracleInconsistency(format!("s{gen} on the {basis} basis is not an involution")).into());
    }
    let header = MatrixHeader { gen, basis, symbol };
    Ok(match format {
        FormatArg::Ascii => render::ascii(rs, &header, m),
        FormatArg::Csv => {
            render::csv(rs, &header, m).map_err(|e| Failure { code: EXIT_USAGE, message: e.to_string() })?
        }
        FormatArg::Json => render::json(rs, &header, m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("flagcalc").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn error_codes() {
        let code = |e: Error| Failure::from(e).code;
        assert_eq!(code(Error::NotInSpan("x".into())), EXIT_MATH);
        assert_eq!(code(Error::OracleInconsistency("x".into())), EXIT_MATH);
        assert_eq!(code(Error::InternalError("x")), EXIT_MATH);
        assert_eq!(code(Error::BadIndex { index: 3, rank: 2 }), EXIT_USAGE);
        assert_eq!(code(Error::UnsupportedType { letter: 'E', rank: 6 }), EXIT_USAGE);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("matrix") && err.is_empty());
        let (code, _, err) = run_args(&["matrix"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--gen"));
    }

    #[test]
    fn in_process_act() {
        let (code, out, _) = run_args(&["--type", "b", "act", "--gen", "2", "O[1]"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.ends_with("*O[1,2]\n"), "{out}");
    }
}
