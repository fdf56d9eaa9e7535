use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use weakorder::algebra::{phi_star, psi_star};
use weakorder::{
    cube, hasse, tree, verify, Dendriform, FreeElement, Permutation, Product, SignVector, Tree,
};

#[derive(Parser)]
#[command(
    name = "weakorder",
    version,
    about = "Weak orders and interval products on permutations, trees and cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two basis elements.
    Product {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        op: Op,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Apply one of the maps between the families.
    Map {
        #[arg(long)]
        which: MapKind,
        #[arg(allow_hyphen_values = true)]
        arg: String,
    },
    /// List the weak-order interval [low, high].
    Interval {
        #[arg(long)]
        family: Family,
        #[arg(allow_hyphen_values = true)]
        low: String,
        #[arg(allow_hyphen_values = true)]
        high: String,
    },
    /// List the preimage of a tree under psi or of a sign vector under phi.
    Fiber {
        #[arg(long)]
        which: FiberKind,
        #[arg(allow_hyphen_values = true)]
        arg: String,
    },
    /// Print the covering relations of a weak order.
    Hasse {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "dot")]
        format: Format,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Perm,
    Tree,
    Cube,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Star,
    Prec,
    Succ,
    Over,
    Under,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Psi,
    Phi,
    Psistar,
    Phistar,
    Minperm,
    Maxperm,
    Mintree,
    Maxtree,
}

#[derive(Clone, Copy, ValueEnum)]
enum FiberKind {
    Psi,
    Phi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

enum Failure {
    /// Bad input: exit status 2.
    Usage(String),
    /// A verification suite found a counterexample: exit status 1.
    Violation(String),
}

impl From<weakorder::Error> for Failure {
    fn from(e: weakorder::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse<T>(text: &str) -> Result<T, Failure>
where
    T: FromStr<Err = weakorder::Error>,
{
    text.parse()
        .map_err(|e: weakorder::Error| Failure::Usage(format!("cannot parse {text:?}: {e}")))
}

fn lines<T: Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

fn render<B: Ord + Clone + Display>(x: &FreeElement<B>) -> String {
    if x.is_zero() {
        "0\n".to_string()
    } else {
        x.to_string()
    }
}

fn product<B>(
    op: Op,
    lhs: &str,
    rhs: &str,
    over: fn(&B, &B) -> B,
    under: fn(&B, &B) -> B,
) -> Result<String, Failure>
where
    B: Product + Display + FromStr<Err = weakorder::Error>,
{
    let (a, b): (B, B) = (parse(lhs)?, parse(rhs)?);
    Ok(match op {
        Op::Star => render(&a.star(&b)),
        Op::Over => format!("{}\n", over(&a, &b)),
        Op::Under => format!("{}\n", under(&a, &b)),
        Op::Prec | Op::Succ => {
            return Err(Failure::Usage(
                "this family has no prec/succ splitting".into(),
            ))
        }
    })
}

fn dendriform_product<B>(
    op: Op,
    lhs: &str,
    rhs: &str,
    over: fn(&B, &B) -> B,
    under: fn(&B, &B) -> B,
) -> Result<String, Failure>
where
    B: Dendriform + Display + FromStr<Err = weakorder::Error>,
{
    match op {
        Op::Prec | Op::Succ => {
            let (a, b): (B, B) = (parse(lhs)?, parse(rhs)?);
            let result = if matches!(op, Op::Prec) {
                a.prec(&b)?
            } else {
                a.succ(&b)?
            };
            Ok(render(&result))
        }
        _ => product(op, lhs, rhs, over, under),
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Product {
            family,
            op,
            lhs,
            rhs,
        } => match family {
            Family::Perm => {
                dendriform_product(op, &lhs, &rhs, Permutation::over, Permutation::under)
            }
            Family::Tree => dendriform_product(op, &lhs, &rhs, Tree::over, Tree::under),
            Family::Cube => product(op, &lhs, &rhs, SignVector::over, SignVector::under),
        },
        Command::Map { which, arg } => Ok(match which {
            MapKind::Psi => format!("{}\n", tree::psi(&parse(&arg)?)),
            MapKind::Phi => format!("{}\n", cube::phi(&parse(&arg)?)?),
            MapKind::Psistar => render(&psi_star(&parse(&arg)?)),
            MapKind::Phistar => render(&phi_star(&parse(&arg)?)),
            MapKind::Minperm => format!("{}\n", tree::min_perm(&parse(&arg)?)?),
            MapKind::Maxperm => format!("{}\n", tree::max_perm(&parse(&arg)?)?),
            MapKind::Mintree => format!("{}\n", cube::min_tree(&parse(&arg)?)?),
            MapKind::Maxtree => format!("{}\n", cube::max_tree(&parse(&arg)?)?),
        }),
        Command::Interval { family, low, high } => Ok(match family {
            Family::Perm => lines(&Permutation::interval(&parse(&low)?, &parse(&high)?)?),
            Family::Tree => lines(&Tree::interval(&parse(&low)?, &parse(&high)?)?),
            Family::Cube => lines(&SignVector::interval(&parse(&low)?, &parse(&high)?)?),
        }),
        Command::Fiber { which, arg } => Ok(match which {
            FiberKind::Psi => lines(&tree::fiber(&parse(&arg)?)?),
            FiberKind::Phi => lines(&cube::fiber(&parse(&arg)?)?),
        }),
        Command::Hasse {
            family,
            n,
            format: Format::Dot,
        } => Ok(match family {
            Family::Perm => hasse::perm_dot(n),
            Family::Tree => hasse::tree_dot(n),
            Family::Cube => hasse::cube_dot(n),
        }),
        Command::Verify { suite, max_degree } => {
            let Some(s) = verify::find(&suite) else {
                let known: Vec<_> = verify::SUITES.iter().map(|s| s.name).collect();
                return Err(Failure::Usage(format!(
                    "unknown suite {suite:?}; known suites: {}",
                    known.join(", ")
                )));
            };
            let report = s.run(max_degree.unwrap_or(s.default_degree));
            if report.passed() {
                Ok(report.to_string())
            } else {
                Err(Failure::Violation(report.to_string()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Violation(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
