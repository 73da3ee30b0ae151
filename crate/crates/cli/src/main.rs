//! `sturm`: count and isolate real roots of rational polynomials, exactly.
//!
//! Exit codes: 0 success, 2 input parse failure, 3 domain error (zero or
//! constant polynomial where degree >= 1 is required, inverted interval,
//! bad epsilon), 4 degenerate endpoint under the strict policy.

// Kernel errors carry rationals inline; see the same allow in sturm-core.
#![allow(clippy::result_large_err)]

mod expr;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sturm_core::{
    count_roots, isolate_roots, refine_root, EndpointPolicy, Error, Interval, Polynomial, Rational,
    RootReport, SturmSequence,
};

#[derive(Parser)]
#[command(
    name = "sturm",
    version,
    about = "Exact real-root counting for rational polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the pseudo-remainder sequence seeded by (f, f')
    Seq {
        #[command(flatten)]
        input: PolyInput,
        /// Show implicit zero entries up to index deg(f)
        #[arg(long)]
        padded: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count distinct real roots in the half-open interval (a, b]
    Count {
        #[command(flatten)]
        input: PolyInput,
        /// Left endpoint, excluded from the interval
        #[arg(short, long, allow_hyphen_values = true)]
        a: Rational,
        /// Right endpoint, included in the interval
        #[arg(short, long, allow_hyphen_values = true)]
        b: Rational,
        /// How to treat endpoints that are multiple roots
        #[arg(long, value_enum, default_value_t = Policy::Strict)]
        policy: Policy,
        /// Also print the variation counts V(a) and V(b)
        #[arg(long)]
        verbose: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Isolate each distinct real root in its own interval
    Isolate {
        #[command(flatten)]
        input: PolyInput,
        /// Refine every interval to width at most this rational, e.g. 1/1000
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<Rational>,
        /// Append K-digit decimal approximations (text output only)
        #[arg(long, value_name = "K")]
        decimal: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate f, f', and the sign sequence at a point
    Eval {
        #[command(flatten)]
        input: PolyInput,
        /// Evaluation point
        #[arg(short, long, allow_hyphen_values = true)]
        c: Rational,
        /// Append K-digit decimal approximations (text output only)
        #[arg(long, value_name = "K")]
        decimal: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PolyInput {
    /// Polynomial expression like "x^4-2x^2+1"; "-" reads stdin
    #[arg(long, allow_hyphen_values = true)]
    expr: Option<String>,
    /// Comma-separated coefficients, lowest degree first, like "-3,7,-5,1"
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Policy {
    Strict,
    Squarefree,
}

impl Policy {
    fn endpoint_policy(self) -> EndpointPolicy {
        match self {
            Policy::Strict => EndpointPolicy::Strict,
            Policy::Squarefree => EndpointPolicy::SquareFree,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Policy::Strict => "strict",
            Policy::Squarefree => "squarefree",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateEndpoint { .. } => 4,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_failure(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: format!("parse error: {message}"),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Seq {
            input,
            padded,
            format,
        } => {
            let f = read_polynomial(&input)?;
            let seq = SturmSequence::new(&f)?;
            let shown = if padded { seq.padded_len() } else { seq.len() };
            let zero = Polynomial::zero();
            let entries: Vec<&Polynomial> = (0..shown)
                .map(|i| seq.polys().get(i).unwrap_or(&zero))
                .collect();
            match format {
                Format::Text => {
                    for (i, p) in entries.iter().enumerate() {
                        println!("p{i} = {p}  {}", coeff_list(p));
                    }
                }
                Format::Json => {
                    let payload = json!({
                        "command": "seq",
                        "input": coeff_strings(&f),
                        "padded": padded,
                        "sequence": entries.iter().map(|p| coeff_strings(p)).collect::<Vec<_>>(),
                    });
                    println!("{payload}");
                }
            }
        }
        Command::Count {
            input,
            a,
            b,
            policy,
            verbose,
            format,
        } => {
            let f = read_polynomial(&input)?;
            let interval = Interval::new(a, b)?;
            let count = count_roots(&f, &interval, policy.endpoint_policy())?;
            let (v_a, v_b) = if f.is_constant() {
                (0, 0)
            } else {
                let counted = match policy {
                    Policy::Strict => f.clone(),
                    Policy::Squarefree => f.square_free_part()?,
                };
                let seq = SturmSequence::new(&counted)?;
                (
                    seq.variations_at(interval.a()),
                    seq.variations_at(interval.b()),
                )
            };
            match format {
                Format::Text => {
                    println!("{count}");
                    if verbose {
                        println!("V({}) = {v_a}", interval.a());
                        println!("V({}) = {v_b}", interval.b());
                    }
                }
                Format::Json => {
                    let payload = json!({
                        "command": "count",
                        "input": coeff_strings(&f),
                        "a": interval.a().to_string(),
                        "b": interval.b().to_string(),
                        "policy": policy.name(),
                        "count": count,
                        "V_a": v_a,
                        "V_b": v_b,
                    });
                    println!("{payload}");
                }
            }
        }
        Command::Isolate {
            input,
            epsilon,
            decimal,
            format,
        } => {
            let f = read_polynomial(&input)?;
            let mut reports = isolate_roots(&f)?;
            if let Some(eps) = &epsilon {
                reports = reports
                    .iter()
                    .map(|r| refine_root(&f, r, eps))
                    .collect::<Result<_, _>>()?;
            }
            match format {
                Format::Text => {
                    for r in &reports {
                        match decimal {
                            None => println!("{}", r.interval),
                            Some(k) => println!(
                                "{}  ~ ({}, {}]",
                                r.interval,
                                r.interval.a().to_decimal(k),
                                r.interval.b().to_decimal(k)
                            ),
                        }
                    }
                }
                Format::Json => {
                    let payload = json!({
                        "command": "isolate",
                        "input": coeff_strings(&f),
                        "epsilon": epsilon.as_ref().map(|e| e.to_string()),
                        "roots": reports.iter().map(report_json).collect::<Vec<_>>(),
                    });
                    println!("{payload}");
                }
            }
        }
        Command::Eval {
            input,
            c,
            decimal,
            format,
        } => {
            let f = read_polynomial(&input)?;
            let seq = SturmSequence::new(&f)?;
            let value = f.eval(&c);
            let derivative = f.derivative().eval(&c);
            let signs = seq.sign_sequence(&c);
            let variations = signs.variations();
            match format {
                Format::Text => {
                    match decimal {
                        None => {
                            println!("f({c}) = {value}");
                            println!("f'({c}) = {derivative}");
                        }
                        Some(k) => {
                            println!("f({c}) = {value}  ~ {}", value.to_decimal(k));
                            println!("f'({c}) = {derivative}  ~ {}", derivative.to_decimal(k));
                        }
                    }
                    println!("signs = {signs}");
                    println!("V = {variations}");
                }
                Format::Json => {
                    let payload = json!({
                        "command": "eval",
                        "input": coeff_strings(&f),
                        "c": c.to_string(),
                        "value": value.to_string(),
                        "derivative": derivative.to_string(),
                        "signs": signs.signs(),
                        "variations": variations,
                    });
                    println!("{payload}");
                }
            }
        }
    }
    Ok(())
}

fn read_polynomial(input: &PolyInput) -> Result<Polynomial, Failure> {
    if let Some(expr) = &input.expr {
        let text = if expr == "-" {
            std::io::read_to_string(std::io::stdin())
                .map_err(|e| parse_failure(format!("could not read stdin: {e}")))?
        } else {
            expr.clone()
        };
        expr::parse_polynomial(text.trim()).map_err(parse_failure)
    } else if let Some(coeffs) = &input.coeffs {
        expr::parse_coeffs(coeffs).map_err(parse_failure)
    } else {
        unreachable!("clap enforces exactly one input form");
    }
}

fn coeff_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn coeff_list(p: &Polynomial) -> String {
    format!("[{}]", coeff_strings(p).join(", "))
}

fn report_json(r: &RootReport) -> serde_json::Value {
    json!({
        "a": r.interval.a().to_string(),
        "b": r.interval.b().to_string(),
        "V_a": r.variations_left,
        "V_b": r.variations_right,
    })
}
