//! Command-line surface: expand basis expressions, run verification
//! suites, enumerate index families, and print dimension and series
//! tables.

mod expr;
mod value;
mod verify;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use parkhopf::series::{named_series, Named, DEFAULT_ORDER};
use parkhopf::words::{self, Family};

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "parkhopf", version, about = "Exact computations in the parking-function algebras", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Degree cap for products and enumerations (also PARKHOPF_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Seed for the sampled checks inside `verify`.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a basis expression, e.g. "F[1]*F[1,1]" or "G[1,3,1]".
    Expand {
        /// Expression over basis atoms with +, -, * (outer), . (internal),
        /// and the prefix operators Delta, DeltaL, DeltaR.
        expr: String,
        /// Apply the coproduct to the result.
        #[arg(long)]
        coproduct: bool,
    },
    /// Run a verification suite and report each check.
    Verify {
        /// One of: hopf, bidendriform, tridendriform, duality, internal,
        /// ribbons, realization, series, counts, all.
        suite: String,
        /// Degree bound for the suite (most checks cap themselves at 4-6).
        #[arg(default_value_t = 4)]
        max_degree: usize,
    },
    /// List an index family at a given size.
    Enumerate {
        /// One of: pf, ppf, ndpf, ndppf, perm, comp, segcomp, classes, pqs.
        kind: String,
        n: usize,
    },
    /// Dimension table of one of the graded algebras.
    Dims {
        /// One of: PQSym, SQSym, CQSym, SCQSym.
        algebra: String,
        n_max: usize,
    },
    /// Print a named generating series (or list the known names).
    Series {
        /// Name from `series --list`.
        name: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = value::Caps::new(cli.cap);
    match run(cli, caps) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, caps: value::Caps) -> Result<ExitCode, String> {
    match cli.command {
        Command::Expand { expr, coproduct } => {
            let mut parsed = expr::Parser::parse(&expr).map_err(|e| e.to_string())?;
            if coproduct {
                parsed = expr::Expr::Delta(Box::new(parsed));
            }
            let result = value::eval(&parsed, caps).map_err(|e| e.0)?;
            match (cli.format, &result) {
                (Format::Text, value::Value::Scalar(c)) => println!("{c}"),
                (Format::Text, value::Value::Elem(x)) => println!("{}", x.render_text()),
                (Format::Text, value::Value::Tensor(t)) => println!("{}", t.render_text()),
                (Format::Json, value::Value::Scalar(c)) => {
                    println!("{}", serde_json::json!({ "scalar": format!("{c}") }))
                }
                (Format::Json, value::Value::Elem(x)) => {
                    for term in x.json_terms() {
                        println!("{term}");
                    }
                }
                (Format::Json, value::Value::Tensor(t)) => {
                    for term in t.json_terms() {
                        println!("{term}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_degree } => {
            let checks = verify::build_suite(&suite, max_degree, cli.seed).ok_or_else(|| {
                format!(
                    "unknown suite {suite:?}; expected one of {}",
                    verify::SUITES.join(", ")
                )
            })?;
            let results = verify::run_suite(checks);
            let all_pass = results.iter().all(|r| r.pass);
            match cli.format {
                Format::Text => {
                    for r in &results {
                        let status = if r.pass { "ok  " } else { "FAIL" };
                        let detail = if r.detail.is_empty() {
                            String::new()
                        } else {
                            format!(" — {}", r.detail)
                        };
                        println!(
                            "{status} {} (degree {}, {} ms){detail}",
                            r.name, r.degree, r.elapsed_ms
                        );
                    }
                    println!(
                        "{} checks, {} failed",
                        results.len(),
                        results.iter().filter(|r| !r.pass).count()
                    );
                }
                Format::Json => {
                    let report = serde_json::json!({
                        "suite": suite,
                        "max_degree": max_degree,
                        "pass": all_pass,
                        "checks": results.iter().map(|r| serde_json::json!({
                            "name": r.name,
                            "degree": r.degree,
                            "pass": r.pass,
                            "elapsed_ms": r.elapsed_ms,
                            "detail": r.detail,
                        })).collect::<Vec<_>>(),
                    });
                    println!("{report}");
                }
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Enumerate { kind, n } => {
            let cap = caps.outer;
            let items: Vec<(Vec<u32>, Vec<usize>)> = match kind.as_str() {
                "pf" | "PF" => enumerate_words(Family::ParkingFunctions, n, cap)?,
                "ppf" | "PPF" => enumerate_words(Family::PrimeParkingFunctions, n, cap)?,
                "ndpf" | "NDPF" => {
                    enumerate_words(Family::NondecreasingParkingFunctions, n, cap)?
                }
                "ndppf" | "NDPPF" => {
                    enumerate_words(Family::NondecreasingPrimeParkingFunctions, n, cap)?
                }
                "perm" | "permutations" => enumerate_words(Family::Permutations, n, cap)?,
                "comp" | "compositions" => {
                    check_cap(n, cap)?;
                    words::compositions(n)
                        .into_iter()
                        .map(|c| (c.parts().to_vec(), Vec::new()))
                        .collect()
                }
                "segcomp" | "segmented-compositions" => {
                    check_cap(n, cap)?;
                    parkhopf::scqsym::segmented_compositions(n)
                        .into_iter()
                        .map(|c| {
                            let (parts, bars) = c.render_parts();
                            (parts, bars)
                        })
                        .collect()
                }
                "classes" | "quasi-ribbons" => {
                    check_cap(n, cap)?;
                    parkhopf::sqsym::segmented_words(n)
                        .into_iter()
                        .map(|q| q.render_parts())
                        .collect()
                }
                "pqs" | "PQS" => {
                    check_cap(n, cap)?;
                    parkhopf::sqsym::pqs_generators(n)
                        .into_iter()
                        .map(|q| q.render_parts())
                        .collect()
                }
                other => {
                    return Err(format!(
                        "unknown kind {other:?}; expected pf, ppf, ndpf, ndppf, perm, comp, \
                         segcomp, classes or pqs"
                    ))
                }
            };
            match cli.format {
                Format::Text => {
                    for (letters, bars) in &items {
                        println!("{}", render_compact(letters, bars));
                    }
                }
                Format::Json => {
                    for (letters, bars) in &items {
                        println!(
                            "{}",
                            serde_json::json!({ "index": letters, "bars": bars })
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims { algebra, n_max } => {
            let dims: Vec<u128> = match algebra.as_str() {
                "PQSym" | "pqsym" => (1..=n_max).map(|n| words::parking_count(n as u64)).collect(),
                "SQSym" | "sqsym" => series_dims(Named::LittleSchroder, n_max)?,
                "CQSym" | "cqsym" => (1..=n_max).map(|n| words::catalan(n as u64)).collect(),
                "SCQSym" | "scqsym" => (1..=n_max)
                    .map(|n| 3u128.pow(n as u32 - 1))
                    .collect(),
                other => {
                    return Err(format!(
                        "unknown algebra {other:?}; expected PQSym, SQSym, CQSym or SCQSym"
                    ))
                }
            };
            match cli.format {
                Format::Text => {
                    for (n, d) in dims.iter().enumerate() {
                        println!("{}\t{}", n + 1, d);
                    }
                }
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::json!({ "algebra": algebra, "dims": dims.iter().map(|d| d.to_string()).collect::<Vec<_>>() })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { name, order, list } => {
            if list || name.is_none() {
                for (name, _) in Named::all() {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let name = name.unwrap();
            let which = Named::parse(&name).map_err(|e| e.to_string())?;
            let s = named_series(which, order);
            match cli.format {
                Format::Text => {
                    for n in 0..order {
                        println!("{n}\t{}", s.coeff(n));
                    }
                }
                Format::Json => {
                    let coeffs: Vec<String> =
                        (0..order).map(|n| s.coeff(n).to_string()).collect();
                    println!(
                        "{}",
                        serde_json::json!({ "series": name, "order": order, "coeffs": coeffs })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<(), String> {
    if n > cap {
        return Err(format!("size {n} exceeds the cap {cap} (raise with --cap)"));
    }
    Ok(())
}

fn enumerate_words(
    family: Family,
    n: usize,
    cap: usize,
) -> Result<Vec<(Vec<u32>, Vec<usize>)>, String> {
    let words = words::enumerate(family, n, cap).map_err(|e| e.to_string())?;
    Ok(words
        .into_iter()
        .map(|w| (w.letters().to_vec(), Vec::new()))
        .collect())
}

fn series_dims(which: Named, n_max: usize) -> Result<Vec<u128>, String> {
    let s = named_series(which, n_max + 1);
    (1..=n_max)
        .map(|n| {
            let c = s.coeff(n);
            c.to_integer()
                .to_string()
                .parse::<u128>()
                .map_err(|_| "series coefficient out of range".to_string())
        })
        .collect()
}

fn render_compact(letters: &[u32], bars: &[usize]) -> String {
    let bars: BTreeSet<usize> = bars.iter().copied().collect();
    let mut out = String::new();
    let all_small = letters.iter().all(|&x| x <= 9);
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            if bars.contains(&i) {
                out.push('|');
            } else if !all_small {
                out.push(',');
            }
        }
        out.push_str(&x.to_string());
    }
    if letters.is_empty() {
        out.push('e');
    }
    out
}
