use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mugen::parse::parse_ideal_with;
use mugen::report::{exponent_value, ideal_rows, monomial_row, Format};
use mugen::search::{counterexample_search, Predicate, SearchConfig};
use mugen::suites::{run_suite, RunConfig};
use mugen::{EXIT_FAIL, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use mugen_core::artinian::{cm_type_with_ceiling, irreducible_decomposition_with_ceiling, socle_with_ceiling};
use mugen_core::fiber::{analytic_spread_estimate, h_vector, mu_series_with_ceiling, spread_for_h_vector};
use mugen_core::planar::{staircase, triangle};
use mugen_core::{CoreError, MonomialIdeal};
use serde_json::{json, Value};

/// Exact computations with monomial ideals and randomized checks of
/// generator-count theorems.
#[derive(Parser)]
#[command(name = "mugen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random instances per random source.
    #[arg(long, global = true)]
    samples: Option<u64>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest exponent (or degree) in generated corpora.
    #[arg(long, global = true)]
    max_exp: Option<u64>,
    /// Largest number of generators in generated corpora.
    #[arg(long, global = true)]
    max_gens: Option<usize>,
    /// Number of variables; inferred from the input when omitted.
    #[arg(long, global = true)]
    arity: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal number of generators, of the ideal or of a power.
    Mu {
        ideal: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Minimal generators of the product.
    Product { left: String, right: String },
    /// Minimal generators of the intersection.
    Intersect { left: String, right: String },
    /// μ(I^k) for k = 0..=K.
    Series {
        ideal: String,
        #[arg(long = "kmax", default_value_t = 6)]
        k_max: usize,
    },
    /// Numerator of the generating function of μ(I^k).
    Hvector {
        ideal: String,
        #[arg(long = "kmax", default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        tail: usize,
    },
    /// Analytic spread: exact for equigenerated ideals, estimated otherwise.
    Spread {
        ideal: String,
        /// Estimate from finite differences even when an exact answer exists.
        #[arg(long)]
        estimate: bool,
        /// Window `a:b` of powers used by the estimate.
        #[arg(long, value_parser = parse_window)]
        window: Option<(usize, usize)>,
    },
    /// Cohen–Macaulay type of S/I for artinian I, with its socle.
    Type {
        ideal: String,
        #[arg(long, default_value_t = mugen_core::artinian::DEFAULT_VOLUME_CEILING)]
        volume_ceiling: u64,
    },
    /// Irreducible decomposition of an artinian ideal.
    Decompose {
        ideal: String,
        #[arg(long, default_value_t = mugen_core::artinian::DEFAULT_VOLUME_CEILING)]
        volume_ceiling: u64,
    },
    /// The triangle of products u_i u_j with the generators of I² marked.
    Triangle { ideal: String },
    /// Run a theorem suite.
    Check {
        suite: String,
        #[arg(long = "kmax")]
        k_max: Option<usize>,
        #[arg(long)]
        tail: Option<usize>,
        /// Skip exhaustive sources.
        #[arg(long)]
        random_only: bool,
        #[arg(long, default_value_t = 5)]
        max_witnesses: usize,
        #[arg(long, default_value_t = mugen_core::artinian::DEFAULT_VOLUME_CEILING)]
        volume_ceiling: u64,
        #[arg(long, default_value_t = mugen_core::fiber::DEFAULT_GENERATOR_CEILING)]
        generator_ceiling: usize,
    },
    /// Look for an ideal satisfying a predicate.
    Search {
        #[arg(value_enum)]
        predicate: Predicate,
        #[arg(long = "kmax", default_value_t = 4)]
        k_max: usize,
    },
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or("expected a:b")?;
    let a = a.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<usize>().map_err(|e| e.to_string())?;
    Ok((a, b))
}

struct Failure {
    code: i32,
    message: String,
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::ResourceLimit { .. } => EXIT_RESOURCE,
            CoreError::Inconsistent(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn ideal(text: &str, arity: Option<usize>) -> Result<MonomialIdeal, Failure> {
    let parsed = parse_ideal_with(text, arity).map_err(|e| usage(format!("cannot parse '{text}': {e}")))?;
    for m in &parsed.redundant {
        eprintln!("warning: dropped redundant generator {m}");
    }
    Ok(parsed.ideal)
}

/// Two ideals in a common number of variables.
fn pair(left: &str, right: &str, arity: Option<usize>) -> Result<(MonomialIdeal, MonomialIdeal), Failure> {
    let (i, j) = (ideal(left, arity)?, ideal(right, arity)?);
    if i.arity() == j.arity() {
        return Ok((i, j));
    }
    let n = i.arity().max(j.arity());
    Ok((ideal(left, Some(n))?, ideal(right, Some(n))?))
}

fn emit(format: Format, value: Value, table: String, csv: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
        Format::Table => print!("{table}"),
        Format::Csv => print!("{csv}"),
    }
}

fn emit_ideal(format: Format, label: &str, i: &MonomialIdeal) {
    emit(
        format,
        json!({ "ideal": ideal_rows(i), "text": i.to_string(), "mu": i.mu() }),
        format!("{label} = ({i})\nμ = {}\n", i.mu()),
        format!("mu\n{}\n", i.mu()),
    );
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let c = cli.common;
    let f = c.format;
    match cli.command {
        Command::Mu { ideal: text, power } => {
            let i = ideal(&text, c.arity)?;
            let p = i.power(power);
            emit(
                f,
                json!({ "ideal": ideal_rows(&i), "power": power, "mu": p.mu() }),
                format!("μ(I^{power}) = {}\n", p.mu()),
                format!("power,mu\n{power},{}\n", p.mu()),
            );
        }
        Command::Product { left, right } => {
            let (i, j) = pair(&left, &right, c.arity)?;
            emit_ideal(f, "IJ", &i.product(&j)?);
        }
        Command::Intersect { left, right } => {
            let (i, j) = pair(&left, &right, c.arity)?;
            emit_ideal(f, "I ∩ J", &i.intersect(&j)?);
        }
        Command::Series { ideal: text, k_max } => {
            let i = ideal(&text, c.arity)?;
            let s = mu_series_with_ceiling(&i, k_max, mugen_core::fiber::DEFAULT_GENERATOR_CEILING)?;
            let rows: String = s.values.iter().enumerate().map(|(k, v)| format!("{k},{v}\n")).collect();
            emit(
                f,
                json!({ "ideal": ideal_rows(&i), "k_max": k_max, "series": s.values }),
                s.values.iter().enumerate().map(|(k, v)| format!("μ(I^{k}) = {v}\n")).collect(),
                format!("k,mu\n{rows}"),
            );
        }
        Command::Hvector { ideal: text, k_max, tail } => {
            let i = ideal(&text, c.arity)?;
            let h = h_vector(&i, k_max, tail)?;
            let trimmed: Vec<String> = h.trimmed().iter().map(|v| v.to_string()).collect();
            let json_h: Vec<Value> = h.trimmed().iter().map(big_value).collect();
            emit(
                f,
                json!({ "ideal": ideal_rows(&i), "spread": h.spread, "h": json_h, "stabilized": h.stabilized,
                        "k_max": k_max, "tail_window": tail }),
                format!(
                    "ℓ = {}\nh = ({})\n{}\n",
                    h.spread,
                    trimmed.join(", "),
                    if h.stabilized { "stabilized" } else { "not stabilized on this window" }
                ),
                format!("i,h\n{}", trimmed.iter().enumerate().map(|(k, v)| format!("{k},{v}\n")).collect::<String>()),
            );
        }
        Command::Spread { ideal: text, estimate, window } => {
            let i = ideal(&text, c.arity)?;
            let exact_available = i.is_equigenerated() || i.arity() == 2;
            let (spread, exact, confident) = if estimate || window.is_some() || !exact_available {
                let (lo, hi) = window.unwrap_or((2, 8));
                let e = analytic_spread_estimate(&i, lo, hi)?;
                (e.spread, false, e.confident)
            } else {
                (spread_for_h_vector(&i, 2)?, true, true)
            };
            emit(
                f,
                json!({ "ideal": ideal_rows(&i), "spread": spread, "exact": exact, "confident": confident }),
                format!(
                    "ℓ = {spread}{}\n",
                    if exact { "" } else if confident { " (estimate)" } else { " (estimate, not confident)" }
                ),
                format!("spread,exact,confident\n{spread},{exact},{confident}\n"),
            );
        }
        Command::Type { ideal: text, volume_ceiling } => {
            let i = ideal(&text, c.arity)?;
            let t = cm_type_with_ceiling(&i, volume_ceiling)?;
            let soc = socle_with_ceiling(&i, volume_ceiling)?;
            let list: Vec<String> = soc.iter().map(|m| m.to_string()).collect();
            emit(
                f,
                json!({ "ideal": ideal_rows(&i), "type": t,
                        "socle": soc.iter().map(monomial_row).collect::<Vec<_>>() }),
                format!("type = {t}\nsocle: {}\n", list.join(", ")),
                format!("type\n{t}\n"),
            );
        }
        Command::Decompose { ideal: text, volume_ceiling } => {
            let i = ideal(&text, c.arity)?;
            let comps = irreducible_decomposition_with_ceiling(&i, volume_ceiling)?;
            let texts: Vec<String> = comps.iter().map(|q| format!("({})", q.to_ideal())).collect();
            let rows: Vec<Vec<String>> =
                comps.iter().map(|q| q.exponents().iter().map(|e| e.to_string()).collect()).collect();
            emit(
                f,
                json!({ "ideal": ideal_rows(&i),
                        "components": comps.iter().map(|q| q.exponents().iter().map(exponent_value).collect::<Vec<_>>()).collect::<Vec<_>>() }),
                format!("{} components\n{}\n", comps.len(), texts.join(" ∩ ")),
                format!(
                    "component\n{}",
                    rows.iter().map(|r| format!("{}\n", r.join(" "))).collect::<String>()
                ),
            );
        }
        Command::Triangle { ideal: text } => {
            let i = ideal(&text, c.arity)?;
            let s = staircase(&i)?;
            let entries = triangle(&s);
            let m = s.len();
            let mut table = String::new();
            for row in 1..=m {
                let cells: Vec<String> = (1..=m)
                    .map(|col| {
                        entries
                            .iter()
                            .find(|e| e.position.i == row && e.position.j == col)
                            .map_or(String::new(), |e| {
                                let g = &e.position.monomial;
                                let cell = format!("({},{})", g.exponent(0), g.exponent(1));
                                if e.marked {
                                    format!("*{cell}")
                                } else {
                                    cell
                                }
                            })
                    })
                    .collect();
                table += &cells.iter().map(|c| format!("{c:>12}")).collect::<String>();
                table.push('\n');
            }
            table += &format!("marked (*) = G(I²), μ(I²) = {}\n", entries.iter().filter(|e| e.marked).count());
            let json_entries: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({ "i": e.position.i, "j": e.position.j,
                            "exponents": monomial_row(&e.position.monomial),
                            "marked": e.marked })
                })
                .collect();
            let csv: String = entries
                .iter()
                .map(|e| {
                    let g = &e.position.monomial;
                    format!("{},{},{},{},{}\n", e.position.i, e.position.j, g.exponent(0), g.exponent(1), e.marked)
                })
                .collect();
            emit(f, json!({ "ideal": ideal_rows(&i), "triangle": json_entries }), table, format!("i,j,x,y,marked\n{csv}"));
        }
        Command::Check { suite, k_max, tail, random_only, max_witnesses, volume_ceiling, generator_ceiling } => {
            let cfg = RunConfig {
                seed: c.seed,
                samples: c.samples,
                workers: c.workers,
                max_gens: c.max_gens,
                max_exp: c.max_exp,
                arity: c.arity,
                k_max,
                tail_window: tail,
                max_witnesses,
                volume_ceiling,
                generator_ceiling,
                random_only,
            };
            let report = run_suite(&suite, &cfg).map_err(|e| usage(e.to_string()))?;
            match f {
                Format::Json => println!("{}", report.to_json()),
                Format::Table => print!("{}", report.to_table()),
                Format::Csv => print!("{}", report.to_csv()),
            }
            return Ok(report.exit_code());
        }
        Command::Search { predicate, k_max } => {
            let cfg = SearchConfig {
                seed: c.seed,
                samples: c.samples,
                workers: c.workers,
                max_gens: c.max_gens,
                max_exp: c.max_exp,
                k_max,
            };
            let report = counterexample_search(predicate, &cfg).map_err(|e| usage(e.to_string()))?;
            let witness = report.witness.as_ref();
            emit(
                f,
                serde_json::to_value(&report).expect("serializable"),
                report.to_table(),
                format!(
                    "predicate,size,exhausted,index,witness\n{},{},{},{},\"{}\"\n",
                    report.predicate,
                    report.size,
                    report.exhausted,
                    witness.map_or(String::new(), |w| w.index.to_string()),
                    witness.map_or(String::new(), |w| w.text.join(" | "))
                ),
            );
            return Ok(report.exit_code(predicate));
        }
    }
    Ok(EXIT_OK)
}

fn big_value(v: &num_bigint::BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::from(v.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
