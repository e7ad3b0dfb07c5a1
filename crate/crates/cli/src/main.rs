//! Command-line front end for the plcom library. Exit codes: 0 success or
//! predicate true, 1 predicate false, 2 parse error, 3 domain error.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use plcom::plmap::PLMap;
use plcom::presentation::{self, RelatorCatalog};
use plcom::rational::{format_rational, parse_rational, Rational};
use plcom::testkit;
use plcom::thompson;
use plcom::words::Word;

#[derive(Parser)]
#[command(
    name = "plcom",
    version,
    about = "Exact arithmetic on eventually periodically affine PL maps"
)]
struct Cli {
    /// Emit machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word to its map, or to the map's value at a point.
    Eval {
        word: String,
        /// Rational argument, e.g. 5 or -7/4.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Test whether a word's map lies in a named group
    /// (F, Fprime, K, ComF, ComPlusF, H:p, A:p, AutPlusF).
    Member { group: String, word: String },
    /// Check every relator of a catalog ("T", "H1", or a file path).
    Relators { catalog: String },
    /// Print the abelianization of a catalog's presentation.
    Abelianize { catalog: String },
    /// Canonicalize a serialized map read from a file ("-" for stdin).
    Canonical { file: String },
    /// Print the germ pair of a word's map; the map must lie in K.
    Rho { word: String },
    /// Print the signed slope-quotient pair of a word's map.
    Quotient { word: String },
    /// Emit reproducible random words over catalog generators.
    Random {
        #[arg(long, default_value_t = 1)]
        words: u32,
        #[arg(long, default_value_t = 8)]
        length: u64,
        /// Comma-separated generator names.
        #[arg(long, default_value = "x0,x1,c")]
        gens: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum CliError {
    Parse(String),
    Domain(String),
}

fn parse_err(e: impl std::fmt::Display) -> CliError {
    CliError::Parse(e.to_string())
}

fn domain_err(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn eval_to_map(text: &str) -> Result<PLMap, CliError> {
    let word: Word = text.parse().map_err(parse_err)?;
    presentation::eval_word(&word, presentation::standard_lifts).map_err(domain_err)
}

fn positive_rational(text: &str) -> Result<Rational, CliError> {
    let p = parse_rational(text).map_err(parse_err)?;
    if p > Rational::from_integer(0.into()) {
        Ok(p)
    } else {
        Err(CliError::Domain(format!(
            "parameter must be positive, got {text}"
        )))
    }
}

fn membership(group: &str, m: &PLMap) -> Result<bool, CliError> {
    if let Some(p) = group.strip_prefix("H:") {
        return Ok(thompson::in_hp(m, &positive_rational(p)?));
    }
    if let Some(p) = group.strip_prefix("A:") {
        return Ok(thompson::in_ap(m, &positive_rational(p)?));
    }
    Ok(match group {
        "F" => thompson::in_f(m),
        "Fprime" => thompson::in_f_prime(m),
        "K" => thompson::in_k(m),
        "ComF" => thompson::in_com_f(m),
        "ComPlusF" => thompson::in_com_plus_f(m),
        "AutPlusF" => thompson::is_in_aut_plus_f(m),
        other => return Err(CliError::Domain(format!("unknown group {other}"))),
    })
}

fn load_catalog(name: &str) -> Result<RelatorCatalog, CliError> {
    if let Some(cat) = RelatorCatalog::by_name(name) {
        return Ok(cat);
    }
    let text = fs::read_to_string(name)
        .map_err(|e| CliError::Domain(format!("cannot read catalog {name}: {e}")))?;
    RelatorCatalog::from_text(&text).map_err(parse_err)
}

fn map_json(m: &PLMap) -> serde_json::Value {
    serde_json::from_str(&m.to_string()).expect("map serialization is valid JSON")
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Eval { word, at } => {
            let m = eval_to_map(word)?;
            match at {
                Some(t) => {
                    let t = parse_rational(t).map_err(parse_err)?;
                    let v = format_rational(&m.evaluate(&t));
                    if cli.json {
                        println!("{}", serde_json::json!({ "value": v }));
                    } else {
                        println!("{v}");
                    }
                }
                None => println!("{m}"),
            }
            Ok(0)
        }
        Command::Member { group, word } => {
            let m = eval_to_map(word)?;
            let is_member = membership(group, &m)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "group": group, "member": is_member })
                );
            } else {
                println!("{is_member}");
            }
            Ok(u8::from(!is_member))
        }
        Command::Relators { catalog } => {
            let cat = load_catalog(catalog)?;
            let report = presentation::verify_relators(&cat, presentation::standard_lifts)
                .map_err(domain_err)?;
            if cli.json {
                let checks: Vec<_> = report
                    .checks
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "relator": c.relator.to_string(),
                            "holds": c.holds,
                            "value": map_json(&c.value),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({ "all_hold": report.all_hold(), "checks": checks })
                );
            } else {
                for c in &report.checks {
                    if c.holds {
                        println!("ok    {}", c.relator);
                    } else {
                        println!("FAIL  {}  ->  {}", c.relator, c.value);
                    }
                }
                println!(
                    "{}",
                    if report.all_hold() {
                        "all relators hold"
                    } else {
                        "some relators fail"
                    }
                );
            }
            Ok(u8::from(!report.all_hold()))
        }
        Command::Abelianize { catalog } => {
            let cat = load_catalog(catalog)?;
            let ab = presentation::abelianization(&cat);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "free_rank": ab.free_rank,
                        "torsion": ab.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("{ab}");
            }
            Ok(0)
        }
        Command::Canonical { file } => {
            let text = if file == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(domain_err)?;
                buf
            } else {
                fs::read_to_string(file)
                    .map_err(|e| CliError::Domain(format!("cannot read {file}: {e}")))?
            };
            let m: PLMap = text.trim().parse().map_err(parse_err)?;
            println!("{}", m.canonicalize());
            Ok(0)
        }
        Command::Rho { word } => {
            let m = eval_to_map(word)?;
            let (neg, pos) = thompson::rho(&m).map_err(domain_err)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "neg": map_json(&neg), "pos": map_json(&pos) })
                );
            } else {
                println!("neg: {neg}");
                println!("pos: {pos}");
            }
            Ok(0)
        }
        Command::Quotient { word } => {
            let m = eval_to_map(word)?;
            let q = thompson::slope_quotient(&m);
            let s = thompson::orientation_sign(&m);
            let neg = format_rational(&s.apply(&q.neg));
            let pos = format_rational(&s.apply(&q.pos));
            if cli.json {
                println!("{}", serde_json::json!({ "neg": neg, "pos": pos }));
            } else {
                println!("({neg}, {pos})");
            }
            Ok(0)
        }
        Command::Random {
            words,
            length,
            gens,
            seed,
        } => {
            let names: Vec<&str> = gens
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            if names.is_empty() {
                return Err(CliError::Domain("empty generator list".into()));
            }
            for g in &names {
                if presentation::standard_lifts(g).is_none() {
                    return Err(CliError::Domain(format!("unknown generator {g}")));
                }
            }
            let mut r = testkit::rng(*seed);
            let out: Vec<String> = (0..*words)
                .map(|_| testkit::random_word(&mut r, &names, *length).to_string())
                .collect();
            if cli.json {
                println!("{}", serde_json::json!({ "words": out }));
            } else {
                for w in out {
                    println!("{w}");
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
