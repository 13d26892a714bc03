//! Command-line interface.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bimodule::BSBimodule;
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::hecke::{
    all_pass, hecke_check, homfly, inverse_check, markov_check, trace_property_check, CheckCase,
    DEFAULT_LENGTH_BOUND,
};
use crate::homology::{ehr_reconstruct, hh_dims};
use crate::selftest::run_selftest;
use crate::trace::{BraidWord, TraceEngine, DEFAULT_TRUNCATION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_TRUNCATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "krtrace",
    version,
    about = "Exact Khovanov–Rozansky traces of braid words over Coxeter systems"
)]
struct Cli {
    /// Emit JSON (default).
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,

    /// Emit human-readable text.
    #[arg(long, global = true)]
    plain: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SystemArgs {
    /// Preset (A1 A2 A3 B2 B3 H2 H3 Atilde1), a path to a JSON file
    /// `{"rank": n, "m": [[...]]}`, or such JSON inline. `0` means ∞.
    #[arg(long)]
    coxeter: String,

    /// Truncation degree D for Hochschild dimensions.
    #[arg(long, default_value_t = DEFAULT_TRUNCATION as u64, value_parser = clap::value_parser!(u64).range(1..))]
    truncation: u64,

    /// Certification margin (default: 4 + word length).
    #[arg(long)]
    margin: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Trace ⟨σ⟩ of a braid word, e.g. --word "1 2 -1".
    Trace {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Hochschild dimension table of a Bott–Samelson word (positive letters).
    HhTable {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
    },
    /// Hilbert series numerators of HH of a Bott–Samelson word.
    Ehr {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
    },
    /// HOMFLY polynomial of a braid closure.
    Homfly {
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = DEFAULT_LENGTH_BOUND)]
        lenbound: usize,
    },
    /// Check trace identities exhaustively over short words.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Run the built-in invariant suite.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// ⟨bσ_s⟩ = z⟨b⟩ for all words b avoiding s.
    Markov {
        #[command(flatten)]
        sys: SystemArgs,
        /// 1-based generator.
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 2)]
        maxlen: usize,
    },
    /// ⟨aσ_s⟩ = q⟨aσ_s⁻¹⟩ + (q−1)⟨a⟩ for all words a and generators s.
    Hecke {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 2)]
        maxlen: usize,
    },
    /// ⟨ab⟩ = ⟨ba⟩ for all splits of all words.
    Traceprop {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 3)]
        maxlen: usize,
    },
    /// ⟨σ_sσ_s⁻¹⟩ = ⟨σ_s⁻¹σ_s⟩ = 1.
    Inverse {
        #[command(flatten)]
        sys: SystemArgs,
    },
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit code. All normal output goes to `out`, diagnostics to
/// `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let plain = cli.plain;
    let outcome = pool.install(|| execute(&cli.command, plain));
    match outcome {
        Ok((text, code)) => {
            let _ = write!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TruncationInsufficient { .. } => EXIT_TRUNCATION,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn load_system(spec: &str) -> Result<CoxeterSystem> {
    if let Ok(sys) = CoxeterSystem::preset(spec) {
        return Ok(sys);
    }
    if spec.trim_start().starts_with('{') {
        return CoxeterSystem::from_json(spec);
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {spec}: {e}")))?;
        return CoxeterSystem::from_json(&text);
    }
    Err(Error::UnknownPreset(spec.to_string()))
}

/// A Bott–Samelson word: positive 1-based letters.
fn parse_bs_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let w: BraidWord = text.parse()?;
    w.check_rank(rank)?;
    if w.letters().iter().any(|l| l.inverse) {
        return Err(Error::BraidParse(
            "Bott–Samelson words take positive letters only".into(),
        ));
    }
    Ok(w.letters().iter().map(|l| l.gen).collect())
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn check_output(cases: &[CheckCase], plain: bool) -> (String, i32) {
    let code = if all_pass(cases) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    };
    if !plain {
        return (to_json(&cases), code);
    }
    let mut s = String::new();
    for c in cases {
        let word = if c.word.is_empty() {
            "(empty)"
        } else {
            &c.word
        };
        let status = if c.pass { "pass" } else { "FAIL" };
        s.push_str(&format!("{status}  {word}\n"));
        if !c.pass {
            s.push_str(&format!("      lhs = {}\n      rhs = {}\n", c.lhs, c.rhs));
        }
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    s.push_str(&format!("{passed}/{} passed\n", cases.len()));
    (s, code)
}

fn engine_for<'a>(sys: &'a CoxeterSystem, args: &SystemArgs) -> TraceEngine<'a> {
    TraceEngine::new(sys, args.truncation as usize, args.margin)
}

fn execute(cmd: &Command, plain: bool) -> Result<(String, i32)> {
    match cmd {
        Command::Trace { sys: args, word } => {
            let sys = load_system(&args.coxeter)?;
            let w: BraidWord = word.parse()?;
            let v = engine_for(&sys, args).kr_trace(&w)?;
            Ok(if plain {
                (format!("{v}\n"), EXIT_OK)
            } else {
                (to_json(&v), EXIT_OK)
            })
        }
        Command::HhTable { sys: args, word } => {
            let sys = load_system(&args.coxeter)?;
            let w = parse_bs_word(word, sys.rank())?;
            let theta = BSBimodule::build(&sys, &w)?;
            let table = hh_dims(&theta, sys.field(), args.truncation as usize)?;
            if plain {
                let mut s = format!("HH_j(R, Θ)_d, d = 0..{}\n", table.truncation);
                for (j, row) in table.dims.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|d| format!("{d:>4}")).collect();
                    s.push_str(&format!("j={j}:{}\n", cells.join("")));
                }
                Ok((s, EXIT_OK))
            } else {
                let v = json!({
                    "coxeter": sys.name(),
                    "word": word.trim(),
                    "n": table.n,
                    "truncation": table.truncation,
                    "dims": table.dims,
                });
                Ok((to_json(&v), EXIT_OK))
            }
        }
        Command::Ehr { sys: args, word } => {
            let sys = load_system(&args.coxeter)?;
            let w = parse_bs_word(word, sys.rank())?;
            let theta = BSBimodule::build(&sys, &w)?;
            let table = hh_dims(&theta, sys.field(), args.truncation as usize)?;
            let margin = args.margin.unwrap_or(4 + w.len());
            let e = ehr_reconstruct(&table, margin);
            let code = if e.certified {
                EXIT_OK
            } else {
                EXIT_TRUNCATION
            };
            if plain {
                let mut s = format!("denominator (1-q)^{}\n", e.n);
                for (j, nj) in e.numerators.iter().enumerate() {
                    let terms: Vec<String> = nj
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| **c != 0)
                        .map(|(k, c)| format!("{c}*q^{k}"))
                        .collect();
                    let body = if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.join(" + ")
                    };
                    s.push_str(&format!("N_{j} = {body}\n"));
                }
                s.push_str(&format!(
                    "certified: {} (D = {}, margin = {margin})\n",
                    e.certified, e.truncation
                ));
                Ok((s, code))
            } else {
                let v = json!({
                    "coxeter": sys.name(),
                    "word": word.trim(),
                    "n": e.n,
                    "truncation": e.truncation,
                    "margin": margin,
                    "certified": e.certified,
                    "numerators": e.numerators,
                });
                Ok((to_json(&v), code))
            }
        }
        Command::Homfly {
            strands,
            word,
            lenbound,
        } => {
            let w: BraidWord = word.parse()?;
            let p = homfly(*strands, &w, *lenbound)?;
            Ok(if plain {
                (format!("{p}\n"), EXIT_OK)
            } else {
                (to_json(&p), EXIT_OK)
            })
        }
        Command::Verify { check } => {
            let cases = match check {
                VerifyCommand::Markov { sys, s, maxlen } => {
                    let system = load_system(&sys.coxeter)?;
                    if *s == 0 || *s > system.rank() {
                        return Err(Error::GeneratorOutOfRange {
                            index: *s,
                            rank: system.rank(),
                        });
                    }
                    markov_check(&engine_for(&system, sys), s - 1, *maxlen)?
                }
                VerifyCommand::Hecke { sys, maxlen } => {
                    let system = load_system(&sys.coxeter)?;
                    hecke_check(&engine_for(&system, sys), *maxlen)?
                }
                VerifyCommand::Traceprop { sys, maxlen } => {
                    let system = load_system(&sys.coxeter)?;
                    trace_property_check(&engine_for(&system, sys), *maxlen)?
                }
                VerifyCommand::Inverse { sys } => {
                    let system = load_system(&sys.coxeter)?;
                    inverse_check(&engine_for(&system, sys))?
                }
            };
            Ok(check_output(&cases, plain))
        }
        Command::Selftest { truncation } => {
            let results = run_selftest(*truncation);
            let code = if results.iter().all(|r| r.pass) {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            if plain {
                let mut s = String::new();
                for r in &results {
                    let status = if r.pass { "pass" } else { "FAIL" };
                    s.push_str(&format!("{status}  {}", r.name));
                    if !r.detail.is_empty() {
                        s.push_str(&format!("  ({})", r.detail));
                    }
                    s.push('\n');
                }
                Ok((s, code))
            } else {
                Ok((to_json(&results), code))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("krtrace").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn trace_of_a_letter() {
        let (code, out, _) = call(&["trace", "--coxeter", "A1", "--word", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["num"], json!([[-1, 1, 1], [1, 2, 1]]));
        assert_eq!(v["den_one_plus_tq_pow"], 1);
        assert_eq!(v["den_q_pow"], 0);
    }

    #[test]
    fn empty_word_and_plain_mode() {
        let (code, out, _) = call(&["trace", "--coxeter", "A1", "--word", "", "--plain"]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
        let (code, out, _) = call(&["--plain", "trace", "--coxeter", "A2", "--word", "-1"]);
        assert_eq!((code, out.as_str()), (0, "(1 - q)/(q*(1+t*q))\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            call(&["trace", "--coxeter", "A9", "--word", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["trace", "--coxeter", "A1", "--word", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["trace", "--coxeter", "A1"]).0, EXIT_USAGE);
        assert_eq!(
            call(&[
                "trace",
                "--coxeter",
                "A1",
                "--word",
                "1",
                "--truncation",
                "0"
            ])
            .0,
            EXIT_USAGE
        );
        let (code, _, err) = call(&[
            "trace",
            "--coxeter",
            "A2",
            "--word",
            "1 2 1",
            "--truncation",
            "4",
        ]);
        assert_eq!(code, EXIT_TRUNCATION);
        assert!(err.contains("truncation insufficient"));
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn inline_json_system() {
        let (code, out, _) = call(&[
            "trace",
            "--coxeter",
            r#"{"rank":2,"m":[[1,0],[0,1]]}"#,
            "--word",
            "1 -2",
        ]);
        assert_eq!(code, 0, "{out}");
        let (code, _, err) = call(&[
            "trace",
            "--coxeter",
            r#"{"rank":2,"m":[[1,1],[1,1]]}"#,
            "--word",
            "",
        ]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("off-diagonal entry must be ≥ 2 or ∞"), "{err}");
    }

    #[test]
    fn hh_table_of_a_letter() {
        let (code, out, _) = call(&[
            "hh-table",
            "--coxeter",
            "A1",
            "--word",
            "1",
            "--truncation",
            "4",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dims"], json!([[1, 1, 1, 1, 1], [0, 0, 1, 1, 1]]));
        assert_eq!(
            call(&["hh-table", "--coxeter", "A1", "--word", "-1"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn ehr_certification_exit_code() {
        let (code, out, _) = call(&[
            "ehr",
            "--coxeter",
            "A2",
            "--word",
            "1 2",
            "--truncation",
            "4",
        ]);
        assert_eq!(code, EXIT_TRUNCATION);
        assert!(out.contains("\"certified\":false"));
        assert_eq!(
            call(&["ehr", "--coxeter", "A2", "--word", "1 2"]).0,
            EXIT_OK
        );
    }

    #[test]
    fn markov_report() {
        let (code, out, _) = call(&[
            "verify",
            "markov",
            "--coxeter",
            "H2",
            "--s",
            "2",
            "--maxlen",
            "2",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let cases = v.as_array().unwrap();
        assert_eq!(cases.len(), 7);
        assert!(cases.iter().all(|c| c["pass"] == json!(true)));
        assert_eq!(
            call(&["verify", "markov", "--coxeter", "H2", "--s", "3"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn homfly_of_the_unknot() {
        let (code, out, _) = call(&["--plain", "homfly", "--strands", "2", "--word", "-1"]);
        assert_eq!((code, out.as_str()), (0, "1\n"));
    }
}
