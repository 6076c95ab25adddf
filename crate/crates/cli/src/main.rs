//! `griess-lab`: exact tables, conformal-vector enumeration and character
//! identities for the nine extended-E8 coset algebras.

mod golden;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use griess_core::acceptance;
use griess_core::algebra::polynomial_system;
use griess_core::cases::CaseLabel;
use griess_core::chars::{parafermion_char, verify_decomposition, virasoro_char, ModuleLabel};
use griess_core::derive::derive_griess_table;
use griess_core::refdata::builtin_griess_table;
use griess_core::rat::{format_rat, parse_rat, Rat};
use griess_core::solver::{enumerate, TrackOptions};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_CHECK_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "griess-lab",
    version,
    about = "Coset Griess algebras of the sqrt(2)E8 lattice vertex algebra: exact tables, conformal vectors, characters"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct CaseArg {
    /// Case label (1A..3C, case-insensitive) or node index (0..8).
    case: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structure constants and Gram matrix of a case.
    Table {
        #[command(flatten)]
        case: CaseArg,
        /// Re-derive the table from the lattice (default).
        #[arg(long, conflicts_with = "builtin")]
        derive: bool,
        /// Use the published constants instead of deriving.
        #[arg(long)]
        builtin: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The nine inner-product values <e^, f^>.
    Mckay {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Homotopy enumeration of the conformal vectors of a case.
    Solve {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of worker threads for path tracking.
        #[arg(long)]
        paths_parallel: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact verification of the published solution list of a case.
    CheckSolutions {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Characters (q-expansions).
    Char {
        #[command(subcommand)]
        what: CharCmd,
    },
    /// Character identity behind the module decomposition of a case.
    Verify {
        #[command(flatten)]
        case: CaseArg,
        /// Truncation order (rational allowed, e.g. 24 or 49/2).
        #[arg(long, default_value = "24")]
        order: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Gram stabilizer of the published charge-1/2 conformal vectors.
    Stabilizer {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dimension of the subalgebra generated by e^ and f^.
    Generation {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare regenerated reports against the golden corpus.
    Golden {
        /// Rewrite the corpus instead of comparing.
        #[arg(long)]
        update: bool,
        /// Corpus directory (default: $GRIESS_LAB_CORPUS or ./corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Run the full acceptance suite.
    All,
}

#[derive(Subcommand)]
enum CharCmd {
    /// Unitary minimal-model character ch L(c_m, h_{r,s}).
    Vir {
        m: u64,
        r: u64,
        s: u64,
        #[arg(long, default_value = "24")]
        order: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Parafermion character ch W_l(0, 2k).
    Para {
        ell: u64,
        k: u64,
        #[arg(long, default_value = "24")]
        order: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_case(s: &str) -> Result<CaseLabel, ExitCode> {
    s.parse::<CaseLabel>().map_err(|e| usage_error(&e))
}

fn parse_order(s: &str) -> Result<Rat, ExitCode> {
    match parse_rat(s) {
        Some(r) if r > Rat::new(0.into(), 1.into()) => Ok(r),
        _ => Err(usage_error(&format!("invalid truncation order `{s}`"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.cmd {
        Cmd::Table { case, builtin, derive: _, format } => {
            let label = parse_case(&case.case)?;
            let (table, mode) = if builtin {
                (builtin_griess_table(label), "builtin")
            } else {
                let t = derive_griess_table(&griess_core::cases::case(label))
                    .map_err(|e| check_failure(&format!("derivation failed: {e}")))?;
                (t, "derived")
            };
            match format {
                Format::Json => {
                    print!("{}", report::to_canonical_string(&report::table_json(&table, mode)))
                }
                Format::Csv => print!("{}", report::table_csv(&table)),
                Format::Text => print!("{}", report::table_text(&table)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mckay { format } => {
            match format {
                Format::Json => print!("{}", report::to_canonical_string(&report::mckay_json())),
                _ => {
                    for (l, v) in report::mckay_lines() {
                        println!("{l} {}", format_rat(&v));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Solve { case, seed, paths_parallel, format } => {
            let label = parse_case(&case.case)?;
            let sys = polynomial_system(&builtin_griess_table(label));
            let opts = TrackOptions { threads: paths_parallel, ..TrackOptions::default() };
            let set = enumerate(&sys, seed, &report::candidates_for(label), &opts)
                .map_err(|e| check_failure(&format!("solver: {e}")))?;
            match format {
                Format::Json => {
                    print!("{}", report::to_canonical_string(&report::solve_json(label, &set)))
                }
                _ => print!("{}", report::solve_text(label, &set)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CheckSolutions { case, format } => {
            let label = parse_case(&case.case)?;
            let (json, all_ok) = report::check_solutions_json(label);
            match format {
                Format::Json => print!("{}", report::to_canonical_string(&json)),
                _ => {
                    let sols = json["solutions"].as_array().unwrap();
                    for s in sols {
                        println!(
                            "{label} {} (c.c. {}): {}",
                            s["name"].as_str().unwrap(),
                            s["central_charge"].as_str().unwrap(),
                            if s["verified"].as_bool().unwrap() { "exact" } else { "FAILED" }
                        );
                    }
                }
            }
            if all_ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(check_failure("some published solutions failed verification"))
            }
        }
        Cmd::Char { what } => {
            let (series, name, format) = match what {
                CharCmd::Vir { m, r, s, order, format } => {
                    let order = parse_order(&order)?;
                    let label = ModuleLabel::new(m, r, s)
                        .ok_or_else(|| usage_error("label outside the unitary grid"))?;
                    let ch = virasoro_char(&label, &order);
                    (ch, format!("L({},{})", format_rat(&label.central_charge()), format_rat(&label.weight())), format)
                }
                CharCmd::Para { ell, k, order, format } => {
                    let order = parse_order(&order)?;
                    if ell < 1 || k >= ell {
                        return Err(usage_error("need l >= 1 and 0 <= k <= l-1"));
                    }
                    let ch = parafermion_char(ell, 2 * k, &order)
                        .map_err(|e| check_failure(&format!("character computation: {e}")))?;
                    (ch, format!("W{ell}(0,{})", 2 * k), format)
                }
            };
            match format {
                Format::Json => {
                    print!("{}", report::to_canonical_string(&report::series_json(&series, &name)))
                }
                _ => println!("{name} = {}", series.render(64)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { case, order, format } => {
            let label = parse_case(&case.case)?;
            let order = parse_order(&order)?;
            let rep = verify_decomposition(label, &order)
                .map_err(|e| usage_error(&e.to_string()))?;
            match format {
                Format::Json => print!("{}", report::to_canonical_string(&report::verify_json(&rep))),
                _ => print!("{}", report::verify_text(&rep)),
            }
            if rep.equal {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(check_failure("decomposition identity failed"))
            }
        }
        Cmd::Stabilizer { case, format } => {
            let label = parse_case(&case.case)?;
            match format {
                Format::Json => {
                    print!("{}", report::to_canonical_string(&report::stabilizer_json(label)))
                }
                _ => {
                    let (rep, names, _) = report::stabilizer_report(label);
                    println!(
                        "{label}: stabilizer of {{{}}} has order {}",
                        names.join(", "),
                        rep.order
                    );
                    for g in &rep.generators {
                        println!("  generator {g:?}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Generation { case, format } => {
            let label = parse_case(&case.case)?;
            let (json, ok) = report::generation_json(label);
            match format {
                Format::Json => print!("{}", report::to_canonical_string(&json)),
                _ => println!(
                    "{label}: span(e^, f^) has dimension {} of {}",
                    json["span_dim"], json["dim_b"]
                ),
            }
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(check_failure("Griess algebra not generated by e^ and f^"))
            }
        }
        Cmd::Golden { update, corpus } => {
            let dir = corpus
                .or_else(|| std::env::var_os("GRIESS_LAB_CORPUS").map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("corpus"));
            if update {
                let n = golden::update(&dir)
                    .map_err(|e| check_failure(&format!("writing corpus: {e}")))?;
                println!("wrote {n} corpus entries to {}", dir.display());
                return Ok(ExitCode::SUCCESS);
            }
            let mut ok = true;
            for outcome in golden::compare(&dir) {
                match outcome.status {
                    golden::GoldenStatus::Match => println!("[ OK ] {}", outcome.name),
                    golden::GoldenStatus::Missing => {
                        ok = false;
                        println!("[MISS] {} (no corpus entry)", outcome.name);
                    }
                    golden::GoldenStatus::Mismatch(diffs) => {
                        ok = false;
                        println!("[DIFF] {}", outcome.name);
                        for d in diffs.iter().take(5) {
                            println!("        {d}");
                        }
                    }
                }
            }
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(check_failure("golden corpus comparison failed"))
            }
        }
        Cmd::All => {
            let results = acceptance::run_all();
            let mut ok = true;
            for r in &results {
                println!("{}", r.line());
                ok &= r.pass;
            }
            if ok {
                println!("all {} criteria passed", results.len());
                Ok(ExitCode::SUCCESS)
            } else {
                Err(ExitCode::from(EXIT_CHECK_FAILURE))
            }
        }
    }
}

fn check_failure(msg: &str) -> ExitCode {
    eprintln!("check failed: {msg}");
    ExitCode::from(EXIT_CHECK_FAILURE)
}
