//! Batch verification front end over the library: structural reports,
//! spec composition and decomposition, equation solving, algebraicity
//! decisions, and the non-equational-domain campaign.
//!
//! Exit codes are a stable contract: 0 success (for `algebraic`: the set
//! is algebraic), 1 a negative verdict, 2 input/parse errors, 3 spec
//! validation failure, 4 decomposition failure, 5 an unknown verdict.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

use eqdom::formats;
use eqdom::geometry::{self, AlgebraicityVerdict};
use eqdom::semigroup::FiniteSemigroup;
use eqdom::semilattice::{build_strong_semilattice, decompose, is_semilattice, StructureError};
use eqdom::term::fresh_var_names;
use eqdom::{clones, CampaignReport};

#[derive(Debug, Parser)]
#[command(
    name = "eqdom",
    about = "Structural checks, equation solving, and algebraicity decisions \
             over finite completely regular semigroups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Maximum number of clone functions retained during closure search
    /// (default: sized from the semigroup and arity).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,

    /// Single-threaded canonical-order evaluation. This is the only mode;
    /// the flag is accepted so batch scripts can state it explicitly.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::SetTrue)]
    deterministic: bool,

    /// Emit machine-readable key=value lines instead of prose.
    #[arg(long, global = true)]
    machine: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural report for a semigroup table (.sgp).
    Check { path: PathBuf },
    /// Compose a semigroup from a strong-semilattice spec (.slat).
    Build {
        path: PathBuf,
        /// Output table path (default: input with extension .sgp).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decompose a semigroup table (.sgp) into a spec (.slat).
    Decompose {
        path: PathBuf,
        /// Output spec path (default: input with extension .slat).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve an equation system (.eqs) over a semigroup (.sgp).
    Solve { sgp: PathBuf, eqs: PathBuf },
    /// Decide whether a point set (.pts) is algebraic over a semigroup.
    Algebraic { sgp: PathBuf, pts: PathBuf },
    /// Run the union-counterexample campaign over a spec (.slat).
    Theorem2 { slat: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    };
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Check { path } => cmd_check(path, cli.machine),
        Command::Build { path, output } => cmd_build(path, output.as_deref(), cli.machine),
        Command::Decompose { path, output } => {
            cmd_decompose(path, output.as_deref(), cli.machine)
        }
        Command::Solve { sgp, eqs } => cmd_solve(sgp, eqs),
        Command::Algebraic { sgp, pts } => cmd_algebraic(sgp, pts, cli.cap, cli.machine),
        Command::Theorem2 { slat } => cmd_theorem2(slat, cli.cap, cli.machine),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_semigroup(path: &Path) -> Result<FiniteSemigroup, String> {
    formats::parse_sgp(&read(path)?)
        .map_err(|e| format!("{}: {e}", path.display()))?
        .into_semigroup()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(path: &Path, machine: bool) -> Result<u8, String> {
    let raw = formats::parse_sgp(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let violations = eqdom::check_associativity(&raw.table)
        .map_err(|e| format!("{}: {e}", path.display()))?;

    let kv = |k: &str, v: &str| {
        if machine {
            println!("{k}={v}");
        } else {
            println!("{k}: {v}");
        }
    };
    kv("elements", &raw.table.len().to_string());
    if let Some(&first) = violations.first() {
        if machine {
            println!("associative=no");
            println!("violations={}", violations.len());
            println!("first_violation={},{},{}", first.0, first.1, first.2);
        } else {
            println!(
                "associative: no ({} violating triple(s), first at {:?})",
                violations.len(),
                first
            );
        }
        return Ok(1);
    }
    kv("associative", "yes");

    let s = raw.into_semigroup().map_err(|e| format!("{}: {e}", path.display()))?;
    match s.complete_regularity() {
        eqdom::semigroup::CompleteRegularity::CompletelyRegular { periods } => {
            kv("completely_regular", "yes");
            let listing: Vec<String> = periods
                .iter()
                .enumerate()
                .map(|(i, p)| format!("{}={}", s.name(i), p))
                .collect();
            kv("periods", &listing.join(" "));
        }
        eqdom::semigroup::CompleteRegularity::NotCompletelyRegular { witness } => {
            if machine {
                println!("completely_regular=no");
                println!("witness={}", s.name(witness));
            } else {
                println!("completely regular: no (witness: {})", s.name(witness));
            }
        }
    }
    kv("simple", yes_no(s.is_simple()));
    kv("completely_simple", yes_no(s.is_completely_simple()));
    kv("semilattice", yes_no(is_semilattice(&s)));

    let classes = s.j_classes();
    kv("j_classes", &classes.len().to_string());
    for (i, class) in classes.iter().enumerate() {
        let members: Vec<&str> = class.iter().map(|&m| s.name(m)).collect();
        if machine {
            println!("j_class_{i}={}", members.join(","));
        } else {
            println!("  class {i}: {}", members.join(" "));
        }
    }
    Ok(0)
}

fn with_extension(path: &Path, ext: &str) -> PathBuf {
    path.with_extension(ext)
}

fn cmd_build(path: &Path, output: Option<&Path>, machine: bool) -> Result<u8, String> {
    let spec =
        formats::parse_slat(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let built = match build_strong_semilattice(&spec) {
        Ok(built) => built,
        Err(StructureError::InvalidSpec(report)) => {
            eprintln!("{report}");
            return Ok(3);
        }
        Err(other) => return Err(format!("{}: {other}", path.display())),
    };

    let out_path = output.map(Path::to_path_buf).unwrap_or_else(|| with_extension(path, "sgp"));
    fs::write(&out_path, formats::write_sgp(built.semigroup()))
        .map_err(|e| format!("{}: {e}", out_path.display()))?;

    let labels_path = with_extension(&out_path, "labels");
    let mut labels = String::new();
    for el in 0..built.semigroup().size() {
        labels.push_str(&format!(
            "{} {}\n",
            built.semigroup().name(el),
            built.omega().name(built.component_of(el))
        ));
    }
    fs::write(&labels_path, labels).map_err(|e| format!("{}: {e}", labels_path.display()))?;

    if machine {
        println!("output={}", out_path.display());
        println!("labels={}", labels_path.display());
        println!("elements={}", built.semigroup().size());
        println!("components={}", built.omega().size());
    } else {
        println!("built {} elements over {} components", built.semigroup().size(), built.omega().size());
        println!("table: {}", out_path.display());
        println!("labels: {}", labels_path.display());
    }
    Ok(0)
}

fn cmd_decompose(path: &Path, output: Option<&Path>, machine: bool) -> Result<u8, String> {
    let s = load_semigroup(path)?;
    let decomposition = match decompose(&s) {
        Ok(d) => d,
        Err(err) => {
            eprintln!("decomposition failed: {err}");
            return Ok(4);
        }
    };

    let out_path =
        output.map(Path::to_path_buf).unwrap_or_else(|| with_extension(path, "slat"));
    fs::write(&out_path, formats::write_slat(decomposition.spec()))
        .map_err(|e| format!("{}: {e}", out_path.display()))?;

    if machine {
        println!("output={}", out_path.display());
        println!("components={}", decomposition.omega().size());
    } else {
        println!(
            "decomposed into {} component(s): {}",
            decomposition.omega().size(),
            out_path.display()
        );
    }
    Ok(0)
}

fn cmd_solve(sgp: &Path, eqs: &Path) -> Result<u8, String> {
    let s = load_semigroup(sgp)?;
    let file = formats::parse_eqs(&read(eqs)?, &s).map_err(|e| format!("{}: {e}", eqs.display()))?;
    for name in &file.shadowed {
        eprintln!("warning: variable `{name}` shadows the element of the same name");
    }
    let solutions = geometry::solve(&s, &file.system).map_err(|e| e.to_string())?;
    print!("{}", formats::write_pts(&solutions, &s));
    Ok(0)
}

fn effective_cap(cap: Option<u64>, size: usize, arity: usize) -> usize {
    cap.map(|c| c as usize).unwrap_or_else(|| clones::default_cap(size, arity))
}

fn cmd_algebraic(sgp: &Path, pts: &Path, cap: Option<u64>, machine: bool) -> Result<u8, String> {
    let s = load_semigroup(sgp)?;
    let set =
        formats::parse_pts(&read(pts)?, &s).map_err(|e| format!("{}: {e}", pts.display()))?;
    let cap = effective_cap(cap, s.size(), set.arity());
    let decision = geometry::decide_algebraic(&s, &set, cap).map_err(|e| e.to_string())?;

    let complete = yes_no(decision.closure_complete);
    match &decision.verdict {
        AlgebraicityVerdict::Algebraic { witness } => {
            let vars = fresh_var_names(set.arity(), &s);
            if machine {
                println!("verdict=algebraic");
                println!("witness_size={}", witness.len());
                println!("closure={}", decision.closure_size);
                println!("complete={complete}");
                println!("vars={}", vars.join(","));
                for eq in witness.equations() {
                    println!("equation={}", eq.render(&vars, &s));
                }
            } else {
                println!("verdict: algebraic");
                println!("closure: {} function(s), complete: {complete}", decision.closure_size);
                println!("witness ({} equation(s), vars {}):", witness.len(), vars.join(" "));
                for eq in witness.equations() {
                    println!("  {}", eq.render(&vars, &s));
                }
            }
            Ok(0)
        }
        AlgebraicityVerdict::NotAlgebraic { stuck } => {
            let names: Vec<&str> = stuck.iter().map(|&e| s.name(e)).collect();
            if machine {
                println!("verdict=not-algebraic");
                println!("stuck={}", names.join(","));
                println!("closure={}", decision.closure_size);
                println!("complete={complete}");
            } else {
                println!("verdict: not algebraic");
                println!("stuck point: ({})", names.join(", "));
                println!("closure: {} function(s), complete: {complete}", decision.closure_size);
            }
            Ok(1)
        }
        AlgebraicityVerdict::Unknown { cap, closure_size } => {
            if machine {
                println!("verdict=unknown");
                println!("cap={cap}");
                println!("closure={closure_size}");
                println!("complete=no");
            } else {
                println!("verdict: unknown (cap {cap} exhausted after {closure_size} functions)");
            }
            Ok(5)
        }
    }
}

fn print_campaign(report: &CampaignReport, machine: bool) {
    if machine {
        for (i, case) in report.cases.iter().enumerate() {
            let verdict = match &case.decision.verdict {
                AlgebraicityVerdict::Algebraic { witness } => {
                    format!("algebraic witness_size={}", witness.len())
                }
                AlgebraicityVerdict::NotAlgebraic { .. } => {
                    let stuck = case
                        .stuck_name
                        .as_ref()
                        .map(|names| names.join(","))
                        .unwrap_or_default();
                    format!("not-algebraic stuck={stuck}")
                }
                AlgebraicityVerdict::Unknown { cap, .. } => format!("unknown cap={cap}"),
            };
            println!(
                "case={i} alpha={} beta={} b={} verdict={} closure={} complete={}",
                case.lower,
                case.upper,
                case.b,
                verdict,
                case.decision.closure_size,
                yes_no(case.decision.closure_complete)
            );
        }
        println!("cases={}", report.cases.len());
        println!("not_algebraic={}", report.not_algebraic_count());
        println!("unknown={}", report.unknown_count());
        println!("result={}", if report.pass() { "PASS" } else { "FAIL" });
    } else {
        println!("{report}");
    }
}

fn cmd_theorem2(slat: &Path, cap: Option<u64>, machine: bool) -> Result<u8, String> {
    let spec =
        formats::parse_slat(&read(slat)?).map_err(|e| format!("{}: {e}", slat.display()))?;
    let built = match build_strong_semilattice(&spec) {
        Ok(built) => built,
        Err(StructureError::InvalidSpec(report)) => {
            eprintln!("{report}");
            return Ok(3);
        }
        Err(other) => return Err(format!("{}: {other}", slat.display())),
    };
    let cap = effective_cap(cap, built.semigroup().size(), 2);
    let report = geometry::verify_theorem2(&built, cap).map_err(|e| e.to_string())?;
    print_campaign(&report, machine);
    Ok(if report.pass() { 0 } else { 1 })
}
