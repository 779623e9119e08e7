use std::path::Path;
use std::process::ExitCode;

use binmat::connectivity::{classify_separation, lambda};
use binmat::extension::{enumerate_growth_classes, GrowthKind};
use binmat::structure::{
    corollary22_check, find_minor, is_splitter, theorem21_check, DecomposerReport, ExclusionFilter, Overall,
};
use binmat::verify::{verify_paper, Status};
use binmat::{bmx, catalog, Matroid, Subset};
use clap::{Parser, Subcommand};

/// Binary matroid structure toolkit.
#[derive(Parser)]
#[command(name = "binmat", version)]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a catalog matroid in bmx format.
    Cat { name: String },
    /// Print λ(X) for a comma-separated set X.
    Lambda { matroid: String, set: String },
    /// List single-element extensions (or coextensions) up to isomorphism.
    Exts {
        matroid: String,
        #[arg(long)]
        co: bool,
        /// Comma-separated excluded minors; children with one are dropped.
        #[arg(long)]
        exclude: Option<String>,
    },
    /// Decide whether N is a minor of M and print a witness.
    Minor { m: String, n: String },
    /// Decide whether N is a splitter for EX[excluded].
    Splitter {
        n: String,
        #[arg(long)]
        exclude: String,
    },
    /// Check whether an exact k-separation (or one of two) is induced.
    Decomposer {
        n: String,
        #[arg(long)]
        sep: String,
        #[arg(long)]
        sep2: Option<String>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        exclude: String,
        /// Comma-separated minors whose holders are handled elsewhere.
        #[arg(long)]
        exempt: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Recompute every finite check of the structure theorem.
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Treat discrepancies as failures.
        #[arg(long)]
        strict: bool,
        /// Only report this claim id (or id prefix up to a dot).
        #[arg(long)]
        claim: Option<String>,
    },
}

/// A catalog name, or a path to a bmx file.
fn load(arg: &str) -> Result<Matroid, String> {
    if let Ok(m) = catalog::matroid(arg) {
        return Ok(m);
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
        return bmx::parse(&text).map_err(|e| format!("{arg}: {e}"));
    }
    Err(format!("`{arg}` is neither a catalog name nor a bmx file"))
}

fn load_list(arg: &str) -> Result<Vec<Matroid>, String> {
    arg.split(',').map(str::trim).filter(|s| !s.is_empty()).map(load).collect()
}

fn parse_set(arg: &str) -> Result<Subset, String> {
    arg.parse().map_err(|e: binmat::Error| e.to_string())
}

fn print_decomposer(rep: &DecomposerReport) {
    let overall = match rep.overall {
        Overall::Induced => "induced",
        Overall::InducedOneOfTwo => "induced-one-of-two",
        Overall::Failed => "failed",
    };
    println!("overall: {overall}");
    let in_class = rep.records.iter().filter(|r| r.in_class()).count();
    println!("candidates: {} ({in_class} in class)", rep.records.len());
    for (i, bad) in rep.bad.iter().enumerate() {
        println!("bad for side {} {}: {}", i + 1, rep.sides[i], bad.len());
    }
    for note in &rep.notes {
        println!("note: {note}");
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Cat { name } => {
            let m = catalog::matroid(&name).map_err(|e| e.to_string())?;
            print!("{}", bmx::write(&m));
        }
        Command::Lambda { matroid, set } => {
            let m = load(&matroid)?;
            let x = parse_set(&set)?;
            let value = lambda(&m, &x).map_err(|e| e.to_string())?;
            println!("{value}");
            let k = value + 1;
            match classify_separation(&m, &x, k) {
                Ok(s) => println!(
                    "{} {k}-separation, {}",
                    if s.exact { "exact" } else { "inexact" },
                    if s.minimal { "minimal" } else { "non-minimal" }
                ),
                Err(e) => println!("no {k}-separation: {e}"),
            }
        }
        Command::Exts { matroid, co, exclude } => {
            let m = load(&matroid)?;
            let filter = exclude.as_deref().map(load_list).transpose()?.map(ExclusionFilter::new);
            let kind = if co { GrowthKind::Coextension } else { GrowthKind::Extension };
            let classes = enumerate_growth_classes(&m, kind, filter.as_ref());
            println!("{} classes", classes.len());
            for (i, c) in classes.iter().enumerate() {
                let members: Vec<String> = c.members.iter().map(|v| v.to_string()).collect();
                println!("{}: {} [{}] {}", i + 1, c.size(), c.canonical_key.fingerprint(), members.join(" "));
            }
        }
        Command::Minor { m, n } => {
            let (m, n) = (load(&m)?, load(&n)?);
            match find_minor(&m, &n) {
                Some(w) => println!("yes: delete {} contract {}", w.deletions, w.contractions),
                None => println!("no"),
            }
        }
        Command::Splitter { n, exclude } => {
            let n = load(&n)?;
            let rep = is_splitter(&n, &load_list(&exclude)?).map_err(|e| e.to_string())?;
            println!("splitter: {} ({} children checked)", rep.splitter, rep.checked);
            for (kind, v) in &rep.counterexamples {
                println!("in class: {kind:?} {v}");
            }
        }
        Command::Decomposer { n, sep, sep2, k, exclude, exempt, json } => {
            let n = load(&n)?;
            let mut filter = ExclusionFilter::new(load_list(&exclude)?);
            if let Some(ex) = exempt {
                filter = filter.with_exempt(load_list(&ex)?);
            }
            let a = parse_set(&sep)?;
            let rep = match sep2 {
                Some(s2) => corollary22_check(&n, &a, &parse_set(&s2)?, k, &filter),
                None => theorem21_check(&n, &a, k, &filter),
            }
            .map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep).map_err(|e| e.to_string())?);
            } else {
                print_decomposer(&rep);
            }
            if rep.overall == Overall::Failed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::VerifyPaper { json, strict, claim } => {
            let mut report = verify_paper();
            if let Some(id) = claim {
                report = report.restricted_to(&id);
                if report.claims.is_empty() {
                    return Err(format!("no claim matches `{id}`"));
                }
            }
            if json {
                println!("{}", report.to_json());
            } else {
                for c in &report.claims {
                    let tag = match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "FAIL",
                        Status::Discrepancy => "discrepancy",
                    };
                    println!("{tag:<11} {}", c.id);
                    if c.status != Status::Pass {
                        println!("            expected: {}", c.expected);
                        println!("            computed: {}", c.computed);
                    }
                }
                let s = report.summary;
                println!("{} pass, {} fail, {} discrepancy", s.pass, s.fail, s.discrepancy);
            }
            if !report.succeeded(strict) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
