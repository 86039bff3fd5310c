use std::fmt::Write as _;
use std::io::{IsTerminal, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use mapsym_core::catalog::{self, Family};
use mapsym_core::generators;
use mapsym_core::report::AnalysisReport;
use mapsym_core::symmetry::Symmetry;
use mapsym_core::{Error, FlagSystem};

/// Symmetry types of maps on surfaces, from flag systems.
#[derive(Parser)]
#[command(name = "mapsym", version, about)]
struct Cli {
    /// Report failures as a JSON object on stderr.
    #[arg(long, global = true)]
    error_json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the flag-system axioms; exits 0 iff the system is valid.
    Validate {
        /// Flag-system JSON file, or "-" for stdin.
        file: String,
        /// Also require a simple underlying graph with all degrees >= 3.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Orbit count, automorphism group, class and vertex/face table data.
    Analyze {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the catalog class of a 4-orbit map.
    Classify { file: String },
    /// Write a generated map as flag-system JSON.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Candidate symmetry type graphs with K vertices.
    EnumerateTypes {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// All flag systems with N flags, up to isomorphism.
    EnumerateMaps {
        #[arg(long)]
        flags: usize,
        #[arg(long)]
        json: bool,
    },
    /// The 22 symmetry type graphs of 4-orbit maps.
    Catalog {
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz DOT of a map's symmetry type graph.
    ExportDot { file: String },
}

#[derive(Subcommand)]
enum Generate {
    Antiprism { n: usize },
    Prism { n: usize },
    Platonic { name: String },
    TorusGrid { rows: usize, cols: usize },
    Medial { file: String },
    Truncation { file: String },
    Dual { file: String },
}

struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn load(path: &str) -> Result<FlagSystem, Error> {
    FlagSystem::from_json(&read_input(path)?)
}

fn bold_headings() -> bool {
    match std::env::var("MAPSYM_COLOR").as_deref() {
        Ok("always") => true,
        Ok("never") => false,
        _ => std::io::stdout().is_terminal(),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("values serialize") + "\n"
}

fn fs_value(fs: &FlagSystem) -> serde_json::Value {
    serde_json::from_str(&fs.to_json()).expect("flag-system JSON parses")
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Validate { file, strict, json } => {
            let fs = load(&file)?;
            let report = fs.validate(strict);
            let code = u8::from(!report.is_valid());
            let stdout = if json {
                pretty(&json!({ "valid": report.is_valid(), "strict": strict, "violations": report.violations }))
            } else if report.is_valid() {
                format!("valid ({} flags{})\n", fs.n_flags(), if strict { ", strict" } else { "" })
            } else {
                let mut out = String::from("invalid\n");
                for v in &report.violations {
                    let _ = writeln!(out, "  {v}");
                }
                out
            };
            Ok(Outcome { stdout, code })
        }
        Command::Analyze { file, json } => {
            let report = AnalysisReport::new(&load(&file)?)?;
            Ok(Outcome::ok(if json { report.to_json() + "\n" } else { report.render(bold_headings()) }))
        }
        Command::Classify { file } => {
            let fs = load(&file)?;
            let sym = Symmetry::new(&fs)?;
            let line = if sym.k() == 4 {
                catalog::classify_symmetry(&sym)?.name.to_string()
            } else {
                format!("k={} (not 4-orbit)", sym.k())
            };
            Ok(Outcome::ok(line + "\n"))
        }
        Command::Generate { what } => {
            let fs = match what {
                Generate::Antiprism { n } => generators::antiprism(n)?,
                Generate::Prism { n } => generators::prism(n)?,
                Generate::Platonic { name } => generators::platonic(&name)?,
                Generate::TorusGrid { rows, cols } => generators::torus_grid(rows, cols)?,
                Generate::Medial { file } => generators::medial(&load(&file)?)?,
                Generate::Truncation { file } => generators::truncation(&load(&file)?)?,
                Generate::Dual { file } => {
                    let fs = load(&file)?;
                    fs.ensure_valid()?;
                    fs.dual()
                }
            };
            Ok(Outcome::ok(fs.to_json() + "\n"))
        }
        Command::EnumerateTypes { k, json } => {
            let candidates = catalog::enumerate_candidates(k)?;
            let named: Vec<(Option<&str>, _)> = candidates
                .iter()
                .map(|p| (if k == 4 { catalog::catalog().find(p).map(|e| e.name) } else { None }, p))
                .collect();
            if json {
                let items: Vec<_> =
                    named.iter().map(|(name, p)| json!({ "name": name, "pregraph": p.to_json_value() })).collect();
                return Ok(Outcome::ok(pretty(&json!({ "k": k, "count": items.len(), "candidates": items }))));
            }
            let mut out = format!("{} candidate symmetry type graphs with {k} vertices\n", candidates.len());
            for (name, p) in &named {
                let _ = writeln!(out, "{:<6} {}", name.unwrap_or("-"), p.to_json());
            }
            Ok(Outcome::ok(out))
        }
        Command::EnumerateMaps { flags, json } => {
            let systems = generators::enumerate_flag_systems(flags)?;
            let mut rows = Vec::new();
            for fs in &systems {
                let sym = Symmetry::new(fs)?;
                rows.push((sym.k(), sym.group.order(), fs.euler_characteristic()?, fs));
            }
            if json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(k, aut, chi, fs)| {
                        json!({ "k": k, "aut_order": aut, "euler_characteristic": chi, "system": fs_value(fs) })
                    })
                    .collect();
                return Ok(Outcome::ok(pretty(&json!({ "flags": flags, "count": items.len(), "maps": items }))));
            }
            let mut out = format!("{} flag systems with {flags} flags\n", systems.len());
            let _ = writeln!(out, "{:>4} {:>3} {:>6} {:>4}", "#", "k", "|Aut|", "chi");
            for (i, (k, aut, chi, _)) in rows.iter().enumerate() {
                let _ = writeln!(out, "{i:>4} {k:>3} {aut:>6} {chi:>4}");
            }
            Ok(Outcome::ok(out))
        }
        Command::Catalog { dot, json } => {
            let cat = catalog::catalog();
            let label = |family: Family, ids: &[catalog::TwoColourId]| {
                ids.iter().map(|&id| family.label(id)).collect::<Vec<_>>()
            };
            if dot {
                let mut out = String::new();
                for e in cat.entries() {
                    out.push_str(&e.pregraph.to_dot(e.name));
                }
                return Ok(Outcome::ok(out));
            }
            if json {
                let items: Vec<_> = cat
                    .entries()
                    .iter()
                    .map(|e| {
                        json!({
                            "name": e.name,
                            "t0": label(Family::Vertex, &e.t0_fingerprint),
                            "t2": label(Family::Face, &e.t2_fingerprint),
                            "dual": e.dual_name(),
                            "petrie": catalog::petrie_name(e.name),
                            "pregraph": e.pregraph.to_json_value(),
                        })
                    })
                    .collect();
                return Ok(Outcome::ok(pretty(&json!(items))));
            }
            let mut out = format!("{:<6} {:<22} {:<22} {:<6} {}\n", "name", "T0", "T2", "dual", "pregraph");
            for e in cat.entries() {
                let _ = writeln!(
                    out,
                    "{:<6} {:<22} {:<22} {:<6} {}",
                    e.name,
                    label(Family::Vertex, &e.t0_fingerprint).join(","),
                    label(Family::Face, &e.t2_fingerprint).join(","),
                    e.dual_name(),
                    e.pregraph.to_json()
                );
            }
            Ok(Outcome::ok(out))
        }
        Command::ExportDot { file } => {
            let fs = load(&file)?;
            let sym = Symmetry::new(&fs)?;
            let name = match sym.k() {
                4 => catalog::classify_symmetry(&sym)?.name.to_string(),
                k => format!("T_k{k}"),
            };
            Ok(Outcome::ok(sym.type_graph.to_dot(&name)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let error_json = cli.error_json;
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            if error_json {
                eprintln!("{}", json!({ "error": { "kind": e.kind(), "message": e.to_string() } }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
    }
}
