use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chief_core::analysis::{analyze, AnalysisReport};
use chief_core::builders::parse_group;
use chief_core::classes::parse_class_expr;
use chief_core::structure::SIMPLE_TABLE;
use chief_core::verify::{default_corpus, render_text, run_checks, Corpus, Status};
use chief_core::{Budgets, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "chief", version, about = "Chief factors, hypercentres and residuals of permutation groups")]
struct Cli {
    /// Largest group enumerated element by element.
    #[arg(long, global = true, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Largest group order for which all subgroups are enumerated.
    #[arg(long, global = true, default_value_t = 2_000, value_parser = clap::value_parser!(u64).range(1..))]
    subgroup_budget: u64,
    /// Largest semidirect product built for an explicit centrality test.
    #[arg(long, global = true, default_value_t = 50_000, value_parser = clap::value_parser!(u64).range(1..))]
    sd_budget: u64,
    /// Seed for the randomized chief series used by `jh_invariance`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one group against one class.
    Analyze {
        /// Group expression, e.g. `S(5)` or `wr(A5,C(2))`.
        group: String,
        /// Class expression, e.g. `Jcs(U, all)`.
        class: String,
    },
    /// Run checks from the catalogue over a corpus.
    Verify {
        /// Check ids, or `all` for every enabled check.
        #[arg(default_value = "all")]
        ids: Vec<String>,
        /// Manifest of `label := expression` lines replacing the default corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Print the table of simple groups.
    Tables,
}

fn exit_for(e: &Error) -> ExitCode {
    if e.is_budget() {
        ExitCode::from(3)
    } else if e.is_parse() || matches!(e, Error::Hypothesis(..)) {
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    exit_for(&e)
}

fn render_report(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {} (order {})", r.group, r.order);
    let _ = writeln!(out, "class: {}", r.class);
    let _ = writeln!(out, "member: {}", r.member);
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "witness: factor {} of order {}: {}", w.factor, w.order, w.reason);
    }
    let _ = writeln!(out, "chief series (bottom up):");
    for (i, f) in r.chief_series.iter().enumerate() {
        let central = match (f.central, f.path) {
            (Some(c), Some(p)) => format!("{c} ({})", format!("{p:?}").to_lowercase()),
            _ => "-".to_string(),
        };
        let kind = if f.abelian { "abelian" } else { "non-abelian" };
        let _ = writeln!(
            out,
            "  {:>2}. order {:<6} {:<12} {:<12} central: {central}",
            i + 1,
            f.order,
            f.simple_type,
            kind
        );
    }
    let _ = writeln!(out, "hypercenter order: {}", r.hypercenter_order);
    let _ = writeln!(out, "residual order: {}", r.residual_order);
    match r.int_order {
        Some(n) => {
            let _ = writeln!(out, "int order: {n}");
        }
        None => {
            let _ = writeln!(out, "int order: not computed (over the subgroup budget)");
        }
    }
    if let Some(t) = &r.t2 {
        let _ = writeln!(out, "t2: b1={} b2={} b3={}", t.b1, t.b2, t.b3);
    }
    out
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budgets = Budgets {
        element_cap: cli.cap as usize,
        subgroup_budget: cli.subgroup_budget as usize,
        semidirect_budget: cli.sd_budget as usize,
    };
    match cli.command {
        Command::Analyze { group, class } => {
            let g = match parse_group(&group, budgets.element_cap) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let c = match parse_class_expr(&class) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            match analyze(&group, &g, &c, &budgets) {
                Ok(r) => {
                    match cli.format {
                        Format::Text => emit(&render_report(&r)),
                        Format::Structured => emit(&to_json(&r)),
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Verify { ids, corpus } => {
            let corpus = match corpus {
                Some(path) => match std::fs::read_to_string(&path) {
                    Ok(text) => Corpus::from_manifest(&text, budgets.element_cap),
                    Err(e) => {
                        eprintln!("error: cannot read {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                },
                None => default_corpus(budgets.element_cap),
            };
            let corpus = match corpus {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let results = match run_checks(&corpus, &ids, &budgets, cli.seed) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            match cli.format {
                Format::Text => emit(&render_text(&results)),
                Format::Structured => emit(&to_json(&results)),
            }
            if results.iter().any(|r| r.status == Status::Fail) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Tables => {
            match cli.format {
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "{:<12} {:>6} {:>9} {:>17}  out", "name", "order", "out_order", "out_is_nilpotent");
                    for r in SIMPLE_TABLE {
                        let _ = writeln!(
                            out,
                            "{:<12} {:>6} {:>9} {:>17}  {}",
                            r.name, r.order, r.out_order, r.out_is_nilpotent, r.out
                        );
                    }
                    emit(&out);
                }
                Format::Structured => {
                    let rows: Vec<serde_json::Value> = SIMPLE_TABLE
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "name": r.name,
                                "order": r.order,
                                "out_order": r.out_order,
                                "out_is_nilpotent": r.out_is_nilpotent,
                                "out": r.out,
                            })
                        })
                        .collect();
                    emit(&to_json(&rows));
                }
            }
            ExitCode::SUCCESS
        }
    }
}
