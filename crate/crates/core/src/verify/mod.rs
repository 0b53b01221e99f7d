//! Catalogue of executable checks run over a corpus of small groups.

mod checks;
mod corpus;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::Budgets;

pub use checks::{central_product, robinson_subgroup};
pub use corpus::{default_corpus, Corpus, CorpusEntry, DEFAULT_CORPUS};

/// A check passes only if at least this many instances met its hypothesis.
pub const MIN_HITS: usize = 3;

#[derive(Debug, Clone, Copy)]
pub struct CheckInfo {
    pub id: &'static str,
    pub description: &'static str,
    /// Disabled checks run only when named explicitly.
    pub enabled: bool,
}

const fn info(id: &'static str, description: &'static str, enabled: bool) -> CheckInfo {
    CheckInfo {
        id,
        description,
        enabled,
    }
}

pub const CATALOGUE: &[CheckInfo] = &[
    info("baer", "Int_N(G) = Z_N(G) = top of the upper central series", true),
    info("ca_jcs_agree", "Jcs(F, all) and ca(F) agree for F in {N, U, S}", true),
    info("containment", "F is contained in Jcs(F, J) for F in {U, E(S|A5)}", true),
    info("example1", "wr(A5,C2) lies in E(S|A5) and Jcs(E(S|A5), all) but not in ca(E(S|A5))", true),
    info("hypercenter_oracle", "Z_C(G) matches a brute-force scan of the normal lattice", true),
    info("jf", "Jcs classes over Fitting formations contain products of normal members", true),
    info("jh_invariance", "three seeded chief series give the same annotated factors and Jcs verdicts", true),
    info("jsn", "normal subgroups of Jcs members are members", true),
    info("member_iff_hypercenter", "G is in C exactly when Z_C(G) = G", true),
    info("p7", "Z_C(G) <= Int_C(G) for Jcs classes over N and U", true),
    info("p8", "chief factors below Int_C(G) outside F are simple", true),
    info("p9", "normal simple J-subgroups lie in Int_C(G)", true),
    info("pj0", "Jcs classes are closed under quotients and subdirect products", true),
    info("robinson", "Jcs(U, all) membership matches the perfect-normal-subgroup description", true),
    info("shortcut_soundness", "centrality shortcuts agree with the explicit semidirect test", true),
    info("thm2_equiv", "the three structural conditions agree for F in {U, E(S|A5)}, J in {all, {A5}}", true),
    info("thm3_N", "Z_C(G) = Int_C(G) for C = Jcs(N, {A5, PSL(2,7)})", true),
    info(
        "thm3_converse",
        "a group with Z_C(G) != Int_C(G) when Out(J) is not nilpotent; needs Aut(T)-sized witnesses beyond the subgroup budget",
        false,
    ),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Disabled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub label: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub label: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub status: Status,
    /// Instances on which the hypothesis was non-vacuous.
    pub hits: usize,
    pub evaluated: usize,
    pub skipped: Vec<Skip>,
    pub failures: Vec<Failure>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CATALOGUE.iter().find(|c| c.id == id)
}

fn valid_ids() -> String {
    let mut ids: Vec<&str> = CATALOGUE.iter().map(|c| c.id).collect();
    ids.push("all");
    ids.join(", ")
}

/// Expands `all` to the enabled checks, rejects unknown ids, sorts and dedups.
pub fn resolve_selection(ids: &[String]) -> Result<Vec<&'static CheckInfo>> {
    let mut out: Vec<&'static CheckInfo> = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(CATALOGUE.iter().filter(|c| c.enabled));
        } else {
            out.push(check_info(id).ok_or_else(|| Error::UnknownCheck {
                id: id.clone(),
                valid: valid_ids(),
            })?);
        }
    }
    out.sort_by_key(|c| c.id);
    out.dedup_by_key(|c| c.id);
    Ok(out)
}

/// Runs the selected checks. Failures are results, not errors; the only
/// error is an unknown id.
pub fn run_checks(corpus: &Corpus, ids: &[String], b: &Budgets, seed: u64) -> Result<Vec<CheckResult>> {
    let selection = resolve_selection(ids)?;
    let ctx = checks::Ctx { corpus, b, seed };
    Ok(selection.into_iter().map(|c| checks::run(&ctx, c)).collect())
}

/// One line per check: id, status, hits, evaluated, skipped, failures.
pub fn summary_table(results: &[CheckResult]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<20} {:<8} {:>6} {:>9} {:>8} {:>8}",
        "check", "status", "hits", "evaluated", "skipped", "failures"
    );
    for r in results {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Disabled => "disabled",
        };
        let _ = writeln!(
            out,
            "{:<20} {:<8} {:>6} {:>9} {:>8} {:>8}",
            r.id,
            status,
            r.hits,
            r.evaluated,
            r.skipped.len(),
            r.failures.len()
        );
    }
    out
}

/// Summary table followed by every failure witness and skip reason.
pub fn render_text(results: &[CheckResult]) -> String {
    let mut out = summary_table(results);
    for r in results {
        for f in &r.failures {
            let _ = writeln!(out, "{} FAIL [{}] {}", r.id, f.label, f.witness);
        }
        for s in &r.skipped {
            let _ = writeln!(out, "{} skipped [{}] {}", r.id, s.label, s.reason);
        }
    }
    out
}
