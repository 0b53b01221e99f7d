use rayon::prelude::*;

use crate::builders::{parse_group, parse_manifest};
use crate::error::Result;
use crate::group::PermGroup;

/// Builder expressions of the default corpus; each doubles as its label.
pub const DEFAULT_CORPUS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
    "C15", "C16",
    "D(4)", "D(6)", "D(8)", "D(10)", "D(12)", "D(14)", "D(16)",
    "S3", "S4", "S5", "A4", "A5", "A6", "SL25",
    "S3 x C2", "S5 x S3", "A5 x C2", "A5 x A5", "S4 x C2", "SL25 x C3",
    "wr(C2,C2)", "wr(C3,C2)", "wr(A5,C2)",
    "PSL(2,7)", "PSL(2,11)", "F21", "Dic12", "He27", "M27", "Q8", "C2 x C2 x C2",
];

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub expr: String,
    pub group: PermGroup,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    /// Builds every `(label, expression)` pair under the element cap.
    pub fn build(pairs: &[(String, String)], cap: usize) -> Result<Corpus> {
        let entries = pairs
            .par_iter()
            .map(|(label, expr)| {
                Ok(CorpusEntry {
                    label: label.clone(),
                    expr: expr.clone(),
                    group: parse_group(expr, cap)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus { entries })
    }

    /// A corpus from `label := expression` lines.
    pub fn from_manifest(text: &str, cap: usize) -> Result<Corpus> {
        let pairs: Vec<(String, String)> = parse_manifest(text)?
            .into_iter()
            .map(|e| (e.label, e.expr))
            .collect();
        Corpus::build(&pairs, cap)
    }

    pub fn get(&self, label: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

pub fn default_corpus(cap: usize) -> Result<Corpus> {
    let pairs: Vec<(String, String)> = DEFAULT_CORPUS
        .iter()
        .map(|s| (s.to_string(), s.to_string()))
        .collect();
    Corpus::build(&pairs, cap)
}
