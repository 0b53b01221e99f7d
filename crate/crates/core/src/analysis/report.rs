//! Full analysis of one group against one class, in a serializable form.

use serde::Serialize;

use crate::analysis::centrality::{centrality, CentralityPath};
use crate::analysis::constructions::{hypercenter, int_f, residual};
use crate::analysis::t2::{t2_conditions, T2Conditions};
use crate::classes::{ClassKind, GroupClass};
use crate::error::Result;
use crate::group::PermGroup;
use crate::structure::chief_series;
use crate::Budgets;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub order: usize,
    pub abelian: bool,
    /// Centrality with respect to the class governing the factor, when tested.
    pub central: Option<bool>,
    /// `T` or `T^k` for a product of `k` copies of the simple group `T`.
    pub simple_type: String,
    pub path: Option<CentralityPath>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// 1-based position of the factor in the chief series, from the bottom.
    pub factor: usize,
    pub order: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T2Report {
    pub b1: bool,
    pub b2: bool,
    pub b3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub class: String,
    pub order: usize,
    pub member: bool,
    pub witness: Option<Witness>,
    pub chief_series: Vec<FactorReport>,
    pub hypercenter_order: usize,
    pub residual_order: usize,
    pub int_order: Option<usize>,
    pub t2: Option<T2Report>,
}

/// Evaluates membership, the annotated chief series, `Z_C`, `G^C`, `Int_C`
/// (within the subgroup budget) and, for `Jcs` classes over a suitable base,
/// the three structural conditions.
pub fn analyze(label: &str, g: &PermGroup, c: &GroupClass, b: &Budgets) -> Result<AnalysisReport> {
    let series = chief_series(g);
    let mut factors = Vec::new();
    let mut witness = None;
    let per_factor = matches!(c.kind(), ClassKind::Jcs(..) | ClassKind::Ca(_));
    let verdicts = if per_factor {
        Some(c.factor_verdicts(&series, b)?)
    } else {
        None
    };
    for (i, s) in series.sections().iter().enumerate() {
        let (d, cent, ok) = match &verdicts {
            Some(v) => (v[i].decomposition.clone(), v[i].centrality.clone(), v[i].ok),
            None => {
                let d = crate::structure::decompose_char_simple(s)?;
                let cent = centrality(g, s, c, b)?;
                let ok = cent.central;
                (d, Some(cent), ok)
            }
        };
        let simple_type = if d.multiplicity == 1 {
            d.simple.name.clone()
        } else {
            format!("{}^{}", d.simple.name, d.multiplicity)
        };
        if !ok && witness.is_none() {
            let reason = match &cent {
                Some(_) => format!("not {}-central", c.factor_class()),
                None if matches!(c.kind(), ClassKind::Ca(_)) => "non-abelian factor is not simple".to_string(),
                None => "not a simple J-group".to_string(),
            };
            witness = Some(Witness {
                factor: i + 1,
                order: s.order(),
                reason,
            });
        }
        factors.push(FactorReport {
            order: s.order(),
            abelian: d.is_abelian(),
            central: cent.as_ref().map(|x| x.central),
            simple_type,
            path: cent.map(|x| x.path),
        });
    }
    let member = c.member(g, b)?;
    if member {
        witness = None;
    }
    let int_order = if g.order() <= b.subgroup_budget {
        Some(int_f(g, c, b)?.order())
    } else {
        None
    };
    let t2 = match c.kind() {
        ClassKind::Jcs(f, j) if f.composition_closure().is_some() && f.flags().is_solubly_saturated => {
            let T2Conditions { b1, b2, b3, .. } = t2_conditions(g, f, j, b)?;
            Some(T2Report { b1, b2, b3 })
        }
        _ => None,
    };
    Ok(AnalysisReport {
        group: label.to_string(),
        class: c.name(),
        order: g.order(),
        member,
        witness,
        chief_series: factors,
        hypercenter_order: hypercenter(g, c, b)?.order(),
        residual_order: residual(g, c, b)?.order(),
        int_order,
        t2,
    })
}
