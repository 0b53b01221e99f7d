//! Membership tests for every class.

use crate::analysis::centrality::{centrality, Centrality};
use crate::classes::{ClassKind, GroupClass};
use crate::error::Result;
use crate::group::PermGroup;
use crate::hom::SectionGroup;
use crate::structure::{
    chief_series, decompose_char_simple, is_nilpotent, is_prime, is_soluble, CharSimple,
    ChiefSeries, Section,
};
use crate::Budgets;

/// Per-factor evaluation of a chief series against a class.
#[derive(Debug, Clone)]
pub struct FactorVerdict {
    pub section: Section,
    pub decomposition: CharSimple,
    /// Centrality with respect to [`GroupClass::factor_class`], when it was needed.
    pub centrality: Option<Centrality>,
    /// The factor satisfies the class's condition.
    pub ok: bool,
}

impl GroupClass {
    /// `g ∈ self`. Verdicts are memoized on the group.
    pub fn member(&self, g: &PermGroup, b: &Budgets) -> Result<bool> {
        let key = self.name();
        if let Some(v) = g.memo_get(&key) {
            return Ok(v);
        }
        let v = self.member_uncached(g, b)?;
        g.memo_set(key, v);
        Ok(v)
    }

    fn member_uncached(&self, g: &PermGroup, b: &Budgets) -> Result<bool> {
        Ok(match self.kind() {
            ClassKind::Abelian => g.is_abelian(),
            ClassKind::Nilpotent => is_nilpotent(g),
            ClassKind::Soluble => is_soluble(g),
            ClassKind::Supersoluble => {
                is_soluble(g) && chief_series(g).factor_orders().into_iter().all(is_prime)
            }
            ClassKind::CompositionFactors(base) if base.soluble && is_soluble(g) => true,
            _ => self.member_on_series(&chief_series(g), b)?,
        })
    }

    /// Membership decided on the given chief series. For `U`, `E`, `Jcs` and
    /// `ca` the verdict is a condition on the factors of that series.
    pub fn member_on_series(&self, series: &ChiefSeries, b: &Budgets) -> Result<bool> {
        match self.kind() {
            ClassKind::Abelian | ClassKind::Nilpotent | ClassKind::Soluble => {
                self.member(&series.ambient, b)
            }
            ClassKind::Supersoluble => Ok(series.factor_orders().into_iter().all(is_prime)),
            _ => {
                for s in series.sections() {
                    if !self.factor_ok(&series.ambient, &s, b)?.ok {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Every factor of `series` with its verdict.
    pub fn factor_verdicts(&self, series: &ChiefSeries, b: &Budgets) -> Result<Vec<FactorVerdict>> {
        series
            .sections()
            .iter()
            .map(|s| self.factor_ok(&series.ambient, s, b))
            .collect()
    }

    fn factor_ok(&self, g: &PermGroup, s: &Section, b: &Budgets) -> Result<FactorVerdict> {
        let d = decompose_char_simple(s)?;
        let (ok, cent) = match self.kind() {
            ClassKind::Abelian | ClassKind::Nilpotent | ClassKind::Soluble => {
                let c = centrality(g, s, self, b)?;
                (c.central, Some(c))
            }
            ClassKind::Supersoluble => (is_prime(s.order()), None),
            ClassKind::CompositionFactors(base) => (base.contains(&d.simple), None),
            ClassKind::Jcs(f, j) => {
                if member_char_simple(f, s, &d, b)? {
                    let c = centrality(g, s, f, b)?;
                    (c.central, Some(c))
                } else {
                    (d.is_simple() && j.contains(&d.simple), None)
                }
            }
            ClassKind::Ca(f) => {
                if d.is_abelian() {
                    let c = centrality(g, s, f, b)?;
                    (c.central, Some(c))
                } else {
                    (d.is_simple(), None)
                }
            }
        };
        Ok(FactorVerdict {
            section: s.clone(),
            decomposition: d,
            centrality: cent,
            ok,
        })
    }
}

/// Membership of the characteristically simple group `H/K` in `f`.
pub(crate) fn member_char_simple(
    f: &GroupClass,
    s: &Section,
    d: &CharSimple,
    b: &Budgets,
) -> Result<bool> {
    match f.kind() {
        ClassKind::Abelian | ClassKind::Nilpotent | ClassKind::Soluble | ClassKind::Supersoluble => {
            Ok(d.is_abelian())
        }
        ClassKind::CompositionFactors(base) => Ok(base.contains(&d.simple)),
        _ => {
            let a = SectionGroup::new(&s.top, &s.bottom, true)?.group;
            f.member(&a, b)
        }
    }
}
