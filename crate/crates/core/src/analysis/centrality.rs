//! `𝔛`-centrality of chief factors: `H/K` is central when
//! `(H/K) ⋊ G/C_G(H/K)` belongs to the class.

use serde::Serialize;

use crate::classes::{ClassKind, GroupClass};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::{quotient, SectionGroup};
use crate::perm::Permutation;
use crate::products::semidirect_product;
use crate::structure::lattice::NormalLattice;
use crate::structure::{
    centralizer_of_section, chief_series_through, decompose_char_simple, derived_series, is_prime,
    prime_power, Section,
};
use crate::Budgets;

/// How a centrality verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralityPath {
    /// The semidirect product was built and tested for membership.
    Explicit,
    /// A class-specific rule decided without building the product.
    Shortcut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Centrality {
    pub central: bool,
    pub path: CentralityPath,
    /// `|H/K| · |G : C_G(H/K)|`, the order of the semidirect product.
    pub product_order: usize,
}

pub fn is_central_factor(g: &PermGroup, s: &Section, c: &GroupClass, b: &Budgets) -> Result<bool> {
    centrality(g, s, c, b).map(|x| x.central)
}

/// Builds the semidirect product when it fits the budget and falls back to the
/// class's shortcut otherwise.
pub fn centrality(g: &PermGroup, s: &Section, c: &GroupClass, b: &Budgets) -> Result<Centrality> {
    let cent = centralizer_of_section(g, s);
    let product_order = s.order().saturating_mul(g.order() / cent.order());
    // verdicts are memoized on g, keyed by the section's place in the normal lattice
    let key = memo_key(g, s, c, b);
    let path = if product_order <= b.semidirect_budget {
        CentralityPath::Explicit
    } else {
        CentralityPath::Shortcut
    };
    if let Some(central) = key.as_ref().and_then(|k| g.memo_get(k)) {
        return Ok(Centrality {
            central,
            path,
            product_order,
        });
    }
    let remember = |central: bool| {
        if let Some(k) = key.clone() {
            g.memo_set(k, central);
        }
        central
    };
    if product_order <= b.semidirect_budget {
        let central = remember(explicit(g, s, c, b, &cent)?);
        return Ok(Centrality {
            central,
            path,
            product_order,
        });
    }
    match shortcut(g, s, c, b, &cent)?.map(remember) {
        Some(central) => Ok(Centrality {
            central,
            path: CentralityPath::Shortcut,
            product_order,
        }),
        None => Err(Error::NoShortcutAvailable {
            class: c.name(),
            order: product_order,
        }),
    }
}

fn memo_key(g: &PermGroup, s: &Section, c: &GroupClass, b: &Budgets) -> Option<String> {
    if s.ambient != *g {
        return None;
    }
    let lat = NormalLattice::of(g);
    let top = lat.position_of(g, &s.top)?;
    let bottom = lat.position_of(g, &s.bottom)?;
    Some(format!("central|{}|{}|{top}/{bottom}", c.name(), b.semidirect_budget))
}

/// The defining test: `(H/K) ⋊ G/C_G(H/K) ∈ c`.
pub fn centrality_explicit(g: &PermGroup, s: &Section, c: &GroupClass, b: &Budgets) -> Result<bool> {
    let cent = centralizer_of_section(g, s);
    explicit(g, s, c, b, &cent)
}

/// The class's shortcut rule, or `None` when the class has none.
pub fn centrality_shortcut(
    g: &PermGroup,
    s: &Section,
    c: &GroupClass,
    b: &Budgets,
) -> Result<Option<bool>> {
    let cent = centralizer_of_section(g, s);
    shortcut(g, s, c, b, &cent)
}

/// `G/C` as a permutation group together with the action of each of its
/// generators on the section group's elements.
pub(crate) fn acting_quotient(
    g: &PermGroup,
    s: &Section,
    cent: &PermGroup,
) -> Result<(SectionGroup, PermGroup, Vec<Permutation>)> {
    let sec = SectionGroup::new(&s.top, &s.bottom, true)?;
    let (q, _) = quotient(g, cent)?;
    let action = if cent.order() == g.order() {
        vec![Permutation::identity(sec.group.order())]
    } else {
        g.generators()
            .iter()
            .map(|x| sec.conjugation_action(x))
            .collect()
    };
    Ok((sec, q, action))
}

fn explicit(g: &PermGroup, s: &Section, c: &GroupClass, b: &Budgets, cent: &PermGroup) -> Result<bool> {
    let (sec, q, action) = acting_quotient(g, s, cent)?;
    let product = semidirect_product(&sec.group, &q, &action, b.semidirect_budget)?;
    c.member(&product, b)
}

fn shortcut(
    g: &PermGroup,
    s: &Section,
    c: &GroupClass,
    b: &Budgets,
    cent: &PermGroup,
) -> Result<Option<bool>> {
    let trivial_action = cent.order() == g.order();
    let verdict = match c.kind() {
        ClassKind::Abelian => trivial_action && s.is_abelian(),
        // a p-group acting irreducibly on an F_p-module acts trivially
        ClassKind::Nilpotent => trivial_action && prime_power(s.order()).is_some(),
        ClassKind::Soluble => {
            let residual = derived_series(g).pop().expect("nonempty");
            s.is_abelian() && residual.is_subgroup_of(cent)
        }
        ClassKind::Supersoluble => s.is_abelian() && is_prime(s.order()),
        ClassKind::CompositionFactors(base) => {
            let own = decompose_char_simple(s)?;
            if !base.contains(&own.simple) {
                false
            } else {
                let above = chief_series_through(g, cent)?;
                let mut ok = true;
                for f in above.sections().iter().filter(|f| f.bottom.order() >= cent.order()) {
                    if !base.contains(&decompose_char_simple(f)?.simple) {
                        ok = false;
                        break;
                    }
                }
                ok
            }
        }
        ClassKind::Jcs(f, _) => {
            let fl = f.flags();
            if !(fl.is_formation && fl.is_solubly_saturated && fl.contains_nilpotent) {
                return Ok(None);
            }
            if s.is_abelian() {
                is_central_factor(g, s, f, b)?
            } else {
                let (q, _) = quotient(g, cent)?;
                c.member(&q, b)?
            }
        }
        // In A ⋊ Q the base is a chief factor whose F-centrality matches that of
        // H/K in G, and every factor above it is a factor of Q.
        ClassKind::Ca(f) => {
            let own_ok = if s.is_abelian() {
                is_central_factor(g, s, f, b)?
            } else {
                decompose_char_simple(s)?.is_simple()
            };
            own_ok && {
                let (q, _) = quotient(g, cent)?;
                c.member(&q, b)?
            }
        }
    };
    Ok(Some(verdict))
}
