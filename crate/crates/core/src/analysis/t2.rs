//! Three structural descriptions of `Jcs`-`F`-groups, evaluated separately.

use serde::Serialize;

use crate::analysis::constructions::{hypercenter, residual};
use crate::classes::{GroupClass, JSet};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::quotient;
use crate::structure::lattice::NormalLattice;
use crate::structure::{
    center, decompose_char_simple, is_soluble, minimal_normal_subgroups, socle, Section,
};
use crate::Budgets;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T2Witness {
    pub hypercenter_order: usize,
    /// Simple types of the minimal normal subgroups of `G/Z_F(G)`.
    pub socle_factors: Vec<String>,
    pub socle_preimage_order: usize,
    pub residual_order: usize,
    pub e_residual_order: usize,
    pub residual_center_order: usize,
    /// Simple types of the `G`-invariant factors of `G^F/Z(G^F)`.
    pub residual_factors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T2Conditions {
    /// `G ∈ F_Jcs`.
    pub b1: bool,
    /// `Soc(G/Z_F(G))` is a product of `G`-invariant simple `J`-groups and the
    /// quotient by its preimage is a soluble `F`-group.
    pub b2: bool,
    /// `G^F = G^{EF}`, `Z(G^F) ≤ Z_F(G)`, and `G^F/Z(G^F)` is a product of
    /// `G`-invariant simple `J`-groups.
    pub b3: bool,
    pub witness: T2Witness,
}

impl T2Conditions {
    pub fn agree(&self) -> bool {
        self.b1 == self.b2 && self.b2 == self.b3
    }
}

fn describe(s: &Section) -> Result<(bool, String)> {
    let d = decompose_char_simple(s)?;
    let name = if d.multiplicity == 1 {
        d.simple.name.clone()
    } else {
        format!("{}^{}", d.simple.name, d.multiplicity)
    };
    Ok((d.is_simple() && !d.is_abelian(), name))
}

/// Requires `F` to be a solubly saturated formation whose composition
/// closure `EF` is known (the soluble builtins and `E(base)`).
pub fn t2_conditions(g: &PermGroup, f: &GroupClass, j: &JSet, b: &Budgets) -> Result<T2Conditions> {
    let ef = f
        .composition_closure()
        .ok_or_else(|| Error::Hypothesis(f.name(), "composition closure unknown".into()))?;
    if !f.flags().is_solubly_saturated {
        return Err(Error::Hypothesis(f.name(), "not solubly saturated".into()));
    }
    let jc = GroupClass::jcs(f.clone(), j.clone())?;
    let b1 = jc.member(g, b)?;

    let z = hypercenter(g, f, b)?;
    let (gz, proj) = quotient(g, &z)?;
    let trivial = PermGroup::trivial(gz.degree());
    let mut socle_factors = Vec::new();
    let mut socle_ok = true;
    if !gz.is_trivial() {
        for m in minimal_normal_subgroups(&gz) {
            let s = Section::new(&gz, &m, &trivial)?;
            let (simple, name) = describe(&s)?;
            let d = decompose_char_simple(&s)?;
            socle_ok &= simple && j.contains(&d.simple);
            socle_factors.push(name);
        }
    }
    let s_pre = proj.preimage(&socle(&gz));
    let (top, _) = quotient(g, &s_pre)?;
    let b2 = socle_ok && is_soluble(&top) && f.member(&top, b)?;

    let r = residual(g, f, b)?;
    let re = residual(g, &ef, b)?;
    let zr = center(&r);
    let mut residual_factors = Vec::new();
    let mut product_ok = true;
    if zr.order() != r.order() {
        let lat = NormalLattice::of(g);
        let lo = lat.position_of(g, &zr).expect("the centre of a normal subgroup is normal");
        let hi = lat.position_of(g, &r).expect("the residual is normal");
        let covers = lat.covers_within(lo, hi);
        let mut order = 1usize;
        let mut joined = zr.clone();
        for m in covers {
            let s = Section::new(g, lat.group(m), &zr)?;
            let (simple, name) = describe(&s)?;
            let d = decompose_char_simple(&s)?;
            product_ok &= simple && j.contains(&d.simple);
            order = order.saturating_mul(s.order());
            joined = joined.join(lat.group(m));
            residual_factors.push(name);
        }
        product_ok &= joined == r && order == r.order() / zr.order();
    }
    let b3 = r == re && zr.is_subgroup_of(&z) && product_ok;

    Ok(T2Conditions {
        b1,
        b2,
        b3,
        witness: T2Witness {
            hypercenter_order: z.order(),
            socle_factors,
            socle_preimage_order: s_pre.order(),
            residual_order: r.order(),
            e_residual_order: re.order(),
            residual_center_order: zr.order(),
            residual_factors,
        },
    })
}
