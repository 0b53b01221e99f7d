//! Hypercentre, residual, `𝔉`-maximal subgroups and their intersection.

use crate::analysis::centrality::is_central_factor;
use crate::classes::GroupClass;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::quotient;
use crate::structure::lattice::NormalLattice;
use crate::structure::{all_subgroups, Section};
use crate::Budgets;

fn require_formation(c: &GroupClass) -> Result<()> {
    if c.flags().is_formation {
        Ok(())
    } else {
        Err(Error::Hypothesis(c.name(), "not a formation".into()))
    }
}

/// Smallest lattice element containing both.
fn join_idx(lat: &NormalLattice, a: usize, b: usize) -> usize {
    (0..lat.len())
        .find(|&i| lat.contains(a, i) && lat.contains(b, i))
        .expect("the whole group contains both")
}

/// Largest lattice element contained in both.
fn meet_idx(lat: &NormalLattice, a: usize, b: usize) -> usize {
    (0..lat.len())
        .rev()
        .find(|&i| lat.contains(i, a) && lat.contains(i, b))
        .expect("the trivial subgroup lies in both")
}

/// `Z_C(G)`: starting from `1`, adjoin every `C`-central minimal normal
/// subgroup of `G/Z_i` until nothing changes.
pub fn hypercenter(g: &PermGroup, c: &GroupClass, b: &Budgets) -> Result<PermGroup> {
    require_formation(c)?;
    let lat = NormalLattice::of(g);
    let mut z = 0;
    loop {
        let mut next = z;
        for m in lat.covers_within(z, lat.top()) {
            if lat.contains(m, next) {
                continue;
            }
            let s = Section {
                ambient: g.clone(),
                top: lat.group(m).clone(),
                bottom: lat.group(z).clone(),
            };
            if is_central_factor(g, &s, c, b)? {
                next = join_idx(lat, next, m);
            }
        }
        if next == z {
            return Ok(lat.group(z).clone());
        }
        z = next;
    }
}

/// `G^C`: the intersection of the normal subgroups `N` with `G/N ∈ C`.
pub fn residual(g: &PermGroup, c: &GroupClass, b: &Budgets) -> Result<PermGroup> {
    require_formation(c)?;
    let lat = NormalLattice::of(g);
    let mut r = lat.top();
    for i in 0..lat.len() {
        if lat.contains(r, i) {
            continue;
        }
        let (q, _) = quotient(g, lat.group(i))?;
        if c.member(&q, b)? {
            r = meet_idx(lat, r, i);
        }
    }
    let result = lat.group(r).clone();
    let (q, _) = quotient(g, &result)?;
    if !c.member(&q, b)? {
        return Err(Error::FormationConsistencyViolation(c.name()));
    }
    Ok(result)
}

/// Subgroups in `C` that lie in no larger subgroup in `C`.
pub fn f_maximal_subgroups(g: &PermGroup, c: &GroupClass, b: &Budgets) -> Result<Vec<PermGroup>> {
    let subs = all_subgroups(g, b.subgroup_budget)?;
    let mut maximal: Vec<PermGroup> = Vec::new();
    // a subgroup inside a known maximal member is never itself maximal
    for h in subs.iter().rev() {
        if maximal.iter().any(|m| h.is_subgroup_of(m)) {
            continue;
        }
        if c.member(h, b)? {
            maximal.push(h.clone());
        }
    }
    Ok(maximal)
}

/// `Int_C(G)`, the intersection of all `C`-maximal subgroups.
pub fn int_f(g: &PermGroup, c: &GroupClass, b: &Budgets) -> Result<PermGroup> {
    let maximal = f_maximal_subgroups(g, c, b)?;
    Ok(maximal
        .iter()
        .fold(g.clone(), |acc, m| acc.intersection(m)))
}
