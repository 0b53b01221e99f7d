//! Centres, commutator series, radicals and centralizers of sections.

use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::lattice::{normal_subgroups, Section};
use crate::structure::simple::factorize;

pub fn center(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    g.filter(|x| gens.iter().all(|y| x.compose(y) == y.compose(x)))
}

/// `[N, G]` for `N ⊴ G`: the normal closure of commutators of generators.
fn commutator_with(g: &PermGroup, n: &PermGroup) -> PermGroup {
    let comms: Vec<Permutation> = n
        .generators()
        .iter()
        .flat_map(|a| g.generators().iter().map(move |b| a.commutator(b)))
        .collect();
    g.normal_closure(&comms)
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    commutator_with(g, g)
}

/// `G ≥ G' ≥ G'' ≥ …` down to the first repeated term.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// `G = γ_1 ≥ γ_2 = [G,G] ≥ γ_3 = [γ_2,G] ≥ …` down to the first repeated term.
pub fn lower_central_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = commutator_with(g, last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// `1 = Z_0 ≤ Z_1 = Z(G) ≤ …` up to the hypercentre.
pub fn upper_central_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![PermGroup::trivial(g.degree())];
    let gens = g.generators();
    loop {
        let last = series.last().expect("nonempty");
        let next = g.filter(|x| gens.iter().all(|y| last.contains(&x.commutator(y))));
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_soluble(g: &PermGroup) -> bool {
    derived_series(g).last().expect("nonempty").is_trivial()
}

/// A finite group is nilpotent iff each Sylow subgroup is unique, i.e. the
/// `p`-elements number exactly `|G|_p` for every prime `p`.
pub fn is_nilpotent(g: &PermGroup) -> bool {
    if g.is_abelian() {
        return true;
    }
    let orders: Vec<usize> = g.elements().iter().map(|x| x.order()).collect();
    factorize(g.order()).into_iter().all(|(p, e)| {
        let part = p.pow(e);
        orders.iter().filter(|&&o| part % o == 0).count() == part
    })
}

/// The largest soluble normal subgroup.
pub fn soluble_radical(g: &PermGroup) -> PermGroup {
    normal_subgroups(g)
        .into_iter()
        .filter(is_soluble)
        .max_by_key(|n| n.order())
        .expect("the trivial subgroup is soluble")
}

/// `C_G(H/K) = {g : [g,h] ∈ K for every generator h of H}`.
pub fn centralizer_of_section(g: &PermGroup, s: &Section) -> PermGroup {
    let gens = s.top.generators();
    let k = &s.bottom;
    g.filter(|x| gens.iter().all(|h| k.contains(&x.commutator(h))))
}
