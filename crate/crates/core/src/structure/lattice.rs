//! Normal-subgroup lattice, socle and chief series.

use std::cmp::Ordering;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;

/// All normal subgroups of a group as bitsets over its element indices,
/// sorted by order and then lexicographically by element list.
pub(crate) struct NormalLattice {
    subs: Vec<FixedBitSet>,
    groups: Vec<PermGroup>,
    position: FxHashMap<FixedBitSet, usize>,
}

fn lex_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    a.ones().cmp(b.ones())
}

impl NormalLattice {
    fn compute(g: &PermGroup) -> NormalLattice {
        g.prepare_table();
        let n = g.order();
        let trivial = {
            let mut b = FixedBitSet::with_capacity(n);
            b.insert(0);
            b
        };
        // normal closure of each conjugacy class: the class is conjugation
        // invariant, so the subgroup it generates is already normal
        let mut closures: Vec<(FixedBitSet, Vec<u32>)> = Vec::new();
        for class in g.class_indices().iter().skip(1) {
            let mut bits = trivial.clone();
            let mut members = vec![0u32];
            let mut gens = Vec::new();
            for &x in class {
                if !bits.contains(x as usize) {
                    gens.push(x);
                    g.close_bits(&mut bits, &mut members, &gens);
                }
            }
            if !closures.iter().any(|(b, _)| *b == bits) {
                closures.push((bits, gens));
            }
        }

        let mut found: FxHashMap<FixedBitSet, Vec<u32>> = FxHashMap::default();
        found.insert(trivial.clone(), Vec::new());
        let mut queue: Vec<(FixedBitSet, Vec<u32>)> = vec![(trivial, Vec::new())];
        for (b, gens) in &closures {
            if !found.contains_key(b) {
                found.insert(b.clone(), gens.clone());
                queue.push((b.clone(), gens.clone()));
            }
        }
        // every normal subgroup is the join of the class closures it contains
        while let Some((bits, gens)) = queue.pop() {
            for (cb, cg) in &closures {
                if cb.is_subset(&bits) {
                    continue;
                }
                let mut joined = bits.clone();
                let mut members: Vec<u32> = bits.ones().map(|i| i as u32).collect();
                let mut jg = gens.clone();
                jg.extend_from_slice(cg);
                g.close_bits(&mut joined, &mut members, &jg);
                if !found.contains_key(&joined) {
                    found.insert(joined.clone(), jg.clone());
                    queue.push((joined, jg));
                }
            }
        }

        let mut entries: Vec<(FixedBitSet, Vec<u32>)> = found.into_iter().collect();
        entries.sort_by(|(a, _), (b, _)| {
            a.count_ones(..)
                .cmp(&b.count_ones(..))
                .then_with(|| lex_cmp(a, b))
        });
        let groups = entries
            .iter()
            .map(|(bits, gens)| {
                if bits.count_ones(..) == n {
                    g.clone()
                } else {
                    g.subgroup_from_bits(bits, gens)
                }
            })
            .collect();
        let subs: Vec<FixedBitSet> = entries.into_iter().map(|(b, _)| b).collect();
        let position = subs.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        NormalLattice {
            subs,
            groups,
            position,
        }
    }

    pub(crate) fn of(g: &PermGroup) -> &NormalLattice {
        g.normals_cache().get_or_init(|| NormalLattice::compute(g))
    }

    pub(crate) fn len(&self) -> usize {
        self.subs.len()
    }

    pub(crate) fn group(&self, i: usize) -> &PermGroup {
        &self.groups[i]
    }

    pub(crate) fn bits(&self, i: usize) -> &FixedBitSet {
        &self.subs[i]
    }

    pub(crate) fn groups(&self) -> &[PermGroup] {
        &self.groups
    }

    /// Lattice position of a normal subgroup of the ambient group.
    pub(crate) fn position_of(&self, ambient: &PermGroup, n: &PermGroup) -> Option<usize> {
        self.position.get(&ambient.bits_of(n)).copied()
    }

    pub(crate) fn contains(&self, lower: usize, upper: usize) -> bool {
        self.subs[lower].is_subset(&self.subs[upper])
    }

    /// Normal subgroups minimally above `i`, restricted to those inside `cap`.
    pub(crate) fn covers_within(&self, i: usize, cap: usize) -> Vec<usize> {
        let above: Vec<usize> = (0..self.len())
            .filter(|&j| j != i && self.contains(i, j) && self.contains(j, cap))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&j| !above.iter().any(|&k| k != j && self.contains(k, j)))
            .collect()
    }

    pub(crate) fn top(&self) -> usize {
        self.len() - 1
    }
}

/// Every normal subgroup of `g`, including `1` and `g`, in increasing order.
pub fn normal_subgroups(g: &PermGroup) -> Vec<PermGroup> {
    NormalLattice::of(g).groups().to_vec()
}

pub fn minimal_normal_subgroups(g: &PermGroup) -> Vec<PermGroup> {
    let lat = NormalLattice::of(g);
    lat.covers_within(0, lat.top())
        .into_iter()
        .map(|i| lat.group(i).clone())
        .collect()
}

pub fn socle(g: &PermGroup) -> PermGroup {
    minimal_normal_subgroups(g)
        .iter()
        .fold(PermGroup::trivial(g.degree()), |acc, m| acc.join(m))
}

/// A factor `top/bottom` of subgroups of `ambient`, with `bottom ⊴ top`.
#[derive(Debug, Clone)]
pub struct Section {
    pub ambient: PermGroup,
    pub top: PermGroup,
    pub bottom: PermGroup,
}

impl Section {
    pub fn new(ambient: &PermGroup, top: &PermGroup, bottom: &PermGroup) -> Result<Section> {
        if !top.is_subgroup_of(ambient) || !bottom.is_subgroup_of(top) {
            return Err(Error::NotSubgroup);
        }
        if !bottom.is_normal_in(top) {
            return Err(Error::NotNormal);
        }
        Ok(Section {
            ambient: ambient.clone(),
            top: top.clone(),
            bottom: bottom.clone(),
        })
    }

    pub fn order(&self) -> usize {
        self.top.order() / self.bottom.order()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.top.generators();
        gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| self.bottom.contains(&a.commutator(b)))
        })
    }

    /// Both ends are normal in the ambient group.
    pub fn is_normal(&self) -> bool {
        self.top.is_normal_in(&self.ambient) && self.bottom.is_normal_in(&self.ambient)
    }

    /// A normal section with no ambient-normal subgroup strictly between its ends.
    pub fn is_chief(&self) -> bool {
        if !self.is_normal() || self.order() == 1 {
            return false;
        }
        let lat = NormalLattice::of(&self.ambient);
        let (Some(lo), Some(hi)) = (
            lat.position_of(&self.ambient, &self.bottom),
            lat.position_of(&self.ambient, &self.top),
        ) else {
            return false;
        };
        lat.covers_within(lo, hi).contains(&hi)
    }
}

/// `1 = G_0 < G_1 < … < G_n = G` with every `G_i/G_{i-1}` a chief factor.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    pub ambient: PermGroup,
    pub terms: Vec<PermGroup>,
}

impl ChiefSeries {
    /// Factors from the bottom up.
    pub fn sections(&self) -> Vec<Section> {
        self.terms
            .windows(2)
            .map(|w| Section {
                ambient: self.ambient.clone(),
                top: w[1].clone(),
                bottom: w[0].clone(),
            })
            .collect()
    }

    pub fn factor_orders(&self) -> Vec<usize> {
        self.terms
            .windows(2)
            .map(|w| w[1].order() / w[0].order())
            .collect()
    }
}

enum TieBreak {
    Lexicographic,
    Seeded(Box<ChaCha8Rng>),
}

fn build_series(g: &PermGroup, through: Option<&PermGroup>, mut rule: TieBreak) -> ChiefSeries {
    let lat = NormalLattice::of(g);
    let top = lat.top();
    let waypoint = through.and_then(|n| lat.position_of(g, n));
    let mut idx = 0;
    let mut terms = vec![lat.group(0).clone()];
    while idx != top {
        let cap = match waypoint {
            Some(w) if lat.contains(idx, w) && idx != w => w,
            _ => top,
        };
        let mut covers = lat.covers_within(idx, cap);
        covers.sort_by(|&a, &b| lex_cmp(lat.bits(a), lat.bits(b)));
        idx = match &mut rule {
            TieBreak::Lexicographic => covers[0],
            TieBreak::Seeded(rng) => *covers.choose(rng).expect("a proper normal subgroup has a cover"),
        };
        terms.push(lat.group(idx).clone());
    }
    ChiefSeries {
        ambient: g.clone(),
        terms,
    }
}

/// Deterministic chief series: each step takes the lexicographically least
/// minimal cover in the normal lattice.
pub fn chief_series(g: &PermGroup) -> ChiefSeries {
    build_series(g, None, TieBreak::Lexicographic)
}

/// Chief series with cover choices drawn from a seeded generator.
pub fn chief_series_seeded(g: &PermGroup, seed: u64) -> ChiefSeries {
    build_series(g, None, TieBreak::Seeded(Box::new(ChaCha8Rng::seed_from_u64(seed))))
}

/// Deterministic chief series passing through the normal subgroup `n`.
pub fn chief_series_through(g: &PermGroup, n: &PermGroup) -> Result<ChiefSeries> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    Ok(build_series(g, Some(n), TieBreak::Lexicographic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::products::{direct_product, wreath_regular};

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn s4() -> PermGroup {
        PermGroup::generate(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 100).unwrap()
    }

    fn a5() -> PermGroup {
        PermGroup::generate(&[p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)], 100).unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        let c: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        PermGroup::generate(&[p(&format!("({})", c.join(" ")), n)], 100).unwrap()
    }

    /// Brute force: close every subset generated by at most two elements and
    /// keep the normal ones. Enough for S4, whose subgroups are all 2-generated.
    fn brute_normals(g: &PermGroup) -> Vec<Vec<Permutation>> {
        let mut out: Vec<Vec<Permutation>> = Vec::new();
        for a in g.elements() {
            for b in g.elements() {
                let h = g.subgroup(&[a.clone(), b.clone()]);
                if h.is_normal_in(g) && !out.contains(&h.elements().to_vec()) {
                    out.push(h.elements().to_vec());
                }
            }
        }
        out.sort_by_key(|e| e.len());
        out
    }

    #[test]
    fn normal_lattice_of_s4() {
        let g = s4();
        let normals = normal_subgroups(&g);
        let orders: Vec<usize> = normals.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let brute = brute_normals(&g);
        let ours: Vec<Vec<Permutation>> = normals.iter().map(|n| n.elements().to_vec()).collect();
        assert_eq!(ours, brute);
        assert!(normals.iter().all(|n| n.is_normal_in(&g)));
    }

    #[test]
    fn normal_lattice_small_cases() {
        assert_eq!(normal_subgroups(&a5()).len(), 2);
        assert_eq!(normal_subgroups(&cyclic(6)).len(), 4);
        assert_eq!(normal_subgroups(&PermGroup::trivial(3)).len(), 1);
    }

    #[test]
    fn socles() {
        let g = s4();
        assert_eq!(socle(&g).order(), 4);
        assert_eq!(socle(&a5()), a5());
        let w = wreath_regular(&a5(), &cyclic(2), 10_000).unwrap();
        let mins = minimal_normal_subgroups(&w);
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 3600);
    }

    #[test]
    fn chief_series_examples() {
        let s = chief_series(&s4());
        assert_eq!(s.factor_orders(), vec![4, 3, 2]);
        assert!(s.sections().iter().all(|x| x.is_chief()));
        assert_eq!(chief_series(&a5()).factor_orders(), vec![60]);
        let mut f = chief_series(&cyclic(12)).factor_orders();
        f.sort_unstable();
        assert_eq!(f, vec![2, 2, 3]);
    }

    #[test]
    fn seeded_series_are_chief_series() {
        let g = direct_product(&s4(), &cyclic(6), 1000).unwrap();
        for seed in 0..5 {
            let s = chief_series_seeded(&g, seed);
            assert!(s.sections().iter().all(|x| x.is_chief()));
            let mut f = s.factor_orders();
            f.sort_unstable();
            assert_eq!(f, vec![2, 2, 3, 3, 4]);
        }
    }

    #[test]
    fn series_through_a_waypoint() {
        let g = direct_product(&cyclic(2), &cyclic(3), 100).unwrap();
        let c3 = g.filter(|x| x.order() % 2 == 1);
        let s = chief_series_through(&g, &c3).unwrap();
        assert_eq!(s.factor_orders(), vec![3, 2]);
        let c2 = g.filter(|x| x.order() <= 2);
        let s = chief_series_through(&g, &c2).unwrap();
        assert_eq!(s.factor_orders(), vec![2, 3]);
    }

    #[test]
    fn section_checks() {
        let g = s4();
        let normals = normal_subgroups(&g);
        let s = Section::new(&g, &normals[2], &normals[1]).unwrap();
        assert_eq!(s.order(), 3);
        assert!(s.is_abelian() && s.is_chief());
        let s = Section::new(&g, &normals[2], &normals[0]).unwrap();
        assert!(!s.is_chief());
        let c3 = g.subgroup(&[p("(1 2 3)", 4)]);
        assert_eq!(Section::new(&g, &normals[2], &c3).unwrap_err(), Error::NotNormal);
    }
}
