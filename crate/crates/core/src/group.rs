//! Enumerated permutation groups.

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use fixedbitset::FixedBitSet;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::lattice::NormalLattice;

/// Groups up to this order get a full Cayley table on first indexed use.
const CAYLEY_TABLE_LIMIT: usize = 2048;

/// A permutation group with its full element set.
///
/// Elements are kept sorted, so two groups on the same degree are equal
/// exactly when their element lists are equal. Cloning is cheap and clones
/// share lazily computed data (element index, conjugacy classes, normal
/// lattice, subgroup list).
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: OnceLock<FxHashMap<Permutation, u32>>,
    table: OnceLock<Option<Vec<u16>>>,
    classes: OnceLock<Vec<Vec<u32>>>,
    normals: OnceLock<NormalLattice>,
    subgroups: OnceLock<Vec<PermGroup>>,
    // class name -> membership verdict
    memo: Mutex<FxHashMap<String, bool>>,
}

/// Breadth-first closure of `gens` under right multiplication.
pub(crate) fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: FxHashSet<Permutation> = FxHashSet::default();
    let mut order = vec![id.clone()];
    seen.insert(id);
    let mut head = 0;
    while head < order.len() {
        let x = order[head].clone();
        head += 1;
        for g in gens {
            let y = x.compose(g);
            if !seen.contains(&y) {
                if order.len() >= cap {
                    return Err(Error::ElementCapExceeded {
                        cap,
                        partial: order.len() + 1,
                    });
                }
                seen.insert(y.clone());
                order.push(y);
            }
        }
    }
    Ok(order)
}

impl PermGroup {
    /// `⟨gens⟩`, enumerated breadth-first. Fails once more than `cap` elements appear.
    pub fn generate(gens: &[Permutation], cap: usize) -> Result<PermGroup> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch);
        }
        let mut elements = closure(degree, gens, cap.max(1))?;
        elements.sort_unstable();
        Ok(Self::assemble(degree, gens.to_vec(), elements))
    }

    pub fn trivial(degree: usize) -> PermGroup {
        let id = Permutation::identity(degree);
        Self::assemble(degree, vec![id.clone()], vec![id])
    }

    pub(crate) fn assemble(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> PermGroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                elements,
                index: OnceLock::new(),
                table: OnceLock::new(),
                classes: OnceLock::new(),
                normals: OnceLock::new(),
                subgroups: OnceLock::new(),
                memo: Mutex::new(FxHashMap::default()),
            }),
        }
    }

    /// Wraps a sorted, closed element list and picks a small generating set greedily.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Permutation>) -> PermGroup {
        let mut index = FxHashMap::default();
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.clone(), i as u32);
        }
        let n = elements.len();
        let mut in_sub = FixedBitSet::with_capacity(n);
        in_sub.insert(0);
        let mut members = vec![0u32];
        let mut gen_idx: Vec<u32> = Vec::new();
        // larger element orders first keeps the generating set short
        let mut candidates: Vec<usize> = (1..n).collect();
        candidates.sort_by_key(|&i| std::cmp::Reverse(elements[i].order()));
        for c in candidates {
            if members.len() == n {
                break;
            }
            if in_sub.contains(c) {
                continue;
            }
            gen_idx.push(c as u32);
            let mut head = 0;
            while head < members.len() {
                let x = &elements[members[head] as usize];
                head += 1;
                for &g in &gen_idx {
                    let y = index[&x.compose(&elements[g as usize])];
                    if !in_sub.contains(y as usize) {
                        in_sub.insert(y as usize);
                        members.push(y);
                    }
                }
            }
        }
        let gens = gen_idx
            .iter()
            .map(|&i| elements[i as usize].clone())
            .collect();
        let g = Self::assemble(degree, gens, elements);
        let _ = g.inner.index.set(index);
        g
    }

    /// Subgroup of `self` given by a bitset over `self`'s element indices.
    pub(crate) fn subgroup_from_bits(&self, bits: &FixedBitSet, gens: &[u32]) -> PermGroup {
        let elements: Vec<Permutation> = bits.ones().map(|i| self.element(i).clone()).collect();
        if gens.is_empty() && elements.len() > 1 {
            return Self::from_sorted_elements(self.degree(), elements);
        }
        let gens = gens.iter().map(|&i| self.element(i as usize).clone()).collect();
        Self::assemble(self.degree(), gens, elements)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    /// All elements in ascending order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.inner.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.inner.elements[i]
    }

    pub fn identity(&self) -> &Permutation {
        &self.inner.elements[0]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    fn index(&self) -> &FxHashMap<Permutation, u32> {
        self.inner.index.get_or_init(|| {
            self.elements()
                .iter()
                .enumerate()
                .map(|(i, e)| (e.clone(), i as u32))
                .collect()
        })
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree() {
            return None;
        }
        self.index().get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree() && self.elements().binary_search(p).is_ok()
    }

    fn table(&self) -> Option<&Vec<u16>> {
        self.inner
            .table
            .get_or_init(|| {
                let n = self.order();
                if n > CAYLEY_TABLE_LIMIT {
                    return None;
                }
                let index = self.index();
                let mut t = vec![0u16; n * n];
                for (i, x) in self.elements().iter().enumerate() {
                    for (j, y) in self.elements().iter().enumerate() {
                        t[i * n + j] = index[&x.compose(y)] as u16;
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    /// Forces the Cayley table for small groups; a no-op above the size limit.
    pub(crate) fn prepare_table(&self) {
        let _ = self.table();
    }

    /// Index of `element(i) * element(j)`.
    #[inline]
    pub(crate) fn mul_idx(&self, i: u32, j: u32) -> u32 {
        if let Some(Some(t)) = self.inner.table.get() {
            return t[i as usize * self.order() + j as usize] as u32;
        }
        let p = self.element(i as usize).compose(self.element(j as usize));
        self.index()[&p]
    }

    pub(crate) fn idx(&self, p: &Permutation) -> u32 {
        self.index()[p]
    }

    /// Element indices of the generators.
    pub(crate) fn generator_indices(&self) -> Vec<u32> {
        self.generators().iter().map(|g| self.idx(g)).collect()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        if self.degree() != other.degree() || !other.order().is_multiple_of(self.order()) {
            return false;
        }
        let (a, b) = (self.elements(), other.elements());
        let mut j = 0;
        for x in a {
            while j < b.len() && &b[j] < x {
                j += 1;
            }
            if j == b.len() || &b[j] != x {
                return false;
            }
        }
        true
    }

    pub fn is_proper_subgroup_of(&self, other: &PermGroup) -> bool {
        self.order() < other.order() && self.is_subgroup_of(other)
    }

    /// True when `self` is a subgroup of `ambient` normalized by every generator of it.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient)
            && ambient.generators().iter().all(|g| {
                self.generators()
                    .iter()
                    .all(|h| self.contains(&h.conjugate_by(g)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Subgroup generated by `gens`, all of which must lie in `self`.
    pub fn subgroup(&self, gens: &[Permutation]) -> PermGroup {
        let gens: Vec<Permutation> = if gens.is_empty() {
            vec![self.identity().clone()]
        } else {
            gens.to_vec()
        };
        debug_assert!(gens.iter().all(|g| self.contains(g)));
        let mut elements =
            closure(self.degree(), &gens, usize::MAX).expect("subgroup closure is bounded");
        elements.sort_unstable();
        Self::assemble(self.degree(), gens, elements)
    }

    /// Subgroup of `self` consisting of the elements that satisfy `pred`.
    pub(crate) fn filter(&self, pred: impl Fn(&Permutation) -> bool) -> PermGroup {
        let elements: Vec<Permutation> =
            self.elements().iter().filter(|x| pred(x)).cloned().collect();
        Self::from_sorted_elements(self.degree(), elements)
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        if self.is_subgroup_of(other) {
            return self.clone();
        }
        if other.is_subgroup_of(self) {
            return other.clone();
        }
        let elements: Vec<Permutation> = self
            .elements()
            .iter()
            .filter(|x| other.contains(x))
            .cloned()
            .collect();
        Self::from_sorted_elements(self.degree(), elements)
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        if other.is_subgroup_of(self) {
            return self.clone();
        }
        if self.is_subgroup_of(other) {
            return other.clone();
        }
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().cloned());
        gens.retain(|g| !g.is_identity());
        let mut elements =
            closure(self.degree(), &gens, usize::MAX).expect("subgroup closure is bounded");
        elements.sort_unstable();
        Self::assemble(self.degree(), gens, elements)
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        if gens.is_empty() {
            return PermGroup::trivial(self.degree());
        }
        let mut sub = self.subgroup(&gens);
        loop {
            let mut added = false;
            let snapshot = sub.generators().to_vec();
            for h in &snapshot {
                for g in self.generators() {
                    let c = h.conjugate_by(g);
                    if !sub.contains(&c) {
                        gens.push(c);
                        sub = self.subgroup(&gens);
                        added = true;
                    }
                }
            }
            if !added {
                return sub;
            }
        }
    }

    /// Conjugacy classes as element-index lists, cached.
    ///
    /// Classes are ordered by the order of their elements, then by smallest element.
    pub(crate) fn class_indices(&self) -> &[Vec<u32>] {
        self.inner.classes.get_or_init(|| {
            let n = self.order();
            let gens = self.generators();
            let mut assigned = FixedBitSet::with_capacity(n);
            let mut classes: Vec<Vec<u32>> = Vec::new();
            for start in 0..n {
                if assigned.contains(start) {
                    continue;
                }
                assigned.insert(start);
                let mut class = vec![start as u32];
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    let xp = self.element(x);
                    for g in gens {
                        let y = self.idx(&xp.conjugate_by(g)) as usize;
                        if !assigned.contains(y) {
                            assigned.insert(y);
                            class.push(y as u32);
                            queue.push_back(y);
                        }
                    }
                }
                class.sort_unstable();
                classes.push(class);
            }
            classes.sort_by_key(|c| (self.element(c[0] as usize).order(), c[0]));
            classes
        })
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<Permutation>> {
        self.class_indices()
            .iter()
            .map(|c| c.iter().map(|&i| self.element(i as usize).clone()).collect())
            .collect()
    }

    /// Sorted multiset of element orders; an isomorphism invariant.
    pub fn element_order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().iter().map(|e| e.order()).collect();
        v.sort_unstable();
        v
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .iter()
            .fold(1, |acc, e| crate::perm::lcm(acc, e.order()))
    }

    pub(crate) fn bits_of(&self, sub: &PermGroup) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for e in sub.elements() {
            bits.insert(self.idx(e) as usize);
        }
        bits
    }

    /// Extends `bits`/`members` (a set containing the identity) to its closure
    /// under right multiplication by `gens`, all given as element indices.
    pub(crate) fn close_bits(&self, bits: &mut FixedBitSet, members: &mut Vec<u32>, gens: &[u32]) {
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.mul_idx(x, g);
                if !bits.contains(y as usize) {
                    bits.insert(y as usize);
                    members.push(y);
                }
            }
        }
    }

    pub(crate) fn normals_cache(&self) -> &OnceLock<NormalLattice> {
        &self.inner.normals
    }

    pub(crate) fn memo_get(&self, key: &str) -> Option<bool> {
        self.inner.memo.lock().expect("memo lock").get(key).copied()
    }

    pub(crate) fn memo_set(&self, key: String, value: bool) {
        self.inner.memo.lock().expect("memo lock").insert(key, value);
    }

    pub(crate) fn subgroups_cache(&self) -> &OnceLock<Vec<PermGroup>> {
        &self.inner.subgroups
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.degree() == other.degree() && self.elements() == other.elements())
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, degree {}, gens [", self.order(), self.degree())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_on_four_points() {
        let g = PermGroup::generate(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 1000).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.identity().is_identity());
    }

    #[test]
    fn alternating_group_on_five_points() {
        let g = PermGroup::generate(&[p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)], 1000).unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn cap_is_enforced() {
        let err = PermGroup::generate(&[p("(1 2)", 2)], 1).unwrap_err();
        assert_eq!(err, Error::ElementCapExceeded { cap: 1, partial: 2 });
    }

    #[test]
    fn generate_rejects_bad_input() {
        assert_eq!(PermGroup::generate(&[], 10).unwrap_err(), Error::NoGenerators);
        assert_eq!(
            PermGroup::generate(&[p("(1 2)", 2), p("(1 2 3)", 3)], 10).unwrap_err(),
            Error::DegreeMismatch
        );
    }

    #[test]
    fn closure_and_inverse_closure() {
        let g = PermGroup::generate(&[p("(1 2 3)(4 5)", 6), p("(1 6)", 6)], 10_000).unwrap();
        for x in g.elements() {
            assert!(g.contains(&x.inverse()));
            for y in g.generators() {
                assert!(g.contains(&x.compose(y)));
            }
        }
        assert_eq!(720 % g.order(), 0);
    }

    #[test]
    fn conjugacy_class_sizes() {
        let s3 = PermGroup::generate(&[p("(1 2)", 3), p("(1 2 3)", 3)], 100).unwrap();
        let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);

        let s4 = PermGroup::generate(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 100).unwrap();
        let sizes: Vec<usize> = s4.conjugacy_classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 6, 3, 8, 6]);

        let c6 = PermGroup::generate(&[p("(1 2 3 4 5 6)", 6)], 100).unwrap();
        assert!(c6.conjugacy_classes().iter().all(|c| c.len() == 1));
        assert_eq!(c6.conjugacy_classes().len(), 6);
    }

    #[test]
    fn brute_force_class_sizes_of_s4() {
        // every class is {g^-1 x g : g in G}
        let s4 = PermGroup::generate(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 100).unwrap();
        let mut brute: Vec<Vec<Permutation>> = Vec::new();
        for x in s4.elements() {
            let mut class: Vec<Permutation> =
                s4.elements().iter().map(|g| x.conjugate_by(g)).collect();
            class.sort();
            class.dedup();
            if !brute.contains(&class) {
                brute.push(class);
            }
        }
        let mut ours = s4.conjugacy_classes();
        ours.sort();
        brute.sort();
        assert_eq!(ours, brute);
    }

    #[test]
    fn subgroup_set_operations() {
        let s4 = PermGroup::generate(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 100).unwrap();
        let v4 = s4.subgroup(&[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]);
        let a4 = s4.subgroup(&[p("(1 2 3)", 4), p("(1 2)(3 4)", 4)]);
        assert_eq!(v4.order(), 4);
        assert_eq!(a4.order(), 12);
        assert!(v4.is_normal_in(&s4));
        assert!(v4.is_subgroup_of(&a4));
        let c3 = s4.subgroup(&[p("(1 2 3)", 4)]);
        assert!(!c3.is_normal_in(&s4));
        assert_eq!(c3.intersection(&v4).order(), 1);
        assert_eq!(c3.join(&v4), a4);
        let closure = s4.normal_closure(&[p("(1 2 3)", 4)]);
        assert_eq!(closure, a4);
    }

    #[test]
    fn from_sorted_elements_generates_itself() {
        let s4 = PermGroup::generate(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 100).unwrap();
        let rebuilt = PermGroup::from_sorted_elements(4, s4.elements().to_vec());
        assert_eq!(rebuilt.subgroup(rebuilt.generators()), s4);
        assert!(rebuilt.generators().len() <= 3);
    }

    #[test]
    fn indexed_multiplication_agrees_with_composition() {
        let g = PermGroup::generate(&[p("(1 2 3 4 5)", 5), p("(1 2)", 5)], 1000).unwrap();
        let check = |g: &PermGroup| {
            for i in (0..g.order()).step_by(7) {
                for j in (0..g.order()).step_by(11) {
                    let k = g.mul_idx(i as u32, j as u32) as usize;
                    assert_eq!(g.element(k), &g.element(i).compose(g.element(j)));
                }
            }
        };
        check(&g);
        g.prepare_table();
        check(&g);
    }
}
