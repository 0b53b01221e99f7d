//! Recognition of simple groups and characteristically simple sections.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::SectionGroup;
use crate::structure::lattice::{minimal_normal_subgroups, normal_subgroups, Section};

/// One row of the built-in table of non-abelian simple groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimpleRow {
    pub name: &'static str,
    pub order: usize,
    pub out_order: usize,
    pub out_is_nilpotent: bool,
    /// Structure of the outer automorphism group.
    pub out: &'static str,
    /// Every proper subgroup is soluble.
    pub minimal_simple: bool,
}

const fn row(
    name: &'static str,
    order: usize,
    out_order: usize,
    out_is_nilpotent: bool,
    out: &'static str,
    minimal_simple: bool,
) -> SimpleRow {
    SimpleRow {
        name,
        order,
        out_order,
        out_is_nilpotent,
        out,
        minimal_simple,
    }
}

/// Every non-abelian simple group of order at most 50 000, by order.
///
/// Order 20 160 is shared by A8 and PSL(3,4); [`identify_simple`] separates
/// them by the presence of elements of order 15, which only A8 has.
pub const SIMPLE_TABLE: &[SimpleRow] = &[
    row("A5", 60, 2, true, "C2", true),
    row("PSL(2,7)", 168, 2, true, "C2", true),
    row("A6", 360, 4, true, "C2 x C2", false),
    row("PSL(2,8)", 504, 3, true, "C3", true),
    row("PSL(2,11)", 660, 2, true, "C2", false),
    row("PSL(2,13)", 1092, 2, true, "C2", true),
    row("PSL(2,17)", 2448, 2, true, "C2", true),
    row("A7", 2520, 2, true, "C2", false),
    row("PSL(2,19)", 3420, 2, true, "C2", false),
    row("PSL(2,16)", 4080, 4, true, "C4", false),
    row("PSL(3,3)", 5616, 2, true, "C2", true),
    row("PSU(3,3)", 6048, 2, true, "C2", false),
    row("PSL(2,23)", 6072, 2, true, "C2", true),
    row("PSL(2,25)", 7800, 4, true, "C2 x C2", false),
    row("M11", 7920, 1, true, "1", false),
    row("PSL(2,27)", 9828, 6, true, "C6", true),
    row("PSL(2,29)", 12180, 2, true, "C2", false),
    row("PSL(2,31)", 14880, 2, true, "C2", false),
    row("A8", 20160, 2, true, "C2", false),
    row("PSL(3,4)", 20160, 12, false, "D12", false),
    row("PSL(2,37)", 25308, 2, true, "C2", true),
    row("PSU(4,2)", 25920, 2, true, "C2", false),
    row("Sz(8)", 29120, 3, true, "C3", true),
    row("PSL(2,32)", 32736, 5, true, "C5", true),
    row("PSL(2,41)", 34440, 2, true, "C2", false),
    row("PSL(2,43)", 39732, 2, true, "C2", true),
];

/// Largest order covered by [`SIMPLE_TABLE`].
pub const SIMPLE_TABLE_LIMIT: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimpleKind {
    CyclicOfPrime,
    NonAbelian,
}

/// Isomorphism type of a simple group: `C_p` or a row of [`SIMPLE_TABLE`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleType {
    pub kind: SimpleKind,
    pub name: String,
    pub order: usize,
    pub out_order: usize,
    pub out_is_nilpotent: bool,
}

impl SimpleType {
    pub fn cyclic(p: usize) -> SimpleType {
        debug_assert!(is_prime(p));
        SimpleType {
            kind: SimpleKind::CyclicOfPrime,
            name: format!("C{p}"),
            order: p,
            out_order: p - 1,
            out_is_nilpotent: true,
        }
    }

    fn from_row(r: &SimpleRow) -> SimpleType {
        SimpleType {
            kind: SimpleKind::NonAbelian,
            name: r.name.to_string(),
            order: r.order,
            out_order: r.out_order,
            out_is_nilpotent: r.out_is_nilpotent,
        }
    }

    /// Looks up a non-abelian simple group by its table name.
    pub fn named(name: &str) -> Result<SimpleType> {
        SIMPLE_TABLE
            .iter()
            .find(|r| r.name == name)
            .map(SimpleType::from_row)
            .ok_or_else(|| Error::UnknownSimpleName(name.to_string()))
    }

    pub fn is_abelian(&self) -> bool {
        self.kind == SimpleKind::CyclicOfPrime
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Prime factorization as `(p, exponent)` pairs in increasing `p`.
pub(crate) fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, k))` when `n = p^k` with `k ≥ 1`.
pub(crate) fn prime_power(n: usize) -> Option<(usize, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn is_simple(g: &PermGroup) -> bool {
    if g.is_trivial() {
        return false;
    }
    if is_prime(g.order()) {
        return true;
    }
    if g.is_abelian() {
        return false;
    }
    normal_subgroups(g).len() == 2
}

pub fn identify_simple(g: &PermGroup) -> Result<SimpleType> {
    if !is_simple(g) {
        return Err(Error::NotSimple);
    }
    identify_simple_unchecked(g)
}

/// Identification by order alone; `g` is assumed simple.
fn identify_simple_unchecked(g: &PermGroup) -> Result<SimpleType> {
    let n = g.order();
    if is_prime(n) {
        return Ok(SimpleType::cyclic(n));
    }
    let rows: Vec<&SimpleRow> = SIMPLE_TABLE.iter().filter(|r| r.order == n).collect();
    match rows.as_slice() {
        [] => Err(Error::UnknownSimpleOrder(n)),
        [r] => Ok(SimpleType::from_row(r)),
        _ => {
            let has_15 = g.elements().iter().any(|x| x.order() == 15);
            let name = if has_15 { "A8" } else { "PSL(3,4)" };
            SimpleType::named(name)
        }
    }
}

/// A characteristically simple section `T^k`.
#[derive(Debug, Clone)]
pub struct CharSimple {
    pub simple: SimpleType,
    pub multiplicity: usize,
    /// The `k` simple direct factors, as subgroups of the materialized section
    /// group. Empty for abelian sections.
    pub components: Vec<PermGroup>,
}

impl CharSimple {
    pub fn is_abelian(&self) -> bool {
        self.simple.is_abelian()
    }

    /// The section is itself a simple group.
    pub fn is_simple(&self) -> bool {
        self.multiplicity == 1
    }
}

/// Splits a chief factor into isomorphic simple direct factors.
pub fn decompose_char_simple(s: &Section) -> Result<CharSimple> {
    let n = s.order();
    if n == 1 {
        return Err(Error::NotCharacteristicallySimple);
    }
    if s.is_abelian() {
        let (p, k) = prime_power(n).ok_or(Error::NotCharacteristicallySimple)?;
        let exponent_p = s
            .top
            .generators()
            .iter()
            .all(|h| s.bottom.contains(&h.pow(p)));
        if !exponent_p {
            return Err(Error::NotCharacteristicallySimple);
        }
        return Ok(CharSimple {
            simple: SimpleType::cyclic(p),
            multiplicity: k as usize,
            components: Vec::new(),
        });
    }
    let a = SectionGroup::new(&s.top, &s.bottom, true)?.group;
    let mins = minimal_normal_subgroups(&a);
    let first = mins.first().ok_or(Error::NotCharacteristicallySimple)?;
    if !is_simple(first) || mins.iter().any(|m| m.order() != first.order()) {
        return Err(Error::NotCharacteristicallySimple);
    }
    let total = mins
        .iter()
        .try_fold(1usize, |acc, m| acc.checked_mul(m.order()));
    if total != Some(n) {
        return Err(Error::NotCharacteristicallySimple);
    }
    let simple = identify_simple_unchecked(first)?;
    for m in &mins[1..] {
        if identify_simple_unchecked(m)? != simple {
            return Err(Error::NotCharacteristicallySimple);
        }
    }
    Ok(CharSimple {
        simple,
        multiplicity: mins.len(),
        components: mins,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn table_is_sorted_and_named_uniquely() {
        assert!(SIMPLE_TABLE.windows(2).all(|w| w[0].order <= w[1].order));
        let mut names: Vec<&str> = SIMPLE_TABLE.iter().map(|r| r.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), SIMPLE_TABLE.len());
        assert!(SIMPLE_TABLE.iter().all(|r| r.order <= SIMPLE_TABLE_LIMIT));
        assert_eq!(SimpleType::named("M11").unwrap().out_order, 1);
        assert_eq!(SimpleType::named("A6").unwrap().out_order, 4);
        assert!(!SimpleType::named("PSL(3,4)").unwrap().out_is_nilpotent);
        assert!(SimpleType::named("A9").is_err());
    }

    #[test]
    fn table_orders_pass_classical_divisibility_constraints() {
        // Burnside's p^a q^b theorem and the Feit-Thompson theorem
        for r in SIMPLE_TABLE {
            assert_eq!(r.order % 4, 0, "{}", r.name);
            assert!(factorize(r.order).len() >= 3, "{}", r.name);
        }
    }

    #[test]
    fn identify_small_simples() {
        let a5 = PermGroup::generate(&[p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)], 100).unwrap();
        let t = identify_simple(&a5).unwrap();
        assert_eq!((t.name.as_str(), t.out_order), ("A5", 2));
        let c6 = PermGroup::generate(&[p("(1 2 3 4 5 6)", 6)], 100).unwrap();
        assert!(!is_simple(&c6));
        assert_eq!(identify_simple(&c6).unwrap_err(), Error::NotSimple);
        let c7 = PermGroup::generate(&[p("(1 2 3 4 5 6 7)", 7)], 100).unwrap();
        assert_eq!(identify_simple(&c7).unwrap(), SimpleType::cyclic(7));
    }

    #[test]
    fn prime_helpers() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert!(is_prime(2) && is_prime(43) && !is_prime(1) && !is_prime(49));
    }

    #[test]
    fn decompositions() {
        use crate::products::wreath_regular;
        use crate::structure::lattice::normal_subgroups;
        let s4 = PermGroup::generate(&[p("(1 2)", 4), p("(1 2 3 4)", 4)], 100).unwrap();
        let v4 = normal_subgroups(&s4)[1].clone();
        let d = decompose_char_simple(&Section::new(&s4, &v4, &PermGroup::trivial(4)).unwrap()).unwrap();
        assert_eq!((d.simple, d.multiplicity), (SimpleType::cyclic(2), 2));

        let a5 = PermGroup::generate(&[p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)], 100).unwrap();
        let c2 = PermGroup::generate(&[p("(1 2)", 2)], 10).unwrap();
        let w = wreath_regular(&a5, &c2, 10_000).unwrap();
        let base = normal_subgroups(&w)[1].clone();
        assert_eq!(base.order(), 3600);
        let d = decompose_char_simple(&Section::new(&w, &base, &PermGroup::trivial(10)).unwrap()).unwrap();
        assert_eq!((d.simple.name.as_str(), d.multiplicity), ("A5", 2));
        assert!(d.components.iter().all(|c| c.order() == 60));

        let s5 = PermGroup::generate(&[p("(1 2)", 5), p("(1 2 3 4 5)", 5)], 200).unwrap();
        let a5n = normal_subgroups(&s5)[1].clone();
        let d = decompose_char_simple(&Section::new(&s5, &a5n, &PermGroup::trivial(5)).unwrap()).unwrap();
        assert_eq!((d.simple.name.as_str(), d.multiplicity), ("A5", 1));

        let c6 = PermGroup::generate(&[p("(1 2 3 4 5 6)", 6)], 100).unwrap();
        let bad = Section::new(&c6, &c6, &PermGroup::trivial(6)).unwrap();
        assert_eq!(decompose_char_simple(&bad).unwrap_err(), Error::NotCharacteristicallySimple);
    }
}
