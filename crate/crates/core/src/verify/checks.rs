use rayon::prelude::*;

use super::{CheckInfo, CheckResult, Corpus, Failure, Skip, Status, MIN_HITS};
use crate::analysis::{
    centrality_explicit, centrality_shortcut, hypercenter, int_f, is_central_factor,
    member_char_simple, t2_conditions,
};
use crate::builders::parse_group;
use crate::classes::{parse_class_expr, ClassKind, GroupClass, JSet};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::quotient;
use crate::perm::Permutation;
use crate::products::direct_product;
use crate::structure::lattice::NormalLattice;
use crate::structure::{
    center, centralizer_of_section, chief_series, chief_series_seeded, chief_series_through,
    decompose_char_simple, derived_subgroup, identify_simple, is_prime, is_simple,
    normal_subgroups, upper_central_series, ChiefSeries, Section, SIMPLE_TABLE,
};
use crate::Budgets;

pub(crate) struct Ctx<'a> {
    pub corpus: &'a Corpus,
    pub b: &'a Budgets,
    pub seed: u64,
}

#[derive(Default)]
struct Outcome {
    hits: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn hit(&mut self) {
        self.hits += 1;
    }

    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(witness());
        }
    }
}

#[derive(Default)]
struct Tally {
    hits: usize,
    evaluated: usize,
    skipped: Vec<Skip>,
    failures: Vec<Failure>,
}

impl Tally {
    fn absorb(&mut self, label: &str, r: Result<Outcome>) {
        match r {
            Ok(o) => {
                self.evaluated += 1;
                self.hits += o.hits;
                self.failures.extend(o.failures.into_iter().map(|witness| Failure {
                    label: label.to_string(),
                    witness,
                }));
            }
            Err(e) if e.is_budget() => self.skipped.push(Skip {
                label: label.to_string(),
                reason: e.to_string(),
            }),
            Err(e) => self.failures.push(Failure {
                label: label.to_string(),
                witness: format!("error: {e}"),
            }),
        }
    }

    fn finish(mut self, info: &CheckInfo) -> CheckResult {
        if self.failures.is_empty() && self.hits < MIN_HITS {
            self.failures.push(Failure {
                label: "-".to_string(),
                witness: format!("only {} non-vacuous instances, need {MIN_HITS}", self.hits),
            });
        }
        self.failures.sort_by(|a, b| a.label.cmp(&b.label));
        self.skipped.sort_by(|a, b| a.label.cmp(&b.label));
        CheckResult {
            id: info.id.to_string(),
            description: info.description.to_string(),
            status: if self.failures.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            hits: self.hits,
            evaluated: self.evaluated,
            skipped: self.skipped,
            failures: self.failures,
        }
    }
}

impl Ctx<'_> {
    /// Runs `f` on every entry in parallel; `needs_int` skips entries above
    /// the subgroup budget.
    fn over_corpus(&self, needs_int: bool, f: impl Fn(&PermGroup) -> Result<Outcome> + Sync) -> Tally {
        let results: Vec<(String, Result<Outcome>)> = self
            .corpus
            .entries
            .par_iter()
            .map(|e| {
                let order = e.group.order();
                let r = if needs_int && order > self.b.subgroup_budget {
                    Err(Error::SubgroupBudgetExceeded {
                        order,
                        budget: self.b.subgroup_budget,
                    })
                } else {
                    f(&e.group)
                };
                (e.label.clone(), r)
            })
            .collect();
        let mut t = Tally::default();
        for (label, r) in results {
            t.absorb(&label, r);
        }
        t
    }
}

fn cls(s: &str) -> GroupClass {
    parse_class_expr(s).expect("built-in class expression")
}

fn classes(list: &[&str]) -> Vec<GroupClass> {
    list.iter().map(|s| cls(s)).collect()
}

fn jcs_parts(c: &GroupClass) -> (&GroupClass, &JSet) {
    match c.kind() {
        ClassKind::Jcs(f, j) => (f, j),
        _ => unreachable!("only Jcs classes are passed here"),
    }
}

const INT_CLASSES: &[&str] = &[
    "Jcs(N, all)",
    "Jcs(U, all)",
    "Jcs(N, {A5, PSL(2,7)})",
    "Jcs(U, {A5})",
];

const FORMATIONS: &[&str] = &[
    "N",
    "U",
    "S",
    "E(S|A5)",
    "Jcs(U, all)",
    "Jcs(N, {A5})",
    "Jcs(E(S|A5), all)",
];

pub(crate) fn run(ctx: &Ctx, info: &CheckInfo) -> CheckResult {
    let tally = match info.id {
        "baer" => baer(ctx),
        "ca_jcs_agree" => ca_jcs_agree(ctx),
        "containment" => containment(ctx),
        "example1" => example1(ctx),
        "hypercenter_oracle" => hypercenter_oracle(ctx),
        "jf" => jf(ctx),
        "jh_invariance" => jh_invariance(ctx),
        "jsn" => jsn(ctx),
        "member_iff_hypercenter" => member_iff_hypercenter(ctx),
        "p7" => p7(ctx),
        "p8" => p8(ctx),
        "p9" => p9(ctx),
        "pj0" => pj0(ctx),
        "robinson" => robinson(ctx),
        "shortcut_soundness" => shortcut_soundness(ctx),
        "thm2_equiv" => thm2_equiv(ctx),
        "thm3_N" => thm3_n(ctx),
        "thm3_converse" => return disabled(ctx, info),
        other => unreachable!("`{other}` is not in the catalogue"),
    };
    tally.finish(info)
}

fn disabled(ctx: &Ctx, info: &CheckInfo) -> CheckResult {
    CheckResult {
        id: info.id.to_string(),
        description: info.description.to_string(),
        status: Status::Disabled,
        hits: 0,
        evaluated: 0,
        skipped: ctx
            .corpus
            .entries
            .iter()
            .map(|e| Skip {
                label: e.label.clone(),
                reason: "no witness of the required shape fits the subgroup budget".to_string(),
            })
            .collect(),
        failures: Vec::new(),
    }
}

fn baer(ctx: &Ctx) -> Tally {
    let n = cls("N");
    ctx.over_corpus(true, |g| {
        let mut o = Outcome::default();
        let z = hypercenter(g, &n, ctx.b)?;
        let i = int_f(g, &n, ctx.b)?;
        let top = upper_central_series(g).pop().expect("series is nonempty");
        o.hit();
        o.expect(z == i && z == top, || {
            format!(
                "Z_N order {}, Int_N order {}, upper central top order {}",
                z.order(),
                i.order(),
                top.order()
            )
        });
        Ok(o)
    })
}

fn example1(ctx: &Ctx) -> Tally {
    let mut t = Tally::default();
    let r = (|| {
        let w = parse_group("wr(A5,C2)", ctx.b.element_cap)?;
        let mut o = Outcome::default();
        for (expr, want) in [
            ("E(S|A5)", true),
            ("ca(E(S|A5))", false),
            ("Jcs(E(S|A5), all)", true),
        ] {
            let got = cls(expr).member(&w, ctx.b)?;
            o.hit();
            o.expect(got == want, || format!("member of {expr}: {got}, expected {want}"));
        }
        Ok(o)
    })();
    t.absorb("wr(A5,C2)", r);
    t
}

/// The factors of `top/bottom` when it is a direct product of `G`-invariant
/// non-abelian simple groups, found as the minimal normal subgroups of
/// `G/bottom` inside `top/bottom`.
fn invariant_simple_factors(
    g: &PermGroup,
    top: &PermGroup,
    bottom: &PermGroup,
) -> Result<Option<Vec<Section>>> {
    if top.order() == bottom.order() {
        return Ok(Some(Vec::new()));
    }
    let lat = NormalLattice::of(g);
    let lo = lat.position_of(g, bottom).ok_or(Error::NotNormal)?;
    let hi = lat.position_of(g, top).ok_or(Error::NotNormal)?;
    let mut factors = Vec::new();
    let mut joined = bottom.clone();
    let mut order = 1usize;
    for m in lat.covers_within(lo, hi) {
        let s = Section::new(g, lat.group(m), bottom)?;
        let d = decompose_char_simple(&s)?;
        if !d.is_simple() || d.is_abelian() {
            return Ok(None);
        }
        joined = joined.join(lat.group(m));
        order = order.saturating_mul(s.order());
        factors.push(s);
    }
    let direct = joined == *top && order == top.order() / bottom.order();
    Ok(direct.then_some(factors))
}

/// A perfect normal subgroup `D` with `G/D` supersoluble, `D/Z(D)` a direct
/// product of `G`-invariant simple groups and every chief factor of `G`
/// below `Z(D)` of prime order, if one exists.
pub fn robinson_subgroup(g: &PermGroup) -> Result<Option<PermGroup>> {
    for d in normal_subgroups(g) {
        if derived_subgroup(&d) != d {
            continue;
        }
        let above = chief_series_through(g, &d)?;
        let quotient_ok = above
            .sections()
            .iter()
            .filter(|s| s.bottom.order() >= d.order())
            .all(|s| is_prime(s.order()));
        if !quotient_ok {
            continue;
        }
        let zd = center(&d);
        let below = chief_series_through(g, &zd)?;
        let embedded = below
            .sections()
            .iter()
            .filter(|s| s.top.order() <= zd.order())
            .all(|s| is_prime(s.order()));
        if embedded && invariant_simple_factors(g, &d, &zd)?.is_some() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn robinson_instance(g: &PermGroup, c: &GroupClass, b: &Budgets) -> Result<Outcome> {
    let mut o = Outcome::default();
    let d = robinson_subgroup(g)?;
    let member = c.member(g, b)?;
    if d.as_ref().is_some_and(|d| !d.is_trivial()) {
        o.hit();
    }
    o.expect(member == d.is_some(), || match &d {
        Some(d) => format!("D of order {} exists but {c} says non-member", d.order()),
        None => format!("no such D exists but {c} says member"),
    });
    Ok(o)
}

fn robinson(ctx: &Ctx) -> Tally {
    let c = cls("Jcs(U, all)");
    let mut t = ctx.over_corpus(false, |g| robinson_instance(g, &c, ctx.b));
    for label in ["SL25", "S5", "A5 x C2"] {
        if !ctx.corpus.entries.iter().any(|e| e.label == label || e.expr == label) {
            let r = parse_group(label, ctx.b.element_cap).and_then(|g| robinson_instance(&g, &c, ctx.b));
            t.absorb(label, r);
        }
    }
    t
}

fn pj0(ctx: &Ctx) -> Tally {
    let list = classes(&["Jcs(U, all)", "Jcs(N, {A5})"]);
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        let normals = normal_subgroups(g);
        let quotients = normals
            .iter()
            .map(|n| quotient(g, n).map(|(q, _)| q))
            .collect::<Result<Vec<_>>>()?;
        for c in &list {
            let m = quotients
                .iter()
                .map(|q| c.member(q, ctx.b))
                .collect::<Result<Vec<bool>>>()?;
            // normals[0] is the trivial subgroup
            if m[0] {
                for (i, n) in normals.iter().enumerate() {
                    if n.is_trivial() || n.order() == g.order() {
                        continue;
                    }
                    o.hit();
                    o.expect(m[i], || format!("{c}: G is a member but G/N is not, |N| = {}", n.order()));
                }
            }
            for i in 0..normals.len() {
                for j in i + 1..normals.len() {
                    if !(m[i] && m[j]) {
                        continue;
                    }
                    let meet = normals[i].intersection(&normals[j]);
                    let k = normals
                        .iter()
                        .position(|n| *n == meet)
                        .expect("normal subgroups are closed under intersection");
                    if k != i && k != j {
                        o.hit();
                        o.expect(m[k], || {
                            format!(
                                "{c}: G/N1, G/N2 are members but G/(N1 ∩ N2) is not, |N1| = {}, |N2| = {}",
                                normals[i].order(),
                                normals[j].order()
                            )
                        });
                    }
                }
            }
        }
        Ok(o)
    })
}

fn jsn(ctx: &Ctx) -> Tally {
    let list = classes(&["Jcs(U, all)", "Jcs(N, {A5})"]);
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        for c in &list {
            if !c.member(g, ctx.b)? {
                continue;
            }
            for n in normal_subgroups(g) {
                if n.is_trivial() || n.order() == g.order() {
                    continue;
                }
                o.hit();
                let ok = c.member(&n, ctx.b)?;
                o.expect(ok, || format!("{c}: normal subgroup of order {} is not a member", n.order()));
            }
        }
        Ok(o)
    })
}

/// `A ∘ B`: the quotient of `A × B` by the diagonal copy of `⟨za⟩ = ⟨zb⟩`,
/// together with the images of `A` and `B`. `za` and `zb` must be central
/// elements of the same order.
pub fn central_product(
    a: &PermGroup,
    b: &PermGroup,
    za: &Permutation,
    zb: &Permutation,
    cap: usize,
) -> Result<(PermGroup, PermGroup, PermGroup)> {
    let (g, a_emb, b_emb) = direct_with_factors(a, b, cap)?;
    let degree = g.degree();
    let z = za
        .embed(0, degree)
        .compose(&zb.embed(a.degree(), degree));
    let diagonal = g.subgroup(&[z]);
    if za.order() != zb.order() || !diagonal.is_normal_in(&g) {
        return Err(Error::NotNormal);
    }
    let (q, hom) = quotient(&g, &diagonal)?;
    Ok((q, hom.image_of(&a_emb), hom.image_of(&b_emb)))
}

fn direct_with_factors(a: &PermGroup, b: &PermGroup, cap: usize) -> Result<(PermGroup, PermGroup, PermGroup)> {
    let g = direct_product(a, b, cap)?;
    let degree = g.degree();
    let lift = |x: &PermGroup, offset: usize| {
        let gens: Vec<Permutation> = x.generators().iter().map(|p| p.embed(offset, degree)).collect();
        g.subgroup(&gens)
    };
    let a_emb = lift(a, 0);
    let b_emb = lift(b, a.degree());
    Ok((g, a_emb, b_emb))
}

fn central_involution(g: &PermGroup) -> Option<Permutation> {
    let z = center(g);
    let mut inv = z.elements().iter().filter(|x| x.order() == 2);
    let first = inv.next()?.clone();
    inv.next().is_none().then_some(first)
}

const JF_DIRECT: &[(&str, &str)] = &[
    ("A5", "C2"),
    ("A5", "C3"),
    ("A5", "A5"),
    ("A5", "D(8)"),
    ("SL25", "C3"),
    ("D(8)", "C3"),
    ("Q8", "C5"),
    ("S3", "C3"),
    ("A4", "C2"),
    ("PSL(2,7)", "C2"),
];

const JF_CENTRAL: &[(&str, &str)] = &[
    ("SL25", "C4"),
    ("SL25", "Q8"),
    ("Q8", "C4"),
    ("D(8)", "C4"),
    ("Q8", "D(8)"),
];

fn jf_instance(a: &str, b: &str, central: bool, list: &[GroupClass], budgets: &Budgets) -> Result<Outcome> {
    let cap = budgets.element_cap;
    let ga = parse_group(a, cap)?;
    let gb = parse_group(b, cap)?;
    let (g, fa, fb) = if central {
        let za = central_involution(&ga).ok_or(Error::NotNormal)?;
        let zb = central_involution(&gb).ok_or(Error::NotNormal)?;
        central_product(&ga, &gb, &za, &zb, cap)?
    } else {
        direct_with_factors(&ga, &gb, cap)?
    };
    let mut o = Outcome::default();
    o.expect(
        fa.is_normal_in(&g) && fb.is_normal_in(&g) && fa.join(&fb) == g,
        || "factors are not normal or do not generate".to_string(),
    );
    for c in list {
        if c.member(&fa, budgets)? && c.member(&fb, budgets)? {
            o.hit();
            let ok = c.member(&g, budgets)?;
            o.expect(ok, || format!("{c}: both factors are members, the product of order {} is not", g.order()));
        }
    }
    Ok(o)
}

fn jf(ctx: &Ctx) -> Tally {
    let list = classes(&["Jcs(N, {A5})", "Jcs(N, all)", "Jcs(E(S|A5), all)"]);
    let cases: Vec<(String, &str, &str, bool)> = JF_DIRECT
        .iter()
        .map(|&(a, b)| (format!("{a} x {b}"), a, b, false))
        .chain(JF_CENTRAL.iter().map(|&(a, b)| (format!("{a} o {b}"), a, b, true)))
        .collect();
    let results: Vec<(String, Result<Outcome>)> = cases
        .par_iter()
        .map(|(label, a, b, central)| (label.clone(), jf_instance(a, b, *central, &list, ctx.b)))
        .collect();
    let mut t = Tally::default();
    for (label, r) in results {
        t.absorb(&label, r);
    }
    t
}

fn p7(ctx: &Ctx) -> Tally {
    let list = classes(INT_CLASSES);
    ctx.over_corpus(true, |g| {
        let mut o = Outcome::default();
        for c in &list {
            let z = hypercenter(g, c, ctx.b)?;
            let i = int_f(g, c, ctx.b)?;
            if !z.is_trivial() {
                o.hit();
            }
            o.expect(z.is_subgroup_of(&i), || {
                format!("{c}: Z of order {} is not inside Int of order {}", z.order(), i.order())
            });
        }
        Ok(o)
    })
}

fn p8(ctx: &Ctx) -> Tally {
    let list = classes(INT_CLASSES);
    ctx.over_corpus(true, |g| {
        let mut o = Outcome::default();
        for c in &list {
            let (f, _) = jcs_parts(c);
            let i = int_f(g, c, ctx.b)?;
            let series = chief_series_through(g, &i)?;
            for s in series.sections().iter().filter(|s| s.top.order() <= i.order()) {
                let d = decompose_char_simple(s)?;
                if member_char_simple(f, s, &d, ctx.b)? {
                    continue;
                }
                o.hit();
                o.expect(d.is_simple(), || {
                    format!(
                        "{c}: chief factor {}^{} below Int is not simple",
                        d.simple, d.multiplicity
                    )
                });
            }
        }
        Ok(o)
    })
}

fn p9(ctx: &Ctx) -> Tally {
    let list = classes(INT_CLASSES);
    ctx.over_corpus(true, |g| {
        let mut o = Outcome::default();
        let simple_normals: Vec<PermGroup> = normal_subgroups(g)
            .into_iter()
            .filter(|h| !h.is_abelian() && is_simple(h))
            .collect();
        for c in &list {
            let (_, j) = jcs_parts(c);
            let mut int = None;
            for h in &simple_normals {
                let t = identify_simple(h)?;
                if !j.contains(&t) {
                    continue;
                }
                if int.is_none() {
                    int = Some(int_f(g, c, ctx.b)?);
                }
                let i = int.as_ref().expect("computed above");
                o.hit();
                o.expect(h.is_subgroup_of(i), || {
                    format!("{c}: normal {t} is not inside Int of order {}", i.order())
                });
            }
        }
        Ok(o)
    })
}

fn thm2_equiv(ctx: &Ctx) -> Tally {
    let fs = classes(&["U", "E(S|A5)"]);
    let js = [JSet::All, JSet::listed(["A5"]).expect("A5 is in the table")];
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        for f in &fs {
            for j in &js {
                let t = t2_conditions(g, f, j, ctx.b)?;
                if !f.member(g, ctx.b)? {
                    o.hit();
                }
                o.expect(t.agree(), || {
                    format!(
                        "F = {f}, J = {j}: (b1, b2, b3) = ({}, {}, {}), {:?}",
                        t.b1, t.b2, t.b3, t.witness
                    )
                });
            }
        }
        Ok(o)
    })
}

fn thm3_n(ctx: &Ctx) -> Tally {
    let c = cls("Jcs(N, {A5, PSL(2,7)})");
    let mut t = ctx.over_corpus(true, |g| {
        let mut o = Outcome::default();
        let z = hypercenter(g, &c, ctx.b)?;
        let i = int_f(g, &c, ctx.b)?;
        o.hit();
        o.expect(z == i, || format!("Z of order {} but Int of order {}", z.order(), i.order()));
        Ok(o)
    });
    let mut table = Outcome::default();
    for name in ["A5", "PSL(2,7)"] {
        let nilpotent = SIMPLE_TABLE.iter().any(|r| r.name == name && r.out_is_nilpotent);
        table.expect(nilpotent, || format!("Out({name}) is not recorded as nilpotent"));
    }
    if !table.failures.is_empty() {
        t.absorb("table", Ok(table));
    }
    t
}

type Annotation = (usize, bool, String, bool);

fn annotate(g: &PermGroup, series: &ChiefSeries, u: &GroupClass, b: &Budgets) -> Result<Vec<Annotation>> {
    let mut out = series
        .sections()
        .iter()
        .map(|s| {
            let d = decompose_char_simple(s)?;
            let name = format!("{}^{}", d.simple, d.multiplicity);
            Ok((s.order(), d.is_abelian(), name, is_central_factor(g, s, u, b)?))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn jh_invariance(ctx: &Ctx) -> Tally {
    let u = cls("U");
    let list = classes(&["Jcs(U, all)", "Jcs(N, {A5})", "ca(U)"]);
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        let all: Vec<ChiefSeries> = (0..3).map(|k| chief_series_seeded(g, ctx.seed + k)).collect();
        let lat = NormalLattice::of(g);
        let branching = (0..lat.len()).any(|i| lat.covers_within(i, lat.top()).len() > 1);
        if branching {
            o.hit();
        }
        let first = annotate(g, &all[0], &u, ctx.b)?;
        for (k, s) in all.iter().enumerate().skip(1) {
            let other = annotate(g, s, &u, ctx.b)?;
            o.expect(other == first, || format!("series {k} factors {other:?} differ from {first:?}"));
        }
        for c in &list {
            let v = all
                .iter()
                .map(|s| c.member_on_series(s, ctx.b))
                .collect::<Result<Vec<bool>>>()?;
            o.expect(v.iter().all(|&x| x == v[0]), || format!("{c}: verdicts {v:?} differ between series"));
        }
        Ok(o)
    })
}

fn member_iff_hypercenter(ctx: &Ctx) -> Tally {
    let list = classes(FORMATIONS);
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        for c in &list {
            let m = c.member(g, ctx.b)?;
            let z = hypercenter(g, c, ctx.b)?;
            if m && !g.is_trivial() {
                o.hit();
            }
            o.expect(m == (z == *g), || {
                format!("{c}: member = {m} but Z has order {} of {}", z.order(), g.order())
            });
        }
        Ok(o)
    })
}

/// The largest normal subgroup all of whose chief factors, along a chief
/// series through it, are central; also reports whether it contains every
/// other such subgroup.
fn oracle_hypercenter(g: &PermGroup, c: &GroupClass, b: &Budgets) -> Result<(PermGroup, bool)> {
    let mut good = Vec::new();
    for n in normal_subgroups(g) {
        let series = chief_series_through(g, &n)?;
        let mut ok = true;
        for s in series.sections().iter().filter(|s| s.top.order() <= n.order()) {
            if !is_central_factor(g, s, c, b)? {
                ok = false;
                break;
            }
        }
        if ok {
            good.push(n);
        }
    }
    let top = good
        .iter()
        .max_by_key(|n| n.order())
        .expect("the trivial subgroup qualifies")
        .clone();
    let unique = good.iter().all(|n| n.is_subgroup_of(&top));
    Ok((top, unique))
}

fn hypercenter_oracle(ctx: &Ctx) -> Tally {
    let mut names = FORMATIONS.to_vec();
    names.extend(["ca(U)", "ca(E(S|A5))"]);
    let list = classes(&names);
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        for c in &list {
            let z = hypercenter(g, c, ctx.b)?;
            let (oracle, unique) = oracle_hypercenter(g, c, ctx.b)?;
            if !z.is_trivial() {
                o.hit();
            }
            o.expect(unique && z == oracle, || {
                format!(
                    "{c}: fixpoint order {}, oracle order {}, oracle maximum unique: {unique}",
                    z.order(),
                    oracle.order()
                )
            });
        }
        Ok(o)
    })
}

fn shortcut_soundness(ctx: &Ctx) -> Tally {
    let list = classes(&[
        "Ab",
        "N",
        "U",
        "S",
        "E(S|A5)",
        "Jcs(U, all)",
        "Jcs(N, {A5})",
        "ca(U)",
        "ca(E(S|A5))",
    ]);
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        for s in chief_series(g).sections() {
            let cent = centralizer_of_section(g, &s);
            let size = s.order().saturating_mul(g.order() / cent.order());
            if size > ctx.b.semidirect_budget {
                continue;
            }
            for c in &list {
                if let Some(quick) = centrality_shortcut(g, &s, c, ctx.b)? {
                    let slow = centrality_explicit(g, &s, c, ctx.b)?;
                    o.hit();
                    o.expect(quick == slow, || {
                        format!(
                            "{c}: factor of order {} shortcut {quick}, explicit {slow}",
                            s.order()
                        )
                    });
                }
            }
        }
        Ok(o)
    })
}

fn ca_jcs_agree(ctx: &Ctx) -> Tally {
    let fs = classes(&["N", "U", "S"]);
    let pairs: Vec<(GroupClass, GroupClass, GroupClass)> = fs
        .into_iter()
        .map(|f| {
            let j = GroupClass::jcs(f.clone(), JSet::All).expect("formation");
            let a = GroupClass::ca(f.clone()).expect("formation");
            (f, j, a)
        })
        .collect();
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        for (f, j, a) in &pairs {
            let (x, y) = (j.member(g, ctx.b)?, a.member(g, ctx.b)?);
            if !f.member(g, ctx.b)? {
                o.hit();
            }
            o.expect(x == y, || format!("{j} says {x}, {a} says {y}"));
        }
        Ok(o)
    })
}

fn containment(ctx: &Ctx) -> Tally {
    let pairs = [
        (cls("U"), cls("Jcs(U, all)")),
        (cls("U"), cls("Jcs(U, {A5})")),
        (cls("E(S|A5)"), cls("Jcs(E(S|A5), all)")),
    ];
    ctx.over_corpus(false, |g| {
        let mut o = Outcome::default();
        for (f, jc) in &pairs {
            if g.is_trivial() || !f.member(g, ctx.b)? {
                continue;
            }
            o.hit();
            let ok = jc.member(g, ctx.b)?;
            o.expect(ok, || format!("member of {f} but not of {jc}"));
        }
        Ok(o)
    })
}
