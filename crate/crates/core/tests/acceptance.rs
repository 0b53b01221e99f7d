//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use chief_core::analysis::{hypercenter, int_f, is_central_factor, t2_conditions};
use chief_core::builders::parse_group;
use chief_core::classes::{parse_class_expr, GroupClass, JSet};
use chief_core::structure::{all_subgroups, chief_series_through, normal_subgroups};
use chief_core::verify::{default_corpus, run_checks, CheckResult, Corpus};
use chief_core::{Budgets, PermGroup, Permutation};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn cls(s: &str) -> GroupClass {
    parse_class_expr(s).unwrap()
}

fn elements(g: &PermGroup) -> BTreeSet<Permutation> {
    g.elements().iter().cloned().collect()
}

/// Upper central series top by brute force: `Z_{i+1}` is the set of `x`
/// with `[x, g] ∈ Z_i` for every `g`.
fn upper_central_top(g: &PermGroup) -> BTreeSet<Permutation> {
    let mut z: BTreeSet<Permutation> = [g.identity().clone()].into();
    loop {
        let next: BTreeSet<Permutation> = g
            .elements()
            .iter()
            .filter(|x| {
                g.elements().iter().all(|y| {
                    let comm = x.inverse().compose(&y.inverse()).compose(x).compose(y);
                    z.contains(&comm)
                })
            })
            .cloned()
            .collect();
        if next == z {
            return z;
        }
        z = next;
    }
}

/// Every subgroup reached by adjoining one element at a time to a subgroup
/// already found, closing under multiplication by brute force.
fn subgroup_count_by_closure(g: &PermGroup) -> usize {
    let elems = g.elements();
    let close = |seed: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut set = seed.clone();
        loop {
            let mut grown = set.clone();
            for &a in &set {
                for &b in &set {
                    let p = elems[a].compose(&elems[b]);
                    grown.insert(elems.binary_search(&p).unwrap());
                }
            }
            if grown.len() == set.len() {
                return set;
            }
            set = grown;
        }
    };
    let id = elems.binary_search(g.identity()).unwrap();
    let start: BTreeSet<usize> = [id].into();
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::from([start.clone()]);
    let mut queue = vec![start];
    while let Some(h) = queue.pop() {
        for x in 0..elems.len() {
            if h.contains(&x) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(x);
            let k = close(&seed);
            if seen.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    seen.len()
}

/// The unique largest normal subgroup whose chief factors, along a series
/// through it, are all central.
fn brute_hypercenter(g: &PermGroup, c: &GroupClass, b: &Budgets) -> Option<PermGroup> {
    let mut good: Vec<PermGroup> = Vec::new();
    for n in normal_subgroups(g) {
        let series = chief_series_through(g, &n).unwrap();
        let below = series.sections().into_iter().filter(|s| s.top.order() <= n.order());
        let mut ok = true;
        for s in below {
            if !is_central_factor(g, &s, c, b).unwrap() {
                ok = false;
                break;
            }
        }
        if ok {
            good.push(n);
        }
    }
    let top = good.iter().max_by_key(|n| n.order())?.clone();
    good.iter().all(|n| n.is_subgroup_of(&top)).then_some(top)
}

fn checks_pass(results: &[CheckResult]) -> Verdict {
    let mut detail = Vec::new();
    let mut pass = true;
    for r in results {
        detail.push(format!("{}: {:?}, {} hits", r.id, r.status, r.hits));
        pass &= r.passed() && r.hits >= 3;
        for f in &r.failures {
            detail.push(format!("{} [{}] {}", r.id, f.label, f.witness));
        }
    }
    verdict(pass, detail.join("; "))
}

fn run(corpus: &Corpus, b: &Budgets, ids: &[&str]) -> Vec<CheckResult> {
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    run_checks(corpus, &ids, b, 0).unwrap()
}

fn criterion_1(corpus: &Corpus, b: &Budgets) -> Verdict {
    let start = Instant::now();
    let n = cls("N");
    let mut checked = 0;
    let mut bad = Vec::new();
    for e in &corpus.entries {
        if e.group.order() > 2000 {
            continue;
        }
        checked += 1;
        let z = hypercenter(&e.group, &n, b).unwrap();
        let i = int_f(&e.group, &n, b).unwrap();
        let top = upper_central_top(&e.group);
        if elements(&z) != top || elements(&i) != top {
            bad.push(e.label.clone());
        }
    }
    let t = start.elapsed();
    verdict(
        bad.is_empty() && t <= Duration::from_secs(300),
        format!("{checked} groups, mismatches {bad:?}, {:.1}s", t.as_secs_f64()),
    )
}

fn criterion_2(b: &Budgets) -> Verdict {
    let start = Instant::now();
    let w = parse_group("wr(A5,C2)", b.element_cap).unwrap();
    let got = [
        cls("E(S|A5)").member(&w, b).unwrap(),
        cls("ca(E(S|A5))").member(&w, b).unwrap(),
        cls("Jcs(E(S|A5), all)").member(&w, b).unwrap(),
    ];
    let t = start.elapsed();
    verdict(
        got == [true, false, true] && t <= Duration::from_secs(60),
        format!("order {}, memberships {got:?}, {:.1}s", w.order(), t.as_secs_f64()),
    )
}

fn criterion_3(corpus: &Corpus, b: &Budgets) -> Verdict {
    let u = cls("U");
    let mut disagree = Vec::new();
    for e in &corpus.entries {
        let t = t2_conditions(&e.group, &u, &JSet::All, b).unwrap();
        if !t.agree() {
            disagree.push(format!("{} {:?}", e.label, (t.b1, t.b2, t.b3)));
        }
    }
    let sl = parse_group("SL25", b.element_cap).unwrap();
    let t = t2_conditions(&sl, &u, &JSet::All, b).unwrap();
    let w = &t.witness;
    let sl_ok = (t.b1, t.b2, t.b3) == (true, true, true)
        && w.residual_order == 120
        && w.residual_center_order == 2
        && w.residual_factors == ["A5"];
    verdict(
        disagree.is_empty() && sl_ok,
        format!(
            "{} entries, disagreements {disagree:?}; SL(2,5): {:?}, |D| = {}, |Z(D)| = {}, D/Z(D) = {:?}",
            corpus.entries.len(),
            (t.b1, t.b2, t.b3),
            w.residual_order,
            w.residual_center_order,
            w.residual_factors
        ),
    )
}

fn criterion_4(corpus: &Corpus, b: &Budgets) -> Verdict {
    let c = cls("Jcs(N, {A5, PSL(2,7)})");
    let mut skipped = Vec::new();
    let mut checked = 0;
    let mut bad = Vec::new();
    for e in &corpus.entries {
        if e.group.order() > b.subgroup_budget {
            skipped.push(e.label.clone());
            continue;
        }
        checked += 1;
        let z = hypercenter(&e.group, &c, b).unwrap();
        let i = int_f(&e.group, &c, b).unwrap();
        if elements(&z) != elements(&i) {
            bad.push(format!("{} (Z {}, Int {})", e.label, z.order(), i.order()));
        }
    }
    verdict(
        bad.is_empty() && checked >= 10,
        format!("{checked} checked, skipped {skipped:?}, mismatches {bad:?}"),
    )
}

fn criterion_8(corpus: &Corpus, b: &Budgets) -> Verdict {
    let classes: Vec<GroupClass> = [
        "N",
        "U",
        "S",
        "E(S|A5)",
        "Jcs(U, all)",
        "Jcs(N, {A5})",
        "ca(U)",
        "ca(E(S|A5))",
    ]
    .iter()
    .map(|s| cls(s))
    .collect();
    let mut bad = Vec::new();
    for e in &corpus.entries {
        for c in &classes {
            let z = hypercenter(&e.group, c, b).unwrap();
            match brute_hypercenter(&e.group, c, b) {
                Some(o) if o == z => {}
                other => bad.push(format!(
                    "{} {c}: fixpoint {}, oracle {:?}",
                    e.label,
                    z.order(),
                    other.map(|o| o.order())
                )),
            }
        }
    }
    let shortcut = run(corpus, b, &["shortcut_soundness"]);
    let shortcut_ok = shortcut[0].passed();
    let mut counted = 0;
    for e in corpus.entries.iter().filter(|e| e.group.order() <= 48) {
        counted += 1;
        let fast = all_subgroups(&e.group, b.subgroup_budget).unwrap().len();
        let slow = subgroup_count_by_closure(&e.group);
        if fast != slow {
            bad.push(format!("{}: {fast} subgroups, closure oracle {slow}", e.label));
        }
    }
    verdict(
        bad.is_empty() && shortcut_ok,
        format!(
            "hypercentres for {} classes, shortcut comparisons {}, subgroup counts for {counted} groups; mismatches {bad:?}",
            classes.len(),
            shortcut[0].hits
        ),
    )
}

fn main() {
    let b = Budgets::default();
    let corpus = default_corpus(b.element_cap).expect("default corpus builds");
    let criteria: Vec<Criterion> = vec![
        ("1 Int_N = Z_N = upper central top", Box::new(|| criterion_1(&corpus, &b))),
        ("2 wr(A5,C2) memberships", Box::new(|| criterion_2(&b))),
        ("3 structural conditions agree for U", Box::new(|| criterion_3(&corpus, &b))),
        ("4 Z = Int for Jcs(N, {A5, PSL(2,7)})", Box::new(|| criterion_4(&corpus, &b))),
        ("5 p7, p8, p9", Box::new(|| checks_pass(&run(&corpus, &b, &["p7", "p8", "p9"])))),
        ("6 pj0, jsn, jf", Box::new(|| checks_pass(&run(&corpus, &b, &["pj0", "jsn", "jf"])))),
        ("7 chief series invariance", Box::new(|| checks_pass(&run(&corpus, &b, &["jh_invariance"])))),
        ("8 oracle equivalences", Box::new(|| criterion_8(&corpus, &b))),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        let start = Instant::now();
        let v = f();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {name}: {tag} ({:.1}s) {}",
            start.elapsed().as_secs_f64(),
            v.detail
        );
        if !v.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
