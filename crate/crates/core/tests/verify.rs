use chief_core::builders::parse_group;
use chief_core::structure::{center, minimal_normal_subgroups, normal_subgroups};
use chief_core::verify::{
    central_product, default_corpus, resolve_selection, robinson_subgroup, run_checks, Corpus,
    Status, CATALOGUE, DEFAULT_CORPUS,
};
use chief_core::{Budgets, Error};

#[test]
fn default_corpus_entries() {
    let corpus = default_corpus(200_000).unwrap();
    assert!(corpus.entries.len() >= 40);
    assert_eq!(corpus.entries.len(), DEFAULT_CORPUS.len());
    assert_eq!(corpus.get("wr(A5,C2)").unwrap().group.order(), 7200);
    let sl = &corpus.get("SL25").unwrap().group;
    assert_eq!(sl.order(), 120);
    let mins = minimal_normal_subgroups(sl);
    assert_eq!(mins.len(), 1);
    assert_eq!(mins[0].order(), 2);
    let s5 = &corpus.get("S5").unwrap().group;
    let orders: Vec<usize> = normal_subgroups(s5).iter().map(|n| n.order()).collect();
    assert_eq!(orders, vec![1, 60, 120]);
    for (label, order) in [("A6", 360), ("PSL(2,11)", 660), ("F21", 21), ("He27", 27), ("M27", 27), ("Dic12", 12)] {
        assert_eq!(corpus.get(label).unwrap().group.order(), order, "{label}");
    }
}

#[test]
fn manifests_build_and_report_positions() {
    let c = Corpus::from_manifest("a := S4\n\n# note\nb := C(5) # trailing\n", 1000).unwrap();
    let labels: Vec<&str> = c.entries.iter().map(|e| e.label.as_str()).collect();
    assert_eq!(labels, ["a", "b"]);
    assert_eq!(c.entries[1].group.order(), 5);
    match Corpus::from_manifest("a := S4\nnonsense\n", 1000) {
        Err(Error::GroupSpecSyntax { pos, .. }) => assert_eq!(pos, 8),
        other => panic!("{other:?}"),
    }
    assert!(Corpus::from_manifest("a := S(9)\n", 1000).unwrap_err().is_budget());
}

#[test]
fn selection_expands_and_rejects() {
    let all = resolve_selection(&["all".to_string()]).unwrap();
    assert_eq!(all.len(), CATALOGUE.len() - 1);
    assert!(all.iter().all(|c| c.enabled));
    let ids: Vec<&str> = resolve_selection(&["p9".into(), "baer".into(), "p9".into()])
        .unwrap()
        .iter()
        .map(|c| c.id)
        .collect();
    assert_eq!(ids, ["baer", "p9"]);
    match resolve_selection(&["nosuch".to_string()]) {
        Err(Error::UnknownCheck { id, valid }) => {
            assert_eq!(id, "nosuch");
            assert!(valid.contains("thm3_N"));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn central_products() {
    let sl = parse_group("SL25", 1000).unwrap();
    let c4 = parse_group("C4", 1000).unwrap();
    let za = center(&sl).elements()[1].clone();
    let zb = c4.elements().iter().find(|x| x.order() == 2).unwrap().clone();
    let (g, a, b) = central_product(&sl, &c4, &za, &zb, 10_000).unwrap();
    assert_eq!(g.order(), 240);
    assert_eq!((a.order(), b.order()), (120, 4));
    assert_eq!(a.intersection(&b).order(), 2);
    assert!(a.is_normal_in(&g) && b.is_normal_in(&g));
    let gen = c4.generators()[0].clone();
    assert_eq!(
        central_product(&sl, &c4, &za, &gen, 10_000).unwrap_err(),
        Error::NotNormal
    );
}

#[test]
fn perfect_normal_subgroup_oracle() {
    let sl = parse_group("SL25", 1000).unwrap();
    assert_eq!(robinson_subgroup(&sl).unwrap().unwrap(), sl);
    let s5 = parse_group("S5", 1000).unwrap();
    assert_eq!(robinson_subgroup(&s5).unwrap().unwrap().order(), 60);
    let d8 = parse_group("D(8)", 1000).unwrap();
    assert!(robinson_subgroup(&d8).unwrap().unwrap().is_trivial());
    assert!(robinson_subgroup(&parse_group("A4", 1000).unwrap()).unwrap().is_none());
    let w = parse_group("wr(A5,C2)", 10_000).unwrap();
    assert!(robinson_subgroup(&w).unwrap().is_none());
}

#[test]
fn wreath_and_perfect_subgroup_checks() {
    let corpus = Corpus::from_manifest("sl := SL25\ns5 := S5\na := A5 x C2\nd := D(8)\n", 10_000).unwrap();
    let ids = vec!["example1".to_string(), "robinson".to_string(), "thm3_converse".to_string()];
    let r = run_checks(&corpus, &ids, &Budgets::default(), 0).unwrap();
    assert_eq!(r.len(), 3);
    assert_eq!(r[0].id, "example1");
    assert!(r[0].passed());
    assert_eq!(r[0].hits, 3);
    assert!(r[1].passed(), "{:?}", r[1].failures);
    assert_eq!(r[1].hits, 3);
    assert_eq!(r[2].status, Status::Disabled);
    assert_eq!(r[2].skipped.len(), 4);
}

#[test]
fn over_budget_entries_are_skipped_not_passed() {
    let corpus = Corpus::from_manifest("s4 := S4\nd := D(8)\nq := Q8\ns5 := S5\n", 1000).unwrap();
    let b = Budgets {
        subgroup_budget: 100,
        ..Budgets::default()
    };
    let r = run_checks(&corpus, &["baer".to_string()], &b, 0).unwrap();
    assert!(r[0].passed());
    assert_eq!(r[0].evaluated, 3);
    assert_eq!(r[0].skipped.len(), 1);
    assert_eq!(r[0].skipped[0].label, "s5");
}
