use super::*;
use crate::cube::{cycle, fibonacci_cube, hypercube, path};
use crate::generators::{
    bridged_anthracene_hexagon, bridged_hexagons, coronene_like, disjoint_union, even_cycle,
    fibonaccene, figure5_analogue, k2, polyacene, search_non_weakly_elementary,
};
use crate::matching::Limit;

const L: Limit = Limit::DEFAULT;

fn holds(r: &TheoremReport) -> Vec<bool> {
    r.sides().map(|s| s.holds).collect()
}

#[test]
fn idim0_examples() {
    let r = verify_lemma_idim0(&k2(), L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![true, true], true));
    let two = disjoint_union(&[&k2(), &k2()]).unwrap();
    assert_eq!(holds(&verify_lemma_idim0(&two, L).unwrap()), vec![true, true]);
    let r = verify_lemma_idim0(&even_cycle(3).unwrap(), L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![false, false], true));
}

#[test]
fn connectivity_examples() {
    for g in [bridged_hexagons(), polyacene(2).unwrap()] {
        let r = verify_connectivity(&g, L).unwrap();
        assert_eq!(holds(&r), vec![true, true]);
    }
    let found = search_non_weakly_elementary(8).unwrap();
    let r = verify_connectivity(&found.graph, L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![false, false], true));
    assert!(r.witnesses["resonance_components"].as_u64().unwrap() >= 2);
}

#[test]
fn elementary_characterization_examples() {
    let r = verify_elementary_characterization(&fibonaccene(4).unwrap(), L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![true, true, true], true));
    assert_eq!(r.left.value, Some(4.into()));

    let r = verify_elementary_characterization(&polyacene(3).unwrap(), L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![false, false, false], true));
    assert_eq!(r.right.value, Some(2.into()));

    let r = verify_elementary_characterization(&even_cycle(3).unwrap(), L).unwrap();
    assert_eq!(holds(&r), vec![true, true, true]);

    assert_eq!(verify_elementary_characterization(&k2(), L), Err(TheoremError::IsK2));
    assert_eq!(
        verify_elementary_characterization(&bridged_hexagons(), L),
        Err(TheoremError::NotElementary)
    );
}

#[test]
fn face_theta_bijection_examples() {
    for (g, n) in [
        (even_cycle(3).unwrap(), 1),
        (fibonaccene(3).unwrap(), 3),
        (polyacene(2).unwrap(), 2),
    ] {
        let r = verify_face_theta_bijection(&g, L).unwrap();
        assert!(r.agree && r.left.holds);
        assert_eq!(r.left.value, Some(n.into()));
    }
    assert!(matches!(
        verify_face_theta_bijection(&polyacene(3).unwrap(), L),
        Err(TheoremError::NotDaisy(_))
    ));
}

#[test]
fn structural_lemma_examples() {
    let r = verify_structural_lemma(&fibonaccene(5).unwrap(), L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![true, true], true));
    assert!(verify_structural_lemma(&even_cycle(3).unwrap(), L).unwrap().agree);
    assert!(matches!(
        verify_structural_lemma(&coronene_like(), L),
        Err(TheoremError::PreconditionFailed(_))
    ));
    let c = structural_conclusions(&coronene_like()).unwrap();
    assert_eq!(c.interior_degree_violations.len(), 6);
    let c = structural_conclusions(&polyacene(3).unwrap()).unwrap();
    assert!(!c.even_handles.is_empty());
}

#[test]
fn general_characterization_examples() {
    let r = verify_general_characterization(&bridged_hexagons(), L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![true, true], true));
    assert_eq!(r.left.value, Some(2.into()));
    assert!(r.witnesses["product"]["isomorphism"].is_array());

    let r = verify_general_characterization(&figure5_analogue(), L).unwrap();
    assert!(r.agree);
    assert_eq!(r.left.value, Some(5.into()));
    assert_eq!(r.right.value, Some(5.into()));

    let r = verify_general_characterization(&bridged_anthracene_hexagon(), L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![false, false], true));
}

#[test]
fn product_theorem_examples() {
    let r = verify_product_theorem(&[path(3), hypercube(2).unwrap()]).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![true, true], true));
    assert_eq!(r.left.value, Some(4.into()));
    let r = verify_product_theorem(&[path(4), fibonacci_cube(3).unwrap()]).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![false, false], true));
    let r = verify_product_theorem(&[cycle(6), path(2), path(2)]).unwrap();
    assert_eq!(holds(&r), vec![false, false]);
    assert!(verify_product_theorem(&[]).unwrap().agree);
}

#[test]
fn outerplanarization_examples() {
    let g = crate::generators::cycle_with_interior_paths(8, &[(0, 3, 3)]).unwrap();
    let r = verify_outerplanarization(&g, L).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![true, true], true));
    assert!(verify_outerplanarization(&fibonaccene(4).unwrap(), L).unwrap().agree);
    assert!(matches!(
        verify_outerplanarization(&polyacene(3).unwrap(), L),
        Err(TheoremError::PreconditionFailed(_))
    ));
    assert!(matches!(
        verify_outerplanarization(&even_cycle(3).unwrap(), L),
        Err(TheoremError::PreconditionFailed(_))
    ));
}

#[test]
fn median_and_oracles() {
    let r = verify_median(&fibonaccene(6).unwrap(), L, 200).unwrap();
    assert_eq!(holds(&r), vec![true, true]);
    let found = search_non_weakly_elementary(8).unwrap();
    let r = verify_median(&found.graph, L, 200).unwrap();
    assert_eq!((holds(&r), r.agree), (vec![false, false], true));
    assert!(verify_median(&fibonaccene(6).unwrap(), L, 10).is_err());

    assert!(verify_allowed_edges(&bridged_hexagons(), L).unwrap().agree);
    let r = verify_fries_oracle(&polyacene(4).unwrap(), L).unwrap();
    assert!(r.agree);
    assert_eq!(r.left.value, Some(2.into()));
}

#[test]
fn sides_agree_only_on_values_when_both_hold() {
    let a = Side::new(true, "").with_value(3);
    let b = Side::new(true, "").with_value(4);
    assert!(!a.agrees_with(&b));
    let c = Side::new(false, "").with_value(3);
    let d = Side::new(false, "").with_value(4);
    assert!(c.agrees_with(&d));
    assert!(!a.agrees_with(&c));
}

#[test]
fn corpus_specs_parse() {
    assert_eq!("chains:6".parse::<CorpusSpec>().unwrap(), CorpusSpec::Chains(6));
    assert_eq!("".parse::<CorpusSpec>().unwrap(), CorpusSpec::Empty);
    assert_eq!(
        "products:7".parse::<CorpusSpec>().unwrap(),
        CorpusSpec::Products { seed: 7 }
    );
    assert!("chains:9".parse::<CorpusSpec>().is_err());
    assert!("chains".parse::<CorpusSpec>().is_err());
    assert!("everything".parse::<CorpusSpec>().is_err());
    assert_eq!(CorpusSpec::Chains(4).to_string(), "chains:4");
}

#[test]
fn empty_corpus_gives_empty_report() {
    let r = run_corpus(&CorpusSpec::Empty, L).unwrap();
    assert!(r.is_empty() && r.reports.is_empty() && r.is_clean());
}

#[test]
fn chain_corpus_is_clean_and_ordered() {
    let r = run_corpus(&CorpusSpec::Chains(4), L).unwrap();
    assert_eq!(r.graphs, 7);
    assert!(r.is_clean(), "{:?}", r.disagreeing().collect::<Vec<_>>());
    let again = run_corpus(&CorpusSpec::Chains(4), L).unwrap();
    assert_eq!(
        serde_json::to_string(&r).unwrap(),
        serde_json::to_string(&again).unwrap()
    );
}

#[test]
fn product_corpus_is_deterministic_per_seed() {
    let a = build_corpus(&CorpusSpec::Products { seed: 1 }).unwrap();
    let b = build_corpus(&CorpusSpec::Products { seed: 1 }).unwrap();
    let ids = |c: &[CorpusItem]| c.iter().map(|i| i.id().to_string()).collect::<Vec<_>>();
    assert_eq!(ids(&a), ids(&b));
    let pairs = a.iter().filter(|i| i.id().matches('x').count() == 1).count();
    let triples = a.iter().filter(|i| i.id().matches('x').count() == 2).count();
    assert!(pairs >= 50 && triples >= 20);
}

#[test]
fn limits_are_reported_as_errors() {
    let r = run_corpus(&CorpusSpec::Chains(3), Limit(2)).unwrap();
    assert!(r.limit_exceeded());
    assert_eq!(r.disagreements, 0);
}
