use super::*;
use crate::generators::{
    benzenoid_chain, bridged_hexagons, coronene_like, disjoint_union, even_cycle, fibonaccene,
    figure5_analogue, k2, polyacene, ChainCode,
};
use proptest::prelude::*;

fn count(g: &PlaneBipartiteGraph) -> usize {
    enumerate_perfect_matchings(g, Limit::default()).unwrap().len()
}

/// Every edge subset of size |V|/2 that covers all vertices.
fn brute_force_count(g: &PlaneBipartiteGraph) -> usize {
    use itertools::Itertools;
    (0..g.edge_count())
        .combinations(g.vertex_count() / 2)
        .filter(|c| is_perfect_matching(g, &BitSet::from_positions(g.edge_count(), c.iter().copied())))
        .count()
}

#[test]
fn matching_counts() {
    assert_eq!(count(&k2()), 1);
    assert_eq!(count(&even_cycle(3).unwrap()), 2);
    assert_eq!(count(&polyacene(2).unwrap()), 3);
    assert_eq!(count(&polyacene(3).unwrap()), 4);
    assert_eq!(count(&fibonaccene(3).unwrap()), 5);
    assert_eq!(count(&coronene_like()), 20);
    let fib = [2, 3, 5, 8, 13, 21];
    for n in 1..=6 {
        assert_eq!(count(&fibonaccene(n).unwrap()), fib[n - 1]);
        assert_eq!(count(&polyacene(n).unwrap()), n + 1);
    }
}

#[test]
fn matchings_are_sorted_and_perfect() {
    let g = fibonaccene(5).unwrap();
    let all = enumerate_perfect_matchings(&g, Limit::default()).unwrap();
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    assert!(all.iter().all(|m| is_perfect_matching(&g, m.edges())));
}

#[test]
fn disconnected_graphs_multiply() {
    let c6 = even_cycle(3).unwrap();
    let naph = polyacene(2).unwrap();
    let g = disjoint_union(&[&c6, &naph]).unwrap();
    assert_eq!(count(&g), 6);
}

#[test]
fn limit_is_enforced() {
    assert_eq!(
        enumerate_perfect_matchings(&coronene_like(), Limit(19)),
        Err(MatchingError::LimitExceeded { limit: 19 })
    );
    assert_eq!(enumerate_perfect_matchings(&coronene_like(), Limit(20)).unwrap().len(), 20);
    let c6 = even_cycle(3).unwrap();
    let g = disjoint_union(&[&c6, &c6, &c6]).unwrap();
    assert_eq!(
        enumerate_perfect_matchings(&g, Limit(7)),
        Err(MatchingError::LimitExceeded { limit: 7 })
    );
}

#[test]
fn graphs_without_perfect_matching() {
    let star = crate::plane_graph::PlaneBipartiteGraph::from_geometry(
        &[(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0)],
        &[(0, 1), (0, 2), (0, 3)],
    )
    .unwrap();
    assert!(enumerate_perfect_matchings(&star, Limit::default()).unwrap().is_empty());
    assert_eq!(allowed_edges(&star, Limit::default()), Err(MatchingError::NoPerfectMatching));
    assert_eq!(
        allowed_edges_by_alternating_cycles(&star),
        Err(MatchingError::NoPerfectMatching)
    );
    assert_eq!(fries_number(&star, Limit::default()), Err(MatchingError::NoPerfectMatching));
}

#[test]
fn matching_validation() {
    let g = even_cycle(3).unwrap();
    assert!(Matching::from_edge_ids(&g, &[0, 2, 4]).is_ok());
    assert!(matches!(
        Matching::from_edge_ids(&g, &[0, 1, 4]),
        Err(MatchingError::HostMismatch(_))
    ));
    assert!(matches!(
        Matching::from_edge_ids(&g, &[9]),
        Err(MatchingError::HostMismatch(_))
    ));
}

#[test]
fn forbidden_bridge() {
    let g = bridged_hexagons();
    let forbidden = forbidden_edges(&g, Limit::default()).unwrap();
    assert_eq!(forbidden.count(), 1);
    let e = forbidden.iter().next().unwrap();
    let (f1, f2) = g.edge_faces(e);
    assert_eq!(f1, f2);
    assert_eq!(
        allowed_edges_by_alternating_cycles(&g).unwrap(),
        allowed_edges(&g, Limit::default()).unwrap()
    );
}

#[test]
fn decomposition_of_bridged_hexagons() {
    let d = elementary_decomposition(&bridged_hexagons(), Limit::default()).unwrap();
    assert_eq!(d.components.len(), 2);
    assert!(d.weakly_elementary);
    assert_eq!(d.k2_components, 0);
    assert!(d.components.iter().all(|c| c.graph.finite_face_count() == 1));
}

#[test]
fn decomposition_of_two_component_analogue() {
    let g = figure5_analogue();
    let d = elementary_decomposition(&g, Limit::default()).unwrap();
    assert_eq!(d.forbidden_edges.count(), 2);
    assert!(d.weakly_elementary);
    let mut faces: Vec<usize> = d.components.iter().map(|c| c.graph.finite_face_count()).collect();
    faces.sort();
    assert_eq!(faces, vec![2, 3]);
    assert_eq!(g.finite_face_count(), 6);
}

#[test]
fn elementary_graphs() {
    assert!(is_elementary(&k2(), Limit::default()).unwrap());
    assert!(is_elementary(&even_cycle(4).unwrap(), Limit::default()).unwrap());
    assert!(is_elementary(&coronene_like(), Limit::default()).unwrap());
    assert!(!is_elementary(&bridged_hexagons(), Limit::default()).unwrap());
    for n in 1..=5 {
        assert!(is_elementary(&polyacene(n).unwrap(), Limit::default()).unwrap());
    }
}

#[test]
fn resonance_of_faces() {
    let g = even_cycle(3).unwrap();
    let all = enumerate_perfect_matchings(&g, Limit::default()).unwrap();
    for m in &all {
        assert_eq!(resonant_faces(&g, m).len(), 1);
    }
    let infinite = g.infinite_faces()[0];
    assert!(is_face_resonant(&g, infinite, &all[0]));
}

#[test]
fn fries_numbers() {
    let f = |g: &PlaneBipartiteGraph| fries_number(g, Limit::default()).unwrap().value;
    assert_eq!(f(&k2()), 0);
    assert_eq!(f(&even_cycle(4).unwrap()), 1);
    assert_eq!(f(&polyacene(2).unwrap()), 2);
    assert_eq!(f(&polyacene(3).unwrap()), 2);
    for n in 1..=6 {
        assert_eq!(f(&fibonaccene(n).unwrap()), n);
    }
    assert!(f(&coronene_like()) < 7);
    let witness = fries_number(&polyacene(3).unwrap(), Limit::default()).unwrap().witness;
    assert_eq!(resonant_faces(&polyacene(3).unwrap(), &witness).len(), 2);
}

#[test]
fn fries_by_face_subsets() {
    for g in [
        k2(),
        even_cycle(2).unwrap(),
        polyacene(2).unwrap(),
        polyacene(3).unwrap(),
        polyacene(4).unwrap(),
        fibonaccene(4).unwrap(),
        bridged_hexagons(),
        coronene_like(),
    ] {
        assert_eq!(
            fries_number_by_face_subsets(&g).unwrap(),
            fries_number(&g, Limit::default()).unwrap().value,
            "{} vertices",
            g.vertex_count()
        );
    }
}

proptest! {
    #[test]
    fn enumeration_matches_brute_force(turns in proptest::collection::vec(0u8..3, 0..2)) {
        let code: String = turns.iter().map(|t| ['L', 'R', 'S'][*t as usize]).collect();
        let g = benzenoid_chain(&code.parse::<ChainCode>().unwrap()).unwrap();
        prop_assert_eq!(count(&g), brute_force_count(&g));
    }

    #[test]
    fn fast_allowed_edges_agree(turns in proptest::collection::vec(0u8..3, 0..5)) {
        let code: String = turns.iter().map(|t| ['L', 'R', 'S'][*t as usize]).collect();
        if let Ok(g) = benzenoid_chain(&code.parse::<ChainCode>().unwrap()) {
            prop_assert_eq!(
                allowed_edges_by_alternating_cycles(&g).unwrap(),
                allowed_edges(&g, Limit::default()).unwrap()
            );
        }
    }
}
