use super::*;
use crate::cube::{cycle, fibonacci_cube, is_isomorphic, is_isomorphic_with, path, IsoOptions};
use crate::generators::{
    bridged_hexagons, even_cycle, fibonaccene, polyacene, search_non_weakly_elementary,
};

fn r(g: &PlaneBipartiteGraph) -> ResonanceGraph {
    build_resonance_graph(g, Limit::default()).unwrap()
}

/// Pairwise oracle: join two matchings iff their difference is one finite face.
fn pairwise(g: &PlaneBipartiteGraph, rg: &ResonanceGraph) -> Vec<ResonanceEdge> {
    let mut edges = Vec::new();
    for i in 0..rg.vertices.len() {
        for j in i + 1..rg.vertices.len() {
            let kind = classify_symmetric_difference(g, &rg.vertices[i], &rg.vertices[j]).unwrap();
            if let SymmetricDifference::SingleFacePeriphery(face) = kind {
                edges.push(ResonanceEdge { a: i, b: j, face });
            }
        }
    }
    edges
}

#[test]
fn hexagon_gives_an_edge() {
    let g = even_cycle(3).unwrap();
    let rg = r(&g);
    assert_eq!((rg.vertex_count(), rg.edge_count()), (2, 1));
    let face = g.finite_faces().next().unwrap().id;
    assert_eq!(rg.edges[0].face, face);
}

#[test]
fn naphthalene_gives_p3_with_two_labels() {
    let g = polyacene(2).unwrap();
    let rg = r(&g);
    assert!(is_isomorphic(&rg.to_simple_graph(), &path(3)).unwrap().is_some());
    assert_eq!(rg.face_labels().len(), 2);
}

#[test]
fn anthracene_gives_p4() {
    let rg = r(&polyacene(3).unwrap());
    assert!(is_isomorphic(&rg.to_simple_graph(), &path(4)).unwrap().is_some());
}

#[test]
fn fibonaccenes_give_fibonacci_cubes() {
    for n in 1..=6 {
        let rg = r(&fibonaccene(n).unwrap());
        let fc = fibonacci_cube(n).unwrap();
        assert!(is_isomorphic(&rg.to_simple_graph(), &fc).unwrap().is_some());
    }
}

#[test]
fn generated_edges_match_pairwise_oracle() {
    for g in [
        fibonaccene(5).unwrap(),
        polyacene(4).unwrap(),
        bridged_hexagons(),
        crate::generators::coronene_like(),
    ] {
        let rg = r(&g);
        assert_eq!(rg.edges, pairwise(&g, &rg));
    }
}

#[test]
fn bridged_hexagons_give_c4() {
    let g = bridged_hexagons();
    let rg = r(&g);
    assert!(is_isomorphic(&rg.to_simple_graph(), &cycle(4)).unwrap().is_some());
    // Flipping both hexagons at once is not an edge.
    let (a, b) = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .find(|&(i, j)| !rg.edges.iter().any(|e| (e.a, e.b) == (i, j)))
        .unwrap();
    assert_eq!(
        classify_symmetric_difference(&g, &rg.vertices[a], &rg.vertices[b]).unwrap(),
        SymmetricDifference::MultipleCycles
    );
}

#[test]
fn classification_edge_cases() {
    let g = even_cycle(3).unwrap();
    let rg = r(&g);
    let m = &rg.vertices[0];
    assert_eq!(classify_symmetric_difference(&g, m, m).unwrap(), SymmetricDifference::Empty);
    assert!(matches!(
        classify_symmetric_difference(&g, &rg.vertices[0], &rg.vertices[1]).unwrap(),
        SymmetricDifference::SingleFacePeriphery(_)
    ));
    let other = r(&polyacene(2).unwrap());
    assert!(matches!(
        classify_symmetric_difference(&g, m, &other.vertices[0]),
        Err(MatchingError::HostMismatch(_))
    ));

    // In anthracene the outer matching pair differs on the 14-cycle periphery.
    let anth = polyacene(3).unwrap();
    let ra = r(&anth);
    let kinds: Vec<SymmetricDifference> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .map(|(i, j)| classify_symmetric_difference(&anth, &ra.vertices[i], &ra.vertices[j]).unwrap())
        .collect();
    assert!(kinds.contains(&SymmetricDifference::SingleOtherCycle));
}

#[test]
fn antipodal_edges_of_squares_share_labels() {
    let rg = r(&fibonaccene(5).unwrap());
    let sg = rg.to_simple_graph();
    for &(a, b) in sg.edges() {
        for c in sg.neighbors(b).filter(|&c| c != a) {
            for d in sg.neighbors(c) {
                if d != b && d != a && sg.has_edge(d, a) {
                    let lab = |u, v| sg.label(sg.edge_between(u, v).unwrap()).unwrap();
                    assert_eq!(lab(a, b), lab(c, d));
                    assert_eq!(lab(b, c), lab(d, a));
                }
            }
        }
    }
}

#[test]
fn label_respecting_isomorphism_of_chain_and_mirror() {
    let g = crate::generators::benzenoid_chain(&"LLS".parse().unwrap()).unwrap();
    let h = crate::generators::benzenoid_chain(&"RRS".parse().unwrap()).unwrap();
    let (rg, rh) = (r(&g).to_simple_graph(), r(&h).to_simple_graph());
    assert!(is_isomorphic_with(&rg, &rh, IsoOptions { respect_labels: true })
        .unwrap()
        .is_some());
}

#[test]
fn non_weakly_elementary_witness_has_disconnected_resonance_graph() {
    let found = search_non_weakly_elementary(8).unwrap();
    let rg = r(&found.graph);
    assert!(rg.component_count() >= 2);
}
