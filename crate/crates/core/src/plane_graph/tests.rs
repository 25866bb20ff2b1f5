use super::*;
use crate::generators::{
    benzenoid_chain, bridged_hexagons, coronene_like, cycle_with_interior_paths, even_cycle,
    fibonaccene, k2, polyacene, ChainCode,
};
use proptest::prelude::*;

fn c6() -> PlaneBipartiteGraph {
    even_cycle(3).unwrap()
}

#[test]
fn k2_has_one_infinite_face() {
    let g = k2();
    assert_eq!(g.vertex_count(), 2);
    assert_eq!(g.faces().len(), 1);
    assert_eq!(g.finite_face_count(), 0);
    assert_eq!(g.face(0).len(), 2);
    assert!(g.is_k2());
}

#[test]
fn hexagon_faces() {
    let g = c6();
    assert_eq!(g.faces().len(), 2);
    assert_eq!(g.finite_face_count(), 1);
    let inner = g.finite_faces().next().unwrap();
    assert_eq!(inner.cycle_edges().unwrap().len(), 6);
    assert_eq!(g.color(0), Color::Black);
    assert!((0..6).all(|v| g.color(v) != g.color((v + 1) % 6)));
}

#[test]
fn naphthalene_and_anthracene_faces() {
    let naph = polyacene(2).unwrap();
    assert_eq!((naph.vertex_count(), naph.edge_count()), (10, 11));
    assert_eq!(naph.finite_face_count(), 2);
    let outer = &naph.faces()[naph.infinite_faces()[0]];
    assert_eq!(outer.len(), 10);

    let anth = polyacene(3).unwrap();
    assert_eq!((anth.vertex_count(), anth.edge_count()), (14, 16));
    assert_eq!(anth.finite_face_count(), 3);
}

#[test]
fn coronene_has_interior_vertices() {
    let g = coronene_like();
    assert_eq!((g.vertex_count(), g.edge_count()), (24, 30));
    assert_eq!(g.finite_face_count(), 7);
    let class = g.classify().unwrap();
    let interior = class.interior_vertices();
    assert_eq!(interior.len(), 6);
    assert!(interior.iter().all(|&v| g.degree(v) == 3));
    assert!(!g.is_outerplane().unwrap());
}

#[test]
fn finite_faces_walk_counterclockwise() {
    let g = fibonaccene(3).unwrap();
    for f in g.finite_faces() {
        assert_eq!(f.len(), 6);
        assert!(f.cycle_edges().is_some());
    }
    let total: usize = g.faces().iter().map(Face::len).sum();
    assert_eq!(total, 2 * g.edge_count());
}

#[test]
fn spec_round_trip() {
    let g = fibonaccene(4).unwrap();
    assert_eq!(PlaneBipartiteGraph::from_spec(g.spec()).unwrap(), g);
}

#[test]
fn rejects_bad_rotations() {
    let mut spec = c6().spec();
    spec.rotations[0].pop();
    assert!(matches!(
        PlaneBipartiteGraph::from_spec(spec),
        Err(PlaneGraphError::BadRotation(_))
    ));

    let mut spec = c6().spec();
    spec.rotations[0].push(3);
    assert!(matches!(
        PlaneBipartiteGraph::from_spec(spec),
        Err(PlaneGraphError::BadRotation(_))
    ));
}

#[test]
fn rejects_same_color_edge() {
    let mut spec = c6().spec();
    spec.colors[1] = spec.colors[0];
    assert!(matches!(
        PlaneBipartiteGraph::from_spec(spec),
        Err(PlaneGraphError::NotBipartite { .. })
    ));
}

#[test]
fn rejects_nonplanar_rotation() {
    // K_{3,3} with any rotation system violates Euler's formula.
    let colors = vec![Color::Black, Color::Black, Color::Black, Color::White, Color::White, Color::White];
    let mut edges = Vec::new();
    for b in 0..3 {
        for w in 3..6 {
            edges.push((b, w));
        }
    }
    let rotations = (0..6)
        .map(|v| (0..9).filter(|&e| edges[e].0 == v || edges[e].1 == v).collect())
        .collect();
    let err = PlaneBipartiteGraph::from_spec(GraphSpec {
        colors,
        edges,
        rotations,
        outer_faces: Vec::new(),
    })
    .unwrap_err();
    assert!(matches!(err, PlaneGraphError::EulerViolation { .. }));
}

#[test]
fn ambiguous_outer_face_needs_hint() {
    let mut spec = c6().spec();
    spec.outer_faces.clear();
    assert_eq!(
        PlaneBipartiteGraph::from_spec(spec.clone()),
        Err(PlaneGraphError::AmbiguousOuterFace { component: 0 })
    );
    spec.outer_faces = vec![Dart { edge: 0, from: 0 }];
    let g = PlaneBipartiteGraph::from_spec(spec).unwrap();
    assert_eq!(g.dart_face(Dart { edge: 0, from: 0 }), g.infinite_faces()[0]);
}

#[test]
fn classification_of_outerplane_graphs() {
    let g = fibonaccene(4).unwrap();
    let class = g.classify().unwrap();
    assert!(class.is_outerplane());
    let interior_edges = class.edges.iter().filter(|&&l| l == Location::Interior).count();
    assert_eq!(interior_edges, 3);
}

#[test]
fn handle_decomposition() {
    let whole = c6().handles().unwrap();
    assert!(whole.is_whole());
    assert_eq!(whole.handles()[0].length(), 6);

    let naph = polyacene(2).unwrap().handles().unwrap();
    let mut lengths: Vec<usize> = naph.handles().iter().map(Handle::length).collect();
    lengths.sort();
    assert_eq!(lengths, vec![1, 5, 5]);
    let interior: Vec<&Handle> = naph
        .handles()
        .iter()
        .filter(|h| h.kind == HandleKind::Interior)
        .collect();
    assert_eq!(interior.len(), 1);
    assert!(interior[0].is_trivial());

    let theta = cycle_with_interior_paths(8, &[(0, 3, 3)]).unwrap();
    let h = theta.handles().unwrap();
    let interior: Vec<&Handle> = h.handles().iter().filter(|h| h.kind == HandleKind::Interior).collect();
    assert_eq!(interior.len(), 1);
    assert_eq!(interior[0].length(), 3);
}

#[test]
fn adjacent_triples_of_chains() {
    let anth = polyacene(3).unwrap();
    let triples = anth.adjacent_triples().unwrap();
    assert_eq!(triples.len(), 1);
    assert_eq!(triples[0].kind, TripleKind::Linear);
    assert_eq!(triples[0].line_distance, 3);

    let phen = fibonaccene(3).unwrap();
    let triples = phen.adjacent_triples().unwrap();
    assert_eq!(triples.len(), 1);
    assert_eq!(triples[0].kind, TripleKind::Angular);
    assert_eq!(triples[0].line_distance % 2, 0);

    for n in 3..=6 {
        let linear = |g: &PlaneBipartiteGraph| {
            g.adjacent_triples()
                .unwrap()
                .iter()
                .filter(|t| t.kind == TripleKind::Linear)
                .count()
        };
        assert_eq!(linear(&polyacene(n).unwrap()), n - 2);
        assert_eq!(linear(&fibonaccene(n).unwrap()), 0);
    }
    assert_eq!(coronene_like().adjacent_triples(), Err(PlaneGraphError::NotOuterplane));
}

#[test]
fn peripheral_two_coloring() {
    assert!(fibonaccene(6).unwrap().is_peripherally_2_colorable().unwrap());
    assert!(c6().is_peripherally_2_colorable().unwrap());
    assert!(!polyacene(3).unwrap().is_peripherally_2_colorable().unwrap());
    assert!(!coronene_like().is_peripherally_2_colorable().unwrap());
    assert_eq!(k2().is_peripherally_2_colorable(), Err(PlaneGraphError::IsK2));
    let code: ChainCode = "LSR".parse().unwrap();
    let coloring = benzenoid_chain(&code).unwrap().peripheral_coloring(false).unwrap();
    assert!(!coloring.colorable);
    assert!(coloring.failure.is_some());
}

#[test]
fn subdivide_then_smooth_restores_face_lengths() {
    let g = c6();
    let s = g.subdivide_edge(2, 2).unwrap();
    assert_eq!((s.vertex_count(), s.edge_count()), (8, 8));
    assert_eq!(s.finite_faces().next().unwrap().len(), 8);
    assert_eq!(g.subdivide_edge(2, 3), Err(PlaneGraphError::OddSubdivision(3)));

    let (a, b) = (6, 7);
    let back = s.smooth_vertex_pair(a, b).unwrap();
    assert_eq!((back.vertex_count(), back.edge_count()), (6, 6));
    assert_eq!(back.finite_faces().next().unwrap().len(), 6);
    assert!(matches!(
        polyacene(2).unwrap().smooth_vertex_pair(0, 5),
        Err(PlaneGraphError::NotAdjacent(..)) | Err(PlaneGraphError::DegreeNot2(_))
    ));
}

#[test]
fn smoothing_a_four_cycle_would_merge_edges() {
    let c4 = even_cycle(2).unwrap();
    let (u, v) = c4.endpoints(0);
    assert!(matches!(
        c4.smooth_vertex_pair(u, v),
        Err(PlaneGraphError::WouldCreateMultiEdge(..))
    ));
}

#[test]
fn sub_embeddings_after_deleting_a_bridge() {
    let g = bridged_hexagons();
    let bridge = (0..g.edge_count())
        .find(|&e| {
            let (f1, f2) = g.edge_faces(e);
            f1 == f2
        })
        .unwrap();
    let keep = BitSet::from_positions(g.edge_count(), (0..g.edge_count()).filter(|&e| e != bridge));
    let pieces = g.edge_subgraph_components(&keep).unwrap();
    assert_eq!(pieces.len(), 2);
    assert!(pieces.iter().all(|p| p.graph.finite_face_count() == 1));
    assert_eq!(g.finite_face_edge_sets_after_deletion(&keep).len(), 2);
}

#[test]
fn outerplanarize_contracts_interior_handles() {
    for paths in [vec![(0, 3, 3)], vec![(0, 1, 3)], vec![(0, 3, 3), (6, 9, 3)]] {
        let len = if paths.len() == 2 { 12 } else if paths[0].1 == 1 { 6 } else { 8 };
        let g = cycle_with_interior_paths(len, &paths).unwrap();
        let out = g.outerplanarize().unwrap();
        assert!(out.graph.is_outerplane().unwrap());
        assert_eq!(out.graph.finite_face_count(), g.finite_face_count());
        assert_eq!(out.map.face_map.len(), g.faces().len());
    }
    assert_eq!(
        polyacene(3).unwrap().outerplanarize().unwrap_err(),
        PlaneGraphError::NotPeripherally2Colorable
    );
}

proptest! {
    #[test]
    fn face_lengths_sum_to_twice_the_edges(turns in proptest::collection::vec(0u8..3, 0..5)) {
        let code: String = turns.iter().map(|t| ['L', 'R', 'S'][*t as usize]).collect();
        let code: ChainCode = code.parse().unwrap();
        if let Ok(g) = benzenoid_chain(&code) {
            let total: usize = g.faces().iter().map(Face::len).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
            prop_assert_eq!(g.finite_face_count(), code.hexagons());
            prop_assert_eq!(g.vertex_count() + g.faces().len(), g.edge_count() + 2);
        }
    }
}
