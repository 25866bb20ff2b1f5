mod common;

use common::{brute_force_daisy, count_perfect_matchings};
use proptest::prelude::*;
use reskit::cube::{is_daisy_cube, is_partial_cube};
use reskit::generators::{benzenoid_chain, ChainCode};
use reskit::io::{parse, serialize};
use reskit::matching::{fries_number, Limit};
use reskit::resonance::build_resonance_graph;
use reskit::theorems::{run_corpus, verify_general_characterization, CorpusSpec};

fn chain(turns: &[u8]) -> Option<reskit::plane_graph::PlaneBipartiteGraph> {
    let code: String = turns.iter().map(|t| ['L', 'R', 'S'][*t as usize]).collect();
    benzenoid_chain(&code.parse::<ChainCode>().unwrap()).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resonance_vertices_are_the_perfect_matchings(turns in proptest::collection::vec(0u8..3, 0..5)) {
        if let Some(g) = chain(&turns) {
            let r = build_resonance_graph(&g, Limit::DEFAULT).unwrap();
            prop_assert_eq!(r.vertex_count(), count_perfect_matchings(&g));
            prop_assert!(r.is_connected());
            prop_assert!(is_partial_cube(&r.to_simple_graph()).is_some());
        }
    }

    #[test]
    fn daisy_iff_fries_equals_faces(turns in proptest::collection::vec(0u8..3, 0..5)) {
        if let Some(g) = chain(&turns) {
            let r = build_resonance_graph(&g, Limit::DEFAULT).unwrap().to_simple_graph();
            let fries = fries_number(&g, Limit::DEFAULT).unwrap().value;
            let daisy = is_daisy_cube(&r);
            prop_assert_eq!(daisy.is_some(), fries == g.finite_face_count());
            if let Some(cert) = daisy {
                prop_assert_eq!(cert.idim(), fries);
                prop_assert!(cert.verify(&r));
            }
        }
    }

    #[test]
    fn serialization_preserves_resonance(turns in proptest::collection::vec(0u8..3, 0..4)) {
        if let Some(g) = chain(&turns) {
            let text = serialize(&g);
            let back = parse(text.as_bytes()).unwrap();
            prop_assert_eq!(serialize(&back), text);
            let a = build_resonance_graph(&g, Limit::DEFAULT).unwrap();
            let b = build_resonance_graph(&back, Limit::DEFAULT).unwrap();
            prop_assert_eq!(a.edges, b.edges);
        }
    }

    #[test]
    fn general_characterization_on_chains(turns in proptest::collection::vec(0u8..3, 0..4)) {
        if let Some(g) = chain(&turns) {
            prop_assert!(verify_general_characterization(&g, Limit::DEFAULT).unwrap().agree);
        }
    }
}

#[test]
fn small_daisy_verdicts_match_down_set_enumeration() {
    for code in ["-", "S", "L", "SS", "LR", "LS"] {
        let g = benzenoid_chain(&code.parse().unwrap()).unwrap();
        let r = build_resonance_graph(&g, Limit::DEFAULT).unwrap().to_simple_graph();
        if r.vertex_count() > 9 {
            continue;
        }
        let ours = is_daisy_cube(&r).map(|c| c.idim() as u32);
        assert_eq!(ours, brute_force_daisy(&r), "chain {code}");
    }
}

#[test]
fn special_corpus_is_clean() {
    let report = run_corpus(&CorpusSpec::Special, Limit::DEFAULT).unwrap();
    assert!(report.is_clean(), "{:?}", report.disagreeing().collect::<Vec<_>>());
    assert!(report.skipped.iter().any(|s| s.graph == "K2"));
}
