use super::*;
use crate::cube::is_daisy_cube;
use crate::generators::{bridged_hexagons, disjoint_union, even_cycle, fibonaccene, polyacene};
use crate::matching::Limit;
use crate::resonance::build_resonance_graph;
use proptest::prelude::*;

#[test]
fn hexagon_round_trip_is_byte_identical() {
    let g = even_cycle(3).unwrap();
    let text = serialize(&g);
    let back = parse(text.as_bytes()).unwrap();
    assert_eq!(back, g);
    assert_eq!(serialize(&back), text);
}

#[test]
fn keys_are_sorted() {
    let text = serialize(&even_cycle(2).unwrap());
    let positions: Vec<usize> = ["\"edges\"", "\"format_version\"", "\"outer_face\"", "\"rotations\"", "\"vertices\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn rotations_are_in_numeric_vertex_order() {
    let g = fibonaccene(3).unwrap();
    let v = to_json_value(&g);
    let keys: Vec<&String> = v["rotations"].as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), g.vertex_count());
    let text = serialize(&g);
    assert!(text.find("\"2\":").unwrap() < text.find("\"10\":").unwrap());
}

#[test]
fn disconnected_graph_writes_outer_face_array() {
    let c6 = even_cycle(3).unwrap();
    let g = disjoint_union(&[&c6, &c6]).unwrap();
    let v = to_json_value(&g);
    assert_eq!(v["outer_face"].as_array().unwrap().len(), 2);
    assert_eq!(parse(serialize(&g).as_bytes()).unwrap(), g);
}

fn hexagon_value() -> serde_json::Value {
    to_json_value(&even_cycle(3).unwrap())
}

fn parse_value(v: &serde_json::Value) -> Result<PlaneBipartiteGraph, IoError> {
    parse(serde_json::to_string(v).unwrap().as_bytes())
}

#[test]
fn missing_color_names_the_vertex() {
    let mut v = hexagon_value();
    v["vertices"][2].as_object_mut().unwrap().remove("color");
    match parse_value(&v) {
        Err(IoError::Schema { context, message }) => {
            assert_eq!(context, "vertex 2");
            assert!(message.contains("color"));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn unknown_edge_in_rotation() {
    let mut v = hexagon_value();
    v["rotations"]["0"].as_array_mut().unwrap().push(serde_json::json!(42));
    match parse_value(&v) {
        Err(IoError::Schema { context, message }) => {
            assert!(context.contains("rotations"));
            assert!(message.contains("unknown edge 42"));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn other_schema_errors() {
    let mut v = hexagon_value();
    v["format_version"] = serde_json::json!("2");
    assert!(matches!(parse_value(&v), Err(IoError::Schema { .. })));

    let mut v = hexagon_value();
    v["vertices"][1]["id"] = serde_json::json!(0);
    assert!(matches!(parse_value(&v), Err(IoError::Schema { .. })));

    let mut v = hexagon_value();
    v["edges"][0]["v"] = serde_json::json!(99);
    assert!(matches!(parse_value(&v), Err(IoError::Schema { .. })));

    let mut v = hexagon_value();
    v["vertices"][1]["color"] = serde_json::json!("black");
    assert!(matches!(parse_value(&v), Err(IoError::Graph(PlaneGraphError::NotBipartite { .. }))));

    assert!(matches!(parse(b"{\"edges\": [}"), Err(IoError::Json { line: 1, .. })));
}

#[test]
fn outer_face_is_optional_when_unambiguous() {
    let g = polyacene(2).unwrap();
    let mut v = to_json_value(&g);
    v.as_object_mut().unwrap().remove("outer_face");
    assert_eq!(parse_value(&v).unwrap(), g);
}

#[test]
fn hexagon_resonance_dot() {
    let r = build_resonance_graph(&even_cycle(3).unwrap(), Limit::default()).unwrap();
    let plain = resonance_to_dot(&r, &DotOptions::default());
    assert_eq!(plain, "graph resonance {\n  0;\n  1;\n  0 -- 1;\n}\n");
    let labeled = resonance_to_dot(&r, &DotOptions { edge_labels: true, ..Default::default() });
    assert!(labeled.contains("0 -- 1 [label="));
}

#[test]
fn dot_with_codes_marks_the_base() {
    let r = build_resonance_graph(&fibonaccene(3).unwrap(), Limit::default()).unwrap();
    let cert = is_daisy_cube(&r.to_simple_graph()).unwrap();
    let dot = resonance_to_dot(&r, &DotOptions::with_certificate(&cert));
    let base = cert.base();
    assert!(dot.contains(&format!("  {base} [label=\"000\", penwidth=3, color=red];")));
    assert_eq!(dot.matches("label=\"").count(), 5 + r.edge_count());
}

#[test]
fn graph_dot_lists_every_edge() {
    let g = bridged_hexagons();
    let dot = graph_to_dot(&g, &DotOptions::default());
    assert_eq!(dot.matches(" -- ").count(), g.edge_count());
}

proptest! {
    #[test]
    fn chains_round_trip(turns in proptest::collection::vec(0u8..3, 0..5)) {
        let code: String = turns.iter().map(|t| ['L', 'R', 'S'][*t as usize]).collect();
        if let Ok(g) = crate::generators::benzenoid_chain(&code.parse().unwrap()) {
            let text = serialize(&g);
            let back = parse(text.as_bytes()).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize(&back), text);
        }
    }
}
