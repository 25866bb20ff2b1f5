//! The versioned JSON graph file and DOT export.
//!
//! ```json
//! {
//!   "edges": [{"id": 0, "u": 0, "v": 1}, ...],
//!   "format_version": "1",
//!   "outer_face": {"edge": 0, "from": 0},
//!   "rotations": {"0": [0, 5], ...},
//!   "vertices": [{"color": "black", "id": 0}, ...]
//! }
//! ```
//!
//! Keys are written in sorted order, ids ascending, rotations clockwise.
//! `outer_face` is a single dart, or an array with one dart per component
//! when the graph is disconnected.

use crate::cube::{CubeEmbedding, DaisyCertificate};
use crate::plane_graph::{Color, Dart, GraphSpec, PlaneBipartiteGraph, PlaneGraphError};
use crate::resonance::ResonanceGraph;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at {context}: {message}")]
    Schema { context: String, message: String },
    #[error(transparent)]
    Graph(#[from] PlaneGraphError),
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
}

fn schema(context: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Schema {
        context: context.into(),
        message: message.into(),
    }
}

#[derive(Deserialize)]
struct RawFile {
    format_version: Option<serde_json::Value>,
    vertices: Option<Vec<RawVertex>>,
    edges: Option<Vec<RawEdge>>,
    rotations: Option<BTreeMap<String, Vec<serde_json::Value>>>,
    outer_face: Option<serde_json::Value>,
}

#[derive(Deserialize)]
struct RawVertex {
    id: Option<usize>,
    color: Option<String>,
}

#[derive(Deserialize)]
struct RawEdge {
    id: Option<usize>,
    u: Option<usize>,
    v: Option<usize>,
}

/// Places each item at its declared id, requiring ids to be exactly `0..n`.
fn dense<T>(what: &str, items: Vec<(Option<usize>, T)>) -> Result<Vec<T>, IoError> {
    let n = items.len();
    let mut slots: Vec<Option<T>> = (0..n).map(|_| None).collect();
    for (pos, (id, item)) in items.into_iter().enumerate() {
        let id = id.ok_or_else(|| schema(format!("{what}[{pos}]"), "missing field \"id\""))?;
        if id >= n {
            return Err(schema(
                format!("{what}[{pos}]"),
                format!("id {id} out of range; ids must be 0..{n}"),
            ));
        }
        if slots[id].is_some() {
            return Err(schema(format!("{what}[{pos}]"), format!("duplicate id {id}")));
        }
        slots[id] = Some(item);
    }
    Ok(slots.into_iter().map(Option::unwrap).collect())
}

fn parse_dart(context: &str, value: &serde_json::Value) -> Result<Dart, IoError> {
    let field = |name: &str| {
        value
            .get(name)
            .and_then(serde_json::Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| schema(context, format!("missing or non-integer field {name:?}")))
    };
    Ok(Dart {
        edge: field("edge")?,
        from: field("from")?,
    })
}

/// Parses a graph file.
pub fn parse(bytes: &[u8]) -> Result<PlaneBipartiteGraph, IoError> {
    let raw: RawFile = serde_json::from_slice(bytes).map_err(|e| IoError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    match raw.format_version {
        Some(serde_json::Value::String(v)) if v == FORMAT_VERSION => {}
        Some(other) => {
            return Err(schema(
                "format_version",
                format!("unsupported version {other}; expected \"{FORMAT_VERSION}\""),
            ))
        }
        None => return Err(schema("format_version", "missing field")),
    }

    let vertices = raw.vertices.ok_or_else(|| schema("vertices", "missing field"))?;
    let mut colors_in = Vec::with_capacity(vertices.len());
    for (pos, v) in vertices.into_iter().enumerate() {
        let name = v.id.map_or(format!("vertices[{pos}]"), |id| format!("vertex {id}"));
        let color = match v.color.as_deref() {
            Some("black") => Color::Black,
            Some("white") => Color::White,
            Some(other) => {
                return Err(schema(name, format!("color must be \"black\" or \"white\", got {other:?}")))
            }
            None => return Err(schema(name, "missing field \"color\"")),
        };
        colors_in.push((v.id, color));
    }
    let colors = dense("vertices", colors_in)?;
    let n = colors.len();

    let edges_raw = raw.edges.ok_or_else(|| schema("edges", "missing field"))?;
    let mut edges_in = Vec::with_capacity(edges_raw.len());
    for (pos, e) in edges_raw.into_iter().enumerate() {
        let name = e.id.map_or(format!("edges[{pos}]"), |id| format!("edge {id}"));
        let u = e.u.ok_or_else(|| schema(&name, "missing field \"u\""))?;
        let v = e.v.ok_or_else(|| schema(&name, "missing field \"v\""))?;
        for x in [u, v] {
            if x >= n {
                return Err(schema(&name, format!("unknown vertex {x}")));
            }
        }
        edges_in.push((e.id, (u, v)));
    }
    let edges = dense("edges", edges_in)?;

    let rot_raw = raw.rotations.ok_or_else(|| schema("rotations", "missing field"))?;
    let mut rotations: Vec<Option<Vec<usize>>> = vec![None; n];
    for (key, list) in rot_raw {
        let v: usize = key
            .parse()
            .map_err(|_| schema(format!("rotations[{key:?}]"), "key is not a vertex id"))?;
        if v >= n {
            return Err(schema(format!("rotations[{key:?}]"), format!("unknown vertex {v}")));
        }
        let mut rot = Vec::with_capacity(list.len());
        for item in list {
            let e = item
                .as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| schema(format!("rotations[{key:?}]"), format!("{item} is not an edge id")))?;
            if e >= edges.len() {
                return Err(schema(format!("rotations[{key:?}]"), format!("unknown edge {e}")));
            }
            rot.push(e);
        }
        rotations[v] = Some(rot);
    }
    let rotations = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| schema("rotations", format!("no rotation for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;

    let outer_faces = match raw.outer_face {
        None | Some(serde_json::Value::Null) => Vec::new(),
        Some(serde_json::Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, d)| parse_dart(&format!("outer_face[{i}]"), d))
            .collect::<Result<_, _>>()?,
        Some(d) => vec![parse_dart("outer_face", &d)?],
    };

    Ok(PlaneBipartiteGraph::from_spec(GraphSpec {
        colors,
        edges,
        rotations,
        outer_faces,
    })?)
}

struct Rotations<'a>(&'a [Vec<usize>]);

impl Serialize for Rotations<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (v, rot) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), rot)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct OutVertex {
    color: Color,
    id: usize,
}

#[derive(Serialize)]
struct OutEdge {
    id: usize,
    u: usize,
    v: usize,
}

#[derive(Serialize)]
#[serde(untagged)]
enum OutOuter {
    One(Dart),
    Many(Vec<Dart>),
}

#[derive(Serialize)]
struct OutFile<'a> {
    edges: Vec<OutEdge>,
    format_version: &'static str,
    outer_face: OutOuter,
    rotations: Rotations<'a>,
    vertices: Vec<OutVertex>,
}

/// The graph as a JSON value, keys sorted.
pub fn to_json_value(g: &PlaneBipartiteGraph) -> serde_json::Value {
    serde_json::to_value(out_file(g)).expect("graph files always serialize")
}

fn out_file(g: &PlaneBipartiteGraph) -> OutFile<'_> {
    let darts = g.outer_darts();
    OutFile {
        edges: g
            .edges()
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| OutEdge { id, u, v })
            .collect(),
        format_version: FORMAT_VERSION,
        outer_face: if darts.len() == 1 {
            OutOuter::One(darts[0])
        } else {
            OutOuter::Many(darts.to_vec())
        },
        rotations: Rotations(g.rotations()),
        vertices: g
            .colors()
            .iter()
            .enumerate()
            .map(|(id, &color)| OutVertex { color, id })
            .collect(),
    }
}

/// Pretty-printed JSON with a trailing newline; byte-identical for equal graphs.
pub fn serialize(g: &PlaneBipartiteGraph) -> String {
    let mut s = serde_json::to_string_pretty(&out_file(g)).expect("graph files always serialize");
    s.push('\n');
    s
}

pub fn read_graph(path: &Path) -> Result<PlaneBipartiteGraph, IoError> {
    let bytes = std::fs::read(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })?;
    parse(&bytes)
}

pub fn write_graph(path: &Path, g: &PlaneBipartiteGraph) -> Result<(), IoError> {
    std::fs::write(path, serialize(g)).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DotOptions<'a> {
    /// Label resonance edges with their face ids.
    pub edge_labels: bool,
    /// Label vertices with binary codes.
    pub embedding: Option<&'a CubeEmbedding>,
    /// Vertex drawn highlighted, e.g. a daisy base.
    pub highlight: Option<usize>,
}

impl<'a> DotOptions<'a> {
    /// Face labels, codes and the base vertex of a daisy certificate.
    pub fn with_certificate(cert: &'a DaisyCertificate) -> Self {
        DotOptions {
            edge_labels: true,
            embedding: Some(&cert.embedding),
            highlight: Some(cert.base()),
        }
    }
}

fn node_attrs(v: usize, options: &DotOptions<'_>, extra: &[String]) -> Vec<String> {
    let mut attrs: Vec<String> = extra.to_vec();
    if let Some(emb) = options.embedding {
        attrs.push(format!("label=\"{}\"", emb.coords[v].to_code_string()));
    }
    if options.highlight == Some(v) {
        attrs.push("penwidth=3".into());
        attrs.push("color=red".into());
    }
    attrs
}

fn write_node(out: &mut String, v: usize, attrs: &[String]) {
    if attrs.is_empty() {
        writeln!(out, "  {v};").unwrap();
    } else {
        writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
    }
}

/// The resonance graph in DOT.
pub fn resonance_to_dot(r: &ResonanceGraph, options: &DotOptions<'_>) -> String {
    let mut out = String::from("graph resonance {\n");
    for v in 0..r.vertex_count() {
        write_node(&mut out, v, &node_attrs(v, options, &[]));
    }
    for e in &r.edges {
        if options.edge_labels {
            writeln!(out, "  {} -- {} [label=\"{}\"];", e.a, e.b, e.face).unwrap();
        } else {
            writeln!(out, "  {} -- {};", e.a, e.b).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// A plane bipartite graph in DOT, vertices filled by color.
pub fn graph_to_dot(g: &PlaneBipartiteGraph, options: &DotOptions<'_>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let fill = match g.color(v) {
            Color::Black => vec!["style=filled".to_string(), "fillcolor=black".into(), "fontcolor=white".into()],
            Color::White => vec!["style=filled".to_string(), "fillcolor=white".into()],
        };
        write_node(&mut out, v, &node_attrs(v, options, &fill));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if options.edge_labels {
            writeln!(out, "  {u} -- {v} [label=\"{e}\"];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests;
