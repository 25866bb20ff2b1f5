//! Plane bipartite graphs given as rotation systems.
//!
//! A graph is a list of colored vertices, a list of edges and, for every
//! vertex, the clockwise cyclic order of its incident edge ids. Faces are the
//! orbits of the dart permutation "arrive at `v`, leave along the clockwise
//! successor of the arrival edge"; with a clockwise rotation this walks every
//! bounded face counterclockwise. One face per component is the infinite face,
//! chosen by a hint dart or by the longest-walk rule.

mod geometry;
mod structure;
mod transform;

pub use structure::{
    AdjacentTriple, Classification, Handle, HandleDecomposition, HandleKind, Location,
    PeripheralColoring, PeripheryEntry, TripleKind,
};
pub use transform::{MatchingMap, Outerplanarization, Subgraph};
pub(crate) use structure::is_biconnected;

use crate::bitset::BitSet;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Black => f.write_str("black"),
            Color::White => f.write_str("white"),
        }
    }
}

/// A directed edge: edge `edge` traversed starting at vertex `from`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: EdgeId,
    pub from: VertexId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    Finite,
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Boundary walk, starting at the smallest dart of the walk.
    pub boundary: Vec<Dart>,
    pub kind: FaceKind,
    /// The undirected edge ids on the boundary.
    pub edge_set: BitSet,
    pub component: usize,
    cycle: Option<Vec<EdgeId>>,
}

impl Face {
    pub fn is_finite(&self) -> bool {
        self.kind == FaceKind::Finite
    }

    /// Length of the boundary walk (bridges count twice).
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Vertices in boundary-walk order.
    pub fn vertices(&self) -> Vec<VertexId> {
        self.boundary.iter().map(|d| d.from).collect()
    }

    /// The boundary edges in walk order, when the periphery is a simple cycle.
    pub fn cycle_edges(&self) -> Option<&[EdgeId]> {
        self.cycle.as_deref()
    }
}

/// Raw description of an embedding; the input of [`PlaneBipartiteGraph::from_spec`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GraphSpec {
    pub colors: Vec<Color>,
    pub edges: Vec<(VertexId, VertexId)>,
    /// Clockwise incident edge ids, per vertex.
    pub rotations: Vec<Vec<EdgeId>>,
    /// Darts known to lie on an infinite face; at most one per component.
    pub outer_faces: Vec<Dart>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneGraphError {
    #[error("edge {edge} joins vertices {u} and {v} of the same color")]
    NotBipartite { edge: EdgeId, u: VertexId, v: VertexId },
    #[error("bad rotation system: {0}")]
    BadRotation(String),
    #[error("invalid edge {edge}: {reason}")]
    InvalidEdge { edge: EdgeId, reason: String },
    #[error("vertex {0} has no incident edge")]
    IsolatedVertex(VertexId),
    #[error(
        "component {component} is not planar as embedded: V - E + F = {vertices} - {edges} + {faces} != 2"
    )]
    EulerViolation {
        component: usize,
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("component {component} has several longest faces; an outer face hint is required")]
    AmbiguousOuterFace { component: usize },
    #[error("invalid outer face hint: {0}")]
    InvalidOuterFace(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not outerplane")]
    NotOuterplane,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is K2")]
    IsK2,
    #[error("graph is not elementary")]
    NotElementary,
    #[error("graph is not peripherally 2-colorable")]
    NotPeripherally2Colorable,
    #[error("subdivision must insert a positive even number of vertices, got {0}")]
    OddSubdivision(usize),
    #[error("vertex {0} does not have degree 2")]
    DegreeNot2(VertexId),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("operation would join {0} and {1} by a second edge or a loop")]
    WouldCreateMultiEdge(VertexId, VertexId),
    #[error("no vertex {0}")]
    NoSuchVertex(VertexId),
    #[error("no edge {0}")]
    NoSuchEdge(EdgeId),
    #[error(transparent)]
    Matching(#[from] crate::matching::MatchingError),
}

/// A validated plane bipartite graph with its faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneBipartiteGraph {
    colors: Vec<Color>,
    edges: Vec<(VertexId, VertexId)>,
    rotations: Vec<Vec<EdgeId>>,
    /// Smallest dart of each infinite face, indexed by component.
    outer_darts: Vec<Dart>,
    faces: Vec<Face>,
    dart_face: Vec<FaceId>,
    /// Position of `dart.edge` in the rotation of `dart.from`, by dart index.
    rotation_pos: Vec<usize>,
    component: Vec<usize>,
    component_count: usize,
}

fn union_find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        union_find_root(&mut self.0, x)
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

/// Traces the orbits of the face permutation. Walks come out ordered by
/// their smallest dart index, and each walk starts at that dart.
pub(crate) fn trace_faces(
    edges: &[(VertexId, VertexId)],
    rotations: &[Vec<EdgeId>],
) -> Vec<Vec<Dart>> {
    let dart_count = edges.len() * 2;
    let mut pos = vec![0usize; dart_count];
    for (v, rot) in rotations.iter().enumerate() {
        for (i, &e) in rot.iter().enumerate() {
            let idx = 2 * e + usize::from(edges[e].0 != v);
            pos[idx] = i;
        }
    }
    let mut seen = vec![false; dart_count];
    let mut walks = Vec::new();
    for start in 0..dart_count {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            let e = cur / 2;
            let (a, b) = edges[e];
            let (from, to) = if cur % 2 == 0 { (a, b) } else { (b, a) };
            walk.push(Dart { edge: e, from });
            let rev = cur ^ 1;
            let rot = &rotations[to];
            let next_edge = rot[(pos[rev] + 1) % rot.len()];
            cur = 2 * next_edge + usize::from(edges[next_edge].0 != to);
        }
        walks.push(walk);
    }
    walks
}

impl PlaneBipartiteGraph {
    /// Validates a rotation system and computes its faces.
    pub fn from_spec(spec: GraphSpec) -> Result<Self, PlaneGraphError> {
        let GraphSpec {
            colors,
            edges,
            rotations,
            outer_faces,
        } = spec;
        let n = colors.len();
        if rotations.len() != n {
            return Err(PlaneGraphError::BadRotation(format!(
                "{} rotation lists for {} vertices",
                rotations.len(),
                n
            )));
        }
        let mut seen_pairs = std::collections::HashSet::new();
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(PlaneGraphError::InvalidEdge {
                    edge: e,
                    reason: format!("endpoint out of range ({u}, {v})"),
                });
            }
            if u == v {
                return Err(PlaneGraphError::InvalidEdge {
                    edge: e,
                    reason: "loop".into(),
                });
            }
            if !seen_pairs.insert((u.min(v), u.max(v))) {
                return Err(PlaneGraphError::InvalidEdge {
                    edge: e,
                    reason: format!("parallel edge between {u} and {v}"),
                });
            }
            if colors[u] == colors[v] {
                return Err(PlaneGraphError::NotBipartite { edge: e, u, v });
            }
        }
        let mut occurrences = vec![0usize; edges.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for &e in rot {
                if e >= edges.len() {
                    return Err(PlaneGraphError::BadRotation(format!(
                        "vertex {v} lists unknown edge {e}"
                    )));
                }
                let (a, b) = edges[e];
                if a != v && b != v {
                    return Err(PlaneGraphError::BadRotation(format!(
                        "vertex {v} lists edge {e} which is not incident to it"
                    )));
                }
                occurrences[e] += 1;
            }
        }
        for (e, &count) in occurrences.iter().enumerate() {
            if count != 2 {
                return Err(PlaneGraphError::BadRotation(format!(
                    "edge {e} appears {count} times across rotations, expected 2"
                )));
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            // Each incident edge exactly once at v; the count check above
            // already rules out anything else but a duplicate at one end.
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(PlaneGraphError::BadRotation(format!(
                    "vertex {v} lists an edge twice"
                )));
            }
            if rot.is_empty() {
                return Err(PlaneGraphError::IsolatedVertex(v));
            }
        }

        // Components, numbered by smallest vertex.
        let mut uf = UnionFind::new(n);
        for &(u, v) in &edges {
            uf.union(u, v);
        }
        let mut component = vec![usize::MAX; n];
        let mut root_to_comp = std::collections::HashMap::new();
        for v in 0..n {
            let r = uf.find(v);
            let next = root_to_comp.len();
            component[v] = *root_to_comp.entry(r).or_insert(next);
        }
        let component_count = root_to_comp.len();

        let walks = trace_faces(&edges, &rotations);
        let dart_index = |d: Dart| 2 * d.edge + usize::from(edges[d.edge].0 != d.from);
        let mut dart_face = vec![0usize; edges.len() * 2];
        for (f, walk) in walks.iter().enumerate() {
            for &d in walk {
                dart_face[dart_index(d)] = f;
            }
        }
        let face_component: Vec<usize> = walks.iter().map(|w| component[w[0].from]).collect();

        let mut v_count = vec![0usize; component_count];
        let mut e_count = vec![0usize; component_count];
        let mut f_count = vec![0usize; component_count];
        for v in 0..n {
            v_count[component[v]] += 1;
        }
        for &(u, _) in &edges {
            e_count[component[u]] += 1;
        }
        for &c in &face_component {
            f_count[c] += 1;
        }
        for c in 0..component_count {
            if v_count[c] + f_count[c] != e_count[c] + 2 {
                return Err(PlaneGraphError::EulerViolation {
                    component: c,
                    vertices: v_count[c],
                    edges: e_count[c],
                    faces: f_count[c],
                });
            }
        }

        let mut outer_face: Vec<Option<usize>> = vec![None; component_count];
        for hint in outer_faces {
            if hint.edge >= edges.len() {
                return Err(PlaneGraphError::InvalidOuterFace(format!(
                    "unknown edge {}",
                    hint.edge
                )));
            }
            let (a, b) = edges[hint.edge];
            if hint.from != a && hint.from != b {
                return Err(PlaneGraphError::InvalidOuterFace(format!(
                    "vertex {} is not an endpoint of edge {}",
                    hint.from, hint.edge
                )));
            }
            let f = dart_face[dart_index(hint)];
            let c = face_component[f];
            match outer_face[c] {
                Some(existing) if existing != f => {
                    return Err(PlaneGraphError::InvalidOuterFace(format!(
                        "two different outer faces given for component {c}"
                    )))
                }
                _ => outer_face[c] = Some(f),
            }
        }
        for c in 0..component_count {
            if outer_face[c].is_some() {
                continue;
            }
            let candidates: Vec<usize> = (0..walks.len())
                .filter(|&f| face_component[f] == c)
                .collect();
            let longest = candidates.iter().map(|&f| walks[f].len()).max().unwrap_or(0);
            let best: Vec<usize> = candidates
                .into_iter()
                .filter(|&f| walks[f].len() == longest)
                .collect();
            if best.len() != 1 {
                return Err(PlaneGraphError::AmbiguousOuterFace { component: c });
            }
            outer_face[c] = Some(best[0]);
        }
        let outer_face: Vec<usize> = outer_face.into_iter().map(|f| f.unwrap()).collect();

        let faces: Vec<Face> = walks
            .into_iter()
            .enumerate()
            .map(|(id, boundary)| {
                let comp = face_component[id];
                let kind = if outer_face[comp] == id {
                    FaceKind::Infinite
                } else {
                    FaceKind::Finite
                };
                let edge_set = BitSet::from_positions(edges.len(), boundary.iter().map(|d| d.edge));
                let cycle = simple_cycle(&boundary);
                Face {
                    id,
                    boundary,
                    kind,
                    edge_set,
                    component: comp,
                    cycle,
                }
            })
            .collect();
        let outer_darts = outer_face.iter().map(|&f| faces[f].boundary[0]).collect();

        let mut rotation_pos = vec![0usize; edges.len() * 2];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                rotation_pos[2 * e + usize::from(edges[e].0 != v)] = i;
            }
        }

        Ok(PlaneBipartiteGraph {
            colors,
            edges,
            rotations,
            outer_darts,
            faces,
            dart_face,
            rotation_pos,
            component,
            component_count,
        })
    }

    /// The description this graph was built from, with canonical outer-face darts.
    pub fn spec(&self) -> GraphSpec {
        GraphSpec {
            colors: self.colors.clone(),
            edges: self.edges.clone(),
            rotations: self.rotations.clone(),
            outer_faces: self.outer_darts.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Clockwise incident edges of `v`.
    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotations
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.rotations[u]
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn finite_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.is_finite())
    }

    pub fn finite_face_count(&self) -> usize {
        self.finite_faces().count()
    }

    /// Ids of the infinite faces, one per component.
    pub fn infinite_faces(&self) -> Vec<FaceId> {
        self.outer_darts.iter().map(|&d| self.dart_face(d)).collect()
    }

    pub fn outer_darts(&self) -> &[Dart] {
        &self.outer_darts
    }

    pub(crate) fn dart_index(&self, d: Dart) -> usize {
        2 * d.edge + usize::from(self.edges[d.edge].0 != d.from)
    }

    /// The face on which `d` lies.
    pub fn dart_face(&self, d: Dart) -> FaceId {
        self.dart_face[self.dart_index(d)]
    }

    /// The two faces incident to edge `e` (equal for a bridge).
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        (self.dart_face[2 * e], self.dart_face[2 * e + 1])
    }

    pub fn reverse(&self, d: Dart) -> Dart {
        Dart {
            edge: d.edge,
            from: self.other_end(d.edge, d.from),
        }
    }

    /// The dart following `d` on its face.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let to = self.other_end(d.edge, d.from);
        let rev = self.dart_index(self.reverse(d));
        let rot = &self.rotations[to];
        let e = rot[(self.rotation_pos[rev] + 1) % rot.len()];
        Dart { edge: e, from: to }
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }

    /// Vertex sets of the connected components, in component order.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (v, &c) in self.component.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn is_k2(&self) -> bool {
        self.vertex_count() == 2 && self.edge_count() == 1
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count())
            .map(|v| self.neighbors(v).collect())
            .collect()
    }
}

fn simple_cycle(boundary: &[Dart]) -> Option<Vec<EdgeId>> {
    if boundary.len() < 3 {
        return None;
    }
    let mut verts: Vec<VertexId> = boundary.iter().map(|d| d.from).collect();
    verts.sort_unstable();
    if verts.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(boundary.iter().map(|d| d.edge).collect())
}

#[cfg(test)]
mod tests;
