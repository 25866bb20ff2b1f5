//! Purely structural queries: periphery, handles, adjacent triples and the
//! peripheral 2-coloring test.

use super::{Color, EdgeId, FaceId, PlaneBipartiteGraph, PlaneGraphError, VertexId};
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Location {
    Exterior,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub vertices: Vec<Location>,
    pub edges: Vec<Location>,
}

impl Classification {
    pub fn is_outerplane(&self) -> bool {
        self.vertices.iter().all(|l| *l == Location::Exterior)
    }

    pub fn interior_vertices(&self) -> Vec<VertexId> {
        (0..self.vertices.len())
            .filter(|&v| self.vertices[v] == Location::Interior)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HandleKind {
    Interior,
    Exterior,
    /// Edges of both kinds; cannot happen in a 2-connected plane graph.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Handle {
    pub path: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub kind: HandleKind,
}

impl Handle {
    pub fn length(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.len() == 1
    }

    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.path[0], *self.path.last().unwrap())
    }

    pub fn internal_vertices(&self) -> &[VertexId] {
        &self.path[1..self.path.len() - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "type", content = "handles")]
pub enum HandleDecomposition {
    Handles(Vec<Handle>),
    /// No vertex of degree at least 3: the whole graph is one cycle or path.
    /// A cycle is reported closed (first vertex repeated at the end).
    Whole(Handle),
}

impl HandleDecomposition {
    pub fn handles(&self) -> &[Handle] {
        match self {
            HandleDecomposition::Handles(h) => h,
            HandleDecomposition::Whole(h) => std::slice::from_ref(h),
        }
    }

    pub fn is_whole(&self) -> bool {
        matches!(self, HandleDecomposition::Whole(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleKind {
    Angular,
    Linear,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjacentTriple {
    /// `(s, s', s'')`; `s'` is the middle face and `s < s''`.
    pub faces: (FaceId, FaceId, FaceId),
    /// `e` shared by `s, s'` and `f` shared by `s', s''`.
    pub shared_edges: (EdgeId, EdgeId),
    pub line_distance: usize,
    pub kind: TripleKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeripheryEntry {
    pub vertex: VertexId,
    pub color: Color,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeripheralColoring {
    pub colorable: bool,
    /// The periphery in walk order; the witness of the verdict.
    pub periphery: Vec<PeripheryEntry>,
    pub failure: Option<String>,
}

impl PlaneBipartiteGraph {
    /// Tags vertices and edges as exterior (on the infinite face) or interior.
    pub fn classify(&self) -> Result<Classification, PlaneGraphError> {
        if !self.is_connected() {
            return Err(PlaneGraphError::Disconnected);
        }
        let mut vertices = vec![Location::Interior; self.vertex_count()];
        let mut edges = vec![Location::Interior; self.edge_count()];
        for f in self.infinite_faces() {
            for d in &self.face(f).boundary {
                vertices[d.from] = Location::Exterior;
                edges[d.edge] = Location::Exterior;
            }
        }
        Ok(Classification { vertices, edges })
    }

    pub fn is_outerplane(&self) -> Result<bool, PlaneGraphError> {
        Ok(self.classify()?.is_outerplane())
    }

    /// Connected, at least three vertices and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        is_biconnected(&self.adjacency())
    }

    /// Splits the graph into maximal paths whose internal vertices have degree 2.
    /// Path ends are the vertices of degree other than 2.
    pub fn handles(&self) -> Result<HandleDecomposition, PlaneGraphError> {
        let class = self.classify()?;
        let kind_of = |edges: &[EdgeId]| {
            let interior = edges
                .iter()
                .filter(|&&e| class.edges[e] == Location::Interior)
                .count();
            if interior == edges.len() {
                HandleKind::Interior
            } else if interior == 0 {
                HandleKind::Exterior
            } else {
                HandleKind::Mixed
            }
        };
        let n = self.vertex_count();
        if n == 0 {
            return Ok(HandleDecomposition::Handles(Vec::new()));
        }
        let branch: Vec<VertexId> = (0..n).filter(|&v| self.degree(v) >= 3).collect();
        if branch.is_empty() {
            // Cycle or path.
            let start = (0..n).find(|&v| self.degree(v) == 1).unwrap_or(0);
            let mut path = vec![start];
            let mut edges = Vec::new();
            let mut prev_edge = None;
            let mut cur = start;
            loop {
                let next = self
                    .rotation(cur)
                    .iter()
                    .copied()
                    .filter(|&e| Some(e) != prev_edge)
                    .min();
                let Some(e) = next else { break };
                if edges.contains(&e) {
                    break;
                }
                let w = self.other_end(e, cur);
                edges.push(e);
                path.push(w);
                prev_edge = Some(e);
                cur = w;
                if w == start {
                    break;
                }
            }
            let kind = kind_of(&edges);
            return Ok(HandleDecomposition::Whole(Handle { path, edges, kind }));
        }

        let mut used = vec![false; self.edge_count()];
        let mut out = Vec::new();
        let ends: Vec<VertexId> = (0..n).filter(|&v| self.degree(v) != 2).collect();
        for &start in &ends {
            for &first in self.rotation(start) {
                if used[first] {
                    continue;
                }
                let mut path = vec![start];
                let mut edges = vec![first];
                used[first] = true;
                let mut cur = self.other_end(first, start);
                let mut via = first;
                path.push(cur);
                while self.degree(cur) == 2 {
                    let e = self
                        .rotation(cur)
                        .iter()
                        .copied()
                        .find(|&x| x != via)
                        .expect("degree-2 vertex has two edges");
                    used[e] = true;
                    edges.push(e);
                    cur = self.other_end(e, cur);
                    via = e;
                    path.push(cur);
                }
                let kind = kind_of(&edges);
                if kind == HandleKind::Mixed {
                    log::warn!("handle {path:?} mixes interior and exterior edges");
                }
                out.push(Handle { path, edges, kind });
            }
        }
        Ok(HandleDecomposition::Handles(out))
    }

    /// Distance between two edges in the line graph, by breadth-first search
    /// over edges (two edges are adjacent when they share an endpoint).
    pub fn line_distance(&self, e: EdgeId, f: EdgeId) -> Option<usize> {
        let m = self.edge_count();
        let mut dist = vec![usize::MAX; m];
        dist[e] = 0;
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            if x == f {
                return Some(dist[x]);
            }
            let (a, b) = self.endpoints(x);
            for &y in self.rotation(a).iter().chain(self.rotation(b)) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// All adjacent triples of finite faces of a 2-connected outerplane graph.
    pub fn adjacent_triples(&self) -> Result<Vec<AdjacentTriple>, PlaneGraphError> {
        if !self.classify()?.is_outerplane() {
            return Err(PlaneGraphError::NotOuterplane);
        }
        if !self.is_two_connected() {
            return Err(PlaneGraphError::NotTwoConnected);
        }
        let mut out = Vec::new();
        for middle in self.finite_faces() {
            let shared: Vec<(EdgeId, FaceId)> = middle
                .boundary
                .iter()
                .filter_map(|d| {
                    let (a, b) = self.edge_faces(d.edge);
                    let other = if a == middle.id { b } else { a };
                    (other != middle.id && self.face(other).is_finite()).then_some((d.edge, other))
                })
                .collect();
            for (i, &(e1, s1)) in shared.iter().enumerate() {
                for &(e2, s2) in &shared[i + 1..] {
                    if s1 == s2 {
                        continue;
                    }
                    let ((e, s), (f, s2)) = if s1 < s2 {
                        ((e1, s1), (e2, s2))
                    } else {
                        ((e2, s2), (e1, s1))
                    };
                    let d = self.line_distance(e, f).expect("connected graph");
                    out.push(AdjacentTriple {
                        faces: (s, middle.id, s2),
                        shared_edges: (e, f),
                        line_distance: d,
                        kind: if d.is_multiple_of(2) {
                            TripleKind::Angular
                        } else {
                            TripleKind::Linear
                        },
                    });
                }
            }
        }
        out.sort_by_key(|t| (t.faces, t.shared_edges));
        Ok(out)
    }

    /// Peripheral 2-coloring test with the periphery as witness.
    ///
    /// With `verify_elementary` the graph is first checked to be elementary
    /// through perfect-matching enumeration.
    pub fn peripheral_coloring(
        &self,
        verify_elementary: bool,
    ) -> Result<PeripheralColoring, PlaneGraphError> {
        if self.is_k2() {
            return Err(PlaneGraphError::IsK2);
        }
        if verify_elementary
            && !crate::matching::is_elementary(self, crate::matching::Limit::default())?
        {
            return Err(PlaneGraphError::NotElementary);
        }
        let class = self.classify()?;
        let outer = self.infinite_faces()[0];
        let periphery: Vec<PeripheryEntry> = self
            .face(outer)
            .boundary
            .iter()
            .map(|d| PeripheryEntry {
                vertex: d.from,
                color: self.color(d.from),
                degree: self.degree(d.from),
            })
            .collect();
        let fail = |msg: String| {
            Ok(PeripheralColoring {
                colorable: false,
                periphery: periphery.clone(),
                failure: Some(msg),
            })
        };
        if let Some(v) = (0..self.vertex_count()).find(|&v| !(2..=3).contains(&self.degree(v))) {
            return fail(format!("vertex {v} has degree {}", self.degree(v)));
        }
        if let Some(v) = class
            .interior_vertices()
            .into_iter()
            .find(|&v| self.degree(v) == 3)
        {
            return fail(format!("degree-3 vertex {v} is interior"));
        }
        let branch: Vec<&PeripheryEntry> = periphery.iter().filter(|p| p.degree == 3).collect();
        for (i, p) in branch.iter().enumerate() {
            let q = branch[(i + 1) % branch.len()];
            if branch.len() > 1 && p.color == q.color {
                return fail(format!(
                    "consecutive degree-3 vertices {} and {} on the periphery are both {}",
                    p.vertex, q.vertex, p.color
                ));
            }
        }
        Ok(PeripheralColoring {
            colorable: true,
            periphery,
            failure: None,
        })
    }

    pub fn is_peripherally_2_colorable(&self) -> Result<bool, PlaneGraphError> {
        Ok(self.peripheral_coloring(true)?.colorable)
    }
}

/// Tarjan's low-point test: connected, at least 3 vertices, no cut vertex.
pub(crate) fn is_biconnected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n < 3 {
        return false;
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    // Iterative DFS: (vertex, parent, next neighbor index).
    let mut stack = vec![(0usize, usize::MAX, 0usize)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if *idx < adj[v].len() {
            let w = adj[v][*idx];
            *idx += 1;
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    disc.iter().all(|&d| d != usize::MAX) && root_children == 1
}
