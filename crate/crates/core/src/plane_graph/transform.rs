//! Local embedding edits: subdivision, smoothing, sub-embeddings and the
//! reduction of a peripherally 2-colorable graph to an outerplane one.

use super::{
    Dart, EdgeId, FaceId, GraphSpec, HandleDecomposition, HandleKind, PlaneBipartiteGraph,
    PlaneGraphError, UnionFind, VertexId,
};
use crate::bitset::BitSet;

/// A connected piece of a graph with its inherited embedding.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: PlaneBipartiteGraph,
    /// Original vertex id of each new vertex.
    pub vertices: Vec<VertexId>,
    /// Original edge id of each new edge.
    pub edges: Vec<EdgeId>,
}

impl Subgraph {
    pub fn map_edge_set(&self, original: &BitSet) -> BitSet {
        BitSet::from_positions(
            self.edges.len(),
            (0..self.edges.len()).filter(|&i| original.contains(self.edges[i])),
        )
    }
}

impl PlaneBipartiteGraph {
    /// Replaces edge `e` by a path through `k` new vertices. `k` must be even
    /// and positive so both original endpoints keep their colors.
    pub fn subdivide_edge(&self, e: EdgeId, k: usize) -> Result<Self, PlaneGraphError> {
        if e >= self.edge_count() {
            return Err(PlaneGraphError::NoSuchEdge(e));
        }
        if k == 0 || k % 2 == 1 {
            return Err(PlaneGraphError::OddSubdivision(k));
        }
        let mut spec = self.spec();
        let (u, v) = self.endpoints(e);
        let n = self.vertex_count();
        let m = self.edge_count();
        let mut color = self.color(u);
        for _ in 0..k {
            color = color.opposite();
            spec.colors.push(color);
        }
        // e keeps its id as the first segment; new segments get ids m..m+k.
        spec.edges[e] = (u, n);
        for i in 0..k {
            let a = n + i;
            let b = if i + 1 < k { n + i + 1 } else { v };
            spec.edges.push((a, b));
        }
        let last = m + k - 1;
        for slot in spec.rotations[v].iter_mut() {
            if *slot == e {
                *slot = last;
            }
        }
        for i in 0..k {
            let before = if i == 0 { e } else { m + i - 1 };
            spec.rotations.push(vec![before, m + i]);
        }
        for d in spec.outer_faces.iter_mut() {
            if d.edge == e && d.from == v {
                *d = Dart { edge: last, from: v };
            }
        }
        PlaneBipartiteGraph::from_spec(spec)
    }

    /// Smooths out two adjacent degree-2 vertices `v` and `w`: the path
    /// `a - v - w - b` becomes the single edge `a - b`. Smoothing a single
    /// vertex would join two vertices of the same color, so vertices go in pairs.
    pub fn smooth_vertex_pair(&self, v: VertexId, w: VertexId) -> Result<Self, PlaneGraphError> {
        for x in [v, w] {
            if x >= self.vertex_count() {
                return Err(PlaneGraphError::NoSuchVertex(x));
            }
            if self.degree(x) != 2 {
                return Err(PlaneGraphError::DegreeNot2(x));
            }
        }
        let e_vw = self
            .edge_between(v, w)
            .ok_or(PlaneGraphError::NotAdjacent(v, w))?;
        let e_av = *self.rotation(v).iter().find(|&&e| e != e_vw).unwrap();
        let e_wb = *self.rotation(w).iter().find(|&&e| e != e_vw).unwrap();
        let a = self.other_end(e_av, v);
        let b = self.other_end(e_wb, w);
        if a == b || self.edge_between(a, b).is_some() {
            return Err(PlaneGraphError::WouldCreateMultiEdge(a, b));
        }
        let path = [a, v, w, b];
        let path_edges = [e_av, e_vw, e_wb];

        let vertex_map = compaction(self.vertex_count(), |x| x != v && x != w);
        let edge_map = compaction(self.edge_count(), |e| e != e_vw && e != e_wb);
        let new_ab = edge_map[e_av].unwrap();

        let mut spec = GraphSpec::default();
        for x in 0..self.vertex_count() {
            if vertex_map[x].is_none() {
                continue;
            }
            spec.colors.push(self.color(x));
            let rot = self
                .rotation(x)
                .iter()
                .map(|&e| if e == e_wb { new_ab } else { edge_map[e].unwrap() })
                .collect();
            spec.rotations.push(rot);
        }
        for e in 0..self.edge_count() {
            if edge_map[e].is_none() {
                continue;
            }
            let (x, y) = if e == e_av { (a, b) } else { self.endpoints(e) };
            spec.edges.push((vertex_map[x].unwrap(), vertex_map[y].unwrap()));
        }
        for &d in self.outer_darts() {
            let mapped = if let Some(i) = path_edges.iter().position(|&pe| pe == d.edge) {
                let from = if d.from == path[i] { a } else { b };
                Dart {
                    edge: new_ab,
                    from: vertex_map[from].unwrap(),
                }
            } else {
                Dart {
                    edge: edge_map[d.edge].unwrap(),
                    from: vertex_map[d.from].unwrap(),
                }
            };
            spec.outer_faces.push(mapped);
        }
        PlaneBipartiteGraph::from_spec(spec)
    }

    /// Connected components of the spanning subgraph on the edges in `keep`,
    /// each with the embedding it inherits. The infinite face of a piece is the
    /// region that contains the infinite face of `self`.
    pub fn edge_subgraph_components(
        &self,
        keep: &BitSet,
    ) -> Result<Vec<Subgraph>, PlaneGraphError> {
        let n = self.vertex_count();
        let mut uf = UnionFind::new(n);
        for e in keep.iter() {
            let (u, v) = self.endpoints(e);
            uf.union(u, v);
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<VertexId>> = Default::default();
        for v in 0..n {
            if !self.rotation(v).iter().any(|&e| keep.contains(e)) {
                return Err(PlaneGraphError::IsolatedVertex(v));
            }
            groups.entry(uf.find(v)).or_default().push(v);
        }
        let mut pieces: Vec<Vec<VertexId>> = groups.into_values().collect();
        pieces.sort_by_key(|p| p[0]);

        let infinite = self.infinite_faces();
        let mut out = Vec::new();
        for verts in pieces {
            let mut new_id = vec![usize::MAX; n];
            for (i, &v) in verts.iter().enumerate() {
                new_id[v] = i;
            }
            let piece_edges: Vec<EdgeId> = keep
                .iter()
                .filter(|&e| new_id[self.endpoints(e).0] != usize::MAX)
                .collect();
            let mut new_edge = vec![usize::MAX; self.edge_count()];
            for (i, &e) in piece_edges.iter().enumerate() {
                new_edge[e] = i;
            }

            // Faces of self merge across every edge outside the piece.
            let mut regions = UnionFind::new(self.faces().len());
            for w in infinite.windows(2) {
                regions.union(w[0], w[1]);
            }
            for e in 0..self.edge_count() {
                if new_edge[e] == usize::MAX {
                    let (f1, f2) = self.edge_faces(e);
                    regions.union(f1, f2);
                }
            }
            let outer_region = regions.find(infinite[0]);
            let hint = piece_edges
                .iter()
                .flat_map(|&e| {
                    let (a, b) = self.endpoints(e);
                    [Dart { edge: e, from: a }, Dart { edge: e, from: b }]
                })
                .find(|&d| regions.find(self.dart_face(d)) == outer_region)
                .expect("every piece touches the outer region");

            let spec = GraphSpec {
                colors: verts.iter().map(|&v| self.color(v)).collect(),
                edges: piece_edges
                    .iter()
                    .map(|&e| {
                        let (a, b) = self.endpoints(e);
                        (new_id[a], new_id[b])
                    })
                    .collect(),
                rotations: verts
                    .iter()
                    .map(|&v| {
                        self.rotation(v)
                            .iter()
                            .filter(|&&e| new_edge[e] != usize::MAX)
                            .map(|&e| new_edge[e])
                            .collect()
                    })
                    .collect(),
                outer_faces: vec![Dart {
                    edge: new_edge[hint.edge],
                    from: new_id[hint.from],
                }],
            };
            out.push(Subgraph {
                graph: PlaneBipartiteGraph::from_spec(spec)?,
                vertices: verts,
                edges: piece_edges,
            });
        }
        Ok(out)
    }

    /// Edge sets of the finite faces of the spanning subgraph on `keep`.
    ///
    /// Faces of the subgraph are unions of faces of `self` glued across
    /// deleted edges; this also handles pieces nested inside faces of other pieces.
    pub fn finite_face_edge_sets_after_deletion(&self, keep: &BitSet) -> Vec<BitSet> {
        let infinite = self.infinite_faces();
        let mut regions = UnionFind::new(self.faces().len());
        for w in infinite.windows(2) {
            regions.union(w[0], w[1]);
        }
        for e in 0..self.edge_count() {
            if !keep.contains(e) {
                let (f1, f2) = self.edge_faces(e);
                regions.union(f1, f2);
            }
        }
        let outer = if infinite.is_empty() {
            usize::MAX
        } else {
            regions.find(infinite[0])
        };
        let mut sets: std::collections::BTreeMap<usize, BitSet> = Default::default();
        for e in keep.iter() {
            let (f1, f2) = self.edge_faces(e);
            for f in [f1, f2] {
                let r = regions.find(f);
                if r != outer {
                    sets.entry(r)
                        .or_insert_with(|| BitSet::new(self.edge_count()))
                        .insert(e);
                }
            }
        }
        sets.into_values().collect()
    }

    /// Contracts every interior nontrivial handle to one interior edge,
    /// first subdividing the exterior edge between its ends when they are
    /// adjacent. The result is outerplane with the same finite faces, and the
    /// returned map carries perfect matchings across.
    pub fn outerplanarize(&self) -> Result<Outerplanarization, PlaneGraphError> {
        if !self.peripheral_coloring(true)?.colorable {
            return Err(PlaneGraphError::NotPeripherally2Colorable);
        }
        let handles = match self.handles()? {
            HandleDecomposition::Handles(h) => h,
            HandleDecomposition::Whole(_) => Vec::new(),
        };
        let interior: Vec<_> = handles
            .into_iter()
            .filter(|h| h.kind == HandleKind::Interior && !h.is_trivial())
            .collect();
        if interior.iter().any(|h| h.length() % 2 == 0) {
            return Err(PlaneGraphError::NotPeripherally2Colorable);
        }

        let n = self.vertex_count();
        let m = self.edge_count();
        let mut dropped_vertex = vec![false; n];
        let mut dropped_edge = vec![false; m];
        // For each handle: (first edge slot, u, v).
        let mut contracted = Vec::new();
        let mut subdivided: Vec<EdgeId> = Vec::new();
        for h in &interior {
            for &x in h.internal_vertices() {
                dropped_vertex[x] = true;
            }
            for &e in &h.edges[1..] {
                dropped_edge[e] = true;
            }
            let (u, v) = h.ends();
            if let Some(g) = self.edge_between(u, v) {
                subdivided.push(g);
            }
            contracted.push((h.edges[0], u, v));
        }
        let vertex_map = compaction(n, |x| !dropped_vertex[x]);
        let edge_map = compaction(m, |e| !dropped_edge[e]);
        let kept_vertices = vertex_map.iter().filter(|x| x.is_some()).count();
        let kept_edges = edge_map.iter().filter(|x| x.is_some()).count();

        let mut spec = GraphSpec::default();
        for x in 0..n {
            if !dropped_vertex[x] {
                spec.colors.push(self.color(x));
            }
        }
        for e in 0..m {
            if dropped_edge[e] {
                continue;
            }
            let (a, b) = match contracted.iter().find(|c| c.0 == e) {
                Some(&(_, u, v)) => (u, v),
                None => self.endpoints(e),
            };
            spec.edges.push((vertex_map[a].unwrap(), vertex_map[b].unwrap()));
        }
        // Subdivision of g = (a, b): slot of g becomes (a, w1); then (w1, w2), (w2, b).
        let mut tail_edge = vec![usize::MAX; m];
        let mut expansions = Vec::new();
        for (i, &g) in subdivided.iter().enumerate() {
            let (a, b) = self.endpoints(g);
            let w1 = kept_vertices + 2 * i;
            let w2 = w1 + 1;
            spec.colors.push(self.color(a).opposite());
            spec.colors.push(self.color(a));
            let slot = edge_map[g].unwrap();
            spec.edges[slot] = (vertex_map[a].unwrap(), w1);
            let mid = kept_edges + 2 * i;
            let tail = mid + 1;
            spec.edges.push((w1, w2));
            spec.edges.push((w2, vertex_map[b].unwrap()));
            tail_edge[g] = tail;
            expansions.push((g, vec![slot, mid, tail]));
        }
        let mut handle_of_edge = vec![usize::MAX; m];
        for (i, h) in interior.iter().enumerate() {
            for &e in &h.edges {
                handle_of_edge[e] = i;
            }
        }
        for x in 0..n {
            if dropped_vertex[x] {
                continue;
            }
            // A handle edge at a kept vertex is an end edge of that handle.
            let rot = self
                .rotation(x)
                .iter()
                .map(|&e| {
                    if handle_of_edge[e] != usize::MAX {
                        edge_map[interior[handle_of_edge[e]].edges[0]].unwrap()
                    } else if tail_edge[e] != usize::MAX && self.endpoints(e).1 == x {
                        tail_edge[e]
                    } else {
                        edge_map[e].unwrap()
                    }
                })
                .collect();
            spec.rotations.push(rot);
        }
        for (i, &g) in subdivided.iter().enumerate() {
            let slot = edge_map[g].unwrap();
            let mid = kept_edges + 2 * i;
            spec.rotations.push(vec![slot, mid]);
            spec.rotations.push(vec![mid, tail_edge[g]]);
        }

        let map_dart = |d: Dart| -> Dart {
            if handle_of_edge[d.edge] != usize::MAX {
                let h = &interior[handle_of_edge[d.edge]];
                let i = h.edges.iter().position(|&e| e == d.edge).unwrap();
                let forward = h.path[i] == d.from;
                let (u, v) = h.ends();
                return Dart {
                    edge: edge_map[h.edges[0]].unwrap(),
                    from: vertex_map[if forward { u } else { v }].unwrap(),
                };
            }
            if tail_edge[d.edge] != usize::MAX && self.endpoints(d.edge).1 == d.from {
                return Dart {
                    edge: tail_edge[d.edge],
                    from: vertex_map[d.from].unwrap(),
                };
            }
            Dart {
                edge: edge_map[d.edge].unwrap(),
                from: vertex_map[d.from].unwrap(),
            }
        };
        spec.outer_faces = self.outer_darts().iter().map(|&d| map_dart(d)).collect();
        let graph = PlaneBipartiteGraph::from_spec(spec)?;

        let face_map: Vec<FaceId> = self
            .faces()
            .iter()
            .map(|f| {
                let image = graph.dart_face(map_dart(f.boundary[0]));
                debug_assert!(f
                    .boundary
                    .iter()
                    .all(|&d| graph.dart_face(map_dart(d)) == image));
                image
            })
            .collect();
        let kept = (0..m)
            .filter(|&e| {
                !dropped_edge[e]
                    && !contracted.iter().any(|c| c.0 == e)
                    && !subdivided.contains(&e)
            })
            .map(|e| (e, edge_map[e].unwrap()))
            .collect();
        let contractions = interior
            .iter()
            .map(|h| (h.edges.clone(), edge_map[h.edges[0]].unwrap()))
            .collect();
        let map = MatchingMap {
            source_edges: m,
            target_edges: graph.edge_count(),
            kept,
            contractions,
            expansions,
            face_map,
        };
        Ok(Outerplanarization { graph, map })
    }
}

/// Old index to new index after dropping the entries rejected by `keep`.
fn compaction(len: usize, keep: impl Fn(usize) -> bool) -> Vec<Option<usize>> {
    let mut next = 0;
    (0..len)
        .map(|i| {
            keep(i).then(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Outerplanarization {
    pub graph: PlaneBipartiteGraph,
    pub map: MatchingMap,
}

/// The bijection between perfect matchings of a graph and of its
/// outerplanarization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingMap {
    source_edges: usize,
    target_edges: usize,
    /// Unchanged edges, old id to new id.
    pub kept: Vec<(EdgeId, EdgeId)>,
    /// Interior handle edges and the single edge replacing them.
    pub contractions: Vec<(Vec<EdgeId>, EdgeId)>,
    /// Exterior edge and the odd path of length 3 replacing it.
    pub expansions: Vec<(EdgeId, Vec<EdgeId>)>,
    /// Image of every face of the source graph.
    pub face_map: Vec<FaceId>,
}

impl MatchingMap {
    pub fn is_identity(&self) -> bool {
        self.contractions.is_empty() && self.expansions.is_empty()
    }

    /// Maps an edge set of the source graph that is a perfect matching.
    pub fn apply(&self, matching: &BitSet) -> BitSet {
        assert_eq!(matching.len(), self.source_edges);
        let mut out = BitSet::new(self.target_edges);
        for &(old, new) in &self.kept {
            if matching.contains(old) {
                out.insert(new);
            }
        }
        for (path, new) in &self.contractions {
            if matching.contains(path[0]) {
                out.insert(*new);
            }
        }
        for (old, path) in &self.expansions {
            if matching.contains(*old) {
                out.insert(path[0]);
                out.insert(path[2]);
            } else {
                out.insert(path[1]);
            }
        }
        out
    }
}
