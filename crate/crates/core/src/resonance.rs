//! The resonance graph: perfect matchings joined when their symmetric
//! difference is the periphery of one finite face, labeled by that face.

use crate::bitset::BitSet;
use crate::cube::SimpleGraph;
use crate::matching::{
    enumerate_perfect_matchings, is_perfect_matching, resonant_faces, Limit, Matching,
    MatchingError,
};
use crate::plane_graph::{FaceId, PlaneBipartiteGraph};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ResonanceEdge {
    pub a: usize,
    pub b: usize,
    pub face: FaceId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceGraph {
    /// Perfect matchings, sorted; a vertex is its index here.
    pub vertices: Vec<Matching>,
    /// Sorted by `(a, b)` with `a < b`.
    pub edges: Vec<ResonanceEdge>,
}

/// Neighbors of `m` are `m ⊕ E(s)` over the `m`-resonant finite faces `s`,
/// so no pair of matchings is ever compared.
pub fn build_resonance_graph(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<ResonanceGraph, MatchingError> {
    let vertices = enumerate_perfect_matchings(g, limit)?;
    if vertices.is_empty() {
        return Err(MatchingError::NoPerfectMatching);
    }
    let index: HashMap<&BitSet, usize> =
        vertices.iter().enumerate().map(|(i, m)| (m.edges(), i)).collect();
    let mut edges: Vec<ResonanceEdge> = vertices
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, m)| {
            let index = &index;
            resonant_faces(g, m).into_iter().filter_map(move |s| {
                let flipped = m.edges().xor(&g.face(s).edge_set);
                let j = *index.get(&flipped).expect("flipping a resonant face gives a perfect matching");
                (i < j).then_some(ResonanceEdge { a: i, b: j, face: s })
            })
        })
        .collect();
    edges.sort();
    edges.dedup_by_key(|e| (e.a, e.b));
    Ok(ResonanceGraph { vertices, edges })
}

impl ResonanceGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Face-labeled simple graph on the same vertex indices.
    pub fn to_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::with_labels(
            self.vertices.len(),
            self.edges.iter().map(|e| (e.a, e.b)).collect(),
            self.edges.iter().map(|e| e.face).collect(),
        )
        .expect("resonance edges are simple")
    }

    pub fn component_count(&self) -> usize {
        let mut uf = crate::plane_graph::UnionFind::new(self.vertices.len());
        let mut count = self.vertices.len();
        for e in &self.edges {
            if uf.union(e.a, e.b) {
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.vertices.binary_search(m).ok()
    }

    /// Distinct face labels in use, ascending.
    pub fn face_labels(&self) -> Vec<FaceId> {
        let mut labels: Vec<FaceId> = self.edges.iter().map(|e| e.face).collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "face", rename_all = "snake_case")]
pub enum SymmetricDifference {
    Empty,
    SingleFacePeriphery(FaceId),
    SingleOtherCycle,
    MultipleCycles,
}

/// Splits `m1 ⊕ m2` into its cycles and says whether it is one finite-face
/// periphery, i.e. whether `m1 m2` is an edge of the resonance graph.
pub fn classify_symmetric_difference(
    g: &PlaneBipartiteGraph,
    m1: &Matching,
    m2: &Matching,
) -> Result<SymmetricDifference, MatchingError> {
    for (name, m) in [("first", m1), ("second", m2)] {
        if m.edges().len() != g.edge_count() || !is_perfect_matching(g, m.edges()) {
            return Err(MatchingError::HostMismatch(format!(
                "{name} matching is not a perfect matching of this graph"
            )));
        }
    }
    let diff = m1.symmetric_difference(m2);
    if diff.is_empty() {
        return Ok(SymmetricDifference::Empty);
    }
    let mut uf = crate::plane_graph::UnionFind::new(g.vertex_count());
    let mut touched = Vec::new();
    for e in diff.iter() {
        let (u, v) = g.endpoints(e);
        uf.union(u, v);
        touched.push(u);
    }
    let root = uf.find(touched[0]);
    if touched.iter().any(|&v| uf.find(v) != root) {
        return Ok(SymmetricDifference::MultipleCycles);
    }
    Ok(g.finite_faces()
        .find(|f| f.edge_set == diff)
        .map_or(SymmetricDifference::SingleOtherCycle, |f| {
            SymmetricDifference::SingleFacePeriphery(f.id)
        }))
}

#[cfg(test)]
mod tests;
