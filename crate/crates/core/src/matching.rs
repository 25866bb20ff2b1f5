//! Perfect matchings and everything derived from them: allowed and forbidden
//! edges, elementary components, resonant faces and the Fries number.

use crate::bitset::BitSet;
use crate::plane_graph::{
    Color, EdgeId, FaceId, PlaneBipartiteGraph, PlaneGraphError, Subgraph, VertexId,
};
use itertools::Itertools;
use std::collections::VecDeque;
use thiserror::Error;

/// Cap on the number of perfect matchings any enumeration may produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limit(pub usize);

impl Limit {
    pub const DEFAULT: Limit = Limit(1 << 20);
}

impl Default for Limit {
    fn default() -> Self {
        Limit::DEFAULT
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("more than {limit} perfect matchings")]
    LimitExceeded { limit: usize },
    #[error("matching does not belong to this graph: {0}")]
    HostMismatch(String),
}

/// A perfect matching, stored as a bit set over the host's edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: BitSet,
}

impl Matching {
    /// Checks that `edges` is a perfect matching of `g`.
    pub fn new(g: &PlaneBipartiteGraph, edges: BitSet) -> Result<Self, MatchingError> {
        if edges.len() != g.edge_count() {
            return Err(MatchingError::HostMismatch(format!(
                "edge set of width {} for a graph with {} edges",
                edges.len(),
                g.edge_count()
            )));
        }
        if !is_perfect_matching(g, &edges) {
            return Err(MatchingError::HostMismatch(
                "edge set is not a perfect matching".into(),
            ));
        }
        Ok(Matching { edges })
    }

    pub fn from_edge_ids(g: &PlaneBipartiteGraph, ids: &[EdgeId]) -> Result<Self, MatchingError> {
        if let Some(&bad) = ids.iter().find(|&&e| e >= g.edge_count()) {
            return Err(MatchingError::HostMismatch(format!("no edge {bad}")));
        }
        Matching::new(g, BitSet::from_positions(g.edge_count(), ids.iter().copied()))
    }

    pub(crate) fn from_bits(edges: BitSet) -> Self {
        Matching { edges }
    }

    pub fn edges(&self) -> &BitSet {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(e)
    }

    /// Sorted edge ids; the serialized form of a matching.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.to_vec()
    }

    pub fn symmetric_difference(&self, other: &Matching) -> BitSet {
        self.edges.xor(&other.edges)
    }
}

pub fn is_perfect_matching(g: &PlaneBipartiteGraph, edges: &BitSet) -> bool {
    let mut covered = vec![0u8; g.vertex_count()];
    for e in edges.iter() {
        let (u, v) = g.endpoints(e);
        covered[u] += 1;
        covered[v] += 1;
    }
    covered.iter().all(|&c| c == 1)
}

struct Enumerator<'a> {
    g: &'a PlaneBipartiteGraph,
    vertices: &'a [VertexId],
    covered: Vec<bool>,
    chosen: Vec<EdgeId>,
    found: Vec<Vec<EdgeId>>,
    limit: usize,
}

impl Enumerator<'_> {
    fn available(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.g
            .rotation(v)
            .iter()
            .copied()
            .filter(move |&e| !self.covered[self.g.other_end(e, v)])
    }

    fn take(&mut self, e: EdgeId) {
        let (u, v) = self.g.endpoints(e);
        self.covered[u] = true;
        self.covered[v] = true;
        self.chosen.push(e);
    }

    fn untake(&mut self) {
        let e = self.chosen.pop().unwrap();
        let (u, v) = self.g.endpoints(e);
        self.covered[u] = false;
        self.covered[v] = false;
    }

    fn search(&mut self) -> Result<(), MatchingError> {
        // Forced-edge propagation: an uncovered vertex with one option takes it.
        let mut forced = 0;
        let dead = loop {
            let mut progress = false;
            let mut dead = false;
            for i in 0..self.vertices.len() {
                let v = self.vertices[i];
                if self.covered[v] {
                    continue;
                }
                let pair = {
                    let mut options = self.available(v);
                    (options.next(), options.next())
                };
                match pair {
                    (None, _) => {
                        dead = true;
                        break;
                    }
                    (Some(e), None) => {
                        self.take(e);
                        forced += 1;
                        progress = true;
                    }
                    _ => {}
                }
            }
            if dead || !progress {
                break dead;
            }
        };
        if !dead {
            match self.vertices.iter().copied().find(|&v| !self.covered[v]) {
                None => {
                    if self.found.len() == self.limit {
                        return Err(MatchingError::LimitExceeded { limit: self.limit });
                    }
                    self.found.push(self.chosen.clone());
                }
                Some(v) => {
                    let mut options: Vec<EdgeId> = self.available(v).collect();
                    options.sort_unstable();
                    for e in options {
                        self.take(e);
                        let r = self.search();
                        self.untake();
                        r?;
                    }
                }
            }
        }
        for _ in 0..forced {
            self.untake();
        }
        Ok(())
    }
}

fn enumerate_component(
    g: &PlaneBipartiteGraph,
    vertices: &[VertexId],
    limit: usize,
) -> Result<Vec<Vec<EdgeId>>, MatchingError> {
    let black = vertices.iter().filter(|&&v| g.color(v) == Color::Black).count();
    if 2 * black != vertices.len() {
        return Ok(Vec::new());
    }
    let mut en = Enumerator {
        g,
        vertices,
        covered: vec![false; g.vertex_count()],
        chosen: Vec::new(),
        found: Vec::new(),
        limit,
    };
    en.search()?;
    Ok(en.found)
}

/// All perfect matchings, each once, sorted by their edge-id arrays.
///
/// Backtracks on the lowest uncovered vertex with forced-edge propagation,
/// one connected component at a time; the per-component lists are combined
/// as a Cartesian product.
pub fn enumerate_perfect_matchings(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<Vec<Matching>, MatchingError> {
    let mut per_component = Vec::new();
    let mut total: usize = 1;
    for comp in g.components() {
        let list = enumerate_component(g, &comp, limit.0)?;
        if list.is_empty() {
            return Ok(Vec::new());
        }
        total = total.saturating_mul(list.len());
        per_component.push(list);
    }
    if total > limit.0 {
        return Err(MatchingError::LimitExceeded { limit: limit.0 });
    }
    let mut acc: Vec<BitSet> = vec![BitSet::new(g.edge_count())];
    for list in per_component {
        let mut next = Vec::with_capacity(acc.len() * list.len());
        for base in &acc {
            for part in &list {
                let mut m = base.clone();
                for &e in part {
                    m.insert(e);
                }
                next.push(m);
            }
        }
        acc = next;
    }
    acc.sort();
    Ok(acc.into_iter().map(Matching::from_bits).collect())
}

/// Edges contained in some perfect matching: the union of all of them.
pub fn allowed_edges(g: &PlaneBipartiteGraph, limit: Limit) -> Result<BitSet, MatchingError> {
    let all = enumerate_perfect_matchings(g, limit)?;
    if all.is_empty() {
        return Err(MatchingError::NoPerfectMatching);
    }
    let mut union = BitSet::new(g.edge_count());
    for m in &all {
        union.union_with(m.edges());
    }
    Ok(union)
}

/// Perfect matching of the vertices not in `blocked`, by augmenting paths
/// from black to white; `mate_edge[v]` is the matched edge at `v`.
fn kuhn(g: &PlaneBipartiteGraph, blocked: &[bool]) -> Option<Vec<Option<EdgeId>>> {
    let n = g.vertex_count();
    let mut mate_edge: Vec<Option<EdgeId>> = vec![None; n];

    fn augment(
        g: &PlaneBipartiteGraph,
        b: VertexId,
        blocked: &[bool],
        seen: &mut [bool],
        mate_edge: &mut [Option<EdgeId>],
    ) -> bool {
        for &e in g.rotation(b) {
            let w = g.other_end(e, b);
            if seen[w] || blocked[w] {
                continue;
            }
            seen[w] = true;
            let free = match mate_edge[w] {
                None => true,
                Some(me) => augment(g, g.other_end(me, w), blocked, seen, mate_edge),
            };
            if free {
                mate_edge[w] = Some(e);
                mate_edge[b] = Some(e);
                return true;
            }
        }
        false
    }

    for b in (0..n).filter(|&v| g.color(v) == Color::Black && !blocked[v]) {
        let mut seen = vec![false; n];
        if !augment(g, b, blocked, &mut seen, &mut mate_edge) {
            return None;
        }
    }
    (0..n)
        .all(|v| blocked[v] || mate_edge[v].is_some())
        .then_some(mate_edge)
}

/// Some perfect matching, found by augmenting paths.
pub fn find_perfect_matching(g: &PlaneBipartiteGraph) -> Option<Matching> {
    let mate_edge = kuhn(g, &vec![false; g.vertex_count()])?;
    let edges = BitSet::from_positions(g.edge_count(), mate_edge.into_iter().flatten());
    Some(Matching::from_bits(edges))
}

/// Allowed edges without enumeration: with one perfect matching `M`, an
/// edge outside `M` is allowed iff it lies on an `M`-alternating cycle.
/// Unmatched edges are directed black to white and matched edges white to
/// black; `bw` is then allowed iff `w` reaches `b`.
pub fn allowed_edges_by_alternating_cycles(
    g: &PlaneBipartiteGraph,
) -> Result<BitSet, MatchingError> {
    let m = find_perfect_matching(g).ok_or(MatchingError::NoPerfectMatching)?;
    let n = g.vertex_count();
    let successors = |v: VertexId| -> Vec<VertexId> {
        g.rotation(v)
            .iter()
            .filter(|&&e| m.contains(e) == (g.color(v) == Color::White))
            .map(|&e| g.other_end(e, v))
            .collect()
    };
    let succ: Vec<Vec<VertexId>> = (0..n).map(successors).collect();
    let mut reach_cache: Vec<Option<BitSet>> = vec![None; n];
    let mut allowed = m.edges().clone();
    for e in 0..g.edge_count() {
        if m.contains(e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let (b, w) = if g.color(u) == Color::Black { (u, v) } else { (v, u) };
        let reach = reach_cache[w].get_or_insert_with(|| {
            let mut seen = BitSet::new(n);
            seen.insert(w);
            let mut queue = VecDeque::from([w]);
            while let Some(x) = queue.pop_front() {
                for &y in &succ[x] {
                    if !seen.contains(y) {
                        seen.insert(y);
                        queue.push_back(y);
                    }
                }
            }
            seen
        });
        if reach.contains(b) {
            allowed.insert(e);
        }
    }
    Ok(allowed)
}

pub fn forbidden_edges(g: &PlaneBipartiteGraph, limit: Limit) -> Result<BitSet, MatchingError> {
    let allowed = allowed_edges(g, limit)?;
    Ok(BitSet::from_positions(
        g.edge_count(),
        (0..g.edge_count()).filter(|&e| !allowed.contains(e)),
    ))
}

#[derive(Clone, Debug)]
pub struct ElementaryDecomposition {
    pub forbidden_edges: BitSet,
    /// Components after deleting forbidden edges, with inherited embeddings.
    pub components: Vec<Subgraph>,
    pub weakly_elementary: bool,
    pub k2_components: usize,
}

/// Deletes forbidden edges and packages what remains.
///
/// The graph is weakly elementary iff every finite face of the remainder has
/// the edge set of some finite face of `g`.
pub fn elementary_decomposition(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<ElementaryDecomposition, PlaneGraphError> {
    let allowed = allowed_edges(g, limit)?;
    let forbidden = BitSet::from_positions(
        g.edge_count(),
        (0..g.edge_count()).filter(|&e| !allowed.contains(e)),
    );
    let components = g.edge_subgraph_components(&allowed)?;
    let original: std::collections::HashSet<&BitSet> =
        g.finite_faces().map(|f| &f.edge_set).collect();
    let weakly_elementary = g
        .finite_face_edge_sets_after_deletion(&allowed)
        .iter()
        .all(|s| original.contains(s));
    let k2_components = components.iter().filter(|c| c.graph.is_k2()).count();
    Ok(ElementaryDecomposition {
        forbidden_edges: forbidden,
        components,
        weakly_elementary,
        k2_components,
    })
}

pub fn is_weakly_elementary(g: &PlaneBipartiteGraph, limit: Limit) -> Result<bool, PlaneGraphError> {
    Ok(elementary_decomposition(g, limit)?.weakly_elementary)
}

/// Connected with every edge allowed.
pub fn is_elementary(g: &PlaneBipartiteGraph, limit: Limit) -> Result<bool, MatchingError> {
    let allowed = allowed_edges(g, limit)?;
    let elementary = g.is_connected() && allowed.count() == g.edge_count();
    if g.vertex_count() > 2 {
        debug_assert_eq!(
            elementary,
            g.is_connected() && all_faces_resonant(g, limit)?,
            "face-resonance characterization disagrees"
        );
        debug_assert!(!elementary || g.is_two_connected());
    }
    Ok(elementary)
}

/// Whether every face, the infinite one included, is resonant under some
/// perfect matching.
pub fn all_faces_resonant(g: &PlaneBipartiteGraph, limit: Limit) -> Result<bool, MatchingError> {
    let all = enumerate_perfect_matchings(g, limit)?;
    if all.is_empty() {
        return Err(MatchingError::NoPerfectMatching);
    }
    Ok(g
        .faces()
        .iter()
        .all(|f| all.iter().any(|m| is_face_resonant(g, f.id, m))))
}

/// The face's periphery is a cycle alternating in and out of `m`.
pub fn is_face_resonant(g: &PlaneBipartiteGraph, face: FaceId, m: &Matching) -> bool {
    match g.face(face).cycle_edges() {
        Some(cycle) => (0..cycle.len())
            .all(|i| m.contains(cycle[i]) != m.contains(cycle[(i + 1) % cycle.len()])),
        None => false,
    }
}

/// Finite faces that are `m`-resonant, ascending.
pub fn resonant_faces(g: &PlaneBipartiteGraph, m: &Matching) -> Vec<FaceId> {
    g.finite_faces()
        .filter(|f| is_face_resonant(g, f.id, m))
        .map(|f| f.id)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriesNumber {
    pub value: usize,
    /// First matching (in enumeration order) attaining the value.
    pub witness: Matching,
}

/// Maximum over perfect matchings of the number of resonant finite faces.
pub fn fries_number(g: &PlaneBipartiteGraph, limit: Limit) -> Result<FriesNumber, MatchingError> {
    let all = enumerate_perfect_matchings(g, limit)?;
    let mut best: Option<(usize, &Matching)> = None;
    for m in &all {
        let count = resonant_faces(g, m).len();
        if best.is_none_or(|(b, _)| count > b) {
            best = Some((count, m));
        }
    }
    let (value, witness) = best.ok_or(MatchingError::NoPerfectMatching)?;
    Ok(FriesNumber {
        value,
        witness: witness.clone(),
    })
}

pub const SUBSET_FACE_LIMIT: usize = 12;

/// The Fries number computed over face sets instead of matchings: the
/// largest set of finite faces that one perfect matching makes resonant.
///
/// A set is feasible iff one alternating half of each face cycle can be
/// chosen so that the halves together form a matching (faces sharing an
/// edge must agree on it) and the uncovered
/// vertices still have a perfect matching. Sets are tried largest first.
pub fn fries_number_by_face_subsets(g: &PlaneBipartiteGraph) -> Result<usize, MatchingError> {
    let n = g.vertex_count();
    if kuhn(g, &vec![false; n]).is_none() {
        return Err(MatchingError::NoPerfectMatching);
    }
    let finite = g.finite_face_count();
    if finite > SUBSET_FACE_LIMIT {
        return Err(MatchingError::LimitExceeded {
            limit: SUBSET_FACE_LIMIT,
        });
    }
    let cycles: Vec<&[EdgeId]> = g.finite_faces().filter_map(|f| f.cycle_edges()).collect();
    let feasible = |subset: &[usize]| -> bool {
        (0u32..1 << subset.len()).any(|halves| {
            let mut mate: Vec<Option<EdgeId>> = vec![None; n];
            for (k, &i) in subset.iter().enumerate() {
                let parity = ((halves >> k) & 1) as usize;
                for &e in cycles[i].iter().skip(parity).step_by(2) {
                    let (u, v) = g.endpoints(e);
                    for x in [u, v] {
                        match mate[x] {
                            Some(f) if f != e => return false,
                            _ => mate[x] = Some(e),
                        }
                    }
                }
            }
            let covered: Vec<bool> = mate.iter().map(Option::is_some).collect();
            kuhn(g, &covered).is_some()
        })
    };
    for size in (1..=cycles.len()).rev() {
        if (0..cycles.len()).combinations(size).any(|s| feasible(&s)) {
            return Ok(size);
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests;
