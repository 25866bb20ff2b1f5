//! Graphs on the cube side: distances, the Djoković–Winkler relation,
//! partial-cube embeddings, median and daisy-cube tests, Cartesian products,
//! isomorphism and the standard cube families.

mod embedding;
mod iso;

pub use embedding::{
    daisy_diagnosis, is_daisy_cube, is_daisy_cube_with, is_median_graph, is_partial_cube,
    theta_partition, CubeEmbedding, DaisyCertificate, DaisyOptions, DaisyVerdict, NotDaisyReason,
    MEDIAN_LIMIT,
};
pub use iso::{is_isomorphic, is_isomorphic_with, IsoOptions, ISO_LIMIT};

use rayon::prelude::*;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("{what}: size {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid graph: {0}")]
    Invalid(String),
}

/// Undirected simple graph with indexed edges and optional edge labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    /// `(neighbor, edge id)` pairs sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, CubeError> {
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(CubeError::Invalid(format!("edge {e} has endpoint out of range")));
            }
            if u == v {
                return Err(CubeError::Invalid(format!("edge {e} is a loop")));
            }
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(CubeError::Invalid(format!("parallel edges at vertex {v}")));
            }
        }
        Ok(SimpleGraph {
            adj,
            edges,
            labels: None,
        })
    }

    pub fn with_labels(
        n: usize,
        edges: Vec<(usize, usize)>,
        labels: Vec<usize>,
    ) -> Result<Self, CubeError> {
        if labels.len() != edges.len() {
            return Err(CubeError::Invalid("one label per edge required".into()));
        }
        let mut g = SimpleGraph::new(n, edges)?;
        g.labels = Some(labels);
        Ok(g)
    }

    /// The one-vertex graph.
    pub fn k1() -> Self {
        SimpleGraph::new(1, Vec::new()).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge id)` pairs at `v`, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    pub fn label(&self, e: usize) -> Option<usize> {
        self.labels.as_ref().map(|l| l[e])
    }

    pub fn without_labels(&self) -> SimpleGraph {
        SimpleGraph {
            labels: None,
            ..self.clone()
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || bfs(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Proper 2-coloring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

pub(crate) const UNREACHABLE: u32 = u32::MAX;

pub(crate) fn bfs(g: &SimpleGraph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Symmetric all-pairs distance table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

impl DistanceTable {
    pub(crate) fn unchecked(g: &SimpleGraph) -> DistanceTable {
        let n = g.vertex_count();
        let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs(g, s)).collect();
        DistanceTable {
            n,
            d: rows.concat(),
        }
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|u| self.eccentricity(u)).max().unwrap_or(0)
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &SimpleGraph) -> Result<DistanceTable, CubeError> {
    if !g.is_connected() {
        return Err(CubeError::Disconnected);
    }
    Ok(DistanceTable::unchecked(g))
}

/// `g □ h` on vertex pairs `(a, b)`, numbered `a * |V(h)| + b`.
///
/// Edges of `g`-layers come first, then `h`-layers. Labels are kept when both
/// factors carry them, with `h`-labels shifted past the largest `g`-label.
pub fn cartesian_product(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut edges = Vec::with_capacity(g.edge_count() * nh + h.edge_count() * ng);
    let mut labels = Vec::new();
    let shift = g.labels().map_or(0, |l| l.iter().max().map_or(0, |m| m + 1));
    for (e, &(a1, a2)) in g.edges().iter().enumerate() {
        for b in 0..nh {
            edges.push((a1 * nh + b, a2 * nh + b));
            labels.push(g.label(e).unwrap_or(0));
        }
    }
    for (e, &(b1, b2)) in h.edges().iter().enumerate() {
        for a in 0..ng {
            edges.push((a * nh + b1, a * nh + b2));
            labels.push(h.label(e).map_or(0, |l| l + shift));
        }
    }
    let n = ng * nh;
    if g.labels().is_some() && h.labels().is_some() {
        SimpleGraph::with_labels(n, edges, labels).unwrap()
    } else {
        SimpleGraph::new(n, edges).unwrap()
    }
}

/// Product of all factors, left to right; the empty product is K₁.
pub fn cartesian_product_all(factors: &[SimpleGraph]) -> SimpleGraph {
    factors
        .iter()
        .fold(SimpleGraph::k1(), |acc, f| cartesian_product(&acc, f))
}

pub const HYPERCUBE_MAX_DIM: usize = 20;

/// `Q_n`; vertex `v` has code bit `i` equal to bit `i` of `v`.
pub fn hypercube(n: usize) -> Result<SimpleGraph, CubeError> {
    if n > HYPERCUBE_MAX_DIM {
        return Err(CubeError::TooLarge {
            what: "hypercube dimension",
            size: n,
            limit: HYPERCUBE_MAX_DIM,
        });
    }
    let mut edges = Vec::new();
    for v in 0usize..1 << n {
        for i in 0..n {
            let w = v ^ (1 << i);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    SimpleGraph::new(1 << n, edges)
}

/// Binary codes of length `n` without two consecutive 1s, ascending as integers.
pub fn fibonacci_codes(n: usize) -> Vec<usize> {
    (0usize..1 << n).filter(|c| c & (c >> 1) == 0).collect()
}

/// The Fibonacci cube `Γ_n`: the subgraph of `Q_n` induced by
/// [`fibonacci_codes`], numbered in that order.
pub fn fibonacci_cube(n: usize) -> Result<SimpleGraph, CubeError> {
    if n == 0 {
        return Err(CubeError::Invalid("fibonacci_cube needs n >= 1".into()));
    }
    if n > 2 * HYPERCUBE_MAX_DIM {
        return Err(CubeError::TooLarge {
            what: "fibonacci cube dimension",
            size: n,
            limit: 2 * HYPERCUBE_MAX_DIM,
        });
    }
    let codes = fibonacci_codes(n);
    let index: std::collections::HashMap<usize, usize> =
        codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (i, &c) in codes.iter().enumerate() {
        for b in 0..n {
            if c & (1 << b) == 0 {
                if let Some(&j) = index.get(&(c | 1 << b)) {
                    edges.push((i, j));
                }
            }
        }
    }
    SimpleGraph::new(codes.len(), edges)
}

/// Path on `n ≥ 1` vertices.
pub fn path(n: usize) -> SimpleGraph {
    assert!(n >= 1, "path needs at least one vertex");
    SimpleGraph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> SimpleGraph {
    assert!(n >= 3, "cycle needs at least three vertices");
    SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
}

/// `K_{a,b}`; the first `a` vertices form one side.
pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    SimpleGraph::new(a + b, edges).unwrap()
}
