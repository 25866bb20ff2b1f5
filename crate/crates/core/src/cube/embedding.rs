use super::{CubeError, DistanceTable, SimpleGraph};
use crate::bitset::BitSet;
use crate::plane_graph::UnionFind;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt;

/// Θ*-classes of a connected bipartite graph, ordered by smallest edge id.
///
/// In a bipartite graph `uv Θ xy` iff `x` and `y` fall on different sides of
/// the split `W_uv | W_vu`, so each edge stores its `W_uv` as a bit set.
pub fn theta_partition(g: &SimpleGraph) -> Result<Vec<Vec<usize>>, CubeError> {
    if !g.is_connected() {
        return Err(CubeError::Disconnected);
    }
    if g.bipartition().is_none() {
        return Err(CubeError::NotBipartite);
    }
    let dist = DistanceTable::unchecked(g);
    Ok(theta_classes(g, &dist).0)
}

fn theta_classes(g: &SimpleGraph, dist: &DistanceTable) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = g.vertex_count();
    let m = g.edge_count();
    let sides: Vec<BitSet> = g
        .edges()
        .par_iter()
        .map(|&(u, v)| BitSet::from_positions(n, (0..n).filter(|&x| dist.get(x, u) < dist.get(x, v))))
        .collect();
    let related: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|e| {
            (e + 1..m)
                .filter(|&f| {
                    let (x, y) = g.endpoints(f);
                    sides[e].contains(x) != sides[e].contains(y)
                })
                .collect()
        })
        .collect();
    let mut uf = UnionFind::new(m);
    for (e, fs) in related.iter().enumerate() {
        for &f in fs {
            uf.union(e, f);
        }
    }
    let mut class_of_root = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut edge_class = vec![0; m];
    for e in 0..m {
        let r = uf.find(e);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = classes.len();
            classes.push(Vec::new());
        }
        edge_class[e] = class_of_root[r];
        classes[edge_class[e]].push(e);
    }
    (classes, edge_class)
}

/// Isometric embedding into `Q_idim`: coordinate `i` records which side of
/// Θ-class `i` a vertex lies on, relative to `base_vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeEmbedding {
    pub theta_classes: Vec<Vec<usize>>,
    pub edge_class: Vec<usize>,
    pub coords: Vec<BitSet>,
    pub base_vertex: usize,
    pub idim: usize,
}

impl CubeEmbedding {
    /// The same embedding with `base` moved to the all-zero code.
    pub fn reoriented(&self, base: usize) -> CubeEmbedding {
        let shift = self.coords[base].clone();
        CubeEmbedding {
            coords: self.coords.iter().map(|c| c.xor(&shift)).collect(),
            base_vertex: base,
            ..self.clone()
        }
    }

    pub fn code_strings(&self) -> Vec<String> {
        self.coords.iter().map(BitSet::to_code_string).collect()
    }
}

impl Serialize for CubeEmbedding {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            base_vertex: usize,
            coords: Vec<String>,
            idim: usize,
            theta_classes: &'a [Vec<usize>],
        }
        Repr {
            base_vertex: self.base_vertex,
            coords: self.code_strings(),
            idim: self.idim,
            theta_classes: &self.theta_classes,
        }
        .serialize(s)
    }
}

/// Embedding from the Θ-classes, kept only if it is isometric.
pub fn is_partial_cube(g: &SimpleGraph) -> Option<CubeEmbedding> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() || g.bipartition().is_none() {
        return None;
    }
    let dist = DistanceTable::unchecked(g);
    let (classes, edge_class) = theta_classes(g, &dist);
    let idim = classes.len();

    let mut coords: Vec<Option<BitSet>> = vec![None; n];
    coords[0] = Some(BitSet::new(idim));
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.incident(v) {
            if coords[w].is_none() {
                let mut c = coords[v].clone().unwrap();
                c.toggle(edge_class[e]);
                coords[w] = Some(c);
                queue.push_back(w);
            }
        }
    }
    let coords: Vec<BitSet> = coords.into_iter().map(Option::unwrap).collect();

    let edges_ok = g.edges().iter().enumerate().all(|(e, &(u, v))| {
        let diff = coords[u].xor(&coords[v]);
        diff.count() == 1 && diff.contains(edge_class[e])
    });
    if !edges_ok {
        return None;
    }
    let isometric = (0..n).into_par_iter().all(|u| {
        (u + 1..n).all(|v| coords[u].hamming(&coords[v]) == dist.get(u, v) as usize)
    });
    isometric.then_some(CubeEmbedding {
        theta_classes: classes,
        edge_class,
        coords,
        base_vertex: 0,
        idim,
    })
}

pub const MEDIAN_LIMIT: usize = 512;

/// Every triple has exactly one vertex in all three pairwise intervals.
/// Brute force over triples with interval bit sets.
pub fn is_median_graph(g: &SimpleGraph) -> Result<bool, CubeError> {
    let n = g.vertex_count();
    if n > MEDIAN_LIMIT {
        return Err(CubeError::TooLarge {
            what: "median test vertex count",
            size: n,
            limit: MEDIAN_LIMIT,
        });
    }
    if !g.is_connected() {
        return Err(CubeError::Disconnected);
    }
    if g.bipartition().is_none() {
        return Ok(false);
    }
    let dist = DistanceTable::unchecked(g);
    let intervals: Vec<BitSet> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (u, v) = (k / n, k % n);
            let d = dist.get(u, v);
            BitSet::from_positions(n, (0..n).filter(|&x| dist.get(u, x) + dist.get(x, v) == d))
        })
        .collect();
    let interval = |u: usize, v: usize| &intervals[u * n + v];
    Ok((0..n).into_par_iter().all(|u| {
        (u + 1..n).all(|v| {
            (v + 1..n).all(|w| interval(u, v).and(interval(u, w)).and_count(interval(v, w)) == 1)
        })
    }))
}

/// A daisy-cube witness: coordinates with the base at `0^n` forming a down-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaisyCertificate {
    pub embedding: CubeEmbedding,
    /// The antichain of maximal codes, sorted as code strings.
    pub maximal_vertices: Vec<BitSet>,
}

impl DaisyCertificate {
    pub fn idim(&self) -> usize {
        self.embedding.idim
    }

    pub fn base(&self) -> usize {
        self.embedding.base_vertex
    }

    pub fn maximal_codes(&self) -> Vec<String> {
        self.maximal_vertices.iter().map(BitSet::to_code_string).collect()
    }

    /// Checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        let emb = &self.embedding;
        let n = g.vertex_count();
        if emb.coords.len() != n || !emb.coords[emb.base_vertex].is_empty() {
            return false;
        }
        if g.degree(emb.base_vertex) != emb.idim {
            return false;
        }
        let codes: std::collections::HashSet<&BitSet> = emb.coords.iter().collect();
        if codes.len() != n {
            return false;
        }
        let closed = emb.coords.iter().all(|c| {
            c.iter().all(|i| {
                let mut lower = c.clone();
                lower.remove(i);
                codes.contains(&lower)
            })
        });
        let dist = DistanceTable::unchecked(g);
        let isometric = (0..n).all(|u| {
            (u + 1..n).all(|v| emb.coords[u].hamming(&emb.coords[v]) == dist.get(u, v) as usize)
        });
        let covered = emb
            .coords
            .iter()
            .all(|c| self.maximal_vertices.iter().any(|x| c.is_subset(x)));
        let antichain = self.maximal_vertices.iter().enumerate().all(|(i, x)| {
            self.maximal_vertices
                .iter()
                .enumerate()
                .all(|(j, y)| i == j || !x.is_subset(y))
        });
        closed && isometric && covered && antichain
    }
}

impl Serialize for DaisyCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            base_vertex: usize,
            embedding: &'a CubeEmbedding,
            idim: usize,
            maximal_vertices: Vec<String>,
        }
        Repr {
            base_vertex: self.base(),
            embedding: &self.embedding,
            idim: self.idim(),
            maximal_vertices: self.maximal_codes(),
        }
        .serialize(s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DaisyOptions {
    /// Try every vertex as base instead of only those of degree `idim`.
    pub sweep_all_vertices: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NotDaisyReason {
    Disconnected,
    NotPartialCube,
    DownSetFailure {
        base: usize,
        base_degree: usize,
        idim: usize,
        vertex: usize,
        code: String,
        missing: String,
    },
}

impl fmt::Display for NotDaisyReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotDaisyReason::Disconnected => f.write_str("graph is disconnected"),
            NotDaisyReason::NotPartialCube => f.write_str("graph is not a partial cube"),
            NotDaisyReason::DownSetFailure {
                base,
                base_degree,
                idim,
                vertex,
                code,
                missing,
            } => write!(
                f,
                "down-set closure fails: with base vertex {base} (degree {base_degree}, idim {idim}) \
                 vertex {vertex} has code {code} but no vertex has code {missing}; \
                 every other base fails the same way"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DaisyVerdict {
    Daisy(DaisyCertificate),
    NotDaisy(NotDaisyReason),
}

/// Down-set test for one base. Codes differ by one bit along edges, so the
/// codes are down-closed iff each vertex has `|code|` neighbors below it.
fn check_base(
    g: &SimpleGraph,
    emb: &CubeEmbedding,
    base: usize,
) -> Result<DaisyCertificate, (usize, BitSet, BitSet)> {
    let emb = emb.reoriented(base);
    let weight: Vec<usize> = emb.coords.iter().map(BitSet::count).collect();
    for v in 0..g.vertex_count() {
        let below = g.neighbors(v).filter(|&w| weight[w] < weight[v]).count();
        if below != weight[v] {
            let code = &emb.coords[v];
            let missing = code
                .iter()
                .map(|i| {
                    let mut lower = code.clone();
                    lower.remove(i);
                    lower
                })
                .find(|lower| g.neighbors(v).all(|w| &emb.coords[w] != lower))
                .expect("a missing lower code exists");
            return Err((v, code.clone(), missing));
        }
    }
    let mut maximal: Vec<BitSet> = (0..g.vertex_count())
        .filter(|&v| g.neighbors(v).all(|w| weight[w] < weight[v]))
        .map(|v| emb.coords[v].clone())
        .collect();
    maximal.sort_by_key(BitSet::to_code_string);
    Ok(DaisyCertificate {
        embedding: emb,
        maximal_vertices: maximal,
    })
}

pub fn is_daisy_cube(g: &SimpleGraph) -> Option<DaisyCertificate> {
    is_daisy_cube_with(g, DaisyOptions::default())
}

/// The certificate for the smallest admissible base vertex, if any.
pub fn is_daisy_cube_with(g: &SimpleGraph, options: DaisyOptions) -> Option<DaisyCertificate> {
    let emb = is_partial_cube(g)?;
    (0..g.vertex_count())
        .filter(|&b| options.sweep_all_vertices || g.degree(b) == emb.idim)
        .find_map(|b| check_base(g, &emb, b).ok())
}

/// Certificate, or the reason none exists. The reason reports the down-set
/// failure for the first vertex after every base has been tried.
pub fn daisy_diagnosis(g: &SimpleGraph) -> DaisyVerdict {
    if !g.is_connected() {
        return DaisyVerdict::NotDaisy(NotDaisyReason::Disconnected);
    }
    let Some(emb) = is_partial_cube(g) else {
        return DaisyVerdict::NotDaisy(NotDaisyReason::NotPartialCube);
    };
    let mut first_failure = None;
    for b in 0..g.vertex_count() {
        match check_base(g, &emb, b) {
            Ok(cert) => return DaisyVerdict::Daisy(cert),
            Err(fail) => {
                first_failure.get_or_insert((b, fail));
            }
        }
    }
    let (base, (vertex, code, missing)) = first_failure.expect("at least one vertex");
    DaisyVerdict::NotDaisy(NotDaisyReason::DownSetFailure {
        base,
        base_degree: g.degree(base),
        idim: emb.idim,
        vertex,
        code: code.to_code_string(),
        missing: missing.to_code_string(),
    })
}
