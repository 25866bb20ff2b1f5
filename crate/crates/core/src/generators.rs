//! Constructors for the graph families used throughout: even cycles,
//! catacondensed hexagonal chains, a few fixed graphs, and an exhaustive
//! search for a plane bipartite graph that is not weakly elementary.

use crate::bitset::BitSet;
use crate::matching::{allowed_edges_by_alternating_cycles, find_perfect_matching};
use crate::plane_graph::{
    is_biconnected, Color, Dart, EdgeId, GraphSpec, PlaneBipartiteGraph, PlaneGraphError, VertexId,
};
use itertools::Itertools;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("chain code {0} overlaps itself on the hexagonal lattice")]
    SelfOverlap(String),
    #[error("invalid chain code: {0}")]
    InvalidCode(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no such graph with at most {max_vertices} vertices")]
    NotFound { max_vertices: usize },
    #[error(transparent)]
    Graph(#[from] PlaneGraphError),
}

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Straight-line drawing assembled piece by piece, then embedded by angle.
#[derive(Default)]
struct Drawing {
    points: Vec<(f64, f64)>,
    index: HashMap<(i64, i64), VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    edge_set: BTreeSet<(VertexId, VertexId)>,
}

impl Drawing {
    fn vertex(&mut self, p: (f64, f64)) -> VertexId {
        let key = ((p.0 * 1e4).round() as i64, (p.1 * 1e4).round() as i64);
        *self.index.entry(key).or_insert_with(|| {
            self.points.push(p);
            self.points.len() - 1
        })
    }

    fn edge(&mut self, u: VertexId, v: VertexId) {
        if self.edge_set.insert((u.min(v), u.max(v))) {
            self.edges.push((u, v));
        }
    }

    fn segment(&mut self, p: (f64, f64), q: (f64, f64)) {
        let (u, v) = (self.vertex(p), self.vertex(q));
        self.edge(u, v);
    }

    /// Unit hexagons (pointy-top) at axial cells, shifted by `offset`.
    fn polyhex(&mut self, cells: &[(i32, i32)], offset: (f64, f64)) {
        for &cell in cells {
            let corners = hex_corners(cell, offset);
            for k in 0..6 {
                self.segment(corners[k], corners[(k + 1) % 6]);
            }
        }
    }

    fn build(self) -> Result<PlaneBipartiteGraph, PlaneGraphError> {
        PlaneBipartiteGraph::from_geometry(&self.points, &self.edges)
    }
}

fn hex_center((q, r): (i32, i32)) -> (f64, f64) {
    (SQRT3 * (q as f64 + r as f64 / 2.0), 1.5 * r as f64)
}

/// Corners counterclockwise from 30°.
fn hex_corners(cell: (i32, i32), offset: (f64, f64)) -> [(f64, f64); 6] {
    let (cx, cy) = hex_center(cell);
    std::array::from_fn(|k| {
        let a = (30.0 + 60.0 * k as f64).to_radians();
        (offset.0 + cx + a.cos(), offset.1 + cy + a.sin())
    })
}

/// Axial neighbor directions, counterclockwise from east.
const DIRECTIONS: [(i32, i32); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

fn cells_adjacent(a: (i32, i32), b: (i32, i32)) -> bool {
    DIRECTIONS.iter().any(|&(dq, dr)| (a.0 + dq, a.1 + dr) == b)
}

/// Graph of a set of lattice hexagons.
pub fn polyhex(cells: &[(i32, i32)]) -> Result<PlaneBipartiteGraph, GeneratorError> {
    if cells.is_empty() {
        return Err(GeneratorError::InvalidParameter("no cells".into()));
    }
    let mut d = Drawing::default();
    d.polyhex(cells, (0.0, 0.0));
    Ok(d.build()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Turn {
    L,
    R,
    S,
}

impl Turn {
    fn mirrored(self) -> Turn {
        match self {
            Turn::L => Turn::R,
            Turn::R => Turn::L,
            Turn::S => Turn::S,
        }
    }

    fn as_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
            Turn::S => 'S',
        }
    }
}

/// A catacondensed chain of `hexagons` cells; `turns` has `hexagons - 2`
/// entries (none for one or two cells). `L`/`R` attach the next cell at an
/// angle, `S` attaches it straight across.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainCode {
    hexagons: usize,
    turns: Vec<Turn>,
}

impl ChainCode {
    pub fn new(hexagons: usize, turns: Vec<Turn>) -> Result<Self, GeneratorError> {
        if hexagons == 0 {
            return Err(GeneratorError::InvalidCode("a chain needs a hexagon".into()));
        }
        if turns.len() != hexagons.saturating_sub(2) {
            return Err(GeneratorError::InvalidCode(format!(
                "{} hexagons need {} turns, got {}",
                hexagons,
                hexagons.saturating_sub(2),
                turns.len()
            )));
        }
        Ok(ChainCode { hexagons, turns })
    }

    /// Chain of `turns.len() + 2` hexagons.
    pub fn from_turns(turns: Vec<Turn>) -> Self {
        ChainCode {
            hexagons: turns.len() + 2,
            turns,
        }
    }

    pub fn hexagons(&self) -> usize {
        self.hexagons
    }

    pub fn turns(&self) -> &[Turn] {
        &self.turns
    }

    pub fn mirrored(&self) -> ChainCode {
        ChainCode {
            hexagons: self.hexagons,
            turns: self.turns.iter().map(|t| t.mirrored()).collect(),
        }
    }

    /// The same chain read from the other end.
    pub fn reversed(&self) -> ChainCode {
        ChainCode {
            hexagons: self.hexagons,
            turns: self.turns.iter().rev().map(|t| t.mirrored()).collect(),
        }
    }

    /// Smallest code among the reversals and mirror images.
    pub fn canonical(&self) -> ChainCode {
        [
            self.clone(),
            self.mirrored(),
            self.reversed(),
            self.reversed().mirrored(),
        ]
        .into_iter()
        .min()
        .unwrap()
    }

    /// Lattice cells of the chain, or `SelfOverlap`.
    pub fn cells(&self) -> Result<Vec<(i32, i32)>, GeneratorError> {
        let mut cells = vec![(0, 0)];
        if self.hexagons >= 2 {
            cells.push(DIRECTIONS[0]);
        }
        let mut dir = 0usize;
        for &t in &self.turns {
            dir = match t {
                Turn::L => (dir + 1) % 6,
                Turn::R => (dir + 5) % 6,
                Turn::S => dir,
            };
            let last = *cells.last().unwrap();
            let (dq, dr) = DIRECTIONS[dir];
            cells.push((last.0 + dq, last.1 + dr));
        }
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                if cells[i] == cells[j] || (j > i + 1 && cells_adjacent(cells[i], cells[j])) {
                    return Err(GeneratorError::SelfOverlap(self.to_string()));
                }
            }
        }
        Ok(cells)
    }
}

impl fmt::Display for ChainCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hexagons < 2 {
            return write!(f, "[{} hexagon]", self.hexagons);
        }
        if self.turns.is_empty() {
            return f.write_str("-");
        }
        self.turns.iter().try_for_each(|t| write!(f, "{}", t.as_char()))
    }
}

impl FromStr for ChainCode {
    type Err = GeneratorError;

    /// Parses a turn string; `-` or the empty string is the two-cell chain.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let body = if s == "-" { "" } else { s };
        let turns = body
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'L' => Ok(Turn::L),
                'R' => Ok(Turn::R),
                'S' => Ok(Turn::S),
                _ => Err(GeneratorError::InvalidCode(format!("unexpected {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainCode::from_turns(turns))
    }
}

pub fn benzenoid_chain(code: &ChainCode) -> Result<PlaneBipartiteGraph, GeneratorError> {
    polyhex(&code.cells()?)
}

/// Zigzag chain of `n` hexagons (turns `LRLR…`).
pub fn fibonaccene(n: usize) -> Result<PlaneBipartiteGraph, GeneratorError> {
    let turns = (0..n.saturating_sub(2))
        .map(|i| if i % 2 == 0 { Turn::L } else { Turn::R })
        .collect();
    benzenoid_chain(&ChainCode::new(n, turns)?)
}

/// Linear chain of `n` hexagons (turns `SS…`).
pub fn polyacene(n: usize) -> Result<PlaneBipartiteGraph, GeneratorError> {
    benzenoid_chain(&ChainCode::new(n, vec![Turn::S; n.saturating_sub(2)])?)
}

/// The cycle `C_{2k}`, `k ≥ 2`.
pub fn even_cycle(k: usize) -> Result<PlaneBipartiteGraph, GeneratorError> {
    if k < 2 {
        return Err(GeneratorError::InvalidParameter(format!(
            "even_cycle needs k >= 2, got {k}"
        )));
    }
    let n = 2 * k;
    let points: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / n as f64;
            (a.cos(), a.sin())
        })
        .collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(PlaneBipartiteGraph::from_geometry(&points, &edges)?)
}

/// An even cycle on `cycle_len` vertices plus paths drawn inside it; each
/// `(a, b, len)` adds a path of `len` edges between cycle vertices `a`, `b`.
pub fn cycle_with_interior_paths(
    cycle_len: usize,
    paths: &[(usize, usize, usize)],
) -> Result<PlaneBipartiteGraph, GeneratorError> {
    if cycle_len < 4 || cycle_len % 2 == 1 {
        return Err(GeneratorError::InvalidParameter(format!(
            "cycle length {cycle_len} must be even and at least 4"
        )));
    }
    let mut points: Vec<(f64, f64)> = (0..cycle_len)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / cycle_len as f64;
            (a.cos(), a.sin())
        })
        .collect();
    let mut edges: Vec<_> = (0..cycle_len).map(|i| (i, (i + 1) % cycle_len)).collect();
    for &(a, b, len) in paths {
        if a >= cycle_len || b >= cycle_len || a == b || len == 0 {
            return Err(GeneratorError::InvalidParameter(format!(
                "bad interior path ({a}, {b}, {len})"
            )));
        }
        let (pa, pb) = (points[a], points[b]);
        let mut prev = a;
        for i in 1..len {
            let t = i as f64 / len as f64;
            let pull = 1.0 - 0.6 * (std::f64::consts::PI * t).sin();
            let x = (pa.0 + (pb.0 - pa.0) * t) * pull;
            let y = (pa.1 + (pb.1 - pa.1) * t) * pull;
            points.push((x, y));
            edges.push((prev, points.len() - 1));
            prev = points.len() - 1;
        }
        edges.push((prev, b));
    }
    Ok(PlaneBipartiteGraph::from_geometry(&points, &edges)?)
}

/// Two hexagons joined by one edge, which no perfect matching can use.
pub fn bridged_hexagons() -> PlaneBipartiteGraph {
    let mut d = Drawing::default();
    d.polyhex(&[(0, 0)], (0.0, 0.0));
    d.polyhex(&[(0, 0)], (4.0, 0.0));
    d.segment((SQRT3 / 2.0, 0.5), (4.0 - SQRT3 / 2.0, 0.5));
    d.build().expect("fixed drawing is plane bipartite")
}

/// Anthracene joined to a hexagon by one bridge edge.
pub fn bridged_anthracene_hexagon() -> PlaneBipartiteGraph {
    let mut d = Drawing::default();
    d.polyhex(&[(0, 0), (1, 0), (2, 0)], (0.0, 0.0));
    let x = 2.0 * SQRT3 + SQRT3 / 2.0;
    d.polyhex(&[(0, 0)], (x + 2.0, 0.0));
    d.segment((x, 0.5), (x + 2.0 - SQRT3 / 2.0, 0.5));
    d.build().expect("fixed drawing is plane bipartite")
}

/// Coronene: a hexagon ringed by six more, with six interior vertices of degree 3.
pub fn coronene_like() -> PlaneBipartiteGraph {
    let mut cells = vec![(0, 0)];
    cells.extend(DIRECTIONS);
    polyhex(&cells).expect("fixed drawing is plane bipartite")
}

/// Phenanthrene and naphthalene joined by two edges from two same-colored
/// phenanthrene vertices. Color counts force both connectors to be
/// forbidden; the components have 3 and 2 finite faces.
pub fn figure5_analogue() -> PlaneBipartiteGraph {
    let mut d = Drawing::default();
    d.polyhex(&[(0, 0), (1, 0), (1, 1)], (0.0, 0.0));
    d.polyhex(&[(0, 0), (1, 0)], (7.0, 0.25));
    // Lower-right corner of cell (1,0) and right corner of cell (1,1), both at 330°.
    d.segment((1.5 * SQRT3, -0.5), (7.0 - SQRT3 / 2.0, -0.25));
    d.segment((2.0 * SQRT3, 1.0), (7.0, 1.25));
    d.build().expect("fixed drawing is plane bipartite")
}

/// Side-by-side union; vertex and edge ids of later graphs are shifted.
pub fn disjoint_union(graphs: &[&PlaneBipartiteGraph]) -> Result<PlaneBipartiteGraph, GeneratorError> {
    let mut spec = GraphSpec::default();
    for g in graphs {
        let (nv, ne) = (spec.colors.len(), spec.edges.len());
        let s = g.spec();
        spec.colors.extend(s.colors);
        spec.edges.extend(s.edges.iter().map(|&(u, v)| (u + nv, v + nv)));
        spec.rotations
            .extend(s.rotations.iter().map(|r| r.iter().map(|e| e + ne).collect::<Vec<_>>()));
        spec.outer_faces.extend(s.outer_faces.iter().map(|d| Dart {
            edge: d.edge + ne,
            from: d.from + nv,
        }));
    }
    Ok(PlaneBipartiteGraph::from_spec(spec)?)
}

/// The single edge `K₂`.
pub fn k2() -> PlaneBipartiteGraph {
    PlaneBipartiteGraph::from_geometry(&[(0.0, 0.0), (1.0, 0.0)], &[(0, 1)])
        .expect("K2 is plane bipartite")
}

#[derive(Clone, Debug)]
pub struct Chain {
    pub code: ChainCode,
    pub graph: PlaneBipartiteGraph,
}

pub const MAX_CHAIN_HEXAGONS: usize = 8;

/// Chains with exactly `h` hexagons, one per class of codes under reversal
/// and mirroring, in order of canonical code.
pub fn enumerate_chains_exact(h: usize) -> Result<Vec<Chain>, GeneratorError> {
    if h == 0 || h > MAX_CHAIN_HEXAGONS {
        return Err(GeneratorError::InvalidParameter(format!(
            "chain length {h} outside 1..={MAX_CHAIN_HEXAGONS}"
        )));
    }
    let mut classes = BTreeSet::new();
    for turns in (0..h.saturating_sub(2))
        .map(|_| [Turn::L, Turn::R, Turn::S])
        .multi_cartesian_product()
    {
        let code = ChainCode::new(h, turns)?;
        if code.cells().is_ok() {
            classes.insert(code.canonical());
        }
    }
    if h <= 2 {
        classes.insert(ChainCode::new(h, Vec::new())?);
    }
    classes
        .into_iter()
        .map(|code| {
            let graph = benzenoid_chain(&code)?;
            Ok(Chain { code, graph })
        })
        .collect()
}

/// All chains with 2 to `max_h` hexagons, shortest first.
pub fn enumerate_chains(max_h: usize) -> Result<Vec<Chain>, GeneratorError> {
    if max_h > MAX_CHAIN_HEXAGONS {
        return Err(GeneratorError::InvalidParameter(format!(
            "max_h {max_h} exceeds {MAX_CHAIN_HEXAGONS}"
        )));
    }
    let mut out = Vec::new();
    for h in 2..=max_h {
        out.extend(enumerate_chains_exact(h)?);
    }
    Ok(out)
}

pub const MAX_SEARCH_VERTICES: usize = 14;

/// A plane bipartite graph in which deleting the forbidden edges creates a
/// new finite face.
#[derive(Clone, Debug)]
pub struct NonWeaklyElementary {
    pub graph: PlaneBipartiteGraph,
    pub forbidden_edges: BitSet,
    /// Finite-face edge sets after deletion that are not faces of the graph.
    pub new_faces: Vec<BitSet>,
}

fn new_faces(g: &PlaneBipartiteGraph, allowed: &BitSet) -> Vec<BitSet> {
    let before: BTreeSet<&BitSet> = g.finite_faces().map(|f| &f.edge_set).collect();
    g.finite_face_edge_sets_after_deletion(allowed)
        .into_iter()
        .filter(|s| !before.contains(s))
        .collect()
}

/// Every cyclic order of each vertex's edges (first edge fixed), lazily.
fn rotation_systems(incident: &[Vec<EdgeId>]) -> impl Iterator<Item = Vec<Vec<EdgeId>>> + '_ {
    incident
        .iter()
        .map(|edges| {
            let (first, rest) = edges.split_first().expect("no isolated vertices");
            let k = rest.len();
            rest.iter()
                .copied()
                .permutations(k)
                .map(|p| std::iter::once(*first).chain(p).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
        .multi_cartesian_product()
}

/// Exhaustive search, ordered by vertex count, then edge count, then the
/// lexicographic edge subset of `K_{n/2,n/2}`, then embedding and outer face.
/// Candidates are 2-connected, have a perfect matching and a forbidden edge.
pub fn search_non_weakly_elementary(
    max_vertices: usize,
) -> Result<NonWeaklyElementary, GeneratorError> {
    if max_vertices > MAX_SEARCH_VERTICES {
        return Err(GeneratorError::InvalidParameter(format!(
            "max_vertices {max_vertices} exceeds {MAX_SEARCH_VERTICES}"
        )));
    }
    for n in (4..=max_vertices).step_by(2) {
        let half = n / 2;
        let colors: Vec<Color> = (0..n)
            .map(|v| if v < half { Color::Black } else { Color::White })
            .collect();
        let all_edges: Vec<(VertexId, VertexId)> = (0..half)
            .flat_map(|b| (half..n).map(move |w| (b, w)))
            .collect();
        for m in n..=all_edges.len() {
            for subset in all_edges.iter().copied().combinations(m) {
                if let Some(found) = try_edge_set(&colors, subset)? {
                    return Ok(found);
                }
            }
        }
    }
    Err(GeneratorError::NotFound { max_vertices })
}

fn try_edge_set(
    colors: &[Color],
    edges: Vec<(VertexId, VertexId)>,
) -> Result<Option<NonWeaklyElementary>, GeneratorError> {
    let n = colors.len();
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
        adj[u].push(v);
        adj[v].push(u);
    }
    if incident.iter().any(|i| i.len() < 2) || !is_biconnected(&adj) {
        return Ok(None);
    }
    // Matchability and forbidden edges do not depend on the embedding.
    let mut probe: Option<PlaneBipartiteGraph> = None;
    for rotations in rotation_systems(&incident) {
        let spec = GraphSpec {
            colors: colors.to_vec(),
            edges: edges.clone(),
            rotations,
            outer_faces: Vec::new(),
        };
        let Some(g) = embed_any_outer(spec.clone()) else {
            continue;
        };
        if probe.is_none() {
            if find_perfect_matching(&g).is_none() {
                return Ok(None);
            }
            let allowed = allowed_edges_by_alternating_cycles(&g).expect("has a perfect matching");
            if allowed.count() == g.edge_count() {
                return Ok(None);
            }
            probe = Some(g.clone());
        }
        let allowed = allowed_edges_by_alternating_cycles(&g).expect("has a perfect matching");
        for face in 0..g.faces().len() {
            let outer = g.face(face).boundary[0];
            let Ok(h) = PlaneBipartiteGraph::from_spec(GraphSpec {
                outer_faces: vec![outer],
                ..spec.clone()
            }) else {
                continue;
            };
            let fresh = new_faces(&h, &allowed);
            if !fresh.is_empty() {
                let forbidden = BitSet::from_positions(
                    h.edge_count(),
                    (0..h.edge_count()).filter(|&e| !allowed.contains(e)),
                );
                return Ok(Some(NonWeaklyElementary {
                    graph: h,
                    forbidden_edges: forbidden,
                    new_faces: fresh,
                }));
            }
        }
    }
    Ok(None)
}

/// Builds the embedding if it is planar, resolving a tied outer face with
/// the first longest walk.
fn embed_any_outer(spec: GraphSpec) -> Option<PlaneBipartiteGraph> {
    match PlaneBipartiteGraph::from_spec(spec.clone()) {
        Ok(g) => Some(g),
        Err(PlaneGraphError::AmbiguousOuterFace { .. }) => {
            let walks = crate::plane_graph::trace_faces(&spec.edges, &spec.rotations);
            let longest = walks.iter().max_by_key(|w| w.len())?;
            PlaneBipartiteGraph::from_spec(GraphSpec {
                outer_faces: vec![longest[0]],
                ..spec
            })
            .ok()
        }
        Err(_) => None,
    }
}
