use super::{
    trace_faces, Color, Dart, EdgeId, GraphSpec, PlaneBipartiteGraph, PlaneGraphError, UnionFind,
    VertexId,
};
use std::collections::VecDeque;

impl PlaneBipartiteGraph {
    /// Builds a graph from a straight-line drawing.
    ///
    /// Rotations are the clockwise angular order of incident edges, colors come
    /// from a breadth-first 2-coloring (smallest vertex of each component is
    /// black), and the infinite face of each component is the walk with
    /// negative signed area. Crossing edges surface as an Euler violation.
    pub fn from_geometry(
        points: &[(f64, f64)],
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, PlaneGraphError> {
        let n = points.len();
        let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n || u == v {
                return Err(PlaneGraphError::InvalidEdge {
                    edge: e,
                    reason: format!("bad endpoints ({u}, {v})"),
                });
            }
            incident[u].push(e);
            incident[v].push(e);
        }

        let mut colors: Vec<Option<Color>> = vec![None; n];
        for start in 0..n {
            if colors[start].is_some() {
                continue;
            }
            colors[start] = Some(Color::Black);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = colors[v].unwrap();
                for &e in &incident[v] {
                    let (a, b) = edges[e];
                    let w = if a == v { b } else { a };
                    match colors[w] {
                        None => {
                            colors[w] = Some(cv.opposite());
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => {
                            return Err(PlaneGraphError::NotBipartite { edge: e, u: v, v: w })
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let colors: Vec<Color> = colors.into_iter().map(|c| c.unwrap()).collect();

        let rotations: Vec<Vec<EdgeId>> = (0..n)
            .map(|v| {
                let (x, y) = points[v];
                let mut rot: Vec<(f64, EdgeId)> = incident[v]
                    .iter()
                    .map(|&e| {
                        let (a, b) = edges[e];
                        let w = if a == v { b } else { a };
                        let (wx, wy) = points[w];
                        ((wy - y).atan2(wx - x), e)
                    })
                    .collect();
                rot.sort_by(|p, q| q.0.total_cmp(&p.0).then(p.1.cmp(&q.1)));
                rot.into_iter().map(|(_, e)| e).collect()
            })
            .collect();

        let mut uf = UnionFind::new(n);
        for &(u, v) in edges {
            uf.union(u, v);
        }
        let walks = trace_faces(edges, &rotations);
        let area = |walk: &[Dart]| -> f64 {
            walk.iter()
                .map(|d| {
                    let (a, b) = edges[d.edge];
                    let to = if a == d.from { b } else { a };
                    let (x1, y1) = points[d.from];
                    let (x2, y2) = points[to];
                    x1 * y2 - x2 * y1
                })
                .sum::<f64>()
                / 2.0
        };
        let mut best: std::collections::BTreeMap<usize, (f64, Dart)> = Default::default();
        for walk in &walks {
            let root = uf.find(walk[0].from);
            let a = area(walk);
            let entry = best.entry(root).or_insert((a, walk[0]));
            if a < entry.0 {
                *entry = (a, walk[0]);
            }
        }
        let outer_faces = best.values().map(|&(_, d)| d).collect();

        PlaneBipartiteGraph::from_spec(GraphSpec {
            colors,
            edges: edges.to_vec(),
            rotations,
            outer_faces,
        })
    }
}
