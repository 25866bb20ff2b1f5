//! Brute-force oracles that share no code with the library algorithms.
#![allow(dead_code)]

use reskit::cube::SimpleGraph;
use reskit::plane_graph::PlaneBipartiteGraph;

/// Perfect matchings counted by always matching the lowest uncovered vertex.
pub fn count_perfect_matchings(g: &PlaneBipartiteGraph) -> usize {
    fn go(g: &PlaneBipartiteGraph, covered: &mut Vec<bool>) -> usize {
        let Some(v) = covered.iter().position(|c| !c) else {
            return 1;
        };
        covered[v] = true;
        let mut total = 0;
        for w in g.neighbors(v).collect::<Vec<_>>() {
            if !covered[w] {
                covered[w] = true;
                total += go(g, covered);
                covered[w] = false;
            }
        }
        covered[v] = false;
        total
    }
    go(g, &mut vec![false; g.vertex_count()])
}

pub fn fibonacci(n: usize) -> usize {
    let (mut a, mut b) = (1, 2);
    for _ in 1..n {
        (a, b) = (b, a + b);
    }
    if n == 0 { a } else { b }
}

fn adjacency(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Isomorphism by trying every permutation; only for tiny graphs.
pub fn brute_force_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 9, "brute force isomorphism on {n} vertices");
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (a, b) = (adjacency(g), adjacency(h));
    fn extend(p: &mut Vec<usize>, used: &mut [bool], a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
        let i = p.len();
        if i == a.len() {
            return true;
        }
        for j in 0..a.len() {
            if !used[j] && (0..i).all(|k| a[i][k] == b[j][p[k]]) {
                used[j] = true;
                p.push(j);
                if extend(p, used, a, b) {
                    return true;
                }
                p.pop();
                used[j] = false;
            }
        }
        false
    }
    extend(&mut Vec::new(), &mut vec![false; n], &a, &b)
}

/// The subgraph of `Q_k` induced by the codes in `set`.
fn induced_by_codes(set: &[u32], k: u32) -> SimpleGraph {
    let mut edges = Vec::new();
    for (i, &x) in set.iter().enumerate() {
        for (j, &y) in set.iter().enumerate().skip(i + 1) {
            if (x ^ y).count_ones() == 1 && x.max(y) < 1 << k {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(set.len(), edges).unwrap()
}

/// Whether `g` is isomorphic to the cube on some down-set of `Q_k` that
/// contains every unit vector, for `k` up to the maximum degree, by listing
/// down-sets. Returns the `k` found.
pub fn brute_force_daisy(g: &SimpleGraph) -> Option<u32> {
    let n = g.vertex_count();
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0) as u32;
    for k in 0..=max_deg.min(4) {
        let all: Vec<u32> = (0..1u32 << k).collect();
        // Down-sets of Q_k as subsets of its 2^k codes.
        for mask in 0u64..1 << (1u32 << k) {
            let set: Vec<u32> = all.iter().copied().filter(|&c| mask >> c & 1 == 1).collect();
            if set.len() != n {
                continue;
            }
            let down = set
                .iter()
                .all(|&c| (0..k).all(|i| c >> i & 1 == 0 || set.contains(&(c & !(1 << i)))));
            let units = (0..k).all(|i| set.contains(&(1 << i)));
            if down && units && brute_force_isomorphic(g, &induced_by_codes(&set, k)) {
                return Some(k);
            }
        }
    }
    None
}
