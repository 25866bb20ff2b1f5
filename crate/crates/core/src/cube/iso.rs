use super::{CubeError, DistanceTable, SimpleGraph, UNREACHABLE};
use std::collections::{HashMap, VecDeque};

pub const ISO_LIMIT: usize = 5000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IsoOptions {
    /// Also require a bijection between edge labels that the vertex map respects.
    pub respect_labels: bool,
}

pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<Vec<usize>>, CubeError> {
    is_isomorphic_with(g, h, IsoOptions::default())
}

/// Vertex invariant: degree plus the histogram of distances to all vertices.
fn invariants(g: &SimpleGraph, dist: &DistanceTable) -> Vec<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut hist = Vec::new();
            let mut unreachable = 0;
            for &d in dist.row(v) {
                if d == UNREACHABLE {
                    unreachable += 1;
                } else {
                    let d = d as usize;
                    if hist.len() <= d {
                        hist.resize(d + 1, 0);
                    }
                    hist[d] += 1;
                }
            }
            hist.push(unreachable);
            (g.degree(v), hist)
        })
        .collect()
}

#[derive(Default)]
struct LabelMap {
    forward: HashMap<usize, (usize, usize)>,
    backward: HashMap<usize, usize>,
}

impl LabelMap {
    fn try_bind(&mut self, lg: usize, lh: usize) -> bool {
        match self.forward.get_mut(&lg) {
            Some((bound, count)) if *bound == lh => {
                *count += 1;
                true
            }
            Some(_) => false,
            None if self.backward.contains_key(&lh) => false,
            None => {
                self.forward.insert(lg, (lh, 1));
                self.backward.insert(lh, lg);
                true
            }
        }
    }

    fn release(&mut self, lg: usize) {
        let (lh, count) = self.forward.get_mut(&lg).expect("bound label");
        *count -= 1;
        if *count == 0 {
            let lh = *lh;
            self.forward.remove(&lg);
            self.backward.remove(&lh);
        }
    }
}

struct Level {
    candidates: Vec<usize>,
    next: usize,
    current: Option<usize>,
    bound_labels: Vec<usize>,
}

/// Backtracking search for a vertex bijection `g → h`.
///
/// Vertices of `g` are visited in BFS order, so each one (except component
/// roots) is matched among the neighbors of its parent's image. Candidates
/// must share the degree/distance-histogram invariant and preserve distances
/// to every vertex mapped so far.
pub fn is_isomorphic_with(
    g: &SimpleGraph,
    h: &SimpleGraph,
    options: IsoOptions,
) -> Result<Option<Vec<usize>>, CubeError> {
    let n = g.vertex_count();
    for size in [n, h.vertex_count()] {
        if size > ISO_LIMIT {
            return Err(CubeError::TooLarge {
                what: "isomorphism vertex count",
                size,
                limit: ISO_LIMIT,
            });
        }
    }
    if options.respect_labels && (g.labels().is_none() || h.labels().is_none()) {
        return Err(CubeError::Invalid(
            "label-respecting isomorphism needs labels on both graphs".into(),
        ));
    }
    if n != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    let (dg, dh) = (DistanceTable::unchecked(g), DistanceTable::unchecked(h));
    let (ig, ih) = (invariants(g, &dg), invariants(h, &dh));
    let mut class_ids: HashMap<&(usize, Vec<usize>), usize> = HashMap::new();
    for inv in ig.iter() {
        let next = class_ids.len();
        class_ids.entry(inv).or_insert(next);
    }
    let mut class_g = Vec::with_capacity(n);
    let mut class_h = Vec::with_capacity(n);
    let mut sizes = vec![0i64; class_ids.len()];
    for inv in &ig {
        let c = class_ids[inv];
        class_g.push(c);
        sizes[c] += 1;
    }
    for inv in &ih {
        match class_ids.get(inv) {
            Some(&c) => {
                class_h.push(c);
                sizes[c] -= 1;
            }
            None => return Ok(None),
        }
    }
    if sizes.iter().any(|&s| s != 0) {
        return Ok(None);
    }
    let mut class_size = vec![0usize; sizes.len()];
    for &c in &class_g {
        class_size[c] += 1;
    }

    // BFS order of g, each component rooted at its rarest-invariant vertex.
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (class_size[class_g[v]], v));
    for root in roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut labels = LabelMap::default();

    let candidates = |k: usize, map: &[usize], used: &[bool]| -> Vec<usize> {
        let v = order[k];
        let pool: Vec<usize> = match parent[v] {
            Some(p) => h.neighbors(map[p]).collect(),
            None => (0..n).collect(),
        };
        pool.into_iter()
            .filter(|&c| !used[c] && class_h[c] == class_g[v])
            .collect()
    };

    let mut levels = vec![Level {
        candidates: candidates(0, &map, &used),
        next: 0,
        current: None,
        bound_labels: Vec::new(),
    }];
    while !levels.is_empty() {
        let k = levels.len() - 1;
        let level = &mut levels[k];
        let v = order[k];
        if let Some(c) = level.current.take() {
            map[v] = usize::MAX;
            used[c] = false;
            for lg in level.bound_labels.drain(..) {
                labels.release(lg);
            }
        }
        let mut chosen = None;
        while level.next < level.candidates.len() {
            let c = level.candidates[level.next];
            level.next += 1;
            if used[c] {
                continue;
            }
            let distances_ok = order[..k].iter().all(|&u| dg.get(u, v) == dh.get(map[u], c));
            if !distances_ok {
                continue;
            }
            if options.respect_labels {
                let mut ok = true;
                for &(u, eg) in g.incident(v) {
                    if map[u] == usize::MAX {
                        continue;
                    }
                    let eh = h.edge_between(c, map[u]).expect("distance 1 implies an edge");
                    let lg = g.label(eg).unwrap();
                    if labels.try_bind(lg, h.label(eh).unwrap()) {
                        level.bound_labels.push(lg);
                    } else {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    for lg in level.bound_labels.drain(..) {
                        labels.release(lg);
                    }
                    continue;
                }
            }
            chosen = Some(c);
            break;
        }
        let Some(c) = chosen else {
            levels.pop();
            continue;
        };
        level.current = Some(c);
        map[v] = c;
        used[c] = true;
        if k + 1 == n {
            return Ok(Some(map));
        }
        let next = candidates(k + 1, &map, &used);
        levels.push(Level {
            candidates: next,
            next: 0,
            current: None,
            bound_labels: Vec::new(),
        });
    }
    Ok(None)
}
