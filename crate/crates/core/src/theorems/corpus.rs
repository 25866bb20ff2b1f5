use super::verifiers::*;
use super::{Theorem, TheoremError, TheoremReport};
use crate::cube::{fibonacci_cube, hypercube, path, cycle, SimpleGraph};
use crate::generators::{
    bridged_anthracene_hexagon, bridged_hexagons, coronene_like, cycle_with_interior_paths,
    disjoint_union, enumerate_chains, even_cycle, fibonaccene, figure5_analogue, k2, polyacene,
    search_non_weakly_elementary, MAX_CHAIN_HEXAGONS, MAX_SEARCH_VERTICES,
};
use crate::io::to_json_value;
use crate::matching::Limit;
use crate::plane_graph::{Location, PlaneBipartiteGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub const DEFAULT_PRODUCT_SEED: u64 = 0x5eed;
pub const MEDIAN_CORPUS_LIMIT: usize = 200;
const PRODUCT_TRIPLES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSpec {
    Empty,
    /// All catacondensed chains with 2 to N hexagons.
    Chains(usize),
    /// Fixed graphs: cycles, coronene, bridged and decomposable graphs,
    /// graphs with long interior handles, a non-weakly-elementary witness.
    Special,
    /// Every ordered pair of the factor pool and sampled triples.
    Products { seed: u64 },
    /// Chains up to 6 hexagons, the special graphs and the products.
    All,
}

impl FromStr for CorpusSpec {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TheoremError::InvalidCorpus(s.to_string());
        match s.trim() {
            "" | "empty" => Ok(CorpusSpec::Empty),
            "special" => Ok(CorpusSpec::Special),
            "products" => Ok(CorpusSpec::Products {
                seed: DEFAULT_PRODUCT_SEED,
            }),
            "all" => Ok(CorpusSpec::All),
            other => {
                let (kind, arg) = other.split_once(':').ok_or_else(bad)?;
                match kind {
                    "chains" => {
                        let n: usize = arg.parse().map_err(|_| bad())?;
                        if !(2..=MAX_CHAIN_HEXAGONS).contains(&n) {
                            return Err(TheoremError::InvalidCorpus(format!(
                                "chains:{n} is outside 2..={MAX_CHAIN_HEXAGONS}"
                            )));
                        }
                        Ok(CorpusSpec::Chains(n))
                    }
                    "products" => Ok(CorpusSpec::Products {
                        seed: arg.parse().map_err(|_| bad())?,
                    }),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Empty => f.write_str("empty"),
            CorpusSpec::Chains(n) => write!(f, "chains:{n}"),
            CorpusSpec::Special => f.write_str("special"),
            CorpusSpec::Products { seed } => write!(f, "products:{seed}"),
            CorpusSpec::All => f.write_str("all"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum CorpusItem {
    Plane {
        id: String,
        graph: PlaneBipartiteGraph,
    },
    Product {
        id: String,
        factors: Vec<SimpleGraph>,
    },
}

impl CorpusItem {
    pub fn id(&self) -> &str {
        match self {
            CorpusItem::Plane { id, .. } | CorpusItem::Product { id, .. } => id,
        }
    }

    fn plane(id: impl Into<String>, graph: PlaneBipartiteGraph) -> Self {
        CorpusItem::Plane {
            id: id.into(),
            graph,
        }
    }
}

fn chains(max_h: usize) -> Result<Vec<CorpusItem>, TheoremError> {
    Ok(enumerate_chains(max_h)?
        .into_iter()
        .map(|c| CorpusItem::plane(format!("chain{}:{}", c.code.hexagons(), c.code), c.graph))
        .collect())
}

/// Subdivides the first interior edge twice, giving an interior handle of
/// length 3.
fn with_long_interior_handle(g: &PlaneBipartiteGraph) -> Result<PlaneBipartiteGraph, TheoremError> {
    let class = g.classify()?;
    let e = (0..g.edge_count())
        .find(|&e| class.edges[e] == Location::Interior)
        .ok_or_else(|| TheoremError::InvalidCorpus("no interior edge".into()))?;
    Ok(g.subdivide_edge(e, 2)?)
}

fn special() -> Result<Vec<CorpusItem>, TheoremError> {
    let c6 = even_cycle(3)?;
    let naphthalene = polyacene(2)?;
    Ok(vec![
        CorpusItem::plane("K2", k2()),
        CorpusItem::plane("2K2", disjoint_union(&[&k2(), &k2()])?),
        CorpusItem::plane("C4", even_cycle(2)?),
        CorpusItem::plane("C6", c6.clone()),
        CorpusItem::plane("C8", even_cycle(4)?),
        CorpusItem::plane("coronene_like", coronene_like()),
        CorpusItem::plane("bridged_hexagons", bridged_hexagons()),
        CorpusItem::plane("bridged_anthracene_hexagon", bridged_anthracene_hexagon()),
        CorpusItem::plane("figure5_analogue", figure5_analogue()),
        CorpusItem::plane("C6+naphthalene", disjoint_union(&[&c6, &naphthalene])?),
        CorpusItem::plane("theta:8:3", cycle_with_interior_paths(8, &[(0, 3, 3)])?),
        CorpusItem::plane(
            "theta:12:3:3",
            cycle_with_interior_paths(12, &[(0, 3, 3), (6, 9, 3)])?,
        ),
        CorpusItem::plane(
            "fibonaccene4+handle",
            with_long_interior_handle(&fibonaccene(4)?)?,
        ),
        CorpusItem::plane(
            "non_weakly_elementary",
            search_non_weakly_elementary(MAX_SEARCH_VERTICES)?.graph,
        ),
    ])
}

/// K₂, P₃, P₄, Q₂, Q₃, C₆ and Γ₃, Γ₄, Γ₅.
pub fn product_factor_pool() -> Vec<(&'static str, SimpleGraph)> {
    vec![
        ("K2", path(2)),
        ("P3", path(3)),
        ("P4", path(4)),
        ("Q2", hypercube(2).unwrap()),
        ("Q3", hypercube(3).unwrap()),
        ("C6", cycle(6)),
        ("Fib3", fibonacci_cube(3).unwrap()),
        ("Fib4", fibonacci_cube(4).unwrap()),
        ("Fib5", fibonacci_cube(5).unwrap()),
    ]
}

fn products(seed: u64) -> Vec<CorpusItem> {
    let pool = product_factor_pool();
    let item = |idx: &[usize]| CorpusItem::Product {
        id: idx.iter().map(|&i| pool[i].0).collect::<Vec<_>>().join("x"),
        factors: idx.iter().map(|&i| pool[i].1.clone()).collect(),
    };
    let mut out = Vec::new();
    for a in 0..pool.len() {
        for b in 0..pool.len() {
            out.push(item(&[a, b]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PRODUCT_TRIPLES {
        let t: Vec<usize> = (0..3).map(|_| rng.random_range(0..pool.len())).collect();
        out.push(item(&t));
    }
    out
}

pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusItem>, TheoremError> {
    Ok(match spec {
        CorpusSpec::Empty => Vec::new(),
        CorpusSpec::Chains(n) => chains(*n)?,
        CorpusSpec::Special => special()?,
        CorpusSpec::Products { seed } => products(*seed),
        CorpusSpec::All => {
            let mut all = chains(6)?;
            all.extend(special()?);
            all.extend(products(DEFAULT_PRODUCT_SEED));
            all
        }
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub agreed: usize,
    pub skipped: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub graph: String,
    pub theorem: Theorem,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph: String,
    pub theorem: Theorem,
    pub error: String,
    pub limit_exceeded: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusReport {
    pub corpus: String,
    pub graphs: usize,
    pub disagreements: usize,
    pub summary: BTreeMap<String, Tally>,
    pub reports: Vec<TheoremReport>,
    pub skipped: Vec<Skipped>,
    pub errors: Vec<Failure>,
}

impl CorpusReport {
    pub fn is_empty(&self) -> bool {
        self.graphs == 0
    }

    /// No disagreement and no error.
    pub fn is_clean(&self) -> bool {
        self.disagreements == 0 && self.errors.is_empty()
    }

    pub fn limit_exceeded(&self) -> bool {
        self.errors.iter().any(|f| f.limit_exceeded)
    }

    pub fn disagreeing(&self) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(|r| !r.agree)
    }

    pub fn reports_for(&self, theorem: Theorem) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(move |r| r.theorem == theorem)
    }
}

type Outcome = (Theorem, Result<TheoremReport, TheoremError>);

fn run_item(item: &CorpusItem, limit: Limit) -> Vec<Outcome> {
    match item {
        CorpusItem::Plane { graph: g, .. } => vec![
            (Theorem::Idim0, verify_lemma_idim0(g, limit)),
            (Theorem::Connectivity, verify_connectivity(g, limit)),
            (
                Theorem::ElementaryCharacterization,
                verify_elementary_characterization(g, limit),
            ),
            (Theorem::FaceThetaBijection, verify_face_theta_bijection(g, limit)),
            (Theorem::Structural, verify_structural_lemma(g, limit)),
            (
                Theorem::GeneralCharacterization,
                verify_general_characterization(g, limit),
            ),
            (Theorem::Outerplanarization, verify_outerplanarization(g, limit)),
            (Theorem::Median, verify_median(g, limit, MEDIAN_CORPUS_LIMIT)),
            (Theorem::AllowedEdges, verify_allowed_edges(g, limit)),
            (Theorem::FriesSubsets, verify_fries_oracle(g, limit)),
        ],
        CorpusItem::Product { factors, .. } => {
            vec![(Theorem::Product, verify_product_theorem(factors))]
        }
    }
}

fn replayable(item: &CorpusItem) -> Value {
    match item {
        CorpusItem::Plane { graph, .. } => to_json_value(graph),
        CorpusItem::Product { factors, .. } => json!(factors
            .iter()
            .map(|f| json!({ "vertices": f.vertex_count(), "edges": f.edges() }))
            .collect::<Vec<_>>()),
    }
}

/// Runs every applicable verifier on every corpus graph, in parallel over
/// graphs, with output in corpus order. Inapplicable statements are recorded
/// as skipped; other errors are collected without stopping the run.
/// Disagreeing reports carry the serialized input under `witnesses.input`.
pub fn run_corpus(spec: &CorpusSpec, limit: Limit) -> Result<CorpusReport, TheoremError> {
    let items = build_corpus(spec)?;
    let outcomes: Vec<Vec<Outcome>> = items.par_iter().map(|i| run_item(i, limit)).collect();

    let mut report = CorpusReport {
        corpus: spec.to_string(),
        graphs: items.len(),
        ..CorpusReport::default()
    };
    for (item, results) in items.iter().zip(outcomes) {
        for (theorem, result) in results {
            let tally = report.summary.entry(theorem.name().to_string()).or_default();
            match result {
                Ok(r) => {
                    let mut r = r.named(item.id());
                    tally.checked += 1;
                    if r.agree {
                        tally.agreed += 1;
                    } else {
                        report.disagreements += 1;
                        if let Value::Object(w) = &mut r.witnesses {
                            w.insert("input".into(), replayable(item));
                        }
                    }
                    report.reports.push(r);
                }
                Err(e) if e.is_not_applicable() => {
                    tally.skipped += 1;
                    report.skipped.push(Skipped {
                        graph: item.id().to_string(),
                        theorem,
                        reason: e.to_string(),
                    });
                }
                Err(e) => {
                    tally.errors += 1;
                    report.errors.push(Failure {
                        graph: item.id().to_string(),
                        theorem,
                        error: e.to_string(),
                        limit_exceeded: e.is_limit_exceeded(),
                    });
                }
            }
        }
    }
    Ok(report)
}
