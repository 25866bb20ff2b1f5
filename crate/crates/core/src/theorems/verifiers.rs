use super::{Side, Theorem, TheoremError, TheoremReport};
use crate::bitset::BitSet;
use crate::cube::{
    cartesian_product_all, daisy_diagnosis, is_daisy_cube, is_isomorphic, is_median_graph,
    theta_partition, CubeError, DaisyVerdict, SimpleGraph,
};
use crate::matching::{
    allowed_edges, allowed_edges_by_alternating_cycles, elementary_decomposition, fries_number,
    fries_number_by_face_subsets, is_elementary, Limit, SUBSET_FACE_LIMIT,
};
use crate::plane_graph::{
    HandleDecomposition, HandleKind, Location, PlaneBipartiteGraph, VertexId,
};
use crate::resonance::{build_resonance_graph, ResonanceGraph};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};

fn resonance(g: &PlaneBipartiteGraph, limit: Limit) -> Result<ResonanceGraph, TheoremError> {
    Ok(build_resonance_graph(g, limit)?)
}

fn daisy_side(r: &SimpleGraph) -> (Side, Value) {
    match daisy_diagnosis(r) {
        DaisyVerdict::Daisy(cert) => {
            let side = Side::new(true, format!("daisy cube with idim {}", cert.idim()))
                .with_value(cert.idim());
            (side, serde_json::to_value(&cert).unwrap())
        }
        DaisyVerdict::NotDaisy(reason) => {
            let side = Side::new(false, format!("not a daisy cube: {reason}"));
            (side, serde_json::to_value(&reason).unwrap())
        }
    }
}

fn require_elementary_non_k2(g: &PlaneBipartiteGraph, limit: Limit) -> Result<(), TheoremError> {
    if g.is_k2() {
        return Err(TheoremError::IsK2);
    }
    if !is_elementary(g, limit)? {
        return Err(TheoremError::NotElementary);
    }
    Ok(())
}

/// R(G) is K₁ (a daisy cube of idim 0) iff G is weakly elementary and every
/// elementary component is K₂.
pub fn verify_lemma_idim0(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    let r = resonance(g, limit)?;
    let (daisy, cert) = daisy_side(&r.to_simple_graph());
    let idim0 = daisy.holds && daisy.value == Some(json!(0));
    let left = Side::new(idim0, format!("R has {} vertices, {}", r.vertex_count(), daisy.evidence));

    let d = elementary_decomposition(g, limit)?;
    let all_k2 = d.k2_components == d.components.len();
    let right = Side::new(
        d.weakly_elementary && all_k2,
        format!(
            "weakly elementary: {}; {} of {} elementary components are K2",
            d.weakly_elementary,
            d.k2_components,
            d.components.len()
        ),
    );
    Ok(TheoremReport::new(
        Theorem::Idim0,
        left,
        right,
        json!({ "daisy": cert, "forbidden_edges": d.forbidden_edges.to_vec() }),
    ))
}

/// R(G) connected iff G weakly elementary.
pub fn verify_connectivity(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    let r = resonance(g, limit)?;
    let components = r.component_count();
    let left = Side::new(
        components == 1,
        format!("R has {} vertices in {components} component(s)", r.vertex_count()),
    );

    let d = elementary_decomposition(g, limit)?;
    let allowed = BitSet::from_positions(
        g.edge_count(),
        (0..g.edge_count()).filter(|&e| !d.forbidden_edges.contains(e)),
    );
    let original: BTreeSet<_> = g.finite_faces().map(|f| f.edge_set.clone()).collect();
    let new_faces: Vec<Vec<usize>> = g
        .finite_face_edge_sets_after_deletion(&allowed)
        .into_iter()
        .filter(|s| !original.contains(s))
        .map(|s| s.to_vec())
        .collect();
    let right = Side::new(
        d.weakly_elementary,
        format!(
            "{} forbidden edge(s); {} new finite face(s) after deleting them",
            d.forbidden_edges.count(),
            new_faces.len()
        ),
    );
    Ok(TheoremReport::new(
        Theorem::Connectivity,
        left,
        right,
        json!({
            "resonance_components": components,
            "forbidden_edges": d.forbidden_edges.to_vec(),
            "new_faces": new_faces,
        }),
    ))
}

/// For elementary G ≠ K₂ with n finite faces, three statements: R(G) is a
/// daisy cube of idim n; Fries(G) = n; G is peripherally 2-colorable.
pub fn verify_elementary_characterization(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    require_elementary_non_k2(g, limit)?;
    let n = g.finite_face_count();

    let r = resonance(g, limit)?;
    let (daisy, cert) = daisy_side(&r.to_simple_graph());
    let first = Side {
        holds: daisy.holds && daisy.value == Some(json!(n)),
        ..daisy
    };

    let fries = fries_number(g, limit)?;
    let second = Side::new(
        fries.value == n,
        format!("Fries number {} with {n} finite faces", fries.value),
    )
    .with_value(fries.value);

    let coloring = g.peripheral_coloring(false)?;
    let third = Side::new(
        coloring.colorable,
        coloring
            .failure
            .clone()
            .unwrap_or_else(|| format!("peripherally 2-colorable with {n} finite faces")),
    )
    .with_value(n);

    Ok(TheoremReport::new(
        Theorem::ElementaryCharacterization,
        first,
        second,
        json!({
            "finite_faces": n,
            "daisy": cert,
            "fries_witness": fries.witness.edge_ids(),
            "periphery": coloring.periphery,
        }),
    )
    .with_third(third))
}

/// For elementary G ≠ K₂ whose R(G) is a daisy cube: the Θ-classes of R(G)
/// are in bijection with the finite faces through the edge labels, and
/// idim R(G) = n.
pub fn verify_face_theta_bijection(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    require_elementary_non_k2(g, limit)?;
    let n = g.finite_face_count();
    let r = resonance(g, limit)?.to_simple_graph();
    let cert = match daisy_diagnosis(&r) {
        DaisyVerdict::Daisy(cert) => cert,
        DaisyVerdict::NotDaisy(reason) => return Err(TheoremError::NotDaisy(reason.to_string())),
    };

    let classes = theta_partition(&r)?;
    let class_labels: Vec<BTreeSet<usize>> = classes
        .iter()
        .map(|c| c.iter().map(|&e| r.label(e).expect("resonance edges are labeled")).collect())
        .collect();
    let single = class_labels.iter().all(|l| l.len() == 1);
    let image: BTreeSet<usize> = class_labels.iter().flatten().copied().collect();
    let faces: BTreeSet<usize> = g.finite_faces().map(|f| f.id).collect();
    let bijective = single && image.len() == classes.len() && image == faces;
    let left = Side::new(
        classes.len() == n && bijective,
        format!(
            "{} Θ-classes, {n} finite faces, one label per class: {single}, labels cover the faces: {}",
            classes.len(),
            image == faces
        ),
    )
    .with_value(classes.len());
    let right = Side::new(cert.idim() == n, format!("idim {} with {n} finite faces", cert.idim()))
        .with_value(cert.idim());

    let map: BTreeMap<usize, Vec<usize>> = class_labels
        .iter()
        .enumerate()
        .map(|(i, l)| (i, l.iter().copied().collect()))
        .collect();
    Ok(TheoremReport::new(
        Theorem::FaceThetaBijection,
        left,
        right,
        json!({ "class_to_faces": map, "daisy": cert }),
    ))
}

/// The structure forced by Fries(G) = n on a 2-connected plane bipartite
/// graph, computed from the classification and handle decomposition alone.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructuralConclusions {
    /// Interior vertices whose degree is not 2.
    pub interior_degree_violations: Vec<VertexId>,
    /// Exterior vertices of degree above 3.
    pub exterior_degree_violations: Vec<VertexId>,
    /// Handles of even length, as vertex paths.
    pub even_handles: Vec<Vec<VertexId>>,
}

impl StructuralConclusions {
    pub fn hold(&self) -> bool {
        self.interior_degree_violations.is_empty()
            && self.exterior_degree_violations.is_empty()
            && self.even_handles.is_empty()
    }
}

/// A graph with no vertex of degree 3 or more is a single cycle and has no
/// handles to check.
pub fn structural_conclusions(
    g: &PlaneBipartiteGraph,
) -> Result<StructuralConclusions, TheoremError> {
    let class = g.classify()?;
    let mut out = StructuralConclusions::default();
    for v in 0..g.vertex_count() {
        match class.vertices[v] {
            Location::Interior if g.degree(v) != 2 => out.interior_degree_violations.push(v),
            Location::Exterior if g.degree(v) > 3 => out.exterior_degree_violations.push(v),
            _ => {}
        }
    }
    if let HandleDecomposition::Handles(handles) = g.handles()? {
        out.even_handles = handles
            .into_iter()
            .filter(|h| h.length() % 2 == 0)
            .map(|h| h.path)
            .collect();
    }
    Ok(out)
}

/// For 2-connected G with Fries(G) = n: interior vertices have degree 2,
/// exterior ones at most 3, and all handles have odd length.
pub fn verify_structural_lemma(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    if !g.is_two_connected() {
        return Err(TheoremError::PreconditionFailed("graph is not 2-connected".into()));
    }
    let n = g.finite_face_count();
    let fries = fries_number(g, limit)?;
    if fries.value != n {
        return Err(TheoremError::PreconditionFailed(format!(
            "Fries number {} is below the {n} finite faces",
            fries.value
        )));
    }
    let left = Side::new(true, format!("Fries number equals the {n} finite faces"));
    let c = structural_conclusions(g)?;
    let right = Side::new(
        c.hold(),
        format!(
            "{} interior vertices of degree != 2, {} exterior vertices of degree > 3, {} even handles",
            c.interior_degree_violations.len(),
            c.exterior_degree_violations.len(),
            c.even_handles.len()
        ),
    );
    Ok(TheoremReport::new(
        Theorem::Structural,
        left,
        right,
        json!({ "fries_witness": fries.witness.edge_ids(), "conclusions": c }),
    ))
}

/// R(G) is a daisy cube of idim n iff G is weakly elementary and every
/// elementary component Gᵢ ≠ K₂ has a daisy R(Gᵢ) of idim nᵢ (its finite
/// faces), with n = Σnᵢ. For weakly elementary G also R(G) ≅ □ R(Gᵢ).
pub fn verify_general_characterization(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    let r = resonance(g, limit)?.to_simple_graph();
    let (left, cert) = daisy_side(&r);

    let d = elementary_decomposition(g, limit)?;
    let mut factors = Vec::new();
    let mut parts = Vec::new();
    let mut all_daisy = true;
    let mut total = 0;
    for (i, c) in d.components.iter().enumerate() {
        if c.graph.is_k2() {
            continue;
        }
        let ri = resonance(&c.graph, limit)?.to_simple_graph();
        let ni = c.graph.finite_face_count();
        let idim = is_daisy_cube(&ri).map(|cert| cert.idim());
        all_daisy &= idim == Some(ni);
        total += ni;
        parts.push(json!({
            "component": i,
            "vertices": c.vertices,
            "finite_faces": ni,
            "resonance_vertices": ri.vertex_count(),
            "daisy_idim": idim,
        }));
        factors.push(ri.without_labels());
    }
    let right = Side::new(
        d.weakly_elementary && all_daisy,
        format!(
            "weakly elementary: {}; {} non-K2 components, all daisy with idim = faces: {all_daisy}; sum {total}",
            d.weakly_elementary,
            factors.len()
        ),
    )
    .with_value(total);

    let mut product_iso = Value::Null;
    let mut product_ok = true;
    if d.weakly_elementary {
        let product = cartesian_product_all(&factors);
        let iso = is_isomorphic(&r.without_labels(), &product)?;
        product_ok = iso.is_some();
        product_iso = json!({ "product_vertices": product.vertex_count(), "isomorphism": iso });
    }
    Ok(TheoremReport::new(
        Theorem::GeneralCharacterization,
        left,
        right,
        json!({ "daisy": cert, "components": parts, "product": product_iso }),
    )
    .require(product_ok))
}

/// G₁ □ … □ Gₖ is a daisy cube iff every Gᵢ is, and then its idim is the
/// sum of theirs.
pub fn verify_product_theorem(factors: &[SimpleGraph]) -> Result<TheoremReport, TheoremError> {
    let product = cartesian_product_all(factors);
    let (left, cert) = daisy_side(&product);

    let idims: Vec<Option<usize>> = factors
        .iter()
        .map(|f| is_daisy_cube(f).map(|c| c.idim()))
        .collect();
    let all = idims.iter().all(Option::is_some);
    let sum: usize = idims.iter().flatten().sum();
    let right = Side::new(
        all,
        format!("factor idims {idims:?}; all daisy: {all}"),
    )
    .with_value(sum);
    Ok(TheoremReport::new(
        Theorem::Product,
        left,
        right,
        json!({
            "product_vertices": product.vertex_count(),
            "factor_idims": idims,
            "maximal_vertices": cert.get("maximal_vertices"),
        }),
    ))
}

/// For a peripherally 2-colorable G with an interior handle, R(G) and
/// R(G′) for the outerplanarization G′ are isomorphic. One side searches for
/// any isomorphism, the other checks the explicit matching map.
pub fn verify_outerplanarization(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    if g.is_k2() || !g.peripheral_coloring(true)?.colorable {
        return Err(TheoremError::PreconditionFailed(
            "graph is not peripherally 2-colorable".into(),
        ));
    }
    let interior = g
        .handles()?
        .handles()
        .iter()
        .filter(|h| h.kind == HandleKind::Interior)
        .count();
    if interior == 0 {
        return Err(TheoremError::PreconditionFailed("no interior handle".into()));
    }
    let out = g.outerplanarize()?;
    let rg = resonance(g, limit)?;
    let rh = resonance(&out.graph, limit)?;

    let iso = is_isomorphic(&rg.to_simple_graph(), &rh.to_simple_graph())?;
    let left = Side::new(
        iso.is_some(),
        format!(
            "R(G) has {} vertices and {} edges, R(G') has {} and {}",
            rg.vertex_count(),
            rg.edge_count(),
            rh.vertex_count(),
            rh.edge_count()
        ),
    );

    let image: Vec<Option<usize>> = rg
        .vertices
        .iter()
        .map(|m| rh.vertices.binary_search_by(|x| x.edges().cmp(&out.map.apply(m.edges()))).ok())
        .collect();
    let injective = image.iter().flatten().collect::<BTreeSet<_>>().len() == image.len();
    let onto = image.len() == rh.vertex_count() && image.iter().all(Option::is_some);
    let edge_set: BTreeSet<(usize, usize, usize)> =
        rh.edges.iter().map(|e| (e.a, e.b, e.face)).collect();
    let edges_kept = onto
        && rg.edge_count() == rh.edge_count()
        && rg.edges.iter().all(|e| {
            let (a, b) = (image[e.a].unwrap(), image[e.b].unwrap());
            edge_set.contains(&(a.min(b), a.max(b), out.map.face_map[e.face]))
        });
    let right = Side::new(
        injective && onto && edges_kept,
        format!(
            "matching map is a bijection: {}; preserves labeled edges: {edges_kept}",
            injective && onto
        ),
    );
    Ok(TheoremReport::new(
        Theorem::Outerplanarization,
        left,
        right,
        json!({
            "isomorphism": iso,
            "matching_map": image,
            "outerplane_vertices": out.graph.vertex_count(),
        }),
    ))
}

/// R(G) is median iff G is weakly elementary. Only applies while R(G) has
/// at most `max_vertices` vertices.
pub fn verify_median(
    g: &PlaneBipartiteGraph,
    limit: Limit,
    max_vertices: usize,
) -> Result<TheoremReport, TheoremError> {
    let r = resonance(g, limit)?;
    if r.vertex_count() > max_vertices {
        return Err(TheoremError::PreconditionFailed(format!(
            "R has {} vertices, above {max_vertices}",
            r.vertex_count()
        )));
    }
    let median = match is_median_graph(&r.to_simple_graph()) {
        Ok(m) => m,
        Err(CubeError::Disconnected) => false,
        Err(e) => return Err(e.into()),
    };
    let left = Side::new(median, format!("R with {} vertices is median: {median}", r.vertex_count()));
    let we = elementary_decomposition(g, limit)?.weakly_elementary;
    let right = Side::new(we, format!("weakly elementary: {we}"));
    Ok(TheoremReport::new(
        Theorem::Median,
        left,
        right,
        json!({ "resonance_vertices": r.vertex_count() }),
    ))
}

/// Allowed edges from the union of all perfect matchings against those
/// found by alternating reachability from a single matching.
pub fn verify_allowed_edges(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    let slow = allowed_edges(g, limit)?;
    let fast = allowed_edges_by_alternating_cycles(g)?;
    let left = Side::new(true, format!("{} allowed edges by enumeration", slow.count()))
        .with_value(slow.to_vec());
    let right = Side::new(true, format!("{} allowed edges by alternating cycles", fast.count()))
        .with_value(fast.to_vec());
    Ok(TheoremReport::new(
        Theorem::AllowedEdges,
        left,
        right,
        json!({ "difference": slow.xor(&fast).to_vec() }),
    ))
}

/// Fries number by maximizing over matchings against the largest
/// simultaneously resonant face set.
pub fn verify_fries_oracle(
    g: &PlaneBipartiteGraph,
    limit: Limit,
) -> Result<TheoremReport, TheoremError> {
    if g.finite_face_count() > SUBSET_FACE_LIMIT {
        return Err(TheoremError::PreconditionFailed(format!(
            "{} finite faces, above {SUBSET_FACE_LIMIT}",
            g.finite_face_count()
        )));
    }
    let per_matching = fries_number(g, limit)?;
    let by_subsets = fries_number_by_face_subsets(g)?;
    let left = Side::new(true, "maximum over perfect matchings").with_value(per_matching.value);
    let right = Side::new(true, "largest feasible face set").with_value(by_subsets);
    Ok(TheoremReport::new(
        Theorem::FriesSubsets,
        left,
        right,
        json!({ "witness": per_matching.witness.edge_ids() }),
    ))
}
