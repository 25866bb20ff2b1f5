//! Executable characterizations. Each verifier computes the two (or three)
//! sides of a statement by separate code paths and reports whether they agree,
//! together with structured witnesses.

mod corpus;
mod verifiers;

pub use corpus::{
    build_corpus, product_factor_pool, run_corpus, CorpusItem, CorpusReport, CorpusSpec, Failure,
    Skipped, Tally, DEFAULT_PRODUCT_SEED, MEDIAN_CORPUS_LIMIT,
};
pub use verifiers::{
    structural_conclusions, verify_allowed_edges, verify_connectivity,
    verify_elementary_characterization, verify_face_theta_bijection, verify_fries_oracle,
    verify_general_characterization, verify_lemma_idim0, verify_median,
    verify_outerplanarization, verify_product_theorem, verify_structural_lemma,
    StructuralConclusions,
};

use crate::cube::CubeError;
use crate::generators::GeneratorError;
use crate::matching::MatchingError;
use crate::plane_graph::PlaneGraphError;
use serde::Serialize;
use serde_json::Value;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error(transparent)]
    PlaneGraph(#[from] PlaneGraphError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("graph is K2")]
    IsK2,
    #[error("graph is not elementary")]
    NotElementary,
    #[error("resonance graph is not a daisy cube: {0}")]
    NotDaisy(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),
}

impl TheoremError {
    /// A matching, isomorphism or size cap was hit.
    pub fn is_limit_exceeded(&self) -> bool {
        matches!(
            self,
            TheoremError::Matching(MatchingError::LimitExceeded { .. })
                | TheoremError::PlaneGraph(PlaneGraphError::Matching(
                    MatchingError::LimitExceeded { .. }
                ))
                | TheoremError::Generator(GeneratorError::Graph(PlaneGraphError::Matching(
                    MatchingError::LimitExceeded { .. }
                )))
                | TheoremError::Cube(CubeError::TooLarge { .. })
        )
    }

    /// The statement does not apply to this input.
    pub fn is_not_applicable(&self) -> bool {
        matches!(
            self,
            TheoremError::IsK2
                | TheoremError::NotElementary
                | TheoremError::NotDaisy(_)
                | TheoremError::PreconditionFailed(_)
                | TheoremError::Matching(MatchingError::NoPerfectMatching)
                | TheoremError::PlaneGraph(
                    PlaneGraphError::IsK2
                        | PlaneGraphError::NotElementary
                        | PlaneGraphError::NotPeripherally2Colorable
                        | PlaneGraphError::Matching(MatchingError::NoPerfectMatching)
                )
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// R(G) = K₁ iff weakly elementary with only K₂ components.
    Idim0,
    /// R(G) connected iff weakly elementary.
    Connectivity,
    /// Daisy R with idim n, Fries = n, peripherally 2-colorable.
    ElementaryCharacterization,
    /// Θ-classes of a daisy R(G) correspond to finite faces.
    FaceThetaBijection,
    /// Fries = n forces the degree and handle-parity structure.
    Structural,
    /// Daisy R(G) iff every non-K₂ elementary component has one.
    GeneralCharacterization,
    /// A product is daisy iff every factor is, with additive idim.
    Product,
    /// Outerplanarization preserves the resonance graph.
    Outerplanarization,
    /// R(G) is median.
    Median,
    /// Fast allowed edges against the enumeration union.
    AllowedEdges,
    /// Fries number over face subsets against per-matching maximization.
    FriesSubsets,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::Idim0,
        Theorem::Connectivity,
        Theorem::ElementaryCharacterization,
        Theorem::FaceThetaBijection,
        Theorem::Structural,
        Theorem::GeneralCharacterization,
        Theorem::Product,
        Theorem::Outerplanarization,
        Theorem::Median,
        Theorem::AllowedEdges,
        Theorem::FriesSubsets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Idim0 => "idim0",
            Theorem::Connectivity => "connectivity",
            Theorem::ElementaryCharacterization => "elementary_characterization",
            Theorem::FaceThetaBijection => "face_theta_bijection",
            Theorem::Structural => "structural",
            Theorem::GeneralCharacterization => "general_characterization",
            Theorem::Product => "product",
            Theorem::Outerplanarization => "outerplanarization",
            Theorem::Median => "median",
            Theorem::AllowedEdges => "allowed_edges",
            Theorem::FriesSubsets => "fries_subsets",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One side of a statement: its truth value, an optional quantity, and a
/// human-readable account of how it was decided.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Side {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    pub evidence: String,
}

impl Side {
    pub fn new(holds: bool, evidence: impl Into<String>) -> Self {
        Side {
            holds,
            value: None,
            evidence: evidence.into(),
        }
    }

    pub fn with_value(mut self, value: impl Into<Value>) -> Self {
        self.value = Some(value.into());
        self
    }

    /// Same truth value and, when both hold and carry one, the same value.
    pub fn agrees_with(&self, other: &Side) -> bool {
        if self.holds != other.holds {
            return false;
        }
        match (self.holds, &self.value, &other.value) {
            (true, Some(a), Some(b)) => a == b,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub graph: String,
    pub left: Side,
    pub right: Side,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub third: Option<Side>,
    pub agree: bool,
    pub witnesses: Value,
}

impl TheoremReport {
    /// Agreement is pairwise over all sides.
    pub fn new(theorem: Theorem, left: Side, right: Side, witnesses: Value) -> Self {
        let agree = left.agrees_with(&right);
        TheoremReport {
            theorem,
            graph: String::new(),
            left,
            right,
            third: None,
            agree,
            witnesses,
        }
    }

    pub fn with_third(mut self, third: Side) -> Self {
        self.agree = self.left.agrees_with(&self.right)
            && self.left.agrees_with(&third)
            && self.right.agrees_with(&third);
        self.third = Some(third);
        self
    }

    pub fn named(mut self, graph: impl Into<String>) -> Self {
        self.graph = graph.into();
        self
    }

    /// Forces disagreement when an auxiliary check fails.
    pub fn require(mut self, ok: bool) -> Self {
        self.agree &= ok;
        self
    }

    pub fn sides(&self) -> impl Iterator<Item = &Side> {
        [&self.left, &self.right].into_iter().chain(self.third.as_ref())
    }
}

#[cfg(test)]
mod tests;
