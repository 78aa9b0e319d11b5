use thiserror::Error;

/// Malformed category data, as opposed to a table that is well formed but
/// violates the category axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{what}: index {index} out of bounds (limit {bound})")]
    IndexOutOfBounds {
        what: String,
        index: usize,
        bound: usize,
    },
    #[error("{what} has {found} entries, expected {expected}")]
    TableShape {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{morphisms} morphisms exceeds the limit of {limit}")]
    ResourceGuard { morphisms: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalleryError {
    #[error("invalid gallery parameters: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("random generation gave up after {0} attempts")]
    RetryExhausted(usize),
}

impl GalleryError {
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            GalleryError::Structure(StructureError::ResourceGuard { .. })
        )
    }
}

/// A verifier was called outside its contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("contract violation: {0}")]
    Contract(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CMonError {
    #[error("no addition table for hom({0}, {1})")]
    MissingHomset(String, String),
    #[error("hom({homset}): {detail}")]
    Table { homset: String, detail: String },
    #[error("addition is not commutative in hom({homset}): {left} + {right}")]
    NotCommutative {
        homset: String,
        left: String,
        right: String,
    },
    #[error("addition is not associative in hom({homset})")]
    NotAssociative { homset: String },
    #[error("zero of hom({homset}) is not neutral for {element}")]
    NotNeutral { homset: String, element: String },
    #[error("composition does not distribute over addition: {detail}")]
    NotDistributive { detail: String },
    #[error("the homset zeros do not form a zero structure: {0}")]
    Zeros(String),
}
