use thiserror::Error;

use crate::cartan::Weight;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {0} is not a Dynkin node (expected 1 or 2)")]
    InvalidIndex(i64),

    #[error("weight {0} is not dominant")]
    NonDominant(Weight),

    #[error("c12 + c21 must equal 1, got c12={c12}, c21={c21}")]
    InvalidConfig { c12: i32, c21: i32 },

    #[error("seed {0} is not a highest-weight element")]
    NotHighestWeight(String),

    #[error("vertex cap of {cap} exceeded during component generation")]
    VertexCapExceeded { cap: usize },

    #[error("normal form did not terminate within {cap} rewrites; last word: {last}")]
    RewriteCapExceeded { cap: usize, last: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("word is not canonical: {0}")]
    NonCanonical(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("not in the component: {0}")]
    NotInComponent(String),

    #[error("operator word {prefix} is not defined on the target element")]
    Transport { prefix: String },

    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
