use thiserror::Error;

use crate::pcs::ValidationReport;
use crate::word::Sign;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no {dim}-cell labelled {label:?}")]
    UnknownCell { dim: usize, label: String },

    #[error("unknown state {0:?}")]
    UnknownState(String),

    #[error("word of length {word_len} cannot act on a {cell_dim}-cell")]
    LengthMismatch { word_len: usize, cell_dim: usize },

    #[error("cannot compose: outer word has {stars} stars but inner word has length {inner_len}")]
    NotComposable { stars: usize, inner_len: usize },

    #[error("face index {index} out of range for a {dim}-cell")]
    FaceIndex { dim: usize, index: usize },

    #[error("invalid cube word {0:?}")]
    BadWord(String),

    #[error("empty edge path")]
    EmptyPath,

    #[error("edge path breaks at position {position}: {left:?} ends at {end:?} but {right:?} starts at {start:?}")]
    BrokenPath { position: usize, left: String, right: String, end: String, start: String },

    #[error("map is not defined on {dim}-cell {label:?}")]
    PartialMap { dim: usize, label: String },

    #[error("map does not commute with the face {index}/{sign} of {dim}-cell {label:?}")]
    NotMorphism { dim: usize, label: String, index: usize, sign: Sign },

    #[error("pushout legs must share the same domain")]
    DomainMismatch,

    #[error("invalid precubical set: {0}")]
    Invalid(ValidationReport),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("bad parameters for family {family:?}: {reason}")]
    BadParams { family: String, reason: String },
}
