//! JSON document format for precubical sets.
//!
//! ```json
//! {
//!   "cells": { "0": ["0", "1"], "1": ["*"] },
//!   "faces": [
//!     { "cell": "*", "dim": 1, "index": 1, "sign": 0, "value": "0" },
//!     { "cell": "*", "dim": 1, "index": 1, "sign": 1, "value": "1" }
//!   ],
//!   "format_version": "1",
//!   "top_dim": 1
//! }
//! ```
//!
//! Every face `∂ᵢᵅ` is an explicit record. Serialization is canonical: keys
//! in alphabetical order, labels sorted, face records sorted by
//! `(dim, cell, index, sign)`. The empty precubical set has `top_dim = -1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pcs::{FaceKey, PrecubicalSet, Presentation, ValidationReport};
use crate::word::Sign;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceRecord {
    pub cell: String,
    pub dim: usize,
    pub index: usize,
    pub sign: Sign,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub cells: BTreeMap<usize, Vec<String>>,
    pub faces: Vec<FaceRecord>,
    pub format_version: String,
    pub top_dim: i64,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown format version {0:?} (expected \"1\")")]
    UnknownVersion(String),
    #[error("top_dim {top_dim} is below the {dim}-cells listed in the document")]
    TopDim { top_dim: i64, dim: usize },
    #[error("duplicate {dim}-cell label {label:?}")]
    DuplicateCell { dim: usize, label: String },
    #[error("duplicate face record (dim {dim}, i {index}, α {sign}, cell {cell:?})")]
    DuplicateFace { dim: usize, index: usize, sign: Sign, cell: String },
    #[error("invalid precubical set: {0}")]
    Invalid(ValidationReport),
}

impl Document {
    pub fn from_complex(k: &PrecubicalSet) -> Self {
        let p = k.to_presentation();
        Document {
            cells: p.cells.iter().map(|(&d, s)| (d, s.iter().cloned().collect())).collect(),
            faces: p
                .faces
                .iter()
                .map(|(key, value)| FaceRecord {
                    cell: key.cell.clone(),
                    dim: key.dim,
                    index: key.index,
                    sign: key.sign,
                    value: value.clone(),
                })
                .collect(),
            format_version: FORMAT_VERSION.to_owned(),
            top_dim: k.top_dim().map_or(-1, |d| d as i64),
        }
    }

    /// Structural checks only; the cubical relations are left to
    /// [`crate::pcs::validate_presentation`].
    pub fn to_presentation(&self) -> Result<Presentation, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::UnknownVersion(self.format_version.clone()));
        }
        let mut p = Presentation::new();
        for (&dim, labels) in &self.cells {
            if dim as i64 > self.top_dim && !labels.is_empty() {
                return Err(DocumentError::TopDim { top_dim: self.top_dim, dim });
            }
            let set = p.cells.entry(dim).or_default();
            for l in labels {
                if !set.insert(l.clone()) {
                    return Err(DocumentError::DuplicateCell { dim, label: l.clone() });
                }
            }
        }
        for r in &self.faces {
            let key = FaceKey::new(r.dim, r.cell.clone(), r.index, r.sign);
            if p.faces.insert(key, r.value.clone()).is_some() {
                return Err(DocumentError::DuplicateFace {
                    dim: r.dim,
                    index: r.index,
                    sign: r.sign,
                    cell: r.cell.clone(),
                });
            }
        }
        Ok(p)
    }
}

/// Parses a document without checking the cubical relations.
pub fn parse_presentation(bytes: &[u8]) -> Result<Presentation, DocumentError> {
    let doc: Document = serde_json::from_slice(bytes).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_presentation()
}

/// Parses and validates a document.
pub fn parse(bytes: &[u8]) -> Result<PrecubicalSet, DocumentError> {
    let p = parse_presentation(bytes)?;
    p.build().map_err(|e| match e {
        crate::Error::Invalid(report) => DocumentError::Invalid(report),
        other => unreachable!("build only fails validation: {other}"),
    })
}

/// Canonical pretty-printed JSON with a trailing newline.
pub fn serialize(k: &PrecubicalSet) -> String {
    to_json(&Document::from_complex(k))
}

/// Pretty JSON with a trailing newline; used for every report.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
