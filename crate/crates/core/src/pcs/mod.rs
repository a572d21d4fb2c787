//! Precubical sets: graded cells with face maps `∂ᵢᵅ` subject to the cubical
//! relations `∂ᵢᵅ∂ⱼᵝ = ∂ⱼ₋₁ᵝ∂ᵢᵅ` for `i < j`.
//!
//! Raw data lives in a [`Presentation`], which may be malformed. Building a
//! [`PrecubicalSet`] from it runs [`validate`] and only succeeds on an empty
//! report, so every `PrecubicalSet` value satisfies the relations.
//!
//! Face indices are 1-based, as in `∂ᵢᵅ`, and signs are [`Sign`] values.

mod category;
mod glue;
mod iso;
mod morphism;
mod standard;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{CubeWord, Letter, Sign};

pub use category::{cube_category, CubeArrow, CubeDiagram};
pub use glue::{pushout, pushout_with_legs, tensor, tensor_many, Pushout};
pub use iso::find_isomorphism;
pub use morphism::CubicalMap;
pub use standard::{boundary_cube, standard_cube};

/// A cell named by its dimension and a label unique within that dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellId {
    pub dim: usize,
    pub label: String,
}

impl CellId {
    pub fn new(dim: usize, label: impl Into<String>) -> Self {
        CellId { dim, label: label.into() }
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.dim, self.label)
    }
}

/// Key of one face record `∂ᵢᵅ(cell)`; ordered by dimension, cell, index, sign.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceKey {
    pub dim: usize,
    pub cell: String,
    pub index: usize,
    pub sign: Sign,
}

impl FaceKey {
    pub fn new(dim: usize, cell: impl Into<String>, index: usize, sign: Sign) -> Self {
        FaceKey { dim, cell: cell.into(), index, sign }
    }
}

/// Unchecked cell and face data.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub cells: BTreeMap<usize, BTreeSet<String>>,
    pub faces: BTreeMap<FaceKey, String>,
}

impl Presentation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_cell(&mut self, dim: usize, label: impl Into<String>) -> &mut Self {
        self.cells.entry(dim).or_default().insert(label.into());
        self
    }

    pub fn set_face(
        &mut self,
        dim: usize,
        cell: impl Into<String>,
        index: usize,
        sign: Sign,
        value: impl Into<String>,
    ) -> &mut Self {
        self.faces.insert(FaceKey::new(dim, cell, index, sign), value.into());
        self
    }

    fn has_cell(&self, dim: usize, label: &str) -> bool {
        self.cells.get(&dim).is_some_and(|s| s.contains(label))
    }

    fn face_of(&self, dim: usize, cell: &str, index: usize, sign: Sign) -> Option<&String> {
        self.faces.get(&FaceKey::new(dim, cell, index, sign)).filter(|v| self.has_cell(dim - 1, v))
    }

    /// Validates and freezes the presentation.
    pub fn build(&self) -> Result<PrecubicalSet> {
        let report = validate_presentation(self);
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        let top = self.cells.iter().filter(|(_, s)| !s.is_empty()).map(|(&d, _)| d).max();
        let dims = top.map_or(0, |t| t + 1);
        let labels: Vec<Vec<String>> =
            (0..dims).map(|d| self.cells.get(&d).map(|s| s.iter().cloned().collect()).unwrap_or_default()).collect();
        let index: Vec<HashMap<String, usize>> =
            labels.iter().map(|ls| ls.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect()).collect();
        let mut faces = vec![Vec::new(); dims];
        for n in 1..dims {
            let mut table = Vec::with_capacity(labels[n].len() * 2 * n);
            for cell in &labels[n] {
                for i in 1..=n {
                    for sign in Sign::BOTH {
                        let value = &self.faces[&FaceKey::new(n, cell.clone(), i, sign)];
                        table.push(index[n - 1][value]);
                    }
                }
            }
            faces[n] = table;
        }
        Ok(PrecubicalSet { labels, index, faces })
    }
}

/// A finite precubical set whose cubical relations are known to hold.
///
/// Labels are stored sorted within each dimension, so the index of a cell is
/// its position in lexicographic label order. Trailing empty dimensions are
/// dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecubicalSet {
    labels: Vec<Vec<String>>,
    index: Vec<HashMap<String, usize>>,
    // faces[n][cell * 2n + (i - 1) * 2 + α]
    faces: Vec<Vec<usize>>,
}

impl PrecubicalSet {
    pub fn empty() -> Self {
        PrecubicalSet { labels: Vec::new(), index: Vec::new(), faces: Vec::new() }
    }

    /// Highest dimension holding a cell, `None` when empty.
    pub fn top_dim(&self) -> Option<usize> {
        self.labels.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of cells per dimension, from 0 up to the top dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.labels.get(dim).map_or(0, Vec::len)
    }

    pub fn total_cells(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    /// Sorted labels of the cells of dimension `dim`.
    pub fn cells(&self, dim: usize) -> &[String] {
        self.labels.get(dim).map_or(&[], |v| v.as_slice())
    }

    pub fn cell_ids(&self) -> impl Iterator<Item = CellId> + '_ {
        self.labels.iter().enumerate().flat_map(|(d, ls)| ls.iter().map(move |l| CellId::new(d, l.clone())))
    }

    pub fn label(&self, dim: usize, idx: usize) -> &str {
        &self.labels[dim][idx]
    }

    pub fn index_of(&self, dim: usize, label: &str) -> Option<usize> {
        self.index.get(dim)?.get(label).copied()
    }

    pub fn contains(&self, cell: &CellId) -> bool {
        self.index_of(cell.dim, &cell.label).is_some()
    }

    pub(crate) fn resolve(&self, cell: &CellId) -> Result<usize> {
        self.index_of(cell.dim, &cell.label)
            .ok_or_else(|| Error::UnknownCell { dim: cell.dim, label: cell.label.clone() })
    }

    /// Index form of `∂ᵢᵅ`. Panics on out-of-range arguments.
    pub fn face_index(&self, dim: usize, idx: usize, index: usize, sign: Sign) -> usize {
        assert!(index >= 1 && index <= dim, "face index {index} out of range for dim {dim}");
        self.faces[dim][idx * 2 * dim + (index - 1) * 2 + sign.bit()]
    }

    /// `∂ᵢᵅ(cell)`.
    pub fn face(&self, cell: &CellId, index: usize, sign: Sign) -> Result<CellId> {
        let idx = self.resolve(cell)?;
        if index == 0 || index > cell.dim {
            return Err(Error::FaceIndex { dim: cell.dim, index });
        }
        let f = self.face_index(cell.dim, idx, index, sign);
        Ok(CellId::new(cell.dim - 1, self.labels[cell.dim - 1][f].clone()))
    }

    /// Index form of [`apply_cube_map`]: the cell `K(w)(c)` of dimension
    /// `w.star_count()`.
    ///
    /// Fixed positions are processed right to left; at that point every
    /// position to the left is still a star, so position `p` is the `p`-th
    /// star and the face to apply is `∂ₚ`.
    pub fn act(&self, dim: usize, idx: usize, word: &CubeWord) -> usize {
        assert_eq!(word.len(), dim, "word length must equal cell dimension");
        let mut current = (dim, idx);
        for (pos, letter) in word.letters().iter().enumerate().rev() {
            let sign = match letter {
                Letter::Star => continue,
                Letter::Zero => Sign::Zero,
                Letter::One => Sign::One,
            };
            current = (current.0 - 1, self.face_index(current.0, current.1, pos + 1, sign));
        }
        current.1
    }

    /// Checks the stored faces against the cubical relations directly.
    pub fn validate(&self) -> ValidationReport {
        validate_presentation(&self.to_presentation())
    }

    pub fn to_presentation(&self) -> Presentation {
        let mut p = Presentation::new();
        for (d, ls) in self.labels.iter().enumerate() {
            p.cells.insert(d, ls.iter().cloned().collect());
        }
        for n in 1..self.labels.len() {
            for (c, cell) in self.labels[n].iter().enumerate() {
                for i in 1..=n {
                    for sign in Sign::BOTH {
                        let v = self.face_index(n, c, i, sign);
                        p.set_face(n, cell.clone(), i, sign, self.labels[n - 1][v].clone());
                    }
                }
            }
        }
        p
    }

    /// Renames cells; `rename` must be injective within each dimension.
    pub fn relabel(&self, mut rename: impl FnMut(usize, &str) -> String) -> Result<PrecubicalSet> {
        let names: Vec<Vec<String>> =
            self.labels.iter().enumerate().map(|(d, ls)| ls.iter().map(|l| rename(d, l)).collect()).collect();
        let mut p = Presentation::new();
        for (d, ns) in names.iter().enumerate() {
            for n in ns {
                p.add_cell(d, n.clone());
            }
            if p.cells.get(&d).map_or(0, BTreeSet::len) != ns.len() {
                return Err(Error::BadParams {
                    family: "relabel".into(),
                    reason: format!("renaming is not injective in dimension {d}"),
                });
            }
        }
        for n in 1..self.labels.len() {
            for c in 0..self.labels[n].len() {
                for i in 1..=n {
                    for sign in Sign::BOTH {
                        let v = self.face_index(n, c, i, sign);
                        p.set_face(n, names[n][c].clone(), i, sign, names[n - 1][v].clone());
                    }
                }
            }
        }
        p.build()
    }
}

/// One problem found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Issue {
    /// A cell of dimension `dim ≥ 1` lacks the face record `∂ᵢᵅ`.
    MissingFace { dim: usize, index: usize, sign: Sign, cell: String },
    /// A face record points at a cell not declared in dimension `dim − 1`.
    DanglingFace { dim: usize, index: usize, sign: Sign, cell: String, value: String },
    /// A face record for an undeclared cell or an out-of-range index.
    StrayFace { dim: usize, index: usize, sign: Sign, cell: String },
    /// `∂ᵢᵅ∂ⱼᵝ(cell) ≠ ∂ⱼ₋₁ᵝ∂ᵢᵅ(cell)`.
    RelationViolation {
        dim: usize,
        cell: String,
        i: usize,
        j: usize,
        alpha: Sign,
        beta: Sign,
        lhs: String,
        rhs: String,
    },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::MissingFace { dim, index, sign, cell } => {
                write!(f, "missing face record (dim {dim}, i {index}, α {sign}, cell {cell:?})")
            }
            Issue::DanglingFace { dim, index, sign, cell, value } => write!(
                f,
                "face (dim {dim}, i {index}, α {sign}, cell {cell:?}) points to undeclared {}-cell {value:?}",
                dim.saturating_sub(1)
            ),
            Issue::StrayFace { dim, index, sign, cell } => {
                write!(f, "face record (dim {dim}, i {index}, α {sign}, cell {cell:?}) has no matching cell")
            }
            Issue::RelationViolation { dim, cell, i, j, alpha, beta, lhs, rhs } => write!(
                f,
                "cubical relation fails on {dim}-cell {cell:?} for i={i}, j={j}, α={alpha}, β={beta}: {lhs:?} ≠ {rhs:?}"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Issue> {
        self.issues.iter().filter(|i| matches!(i, Issue::RelationViolation { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "no issues");
        }
        let shown: Vec<String> = self.issues.iter().take(5).map(Issue::to_string).collect();
        write!(f, "{}", shown.join("; "))?;
        if self.issues.len() > 5 {
            write!(f, "; and {} more", self.issues.len() - 5)?;
        }
        Ok(())
    }
}

/// Lists every missing, stray or dangling face record and every violated
/// instance of the cubical relations.
pub fn validate_presentation(p: &Presentation) -> ValidationReport {
    let mut issues = Vec::new();
    for (key, value) in &p.faces {
        let FaceKey { dim, cell, index, sign } = key;
        if *dim == 0 || *index == 0 || index > dim || !p.has_cell(*dim, cell) {
            issues.push(Issue::StrayFace { dim: *dim, index: *index, sign: *sign, cell: cell.clone() });
        } else if !p.has_cell(dim - 1, value) {
            issues.push(Issue::DanglingFace {
                dim: *dim,
                index: *index,
                sign: *sign,
                cell: cell.clone(),
                value: value.clone(),
            });
        }
    }
    for (&n, cells) in p.cells.iter().filter(|(&n, _)| n >= 1) {
        for cell in cells {
            for index in 1..=n {
                for sign in Sign::BOTH {
                    if !p.faces.contains_key(&FaceKey::new(n, cell.clone(), index, sign)) {
                        issues.push(Issue::MissingFace { dim: n, index, sign, cell: cell.clone() });
                    }
                }
            }
        }
    }
    for (&n, cells) in p.cells.iter().filter(|(&n, _)| n >= 2) {
        for cell in cells {
            for j in 2..=n {
                for i in 1..j {
                    for alpha in Sign::BOTH {
                        for beta in Sign::BOTH {
                            let lhs = p.face_of(n, cell, j, beta).and_then(|x| p.face_of(n - 1, x, i, alpha));
                            let rhs = p.face_of(n, cell, i, alpha).and_then(|x| p.face_of(n - 1, x, j - 1, beta));
                            if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
                                if lhs != rhs {
                                    issues.push(Issue::RelationViolation {
                                        dim: n,
                                        cell: cell.clone(),
                                        i,
                                        j,
                                        alpha,
                                        beta,
                                        lhs: lhs.clone(),
                                        rhs: rhs.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    issues.sort();
    ValidationReport { issues }
}

/// Validates an already-built precubical set. Always empty for values built
/// through [`Presentation::build`].
pub fn validate(k: &PrecubicalSet) -> ValidationReport {
    k.validate()
}

/// The sub-precubical set `K≤n` of cells of dimension at most `n`.
pub fn skeleton(k: &PrecubicalSet, n: usize) -> PrecubicalSet {
    let keep = k.labels.len().min(n + 1);
    PrecubicalSet {
        labels: k.labels[..keep].to_vec(),
        index: k.index[..keep].to_vec(),
        faces: k.faces[..keep].to_vec(),
    }
}

/// The action `K(w)(c)` of a cube word on a cell, via the Yoneda
/// identification of `c` with a map `□[n] → K`.
pub fn apply_cube_map(k: &PrecubicalSet, cell: &CellId, word: &CubeWord) -> Result<CellId> {
    if word.len() != cell.dim {
        return Err(Error::LengthMismatch { word_len: word.len(), cell_dim: cell.dim });
    }
    let idx = k.resolve(cell)?;
    let m = word.star_count();
    let out = k.act(cell.dim, idx, word);
    Ok(CellId::new(m, k.label(m, out).to_owned()))
}
