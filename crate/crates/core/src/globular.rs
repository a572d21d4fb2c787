//! The globular cell ledger of the small realization.
//!
//! The realization is built by skeletal induction: the cubes of dimension
//! `n + 1` are attached all at once, each as a globe `Glob(Dⁿ)` glued along
//! `Glob(Sⁿ⁻¹)` onto the realization of its boundary. The ledger records one
//! cell per positive-dimensional cube with the two vertices the globe spans.
//! Attaching maps are not canonical and are not exported.

use serde::Serialize;

use crate::flow::corner_index;
use crate::pcs::PrecubicalSet;
use crate::word::Sign;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobularCell {
    /// Label of the underlying cube.
    pub cube: String,
    /// Dimension of the cube, `≥ 1`.
    pub dim: usize,
    /// `n` for the disk `Dⁿ`, i.e. `dim − 1`.
    pub globe_dim: usize,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobularDecomposition {
    pub vertices: Vec<String>,
    /// Cells in attachment order: by cube dimension, then label.
    pub cells: Vec<GlobularCell>,
}

impl GlobularDecomposition {
    /// Cells attached at stage `globe_dim`.
    pub fn stage(&self, globe_dim: usize) -> impl Iterator<Item = &GlobularCell> {
        self.cells.iter().filter(move |c| c.globe_dim == globe_dim)
    }

    pub fn max_globe_dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.globe_dim).max()
    }
}

pub fn globular_decomposition(k: &PrecubicalSet) -> GlobularDecomposition {
    let mut cells = Vec::new();
    for n in 1..k.cell_counts().len() {
        for c in 0..k.count(n) {
            cells.push(GlobularCell {
                cube: k.label(n, c).to_owned(),
                dim: n,
                globe_dim: n - 1,
                source: k.label(0, corner_index(k, n, c, Sign::Zero)).to_owned(),
                target: k.label(0, corner_index(k, n, c, Sign::One)).to_owned(),
            });
        }
    }
    GlobularDecomposition { vertices: k.cells(0).to_vec(), cells }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageCount {
    pub globe_dim: usize,
    pub cells: usize,
}

/// Census of a globular decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionSummary {
    pub vertices: usize,
    pub stages: Vec<StageCount>,
    pub total_cells: usize,
    pub max_globe_dim: Option<usize>,
}

pub fn decomposition_report(k: &PrecubicalSet) -> DecompositionSummary {
    let stages: Vec<StageCount> =
        (1..k.cell_counts().len()).map(|n| StageCount { globe_dim: n - 1, cells: k.count(n) }).collect();
    DecompositionSummary {
        vertices: k.count(0),
        total_cells: stages.iter().map(|s| s.cells).sum(),
        max_globe_dim: stages.iter().filter(|s| s.cells > 0).map(|s| s.globe_dim).max(),
        stages,
    }
}
