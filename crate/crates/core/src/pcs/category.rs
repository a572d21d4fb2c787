use serde::Serialize;

use crate::word::CubeWord;

use super::{CellId, PrecubicalSet};

/// An arrow `□[m] → □[n]` of the category of cubes, given by a word `w` with
/// `K(w)(target) = source`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CubeArrow {
    pub source: usize,
    pub target: usize,
    pub word: String,
}

/// The category of cubes `□↓K`: one object per cell, one arrow per word acting
/// on a cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeDiagram {
    pub objects: Vec<CellId>,
    pub arrows: Vec<CubeArrow>,
}

impl CubeDiagram {
    pub fn identity_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.word.chars().all(|c| c == '*')).count()
    }

    pub fn non_identity_count(&self) -> usize {
        self.arrows.len() - self.identity_count()
    }

    /// Composite of `first: x → y` followed by `second: y → z`.
    pub fn compose(&self, first: &CubeArrow, second: &CubeArrow) -> Option<CubeArrow> {
        if first.target != second.source {
            return None;
        }
        let outer: CubeWord = second.word.parse().ok()?;
        let inner: CubeWord = first.word.parse().ok()?;
        let word = outer.compose(&inner).ok()?;
        Some(CubeArrow { source: first.source, target: second.target, word: word.to_string() })
    }
}

pub fn cube_category(k: &PrecubicalSet) -> CubeDiagram {
    let objects: Vec<CellId> = k.cell_ids().collect();
    let offsets: Vec<usize> = (0..k.cell_counts().len())
        .scan(0, |acc, d| {
            let start = *acc;
            *acc += k.count(d);
            Some(start)
        })
        .collect();
    let mut arrows = Vec::new();
    for n in 0..k.cell_counts().len() {
        let words = CubeWord::all(n);
        for c in 0..k.count(n) {
            for w in &words {
                let m = w.star_count();
                let s = k.act(n, c, w);
                arrows.push(CubeArrow { source: offsets[m] + s, target: offsets[n] + c, word: w.to_string() });
            }
        }
    }
    arrows.sort();
    CubeDiagram { objects, arrows }
}
