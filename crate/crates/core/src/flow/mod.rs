//! The combinatorial flow realizing a precubical set.
//!
//! Each cube `□[n] → K` contributes a copy of the poset flow `{0 < 1}ⁿ`,
//! whose morphisms are the `{0, 1, *}`-words with at least one star. Gluing
//! these along the category of cubes gives a flow with:
//!
//! * states: the vertices `K₀`;
//! * generating morphisms: one diagonal per positive-dimensional cube, from
//!   its all-zeros corner to its all-ones corner;
//! * relations: in every square `s`, `∂₂⁰s * ∂₁¹s = ∂₁⁰s * ∂₂¹s` (both equal
//!   the diagonal of `s`).
//!
//! Every diagonal equals the staircase of its cube, so morphisms are edge
//! paths modulo square moves. Square moves preserve length, so every class
//! is finite and equality is decided by saturating one side.

mod order;
mod paths;

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pcs::{CellId, PrecubicalSet};
use crate::word::{CubeWord, Letter, Sign};

pub use order::{state_order, LoopReport, StateOrder, StatePoset};
pub use paths::{count_flow_morphisms, enumerate_path_classes, path_equal, EdgePath, PathClass};

/// A generating morphism: the diagonal of a cube of dimension `≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Atom {
    pub cell: CellId,
    pub source: String,
    pub target: String,
}

/// Realized flow of a precubical set, with the indexes needed for path work.
#[derive(Debug)]
pub struct CombFlow<'a> {
    complex: &'a PrecubicalSet,
    // per vertex: outgoing edge indices, sorted by label
    outgoing: Vec<Vec<usize>>,
    // (first, second) edge pair -> alternative pairs across a square
    moves: HashMap<(usize, usize), Vec<(usize, usize)>>,
}

impl<'a> CombFlow<'a> {
    pub fn new(complex: &'a PrecubicalSet) -> Self {
        let mut outgoing = vec![Vec::new(); complex.count(0)];
        for e in 0..complex.count(1) {
            outgoing[complex.face_index(1, e, 1, Sign::Zero)].push(e);
        }
        let mut moves: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for s in 0..complex.count(2) {
            let lower = (complex.face_index(2, s, 2, Sign::Zero), complex.face_index(2, s, 1, Sign::One));
            let upper = (complex.face_index(2, s, 1, Sign::Zero), complex.face_index(2, s, 2, Sign::One));
            if lower != upper {
                moves.entry(lower).or_default().push(upper);
                moves.entry(upper).or_default().push(lower);
            }
        }
        for alts in moves.values_mut() {
            alts.sort_unstable();
            alts.dedup();
        }
        CombFlow { complex, outgoing, moves }
    }

    pub fn complex(&self) -> &PrecubicalSet {
        self.complex
    }

    /// The states, i.e. `K₀`.
    pub fn states(&self) -> &[String] {
        self.complex.cells(0)
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let k = self.complex;
        (1..k.cell_counts().len())
            .flat_map(|n| (0..k.count(n)).map(move |c| (n, c)))
            .map(|(n, c)| Atom {
                cell: CellId::new(n, k.label(n, c)),
                source: k.label(0, corner_index(k, n, c, Sign::Zero)).to_owned(),
                target: k.label(0, corner_index(k, n, c, Sign::One)).to_owned(),
            })
            .collect()
    }

    pub(crate) fn edge_source(&self, e: usize) -> usize {
        self.complex.face_index(1, e, 1, Sign::Zero)
    }

    pub(crate) fn edge_target(&self, e: usize) -> usize {
        self.complex.face_index(1, e, 1, Sign::One)
    }

    pub(crate) fn outgoing(&self, v: usize) -> &[usize] {
        &self.outgoing[v]
    }

    pub(crate) fn moves_at(&self, pair: (usize, usize)) -> &[(usize, usize)] {
        self.moves.get(&pair).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn state_index(&self, label: &str) -> Result<usize> {
        self.complex.index_of(0, label).ok_or_else(|| Error::UnknownState(label.to_owned()))
    }

    /// Edge path of the cube `c` that switches coordinates on in the order
    /// given by `order` (a permutation of `1..=n`).
    pub(crate) fn monotone_path(&self, dim: usize, c: usize, order: &[usize]) -> Vec<usize> {
        let mut letters = vec![Letter::Zero; dim];
        let mut edges = Vec::with_capacity(dim);
        for &coord in order {
            letters[coord - 1] = Letter::Star;
            edges.push(self.complex.act(dim, c, &CubeWord::new(letters.clone())));
            letters[coord - 1] = Letter::One;
        }
        edges
    }
}

pub(crate) fn corner_index(k: &PrecubicalSet, dim: usize, c: usize, sign: Sign) -> usize {
    let mut cur = (dim, c);
    while cur.0 > 0 {
        cur = (cur.0 - 1, k.face_index(cur.0, cur.1, 1, sign));
    }
    cur.1
}

/// The states of the realized flow: exactly the vertices of `K`.
pub fn realize_states(k: &PrecubicalSet) -> Vec<String> {
    k.cells(0).to_vec()
}

/// The vertex reached by applying `∂₁ᵅ` until dimension 0.
pub fn corner(k: &PrecubicalSet, cell: &CellId, sign: Sign) -> Result<String> {
    let idx = k
        .index_of(cell.dim, &cell.label)
        .ok_or_else(|| Error::UnknownCell { dim: cell.dim, label: cell.label.clone() })?;
    Ok(k.label(0, corner_index(k, cell.dim, idx, sign)).to_owned())
}

/// The canonical edge decomposition of the diagonal of `cell`: coordinates
/// are switched from 0 to 1 in increasing index order.
pub fn staircase(k: &PrecubicalSet, cell: &CellId) -> Result<EdgePath> {
    if cell.dim == 0 {
        return Err(Error::EmptyPath);
    }
    let idx = k
        .index_of(cell.dim, &cell.label)
        .ok_or_else(|| Error::UnknownCell { dim: cell.dim, label: cell.label.clone() })?;
    let flow = CombFlow::new(k);
    let order: Vec<usize> = (1..=cell.dim).collect();
    Ok(EdgePath::from_indices(k, &flow.monotone_path(cell.dim, idx, &order)))
}

/// Every monotone edge path through `cell` from its 0-corner to its 1-corner,
/// one per permutation of the coordinates, in lexicographic order of the
/// permutations.
pub fn monotone_paths(k: &PrecubicalSet, cell: &CellId) -> Result<Vec<EdgePath>> {
    let idx = k
        .index_of(cell.dim, &cell.label)
        .ok_or_else(|| Error::UnknownCell { dim: cell.dim, label: cell.label.clone() })?;
    let flow = CombFlow::new(k);
    let mut perms = Vec::new();
    permutations(&mut (1..=cell.dim).collect::<Vec<_>>(), 0, &mut perms);
    perms.sort();
    Ok(perms.iter().map(|p| EdgePath::from_indices(k, &flow.monotone_path(cell.dim, idx, p))).collect())
}

fn permutations(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, out);
        items.swap(start, i);
    }
}
