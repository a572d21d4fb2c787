//! Integer homology of the standard cubical complex `|K|_space`.
//!
//! Chains are free on the cells of each dimension, in lexicographic label
//! order. The boundary of an `n`-cell is
//!
//! ```text
//! ∂c = Σᵢ (−1)ⁱ (∂ᵢ¹c − ∂ᵢ⁰c),   i = 1..n
//! ```
//!
//! and homology comes from the Smith normal forms of the boundary matrices.
//! Homology agreement is a necessary condition for the homotopy equivalence
//! between the flow's underlying homotopy type and `|K|_space`, not a proof
//! of it.

pub mod snf;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::pcs::PrecubicalSet;
use crate::word::Sign;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    fn add(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.cols + c] += v;
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.add(i, j, a * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec()).collect()
    }

    fn to_big_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| BigInt::from(self.get(r, c))).collect()).collect()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainComplex {
    /// Cell labels per dimension; the basis order of the chain groups.
    pub bases: Vec<Vec<String>>,
    /// `boundaries[n - 1]` is `∂ₙ : Cₙ → Cₙ₋₁`, rows indexed by `(n−1)`-cells
    /// and columns by `n`-cells.
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn boundary(&self, n: usize) -> Option<&IntMatrix> {
        n.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// Checks `∂ₙ₋₁ ∘ ∂ₙ = 0` for every `n ≥ 2`.
    pub fn squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }
}

pub fn chain_complex(k: &PrecubicalSet) -> ChainComplex {
    let dims = k.cell_counts().len();
    let bases: Vec<Vec<String>> = (0..dims).map(|d| k.cells(d).to_vec()).collect();
    let boundaries = (1..dims)
        .map(|n| {
            let mut m = IntMatrix::zeros(k.count(n - 1), k.count(n));
            for c in 0..k.count(n) {
                for i in 1..=n {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    m.add(k.face_index(n, c, i, Sign::One), c, sign);
                    m.add(k.face_index(n, c, i, Sign::Zero), c, -sign);
                }
            }
            m
        })
        .collect();
    ChainComplex { bases, boundaries }
}

fn serialize_torsion<S: Serializer>(torsion: &[BigUint], serializer: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(torsion.len()))?;
    for t in torsion {
        match t.to_u64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&t.to_string())?,
        }
    }
    seq.end()
}

/// `Hₙ ≅ Z^betti ⊕ ⨁ Z/tᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub dim: usize,
    pub betti: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Homology in every dimension from 0 to the top dimension of the complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    /// Betti number in dimension `n`, zero outside the computed range.
    pub fn betti(&self, n: usize) -> usize {
        self.groups.get(n).map_or(0, |g| g.betti)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    pub fn torsion(&self, n: usize) -> &[BigUint] {
        self.groups.get(n).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }

    /// Σ (−1)ⁿ bₙ.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups.iter().map(|g| if g.dim % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum()
    }

    /// Whether this is the homology of a point (`Z` in degree 0 only).
    pub fn is_point(&self) -> bool {
        self.matches_betti(&[1])
    }

    /// Whether this is the homology of `Sⁿ`: `Z` in degrees 0 and `n`
    /// (`Z²` in degree 0 when `n = 0`), nothing else.
    pub fn is_sphere(&self, n: usize) -> bool {
        let mut expected = vec![0; n + 1];
        expected[0] += 1;
        expected[n] += 1;
        self.matches_betti(&expected)
    }

    /// Torsion-free with the given Betti numbers, zero beyond them.
    pub fn matches_betti(&self, expected: &[usize]) -> bool {
        self.is_torsion_free()
            && self.groups.len() >= expected.len()
            && self.groups.iter().all(|g| g.betti == expected.get(g.dim).copied().unwrap_or(0))
    }
}

pub fn homology(k: &PrecubicalSet) -> HomologyResult {
    let complex = chain_complex(k);
    let dims = complex.bases.len();
    // factors[n] = invariant factors of ∂ₙ; ∂₀ and ∂_{top+1} are zero maps.
    let factors: Vec<Vec<BigInt>> = (0..=dims)
        .map(|n| complex.boundary(n).map(|m| snf::invariant_factors(&m.to_big_rows())).unwrap_or_default())
        .collect();
    let groups = (0..dims)
        .map(|n| {
            let cycles = complex.bases[n].len() - factors[n].len();
            let betti = cycles - factors[n + 1].len();
            let torsion = factors[n + 1].iter().filter(|d| !d.is_one()).map(|d| d.magnitude().clone()).collect();
            HomologyGroup { dim: n, betti, torsion }
        })
        .collect();
    HomologyResult { groups }
}

/// Σ (−1)ⁿ |Kₙ|.
pub fn euler_characteristic(k: &PrecubicalSet) -> i64 {
    k.cell_counts().iter().enumerate().map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}
