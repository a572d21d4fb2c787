use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::word::{CubeWord, Sign};

use super::{CellId, PrecubicalSet};

/// A dimension-preserving map of cells between two precubical sets.
///
/// The map is stored by label so it stays meaningful on its own; [`check`]
/// decides whether it is a precubical morphism `dom → cod`.
///
/// [`check`]: CubicalMap::check
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CubicalMap {
    components: Vec<BTreeMap<String, String>>,
}

impl CubicalMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, dim: usize, from: impl Into<String>, to: impl Into<String>) -> &mut Self {
        if self.components.len() <= dim {
            self.components.resize_with(dim + 1, BTreeMap::new);
        }
        self.components[dim].insert(from.into(), to.into());
        self
    }

    pub fn get(&self, dim: usize, label: &str) -> Option<&str> {
        self.components.get(dim)?.get(label).map(String::as_str)
    }

    pub fn image(&self, cell: &CellId) -> Option<CellId> {
        self.get(cell.dim, &cell.label).map(|l| CellId::new(cell.dim, l))
    }

    /// The inclusion of `sub` into `sup`, matching cells by label.
    pub fn inclusion(sub: &PrecubicalSet) -> Self {
        let mut m = CubicalMap::new();
        for c in sub.cell_ids() {
            m.insert(c.dim, c.label.clone(), c.label);
        }
        m
    }

    /// The Yoneda map `□[n] → K` classifying an `n`-cell: the word `w` is
    /// sent to `K(w)(cell)`.
    pub fn yoneda(k: &PrecubicalSet, cell: &CellId) -> Result<Self> {
        let idx = k.resolve(cell)?;
        let mut m = CubicalMap::new();
        for w in CubeWord::all(cell.dim) {
            let d = w.star_count();
            let image = k.act(cell.dim, idx, &w);
            m.insert(d, w.to_string(), k.label(d, image));
        }
        Ok(m)
    }

    /// Maps the vertices of a discrete domain (no higher cells).
    pub fn on_vertices<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Self {
        let mut m = CubicalMap::new();
        for (a, b) in pairs {
            m.insert(0, a, b);
        }
        m
    }

    /// Checks totality, that images exist in `cod`, and commutation with
    /// every face map.
    pub fn check(&self, dom: &PrecubicalSet, cod: &PrecubicalSet) -> Result<()> {
        for c in dom.cell_ids() {
            let image = self.image(&c).ok_or_else(|| Error::PartialMap { dim: c.dim, label: c.label.clone() })?;
            cod.resolve(&image)?;
            for index in 1..=c.dim {
                for sign in Sign::BOTH {
                    let via_dom = dom.face(&c, index, sign)?;
                    let left = self.image(&via_dom);
                    let right = cod.face(&image, index, sign)?;
                    if left.as_ref() != Some(&right) {
                        return Err(Error::NotMorphism { dim: c.dim, label: c.label, index, sign });
                    }
                }
            }
        }
        Ok(())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CubicalMap) -> CubicalMap {
        let mut m = CubicalMap::new();
        for (d, comp) in self.components.iter().enumerate() {
            for (a, b) in comp {
                if let Some(c) = other.get(d, b) {
                    m.insert(d, a.clone(), c);
                }
            }
        }
        m
    }

    pub fn is_bijective_on(&self, dom: &PrecubicalSet, cod: &PrecubicalSet) -> bool {
        dom.cell_counts() == cod.cell_counts()
            && (0..dom.cell_counts().len()).all(|d| {
                let mut images: Vec<&str> = dom.cells(d).iter().filter_map(|l| self.get(d, l)).collect();
                images.sort_unstable();
                images.dedup();
                images.len() == cod.count(d)
            })
    }
}
