use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::word::Sign;

use super::{CubicalMap, PrecubicalSet, Presentation};

/// Result of [`pushout_with_legs`]: the glued object and the two maps into it.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: PrecubicalSet,
    pub from_left: CubicalMap,
    pub from_right: CubicalMap,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Degreewise pushout of `left ← shared → right` along `f` and `g`.
pub fn pushout(
    shared: &PrecubicalSet,
    left: &PrecubicalSet,
    f: &CubicalMap,
    right: &PrecubicalSet,
    g: &CubicalMap,
) -> Result<PrecubicalSet> {
    pushout_with_legs(shared, left, f, right, g).map(|p| p.object)
}

/// Like [`pushout`], also returning the legs `left → P` and `right → P`.
///
/// A class of glued cells takes the smallest left-hand label it contains,
/// otherwise the smallest right-hand one. A right-only label that clashes
/// with a left-derived label in the same dimension is tagged with `@r`
/// (repeatedly, until unique).
pub fn pushout_with_legs(
    shared: &PrecubicalSet,
    left: &PrecubicalSet,
    f: &CubicalMap,
    right: &PrecubicalSet,
    g: &CubicalMap,
) -> Result<Pushout> {
    f.check(shared, left)?;
    g.check(shared, right)?;

    let dims = left.cell_counts().len().max(right.cell_counts().len());
    let mut names: Vec<Vec<String>> = Vec::with_capacity(dims);
    let mut from_left = CubicalMap::new();
    let mut from_right = CubicalMap::new();

    for d in 0..dims {
        let nl = left.count(d);
        let nr = right.count(d);
        let mut uf = UnionFind::new(nl + nr);
        for s in shared.cells(d) {
            let a = left.index_of(d, f.get(d, s).expect("checked total")).expect("checked");
            let b = right.index_of(d, g.get(d, s).expect("checked total")).expect("checked");
            uf.union(a, nl + b);
        }
        // Roots are the minimum index of their class, so a class with a
        // left-hand member has a left-hand root carrying its smallest label.
        let mut class_name: BTreeMap<usize, String> = BTreeMap::new();
        let mut used: BTreeSet<String> = BTreeSet::new();
        for x in 0..nl {
            let r = uf.find(x);
            if r == x {
                let name = left.label(d, x).to_owned();
                used.insert(name.clone());
                class_name.insert(r, name);
            }
        }
        for y in 0..nr {
            let r = uf.find(nl + y);
            if r == nl + y {
                let mut name = right.label(d, y).to_owned();
                while used.contains(&name) {
                    name.push_str("@r");
                }
                used.insert(name.clone());
                class_name.insert(r, name);
            }
        }
        let mut level = vec![String::new(); nl + nr];
        for (x, slot) in level.iter_mut().enumerate() {
            *slot = class_name[&uf.find(x)].clone();
        }
        for (x, name) in level[..nl].iter().enumerate() {
            from_left.insert(d, left.label(d, x), name.clone());
        }
        for (y, name) in level[nl..].iter().enumerate() {
            from_right.insert(d, right.label(d, y), name.clone());
        }
        names.push(level);
    }

    let mut p = Presentation::new();
    for (d, level) in names.iter().enumerate() {
        let nl = left.count(d);
        for (x, name) in level.iter().enumerate() {
            p.add_cell(d, name.clone());
            if d == 0 {
                continue;
            }
            for i in 1..=d {
                for sign in Sign::BOTH {
                    let face = if x < nl {
                        names[d - 1][left.face_index(d, x, i, sign)].clone()
                    } else {
                        names[d - 1][left.count(d - 1) + right.face_index(d, x - nl, i, sign)].clone()
                    };
                    p.set_face(d, name.clone(), i, sign, face);
                }
            }
        }
    }
    let object = p.build()?;
    Ok(Pushout { object, from_left, from_right })
}

fn escape(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    for c in label.chars() {
        if c == '\\' || c == '|' {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

/// Label of a tuple of cells in a tensor product: components joined by `|`,
/// with `|` and `\` escaped inside components.
pub(crate) fn tuple_label(parts: &[&str]) -> String {
    parts.iter().map(|p| escape(p)).collect::<Vec<_>>().join("|")
}

/// `K₁ ⊗ … ⊗ Kᵣ`, whose `n`-cells are the tuples of cells with dimensions
/// summing to `n`. The face `∂ᵢᵅ` acts on the factor owning coordinate `i`.
/// The empty product is the point with vertex label `""`.
pub fn tensor_many(factors: &[&PrecubicalSet]) -> PrecubicalSet {
    // Tuples as (dims, indices).
    let mut tuples: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
    for k in factors {
        let mut next = Vec::new();
        for (dims, idxs) in &tuples {
            for (d, count) in k.cell_counts().into_iter().enumerate() {
                for c in 0..count {
                    let mut nd = dims.clone();
                    nd.push(d);
                    let mut ni = idxs.clone();
                    ni.push(c);
                    next.push((nd, ni));
                }
            }
        }
        tuples = next;
    }

    let label_of = |dims: &[usize], idxs: &[usize]| {
        let parts: Vec<&str> = factors.iter().zip(dims.iter().zip(idxs)).map(|(k, (&d, &c))| k.label(d, c)).collect();
        tuple_label(&parts)
    };

    let mut p = Presentation::new();
    for (dims, idxs) in &tuples {
        let n: usize = dims.iter().sum();
        let label = label_of(dims, idxs);
        p.add_cell(n, label.clone());
        let mut offset = 0;
        for (t, &d) in dims.iter().enumerate() {
            for local in 1..=d {
                for sign in Sign::BOTH {
                    let mut fd = dims.clone();
                    let mut fi = idxs.clone();
                    fd[t] = d - 1;
                    fi[t] = factors[t].face_index(d, idxs[t], local, sign);
                    p.set_face(n, label.clone(), offset + local, sign, label_of(&fd, &fi));
                }
            }
            offset += d;
        }
    }
    p.build().expect("tensor of precubical sets satisfies the cubical relations")
}

/// `K ⊗ L`.
pub fn tensor(k: &PrecubicalSet, l: &PrecubicalSet) -> PrecubicalSet {
    tensor_many(&[k, l])
}
