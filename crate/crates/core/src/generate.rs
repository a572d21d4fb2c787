//! Named families of precubical sets, a fixed sample corpus, and random
//! gluings for property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::pcs::{
    boundary_cube, pushout, skeleton, standard_cube, tensor, tensor_many, CellId, CubicalMap, PrecubicalSet,
    Presentation,
};
use crate::word::Sign;

pub const FAMILIES: &[&str] = &["cube", "boundary", "circle", "torus", "cylinder", "interval"];

/// One vertex `v` and one loop edge `e`.
pub fn circle() -> PrecubicalSet {
    let mut p = Presentation::new();
    p.add_cell(0, "v").add_cell(1, "e");
    p.set_face(1, "e", 1, Sign::Zero, "v").set_face(1, "e", 1, Sign::One, "v");
    p.build().expect("circle is valid")
}

/// `d`-fold tensor power of the directed circle.
pub fn torus(d: usize) -> PrecubicalSet {
    let c = circle();
    tensor_many(&vec![&c; d])
}

pub fn cylinder() -> PrecubicalSet {
    tensor(&circle(), &standard_cube(1))
}

/// Directed path `v0 → v1 → … → vk` with edges `e1 … ek`.
pub fn interval(k: usize) -> PrecubicalSet {
    let mut p = Presentation::new();
    p.add_cell(0, "v0");
    for i in 1..=k {
        let e = format!("e{i}");
        p.add_cell(0, format!("v{i}")).add_cell(1, e.clone());
        p.set_face(1, e.clone(), 1, Sign::Zero, format!("v{}", i - 1));
        p.set_face(1, e, 1, Sign::One, format!("v{i}"));
    }
    p.build().expect("interval is valid")
}

fn expect_params(family: &str, params: &[usize], n: usize) -> Result<()> {
    if params.len() == n {
        Ok(())
    } else {
        Err(Error::BadParams {
            family: family.to_owned(),
            reason: format!("expected {n} parameter(s), got {}", params.len()),
        })
    }
}

/// Builds a member of a named family.
///
/// | family     | params | result                                  |
/// |------------|--------|-----------------------------------------|
/// | `cube`     | `n`    | `□[n]`                                  |
/// | `boundary` | `n`    | `∂□[n]`                                 |
/// | `circle`   |        | one vertex, one loop                    |
/// | `torus`    | `d ≥ 1`| `d`-fold tensor power of the circle     |
/// | `cylinder` |        | circle ⊗ `□[1]`                         |
/// | `interval` | `k`    | directed path with `k` edges            |
pub fn generate(family: &str, params: &[usize]) -> Result<PrecubicalSet> {
    match family {
        "cube" => expect_params(family, params, 1).map(|_| standard_cube(params[0])),
        "boundary" => expect_params(family, params, 1).map(|_| boundary_cube(params[0])),
        "circle" => expect_params(family, params, 0).map(|_| circle()),
        "torus" => {
            expect_params(family, params, 1)?;
            if params[0] == 0 {
                return Err(Error::BadParams { family: family.into(), reason: "dimension must be at least 1".into() });
            }
            Ok(torus(params[0]))
        }
        "cylinder" => expect_params(family, params, 0).map(|_| cylinder()),
        "interval" => expect_params(family, params, 1).map(|_| interval(params[0])),
        other => Err(Error::UnknownFamily(other.to_owned())),
    }
}

fn two_squares_sharing_an_edge() -> PrecubicalSet {
    let sq = standard_cube(2);
    let edge = standard_cube(1);
    let f = CubicalMap::yoneda(&sq, &CellId::new(1, "1*")).expect("edge of the square");
    let g = CubicalMap::yoneda(&sq, &CellId::new(1, "0*")).expect("edge of the square");
    pushout(&edge, &sq, &f, &sq, &g).expect("gluing along an edge")
}

/// A fixed, named sample of small precubical sets covering the generated
/// families, skeleta, tensors and gluings.
pub fn corpus() -> Vec<(String, PrecubicalSet)> {
    let mut out = Vec::new();
    for n in 0..=4 {
        out.push((format!("cube {n}"), standard_cube(n)));
    }
    for n in 0..=4 {
        out.push((format!("boundary {n}"), boundary_cube(n)));
    }
    out.push(("circle".into(), circle()));
    for d in 1..=3 {
        out.push((format!("torus {d}"), torus(d)));
    }
    out.push(("cylinder".into(), cylinder()));
    for k in 0..=3 {
        out.push((format!("interval {k}"), interval(k)));
    }
    out.push(("skeleton(cube 4, 2)".into(), skeleton(&standard_cube(4), 2)));
    out.push(("boundary 3 ⊗ cube 1".into(), tensor(&boundary_cube(3), &standard_cube(1))));
    out.push(("interval 2 ⊗ interval 2".into(), tensor(&interval(2), &interval(2))));
    out.push(("two squares sharing an edge".into(), two_squares_sharing_an_edge()));
    out
}

fn random_piece<R: Rng + ?Sized>(rng: &mut R) -> PrecubicalSet {
    match rng.gen_range(0..7) {
        0 => standard_cube(rng.gen_range(0..=3)),
        1 => boundary_cube(rng.gen_range(1..=3)),
        2 => circle(),
        3 => torus(rng.gen_range(1..=2)),
        4 => interval(rng.gen_range(1..=3)),
        5 => cylinder(),
        _ => tensor(&interval(rng.gen_range(1..=2)), &standard_cube(1)),
    }
}

fn random_cell<R: Rng + ?Sized>(rng: &mut R, k: &PrecubicalSet, dim: usize) -> CellId {
    CellId::new(dim, k.cells(dim).choose(rng).expect("non-empty dimension").clone())
}

/// Glues `steps` random pieces onto a random starting piece. Each step is a
/// pushout either along a shared cube (Yoneda maps on both sides) or along a
/// random map of a discrete vertex set.
pub fn random_gluing<R: Rng + ?Sized>(rng: &mut R, steps: usize) -> PrecubicalSet {
    let mut k = random_piece(rng);
    for _ in 0..steps {
        let m = random_piece(rng);
        if k.is_empty() || m.is_empty() {
            k = pushout(&PrecubicalSet::empty(), &k, &CubicalMap::new(), &m, &CubicalMap::new()).expect("coproduct");
            continue;
        }
        let glued = if rng.gen_bool(0.6) {
            let shared_dims = k.cell_counts().len().min(m.cell_counts().len());
            let d = rng.gen_range(0..shared_dims);
            let f = CubicalMap::yoneda(&k, &random_cell(rng, &k, d)).expect("cell of k");
            let g = CubicalMap::yoneda(&m, &random_cell(rng, &m, d)).expect("cell of m");
            pushout(&standard_cube(d), &k, &f, &m, &g)
        } else {
            let r = rng.gen_range(1..=3);
            let mut shared = Presentation::new();
            let mut f = CubicalMap::new();
            let mut g = CubicalMap::new();
            for i in 0..r {
                let name = format!("p{i}");
                shared.add_cell(0, name.clone());
                f.insert(0, name.clone(), random_cell(rng, &k, 0).label);
                g.insert(0, name, random_cell(rng, &m, 0).label);
            }
            pushout(&shared.build().expect("discrete set"), &k, &f, &m, &g)
        };
        k = glued.expect("legs are morphisms by construction");
    }
    k
}
