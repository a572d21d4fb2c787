use std::collections::BTreeMap;

use cubeflow::flow::CombFlow;
use cubeflow::generate::{corpus, random_gluing};
use cubeflow::io::{parse, serialize};
use cubeflow::pcs::{find_isomorphism, pushout_with_legs, CellId, CubicalMap, Presentation};
use cubeflow::{
    apply_cube_map, globular_decomposition, skeleton, standard_cube, tensor, CubeWord, EdgePath, PrecubicalSet, Sign,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn glued(seed: u64, steps: usize) -> PrecubicalSet {
    random_gluing(&mut ChaCha8Rng::seed_from_u64(seed), steps)
}

#[test]
fn apply_is_functorial_on_small_cubes() {
    for n in 0..=4 {
        let cube = standard_cube(n);
        for c in cube.cell_ids() {
            assert_eq!(apply_cube_map(&cube, &c, &CubeWord::identity(c.dim)).unwrap(), c);
            for u in CubeWord::all(c.dim) {
                let once = apply_cube_map(&cube, &c, &u).unwrap();
                for v in CubeWord::all(u.star_count()) {
                    let composite = apply_cube_map(&cube, &c, &u.compose(&v).unwrap()).unwrap();
                    assert_eq!(composite, apply_cube_map(&cube, &once, &v).unwrap());
                }
            }
        }
    }
}

#[test]
fn representable_tensors() {
    for p in 0..=4 {
        for q in 0..=4 - p {
            let t = tensor(&standard_cube(p), &standard_cube(q));
            let iso = find_isomorphism(&t, &standard_cube(p + q)).unwrap_or_else(|| panic!("□[{p}]⊗□[{q}]"));
            iso.check(&t, &standard_cube(p + q)).unwrap();
        }
    }
}

/// All edge paths of length `len` as label lists.
fn paths_of_len(k: &PrecubicalSet, len: usize) -> Vec<EdgePath> {
    let src = |e: &str| k.face(&CellId::new(1, e), 1, Sign::Zero).unwrap().label;
    let tgt = |e: &str| k.face(&CellId::new(1, e), 1, Sign::One).unwrap().label;
    let mut out: Vec<Vec<String>> = k.cells(1).iter().map(|e| vec![e.clone()]).collect();
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                let end = tgt(p.last().unwrap());
                k.cells(1)
                    .iter()
                    .filter(move |e| src(e) == end)
                    .map(move |e| {
                        let mut q = p.clone();
                        q.push(e.clone());
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out.into_iter().map(EdgePath::new).collect()
}

#[test]
fn path_equality_is_an_equivalence() {
    for (name, k) in corpus() {
        if k.count(1) > 40 {
            continue;
        }
        let flow = CombFlow::new(&k);
        for len in 1..=3 {
            let paths = paths_of_len(&k, len);
            if paths.len() > 60 {
                continue;
            }
            let eq: Vec<Vec<bool>> =
                paths.iter().map(|p| paths.iter().map(|q| flow.path_equal(p, q).unwrap()).collect()).collect();
            for i in 0..paths.len() {
                assert!(eq[i][i], "{name}");
                for j in 0..paths.len() {
                    assert_eq!(eq[i][j], eq[j][i], "{name}");
                    for l in 0..paths.len() {
                        if eq[i][j] && eq[j][l] {
                            assert!(eq[i][l], "{name}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn square_moves_preserve_endpoints_and_length() {
    for (name, k) in corpus() {
        let flow = CombFlow::new(&k);
        let src = |p: &EdgePath| k.face(&CellId::new(1, p.labels()[0].clone()), 1, Sign::Zero).unwrap();
        let tgt = |p: &EdgePath| k.face(&CellId::new(1, p.labels().last().unwrap().clone()), 1, Sign::One).unwrap();
        for p in paths_of_len(&k, 2).into_iter().chain(paths_of_len(&k, 3)).take(400) {
            for q in flow.square_moves(&p).unwrap() {
                assert_eq!(q.len(), p.len(), "{name}");
                assert_eq!(src(&q), src(&p), "{name}");
                assert_eq!(tgt(&q), tgt(&p), "{name}");
                flow.check_path(&q).unwrap();
            }
        }
    }
}

fn image_path(f: &CubicalMap, p: &EdgePath) -> EdgePath {
    EdgePath::new(p.labels().iter().map(|e| f.get(1, e).unwrap().to_owned()))
}

/// Morphisms `K → L` drawn from skeleton inclusions, Yoneda maps and pushout legs.
fn corpus_morphisms() -> Vec<(String, PrecubicalSet, PrecubicalSet, CubicalMap)> {
    let mut out = Vec::new();
    for (name, k) in corpus() {
        if k.total_cells() > 200 {
            continue;
        }
        if let Some(top) = k.top_dim() {
            let sk = skeleton(&k, top.saturating_sub(1));
            out.push((format!("skeleton ⊂ {name}"), sk.clone(), k.clone(), CubicalMap::inclusion(&sk)));
            let c = k.cell_ids().last().unwrap();
            let y = CubicalMap::yoneda(&k, &c).unwrap();
            out.push((format!("yoneda {c} → {name}"), standard_cube(c.dim), k.clone(), y));
        }
    }
    for seed in 0..10 {
        let k = glued(seed, 1);
        let m = glued(seed + 100, 1);
        let v = k.cells(0)[0].clone();
        let w = m.cells(0)[0].clone();
        let f = CubicalMap::on_vertices([("p", v.as_str())]);
        let g = CubicalMap::on_vertices([("p", w.as_str())]);
        let mut shared = Presentation::new();
        shared.add_cell(0, "p");
        let po = pushout_with_legs(&shared.build().unwrap(), &k, &f, &m, &g).unwrap();
        out.push((format!("left leg {seed}"), k, po.object.clone(), po.from_left));
        out.push((format!("right leg {seed}"), m, po.object, po.from_right));
    }
    out
}

#[test]
fn realization_is_natural() {
    for (name, k, l, f) in corpus_morphisms() {
        f.check(&k, &l).unwrap();
        for v in cubeflow::realize_states(&k) {
            assert!(l.contains(&CellId::new(0, f.get(0, &v).unwrap())), "{name}");
        }
        let (fk, fl) = (CombFlow::new(&k), CombFlow::new(&l));
        let paths: Vec<EdgePath> = paths_of_len(&k, 2).into_iter().take(40).collect();
        for p in &paths {
            for q in &paths {
                if fk.path_equal(p, q).unwrap() {
                    assert!(fl.path_equal(&image_path(&f, p), &image_path(&f, q)).unwrap(), "{name}");
                }
            }
        }
    }
}

#[test]
fn globular_ledger_is_functorial() {
    for (name, k, l, f) in corpus_morphisms() {
        let gl: BTreeMap<(usize, String), _> =
            globular_decomposition(&l).cells.into_iter().map(|c| ((c.dim, c.cube.clone()), c)).collect();
        for cell in globular_decomposition(&k).cells {
            let image = &gl[&(cell.dim, f.get(cell.dim, &cell.cube).unwrap().to_owned())];
            assert_eq!(image.source, f.get(0, &cell.source).unwrap(), "{name}");
            assert_eq!(image.target, f.get(0, &cell.target).unwrap(), "{name}");
            assert_eq!(image.globe_dim, cell.globe_dim);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skeleta_compose(seed in any::<u64>(), m in 0usize..5, n in 0usize..5) {
        let k = glued(seed, 2);
        prop_assert_eq!(skeleton(&skeleton(&k, m), n), skeleton(&k, m.min(n)));
    }

    #[test]
    fn gluings_validate_and_round_trip(seed in any::<u64>(), steps in 0usize..4) {
        let k = glued(seed, steps);
        prop_assert!(k.validate().is_valid());
        let text = serialize(&k);
        let back = parse(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &k);
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn path_equality_is_a_congruence(seed in any::<u64>()) {
        let k = glued(seed, 2);
        let flow = CombFlow::new(&k);
        let twos = paths_of_len(&k, 2);
        let ones = paths_of_len(&k, 1);
        for p in twos.iter().take(15) {
            let class = flow.path_class(p).unwrap();
            for p2 in &class.members {
                for tail in ones.iter().filter(|t| flow.check_path(&p.concat(t)).is_ok()).take(5) {
                    prop_assert!(flow.path_equal(&p.concat(tail), &p2.concat(tail)).unwrap());
                    let q = p.concat(tail);
                    let q2 = p2.concat(tail);
                    for r in flow.path_class(&q).unwrap().members.iter().take(5) {
                        prop_assert!(flow.path_equal(r, &q2).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn loopless_orders_are_strict(seed in any::<u64>()) {
        let k = glued(seed, 2);
        if let Some(poset) = cubeflow::state_order(&k).poset() {
            prop_assert!(poset.is_strict_partial_order());
        }
    }
}
