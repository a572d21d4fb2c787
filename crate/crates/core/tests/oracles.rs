//! Checks against brute-force oracles that share no code path with the
//! library routines they verify.

use cubeflow::flow::monotone_paths;
use cubeflow::generate::{corpus, random_gluing, torus};
use cubeflow::pcs::{tensor, CellId};
use cubeflow::{
    boundary_cube, chain_complex, corner, count_flow_morphisms, euler_characteristic, globular_decomposition, homology,
    path_equal, realize_states, staircase, standard_cube, state_order, PrecubicalSet, Sign,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of length-`n` words over {0, 1, *} with at least one star, by
/// enumerating base-3 integers.
fn starred_words(n: u32) -> u64 {
    (0..3u64.pow(n))
        .filter(|&code| {
            let mut c = code;
            (0..n).any(|_| {
                let digit = c % 3;
                c /= 3;
                digit == 2
            })
        })
        .count() as u64
}

#[test]
fn representable_cell_counts() {
    for n in 0..=6u64 {
        let counts = standard_cube(n as usize).cell_counts();
        let expected: Vec<usize> = (0..=n).map(|k| (binomial(n, k) * 2u64.pow((n - k) as u32)) as usize).collect();
        assert_eq!(counts, expected, "□[{n}]");
    }
}

#[test]
fn representable_morphism_counts() {
    for n in 0..=4u32 {
        let cube = standard_cube(n as usize);
        assert_eq!(realize_states(&cube).len(), 2usize.pow(n));
        let oracle = starred_words(n);
        assert_eq!(oracle, 3u64.pow(n) - 2u64.pow(n));
        assert_eq!(count_flow_morphisms(&cube, n as usize), oracle, "□[{n}]");
    }
}

#[test]
fn state_order_is_product_order() {
    for n in 0..=3 {
        let cube = standard_cube(n);
        let poset = state_order(&cube).poset().cloned().expect("cubes are loopless");
        let vertices = cube.cells(0);
        for a in vertices {
            for b in vertices {
                let product = a != b && a.bytes().zip(b.bytes()).all(|(x, y)| x <= y);
                assert_eq!(poset.less(a, b), product, "{a} < {b} in □[{n}]");
            }
        }
    }
}

/// Corner by applying `∂ᵢᵅ` with a random admissible index at every step.
fn shuffled_corner(k: &PrecubicalSet, cell: &CellId, sign: Sign, rng: &mut impl Rng) -> String {
    let mut cur = cell.clone();
    while cur.dim > 0 {
        let i = rng.gen_range(1..=cur.dim);
        cur = k.face(&cur, i, sign).unwrap();
    }
    cur.label
}

#[test]
fn globular_endpoints_match_shuffled_corners() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, k) in corpus() {
        let g = globular_decomposition(&k);
        let expected: usize = k.cell_counts().iter().skip(1).sum();
        assert_eq!(g.cells.len(), expected, "{name}");
        for cell in &g.cells {
            let id = CellId::new(cell.dim, cell.cube.clone());
            for _ in 0..3 {
                assert_eq!(cell.source, shuffled_corner(&k, &id, Sign::Zero, &mut rng), "{name}");
                assert_eq!(cell.target, shuffled_corner(&k, &id, Sign::One, &mut rng), "{name}");
            }
            assert_eq!(cell.source, corner(&k, &id, Sign::Zero).unwrap());
        }
    }
}

#[test]
fn staircase_invariance_on_corpus() {
    for (name, k) in corpus() {
        for dim in 1..=k.top_dim().unwrap_or(0).min(4) {
            for label in k.cells(dim) {
                let id = CellId::new(dim, label.clone());
                let stair = staircase(&k, &id).unwrap();
                assert_eq!(stair.len(), dim);
                for p in monotone_paths(&k, &id).unwrap() {
                    assert!(path_equal(&k, &p, &stair).unwrap(), "{name}: {label} {p:?}");
                }
            }
        }
    }
}

#[test]
fn boundary_squares_to_zero() {
    for (name, k) in corpus() {
        assert!(chain_complex(&k).squares_to_zero(), "{name}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let k = random_gluing(&mut rng, 3);
        assert!(chain_complex(&k).squares_to_zero());
    }
}

/// Rank over Q by fraction-free Gaussian elimination on i128.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let (x, y) = (a[rank][c], a[r][c]);
                let pivot = a[rank].clone();
                for (v, p) in a[r].iter_mut().zip(&pivot) {
                    *v = *v * x - p * y;
                }
                let g = a[r].iter().fold(0i128, |g, &v| gcd(g, v.abs()));
                if g > 1 {
                    a[r].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn betti_numbers_match_rational_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut samples: Vec<PrecubicalSet> = corpus().into_iter().map(|(_, k)| k).collect();
    samples.extend((0..20).map(|_| random_gluing(&mut rng, 2)));
    for k in samples {
        let cc = chain_complex(&k);
        let h = homology(&k);
        let ranks: Vec<usize> =
            (0..=cc.bases.len()).map(|n| cc.boundary(n).map_or(0, |m| rational_rank(&m.to_rows()))).collect();
        for (n, basis) in cc.bases.iter().enumerate() {
            assert_eq!(h.betti(n), basis.len() - ranks[n] - ranks[n + 1]);
        }
        assert_eq!(h.euler_characteristic(), euler_characteristic(&k));
    }
}

#[test]
fn spheres_cubes_and_tori() {
    for n in 1..=4 {
        assert!(homology(&boundary_cube(n + 1)).is_sphere(n), "∂□[{}]", n + 1);
    }
    for n in 0..=5 {
        assert!(homology(&standard_cube(n)).is_point(), "□[{n}]");
    }
    for d in 1..=3u64 {
        let expected: Vec<usize> = (0..=d).map(|k| binomial(d, k) as usize).collect();
        assert!(homology(&torus(d as usize)).matches_betti(&expected), "torus {d}");
    }
}

/// Groups up to the last non-trivial one.
fn nontrivial(h: &cubeflow::HomologyResult) -> Vec<cubeflow::homology::HomologyGroup> {
    let end = h.groups.iter().rposition(|g| !g.is_trivial()).map_or(0, |i| i + 1);
    h.groups[..end].to_vec()
}

#[test]
fn cylinder_invariance() {
    for (name, k) in corpus() {
        if k.total_cells() > 150 {
            continue;
        }
        let cyl = tensor(&k, &standard_cube(1));
        assert_eq!(nontrivial(&homology(&cyl)), nontrivial(&homology(&k)), "{name}");
    }
}
