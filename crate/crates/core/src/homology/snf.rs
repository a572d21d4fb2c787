//! Smith normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Invariant factors `d₁ | d₂ | … | dᵣ` (all positive) of an integer matrix
/// given as rows. `r` is the rank.
pub fn invariant_factors(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();

    for t in 0..m.min(n) {
        // Smallest non-zero entry of the trailing block becomes the pivot.
        let Some((pi, pj)) = smallest_nonzero(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let pivot = a[t].clone();
                for (x, p) in a[i][t..].iter_mut().zip(&pivot[t..]) {
                    *x -= &q * p;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let sub = &q * &row[t];
                    row[j] -= sub;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // Enforce divisibility into the trailing block.
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
                match bad {
                    None => break,
                    Some(i) => {
                        let src = a[i].clone();
                        for (x, v) in a[t][t..].iter_mut().zip(&src[t..]) {
                            *x += v;
                        }
                    }
                }
            }
            // Remainders are smaller than the pivot; move the smallest back.
            if let Some((pi, pj)) = smallest_in_cross(&a, t) {
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let n = a.first().map_or(0, Vec::len);
    let cells = (t..a.len()).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in cells {
        let v = &a[i][j];
        if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
            best = Some((i, j));
        }
    }
    best
}
