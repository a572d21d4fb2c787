use crate::word::{CubeWord, Sign};

use super::{PrecubicalSet, Presentation};

fn cube_presentation(n: usize, keep_top: bool) -> Presentation {
    let mut p = Presentation::new();
    for word in CubeWord::all(n) {
        let k = word.star_count();
        if k == n && !keep_top {
            continue;
        }
        let label = word.to_string();
        p.add_cell(k, label.clone());
        for i in 1..=k {
            for sign in Sign::BOTH {
                let face = word.face(i, sign).expect("index within star count");
                p.set_face(k, label.clone(), i, sign, face.to_string());
            }
        }
    }
    p
}

/// The representable cube `□[n]`.
///
/// Its `k`-cells are the words of length `n` with `k` stars, labelled by
/// their string form; `∂ᵢᵅ` sets the `i`-th star to `α`.
pub fn standard_cube(n: usize) -> PrecubicalSet {
    cube_presentation(n, true).build().expect("□[n] satisfies the cubical relations")
}

/// `∂□[n]`: the representable cube with its top cell removed. `∂□[0]` is empty.
pub fn boundary_cube(n: usize) -> PrecubicalSet {
    cube_presentation(n, false).build().expect("∂□[n] satisfies the cubical relations")
}
