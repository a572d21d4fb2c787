use crate::word::Sign;

use super::{CubicalMap, PrecubicalSet};

struct Search<'a> {
    k: &'a PrecubicalSet,
    l: &'a PrecubicalSet,
    forward: Vec<Vec<Option<usize>>>,
    used: Vec<Vec<bool>>,
    trail: Vec<(usize, usize)>,
}

impl Search<'_> {
    fn assign(&mut self, dim: usize, c: usize, d: usize) -> bool {
        if let Some(existing) = self.forward[dim][c] {
            return existing == d;
        }
        if self.used[dim][d] {
            return false;
        }
        self.forward[dim][c] = Some(d);
        self.used[dim][d] = true;
        self.trail.push((dim, c));
        if dim == 0 {
            return true;
        }
        for i in 1..=dim {
            for sign in Sign::BOTH {
                let fc = self.k.face_index(dim, c, i, sign);
                let fd = self.l.face_index(dim, d, i, sign);
                if !self.assign(dim - 1, fc, fd) {
                    return false;
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (dim, c) = self.trail.pop().expect("non-empty trail");
            let d = self.forward[dim][c].take().expect("trail entries are assigned");
            self.used[dim][d] = false;
        }
    }

    fn next_free(&self) -> Option<(usize, usize)> {
        (0..self.forward.len())
            .rev()
            .find_map(|dim| self.forward[dim].iter().position(Option::is_none).map(|c| (dim, c)))
    }

    fn run(&mut self) -> bool {
        let Some((dim, c)) = self.next_free() else {
            return true;
        };
        for d in 0..self.l.count(dim) {
            if self.used[dim][d] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(dim, c, d) && self.run() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Searches for an isomorphism `k → l` by backtracking over top-dimensional
/// cells first, with face images forced by propagation.
pub fn find_isomorphism(k: &PrecubicalSet, l: &PrecubicalSet) -> Option<CubicalMap> {
    if k.cell_counts() != l.cell_counts() {
        return None;
    }
    let counts = k.cell_counts();
    let mut search = Search {
        k,
        l,
        forward: counts.iter().map(|&n| vec![None; n]).collect(),
        used: counts.iter().map(|&n| vec![false; n]).collect(),
        trail: Vec::new(),
    };
    if !search.run() {
        return None;
    }
    let mut map = CubicalMap::new();
    for (dim, row) in search.forward.iter().enumerate() {
        for (c, d) in row.iter().enumerate() {
            map.insert(dim, k.label(dim, c), l.label(dim, d.expect("complete assignment")));
        }
    }
    Some(map)
}
