use serde::Serialize;

use crate::pcs::PrecubicalSet;

use super::{CombFlow, EdgePath};

/// Reachability order on the states of a loopless realized flow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatePoset {
    pub states: Vec<String>,
    /// Pairs `(a, b)` with `a < b`, sorted.
    pub relations: Vec<(String, String)>,
    #[serde(skip)]
    below: Vec<Vec<bool>>,
}

impl StatePoset {
    pub fn less(&self, a: &str, b: &str) -> bool {
        match (self.states.binary_search_by(|s| s.as_str().cmp(a)), self.states.binary_search_by(|s| s.as_str().cmp(b)))
        {
            (Ok(i), Ok(j)) => self.below[i][j],
            _ => false,
        }
    }

    pub fn is_strict_partial_order(&self) -> bool {
        let n = self.states.len();
        (0..n).all(|i| !self.below[i][i])
            && (0..n).all(|i| (0..n).all(|j| !(self.below[i][j] && self.below[j][i])))
            && (0..n)
                .all(|i| (0..n).all(|j| !self.below[i][j] || (0..n).all(|k| !self.below[j][k] || self.below[i][k])))
    }
}

/// A directed cycle of edges, proving the flow has a loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopReport {
    pub cycle: EdgePath,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StateOrder {
    Poset(StatePoset),
    Loop(LoopReport),
}

impl StateOrder {
    pub fn poset(&self) -> Option<&StatePoset> {
        match self {
            StateOrder::Poset(p) => Some(p),
            StateOrder::Loop(_) => None,
        }
    }
}

/// The transitive closure of the edge relation when the edge graph is
/// acyclic, otherwise one directed cycle.
pub fn state_order(k: &PrecubicalSet) -> StateOrder {
    let flow = CombFlow::new(k);
    let n = k.count(0);

    // Iterative DFS with colours; the stack keeps the edge used to enter
    // each vertex so a back edge yields its cycle.
    let mut colour = vec![0u8; n];
    for root in 0..n {
        if colour[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize, Option<usize>)> = vec![(root, 0, None)];
        colour[root] = 1;
        while let Some(&mut (v, ref mut next, _)) = stack.last_mut() {
            let out = flow.outgoing(v);
            if *next == out.len() {
                colour[v] = 2;
                stack.pop();
                continue;
            }
            let e = out[*next];
            *next += 1;
            let w = flow.edge_target(e);
            match colour[w] {
                0 => {
                    colour[w] = 1;
                    stack.push((w, 0, Some(e)));
                }
                1 => {
                    let start = stack.iter().position(|&(x, _, _)| x == w).expect("grey vertex is on the stack");
                    let mut cycle: Vec<usize> =
                        stack[start + 1..].iter().map(|&(_, _, via)| via.expect("non-root")).collect();
                    cycle.push(e);
                    return StateOrder::Loop(LoopReport { cycle: EdgePath::from_indices(k, &cycle) });
                }
                _ => {}
            }
        }
    }

    let mut below = vec![vec![false; n]; n];
    for (a, row) in below.iter_mut().enumerate() {
        let mut todo: Vec<usize> = flow.outgoing(a).iter().map(|&e| flow.edge_target(e)).collect();
        while let Some(b) = todo.pop() {
            if !row[b] {
                row[b] = true;
                todo.extend(flow.outgoing(b).iter().map(|&e| flow.edge_target(e)));
            }
        }
    }
    let states = k.cells(0).to_vec();
    let mut relations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if below[a][b] {
                relations.push((states[a].clone(), states[b].clone()));
            }
        }
    }
    StateOrder::Poset(StatePoset { states, relations, below })
}
