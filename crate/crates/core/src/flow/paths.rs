use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pcs::PrecubicalSet;

use super::CombFlow;

/// A non-empty sequence of edges, each ending where the next one starts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgePath {
    edges: Vec<String>,
}

impl EdgePath {
    /// Wraps edge labels; well-formedness is checked when the path is used.
    pub fn new<S: Into<String>>(edges: impl IntoIterator<Item = S>) -> Self {
        EdgePath { edges: edges.into_iter().map(Into::into).collect() }
    }

    pub(crate) fn from_indices(k: &PrecubicalSet, edges: &[usize]) -> Self {
        EdgePath { edges: edges.iter().map(|&e| k.label(1, e).to_owned()).collect() }
    }

    pub fn labels(&self) -> &[String] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn concat(&self, other: &EdgePath) -> EdgePath {
        EdgePath { edges: self.edges.iter().chain(&other.edges).cloned().collect() }
    }
}

/// One morphism of the realized flow: a square-move class of edge paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathClass {
    /// Lexicographically least member.
    pub representative: EdgePath,
    /// All members, sorted.
    pub members: Vec<EdgePath>,
}

impl CombFlow<'_> {
    /// Resolves labels and checks the endpoint chain.
    pub fn check_path(&self, path: &EdgePath) -> Result<Vec<usize>> {
        if path.is_empty() {
            return Err(Error::EmptyPath);
        }
        let k = self.complex();
        let idx = path
            .labels()
            .iter()
            .map(|l| k.index_of(1, l).ok_or_else(|| Error::UnknownCell { dim: 1, label: l.clone() }))
            .collect::<Result<Vec<_>>>()?;
        for (pos, w) in idx.windows(2).enumerate() {
            let (end, start) = (self.edge_target(w[0]), self.edge_source(w[1]));
            if end != start {
                return Err(Error::BrokenPath {
                    position: pos + 1,
                    left: k.label(1, w[0]).to_owned(),
                    right: k.label(1, w[1]).to_owned(),
                    end: k.label(0, end).to_owned(),
                    start: k.label(0, start).to_owned(),
                });
            }
        }
        Ok(idx)
    }

    fn neighbours<'s>(&'s self, path: &'s [usize]) -> impl Iterator<Item = Vec<usize>> + 's {
        (0..path.len().saturating_sub(1)).flat_map(move |p| {
            self.moves_at((path[p], path[p + 1])).iter().map(move |&(a, b)| {
                let mut next = path.to_vec();
                next[p] = a;
                next[p + 1] = b;
                debug_assert_eq!(self.edge_source(next[0]), self.edge_source(path[0]));
                debug_assert_eq!(self.edge_target(next[next.len() - 1]), self.edge_target(path[path.len() - 1]));
                next
            })
        })
    }

    /// The square-move class of a path, sorted. Breadth-first; terminates
    /// because moves keep the length fixed.
    pub(crate) fn saturate(&self, path: &[usize]) -> Vec<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::from([path.to_vec()]);
        let mut queue = VecDeque::from([path.to_vec()]);
        while let Some(cur) = queue.pop_front() {
            for next in self.neighbours(&cur) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut class: Vec<Vec<usize>> = seen.into_iter().collect();
        class.sort_unstable();
        class
    }

    /// Index of the one-step square moves out of `path`, for inspection.
    pub fn square_moves(&self, path: &EdgePath) -> Result<Vec<EdgePath>> {
        let idx = self.check_path(path)?;
        let mut out: Vec<EdgePath> =
            self.neighbours(&idx).map(|p| EdgePath::from_indices(self.complex(), &p)).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn path_class(&self, path: &EdgePath) -> Result<PathClass> {
        let idx = self.check_path(path)?;
        Ok(self.class_from(&self.saturate(&idx)))
    }

    fn class_from(&self, members: &[Vec<usize>]) -> PathClass {
        let k = self.complex();
        let members: Vec<EdgePath> = members.iter().map(|m| EdgePath::from_indices(k, m)).collect();
        PathClass { representative: members[0].clone(), members }
    }

    pub fn path_equal(&self, p: &EdgePath, q: &EdgePath) -> Result<bool> {
        let pi = self.check_path(p)?;
        let qi = self.check_path(q)?;
        if pi.len() != qi.len()
            || self.edge_source(pi[0]) != self.edge_source(qi[0])
            || self.edge_target(pi[pi.len() - 1]) != self.edge_target(qi[qi.len() - 1])
        {
            return Ok(false);
        }
        if pi == qi {
            return Ok(true);
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::from([pi.clone()]);
        let mut queue = VecDeque::from([pi]);
        while let Some(cur) = queue.pop_front() {
            for next in self.neighbours(&cur) {
                if next == qi {
                    return Ok(true);
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(false)
    }

    /// Visits every edge path starting at `from` of length `1..=max_len`.
    fn walk(&self, from: usize, max_len: usize, visit: &mut impl FnMut(&[usize])) {
        fn go(
            flow: &CombFlow<'_>,
            at: usize,
            max_len: usize,
            stack: &mut Vec<usize>,
            visit: &mut impl FnMut(&[usize]),
        ) {
            if stack.len() == max_len {
                return;
            }
            for &e in flow.outgoing(at) {
                stack.push(e);
                visit(stack);
                go(flow, flow.edge_target(e), max_len, stack, visit);
                stack.pop();
            }
        }
        go(self, from, max_len, &mut Vec::new(), visit);
    }

    /// All morphism classes from `from` to `to` represented by paths of
    /// length at most `max_len`, sorted by representative.
    pub fn path_classes(&self, from: &str, to: &str, max_len: usize) -> Result<Vec<PathClass>> {
        let a = self.state_index(from)?;
        let b = self.state_index(to)?;
        let mut paths: Vec<Vec<usize>> = Vec::new();
        self.walk(a, max_len, &mut |p| {
            if self.edge_target(p[p.len() - 1]) == b {
                paths.push(p.to_vec());
            }
        });
        paths.sort_unstable();
        let mut assigned: HashSet<Vec<usize>> = HashSet::new();
        let mut classes = Vec::new();
        for p in &paths {
            if assigned.contains(p) {
                continue;
            }
            let class = self.saturate(p);
            assigned.extend(class.iter().cloned());
            classes.push(self.class_from(&class));
        }
        classes.sort_by(|x, y| x.representative.cmp(&y.representative));
        Ok(classes)
    }

    /// Number of morphism classes over all ordered pairs of states with a
    /// representative of length at most `max_len`.
    pub fn count_morphisms(&self, max_len: usize) -> u64 {
        let mut assigned: HashSet<Vec<usize>> = HashSet::new();
        let mut count = 0u64;
        for v in 0..self.states().len() {
            let mut paths = Vec::new();
            self.walk(v, max_len, &mut |p| paths.push(p.to_vec()));
            for p in paths {
                if assigned.contains(&p) {
                    continue;
                }
                assigned.extend(self.saturate(&p));
                count += 1;
            }
        }
        count
    }
}

/// Whether two edge paths denote the same morphism of the realized flow.
pub fn path_equal(k: &PrecubicalSet, p: &EdgePath, q: &EdgePath) -> Result<bool> {
    CombFlow::new(k).path_equal(p, q)
}

pub fn enumerate_path_classes(k: &PrecubicalSet, from: &str, to: &str, max_len: usize) -> Result<Vec<PathClass>> {
    CombFlow::new(k).path_classes(from, to, max_len)
}

pub fn count_flow_morphisms(k: &PrecubicalSet, max_len: usize) -> u64 {
    CombFlow::new(k).count_morphisms(max_len)
}
