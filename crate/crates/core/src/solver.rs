//! Consistent rotation maps for arbitrary regular graphs.
//!
//! A consistent map is the same thing as a labelling of the directed arcs
//! `(v, w)` with ports in `1..=d` such that the arcs leaving any vertex carry
//! distinct labels and the arcs entering any vertex carry distinct labels.
//! Viewed as a bipartite graph between out-sides and in-sides of the
//! vertices, the arcs form a `d`-regular bipartite graph, so they split into
//! `d` perfect matchings; each matching is one column of the map.
//!
//! [`solve_matching`] peels those matchings off with augmenting paths.
//! [`solve_backtracking`] is an exhaustive search over arc labellings, used as
//! an independent check on small graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::adjacency::adjacency_from_rotation;
use crate::{AdjacencyMatrix, Error, Result, RotationMatrix};

fn positive_degree(a: &AdjacencyMatrix) -> Result<usize> {
    let d = a.regular_degree()?;
    if d == 0 {
        return Err(Error::Degenerate { num_vertices: a.order(), degree: 0 });
    }
    Ok(d)
}

/// A partial assignment of labels to directed arcs, kept out- and
/// in-distinct at all times.
#[derive(Debug, Clone)]
pub struct ArcLabeling {
    num_vertices: usize,
    degree: usize,
    // lexicographic (v, w)
    arcs: Vec<(usize, usize)>,
    labels: Vec<Option<usize>>,
    // [vertex][label], 1-indexed, label 0 unused
    out_used: Vec<bool>,
    in_used: Vec<bool>,
}

impl ArcLabeling {
    pub fn new(a: &AdjacencyMatrix) -> Result<Self> {
        let degree = positive_degree(a)?;
        let n = a.order();
        let arcs: Vec<_> = (1..=n).flat_map(|v| a.neighbors(v).map(move |w| (v, w))).collect();
        Ok(Self {
            num_vertices: n,
            degree,
            labels: vec![None; arcs.len()],
            arcs,
            out_used: vec![false; (n + 1) * (degree + 1)],
            in_used: vec![false; (n + 1) * (degree + 1)],
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    fn arc_index(&self, v: usize, w: usize) -> Option<usize> {
        self.arcs.binary_search(&(v, w)).ok()
    }

    fn slot(&self, vertex: usize, label: usize) -> usize {
        vertex * (self.degree + 1) + label
    }

    pub fn label(&self, v: usize, w: usize) -> Option<usize> {
        self.arc_index(v, w).and_then(|k| self.labels[k])
    }

    fn is_free(&self, k: usize, label: usize) -> bool {
        let (v, w) = self.arcs[k];
        !self.out_used[self.slot(v, label)] && !self.in_used[self.slot(w, label)]
    }

    fn set(&mut self, k: usize, label: Option<usize>) {
        let (v, w) = self.arcs[k];
        if let Some(old) = self.labels[k] {
            let (o, i) = (self.slot(v, old), self.slot(w, old));
            self.out_used[o] = false;
            self.in_used[i] = false;
        }
        if let Some(new) = label {
            let (o, i) = (self.slot(v, new), self.slot(w, new));
            self.out_used[o] = true;
            self.in_used[i] = true;
        }
        self.labels[k] = label;
    }

    /// Labels arc `(v, w)`. Returns `false`, leaving the labelling unchanged,
    /// if `(v, w)` is not an arc, the label is out of range, or it clashes
    /// with another arc leaving `v` or entering `w`.
    pub fn assign(&mut self, v: usize, w: usize, label: usize) -> bool {
        let Some(k) = self.arc_index(v, w) else { return false };
        if label == 0 || label > self.degree {
            return false;
        }
        let previous = self.labels[k].take();
        if let Some(old) = previous {
            let (o, i) = (self.slot(v, old), self.slot(w, old));
            self.out_used[o] = false;
            self.in_used[i] = false;
        }
        if self.is_free(k, label) {
            self.set(k, Some(label));
            true
        } else {
            self.set(k, previous);
            false
        }
    }

    pub fn is_complete(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    /// The rotation matrix `entries[v][label(v, w)] = w`, once complete.
    pub fn to_rotation(&self) -> Option<RotationMatrix> {
        let d = self.degree;
        let mut entries = vec![0; self.num_vertices * d];
        for (&(v, w), label) in self.arcs.iter().zip(&self.labels) {
            entries[(v - 1) * d + (*label)? - 1] = w;
        }
        RotationMatrix::new(self.num_vertices, d, entries).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BacktrackOutcome {
    Solved(RotationMatrix),
    /// The node budget ran out before a labelling was found. This says
    /// nothing about existence; one always exists.
    Exhausted { explored: u64 },
}

struct Search {
    labeling: ArcLabeling,
    // arc indices entering each vertex
    incoming: Vec<Vec<usize>>,
    explored: u64,
    budget: u64,
}

impl Search {
    fn has_option(&self, k: usize) -> bool {
        (1..=self.labeling.degree).any(|l| self.labeling.is_free(k, l))
    }

    /// Every unlabelled arc sharing a tail or head with arc `k` still has a label.
    fn forward_check(&self, k: usize) -> bool {
        let (v, w) = self.labeling.arcs[k];
        let d = self.labeling.degree;
        let out_start = (v - 1) * d;
        (out_start..out_start + d)
            .chain(self.incoming[w].iter().copied())
            .filter(|&x| self.labeling.labels[x].is_none())
            .all(|x| self.has_option(x))
    }

    /// `None` when the budget is exhausted.
    fn run(&mut self, k: usize) -> Option<bool> {
        if k == self.labeling.arcs.len() {
            return Some(true);
        }
        for label in 1..=self.labeling.degree {
            if !self.labeling.is_free(k, label) {
                continue;
            }
            if self.explored == self.budget {
                return None;
            }
            self.explored += 1;
            self.labeling.set(k, Some(label));
            if self.forward_check(k) && self.run(k + 1)? {
                return Some(true);
            }
            self.labeling.set(k, None);
        }
        Some(false)
    }
}

/// Depth-first search over arc labellings, arcs in lexicographic `(v, w)`
/// order and labels ascending. `budget` caps the number of label
/// placements tried.
pub fn solve_backtracking(a: &AdjacencyMatrix, budget: u64) -> Result<BacktrackOutcome> {
    let labeling = ArcLabeling::new(a)?;
    let mut incoming = vec![Vec::new(); a.order() + 1];
    for (k, &(_, w)) in labeling.arcs.iter().enumerate() {
        incoming[w].push(k);
    }
    let mut search = Search { labeling, incoming, explored: 0, budget };
    match search.run(0) {
        Some(true) => Ok(BacktrackOutcome::Solved(
            search.labeling.to_rotation().expect("complete labelling"),
        )),
        Some(false) => unreachable!("regular bipartite multigraphs are always d-edge-colourable"),
        None => Ok(BacktrackOutcome::Exhausted { explored: search.explored }),
    }
}

/// Kuhn's augmenting path from left vertex `v`.
fn augment(v: usize, adj: &[Vec<usize>], matched: &mut [usize], visited: &mut [bool]) -> bool {
    for &w in &adj[v] {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        if matched[w] == 0 || augment(matched[w], adj, matched, visited) {
            matched[w] = v;
            return true;
        }
    }
    false
}

/// Splits the arcs into `d` perfect matchings; matching `c` becomes column `c`.
pub fn solve_matching(a: &AdjacencyMatrix) -> Result<RotationMatrix> {
    let d = positive_degree(a)?;
    let n = a.order();
    // remaining arcs, out-side v -> in-side w
    let mut adj: Vec<Vec<usize>> = (0..=n)
        .map(|v| if v == 0 { Vec::new() } else { a.neighbors(v).collect() })
        .collect();
    let mut entries = vec![0; n * d];
    let mut matched = vec![0usize; n + 1];
    let mut visited = vec![false; n + 1];

    for column in 0..d {
        matched.iter_mut().for_each(|m| *m = 0);
        for v in 1..=n {
            visited.iter_mut().for_each(|x| *x = false);
            let found = augment(v, &adj, &mut matched, &mut visited);
            assert!(found, "a regular bipartite graph has a perfect matching");
        }
        for (w, &v) in matched.iter().enumerate().skip(1) {
            entries[(v - 1) * d + column] = w;
            adj[v].retain(|&x| x != w);
        }
    }
    RotationMatrix::new(n, d, entries)
}

/// True iff `r` is consistent and describes exactly the graph `a`.
pub fn is_sound(a: &AdjacencyMatrix, r: &RotationMatrix) -> bool {
    r.validate().is_consistent && adjacency_from_rotation(r).is_ok_and(|b| &b == a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    /// Both solvers produced sound maps.
    Agree,
    /// A solver produced a map that is not sound.
    Disagree,
    /// The backtracker ran out of budget.
    Inconclusive { explored: u64 },
}

/// Runs both solvers and checks both outputs. The maps need not be equal.
pub fn agree(a: &AdjacencyMatrix, budget: u64) -> Result<Agreement> {
    let matching = solve_matching(a)?;
    match solve_backtracking(a, budget)? {
        BacktrackOutcome::Exhausted { explored } => Ok(Agreement::Inconclusive { explored }),
        BacktrackOutcome::Solved(r) if is_sound(a, &r) && is_sound(a, &matching) => Ok(Agreement::Agree),
        BacktrackOutcome::Solved(_) => Ok(Agreement::Disagree),
    }
}
