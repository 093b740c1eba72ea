//! Canonical labelling by individualisation and refinement.
//!
//! The ordered partition is refined to equitability (degree classes first,
//! then counts of neighbours per class, to a fixpoint). Non-discrete
//! partitions branch on each vertex of the first non-singleton cell. Every
//! leaf yields a vertex order and the adjacency bit string under that order;
//! the largest bit string wins. Leaves tying with the current best give
//! automorphisms, which prune sibling branches lying in a common orbit of the
//! pointwise stabiliser of the branch prefix.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::graph6::to_graph6;

pub const MAX_CANON_N: usize = 64;

/// graph6 text of the canonical relabelling. Equal codes ⇔ isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone)]
pub struct Canonical {
    pub code: CanonicalCode,
    /// `graph` relabelled so that `order[i]` becomes vertex `i`.
    pub graph: Graph,
    pub order: Vec<Vertex>,
}

pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    if g.n() > MAX_CANON_N {
        return Err(Error::OverLimit {
            what: "canonical labelling input",
            n: g.n(),
            limit: MAX_CANON_N,
        });
    }
    let order = canonical_order(g);
    let mut perm = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    let graph = g.relabel(&perm);
    Ok(Canonical {
        code: CanonicalCode(to_graph6(&graph)),
        graph,
        order,
    })
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_form(g).map(|c| c.code)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}

type Cells = Vec<Vec<Vertex>>;

fn canonical_order(g: &Graph) -> Vec<Vertex> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let root = refine(g, vec![(0..g.n()).collect()]);
    search.visit(root, &mut Vec::new());
    search.best.expect("at least one leaf").1
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<Vertex>)>,
    automorphisms: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Cells, prefix: &mut Vec<Vertex>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<Vertex> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let mut explored: Vec<Vertex> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() && self.same_orbit_as_explored(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<Vertex> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            prefix.push(v);
            self.visit(refine(self.g, child), prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<Vertex>) {
        let code = adjacency_bits(self.g, &order);
        match &self.best {
            None => self.best = Some((code, order)),
            Some((best, best_order)) => match code.cmp(best) {
                std::cmp::Ordering::Greater => self.best = Some((code, order)),
                std::cmp::Ordering::Equal => {
                    let mut sigma = vec![0; order.len()];
                    for (i, &b) in best_order.iter().enumerate() {
                        sigma[b] = order[i];
                    }
                    self.automorphisms.push(sigma);
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }

    fn same_orbit_as_explored(&self, v: Vertex, explored: &[Vertex], prefix: &[Vertex]) -> bool {
        let n = self.g.n();
        let mut uf = UnionFind::new(n);
        for sigma in &self.automorphisms {
            if prefix.iter().all(|&p| sigma[p] == p) {
                for (a, &b) in sigma.iter().enumerate() {
                    uf.union(a, b);
                }
            }
        }
        let root = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == root)
    }
}

/// Refines an ordered partition until equitable. Each cell splits by the
/// vector of neighbour counts per cell, sub-cells ordered by that vector.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let k = cells.len();
        let mut next: Cells = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, Vertex)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u32; k];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

// Upper triangle, column-major, packed most significant bit first so that
// comparing the word vectors compares the bit strings.
fn adjacency_bits(g: &Graph, order: &[Vertex]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; total.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
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
