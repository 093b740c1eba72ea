//! The graphs attaining Sz − W = 4n − 8: a 4-cycle with a tree on n − 3
//! vertices hanging from one of its vertices.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::cycle::shortest_cycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::invariants::InvariantReport;

/// A rooted tree on `0..size` with root 0, stored as its canonical level
/// sequence and the derived parent array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedTree {
    /// Depth of each vertex in preorder; vertex 0 is the root.
    pub levels: Vec<usize>,
    pub parent: Vec<Option<Vertex>>,
}

impl RootedTree {
    fn from_levels(levels: Vec<usize>) -> Self {
        let mut parent = vec![None; levels.len()];
        let mut last_at_depth: Vec<Vertex> = Vec::new();
        for (v, &depth) in levels.iter().enumerate() {
            if depth > 0 {
                parent[v] = Some(last_at_depth[depth - 1]);
            }
            last_at_depth.truncate(depth);
            last_at_depth.push(v);
        }
        RootedTree { levels, parent }
    }

    pub fn size(&self) -> usize {
        self.levels.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.parent.iter().enumerate().filter_map(|(v, p)| p.map(|p| (p, v)))
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edge_list(self.size(), &self.edges().collect::<Vec<_>>()).expect("tree edges are valid")
    }
}

/// One representative per rooted-isomorphism class of trees on `k` vertices,
/// in decreasing lexicographic order of level sequences (path first, star
/// last). Uses the constant-amortised-time level-sequence successor rule.
pub fn rooted_trees(k: usize) -> Result<Vec<RootedTree>> {
    if k == 0 {
        return Err(Error::InvalidArgument("rooted trees need at least one vertex".into()));
    }
    let mut levels: Vec<usize> = (0..k).collect();
    let mut out = vec![RootedTree::from_levels(levels.clone())];
    loop {
        let Some(p) = levels.iter().rposition(|&l| l > 1) else {
            return Ok(out);
        };
        let q = levels[..p]
            .iter()
            .rposition(|&l| l == levels[p] - 1)
            .expect("parent level exists");
        for i in p..k {
            levels[i] = levels[i - (p - q)];
        }
        out.push(RootedTree::from_levels(levels.clone()));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalGraph {
    #[serde(skip)]
    pub graph: Graph,
    /// The 4-cycle vertex shared with the tree (the tree's root).
    pub attach_vertex: Vertex,
    pub code: CanonicalCode,
    #[serde(skip)]
    pub tree: RootedTree,
}

/// One member per isomorphism class. The 4-cycle is `0-1-2-3-0`; the tree
/// root is vertex 0 and tree vertex `i ≥ 1` becomes vertex `i + 3`.
pub fn extremal_family(n: usize) -> Result<Vec<ExtremalGraph>> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("extremal family needs n ≥ 4, got {n}")));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for tree in rooted_trees(n - 3)? {
        let map = |v: Vertex| if v == 0 { 0 } else { v + 3 };
        let mut pairs = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        pairs.extend(tree.edges().map(|(a, b)| (map(a), map(b))));
        let graph = Graph::from_edge_list(n, &pairs)?;
        let code = canonical_code(&graph)?;
        if !seen.insert(code.clone()) {
            return Err(Error::Internal(format!("extremal generator produced {code} twice")));
        }
        out.push(ExtremalGraph {
            graph,
            attach_vertex: 0,
            code,
            tree,
        });
    }
    Ok(out)
}

/// Connected, bipartite, unicyclic with a 4-cycle, and at most one cycle
/// vertex carries the tree part.
pub fn is_extremal_form(g: &Graph) -> bool {
    if g.n() < 4 || g.m() != g.n() || !g.is_connected() || !g.is_bipartite() {
        return false;
    }
    let Some(cycle) = shortest_cycle(g) else {
        return false;
    };
    // in a unicyclic graph a cycle vertex is a cut vertex iff its degree exceeds 2
    cycle.len() == 4 && cycle.vertices.iter().filter(|&&v| g.degree(v) > 2).count() <= 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalGapRow {
    pub n: usize,
    pub count: usize,
    pub bound: i64,
    pub min_gap: i64,
    pub max_gap: i64,
    pub all_gaps_equal_4n_minus_8: bool,
}

/// Gap of every family member for 4 ≤ n ≤ `n_max`.
pub fn verify_extremal_gaps(n_max: usize) -> Result<Vec<ExtremalGapRow>> {
    if n_max < 4 {
        return Err(Error::InvalidArgument(format!("n_max must be at least 4, got {n_max}")));
    }
    (4..=n_max).map(extremal_gap_row).collect()
}

pub fn extremal_gap_row(n: usize) -> Result<ExtremalGapRow> {
    let family = extremal_family(n)?;
    let gaps: Vec<i64> = family
        .par_iter()
        .map(|member| InvariantReport::compute(&member.graph).map(|r| r.gap))
        .collect::<Result<_>>()?;
    let bound = 4 * n as i64 - 8;
    Ok(ExtremalGapRow {
        n,
        count: family.len(),
        bound,
        min_gap: gaps.iter().copied().min().unwrap_or(bound),
        max_gap: gaps.iter().copied().max().unwrap_or(bound),
        all_gaps_equal_4n_minus_8: gaps.iter().all(|&x| x == bound),
    })
}
