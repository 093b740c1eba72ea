//! Immutable simple undirected graphs.
//!
//! Adjacency is stored twice: as bitmask rows (one `u64` word per 64
//! vertices, so a single word for every graph the enumerator produces) and as
//! sorted neighbour lists for iteration.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph on `0..n` from vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edge_list(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_sorted_edges(n, set.into_iter().collect()))
    }

    /// `edges` must be sorted, deduplicated, in range and oriented `u < v`.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            words,
            rows,
            adj,
            edges,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &pairs).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &pairs).expect("valid path")
    }

    /// K_{a,b} with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let pairs: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Self::from_edge_list(a + b, &pairs).expect("valid complete bipartite graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Bitmask row of `v`; bit `w % 64` of word `w / 64` is set iff `vw` is an edge.
    #[inline]
    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Position of the edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Copy of `self` with one extra edge.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut pairs = self.edges.clone();
        pairs.push((u, v));
        Self::from_edge_list(self.n, &pairs)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted_edges(self.n, edges)
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut pairs = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        Self::from_edge_list(vertices.len(), &pairs).expect("induced subgraph is simple")
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// A graph on zero vertices is not considered connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// 2-colouring per component (the smallest vertex of each component goes
    /// to side A), or an odd cycle proving none exists.
    pub fn bipartition(&self) -> std::result::Result<Bipartition, OddCycle> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            parent[w] = v;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => {
                            return Err(OddCycle {
                                vertices: self.odd_cycle(&parent, v, w),
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut side_a, mut side_b) = (Vec::new(), Vec::new());
        for (v, c) in color.iter().enumerate() {
            if c.unwrap() {
                side_b.push(v);
            } else {
                side_a.push(v);
            }
        }
        Ok(Bipartition { side_a, side_b })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    // Same-colour BFS edge `vw`: both endpoints sit at equal depth, so walking
    // parents in lockstep meets at their common ancestor.
    fn odd_cycle(&self, parent: &[usize], v: Vertex, w: Vertex) -> Vec<Vertex> {
        let (mut a, mut b) = (v, w);
        let (mut left, mut right) = (vec![a], vec![b]);
        while a != b {
            a = parent[a];
            b = parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        right.reverse();
        left.extend(right);
        left
    }

    /// Text edge-list format: first line `n m`, then `m` lines `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::EdgeList("empty input".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut pairs = Vec::with_capacity(m);
        for line in lines {
            pairs.push(parse_pair(line)?);
        }
        if pairs.len() != m {
            return Err(Error::EdgeList(format!(
                "header declares {m} edges but {} follow",
                pairs.len()
            )));
        }
        Self::from_edge_list(n, &pairs)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList(format!("expected two integers, got {line:?}"))),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

/// Witness that a graph is not bipartite: an odd closed walk without repeated
/// vertices, listed in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<Vertex>,
}
