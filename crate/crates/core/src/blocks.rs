//! Biconnected components (blocks) via the iterative lowpoint DFS.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted vertex sets, ordered lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    /// Edges of each block, `(u, v)` with `u < v`, sorted.
    pub block_edges: Vec<Vec<(Vertex, Vertex)>>,
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: Vertex) -> Vec<usize> {
        (0..self.k())
            .filter(|&i| self.blocks[i].binary_search(&v).is_ok())
            .collect()
    }

    /// The unique block containing both distinct vertices, if any.
    pub fn common_block(&self, x: Vertex, y: Vertex) -> Option<usize> {
        (0..self.k()).find(|&i| {
            let b = &self.blocks[i];
            b.binary_search(&x).is_ok() && b.binary_search(&y).is_ok()
        })
    }
}

/// Block decomposition of a connected graph. Checks Σ n_i = n + k − 1.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(Vertex, Vertex)>> = Vec::new();

    struct Frame {
        v: Vertex,
        parent: Vertex,
        next: usize,
    }

    let root = 0;
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut stack = vec![Frame {
        v: root,
        parent: UNSEEN,
        next: 0,
    }];
    while let Some(frame) = stack.last_mut() {
        let v = frame.v;
        if frame.next < g.degree(v) {
            let w = g.neighbors(v)[frame.next];
            frame.next += 1;
            if disc[w] == UNSEEN {
                edge_stack.push((v, w));
                disc[w] = time;
                low[w] = time;
                time += 1;
                stack.push(Frame {
                    v: w,
                    parent: v,
                    next: 0,
                });
            } else if w != frame.parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(up) = stack.last() {
                let p = up.v;
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == (p, v) {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }

    let mut pairs: Vec<_> = raw_blocks
        .into_iter()
        .map(|edges| {
            let mut edges: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort_unstable();
            let mut verts: Vec<_> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            verts.sort_unstable();
            verts.dedup();
            (verts, edges)
        })
        .collect();
    pairs.sort();
    let (blocks, block_edges): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();

    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    let decomposition = BlockDecomposition {
        blocks,
        block_edges,
        cut_vertices,
    };

    let total: usize = decomposition.block_sizes().iter().sum();
    if total + 1 != n + decomposition.k() {
        return Err(Error::Internal(format!(
            "block sizes sum to {total}, expected n + k - 1 = {}",
            n + decomposition.k() - 1
        )));
    }
    let covered: usize = decomposition.block_edges.iter().map(Vec::len).sum();
    if covered != g.m() {
        return Err(Error::Internal(format!("blocks cover {covered} of {} edges", g.m())));
    }
    Ok(decomposition)
}

/// Connected, at least three vertices and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && block_decomposition(g).is_ok_and(|b| b.k() == 1)
}
