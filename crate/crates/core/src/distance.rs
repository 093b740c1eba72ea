use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

/// All-pairs hop distances. Unreachable pairs hold [`DistanceMatrix::UNREACHABLE`],
/// which compares greater than every real distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw entry; `UNREACHABLE` for pairs in different components.
    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        Some(self.raw(u, v)).filter(|&d| d != Self::UNREACHABLE)
    }

    pub fn is_reachable(&self, u: Vertex, v: Vertex) -> bool {
        self.raw(u, v) != Self::UNREACHABLE
    }

    pub fn all_reachable(&self) -> bool {
        self.n > 0 && self.d.iter().all(|&x| x != Self::UNREACHABLE)
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
    if n <= 64 {
        for s in 0..n {
            bfs_bitset(g, s, &mut d[s * n..(s + 1) * n]);
        }
    } else {
        let mut queue = VecDeque::new();
        for s in 0..n {
            bfs_queue(g, s, &mut d[s * n..(s + 1) * n], &mut queue);
        }
    }
    DistanceMatrix { n, d }
}

// Frontier expansion over single-word adjacency rows.
fn bfs_bitset(g: &Graph, s: Vertex, out: &mut [u32]) {
    let mut visited: u64 = 1 << s;
    let mut frontier: u64 = 1 << s;
    let mut depth = 0;
    out[s] = 0;
    while frontier != 0 {
        depth += 1;
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.row(v)[0];
        }
        next &= !visited;
        visited |= next;
        frontier = next;
        let mut f = next;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            out[v] = depth;
        }
    }
}

fn bfs_queue(g: &Graph, s: Vertex, out: &mut [u32], queue: &mut VecDeque<Vertex>) {
    out[s] = 0;
    queue.clear();
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        let next = out[v] + 1;
        for &w in g.neighbors(v) {
            if out[w] == DistanceMatrix::UNREACHABLE {
                out[w] = next;
                queue.push_back(w);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let d = all_pairs_distances(&Graph::cycle(4));
        assert_eq!(d.get(0, 2), Some(2));
        assert_eq!(d.get(1, 3), Some(2));
        let d = all_pairs_distances(&Graph::complete_bipartite(2, 3));
        assert_eq!(d.get(0, 1), Some(2));
        let d = all_pairs_distances(&Graph::path(3));
        assert_eq!(d.get(0, 2), Some(2));
    }

    #[test]
    fn unreachable_pairs_are_flagged() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), None);
        assert!(!d.all_reachable());
        assert_eq!(d.get(2, 3), Some(1));
    }

    #[test]
    fn bitset_and_queue_paths_agree() {
        let g = Graph::cycle(130);
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 65), Some(65));
        assert_eq!(d.get(0, 100), Some(30));
        let small = Graph::cycle(40);
        let fast = all_pairs_distances(&small);
        let mut slow = vec![DistanceMatrix::UNREACHABLE; 40 * 40];
        let mut q = VecDeque::new();
        for s in 0..40 {
            bfs_queue(&small, s, &mut slow[s * 40..(s + 1) * 40], &mut q);
        }
        assert_eq!(fast.d, slow);
    }
}
