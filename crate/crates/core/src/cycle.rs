//! Shortest cycles with lexicographic tie-breaking.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleInfo {
    /// Cyclic order; the last vertex is adjacent to the first.
    pub vertices: Vec<Vertex>,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges `(v_i, v_{i+1})` in cycle order, closing edge last.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let p = self.len();
        (0..p).map(move |i| (self.vertices[i], self.vertices[(i + 1) % p]))
    }
}

/// Length of a shortest cycle through `v`, by BFS with branch labels: a
/// non-tree edge joining two different branches of the BFS tree rooted at `v`
/// closes a cycle of length d(a) + d(b) + 1.
fn shortest_cycle_length_through(g: &Graph, v: Vertex, allowed: impl Fn(Vertex) -> bool) -> Option<usize> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    let mut best = usize::MAX;
    while let Some(a) = queue.pop_front() {
        if 2 * dist[a] + 1 >= best {
            break;
        }
        for &b in g.neighbors(a) {
            if !allowed(b) {
                continue;
            }
            if dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                branch[b] = if a == v { b } else { branch[a] };
                parent[b] = a;
                queue.push_back(b);
            } else if b != parent[a] && a != parent[b] && b != v && a != v && branch[a] != branch[b] {
                best = best.min(dist[a] + dist[b] + 1);
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Lexicographically least cycle of exactly `len` vertices starting at
/// `start`, restricted to allowed vertices.
fn least_cycle_from(g: &Graph, start: Vertex, len: usize, allowed: &dyn Fn(Vertex) -> bool) -> Option<Vec<Vertex>> {
    // Distances back to `start` inside the allowed subgraph bound how far a
    // partial path may wander.
    let n = g.n();
    let mut home = vec![usize::MAX; n];
    home[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbors(a) {
            if allowed(b) && home[b] == usize::MAX {
                home[b] = home[a] + 1;
                queue.push_back(b);
            }
        }
    }
    let mut path = vec![start];
    let mut used = vec![false; n];
    used[start] = true;
    extend(g, len, allowed, &home, &mut path, &mut used).then_some(path)
}

fn extend(
    g: &Graph,
    len: usize,
    allowed: &dyn Fn(Vertex) -> bool,
    home: &[usize],
    path: &mut Vec<Vertex>,
    used: &mut [bool],
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == len {
        return g.has_edge(last, path[0]);
    }
    let remaining = len - path.len();
    for &w in g.neighbors(last) {
        if used[w] || !allowed(w) || home[w] > remaining {
            continue;
        }
        path.push(w);
        used[w] = true;
        if extend(g, len, allowed, home, path, used) {
            return true;
        }
        used[w] = false;
        path.pop();
    }
    false
}

/// A shortest cycle of `g`, or `None` for a forest. Among shortest cycles the
/// one returned starts at its smallest vertex and is lexicographically least.
pub fn shortest_cycle(g: &Graph) -> Option<CycleInfo> {
    let girth = (0..g.n())
        .filter_map(|v| shortest_cycle_length_through(g, v, |_| true))
        .min()?;
    (0..g.n()).find_map(|s| {
        let len = shortest_cycle_length_through(g, s, |w| w >= s)?;
        if len != girth {
            return None;
        }
        least_cycle_from(g, s, girth, &|w| w >= s).map(|vertices| CycleInfo { vertices })
    })
}

/// A shortest cycle through `v`, listed from `v`, lexicographically least
/// among shortest ones.
pub fn shortest_cycle_through(g: &Graph, v: Vertex) -> Option<CycleInfo> {
    let len = shortest_cycle_length_through(g, v, |_| true)?;
    least_cycle_from(g, v, len, &|_| true).map(|vertices| CycleInfo { vertices })
}
