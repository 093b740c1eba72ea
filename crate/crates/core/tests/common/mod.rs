//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's distance, partition, canonical-labelling or
//! generation code.

#![allow(dead_code)]

use szlab::Graph;

pub const INF: u64 = u64::MAX / 4;

/// Floyd–Warshall over a plain adjacency matrix.
pub fn floyd(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteInvariants {
    pub wiener: u64,
    pub szeged: u64,
    pub revised_times4: u64,
    pub mu_total: u64,
}

impl BruteInvariants {
    pub fn gap(&self) -> i64 {
        self.szeged as i64 - self.wiener as i64
    }
}

/// W, Sz, 4·Sz* and Σ_pairs Σ_edges μ by direct loops.
pub fn brute(g: &Graph) -> BruteInvariants {
    let n = g.n();
    let e = g.edges();
    let d = floyd(n, e);
    let wiener: u64 = d
        .iter()
        .enumerate()
        .map(|(i, row)| row[i + 1..].iter().sum::<u64>())
        .sum();
    let (mut szeged, mut revised_times4) = (0, 0);
    for &(u, v) in e {
        let nu = (0..n).filter(|&w| d[u][w] < d[v][w]).count() as u64;
        let nv = (0..n).filter(|&w| d[v][w] < d[u][w]).count() as u64;
        let n0 = n as u64 - nu - nv;
        szeged += nu * nv;
        revised_times4 += (2 * nu + n0) * (2 * nv + n0);
    }
    let mut mu_total = 0;
    for x in 0..n {
        for y in x + 1..n {
            mu_total += pair_mu(&d, e, x, y);
        }
    }
    BruteInvariants {
        wiener,
        szeged,
        revised_times4,
        mu_total,
    }
}

/// Number of edges whose two sides separate `x` from `y`.
pub fn pair_mu(d: &[Vec<u64>], edges: &[(usize, usize)], x: usize, y: usize) -> u64 {
    edges
        .iter()
        .filter(|&&(u, v)| (d[x][u] < d[x][v] && d[y][v] < d[y][u]) || (d[x][v] < d[x][u] && d[y][u] < d[y][v]))
        .count() as u64
}

/// Isomorphism by backtracking over vertex maps, checking adjacency
/// consistency against every previously mapped vertex.
pub fn backtrack_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.m() != h.m() {
        return false;
    }
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                used[w] = true;
                map.push(w);
                if go(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    go(g, h, &mut Vec::new(), &mut vec![false; n])
}

fn matrix_connected(n: usize, adj: &[Vec<bool>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn matrix_bipartite(n: usize, adj: &[Vec<bool>]) -> bool {
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if adj[v][w] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Isomorphism classes of connected (optionally bipartite) graphs on `n`
/// vertices with at least `min_edges` edges: every labelled graph is
/// filtered, then deduplicated against class representatives by
/// [`backtrack_isomorphic`].
pub fn brute_classes(n: usize, min_edges: usize, bipartite: bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut buckets: std::collections::HashMap<(usize, Vec<usize>), Vec<Graph>> = Default::default();
    for mask in 0u64..1 << pairs.len() {
        let m = mask.count_ones() as usize;
        if m < min_edges || m + 1 < n {
            continue;
        }
        let mut adj = vec![vec![false; n]; n];
        let mut edges = Vec::with_capacity(m);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
                edges.push((i, j));
            }
        }
        if !matrix_connected(n, &adj) || (bipartite && !matrix_bipartite(n, &adj)) {
            continue;
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        let bucket = buckets.entry((m, degrees)).or_default();
        if !bucket.iter().any(|r| backtrack_isomorphic(r, &g)) {
            bucket.push(g);
        }
    }
    buckets.into_values().flatten().collect()
}

/// Uniform labelled tree on `n ≥ 2` vertices from a Prüfer sequence.
pub fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).unwrap()
}
