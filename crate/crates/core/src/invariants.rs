//! Wiener, Szeged and revised Szeged indices, computed exactly.
//!
//! Sz is summed from per-edge vertex partitions (O(n·m) given distances).
//! The μ table is a separate O(n²·m) path evaluated pair by pair straight
//! from the distance matrix, so that Σ μ = Sz is a genuine cross-check.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Counts of vertices strictly closer to `u`, strictly closer to `v`, and
/// equidistant, for the edge `uv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    pub u: Vertex,
    pub v: Vertex,
    pub n_u: usize,
    pub n_v: usize,
    pub n_0: usize,
}

impl EdgePartition {
    pub fn product(&self) -> u64 {
        (self.n_u * self.n_v) as u64
    }

    /// (2n_u + n_0)(2n_v + n_0), i.e. four times the revised term.
    pub fn revised_product_times4(&self) -> u64 {
        ((2 * self.n_u + self.n_0) * (2 * self.n_v + self.n_0)) as u64
    }
}

/// An exact non-negative rational with denominator dividing 4, stored as
/// the count of quarters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quarters(pub u64);

impl Quarters {
    pub fn from_integer(x: u64) -> Self {
        Quarters(4 * x)
    }

    pub fn times4(self) -> u64 {
        self.0
    }

    /// Reduced numerator.
    pub fn numer(self) -> u64 {
        self.0 * self.denom() / 4
    }

    /// Reduced denominator: 1, 2 or 4.
    pub fn denom(self) -> u64 {
        match self.0 % 4 {
            0 => 1,
            2 => 2,
            _ => 4,
        }
    }

    pub fn as_integer(self) -> Option<u64> {
        self.0.is_multiple_of(4).then_some(self.0 / 4)
    }
}

impl fmt::Display for Quarters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom() {
            1 => write!(f, "{}", self.numer()),
            d => write!(f, "{}/{d}", self.numer()),
        }
    }
}

impl Serialize for Quarters {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let dist = all_pairs_distances(g);
    if !dist.all_reachable() {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// Sum of distances over unordered pairs.
pub fn wiener(dist: &DistanceMatrix) -> Result<u64> {
    if !dist.all_reachable() {
        return Err(Error::Disconnected);
    }
    let n = dist.n();
    Ok((0..n)
        .map(|u| dist.row(u)[u + 1..].iter().map(|&d| d as u64).sum::<u64>())
        .sum())
}

pub fn edge_partition(g: &Graph, dist: &DistanceMatrix, u: Vertex, v: Vertex) -> Result<EdgePartition> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    Ok(partition_unchecked(dist, u, v))
}

fn partition_unchecked(dist: &DistanceMatrix, u: Vertex, v: Vertex) -> EdgePartition {
    let (du, dv) = (dist.row(u), dist.row(v));
    let mut p = EdgePartition {
        u,
        v,
        n_u: 0,
        n_v: 0,
        n_0: 0,
    };
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => p.n_u += 1,
            std::cmp::Ordering::Greater => p.n_v += 1,
            std::cmp::Ordering::Equal => p.n_0 += 1,
        }
    }
    p
}

/// Partitions for every edge, in [`Graph::edges`] order.
pub fn edge_partitions(g: &Graph, dist: &DistanceMatrix) -> Vec<EdgePartition> {
    g.edges()
        .iter()
        .map(|&(u, v)| partition_unchecked(dist, u, v))
        .collect()
}

pub fn szeged(g: &Graph) -> Result<u64> {
    let dist = connected_distances(g)?;
    Ok(edge_partitions(g, &dist).iter().map(EdgePartition::product).sum())
}

pub fn revised_szeged(g: &Graph) -> Result<Quarters> {
    let dist = connected_distances(g)?;
    Ok(Quarters(
        edge_partitions(g, &dist)
            .iter()
            .map(EdgePartition::revised_product_times4)
            .sum(),
    ))
}

/// Sz − W.
pub fn gap(g: &Graph) -> Result<i64> {
    let r = InvariantReport::compute(g)?;
    Ok(r.gap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub revised_szeged_times4: u64,
    pub gap: i64,
    pub per_edge: Vec<EdgePartition>,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        let dist = connected_distances(g)?;
        Ok(Self::from_distances(g, &dist))
    }

    /// `dist` must belong to `g` and be fully reachable.
    pub fn from_distances(g: &Graph, dist: &DistanceMatrix) -> Self {
        let per_edge = edge_partitions(g, dist);
        let wiener = wiener(dist).expect("caller checked reachability");
        let szeged: u64 = per_edge.iter().map(EdgePartition::product).sum();
        let revised_szeged_times4 = per_edge.iter().map(EdgePartition::revised_product_times4).sum();
        InvariantReport {
            n: g.n(),
            m: g.m(),
            wiener,
            szeged,
            revised_szeged_times4,
            gap: szeged as i64 - wiener as i64,
            per_edge,
        }
    }

    pub fn revised_szeged(&self) -> Quarters {
        Quarters(self.revised_szeged_times4)
    }

    /// One row per edge: `u,v,n_u,n_v,n_0,product`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,v,n_u,n_v,n_0,product\n");
        for p in &self.per_edge {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                p.u,
                p.v,
                p.n_u,
                p.n_v,
                p.n_0,
                p.product()
            ));
        }
        out
    }
}

/// μ_{x,y}(uv): 1 iff x and y fall strictly on opposite sides of the edge.
pub fn mu(g: &Graph, dist: &DistanceMatrix, x: Vertex, y: Vertex, edge: (Vertex, Vertex)) -> Result<u8> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    if x == y {
        return Err(Error::SamePairVertex(x));
    }
    for w in [x, y] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
        }
    }
    Ok(mu_unchecked(dist, x, y, u, v))
}

#[inline]
pub(crate) fn mu_unchecked(dist: &DistanceMatrix, x: Vertex, y: Vertex, u: Vertex, v: Vertex) -> u8 {
    let (xu, xv, yu, yv) = (dist.raw(x, u), dist.raw(x, v), dist.raw(y, u), dist.raw(y, v));
    ((xu < xv && yv < yu) || (xv < xu && yu < yv)) as u8
}

/// Index of the unordered pair {x, y}, x < y, in row-major upper-triangle order.
#[inline]
pub fn pair_index(n: usize, x: Vertex, y: Vertex) -> usize {
    let (x, y) = (x.min(y), x.max(y));
    x * (2 * n - x - 1) / 2 + (y - x - 1)
}

/// All unordered pairs `(x, y)` with `x < y`, in [`pair_index`] order.
pub fn pairs(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
}

/// Full μ table over (pair, edge) with per-pair sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuTable {
    n: usize,
    m: usize,
    entries: Vec<u8>,
    pair_sums: Vec<u32>,
}

impl MuTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// μ for the pair and the edge at `edge_index` in [`Graph::edges`].
    pub fn get(&self, x: Vertex, y: Vertex, edge_index: usize) -> u8 {
        self.entries[pair_index(self.n, x, y) * self.m + edge_index]
    }

    /// Σ_e μ_{x,y}(e).
    pub fn pair_sum(&self, x: Vertex, y: Vertex) -> u32 {
        self.pair_sums[pair_index(self.n, x, y)]
    }

    pub fn pair_sums(&self) -> &[u32] {
        &self.pair_sums
    }

    /// Σ over pairs of μ for one edge.
    pub fn edge_sum(&self, edge_index: usize) -> u64 {
        (0..self.pair_sums.len())
            .map(|p| self.entries[p * self.m + edge_index] as u64)
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.pair_sums.iter().map(|&s| s as u64).sum()
    }
}

pub fn mu_table(g: &Graph) -> Result<MuTable> {
    let dist = connected_distances(g)?;
    Ok(mu_table_from(g, &dist))
}

pub fn mu_table_from(g: &Graph, dist: &DistanceMatrix) -> MuTable {
    let (n, m) = (g.n(), g.m());
    let pair_count = n * n.saturating_sub(1) / 2;
    let mut entries = vec![0u8; pair_count * m];
    let mut pair_sums = vec![0u32; pair_count];
    for (p, (x, y)) in pairs(n).enumerate() {
        let row = &mut entries[p * m..(p + 1) * m];
        for (slot, &(u, v)) in row.iter_mut().zip(g.edges()) {
            *slot = mu_unchecked(dist, x, y, u, v);
        }
        pair_sums[p] = row.iter().map(|&b| b as u32).sum();
    }
    MuTable {
        n,
        m,
        entries,
        pair_sums,
    }
}
