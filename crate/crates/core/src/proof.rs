//! Pair surpluses and their block-level accounting.
//!
//! The surplus of a pair is s(x,y) = Σ_e μ_{x,y}(e) − d(x,y). Summed over all
//! pairs it equals Sz − W, and a shortest x–y path already contributes
//! d(x,y) to the μ sum, so s ≥ 0 in every connected graph. The checks here
//! evaluate the sharper bounds that hold for bipartite graphs: s ≥ 1 inside
//! 2-connected blocks, antipodal pairs on a shortest cycle, and the
//! per-block subtotals that add up to Sz − W ≥ 4n − 8.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::blocks::{block_decomposition, BlockDecomposition};
use crate::canon::canonical_code;
use crate::cycle::{shortest_cycle, shortest_cycle_through, CycleInfo};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Hypothesis, Result};
use crate::graph::{Graph, Vertex};
use crate::invariants::{mu_table_from, mu_unchecked, pair_index, pairs, InvariantReport};

fn require(holds: bool, h: Hypothesis) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::Hypothesis(h))
    }
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    require(g.is_connected(), Hypothesis::Connected)?;
    Ok(all_pairs_distances(g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairSurplus {
    pub x: Vertex,
    pub y: Vertex,
    pub distance: u32,
    pub mu_sum: u32,
    pub surplus: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurplusMap {
    n: usize,
    entries: Vec<PairSurplus>,
}

impl SurplusMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: Vertex, y: Vertex) -> i64 {
        self.entries[pair_index(self.n, x, y)].surplus
    }

    pub fn entry(&self, x: Vertex, y: Vertex) -> &PairSurplus {
        &self.entries[pair_index(self.n, x, y)]
    }

    /// Entries in pair-index order (x < y, row-major).
    pub fn entries(&self) -> &[PairSurplus] {
        &self.entries
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().map(|e| e.surplus).sum()
    }

    /// Smallest surplus and the first pair attaining it.
    pub fn min(&self) -> Option<&PairSurplus> {
        self.entries.iter().min_by_key(|e| e.surplus)
    }

    pub fn histogram(&self) -> Vec<HistogramBin> {
        let mut bins = BTreeMap::new();
        for e in &self.entries {
            *bins.entry(e.surplus).or_insert(0) += 1;
        }
        bins.into_iter()
            .map(|(surplus, pairs)| HistogramBin { surplus, pairs })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HistogramBin {
    pub surplus: i64,
    pub pairs: usize,
}

pub fn surplus_map(g: &Graph) -> Result<SurplusMap> {
    let dist = all_pairs_distances(g);
    if !dist.all_reachable() {
        return Err(Error::Disconnected);
    }
    surplus_map_from(g, &dist)
}

fn surplus_map_from(g: &Graph, dist: &DistanceMatrix) -> Result<SurplusMap> {
    let n = g.n();
    let table = mu_table_from(g, dist);
    let entries: Vec<PairSurplus> = pairs(n)
        .map(|(x, y)| {
            let distance = dist.raw(x, y);
            let mu_sum = table.pair_sum(x, y);
            PairSurplus {
                x,
                y,
                distance,
                mu_sum,
                surplus: mu_sum as i64 - distance as i64,
            }
        })
        .collect();
    let map = SurplusMap { n, entries };
    let gap = InvariantReport::from_distances(g, dist).gap;
    if map.total() != gap {
        return Err(Error::Internal(format!(
            "surplus total {} differs from Sz - W = {gap}",
            map.total()
        )));
    }
    Ok(map)
}

/// Outcome of checking s(x,y) ≥ 1 for every pair of a 2-connected bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub min_surplus: i64,
    pub min_pair: (Vertex, Vertex),
    /// First pair (in pair-index order) with surplus below 1.
    pub violation: Option<PairSurplus>,
}

impl ClaimCheck {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn check_lemma1_claim(g: &Graph) -> Result<ClaimCheck> {
    require(g.is_connected(), Hypothesis::Connected)?;
    require(g.is_bipartite(), Hypothesis::Bipartite)?;
    require(g.n() >= 4, Hypothesis::MinVertices(4))?;
    require(block_decomposition(g)?.k() == 1, Hypothesis::TwoConnected)?;
    let map = surplus_map(g)?;
    let min = *map.min().expect("n ≥ 4 gives pairs");
    Ok(ClaimCheck {
        min_surplus: min.surplus,
        min_pair: (min.x, min.y),
        violation: map.entries().iter().find(|e| e.surplus < 1).copied(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntipodalPair {
    pub x: Vertex,
    pub y: Vertex,
    /// Cycle edges e with μ_{x,y}(e) = 1.
    pub cycle_edges_with_mu: usize,
    /// Σ_e μ_{x,y}(e) over all edges of the graph.
    pub mu_sum: usize,
    pub distance: u32,
    pub surplus: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntipodalCheck {
    pub cycle: CycleInfo,
    pub pairs: Vec<AntipodalPair>,
}

impl AntipodalCheck {
    /// Every antipodal pair has μ = 1 on every cycle edge, Σ μ ≥ p and
    /// surplus ≥ p/2. Σ μ may exceed p through edges off the cycle.
    pub fn passed(&self) -> bool {
        let p = self.cycle.len();
        self.pairs
            .iter()
            .all(|a| a.cycle_edges_with_mu == p && a.mu_sum >= p && a.surplus >= (p / 2) as i64)
    }
}

/// Checks the antipodal pairs of the girth cycle.
pub fn check_antipodal_cycle(g: &Graph) -> Result<AntipodalCheck> {
    require(g.is_bipartite(), Hypothesis::Bipartite)?;
    let cycle = shortest_cycle(g).ok_or(Error::Hypothesis(Hypothesis::HasCycle))?;
    let dist = all_pairs_distances(g);
    Ok(antipodal_pairs(g, &dist, cycle))
}

fn antipodal_pairs(g: &Graph, dist: &DistanceMatrix, cycle: CycleInfo) -> AntipodalCheck {
    let p = cycle.len();
    let pairs = (0..p / 2)
        .map(|i| {
            let (x, y) = (cycle.vertices[i], cycle.vertices[i + p / 2]);
            let cycle_edges_with_mu = cycle
                .edges()
                .filter(|&(u, v)| mu_unchecked(dist, x, y, u, v) == 1)
                .count();
            let mu_sum = g
                .edges()
                .iter()
                .filter(|&&(u, v)| mu_unchecked(dist, x, y, u, v) == 1)
                .count();
            let distance = dist.raw(x, y);
            AntipodalPair {
                x,
                y,
                cycle_edges_with_mu,
                mu_sum,
                distance,
                surplus: mu_sum as i64 - distance as i64,
            }
        })
        .collect();
    AntipodalCheck { cycle, pairs }
}

/// Where a vertex pair is booked in the block-level accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "block", rename_all = "snake_case")]
pub enum PairCategory {
    /// Both vertices lie in this block.
    Within(usize),
    /// One vertex in the designated block other than its gate vertex, the
    /// other in this block other than its attachment vertex.
    CrossDesignated(usize),
    CrossOther,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtLeast,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub block: Option<usize>,
    pub value: i64,
    pub relation: Relation,
    pub bound: i64,
    pub slack: i64,
    pub holds: bool,
}

impl BoundCheck {
    fn new(name: &'static str, block: Option<usize>, value: i64, relation: Relation, bound: i64) -> Self {
        let holds = match relation {
            Relation::AtLeast => value >= bound,
            Relation::Equal => value == bound,
        };
        BoundCheck {
            name,
            block,
            value,
            relation,
            bound,
            slack: value - bound,
            holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockAccount {
    pub index: usize,
    pub vertices: Vec<Vertex>,
    pub size: usize,
    /// Cut vertex shared with the neighbouring block on the way to the
    /// designated block; `None` for the designated block itself.
    pub attach: Option<Vertex>,
    /// Vertex of the designated block through which this block hangs.
    pub gate: Option<Vertex>,
    pub within: i64,
    pub within_pairs: usize,
    pub cross_with_designated: Option<i64>,
    pub cross_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapDecomposition {
    pub n: usize,
    pub m: usize,
    pub designated_block: usize,
    pub blocks: Vec<BlockAccount>,
    /// Surplus over pairs inside each block, in block order.
    pub within_block: Vec<i64>,
    /// Cross subtotals with the designated block, for every other block in
    /// block order.
    pub cross_with_b1: Vec<i64>,
    pub cross_other: i64,
    pub cross_other_pairs: usize,
    /// Cross-other pairs with positive surplus; zero exactly when every such
    /// shortest path meets the 4+-vertex blocks in at most one vertex.
    pub cross_other_positive_pairs: usize,
    pub total: i64,
    pub gap: i64,
    /// Σ (4n_i − 8) + n_1 Σ_{j≠1} (n_j − 1).
    pub proof_lower_bound: i64,
    pub bound_4n_minus_8: i64,
    pub surplus_histogram: Vec<HistogramBin>,
    pub checks: Vec<BoundCheck>,
    #[serde(skip)]
    pub pairs: Vec<(PairSurplus, PairCategory)>,
}

impl GapDecomposition {
    pub fn all_bounds_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Checks the hypotheses of the block-level bound: connected, bipartite,
/// n ≥ 4 and m ≥ n.
pub fn check_bound_hypotheses(g: &Graph) -> Result<()> {
    require(g.is_connected(), Hypothesis::Connected)?;
    require(g.is_bipartite(), Hypothesis::Bipartite)?;
    require(g.n() >= 4, Hypothesis::MinVertices(4))?;
    require(g.m() >= g.n(), Hypothesis::EdgesAtLeastVertices)
}

pub fn gap_decomposition(g: &Graph) -> Result<GapDecomposition> {
    check_bound_hypotheses(g)?;
    let dist = connected_distances(g)?;
    let blocks = block_decomposition(g)?;
    let map = surplus_map_from(g, &dist)?;
    let designated = designated_block(g, &blocks)?;
    let k = blocks.k();
    let n = g.n();

    // Root the block-cut tree at the designated block.
    let mut attach: Vec<Option<Vertex>> = vec![None; k];
    let mut gate: Vec<Option<Vertex>> = vec![None; k];
    let mut seen = vec![false; k];
    seen[designated] = true;
    let mut queue = std::collections::VecDeque::from([designated]);
    while let Some(b) = queue.pop_front() {
        for &c in &blocks.blocks[b] {
            if Some(c) == attach[b] || !blocks.is_cut_vertex(c) {
                continue;
            }
            for nb in blocks.blocks_of(c) {
                if !seen[nb] {
                    seen[nb] = true;
                    attach[nb] = Some(c);
                    gate[nb] = if b == designated { Some(c) } else { gate[b] };
                    queue.push_back(nb);
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Internal("block-cut tree is not connected".into()));
    }

    // Each vertex outside the designated block has one block in which it is
    // not the attachment vertex.
    let in_designated = |v: Vertex| blocks.blocks[designated].binary_search(&v).is_ok();
    let home: Vec<usize> = (0..n)
        .map(|v| {
            if in_designated(v) {
                designated
            } else {
                blocks
                    .blocks_of(v)
                    .into_iter()
                    .find(|&b| attach[b] != Some(v))
                    .expect("every vertex has a home block")
            }
        })
        .collect();

    let mut within = vec![0i64; k];
    let mut within_pairs = vec![0usize; k];
    let mut cross = vec![0i64; k];
    let mut cross_pairs = vec![0usize; k];
    let mut cross_min = vec![i64::MAX; k];
    let mut cross_other = 0i64;
    let mut cross_other_pairs = 0;
    let mut cross_other_positive_pairs = 0;
    let mut booked = Vec::with_capacity(map.entries().len());
    for &e in map.entries() {
        let (x, y) = (e.x, e.y);
        let category = if let Some(b) = blocks.common_block(x, y) {
            PairCategory::Within(b)
        } else {
            let designated_side = |a: Vertex, other: Vertex| home[a] == designated && gate[home[other]] != Some(a);
            if designated_side(x, y) {
                PairCategory::CrossDesignated(home[y])
            } else if designated_side(y, x) {
                PairCategory::CrossDesignated(home[x])
            } else {
                PairCategory::CrossOther
            }
        };
        match category {
            PairCategory::Within(b) => {
                within[b] += e.surplus;
                within_pairs[b] += 1;
            }
            PairCategory::CrossDesignated(b) => {
                cross[b] += e.surplus;
                cross_pairs[b] += 1;
                cross_min[b] = cross_min[b].min(e.surplus);
            }
            PairCategory::CrossOther => {
                cross_other += e.surplus;
                cross_other_pairs += 1;
                if e.surplus > 0 {
                    cross_other_positive_pairs += 1;
                }
            }
        }
        booked.push((e, category));
    }

    let total = within.iter().sum::<i64>() + cross.iter().sum::<i64>() + cross_other;
    let pair_count = n * (n - 1) / 2;
    let booked_count = within_pairs.iter().sum::<usize>() + cross_pairs.iter().sum::<usize>() + cross_other_pairs;
    if booked_count != pair_count {
        return Err(Error::Internal(format!(
            "{booked_count} pairs booked, expected {pair_count}"
        )));
    }
    let gap = InvariantReport::from_distances(g, &dist).gap;
    if total != gap || total != map.total() {
        return Err(Error::Internal(format!(
            "decomposition total {total} differs from Sz - W = {gap}"
        )));
    }

    let sizes = blocks.block_sizes();
    let n1 = sizes[designated] as i64;
    let mut checks = Vec::new();
    for (b, &size) in sizes.iter().enumerate() {
        let size = size as i64;
        if size >= 4 {
            checks.push(BoundCheck::new(
                "within_block_at_least_4n_minus_8",
                Some(b),
                within[b],
                Relation::AtLeast,
                4 * size - 8,
            ));
        } else if size == 2 {
            checks.push(BoundCheck::new(
                "bridge_within_zero",
                Some(b),
                within[b],
                Relation::Equal,
                0,
            ));
        }
    }
    for b in (0..k).filter(|&b| b != designated) {
        let nb = sizes[b] as i64;
        checks.push(BoundCheck::new(
            "cross_designated_at_least_n1_times_ni_minus_1",
            Some(b),
            cross[b],
            Relation::AtLeast,
            n1 * (nb - 1),
        ));
        checks.push(BoundCheck::new(
            "cross_designated_pair_surplus_at_least_1",
            Some(b),
            cross_min[b],
            Relation::AtLeast,
            1,
        ));
        // for every y homed in block b, some z of the designated block other
        // than the gate reaches surplus ≥ 2 with it
        let witness = (0..n)
            .filter(|&y| home[y] == b)
            .map(|y| {
                blocks.blocks[designated]
                    .iter()
                    .filter(|&&z| Some(z) != gate[b])
                    .map(|&z| map.get(z, y))
                    .max()
                    .unwrap_or(i64::MIN)
            })
            .min()
            .unwrap_or(i64::MIN);
        checks.push(BoundCheck::new(
            "cross_designated_witness_surplus_at_least_2",
            Some(b),
            witness,
            Relation::AtLeast,
            2,
        ));
    }
    checks.push(BoundCheck::new(
        "cross_other_nonnegative",
        None,
        cross_other,
        Relation::AtLeast,
        0,
    ));
    let proof_lower_bound = sizes.iter().map(|&s| 4 * s as i64 - 8).sum::<i64>()
        + n1 * (0..k)
            .filter(|&b| b != designated)
            .map(|b| sizes[b] as i64 - 1)
            .sum::<i64>();
    checks.push(BoundCheck::new(
        "total_at_least_block_bound",
        None,
        total,
        Relation::AtLeast,
        proof_lower_bound,
    ));
    let bound_4n_minus_8 = 4 * n as i64 - 8;
    checks.push(BoundCheck::new(
        "total_at_least_4n_minus_8",
        None,
        total,
        Relation::AtLeast,
        bound_4n_minus_8,
    ));

    let accounts = (0..k)
        .map(|b| BlockAccount {
            index: b,
            vertices: blocks.blocks[b].clone(),
            size: sizes[b],
            attach: attach[b],
            gate: gate[b],
            within: within[b],
            within_pairs: within_pairs[b],
            cross_with_designated: (b != designated).then_some(cross[b]),
            cross_pairs: cross_pairs[b],
        })
        .collect();
    Ok(GapDecomposition {
        n,
        m: g.m(),
        designated_block: designated,
        blocks: accounts,
        within_block: within,
        cross_with_b1: (0..k).filter(|&b| b != designated).map(|b| cross[b]).collect(),
        cross_other,
        cross_other_pairs,
        cross_other_positive_pairs,
        total,
        gap,
        proof_lower_bound,
        bound_4n_minus_8,
        surplus_histogram: map.histogram(),
        checks,
        pairs: booked,
    })
}

/// Largest block with at least four vertices; ties go to the smallest
/// canonical code of the induced block, then to the lowest block index.
fn designated_block(g: &Graph, blocks: &BlockDecomposition) -> Result<usize> {
    let mut best: Option<(usize, crate::canon::CanonicalCode, usize)> = None;
    for (i, b) in blocks.blocks.iter().enumerate().filter(|(_, b)| b.len() >= 4) {
        let code = canonical_code(&g.induced(b))?;
        let better = match &best {
            None => true,
            Some((size, best_code, _)) => b.len() > *size || (b.len() == *size && code < *best_code),
        };
        if better {
            best = Some((b.len(), code, i));
        }
    }
    best.map(|(_, _, i)| i)
        .ok_or_else(|| Error::Internal("no block with at least 4 vertices".into()))
}

/// Shortest cycle through `w` and the antipodal vertex on it.
pub fn antipode_through(g: &Graph, w: Vertex) -> Option<(CycleInfo, Vertex)> {
    let c = shortest_cycle_through(g, w)?;
    let z = c.vertices[c.len() / 2];
    Some((c, z))
}
