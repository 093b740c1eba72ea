//! Isomorph-free generation of small graphs and the exhaustive check of
//! Sz − W ≥ 4n − 8 over connected bipartite graphs with m ≥ n.

use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Hypothesis, Result};
use crate::extremal::{extremal_family, is_extremal_form};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::invariants::InvariantReport;
use crate::proof::check_bound_hypotheses;

/// Largest n the built-in generator accepts.
pub const BUILTIN_MAX_N: usize = 8;

/// Largest n for which reports compare the equality set with the full
/// extremal family (the family grows like the rooted trees on n − 3 vertices).
pub const EXTREMAL_MATCH_MAX_N: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub min_edges: usize,
    pub connected: bool,
    pub bipartite: bool,
}

impl EnumerationSpec {
    /// Connected bipartite graphs on `n` vertices with m ≥ n.
    pub fn new(n: usize) -> Self {
        EnumerationSpec {
            n,
            min_edges: n,
            connected: true,
            bipartite: true,
        }
    }

    pub fn min_edges(self, min_edges: usize) -> Self {
        EnumerationSpec { min_edges, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedGraph {
    pub code: CanonicalCode,
    /// The canonical relabelling.
    pub graph: Graph,
}

/// One canonical representative per isomorphism class matching `spec`,
/// ordered by edge count, then canonical code.
///
/// Classes are grown one edge at a time from the empty graph. Every child of
/// every class at level m is canonically relabelled and the level-(m+1)
/// classes are keyed by canonical code, so each class is kept exactly once
/// regardless of how many parents reach it. Bipartiteness survives edge
/// deletion, so the bipartite filter is applied during growth; connectivity
/// and the edge floor are post-filters.
pub fn generate(spec: &EnumerationSpec) -> Result<Vec<GeneratedGraph>> {
    if spec.n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if spec.n > BUILTIN_MAX_N {
        return Err(Error::OverLimit {
            what: "built-in enumeration",
            n: spec.n,
            limit: BUILTIN_MAX_N,
        });
    }
    let n = spec.n;
    let empty = canonical_form(&Graph::empty(n))?;
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::from([(empty.code, empty.graph)]);
    let mut out = Vec::new();
    let mut m = 0;
    while !level.is_empty() {
        if m >= spec.min_edges {
            out.extend(
                level
                    .iter()
                    .filter(|(_, g)| !spec.connected || g.is_connected())
                    .map(|(code, graph)| GeneratedGraph {
                        code: code.clone(),
                        graph: graph.clone(),
                    }),
            );
        }
        let parents: Vec<&Graph> = level.values().collect();
        let children: Vec<Vec<(CanonicalCode, Graph)>> = parents
            .par_iter()
            .map(|g| augment(g, spec.bipartite))
            .collect::<Result<_>>()?;
        level = children.into_iter().flatten().collect();
        m += 1;
    }
    Ok(out)
}

fn augment(g: &Graph, bipartite: bool) -> Result<Vec<(CanonicalCode, Graph)>> {
    let n = g.n();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                continue;
            }
            let child = g.with_edge(i, j)?;
            if bipartite && !child.is_bipartite() {
                continue;
            }
            let c = canonical_form(&child)?;
            if seen.insert(c.code.clone()) {
                out.push((c.code, c.graph));
            }
        }
    }
    Ok(out)
}

/// A graph6 line that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

/// Parses one graph6 record per line, skipping blank lines. Failures carry
/// their 1-based line number and do not stop the stream.
pub fn ingest_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = std::result::Result<Graph, LineError>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Err(LineError {
                line: line_no,
                message: e.to_string(),
            })),
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => Some(parse_graph6(text.trim()).map_err(|e| LineError {
                line: line_no,
                message: e.to_string(),
            })),
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphGap {
    pub code: CanonicalCode,
    pub gap: i64,
}

/// Per-graph row for CSV dumps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub code: CanonicalCode,
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub gap: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    /// Distinct isomorphism classes checked.
    pub graphs_checked: usize,
    /// Inputs received for this n, including isomorphic repeats.
    pub graphs_received: usize,
    pub min_gap: Option<i64>,
    pub bound: i64,
    /// Canonical codes (graph6 of the canonical labelling) attaining the bound.
    pub equality_graphs: Vec<CanonicalCode>,
    pub violations: Vec<GraphGap>,
    /// Every equality graph has the extremal form.
    pub equality_within_extremal: bool,
    /// Equality set equals the extremal family up to isomorphism; `None`
    /// above [`EXTREMAL_MATCH_MAX_N`].
    pub extremal_match: Option<bool>,
    pub extremal_family_size: Option<usize>,
    #[serde(skip)]
    pub records: Vec<GraphRecord>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rejection {
    /// 0-based position in the input stream.
    pub index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationOutcome {
    pub reports: Vec<VerificationReport>,
    pub rejected: Vec<Rejection>,
}

impl VerificationOutcome {
    pub fn holds(&self) -> bool {
        self.reports.iter().all(VerificationReport::holds)
    }
}

/// Checks Sz − W ≥ 4n − 8 on every input, grouped by n. Inputs failing the
/// hypotheses (connected, bipartite, n ≥ 4, m ≥ n) are tallied, not fatal.
pub fn verify_conjecture<I: IntoIterator<Item = Graph>>(graphs: I) -> Result<VerificationOutcome> {
    let mut by_n: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    let mut rejected = Vec::new();
    for (index, g) in graphs.into_iter().enumerate() {
        match check_bound_hypotheses(&g) {
            Ok(()) => by_n.entry(g.n()).or_default().push(g),
            Err(Error::Hypothesis(h)) => rejected.push(Rejection {
                index,
                reason: hypothesis_reason(h),
            }),
            Err(e) => return Err(e),
        }
    }
    let reports = by_n
        .into_iter()
        .map(|(n, gs)| report_for(n, &gs))
        .collect::<Result<_>>()?;
    Ok(VerificationOutcome { reports, rejected })
}

fn hypothesis_reason(h: Hypothesis) -> String {
    format!("{h} violated")
}

fn report_for(n: usize, graphs: &[Graph]) -> Result<VerificationReport> {
    let start = Instant::now();
    let evaluated: Vec<GraphRecord> = graphs
        .par_iter()
        .map(|g| {
            let canon = canonical_form(g)?;
            let inv = InvariantReport::compute(g)?;
            Ok(GraphRecord {
                code: canon.code,
                n: g.n(),
                m: g.m(),
                wiener: inv.wiener,
                szeged: inv.szeged,
                gap: inv.gap,
            })
        })
        .collect::<Result<_>>()?;
    let received = evaluated.len();
    let classes: BTreeMap<CanonicalCode, GraphRecord> = evaluated.into_iter().map(|r| (r.code.clone(), r)).collect();
    let bound = 4 * n as i64 - 8;
    let min_gap = classes.values().map(|r| r.gap).min();
    let equality_graphs: Vec<CanonicalCode> = classes
        .values()
        .filter(|r| r.gap == bound)
        .map(|r| r.code.clone())
        .collect();
    let violations = classes
        .values()
        .filter(|r| r.gap < bound)
        .map(|r| GraphGap {
            code: r.code.clone(),
            gap: r.gap,
        })
        .collect();
    let equality_within_extremal = equality_graphs.iter().all(|code| {
        let g = crate::graph6::parse_graph6(code.as_str()).expect("canonical codes are valid graph6");
        is_extremal_form(&g)
    });
    let (extremal_match, extremal_family_size) = if n <= EXTREMAL_MATCH_MAX_N {
        let family: BTreeSet<CanonicalCode> = extremal_family(n)?.into_iter().map(|m| m.code).collect();
        let equality: BTreeSet<CanonicalCode> = equality_graphs.iter().cloned().collect();
        (Some(family == equality), Some(family.len()))
    } else {
        (None, None)
    };
    Ok(VerificationReport {
        n,
        graphs_checked: classes.len(),
        graphs_received: received,
        min_gap,
        bound,
        equality_graphs,
        violations,
        equality_within_extremal,
        extremal_match,
        extremal_family_size,
        records: classes.into_values().collect(),
        elapsed: start.elapsed(),
    })
}

/// One generated class list, verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationRun {
    #[serde(flatten)]
    pub report: VerificationReport,
    pub min_edges: usize,
    pub generated: usize,
    /// Generated classes outside the hypotheses (only when the edge floor is
    /// below n).
    pub rejected: usize,
}

pub fn verify_generated(spec: &EnumerationSpec) -> Result<EnumerationRun> {
    let start = Instant::now();
    let graphs = generate(spec)?;
    let generated = graphs.len();
    let outcome = verify_conjecture(graphs.into_iter().map(|g| g.graph))?;
    let mut report = match outcome.reports.into_iter().next() {
        Some(r) => r,
        None => empty_report(spec.n)?,
    };
    report.elapsed = start.elapsed();
    Ok(EnumerationRun {
        report,
        min_edges: spec.min_edges,
        generated,
        rejected: outcome.rejected.len(),
    })
}

/// Generates and verifies every n in `range` with the default edge floor.
pub fn verify_range(range: std::ops::RangeInclusive<usize>) -> Result<Vec<VerificationReport>> {
    range
        .map(|n| verify_generated(&EnumerationSpec::new(n)).map(|run| run.report))
        .collect()
}

fn empty_report(n: usize) -> Result<VerificationReport> {
    let (extremal_match, extremal_family_size) = if (4..=EXTREMAL_MATCH_MAX_N).contains(&n) {
        (Some(false), Some(extremal_family(n)?.len()))
    } else {
        (None, None)
    };
    Ok(VerificationReport {
        n,
        graphs_checked: 0,
        graphs_received: 0,
        min_gap: None,
        bound: 4 * n as i64 - 8,
        equality_graphs: Vec::new(),
        violations: Vec::new(),
        equality_within_extremal: true,
        extremal_match,
        extremal_family_size,
        records: Vec::new(),
        elapsed: Duration::ZERO,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let g4 = generate(&EnumerationSpec::new(4)).unwrap();
        assert_eq!(g4.len(), 1);
        assert_eq!(g4[0].graph.m(), 4);
        let g5 = generate(&EnumerationSpec::new(5)).unwrap();
        assert_eq!(g5.len(), 2);
        assert_eq!(generate(&EnumerationSpec::new(4).min_edges(5)).unwrap().len(), 0);
    }

    #[test]
    fn trees_via_generator() {
        // connected bipartite graphs with exactly n - 1 edges are trees: A000055
        for (n, trees) in [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)] {
            let all = generate(&EnumerationSpec::new(n).min_edges(n - 1)).unwrap();
            assert_eq!(all.iter().filter(|g| g.graph.m() == n - 1).count(), trees, "n = {n}");
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(
            generate(&EnumerationSpec::new(9)),
            Err(Error::OverLimit { .. })
        ));
        assert!(matches!(
            generate(&EnumerationSpec::new(0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn ingest_reports_line_numbers() {
        let text = "Cr\nDQc\n\nBw\n";
        let items: Vec<_> = ingest_graph6_stream(text.as_bytes()).collect();
        assert_eq!(items.len(), 3);
        assert!(items.iter().all(|r| r.is_ok()));
        let text = "Cr\n~~\nBw\n";
        let items: Vec<_> = ingest_graph6_stream(text.as_bytes()).collect();
        assert_eq!(items.iter().filter(|r| r.is_ok()).count(), 2);
        assert_eq!(items[1].as_ref().unwrap_err().line, 2);
        assert_eq!(ingest_graph6_stream("".as_bytes()).count(), 0);
    }

    #[test]
    fn verify_small() {
        let reports = verify_range(4..=6).unwrap();
        let mins: Vec<_> = reports.iter().map(|r| r.min_gap).collect();
        assert_eq!(mins, vec![Some(8), Some(12), Some(16)]);
        let eq: Vec<_> = reports.iter().map(|r| r.equality_graphs.len()).collect();
        assert_eq!(eq, vec![1, 1, 2]);
        assert!(reports.iter().all(|r| r.extremal_match == Some(true) && r.holds()));
    }

    #[test]
    fn edge_floor_below_n_is_tallied() {
        let run = verify_generated(&EnumerationSpec::new(5).min_edges(0)).unwrap();
        // 3 trees + C4 with pendant + K_{2,3}
        assert_eq!((run.generated, run.rejected), (5, 3));
        assert_eq!(run.report.graphs_checked, 2);
        let empty = verify_generated(&EnumerationSpec::new(3)).unwrap();
        assert_eq!((empty.generated, empty.report.min_gap), (0, None));
    }

    #[test]
    fn verify_stream_with_rejections() {
        let graphs = vec![
            Graph::cycle(4),
            Graph::complete_bipartite(2, 3),
            Graph::path(4),
            Graph::cycle(5),
            Graph::cycle(4),
        ];
        let out = verify_conjecture(graphs).unwrap();
        assert_eq!(out.rejected.len(), 2);
        assert_eq!(out.rejected[0].reason, "m ≥ n violated");
        assert_eq!(out.rejected[1].reason, "bipartite violated");
        assert_eq!(out.reports.len(), 2);
        assert_eq!(out.reports[0].min_gap, Some(8));
        assert_eq!((out.reports[0].graphs_checked, out.reports[0].graphs_received), (1, 2));
        assert_eq!(out.reports[1].min_gap, Some(22));
        assert_eq!(out.reports[1].extremal_match, Some(false));
        assert!(out.holds());
        assert_eq!(
            out.reports[0].equality_graphs[0],
            crate::canon::canonical_code(&Graph::cycle(4)).unwrap()
        );
    }
}
