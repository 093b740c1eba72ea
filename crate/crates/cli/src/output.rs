//! Payload rendering. Payloads go to stdout; timings go to stderr.

use std::io::{BufRead, Write};

use serde::Serialize;
use szlab::enumeration::{GraphRecord, LineError, Rejection};
use szlab::extremal::extremal_gap_row;
use szlab::proof::PairCategory;
use szlab::{
    canonical_form, extremal_family, gap_decomposition, generate, ingest_graph6_stream, verify_conjecture,
    verify_generated, EdgePartition, EnumerationRun, EnumerationSpec, GapDecomposition, Graph, InvariantReport,
    VerificationReport,
};

use crate::{Failure, Format};

const SCHEMA: u32 = 1;

type Out<'a> = &'a mut dyn Write;

fn json<T: Serialize>(out: Out, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows<T: Serialize>(out: Out, rows: impl IntoIterator<Item = T>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct ComputeJson<'a> {
    schema: u32,
    n: usize,
    m: usize,
    bipartite: bool,
    wiener: u64,
    szeged: u64,
    revised_szeged: String,
    revised_szeged_times4: u64,
    gap: i64,
    per_edge: &'a [EdgePartition],
}

pub fn compute(out: Out, g: &Graph, format: Format) -> Result<(), Failure> {
    let r = InvariantReport::compute(g)?;
    match format {
        Format::Json => json(
            out,
            &ComputeJson {
                schema: SCHEMA,
                n: r.n,
                m: r.m,
                bipartite: g.is_bipartite(),
                wiener: r.wiener,
                szeged: r.szeged,
                revised_szeged: r.revised_szeged().to_string(),
                revised_szeged_times4: r.revised_szeged_times4,
                gap: r.gap,
                per_edge: &r.per_edge,
            },
        ),
        Format::Csv => Ok(out.write_all(r.to_csv().as_bytes())?),
        Format::Human => {
            writeln!(out, "n = {}, m = {}, bipartite: {}", r.n, r.m, yes_no(g.is_bipartite()))?;
            writeln!(out, "W   = {}", r.wiener)?;
            writeln!(out, "Sz  = {}", r.szeged)?;
            writeln!(out, "Sz* = {}", r.revised_szeged())?;
            writeln!(out, "Sz - W = {}", r.gap)?;
            writeln!(out, "{:>9} {:>5} {:>5} {:>5}", "edge", "n_u", "n_v", "n_0")?;
            for e in &r.per_edge {
                writeln!(
                    out,
                    "{:>9} {:>5} {:>5} {:>5}",
                    format!("{}-{}", e.u, e.v),
                    e.n_u,
                    e.n_v,
                    e.n_0
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct DecomposeJson<'a> {
    schema: u32,
    #[serde(flatten)]
    decomposition: &'a GapDecomposition,
}

#[derive(Serialize)]
struct BlockRow {
    block: usize,
    designated: bool,
    size: usize,
    vertices: String,
    attach: Option<usize>,
    gate: Option<usize>,
    within: i64,
    within_pairs: usize,
    cross_with_designated: Option<i64>,
    cross_pairs: usize,
}

#[derive(Serialize)]
struct PairRow {
    x: usize,
    y: usize,
    distance: u32,
    mu_sum: u32,
    surplus: i64,
    category: &'static str,
    block: Option<usize>,
}

fn category(c: PairCategory) -> (&'static str, Option<usize>) {
    match c {
        PairCategory::Within(b) => ("within", Some(b)),
        PairCategory::CrossDesignated(b) => ("cross_designated", Some(b)),
        PairCategory::CrossOther => ("cross_other", None),
    }
}

pub fn decompose(out: Out, g: &Graph, format: Format, verbose: bool) -> Result<(), Failure> {
    let d = gap_decomposition(g)?;
    match format {
        Format::Json => json(
            out,
            &DecomposeJson {
                schema: SCHEMA,
                decomposition: &d,
            },
        )?,
        Format::Csv if verbose => csv_rows(
            out,
            d.pairs.iter().map(|(p, c)| {
                let (category, block) = category(*c);
                PairRow {
                    x: p.x,
                    y: p.y,
                    distance: p.distance,
                    mu_sum: p.mu_sum,
                    surplus: p.surplus,
                    category,
                    block,
                }
            }),
        )?,
        Format::Csv => csv_rows(
            out,
            d.blocks.iter().map(|b| BlockRow {
                block: b.index,
                designated: b.index == d.designated_block,
                size: b.size,
                vertices: join(&b.vertices, " "),
                attach: b.attach,
                gate: b.gate,
                within: b.within,
                within_pairs: b.within_pairs,
                cross_with_designated: b.cross_with_designated,
                cross_pairs: b.cross_pairs,
            }),
        )?,
        Format::Human => {
            writeln!(
                out,
                "n = {}, m = {}, Sz - W = {}, 4n - 8 = {}",
                d.n, d.m, d.gap, d.bound_4n_minus_8
            )?;
            writeln!(out, "designated block: {}", d.designated_block)?;
            for b in &d.blocks {
                let cross = b.cross_with_designated.map_or("-".to_string(), |c| c.to_string());
                writeln!(
                    out,
                    "  block {} [{}]  within {}  cross {}",
                    b.index,
                    join(&b.vertices, " "),
                    b.within,
                    cross
                )?;
            }
            writeln!(out, "cross other: {} over {} pairs", d.cross_other, d.cross_other_pairs)?;
            writeln!(
                out,
                "total: {} (lower bound from parts: {})",
                d.total, d.proof_lower_bound
            )?;
            for c in &d.checks {
                let block = c.block.map_or(String::new(), |b| format!(" block {b}"));
                let rel = match c.relation {
                    szlab::proof::Relation::AtLeast => ">=",
                    szlab::proof::Relation::Equal => "==",
                };
                writeln!(
                    out,
                    "  [{}] {}{}: {} {} {} (slack {})",
                    if c.holds { "ok" } else { "FAIL" },
                    c.name,
                    block,
                    c.value,
                    rel,
                    c.bound,
                    c.slack
                )?;
            }
            if verbose {
                for (p, c) in &d.pairs {
                    let (cat, block) = category(*c);
                    let block = block.map_or(String::new(), |b| format!(" {b}"));
                    writeln!(
                        out,
                        "  pair {}-{}: d {} mu {} surplus {} ({cat}{block})",
                        p.x, p.y, p.distance, p.mu_sum, p.surplus
                    )?;
                }
            }
        }
    }
    if !d.all_bounds_hold() {
        let names: Vec<_> = d.failed_checks().map(|c| c.name).collect();
        return Err(Failure::violation(format!("bound checks failed: {}", names.join(", "))));
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    schema: u32,
    lines_parsed: usize,
    parse_errors: &'a [LineError],
    rejected: &'a [Rejection],
    holds: bool,
    reports: &'a [VerificationReport],
}

pub fn verify(out: Out, stream: Box<dyn BufRead>, format: Format) -> Result<(), Failure> {
    let mut graphs = Vec::new();
    let mut parse_errors = Vec::new();
    for item in ingest_graph6_stream(stream) {
        match item {
            Ok(g) => graphs.push(g),
            Err(e) => parse_errors.push(e),
        }
    }
    let parsed = graphs.len();
    let outcome = verify_conjecture(graphs)?;
    for r in &outcome.reports {
        eprintln!("n={}: {} classes in {:.2?}", r.n, r.graphs_checked, r.elapsed);
    }
    for e in &parse_errors {
        eprintln!("line {}: {}", e.line, e.message);
    }
    match format {
        Format::Json => json(
            out,
            &VerifyJson {
                schema: SCHEMA,
                lines_parsed: parsed,
                parse_errors: &parse_errors,
                rejected: &outcome.rejected,
                holds: outcome.holds(),
                reports: &outcome.reports,
            },
        )?,
        Format::Csv => csv_rows(out, outcome.reports.iter().flat_map(|r| r.records.iter()))?,
        Format::Human => {
            for r in &outcome.reports {
                human_report(out, r)?;
            }
            writeln!(
                out,
                "{parsed} graphs parsed, {} parse errors, {} rejected",
                parse_errors.len(),
                outcome.rejected.len()
            )?;
        }
    }
    check_reports(outcome.reports.iter())
}

fn human_report(out: Out, r: &VerificationReport) -> Result<(), Failure> {
    let min = r.min_gap.map_or("-".to_string(), |g| g.to_string());
    let family = match r.extremal_match {
        Some(true) => "matches family",
        Some(false) => "differs from family",
        None => "family not compared",
    };
    writeln!(
        out,
        "n={}  classes {}  min gap {}  bound {}  equality {} ({})  violations {}",
        r.n,
        r.graphs_checked,
        min,
        r.bound,
        r.equality_graphs.len(),
        family,
        r.violations.len()
    )?;
    Ok(())
}

fn check_reports<'a>(reports: impl Iterator<Item = &'a VerificationReport>) -> Result<(), Failure> {
    let bad: Vec<String> = reports
        .flat_map(|r| {
            r.violations
                .iter()
                .map(move |v| format!("{} (n={}, gap {})", v.code, r.n, v.gap))
        })
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::violation(format!("bound violated by {}", bad.join(", "))))
    }
}

#[derive(Serialize)]
struct EnumerateJson<'a> {
    schema: u32,
    holds: bool,
    reports: &'a [EnumerationRun],
}

pub fn enumerate(
    out: Out,
    (lo, hi): (usize, usize),
    min_edges: Option<usize>,
    list: bool,
    format: Format,
    verbose: bool,
) -> Result<(), Failure> {
    let spec = |n: usize| EnumerationSpec::new(n).min_edges(min_edges.unwrap_or(n));
    if list {
        for n in lo..=hi {
            for g in generate(&spec(n)).map_err(over_limit_hint)? {
                writeln!(out, "{}", g.code)?;
            }
        }
        return Ok(());
    }
    let runs: Vec<EnumerationRun> = (lo..=hi)
        .map(|n| verify_generated(&spec(n)))
        .collect::<Result<_, _>>()
        .map_err(over_limit_hint)?;
    for run in &runs {
        let r = &run.report;
        eprintln!("n={}: {} classes generated in {:.2?}", r.n, run.generated, r.elapsed);
        if verbose && run.rejected > 0 {
            eprintln!("n={}: {} classes below the hypotheses skipped", r.n, run.rejected);
        }
    }
    match format {
        Format::Json => json(
            out,
            &EnumerateJson {
                schema: SCHEMA,
                holds: runs.iter().all(|r| r.report.holds()),
                reports: &runs,
            },
        )?,
        Format::Csv => csv_rows::<&GraphRecord>(out, runs.iter().flat_map(|r| r.report.records.iter()))?,
        Format::Human => {
            for run in &runs {
                human_report(out, &run.report)?;
            }
        }
    }
    check_reports(runs.iter().map(|r| &r.report))
}

#[derive(Serialize)]
struct ExtremalSummary {
    schema: u32,
    n: usize,
    count: usize,
    all_gaps_equal_4n_minus_8: bool,
}

#[derive(Serialize)]
struct ExtremalMember {
    code: String,
    tree_levels: Vec<usize>,
}

#[derive(Serialize)]
struct ExtremalFamilyJson {
    n: usize,
    count: usize,
    bound: i64,
    min_gap: i64,
    max_gap: i64,
    all_gaps_equal_4n_minus_8: bool,
    members: Vec<ExtremalMember>,
}

#[derive(Serialize)]
struct ExtremalJson<'a> {
    schema: u32,
    families: &'a [ExtremalFamilyJson],
}

#[derive(Serialize)]
struct ExtremalRow<'a> {
    n: usize,
    code: &'a str,
    bound: i64,
}

pub fn extremal(out: Out, (lo, hi): (usize, usize), format: Format) -> Result<(), Failure> {
    let mut families = Vec::new();
    for n in lo..=hi {
        let members = extremal_family(n)?;
        let row = extremal_gap_row(n)?;
        families.push(ExtremalFamilyJson {
            n,
            count: row.count,
            bound: row.bound,
            min_gap: row.min_gap,
            max_gap: row.max_gap,
            all_gaps_equal_4n_minus_8: row.all_gaps_equal_4n_minus_8,
            members: members
                .iter()
                .map(|m| ExtremalMember {
                    code: m.code.to_string(),
                    tree_levels: m.tree.levels.clone(),
                })
                .collect(),
        });
    }
    match format {
        Format::Json => json(
            out,
            &ExtremalJson {
                schema: SCHEMA,
                families: &families,
            },
        )?,
        Format::Csv => csv_rows(
            out,
            families.iter().flat_map(|f| {
                f.members.iter().map(move |m| ExtremalRow {
                    n: f.n,
                    code: &m.code,
                    bound: f.bound,
                })
            }),
        )?,
        Format::Human => {
            for f in &families {
                for m in &f.members {
                    writeln!(out, "{}", m.code)?;
                }
                let summary = ExtremalSummary {
                    schema: SCHEMA,
                    n: f.n,
                    count: f.count,
                    all_gaps_equal_4n_minus_8: f.all_gaps_equal_4n_minus_8,
                };
                serde_json::to_writer(&mut *out, &summary)?;
                writeln!(out)?;
            }
        }
    }
    if let Some(f) = families.iter().find(|f| !f.all_gaps_equal_4n_minus_8) {
        return Err(Failure::violation(format!(
            "family member off the bound at n = {}",
            f.n
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct CanonJson<'a> {
    schema: u32,
    code: &'a str,
    n: usize,
    m: usize,
    /// `order[i]` is the input vertex that becomes vertex `i`.
    order: &'a [usize],
}

pub fn canon(out: Out, g: &Graph, format: Format) -> Result<(), Failure> {
    let c = canonical_form(g)?;
    match format {
        Format::Json => json(
            out,
            &CanonJson {
                schema: SCHEMA,
                code: c.code.as_str(),
                n: g.n(),
                m: g.m(),
                order: &c.order,
            },
        )?,
        Format::Csv => {
            writeln!(out, "code,n,m")?;
            writeln!(out, "{},{},{}", c.code, g.n(), g.m())?;
        }
        Format::Human => writeln!(out, "{}", c.code)?,
    }
    Ok(())
}

fn over_limit_hint(e: szlab::Error) -> Failure {
    let over = matches!(e, szlab::Error::OverLimit { .. });
    let mut f = Failure::from(e);
    if over {
        f.message
            .push_str("; pipe graph6 from an external generator into `szlab verify` instead");
    }
    f
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(vs: &[usize], sep: &str) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}
