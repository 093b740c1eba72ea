//! Browser bindings. Each export takes text and returns a JSON string; the
//! page in `www/` draws the result.

use serde::Serialize;
use szlab::proof::{BoundCheck, PairCategory};
use szlab::{
    block_decomposition, extremal_family, gap_decomposition, parse_graph6, shortest_cycle, to_graph6, Graph,
    InvariantReport,
};
use wasm_bindgen::prelude::*;

/// Largest graph the page accepts; the drawing is unreadable beyond this.
pub const MAX_VERTICES: usize = 40;
pub const MAX_EXTREMAL_N: usize = 12;

#[derive(Debug, Serialize)]
pub struct EdgeView {
    pub u: usize,
    pub v: usize,
    pub n_u: usize,
    pub n_v: usize,
    pub n_0: usize,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub bipartite: bool,
    pub wiener: u64,
    pub szeged: u64,
    pub revised_szeged: String,
    pub gap: i64,
    /// 4n − 8 when the graph meets the hypotheses of the bound.
    pub bound: Option<i64>,
    pub girth_cycle: Vec<usize>,
    pub cut_vertices: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub edges: Vec<EdgeView>,
}

#[derive(Debug, Serialize)]
pub struct PairView {
    pub x: usize,
    pub y: usize,
    pub surplus: i64,
    pub category: &'static str,
    pub block: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct Decomposition {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub blocks: Vec<Vec<usize>>,
    pub designated_block: usize,
    pub within_block: Vec<i64>,
    pub cross_with_b1: Vec<i64>,
    pub cross_other: i64,
    pub total: i64,
    pub bound: i64,
    pub checks: Vec<BoundCheck>,
    pub pairs: Vec<PairView>,
}

#[derive(Debug, Serialize)]
pub struct Member {
    pub graph6: String,
    pub edges: Vec<(usize, usize)>,
    pub gap: i64,
}

#[derive(Debug, Serialize)]
pub struct Family {
    pub n: usize,
    pub bound: i64,
    pub members: Vec<Member>,
}

/// graph6, or an edge list "n m" / "u v" lines. Edge lists may also be
/// written on one line with `;` or `,` between entries.
pub fn parse_input(text: &str) -> Result<Graph, String> {
    let text = text.trim();
    let g = if text.starts_with(|c: char| c.is_ascii_digit()) {
        Graph::parse_edge_list(&text.replace([';', ','], "\n"))
    } else {
        parse_graph6(text)
    }
    .map_err(|e| e.to_string())?;
    if g.n() > MAX_VERTICES {
        return Err(format!("the demo draws at most {MAX_VERTICES} vertices, got {}", g.n()));
    }
    Ok(g)
}

pub fn analyze_graph(g: &Graph) -> Result<Analysis, String> {
    let r = InvariantReport::compute(g).map_err(|e| e.to_string())?;
    let blocks = block_decomposition(g).map_err(|e| e.to_string())?;
    let bipartite = g.is_bipartite();
    let bound = (bipartite && g.n() >= 4 && g.m() >= g.n()).then(|| 4 * g.n() as i64 - 8);
    Ok(Analysis {
        graph6: to_graph6(g),
        n: r.n,
        m: r.m,
        bipartite,
        wiener: r.wiener,
        szeged: r.szeged,
        revised_szeged: r.revised_szeged().to_string(),
        gap: r.gap,
        bound,
        girth_cycle: shortest_cycle(g).map(|c| c.vertices).unwrap_or_default(),
        cut_vertices: blocks.cut_vertices.clone(),
        blocks: blocks.blocks,
        edges: r
            .per_edge
            .iter()
            .map(|p| EdgeView {
                u: p.u,
                v: p.v,
                n_u: p.n_u,
                n_v: p.n_v,
                n_0: p.n_0,
            })
            .collect(),
    })
}

pub fn decompose_graph(g: &Graph) -> Result<Decomposition, String> {
    let d = gap_decomposition(g).map_err(|e| e.to_string())?;
    let pairs = d
        .pairs
        .iter()
        .map(|(p, c)| {
            let (category, block) = match *c {
                PairCategory::Within(b) => ("within", Some(b)),
                PairCategory::CrossDesignated(b) => ("cross", Some(b)),
                PairCategory::CrossOther => ("other", None),
            };
            PairView {
                x: p.x,
                y: p.y,
                surplus: p.surplus,
                category,
                block,
            }
        })
        .collect();
    Ok(Decomposition {
        n: d.n,
        edges: g.edges().to_vec(),
        blocks: d.blocks.iter().map(|b| b.vertices.clone()).collect(),
        designated_block: d.designated_block,
        within_block: d.within_block,
        cross_with_b1: d.cross_with_b1,
        cross_other: d.cross_other,
        total: d.total,
        bound: d.bound_4n_minus_8,
        checks: d.checks,
        pairs,
    })
}

pub fn extremal_members(n: usize) -> Result<Family, String> {
    if n > MAX_EXTREMAL_N {
        return Err(format!("the demo lists families up to n = {MAX_EXTREMAL_N}"));
    }
    let family = extremal_family(n).map_err(|e| e.to_string())?;
    let members = family
        .iter()
        .map(|m| {
            let gap = InvariantReport::compute(&m.graph).map_err(|e| e.to_string())?.gap;
            Ok(Member {
                graph6: to_graph6(&m.graph),
                edges: m.graph.edges().to_vec(),
                gap,
            })
        })
        .collect::<Result<_, String>>()?;
    Ok(Family {
        n,
        bound: 4 * n as i64 - 8,
        members,
    })
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    r.and_then(|v| serde_json::to_string(&v).map_err(|e| e.to_string()))
        .map_err(|e| JsValue::from_str(&e))
}

/// Indices, per-edge partitions, blocks and girth cycle of one graph.
#[wasm_bindgen]
pub fn analyze(input: &str) -> Result<String, JsValue> {
    to_js(parse_input(input).and_then(|g| analyze_graph(&g)))
}

/// Block-level split of Sz − W with every bound check.
#[wasm_bindgen]
pub fn decompose(input: &str) -> Result<String, JsValue> {
    to_js(parse_input(input).and_then(|g| decompose_graph(&g)))
}

/// The graphs with Sz − W = 4n − 8 on `n` vertices.
#[wasm_bindgen]
pub fn extremal(n: usize) -> Result<String, JsValue> {
    to_js(extremal_members(n))
}
