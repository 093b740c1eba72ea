use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::PathBuf;

use clap::Args;
use szlab::{parse_graph6, Graph};

use crate::Failure;

/// Exactly one graph. With no flag the graph is read from standard input.
#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct GraphSource {
    /// graph6 record, e.g. "Cr"
    #[arg(long, value_name = "G6")]
    pub graph6: Option<String>,
    /// Edge list "n m" followed by m lines "u v"; a literal \n separates lines
    #[arg(long, value_name = "TEXT")]
    pub edges: Option<String>,
    /// File holding one graph6 record or one edge list
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

impl GraphSource {
    pub fn read(&self) -> Result<Graph, Failure> {
        if let Some(s) = &self.graph6 {
            return Ok(parse_graph6(s.trim())?);
        }
        if let Some(s) = &self.edges {
            return Ok(Graph::parse_edge_list(&s.replace("\\n", "\n"))?);
        }
        let mut text = String::new();
        match &self.file {
            Some(path) => File::open(path).and_then(|mut f| f.read_to_string(&mut text)),
            None => io::stdin().read_to_string(&mut text),
        }
        .map_err(Failure::io)?;
        parse_auto(&text)
    }
}

/// graph6 bytes start at '?', so a leading digit means an edge list.
fn parse_auto(text: &str) -> Result<Graph, Failure> {
    let body = text.trim();
    if body.starts_with(|c: char| c.is_ascii_digit()) {
        Ok(Graph::parse_edge_list(body)?)
    } else {
        let mut records = body.lines().filter(|l| !l.trim().is_empty());
        let first = records.next().ok_or_else(|| Failure::usage("no graph in input"))?;
        if records.next().is_some() {
            return Err(Failure::usage("expected one graph, found several records"));
        }
        Ok(parse_graph6(first.trim())?)
    }
}

/// A graph6 stream: a file, or standard input.
pub fn open_stream(file: Option<&PathBuf>) -> Result<Box<dyn BufRead>, Failure> {
    Ok(match file {
        Some(path) => Box::new(BufReader::new(File::open(path).map_err(Failure::io)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

/// `A..B`, `A..=B` or a single `N`.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a vertex count: {t:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..8"), Ok((4, 8)));
        assert_eq!(parse_range("4..=8"), Ok((4, 8)));
        assert_eq!(parse_range("9"), Ok((9, 9)));
        assert!(parse_range("8..4").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn auto_detects_format() {
        assert_eq!(parse_auto("Cr\n").unwrap().m(), 4);
        assert_eq!(parse_auto("3 2\n0 1\n1 2\n").unwrap().m(), 2);
        assert!(parse_auto("Cr\nCr\n").is_err());
        assert!(parse_auto("").is_err());
    }
}
