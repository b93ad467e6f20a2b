//! Resolving graph arguments: catalog names, graph6 strings and edge-list files.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use neumaier_core::catalog::{lookup, CatalogEntry};
use neumaier_core::graph::Graph;

use crate::format::{from_graph6, parse_edge_list};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Name(String),
    Graph6(String),
    EdgeFile(PathBuf),
}

impl GraphSource {
    /// A bare argument: a catalog name, else an existing file, else graph6.
    pub fn guess(text: &str) -> GraphSource {
        if lookup(text).is_ok() {
            GraphSource::Name(text.to_string())
        } else if Path::new(text).is_file() {
            GraphSource::EdgeFile(PathBuf::from(text))
        } else {
            GraphSource::Graph6(text.to_string())
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GraphSource::Name(n) => format!("name:{n}"),
            GraphSource::Graph6(s) => format!("graph6:{s}"),
            GraphSource::EdgeFile(p) => format!("edges:{}", p.display()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ResolvedGraph {
    pub source: GraphSource,
    pub graph: Graph,
    pub entry: Option<CatalogEntry>,
}

pub fn resolve(source: &GraphSource) -> Result<ResolvedGraph> {
    let (graph, entry) = match source {
        GraphSource::Name(name) => {
            let entry = lookup(name)?;
            let graph = entry.build().with_context(|| format!("building {name}"))?;
            (graph, Some(entry))
        }
        GraphSource::Graph6(s) => (from_graph6(s)?, None),
        GraphSource::EdgeFile(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            (parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?, None)
        }
    };
    Ok(ResolvedGraph { source: source.clone(), graph, entry })
}
