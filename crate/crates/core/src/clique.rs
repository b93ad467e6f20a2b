//! Maximal cliques and regular-clique tests.

use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::bits::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliqueError {
    NotAClique,
    /// Nexus is only defined for `2 <= |C| < n`.
    SizeOutOfRange {
        size: usize,
        n: usize,
    },
}

impl fmt::Display for CliqueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueError::NotAClique => f.write_str("vertex set is not a clique"),
            CliqueError::SizeOutOfRange { size, n } => {
                write!(f, "clique of size {size} in a graph on {n} vertices has no nexus")
            }
        }
    }
}

impl core::error::Error for CliqueError {}

/// Neighbour counts of outside vertices into a clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Nexus {
    /// Every outside vertex has exactly this many neighbours in the clique.
    Regular(usize),
    /// Two outside vertices with different counts.
    Irregular { u: usize, count_u: usize, v: usize, count_v: usize },
}

pub fn is_clique(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(g.neighbours(v)))
}

/// The nexus of a clique, or a pair of outside vertices witnessing irregularity.
pub fn nexus_of(g: &Graph, clique: VertexSet) -> Result<Nexus, CliqueError> {
    let size = clique.len();
    if size < 2 || size >= g.n() {
        return Err(CliqueError::SizeOutOfRange { size, n: g.n() });
    }
    if !is_clique(g, clique) {
        return Err(CliqueError::NotAClique);
    }
    let mut outside = g.vertices().difference(clique).iter();
    let u = outside.next().expect("clique is proper");
    let count_u = g.neighbours(u).intersection(clique).len();
    for v in outside {
        let count_v = g.neighbours(v).intersection(clique).len();
        if count_v != count_u {
            return Ok(Nexus::Irregular { u, count_u, v, count_v });
        }
    }
    Ok(Nexus::Regular(count_u))
}

/// Calls `visit` on every maximal clique (Bron–Kerbosch with Tomita pivoting).
/// Stops early when `visit` breaks.
pub fn for_each_maximal_clique<B, F>(g: &Graph, mut visit: F) -> ControlFlow<B>
where
    F: FnMut(VertexSet) -> ControlFlow<B>,
{
    if g.n() == 0 {
        return ControlFlow::Continue(());
    }
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut visit)
}

fn expand<B, F>(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, visit: &mut F) -> ControlFlow<B>
where
    F: FnMut(VertexSet) -> ControlFlow<B>,
{
    if p.is_empty() {
        if x.is_empty() {
            return visit(r);
        }
        return ControlFlow::Continue(());
    }
    let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(g.neighbours(u)).len()).expect("p is non-empty");
    for v in p.difference(g.neighbours(pivot)).iter() {
        let nv = g.neighbours(v);
        let mut r2 = r;
        r2.insert(v);
        expand(g, r2, p.intersection(nv), x.intersection(nv), visit)?;
        p.remove(v);
        x.insert(v);
    }
    ControlFlow::Continue(())
}

/// Canonical order for vertex sets: by ascending member list.
pub fn canonical_cmp(a: &VertexSet, b: &VertexSet) -> core::cmp::Ordering {
    a.iter().cmp(b.iter())
}

/// All maximal cliques, each once, in canonical order.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_maximal_clique::<(), _>(g, |c| {
        out.push(c);
        ControlFlow::Continue(())
    });
    out.sort_by(canonical_cmp);
    out
}
