//! Small simple undirected graphs stored as 128-bit adjacency rows.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::VertexSet;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    Loop { vertex: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    Disconnected,
    Complete,
    Empty,
    Asymmetric { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}")
            }
            GraphError::Loop { vertex } => write!(f, "loop edge at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::Disconnected => f.write_str("graph is disconnected"),
            GraphError::Complete => f.write_str("graph is complete"),
            GraphError::Empty => f.write_str("graph has no vertices"),
            GraphError::Asymmetric { u, v } => write!(f, "arc {u}->{v} has no reverse arc"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Immutable simple graph. Row `v` of `adj` is the neighbourhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_count())
            .field("label", &self.label)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EdgeRegularParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `0 < mu < k`.
    pub fn is_nontrivial(&self) -> bool {
        0 < self.mu && self.mu < self.k
    }

    pub fn edge_regular(&self) -> EdgeRegularParams {
        EdgeRegularParams { n: self.n, k: self.k, lambda: self.lambda }
    }
}

impl fmt::Display for EdgeRegularParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.lambda)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Why a graph failed a regularity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum RegularityWitness {
    /// Two vertices of different degree.
    Degree { u: usize, du: usize, v: usize, dv: usize },
    /// Two pairs (both edges, or both non-edges) with different common-neighbour counts.
    CommonNeighbours { first: (usize, usize), first_count: usize, second: (usize, usize), second_count: usize },
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = alloc::vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, label: None })
    }

    /// Builds a graph on `n` vertices from a symmetric predicate, queried for `u < v`.
    pub fn from_fn<F>(n: usize, mut adjacent: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> bool,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = alloc::vec![VertexSet::EMPTY; n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Ok(Graph { adj, label: None })
    }

    /// Builds a graph from adjacency rows, validating symmetry and the absence of loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let all = VertexSet::full(n);
        for (u, row) in rows.iter().enumerate() {
            if row.contains(u) {
                return Err(GraphError::Loop { vertex: u });
            }
            if let Some(v) = row.difference(all).first() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            for v in row.iter() {
                if !rows[v].contains(u) {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph { adj: rows, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.adj[u].intersection(self.adj[v]).len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let all = VertexSet::full(n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = all.difference(*row);
                r.remove(v);
                r
            })
            .collect();
        Graph { adj, label: self.label.as_ref().map(|l| alloc::format!("complement({l})")) }
    }

    /// Subgraph induced on `set`, vertices renumbered in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = set.iter().collect();
        let mut adj = alloc::vec![VertexSet::EMPTY; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.is_adjacent(u, v) {
                    adj[i].insert(j);
                }
            }
        }
        Graph { adj, label: None }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|r| r.len() + 1 == n)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_of(0).len() == self.n()
    }

    /// Errors unless the graph is non-empty and connected.
    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.n() == 0 {
            Err(GraphError::Empty)
        } else if !self.is_connected() {
            Err(GraphError::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Breadth-first distances from `start`; `None` for unreachable vertices.
    pub fn distances_from(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = alloc::vec![None; self.n()];
        dist[start] = Some(0);
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            for v in frontier.iter() {
                dist[v] = Some(d);
            }
            seen = seen.union(frontier);
        }
        dist
    }

    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        self.distances_from(v).into_iter().try_fold(0, |m, d| d.map(|d| m.max(d)))
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        self.require_connected()?;
        Ok((0..self.n()).filter_map(|v| self.eccentricity(v)).max().unwrap_or(0))
    }

    /// The common degree, or a pair of vertices with different degrees.
    pub fn regularity(&self) -> Result<usize, RegularityWitness> {
        let k = self.degree(0);
        match (1..self.n()).find(|&v| self.degree(v) != k) {
            None => Ok(k),
            Some(v) => Err(RegularityWitness::Degree { u: 0, du: k, v, dv: self.degree(v) }),
        }
    }

    /// `(n, k, lambda)` if every edge has the same number of common neighbours.
    pub fn edge_regularity(&self) -> Result<Result<EdgeRegularParams, RegularityWitness>, GraphError> {
        self.require_connected()?;
        let k = match self.regularity() {
            Ok(k) => k,
            Err(w) => return Ok(Err(w)),
        };
        match uniform_count(self.edges().map(|(u, v)| ((u, v), self.common_neighbours(u, v)))) {
            Ok(lambda) => Ok(Ok(EdgeRegularParams { n: self.n(), k, lambda: lambda.unwrap_or(0) })),
            Err(w) => Ok(Err(w)),
        }
    }

    /// `(n, k, lambda, mu)` if the graph is strongly regular.
    pub fn strong_regularity(&self) -> Result<Result<SrgParams, RegularityWitness>, GraphError> {
        if self.is_complete() {
            return Err(GraphError::Complete);
        }
        let er = match self.edge_regularity()? {
            Ok(p) => p,
            Err(w) => return Ok(Err(w)),
        };
        let non_edges = (0..self.n()).flat_map(|u| {
            let row = self.adj[u];
            (u + 1..self.n()).filter(move |&v| !row.contains(v)).map(move |v| ((u, v), self.common_neighbours(u, v)))
        });
        match uniform_count(non_edges) {
            Ok(mu) => Ok(Ok(SrgParams { n: er.n, k: er.k, lambda: er.lambda, mu: mu.unwrap_or(0) })),
            Err(w) => Ok(Err(w)),
        }
    }

    /// Edge-regular parameters, discarding the witness.
    pub fn edge_regular_params(&self) -> Option<EdgeRegularParams> {
        self.edge_regularity().ok().and_then(Result::ok)
    }

    /// Strongly regular parameters, discarding the witness.
    pub fn srg_params(&self) -> Option<SrgParams> {
        self.strong_regularity().ok().and_then(Result::ok)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = alloc::vec![VertexSet::EMPTY; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj, label: self.label.clone() }
    }

    /// True if `perm` maps edges to edges (and hence, being a bijection, non-edges to non-edges).
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n() && is_permutation(perm) && self.edges().all(|(u, v)| self.is_adjacent(perm[u], perm[v]))
    }

    /// True if `map` is an isomorphism from `self` onto `other`.
    pub fn is_isomorphism_to(&self, other: &Graph, map: &[usize]) -> bool {
        self.n() == other.n()
            && self.edge_count() == other.edge_count()
            && map.len() == self.n()
            && is_permutation(map)
            && self.edges().all(|(u, v)| other.is_adjacent(map[u], map[v]))
    }

    /// True if the graph is complete multipartite (non-adjacency is an equivalence relation).
    pub fn is_complete_multipartite(&self) -> bool {
        let co = self.complement();
        (0..self.n()).all(|v| {
            let mut cls = co.neighbours(v);
            cls.insert(v);
            cls.iter().all(|w| {
                let mut other = co.neighbours(w);
                other.insert(w);
                other == cls
            })
        })
    }

    /// Two-colouring of a connected bipartite graph, as the colour class of vertex 0.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let dist = self.distances_from(0);
        let even: VertexSet = (0..self.n()).filter(|&v| dist[v].is_some_and(|d| d % 2 == 0)).collect();
        let ok = self.edges().all(|(u, v)| even.contains(u) != even.contains(v));
        ok.then_some(even)
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = VertexSet::EMPTY;
    p.iter().all(|&x| {
        x < p.len() && x < MAX_VERTICES && !seen.contains(x) && {
            seen.insert(x);
            true
        }
    })
}

fn uniform_count<I>(items: I) -> Result<Option<usize>, RegularityWitness>
where
    I: Iterator<Item = ((usize, usize), usize)>,
{
    let mut first: Option<((usize, usize), usize)> = None;
    for (pair, count) in items {
        match first {
            None => first = Some((pair, count)),
            Some((fp, fc)) if fc != count => {
                return Err(RegularityWitness::CommonNeighbours {
                    first: fp,
                    first_count: fc,
                    second: pair,
                    second_count: count,
                })
            }
            _ => {}
        }
    }
    Ok(first.map(|(_, c)| c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn build_rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop { vertex: 1 }));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert!(matches!(Graph::from_edges(129, []), Err(GraphError::TooManyVertices { .. })));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_complete());
    }

    #[test]
    fn c4_is_edge_regular_and_strongly_regular() {
        let c4 = cycle(4);
        assert_eq!(c4.edge_regular_params(), Some(EdgeRegularParams { n: 4, k: 2, lambda: 0 }));
        assert_eq!(c4.srg_params(), Some(SrgParams { n: 4, k: 2, lambda: 0, mu: 2 }));
        assert!(!c4.srg_params().unwrap().is_nontrivial());
    }

    #[test]
    fn complement_of_c4_is_disconnected() {
        let co = cycle(4).complement();
        assert_eq!(co.edge_count(), 2);
        assert_eq!(co.edge_regularity(), Err(GraphError::Disconnected));
        assert_eq!(co.diameter(), Err(GraphError::Disconnected));
        assert_eq!(co.complement().rows(), cycle(4).rows());
    }

    #[test]
    fn petersen_edge_regularity_by_direct_count() {
        let p = petersen();
        let mut counts = vec![];
        for u in 0..10 {
            for v in u + 1..10 {
                if p.is_adjacent(u, v) {
                    counts.push((0..10).filter(|&w| p.is_adjacent(u, w) && p.is_adjacent(v, w)).count());
                }
            }
        }
        assert_eq!(counts.len(), 15);
        assert!(counts.iter().all(|&c| c == 0));
        assert_eq!(p.edge_regular_params(), Some(EdgeRegularParams { n: 10, k: 3, lambda: 0 }));
        assert_eq!(p.srg_params(), Some(SrgParams { n: 10, k: 3, lambda: 0, mu: 1 }));
    }

    #[test]
    fn c6_is_not_strongly_regular() {
        let c6 = cycle(6);
        match c6.strong_regularity().unwrap() {
            Err(RegularityWitness::CommonNeighbours { first_count, second_count, .. }) => {
                let mut got = [first_count, second_count];
                got.sort();
                // distance-2 pairs share one neighbour, antipodal pairs none
                assert_eq!(got, [0, 1]);
            }
            other => panic!("expected witness, got {other:?}"),
        }
        assert_eq!(c6.diameter(), Ok(3));
    }

    #[test]
    fn complete_graph_rejected_by_srg_test() {
        let k4 = Graph::from_fn(4, |_, _| true).unwrap();
        assert_eq!(k4.strong_regularity(), Err(GraphError::Complete));
    }

    #[test]
    fn irregular_graph_gives_degree_witness() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_regularity().unwrap(), Err(RegularityWitness::Degree { u: 0, du: 1, v: 1, dv: 2 }));
    }

    #[test]
    fn k33_diameter_and_bipartition() {
        let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3)).unwrap();
        assert_eq!(k33.diameter(), Ok(2));
        assert_eq!(k33.bipartition(), Some([0, 1, 2].into_iter().collect()));
        assert!(k33.is_complete_multipartite());
        assert!(!petersen().is_complete_multipartite());
    }
}
