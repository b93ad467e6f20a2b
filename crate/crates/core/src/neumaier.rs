//! Neumaier classification: edge-regular graphs with a regular clique.
//!
//! A regular clique `C` with nexus `a < c` admits no one-vertex extension, so
//! it is a maximal clique. Searching the maximal cliques is therefore complete.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::automorphism::VertexTransitivity;
use crate::bits::VertexSet;
use crate::clique::{canonical_cmp, for_each_maximal_clique, nexus_of, Nexus};
use crate::graph::{EdgeRegularParams, Graph, GraphError, RegularityWitness, SrgParams};
use crate::params::{feasibility, srg_feasibility, NeumaierParams, RuleCheck, SrgNeumaierParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeumaierError {
    Graph(GraphError),
    /// The base vertex of a partition is not in the clique.
    BaseNotInClique {
        base: usize,
    },
    /// The vertex set passed as a clique is not a regular clique.
    NotRegularClique,
    /// The operation requires a Neumaier graph.
    NotNeumaier,
}

impl fmt::Display for NeumaierError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NeumaierError::Graph(e) => e.fmt(f),
            NeumaierError::BaseNotInClique { base } => write!(f, "vertex {base} is not in the clique"),
            NeumaierError::NotRegularClique => f.write_str("vertex set is not a regular clique"),
            NeumaierError::NotNeumaier => f.write_str("graph is not a Neumaier graph"),
        }
    }
}

impl core::error::Error for NeumaierError {}

impl From<GraphError> for NeumaierError {
    fn from(e: GraphError) -> Self {
        NeumaierError::Graph(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Verdict {
    NotEdgeRegular,
    /// Edge-regular but without a regular clique.
    EdgeRegularNoRegularClique,
    /// Neumaier and not strongly regular.
    StrictlyNeumaier,
    StronglyRegularNeumaier,
}

impl Verdict {
    pub fn is_neumaier(self) -> bool {
        matches!(self, Verdict::StrictlyNeumaier | Verdict::StronglyRegularNeumaier)
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::NotEdgeRegular => "NotEdgeRegular",
            Verdict::EdgeRegularNoRegularClique => "EdgeRegularNoRegularClique",
            Verdict::StrictlyNeumaier => "StrictlyNeumaier",
            Verdict::StronglyRegularNeumaier => "StronglyRegularNeumaier",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RegularClique {
    pub clique: VertexSet,
    pub size: usize,
    pub nexus: usize,
}

/// Regular cliques of a graph, found among its maximal cliques.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RegularCliqueSearch {
    pub cliques: Vec<RegularClique>,
    pub maximal_examined: usize,
    /// First maximal clique found not to be regular, with its witness.
    pub first_refutation: Option<(VertexSet, Nexus)>,
}

impl RegularCliqueSearch {
    /// Distinct `(c, a)` pairs.
    pub fn size_nexus_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.cliques.iter().map(|c| (c.size, c.nexus)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Examine every maximal clique.
    Full,
    /// Stop at the first regular clique.
    FirstWitness,
}

/// Regular cliques with nexus at least one, in canonical order.
pub fn find_regular_cliques(g: &Graph, mode: SearchMode) -> RegularCliqueSearch {
    let mut search = RegularCliqueSearch::default();
    let n = g.n();
    let _ = for_each_maximal_clique::<(), _>(g, |c| {
        search.maximal_examined += 1;
        if c.len() < 2 || c.len() >= n {
            return ControlFlow::Continue(());
        }
        match nexus_of(g, c) {
            Ok(Nexus::Regular(a)) if a >= 1 && a < c.len() => {
                search.cliques.push(RegularClique { clique: c, size: c.len(), nexus: a });
                if mode == SearchMode::FirstWitness {
                    return ControlFlow::Break(());
                }
            }
            Ok(other) => {
                if search.first_refutation.is_none() {
                    search.first_refutation = Some((c, other));
                }
            }
            Err(_) => {}
        }
        ControlFlow::Continue(())
    });
    search.cliques.sort_by(|x, y| canonical_cmp(&x.clique, &y.clique));
    search
}

/// A structural consequence of the parameters, checked on the graph itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StructureCheck {
    pub law: StructureLaw,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum StructureLaw {
    /// `λ = 0` or `c = 2`: the graph is `K_{k,k}`.
    CompleteBipartite,
    /// `c = k`: the graph is `C4`.
    Cycle4,
    /// Every regular clique found has the same size and nexus.
    UniqueSizeNexus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Classification {
    pub verdict: Verdict,
    pub edge_regular: Option<EdgeRegularParams>,
    pub regularity_witness: Option<RegularityWitness>,
    pub srg: Option<SrgParams>,
    pub params: Option<NeumaierParams>,
    pub cliques: RegularCliqueSearch,
    /// Every arithmetic rule applied to the classified parameters.
    pub identities: Vec<RuleCheck>,
    pub structure: Vec<StructureCheck>,
    pub diameter: usize,
}

impl Classification {
    pub fn is_neumaier(&self) -> bool {
        self.verdict.is_neumaier()
    }

    pub fn srg_params(&self) -> Option<SrgNeumaierParams> {
        match (self.params, self.srg) {
            (Some(p), Some(s)) => Some(p.with_mu(s.mu)),
            _ => None,
        }
    }

    pub fn identities_hold(&self) -> bool {
        self.identities.iter().all(|c| c.pass)
    }

    pub fn structure_holds(&self) -> bool {
        self.structure.iter().all(|c| c.holds)
    }
}

/// Classifies a connected, non-complete graph, examining every maximal clique.
pub fn classify(g: &Graph) -> Result<Classification, NeumaierError> {
    classify_with(g, SearchMode::Full)
}

pub fn classify_with(g: &Graph, mode: SearchMode) -> Result<Classification, NeumaierError> {
    g.require_connected()?;
    if g.is_complete() {
        return Err(GraphError::Complete.into());
    }
    let diameter = g.diameter()?;
    let mut out = Classification {
        verdict: Verdict::NotEdgeRegular,
        edge_regular: None,
        regularity_witness: None,
        srg: None,
        params: None,
        cliques: RegularCliqueSearch::default(),
        identities: Vec::new(),
        structure: Vec::new(),
        diameter,
    };
    let er = match g.edge_regularity()? {
        Ok(p) => p,
        Err(w) => {
            out.regularity_witness = Some(w);
            return Ok(out);
        }
    };
    out.edge_regular = Some(er);
    match g.strong_regularity()? {
        Ok(s) => out.srg = Some(s),
        Err(w) => out.regularity_witness = Some(w),
    }
    out.cliques = find_regular_cliques(g, mode);
    let Some(first) = out.cliques.cliques.first().copied() else {
        out.verdict = Verdict::EdgeRegularNoRegularClique;
        return Ok(out);
    };
    let params = NeumaierParams::new(er.n, er.k, er.lambda, first.nexus, first.size);
    out.params = Some(params);
    out.verdict = if out.srg.is_some() { Verdict::StronglyRegularNeumaier } else { Verdict::StrictlyNeumaier };
    out.identities = match out.srg {
        Some(s) => srg_feasibility(&params.with_mu(s.mu)).checks,
        None => feasibility(&params).checks,
    };
    out.structure = structure_checks(g, &params, &out.cliques);
    Ok(out)
}

fn structure_checks(g: &Graph, p: &NeumaierParams, cliques: &RegularCliqueSearch) -> Vec<StructureCheck> {
    let mut out = Vec::new();
    if p.lambda == 0 || p.c == 2 {
        let holds =
            g.n() == 2 * p.k && g.bipartition().is_some_and(|side| side.len() == p.k && g.edge_count() == p.k * p.k);
        out.push(StructureCheck { law: StructureLaw::CompleteBipartite, holds });
    }
    if p.c == p.k {
        let c4 = g.n() == 4 && g.edge_count() == 4 && (0..4).all(|v| g.degree(v) == 2);
        out.push(StructureCheck { law: StructureLaw::Cycle4, holds: c4 });
    }
    out.push(StructureCheck { law: StructureLaw::UniqueSizeNexus, holds: cliques.size_nexus_pairs().len() == 1 });
    out
}

/// Index of each part in a [`FourPartPartition`].
pub const BASE: usize = 0;
pub const CLIQUE_REST: usize = 1;
pub const NEIGHBOURS_OUTSIDE: usize = 2;
pub const FAR: usize = 3;

/// The partition `{e}`, `C\{e}`, `S\C`, `R = V\(S∪{e})` for a regular clique `C`,
/// a vertex `e ∈ C`, and `S` the neighbourhood of `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FourPartPartition {
    pub base: usize,
    pub clique: VertexSet,
    pub parts: [VertexSet; 4],
    /// Entries forced by the parameters; the last two of row `R` are known only when equitable.
    pub expected: [[Option<i64>; 4]; 4],
    /// Count from each vertex of part `i` into part `j`, when constant over part `i`.
    pub observed: [[Option<usize>; 4]; 4],
    /// Every vertex of `R` has the same number of neighbours in `S\C`.
    pub equitable: bool,
    /// Two vertices of `R` with different counts into `S\C`.
    pub witness: Option<(usize, usize, usize, usize)>,
}

impl FourPartPartition {
    /// The quotient matrix, when every part-to-part count is constant.
    pub fn quotient(&self) -> Option<[[usize; 4]; 4]> {
        let mut q = [[0; 4]; 4];
        for (row, observed) in q.iter_mut().zip(&self.observed) {
            for (cell, count) in row.iter_mut().zip(observed) {
                *cell = (*count)?;
            }
        }
        Some(q)
    }

    /// Every forced entry agrees with the graph.
    pub fn forced_rows_match(&self) -> bool {
        (0..4).all(|i| {
            (0..4).all(|j| match self.expected[i][j] {
                Some(e) => self.observed[i][j].map(|o| o as i64) == Some(e),
                None => true,
            })
        })
    }

    pub fn part_sizes(&self) -> [usize; 4] {
        self.parts.map(VertexSet::len)
    }
}

/// Builds the four-part partition for regular clique `clique` and base vertex `base`.
pub fn equitable_partition(
    g: &Graph,
    params: &NeumaierParams,
    clique: VertexSet,
    base: usize,
) -> Result<FourPartPartition, NeumaierError> {
    if !clique.contains(base) {
        return Err(NeumaierError::BaseNotInClique { base });
    }
    match nexus_of(g, clique) {
        Ok(Nexus::Regular(a)) if a == params.a && clique.len() == params.c => {}
        _ => return Err(NeumaierError::NotRegularClique),
    }
    let s = g.neighbours(base);
    let e = VertexSet::singleton(base);
    let clique_rest = clique.difference(e);
    let parts = [e, clique_rest, s.difference(clique), g.vertices().difference(s.union(e))];

    let mut observed = [[None; 4]; 4];
    for (i, part) in parts.iter().enumerate() {
        for (j, other) in parts.iter().enumerate() {
            let mut counts = part.iter().map(|v| g.neighbours(v).intersection(*other).len());
            let first = counts.next();
            observed[i][j] = first.filter(|&f| counts.all(|c| c == f));
        }
    }

    let (k, l, a, c) = (params.k as i64, params.lambda as i64, params.a as i64, params.c as i64);
    let mut expected = [
        [Some(0), Some(c - 1), Some(k - c + 1), Some(0)],
        [Some(1), Some(c - 2), Some(l - c + 2), Some(k - l - 1)],
        [Some(1), Some(a - 1), Some(l - a + 1), Some(k - l - 1)],
        [Some(0), Some(a), None, None],
    ];

    let mut far = parts[FAR].iter().map(|v| (v, g.neighbours(v).intersection(parts[NEIGHBOURS_OUTSIDE]).len()));
    let first = far.next();
    let mut witness = None;
    if let Some((u, cu)) = first {
        if let Some((v, cv)) = far.find(|&(_, cv)| cv != cu) {
            witness = Some((u, cu, v, cv));
        }
    }
    let equitable = witness.is_none();
    if equitable {
        if let Some((_, x)) = first {
            expected[FAR][NEIGHBOURS_OUTSIDE] = Some(x as i64);
            expected[FAR][FAR] = Some(k - a - x as i64);
        }
    }
    Ok(FourPartPartition { base, clique, parts, expected, observed, equitable, witness })
}

/// Both directions of "strongly regular iff the far-part count is constant",
/// checked over every regular clique and every base vertex in it.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConstancyVerdict {
    pub strongly_regular: bool,
    pub constant: usize,
    pub non_constant: usize,
}

impl ConstancyVerdict {
    /// No choice of clique and base contradicts the equivalence.
    pub fn consistent(&self) -> bool {
        if self.strongly_regular {
            self.non_constant == 0
        } else {
            self.constant == 0
        }
    }
}

pub fn srg_iff_constancy(g: &Graph, transitivity: &VertexTransitivity) -> Result<ConstancyVerdict, NeumaierError> {
    if !transitivity.certifies(g) {
        return Err(NeumaierError::NotNeumaier);
    }
    let cls = classify(g)?;
    let params = cls.params.ok_or(NeumaierError::NotNeumaier)?;
    let mut verdict = ConstancyVerdict { strongly_regular: cls.srg.is_some(), constant: 0, non_constant: 0 };
    for rc in &cls.cliques.cliques {
        for base in rc.clique.iter() {
            if equitable_partition(g, &params, rc.clique, base)?.equitable {
                verdict.constant += 1;
            } else {
                verdict.non_constant += 1;
            }
        }
    }
    Ok(verdict)
}

/// Actual edge count against the lower bound from the parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EdgeBoundCheck {
    pub bound: i64,
    pub edges: usize,
}

impl EdgeBoundCheck {
    pub fn holds(&self) -> bool {
        self.edges as i64 >= self.bound
    }
}

pub fn check_edge_bound(g: &Graph, p: &NeumaierParams) -> Result<EdgeBoundCheck, crate::params::OddEdgeBound> {
    Ok(EdgeBoundCheck { bound: crate::params::edge_lower_bound(p)?, edges: g.edge_count() })
}

/// The two-part partition `{C, V \ C}` and its quotient `[[c-1, k-c+1], [a, k-a]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TwoPartQuotient {
    pub matrix: [[i64; 2]; 2],
    /// Integer eigenvalues of the quotient with multiplicity, ascending.
    pub eigenvalues: Vec<i64>,
}

impl TwoPartQuotient {
    /// The eigenvalues are exactly `c - a - 1` and `k`.
    pub fn has_expected_eigenvalues(&self, p: &NeumaierParams) -> bool {
        let mut want = alloc::vec![p.c as i64 - p.a as i64 - 1, p.k as i64];
        want.sort_unstable();
        self.eigenvalues == want
    }
}

pub fn two_part_quotient(p: &NeumaierParams) -> TwoPartQuotient {
    let (k, a, c) = (p.k as i64, p.a as i64, p.c as i64);
    let matrix = [[c - 1, k - c + 1], [a, k - a]];
    let rows: Vec<Vec<i64>> = matrix.iter().map(|r| r.to_vec()).collect();
    let poly = crate::spectrum::char_poly_of_matrix(&rows).expect("2x2 matrix");
    let report = crate::spectrum::integer_spectrum(&poly);
    let eigenvalues = report.integer_roots.iter().flat_map(|(&r, &m)| core::iter::repeat_n(r, m)).collect();
    TwoPartQuotient { matrix, eigenvalues }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(n: usize) -> Graph {
        Graph::from_fn(n * n, |u, v| u / n == v / n || u % n == v % n).unwrap()
    }

    #[test]
    fn c4_is_strongly_regular_neumaier() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cls = classify(&c4).unwrap();
        assert_eq!(cls.verdict, Verdict::StronglyRegularNeumaier);
        assert_eq!(cls.params, Some(NeumaierParams::new(4, 2, 0, 1, 2)));
        assert!(cls.identities_hold());
        assert!(cls.structure_holds());
        assert_eq!(cls.structure.len(), 3);
    }

    #[test]
    fn lattice3_partition() {
        let g = lattice(3);
        let cls = classify(&g).unwrap();
        let p = cls.params.unwrap();
        assert_eq!(p, NeumaierParams::new(9, 4, 1, 1, 3));
        let row: VertexSet = [0, 1, 2].into_iter().collect();
        let part = equitable_partition(&g, &p, row, 0).unwrap();
        assert!(part.equitable);
        assert!(part.forced_rows_match());
        assert_eq!(part.quotient(), Some([[0, 2, 2, 0], [1, 1, 0, 2], [1, 0, 1, 2], [0, 1, 1, 2]]));
        assert_eq!(part.part_sizes(), [1, 2, 2, 4]);
    }

    #[test]
    fn partition_errors() {
        let g = lattice(3);
        let p = NeumaierParams::new(9, 4, 1, 1, 3);
        let row: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(equitable_partition(&g, &p, row, 5), Err(NeumaierError::BaseNotInClique { base: 5 }));
        let edge: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(equitable_partition(&g, &p, edge, 0), Err(NeumaierError::NotRegularClique));
    }

    #[test]
    fn disconnected_and_complete_rejected() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(classify(&two_k2), Err(NeumaierError::Graph(GraphError::Disconnected)));
        let k3 = Graph::from_fn(3, |_, _| true).unwrap();
        assert_eq!(classify(&k3), Err(NeumaierError::Graph(GraphError::Complete)));
    }

    #[test]
    fn fast_mode_stops_early() {
        let g = lattice(4);
        let fast = classify_with(&g, SearchMode::FirstWitness).unwrap();
        let full = classify(&g).unwrap();
        assert_eq!(fast.cliques.cliques.len(), 1);
        assert_eq!(full.cliques.cliques.len(), 8);
        assert_eq!(fast.verdict, full.verdict);
        assert_eq!(fast.params, full.params);
    }

    #[test]
    fn petersen_has_no_regular_clique() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let cls = classify(&g).unwrap();
        assert_eq!(cls.verdict, Verdict::EdgeRegularNoRegularClique);
        assert!(cls.cliques.first_refutation.is_some());
    }

    #[test]
    fn edge_bound_on_lattice() {
        let g = lattice(3);
        let b = check_edge_bound(&g, &NeumaierParams::new(9, 4, 1, 1, 3)).unwrap();
        assert_eq!((b.bound, b.edges), (14, 18));
        assert!(b.holds());
    }

    #[test]
    fn two_part_quotient_eigenvalues() {
        let p = NeumaierParams::new(16, 9, 4, 2, 4);
        let q = two_part_quotient(&p);
        assert_eq!(q.matrix, [[3, 6], [2, 7]]);
        assert_eq!(q.eigenvalues, [1, 9]);
        assert!(q.has_expected_eigenvalues(&p));
    }
}
