//! Named graphs with their expected classification.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::automorphism::{is_vertex_transitive, AutError, VertexTransitivity};
use crate::cayley::{cayley_graph, right_translations, CayleyError, ConnectionSet};
use crate::graph::{Graph, SrgParams};
use crate::group::FiniteGroup;
use crate::neumaier::{classify, Classification, NeumaierError, Verdict};
use crate::params::{NeumaierParams, SrgNeumaierParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    UnknownName(String),
    Cayley(CayleyError),
    /// The constructed graph does not have the parameters it was built for.
    UnexpectedParameters {
        name: String,
    },
    Classify(NeumaierError),
    Aut(AutError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownName(n) => write!(f, "unknown catalog name {n:?}"),
            CatalogError::Cayley(e) => e.fmt(f),
            CatalogError::UnexpectedParameters { name } => write!(f, "{name}: constructed graph has wrong parameters"),
            CatalogError::Classify(e) => e.fmt(f),
            CatalogError::Aut(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for CatalogError {}

impl From<CayleyError> for CatalogError {
    fn from(e: CayleyError) -> Self {
        CatalogError::Cayley(e)
    }
}

impl From<NeumaierError> for CatalogError {
    fn from(e: NeumaierError) -> Self {
        CatalogError::Classify(e)
    }
}

impl From<AutError> for CatalogError {
    fn from(e: AutError) -> Self {
        CatalogError::Aut(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Construction {
    Cayley {
        group: String,
        set: String,
    },
    /// `Cay(G, G \ (S ∪ {e}))`, the complement of `Cay(G, S)`.
    CayleyComplement {
        group: String,
        set: String,
    },
    Triangular(usize),
    TriangularComplement(usize),
    /// `parts` classes of `size` vertices each.
    CompleteMultipartite {
        parts: usize,
        size: usize,
    },
    /// Intersection graph of the 27 lines on a cubic surface.
    SchlafliComplement,
    Schlafli,
}

impl Construction {
    pub fn build(&self) -> Result<Graph, CatalogError> {
        Ok(match self {
            Construction::Cayley { group, set } => {
                let g = FiniteGroup::parse(group).map_err(CayleyError::Group)?;
                let s = ConnectionSet::parse(&g, set).map_err(CayleyError::Group)?;
                cayley_graph(&g, &s)?
            }
            Construction::CayleyComplement { group, set } => {
                let g = FiniteGroup::parse(group).map_err(CayleyError::Group)?;
                let s = ConnectionSet::parse(&g, set).map_err(CayleyError::Group)?;
                let mut rest = g.elements().difference(s.0);
                rest.remove(g.identity());
                cayley_graph(&g, &ConnectionSet(rest))?
            }
            Construction::Triangular(n) => triangular(*n),
            Construction::TriangularComplement(n) => triangular(*n).complement(),
            Construction::CompleteMultipartite { parts, size } => complete_multipartite(*parts, *size),
            Construction::SchlafliComplement => schlafli_complement(),
            Construction::Schlafli => schlafli_complement().complement(),
        })
    }

    /// The group and connection set, for Cayley constructions.
    pub fn cayley_data(&self) -> Option<Result<(FiniteGroup, ConnectionSet), CatalogError>> {
        match self {
            Construction::Cayley { group, set } | Construction::CayleyComplement { group, set } => Some((|| {
                let g = FiniteGroup::parse(group).map_err(CayleyError::Group)?;
                let mut s = ConnectionSet::parse(&g, set).map_err(CayleyError::Group)?;
                if matches!(self, Construction::CayleyComplement { .. }) {
                    let mut rest = g.elements().difference(s.0);
                    rest.remove(g.identity());
                    s = ConnectionSet(rest);
                }
                Ok((g, s))
            })(
            )),
            _ => None,
        }
    }
}

/// Expected classification of a catalog graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Expected {
    pub verdict: Verdict,
    pub srg: Option<SrgParams>,
    pub params: Option<NeumaierParams>,
    pub vertex_transitive: bool,
}

impl Expected {
    fn srg_neumaier(p: SrgNeumaierParams) -> Self {
        Expected {
            verdict: Verdict::StronglyRegularNeumaier,
            srg: Some(SrgParams { n: p.n, k: p.k, lambda: p.lambda, mu: p.mu }),
            params: Some(p.params),
            vertex_transitive: true,
        }
    }

    fn srg_only(n: usize, k: usize, lambda: usize, mu: usize) -> Self {
        Expected {
            verdict: Verdict::EdgeRegularNoRegularClique,
            srg: Some(SrgParams { n, k, lambda, mu }),
            params: None,
            vertex_transitive: true,
        }
    }

    fn strictly(p: NeumaierParams) -> Self {
        Expected { verdict: Verdict::StrictlyNeumaier, srg: None, params: Some(p), vertex_transitive: true }
    }

    /// True if `cls` and the transitivity flag agree with this expectation.
    pub fn matches(&self, cls: &Classification, vertex_transitive: bool) -> bool {
        self.verdict == cls.verdict
            && self.srg == cls.srg
            && self.params == cls.params
            && self.vertex_transitive == vertex_transitive
    }
}

/// One row of the table of strongly regular Neumaier graphs with valency at most 10.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Table1Row {
    pub printed: SrgNeumaierParams,
    pub label: &'static str,
    pub neumaier: bool,
    pub cayley: bool,
    pub vertex_transitive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Construction,
    pub expected: Expected,
    pub table1: Option<Table1Row>,
}

impl CatalogEntry {
    /// Builds the graph and checks its regularity parameters against the expectation.
    pub fn build(&self) -> Result<Graph, CatalogError> {
        let g = self.construction.build()?.with_label(self.name.clone());
        let wrong = || CatalogError::UnexpectedParameters { name: self.name.clone() };
        if let Some(s) = self.expected.srg {
            if g.srg_params() != Some(s) {
                return Err(wrong());
            }
        }
        if let Some(p) = self.expected.params {
            let er = g.edge_regular_params().ok_or_else(wrong)?;
            if (er.n, er.k, er.lambda) != (p.n, p.k, p.lambda) {
                return Err(wrong());
            }
        }
        Ok(g)
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// `T(n)`: 2-subsets of `0..n` in lexicographic order, adjacent when they meet.
pub fn triangular(n: usize) -> Graph {
    let p = pairs(n);
    Graph::from_fn(p.len(), |u, v| {
        let (a, b) = (p[u], p[v]);
        a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
    })
    .expect("triangular graph fits")
    .with_label(format!("T({n})"))
}

/// `L2(n, n)`: vertex `(i, j)` is `i n + j`, adjacent when one coordinate agrees.
pub fn lattice(n: usize) -> Graph {
    Graph::from_fn(n * n, |u, v| u / n == v / n || u % n == v % n).expect("lattice graph fits")
}

pub fn lattice_complement(n: usize) -> Graph {
    lattice(n).complement()
}

pub fn complete_multipartite(parts: usize, size: usize) -> Graph {
    Graph::from_fn(parts * size, |u, v| u / size != v / size).expect("multipartite graph fits")
}

/// Lines `a1..a6`, `b1..b6`, `c_ij`; adjacent when they intersect.
pub fn schlafli_complement() -> Graph {
    #[derive(Clone, Copy)]
    enum Line {
        A(usize),
        B(usize),
        C(usize, usize),
    }
    let mut lines: Vec<Line> = (0..6).map(Line::A).chain((0..6).map(Line::B)).collect();
    lines.extend(pairs(6).into_iter().map(|(i, j)| Line::C(i, j)));
    Graph::from_fn(27, |u, v| match (lines[u], lines[v]) {
        (Line::A(i), Line::B(j)) | (Line::B(j), Line::A(i)) => i != j,
        (Line::A(i) | Line::B(i), Line::C(j, k)) | (Line::C(j, k), Line::A(i) | Line::B(i)) => i == j || i == k,
        (Line::C(i, j), Line::C(k, l)) => i != k && i != l && j != k && j != l,
        _ => false,
    })
    .expect("27 vertices")
}

fn lattice_set(n: usize) -> String {
    let mut parts = Vec::new();
    for i in 1..n {
        parts.push(format!("({i},0)"));
        parts.push(format!("(0,{i})"));
    }
    parts.join(",")
}

fn lattice_construction(n: usize, complement: bool) -> Construction {
    let group = format!("Z{n}xZ{n}");
    let set = lattice_set(n);
    if complement {
        Construction::CayleyComplement { group, set }
    } else {
        Construction::Cayley { group, set }
    }
}

const SHRIKHANDE_SET: &str = "(1,0),(3,0),(0,1),(0,3),(1,1),(3,3)";
const CLEBSCH_COMPLEMENT_SET: &str = "(1,0,0,0),(0,1,0,0),(0,0,1,0),(0,0,0,1),(1,1,1,1)";

const STRICTLY16_SET: &str = "a,a^-1,a^2,a^-2,b,ba,ba^3,ba^4,ba^6";
const STRICTLY24_SETS: [(&str, &str); 4] = [
    ("S4", "(1,3)(2,4), (1,4)(2,3), (1,2,4), (1,4,2), (1,3,4), (1,4,3), (1,2,4,3), (1,3,4,2)"),
    ("A4xZ2", "(1,3)(2,4), (1,2)(3,4), (1,2,4), (1,4,2), (1,2,3), (1,3,2), (1,3)(2,4)(5,6), (1,4)(2,3)(5,6)"),
    ("S4", "(1,3)(2,4), (1,4)(2,3), (1,2,4), (1,4,2), (1,3,4), (1,4,3), (1,4), (2,3)"),
    ("A4xZ2", "(1,3)(2,4), (1,4)(2,3), (1,2,4), (1,4,2), (1,3,4), (1,4,3), (1,4)(2,3)(5,6), (5,6)"),
];
const STRICTLY28_SETS: [(&str, &str); 2] =
    [("Z28", "1,-1,4,-4,5,-5,7,-7,14"), ("Z2xZ14", "(1,0),(0,1),(0,-1),(0,7),(1,2),(1,-2),(1,3),(1,-3),(1,7)")];

fn lattice_params(n: usize) -> SrgNeumaierParams {
    NeumaierParams::new(n * n, 2 * (n - 1), n - 2, 1, n).with_mu(2)
}

fn lattice_complement_params(n: usize) -> SrgNeumaierParams {
    NeumaierParams::new(n * n, (n - 1) * (n - 1), (n - 2) * (n - 2), n - 2, n).with_mu((n - 1) * (n - 2))
}

fn triangular_params(n: usize) -> SrgNeumaierParams {
    NeumaierParams::new(n * (n - 1) / 2, 2 * (n - 2), n - 2, 2, n - 1).with_mu(4)
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn triangular_complement_expected(n: usize) -> Expected {
    let (v, k, l, m) = (choose2(n), choose2(n - 2), choose2(n - 4), choose2(n - 3));
    if n.is_multiple_of(2) {
        let a = (n - 4) / 2;
        Expected::srg_neumaier(NeumaierParams::new(v, k, l, a, a + 2).with_mu(m))
    } else {
        Expected::srg_only(v, k, l, m)
    }
}

fn entry(name: &str, construction: Construction, expected: Expected) -> CatalogEntry {
    CatalogEntry { name: name.to_string(), construction, expected, table1: None }
}

fn row(e: CatalogEntry, label: &'static str, printed: SrgNeumaierParams, neumaier: bool, cayley: bool) -> CatalogEntry {
    CatalogEntry { table1: Some(Table1Row { printed, label, neumaier, cayley, vertex_transitive: true }), ..e }
}

/// Looks up a fixed name (`shrikhande`, `strictly28-1`, ...) or a family member
/// (`lattice-4`, `lattice-complement-4`, `triangular-7`, `triangular-complement-6`,
/// `multipartite-3x3`, `paley-13`).
pub fn lookup(name: &str) -> Result<CatalogEntry, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let fixed = match name {
        "shrikhande" => Some(entry(
            name,
            Construction::Cayley { group: "Z4xZ4".into(), set: SHRIKHANDE_SET.into() },
            Expected::srg_only(16, 6, 2, 2),
        )),
        "shrikhande-complement" => Some(entry(
            name,
            Construction::CayleyComplement { group: "Z4xZ4".into(), set: SHRIKHANDE_SET.into() },
            Expected::srg_neumaier(NeumaierParams::new(16, 9, 4, 2, 4).with_mu(6)),
        )),
        "clebsch" => Some(entry(
            name,
            Construction::CayleyComplement { group: "Z2^4".into(), set: CLEBSCH_COMPLEMENT_SET.into() },
            Expected::srg_only(16, 10, 6, 6),
        )),
        "schlafli-complement" => Some(entry(
            name,
            Construction::SchlafliComplement,
            Expected::srg_neumaier(NeumaierParams::new(27, 10, 1, 1, 3).with_mu(5)),
        )),
        "schlafli" => Some(entry(name, Construction::Schlafli, Expected::srg_only(27, 16, 10, 8))),
        "strictly16" => Some(entry(
            name,
            Construction::Cayley { group: "D16".into(), set: STRICTLY16_SET.into() },
            Expected::strictly(NeumaierParams::new(16, 9, 4, 2, 4)),
        )),
        _ => None,
    };
    if let Some(e) = fixed {
        return Ok(e);
    }
    if let Some(i) = name.strip_prefix("strictly24-") {
        let (group, set) = *STRICTLY24_SETS.get(num(i)?.wrapping_sub(1)).ok_or_else(unknown)?;
        return Ok(entry(
            name,
            Construction::Cayley { group: group.into(), set: set.into() },
            Expected::strictly(NeumaierParams::new(24, 8, 2, 1, 4)),
        ));
    }
    if let Some(i) = name.strip_prefix("strictly28-") {
        let (group, set) = *STRICTLY28_SETS.get(num(i)?.wrapping_sub(1)).ok_or_else(unknown)?;
        return Ok(entry(
            name,
            Construction::Cayley { group: group.into(), set: set.into() },
            Expected::strictly(NeumaierParams::new(28, 9, 2, 1, 4)),
        ));
    }
    if let Some(n) = name.strip_prefix("lattice-complement-") {
        let n = num(n)?;
        if !(3..=8).contains(&n) {
            return Err(unknown());
        }
        return Ok(entry(name, lattice_construction(n, true), Expected::srg_neumaier(lattice_complement_params(n))));
    }
    if let Some(n) = name.strip_prefix("lattice-") {
        let n = num(n)?;
        if !(2..=8).contains(&n) {
            return Err(unknown());
        }
        return Ok(entry(name, lattice_construction(n, false), Expected::srg_neumaier(lattice_params(n))));
    }
    if let Some(n) = name.strip_prefix("triangular-complement-") {
        let n = num(n)?;
        if !(5..=16).contains(&n) {
            return Err(unknown());
        }
        return Ok(entry(name, Construction::TriangularComplement(n), triangular_complement_expected(n)));
    }
    if let Some(n) = name.strip_prefix("triangular-") {
        let n = num(n)?;
        if !(5..=16).contains(&n) {
            return Err(unknown());
        }
        return Ok(entry(name, Construction::Triangular(n), Expected::srg_neumaier(triangular_params(n))));
    }
    if let Some(spec) = name.strip_prefix("multipartite-") {
        let (m, s) = spec.split_once('x').ok_or_else(unknown)?;
        let (m, s) = (num(m)?, num(s)?);
        if m < 2 || s < 2 || m * s > crate::graph::MAX_VERTICES {
            return Err(unknown());
        }
        let p = NeumaierParams::new(m * s, (m - 1) * s, (m - 2) * s, m - 1, m).with_mu((m - 1) * s);
        return Ok(entry(name, Construction::CompleteMultipartite { parts: m, size: s }, Expected::srg_neumaier(p)));
    }
    if let Some(p) = name.strip_prefix("paley-") {
        let p = num(p)?;
        if p % 4 != 1 || !is_prime(p) || p > crate::group::MAX_ORDER {
            return Err(unknown());
        }
        let set = quadratic_residues(p).iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let expected = Expected::srg_only(p, (p - 1) / 2, (p - 5) / 4, (p - 1) / 4);
        return Ok(entry(name, Construction::Cayley { group: format!("Z{p}"), set }, expected));
    }
    Err(unknown())
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Nonzero squares mod `p`, ascending.
pub fn quadratic_residues(p: usize) -> Vec<usize> {
    let mut r: Vec<usize> = (1..p).map(|x| x * x % p).collect();
    r.sort_unstable();
    r.dedup();
    r
}

/// The twelve rows of the valency-at-most-10 table, in printed order.
pub fn table1() -> Vec<CatalogEntry> {
    let get = |n: &str| lookup(n).expect("fixed catalog name");
    let l44 = lattice_params(4);
    let lc44 = lattice_complement_params(4);
    let clebsch = NeumaierParams::new(16, 10, 6, 3, 6).with_mu(6);
    alloc::vec![
        row(get("lattice-3"), "L2(3,3)", lattice_params(3), true, true),
        row(get("triangular-5"), "T(5)", triangular_params(5), true, false),
        row(get("triangular-6"), "T(6)", triangular_params(6), true, false),
        row(
            get("triangular-complement-6"),
            "complement of T(6)",
            NeumaierParams::new(15, 6, 1, 1, 3).with_mu(3),
            true,
            false
        ),
        row(get("lattice-4"), "L2(4,4)", l44, true, true),
        row(get("shrikhande"), "Shrikhande", l44, false, true),
        row(get("lattice-complement-4"), "complement of L2(4,4)", lc44, true, true),
        row(get("shrikhande-complement"), "complement of Shrikhande", lc44, true, true),
        row(get("clebsch"), "Clebsch", clebsch, false, true),
        row(get("triangular-7"), "T(7)", triangular_params(7), true, true),
        row(get("lattice-5"), "L2(5,5)", lattice_params(5), true, true),
        row(
            get("schlafli-complement"),
            "complement of Schlafli",
            NeumaierParams::new(27, 10, 1, 1, 3).with_mu(5),
            true,
            true
        ),
    ]
}

/// Every fixed entry plus the table rows, without duplicates.
pub fn all_named() -> Vec<CatalogEntry> {
    let mut out = table1();
    for name in [
        "schlafli",
        "strictly16",
        "strictly24-1",
        "strictly24-2",
        "strictly24-3",
        "strictly24-4",
        "strictly28-1",
        "strictly28-2",
    ] {
        out.push(lookup(name).expect("fixed catalog name"));
    }
    out
}

/// The explicit strictly Neumaier Cayley graphs.
pub fn strictly_neumaier_cayley() -> Vec<CatalogEntry> {
    ["strictly16", "strictly24-1", "strictly24-2", "strictly24-3", "strictly24-4", "strictly28-1", "strictly28-2"]
        .into_iter()
        .map(|n| lookup(n).expect("fixed catalog name"))
        .collect()
}

/// How the Cayley column of a row was checked.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum CayleyEvidence {
    /// Built as a Cayley graph; right translations verified as automorphisms.
    Construction {
        group: String,
    },
    /// A group of automorphisms acting regularly on the vertices.
    RegularSubgroup {
        order: usize,
    },
    NotChecked,
}

/// Affine maps `x -> 2^i x + j` of `Z7` acting on the vertices of `T(7)`.
pub fn triangular7_regular_subgroup() -> Vec<Vec<usize>> {
    let p = pairs(7);
    let index = |a: usize, b: usize| p.iter().position(|&q| q == (a.min(b), a.max(b))).expect("pair");
    let act = |f: &dyn Fn(usize) -> usize| p.iter().map(|&(a, b)| index(f(a), f(b))).collect::<Vec<usize>>();
    alloc::vec![act(&|x| (x + 1) % 7), act(&|x| (2 * x) % 7)]
}

/// Order of the group generated by `gens` if its elements are automorphisms of `g`
/// and it acts regularly (transitive, order equal to the vertex count).
pub fn regular_subgroup_order(g: &Graph, gens: &[Vec<usize>]) -> Option<usize> {
    if !gens.iter().all(|p| g.is_automorphism(p)) {
        return None;
    }
    let perms: Vec<crate::group::Perm> = gens.iter().map(|p| p.iter().map(|&x| x as u8).collect()).collect();
    let group = FiniteGroup::from_permutations(g.n(), &perms).ok()?;
    let transitive = VertexTransitivity::from_generators(g.n(), gens.to_vec()).is_some();
    (transitive && group.order() == g.n()).then_some(group.order())
}

/// Result of constructing, classifying and checking one entry.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EntryCheck {
    pub entry: CatalogEntry,
    pub classification: Classification,
    pub vertex_transitive: bool,
    pub cayley: CayleyEvidence,
    pub matches: bool,
}

impl EntryCheck {
    /// Neumaier flag, transitivity flag and printed parameters agree with the table row.
    pub fn table_row_matches(&self) -> Option<bool> {
        let row = self.entry.table1?;
        let cls = &self.classification;
        let params_ok = if row.neumaier {
            cls.srg_params() == Some(row.printed)
        } else {
            let p = row.printed;
            cls.srg == Some(SrgParams { n: p.n, k: p.k, lambda: p.lambda, mu: p.mu })
        };
        Some(params_ok && cls.is_neumaier() == row.neumaier && self.vertex_transitive == row.vertex_transitive)
    }
}

pub fn check_entry(entry: &CatalogEntry) -> Result<EntryCheck, CatalogError> {
    let g = entry.build()?;
    let classification = classify(&g)?;
    let vertex_transitive = match is_vertex_transitive(&g)? {
        Some(cert) => cert.certifies(&g),
        None => false,
    };
    let cayley = match entry.construction.cayley_data() {
        Some(data) => {
            let (group, _) = data?;
            let translations = right_translations(&group);
            if translations.iter().all(|t| g.is_automorphism(t)) {
                CayleyEvidence::Construction { group: group.label().to_string() }
            } else {
                CayleyEvidence::NotChecked
            }
        }
        None if entry.construction == Construction::Triangular(7) => {
            match regular_subgroup_order(&g, &triangular7_regular_subgroup()) {
                Some(order) => CayleyEvidence::RegularSubgroup { order },
                None => CayleyEvidence::NotChecked,
            }
        }
        None => CayleyEvidence::NotChecked,
    };
    let matches = entry.expected.matches(&classification, vertex_transitive);
    Ok(EntryCheck { entry: entry.clone(), classification, vertex_transitive, cayley, matches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schlafli_model_parameters() {
        let g = schlafli_complement();
        assert_eq!(g.srg_params(), Some(SrgParams { n: 27, k: 10, lambda: 1, mu: 5 }));
        assert_eq!(g.complement().srg_params(), Some(SrgParams { n: 27, k: 16, lambda: 10, mu: 8 }));
    }

    #[test]
    fn lattice_cayley_matches_direct() {
        for n in 3..=5 {
            let built = lookup(&format!("lattice-{n}")).unwrap().build().unwrap();
            assert_eq!(built.rows(), lattice(n).rows());
        }
    }

    #[test]
    fn every_named_entry_builds() {
        for e in all_named() {
            e.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }

    #[test]
    fn unknown_names() {
        for bad in ["nope", "lattice-1", "strictly24-5", "strictly28-0", "paley-7", "multipartite-1x3", "lattice-x"] {
            assert!(matches!(lookup(bad), Err(CatalogError::UnknownName(_))), "{bad}");
        }
    }

    #[test]
    fn t7_has_regular_subgroup() {
        assert_eq!(regular_subgroup_order(&triangular(7), &triangular7_regular_subgroup()), Some(21));
    }

    #[test]
    fn quadratic_residues_13() {
        assert_eq!(quadratic_residues(13), [1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn table_has_twelve_rows() {
        let t = table1();
        assert_eq!(t.len(), 12);
        assert_eq!(t.iter().filter(|e| !e.table1.unwrap().neumaier).count(), 2);
    }
}
