//! Arithmetic feasibility rules for Neumaier parameter tuples `(n,k,λ;a,c)`.
//!
//! Every rule is an exact integer identity or inequality that any Neumaier
//! graph must satisfy. Each check reports both sides so a failure can be
//! audited without recomputing anything.

use alloc::vec::Vec;
use core::fmt;

use crate::spectrum::{srg_integer_ratio, IntegerRatioCheck};

/// `(n, k, λ; a, c)`: edge-regular parameters plus the size `c` and nexus `a` of a regular clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NeumaierParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub a: usize,
    pub c: usize,
}

/// `(n, k, λ, μ; a, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SrgNeumaierParams {
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub params: NeumaierParams,
    pub mu: usize,
}

impl core::ops::Deref for SrgNeumaierParams {
    type Target = NeumaierParams;
    fn deref(&self) -> &NeumaierParams {
        &self.params
    }
}

impl NeumaierParams {
    pub const fn new(n: usize, k: usize, lambda: usize, a: usize, c: usize) -> Self {
        NeumaierParams { n, k, lambda, a, c }
    }

    pub const fn with_mu(self, mu: usize) -> SrgNeumaierParams {
        SrgNeumaierParams { params: self, mu }
    }

    fn signed(&self) -> (i64, i64, i64, i64, i64) {
        (self.n as i64, self.k as i64, self.lambda as i64, self.a as i64, self.c as i64)
    }
}

impl fmt::Display for NeumaierParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{},{})", self.n, self.k, self.lambda, self.a, self.c)
    }
}

impl fmt::Display for SrgNeumaierParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        write!(f, "({},{},{},{};{},{})", p.n, p.k, p.lambda, self.mu, p.a, p.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Rule {
    /// `1 <= a < c <= k < n` and `λ < k`.
    Ranges,
    /// `nk` is even.
    Handshake,
    /// `n <= max{1 + k + k(k-2), 2k}`.
    VertexBound,
    /// `c(k-c+1) = (n-c)a`.
    Counting,
    /// `(k-c+1)(a-1) = (c-1)(λ-c+2)`.
    DoubleCounting1,
    /// `(c-1)(k-λ-1) = (n-k-1)a`.
    DoubleCounting2,
    /// `a = 1` implies `λ = c-2`.
    NexusOneLambda,
    /// `a = 1` implies `k-2c+3 > 0`.
    NexusOneSlack,
    /// `c = k` forces `(4,2,0;1,2)`.
    CliqueEqualsValency,
    /// `λ = 0` or `c = 2` forces `K_{k,k}`: `n = 2k`, `a = 1`, `λ = 0`, `c = 2`.
    CompleteBipartite,
    /// The edge lower bound is an integer.
    EdgeBoundIntegral,
    /// `nk/2` is at least the edge lower bound.
    EdgeBound,
    /// `0 < μ <= k`.
    MuRange,
    /// `(k-c+1)(k-λ-1) = (n-k-1)(μ-a)`.
    SrgEquation1,
    /// `μ(c-a-1) = a(k-μ)`.
    SrgEquation2,
    /// `-μ/a` is an integer eigenvalue meeting the Hoffman bound.
    IntegerRatio,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Ranges => "ranges",
            Rule::Handshake => "handshake",
            Rule::VertexBound => "vertex_bound",
            Rule::Counting => "counting",
            Rule::DoubleCounting1 => "double_counting_1",
            Rule::DoubleCounting2 => "double_counting_2",
            Rule::NexusOneLambda => "nexus_one_lambda",
            Rule::NexusOneSlack => "nexus_one_slack",
            Rule::CliqueEqualsValency => "clique_equals_valency",
            Rule::CompleteBipartite => "complete_bipartite",
            Rule::EdgeBoundIntegral => "edge_bound_integral",
            Rule::EdgeBound => "edge_bound",
            Rule::MuRange => "mu_range",
            Rule::SrgEquation1 => "srg_equation_1",
            Rule::SrgEquation2 => "srg_equation_2",
            Rule::IntegerRatio => "integer_ratio",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One rule applied to one tuple. `lhs`/`rhs` are the two sides of the
/// identity, or the compared quantities for inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RuleCheck {
    pub rule: Rule,
    pub pass: bool,
    pub lhs: i64,
    pub rhs: i64,
}

impl RuleCheck {
    fn equal(rule: Rule, lhs: i64, rhs: i64) -> Self {
        RuleCheck { rule, pass: lhs == rhs, lhs, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FeasibilityReport {
    pub params: NeumaierParams,
    pub mu: Option<usize>,
    pub checks: Vec<RuleCheck>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &RuleCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, rule: Rule) -> Option<&RuleCheck> {
        self.checks.iter().find(|c| c.rule == rule)
    }
}

pub fn check_ranges(p: &NeumaierParams) -> RuleCheck {
    let ok = 1 <= p.a && p.a < p.c && p.c <= p.k && p.k < p.n && p.lambda < p.k.max(1);
    RuleCheck { rule: Rule::Ranges, pass: ok, lhs: ok as i64, rhs: 1 }
}

pub fn check_handshake(p: &NeumaierParams) -> RuleCheck {
    let nk = (p.n * p.k) as i64;
    RuleCheck { rule: Rule::Handshake, pass: nk % 2 == 0, lhs: nk % 2, rhs: 0 }
}

pub fn check_vertex_bound(p: &NeumaierParams) -> RuleCheck {
    let bound = max_vertices(p.k, true) as i64;
    RuleCheck { rule: Rule::VertexBound, pass: p.n as i64 <= bound, lhs: p.n as i64, rhs: bound }
}

pub fn check_counting(p: &NeumaierParams) -> RuleCheck {
    let (n, k, _, a, c) = p.signed();
    RuleCheck::equal(Rule::Counting, c * (k - c + 1), (n - c) * a)
}

pub fn check_dc1(p: &NeumaierParams) -> RuleCheck {
    let (_, k, l, a, c) = p.signed();
    RuleCheck::equal(Rule::DoubleCounting1, (k - c + 1) * (a - 1), (c - 1) * (l - c + 2))
}

pub fn check_dc2(p: &NeumaierParams) -> RuleCheck {
    let (n, k, l, a, c) = p.signed();
    RuleCheck::equal(Rule::DoubleCounting2, (c - 1) * (k - l - 1), (n - k - 1) * a)
}

/// Both nexus-one consequences; empty when `a != 1`.
pub fn check_nexus_one(p: &NeumaierParams) -> Vec<RuleCheck> {
    if p.a != 1 {
        return Vec::new();
    }
    let (_, k, l, _, c) = p.signed();
    let slack = k - 2 * c + 3;
    alloc::vec![
        RuleCheck::equal(Rule::NexusOneLambda, l, c - 2),
        RuleCheck { rule: Rule::NexusOneSlack, pass: slack > 0, lhs: slack, rhs: 0 },
    ]
}

/// The degenerate-case laws; empty when neither `c = k` nor `λ = 0`/`c = 2` applies.
///
/// Sides encode the tuple as a single number so the report stays flat:
/// `lhs = 1` iff the tuple is the forced one.
pub fn check_degenerate(p: &NeumaierParams) -> Vec<RuleCheck> {
    let mut out = Vec::new();
    if p.c == p.k {
        let ok = *p == NeumaierParams::new(4, 2, 0, 1, 2);
        out.push(RuleCheck { rule: Rule::CliqueEqualsValency, pass: ok, lhs: ok as i64, rhs: 1 });
    }
    if p.lambda == 0 || p.c == 2 {
        let ok = p.n == 2 * p.k && p.a == 1 && p.lambda == 0 && p.c == 2;
        out.push(RuleCheck { rule: Rule::CompleteBipartite, pass: ok, lhs: ok as i64, rhs: 1 });
    }
    out
}

/// Twice the edge lower bound
/// `k(k-λ) + (k-c+1)(a-1) + (k-c+1)(λ-a+1)/2 + (c-1)(c-2)/2`.
pub fn edge_lower_bound_doubled(p: &NeumaierParams) -> i64 {
    let (_, k, l, a, c) = p.signed();
    2 * k * (k - l) + 2 * (k - c + 1) * (a - 1) + (k - c + 1) * (l - a + 1) + (c - 1) * (c - 2)
}

/// Non-integral edge bound: `(k-c+1)(λ-a+1)` is odd, so the subgraph on
/// the non-clique neighbours cannot be regular of valency `λ-a+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddEdgeBound {
    pub doubled: i64,
}

impl fmt::Display for OddEdgeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge lower bound {}/2 is not an integer", self.doubled)
    }
}

impl core::error::Error for OddEdgeBound {}

/// Minimum edge count of a Neumaier graph with these parameters.
pub fn edge_lower_bound(p: &NeumaierParams) -> Result<i64, OddEdgeBound> {
    let doubled = edge_lower_bound_doubled(p);
    if doubled % 2 != 0 {
        Err(OddEdgeBound { doubled })
    } else {
        Ok(doubled / 2)
    }
}

pub fn check_edge_bound(p: &NeumaierParams) -> Vec<RuleCheck> {
    let doubled = edge_lower_bound_doubled(p);
    let edges_doubled = (p.n * p.k) as i64;
    alloc::vec![
        RuleCheck { rule: Rule::EdgeBoundIntegral, pass: doubled % 2 == 0, lhs: doubled % 2, rhs: 0 },
        // compared doubled to stay in integers
        RuleCheck { rule: Rule::EdgeBound, pass: edges_doubled >= doubled, lhs: edges_doubled, rhs: doubled },
    ]
}

pub fn check_srg_identities(p: &SrgNeumaierParams) -> Vec<RuleCheck> {
    let (n, k, l, a, c) = p.params.signed();
    let mu = p.mu as i64;
    alloc::vec![
        RuleCheck { rule: Rule::MuRange, pass: 0 < mu && mu <= k, lhs: mu, rhs: k },
        RuleCheck::equal(Rule::SrgEquation1, (k - c + 1) * (k - l - 1), (n - k - 1) * (mu - a)),
        RuleCheck::equal(Rule::SrgEquation2, mu * (c - a - 1), a * (k - mu)),
    ]
}

pub fn check_integer_ratio(p: &SrgNeumaierParams) -> (RuleCheck, IntegerRatioCheck) {
    let v = srg_integer_ratio(p);
    let check = RuleCheck { rule: Rule::IntegerRatio, pass: v.passed(), lhs: p.mu as i64, rhs: p.a as i64 };
    (check, v)
}

/// All Neumaier rules for `p`.
pub fn feasibility(p: &NeumaierParams) -> FeasibilityReport {
    let mut checks = alloc::vec![check_ranges(p)];
    if checks[0].pass {
        checks.push(check_handshake(p));
        checks.push(check_vertex_bound(p));
        checks.push(check_counting(p));
        checks.push(check_dc1(p));
        checks.push(check_dc2(p));
        checks.extend(check_nexus_one(p));
        checks.extend(check_degenerate(p));
        checks.extend(check_edge_bound(p));
    }
    FeasibilityReport { params: *p, mu: None, checks }
}

/// All Neumaier rules plus the strongly regular ones.
pub fn srg_feasibility(p: &SrgNeumaierParams) -> FeasibilityReport {
    let mut report = feasibility(&p.params);
    report.mu = Some(p.mu);
    if report.checks[0].pass {
        report.checks.extend(check_srg_identities(p));
        report.checks.push(check_integer_ratio(p).0);
    }
    report
}

/// Upper bound on the vertex count of a Neumaier graph of valency `k`.
///
/// With `diameter2` this is `max{1 + k + k(k-2), 2k}`; otherwise it is the bound
/// obtained by maximising the counting identity over `c` with `a >= 1`,
/// namely `max_c c(k-c+2)`.
pub fn max_vertices(k: usize, diameter2: bool) -> usize {
    if diameter2 {
        let moore = 1 + k + k * k.saturating_sub(2);
        moore.max(2 * k)
    } else {
        (2..=k.max(2)).map(|c| c * (k + 2 - c)).max().unwrap_or(0)
    }
}

/// `max_vertices(k, false)` maximised over `k <= k_max`.
pub fn counting_vertex_bound(k_max: usize) -> usize {
    (2..=k_max).map(|k| max_vertices(k, false)).max().unwrap_or(0)
}

fn passes_all(p: &NeumaierParams) -> bool {
    feasibility(p).feasible()
}

/// Every tuple with `k <= k_max` passing every Neumaier rule, sorted by `(n,k,λ,a,c)`.
pub fn enumerate_feasible(k_max: usize) -> Vec<NeumaierParams> {
    let mut out = Vec::new();
    for k in 2..=k_max {
        for c in 2..=k {
            for a in 1..c {
                // counting is the cheapest filter; skip tuples where it cannot hold
                for lambda in 0..k {
                    for n in k + 2..=max_vertices(k, true) {
                        if c * (k - c + 1) != (n - c) * a {
                            continue;
                        }
                        let p = NeumaierParams::new(n, k, lambda, a, c);
                        if passes_all(&p) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Feasible tuples extended by every `μ` passing the strongly regular rules.
pub fn enumerate_srg_feasible(k_max: usize) -> Vec<SrgNeumaierParams> {
    let mut out: Vec<SrgNeumaierParams> = enumerate_feasible(k_max)
        .into_iter()
        .flat_map(|p| (1..=p.k).map(move |mu| p.with_mu(mu)))
        .filter(|s| srg_feasibility(s).feasible())
        .collect();
    out.sort();
    out
}

/// Parameters `(v, k, λ, μ)` of the complement of the triangular graph `T(n)`.
pub fn triangular_complement_srg(n: usize) -> (usize, usize, usize, usize) {
    let choose2 = |m: usize| m * m.saturating_sub(1) / 2;
    (choose2(n), choose2(n - 2), choose2(n - 4), choose2(n - 3))
}
