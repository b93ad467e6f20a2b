//! Command implementations shared by the binary and the tests.

use anyhow::{bail, Result};
use neumaier_core::automorphism::{are_isomorphic, automorphism_group, orbits, Isomorphism, MAX_AUT_VERTICES};
use neumaier_core::catalog::{check_entry, table1, CayleyEvidence, EntryCheck};
use neumaier_core::cayley::{cayley_graph, validate_connection_set, ConnectionSet};
use neumaier_core::circulant::{all_specs, paley_half_sets, scan_spec, CirculantScan, MAX_CIRCULANT_ORDER};
use neumaier_core::graph::Graph;
use neumaier_core::group::{cycle_notation, FiniteGroup};
use neumaier_core::neumaier::{
    check_edge_bound, classify as classify_graph, equitable_partition, srg_iff_constancy, two_part_quotient,
    Classification,
};
use neumaier_core::params::{enumerate_feasible, enumerate_srg_feasible, feasibility, srg_feasibility, NeumaierParams};
use neumaier_core::spectrum::{char_poly, integer_spectrum, verify_neumaier_eigenvalues, MAX_SPECTRUM_VERTICES};
use neumaier_core::VertexSet;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::format::to_graph6;
use crate::input::ResolvedGraph;
use crate::report::{InputDigest, Report};

fn words(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Vertex-transitivity by automorphism search, when the graph is small enough.
fn vertex_transitive(g: &Graph) -> Option<bool> {
    if g.n() > MAX_AUT_VERTICES {
        return None;
    }
    let report = automorphism_group(g).ok()?;
    Some(report.is_transitive())
}

/// Assertions that every Neumaier classification must satisfy.
fn neumaier_assertions(r: &mut Report, g: &Graph, cls: &Classification, vt: Option<bool>) -> Value {
    let Some(p) = cls.params else { return Value::Null };
    for c in &cls.identities {
        r.assert(format!("rule {}", c.rule.name()), c.pass, format!("{} vs {}", c.lhs, c.rhs));
    }
    for s in &cls.structure {
        r.assert(format!("structure {:?}", s.law), s.holds, "");
    }
    match check_edge_bound(g, &p) {
        Ok(b) => r.assert("edge lower bound", b.holds(), format!("{} edges >= {}", b.edges, b.bound)),
        Err(e) => r.assert("edge lower bound", false, format!("bound is not an integer: {}/2", e.doubled)),
    }
    let q = two_part_quotient(&p);
    r.assert("two-part quotient eigenvalues", q.has_expected_eigenvalues(&p), format!("{:?}", q.eigenvalues));
    if vt == Some(true) {
        r.assert("diameter 2 (vertex-transitive)", cls.diameter == 2, format!("diameter {}", cls.diameter));
    }
    let mut spectral = json!(null);
    if g.n() <= MAX_SPECTRUM_VERTICES {
        let spec = integer_spectrum(&char_poly(g).expect("size checked"));
        let e = verify_neumaier_eigenvalues(&spec, &p);
        r.assert("eigenvalues k and c-a-1", e.passed(), format!("expected {:?}, missing {:?}", e.expected, e.missing));
        if let Some(s) = cls.srg_params() {
            if s.a > 0 && s.mu % s.a == 0 {
                let m = (s.mu / s.a) as i64;
                r.assert("eigenvalue -mu/a", spec.contains(-m), format!("-{m}"));
            } else {
                r.assert("eigenvalue -mu/a", false, "a does not divide mu");
            }
        }
        spectral = json!({ "spectrum": spec.describe(), "eigenvalue_check": e });
    }
    spectral
}

pub fn classify(input: &ResolvedGraph) -> Result<Report> {
    let g = &input.graph;
    let mut r = Report::new(words(&["classify"]));
    r.inputs.push(InputDigest::of_resolved(input));
    let cls = classify_graph(g)?;
    let vt = vertex_transitive(g);
    r.line(format!("graph: {} ({} vertices, {} edges)", input.source.describe(), g.n(), g.edge_count()));
    r.line(format!("verdict: {}", cls.verdict));
    r.line(format!("neumaier: {}", if cls.is_neumaier() { "yes" } else { "no" }));
    if let Some(er) = cls.edge_regular {
        r.line(format!("edge-regular: ({},{},{})", er.n, er.k, er.lambda));
    }
    if let Some(s) = cls.srg {
        r.line(format!("strongly regular: ({},{},{},{})", s.n, s.k, s.lambda, s.mu));
    }
    match (cls.srg_params(), cls.params) {
        (Some(s), _) => r.line(format!("parameters: {s}")),
        (None, Some(p)) => r.line(format!("parameters: {p}")),
        _ => {}
    }
    r.line(format!(
        "regular cliques: {} (size, nexus) {:?}",
        cls.cliques.cliques.len(),
        cls.cliques.size_nexus_pairs()
    ));
    if let Some(vt) = vt {
        r.line(format!("vertex-transitive: {vt}"));
    }
    let spectral = neumaier_assertions(&mut r, g, &cls, vt);
    let mut expected = json!(null);
    if let Some(entry) = &input.entry {
        let ok = match vt {
            Some(vt) => entry.expected.matches(&cls, vt),
            None => entry.expected.verdict == cls.verdict && entry.expected.params == cls.params,
        };
        r.assert(format!("catalog expectation for {}", entry.name), ok, format!("{:?}", entry.expected.verdict));
        expected = serde_json::to_value(entry.expected)?;
    }
    r.result = json!({
        "classification": cls,
        "parameters": cls.srg_params().map(|s| s.to_string()).or(cls.params.map(|p| p.to_string())),
        "vertex_transitive": vt,
        "spectral": spectral,
        "expected": expected,
    });
    Ok(r)
}

pub fn params_enumerate(k_max: usize, srg: bool) -> Result<Report> {
    let mut r = Report::new(vec!["params".into(), "enumerate".into(), format!("--k-max={k_max}")]);
    let tuples = enumerate_feasible(k_max);
    r.line(format!("{} feasible tuples with k <= {k_max}", tuples.len()));
    for t in &tuples {
        r.line(t.to_string());
    }
    let mut result = json!({ "k_max": k_max, "feasible": tuples.iter().map(|t| t.to_string()).collect::<Vec<_>>() });
    if srg {
        let s = enumerate_srg_feasible(k_max);
        r.line(format!("{} strongly regular tuples", s.len()));
        for t in &s {
            r.line(t.to_string());
        }
        result["srg_feasible"] = json!(s.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    }
    r.result = result;
    Ok(r)
}

pub fn params_check(n: usize, k: usize, lambda: usize, a: usize, c: usize, mu: Option<usize>) -> Result<Report> {
    let mut cmd = vec!["params".to_string(), "check".to_string()];
    cmd.extend([n, k, lambda, a, c].iter().map(|x| x.to_string()));
    cmd.extend(mu.map(|m| m.to_string()));
    let mut r = Report::new(cmd);
    let p = NeumaierParams::new(n, k, lambda, a, c);
    let report = match mu {
        Some(m) => srg_feasibility(&p.with_mu(m)),
        None => feasibility(&p),
    };
    match mu {
        Some(m) => r.line(format!("tuple {}", p.with_mu(m))),
        None => r.line(format!("tuple {p}")),
    }
    for c in &report.checks {
        r.assert(c.rule.name(), c.pass, format!("{} vs {}", c.lhs, c.rhs));
    }
    r.result = serde_json::to_value(&report)?;
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Markdown,
    Csv,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Yes"
    } else {
        "No"
    }
}

fn cayley_label(e: &CayleyEvidence) -> String {
    match e {
        CayleyEvidence::Construction { group } => format!("Yes (Cay over {group})"),
        CayleyEvidence::RegularSubgroup { order } => format!("Yes (regular subgroup of order {order})"),
        CayleyEvidence::NotChecked => "not checked".into(),
    }
}

/// Checks every table row, in parallel, returning rows in printed order.
pub fn table1_checks() -> Result<Vec<EntryCheck>> {
    let rows = table1();
    let checks: Vec<_> = rows.par_iter().map(check_entry).collect::<Result<_, _>>()?;
    Ok(checks)
}

pub fn table1_report(format: TableFormat) -> Result<Report> {
    let mut r = Report::new(words(&["table1"]));
    let checks = table1_checks()?;
    let header = ["Parameters", "Name", "Neumaier", "Cayley", "Vertex-transitive", "Match"];
    let rows: Vec<[String; 6]> = checks
        .iter()
        .map(|c| {
            let row = c.entry.table1.expect("table rows");
            [
                row.printed.to_string(),
                row.label.to_string(),
                yes_no(c.classification.is_neumaier()).to_string(),
                cayley_label(&c.cayley),
                yes_no(c.vertex_transitive).to_string(),
                yes_no(c.table_row_matches() == Some(true)).to_string(),
            ]
        })
        .collect();
    match format {
        TableFormat::Markdown => {
            r.line(format!("| {} |", header.join(" | ")));
            r.line(format!("|{}", "---|".repeat(header.len())));
            for row in &rows {
                r.line(format!("| {} |", row.join(" | ")));
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header)?;
            for row in &rows {
                w.write_record(row)?;
            }
            let text = String::from_utf8(w.into_inner()?)?;
            r.text.extend(text.lines().map(str::to_string));
        }
    }
    for c in &checks {
        let row = c.entry.table1.expect("table rows");
        r.assert(format!("row {} {}", row.printed, row.label), c.table_row_matches() == Some(true), "");
    }
    r.result = json!(checks
        .iter()
        .map(|c| {
            let row = c.entry.table1.expect("table rows");
            json!({
                "name": c.entry.name,
                "label": row.label,
                "printed": row.printed.to_string(),
                "expected": { "neumaier": row.neumaier, "cayley": row.cayley, "vertex_transitive": row.vertex_transitive },
                "actual": {
                    "verdict": c.classification.verdict,
                    "parameters": c.classification.srg_params().map(|p| p.to_string()),
                    "srg": c.classification.srg,
                    "neumaier": c.classification.is_neumaier(),
                    "vertex_transitive": c.vertex_transitive,
                    "cayley": c.cayley,
                },
                "matches": c.table_row_matches(),
            })
        })
        .collect::<Vec<_>>());
    Ok(r)
}

pub fn build(input: &ResolvedGraph) -> Result<Report> {
    let mut r = Report::new(words(&["build"]));
    let digest = InputDigest::of_resolved(input);
    r.line(digest.graph6.clone());
    r.result = json!({ "graph6": digest.graph6 });
    r.inputs.push(digest);
    r.bare = true;
    Ok(r)
}

pub fn cayley(group: &str, set: &str) -> Result<Report> {
    let mut r = Report::new(vec!["cayley".into(), group.into(), set.into()]);
    let g = FiniteGroup::parse(group)?;
    let s = ConnectionSet::parse(&g, set)?;
    let verdict = validate_connection_set(&g, &s);
    r.assert("identity-free", verdict.identity_free, "");
    r.assert("inverse-closed", verdict.inverse_closed, "");
    r.assert("generates the group", verdict.generates, format!("<S> has order {}", verdict.generated_order));
    if !r.passed {
        r.result = json!({ "group": g.label(), "connection_set": s.describe(&g), "validation": verdict });
        return Ok(r);
    }
    let graph = cayley_graph(&g, &s)?;
    let digest = InputDigest::of(format!("cayley:{}:{}", g.label(), s.describe(&g)), &graph);
    r.line(format!("graph6: {}", digest.graph6));
    r.inputs.push(digest);
    let cls = classify_graph(&graph)?;
    r.line(format!("verdict: {}", cls.verdict));
    if let Some(p) = cls.srg_params() {
        r.line(format!("parameters: {p}"));
    } else if let Some(p) = cls.params {
        r.line(format!("parameters: {p}"));
    }
    let spectral = neumaier_assertions(&mut r, &graph, &cls, Some(true));
    r.result = json!({
        "group": g.label(),
        "connection_set": s.describe(&g),
        "validation": verdict,
        "graph6": to_graph6(&graph),
        "classification": cls,
        "spectral": spectral,
    });
    Ok(r)
}

pub fn spectrum(input: &ResolvedGraph) -> Result<Report> {
    let g = &input.graph;
    let mut r = Report::new(words(&["spectrum"]));
    r.inputs.push(InputDigest::of_resolved(input));
    let p = char_poly(g)?;
    let spec = integer_spectrum(&p);
    let m = g.edge_count();
    r.line(format!("characteristic polynomial: {p}"));
    r.line(format!("spectrum: {}", spec.describe()));
    r.assert("trace is 0", p.trace() == 0.into(), p.trace().to_string());
    r.assert("trace of square is 2|E|", p.trace_of_square() == (2 * m).into(), p.trace_of_square().to_string());
    r.assert("factorisation reproduces polynomial", &spec.reconstruct() == p.polynomial(), "");
    let mut neumaier = json!(null);
    if g.is_connected() && !g.is_complete() {
        let cls = classify_graph(g)?;
        if let Some(params) = cls.params {
            let e = verify_neumaier_eigenvalues(&spec, &params);
            r.assert("eigenvalues k and c-a-1", e.passed(), format!("{:?}", e.expected));
            neumaier = json!(e);
        }
    }
    r.result = json!({
        "char_poly": p.to_string(),
        "coefficients": p.polynomial().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "integer_roots": spec.integer_roots.iter().map(|(r, m)| json!([r, m])).collect::<Vec<_>>(),
        "residual": spec.residual.to_string(),
        "integral": spec.is_integral(),
        "neumaier_eigenvalues": neumaier,
    });
    Ok(r)
}

pub fn aut(input: &ResolvedGraph) -> Result<Report> {
    let g = &input.graph;
    let mut r = Report::new(words(&["aut"]));
    r.inputs.push(InputDigest::of_resolved(input));
    let a = automorphism_group(g)?;
    r.line(format!("order: {}", a.order));
    r.line(format!("orbits: {}", a.orbits.len()));
    r.line(format!("generators: {}", a.generators.len()));
    let cycles: Vec<String> =
        a.generators.iter().map(|p| cycle_notation(&p.iter().map(|&x| x as u8).collect::<Vec<_>>())).collect();
    for c in &cycles {
        r.line(format!("  {c}"));
    }
    r.assert("generators are automorphisms", a.verify(g), "");
    r.assert("orbits recomputed", orbits(g.n(), &a.generators) == a.orbits, "");
    let product: num_bigint::BigUint = a.basic_orbit_lengths.iter().map(|&l| num_bigint::BigUint::from(l)).product();
    r.assert("order equals product of basic orbit lengths", product == a.order, "");
    let cert = neumaier_core::VertexTransitivity::from_generators(g.n(), a.generators.clone());
    if let Some(c) = &cert {
        r.assert("transitivity certificate", c.certifies(g), "");
    }
    r.line(format!("vertex-transitive: {}", cert.is_some()));
    r.result = json!({
        "order": a.order.to_string(),
        "generators": a.generators,
        "generators_cycles": cycles,
        "orbits": a.orbits,
        "base": a.base,
        "basic_orbit_lengths": a.basic_orbit_lengths,
        "vertex_transitive": cert.is_some(),
        "certificate": cert,
    });
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Expectation {
    Isomorphic,
    NotIsomorphic,
}

pub fn iso(g: &ResolvedGraph, h: &ResolvedGraph, expect: Option<Expectation>) -> Result<Report> {
    let mut r = Report::new(words(&["iso"]));
    r.inputs.push(InputDigest::of_resolved(g));
    r.inputs.push(InputDigest::of_resolved(h));
    let outcome = are_isomorphic(&g.graph, &h.graph)?;
    match &outcome {
        Isomorphism::Isomorphic(map) => {
            r.line("ISOMORPHIC");
            r.assert("bijection preserves adjacency", g.graph.is_isomorphism_to(&h.graph, map), "");
            if g.graph.n() <= MAX_SPECTRUM_VERTICES {
                r.assert("equal characteristic polynomials", char_poly(&g.graph)? == char_poly(&h.graph)?, "");
            }
        }
        Isomorphism::NotIsomorphic(reason) => r.line(format!("NOT_ISOMORPHIC ({reason:?})")),
    }
    if let Some(e) = expect {
        let ok = (e == Expectation::Isomorphic) == outcome.is_isomorphic();
        r.assert("expectation", ok, format!("{e:?}"));
    }
    r.result = json!({ "outcome": outcome });
    Ok(r)
}

/// Runs the circulant scan on the current rayon pool; the result does not depend on the pool size.
pub fn circulant_scan(max_n: usize) -> Result<(Report, CirculantScan)> {
    if max_n > MAX_CIRCULANT_ORDER {
        bail!("--max-n must be at most {MAX_CIRCULANT_ORDER}");
    }
    let mut r = Report::new(vec!["circulant-scan".into(), format!("--max-n={max_n}")]);
    let specs = all_specs(max_n);
    let outcomes: Vec<_> = specs.par_iter().map(scan_spec).collect();
    let scan = CirculantScan::from_outcomes(max_n, outcomes);
    r.line(format!("scanned {} connected circulants with n <= {max_n}", scan.scanned));
    r.line(format!("strongly regular: {}", scan.srg.len()));
    r.line(format!("trivial strongly regular Neumaier: {}", scan.trivial.len()));
    r.line(format!("nontrivial strongly regular Neumaier: {}", scan.nontrivial.len()));
    r.assert(
        "no nontrivial strongly regular Neumaier circulant",
        scan.nontrivial.is_empty(),
        scan.nontrivial.iter().map(|h| h.spec.to_string()).collect::<Vec<_>>().join(" "),
    );
    r.assert("trivial hits are exactly the complete multipartite ones", scan.trivial_are_multipartite(), "");
    let primes: Vec<usize> = (5..=max_n).filter(|&p| neumaier_core::catalog::is_prime(p) && p % 4 == 1).collect();
    for &p in &primes {
        let halves = paley_half_sets(p);
        let paley: Vec<_> = scan.srg.iter().filter(|h| h.spec.n == p && halves.contains(&h.spec.half)).collect();
        let irrational = paley.len() == 2 && paley.iter().all(|h| h.residual_degree > 0 && h.neumaier.is_none());
        r.assert(format!("Paley({p}) strongly regular with non-integer eigenvalues"), irrational, "");
    }
    let prime_nontrivial_all_paley = scan
        .srg
        .iter()
        .filter(|h| h.nontrivial && neumaier_core::catalog::is_prime(h.spec.n))
        .all(|h| paley_half_sets(h.spec.n).contains(&h.spec.half));
    r.assert("nontrivial strongly regular circulants of prime order are Paley", prime_nontrivial_all_paley, "");
    let hit = |h: &neumaier_core::circulant::SrgHit| {
        json!({
            "spec": h.spec.to_string(),
            "srg": [h.srg.n, h.srg.k, h.srg.lambda, h.srg.mu],
            "neumaier": h.neumaier.map(|p| p.to_string()),
            "residual_degree": h.residual_degree,
            "complete_multipartite": h.complete_multipartite,
        })
    };
    r.result = json!({
        "max_n": max_n,
        "scanned": scan.scanned,
        "complete": scan.complete,
        "nontrivial": scan.nontrivial.iter().map(hit).collect::<Vec<_>>(),
        "trivial": scan.trivial.iter().map(hit).collect::<Vec<_>>(),
        "srg": scan.srg.iter().map(hit).collect::<Vec<_>>(),
    });
    Ok((r, scan))
}

pub fn equitable(input: &ResolvedGraph, clique: Option<Vec<usize>>, base: Option<usize>) -> Result<Report> {
    let g = &input.graph;
    let mut r = Report::new(words(&["equitable"]));
    r.inputs.push(InputDigest::of_resolved(input));
    let cls = classify_graph(g)?;
    let Some(p) = cls.params else {
        r.assert("graph is Neumaier", false, cls.verdict.to_string());
        return Ok(r);
    };
    let cliques: Vec<VertexSet> = match clique {
        Some(vs) => vec![vs.into_iter().collect()],
        None => cls.cliques.cliques.iter().map(|c| c.clique).collect(),
    };
    let sizes = [1, p.c - 1, p.k + 1 - p.c, p.n - p.k - 1];
    let mut parts = Vec::new();
    let (mut forced_ok, mut sizes_ok, mut sums_ok) = (true, true, true);
    let (mut constant, mut non_constant) = (0usize, 0usize);
    for c in &cliques {
        let bases: Vec<usize> = match base {
            Some(b) => vec![b],
            None => c.iter().collect(),
        };
        for b in bases {
            let part = equitable_partition(g, &p, *c, b)?;
            forced_ok &= part.forced_rows_match();
            sizes_ok &= part.part_sizes() == sizes;
            if part.equitable {
                constant += 1;
                sums_ok &= part.quotient().is_some_and(|q| q.iter().all(|row| row.iter().sum::<usize>() == p.k));
            } else {
                non_constant += 1;
            }
            parts.push(part);
        }
    }
    r.line(format!("parameters: {p}"));
    r.line(format!("partitions: {} ({constant} equitable, {non_constant} not)", parts.len()));
    if let Some(q) = parts.iter().find_map(|x| x.quotient()) {
        for row in q {
            r.line(format!("  {row:?}"));
        }
    }
    r.assert("forced quotient rows", forced_ok, "");
    r.assert("part sizes 1, c-1, k-c+1, n-k-1", sizes_ok, format!("{sizes:?}"));
    r.assert("equitable rows sum to k", sums_ok, "");
    let srg = cls.srg.is_some();
    let mut constancy = json!(null);
    if g.n() <= MAX_AUT_VERTICES {
        let a = automorphism_group(g)?;
        if let Some(cert) = neumaier_core::VertexTransitivity::from_generators(g.n(), a.generators) {
            let v = srg_iff_constancy(g, &cert)?;
            r.assert("strongly regular iff far-part count constant", v.consistent(), format!("{v:?}"));
            constancy = json!(v);
        }
    }
    r.result = json!({
        "parameters": p.to_string(),
        "strongly_regular": srg,
        "partitions": parts,
        "constancy": constancy,
    });
    Ok(r)
}
