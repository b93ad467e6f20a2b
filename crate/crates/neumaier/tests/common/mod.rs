//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's search code; only `Graph` is used as a container.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use neumaier_core::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Graphs on `n <= 8` vertices as adjacency bitmasks, one per row.
pub type Small = Vec<u8>;

pub fn to_graph(adj: &Small) -> Graph {
    let n = adj.len();
    Graph::from_fn(n, |u, v| adj[u] >> v & 1 == 1).unwrap()
}

fn edge_code(adj: &Small, order: &[usize]) -> u32 {
    let mut code = 0u32;
    let n = order.len();
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | (adj[order[i]] >> order[j] & 1) as u32;
        }
    }
    code
}

/// Colour refinement with colours named by sorted signatures, so the colouring
/// does not depend on labels.
fn refined_colours(adj: &Small) -> Vec<usize> {
    let n = adj.len();
    let mut colour = vec![0usize; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let index: BTreeMap<&(usize, Vec<usize>), usize> = distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| index[s]).collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = next.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if after == before {
            return colour;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Canonical code: vertices ordered by refined colour, minimum over orders within cells.
pub fn canonical(adj: &Small) -> (usize, u32) {
    let n = adj.len();
    let colour = refined_colours(adj);
    let ncol = colour.iter().max().map_or(0, |&c| c + 1);
    let cells: Vec<Vec<usize>> = (0..ncol).map(|c| (0..n).filter(|&v| colour[v] == c).collect()).collect();
    let options: Vec<Vec<Vec<usize>>> = cells.iter().map(|c| permutations(c)).collect();
    let mut best = u32::MAX;
    let mut idx = vec![0usize; cells.len()];
    loop {
        let order: Vec<usize> = idx.iter().zip(&options).flat_map(|(&i, o)| o[i].iter().copied()).collect();
        best = best.min(edge_code(adj, &order));
        let mut d = 0;
        loop {
            if d == idx.len() {
                return (n, best);
            }
            idx[d] += 1;
            if idx[d] < options[d].len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// One representative per isomorphism class, for each order `0..=max_n`.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Small>> {
    let mut levels: Vec<Vec<Small>> = vec![vec![Vec::new()]];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 1] {
            for mask in 0u16..(1 << (n - 1)) {
                let mut h = g.clone();
                for (v, row) in h.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                h.push(mask as u8);
                if seen.insert(canonical(&h)) {
                    next.push(h);
                }
            }
        }
        levels.push(next);
    }
    levels
}

pub fn is_connected(adj: &Small) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let mut seen = 1u16;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if adj[v] >> u & 1 == 1 && seen >> u & 1 == 0 {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Number of graphs and connected graphs on `n` vertices.
pub const OEIS_GRAPHS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
pub const OEIS_CONNECTED: [usize; 9] = [0, 1, 1, 2, 6, 21, 112, 853, 11117];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    NotEdgeRegular,
    EdgeRegularNoRegularClique,
    Strictly,
    StronglyRegular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub verdict: OracleVerdict,
    /// (n, k, lambda) when edge-regular.
    pub edge_regular: Option<(usize, usize, usize)>,
    pub mu: Option<usize>,
    /// Every regular clique as (bitmask, size, nexus).
    pub cliques: Vec<(u128, usize, usize)>,
}

fn common(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.n()).filter(|&w| g.is_adjacent(u, w) && g.is_adjacent(v, w)).count()
}

/// Exhaustive oracle: every proper vertex subset is tested as a clique with constant nexus `a >= 1`.
pub fn oracle(g: &Graph) -> OracleResult {
    let n = g.n();
    assert!(n <= 16, "oracle is exponential");
    let k = g.degree(0);
    let regular = (0..n).all(|v| g.degree(v) == k);
    let mut lambdas = BTreeSet::new();
    let mut mus = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.is_adjacent(u, v) {
                lambdas.insert(common(g, u, v));
            } else {
                mus.insert(common(g, u, v));
            }
        }
    }
    if !regular || lambdas.len() != 1 {
        return OracleResult { verdict: OracleVerdict::NotEdgeRegular, edge_regular: None, mu: None, cliques: vec![] };
    }
    let lambda = *lambdas.first().unwrap();
    let mu = if mus.len() == 1 { mus.first().copied() } else { None };
    let mut cliques = Vec::new();
    for mask in 1u32..(1 << n) - 1 {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = members.iter().all(|&u| members.iter().all(|&v| u == v || g.is_adjacent(u, v)));
        if !clique {
            continue;
        }
        let counts: BTreeSet<usize> = (0..n)
            .filter(|&v| mask >> v & 1 == 0)
            .map(|v| members.iter().filter(|&&u| g.is_adjacent(u, v)).count())
            .collect();
        if counts.len() == 1 && *counts.first().unwrap() >= 1 {
            cliques.push((mask as u128, members.len(), *counts.first().unwrap()));
        }
    }
    cliques.sort();
    let verdict = match (cliques.is_empty(), mu.is_some()) {
        (true, _) => OracleVerdict::EdgeRegularNoRegularClique,
        (false, true) => OracleVerdict::StronglyRegular,
        (false, false) => OracleVerdict::Strictly,
    };
    OracleResult { verdict, edge_regular: Some((n, k, lambda)), mu, cliques }
}

/// Structural test for `K_{k,k}` by two-colouring.
pub fn is_complete_bipartite_balanced(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if g.is_adjacent(u, v) {
                match side[u] {
                    None => {
                        side[u] = Some(!side[v].unwrap());
                        stack.push(u);
                    }
                    Some(s) if s == side[v].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    if side.iter().any(Option::is_none) {
        return false;
    }
    let left = side.iter().filter(|s| **s == Some(false)).count();
    let all_cross = (0..n).all(|u| (0..n).all(|v| side[u] == side[v] || g.is_adjacent(u, v)));
    2 * left == n && all_cross
}

/// Integer eigenvalue test by exact determinant of `A - x I` (Bareiss elimination).
pub fn is_eigenvalue(g: &Graph, x: i64) -> bool {
    let n = g.n();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(if i == j { -x } else { g.is_adjacent(i, j) as i64 })).collect())
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => m.swap(k, r),
                None => return true,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].is_zero()
}
