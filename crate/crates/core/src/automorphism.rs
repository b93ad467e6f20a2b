//! Automorphism groups, vertex-transitivity certificates and pairwise isomorphism.
//!
//! Search is individualize-and-refine over equitable colourings. Generators are
//! collected level by level along a base, deepest level first, so the group
//! order is the product of the basic orbit lengths.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::graph::Graph;
use crate::spectrum::char_poly;

/// Largest graph accepted by the search.
pub const MAX_AUT_VERTICES: usize = 40;

pub type Permutation = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutError {
    TooLarge { n: usize },
}

impl fmt::Display for AutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutError::TooLarge { n } => {
                write!(f, "graph has {n} vertices; automorphism search supports at most {MAX_AUT_VERTICES}")
            }
        }
    }
}

impl core::error::Error for AutError {}

fn require_size(g: &Graph) -> Result<(), AutError> {
    if g.n() > MAX_AUT_VERTICES {
        return Err(AutError::TooLarge { n: g.n() });
    }
    Ok(())
}

/// Colour of each vertex; colours are `0..cells`, ordered invariantly.
type Colouring = Vec<usize>;

fn normalise<K: Ord + Clone>(keys: &[K]) -> Colouring {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter().map(|k| distinct.binary_search(k).expect("key present")).collect()
}

fn cell_count(c: &Colouring) -> usize {
    c.iter().max().map_or(0, |m| m + 1)
}

/// Colour refinement until the partition is equitable.
fn refine(g: &Graph, mut colours: Colouring) -> Colouring {
    let n = g.n();
    loop {
        let cells = cell_count(&colours);
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0; cells];
                for w in g.neighbours(v).iter() {
                    counts[colours[w]] += 1;
                }
                (colours[v], counts)
            })
            .collect();
        let next = normalise(&keys);
        if cell_count(&next) == cells {
            return next;
        }
        colours = next;
    }
}

fn individualise(colours: &Colouring, v: usize) -> Colouring {
    let keys: Vec<(usize, bool)> = colours.iter().enumerate().map(|(w, &c)| (c, w != v)).collect();
    normalise(&keys)
}

fn target_cell(colours: &Colouring) -> Option<usize> {
    let mut sizes = vec![0usize; cell_count(colours)];
    for &c in colours {
        sizes[c] += 1;
    }
    sizes.iter().position(|&s| s > 1)
}

fn cell_members(colours: &Colouring, cell: usize) -> impl Iterator<Item = usize> + '_ {
    colours.iter().enumerate().filter(move |&(_, &c)| c == cell).map(|(v, _)| v)
}

/// Cell sizes plus the quotient matrix of an equitable colouring.
fn shape(g: &Graph, colours: &Colouring) -> Vec<usize> {
    let cells = cell_count(colours);
    let mut reps = vec![usize::MAX; cells];
    let mut sizes = vec![0; cells];
    for (v, &c) in colours.iter().enumerate() {
        sizes[c] += 1;
        if reps[c] == usize::MAX {
            reps[c] = v;
        }
    }
    let mut out = sizes;
    for &r in &reps {
        let mut counts = vec![0; cells];
        for w in g.neighbours(r).iter() {
            counts[colours[w]] += 1;
        }
        out.extend(counts);
    }
    out
}

/// The first path of the search tree: colourings and base points.
struct Path {
    colourings: Vec<Colouring>,
    shapes: Vec<Vec<usize>>,
    base: Vec<usize>,
}

impl Path {
    fn leftmost(g: &Graph, root: Colouring) -> Path {
        let mut path = Path { shapes: vec![shape(g, &root)], colourings: vec![root], base: Vec::new() };
        loop {
            let last = path.colourings.last().expect("non-empty");
            let Some(cell) = target_cell(last) else { break };
            let b = cell_members(last, cell).next().expect("cell non-empty");
            let next = refine(g, individualise(last, b));
            path.base.push(b);
            path.shapes.push(shape(g, &next));
            path.colourings.push(next);
        }
        path
    }

    fn leaf(&self) -> &Colouring {
        self.colourings.last().expect("non-empty")
    }
}

/// Backtracks below `colours` in `h` for a leaf whose induced map from `g`'s
/// first leaf is an isomorphism `g -> h`.
fn search(g: &Graph, h: &Graph, colours: Colouring, depth: usize, path: &Path) -> Option<Permutation> {
    if depth >= path.shapes.len() || shape(h, &colours) != path.shapes[depth] {
        return None;
    }
    match target_cell(&colours) {
        None => {
            let leaf = path.leaf();
            let mut by_colour = vec![0; colours.len()];
            for (v, &c) in colours.iter().enumerate() {
                by_colour[c] = v;
            }
            let map: Permutation = leaf.iter().map(|&c| by_colour[c]).collect();
            g.is_isomorphism_to(h, &map).then_some(map)
        }
        Some(cell) => {
            let members: Vec<usize> = cell_members(&colours, cell).collect();
            members.into_iter().find_map(|v| search(g, h, refine(h, individualise(&colours, v)), depth + 1, path))
        }
    }
}

/// Orbits of the group generated by `gens`, each listed ascending, ordered by least element.
pub fn orbits(n: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in gens {
        for (v, &w) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = out.len();
            out.push(Vec::new());
        }
        out[index[r]].push(v);
    }
    out
}

fn orbit_of(point: usize, gens: &[Permutation]) -> Vec<bool> {
    let n = gens.first().map_or(point + 1, Vec::len);
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for p in gens {
            let y = p[x];
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AutReport {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
    pub orbits: Vec<Vec<usize>>,
    pub base: Vec<usize>,
    /// Length of each basic orbit, one per base point.
    pub basic_orbit_lengths: Vec<usize>,
}

impl AutReport {
    pub fn is_transitive(&self) -> bool {
        self.orbits.len() <= 1
    }

    /// Every generator preserves adjacency.
    pub fn verify(&self, g: &Graph) -> bool {
        self.generators.iter().all(|p| g.is_automorphism(p))
    }
}

pub fn automorphism_group(g: &Graph) -> Result<AutReport, AutError> {
    require_size(g)?;
    let n = g.n();
    let path = Path::leftmost(g, refine(g, vec![0; n]));
    let mut gens: Vec<Permutation> = Vec::new();
    let mut lengths = vec![0; path.base.len()];
    for level in (0..path.base.len()).rev() {
        let b = path.base[level];
        let node = &path.colourings[level];
        let cell = node[b];
        let mut orbit = if gens.is_empty() { single(n, b) } else { orbit_of(b, &gens) };
        let candidates: Vec<usize> = cell_members(node, cell).collect();
        for v in candidates {
            if orbit[v] {
                continue;
            }
            if let Some(p) = search(g, g, refine(g, individualise(node, v)), level + 1, &path) {
                gens.push(p);
                orbit = orbit_of(b, &gens);
            }
        }
        lengths[level] = orbit.iter().filter(|&&x| x).count();
    }
    let order = lengths.iter().fold(BigUint::from(1u32), |acc, &l| acc * BigUint::from(l));
    Ok(AutReport { orbits: orbits(n, &gens), generators: gens, order, base: path.base, basic_orbit_lengths: lengths })
}

fn single(n: usize, b: usize) -> Vec<bool> {
    let mut v = vec![false; n];
    v[b] = true;
    v
}

/// Proof that a graph is vertex-transitive: automorphisms and, for each vertex
/// `v`, a word in them carrying vertex 0 to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VertexTransitivity {
    pub generators: Vec<Permutation>,
    /// `words[v]` lists generator indices, applied left to right starting at vertex 0.
    pub words: Vec<Vec<usize>>,
}

impl VertexTransitivity {
    /// Builds shortlex-least words by breadth-first search; `None` if some vertex is unreachable.
    pub fn from_generators(n: usize, generators: Vec<Permutation>) -> Option<Self> {
        if n == 0 {
            return Some(VertexTransitivity { generators, words: Vec::new() });
        }
        let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (i, p) in generators.iter().enumerate() {
                let y = p[x];
                if words[y].is_none() {
                    let mut w = words[x].clone().expect("visited");
                    w.push(i);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        let words = words.into_iter().collect::<Option<Vec<_>>>()?;
        Some(VertexTransitivity { generators, words })
    }

    /// Every generator is an automorphism of `g` and every word reaches its vertex.
    pub fn certifies(&self, g: &Graph) -> bool {
        let n = g.n();
        self.words.len() == n
            && self.generators.iter().all(|p| g.is_automorphism(p))
            && self
                .words
                .iter()
                .enumerate()
                .all(|(v, w)| w.iter().try_fold(0usize, |x, &i| self.generators.get(i).map(|p| p[x])) == Some(v))
    }
}

/// Certificate from an automorphism search, or `None` if there are several orbits.
pub fn is_vertex_transitive(g: &Graph) -> Result<Option<VertexTransitivity>, AutError> {
    let report = automorphism_group(g)?;
    Ok(VertexTransitivity::from_generators(g.n(), report.generators))
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum NonIsomorphism {
    VertexCount,
    EdgeCount,
    DegreeSequence,
    Spectrum,
    /// Equitable refinements have different shapes.
    Refinement,
    /// Every leaf of the search tree was tried.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Isomorphism {
    /// `map[v]` in the second graph is the image of `v` in the first.
    Isomorphic(Permutation),
    NotIsomorphic(NonIsomorphism),
}

impl Isomorphism {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Isomorphism::Isomorphic(_))
    }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Isomorphism, AutError> {
    require_size(g)?;
    require_size(h)?;
    use Isomorphism::NotIsomorphic;
    if g.n() != h.n() {
        return Ok(NotIsomorphic(NonIsomorphism::VertexCount));
    }
    if g.edge_count() != h.edge_count() {
        return Ok(NotIsomorphic(NonIsomorphism::EdgeCount));
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..x.n()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(NotIsomorphic(NonIsomorphism::DegreeSequence));
    }
    if let (Ok(pg), Ok(ph)) = (char_poly(g), char_poly(h)) {
        if pg != ph {
            return Ok(NotIsomorphic(NonIsomorphism::Spectrum));
        }
    }
    let n = g.n();
    let path = Path::leftmost(g, refine(g, vec![0; n]));
    let root_h = refine(h, vec![0; n]);
    if shape(h, &root_h) != path.shapes[0] {
        return Ok(NotIsomorphic(NonIsomorphism::Refinement));
    }
    Ok(match search(g, h, root_h, 0, &path) {
        Some(map) => Isomorphism::Isomorphic(map),
        None => NotIsomorphic(NonIsomorphism::Exhausted),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_fn(6, |u, v| (u < 3) != (v < 3)).unwrap()
    }

    /// Counts automorphisms by trying every permutation (Heap's algorithm).
    fn brute_order(g: &Graph) -> usize {
        let n = g.n();
        let mut p: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut count = usize::from(g.is_automorphism(&p));
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    p.swap(0, i);
                } else {
                    p.swap(c[i], i);
                }
                count += usize::from(g.is_automorphism(&p));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        count
    }

    #[test]
    fn small_orders_match_brute_force() {
        let graphs = [cycle(4), cycle(5), cycle(6), k33(), Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()];
        for g in &graphs {
            let r = automorphism_group(g).unwrap();
            assert!(r.verify(g));
            assert_eq!(r.order, BigUint::from(brute_order(g)));
        }
    }

    #[test]
    fn known_orders() {
        assert_eq!(automorphism_group(&cycle(4)).unwrap().order, BigUint::from(8u32));
        assert_eq!(automorphism_group(&k33()).unwrap().order, BigUint::from(72u32));
        let p = automorphism_group(&petersen()).unwrap();
        assert_eq!(p.order, BigUint::from(120u32));
        assert!(p.is_transitive());
    }

    #[test]
    fn path_is_not_transitive() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(is_vertex_transitive(&p3).unwrap().is_none());
        assert_eq!(automorphism_group(&p3).unwrap().orbits, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn certificate_checks() {
        let g = petersen();
        let cert = is_vertex_transitive(&g).unwrap().unwrap();
        assert!(cert.certifies(&g));
        assert!(cert.words[0].is_empty());
        let mut bad = cert.clone();
        bad.words.swap(1, 2);
        assert!(!bad.certifies(&g));
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = cycle(4);
        let k22 = Graph::from_fn(4, |u, v| (u < 2) != (v < 2)).unwrap();
        match are_isomorphic(&c4, &k22).unwrap() {
            Isomorphism::Isomorphic(m) => assert!(c4.is_isomorphism_to(&k22, &m)),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            are_isomorphic(&cycle(6), &Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap())
                .unwrap(),
            Isomorphism::NotIsomorphic(NonIsomorphism::Spectrum)
        );
        assert_eq!(
            are_isomorphic(&cycle(5), &cycle(6)).unwrap(),
            Isomorphism::NotIsomorphic(NonIsomorphism::VertexCount)
        );
    }

    #[test]
    fn size_limit() {
        let big = cycle(41);
        assert_eq!(automorphism_group(&big), Err(AutError::TooLarge { n: 41 }));
    }

    #[test]
    fn orbits_union_find() {
        let gens = vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]];
        assert_eq!(orbits(4, &gens), vec![vec![0, 1], vec![2, 3]]);
    }
}
