//! Exhaustive scan of circulant graphs for strongly regular Neumaier graphs.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::bits::VertexSet;
use crate::graph::{Graph, SrgParams};
use crate::neumaier::{classify_with, SearchMode};
use crate::params::SrgNeumaierParams;
use crate::spectrum::{char_poly, integer_spectrum};

/// Largest order accepted by the scan.
pub const MAX_CIRCULANT_ORDER: usize = 30;

/// `Cay(Z_n, ±half)` for a non-empty `half ⊆ {1, ..., n/2}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CirculantSpec {
    pub n: usize,
    pub half: Vec<usize>,
}

impl CirculantSpec {
    /// Symbols `±s` for `s` in the half-set, ascending.
    pub fn connection_set(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.half.iter().flat_map(|&s| [s, self.n - s]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.half.iter().fold(self.n, |g, &s| g.gcd(&s)) == 1
    }

    pub fn graph(&self) -> Graph {
        let set: VertexSet = self.connection_set().into_iter().collect();
        let n = self.n;
        Graph::from_fn(n, |u, v| set.contains((v + n - u) % n)).expect("circulant fits")
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}(", self.n)?;
        for (i, s) in self.half.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Connected circulants on `Z_n`, one per half-set, in increasing bitmask order.
pub fn enumerate_circulants(n: usize) -> impl Iterator<Item = CirculantSpec> {
    let m = n / 2;
    let count: u32 = if n >= 2 { 1 << m } else { 1 };
    (1..count)
        .map(move |mask| CirculantSpec { n, half: (1..=m).filter(|s| mask >> (s - 1) & 1 == 1).collect() })
        .filter(CirculantSpec::is_connected)
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SrgHit {
    pub spec: CirculantSpec,
    pub srg: SrgParams,
    /// `0 < μ < k`.
    pub nontrivial: bool,
    pub neumaier: Option<SrgNeumaierParams>,
    /// Degree of the characteristic-polynomial factor without integer roots.
    pub residual_degree: usize,
    pub complete_multipartite: bool,
}

/// Outcome for one specification.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum SpecOutcome {
    Complete,
    NotStronglyRegular,
    StronglyRegular(SrgHit),
}

pub fn scan_spec(spec: &CirculantSpec) -> SpecOutcome {
    let g = spec.graph();
    if g.is_complete() {
        return SpecOutcome::Complete;
    }
    let Some(srg) = g.srg_params() else { return SpecOutcome::NotStronglyRegular };
    let neumaier = classify_with(&g, SearchMode::FirstWitness).expect("connected and not complete").srg_params();
    let residual_degree = char_poly(&g)
        .map(|p| integer_spectrum(&p).residual.degree().unwrap_or(0))
        .expect("circulant orders are within spectrum limits");
    SpecOutcome::StronglyRegular(SrgHit {
        spec: spec.clone(),
        srg,
        nontrivial: srg.mu > 0 && srg.mu < srg.k,
        neumaier,
        residual_degree,
        complete_multipartite: g.is_complete_multipartite(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CirculantScan {
    pub max_n: usize,
    pub scanned: usize,
    pub complete: usize,
    /// Nontrivial strongly regular Neumaier circulants.
    pub nontrivial: Vec<SrgHit>,
    /// Strongly regular Neumaier circulants with `μ = k`.
    pub trivial: Vec<SrgHit>,
    /// Every strongly regular circulant encountered.
    pub srg: Vec<SrgHit>,
}

impl CirculantScan {
    /// Merges outcomes in any order; the result is sorted by specification.
    pub fn from_outcomes(max_n: usize, outcomes: impl IntoIterator<Item = SpecOutcome>) -> Self {
        let mut scan = CirculantScan { max_n, ..Default::default() };
        for o in outcomes {
            scan.scanned += 1;
            match o {
                SpecOutcome::Complete => scan.complete += 1,
                SpecOutcome::NotStronglyRegular => {}
                SpecOutcome::StronglyRegular(hit) => {
                    if hit.neumaier.is_some() {
                        if hit.nontrivial {
                            scan.nontrivial.push(hit.clone());
                        } else {
                            scan.trivial.push(hit.clone());
                        }
                    }
                    scan.srg.push(hit);
                }
            }
        }
        for list in [&mut scan.nontrivial, &mut scan.trivial, &mut scan.srg] {
            list.sort_by(|a, b| a.spec.cmp(&b.spec));
        }
        scan
    }

    /// Trivial hits are exactly the complete multipartite strongly regular circulants.
    pub fn trivial_are_multipartite(&self) -> bool {
        let multipartite: Vec<&CirculantSpec> =
            self.srg.iter().filter(|h| h.complete_multipartite).map(|h| &h.spec).collect();
        let trivial: Vec<&CirculantSpec> = self.trivial.iter().map(|h| &h.spec).collect();
        multipartite == trivial
    }
}

/// All specifications with `3 <= n <= max_n`.
pub fn all_specs(max_n: usize) -> Vec<CirculantSpec> {
    (3..=max_n.min(MAX_CIRCULANT_ORDER)).flat_map(enumerate_circulants).collect()
}

/// Serial scan over every connected circulant of order at most `max_n`.
pub fn scan_srg_neumaier_circulants(max_n: usize) -> CirculantScan {
    let max_n = max_n.min(MAX_CIRCULANT_ORDER);
    CirculantScan::from_outcomes(max_n, all_specs(max_n).iter().map(scan_spec))
}

/// The half-sets of the two Paley connection sets on `Z_p` (residues and non-residues).
pub fn paley_half_sets(p: usize) -> [Vec<usize>; 2] {
    let qr = crate::catalog::quadratic_residues(p);
    let half = |set: &[usize]| set.iter().copied().filter(|&s| s <= p / 2).collect::<Vec<_>>();
    let nqr: Vec<usize> = (1..p).filter(|x| !qr.contains(x)).collect();
    [half(&qr), half(&nqr)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let four: Vec<_> = enumerate_circulants(4).map(|s| s.half).collect();
        assert_eq!(four, [alloc::vec![1], alloc::vec![1, 2]]);
        let five: Vec<_> = enumerate_circulants(5).map(|s| s.half).collect();
        assert_eq!(five, [alloc::vec![1], alloc::vec![2], alloc::vec![1, 2]]);
        assert!(enumerate_circulants(13).any(|s| s.half == [1, 3, 4]));
    }

    #[test]
    fn connection_set_is_symmetric() {
        let s = CirculantSpec { n: 8, half: alloc::vec![1, 4] };
        assert_eq!(s.connection_set(), [1, 4, 7]);
        assert_eq!(s.to_string(), "C8(1,4)");
    }

    #[test]
    fn k333_is_trivial() {
        let s = CirculantSpec { n: 9, half: alloc::vec![1, 2, 4] };
        match scan_spec(&s) {
            SpecOutcome::StronglyRegular(hit) => {
                assert!(!hit.nontrivial && hit.complete_multipartite);
                assert_eq!(hit.neumaier.map(|p| (p.a, p.c)), Some((2, 3)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn paley13_irrational() {
        let s = CirculantSpec { n: 13, half: alloc::vec![1, 3, 4] };
        match scan_spec(&s) {
            SpecOutcome::StronglyRegular(hit) => {
                assert!(hit.nontrivial && hit.neumaier.is_none());
                assert_eq!(hit.residual_degree, 12);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(paley_half_sets(13), [alloc::vec![1, 3, 4], alloc::vec![2, 5, 6]]);
    }

    #[test]
    fn small_scan() {
        let scan = scan_srg_neumaier_circulants(12);
        assert!(scan.nontrivial.is_empty());
        assert!(scan.trivial_are_multipartite());
        assert!(!scan.trivial.is_empty());
    }
}
