//! Exact integer spectra.
//!
//! Characteristic polynomials are computed with the Faddeev–LeVerrier
//! recurrence over arbitrary-precision integers. Every division in the
//! recurrence is exact, so no rounding ever enters a verdict.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::Graph;
use crate::params::{NeumaierParams, SrgNeumaierParams};

/// Largest graph accepted by [`char_poly`].
pub const MAX_SPECTRUM_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    TooLarge { n: usize },
    NotSquare,
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::TooLarge { n } => {
                write!(f, "{n} vertices exceeds the spectrum limit of {MAX_SPECTRUM_VERTICES}")
            }
            SpectrumError::NotSquare => f.write_str("matrix is not square"),
        }
    }
}

impl core::error::Error for SpectrumError {}

/// Dense integer polynomial, coefficients in ascending order of degree with
/// no trailing zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Polynomial { coeffs: alloc::vec![BigInt::one()] }
    }

    /// `x - r`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[-root, 1])
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// Synthetic division by `x - r`: returns the quotient and the remainder `p(r)`.
    pub fn div_linear(&self, r: &BigInt) -> (Polynomial, BigInt) {
        if self.coeffs.is_empty() {
            return (self.clone(), BigInt::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut q = alloc::vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let cur = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return (Polynomial::new(q), cur);
            }
            q[i - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }

    /// Upper bound on the absolute value of every complex root (Fujiwara).
    pub fn root_bound(&self) -> BigInt {
        let Some(d) = self.degree() else { return BigInt::zero() };
        if d == 0 {
            return BigInt::zero();
        }
        let lead = self.coeffs[d].abs();
        let mut best = BigInt::zero();
        for i in 1..=d {
            let mut c = self.coeffs[d - i].abs();
            if i == d {
                c = (c + 1u32) / 2u32;
            }
            // ceil((|c|/|lead|)^(1/i))
            let ratio = c.div_ceil(&lead);
            let r = ratio.nth_root(i as u32);
            let r = if r.pow(i as u32) < ratio { r + 1 } else { r };
            if r > best {
                best = r;
            }
        }
        best * 2
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_char('-')?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_char('x')?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic characteristic polynomial of an adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    poly: Polynomial,
    /// Known bound on the absolute value of the eigenvalues (the maximum degree for graphs).
    eigen_bound: Option<u64>,
}

impl CharPoly {
    /// Wraps a monic integer polynomial. Returns `None` if it is not monic.
    pub fn from_polynomial(poly: Polynomial) -> Option<Self> {
        poly.is_monic().then_some(CharPoly { poly, eigen_bound: None })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// Sum of the eigenvalues: minus the coefficient of `x^(n-1)`.
    pub fn trace(&self) -> BigInt {
        -self.poly.coeff(self.degree().saturating_sub(1))
    }

    /// Sum of squared eigenvalues, from the two leading non-trivial coefficients.
    pub fn trace_of_square(&self) -> BigInt {
        let n = self.degree();
        let e1 = -self.poly.coeff(n.saturating_sub(1));
        let e2 = if n >= 2 { self.poly.coeff(n - 2) } else { BigInt::zero() };
        &e1 * &e1 - e2 * 2
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Characteristic polynomial `det(xI - A)` of the adjacency matrix of `g`.
pub fn char_poly(g: &Graph) -> Result<CharPoly, SpectrumError> {
    let n = g.n();
    if n > MAX_SPECTRUM_VERTICES {
        return Err(SpectrumError::TooLarge { n });
    }
    // A * M only needs row sums over neighbourhoods.
    let poly = faddeev_leverrier(n, |m| {
        (0..n)
            .map(|i| {
                let mut row = alloc::vec![BigInt::zero(); n];
                for l in g.neighbours(i).iter() {
                    for (acc, x) in row.iter_mut().zip(&m[l]) {
                        *acc += x;
                    }
                }
                row
            })
            .collect()
    });
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    Ok(CharPoly { poly, eigen_bound: Some(max_degree as u64) })
}

/// Characteristic polynomial of a square integer matrix (rows).
pub fn char_poly_of_matrix(a: &[Vec<i64>]) -> Result<CharPoly, SpectrumError> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(SpectrumError::NotSquare);
    }
    let poly = faddeev_leverrier(n, |m| {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|l| &m[l][j] * a[i][l]).sum::<BigInt>()).collect()).collect()
    });
    Ok(CharPoly { poly, eigen_bound: None })
}

fn faddeev_leverrier<F>(n: usize, mul_a: F) -> Polynomial
where
    F: Fn(&[Vec<BigInt>]) -> Vec<Vec<BigInt>>,
{
    let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    for step in 1..=n {
        let mut am = mul_a(&m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (c, rem) = (-trace).div_rem(&BigInt::from(step));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c;
        }
        coeffs[n - step] = c;
        m = am;
    }
    Polynomial::new(coeffs)
}

/// Integer eigenvalues with multiplicities and the leftover factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub integer_roots: BTreeMap<i64, usize>,
    /// Monic factor with no integer roots; `1` when the spectrum is integral.
    pub residual: Polynomial,
}

impl SpectrumReport {
    pub fn is_integral(&self) -> bool {
        self.residual.degree() == Some(0)
    }

    pub fn contains(&self, eigenvalue: i64) -> bool {
        self.integer_roots.contains_key(&eigenvalue)
    }

    pub fn multiplicity(&self, eigenvalue: i64) -> usize {
        self.integer_roots.get(&eigenvalue).copied().unwrap_or(0)
    }

    /// Expands `residual * prod (x - r)^m`.
    pub fn reconstruct(&self) -> Polynomial {
        self.integer_roots.iter().fold(self.residual.clone(), |acc, (&r, &m)| acc.mul(&Polynomial::linear(r).pow(m)))
    }

    /// Compact text form, e.g. `{6^1, 2^6, -2^9}`, roots in descending order.
    pub fn describe(&self) -> String {
        let mut s = String::from("{");
        for (i, (r, m)) in self.integer_roots.iter().rev().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{r}^{m}");
        }
        s.push('}');
        if !self.is_integral() {
            let _ = write!(s, " * ({})", self.residual);
        }
        s
    }
}

/// Strips every integer root from a monic polynomial.
///
/// Candidates are the divisors of the constant term (after removing the root
/// zero) inside the root bound; multiplicities come from repeated exact division.
pub fn integer_spectrum(p: &CharPoly) -> SpectrumReport {
    let mut roots = BTreeMap::new();
    let mut rest = p.poly.clone();

    let zeros = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.insert(0, zeros);
        rest = Polynomial::new(rest.coeffs[zeros..].to_vec());
    }

    let mut bound = rest.root_bound();
    if let Some(b) = p.eigen_bound {
        bound = bound.min(BigInt::from(b));
    }
    let bound = bound.to_i64().unwrap_or(i64::MAX);
    let mut r: i64 = 1;
    while r <= bound && rest.degree().is_some_and(|d| d > 0) {
        for cand in [r, -r] {
            let cand_big = BigInt::from(cand);
            if !rest.coeff(0).is_multiple_of(&cand_big) {
                continue;
            }
            let mut mult = 0;
            loop {
                let (q, rem) = rest.div_linear(&cand_big);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.insert(cand, mult);
            }
        }
        r += 1;
    }
    SpectrumReport { integer_roots: roots, residual: rest }
}

/// Outcome of checking that `k` and `c - a - 1` are distinct integer eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EigenvalueCheck {
    pub expected: [i64; 2],
    pub missing: Vec<i64>,
    pub distinct: bool,
}

impl EigenvalueCheck {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.distinct
    }
}

/// Checks the two eigenvalues forced by a regular clique against the exact spectrum.
pub fn verify_neumaier_eigenvalues(spectrum: &SpectrumReport, params: &NeumaierParams) -> EigenvalueCheck {
    let expected = [params.k as i64, params.c as i64 - params.a as i64 - 1];
    EigenvalueCheck {
        expected,
        missing: expected.iter().copied().filter(|&e| !spectrum.contains(e)).collect(),
        distinct: expected[0] != expected[1],
    }
}

/// Outcome of the integrality test on `mu / a` for a strongly regular Neumaier tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IntegerRatioCheck {
    /// `a` divides `mu`.
    pub divides: bool,
    /// `m = mu / a` when it is an integer.
    pub m: Option<i64>,
    /// `c = 1 + k/m` holds exactly.
    pub clique_bound: bool,
    /// `a = mu/m` holds exactly.
    pub nexus: bool,
    /// `-m` is a root of `x^2 - (lambda - mu) x - (k - mu)`.
    pub smallest_root: bool,
    /// `c - a - 1` is a root of the same quadratic.
    pub clique_root: bool,
}

impl IntegerRatioCheck {
    pub fn passed(&self) -> bool {
        self.divides && self.clique_bound && self.nexus && self.smallest_root && self.clique_root
    }
}

/// The smallest eigenvalue of a strongly regular Neumaier graph is `-mu/a`,
/// and the regular clique meets the Hoffman bound.
pub fn srg_integer_ratio(p: &SrgNeumaierParams) -> IntegerRatioCheck {
    let (k, lambda, mu, a, c) = (p.k as i64, p.lambda as i64, p.mu as i64, p.a as i64, p.c as i64);
    let quad = |x: i64| x * x - (lambda - mu) * x - (k - mu);
    if a == 0 || mu % a != 0 {
        return IntegerRatioCheck {
            divides: false,
            m: None,
            clique_bound: false,
            nexus: false,
            smallest_root: false,
            clique_root: quad(c - a - 1) == 0,
        };
    }
    let m = mu / a;
    IntegerRatioCheck {
        divides: true,
        m: Some(m),
        clique_bound: m != 0 && k % m == 0 && c == 1 + k / m,
        nexus: m != 0 && mu % m == 0 && a == mu / m,
        smallest_root: quad(-m) == 0,
        clique_root: quad(c - a - 1) == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn roots(pairs: &[(i64, usize)]) -> BTreeMap<i64, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn k2_char_poly() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(char_poly(&k2).unwrap().polynomial(), &Polynomial::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn c4_char_poly_and_spectrum() {
        let p = char_poly(&cycle(4)).unwrap();
        assert_eq!(p.polynomial(), &Polynomial::from_i64(&[0, 0, -4, 0, 1]));
        assert_eq!(p.to_string(), "x^4 - 4x^2");
        let s = integer_spectrum(&p);
        assert_eq!(s.integer_roots, roots(&[(2, 1), (0, 2), (-2, 1)]));
        assert!(s.is_integral());
    }

    #[test]
    fn bare_polynomial_spectrum() {
        let p = CharPoly::from_polynomial(Polynomial::from_i64(&[0, 0, -4, 0, 1])).unwrap();
        let s = integer_spectrum(&p);
        assert_eq!(s.integer_roots, roots(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(s.reconstruct(), *p.polynomial());
        assert!(CharPoly::from_polynomial(Polynomial::from_i64(&[1, 2])).is_none());
    }

    #[test]
    fn c5_has_irrational_residual() {
        let p = char_poly(&cycle(5)).unwrap();
        let s = integer_spectrum(&p);
        assert_eq!(s.integer_roots, roots(&[(2, 1)]));
        // (x^2 + x - 1)^2
        assert_eq!(s.residual, Polynomial::from_i64(&[-1, 1, 1]).pow(2));
    }

    #[test]
    fn too_large_rejected() {
        let g = Graph::from_edges(65, (0..64).map(|i| (i, i + 1))).unwrap();
        assert_eq!(char_poly(&g), Err(SpectrumError::TooLarge { n: 65 }));
    }

    #[test]
    fn matrix_char_poly_two_part_quotient() {
        // [[c-1, k-c+1], [a, k-a]] for (16,9,4;2,4): eigenvalues 9 and 1.
        let q = char_poly_of_matrix(&[vec![3, 6], vec![2, 7]]).unwrap();
        let s = integer_spectrum(&q);
        assert_eq!(s.integer_roots, roots(&[(9, 1), (1, 1)]));
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(Polynomial::from_i64(&[-3, 1, 1]).to_string(), "x^2 + x - 3");
        assert_eq!(Polynomial::from_i64(&[]).to_string(), "0");
        assert_eq!(Polynomial::from_i64(&[5]).to_string(), "5");
    }

    fn srg(n: usize, k: usize, lambda: usize, mu: usize, a: usize, c: usize) -> SrgNeumaierParams {
        SrgNeumaierParams { params: NeumaierParams { n, k, lambda, a, c }, mu }
    }

    #[test]
    fn integer_ratio_schlafli_complement() {
        let v = srg_integer_ratio(&srg(27, 10, 1, 5, 1, 3));
        assert!(v.passed());
        assert_eq!(v.m, Some(5));
    }

    #[test]
    fn integer_ratio_shrikhande_complement() {
        let v = srg_integer_ratio(&srg(16, 9, 4, 6, 2, 4));
        assert!(v.passed());
        assert_eq!(v.m, Some(3));
    }

    #[test]
    fn integer_ratio_paley_shape_fails_on_quadratic() {
        let v = srg_integer_ratio(&srg(13, 6, 2, 3, 1, 3));
        assert!(v.divides);
        assert_eq!(v.m, Some(3));
        assert!(v.clique_bound);
        // x^2 + x - 3 has no integer roots
        assert!(!v.smallest_root);
        assert!(!v.passed());
    }

    #[test]
    fn integer_ratio_non_divisible() {
        let v = srg_integer_ratio(&srg(16, 10, 6, 6, 4, 6));
        assert!(!v.divides);
        assert!(!v.passed());
    }
}
