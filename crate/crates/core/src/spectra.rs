//! Exact spectrum certificates for integer-spectrum graphs.
//!
//! A claim `{θ_i^{m_i}}` is certified by two facts about the adjacency
//! matrix `A`:
//!
//! 1. `Π_i (A − θ_i I) = 0`, so every eigenvalue of `A` is one of the `θ_i`;
//! 2. the power traces `tr(A^j)`, `j = 0..t−1`, determine the multiplicities
//!    through the Vandermonde system `Σ_i m_i θ_i^j = tr(A^j)`, solved over
//!    the rationals.
//!
//! Both steps use integer arithmetic only. Products with `A` exploit its
//! 0/1 structure: row `i` of `A·P` is the sum of rows `Γ(i)` of `P`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::certify::{SrgCertificate, SrgEigenvalues};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("eigenvalue {0} is listed more than once")]
    DuplicateEigenvalue(i64),
    #[error("claim is empty")]
    EmptyClaim,
    #[error("cannot parse spectrum claim {0:?}; expected e.g. \"22:1,5:48,-4:60\"")]
    Parse(String),
    #[error("need at least {needed} power traces, got {got}")]
    TooFewTraces { needed: usize, got: usize },
    #[error("moment system has no nonnegative integral solution: {0}")]
    InconsistentClaim(String),
    #[error("integer overflow in exact matrix product")]
    Overflow,
    #[error("spectrum is not integral (no integer annihilating product found)")]
    NonIntegral,
}

/// A claimed spectrum as `(eigenvalue, multiplicity)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumClaim {
    pub pairs: Vec<(i64, u64)>,
}

impl SpectrumClaim {
    pub fn new(pairs: Vec<(i64, u64)>) -> Result<Self, SpectrumError> {
        if pairs.is_empty() {
            return Err(SpectrumError::EmptyClaim);
        }
        check_distinct(&pairs.iter().map(|p| p.0).collect::<Vec<_>>())?;
        Ok(SpectrumClaim { pairs })
    }

    pub fn eigenvalues(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// `Σ m θ^j` for `j = 0, 1, 2`.
    pub fn low_moments(&self) -> [i128; 3] {
        let mut out = [0i128; 3];
        for &(theta, m) in &self.pairs {
            let (t, m) = (theta as i128, m as i128);
            out[0] += m;
            out[1] += m * t;
            out[2] += m * t * t;
        }
        out
    }
}

impl FromStr for SpectrumClaim {
    type Err = SpectrumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SpectrumError::Parse(s.to_string());
        let pairs = s
            .split(',')
            .map(|part| {
                let (theta, m) = part.trim().split_once(':').ok_or_else(err)?;
                Ok((
                    theta.trim().parse().map_err(|_| err())?,
                    m.trim().parse().map_err(|_| err())?,
                ))
            })
            .collect::<Result<Vec<_>, SpectrumError>>()?;
        SpectrumClaim::new(pairs)
    }
}

impl fmt::Display for SpectrumClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(t, m)| format!("{t}:{m}")).collect();
        f.write_str(&parts.join(","))
    }
}

fn check_distinct(thetas: &[i64]) -> Result<(), SpectrumError> {
    let mut sorted = thetas.to_vec();
    sorted.sort_unstable();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(SpectrumError::DuplicateEigenvalue(w[0])),
        None => Ok(()),
    }
}

/// Dense `v×v` integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntMatrix {
    n: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn trace(&self) -> i128 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    fn max_abs(&self) -> u128 {
        self.data
            .iter()
            .map(|x| x.unsigned_abs())
            .max()
            .unwrap_or(0)
    }
}

/// `(A − θI)·P` for the adjacency matrix `A` of `g`.
///
/// When every output entry provably fits in 63 bits the row sums run in
/// `i64`; otherwise a checked `i128` path is used.
fn shifted_product(g: &Graph, theta: i64, p: &IntMatrix) -> Result<IntMatrix, SpectrumError> {
    let n = p.n;
    let max_deg = (0..n).map(|u| g.degree(u)).max().unwrap_or(0) as u128;
    let bound = (max_deg + theta.unsigned_abs() as u128).saturating_mul(p.max_abs());
    let rows: Result<Vec<Vec<i128>>, SpectrumError> = if bound < (1u128 << 62) {
        let narrow: Vec<i64> = p.data.iter().map(|&x| x as i64).collect();
        Ok((0..n)
            .into_par_iter()
            .map(|i| {
                let mut acc: Vec<i64> = narrow[i * n..(i + 1) * n]
                    .iter()
                    .map(|&x| -theta * x)
                    .collect();
                for l in g.neighbors(i) {
                    for (a, &x) in acc.iter_mut().zip(&narrow[l * n..(l + 1) * n]) {
                        *a += x;
                    }
                }
                acc.into_iter().map(i128::from).collect()
            })
            .collect())
    } else {
        (0..n)
            .into_par_iter()
            .map(|i| {
                let t = theta as i128;
                let mut acc = p.data[i * n..(i + 1) * n]
                    .iter()
                    .map(|&x| x.checked_mul(-t).ok_or(SpectrumError::Overflow))
                    .collect::<Result<Vec<i128>, _>>()?;
                for l in g.neighbors(i) {
                    for (a, &x) in acc.iter_mut().zip(&p.data[l * n..(l + 1) * n]) {
                        *a = a.checked_add(x).ok_or(SpectrumError::Overflow)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    };
    Ok(IntMatrix {
        n,
        data: rows?.concat(),
    })
}

/// Whether `Π (A − θ_i I) = 0` exactly.
pub fn annihilation_check(g: &Graph, thetas: &[i64]) -> Result<bool, SpectrumError> {
    check_distinct(thetas)?;
    let mut p = IntMatrix::identity(g.vertex_count());
    for &theta in thetas {
        p = shifted_product(g, theta, &p)?;
        if p.is_zero() {
            return Ok(true);
        }
    }
    Ok(p.is_zero())
}

/// `tr(A^0), …, tr(A^{t−1})`.
pub fn power_traces(g: &Graph, t: usize) -> Result<Vec<i128>, SpectrumError> {
    let mut p = IntMatrix::identity(g.vertex_count());
    let mut traces = Vec::with_capacity(t);
    for j in 0..t {
        if j > 0 {
            p = shifted_product(g, 0, &p)?;
        }
        traces.push(p.trace());
    }
    Ok(traces)
}

/// Solves `Σ_i m_i θ_i^j = traces[j]` for the multiplicities. Rows beyond
/// the first `thetas.len()` are used as consistency checks.
pub fn multiplicities_from_moments(
    thetas: &[i64],
    traces: &[i128],
    v: u64,
) -> Result<Vec<u64>, SpectrumError> {
    check_distinct(thetas)?;
    let d = thetas.len();
    if d == 0 {
        return Err(SpectrumError::EmptyClaim);
    }
    if traces.len() < d {
        return Err(SpectrumError::TooFewTraces {
            needed: d,
            got: traces.len(),
        });
    }
    let rat = |x: i128| BigRational::from_integer(BigInt::from(x));
    let power = |theta: i64, j: usize| BigRational::from_integer(BigInt::from(theta).pow(j as u32));
    // Augmented d×(d+1) Vandermonde system.
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|j| {
            let mut row: Vec<BigRational> = thetas.iter().map(|&t| power(t, j)).collect();
            row.push(rat(traces[j]));
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d)
            .find(|&r| !m[r][col].is_zero())
            .expect("Vandermonde matrix on distinct nodes is nonsingular");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &factor * p;
                }
            }
        }
    }
    let solution: Vec<BigRational> = m.into_iter().map(|row| row[d].clone()).collect();
    for (j, &tr) in traces.iter().enumerate().skip(d) {
        let lhs: BigRational = thetas
            .iter()
            .zip(&solution)
            .map(|(&t, s)| power(t, j) * s)
            .sum();
        if lhs != rat(tr) {
            return Err(SpectrumError::InconsistentClaim(format!(
                "moment {j} predicts {lhs}, trace is {tr}"
            )));
        }
    }
    let mut out = Vec::with_capacity(d);
    for (theta, s) in thetas.iter().zip(&solution) {
        if !s.is_integer() || s.is_negative() {
            return Err(SpectrumError::InconsistentClaim(format!(
                "eigenvalue {theta} gets multiplicity {s}"
            )));
        }
        out.push(s.to_integer().to_u64().ok_or(SpectrumError::Overflow)?);
    }
    let total: u64 = out.iter().sum();
    if total != v {
        return Err(SpectrumError::InconsistentClaim(format!(
            "multiplicities sum to {total}, not {v}"
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureStage {
    Claim,
    Annihilation,
    Moments,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumCertificate {
    pub eigenvalues: Vec<i64>,
    pub multiplicities: Vec<u64>,
    pub annihilation: bool,
    /// `tr(A^j)` for `j = 0..eigenvalues.len()`.
    pub moments: Vec<i128>,
    /// Multiplicities solved from the moments, when the system is consistent.
    pub solved_multiplicities: Option<Vec<u64>>,
    pub pass: bool,
    pub failure_stage: Option<FailureStage>,
    pub detail: Option<String>,
}

impl SpectrumCertificate {
    pub fn claim(&self) -> SpectrumClaim {
        SpectrumClaim {
            pairs: self
                .eigenvalues
                .iter()
                .copied()
                .zip(self.multiplicities.iter().copied())
                .collect(),
        }
    }
}

/// Certifies that the spectrum of `g` is exactly `claim`.
pub fn certify_spectrum(
    g: &Graph,
    claim: &SpectrumClaim,
) -> Result<SpectrumCertificate, SpectrumError> {
    let eigenvalues = claim.eigenvalues();
    let mut cert = SpectrumCertificate {
        eigenvalues: eigenvalues.clone(),
        multiplicities: claim.multiplicities(),
        annihilation: false,
        moments: Vec::new(),
        solved_multiplicities: None,
        pass: false,
        failure_stage: None,
        detail: None,
    };
    let v = g.vertex_count() as u64;
    if claim.total_multiplicity() != v {
        cert.failure_stage = Some(FailureStage::Claim);
        cert.detail = Some(format!(
            "multiplicities sum to {}, graph has {v} vertices",
            claim.total_multiplicity()
        ));
        return Ok(cert);
    }
    cert.annihilation = annihilation_check(g, &eigenvalues)?;
    cert.moments = power_traces(g, eigenvalues.len())?;
    if !cert.annihilation {
        cert.failure_stage = Some(FailureStage::Annihilation);
        cert.detail = Some("product of (A - θI) over the claimed eigenvalues is nonzero".into());
        return Ok(cert);
    }
    match multiplicities_from_moments(&eigenvalues, &cert.moments, v) {
        Ok(solved) => {
            let matches = solved == cert.multiplicities;
            cert.solved_multiplicities = Some(solved);
            if !matches {
                cert.failure_stage = Some(FailureStage::Moments);
                cert.detail = Some("power traces force different multiplicities".into());
                return Ok(cert);
            }
        }
        Err(SpectrumError::InconsistentClaim(msg)) => {
            cert.failure_stage = Some(FailureStage::Moments);
            cert.detail = Some(msg);
            return Ok(cert);
        }
        Err(e) => return Err(e),
    }
    // Independent of the solver: Σ mθ = tr A = 0 and Σ mθ² = tr A² = 2|E|.
    let [_, m1, m2] = claim.low_moments();
    let degree_sum = g.degrees().iter().sum::<usize>() as i128;
    if m1 != 0 || m2 != degree_sum {
        cert.failure_stage = Some(FailureStage::Moments);
        cert.detail = Some(format!(
            "Σmθ = {m1}, Σmθ² = {m2}; expected 0 and {degree_sum}"
        ));
        return Ok(cert);
    }
    cert.pass = true;
    Ok(cert)
}

/// Restricted eigenvalues `r > s` of a strongly regular graph, as the roots
/// of `x² + (µ − λ)x + (µ − k) = 0`, with their multiplicities. `None` when
/// the roots or multiplicities are not integers.
pub fn srg_eigenvalues(cert: &SrgCertificate) -> Option<SrgEigenvalues> {
    let (v, k, l, m) = (
        cert.v as i64,
        cert.k as i64,
        cert.lambda as i64,
        cert.mu as i64,
    );
    let disc = (m - l) * (m - l) + 4 * (k - m);
    let root = disc.isqrt();
    if root * root != disc || (l - m + root) % 2 != 0 {
        return None;
    }
    let r = (l - m + root) / 2;
    let s = (l - m - root) / 2;
    // f + g = v − 1 and k + f r + g s = 0.
    let numer = -k - s * (v - 1);
    if (r - s) == 0 || numer % (r - s) != 0 {
        return None;
    }
    let f = numer / (r - s);
    let g = v - 1 - f;
    if f < 0 || g < 0 {
        return None;
    }
    Some(SrgEigenvalues {
        r,
        s,
        r_multiplicity: f as u64,
        s_multiplicity: g as u64,
    })
}

/// Fills in the eigenvalue data of an SRG certificate.
pub fn with_eigenvalues(mut cert: SrgCertificate) -> SrgCertificate {
    cert.eigenvalues = srg_eigenvalues(&cert);
    cert
}

const KRYLOV_PRIME: u64 = (1 << 31) - 1;

// Minimal polynomial of b under A modulo a prime, as coefficients c_0..c_d
// of a monic polynomial (c_d = 1).
fn krylov_min_poly(g: &Graph, b: Vec<u64>) -> Vec<u64> {
    let p = KRYLOV_PRIME;
    let n = g.vertex_count();
    let inv = |x: u64| -> u64 {
        // Fermat inverse.
        let (mut base, mut exp, mut acc) = (x % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    // Echelon rows: (pivot, vector, combination over Krylov indices).
    let mut basis: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut current = b;
    for j in 0..=n {
        let mut r = current.clone();
        let mut comb = vec![0u64; j + 1];
        comb[j] = 1;
        for (pivot, vec, c) in &basis {
            let f = r[*pivot];
            if f == 0 {
                continue;
            }
            for (x, y) in r.iter_mut().zip(vec) {
                *x = (*x + p - f * y % p) % p;
            }
            for (x, y) in comb.iter_mut().zip(c) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        match r.iter().position(|&x| x != 0) {
            None => return comb,
            Some(pivot) => {
                let s = inv(r[pivot]);
                for x in r.iter_mut() {
                    *x = *x * s % p;
                }
                for x in comb.iter_mut() {
                    *x = *x * s % p;
                }
                basis.push((pivot, r, comb));
            }
        }
        current = (0..n)
            .map(|i| g.neighbors(i).fold(0u64, |acc, l| (acc + current[l]) % p))
            .collect();
    }
    unreachable!("Krylov sequence must become dependent within n + 1 steps")
}

/// Finds the spectrum of a graph whose eigenvalues are all integers.
///
/// Candidates `θ ∈ [−Δ, Δ]` (Δ the maximum degree) are the integer roots,
/// modulo a prime, of the minimal polynomial of a random Krylov sequence.
/// The candidate set is then certified exactly: annihilation proves it
/// contains the spectrum and the moment system gives the multiplicities,
/// dropping spurious zero-multiplicity candidates.
pub fn discover_spectrum(g: &Graph) -> Result<SpectrumCertificate, SpectrumError> {
    let n = g.vertex_count();
    let max_deg = (0..n).map(|u| g.degree(u)).max().unwrap_or(0) as i64;
    let p = KRYLOV_PRIME;
    for seed in 0..4u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b: Vec<u64> = (0..n).map(|_| rng.random_range(0..p)).collect();
        let poly = krylov_min_poly(g, b);
        let eval = |theta: i64| -> u64 {
            let x = theta.rem_euclid(p as i64) as u64;
            poly.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p)
        };
        let candidates: Vec<i64> = (-max_deg..=max_deg)
            .rev()
            .filter(|&t| eval(t) == 0)
            .collect();
        if candidates.is_empty() || !annihilation_check(g, &candidates)? {
            continue;
        }
        let traces = power_traces(g, candidates.len())?;
        let mults = multiplicities_from_moments(&candidates, &traces, n as u64)?;
        let pairs = candidates
            .into_iter()
            .zip(mults)
            .filter(|&(_, m)| m > 0)
            .collect();
        return certify_spectrum(g, &SpectrumClaim::new(pairs)?);
    }
    Err(SpectrumError::NonIntegral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::certify_srg;
    use crate::gf3::m11;
    use crate::graph::{cayley, dual_seidel_switch, strong_product_k2};
    use crate::perm::perm_from_matrix;

    fn gamma() -> Graph {
        cayley(5, &m11::s1()).unwrap()
    }

    fn claim(s: &str) -> SpectrumClaim {
        s.parse().unwrap()
    }

    #[test]
    fn claim_parsing() {
        let c = claim("22:1, 5:48,4:72,-4:60,-5:62");
        assert_eq!(c.pairs[3], (-4, 60));
        assert_eq!(c.total_multiplicity(), 243);
        assert_eq!(c.to_string(), "22:1,5:48,4:72,-4:60,-5:62");
        assert!(matches!(
            "1:2,1:3".parse::<SpectrumClaim>(),
            Err(SpectrumError::DuplicateEigenvalue(1))
        ));
        assert!(matches!(
            "1;2".parse::<SpectrumClaim>(),
            Err(SpectrumError::Parse(_))
        ));
    }

    #[test]
    fn srg_quadratic_roots() {
        let c = certify_srg(&gamma()).unwrap();
        let e = srg_eigenvalues(&c).unwrap();
        assert_eq!(
            (e.r, e.s, e.r_multiplicity, e.s_multiplicity),
            (4, -5, 132, 110)
        );
        // Both roots satisfy the quadratic.
        let (lambda, mu, k) = (1, 2, 22);
        for x in [e.r, e.s] {
            assert_eq!(x * x + (mu - lambda) * x + (mu - k), 0);
        }
        // Pentagon is a conference graph with irrational eigenvalues.
        assert_eq!(
            srg_eigenvalues(&certify_srg(&Graph::cycle(5)).unwrap()),
            None
        );
        let pet = srg_eigenvalues(&certify_srg(&Graph::petersen()).unwrap()).unwrap();
        assert_eq!(
            (pet.r, pet.s, pet.r_multiplicity, pet.s_multiplicity),
            (1, -2, 5, 4)
        );
    }

    #[test]
    fn annihilation_examples() {
        let g = gamma();
        assert!(annihilation_check(&g, &[22, 4, -5]).unwrap());
        assert!(!annihilation_check(&g, &[22, 3, -5]).unwrap());
        assert!(matches!(
            annihilation_check(&g, &[1, 1]),
            Err(SpectrumError::DuplicateEigenvalue(1))
        ));
    }

    #[test]
    fn trace_examples() {
        let g = gamma();
        assert_eq!(power_traces(&g, 4).unwrap(), vec![243, 0, 5346, 5346]);
        assert_eq!(
            power_traces(&Graph::empty(7).unwrap(), 4).unwrap(),
            vec![7, 0, 0, 0]
        );
    }

    #[test]
    fn moment_solver() {
        let g = gamma();
        let traces = power_traces(&g, 3).unwrap();
        assert_eq!(
            multiplicities_from_moments(&[22, 4, -5], &traces, 243).unwrap(),
            vec![1, 132, 110]
        );
        assert!(matches!(
            multiplicities_from_moments(&[1, 1], &traces, 243),
            Err(SpectrumError::DuplicateEigenvalue(1))
        ));
        assert!(matches!(
            multiplicities_from_moments(&[22, 4, -5], &traces[..2], 243),
            Err(SpectrumError::TooFewTraces { .. })
        ));
        // Wrong eigenvalue set gives a non-integral or negative solution.
        assert!(matches!(
            multiplicities_from_moments(&[22, 3, -5], &traces, 243),
            Err(SpectrumError::InconsistentClaim(_))
        ));
        // Extra moments are checked for consistency.
        let traces5 = power_traces(&g, 5).unwrap();
        assert!(multiplicities_from_moments(&[22, 4, -5], &traces5, 243).is_ok());
        assert!(multiplicities_from_moments(&[22, 4, -5, 0], &traces5, 243).is_ok());
    }

    #[test]
    fn certificates() {
        let g = gamma();
        let ok = certify_spectrum(&g, &claim("22:1,4:132,-5:110")).unwrap();
        assert!(ok.pass);
        let swapped = certify_spectrum(&g, &claim("22:1,4:110,-5:132")).unwrap();
        assert!(!swapped.pass);
        assert!(swapped.annihilation);
        assert_eq!(swapped.failure_stage, Some(FailureStage::Moments));
        assert_eq!(swapped.solved_multiplicities, Some(vec![1, 132, 110]));
        let short = certify_spectrum(&g, &claim("22:1,4:132,-5:100")).unwrap();
        assert_eq!(short.failure_stage, Some(FailureStage::Claim));
        let wrong_root = certify_spectrum(&g, &claim("22:1,3:132,-5:110")).unwrap();
        assert!(!wrong_root.pass);
        assert_eq!(wrong_root.failure_stage, Some(FailureStage::Annihilation));
    }

    #[test]
    fn product_spectrum_maps_eigenvalues() {
        // Spectrum of G[K2] is {2θ+1} ∪ {−1^v}.
        let g = gamma();
        let p = strong_product_k2(&g);
        let c = certify_spectrum(&p, &claim("45:1,9:132,-1:243,-9:110")).unwrap();
        assert!(c.pass, "{c:?}");
    }

    #[test]
    fn discovery_reproduces_known_spectra() {
        let g = gamma();
        let found = discover_spectrum(&g).unwrap();
        assert!(found.pass);
        assert_eq!(found.claim(), claim("22:1,4:132,-5:110"));
        let phi = perm_from_matrix(&m11::x()).unwrap();
        let d = dual_seidel_switch(&g, &phi).unwrap();
        let found = discover_spectrum(&d).unwrap();
        assert_eq!(found.claim(), claim("22:1,5:48,4:72,-4:60,-5:62"));
        assert!(matches!(
            discover_spectrum(&Graph::cycle(5)),
            Err(SpectrumError::NonIntegral)
        ));
    }
}
