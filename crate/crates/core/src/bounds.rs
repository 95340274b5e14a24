//! Turán and spectral upper bounds on the number of induced edges, plus the
//! circulant spectrum of `C_n^s` and the quadratic-form identities behind the
//! spectral bound.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{choose2, exact_max};
use crate::graph::GraphSpec;
use crate::subset::VertexSubset;

/// Largest `n` accepted by the dense verification routines.
pub const DENSE_LIMIT: usize = 4096;

/// Relative slack added before flooring the spectral bound, so that a value
/// that is an integer in exact arithmetic is not floored one below it.
const FLOOR_SLACK: f64 = 1e-9;

const PARALLEL_SCAN: usize = 256;

/// Clique number of `C_n^s`: `n` when the graph is complete, otherwise `s + 1`.
///
/// At `n = 2s + 1` every pair is within distance `s`, so the graph is
/// complete even though `2s + 1 <= n`.
pub fn clique_number(spec: &GraphSpec) -> usize {
    if spec.is_complete() {
        spec.n()
    } else {
        spec.s() + 1
    }
}

/// `C(k,2) - ω·m(m-1)/2` with `m = ⌊k/ω⌋`, `ω` the clique number.
///
/// Requires `k > ω`; in the non-complete regime that is `k >= s + 2`.
pub fn turan_bound(spec: &GraphSpec, k: usize) -> Result<u64> {
    if k > spec.n() {
        return Err(Error::CardinalityOutOfRange { k, n: spec.n() });
    }
    let omega = clique_number(spec);
    if k <= omega {
        return Err(Error::TuranUndefined { k, clique: omega });
    }
    let (k, omega) = (k as u64, omega as u64);
    let m = k / omega;
    // m(m-1) is even
    Ok(choose2(k) - omega * (m * (m - 1) / 2))
}

/// Adjacency eigenvalue of `C_n^s` at frequency `j`: `Σ_{t=1..s} 2cos(2πjt/n)`.
///
/// In the complete regime the connection set is every non-zero offset, giving
/// `n - 1` at `j = 0` and `-1` elsewhere.
pub fn circulant_eigenvalue(spec: &GraphSpec, j: usize) -> f64 {
    let (n, s) = (spec.n(), spec.s());
    let j = j % n;
    if j == 0 {
        return spec.degree() as f64;
    }
    if spec.is_complete() {
        return -1.0;
    }
    let step = 2.0 * PI * j as f64 / n as f64;
    (1..=s).map(|t| 2.0 * (step * t as f64).cos()).sum()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumSummary {
    /// Indexed by frequency `j` in `[0, n)`.
    pub eigenvalues: Vec<f64>,
    pub lambda1: f64,
    pub lambda2: f64,
}

pub fn spectrum(spec: &GraphSpec) -> SpectrumSummary {
    let n = spec.n();
    let eigenvalues: Vec<f64> = (0..n).map(|j| circulant_eigenvalue(spec, j)).collect();
    let lambda2 = eigenvalues[1..].iter().copied().fold(f64::NEG_INFINITY, f64::max);
    SpectrumSummary {
        lambda1: eigenvalues[0],
        lambda2,
        eigenvalues,
    }
}

/// Second largest adjacency eigenvalue (with multiplicity).
///
/// `λ(j) = λ(n - j)`, so only `j in [1, n/2]` is scanned.
pub fn lambda2(spec: &GraphSpec) -> f64 {
    if spec.is_complete() {
        return -1.0;
    }
    let half = spec.n() / 2;
    if half < PARALLEL_SCAN {
        return (1..=half)
            .map(|j| circulant_eigenvalue(spec, j))
            .fold(f64::NEG_INFINITY, f64::max);
    }
    (1..=half)
        .into_par_iter()
        .map(|j| circulant_eigenvalue(spec, j))
        .reduce(|| f64::NEG_INFINITY, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralBound {
    pub raw: f64,
    pub floored: i64,
}

/// `e(U) <= (d·k²/n + λ₂·(k - k²/n)) / 2` for every `k`-subset, with `d` the
/// common degree (`2s` outside the complete regime).
pub fn spectral_bound(spec: &GraphSpec, k: usize) -> Result<SpectralBound> {
    spectral_bound_with(spec, k, lambda2(spec))
}

pub(crate) fn spectral_bound_with(spec: &GraphSpec, k: usize, lambda2: f64) -> Result<SpectralBound> {
    let n = spec.n();
    if k < 1 || k > n {
        return Err(Error::CardinalityOutOfRange { k, n });
    }
    let (nf, kf, d) = (n as f64, k as f64, spec.degree() as f64);
    let raw = (d * kf * kf / nf + lambda2 * (kf - kf * kf / nf)) / 2.0;
    let floored = (raw + FLOOR_SLACK * raw.abs().max(1.0)).floor() as i64;
    Ok(SpectralBound { raw, floored })
}

/// Exact value and both bounds for one `(n, k, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub exact: u64,
    /// `None` when `k` does not exceed the clique number.
    pub turan: Option<u64>,
    pub spectral_raw: f64,
    pub spectral_int: i64,
    pub lambda2: f64,
}

pub fn bound_report(spec: &GraphSpec, k: usize) -> Result<BoundReport> {
    let exact = exact_max(spec, k)?.value;
    let turan = match turan_bound(spec, k) {
        Ok(t) => Some(t),
        Err(Error::TuranUndefined { .. }) => None,
        Err(e) => return Err(e),
    };
    let l2 = lambda2(spec);
    let spectral = spectral_bound_with(spec, k, l2)?;
    Ok(BoundReport {
        n: spec.n(),
        k,
        s: spec.s(),
        exact,
        turan,
        spectral_raw: spectral.raw,
        spectral_int: spectral.floored,
        lambda2: l2,
    })
}

fn check_dense(spec: &GraphSpec, u: &VertexSubset) -> Result<()> {
    if spec.n() > DENSE_LIMIT {
        return Err(Error::VerificationScope {
            n: spec.n(),
            limit: DENSE_LIMIT,
        });
    }
    if u.n() != spec.n() {
        return Err(Error::LengthMismatch {
            subset_n: u.n(),
            graph_n: spec.n(),
        });
    }
    Ok(())
}

/// `⟨Aχ_U, χ_U⟩ / 2`, evaluated by applying the adjacency matrix row by row.
pub fn quadratic_form_edges(spec: &GraphSpec, u: &VertexSubset) -> Result<u64> {
    check_dense(spec, u)?;
    let n = spec.n();
    let chi: Vec<u64> = (0..n).map(|i| u.contains(i) as u64).collect();
    let a_chi: Vec<u64> = (0..n)
        .map(|i| (0..n).filter(|&j| spec.adjacent(i, j)).map(|j| chi[j]).sum())
        .collect();
    let form: u64 = a_chi.iter().zip(&chi).map(|(a, c)| a * c).sum();
    Ok(form / 2)
}

/// Coefficients of `χ_U` in the real trigonometric eigenbasis of a circulant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenExpansion {
    /// `(λ, c)` for each of the `n` orthonormal basis vectors.
    pub terms: Vec<(f64, f64)>,
    pub norm_sq: f64,
    pub weighted: f64,
    pub size: usize,
    pub twice_edges: u64,
    pub holds: bool,
}

/// Expands `χ_U` in the basis `1/√n`, `√(2/n)·cos(2πjt/n)`, `√(2/n)·sin(2πjt/n)`
/// (`1 <= j < n/2`) and, for even `n`, `(-1)^t/√n`; then checks
/// `Σc² = |U|` and `Σλc² = 2e(U)` within `1e-8·n`.
pub fn eigen_expansion(spec: &GraphSpec, u: &VertexSubset) -> Result<EigenExpansion> {
    check_dense(spec, u)?;
    let n = spec.n();
    let nf = n as f64;
    let members = u.to_vec();
    let mut terms = Vec::with_capacity(n);

    terms.push((circulant_eigenvalue(spec, 0), members.len() as f64 / nf.sqrt()));
    let scale = (2.0 / nf).sqrt();
    for j in 1..n.div_ceil(2) {
        let lambda = circulant_eigenvalue(spec, j);
        let step = 2.0 * PI * j as f64 / nf;
        let (c, s) = members.iter().fold((0.0, 0.0), |(c, s), &t| {
            let (sin, cos) = (step * t as f64).sin_cos();
            (c + cos, s + sin)
        });
        terms.push((lambda, scale * c));
        terms.push((lambda, scale * s));
    }
    if n.is_multiple_of(2) {
        let alt: f64 = members
            .iter()
            .map(|&t| if t % 2 == 0 { 1.0 } else { -1.0 })
            .sum();
        terms.push((circulant_eigenvalue(spec, n / 2), alt / nf.sqrt()));
    }
    debug_assert_eq!(terms.len(), n);

    let norm_sq: f64 = terms.iter().map(|(_, c)| c * c).sum();
    let weighted: f64 = terms.iter().map(|(l, c)| l * c * c).sum();
    let twice_edges = 2 * spec.edge_count(u)?;
    let tol = 1e-8 * nf;
    let holds = (norm_sq - members.len() as f64).abs() <= tol
        && (weighted - twice_edges as f64).abs() <= tol;
    Ok(EigenExpansion {
        terms,
        norm_sq,
        weighted,
        size: members.len(),
        twice_edges,
        holds,
    })
}

pub fn spectral_identity_check(spec: &GraphSpec, u: &VertexSubset) -> Result<bool> {
    Ok(eigen_expansion(spec, u)?.holds)
}
