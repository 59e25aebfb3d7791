//! Predistance polynomials: the orthogonal sequence `p_0, …, p_d` of a
//! spectrum under `⟨f, g⟩ = (1/n) Σ m_i f(λ_i) g(λ_i)`, normalised so that
//! `‖p_i‖² = p_i(λ_0)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::spectral::Spectrum;

/// Relative tolerance for the structural checks on externally supplied
/// coefficient matrices.
const VALIDATION_TOL: f64 = 1e-8;

/// `−ω_1^0 / ω_1^1` is the mean eigenvalue, so it gets the same slack as the
/// zero-trace check on spectra.
const MEAN_EIGENVALUE_TOL: f64 = 1e-6;

/// Gram–Schmidt residuals whose squared norm drops below this fraction of
/// the candidate's squared norm mean the spectrum cannot support degree `i`.
const DEGENERATE_RATIO: f64 = 1e-14;

/// Predistance polynomials as the lower-triangular coefficient matrix Ω,
/// `omega[i][j]` being the coefficient of `x^j` in `p_i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPolys")]
pub struct PolySequence {
    lambda0: f64,
    omega: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
pub(crate) struct RawPolys {
    lambda0: f64,
    omega: Vec<Vec<f64>>,
}

impl TryFrom<RawPolys> for PolySequence {
    type Error = Error;

    fn try_from(raw: RawPolys) -> Result<Self> {
        PolySequence::new(raw.omega, raw.lambda0)
    }
}

impl PolySequence {
    /// Checks the row shape, `p_0 = 1`, `ω_1^0 = 0`, positive leading
    /// coefficients and `p_i(λ_0) > 0`.
    pub fn new(omega: Vec<Vec<f64>>, lambda0: f64) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPolys(msg));
        if omega.is_empty() {
            return bad("no polynomials".into());
        }
        if !lambda0.is_finite() {
            return bad(format!("lambda0 = {lambda0}"));
        }
        for (i, row) in omega.iter().enumerate() {
            if row.len() != i + 1 {
                return bad(format!("row {i} has {} entries, expected {}", row.len(), i + 1));
            }
            if row.iter().any(|x| !x.is_finite()) {
                return bad(format!("row {i} has a non-finite entry"));
            }
            if row[i] <= 0.0 {
                return bad(format!("leading coefficient of p_{i} is {} (must be > 0)", row[i]));
            }
        }
        if (omega[0][0] - 1.0).abs() > VALIDATION_TOL {
            return bad(format!("p_0 = {} but must be 1", omega[0][0]));
        }
        if omega.len() > 1
            && omega[1][0].abs() > MEAN_EIGENVALUE_TOL * omega[1][1] * (1.0 + lambda0.abs())
        {
            return bad(format!("p_1 has constant term {}, must be 0", omega[1][0]));
        }
        let ps = PolySequence { lambda0, omega };
        for i in 0..=ps.d() {
            let v = ps.eval(i, lambda0);
            // values far below the rounding noise of the evaluation are
            // only rejected when clearly negative
            let noise: f64 = ps.omega[i]
                .iter()
                .enumerate()
                .map(|(j, c)| (c * lambda0.powi(j as i32)).abs())
                .sum::<f64>()
                * VALIDATION_TOL;
            if v <= -noise || (v <= 0.0 && noise == 0.0) {
                return bad(format!("p_{i}(lambda0) = {v} is not positive"));
            }
        }
        Ok(ps)
    }

    pub fn d(&self) -> usize {
        self.omega.len() - 1
    }

    /// Spectral radius the sequence is normalised against.
    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    pub fn omega(&self) -> &[Vec<f64>] {
        &self.omega
    }

    /// `ω_i^j`, zero for `j > i`.
    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.omega[i].get(j).copied().unwrap_or(0.0)
    }

    /// Square lower-triangular Ω.
    pub fn omega_matrix(&self) -> Matrix {
        let k = self.omega.len();
        let mut m = Matrix::zeros(k, k);
        for (i, row) in self.omega.iter().enumerate() {
            for (j, &w) in row.iter().enumerate() {
                m[(i, j)] = w;
            }
        }
        m
    }

    pub fn poly(&self, i: usize) -> Poly {
        Poly::new(self.omega[i].clone())
    }

    pub fn polys(&self) -> Vec<Poly> {
        (0..=self.d()).map(|i| self.poly(i)).collect()
    }

    pub fn eval(&self, i: usize, x: f64) -> f64 {
        self.omega[i].iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `(p_0(x), …, p_d(x))`.
    pub fn values_at(&self, x: f64) -> Vec<f64> {
        (0..=self.d()).map(|i| self.eval(i, x)).collect()
    }

    /// Partial sums `q_i(λ_0) = p_0(λ_0) + … + p_i(λ_0)`.
    pub fn partial_sums_at_lambda0(&self) -> Vec<f64> {
        self.values_at(self.lambda0)
            .into_iter()
            .scan(0.0, |acc, v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }
}

/// `⟨f, g⟩ = (1/n) Σ m_i f(λ_i) g(λ_i)`.
pub fn inner_product(f: &Poly, g: &Poly, s: &Spectrum) -> f64 {
    s.pairs().map(|(l, m)| m * f.eval(l) * g.eval(l)).sum::<f64>() / s.n() as f64
}

/// A polynomial carried both as coefficients and as its values on the
/// spectrum, so inner products never have to re-evaluate.
struct Tracked {
    coeffs: Poly,
    values: Vec<f64>,
}

impl Tracked {
    fn axpy(&mut self, k: f64, other: &Tracked) {
        self.coeffs = &self.coeffs - &other.coeffs.scale(k);
        for (v, o) in self.values.iter_mut().zip(&other.values) {
            *v -= k * o;
        }
    }
}

fn dot(weights: &[f64], a: &[f64], b: &[f64]) -> f64 {
    weights
        .iter()
        .zip(a.iter().zip(b))
        .map(|(w, (x, y))| w * x * y)
        .sum()
}

/// Gram–Schmidt on the spectrum's scalar product.
///
/// Each degree-`i` candidate is the monic `x p_{i-1} / ω_{i-1}^{i-1}`, which
/// spans the same flag as `x^i` but is far better conditioned. It is
/// orthogonalised against `p_0..p_{i-1}` by modified Gram–Schmidt with one
/// reorthogonalisation pass, giving the monic `r_i`, and then scaled to
/// `p_i = (r_i(λ_0) / ‖r_i‖²) r_i`.
pub fn polys_from_spectrum(s: &Spectrum) -> Result<PolySequence> {
    Ok(polys_with_values(s)?.0)
}

/// [`polys_from_spectrum`] together with `values[i][k] = p_i(λ_k)` as
/// produced by the orthogonalisation, which are more accurate than
/// evaluating the coefficients afterwards.
pub fn polys_with_values(s: &Spectrum) -> Result<(PolySequence, Vec<Vec<f64>>)> {
    let lambdas = s.eigenvalues();
    let weights = s.weights();
    let d = s.d();

    let mut basis: Vec<Tracked> = vec![Tracked {
        coeffs: Poly::one(),
        values: vec![1.0; d + 1],
    }];
    let mut norms = vec![1.0];

    for i in 1..=d {
        let prev = &basis[i - 1];
        let lead = prev.coeffs.leading();
        let mut r = Tracked {
            coeffs: prev.coeffs.shift().scale(1.0 / lead),
            values: prev
                .values
                .iter()
                .zip(lambdas)
                .map(|(v, l)| v * l / lead)
                .collect(),
        };
        let start_norm = dot(&weights, &r.values, &r.values);
        for _pass in 0..2 {
            for (p, &norm) in basis.iter().zip(&norms) {
                let k = dot(&weights, &r.values, &p.values) / norm;
                r.axpy(k, p);
            }
        }
        let rr = dot(&weights, &r.values, &r.values);
        if !(rr > DEGENERATE_RATIO * start_norm) {
            return Err(Error::DegenerateSpectrum(format!(
                "residual of degree {i} has squared norm {rr:e}"
            )));
        }
        let r_at_lambda0 = r.values[0];
        if !(r_at_lambda0 > 0.0) {
            return Err(Error::DegenerateSpectrum(format!(
                "r_{i}(lambda0) = {r_at_lambda0:e} is not positive"
            )));
        }
        let k = r_at_lambda0 / rr;
        let p = Tracked {
            coeffs: r.coeffs.scale(k),
            values: r.values.iter().map(|v| v * k).collect(),
        };
        norms.push(k * r_at_lambda0);
        basis.push(p);
    }

    let omega = basis
        .iter()
        .enumerate()
        .map(|(i, t)| (0..=i).map(|j| t.coeffs.coeff(j)).collect())
        .collect();
    let values = basis.into_iter().map(|t| t.values).collect();
    Ok((PolySequence::new(omega, s.lambda0())?, values))
}

/// Hoffman polynomial `H = p_0 + … + p_d`.
pub fn hoffman(ps: &PolySequence) -> Poly {
    ps.polys().iter().fold(Poly::zero(), |acc, p| &acc + p)
}

/// Spectral excess `p_d(λ_0)` from the polynomials.
///
/// Evaluated as `β_0 ⋯ β_{d−1} / (γ_1 ⋯ γ_d)` with the recurrence numbers
/// read off the leading coefficients of Ω: when `p_d(λ_0)` is small, Horner
/// on the monomial coefficients cancels down to rounding noise. Falls back to
/// Horner if Ω does not determine the recurrence.
pub fn spectral_excess(ps: &PolySequence) -> f64 {
    match crate::preintersect::preintersection_from_polys(ps) {
        Ok(pre) => pre.spectral_excess(),
        Err(_) => ps.eval(ps.d(), ps.lambda0()),
    }
}

/// Spectral excess from the spectrum alone:
/// `n (Σ_i π_0² / (m_i π_i²))^{-1}` with `π_i = Π_{j≠i} |λ_i − λ_j|`.
pub fn spectral_excess_from_spectrum(s: &Spectrum) -> f64 {
    let lambdas = s.eigenvalues();
    let pi = |i: usize| -> f64 {
        lambdas
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &l)| (lambdas[i] - l).abs())
            .product()
    };
    let pi0 = pi(0);
    let sum: f64 = s
        .multiplicities()
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            let ratio = pi0 / pi(i);
            ratio * ratio / m as f64
        })
        .sum();
    s.n() as f64 / sum
}
