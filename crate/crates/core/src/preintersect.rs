//! Preintersection numbers: the three-term recurrence
//! `x p_i = β_{i−1} p_{i−1} + α_i p_i + γ_{i+1} p_{i+1}`, its tridiagonal
//! matrix, and the full tensor of Fourier coefficients of `p_i p_j`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{lower_triangular_inverse, Matrix};
use crate::orthopoly::PolySequence;
use crate::spectral::Spectrum;

/// Leading coefficients at or below this are treated as zero.
pub const LEADING_COEFF_TOL: f64 = 1e-12;

/// Slack for the structural checks on externally supplied sets, relative to
/// `1 + |λ_0|`.
const VALIDATION_TOL: f64 = 1e-6;

/// `α_0..α_d`, `β_0..β_{d−1}`, `γ_1..γ_d` (stored from index 0) and `λ_0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPreintersection")]
pub struct PreintersectionSet {
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
    lambda0: f64,
}

#[derive(Deserialize)]
pub(crate) struct RawPreintersection {
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
    lambda0: f64,
}

impl TryFrom<RawPreintersection> for PreintersectionSet {
    type Error = Error;

    fn try_from(raw: RawPreintersection) -> Result<Self> {
        PreintersectionSet::new(raw.alpha, raw.beta, raw.gamma, raw.lambda0)
    }
}

impl PreintersectionSet {
    /// Checks lengths, positivity of β and γ, `α_0 = 0`, `β_0 = λ_0` and
    /// `α_i + β_i + γ_i = λ_0`.
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>, gamma: Vec<f64>, lambda0: f64) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPreintersection(msg));
        if alpha.is_empty() {
            return bad("alpha is empty".into());
        }
        let d = alpha.len() - 1;
        if beta.len() != d || gamma.len() != d {
            return bad(format!(
                "for d = {d} need {d} betas and gammas, got {} and {}",
                beta.len(),
                gamma.len()
            ));
        }
        if alpha.iter().chain(&beta).chain(&gamma).any(|x| !x.is_finite()) || !lambda0.is_finite() {
            return bad("non-finite entry".into());
        }
        if let Some((i, g)) = gamma.iter().enumerate().find(|(_, &g)| g <= 0.0) {
            return bad(format!("gamma_{} = {g} is not positive", i + 1));
        }
        if let Some((i, b)) = beta.iter().enumerate().find(|(_, &b)| b <= 0.0) {
            return bad(format!("beta_{i} = {b} is not positive"));
        }
        let slack = VALIDATION_TOL * (1.0 + lambda0.abs());
        if alpha[0].abs() > slack {
            return bad(format!("alpha_0 = {} must be 0", alpha[0]));
        }
        let set = PreintersectionSet {
            alpha,
            beta,
            gamma,
            lambda0,
        };
        let dev = set.row_sum_deviation();
        if dev > slack {
            return bad(format!("alpha_i + beta_i + gamma_i deviates from lambda0 by {dev:e}"));
        }
        Ok(set)
    }

    pub fn d(&self) -> usize {
        self.alpha.len() - 1
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    /// `β_0..β_{d−1}`.
    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    /// `γ_1..γ_d`; `gamma()[0]` is `γ_1`.
    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    /// `α_i`.
    pub fn a(&self, i: usize) -> f64 {
        self.alpha[i]
    }

    /// `β_i`, zero for `i = d`.
    pub fn b(&self, i: usize) -> f64 {
        self.beta.get(i).copied().unwrap_or(0.0)
    }

    /// `γ_i`, zero for `i = 0`.
    pub fn c(&self, i: usize) -> f64 {
        if i == 0 {
            0.0
        } else {
            self.gamma[i - 1]
        }
    }

    /// `max_i |α_i + β_i + γ_i − λ_0|`.
    pub fn row_sum_deviation(&self) -> f64 {
        (0..=self.d())
            .map(|i| (self.a(i) + self.b(i) + self.c(i) - self.lambda0).abs())
            .fold(0.0, f64::max)
    }

    /// `β_0 ⋯ β_{d−1} / (γ_1 ⋯ γ_d)`, the spectral excess in recurrence form.
    pub fn spectral_excess(&self) -> f64 {
        *self.values_at_lambda0().last().expect("nonempty")
    }

    /// `(p_0(x), …, p_d(x))` by running the three-term recurrence, which
    /// stays accurate where Horner on the monomial coefficients cancels.
    pub fn values_at(&self, x: f64) -> Vec<f64> {
        self.values_and_derivatives(x).0
    }

    /// Values and first derivatives of `p_0..p_d` at `x`.
    pub fn values_and_derivatives(&self, x: f64) -> (Vec<f64>, Vec<f64>) {
        let d = self.d();
        let mut p = vec![1.0; d + 1];
        let mut dp = vec![0.0; d + 1];
        for i in 1..=d {
            let (p2, dp2) = if i >= 2 { (p[i - 2], dp[i - 2]) } else { (0.0, 0.0) };
            let b = if i >= 2 { self.b(i - 2) } else { 0.0 };
            let a = self.a(i - 1);
            let c = self.c(i);
            p[i] = ((x - a) * p[i - 1] - b * p2) / c;
            dp[i] = ((x - a) * dp[i - 1] + p[i - 1] - b * dp2) / c;
        }
        (p, dp)
    }

    /// `p_i(λ_0) = β_0 ⋯ β_{i−1} / (γ_1 ⋯ γ_i)`, the squared norms of the
    /// predistance polynomials, as products so that tiny values keep their
    /// relative accuracy.
    pub fn values_at_lambda0(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.d() + 1);
        out.push(1.0);
        for (b, g) in self.beta.iter().zip(&self.gamma) {
            let last = *out.last().expect("nonempty");
            out.push(last * b / g);
        }
        out
    }

    /// Values at `x` of the orthonormal polynomials `p_i / √p_i(λ_0)`,
    /// through the symmetric form of the recurrence.
    pub fn orthonormal_values_at(&self, x: f64) -> Vec<f64> {
        let d = self.d();
        let off: Vec<f64> = (0..d).map(|i| (self.b(i) * self.c(i + 1)).sqrt()).collect();
        let mut q = vec![1.0; d + 1];
        for i in 1..=d {
            let prev2 = if i >= 2 { off[i - 2] * q[i - 2] } else { 0.0 };
            q[i] = ((x - self.a(i - 1)) * q[i - 1] - prev2) / off[i - 1];
        }
        q
    }

    /// The tridiagonal matrix R.
    pub fn recurrence_matrix(&self) -> RecurrenceMatrix {
        let k = self.d() + 1;
        let mut r = Matrix::zeros(k, k);
        for i in 0..k {
            r[(i, i)] = self.a(i);
            if i + 1 < k {
                r[(i, i + 1)] = self.c(i + 1);
                r[(i + 1, i)] = self.b(i);
            }
        }
        RecurrenceMatrix { r }
    }
}

/// `R` with α on the diagonal, `R[i][i+1] = γ_{i+1}` and `R[i+1][i] = β_i`,
/// so that `x p = R p` modulo the minimal polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceMatrix {
    r: Matrix,
}

impl RecurrenceMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.r
    }

    pub fn d(&self) -> usize {
        self.r.rows() - 1
    }

    /// Reads α, β, γ back off the three diagonals.
    pub fn to_preintersection(&self) -> Result<PreintersectionSet> {
        let k = self.r.rows();
        let alpha = (0..k).map(|i| self.r[(i, i)]).collect();
        let beta = (0..k - 1).map(|i| self.r[(i + 1, i)]).collect();
        let gamma = (0..k - 1).map(|i| self.r[(i, i + 1)]).collect();
        let lambda0 = if k > 1 {
            self.r[(0, 0)] + self.r[(1, 0)]
        } else {
            self.r[(0, 0)]
        };
        PreintersectionSet::new(alpha, beta, gamma, lambda0)
    }
}

fn leading_coeffs(ps: &PolySequence) -> Result<Vec<f64>> {
    (0..=ps.d())
        .map(|i| {
            let w = ps.coeff(i, i);
            if w <= LEADING_COEFF_TOL {
                Err(Error::ZeroLeadingCoeff { index: i, value: w })
            } else {
                Ok(w)
            }
        })
        .collect()
}

/// Preintersection numbers read directly off the coefficients `ω_i^j`.
///
/// `γ_i = ω_{i−1}^{i−1}/ω_i^i`; `α_i` and `β_i` come from matching the
/// `x^i` and `x^{i−1}` terms of the recurrence. `α_d` and `β_{d−1}` follow
/// from the row sums `α_i + β_i + γ_i = λ_0 = α_0 + β_0`. With `d = 1`
/// there is no `β_0` formula and the sequence's stored `λ_0` is used.
pub fn preintersection_from_polys(ps: &PolySequence) -> Result<PreintersectionSet> {
    let d = ps.d();
    let lead = leading_coeffs(ps)?;
    let w = |i: usize, j: isize| -> f64 {
        if j < 0 {
            0.0
        } else {
            ps.coeff(i, j as usize)
        }
    };
    // ω_i^{i−1} / ω_i^i, the negated sum of the roots of p_i
    let sub_ratio = |i: usize| w(i, i as isize - 1) / lead[i];

    let gamma: Vec<f64> = (1..=d).map(|i| lead[i - 1] / lead[i]).collect();
    let mut alpha = vec![0.0; d + 1];
    if d >= 1 {
        alpha[0] = -w(1, 0) / lead[1];
    }
    for i in 1..d {
        alpha[i] = sub_ratio(i) - sub_ratio(i + 1);
    }
    let mut beta = vec![0.0; d];
    for i in 0..d.saturating_sub(1) {
        let ii = i as isize;
        beta[i] = w(i + 1, ii - 1) / lead[i]
            - w(i + 1, ii) / lead[i] * (sub_ratio(i + 1) - sub_ratio(i + 2))
            - lead[i + 1] / lead[i + 2] * w(i + 2, ii) / lead[i];
    }
    let lambda0 = if d >= 2 {
        alpha[0] + beta[0]
    } else {
        ps.lambda0()
    };
    complete_last_row(&mut alpha, &mut beta, &gamma, lambda0);
    PreintersectionSet::new(alpha, beta, gamma, lambda0)
}

/// Fills `β_{d−1}` and `α_d` from the row sums.
fn complete_last_row(alpha: &mut [f64], beta: &mut [f64], gamma: &[f64], lambda0: f64) {
    let d = alpha.len() - 1;
    if d == 0 {
        alpha[0] = lambda0;
        return;
    }
    beta[d - 1] = lambda0 - alpha[d - 1] - if d >= 2 { gamma[d - 2] } else { 0.0 };
    alpha[d] = lambda0 - gamma[d - 1];
}

/// `R' = Ω' U Ω^{-1}` for the first `d` rows of R, where Ω' drops the last
/// row of Ω and U is the upward shift; the last row comes from the column
/// sums of R all being `λ_0`.
pub fn recurrence_from_omega(ps: &PolySequence) -> Result<RecurrenceMatrix> {
    let d = ps.d();
    let k = d + 1;
    let omega = ps.omega_matrix();
    let omega_inv = lower_triangular_inverse(&omega, LEADING_COEFF_TOL)?;
    let mut shift = Matrix::zeros(k, k);
    for i in 0..d {
        shift[(i, i + 1)] = 1.0;
    }
    let mut omega_top = Matrix::zeros(d, k);
    for i in 0..d {
        for j in 0..k {
            omega_top[(i, j)] = omega[(i, j)];
        }
    }
    let top = omega_top.matmul(&shift).matmul(&omega_inv);

    let mut r = Matrix::zeros(k, k);
    for i in 0..d {
        for j in 0..k {
            r[(i, j)] = top[(i, j)];
        }
    }
    let lambda0 = if d >= 2 {
        r[(0, 0)] + r[(1, 0)]
    } else {
        ps.lambda0()
    };
    if d == 0 {
        r[(0, 0)] = lambda0;
    } else {
        let above = if d >= 2 { r[(d - 2, d - 1)] } else { 0.0 };
        r[(d, d - 1)] = lambda0 - above - r[(d - 1, d - 1)];
        r[(d, d)] = lambda0 - r[(d - 1, d)];
    }
    Ok(RecurrenceMatrix { r })
}

/// The three highest coefficients `ω_i^i`, `ω_i^{i−1}`, `ω_i^{i−2}` of each
/// `p_i`, expressed through α, β, γ. Entries that do not exist (`j < 0`)
/// are reported as 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeadingCoefficients {
    pub top: Vec<f64>,
    pub second: Vec<f64>,
    pub third: Vec<f64>,
}

pub fn leading_coeffs_from_preintersection(pre: &PreintersectionSet) -> LeadingCoefficients {
    let d = pre.d();
    let mut top = Vec::with_capacity(d + 1);
    let mut second = Vec::with_capacity(d + 1);
    let mut third = Vec::with_capacity(d + 1);
    let mut gamma_prod = 1.0;
    for i in 0..=d {
        if i > 0 {
            gamma_prod *= pre.c(i);
        }
        top.push(1.0 / gamma_prod);
        let alpha_sum: f64 = (0..i).map(|r| pre.a(r)).sum();
        second.push(if i >= 1 { -alpha_sum / gamma_prod } else { 0.0 });
        if i >= 2 {
            let mut pairs = 0.0;
            for r in 0..i {
                for s in r + 1..i {
                    pairs += pre.a(r) * pre.a(s);
                }
            }
            let bg: f64 = (0..=i - 2).map(|r| pre.b(r) * pre.c(r + 1)).sum();
            third.push((pairs - bg) / gamma_prod);
        } else {
            third.push(0.0);
        }
    }
    LeadingCoefficients { top, second, third }
}

/// `xi[h][i][j] = ⟨p_i p_j, p_h⟩ / ‖p_h‖²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct XiTensor {
    pub xi: Vec<Vec<Vec<f64>>>,
    /// `ω_1^1`, the factor between `p_1` and `x`.
    pub p1_lead: f64,
}

impl XiTensor {
    pub fn get(&self, h: usize, i: usize, j: usize) -> f64 {
        self.xi[h][i][j]
    }

    /// α, β, γ read from `ξ_{1,i}^i`, `ξ_{1,i+1}^i`, `ξ_{1,i−1}^i`.
    ///
    /// Since `p_1 = ω_1^1 x`, each slice is `ω_1^1` times the recurrence
    /// number and is divided back; for regular graphs `ω_1^1 = 1`.
    pub fn recurrence_slices(&self) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
        let d = self.xi.len() - 1;
        if d == 0 {
            return (vec![0.0], vec![], vec![]);
        }
        let k = self.p1_lead;
        let alpha = (0..=d).map(|i| self.xi[i][1][i] / k).collect();
        let beta = (0..d).map(|i| self.xi[i][1][i + 1] / k).collect();
        let gamma = (1..=d).map(|i| self.xi[i][1][i - 1] / k).collect();
        (alpha, beta, gamma)
    }
}

/// Full tensor from the spectrum:
/// `(1/(n p_h(λ_0))) Σ_r m_r p_i(λ_r) p_j(λ_r) p_h(λ_r)`.
///
/// The sum runs over the orthonormal polynomials `q_i = p_i / √k_i`,
/// `k_i = p_i(λ_0)`, and is rescaled by `√(k_i k_j / k_h)` so that a tiny
/// `k_h` does not amplify rounding in the values.
pub fn xi_from_spectrum(s: &Spectrum, ps: &PolySequence) -> Result<XiTensor> {
    let d = ps.d();
    let pre = preintersection_from_polys(ps)?;
    let n = s.n() as f64;
    let values: Vec<Vec<f64>> = s
        .eigenvalues()
        .iter()
        .map(|&l| pre.orthonormal_values_at(l))
        .collect();
    let root_k: Vec<f64> = pre.values_at_lambda0().iter().map(|k| k.sqrt()).collect();
    let mut xi = vec![vec![vec![0.0; d + 1]; d + 1]; d + 1];
    for h in 0..=d {
        for i in 0..=d {
            for j in i..=d {
                let sum: f64 = s
                    .multiplicities()
                    .iter()
                    .zip(&values)
                    .map(|(&m, v)| m as f64 * v[i] * v[j] * v[h])
                    .sum();
                let value = sum / n * root_k[i] * root_k[j] / root_k[h];
                xi[h][i][j] = value;
                xi[h][j][i] = value;
            }
        }
    }
    Ok(XiTensor {
        xi,
        p1_lead: if d >= 1 { ps.coeff(1, 1) } else { 1.0 },
    })
}
