//! Conversions between the three equivalent descriptions of a graph's
//! spectral data: spectrum, predistance polynomials and preintersection
//! numbers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{characteristic_polynomial, hessenberg_eigenvalues, symmetric_eigen, Matrix};
use crate::orthopoly::{polys_from_spectrum, polys_with_values, PolySequence};
use crate::poly::Poly;
use crate::preintersect::{preintersection_from_polys, PreintersectionSet};
use crate::spectral::{Spectrum, WalkMoments};

/// Imaginary parts of polynomial roots up to this (relative) size are
/// treated as rounding noise.
pub const ROOT_IMAG_TOL: f64 = 1e-6;

/// Largest accepted distance between a computed multiplicity and the
/// nearest integer.
pub const MULTIPLICITY_DRIFT_TOL: f64 = 0.01;

/// Moment Gram–Schmidt residuals with squared norm below this are flagged.
pub const INSTABILITY_THRESHOLD: f64 = 1e-10;

/// Relative separation below which eigenvalues of R count as coincident.
const SIMPLE_EIGEN_TOL: f64 = 1e-10;

/// A spectrum recovered from another representation, with the unrounded
/// multiplicities kept alongside.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecoveredSpectrum {
    pub spectrum: Spectrum,
    pub raw_multiplicities: Vec<f64>,
}

impl RecoveredSpectrum {
    /// Largest `|m − round(m)|`.
    pub fn max_drift(&self) -> f64 {
        self.raw_multiplicities
            .iter()
            .map(|m| (m - m.round()).abs())
            .fold(0.0, f64::max)
    }
}

fn round_multiplicities(raw: &[f64]) -> Result<Vec<usize>> {
    raw.iter()
        .enumerate()
        .map(|(index, &m)| {
            let r = m.round();
            if !m.is_finite() || (m - r).abs() > MULTIPLICITY_DRIFT_TOL || r < 1.0 {
                Err(Error::MultiplicityDrift { index, raw: m })
            } else {
                Ok(r as usize)
            }
        })
        .collect()
}

fn recovered(eigenvalues: Vec<f64>, raw: Vec<f64>) -> Result<RecoveredSpectrum> {
    let mults = round_multiplicities(&raw)?;
    Ok(RecoveredSpectrum {
        spectrum: Spectrum::new(eigenvalues, mults)?,
        raw_multiplicities: raw,
    })
}

/// `λ_0 = −ω_1^1 ω_2^0 / ω_2^2`. With `d ≤ 1` the coefficients do not
/// determine `λ_0` and the value stored with the sequence is returned.
pub fn lambda0_from_omega(ps: &PolySequence) -> f64 {
    if ps.d() < 2 {
        return ps.lambda0();
    }
    -ps.coeff(1, 1) * ps.coeff(2, 0) / ps.coeff(2, 2)
}

/// `λ_1, …, λ_d` as the zeros of the Hoffman polynomial, descending.
///
/// The zeros are the eigenvalues of multiplication by `x` on `p_0..p_{d−1}`
/// reduced modulo H (a comrade matrix), which avoids the monomial
/// coefficients of H altogether. Each is then refined by Newton steps that
/// evaluate H through the three-term recurrence.
pub fn hoffman_roots(ps: &PolySequence) -> Result<Vec<f64>> {
    let d = ps.d();
    if d == 0 {
        return Ok(Vec::new());
    }
    let pre = preintersection_from_polys(ps)?;
    // transpose of the comrade matrix, which is upper Hessenberg
    let mut c = Matrix::zeros(d, d);
    for i in 0..d {
        c[(i, i)] = pre.a(i);
        if i + 1 < d {
            c[(i + 1, i)] = pre.c(i + 1);
            c[(i, i + 1)] = pre.b(i);
        }
        c[(i, d - 1)] -= pre.c(d);
    }
    let mut roots = Vec::with_capacity(d);
    for z in hessenberg_eigenvalues(&c)? {
        if z.im.abs() > ROOT_IMAG_TOL * z.re.abs().max(1.0) {
            return Err(Error::NonRealRoots { re: z.re, im: z.im });
        }
        roots.push(polish_hoffman_root(&pre, z.re));
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

fn polish_hoffman_root(pre: &PreintersectionSet, mut x: f64) -> f64 {
    let h_at = |x: f64| {
        let (p, dp) = pre.values_and_derivatives(x);
        (p.iter().sum::<f64>(), dp.iter().sum::<f64>())
    };
    let (mut h, _) = h_at(x);
    for _ in 0..4 {
        let (_, dh) = h_at(x);
        if dh == 0.0 || !dh.is_finite() {
            break;
        }
        let next = x - h / dh;
        let (hn, _) = h_at(next);
        if !(hn.abs() < h.abs()) {
            break;
        }
        x = next;
        h = hn;
    }
    x
}

/// `m_i = n (Σ_j p_j(λ_i)² / p_j(λ_0))^{-1}` with `n = H(λ_0)`, unrounded.
///
/// The coefficients only fix the recurrence numbers; the sum is evaluated
/// as `Σ_j q_j(λ_i)²` over the orthonormal polynomials `q_j`, and
/// `p_j(λ_0)` as a product of ratios. Both avoid the cancellation that makes
/// direct evaluation useless once `p_d(λ_0)` falls to rounding level.
/// `eigenvalues[0]` is taken to be `λ_0`.
pub fn multiplicities_from_polys(ps: &PolySequence, eigenvalues: &[f64]) -> Result<Vec<f64>> {
    let pre = preintersection_from_polys(ps)?;
    let n: f64 = pre.values_at_lambda0().iter().sum();
    Ok(eigenvalues
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            if i == 0 {
                return 1.0;
            }
            let sum: f64 = pre.orthonormal_values_at(l).iter().map(|q| q * q).sum();
            n / sum
        })
        .collect())
}

/// Spectrum from the predistance polynomials: roots of H, `λ_0` from the
/// coefficients and multiplicities from the norm formula.
pub fn spectrum_from_polys(ps: &PolySequence) -> Result<RecoveredSpectrum> {
    let mut eigenvalues = vec![lambda0_from_omega(ps)];
    eigenvalues.extend(hoffman_roots(ps)?);
    let raw = multiplicities_from_polys(ps, &eigenvalues)?;
    recovered(eigenvalues, raw)
}

/// The polynomial `h` whose largest zero is `λ_0`:
/// `h = (Σ_i λ_i / p_d(λ_i) · L_i(x)) p_d(x) − x`, with `L_i` the Lagrange
/// basis on `λ_1..λ_d`.
pub fn h_polynomial(ps: &PolySequence, roots: &[f64]) -> Poly {
    let pd = ps.poly(ps.d());
    let mut interp = Poly::zero();
    for (i, &li) in roots.iter().enumerate() {
        let mut basis = Poly::one();
        for (j, &lj) in roots.iter().enumerate() {
            if i != j {
                basis = &basis * &Poly::new(vec![-lj / (li - lj), 1.0 / (li - lj)]);
            }
        }
        interp = &interp + &basis.scale(li / pd.eval(li));
    }
    &(&interp * &pd) - &Poly::x()
}

/// `λ_0` as the largest real zero of `h` strictly above `λ_1`.
///
/// For `d = 1` the polynomial `h` vanishes identically and the stored value
/// is returned, as in [`lambda0_from_omega`].
pub fn lambda0_from_h(ps: &PolySequence, roots: &[f64]) -> Result<f64> {
    if ps.d() < 2 {
        return Ok(ps.lambda0());
    }
    let h = h_polynomial(ps, roots);
    let bound = roots.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sep = 1e-6 * bound.abs().max(1.0);
    h.complex_roots()?
        .into_iter()
        .filter(|z| z.im.abs() <= ROOT_IMAG_TOL * z.re.abs().max(1.0))
        .map(|z| h.newton_polish(z.re))
        .filter(|&x| x > bound + sep)
        .max_by(f64::total_cmp)
        .ok_or(Error::NoRootAbove { bound })
}

/// `φ_i = Π_{j≠i} (λ_i − λ_j)` over all distinct eigenvalues.
pub fn phi(eigenvalues: &[f64]) -> Vec<f64> {
    (0..eigenvalues.len())
        .map(|i| {
            eigenvalues
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &l)| eigenvalues[i] - l)
                .product()
        })
        .collect()
}

/// `m_i = φ_0 p_d(λ_0) / (φ_i p_d(λ_i))`, unrounded. `eigenvalues[0]` is
/// taken to be `λ_0`.
///
/// With `q_d = p_d / √p_d(λ_0)` from the orthonormal recurrence this is
/// `φ_0 √p_d(λ_0) / (φ_i q_d(λ_i))`, which keeps its accuracy when
/// `p_d(λ_0)` is tiny.
pub fn multiplicities_via_phi(ps: &PolySequence, eigenvalues: &[f64]) -> Result<Vec<f64>> {
    let pre = preintersection_from_polys(ps)?;
    let phis = phi(eigenvalues);
    let d = ps.d();
    let top = phis[0] * pre.spectral_excess().sqrt();
    Ok(eigenvalues
        .iter()
        .zip(&phis)
        .enumerate()
        .map(|(i, (&l, &f))| {
            if i == 0 {
                1.0
            } else {
                top / (f * pre.orthonormal_values_at(l)[d])
            }
        })
        .collect())
}

/// `p_0 = 1`, `p_i = ((x − α_{i−1}) p_{i−1} − β_{i−2} p_{i−2}) / γ_i`.
pub fn polys_from_preintersection(pre: &PreintersectionSet) -> Result<PolySequence> {
    let d = pre.d();
    let mut polys = vec![Poly::one()];
    for i in 1..=d {
        let mut next = &polys[i - 1].shift() - &polys[i - 1].scale(pre.a(i - 1));
        if i >= 2 {
            next = &next - &polys[i - 2].scale(pre.b(i - 2));
        }
        polys.push(next.scale(1.0 / pre.c(i)));
    }
    PolySequence::new(to_omega(&polys), pre.lambda0())
}

/// `p_i = det(xI − R_{i−1}) / (γ_1 ⋯ γ_i)` with `R_{i−1}` the leading
/// `i × i` block of R.
pub fn polys_via_charpoly(pre: &PreintersectionSet) -> Result<PolySequence> {
    let r = pre.recurrence_matrix();
    let mut polys = vec![Poly::one()];
    let mut gamma_prod = 1.0;
    for i in 1..=pre.d() {
        gamma_prod *= pre.c(i);
        let cp = characteristic_polynomial(&r.matrix().leading(i));
        polys.push(Poly::new(cp).scale(1.0 / gamma_prod));
    }
    PolySequence::new(to_omega(&polys), pre.lambda0())
}

fn to_omega(polys: &[Poly]) -> Vec<Vec<f64>> {
    polys
        .iter()
        .enumerate()
        .map(|(i, p)| (0..=i).map(|j| p.coeff(j)).collect())
        .collect()
}

/// Eigenvalues of R with left (`u`) and right (`v`) eigenvectors, both
/// scaled to first component 1, and their inner products.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecurrenceEigenpairs {
    pub eigenvalues: Vec<f64>,
    pub left: Vec<Vec<f64>>,
    pub right: Vec<Vec<f64>>,
    pub inner: Vec<f64>,
}

/// Diagonalises R through the similar symmetric matrix `T = D R D^{-1}`.
pub fn recurrence_eigenpairs(pre: &PreintersectionSet) -> Result<RecurrenceEigenpairs> {
    let d = pre.d();
    let k = d + 1;
    let mut scale = vec![1.0; k];
    for j in 0..d {
        scale[j + 1] = scale[j] * (pre.c(j + 1) / pre.b(j)).sqrt();
    }
    let mut t = Matrix::zeros(k, k);
    for j in 0..k {
        t[(j, j)] = pre.a(j);
        if j + 1 < k {
            let off = (pre.b(j) * pre.c(j + 1)).sqrt();
            t[(j, j + 1)] = off;
            t[(j + 1, j)] = off;
        }
    }
    let eig = symmetric_eigen(&t)?;
    let spread = eig.values.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    if let Some(w) = eig
        .values
        .windows(2)
        .find(|w| w[0] - w[1] <= SIMPLE_EIGEN_TOL * spread)
    {
        return Err(Error::NonSimpleEigenvalues {
            upper: w[0],
            lower: w[1],
        });
    }

    let mut left = Vec::with_capacity(k);
    let mut right = Vec::with_capacity(k);
    let mut inner = Vec::with_capacity(k);
    for col in 0..k {
        let w: Vec<f64> = (0..k).map(|r| eig.vectors[(r, col)]).collect();
        let w0 = w[0];
        if w0.abs() < f64::EPSILON {
            return Err(Error::InternalConsistency(format!(
                "eigenvector {col} of the recurrence matrix has zero first component"
            )));
        }
        right.push((0..k).map(|j| w[j] / scale[j] / w0).collect());
        left.push((0..k).map(|j| w[j] * scale[j] / w0).collect());
        inner.push(w.iter().map(|x| x * x).sum::<f64>() / (w0 * w0));
    }
    Ok(RecurrenceEigenpairs {
        eigenvalues: eig.values,
        left,
        right,
        inner,
    })
}

/// Spectrum as the eigenvalues of R with `m_i = n / ⟨u_i, v_i⟩`, where
/// `n = ⟨u_0, v_0⟩`.
pub fn spectrum_from_preintersection(pre: &PreintersectionSet) -> Result<RecoveredSpectrum> {
    let pairs = recurrence_eigenpairs(pre)?;
    let n = pairs.inner[0];
    let raw = pairs.inner.iter().map(|x| n / x).collect();
    recovered(pairs.eigenvalues, raw)
}

/// Output of the moment route.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentPreintersection {
    pub preintersection: PreintersectionSet,
    /// Squared norms of the monic Gram–Schmidt residuals, measured in the
    /// variable `x / λ_0`.
    pub residual_norms: Vec<f64>,
    pub warnings: Vec<String>,
}

/// Coefficient vectors in the scaled variable `y = x / λ_0`, paired with the
/// Hankel functional `⟨f, g⟩ = Σ f_a g_b ĉ(a + b)`.
struct MomentFunctional {
    c: Vec<f64>,
}

impl MomentFunctional {
    fn dot(&self, f: &[f64], g: &[f64]) -> f64 {
        let mut s = 0.0;
        for (a, fa) in f.iter().enumerate() {
            for (b, gb) in g.iter().enumerate() {
                s += fa * gb * self.c[a + b];
            }
        }
        s
    }
}

fn shift_coeffs(f: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; f.len() + 1];
    out[1..].copy_from_slice(f);
    out
}

fn eval_at_one(f: &[f64]) -> f64 {
    f.iter().sum()
}

/// Preintersection numbers from the closed-walk moments `c(0..=2d)`.
///
/// Gram–Schmidt runs on the moment functional, with every inner product
/// taken as `Σ f_a g_b c(a + b)`. To keep the Hankel sums in range the
/// variable is rescaled to `x / λ_0`; the recurrence coefficients are scaled
/// back at the end. `α_d` is taken from `λ_0 − γ_d`, so `c(2d + 1)` is not
/// needed. Small residuals are reported as warnings, not errors.
pub fn preintersection_from_moments(
    m: &WalkMoments,
    d: usize,
    lambda0: f64,
) -> Result<MomentPreintersection> {
    let needed = 2 * d + 1;
    if m.c.len() < needed {
        return Err(Error::MomentDeficit {
            needed,
            got: m.c.len(),
        });
    }
    if !(lambda0 > 0.0) && d > 0 {
        return Err(Error::InvalidSpectrum(format!("lambda0 = {lambda0} must be positive")));
    }
    let s = if lambda0 > 0.0 { lambda0 } else { 1.0 };
    let f = MomentFunctional {
        c: m.c
            .iter()
            .enumerate()
            .map(|(l, c)| c / s.powi(l as i32))
            .collect(),
    };

    let mut polys: Vec<Vec<f64>> = vec![vec![1.0]];
    let mut norms = vec![f.c[0]];
    let mut residual_norms = Vec::with_capacity(d);
    let mut warnings = Vec::new();
    for i in 1..=d {
        let prev = &polys[i - 1];
        let lead = prev[i - 1];
        let mut r: Vec<f64> = shift_coeffs(prev).iter().map(|x| x / lead).collect();
        for _pass in 0..2 {
            for (p, &norm) in polys.iter().zip(&norms) {
                let k = f.dot(&r, p) / norm;
                for (rj, pj) in r.iter_mut().zip(p) {
                    *rj -= k * pj;
                }
            }
        }
        let rr = f.dot(&r, &r);
        residual_norms.push(rr);
        if rr < INSTABILITY_THRESHOLD {
            let msg = format!(
                "InstabilityWarning: residual of degree {i} has squared norm {rr:e}, moment results may be inaccurate"
            );
            log::warn!("{msg}");
            warnings.push(msg);
        }
        let at_one = eval_at_one(&r);
        if !(rr > 0.0) || !(at_one > 0.0) {
            return Err(Error::DegenerateSpectrum(format!(
                "moment Gram-Schmidt broke down at degree {i} (norm {rr:e}, value {at_one:e})"
            )));
        }
        let k = at_one / rr;
        let p: Vec<f64> = r.iter().map(|x| x * k).collect();
        norms.push(k * at_one);
        polys.push(p);
    }

    let mut alpha = vec![0.0; d + 1];
    let mut beta = vec![0.0; d];
    let mut gamma = vec![0.0; d];
    for i in 1..=d {
        gamma[i - 1] = s * f.dot(&shift_coeffs(&polys[i - 1]), &polys[i]) / norms[i];
    }
    for i in 0..d {
        alpha[i] = s * f.dot(&shift_coeffs(&polys[i]), &polys[i]) / norms[i];
    }
    if d == 0 {
        alpha[0] = s * f.c.get(1).copied().unwrap_or(0.0);
    } else {
        alpha[d] = lambda0 - gamma[d - 1];
    }
    for i in 0..d {
        beta[i] = lambda0 - alpha[i] - if i > 0 { gamma[i - 1] } else { 0.0 };
    }
    let preintersection = PreintersectionSet::new(alpha, beta, gamma, lambda0)?;
    Ok(MomentPreintersection {
        preintersection,
        residual_norms,
        warnings,
    })
}

/// Explicit expressions for the first recurrence coefficients in terms of
/// `c(2)..c(5)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormMoments {
    pub alpha0: f64,
    pub beta0: f64,
    pub gamma1: f64,
    pub alpha1: f64,
    pub beta1: f64,
    pub gamma2: f64,
    pub alpha2: f64,
    pub beta2: f64,
}

pub fn closed_form_moments(m: &WalkMoments, lambda0: f64) -> Result<ClosedFormMoments> {
    if m.c.len() < 6 {
        return Err(Error::MomentDeficit {
            needed: 6,
            got: m.c.len(),
        });
    }
    let (c2, c3, c4, c5) = (m.c[2], m.c[3], m.c[4], m.c[5]);
    let gamma1 = c2 / lambda0;
    let alpha1 = c3 / c2;
    let det = c2 * c4 - c3 * c3 - c2 * c2 * c2;
    let gamma2 = lambda0 * det / (c2 * (lambda0 * lambda0 * c2 - c3 * lambda0 - c2 * c2));
    let alpha2 = (c2 * c2 * c5 - 2.0 * c2 * c3 * c4 + c3 * c3 * c3) / (c2 * det);
    Ok(ClosedFormMoments {
        alpha0: 0.0,
        beta0: lambda0,
        gamma1,
        alpha1,
        beta1: lambda0 - alpha1 - gamma1,
        gamma2,
        alpha2,
        beta2: lambda0 - alpha2 - gamma2,
    })
}

/// Preintersection numbers straight from the spectrum:
/// `γ_i = ⟨x p_{i−1}, p_i⟩ / ‖p_i‖²` and `α_i = ⟨x p_i, p_i⟩ / ‖p_i‖²`, with
/// the inner products summed over the eigenvalues and `β_i` from the row
/// sums. Unlike [`preintersection_from_moments`] this never forms the
/// Hankel sums, so it keeps its accuracy at large diameter.
pub fn preintersection_from_spectrum(s: &Spectrum) -> Result<PreintersectionSet> {
    let d = s.d();
    let lambda0 = s.lambda0();
    let (_, values) = polys_with_values(s)?;
    let weights = s.weights();
    let lambdas = s.eigenvalues();
    let inner_x = |i: usize, j: usize| -> f64 {
        weights
            .iter()
            .zip(lambdas)
            .zip(values[i].iter().zip(&values[j]))
            .map(|((w, l), (a, b))| w * l * a * b)
            .sum()
    };
    let norm = |i: usize| values[i][0];
    let gamma: Vec<f64> = (1..=d).map(|i| inner_x(i - 1, i) / norm(i)).collect();
    let mut alpha: Vec<f64> = (0..=d).map(|i| inner_x(i, i) / norm(i)).collect();
    if d > 0 {
        alpha[d] = lambda0 - gamma[d - 1];
    }
    let beta = (0..d)
        .map(|i| lambda0 - alpha[i] - if i > 0 { gamma[i - 1] } else { 0.0 })
        .collect();
    PreintersectionSet::new(alpha, beta, gamma, lambda0)
}

/// Which of the three descriptions a value is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentationKind {
    Spectrum,
    Polys,
    Preintersection,
}

impl RepresentationKind {
    fn short(self) -> &'static str {
        match self {
            RepresentationKind::Spectrum => "sp",
            RepresentationKind::Polys => "poly",
            RepresentationKind::Preintersection => "pre",
        }
    }

    fn from_short(s: &str) -> Option<Self> {
        match s {
            "sp" => Some(RepresentationKind::Spectrum),
            "poly" => Some(RepresentationKind::Polys),
            "pre" => Some(RepresentationKind::Preintersection),
            _ => None,
        }
    }
}

impl fmt::Display for RepresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepresentationKind::Spectrum => "spectrum",
            RepresentationKind::Polys => "polys",
            RepresentationKind::Preintersection => "preintersection",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Representation {
    Spectrum(Spectrum),
    Polys(PolySequence),
    Preintersection(PreintersectionSet),
}

impl Representation {
    pub fn kind(&self) -> RepresentationKind {
        match self {
            Representation::Spectrum(_) => RepresentationKind::Spectrum,
            Representation::Polys(_) => RepresentationKind::Polys,
            Representation::Preintersection(_) => RepresentationKind::Preintersection,
        }
    }

    /// Largest entrywise `|a − b| / max(1, |b|)` against `reference`, or
    /// infinity when the two differ in kind, size or multiplicities.
    pub fn deviation_from(&self, reference: &Representation) -> f64 {
        use Representation as R;
        match (self, reference) {
            (R::Spectrum(a), R::Spectrum(b)) => {
                if a.multiplicities() != b.multiplicities() {
                    return f64::INFINITY;
                }
                max_rel_dev(a.eigenvalues(), b.eigenvalues())
            }
            (R::Polys(a), R::Polys(b)) => {
                if a.d() != b.d() {
                    return f64::INFINITY;
                }
                let rows = a
                    .omega()
                    .iter()
                    .zip(b.omega())
                    .map(|(x, y)| max_rel_dev(x, y))
                    .fold(0.0, f64::max);
                rows.max(max_rel_dev(&[a.lambda0()], &[b.lambda0()]))
            }
            (R::Preintersection(a), R::Preintersection(b)) => {
                if a.d() != b.d() {
                    return f64::INFINITY;
                }
                max_rel_dev(a.alpha(), b.alpha())
                    .max(max_rel_dev(a.beta(), b.beta()))
                    .max(max_rel_dev(a.gamma(), b.gamma()))
                    .max(max_rel_dev(&[a.lambda0()], &[b.lambda0()]))
            }
            _ => f64::INFINITY,
        }
    }
}

fn max_rel_dev(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs() / y.abs().max(1.0))
        .fold(0.0, f64::max)
}

/// One edge of the conversion graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conversion {
    SpToPoly,
    PolyToSp,
    PolyToPre,
    PreToPoly,
    PreToSp,
    SpToPre,
}

impl Conversion {
    pub const ALL: [Conversion; 6] = [
        Conversion::SpToPoly,
        Conversion::PolyToSp,
        Conversion::PolyToPre,
        Conversion::PreToPoly,
        Conversion::PreToSp,
        Conversion::SpToPre,
    ];

    pub fn source(self) -> RepresentationKind {
        use RepresentationKind as K;
        match self {
            Conversion::SpToPoly | Conversion::SpToPre => K::Spectrum,
            Conversion::PolyToSp | Conversion::PolyToPre => K::Polys,
            Conversion::PreToPoly | Conversion::PreToSp => K::Preintersection,
        }
    }

    pub fn target(self) -> RepresentationKind {
        use RepresentationKind as K;
        match self {
            Conversion::PolyToSp | Conversion::PreToSp => K::Spectrum,
            Conversion::SpToPoly | Conversion::PreToPoly => K::Polys,
            Conversion::SpToPre | Conversion::PolyToPre => K::Preintersection,
        }
    }

    pub fn name(self) -> String {
        format!("{}→{}", self.source().short(), self.target().short())
    }

    pub fn apply(self, input: &Representation) -> Result<Representation> {
        use Representation as R;
        match (self, input) {
            (Conversion::SpToPoly, R::Spectrum(s)) => Ok(R::Polys(polys_from_spectrum(s)?)),
            (Conversion::SpToPre, R::Spectrum(s)) => {
                Ok(R::Preintersection(preintersection_from_spectrum(s)?))
            }
            (Conversion::PolyToSp, R::Polys(p)) => Ok(R::Spectrum(spectrum_from_polys(p)?.spectrum)),
            (Conversion::PolyToPre, R::Polys(p)) => {
                Ok(R::Preintersection(preintersection_from_polys(p)?))
            }
            (Conversion::PreToPoly, R::Preintersection(p)) => {
                Ok(R::Polys(polys_from_preintersection(p)?))
            }
            (Conversion::PreToSp, R::Preintersection(p)) => {
                Ok(R::Spectrum(spectrum_from_preintersection(p)?.spectrum))
            }
            (conv, other) => Err(Error::InvalidPath(format!(
                "{} expects {}, got {}",
                conv.name(),
                conv.source(),
                other.kind()
            ))),
        }
    }
}

impl fmt::Display for Conversion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Conversion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (from, to) = t
            .split_once('→')
            .or_else(|| t.split_once("->"))
            .ok_or_else(|| Error::InvalidPath(format!("'{t}' is not of the form a→b")))?;
        let from = RepresentationKind::from_short(from.trim());
        let to = RepresentationKind::from_short(to.trim());
        Conversion::ALL
            .into_iter()
            .find(|c| Some(c.source()) == from && Some(c.target()) == to)
            .ok_or_else(|| Error::InvalidPath(format!("unknown conversion '{t}'")))
    }
}

/// Parses a comma-separated list of conversions.
pub fn parse_path(s: &str) -> Result<Vec<Conversion>> {
    let steps: Vec<Conversion> = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    if steps.is_empty() {
        return Err(Error::InvalidPath("empty path".into()));
    }
    Ok(steps)
}

/// Applies the steps in order, attaching the step position to any error.
pub fn convert_along(start: &Representation, path: &[Conversion]) -> Result<Representation> {
    let mut current = start.clone();
    for (step, conv) in path.iter().enumerate() {
        current = conv.apply(&current).map_err(|e| Error::Conversion {
            step: step + 1,
            name: conv.name(),
            source: Box::new(e),
        })?;
    }
    Ok(current)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundtripReport {
    pub path: Vec<String>,
    pub deviation: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Runs a conversion cycle and compares the result against the start.
pub fn roundtrip_check(
    start: &Representation,
    path: &[Conversion],
    tol: f64,
) -> Result<RoundtripReport> {
    let first = path
        .first()
        .ok_or_else(|| Error::InvalidPath("empty path".into()))?;
    if first.source() != start.kind() {
        return Err(Error::InvalidPath(format!(
            "path starts at {} but the input is {}",
            first.source(),
            start.kind()
        )));
    }
    for w in path.windows(2) {
        if w[0].target() != w[1].source() {
            return Err(Error::InvalidPath(format!("{} cannot be followed by {}", w[0], w[1])));
        }
    }
    let last = path.last().expect("nonempty");
    if last.target() != start.kind() {
        return Err(Error::InvalidPath(format!(
            "path ends at {} and does not return to {}",
            last.target(),
            start.kind()
        )));
    }
    let end = convert_along(start, path)?;
    let deviation = end.deviation_from(start);
    Ok(RoundtripReport {
        path: path.iter().map(|c| c.name()).collect(),
        deviation,
        tol,
        pass: deviation <= tol,
    })
}
