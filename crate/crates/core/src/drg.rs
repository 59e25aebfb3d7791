//! Distance-regularity tests and structural predicates read off the
//! spectral data.

use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{average_excess, distance_profile, Graph};
use crate::orthopoly::{polys_from_spectrum, spectral_excess_from_spectrum, PolySequence};
use crate::preintersect::{preintersection_from_polys, PreintersectionSet};
use crate::spectral::{spectrum_of_graph, Spectrum};

/// Absolute tolerance for "equals 0" and "equals 1" in α/γ patterns.
pub const PATTERN_TOL: f64 = 1e-7;

/// Default relative gap accepted between spectral and average excess.
pub const DEFAULT_DRG_TOL: f64 = 1e-7;

/// Required agreement between the three spectral excess formulas.
pub const EXCESS_AGREEMENT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Criterion {
    pub name: String,
    pub verdict: String,
    pub witness: serde_json::Value,
}

impl Criterion {
    fn new(name: &str, verdict: impl fmt::Display, witness: serde_json::Value) -> Self {
        Criterion {
            name: name.to_string(),
            verdict: verdict.to_string(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DrgReport {
    pub spectral_excess: f64,
    pub average_excess: f64,
    pub is_drg: bool,
    pub gap: f64,
    pub criteria: Vec<Criterion>,
}

impl DrgReport {
    pub fn criterion(&self, name: &str) -> Option<&Criterion> {
        self.criteria.iter().find(|c| c.name == name)
    }
}

/// `p_d(λ_0)` computed three independent ways.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExcessRoutes {
    pub polynomial: f64,
    pub pi_formula: f64,
    pub preintersection: f64,
}

impl ExcessRoutes {
    /// Largest pairwise relative difference.
    pub fn disagreement(&self) -> f64 {
        let v = [self.polynomial, self.pi_formula, self.preintersection];
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in i + 1..3 {
                let scale = v[i].abs().max(v[j].abs()).max(1.0);
                worst = worst.max((v[i] - v[j]).abs() / scale);
            }
        }
        worst
    }
}

/// Everything that can be said from the spectrum alone.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralReport {
    pub spectral_excess: f64,
    pub routes: ExcessRoutes,
    pub regular: bool,
    pub criteria: Vec<Criterion>,
    #[serde(skip)]
    pub polys: PolySequence,
    #[serde(skip)]
    pub preintersection: PreintersectionSet,
}

/// Evaluates the excess formulas and the structural predicates on a
/// spectrum. Regularity is read as `p_1 = x`.
pub fn spectral_report(s: &Spectrum, tol: f64) -> Result<SpectralReport> {
    let polys = polys_from_spectrum(s)?;
    let pre = preintersection_from_polys(&polys)?;
    let routes = ExcessRoutes {
        polynomial: polys.eval(polys.d(), polys.lambda0()),
        pi_formula: spectral_excess_from_spectrum(s),
        preintersection: pre.spectral_excess(),
    };
    let regular = is_regular_polys(&polys);
    let mut criteria = Vec::new();

    let disagreement = routes.disagreement();
    if disagreement > EXCESS_AGREEMENT_TOL {
        log::warn!("spectral excess formulas disagree by {disagreement:e}");
    }
    criteria.push(Criterion::new(
        "excess-formulas-agree",
        disagreement <= EXCESS_AGREEMENT_TOL,
        json!({ "routes": routes, "disagreement": disagreement }),
    ));

    let by_alpha = check_bipartite_oddgirth(&pre, PATTERN_TOL);
    let by_omega = check_bipartite_omega(&polys, PATTERN_TOL);
    match &by_alpha {
        Ok(v) => criteria.push(Criterion::new(
            "bipartite-alpha",
            v.bipartite,
            json!({ "odd_girth": v.odd_girth, "alpha": pre.alpha() }),
        )),
        Err(e) => criteria.push(Criterion::new(
            "bipartite-alpha",
            e.code(),
            json!({ "error": e.to_string() }),
        )),
    }
    criteria.push(Criterion::new(
        "bipartite-omega",
        by_omega.bipartite,
        json!({ "odd_girth": by_omega.odd_girth }),
    ));
    if let Ok(v) = &by_alpha {
        criteria.push(Criterion::new(
            "bipartite-routes-agree",
            *v == by_omega,
            serde_json::Value::Null,
        ));
    }

    if regular {
        match check_girth_regular(&pre, PATTERN_TOL) {
            Ok(g) => criteria.push(Criterion::new("girth", g, json!({ "gamma": pre.gamma() }))),
            Err(e) => criteria.push(Criterion::new("girth", e.code(), json!({ "error": e.to_string() }))),
        }
    } else {
        criteria.push(Criterion::new(
            "girth",
            "skipped (not regular)",
            json!({ "omega_1_1": polys.coeff(1, 1) }),
        ));
    }

    let bipartite = by_omega.bipartite;
    let gamma = check_gamma_sufficient(&pre, bipartite, tol.max(PATTERN_TOL));
    let monic = check_monic_sufficient(&polys, bipartite, tol.max(PATTERN_TOL));
    criteria.push(Criterion::new("gamma-sufficient", gamma, json!({ "gamma": pre.gamma() })));
    let tops: Vec<f64> = (0..=polys.d()).map(|i| polys.coeff(i, i)).collect();
    criteria.push(Criterion::new("monic-sufficient", monic, json!({ "leading": tops })));

    Ok(SpectralReport {
        spectral_excess: routes.pi_formula,
        routes,
        regular,
        criteria,
        polys,
        preintersection: pre,
    })
}

/// `‖p_1 − x‖ ≤ 1e-9`.
pub fn is_regular_polys(ps: &PolySequence) -> bool {
    if ps.d() == 0 {
        return true;
    }
    (ps.coeff(1, 1) - 1.0).abs() <= 1e-9 && ps.coeff(1, 0).abs() <= 1e-9
}

/// Compares the spectral excess with the average excess of a regular graph.
///
/// `tol` bounds the relative gap `|spectral − average| / spectral`.
pub fn check_spectral_excess(g: &Graph, cluster_tol: f64, tol: f64) -> Result<DrgReport> {
    if !g.is_regular() {
        let (min, max) = g.degree_range();
        return Err(Error::NotRegular { min, max });
    }
    let s = spectrum_of_graph(g, cluster_tol)?;
    let report = spectral_report(&s, tol)?;
    let profile = distance_profile(g);
    let d = s.d();
    if profile.diameter > d {
        return Err(Error::InternalConsistency(format!(
            "diameter {} exceeds the number of distinct eigenvalues minus one ({d})",
            profile.diameter
        )));
    }
    let average = average_excess(&profile, d);
    let spectral = report.spectral_excess;
    let gap = (spectral - average).abs() / spectral.abs();
    let is_drg = gap <= tol;

    let mut criteria = vec![Criterion::new(
        "spectral-excess",
        is_drg,
        json!({ "spectral": spectral, "average": average, "diameter": profile.diameter, "d": d }),
    )];
    criteria.extend(report.criteria);
    criteria.push(Criterion::new(
        "bipartite-bfs",
        g.is_bipartite(),
        serde_json::Value::Null,
    ));
    Ok(DrgReport {
        spectral_excess: spectral,
        average_excess: average,
        is_drg,
        gap,
        criteria,
    })
}

/// Bipartiteness and odd girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityVerdict {
    pub bipartite: bool,
    pub odd_girth: Option<usize>,
}

/// Bipartite iff every `α_i` vanishes; otherwise the odd girth is `2m + 1`
/// for the first `m` with `α_m > 0`.
pub fn check_bipartite_oddgirth(pre: &PreintersectionSet, tol: f64) -> Result<ParityVerdict> {
    for (m, &a) in pre.alpha().iter().enumerate() {
        if a > tol {
            return Ok(ParityVerdict {
                bipartite: false,
                odd_girth: Some(2 * m + 1),
            });
        }
        if a < -tol {
            return Err(Error::NegativeAlphaAnomaly { index: m, value: a });
        }
    }
    Ok(ParityVerdict {
        bipartite: true,
        odd_girth: None,
    })
}

/// The same verdict from the parity pattern of Ω: `ω_i^j = 0` whenever
/// `i + j` is odd.
///
/// The first row breaking the pattern is `m + 1`, where `α_m` is the first
/// nonzero α. The pattern cannot see `α_d`, so a clean Ω is confirmed by
/// checking `α_d = λ_0 − γ_d` too.
pub fn check_bipartite_omega(ps: &PolySequence, tol: f64) -> ParityVerdict {
    let d = ps.d();
    for i in 1..=d {
        let row = &ps.omega()[i];
        let scale = row.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let broken = row
            .iter()
            .enumerate()
            .any(|(j, &w)| (i + j) % 2 == 1 && w.abs() > tol * scale);
        if broken {
            return ParityVerdict {
                bipartite: false,
                odd_girth: Some(2 * (i - 1) + 1),
            };
        }
    }
    if d >= 1 {
        let gamma_d = ps.coeff(d - 1, d - 1) / ps.coeff(d, d);
        let alpha_d = ps.lambda0() - gamma_d;
        if alpha_d.abs() > tol * ps.lambda0().abs().max(1.0) {
            return ParityVerdict {
                bipartite: false,
                odd_girth: Some(2 * d + 1),
            };
        }
    } else if ps.lambda0().abs() > tol {
        return ParityVerdict {
            bipartite: false,
            odd_girth: None,
        };
    }
    ParityVerdict {
        bipartite: true,
        odd_girth: None,
    }
}

/// Girth of a regular graph, or a lower bound when no pattern within
/// `0..=d` decides it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Exact(usize),
    AtLeast(usize),
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Exact(g) => write!(f, "{g}"),
            Girth::AtLeast(g) => write!(f, ">= {g} (indeterminate)"),
        }
    }
}

/// Scans `m = 1..=d`: `γ_m > 1` gives girth `2m`; otherwise `γ_m = 1` with
/// `α_m ≠ 0` gives `2m + 1`. Both need all earlier α to vanish and all
/// earlier γ to be 1.
pub fn check_girth_regular(pre: &PreintersectionSet, tol: f64) -> Result<Girth> {
    let d = pre.d();
    if d >= 1 && (pre.c(1) - 1.0).abs() > tol {
        return Err(Error::RegularityRequired(format!(
            "gamma_1 = {} but a regular graph has gamma_1 = 1",
            pre.c(1)
        )));
    }
    if pre.a(0).abs() > tol {
        return Err(Error::PatternUnmatched(format!("alpha_0 = {}", pre.a(0))));
    }
    for m in 1..=d {
        let g = pre.c(m);
        if g > 1.0 + tol {
            return Ok(Girth::Exact(2 * m));
        }
        if g < 1.0 - tol {
            return Err(Error::PatternUnmatched(format!(
                "gamma_{m} = {g} is below 1 with all earlier gammas equal to 1"
            )));
        }
        if pre.a(m).abs() > tol {
            return Ok(Girth::Exact(2 * m + 1));
        }
    }
    Ok(Girth::AtLeast(2 * d + 1))
}

/// Outcome of a one-directional criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sufficient {
    Drg,
    Inconclusive,
}

impl fmt::Display for Sufficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sufficient::Drg => "DRG (sufficient condition met)",
            Sufficient::Inconclusive => "inconclusive",
        })
    }
}

/// Last index that must satisfy the condition: `d − 1`, or `d − 2` for
/// bipartite graphs.
fn required_range(d: usize, bipartite: bool) -> usize {
    if bipartite {
        d.saturating_sub(2)
    } else {
        d.saturating_sub(1)
    }
}

/// `γ_1 = … = γ_{d−1} = 1` (to `d − 2` when bipartite).
pub fn check_gamma_sufficient(pre: &PreintersectionSet, bipartite: bool, tol: f64) -> Sufficient {
    let upto = required_range(pre.d(), bipartite);
    if (1..=upto).all(|i| (pre.c(i) - 1.0).abs() <= tol) {
        Sufficient::Drg
    } else {
        Sufficient::Inconclusive
    }
}

/// `ω_i^i = 1` over the same range as the γ condition.
pub fn check_monic_sufficient(ps: &PolySequence, bipartite: bool, tol: f64) -> Sufficient {
    let upto = required_range(ps.d(), bipartite);
    if (1..=upto).all(|i| (ps.coeff(i, i) - 1.0).abs() <= tol) {
        Sufficient::Drg
    } else {
        Sufficient::Inconclusive
    }
}
