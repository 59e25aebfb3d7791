//! Adjacency spectra and closed-walk moments.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::symmetric_eigen;

/// Default clustering tolerance for [`spectrum_of_graph`].
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// Relative slack allowed in the zero-trace check when a spectrum is built
/// from external or recovered data.
const TRACE_TOL: f64 = 1e-6;

/// Distinct eigenvalues `λ_0 > λ_1 > … > λ_d` with their multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpectrum")]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
}

#[derive(Deserialize)]
pub(crate) struct RawSpectrum {
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
}

impl TryFrom<RawSpectrum> for Spectrum {
    type Error = Error;

    fn try_from(raw: RawSpectrum) -> Result<Self> {
        Spectrum::new(raw.eigenvalues, raw.multiplicities)
    }
}

impl Spectrum {
    pub fn new(eigenvalues: Vec<f64>, multiplicities: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidSpectrum(msg));
        if eigenvalues.is_empty() {
            return bad("no eigenvalues".into());
        }
        if eigenvalues.len() != multiplicities.len() {
            return bad(format!(
                "{} eigenvalues but {} multiplicities",
                eigenvalues.len(),
                multiplicities.len()
            ));
        }
        if let Some(x) = eigenvalues.iter().find(|x| !x.is_finite()) {
            return bad(format!("non-finite eigenvalue {x}"));
        }
        if let Some(w) = eigenvalues.windows(2).find(|w| w[0] <= w[1]) {
            return bad(format!("eigenvalues not strictly decreasing at {} <= {}", w[0], w[1]));
        }
        if multiplicities.contains(&0) {
            return bad("zero multiplicity".into());
        }
        if multiplicities[0] != 1 {
            return bad(format!(
                "largest eigenvalue has multiplicity {}, a connected graph needs 1",
                multiplicities[0]
            ));
        }
        let s = Spectrum {
            eigenvalues,
            multiplicities,
        };
        let scale = s.eigenvalues.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let trace = s.trace();
        if trace.abs() > TRACE_TOL * s.n() as f64 * scale {
            return bad(format!("eigenvalues sum to {trace}, adjacency trace must be 0"));
        }
        Ok(s)
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of vertices, the sum of multiplicities.
    pub fn n(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Number of distinct eigenvalues minus one.
    pub fn d(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    /// Spectral radius.
    pub fn lambda0(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// `Σ m_i λ_i`.
    pub fn trace(&self) -> f64 {
        self.pairs().map(|(l, m)| m * l).sum()
    }

    /// `(λ_i, m_i as f64)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .map(|(&l, &m)| (l, m as f64))
    }

    /// Weights `m_i / n` of the spectral measure.
    pub fn weights(&self) -> Vec<f64> {
        let n = self.n() as f64;
        self.multiplicities.iter().map(|&m| m as f64 / n).collect()
    }
}

/// Full eigendecomposition of the adjacency matrix, clustered into distinct
/// eigenvalues.
///
/// Consecutive sorted eigenvalues within `tol * max(1, |λ_max|)` are merged.
/// A gap between that bound and ten times it is reported as
/// `ClusterAmbiguity` instead of guessing.
pub fn spectrum_of_graph(g: &Graph, tol: f64) -> Result<Spectrum> {
    assert!(tol > 0.0, "clustering tolerance must be positive");
    let eig = symmetric_eigen(&g.adjacency_matrix())?;
    let values = eig.values;
    let bound = tol * values[0].abs().max(1.0);

    let mut clusters: Vec<Vec<f64>> = vec![vec![values[0]]];
    for w in values.windows(2) {
        let gap = w[0] - w[1];
        if gap <= bound {
            clusters.last_mut().expect("nonempty").push(w[1]);
        } else if gap < 10.0 * bound {
            return Err(Error::ClusterAmbiguity {
                upper: w[0],
                lower: w[1],
                gap,
                tol: bound,
            });
        } else {
            clusters.push(vec![w[1]]);
        }
    }
    let eigenvalues = clusters
        .iter()
        .map(|c| c.iter().sum::<f64>() / c.len() as f64)
        .collect();
    let multiplicities = clusters.iter().map(Vec::len).collect();
    Spectrum::new(eigenvalues, multiplicities).map_err(|e| {
        Error::InternalConsistency(format!("graph spectrum failed validation: {e}"))
    })
}

/// Average numbers of closed walks `c(0..=L)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkMoments {
    pub c: Vec<f64>,
    pub n: usize,
}

impl WalkMoments {
    /// Highest available length `L`.
    pub fn max_len(&self) -> usize {
        self.c.len().saturating_sub(1)
    }
}

/// `c(ℓ) = (1/n) Σ m_i λ_i^ℓ`.
pub fn walk_moments(s: &Spectrum, max_len: usize) -> WalkMoments {
    let n = s.n() as f64;
    let mut c = vec![0.0; max_len + 1];
    for (lambda, m) in s.pairs() {
        let mut pow = 1.0;
        for slot in c.iter_mut() {
            *slot += m * pow;
            pow *= lambda;
        }
    }
    for v in &mut c {
        *v /= n;
    }
    WalkMoments { c, n: s.n() }
}

/// `c(ℓ) = (1/n) tr(A^ℓ)` by repeated adjacency products from each vertex.
pub fn walk_moments_of_graph(g: &Graph, max_len: usize) -> WalkMoments {
    let n = g.n();
    let mut traces = vec![0.0; max_len + 1];
    traces[0] = n as f64;
    for u in 0..n {
        let mut x = vec![0.0; n];
        x[u] = 1.0;
        for slot in traces.iter_mut().skip(1) {
            x = g.adjacency_apply(&x);
            *slot += x[u];
        }
    }
    WalkMoments {
        c: traces.into_iter().map(|t| t / n as f64).collect(),
        n,
    }
}
