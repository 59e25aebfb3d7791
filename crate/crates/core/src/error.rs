use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("graph is disconnected: {reached} of {n} vertices reachable from vertex 0")]
    Disconnected { reached: usize, n: usize },

    #[error("eigenvalue gap {gap:e} between {upper} and {lower} is too close to the clustering tolerance {tol:e}")]
    ClusterAmbiguity {
        upper: f64,
        lower: f64,
        gap: f64,
        tol: f64,
    },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("invalid predistance polynomials: {0}")]
    InvalidPolys(String),

    #[error("invalid preintersection numbers: {0}")]
    InvalidPreintersection(String),

    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),

    #[error("leading coefficient of p_{index} is {value:e}, too small to divide by")]
    ZeroLeadingCoeff { index: usize, value: f64 },

    #[error("coefficient matrix is singular: {0}")]
    SingularOmega(String),

    #[error("polynomial has a non-real root {re} {im:+}i")]
    NonRealRoots { re: f64, im: f64 },

    #[error("multiplicity of eigenvalue {index} is {raw}, not close to an integer")]
    MultiplicityDrift { index: usize, raw: f64 },

    #[error("no real root above {bound}")]
    NoRootAbove { bound: f64 },

    #[error("recurrence matrix eigenvalues {upper} and {lower} are not distinct")]
    NonSimpleEigenvalues { upper: f64, lower: f64 },

    #[error("need {needed} walk moments, got {got}")]
    MomentDeficit { needed: usize, got: usize },

    #[error("graph is not regular: degrees range over {min}..={max}")]
    NotRegular { min: usize, max: usize },

    #[error("alpha_{index} = {value:e} is negative before the first positive alpha")]
    NegativeAlphaAnomaly { index: usize, value: f64 },

    #[error("regular graph required: {0}")]
    RegularityRequired(String),

    #[error("no girth pattern matches: {0}")]
    PatternUnmatched(String),

    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),

    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    #[error("invalid conversion path: {0}")]
    InvalidPath(String),

    #[error("step {step} ({name}): {source}")]
    Conversion {
        step: usize,
        name: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::NotSimple(_) => "NotSimple",
            Error::Disconnected { .. } => "Disconnected",
            Error::ClusterAmbiguity { .. } => "ClusterAmbiguity",
            Error::InvalidSpectrum(_) => "InvalidSpectrum",
            Error::InvalidPolys(_) => "InvalidPolys",
            Error::InvalidPreintersection(_) => "InvalidPreintersection",
            Error::DegenerateSpectrum(_) => "DegenerateSpectrum",
            Error::ZeroLeadingCoeff { .. } => "ZeroLeadingCoeff",
            Error::SingularOmega(_) => "SingularOmega",
            Error::NonRealRoots { .. } => "NonRealRoots",
            Error::MultiplicityDrift { .. } => "MultiplicityDrift",
            Error::NoRootAbove { .. } => "NoRootAbove",
            Error::NonSimpleEigenvalues { .. } => "NonSimpleEigenvalues",
            Error::MomentDeficit { .. } => "MomentDeficit",
            Error::NotRegular { .. } => "NotRegular",
            Error::NegativeAlphaAnomaly { .. } => "NegativeAlphaAnomaly",
            Error::RegularityRequired(_) => "RegularityRequired",
            Error::PatternUnmatched(_) => "PatternUnmatched",
            Error::InternalConsistency(_) => "InternalConsistency",
            Error::NoConvergence(_) => "NoConvergence",
            Error::InvalidPath(_) => "InvalidPath",
            Error::Conversion { source, .. } => source.code(),
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
