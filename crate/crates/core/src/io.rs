//! JSON input for the three descriptions, keeping the validation error of
//! the owning type instead of folding it into a serde message.

use serde::de::DeserializeOwned;

use crate::error::{Error, Result};
use crate::orthopoly::{PolySequence, RawPolys};
use crate::preintersect::{PreintersectionSet, RawPreintersection};
use crate::spectral::{RawSpectrum, Spectrum};
use crate::transforms::{Representation, RepresentationKind};

fn from_json<R: DeserializeOwned>(text: &str) -> Result<R> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })
}

/// `{"eigenvalues": [...], "multiplicities": [...]}`
pub fn spectrum_from_json(text: &str) -> Result<Spectrum> {
    Spectrum::try_from(from_json::<RawSpectrum>(text)?)
}

/// `{"lambda0": x, "omega": [[...], ...]}`
pub fn polys_from_json(text: &str) -> Result<PolySequence> {
    PolySequence::try_from(from_json::<RawPolys>(text)?)
}

/// `{"alpha": [...], "beta": [...], "gamma": [...], "lambda0": x}`
pub fn preintersection_from_json(text: &str) -> Result<PreintersectionSet> {
    PreintersectionSet::try_from(from_json::<RawPreintersection>(text)?)
}

pub fn representation_from_json(text: &str, kind: RepresentationKind) -> Result<Representation> {
    Ok(match kind {
        RepresentationKind::Spectrum => Representation::Spectrum(spectrum_from_json(text)?),
        RepresentationKind::Polys => Representation::Polys(polys_from_json(text)?),
        RepresentationKind::Preintersection => {
            Representation::Preintersection(preintersection_from_json(text)?)
        }
    })
}
