//! Spectra, predistance polynomials and preintersection numbers of graphs,
//! the conversions between them, and distance-regularity checks.

pub mod drg;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod orthopoly;
pub mod poly;
pub mod preintersect;
pub mod rational;
pub mod spectral;
pub mod transforms;

pub use drg::{check_spectral_excess, DrgReport, Girth, ParityVerdict, Sufficient};
pub use error::{Error, Result};
pub use graph::{parse_graph, Graph, GraphFormat};
pub use orthopoly::{hoffman, polys_from_spectrum, PolySequence};
pub use poly::Poly;
pub use preintersect::{preintersection_from_polys, PreintersectionSet, RecurrenceMatrix};
pub use spectral::{spectrum_of_graph, walk_moments, Spectrum, WalkMoments};
pub use transforms::{Conversion, Representation, RepresentationKind, RoundtripReport};
