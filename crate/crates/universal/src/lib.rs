//! Universal comeasuring monoids from A to B as finite presentations
//! T(U)/(Tambara relations), together with the checks of their universal
//! property, the bimonoid structure for A = B, a presentation of the Hopf
//! envelope, and round trips between comeasurings into P* and measurings
//! from P.

mod bimonoid;
mod duality;
mod hopf;
mod induced;
mod presentation;

pub use bimonoid::{bimonoid_structure, normalize_tensor2, render_tensor2, Bimonoid, Tensor2};
pub use duality::{apply_coefficients, duality_roundtrip, sample_comeasuring, word_values};
pub use hopf::{hopf_envelope_presentation, HopfEnvelope};
pub use induced::{induced_hom, Induced, InducedHom};
pub use presentation::{
    coaction_power, universal_presentation, Provenance, Source, UniversalComeasuring,
};

use cat_backends::CatError;
use ncalg::NcError;
use omega_structures::OmegaError;
use supports::SupportError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UniversalError {
    #[error("A and B have different signatures or backends")]
    SignatureMismatch,
    #[error("V is not a subobject of [A, B]: {0}")]
    NotSubobject(String),
    #[error("{0} is not a morphism of the backend")]
    NotMorphism(&'static str),
    #[error("backend {0} is not symmetric")]
    NotSymmetric(String),
    #[error("bimonoid structure needs A = B")]
    NotEndomorphic,
    #[error("V is not a submonoid of [A, A]: {0}")]
    NotSubmonoid(&'static str),
    #[error("Hopf envelope level must be at least 1, got {0}")]
    LevelTooLow(usize),
    #[error("comeasuring does not match the presentation: {0}")]
    Incompatible(String),
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Omega(#[from] OmegaError),
    #[error(transparent)]
    Support(#[from] SupportError),
    #[error(transparent)]
    Nc(#[from] NcError),
}
