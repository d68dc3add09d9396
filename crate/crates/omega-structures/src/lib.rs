//! Ω-magmas (objects with arbitrary multi-ary operations), measurings
//! P⊗A → B and comeasurings A → B⊗Q between them, their twisted tensor
//! powers, and the ∨ / ∇ correspondence between the two.

pub mod battery;
pub mod catalog;
mod comeasuring;
mod magma;
pub mod random;
mod transfer;

use cat_backends::CatError;

pub use comeasuring::{
    check_comeasuring, check_measuring, comeasuring_residues, measuring_residues,
    twisted_power_comeas, twisted_power_meas, Comeasuring, Measuring,
};
pub use magma::{OmegaMagma, OpSym, Signature};
pub use transfer::{
    check_left_module, check_right_comodule, compose_comeasurings, comodule_to_module, nabla, nabla_inverse, vee,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OmegaError {
    #[error("duplicate operation name {0}")]
    DuplicateName(String),
    #[error("signatures differ")]
    SignatureMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Cat(#[from] CatError),
}
