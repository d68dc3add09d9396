//! Concrete braided monoidal categories of finite-dimensional objects.
//!
//! Every backend stores an object as its dimension plus per-kind structure
//! matrices. Internal homs are realized on the space of matrices with index
//! `y·dim X + x`, so evaluation is tautological everywhere and duals are
//! `[X, 𝟙]`.

mod category;
pub mod closed_forms;
mod group;
mod hom;
mod hopf_data;
pub mod laurent;
mod monoidal;
mod object;
mod prerigid;
pub mod random;
mod report;

pub use category::{tensor_product_mul, Cat, Category, Kind};
pub use group::{AbelianGroup, Bichar};
pub use hom::{
    closure, factor_through, hom_space, is_subobject_basis, random_mor, restrict_mor, subobject,
};
pub use hopf_data::{braided_comul_product, check_hopf_axioms, swap_matrix, HopfData, Terms};
pub use monoidal::{
    braid, braid_inv, coqt_embed, curry, curry_dual, dual, dual_mor, ev, ev_hom, internal_hom,
    qt_embed, tensor, tensor_all, tensor_mor, tensor_power, try_tensor, uncurry, uncurry_dual,
    unit_obj,
};
pub use object::{Mor, Obj, ObjData, Structure};
pub use prerigid::{alpha, flat, sharp, theta, theta_inv};
pub use report::{Report, Violation};

use exactla::LaError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatError {
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("objects belong to different categories")]
    CategoryMismatch,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a morphism in {0}")]
    InvalidMorphism(String),
    #[error("backend {0} is not symmetric")]
    NotSymmetric(String),
    #[error("complex is unbounded")]
    Unbounded,
    #[error(transparent)]
    La(#[from] LaError),
}
