//! (Co)monoid, bimonoid and Hopf structures on objects of a backend, the dual
//! monoid of a comonoid, the finite dual of a finite-dimensional monoid, and a
//! catalog of small examples.

pub mod backends;
pub mod catalog;
mod duality;
mod structures;

pub use cat_backends::HopfData;
pub use catalog::{catalog, CatalogError, CatalogItem, FiniteGroup, Params};
pub use duality::{
    alpha_is_monoid_iso, check_pairing_mul, check_pairing_unit, dual_comonoid, finite_dual, iota,
    pairing_report,
};
pub use structures::{
    tensor_comonoid, tensor_monoid, validate_structure, AnyStructure, BimonoidStr, ComonoidStr,
    HopfStr, MonoidStr,
};
