//! Named Ω-magmas: the catalog (co)algebras seen through their operations.

use cat_backends::{unit_obj, Cat};
use exactla::Matrix;
use hopf_structures::catalog::{self as hc, CatalogError, CatalogItem, Params};

use crate::{OmegaMagma, Signature};

/// 𝕜 with its unit as the only operation.
pub fn ground_field(cat: &Cat) -> OmegaMagma {
    let sig = Signature::new([("unit", 0, 1)]).expect("one name");
    OmegaMagma::new(sig, &unit_obj(cat), vec![Matrix::identity(cat.field, 1)]).expect("1x1")
}

/// Names: ground_field, kxk (alias of product_algebra), and every monoid or
/// comonoid entry of the structure catalog.
pub fn catalog(name: &str, cat: &Cat, p: &Params) -> Result<OmegaMagma, CatalogError> {
    match name {
        "ground_field" => Ok(ground_field(cat)),
        "kxk" => Ok(OmegaMagma::from_monoid(&hc::product_algebra(cat)?)),
        _ => match hc::catalog(name, cat, p)? {
            CatalogItem::Monoid(m) => Ok(OmegaMagma::from_monoid(&m)),
            CatalogItem::Comonoid(c) => Ok(OmegaMagma::from_comonoid(&c)),
            _ => Err(CatalogError::BadParams(format!("{name} is not an Ω-magma"))),
        },
    }
}

pub const NAMES: [&str; 9] = [
    "ground_field",
    "dual_numbers",
    "truncated_poly",
    "kxk",
    "product_algebra",
    "matrix_algebra",
    "matrix_coalgebra",
    "group_coalgebra",
    "yd_module_algebra",
];
