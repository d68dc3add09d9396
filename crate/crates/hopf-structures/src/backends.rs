//! Named backends, for batteries and the command line.

use std::sync::Arc;

use cat_backends::{AbelianGroup, Bichar, Cat, Category, Kind, Obj};
use exactla::{FieldSpec, Matrix, Scalar};

use crate::catalog::{
    dual_numbers, group_algebra, group_coalgebra, kc2_triangular_r, matrix_coalgebra,
    product_algebra, sweedler, trivial_monoid, trivial_r_form, yd_module_algebra, CatalogError,
};
use crate::{finite_dual, ComonoidStr, HopfData, MonoidStr};

/// R_a = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (a/2)(x⊗x − x⊗gx + gx⊗x + gx⊗gx) on the
/// Sweedler algebra, basis [1, g, x, gx].
pub fn sweedler_r(f: FieldSpec, a: &Scalar) -> Result<Matrix, CatalogError> {
    let half = Scalar::from_ratio(f, 1, 2)
        .map_err(|_| CatalogError::BadParams("needs characteristic ≠ 2".into()))?;
    let ah = &half * a;
    let mut r = Matrix::zeros(f, 4, 4);
    for (i, j, s) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
        r.set(i, j, &half * &Scalar::from_i64(f, s));
    }
    for (i, j, s) in [(2, 2, 1), (2, 3, -1), (3, 2, 1), (3, 3, 1)] {
        r.set(i, j, &ah * &Scalar::from_i64(f, s));
    }
    Ok(r)
}

/// r(g^a, g^b) = (−1)^{ab} on kC₂.
pub fn c2_sign_form(f: FieldSpec) -> Matrix {
    Matrix::from_i64(f, &[&[1, 1], &[1, -1]])
}

/// "sweedler" or a group name understood by [`crate::FiniteGroup::parse`].
pub fn hopf_by_name(f: FieldSpec, name: &str) -> Result<Arc<HopfData>, CatalogError> {
    match name {
        "sweedler" => Ok(sweedler(f)),
        g => group_algebra(f, g.strip_prefix('k').unwrap_or(g)),
    }
}

pub const BACKEND_NAMES: [&str; 8] = [
    "vect",
    "graded",
    "left_yd",
    "right_yd",
    "mod_qt",
    "comod_coqt",
    "comod_coqt_sign",
    "dg",
];

/// Backend by name. `graded` is super vector spaces; `mod_qt` uses the
/// triangular R on kC₂, R_1 on Sweedler and 1⊗1 otherwise; `comod_coqt`
/// uses the trivial form and `comod_coqt_sign` the sign form on kC₂.
pub fn backend(name: &str, hopf: Option<&str>, f: FieldSpec) -> Result<Cat, CatalogError> {
    let h = |default: &str| hopf_by_name(f, hopf.unwrap_or(default));
    Ok(match name {
        "vect" => Category::vect(f),
        "graded" => Category::graded(f, AbelianGroup::cyclic(2), Some(Bichar::super_sign(f)))?,
        "dg" => Category::dg_vect(f),
        "left_yd" => Category::left_yd(h("sweedler")?),
        "right_yd" => Category::right_yd(h("sweedler")?),
        "mod_qt" => {
            let h = h("C2")?;
            let r = match h.name.as_str() {
                "sweedler" => sweedler_r(f, &Scalar::one(f))?,
                "kC2" => kc2_triangular_r(f)?,
                _ => {
                    let n = h.dim();
                    let u = h.unit_index().unwrap_or(0);
                    Matrix::from_fn(f, n, n, |i, j| {
                        if i == u && j == u {
                            Scalar::one(f)
                        } else {
                            Scalar::zero(f)
                        }
                    })
                }
            };
            Category::mod_qt(h, r)?
        }
        "comod_coqt" => {
            let h = h("C2")?;
            let r = trivial_r_form(&h);
            Category::comod_coqt(h, r)?
        }
        "comod_coqt_sign" => Category::comod_coqt(group_algebra(f, "C2")?, c2_sign_form(f))?,
        other => return Err(CatalogError::UnknownName(other.to_string())),
    })
}

/// Vect, super vector spaces, both Yetter–Drinfeld categories over Sweedler,
/// kC₂-modules with the triangular R, kC₂-comodules with the trivial form, DgVect.
pub fn standard_backends(f: FieldSpec) -> Vec<Cat> {
    ["vect", "graded", "left_yd", "right_yd", "mod_qt", "comod_coqt", "dg"]
        .iter()
        .map(|n| backend(n, None, f).expect("standard backend"))
        .collect()
}

/// Small monoids available in `cat`: always 𝟙, plus dual numbers and k×k in
/// Vect and super vector spaces, the module algebras over Sweedler in the YD
/// categories, k×k with g swapping the idempotents in ModQT(kC₂), dual numbers
/// with ε of degree g in ComodCoQT(kC₂), and dual numbers with ε in degree 1 in
/// DgVect.
pub fn sample_monoids(cat: &Cat) -> Vec<MonoidStr> {
    let f = cat.field;
    let mut out = vec![trivial_monoid(cat)];
    let plain = |m: Result<MonoidStr, CatalogError>| m.expect("catalog algebra");
    let vect = Category::vect(f);
    let over = |x: Obj, m: &MonoidStr| {
        MonoidStr::new(&x, m.mul.matrix.clone(), m.unit.matrix.clone()).expect("same shape")
    };
    let c2 = |h: &HopfData| h.name == "kC2";
    match &cat.kind {
        Kind::Vect | Kind::Graded { .. } => {
            out.push(plain(dual_numbers(cat)));
            if let Ok(p) = product_algebra(cat) {
                out.push(p);
            }
        }
        Kind::LeftYD(h) | Kind::RightYD(h) if h.name == "sweedler" => {
            for l in [0, 1] {
                out.push(plain(yd_module_algebra(cat, &Scalar::from_i64(f, l))));
            }
        }
        Kind::ModQT { h, .. } if c2(h) => {
            let act = vec![
                Matrix::identity(f, 2),
                Matrix::from_i64(f, &[&[0, 1], &[1, 0]]),
            ];
            let x = Obj::module(cat, act).expect("swap action");
            out.push(over(x, &plain(product_algebra(&vect))));
        }
        Kind::ComodCoQT { h, .. } if c2(h) => {
            let coact = vec![
                Matrix::from_i64(f, &[&[1, 0], &[0, 0]]),
                Matrix::from_i64(f, &[&[0, 0], &[0, 1]]),
            ];
            let x = Obj::comodule(cat, coact).expect("grading");
            out.push(over(x, &plain(dual_numbers(&vect))));
        }
        Kind::DgVect => {
            let x = Obj::dg(cat, vec![0, 1], Matrix::zeros(f, 2, 2)).expect("zero differential");
            out.push(over(x, &plain(dual_numbers(&vect))));
        }
        _ => {}
    }
    out
}

/// Finite duals of [`sample_monoids`], plus kC₂ and the 2×2 matrix coalgebra in Vect.
pub fn sample_comonoids(cat: &Cat) -> Vec<ComonoidStr> {
    let mut out: Vec<ComonoidStr> = sample_monoids(cat)
        .iter()
        .map(|m| finite_dual(m).expect("finite dual").0)
        .collect();
    if matches!(cat.kind, Kind::Vect) {
        out.push(group_coalgebra(cat, "C2").expect("C2"));
        out.push(matrix_coalgebra(cat, 2).expect("M2"));
    }
    out
}
