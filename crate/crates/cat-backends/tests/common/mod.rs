#![allow(dead_code)]

use cat_backends::{AbelianGroup, Bichar, Cat, Category};
use exactla::{FieldSpec, Matrix, Scalar};
use hopf_structures::catalog::{group_algebra, kc2_triangular_r, sweedler, trivial_r_form};

pub const Q: FieldSpec = FieldSpec::Rational;

pub fn f5() -> FieldSpec {
    FieldSpec::prime(5).unwrap()
}

/// χ(a, b) = (−1)^{a₁b₂} on C₂×C₂, not symmetric.
pub fn skew_bichar(f: FieldSpec) -> Bichar {
    let g = AbelianGroup::product(&[2, 2]);
    let table = (0..4)
        .map(|a| {
            (0..4)
                .map(|b| {
                    let (da, db) = (g.digits(a), g.digits(b));
                    if da[0] * db[1] % 2 == 1 {
                        -Scalar::one(f)
                    } else {
                        Scalar::one(f)
                    }
                })
                .collect()
        })
        .collect();
    Bichar { table }
}

/// R_a = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (a/2)(x⊗x − x⊗gx + gx⊗x + gx⊗gx), basis [1, g, x, gx].
pub fn sweedler_r(a: i64) -> Matrix {
    let half = Scalar::from_ratio(Q, 1, 2).unwrap();
    let ah = &half * &Scalar::from_i64(Q, a);
    let mut r = Matrix::zeros(Q, 4, 4);
    for (i, j, s) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
        r.set(i, j, &half * &Scalar::from_i64(Q, s));
    }
    for (i, j, s) in [(2, 2, 1), (2, 3, -1), (3, 2, 1), (3, 3, 1)] {
        r.set(i, j, &ah * &Scalar::from_i64(Q, s));
    }
    r
}

/// r(g^a, g^b) = (−1)^{ab} on kC₂.
pub fn c2_sign_form() -> Matrix {
    Matrix::from_i64(Q, &[&[1, 1], &[1, -1]])
}

pub fn backends() -> Vec<Cat> {
    let kc2 = group_algebra(Q, "C2").unwrap();
    let kc3 = group_algebra(Q, "C3").unwrap();
    let h4 = sweedler(Q);
    vec![
        Category::vect(Q),
        Category::vect(f5()),
        Category::graded(Q, AbelianGroup::cyclic(2), Some(Bichar::super_sign(Q))).unwrap(),
        Category::graded(Q, AbelianGroup::cyclic(3), None).unwrap(),
        Category::graded(Q, AbelianGroup::product(&[2, 2]), Some(skew_bichar(Q))).unwrap(),
        Category::left_yd(kc2.clone()),
        Category::left_yd(h4.clone()),
        Category::right_yd(kc3.clone()),
        Category::right_yd(h4.clone()),
        Category::mod_qt(kc2.clone(), kc2_triangular_r(Q).unwrap()).unwrap(),
        Category::mod_qt(h4.clone(), sweedler_r(1)).unwrap(),
        Category::comod_coqt(kc2, c2_sign_form()).unwrap(),
        Category::comod_coqt(kc3.clone(), trivial_r_form(&kc3)).unwrap(),
        Category::dg_vect(Q),
    ]
}
