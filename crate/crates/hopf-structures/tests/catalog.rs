use cat_backends::{Category, HopfData, Obj};
use exactla::{FieldSpec, Matrix, Scalar};
use hopf_structures::catalog::{self, *};
use hopf_structures::{validate_structure, AnyStructure, ComonoidStr};

const Q: FieldSpec = FieldSpec::Rational;

fn f7() -> FieldSpec {
    FieldSpec::prime(7).unwrap()
}

fn vect() -> cat_backends::Cat {
    Category::vect(Q)
}

fn hopf_ok(h: &HopfData) {
    let s = catalog::hopf_str(h, &Category::vect(h.field())).unwrap();
    let r = validate_structure(&AnyStructure::Hopf(s));
    assert!(r.is_ok(), "{}: {r}", h.name);
}

#[test]
fn group_algebras_validate() {
    for g in ["C2", "C3", "C2xC2", "S3"] {
        let h = group_algebra(Q, g).unwrap();
        hopf_ok(&h);
        let k = function_algebra(Q, g).unwrap();
        hopf_ok(&k);
    }
    assert_eq!(group_algebra(Q, "S3").unwrap().dim(), 6);
    assert_eq!(group_algebra(Q, "C2xC2").unwrap().dim(), 4);
}

#[test]
fn c2_antipode_is_identity() {
    let h = group_algebra(Q, "C2").unwrap();
    assert_eq!(h.dim(), 2);
    assert_eq!(h.antipode, Matrix::identity(Q, 2));
}

#[test]
fn s3_is_noncommutative() {
    let h = group_algebra(Q, "S3").unwrap();
    let sw = cat_backends::swap_matrix(Q, 6, 6);
    assert_ne!(h.mul.mul(&sw), h.mul);
}

// basis [1, g, x, gx]
fn sweedler_golden() -> (Matrix, Matrix, Matrix) {
    let mut mul = Matrix::zeros(Q, 4, 16);
    let table: [[(usize, i64); 4]; 4] = [
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, 1), (3, 1), (2, 1)],
        [(2, 1), (3, -1), (0, 0), (0, 0)],
        [(3, 1), (2, -1), (0, 0), (0, 0)],
    ];
    for i in 0..4 {
        for j in 0..4 {
            let (k, c) = table[i][j];
            mul.set(k, i * 4 + j, Scalar::from_i64(Q, c));
        }
    }
    let mut comul = Matrix::zeros(Q, 16, 4);
    let one = Scalar::one(Q);
    comul.set(0, 0, one.clone());
    comul.set(5, 1, one.clone());
    // Δx = x⊗1 + g⊗x
    comul.set(2 * 4, 2, one.clone());
    comul.set(4 + 2, 2, one.clone());
    // Δ(gx) = gx⊗g + 1⊗gx
    comul.set(3 * 4 + 1, 3, one.clone());
    comul.set(3, 3, one);
    let s = Matrix::from_i64(
        Q,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
    );
    (mul, comul, s)
}

#[test]
fn sweedler_matches_golden_tables() {
    let h = sweedler(Q);
    let (mul, comul, s) = sweedler_golden();
    assert_eq!(h.mul, mul);
    assert_eq!(h.comul, comul);
    assert_eq!(h.antipode, s);
    assert_eq!(h.labels, vec!["1", "g", "x", "gx"]);
    hopf_ok(&h);
}

#[test]
fn sweedler_antipode_has_order_four() {
    let h = sweedler(Q);
    let s2 = h.antipode.mul(&h.antipode);
    assert_ne!(s2, Matrix::identity(Q, 4));
    assert_eq!(s2.mul(&s2), Matrix::identity(Q, 4));
    assert_eq!(h.antipode_order(20), Some(4));
}

#[test]
fn taft_3_over_f7() {
    let f = f7();
    let h = taft(f, 3, &Scalar::from_i64(f, 2)).unwrap();
    assert_eq!(h.dim(), 9);
    hopf_ok(&h);
    // brute-force iteration of S
    let mut p = h.antipode.clone();
    let mut order = 1;
    while p != Matrix::identity(f, 9) {
        p = p.mul(&h.antipode);
        order += 1;
    }
    assert_eq!(order, 6);
}

#[test]
fn taft_parameter_errors() {
    let f = f7();
    assert!(matches!(
        taft(f, 3, &Scalar::from_i64(f, 3)),
        Err(CatalogError::BadParams(_))
    ));
    assert!(matches!(
        taft(f, 3, &Scalar::one(f)),
        Err(CatalogError::BadParams(_))
    ));
    assert!(matches!(
        taft(Q, 3, &Scalar::one(Q)),
        Err(CatalogError::BadParams(_))
    ));
    let f5 = FieldSpec::prime(5).unwrap();
    assert!(taft(f5, 4, &Scalar::from_i64(f5, 2)).is_ok());
}

#[test]
fn unknown_names() {
    let c = vect();
    assert!(matches!(
        catalog("nope", &c, &Params::default()),
        Err(CatalogError::UnknownName(_))
    ));
    assert!(matches!(
        catalog("taft", &c, &Params::default()),
        Err(CatalogError::BadParams(_))
    ));
    assert!(FiniteGroup::parse("D4").is_err());
    let p = Params {
        group: Some("C2".into()),
        ..Params::default()
    };
    match catalog("group_algebra", &c, &p).unwrap() {
        CatalogItem::Hopf(h) => assert_eq!(h.dim(), 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn algebras_validate() {
    let c = vect();
    let ms = [
        dual_numbers(&c).unwrap(),
        truncated_poly(&c, 4).unwrap(),
        matrix_algebra(&c, 2).unwrap(),
        matrix_algebra(&c, 3).unwrap(),
        product_algebra(&c).unwrap(),
        trivial_monoid(&c),
    ];
    for m in ms {
        let r = m.validate();
        assert!(r.is_ok(), "{r}");
    }
    for co in [
        matrix_coalgebra(&c, 2).unwrap(),
        group_coalgebra(&c, "S3").unwrap(),
        trivial_comonoid(&c),
    ] {
        assert!(co.validate().is_ok());
    }
}

#[test]
fn graded_algebras_validate() {
    let g = Category::graded(
        Q,
        cat_backends::AbelianGroup::cyclic(2),
        Some(cat_backends::Bichar::super_sign(Q)),
    )
    .unwrap();
    assert!(dual_numbers(&g).unwrap().validate().is_ok());
    assert!(product_algebra(&g).unwrap().validate().is_ok());
    assert!(truncated_poly(&g, 3).unwrap().validate().is_ok());
}

#[test]
fn kc2_r_matrix_is_triangular() {
    let h = group_algebra(Q, "C2").unwrap();
    let r = kc2_triangular_r(Q).unwrap();
    let cat = Category::mod_qt(h.clone(), r.clone()).unwrap();
    assert!(cat.symmetric);
    // R²¹R = 1⊗1 by direct expansion in kC₂⊗kC₂
    let mut prod = vec![Scalar::zero(Q); 4];
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let coef = &r.get(b, a) * &r.get(c, d);
            let k = ((a + c) % 2) * 2 + (b + d) % 2;
            prod[k] = &prod[k] + &coef;
        }
    }
    assert!(prod[0].is_one() && prod[1..].iter().all(Scalar::is_zero));
    assert!(kc2_triangular_r(FieldSpec::prime(2).unwrap()).is_err());
}

#[test]
fn yd_module_algebra_in_both_yd_backends() {
    let h = sweedler(Q);
    for cat in [Category::left_yd(h.clone()), Category::right_yd(h.clone())] {
        for l in [0, 1, 3] {
            let m = yd_module_algebra(&cat, &Scalar::from_i64(Q, l)).unwrap();
            let r = m.carrier.validate();
            assert!(r.is_ok(), "{} λ={l}: {r}", cat.name());
            assert!(m.validate().is_ok(), "{} λ={l}", cat.name());
        }
    }
    assert!(yd_module_algebra(&vect(), &Scalar::one(Q)).is_err());
}

#[test]
fn forced_failure_is_reported() {
    // kC₂ with Δ(g) = g⊗1
    let c = vect();
    let x = Obj::vect(&c, 2);
    let comul = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
    let counit = Matrix::from_i64(Q, &[&[1, 1]]);
    let bad = ComonoidStr::new(&x, comul, counit).unwrap();
    let r = validate_structure(&AnyStructure::Comonoid(bad));
    assert!(!r.is_ok());
    assert!(r.mentions("left-counit"));
}
