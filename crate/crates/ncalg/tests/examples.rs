use cat_backends::{Category, Obj};
use exactla::{FieldSpec, Matrix, Scalar};
use hopf_structures::catalog::group_algebra;
use ncalg::*;

const Q: FieldSpec = FieldSpec::Rational;

fn s(n: i64) -> Scalar {
    Scalar::from_i64(Q, n)
}

fn gens(n: usize) -> Obj {
    Obj::vect(&Category::vect(Q), n)
}

fn poly(u: &Obj, terms: &[(&[usize], i64)]) -> NCPoly {
    NCPoly::from_terms(u, terms.iter().map(|(w, c)| (Word(w.to_vec()), s(*c))))
}

/// Generators a, b, c, d with relations {b², bd + db, a − 1, c}.
fn dual_numbers() -> Presentation {
    let u = gens(4);
    let rels = vec![
        poly(&u, &[(&[1, 1], 1)]),
        poly(&u, &[(&[1, 3], 1), (&[3, 1], 1)]),
        poly(&u, &[(&[0], 1), (&[], -1)]),
        poly(&u, &[(&[2], 1)]),
    ];
    Presentation::new(&u, rels).unwrap()
}

#[test]
fn tensor_algebra_components() {
    let u = gens(3);
    assert_eq!(tensor_algebra_component(&u, 0).dim, 1);
    assert_eq!(tensor_algebra_component(&u, 1), u);
    let cat = Category::left_yd(group_algebra(Q, "C2").unwrap());
    let sw = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
    let id = Matrix::identity(Q, 2);
    let z = Matrix::zeros(Q, 2, 2);
    let u = Obj::yd(&cat, vec![id.clone(), sw.clone()], vec![id, z]).unwrap();
    let t2 = tensor_algebra_component(&u, 2);
    assert_eq!(t2.dim, 4);
    // g acts diagonally: g·(x⊗y) = gx⊗gy
    assert_eq!(t2.action().unwrap()[1], sw.kron(&sw));
    assert_eq!(truncated_tensor_algebra(&u, 2).dim, 7);
}

#[test]
fn groebner_examples() {
    let u = gens(2);
    assert!(Presentation::free(&u).gb(3).is_empty());
    let p = Presentation::new(&u, vec![poly(&u, &[(&[1, 1], 1)])]).unwrap();
    for d in 2..6 {
        assert_eq!(p.gb(d).leads(), vec![Word(vec![1, 1])]);
    }
    let dn = dual_numbers();
    let gb = dn.gb(3);
    let u4 = gens(4);
    assert_eq!(
        gb.elements(),
        vec![
            poly(&u4, &[(&[], -1), (&[0], 1)]),
            poly(&u4, &[(&[2], 1)]),
            poly(&u4, &[(&[1, 1], 1)]),
            poly(&u4, &[(&[3, 1], 1), (&[1, 3], 1)]),
        ]
    );
    assert_eq!(
        dn.rendered_basis(3),
        vec!["a - 1", "c", "b^2", "db + bd"]
    );
}

#[test]
fn normal_form_examples() {
    let dn = dual_numbers();
    let u = dn.gens.clone();
    for r in &dn.relations {
        assert!(dn.normal_form(r, 3).unwrap().is_zero());
    }
    let db = poly(&u, &[(&[3, 1], 1)]);
    assert_eq!(dn.normal_form(&db, 3).unwrap(), poly(&u, &[(&[1, 3], -1)]));
    let w = poly(&u, &[(&[1, 3, 3], 2), (&[3], 1)]);
    assert_eq!(dn.normal_form(&w, 3).unwrap(), w);
    // a·d·b·a ↦ −bd
    let x = poly(&u, &[(&[0, 3, 1, 0], 1)]);
    assert_eq!(dn.normal_form(&x, 4).unwrap(), poly(&u, &[(&[1, 3], -1)]));
    assert_eq!(
        dn.normal_form(&x, 3),
        Err(NcError::DegreeExceedsBound { degree: 4, bound: 3 })
    );
}

#[test]
fn truncated_basis_examples() {
    assert_eq!(Presentation::free(&gens(1)).truncated_basis(4).dims, vec![1; 5]);
    let dn = dual_numbers();
    let tb = dn.truncated_basis(3);
    assert_eq!(tb.dims, vec![1, 2, 2, 2]);
    assert_eq!(
        tb.words[2],
        vec![Word(vec![1, 3]), Word(vec![3, 3])]
    );
    assert_eq!(dn.truncated_basis(4).dims, vec![1, 2, 2, 2, 2]);
    let u = gens(3);
    let all = (0..3).map(|i| NCPoly::generator(&u, i)).collect();
    let p = Presentation::new(&u, all).unwrap();
    assert_eq!(p.truncated_basis(3).dims, vec![1, 0, 0, 0]);
}

#[test]
fn inhomogeneous_overlap_is_completed() {
    // xy − 1 and yx: the overlap xyx gives x ≡ 0 at bound 3, hence 1 ≡ 0
    let u = gens(2);
    let rels = vec![poly(&u, &[(&[0, 1], 1), (&[], -1)]), poly(&u, &[(&[1, 0], 1)])];
    let p = Presentation::new(&u, rels).unwrap();
    assert_eq!(p.gb(3).leads(), vec![Word::empty()]);
    assert_eq!(p.truncated_basis(3).dims, vec![0, 0, 0, 0]);
    assert_eq!(p.gb(2).leads(), vec![Word(vec![0, 1]), Word(vec![1, 0])]);
    let x = NCPoly::generator(&u, 0);
    let (nf, cert) = p.normal_form_certified(&x, 3).unwrap();
    assert!(nf.is_zero());
    assert_eq!(cert.expand(&u, &p.relations).unwrap(), x);
}

#[test]
fn rendering() {
    let u = gens(2);
    let names = default_names(2);
    assert_eq!(poly(&u, &[(&[0, 0, 1], 3), (&[], -2)]).render(&names), "3a^2b - 2");
    assert_eq!(NCPoly::zero(&u).render(&names), "0");
    assert_eq!(render_word(&Word(vec![1, 0]), &["x1".into(), "x2".into()]), "x2*x1");
}
