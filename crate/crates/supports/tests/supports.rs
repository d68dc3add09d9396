use cat_backends::random::{random_obj_any, seed_objects};
use cat_backends::*;
use exactla::{FieldSpec, Matrix};
use hopf_structures::backends::standard_backends;
use hopf_structures::catalog::{dual_numbers, group_algebra};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supports::*;

const Q: FieldSpec = FieldSpec::Rational;

fn vect() -> Cat {
    Category::vect(Q)
}

fn v(c: &Cat, n: usize) -> Obj {
    Obj::vect(c, n)
}

#[test]
fn cosupport_of_evaluation_is_everything() {
    let c = vect();
    let (a, b) = (v(&c, 2), v(&c, 3));
    let h = internal_hom(&a, &b);
    let cs = cosupport(&ev_hom(&a, &b), &h, &a).unwrap();
    assert_eq!(cs.sub.dim(), 6);
    assert!(is_tensor_mono(&ev_hom(&a, &b), &h, &a).unwrap());
}

#[test]
fn cosupport_of_a_single_map() {
    // ψ(e₁⊗a) = f(a), ψ(e₂⊗a) = 0
    let c = vect();
    let (p, a) = (v(&c, 2), v(&c, 2));
    let f = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
    let psi = f.hstack(&Matrix::zeros(Q, 2, 2));
    let psi = Mor::new(&tensor(&p, &a), &a, psi).unwrap();
    let cs = cosupport(&psi, &p, &a).unwrap();
    assert_eq!(cs.sub.dim(), 1);
    assert!(cs.sub.basis().same_column_space(&f.vectorize()));
    // ψ = |ψ|(π⊗id)
    let back = cs
        .abs
        .after(&tensor_mor(&cs.corestriction, &Mor::identity(&a)));
    assert_eq!(back.matrix, psi.matrix);
    assert!(!is_tensor_mono(&psi, &p, &a).unwrap());
}

#[test]
fn zero_maps_have_zero_supports() {
    let c = vect();
    let (a, b, q) = (v(&c, 2), v(&c, 2), v(&c, 3));
    let rho = Mor::zero(&a, &tensor(&b, &q));
    assert_eq!(support(&rho, &b, &q).unwrap().sub.dim(), 0);
    let psi = Mor::zero(&tensor(&q, &a), &b);
    assert_eq!(cosupport(&psi, &q, &a).unwrap().sub.dim(), 0);
    assert!(!is_tensor_mono(&psi, &q, &a).unwrap());
    assert!(check_supp_cosupp_duality(&rho, &b, &q).unwrap().is_ok());
}

#[test]
fn support_of_a_single_coefficient() {
    // A = B = k, Q = k², ρ(1) = 1⊗e₁
    let c = vect();
    let (k, q) = (v(&c, 1), v(&c, 2));
    let rho = Mor::new(&k, &q, Matrix::from_i64(Q, &[&[1], &[0]])).unwrap();
    let s = support(&rho, &k, &q).unwrap();
    assert_eq!(s.sub.basis(), &Matrix::from_i64(Q, &[&[1], &[0]]));
    assert!(!is_tensor_epi(&rho, &k, &q).unwrap());
}

#[test]
fn support_in_left_yd_over_kc2() {
    // Q: g swaps e₁, e₂, both of degree g; B the same; A = span{e₁⊗e₁, e₂⊗e₂} ⊆ B⊗Q
    let cat = Category::left_yd(group_algebra(Q, "C2").unwrap());
    let id2 = Matrix::identity(Q, 2);
    let sw = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
    let z = Matrix::zeros(Q, 2, 2);
    let q = Obj::yd(&cat, vec![id2.clone(), sw.clone()], vec![z.clone(), id2.clone()]).unwrap();
    let bq = tensor(&q, &q);
    let incl = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
    let (a, i) = subobject(&bq, &incl).unwrap();
    assert_eq!(a.dim, 2);
    let s = support(&i, &q, &q).unwrap();
    assert_eq!(s.sub.dim(), 2);
    assert!(is_tensor_epi(&i, &q, &q).unwrap());
    assert!(s.abs.is_valid());
}

#[test]
fn codimension_one_span_is_not_tensor_epi() {
    let c = vect();
    let (a, b, q) = (v(&c, 2), v(&c, 1), v(&c, 3));
    let rho = Mor::new(&a, &q, Matrix::from_i64(Q, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
    assert_eq!(support(&rho, &b, &q).unwrap().sub.dim(), 2);
    assert!(!is_tensor_epi(&rho, &b, &q).unwrap());
}

#[test]
fn preorder_examples() {
    let c = vect();
    let (a, b) = (v(&c, 2), v(&c, 2));
    let k = v(&c, 1);
    let q = v(&c, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let rho = random_mor(&a, &tensor(&b, &q), &mut rng);
    match preorder_cmp(&rho, &q, &rho, &q, &b).unwrap() {
        Comparison::Equivalent(t, _) => {
            let s = support(&rho, &b, &q).unwrap();
            assert_eq!(t, Mor::identity(s.sub.obj()));
        }
        other => panic!("{other:?}"),
    }
    // collapse Q onto its first coordinate
    let tau = Mor::new(&q, &k, Matrix::from_i64(Q, &[&[1, 0]])).unwrap();
    let coarse = tensor_mor(&Mor::identity(&b), &tau).after(&rho);
    assert_eq!(preorder_cmp(&rho, &q, &coarse, &k, &b).unwrap().kind(), "finer");
    assert_eq!(preorder_cmp(&coarse, &k, &rho, &q, &b).unwrap().kind(), "coarser");
    // two rank-one coefficient maps that are not multiples of each other
    let r1 = Mor::new(&a, &b, Matrix::from_i64(Q, &[&[1, 0], &[0, 0]])).unwrap();
    let r2 = Mor::new(&a, &b, Matrix::from_i64(Q, &[&[0, 0], &[0, 1]])).unwrap();
    assert_eq!(preorder_cmp(&r1, &k, &r2, &k, &b).unwrap(), Comparison::Incomparable);
    assert!(check_preorder_transfer(&r1, &k, &r2, &k, &b).unwrap().is_ok());
    assert!(check_preorder_transfer(&rho, &q, &coarse, &k, &b).unwrap().is_ok());
}

#[test]
fn dual_numbers_coefficient_comeasuring_duality() {
    // ρ(1) = 1⊗1, ρ(ε) = ε⊗(1 + t) into k[t]/(t²)
    let c = vect();
    let a = dual_numbers(&c).unwrap().carrier;
    let rho = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 1], &[0, 1]]);
    let rho = Mor::new(&a, &tensor(&a, &a), rho).unwrap();
    let s = support(&rho, &a, &a).unwrap();
    assert_eq!(s.sub.dim(), 2);
    let cs = cosupport(
        &omega_structures::vee(&rho, &a, &a).unwrap(),
        &dual(&a),
        &a,
    )
    .unwrap();
    // ρ^∨(φ⊗1) = φ(1)·1, ρ^∨(φ⊗ε) = φ(1+t)·ε: the diagonal maps
    assert!(cs
        .sub
        .basis()
        .same_column_space(&Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]])));
    assert!(check_supp_cosupp_duality(&rho, &a, &a).unwrap().is_ok());
}

fn duality_cats() -> Vec<Cat> {
    standard_backends(Q)
        .into_iter()
        .filter(|c| c.symmetric || matches!(c.kind, Kind::LeftYD(_)))
        .collect()
}

fn sample(cat: &Cat, seeds: &[Obj], rng: &mut ChaCha8Rng) -> Obj {
    random_obj_any(cat, seeds, 3, rng)
}

#[test]
fn support_factorization_and_minimality() {
    for cat in standard_backends(Q) {
        let seeds = seed_objects(&cat, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let (a, b, q) = (
                sample(&cat, &seeds, &mut rng),
                sample(&cat, &seeds, &mut rng),
                sample(&cat, &seeds, &mut rng),
            );
            let rho = random_mor(&a, &tensor(&b, &q), &mut rng);
            let s = support(&rho, &b, &q).unwrap();
            let back = tensor_mor(&Mor::identity(&b), &s.sub.inclusion).after(&s.abs);
            assert_eq!(back.matrix, rho.matrix, "{}", cat.name());
            assert!(s.abs.is_valid(), "{}", cat.name());
            assert!(is_tensor_epi(&s.abs, &b, s.sub.obj()).unwrap(), "{}", cat.name());
            // the coefficient span of a morphism is already stable
            let span = coefficient_span(&rho, &b, &q);
            assert!(span.same_column_space(s.sub.basis()), "{}", cat.name());
            // dropping any basis vector loses the factorization
            let n = s.sub.dim();
            for i in 0..n {
                let keep: Vec<usize> = (0..n).filter(|&j| j != i).collect();
                let smaller = s.sub.basis().select_cols(&keep);
                let lift = Matrix::identity(Q, b.dim).kron(&smaller);
                let factors = lift.solve(&rho.matrix).is_ok();
                assert!(
                    !(factors && is_subobject_basis(&q, &smaller)),
                    "{}",
                    cat.name()
                );
            }
        }
    }
}

#[test]
fn tensor_mono_matches_cancellation() {
    // ψ is tensor-mono iff g ↦ ψ(g⊗id_A) is injective on linear maps g: P → P
    let c = vect();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let (p, a, b) = (v(&c, 2), v(&c, 2), v(&c, 1 + (rand::Rng::gen_range(&mut rng, 0..3))));
        let psi = if rand::Rng::gen_bool(&mut rng, 0.5) {
            random_mor(&tensor(&p, &a), &b, &mut rng)
        } else {
            // force a kernel: ψ(e₂⊗a) = ψ(e₁⊗a)
            let h = random_mor(&a, &b, &mut rng).matrix;
            Mor::new(&tensor(&p, &a), &b, h.hstack(&h)).unwrap()
        };
        let n = p.dim * p.dim;
        let cols: Vec<Matrix> = (0..n)
            .map(|i| {
                let g = Matrix::unit_column(Q, n, i).reshape(p.dim, p.dim);
                psi.matrix
                    .mul(&g.kron(&Matrix::identity(Q, a.dim)))
                    .vectorize()
            })
            .collect();
        let l = Matrix::hstack_all(Q, b.dim * p.dim * a.dim, &cols);
        assert_eq!(is_tensor_mono(&psi, &p, &a).unwrap(), l.rank() == n);
    }
}

#[test]
fn preorder_is_reflexive_and_transitive() {
    for cat in standard_backends(Q) {
        let seeds = seed_objects(&cat, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let (a, b, q1, q2, q3) = (
                sample(&cat, &seeds, &mut rng),
                sample(&cat, &seeds, &mut rng),
                sample(&cat, &seeds, &mut rng),
                sample(&cat, &seeds, &mut rng),
                sample(&cat, &seeds, &mut rng),
            );
            let r1 = random_mor(&a, &tensor(&b, &q1), &mut rng);
            let t1 = random_mor(&q1, &q2, &mut rng);
            let t2 = random_mor(&q2, &q3, &mut rng);
            let id = Mor::identity(&b);
            let r2 = tensor_mor(&id, &t1).after(&r1);
            let r3 = tensor_mor(&id, &t2).after(&r2);
            let c11 = preorder_cmp(&r1, &q1, &r1, &q1, &b).unwrap();
            assert_eq!(c11.kind(), "equivalent", "{}", cat.name());
            let c12 = preorder_cmp(&r1, &q1, &r2, &q2, &b).unwrap();
            let c23 = preorder_cmp(&r2, &q2, &r3, &q3, &b).unwrap();
            let c13 = preorder_cmp(&r1, &q1, &r3, &q3, &b).unwrap();
            assert!(c12.first_dominates() && c23.first_dominates(), "{}", cat.name());
            assert!(c13.first_dominates(), "{}", cat.name());
            if let Comparison::Finer(t) | Comparison::Equivalent(t, _) = &c12 {
                assert!(t.is_valid());
            }
            for (x, qx, y, qy) in [(&r1, &q1, &r2, &q2), (&r2, &q2, &r3, &q3)] {
                let r = check_preorder_transfer(x, qx, y, qy, &b).unwrap();
                assert!(r.is_ok(), "{}: {r}", cat.name());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn support_cosupport_duality(seed in any::<u64>(), which in 0usize..6) {
        let cats = duality_cats();
        let cat = &cats[which % cats.len()];
        let seeds = seed_objects(cat, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, q) = (
            sample(cat, &seeds, &mut rng),
            sample(cat, &seeds, &mut rng),
            sample(cat, &seeds, &mut rng),
        );
        let rho = random_mor(&a, &tensor(&b, &q), &mut rng);
        let r = check_supp_cosupp_duality(&rho, &b, &q).unwrap();
        prop_assert!(r.is_ok(), "{}: {}", cat.name(), r);
    }
}
