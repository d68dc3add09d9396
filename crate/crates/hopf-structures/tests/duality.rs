use cat_backends::{alpha, random, Category, Obj};
use exactla::{FieldSpec, Matrix, Scalar};
use hopf_structures::catalog::*;
use hopf_structures::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rational;

#[test]
fn trivial_comonoid_dualizes_to_trivial_monoid() {
    let c = Category::vect(Q);
    let m = dual_comonoid(&trivial_comonoid(&c));
    assert_eq!(m.mul.matrix, Matrix::identity(Q, 1));
    assert_eq!(m.unit.matrix, Matrix::identity(Q, 1));
}

#[test]
fn group_coalgebra_dualizes_to_function_algebra() {
    let c = Category::vect(Q);
    for g in ["C2", "C3", "S3"] {
        let m = dual_comonoid(&group_coalgebra(&c, g).unwrap());
        let k = function_algebra(Q, g).unwrap();
        assert_eq!(m.mul.matrix, k.mul);
        assert_eq!(m.unit.matrix, k.unit);
        assert!(m.validate().is_ok());
    }
}

#[test]
fn matrix_coalgebra_dualizes_to_matrix_algebra() {
    let c = Category::vect(Q);
    for n in [2, 3] {
        let m = dual_comonoid(&matrix_coalgebra(&c, n).unwrap());
        let a = matrix_algebra(&c, n).unwrap();
        assert_eq!(m.mul.matrix, a.mul.matrix);
        assert_eq!(m.unit.matrix, a.unit.matrix);
    }
}

#[test]
fn finite_dual_of_ground_field() {
    let c = Category::vect(Q);
    let (d, kappa) = finite_dual(&trivial_monoid(&c)).unwrap();
    assert_eq!(d.comul.matrix, Matrix::identity(Q, 1));
    assert_eq!(d.counit.matrix, Matrix::identity(Q, 1));
    assert_eq!(kappa.matrix, Matrix::identity(Q, 1));
}

#[test]
fn finite_dual_of_dual_numbers() {
    let c = Category::vect(Q);
    let (d, kappa) = finite_dual(&dual_numbers(&c).unwrap()).unwrap();
    // Δ(1*) = 1*⊗1*, Δ(ε*) = 1*⊗ε* + ε*⊗1*
    let expected = Matrix::from_i64(Q, &[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
    assert_eq!(d.comul.matrix, expected);
    assert_eq!(d.counit.matrix, Matrix::from_i64(Q, &[&[1, 0]]));
    assert_eq!(kappa.matrix.rank(), 2);
    assert!(d.validate().is_ok());
}

/// Δ(f)(a⊗b) = f((b₋₁a)b₀), written out over the structure constants.
fn left_yd_closed_form(a: &MonoidStr) -> Matrix {
    let x = &a.carrier;
    let d = x.dim;
    let act = x.action().unwrap();
    let coact = x.coaction().unwrap();
    let mul = &a.mul.matrix;
    let mut out = Matrix::zeros(Q, d * d, d);
    for i in 0..d {
        for j in 0..d {
            for (h, ch) in coact.iter().enumerate() {
                for b0 in 0..d {
                    let cb = ch.get(b0, j);
                    if cb.is_zero() {
                        continue;
                    }
                    for ha in 0..d {
                        let aa = act[h].get(ha, i);
                        if aa.is_zero() {
                            continue;
                        }
                        for k in 0..d {
                            let m = mul.get(k, ha * d + b0);
                            out.add_at(i * d + j, k, &(&(&cb * &aa) * &m));
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn left_yd_finite_dual_matches_closed_form() {
    let cat = Category::left_yd(sweedler(Q));
    for l in -2..=2 {
        let a = yd_module_algebra(&cat, &Scalar::from_i64(Q, l)).unwrap();
        let (d, _) = finite_dual(&a).unwrap();
        assert_eq!(d.comul.matrix, left_yd_closed_form(&a), "λ = {l}");
        // counit f ↦ f(1)
        assert_eq!(d.counit.matrix, a.unit.matrix.transpose());
        assert!(d.validate().is_ok());
    }
}

fn module_kxk(cat: &cat_backends::Cat) -> MonoidStr {
    // g swaps the two idempotents
    let x = Obj::module(
        cat,
        vec![
            Matrix::identity(Q, 2),
            Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]),
        ],
    )
    .unwrap();
    let p = product_algebra(&Category::vect(Q)).unwrap();
    MonoidStr::new(&x, p.mul.matrix, p.unit.matrix).unwrap()
}

fn comodule_dual_numbers(cat: &cat_backends::Cat) -> MonoidStr {
    // ε homogeneous of degree g
    let x = Obj::comodule(
        cat,
        vec![
            Matrix::from_i64(Q, &[&[1, 0], &[0, 0]]),
            Matrix::from_i64(Q, &[&[0, 0], &[0, 1]]),
        ],
    )
    .unwrap();
    let p = dual_numbers(&Category::vect(Q)).unwrap();
    MonoidStr::new(&x, p.mul.matrix, p.unit.matrix).unwrap()
}

fn small_algebras() -> Vec<MonoidStr> {
    let v = Category::vect(Q);
    let g = Category::graded(
        Q,
        cat_backends::AbelianGroup::cyclic(2),
        Some(cat_backends::Bichar::super_sign(Q)),
    )
    .unwrap();
    let kc2 = group_algebra(Q, "C2").unwrap();
    let qt = Category::mod_qt(kc2.clone(), kc2_triangular_r(Q).unwrap()).unwrap();
    let coqt = Category::comod_coqt(kc2, Matrix::from_i64(Q, &[&[1, 1], &[1, -1]])).unwrap();
    let h = sweedler(Q);
    let mut out = vec![
        trivial_monoid(&v),
        dual_numbers(&v).unwrap(),
        truncated_poly(&v, 3).unwrap(),
        product_algebra(&v).unwrap(),
        matrix_algebra(&v, 2).unwrap(),
        dual_numbers(&g).unwrap(),
        product_algebra(&g).unwrap(),
        module_kxk(&qt),
        comodule_dual_numbers(&coqt),
    ];
    for cat in [Category::left_yd(h.clone()), Category::right_yd(h)] {
        for l in [0, 1] {
            out.push(yd_module_algebra(&cat, &Scalar::from_i64(Q, l)).unwrap());
        }
    }
    out
}

#[test]
fn finite_dual_round_trip_through_alpha() {
    for a in small_algebras() {
        assert!(a.validate().is_ok(), "{}", a.carrier.cat.name());
        let (d, kappa) = finite_dual(&a).unwrap();
        let r = d.validate();
        assert!(r.is_ok(), "{}: {r}", a.carrier.cat.name());
        assert_eq!(kappa.matrix.rank(), a.dim());
        assert!(alpha_is_monoid_iso(&a).unwrap(), "{}", a.carrier.cat.name());
        assert_eq!(alpha(&a.carrier).matrix.rank(), a.dim());
    }
}

#[test]
fn finite_dual_of_bimonoid_is_bimonoid() {
    let v = Category::vect(Q);
    for h in [sweedler(Q), group_algebra(Q, "S3").unwrap()] {
        let s = hopf_str(&h, &v).unwrap();
        let (comonoid, _) = finite_dual(&s.bimonoid.monoid).unwrap();
        let monoid = dual_comonoid(&s.bimonoid.comonoid);
        let b = BimonoidStr { monoid, comonoid };
        let r = b.validate();
        assert!(r.is_ok(), "{}: {r}", h.name);
    }
}

/// C/I for a coideal I spanned by the columns of `k`, in Vect.
fn quotient(c: &ComonoidStr, k: &Matrix) -> ComonoidStr {
    let pi = k.transpose().kernel().transpose();
    let r = pi.rows();
    let s = pi.solve(&Matrix::identity(Q, r)).unwrap();
    let comul = pi.kron(&pi).mul(&c.comul.matrix).mul(&s);
    let counit = c.counit.matrix.mul(&s);
    let x = Obj::vect(&c.carrier.cat, r);
    ComonoidStr::new(&x, comul, counit).unwrap()
}

fn conjugate(c: &ComonoidStr, p: &Matrix) -> ComonoidStr {
    let pinv = p.inverse().unwrap();
    let comul = p.kron(p).mul(&c.comul.matrix).mul(&pinv);
    let counit = c.counit.matrix.mul(&pinv);
    ComonoidStr::new(&c.carrier, comul, counit).unwrap()
}

fn cols(d: usize, vs: &[&[i64]]) -> Matrix {
    if vs.is_empty() {
        return Matrix::zeros(Q, d, 0);
    }
    Matrix::from_fn(Q, d, vs.len(), |i, j| Scalar::from_i64(Q, vs[j][i]))
}

fn random_quotient_comonoid(rng: &mut ChaCha8Rng) -> ComonoidStr {
    let v = Category::vect(Q);
    let (c, k) = match rng.gen_range(0..4) {
        0 => {
            let g = ["C2", "C3", "C2xC2", "S3"][rng.gen_range(0..4)];
            let c = group_coalgebra(&v, g).unwrap();
            let n = c.dim();
            // merge a random set of group-likes into the first one
            let diffs: Vec<Vec<i64>> = (1..n)
                .filter(|_| rng.gen_bool(0.4))
                .map(|j| (0..n).map(|i| (i == 0) as i64 - (i == j) as i64).collect())
                .collect();
            let refs: Vec<&[i64]> = diffs.iter().map(|d| d.as_slice()).collect();
            (c, cols(n, &refs))
        }
        1 => {
            let c = matrix_coalgebra(&v, 2).unwrap();
            let k = match rng.gen_range(0..3) {
                0 => cols(4, &[]),
                1 => cols(4, &[&[0, 1, 0, 0]]),
                _ => cols(4, &[&[0, 0, 1, 0]]),
            };
            (c, k)
        }
        _ => {
            let h = if rng.gen_bool(0.5) {
                sweedler(Q)
            } else {
                function_algebra(Q, "C3").unwrap()
            };
            let s = hopf_str(&h, &v).unwrap();
            let c = s.bimonoid.comonoid;
            let k = if h.dim() == 4 {
                match rng.gen_range(0..4) {
                    0 => cols(4, &[&[0, 0, 1, 0]]),
                    1 => cols(4, &[&[0, 0, 0, 1]]),
                    2 => cols(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]),
                    _ => cols(4, &[&[-1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
                }
            } else {
                cols(3, &[])
            };
            (c, k)
        }
    };
    let q = quotient(&c, &k);
    let p = random::random_basis_change(&q.carrier, rng);
    conjugate(&q, &p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pairing_identities_on_quotient_comonoids(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_quotient_comonoid(&mut rng);
        prop_assert!(c.validate().is_ok());
        let d = dual_comonoid(&c);
        prop_assert!(d.validate().is_ok());
        prop_assert!(check_pairing_unit(&c, &d));
        prop_assert!(check_pairing_mul(&c, &d));
        prop_assert!(pairing_report(&c).is_ok());
    }
}

#[test]
fn pairing_identities_in_braided_backends() {
    for a in small_algebras() {
        let (c, _) = finite_dual(&a).unwrap();
        let r = pairing_report(&c);
        assert!(r.is_ok(), "{}: {r}", a.carrier.cat.name());
    }
}
