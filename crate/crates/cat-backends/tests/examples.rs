mod common;

use cat_backends::laurent::{dg_to_comodule, Elem};
use cat_backends::*;
use common::*;
use exactla::{Matrix, Scalar};
use hopf_structures::catalog::{group_algebra, kc2_triangular_r, sweedler, trivial_r_form};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn s(v: i64) -> Matrix {
    Matrix::from_i64(Q, &[&[v]])
}

fn z1() -> Matrix {
    s(0)
}

fn kc2_left() -> Cat {
    Category::left_yd(group_algebra(Q, "C2").unwrap())
}

/// 1-dim LeftYD module over kC₂: g acts by `sign`, coaction concentrated in `deg`.
fn kc2_line(cat: &Cat, sign: i64, deg: usize) -> Obj {
    let coact = (0..2).map(|k| if k == deg { s(1) } else { z1() }).collect();
    Obj::yd(cat, vec![s(1), s(sign)], coact).unwrap()
}

#[test]
fn trivial_yd_module_over_commutative_h() {
    let cat = kc2_left();
    let x = Obj::yd(
        &cat,
        vec![Matrix::identity(Q, 2), Matrix::identity(Q, 2)],
        vec![Matrix::identity(Q, 2), Matrix::zeros(Q, 2, 2)],
    )
    .unwrap();
    assert!(x.validate().is_ok());
}

#[test]
fn signed_line_in_degree_g_is_yd() {
    let x = kc2_line(&kc2_left(), -1, 1);
    assert!(x.validate().is_ok());
}

#[test]
fn broken_structures_are_reported() {
    let dg = Category::dg_vect(Q);
    let d = Matrix::from_i64(Q, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
    let x = Obj::dg(&dg, vec![2, 1, 0], d).unwrap();
    assert!(x.validate().mentions("d-squared"));
    let d = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
    let x = Obj::dg(&dg, vec![0, 0], d).unwrap();
    assert!(x.validate().mentions("d-degree"));
    // coaction in degree g while g⊗g-twisted action is not a character
    let cat = Category::left_yd(sweedler(Q));
    let bad = Obj::yd(
        &cat,
        vec![s(1), s(2), z1(), z1()],
        vec![s(1), z1(), z1(), z1()],
    )
    .unwrap();
    assert!(!bad.validate().is_ok());
    assert!(Obj::graded(
        &Category::graded(Q, AbelianGroup::cyclic(2), None).unwrap(),
        vec![2]
    )
    .is_err());
}

#[test]
fn morphism_validity() {
    let g = Category::graded(Q, AbelianGroup::cyclic(2), None).unwrap();
    let x = Obj::graded(&g, vec![0, 1]).unwrap();
    assert!(Mor::identity(&x).is_valid());
    assert!(Mor::zero(&x, &x).is_valid());
    let shift = Mor::new(&x, &x, Matrix::from_i64(Q, &[&[0, 0], &[1, 0]])).unwrap();
    assert!(!shift.is_valid());
    let v = Obj::vect(&Category::vect(Q), 2);
    assert_eq!(
        Mor::new(&x, &v, Matrix::identity(Q, 2)).unwrap_err(),
        CatError::CategoryMismatch
    );
}

#[test]
fn unit_tensor_and_koszul_differential() {
    let dg = Category::dg_vect(Q);
    let x = Obj::dg(&dg, vec![1, 0], Matrix::from_i64(Q, &[&[0, 0], &[1, 0]])).unwrap();
    assert_eq!(tensor(&unit_obj(&dg), &x), x);
    // u in degree 1 with du = u', v in degree 2 with dv = v'
    let y = Obj::dg(&dg, vec![2, 1], Matrix::from_i64(Q, &[&[0, 0], &[1, 0]])).unwrap();
    let t = tensor(&x, &y);
    let (deg, d) = t.dg_parts().unwrap();
    assert_eq!(deg, &[3, 2, 2, 1]);
    // d(u⊗v) = du⊗v − u⊗dv
    let col: Vec<Scalar> = (0..4).map(|i| d.get(i, 0)).collect();
    let expected: Vec<Scalar> = [0, -1, 1, 0]
        .iter()
        .map(|&v| Scalar::from_i64(Q, v))
        .collect();
    assert_eq!(col, expected);
    assert!(t.validate().is_ok());
}

#[test]
fn yd_tensor_action_is_diagonal_for_group_likes() {
    let cat = kc2_left();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let seeds = random::seed_objects(&cat, 3);
    let x = random::random_obj(&seeds, 3, &mut rng);
    let y = random::random_obj(&seeds, 3, &mut rng);
    let t = tensor(&x, &y);
    let g = 1;
    assert_eq!(
        t.action().unwrap()[g],
        x.action().unwrap()[g].kron(&y.action().unwrap()[g])
    );
}

#[test]
fn braid_examples() {
    let v = Category::vect(Q);
    let (a, b) = (Obj::vect(&v, 2), Obj::vect(&v, 3));
    assert_eq!(braid(&a, &b).matrix, swap_matrix(Q, 2, 3));
    let dg = Category::dg_vect(Q);
    let odd = Obj::dg(&dg, vec![1], z1()).unwrap();
    assert_eq!(braid(&odd, &odd).matrix, s(-1));
    let even = Obj::dg(&dg, vec![2], z1()).unwrap();
    assert_eq!(braid(&odd, &even).matrix, s(1));
    // m of degree g, g·m' = −m': c(m⊗m') = g·m'⊗m = −m'⊗m
    let cat = kc2_left();
    let m = kc2_line(&cat, 1, 1);
    let mp = kc2_line(&cat, -1, 0);
    assert_eq!(braid(&m, &mp).matrix, s(-1));
    assert_eq!(braid(&mp, &m).matrix, s(1));
}

#[test]
fn dual_examples() {
    for cat in backends() {
        let one = unit_obj(&cat);
        assert_eq!(dual(&one), one, "{}", cat.name());
    }
    let g = Category::graded(Q, AbelianGroup::cyclic(3), None).unwrap();
    let x = Obj::graded(&g, vec![0, 1, 2]).unwrap();
    assert_eq!(dual(&x).graded_degrees().unwrap(), &[0, 2, 1]);
    // 1-dim YD module over Sweedler with g ↦ −1, x ↦ 0 and coaction by g
    let h = sweedler(Q);
    let cat = Category::left_yd(h.clone());
    let chi = [1, -1, 0, 0];
    let m = Obj::yd(
        &cat,
        chi.iter().map(|&c| s(c)).collect(),
        vec![z1(), s(1), z1(), z1()],
    )
    .unwrap();
    assert!(m.validate().is_ok());
    let md = dual(&m);
    assert!(md.validate().is_ok());
    // (hf)(m) = f((Sh)m): the dual character is χ∘S
    for k in 0..4 {
        let mut v = 0;
        for j in 0..4 {
            v += h.antipode.get(j, k).to_string().parse::<i64>().unwrap() * chi[j];
        }
        assert_eq!(md.action().unwrap()[k], s(v));
    }
}

#[test]
fn ev_examples() {
    let v = Category::vect(Q);
    assert_eq!(ev(&Obj::vect(&v, 1)).matrix, s(1));
    assert_eq!(
        ev(&Obj::vect(&v, 2)).matrix,
        Matrix::from_i64(Q, &[&[1, 0, 0, 1]])
    );
    let m = kc2_line(&kc2_left(), -1, 1);
    let x = random::direct_sum(&m, &kc2_line(&kc2_left(), 1, 0));
    assert!(ev(&x).is_valid());
}

#[test]
fn internal_hom_examples() {
    let v = Category::vect(Q);
    let y = Obj::vect(&v, 3);
    let one = unit_obj(&v);
    assert_eq!(internal_hom(&one, &y), y);
    // K is reshaping in Vect
    let (p, x) = (Obj::vect(&v, 2), Obj::vect(&v, 2));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let psi = random_mor(&tensor(&p, &x), &y, &mut rng);
    let k = curry(&p, &x, &psi);
    for yy in 0..3 {
        for xx in 0..2 {
            for pp in 0..2 {
                assert_eq!(
                    k.matrix.get(yy * 2 + xx, pp),
                    psi.matrix.get(yy, pp * 2 + xx)
                );
            }
        }
    }
    // LeftYD over Sweedler on 2-dim objects
    let cat = Category::left_yd(sweedler(Q));
    let seeds: Vec<Obj> = random::seed_objects(&cat, 2)
        .into_iter()
        .filter(|o| o.dim == 2)
        .collect();
    assert!(!seeds.is_empty());
    for a in &seeds {
        for b in &seeds {
            let psi = random_mor(&tensor(a, b), b, &mut rng);
            let k = curry(a, b, &psi);
            assert!(k.is_valid());
            assert_eq!(uncurry(&k, b, b), psi);
        }
    }
}

#[test]
fn theta_examples() {
    let v = Category::vect(Q);
    let (a, b) = (Obj::vect(&v, 2), Obj::vect(&v, 3));
    assert_eq!(theta(&a, &b).matrix, Matrix::identity(Q, 6));
    assert_eq!(theta_inv(&a, &b).matrix, Matrix::identity(Q, 6));
    let dg = Category::dg_vect(Q);
    let odd = Obj::dg(&dg, vec![1], z1()).unwrap();
    // θ(f⊗g)(a⊗b) = (−1)^{|g||a|} f(a)g(b): the Koszul sign against the naive pairing.
    // The backend is symmetric, so c⁻¹_{A,B*} = c_{B*,A} and θ^inv coincides with θ.
    assert_eq!(theta(&odd, &odd).matrix, s(-1));
    assert_eq!(theta_inv(&odd, &odd).matrix, s(-1));
    let even = Obj::dg(&dg, vec![2], z1()).unwrap();
    assert_eq!(theta(&odd, &even).matrix, s(1));
}

#[test]
fn flat_examples() {
    let v = Category::vect(Q);
    let one = unit_obj(&v);
    assert_eq!(flat(&Mor::identity(&one), &one).matrix, s(1));
    let (p, u) = (Obj::vect(&v, 2), Obj::vect(&v, 3));
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let f = random_mor(&p, &dual(&u), &mut rng);
    assert_eq!(flat(&f, &u).matrix, f.matrix.transpose());
    // signed kC₂ module: α is the signed double-dual map, still injective
    let cat = kc2_left();
    let m = random::direct_sum(&kc2_line(&cat, -1, 1), &kc2_line(&cat, -1, 0));
    let a = alpha(&m);
    assert!(a.is_valid());
    assert_eq!(a.matrix.rank(), 2);
    assert_eq!(a.matrix, Matrix::from_i64(Q, &[&[-1, 0], &[0, 1]]));
}

#[test]
fn qt_embed_examples() {
    let kc2 = group_algebra(Q, "C2").unwrap();
    // R = 1⊗1
    let r1 = Matrix::from_i64(Q, &[&[1, 0], &[0, 0]]);
    let cat = Category::mod_qt(kc2.clone(), r1).unwrap();
    let sign = Obj::module(&cat, vec![s(1), s(-1)]).unwrap();
    let e = qt_embed(&sign).unwrap();
    assert_eq!(e.coaction().unwrap(), &[s(1), z1()]);
    // triangular R on the sign representation: δm = g⊗m, braiding −1
    let cat = Category::mod_qt(kc2.clone(), kc2_triangular_r(Q).unwrap()).unwrap();
    let sign = Obj::module(&cat, vec![s(1), s(-1)]).unwrap();
    let e = qt_embed(&sign).unwrap();
    assert_eq!(e.coaction().unwrap(), &[z1(), s(1)]);
    assert_eq!(braid(&e, &e).matrix, s(-1));
    assert_eq!(braid(&sign, &sign).matrix, s(-1));
    // commutative H with r = ε⊗ε: mh = ε(h)m
    let kc3 = group_algebra(Q, "C3").unwrap();
    let cat = Category::comod_coqt(kc3.clone(), trivial_r_form(&kc3)).unwrap();
    let x = Obj::comodule(&cat, vec![z1(), s(1), z1()]).unwrap();
    let e = coqt_embed(&x).unwrap();
    assert_eq!(e.action().unwrap(), &[s(1), s(1), s(1)]);
    assert!(qt_embed(&x).is_err());
}

#[test]
fn dg_comodule_examples() {
    let dg = Category::dg_vect(Q);
    let f = Q;
    // zero differential in degree 0: ρ(a) = a⊗1
    let x = Obj::dg(&dg, vec![0], z1()).unwrap();
    let c = dg_to_comodule(&x).unwrap();
    assert_eq!(c.rho[0].len(), 1);
    assert_eq!(c.rho[0][&(0, (0, 0))], Scalar::one(f));
    // k → k with d = id, a in degree 1: ρ(a) = a⊗c⁻¹ + da⊗vc⁻¹, and vc⁻¹ = −c⁻¹v
    let x = Obj::dg(&dg, vec![1, 0], Matrix::from_i64(Q, &[&[0, 0], &[1, 0]])).unwrap();
    let c = dg_to_comodule(&x).unwrap();
    let vc = Elem::basis(f, (0, 1)).mul(&Elem::basis(f, (-1, 0)));
    assert_eq!(vc.0[&(-1, 1)], -Scalar::one(f));
    assert_eq!(c.rho[0][&(0, (-1, 0))], Scalar::one(f));
    assert_eq!(c.rho[0][&(1, (-1, 1))], -Scalar::one(f));
    assert!(c.is_coassociative() && c.is_counital());
    // shift by one: every coefficient key gets multiplied by c⁻¹ on the right
    let sh = Obj::dg(&dg, vec![2, 1], Matrix::from_i64(Q, &[&[0, 0], &[1, 0]])).unwrap();
    let cs = dg_to_comodule(&sh).unwrap();
    for i in 0..2 {
        for ((j, key), val) in &c.rho[i] {
            let prod = Elem::basis(f, *key).mul(&Elem::basis(f, (-1, 0)));
            for (k2, e) in prod.0 {
                assert_eq!(cs.rho[i][&(*j, k2)], val * &e);
            }
        }
        assert_eq!(cs.rho[i].len(), c.rho[i].len());
    }
    // chain maps become colinear
    let y = Obj::dg(&dg, vec![1, 0], Matrix::from_i64(Q, &[&[0, 0], &[2, 0]])).unwrap();
    let g = Mor::new(&x, &y, Matrix::from_i64(Q, &[&[2, 0], &[0, 4]])).unwrap();
    assert!(g.is_valid());
    assert!(c.is_colinear(&dg_to_comodule(&y).unwrap(), &g.matrix));
    let not_chain = Matrix::from_i64(Q, &[&[1, 0], &[0, 1]]);
    assert!(!c.is_colinear(&dg_to_comodule(&y).unwrap(), &not_chain));
}

#[test]
fn dg_comodules_of_random_complexes() {
    let dg = Category::dg_vect(Q);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let x = random::random_dg_obj(&dg, 4, &mut rng);
        assert!(x.validate().is_ok());
        let c = dg_to_comodule(&x).unwrap();
        assert!(c.is_coassociative() && c.is_counital());
    }
}
