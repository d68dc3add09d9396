//! Seeded generators of small objects for property batteries.

use exactla::random::{random_invertible, random_matrix};
use exactla::{FieldSpec, Matrix, Scalar};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::category::{Cat, Kind};
use crate::hom::{closure, subobject};
use crate::hopf_data::HopfData;
use crate::object::{basis_vec, elem_mul, terms_vec, Obj, Structure};

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let f = a.field();
    let top = a.hstack(&Matrix::zeros(f, a.rows(), b.cols()));
    let bot = Matrix::zeros(f, b.rows(), a.cols()).hstack(b);
    top.vstack(&bot)
}

/// X ⊕ Y.
pub fn direct_sum(x: &Obj, y: &Obj) -> Obj {
    let structure = match (&x.structure, &y.structure) {
        (Structure::Plain, Structure::Plain) => Structure::Plain,
        (Structure::Graded(a), Structure::Graded(b)) => {
            Structure::Graded(a.iter().chain(b).copied().collect())
        }
        (Structure::Yd { act: a1, coact: c1 }, Structure::Yd { act: a2, coact: c2 }) => {
            Structure::Yd {
                act: a1.iter().zip(a2).map(|(p, q)| block_diag(p, q)).collect(),
                coact: c1.iter().zip(c2).map(|(p, q)| block_diag(p, q)).collect(),
            }
        }
        (Structure::Module(a1), Structure::Module(a2)) => {
            Structure::Module(a1.iter().zip(a2).map(|(p, q)| block_diag(p, q)).collect())
        }
        (Structure::Comodule(a1), Structure::Comodule(a2)) => {
            Structure::Comodule(a1.iter().zip(a2).map(|(p, q)| block_diag(p, q)).collect())
        }
        (Structure::Dg { degrees: g1, d: d1 }, Structure::Dg { degrees: g2, d: d2 }) => {
            Structure::Dg {
                degrees: g1.iter().chain(g2).copied().collect(),
                d: block_diag(d1, d2),
            }
        }
        _ => panic!("direct sum across categories"),
    };
    Obj::new(x.cat.clone(), x.dim + y.dim, structure).expect("direct sum")
}

/// Transports the structure along a basis change p (new = p·old·p⁻¹).
/// For graded kinds p must preserve degrees.
pub fn conjugate(x: &Obj, p: &Matrix) -> Obj {
    let pi = p.inverse().expect("invertible basis change");
    let c = |m: &Matrix| p.mul(m).mul(&pi);
    let structure = match &x.structure {
        Structure::Plain => Structure::Plain,
        Structure::Graded(g) => Structure::Graded(g.clone()),
        Structure::Yd { act, coact } => Structure::Yd {
            act: act.iter().map(c).collect(),
            coact: coact.iter().map(c).collect(),
        },
        Structure::Module(a) => Structure::Module(a.iter().map(c).collect()),
        Structure::Comodule(a) => Structure::Comodule(a.iter().map(c).collect()),
        Structure::Dg { degrees, d } => Structure::Dg {
            degrees: degrees.clone(),
            d: c(d),
        },
    };
    Obj::new(x.cat.clone(), x.dim, structure).expect("conjugate")
}

/// Random invertible matrix preserving the grading of x (arbitrary for ungraded kinds).
pub fn random_basis_change<R: Rng + ?Sized>(x: &Obj, rng: &mut R) -> Matrix {
    let f = x.field();
    let degs: Option<Vec<i64>> = match &x.structure {
        Structure::Graded(g) => Some(g.iter().map(|&d| d as i64).collect()),
        Structure::Dg { degrees, .. } => Some(degrees.clone()),
        _ => None,
    };
    match degs {
        None => random_invertible(f, x.dim, rng),
        Some(degs) => loop {
            let m = Matrix::from_fn(f, x.dim, x.dim, |i, j| {
                if degs[i] == degs[j] {
                    exactla::random::random_scalar(f, rng)
                } else {
                    Scalar::zero(f)
                }
            });
            if m.rank() == x.dim {
                break m;
            }
        },
    }
}

fn scalar_mat(f: FieldSpec, s: Scalar) -> Matrix {
    Matrix::from_fn(f, 1, 1, |_, _| s.clone())
}

fn group_likes(h: &HopfData) -> Vec<usize> {
    let f = h.field();
    (0..h.dim())
        .filter(|&i| {
            let t = h.comul_terms(i);
            t.len() == 1 && t[0].0 == i && t[0].1 == i && t[0].2 == Scalar::one(f)
        })
        .collect()
}

/// Characters H → 𝕜 with values in {0, 1, −1}.
fn characters(h: &HopfData) -> Vec<Vec<Scalar>> {
    let f = h.field();
    let n = h.dim();
    let vals = [Scalar::zero(f), Scalar::one(f), -Scalar::one(f)];
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let chi: Vec<Scalar> = (0..n)
            .map(|_| {
                let v = vals[c % 3].clone();
                c /= 3;
                v
            })
            .collect();
        let value = |t: &[(usize, Scalar)]| {
            t.iter()
                .fold(Scalar::zero(f), |acc, (k, s)| &acc + &(s * &chi[*k]))
        };
        if !value(&h.unit_terms()).is_one() {
            continue;
        }
        let ok = (0..n).all(|i| (0..n).all(|j| value(h.mul_terms(i, j)) == &chi[i] * &chi[j]));
        if ok {
            out.push(chi);
        }
    }
    out
}

/// All one-dimensional objects built from group-like basis elements and {0,±1}-valued characters.
pub fn one_dim_objects(cat: &Cat) -> Vec<Obj> {
    let f = cat.field;
    let mut out = Vec::new();
    match &cat.kind {
        Kind::Vect => out.push(Obj::vect(cat, 1)),
        Kind::Graded { group, .. } => {
            for g in 0..group.order() {
                out.push(Obj::graded(cat, vec![g]).unwrap());
            }
        }
        Kind::DgVect => {
            for d in -1..=1 {
                out.push(Obj::dg(cat, vec![d], Matrix::zeros(f, 1, 1)).unwrap());
            }
        }
        Kind::LeftYD(h) | Kind::RightYD(h) => {
            let gl = group_likes(h);
            for chi in characters(h) {
                for &g in &gl {
                    let act = chi.iter().map(|s| scalar_mat(f, s.clone())).collect();
                    let coact = (0..h.dim())
                        .map(|k| {
                            scalar_mat(
                                f,
                                if k == g {
                                    Scalar::one(f)
                                } else {
                                    Scalar::zero(f)
                                },
                            )
                        })
                        .collect();
                    let o = Obj::yd(cat, act, coact).unwrap();
                    if o.validate().is_ok() {
                        out.push(o);
                    }
                }
            }
        }
        Kind::ModQT { h, .. } => {
            for chi in characters(h) {
                out.push(
                    Obj::module(cat, chi.iter().map(|s| scalar_mat(f, s.clone())).collect())
                        .unwrap(),
                );
            }
        }
        Kind::ComodCoQT { h, .. } => {
            for g in group_likes(h) {
                let coact = (0..h.dim())
                    .map(|k| {
                        scalar_mat(
                            f,
                            if k == g {
                                Scalar::one(f)
                            } else {
                                Scalar::zero(f)
                            },
                        )
                    })
                    .collect();
                out.push(Obj::comodule(cat, coact).unwrap());
            }
        }
    }
    out
}

fn left_mult(h: &HopfData, i: usize) -> Matrix {
    let n = h.dim();
    Matrix::from_fn(h.field(), n, n, |r, c| {
        h.mul_terms(i, c)
            .iter()
            .find(|(k, _)| *k == r)
            .map(|(_, s)| s.clone())
            .unwrap_or_else(|| Scalar::zero(h.field()))
    })
}

/// Regular coaction by Δ: component k sends e_j to Σ coefficient of (k⊗·) or (·⊗k).
fn regular_coaction(h: &HopfData, left: bool) -> Vec<Matrix> {
    let n = h.dim();
    let f = h.field();
    let mut out = vec![Matrix::zeros(f, n, n); n];
    for j in 0..n {
        for (a, b, c) in h.comul_terms(j) {
            let (k, row) = if left { (*a, *b) } else { (*b, *a) };
            out[k].add_at(row, j, c);
        }
    }
    out
}

/// Adjoint action: left h·m = h₁ m S(h₂), right m·h = S(h₁) m h₂.
fn adjoint_action(h: &HopfData, left: bool) -> Vec<Matrix> {
    let n = h.dim();
    let f = h.field();
    (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(f, n, n);
            for j in 0..n {
                let mut v = vec![Scalar::zero(f); n];
                for (a, b, c) in h.comul_terms(i) {
                    let (l, r) = if left {
                        (basis_vec(h, *a), terms_vec(h, h.s_terms(*b)))
                    } else {
                        (terms_vec(h, h.s_terms(*a)), basis_vec(h, *b))
                    };
                    let p = elem_mul(h, &elem_mul(h, &l, &basis_vec(h, j)), &r);
                    for (k, s) in p.iter().enumerate() {
                        v[k] = &v[k] + &(s * c);
                    }
                }
                for (k, s) in v.into_iter().enumerate() {
                    m.set(k, j, s);
                }
            }
            m
        })
        .collect()
}

/// Regular objects: H with the adjoint action and regular coaction (YD kinds),
/// left multiplication (ModQT) or the regular coaction (ComodCoQT).
pub fn regular_objects(cat: &Cat) -> Vec<Obj> {
    match &cat.kind {
        Kind::LeftYD(h) => {
            vec![Obj::yd(cat, adjoint_action(h, true), regular_coaction(h, true)).unwrap()]
        }
        Kind::RightYD(h) => {
            vec![Obj::yd(cat, adjoint_action(h, false), regular_coaction(h, false)).unwrap()]
        }
        Kind::ModQT { h, .. } => {
            vec![Obj::module(cat, (0..h.dim()).map(|i| left_mult(h, i)).collect()).unwrap()]
        }
        Kind::ComodCoQT { h, .. } => vec![Obj::comodule(cat, regular_coaction(h, false)).unwrap()],
        Kind::DgVect => {
            let f = cat.field;
            let d = Matrix::from_i64(f, &[&[0, 1], &[0, 0]]);
            vec![Obj::dg(cat, vec![0, 1], d).unwrap()]
        }
        _ => vec![],
    }
}

/// Small indecomposable-ish building blocks: one-dimensional objects and
/// cyclic subobjects of the regular objects, of dimension at most `max_dim`.
pub fn seed_objects(cat: &Cat, max_dim: usize) -> Vec<Obj> {
    let mut out = one_dim_objects(cat);
    for reg in regular_objects(cat) {
        if reg.dim <= max_dim {
            out.push(reg.clone());
        }
        let f = cat.field;
        let n = reg.dim;
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(Matrix::unit_column(f, n, i));
            for j in i + 1..n {
                gens.push(Matrix::unit_column(f, n, i).add(&Matrix::unit_column(f, n, j)));
            }
        }
        for g in gens {
            let b = closure(&reg, &g);
            if b.cols() == 0 || b.cols() > max_dim {
                continue;
            }
            if let Ok((s, _)) = subobject(&reg, &b) {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Random object of dimension 1..=max_dim: a direct sum of seeds in a random basis.
pub fn random_obj<R: Rng + ?Sized>(seeds: &[Obj], max_dim: usize, rng: &mut R) -> Obj {
    assert!(!seeds.is_empty(), "no seed objects");
    let target = rng.gen_range(1..=max_dim);
    let mut acc: Option<Obj> = None;
    let mut tries = 0;
    while acc.as_ref().map_or(0, |a| a.dim) < target && tries < 20 {
        tries += 1;
        let s = seeds.choose(rng).unwrap();
        let cur = acc.as_ref().map_or(0, |a| a.dim);
        if cur + s.dim > max_dim || s.dim == 0 {
            continue;
        }
        acc = Some(match acc {
            None => s.clone(),
            Some(a) => direct_sum(&a, s),
        });
    }
    let x = acc.unwrap_or_else(|| seeds.iter().min_by_key(|s| s.dim).unwrap().clone());
    let p = random_basis_change(&x, rng);
    conjugate(&x, &p)
}

/// Random chain complex with degrees in [lo, hi] and dim ≤ max_dim.
pub fn random_dg_obj<R: Rng + ?Sized>(cat: &Cat, max_dim: usize, rng: &mut R) -> Obj {
    let f = cat.field;
    let target = rng.gen_range(1..=max_dim);
    let mut degrees = Vec::new();
    let mut pairs = Vec::new();
    while degrees.len() < target {
        let k = rng.gen_range(-1..=1i64);
        if degrees.len() + 2 <= target && rng.gen_bool(0.5) {
            pairs.push(degrees.len());
            degrees.push(k - 1);
            degrees.push(k);
        } else {
            degrees.push(k);
        }
    }
    let mut d = Matrix::zeros(f, degrees.len(), degrees.len());
    for p in pairs {
        d.set(p, p + 1, exactla::random::random_nonzero_scalar(f, rng));
    }
    let x = Obj::dg(cat, degrees, d).unwrap();
    let p = random_basis_change(&x, rng);
    conjugate(&x, &p)
}

/// Random graded object with dim ≤ max_dim.
pub fn random_graded_obj<R: Rng + ?Sized>(cat: &Cat, max_dim: usize, rng: &mut R) -> Obj {
    let Kind::Graded { group, .. } = &cat.kind else {
        panic!("graded backend expected")
    };
    let n = rng.gen_range(1..=max_dim);
    Obj::graded(
        cat,
        (0..n).map(|_| rng.gen_range(0..group.order())).collect(),
    )
    .unwrap()
}

/// Random object of any backend, dim ≤ max_dim.
pub fn random_obj_any<R: Rng + ?Sized>(
    cat: &Cat,
    seeds: &[Obj],
    max_dim: usize,
    rng: &mut R,
) -> Obj {
    match &cat.kind {
        Kind::Vect => Obj::vect(cat, rng.gen_range(1..=max_dim)),
        Kind::Graded { .. } => random_graded_obj(cat, max_dim, rng),
        Kind::DgVect => random_dg_obj(cat, max_dim, rng),
        _ => random_obj(seeds, max_dim, rng),
    }
}

/// Random matrix helper re-exported for batteries.
pub fn random_mat<R: Rng + ?Sized>(f: FieldSpec, r: usize, c: usize, rng: &mut R) -> Matrix {
    random_matrix(f, r, c, rng)
}
