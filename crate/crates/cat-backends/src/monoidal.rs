use exactla::{Matrix, Scalar};

use crate::category::{Cat, Category, Kind};
use crate::hopf_data::{swap_matrix, HopfData};
use crate::object::{same_cat, Mor, Obj, Structure};
use crate::CatError;

pub fn unit_obj(cat: &Cat) -> Obj {
    let f = cat.field;
    let scalar = |s: Scalar| Matrix::from_fn(f, 1, 1, |_, _| s.clone());
    let structure = match &cat.kind {
        Kind::Vect => Structure::Plain,
        Kind::Graded { .. } => Structure::Graded(vec![0]),
        Kind::LeftYD(h) | Kind::RightYD(h) => Structure::Yd {
            act: (0..h.dim()).map(|i| scalar(h.counit_of(i))).collect(),
            coact: (0..h.dim()).map(|i| scalar(h.unit.get(i, 0))).collect(),
        },
        Kind::ModQT { h, .. } => {
            Structure::Module((0..h.dim()).map(|i| scalar(h.counit_of(i))).collect())
        }
        Kind::ComodCoQT { h, .. } => {
            Structure::Comodule((0..h.dim()).map(|i| scalar(h.unit.get(i, 0))).collect())
        }
        Kind::DgVect => Structure::Dg {
            degrees: vec![0],
            d: Matrix::zeros(f, 1, 1),
        },
    };
    Obj::new(cat.clone(), 1, structure).expect("unit object")
}

fn diagonal_action(h: &HopfData, ax: &[Matrix], ay: &[Matrix], dim: usize) -> Vec<Matrix> {
    (0..h.dim())
        .map(|i| {
            let mut acc = Matrix::zeros(h.field(), dim, dim);
            for (a, b, c) in h.comul_terms(i) {
                acc = acc.add(&ax[*a].kron(&ay[*b]).scale(c));
            }
            acc
        })
        .collect()
}

fn codiagonal_coaction(h: &HopfData, cx: &[Matrix], cy: &[Matrix], dim: usize) -> Vec<Matrix> {
    let n = h.dim();
    let mut out = vec![Matrix::zeros(h.field(), dim, dim); n];
    for a in 0..n {
        for b in 0..n {
            let t = h.mul_terms(a, b);
            if t.is_empty() {
                continue;
            }
            let k = cx[a].kron(&cy[b]);
            for (m, c) in t {
                out[*m] = out[*m].add(&k.scale(c));
            }
        }
    }
    out
}

fn sign_diag(degrees: &[i64], f: exactla::FieldSpec) -> Matrix {
    Matrix::from_fn(f, degrees.len(), degrees.len(), |i, j| {
        if i != j {
            Scalar::zero(f)
        } else if degrees[i].rem_euclid(2) == 0 {
            Scalar::one(f)
        } else {
            -Scalar::one(f)
        }
    })
}

pub fn try_tensor(x: &Obj, y: &Obj) -> Result<Obj, CatError> {
    if !same_cat(&x.cat, &y.cat) {
        return Err(CatError::CategoryMismatch);
    }
    let f = x.field();
    let dim = x.dim * y.dim;
    let structure = match (&x.cat.kind, &x.structure, &y.structure) {
        (_, Structure::Plain, Structure::Plain) => Structure::Plain,
        (Kind::Graded { group, .. }, Structure::Graded(dx), Structure::Graded(dy)) => {
            Structure::Graded(
                dx.iter()
                    .flat_map(|&a| dy.iter().map(move |&b| group.mul(a, b)))
                    .collect(),
            )
        }
        (_, Structure::Yd { act: ax, coact: cx }, Structure::Yd { act: ay, coact: cy }) => {
            let h = x.cat.hopf().unwrap();
            Structure::Yd {
                act: diagonal_action(h, ax, ay, dim),
                coact: codiagonal_coaction(h, cx, cy, dim),
            }
        }
        (_, Structure::Module(ax), Structure::Module(ay)) => {
            Structure::Module(diagonal_action(x.cat.hopf().unwrap(), ax, ay, dim))
        }
        (_, Structure::Comodule(cx), Structure::Comodule(cy)) => {
            Structure::Comodule(codiagonal_coaction(x.cat.hopf().unwrap(), cx, cy, dim))
        }
        (_, Structure::Dg { degrees: gx, d: dx }, Structure::Dg { degrees: gy, d: dy }) => {
            let degrees = gx
                .iter()
                .flat_map(|&a| gy.iter().map(move |&b| a + b))
                .collect();
            let d = dx
                .kron(&Matrix::identity(f, y.dim))
                .add(&sign_diag(gx, f).kron(dy));
            Structure::Dg { degrees, d }
        }
        _ => return Err(CatError::CategoryMismatch),
    };
    Obj::new(x.cat.clone(), dim, structure)
}

/// X ⊗ Y with the induced backend structure.
pub fn tensor(x: &Obj, y: &Obj) -> Obj {
    try_tensor(x, y).expect("tensor of objects in one category")
}

pub fn tensor_all(cat: &Cat, xs: &[Obj]) -> Obj {
    match xs.split_first() {
        None => unit_obj(cat),
        Some((first, rest)) => rest.iter().fold(first.clone(), |acc, x| tensor(&acc, x)),
    }
}

/// X^{⊗m}, with X^{⊗0} = 𝟙.
pub fn tensor_power(x: &Obj, m: usize) -> Obj {
    let mut acc = unit_obj(&x.cat);
    for k in 0..m {
        acc = if k == 0 { x.clone() } else { tensor(&acc, x) };
    }
    acc
}

pub fn tensor_mor(f: &Mor, g: &Mor) -> Mor {
    Mor::raw(
        &tensor(&f.src, &g.src),
        &tensor(&f.dst, &g.dst),
        f.matrix.kron(&g.matrix),
    )
}

/// c_{X,Y}: X⊗Y → Y⊗X.
pub fn braid(x: &Obj, y: &Obj) -> Mor {
    let f = x.field();
    let tau = swap_matrix(f, x.dim, y.dim);
    let m = match (&x.cat.kind, &x.structure, &y.structure) {
        (Kind::Vect, ..) => tau,
        (Kind::Graded { bichar, .. }, Structure::Graded(dx), Structure::Graded(dy)) => {
            let mut m = Matrix::zeros(f, x.dim * y.dim, x.dim * y.dim);
            for i in 0..x.dim {
                for j in 0..y.dim {
                    m.set(
                        j * x.dim + i,
                        i * y.dim + j,
                        bichar.at(dx[i], dy[j]).clone(),
                    );
                }
            }
            m
        }
        (Kind::LeftYD(h), Structure::Yd { coact: cx, .. }, Structure::Yd { act: ay, .. }) => {
            tau.mul(&sum_kron(h, cx, ay, |k| vec![(k, Scalar::one(f))]))
        }
        (Kind::RightYD(h), Structure::Yd { act: ax, .. }, Structure::Yd { coact: cy, .. }) => {
            let mut acc = Matrix::zeros(f, x.dim * y.dim, x.dim * y.dim);
            for k in 0..h.dim() {
                acc = acc.add(&ax[k].kron(&cy[k]));
            }
            tau.mul(&acc)
        }
        (Kind::ModQT { r, .. }, Structure::Module(ax), Structure::Module(ay))
        | (Kind::ComodCoQT { r, .. }, Structure::Comodule(ax), Structure::Comodule(ay)) => {
            tau.mul(&table_kron(r, ax, ay, x.dim * y.dim))
        }
        (Kind::DgVect, Structure::Dg { degrees: gx, .. }, Structure::Dg { degrees: gy, .. }) => {
            let mut m = Matrix::zeros(f, x.dim * y.dim, x.dim * y.dim);
            for i in 0..x.dim {
                for j in 0..y.dim {
                    let s = if (gx[i] * gy[j]).rem_euclid(2) == 0 {
                        Scalar::one(f)
                    } else {
                        -Scalar::one(f)
                    };
                    m.set(j * x.dim + i, i * y.dim + j, s);
                }
            }
            m
        }
        _ => panic!("braid of objects from different categories"),
    };
    Mor::raw(&tensor(x, y), &tensor(y, x), m)
}

/// Σ_k kron(left[k], right(k)) where right(k) is an action of an element given by terms.
fn sum_kron(
    h: &HopfData,
    left: &[Matrix],
    right_act: &[Matrix],
    elem: impl Fn(usize) -> Vec<(usize, Scalar)>,
) -> Matrix {
    let (dl, dr) = (left[0].rows(), right_act[0].rows());
    let mut acc = Matrix::zeros(h.field(), dl * dr, dl * dr);
    for (k, l) in left.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        let r = h.combine(right_act, &elem(k), dr);
        acc = acc.add(&l.kron(&r));
    }
    acc
}

fn table_kron(r: &Matrix, ax: &[Matrix], ay: &[Matrix], dim: usize) -> Matrix {
    let mut acc = Matrix::zeros(r.field(), dim, dim);
    for i in 0..r.rows() {
        for j in 0..r.cols() {
            if !r.is_entry_zero(i, j) {
                acc = acc.add(&ax[i].kron(&ay[j]).scale(&r.get(i, j)));
            }
        }
    }
    acc
}

/// c⁻¹_{X,Y}: Y⊗X → X⊗Y.
pub fn braid_inv(x: &Obj, y: &Obj) -> Mor {
    let f = x.field();
    let tau = swap_matrix(f, y.dim, x.dim);
    let m = match (&x.cat.kind, &x.structure, &y.structure) {
        (Kind::Vect, ..) => tau,
        (Kind::Graded { bichar, .. }, Structure::Graded(dx), Structure::Graded(dy)) => {
            let mut m = Matrix::zeros(f, x.dim * y.dim, x.dim * y.dim);
            for i in 0..x.dim {
                for j in 0..y.dim {
                    let s = bichar
                        .at(dx[i], dy[j])
                        .inv()
                        .expect("bicharacter values are units");
                    m.set(i * y.dim + j, j * x.dim + i, s);
                }
            }
            m
        }
        (Kind::LeftYD(h), Structure::Yd { coact: cx, .. }, Structure::Yd { act: ay, .. }) => {
            sum_kron(h, cx, ay, |k| h.sinv_terms(k).to_vec()).mul(&tau)
        }
        (Kind::RightYD(h), Structure::Yd { act: ax, .. }, Structure::Yd { coact: cy, .. }) => {
            let mut acc = Matrix::zeros(f, x.dim * y.dim, x.dim * y.dim);
            for k in 0..h.dim() {
                if cy[k].is_zero() {
                    continue;
                }
                acc = acc.add(&h.combine(ax, h.sinv_terms(k), x.dim).kron(&cy[k]));
            }
            acc.mul(&tau)
        }
        (Kind::ModQT { r_inv, .. }, Structure::Module(ax), Structure::Module(ay))
        | (Kind::ComodCoQT { r_inv, .. }, Structure::Comodule(ax), Structure::Comodule(ay)) => {
            table_kron(r_inv, ax, ay, x.dim * y.dim).mul(&tau)
        }
        (Kind::DgVect, ..) => braid(x, y).matrix.transpose(),
        _ => panic!("braid of objects from different categories"),
    };
    Mor::raw(&tensor(y, x), &tensor(x, y), m)
}

/// [X, Y] on the space of dim Y × dim X matrices, basis E_{y,x} at index y·dim X + x.
pub fn internal_hom(x: &Obj, y: &Obj) -> Obj {
    assert!(same_cat(&x.cat, &y.cat), "internal hom across categories");
    let f = x.field();
    let (dx, dy) = (x.dim, y.dim);
    let dim = dx * dy;
    let structure = match (&x.cat.kind, &x.structure, &y.structure) {
        (Kind::Vect, ..) => Structure::Plain,
        (Kind::Graded { group, .. }, Structure::Graded(gx), Structure::Graded(gy)) => {
            Structure::Graded(
                (0..dim)
                    .map(|k| group.mul(gy[k / dx], group.inv(gx[k % dx])))
                    .collect(),
            )
        }
        (
            Kind::LeftYD(h),
            Structure::Yd { act: ax, coact: cx },
            Structure::Yd { act: ay, coact: cy },
        ) => Structure::Yd {
            act: hom_action(h, ax, ay, |b| h.s_terms(b)),
            coact: hom_coaction(h, cx, cy, |b| h.sinv_terms(b)),
        },
        (
            Kind::RightYD(h),
            Structure::Yd { act: ax, coact: cx },
            Structure::Yd { act: ay, coact: cy },
        ) => Structure::Yd {
            act: hom_action(h, ax, ay, |b| h.sinv_terms(b)),
            coact: hom_coaction(h, cx, cy, |b| h.s_terms(b)),
        },
        (Kind::ModQT { h, .. }, Structure::Module(ax), Structure::Module(ay)) => {
            Structure::Module(hom_action(h, ax, ay, |b| h.s_terms(b)))
        }
        (Kind::ComodCoQT { h, .. }, Structure::Comodule(cx), Structure::Comodule(cy)) => {
            Structure::Comodule(hom_coaction(h, cx, cy, |b| h.s_terms(b)))
        }
        (
            Kind::DgVect,
            Structure::Dg {
                degrees: gx,
                d: ddx,
            },
            Structure::Dg {
                degrees: gy,
                d: ddy,
            },
        ) => {
            let degrees: Vec<i64> = (0..dim).map(|k| gy[k / dx] - gx[k % dx]).collect();
            let d = ddy.kron(&Matrix::identity(f, dx)).sub(
                &Matrix::identity(f, dy)
                    .kron(&ddx.transpose())
                    .mul(&sign_diag(&degrees, f)),
            );
            Structure::Dg { degrees, d }
        }
        _ => panic!("internal hom across categories"),
    };
    Obj::new(x.cat.clone(), dim, structure).expect("internal hom")
}

/// F ↦ Σ act_Y(h₁) F act_X(σ(h₂)).
fn hom_action<'a>(
    h: &'a HopfData,
    ax: &[Matrix],
    ay: &[Matrix],
    sigma: impl Fn(usize) -> &'a [(usize, Scalar)],
) -> Vec<Matrix> {
    let dx = ax[0].rows();
    let dy = ay[0].rows();
    let twisted: Vec<Matrix> = (0..h.dim())
        .map(|b| h.combine(ax, sigma(b), dx).transpose())
        .collect();
    (0..h.dim())
        .map(|i| {
            let mut acc = Matrix::zeros(h.field(), dx * dy, dx * dy);
            for (a, b, c) in h.comul_terms(i) {
                acc = acc.add(&ay[*a].kron(&twisted[*b]).scale(c));
            }
            acc
        })
        .collect()
}

/// F ↦ Σ_{a,b} [h_a σ(h_b)]_k C^Y_a F C^X_b, component k.
fn hom_coaction<'a>(
    h: &'a HopfData,
    cx: &[Matrix],
    cy: &[Matrix],
    sigma: impl Fn(usize) -> &'a [(usize, Scalar)],
) -> Vec<Matrix> {
    let n = h.dim();
    let dx = cx[0].rows();
    let dy = cy[0].rows();
    let f = h.field();
    let mut out = vec![Matrix::zeros(f, dx * dy, dx * dy); n];
    for a in 0..n {
        if cy[a].is_zero() {
            continue;
        }
        for b in 0..n {
            if cx[b].is_zero() {
                continue;
            }
            let ea = crate::object::basis_vec(h, a);
            let sb = crate::object::terms_vec(h, sigma(b));
            let coeff = crate::object::elem_mul(h, &ea, &sb);
            let k = cy[a].kron(&cx[b].transpose());
            for (m, c) in coeff.iter().enumerate() {
                if !c.is_zero() {
                    out[m] = out[m].add(&k.scale(c));
                }
            }
        }
    }
    out
}

/// X* = [X, 𝟙].
pub fn dual(x: &Obj) -> Obj {
    internal_hom(x, &unit_obj(&x.cat))
}

/// f*: Y* → X* for f: X → Y.
pub fn dual_mor(f: &Mor) -> Mor {
    Mor::raw(&dual(&f.dst), &dual(&f.src), f.matrix.transpose())
}

/// ev_{X,Y}: [X,Y] ⊗ X → Y, F ⊗ x ↦ F(x).
pub fn ev_hom(x: &Obj, y: &Obj) -> Mor {
    let f = x.field();
    let (dx, dy) = (x.dim, y.dim);
    let mut m = Matrix::zeros(f, dy, dy * dx * dx);
    for yy in 0..dy {
        for xx in 0..dx {
            m.set(yy, (yy * dx + xx) * dx + xx, Scalar::one(f));
        }
    }
    Mor::raw(&tensor(&internal_hom(x, y), x), y, m)
}

/// ev_X: X* ⊗ X → 𝟙.
pub fn ev(x: &Obj) -> Mor {
    ev_hom(x, &unit_obj(&x.cat))
}

/// K: (ψ: P⊗X → Y) ↦ (P → [X,Y]).
pub fn curry(p: &Obj, x: &Obj, psi: &Mor) -> Mor {
    let y = psi.dst.clone();
    let m = curry_matrix(p.dim, x.dim, y.dim, &psi.matrix);
    Mor::raw(p, &internal_hom(x, &y), m)
}

/// Matrix part of K: entry (y·dx + x, p) = ψ[y, p·dx + x].
pub(crate) fn curry_matrix(dp: usize, dx: usize, dy: usize, psi: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(psi.field(), dy * dx, dp);
    for yy in 0..dy {
        for xx in 0..dx {
            for pp in 0..dp {
                if !psi.is_entry_zero(yy, pp * dx + xx) {
                    m.set(yy * dx + xx, pp, psi.get(yy, pp * dx + xx));
                }
            }
        }
    }
    m
}

/// K⁻¹: (φ: P → [X,Y]) ↦ ev_{X,Y} ∘ (φ ⊗ id_X).
pub fn uncurry(phi: &Mor, x: &Obj, y: &Obj) -> Mor {
    ev_hom(x, y).after(&tensor_mor(phi, &Mor::identity(x)))
}

/// (g: P⊗U → 𝟙) ↦ (P → U*).
pub fn curry_dual(p: &Obj, u: &Obj, g: &Mor) -> Mor {
    curry(p, u, g)
}

/// (f: P → U*) ↦ (P⊗U → 𝟙).
pub fn uncurry_dual(f: &Mor, u: &Obj) -> Mor {
    uncurry(f, u, &unit_obj(&u.cat))
}

/// ModQT object as a left YD module: δm = R²¹(1⊗m).
pub fn qt_embed(m: &Obj) -> Result<Obj, CatError> {
    let Kind::ModQT { h, r, .. } = &m.cat.kind else {
        return Err(CatError::InvalidStructure(
            "qt_embed expects a ModQT object".into(),
        ));
    };
    let act = m.action().unwrap().to_vec();
    let coact = (0..h.dim())
        .map(|k| {
            let terms: Vec<(usize, Scalar)> = (0..h.dim()).map(|i| (i, r.get(i, k))).collect();
            h.combine(&act, &terms, m.dim)
        })
        .collect();
    Obj::yd(&Category::left_yd(h.clone()), act, coact)
}

/// ComodCoQT object as a right YD module: mh = r(m₁, h) m₀.
pub fn coqt_embed(m: &Obj) -> Result<Obj, CatError> {
    let Kind::ComodCoQT { h, r, .. } = &m.cat.kind else {
        return Err(CatError::InvalidStructure(
            "coqt_embed expects a ComodCoQT object".into(),
        ));
    };
    let coact = m.coaction().unwrap().to_vec();
    let act = (0..h.dim())
        .map(|j| {
            let terms: Vec<(usize, Scalar)> = (0..h.dim()).map(|k| (k, r.get(k, j))).collect();
            h.combine(&coact, &terms, m.dim)
        })
        .collect();
    Obj::yd(&Category::right_yd(h.clone()), act, coact)
}
