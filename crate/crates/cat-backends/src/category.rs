use std::sync::Arc;

use exactla::{FieldSpec, Matrix, Scalar};

use crate::group::{AbelianGroup, Bichar};
use crate::hopf_data::HopfData;
use crate::CatError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Vect,
    Graded {
        group: AbelianGroup,
        bichar: Bichar,
    },
    LeftYD(Arc<HopfData>),
    RightYD(Arc<HopfData>),
    /// `r[i][j]` is the coefficient of h_i ⊗ h_j in R; `r_inv` likewise for R⁻¹.
    ModQT {
        h: Arc<HopfData>,
        r: Matrix,
        r_inv: Matrix,
    },
    /// `r[i][j]` = r(h_i, h_j); `r_inv` is the convolution inverse.
    ComodCoQT {
        h: Arc<HopfData>,
        r: Matrix,
        r_inv: Matrix,
    },
    DgVect,
}

/// A concrete braided category of finite-dimensional objects over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Category {
    pub field: FieldSpec,
    pub kind: Kind,
    pub symmetric: bool,
}

pub type Cat = Arc<Category>;

impl Category {
    pub fn vect(field: FieldSpec) -> Cat {
        Arc::new(Category {
            field,
            kind: Kind::Vect,
            symmetric: true,
        })
    }

    pub fn dg_vect(field: FieldSpec) -> Cat {
        Arc::new(Category {
            field,
            kind: Kind::DgVect,
            symmetric: true,
        })
    }

    pub fn graded(
        field: FieldSpec,
        group: AbelianGroup,
        bichar: Option<Bichar>,
    ) -> Result<Cat, CatError> {
        let bichar = bichar.unwrap_or_else(|| Bichar::trivial(field, &group));
        bichar.validate(&group)?;
        if bichar.table.iter().flatten().any(|s| s.field() != field) {
            return Err(CatError::FieldMismatch);
        }
        let symmetric = bichar.is_symmetric();
        Ok(Arc::new(Category {
            field,
            kind: Kind::Graded { group, bichar },
            symmetric,
        }))
    }

    pub fn left_yd(h: Arc<HopfData>) -> Cat {
        Arc::new(Category {
            field: h.field(),
            kind: Kind::LeftYD(h),
            symmetric: false,
        })
    }

    pub fn right_yd(h: Arc<HopfData>) -> Cat {
        Arc::new(Category {
            field: h.field(),
            kind: Kind::RightYD(h),
            symmetric: false,
        })
    }

    /// Modules over a quasitriangular Hopf algebra; the axioms on R are checked.
    pub fn mod_qt(h: Arc<HopfData>, r: Matrix) -> Result<Cat, CatError> {
        let n = h.dim();
        if r.rows() != n || r.cols() != n {
            return Err(CatError::InvalidStructure(
                "R must be an n×n coefficient table".into(),
            ));
        }
        let r_inv = qt::check_quasitriangular(&h, &r)?;
        let symmetric = qt::is_triangular(&h, &r);
        Ok(Arc::new(Category {
            field: h.field(),
            kind: Kind::ModQT { h, r, r_inv },
            symmetric,
        }))
    }

    /// Right comodules over a coquasitriangular Hopf algebra; the axioms on r are checked.
    pub fn comod_coqt(h: Arc<HopfData>, r: Matrix) -> Result<Cat, CatError> {
        let n = h.dim();
        if r.rows() != n || r.cols() != n {
            return Err(CatError::InvalidStructure("r must be an n×n table".into()));
        }
        let r_inv = qt::check_coquasitriangular(&h, &r)?;
        let symmetric = qt::is_cotriangular(&h, &r);
        Ok(Arc::new(Category {
            field: h.field(),
            kind: Kind::ComodCoQT { h, r, r_inv },
            symmetric,
        }))
    }

    pub fn hopf(&self) -> Option<&Arc<HopfData>> {
        match &self.kind {
            Kind::LeftYD(h) | Kind::RightYD(h) => Some(h),
            Kind::ModQT { h, .. } | Kind::ComodCoQT { h, .. } => Some(h),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match &self.kind {
            Kind::Vect => "vect".into(),
            Kind::Graded { group, .. } => format!("graded({})", group.name()),
            Kind::LeftYD(h) => format!("left_yd({})", h.name),
            Kind::RightYD(h) => format!("right_yd({})", h.name),
            Kind::ModQT { h, .. } => format!("mod_qt({})", h.name),
            Kind::ComodCoQT { h, .. } => format!("comod_coqt({})", h.name),
            Kind::DgVect => "dg_vect".into(),
        }
    }
}

/// Elementwise arithmetic in H^{⊗k} and the (co)quasitriangular axioms.
pub(crate) mod qt {
    use super::*;

    /// Product in the tensor power algebra H^{⊗k} of dense coordinate vectors.
    pub fn tensor_product_mul(h: &HopfData, k: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = h.dim();
        let f = h.field();
        let size = n.pow(k as u32);
        let mut out = vec![Scalar::zero(f); size];
        let digits = |mut i: usize| {
            let mut d = vec![0; k];
            for t in (0..k).rev() {
                d[t] = i % n;
                i /= n;
            }
            d
        };
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let di = digits(i);
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let dj = digits(j);
                // expand ⊗_t (h_{di_t} h_{dj_t})
                let mut acc: Vec<(usize, Scalar)> = vec![(0, xi * yj)];
                for t in 0..k {
                    let mut next = Vec::new();
                    for (idx, c) in &acc {
                        for (m, d) in h.mul_terms(di[t], dj[t]) {
                            next.push((idx * n + m, c * d));
                        }
                    }
                    acc = next;
                }
                for (idx, c) in acc {
                    out[idx] = &out[idx] + &c;
                }
            }
        }
        out
    }

    fn unit_vec(h: &HopfData) -> Vec<Scalar> {
        (0..h.dim()).map(|i| h.unit.get(i, 0)).collect()
    }

    fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(x * y);
            }
        }
        out
    }

    fn r_vec(r: &Matrix) -> Vec<Scalar> {
        r.vectorize()
            .to_rows()
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect()
    }

    fn vec_to_table(v: &[Scalar], n: usize, f: FieldSpec) -> Matrix {
        Matrix::from_fn(f, n, n, |i, j| v[i * n + j].clone())
    }

    /// Returns R⁻¹ on success.
    pub fn check_quasitriangular(h: &HopfData, r: &Matrix) -> Result<Matrix, CatError> {
        let n = h.dim();
        let f = h.field();
        let rv = r_vec(r);
        let one = unit_vec(h);
        let one2 = kron_vec(&one, &one);
        let bad = |what: &str| {
            Err(CatError::InvalidStructure(format!(
                "R-matrix violates {what}"
            )))
        };
        // left multiplication by R on H⊗H, solved for R⁻¹
        let lmul = Matrix::from_fn(f, n * n, n * n, |_, _| Scalar::zero(f));
        let mut lmul = lmul;
        for j in 0..n * n {
            let mut e = vec![Scalar::zero(f); n * n];
            e[j] = Scalar::one(f);
            let p = tensor_product_mul(h, 2, &rv, &e);
            for (i, s) in p.into_iter().enumerate() {
                if !s.is_zero() {
                    lmul.set(i, j, s);
                }
            }
        }
        let rhs = Matrix::from_fn(f, n * n, 1, |i, _| one2[i].clone());
        let Ok(inv) = lmul.solve(&rhs) else {
            return bad("invertibility");
        };
        let inv_v: Vec<Scalar> = (0..n * n).map(|i| inv.get(i, 0)).collect();
        if tensor_product_mul(h, 2, &inv_v, &rv) != one2
            || tensor_product_mul(h, 2, &rv, &inv_v) != one2
        {
            return bad("invertibility");
        }
        // (Δ⊗id)R = R13 R23 and (id⊗Δ)R = R13 R12
        let mut delta_left = vec![Scalar::zero(f); n * n * n];
        let mut delta_right = vec![Scalar::zero(f); n * n * n];
        let mut r13 = vec![Scalar::zero(f); n * n * n];
        let mut r23 = vec![Scalar::zero(f); n * n * n];
        let mut r12 = vec![Scalar::zero(f); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let c = &rv[i * n + j];
                if c.is_zero() {
                    continue;
                }
                for (a, b, d) in h.comul_terms(i) {
                    let k = (a * n + b) * n + j;
                    delta_left[k] = &delta_left[k] + &(c * d);
                }
                for (a, b, d) in h.comul_terms(j) {
                    let k = (i * n + a) * n + b;
                    delta_right[k] = &delta_right[k] + &(c * d);
                }
                for (u, cu) in one.iter().enumerate() {
                    if cu.is_zero() {
                        continue;
                    }
                    let v = c * cu;
                    r13[(i * n + u) * n + j] = &r13[(i * n + u) * n + j] + &v;
                    r23[(u * n + i) * n + j] = &r23[(u * n + i) * n + j] + &v;
                    r12[(i * n + j) * n + u] = &r12[(i * n + j) * n + u] + &v;
                }
            }
        }
        if delta_left != tensor_product_mul(h, 3, &r13, &r23) {
            return bad("(Δ⊗id)R = R13 R23");
        }
        if delta_right != tensor_product_mul(h, 3, &r13, &r12) {
            return bad("(id⊗Δ)R = R13 R12");
        }
        for x in 0..n {
            let mut dx = vec![Scalar::zero(f); n * n];
            let mut dop = vec![Scalar::zero(f); n * n];
            for (a, b, c) in h.comul_terms(x) {
                dx[a * n + b] = &dx[a * n + b] + c;
                dop[b * n + a] = &dop[b * n + a] + c;
            }
            if tensor_product_mul(h, 2, &dop, &rv) != tensor_product_mul(h, 2, &rv, &dx) {
                return bad("Δ^op(h) R = R Δ(h)");
            }
        }
        Ok(vec_to_table(&inv_v, n, f))
    }

    pub fn is_triangular(h: &HopfData, r: &Matrix) -> bool {
        let n = h.dim();
        let rv = r_vec(r);
        let r21: Vec<Scalar> = (0..n * n)
            .map(|k| rv[(k % n) * n + k / n].clone())
            .collect();
        let one = unit_vec(h);
        tensor_product_mul(h, 2, &r21, &rv) == kron_vec(&one, &one)
    }

    /// Convolution (r * s)(x, y) = r(x₁, y₁) s(x₂, y₂) on basis pairs.
    pub fn convolve(h: &HopfData, r: &Matrix, s: &Matrix) -> Matrix {
        let n = h.dim();
        let f = h.field();
        Matrix::from_fn(f, n, n, |x, y| {
            let mut acc = Scalar::zero(f);
            for (x1, x2, c) in h.comul_terms(x) {
                for (y1, y2, d) in h.comul_terms(y) {
                    let t = &(c * d) * &(&r.get(*x1, *y1) * &s.get(*x2, *y2));
                    acc = &acc + &t;
                }
            }
            acc
        })
    }

    /// Returns the convolution inverse of r on success.
    pub fn check_coquasitriangular(h: &HopfData, r: &Matrix) -> Result<Matrix, CatError> {
        let n = h.dim();
        let f = h.field();
        let bad = |what: &str| {
            Err(CatError::InvalidStructure(format!(
                "r-form violates {what}"
            )))
        };
        let eps = Matrix::from_fn(f, n, n, |x, y| &h.counit_of(x) * &h.counit_of(y));
        // r * s = ε⊗ε is linear in s
        let mut sys = Matrix::zeros(f, n * n, n * n);
        for x in 0..n {
            for y in 0..n {
                for (x1, x2, c) in h.comul_terms(x) {
                    for (y1, y2, d) in h.comul_terms(y) {
                        let t = &(c * d) * &r.get(*x1, *y1);
                        sys.add_at(x * n + y, x2 * n + y2, &t);
                    }
                }
            }
        }
        let Ok(sv) = sys.solve(&eps.vectorize()) else {
            return bad("convolution invertibility");
        };
        let s = sv.reshape(n, n);
        if convolve(h, &s, r) != eps || convolve(h, r, &s) != eps {
            return bad("convolution invertibility");
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // r(xy, z) = r(x, z₁) r(y, z₂)
                    let mut lhs = Scalar::zero(f);
                    for (k, c) in h.mul_terms(x, y) {
                        lhs = &lhs + &(c * &r.get(*k, z));
                    }
                    let mut rhs = Scalar::zero(f);
                    for (z1, z2, c) in h.comul_terms(z) {
                        rhs = &rhs + &(c * &(&r.get(x, *z1) * &r.get(y, *z2)));
                    }
                    if lhs != rhs {
                        return bad("r(xy,z) = r(x,z₁)r(y,z₂)");
                    }
                    // r(x, yz) = r(x₁, z) r(x₂, y)
                    let mut lhs = Scalar::zero(f);
                    for (k, c) in h.mul_terms(y, z) {
                        lhs = &lhs + &(c * &r.get(x, *k));
                    }
                    let mut rhs = Scalar::zero(f);
                    for (x1, x2, c) in h.comul_terms(x) {
                        rhs = &rhs + &(c * &(&r.get(*x1, z) * &r.get(*x2, y)));
                    }
                    if lhs != rhs {
                        return bad("r(x,yz) = r(x₁,z)r(x₂,y)");
                    }
                }
                // r(x₂, y₂) y₁x₁ = r(x₁, y₁) x₂y₂
                let mut lhs = vec![Scalar::zero(f); n];
                let mut rhs = vec![Scalar::zero(f); n];
                for (x1, x2, c) in h.comul_terms(x) {
                    for (y1, y2, d) in h.comul_terms(y) {
                        let cd = c * d;
                        let a = &cd * &r.get(*x2, *y2);
                        for (k, e) in h.mul_terms(*y1, *x1) {
                            lhs[*k] = &lhs[*k] + &(&a * e);
                        }
                        let b = &cd * &r.get(*x1, *y1);
                        for (k, e) in h.mul_terms(*x2, *y2) {
                            rhs[*k] = &rhs[*k] + &(&b * e);
                        }
                    }
                }
                if lhs != rhs {
                    return bad("r(x₂,y₂)y₁x₁ = r(x₁,y₁)x₂y₂");
                }
            }
        }
        Ok(s)
    }

    pub fn is_cotriangular(h: &HopfData, r: &Matrix) -> bool {
        let n = h.dim();
        let f = h.field();
        let rt = r.transpose();
        let eps = Matrix::from_fn(f, n, n, |x, y| &h.counit_of(x) * &h.counit_of(y));
        convolve(h, r, &rt) == eps
    }
}

pub use qt::tensor_product_mul;
