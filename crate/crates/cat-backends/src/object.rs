use std::ops::Deref;
use std::sync::Arc;

use exactla::{FieldSpec, Matrix, Scalar};

use crate::category::{Cat, Kind};
use crate::hopf_data::HopfData;
use crate::{CatError, Report};

/// Per-kind structure data. Coactions are stored by component:
/// a left coaction is δ(m) = Σ_h h ⊗ coact[h]·m, a right one ρ(m) = Σ_h coact[h]·m ⊗ h.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Plain,
    Graded(Vec<usize>),
    Yd {
        act: Vec<Matrix>,
        coact: Vec<Matrix>,
    },
    Module(Vec<Matrix>),
    Comodule(Vec<Matrix>),
    Dg {
        degrees: Vec<i64>,
        d: Matrix,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjData {
    pub cat: Cat,
    pub dim: usize,
    pub structure: Structure,
}

/// Cheaply clonable handle to an object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obj(pub Arc<ObjData>);

impl Deref for Obj {
    type Target = ObjData;
    fn deref(&self) -> &ObjData {
        &self.0
    }
}

pub(crate) fn same_cat(a: &Cat, b: &Cat) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_square(
    ms: &[Matrix],
    count: usize,
    dim: usize,
    f: FieldSpec,
    what: &str,
) -> Result<(), CatError> {
    if ms.len() != count {
        return Err(CatError::DimensionMismatch(format!(
            "{} {what} matrices, expected {count}",
            ms.len()
        )));
    }
    for m in ms {
        if m.rows() != dim || m.cols() != dim {
            return Err(CatError::DimensionMismatch(format!(
                "{what} matrix is {}x{}, expected {dim}x{dim}",
                m.rows(),
                m.cols()
            )));
        }
        if m.field() != f {
            return Err(CatError::FieldMismatch);
        }
    }
    Ok(())
}

impl Obj {
    /// Builds an object after checking shapes; axioms are left to [`Obj::validate`].
    pub fn new(cat: Cat, dim: usize, structure: Structure) -> Result<Obj, CatError> {
        let f = cat.field;
        match (&cat.kind, &structure) {
            (Kind::Vect, Structure::Plain) => {}
            (Kind::Graded { group, .. }, Structure::Graded(deg)) => {
                if deg.len() != dim {
                    return Err(CatError::DimensionMismatch(
                        "one degree per basis vector".into(),
                    ));
                }
                if let Some(d) = deg.iter().find(|&&d| d >= group.order()) {
                    return Err(CatError::InvalidStructure(format!(
                        "degree {d} outside the group"
                    )));
                }
            }
            (Kind::LeftYD(h) | Kind::RightYD(h), Structure::Yd { act, coact }) => {
                check_square(act, h.dim(), dim, f, "action")?;
                check_square(coact, h.dim(), dim, f, "coaction")?;
            }
            (Kind::ModQT { h, .. }, Structure::Module(act)) => {
                check_square(act, h.dim(), dim, f, "action")?
            }
            (Kind::ComodCoQT { h, .. }, Structure::Comodule(c)) => {
                check_square(c, h.dim(), dim, f, "coaction")?
            }
            (Kind::DgVect, Structure::Dg { degrees, d }) => {
                if degrees.len() != dim {
                    return Err(CatError::DimensionMismatch(
                        "one degree per basis vector".into(),
                    ));
                }
                check_square(std::slice::from_ref(d), 1, dim, f, "differential")?;
            }
            _ => {
                return Err(CatError::InvalidStructure(format!(
                    "structure does not fit {}",
                    cat.name()
                )))
            }
        }
        Ok(Obj(Arc::new(ObjData {
            cat,
            dim,
            structure,
        })))
    }

    pub fn vect(cat: &Cat, dim: usize) -> Obj {
        Obj::new(cat.clone(), dim, Structure::Plain).expect("plain object")
    }

    pub fn graded(cat: &Cat, degrees: Vec<usize>) -> Result<Obj, CatError> {
        Obj::new(cat.clone(), degrees.len(), Structure::Graded(degrees))
    }

    pub fn yd(cat: &Cat, act: Vec<Matrix>, coact: Vec<Matrix>) -> Result<Obj, CatError> {
        let dim = act.first().map(Matrix::rows).unwrap_or(0);
        Obj::new(cat.clone(), dim, Structure::Yd { act, coact })
    }

    pub fn module(cat: &Cat, act: Vec<Matrix>) -> Result<Obj, CatError> {
        let dim = act.first().map(Matrix::rows).unwrap_or(0);
        Obj::new(cat.clone(), dim, Structure::Module(act))
    }

    pub fn comodule(cat: &Cat, coact: Vec<Matrix>) -> Result<Obj, CatError> {
        let dim = coact.first().map(Matrix::rows).unwrap_or(0);
        Obj::new(cat.clone(), dim, Structure::Comodule(coact))
    }

    pub fn dg(cat: &Cat, degrees: Vec<i64>, d: Matrix) -> Result<Obj, CatError> {
        Obj::new(cat.clone(), degrees.len(), Structure::Dg { degrees, d })
    }

    pub fn field(&self) -> FieldSpec {
        self.cat.field
    }

    pub fn action(&self) -> Option<&[Matrix]> {
        match &self.structure {
            Structure::Yd { act, .. } | Structure::Module(act) => Some(act),
            _ => None,
        }
    }

    pub fn coaction(&self) -> Option<&[Matrix]> {
        match &self.structure {
            Structure::Yd { coact, .. } | Structure::Comodule(coact) => Some(coact),
            _ => None,
        }
    }

    /// Action of an arbitrary element given by sparse coordinates.
    pub fn act_by(&self, terms: &[(usize, Scalar)]) -> Matrix {
        let act = self.action().expect("object carries an action");
        let h = self.cat.hopf().expect("Hopf backend");
        h.combine(act, terms, self.dim)
    }

    pub fn graded_degrees(&self) -> Option<&[usize]> {
        match &self.structure {
            Structure::Graded(d) => Some(d),
            _ => None,
        }
    }

    pub fn dg_parts(&self) -> Option<(&[i64], &Matrix)> {
        match &self.structure {
            Structure::Dg { degrees, d } => Some((degrees, d)),
            _ => None,
        }
    }

    /// Coaction as one matrix M → H⊗M (left kinds) or M → M⊗H (right kinds).
    pub fn coaction_matrix(&self) -> Option<Matrix> {
        let c = self.coaction()?;
        let n = c.len();
        let f = self.field();
        let left = matches!(self.cat.kind, Kind::LeftYD(_));
        let mut out = Matrix::zeros(f, n * self.dim, self.dim);
        for (h, m) in c.iter().enumerate() {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    if !m.is_entry_zero(i, j) {
                        let row = if left { h * self.dim + i } else { i * n + h };
                        out.set(row, j, m.get(i, j));
                    }
                }
            }
        }
        Some(out)
    }

    /// Paired structure endomorphisms: f: X → Y is a morphism iff `y_k·f = f·x_k` for all k.
    pub(crate) fn structure_pairs(x: &Obj, y: &Obj) -> (Vec<Matrix>, Vec<Matrix>) {
        let f = x.field();
        match (&x.structure, &y.structure) {
            (Structure::Plain, Structure::Plain) => (vec![], vec![]),
            (Structure::Graded(dx), Structure::Graded(dy)) => {
                let order = match &x.cat.kind {
                    Kind::Graded { group, .. } => group.order(),
                    _ => unreachable!(),
                };
                let proj = |deg: &[usize], g: usize| {
                    Matrix::from_fn(f, deg.len(), deg.len(), |i, j| {
                        if i == j && deg[i] == g {
                            Scalar::one(f)
                        } else {
                            Scalar::zero(f)
                        }
                    })
                };
                (0..order).map(|g| (proj(dx, g), proj(dy, g))).unzip()
            }
            (Structure::Yd { act: ax, coact: cx }, Structure::Yd { act: ay, coact: cy }) => {
                let xs = ax.iter().chain(cx).cloned().collect();
                let ys = ay.iter().chain(cy).cloned().collect();
                (xs, ys)
            }
            (Structure::Module(ax), Structure::Module(ay))
            | (Structure::Comodule(ax), Structure::Comodule(ay)) => (ax.clone(), ay.clone()),
            (Structure::Dg { degrees: gx, d: dx }, Structure::Dg { degrees: gy, d: dy }) => {
                let mut degs: Vec<i64> = gx.iter().chain(gy).copied().collect();
                degs.sort();
                degs.dedup();
                let proj = |deg: &[i64], g: i64| {
                    Matrix::from_fn(f, deg.len(), deg.len(), |i, j| {
                        if i == j && deg[i] == g {
                            Scalar::one(f)
                        } else {
                            Scalar::zero(f)
                        }
                    })
                };
                let (mut xs, mut ys): (Vec<_>, Vec<_>) =
                    degs.iter().map(|&g| (proj(gx, g), proj(gy, g))).unzip();
                xs.push(dx.clone());
                ys.push(dy.clone());
                (xs, ys)
            }
            _ => unreachable!("objects share a category"),
        }
    }

    /// Structure endomorphisms of a single object.
    pub(crate) fn structure_maps(&self) -> Vec<Matrix> {
        Obj::structure_pairs(self, self).0
    }

    /// Checks every axiom of the backend; the report names each failure.
    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        match (&self.cat.kind, &self.structure) {
            (Kind::Vect, _) | (Kind::Graded { .. }, _) => {}
            (Kind::LeftYD(h), Structure::Yd { act, coact }) => {
                check_module(&mut r, h, act, self.dim, false);
                check_comodule(&mut r, h, coact, self.dim, false);
                if r.is_ok() {
                    check_yd(&mut r, h, act, coact, false);
                }
            }
            (Kind::RightYD(h), Structure::Yd { act, coact }) => {
                check_module(&mut r, h, act, self.dim, true);
                check_comodule(&mut r, h, coact, self.dim, true);
                if r.is_ok() {
                    check_yd(&mut r, h, act, coact, true);
                }
            }
            (Kind::ModQT { h, .. }, Structure::Module(act)) => {
                check_module(&mut r, h, act, self.dim, false)
            }
            (Kind::ComodCoQT { h, .. }, Structure::Comodule(c)) => {
                check_comodule(&mut r, h, c, self.dim, true)
            }
            (Kind::DgVect, Structure::Dg { degrees, d }) => {
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        if !d.is_entry_zero(i, j) && degrees[i] != degrees[j] - 1 {
                            r.push("d-degree", vec![i, j]);
                        }
                    }
                }
                r.check_eq(
                    "d-squared",
                    &d.mul(d),
                    &Matrix::zeros(self.field(), self.dim, self.dim),
                );
            }
            _ => r.push("shape", vec![]),
        }
        r
    }
}

fn check_module(r: &mut Report, h: &HopfData, act: &[Matrix], dim: usize, right: bool) {
    let f = h.field();
    let n = h.dim();
    r.check_eq(
        "unit-action",
        &h.combine(act, &h.unit_terms(), dim),
        &Matrix::identity(f, dim),
    );
    for i in 0..n {
        for j in 0..n {
            let lhs = if right {
                act[j].mul(&act[i])
            } else {
                act[i].mul(&act[j])
            };
            let rhs = h.combine(act, h.mul_terms(i, j), dim);
            if lhs != rhs {
                r.push("action-associativity", vec![i, j]);
            }
        }
    }
}

fn check_comodule(r: &mut Report, h: &HopfData, c: &[Matrix], dim: usize, right: bool) {
    let f = h.field();
    let n = h.dim();
    let counit: Vec<(usize, Scalar)> = (0..n).map(|k| (k, h.counit_of(k))).collect();
    r.check_eq(
        "counit",
        &h.combine(c, &counit, dim),
        &Matrix::identity(f, dim),
    );
    let mut lhs = vec![Matrix::zeros(f, dim, dim); n * n];
    for k in 0..n {
        for (a, b, s) in h.comul_terms(k) {
            lhs[a * n + b] = lhs[a * n + b].add(&c[k].scale(s));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let rhs = if right {
                c[a].mul(&c[b])
            } else {
                c[b].mul(&c[a])
            };
            if lhs[a * n + b] != rhs {
                r.push("coassociativity", vec![a, b]);
            }
        }
    }
}

/// Dense coordinates of the product x·y in H.
pub(crate) fn elem_mul(h: &HopfData, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    crate::category::tensor_product_mul(h, 1, x, y)
}

pub(crate) fn basis_vec(h: &HopfData, i: usize) -> Vec<Scalar> {
    let f = h.field();
    (0..h.dim())
        .map(|k| {
            if k == i {
                Scalar::one(f)
            } else {
                Scalar::zero(f)
            }
        })
        .collect()
}

pub(crate) fn terms_vec(h: &HopfData, t: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(h.field()); h.dim()];
    for (k, c) in t {
        v[*k] = &v[*k] + c;
    }
    v
}

/// Δ²(h) = Σ c h₁ ⊗ h₂ ⊗ h₃.
pub(crate) fn comul2_terms(h: &HopfData, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
    let mut out = Vec::new();
    for (a, b, c) in h.comul_terms(i) {
        for (b1, b2, d) in h.comul_terms(*b) {
            out.push((*a, *b1, *b2, c * d));
        }
    }
    out
}

/// Left: δ(hm) = h₁m₋₁Sh₃ ⊗ h₂m₀. Right: ρ(mh) = m₀h₂ ⊗ (Sh₁)m₁h₃.
fn check_yd(r: &mut Report, h: &HopfData, act: &[Matrix], coact: &[Matrix], right: bool) {
    let f = h.field();
    let n = h.dim();
    let dim = act[0].rows();
    for hi in 0..n {
        let mut rhs = vec![Matrix::zeros(f, dim, dim); n];
        for (h1, h2, h3, c) in comul2_terms(h, hi) {
            let (l, rr) = if right {
                (terms_vec(h, h.s_terms(h1)), basis_vec(h, h3))
            } else {
                (basis_vec(h, h1), terms_vec(h, h.s_terms(h3)))
            };
            for j in 0..n {
                let coeff = elem_mul(h, &elem_mul(h, &l, &basis_vec(h, j)), &rr);
                let base = act[h2].mul(&coact[j]).scale(&c);
                for (k, e) in coeff.iter().enumerate() {
                    if !e.is_zero() {
                        rhs[k] = rhs[k].add(&base.scale(e));
                    }
                }
            }
        }
        for k in 0..n {
            if coact[k].mul(&act[hi]) != rhs[k] {
                r.push("yd-compatibility", vec![hi, k]);
            }
        }
    }
}

/// A morphism of a backend, stored as a dst.dim × src.dim matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    pub src: Obj,
    pub dst: Obj,
    pub matrix: Matrix,
}

impl Mor {
    pub fn new(src: &Obj, dst: &Obj, matrix: Matrix) -> Result<Mor, CatError> {
        if !same_cat(&src.cat, &dst.cat) {
            return Err(CatError::CategoryMismatch);
        }
        if matrix.rows() != dst.dim || matrix.cols() != src.dim {
            return Err(CatError::DimensionMismatch(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                dst.dim,
                src.dim
            )));
        }
        Ok(Mor {
            src: src.clone(),
            dst: dst.clone(),
            matrix,
        })
    }

    /// Like [`Mor::new`] but panics on malformed input; for internal composites.
    pub(crate) fn raw(src: &Obj, dst: &Obj, matrix: Matrix) -> Mor {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (dst.dim, src.dim));
        Mor {
            src: src.clone(),
            dst: dst.clone(),
            matrix,
        }
    }

    pub fn identity(x: &Obj) -> Mor {
        Mor::raw(x, x, Matrix::identity(x.field(), x.dim))
    }

    pub fn zero(src: &Obj, dst: &Obj) -> Mor {
        Mor::raw(src, dst, Matrix::zeros(src.field(), dst.dim, src.dim))
    }

    /// self ∘ f
    pub fn after(&self, f: &Mor) -> Mor {
        assert_eq!(
            f.dst.dim, self.src.dim,
            "composition of mismatched morphisms"
        );
        Mor::raw(&f.src, &self.dst, self.matrix.mul(&f.matrix))
    }

    pub fn compose(g: &Mor, f: &Mor) -> Result<Mor, CatError> {
        if f.dst != g.src {
            return Err(CatError::DimensionMismatch(
                "codomain of f differs from domain of g".into(),
            ));
        }
        Ok(g.after(f))
    }

    pub fn add(&self, other: &Mor) -> Mor {
        Mor::raw(&self.src, &self.dst, self.matrix.add(&other.matrix))
    }

    pub fn scale(&self, s: &Scalar) -> Mor {
        Mor::raw(&self.src, &self.dst, self.matrix.scale(s))
    }

    /// Whether the matrix commutes with all structure maps.
    pub fn is_valid(&self) -> bool {
        let (xs, ys) = Obj::structure_pairs(&self.src, &self.dst);
        xs.iter()
            .zip(&ys)
            .all(|(a, b)| b.mul(&self.matrix) == self.matrix.mul(a))
    }

    pub fn validate(&self) -> Result<bool, CatError> {
        if !same_cat(&self.src.cat, &self.dst.cat) {
            return Err(CatError::CategoryMismatch);
        }
        Ok(self.is_valid())
    }
}
