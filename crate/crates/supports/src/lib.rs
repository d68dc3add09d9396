//! Supports of maps ρ: A → B⊗Q (smallest subobject of Q through which ρ
//! factors) and cosupports of maps ψ: P⊗A → B (image of the curried map in
//! [A, B]), with the coarser/finer preorder on both sides.
//!
//! The support is the closure of the coefficient span of ρ under the backend
//! structure maps. When ρ is a morphism the coefficient span is already stable,
//! so the closure step only matters for arbitrary linear input.

use cat_backends::{
    closure, curry, dual, dual_mor, ev_hom, factor_through, hom_space, internal_hom, subobject,
    tensor, tensor_mor, CatError, Mor, Obj, Report,
};
use exactla::Matrix;
use omega_structures::{vee, OmegaError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SupportError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Omega(#[from] OmegaError),
}

/// A subobject given by an injective inclusion morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subobject {
    pub ambient: Obj,
    pub inclusion: Mor,
}

impl Subobject {
    /// The subobject spanned by the columns of `v`, which must be stable.
    pub fn from_basis(ambient: &Obj, v: &Matrix) -> Result<Subobject, SupportError> {
        let (_, inclusion) = subobject(ambient, v)?;
        Ok(Subobject {
            ambient: ambient.clone(),
            inclusion,
        })
    }

    pub fn obj(&self) -> &Obj {
        &self.inclusion.src
    }

    pub fn dim(&self) -> usize {
        self.inclusion.src.dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.inclusion.matrix
    }

    pub fn contains(&self, other: &Subobject) -> bool {
        self.ambient.dim == other.ambient.dim && self.basis().spans(other.basis())
    }

    pub fn same_as(&self, other: &Subobject) -> bool {
        self.ambient.dim == other.ambient.dim
            && self.basis().same_column_space(other.basis())
    }
}

/// supp ρ together with |ρ|: A → B⊗supp ρ, so that ρ = (id_B⊗incl)|ρ|.
#[derive(Clone, Debug)]
pub struct Support {
    pub sub: Subobject,
    pub abs: Mor,
}

/// cosupp ψ ⊆ [A, B], the corestriction π: P → cosupp ψ of Kψ, and
/// |ψ|: cosupp ψ⊗A → B, so that ψ = |ψ|(π⊗id_A).
#[derive(Clone, Debug)]
pub struct Cosupport {
    pub sub: Subobject,
    pub corestriction: Mor,
    pub abs: Mor,
}

fn check_target(rho: &Mor, b: &Obj, q: &Obj) -> Result<(), SupportError> {
    if rho.dst.dim != b.dim * q.dim {
        return Err(SupportError::DimensionMismatch(format!(
            "target has dimension {}, expected {}·{}",
            rho.dst.dim, b.dim, q.dim
        )));
    }
    Ok(())
}

/// Columns (k, x) ↦ the Q-coefficient of e_k in ρ(e_x).
pub fn coefficient_span(rho: &Mor, b: &Obj, q: &Obj) -> Matrix {
    let (db, dq, da) = (b.dim, q.dim, rho.src.dim);
    Matrix::from_fn(rho.matrix.field(), dq, db * da, |j, c| {
        rho.matrix.get((c / da) * dq + j, c % da)
    })
}

pub fn support(rho: &Mor, b: &Obj, q: &Obj) -> Result<Support, SupportError> {
    check_target(rho, b, q)?;
    let span = coefficient_span(rho, b, q).column_space_canonical();
    let sub = Subobject::from_basis(q, &closure(q, &span))?;
    let f = q.field();
    let lift = Matrix::identity(f, b.dim).kron(sub.basis());
    let abs = lift.solve(&rho.matrix).map_err(CatError::from)?;
    let abs = Mor::new(&rho.src, &tensor(b, sub.obj()), abs)?;
    Ok(Support { sub, abs })
}

pub fn cosupport(psi: &Mor, p: &Obj, a: &Obj) -> Result<Cosupport, SupportError> {
    if psi.src.dim != p.dim * a.dim {
        return Err(SupportError::DimensionMismatch("ψ is not P⊗A → B".into()));
    }
    let b = &psi.dst;
    let k = curry(p, a, psi);
    let hom = internal_hom(a, b);
    let sub = Subobject::from_basis(&hom, &k.matrix.column_space_canonical())?;
    let corestriction = factor_through(&k, &sub.inclusion)?;
    let abs = ev_hom(a, b).after(&tensor_mor(&sub.inclusion, &Mor::identity(a)));
    Ok(Cosupport {
        sub,
        corestriction,
        abs,
    })
}

/// supp ρ = Q.
pub fn is_tensor_epi(rho: &Mor, b: &Obj, q: &Obj) -> Result<bool, SupportError> {
    Ok(support(rho, b, q)?.sub.dim() == q.dim)
}

/// Kψ injective.
pub fn is_tensor_mono(psi: &Mor, p: &Obj, a: &Obj) -> Result<bool, SupportError> {
    if psi.src.dim != p.dim * a.dim {
        return Err(SupportError::DimensionMismatch("ψ is not P⊗A → B".into()));
    }
    Ok(curry(p, a, psi).matrix.rank() == p.dim)
}

/// Outcome of comparing two maps with the same A and B. `Finer(τ)` means the
/// first map determines the second through τ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Finer(Mor),
    Coarser(Mor),
    Equivalent(Mor, Mor),
    Incomparable,
}

impl Comparison {
    pub fn kind(&self) -> &'static str {
        match self {
            Comparison::Finer(_) => "finer",
            Comparison::Coarser(_) => "coarser",
            Comparison::Equivalent(..) => "equivalent",
            Comparison::Incomparable => "incomparable",
        }
    }

    /// Whether the first map is finer than or equivalent to the second.
    pub fn first_dominates(&self) -> bool {
        matches!(self, Comparison::Finer(_) | Comparison::Equivalent(..))
    }

    pub fn second_dominates(&self) -> bool {
        matches!(self, Comparison::Coarser(_) | Comparison::Equivalent(..))
    }

    fn from_pair(fwd: Option<Mor>, back: Option<Mor>) -> Comparison {
        match (fwd, back) {
            (Some(t), Some(u)) => Comparison::Equivalent(t, u),
            (Some(t), None) => Comparison::Finer(t),
            (None, Some(u)) => Comparison::Coarser(u),
            (None, None) => Comparison::Incomparable,
        }
    }
}

/// A morphism τ: supp ρ1 → supp ρ2 with (id_B⊗τ)|ρ1| = |ρ2|.
fn support_witness(s1: &Support, s2: &Support, b: &Obj) -> Option<Mor> {
    let (x, y) = (s1.sub.obj(), s2.sub.obj());
    let f = b.field();
    let hom = hom_space(x, y);
    let target = s2.abs.matrix.vectorize();
    let idb = Matrix::identity(f, b.dim);
    let cols: Vec<Matrix> = (0..hom.cols())
        .map(|i| {
            let h = hom.col(i).reshape(y.dim, x.dim);
            idb.kron(&h).mul(&s1.abs.matrix).vectorize()
        })
        .collect();
    let sys = Matrix::hstack_all(f, target.rows(), &cols);
    let c = sys.solve(&target).ok()?;
    let tau = hom.mul(&c).reshape(y.dim, x.dim);
    Mor::new(x, y, tau).ok()
}

/// Compares ρ1: A → B⊗Q1 and ρ2: A → B⊗Q2 through their supports.
pub fn preorder_cmp(
    rho1: &Mor,
    q1: &Obj,
    rho2: &Mor,
    q2: &Obj,
    b: &Obj,
) -> Result<Comparison, SupportError> {
    let s1 = support(rho1, b, q1)?;
    let s2 = support(rho2, b, q2)?;
    Ok(Comparison::from_pair(
        support_witness(&s1, &s2, b),
        support_witness(&s2, &s1, b),
    ))
}

/// Compares ψ1: P1⊗A → B and ψ2: P2⊗A → B; ψ1 is finer when cosupp ψ2 ⊆ cosupp ψ1,
/// witnessed by the inclusion σ with |ψ2| = |ψ1|(σ⊗id).
pub fn meas_preorder_cmp(
    psi1: &Mor,
    p1: &Obj,
    psi2: &Mor,
    p2: &Obj,
    a: &Obj,
) -> Result<Comparison, SupportError> {
    let c1 = cosupport(psi1, p1, a)?;
    let c2 = cosupport(psi2, p2, a)?;
    let into = |x: &Cosupport, y: &Cosupport| {
        if y.sub.contains(&x.sub) {
            factor_through(&x.sub.inclusion, &y.sub.inclusion).ok()
        } else {
            None
        }
    };
    Ok(Comparison::from_pair(into(&c2, &c1), into(&c1, &c2)))
}

/// cosupp(ρ^∨) = (supp ρ)* inside [A, B], via K(|ρ|^∨) injective with the same
/// image as K(ρ^∨), and ρ^∨ = |ρ|^∨(incl*⊗id_A).
pub fn check_supp_cosupp_duality(rho: &Mor, b: &Obj, q: &Obj) -> Result<Report, SupportError> {
    let mut r = Report::new();
    let a = &rho.src;
    let s = support(rho, b, q)?;
    let v = vee(rho, b, q)?;
    let cos = cosupport(&v, &dual(q), a)?;
    let sd = dual(s.sub.obj());
    let av = vee(&s.abs, b, s.sub.obj())?;
    let k = curry(&sd, a, &av);
    if k.matrix.rank() != s.sub.dim() {
        r.push("K(|ρ|^∨) injective", vec![k.matrix.rank(), s.sub.dim()]);
    }
    if cos.sub.dim() != s.sub.dim() {
        r.push("dimension", vec![cos.sub.dim(), s.sub.dim()]);
    }
    if !k.matrix.same_column_space(cos.sub.basis()) {
        r.push("image", vec![]);
    }
    let restricted = av.after(&tensor_mor(&dual_mor(&s.sub.inclusion), &Mor::identity(a)));
    r.check_eq("restriction", &restricted.matrix, &v.matrix);
    Ok(r)
}

/// ρ1 ≽ ρ2 iff ρ1^∨ ≽ ρ2^∨, in both directions.
pub fn check_preorder_transfer(
    rho1: &Mor,
    q1: &Obj,
    rho2: &Mor,
    q2: &Obj,
    b: &Obj,
) -> Result<Report, SupportError> {
    let mut r = Report::new();
    let a = &rho1.src;
    let c = preorder_cmp(rho1, q1, rho2, q2, b)?;
    let v1 = vee(rho1, b, q1)?;
    let v2 = vee(rho2, b, q2)?;
    let d = meas_preorder_cmp(&v1, &dual(q1), &v2, &dual(q2), a)?;
    if c.first_dominates() != d.first_dominates() {
        r.push("ρ1 ≽ ρ2 vs ρ1^∨ ≽ ρ2^∨", vec![]);
    }
    if c.second_dominates() != d.second_dominates() {
        r.push("ρ2 ≽ ρ1 vs ρ2^∨ ≽ ρ1^∨", vec![]);
    }
    Ok(r)
}
