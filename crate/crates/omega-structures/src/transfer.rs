use cat_backends::{braid, dual, ev, tensor, CatError, Mor, Obj, Report};
use exactla::{FieldSpec, Matrix};
use hopf_structures::{dual_comonoid, tensor_monoid, ComonoidStr, MonoidStr};

use crate::{Comeasuring, OmegaError};

fn ident(f: FieldSpec, n: usize) -> Matrix {
    Matrix::identity(f, n)
}

fn split_check(rho: &Mor, b: &Obj, q: &Obj) -> Result<(), OmegaError> {
    if rho.dst.dim != b.dim * q.dim {
        return Err(OmegaError::DimensionMismatch(format!(
            "target has dimension {}, expected {}·{}",
            rho.dst.dim, b.dim, q.dim
        )));
    }
    Ok(())
}

/// ρ^∨: Q*⊗A → B, the composite (id_B⊗ev_Q)(c_{Q*,B}⊗id_Q)(id_{Q*}⊗ρ).
pub fn vee(rho: &Mor, b: &Obj, q: &Obj) -> Result<Mor, OmegaError> {
    split_check(rho, b, q)?;
    let f = b.field();
    let qd = dual(q);
    let step = ident(f, qd.dim).kron(&rho.matrix);
    let c = braid(&qd, b).matrix.kron(&ident(f, q.dim));
    let e = ident(f, b.dim).kron(&ev(q).matrix);
    let m = e.mul(&c).mul(&step);
    Ok(Mor::new(&tensor(&qd, &rho.src), b, m)?)
}

/// The fixed part (id_B⊗ev_P)∘c_{P,B⊗P*} of ρ^∇, a matrix B ← P⊗B⊗P*.
fn nabla_head(b: &Obj, p: &Obj) -> Matrix {
    let f = b.field();
    let bp = tensor(b, &dual(p));
    let c = braid(p, &bp).matrix;
    ident(f, b.dim).kron(&ev(p).matrix).mul(&c)
}

/// ρ^∇: P⊗A → B for ρ: A → B⊗P*, the composite (id_B⊗ev_P)c_{P,B⊗P*}(id_P⊗ρ).
pub fn nabla(rho: &Mor, b: &Obj, p: &Obj) -> Result<Mor, OmegaError> {
    split_check(rho, b, p)?;
    let f = b.field();
    let m = nabla_head(b, p).mul(&ident(f, p.dim).kron(&rho.matrix));
    Ok(Mor::new(&tensor(p, &rho.src), b, m)?)
}

/// The unique linear ρ: A → B⊗P* with ρ^∇ = ψ.
pub fn nabla_inverse(psi: &Mor, a: &Obj, b: &Obj, p: &Obj) -> Result<Mor, OmegaError> {
    let f = b.field();
    let (dp, db, da) = (p.dim, b.dim, a.dim);
    if psi.dst.dim != db || psi.src.dim != dp * da {
        return Err(OmegaError::DimensionMismatch("ψ is not P⊗A → B".into()));
    }
    let head = nabla_head(b, p);
    let r = db * dp;
    // column x of ρ ↦ the stack over i of ψ(e_i⊗e_x)
    let m = Matrix::from_fn(f, dp * db, r, |row, k| {
        head.get(row % db, (row / db) * r + k)
    });
    let y = Matrix::from_fn(f, dp * db, da, |row, x| {
        psi.matrix.get(row % db, (row / db) * da + x)
    });
    let rho = m.solve(&y).map_err(CatError::from)?;
    Ok(Mor::new(a, &tensor(b, &dual(p)), rho)?)
}

/// (ρ1⊗id_{Q2})∘ρ2 as a comeasuring A → A⊗(Q1⊗Q2); needs a symmetric backend.
pub fn compose_comeasurings(r1: &Comeasuring, r2: &Comeasuring) -> Result<Comeasuring, OmegaError> {
    let cat = &r1.a.carrier.cat;
    if !cat.symmetric {
        return Err(CatError::NotSymmetric(cat.name()).into());
    }
    if r1.a != r1.b || r2.a != r2.b || r1.a != r2.a {
        return Err(OmegaError::SignatureMismatch);
    }
    let f = cat.field;
    let rho = r1
        .rho
        .matrix
        .kron(&ident(f, r2.q.carrier.dim))
        .mul(&r2.rho.matrix);
    let q = tensor_monoid(&r1.q, &r2.q);
    Comeasuring::new(&q, rho, &r1.a, &r1.a)
}

/// (ρ⊗id)ρ = (id⊗Δ)ρ and (id⊗ε)ρ = id for ρ: A → A⊗P.
pub fn check_right_comodule(rho: &Mor, p: &ComonoidStr) -> Report {
    let mut r = Report::new();
    let f = p.carrier.field();
    let (da, dp) = (rho.src.dim, p.carrier.dim);
    let lhs = rho.matrix.kron(&ident(f, dp)).mul(&rho.matrix);
    let rhs = ident(f, da).kron(&p.comul.matrix).mul(&rho.matrix);
    r.check_eq("coassociativity", &lhs, &rhs);
    let cu = ident(f, da).kron(&p.counit.matrix).mul(&rho.matrix);
    r.check_eq("counit", &cu, &ident(f, da));
    r
}

/// act(μ⊗id) = act(id⊗act) and act(u⊗id) = id for act: M⊗A → A.
pub fn check_left_module(m: &MonoidStr, act: &Mor) -> Report {
    let mut r = Report::new();
    let f = m.carrier.field();
    let (dm, da) = (m.carrier.dim, act.dst.dim);
    let lhs = act.matrix.mul(&m.mul.matrix.kron(&ident(f, da)));
    let rhs = act.matrix.mul(&ident(f, dm).kron(&act.matrix));
    r.check_eq("associativity", &lhs, &rhs);
    let u = act.matrix.mul(&m.unit.matrix.kron(&ident(f, da)));
    r.check_eq("unit", &u, &ident(f, da));
    r
}

/// For a right P-comodule ρ: A → A⊗P, the action ρ^∨ of the dual monoid P*.
pub fn comodule_to_module(rho: &Mor, p: &ComonoidStr) -> Result<(MonoidStr, Mor), OmegaError> {
    let act = vee(rho, &rho.src, &p.carrier)?;
    Ok((dual_comonoid(p), act))
}
