use cat_backends::{braid, dual, ev_hom, internal_hom, tensor, tensor_mor, tensor_power, Mor, Obj};
use exactla::Matrix;
use ncalg::{NCPoly, Presentation, Word};
use omega_structures::{nabla_inverse, vee, OmegaMagma};
use supports::{cosupport, support, Subobject};

use crate::UniversalError;

/// Which coefficient map the presentation is universal for.
#[derive(Clone, Debug)]
pub enum Source {
    /// The finest one: V = [A, B].
    Absolute,
    /// A given ρ_U: A → B⊗U.
    RhoU { rho: Mor, u: Obj },
    /// V ⊆ [A, B], realized through ρ_U(a) = Σ_k f_k(a)⊗f_k* with U = V*.
    V(Subobject),
}

#[derive(Clone, Debug)]
pub enum Provenance {
    Absolute,
    FromRhoU(Mor),
    FromV(Subobject),
}

/// T(U)/(relations) with the universal coaction ρ: A → B⊗U on generators.
#[derive(Clone, Debug)]
pub struct UniversalComeasuring {
    pub presentation: Presentation,
    pub rho: Mor,
    pub a: OmegaMagma,
    pub b: OmegaMagma,
    /// The subobject of [A, B] that the class of admissible coefficient maps lives in.
    pub v: Subobject,
    pub provenance: Provenance,
}

impl UniversalComeasuring {
    pub fn gens(&self) -> &Obj {
        &self.presentation.gens
    }

    /// Columns (y, x) ↦ the generator coefficients of e_y in ρ(e_x).
    pub fn coefficient_matrix(&self) -> Matrix {
        supports::coefficient_span(&self.rho, &self.b.carrier, self.gens())
    }
}

/// ρ^{⊗̃m}: A^{⊗m} → B^{⊗m}⊗U^{⊗m}, the degree-m part of the twisted power
/// of the universal coaction; m = 0 gives the 1×1 identity.
pub fn coaction_power(rho: &Mor, b: &Obj, u: &Obj, m: usize) -> Matrix {
    match m {
        0 => Matrix::identity(b.field(), 1),
        1 => rho.matrix.clone(),
        _ => {
            let prev = coaction_power(rho, b, u, m - 1);
            let bk = b.dim.pow(m as u32 - 1);
            let c = braid(&tensor_power(u, m - 1), b).matrix;
            apply_middle(&prev.kron(&rho.matrix), bk, &c, u.dim)
        }
    }
}

/// (I_outer ⊗ c ⊗ I_inner)·m, using only the nonzero entries of c.
pub(crate) fn apply_middle(m: &Matrix, outer: usize, c: &Matrix, inner: usize) -> Matrix {
    let n = c.rows();
    let mut nz = Vec::new();
    for r in 0..n {
        for s in 0..c.cols() {
            if !c.is_entry_zero(r, s) {
                nz.push((r, s, c.get(r, s)));
            }
        }
    }
    let mut out = Matrix::zeros(m.field(), outer * n * inner, m.cols());
    for o in 0..outer {
        for (r, s, v) in &nz {
            for i in 0..inner {
                let src = (o * c.cols() + s) * inner + i;
                let dst = (o * n + r) * inner + i;
                for j in 0..m.cols() {
                    if !m.is_entry_zero(src, j) {
                        out.add_at(dst, j, &(v * &m.get(src, j)));
                    }
                }
            }
        }
    }
    out
}

fn tambara_relations(a: &OmegaMagma, b: &OmegaMagma, rho: &Mor, u: &Obj) -> Vec<NCPoly> {
    let du = u.dim;
    let mut rels = Vec::new();
    let f = u.field();
    for (i, o) in a.signature.ops().iter().enumerate() {
        let lhs = coaction_power(rho, &b.carrier, u, o.t).mul(&a.ops[i].matrix);
        let rhs = b.ops[i]
            .matrix
            .kron(&Matrix::identity(f, du.pow(o.s as u32)))
            .mul(&coaction_power(rho, &b.carrier, u, o.s));
        let (nt, ns) = (du.pow(o.t as u32), du.pow(o.s as u32));
        let nb = b.carrier.dim.pow(o.t as u32);
        for j in 0..lhs.cols() {
            for y in 0..nb {
                let mut terms = Vec::new();
                for w in 0..nt {
                    terms.push((Word::from_index(w, o.t, du), lhs.get(y * nt + w, j)));
                }
                for w in 0..ns {
                    terms.push((Word::from_index(w, o.s, du), -rhs.get(y * ns + w, j)));
                }
                let p = NCPoly::from_terms(u, terms);
                if !p.is_zero() {
                    rels.push(p);
                }
            }
        }
    }
    rels
}

fn full_hom(a: &Obj, b: &Obj) -> Result<Subobject, UniversalError> {
    let h = internal_hom(a, b);
    Ok(Subobject::from_basis(&h, &Matrix::identity(h.field(), h.dim))?)
}

/// The presentation of the universal comeasuring monoid from A to B for the
/// given source, with one relation per nonzero coefficient of
/// ρ^{⊗̃t}∘ω_A − (ω_B⊗id)∘ρ^{⊗̃s}.
pub fn universal_presentation(
    a: &OmegaMagma,
    b: &OmegaMagma,
    source: Source,
) -> Result<UniversalComeasuring, UniversalError> {
    if a.signature != b.signature || a.carrier.cat != b.carrier.cat {
        return Err(UniversalError::SignatureMismatch);
    }
    let (ac, bc) = (&a.carrier, &b.carrier);
    let (rho, u, v, provenance) = match source {
        Source::Absolute => {
            let v = full_hom(ac, bc)?;
            let (rho, u) = from_v(ac, bc, &v)?;
            (rho, u, v, Provenance::Absolute)
        }
        Source::V(v) => {
            let h = internal_hom(ac, bc);
            if v.ambient != h {
                return Err(UniversalError::NotSubobject("ambient is not [A, B]".into()));
            }
            let (rho, u) = from_v(ac, bc, &v)?;
            (rho, u, v.clone(), Provenance::FromV(v))
        }
        Source::RhoU { rho, u } => {
            if rho.src != *ac || rho.dst != tensor(bc, &u) {
                return Err(UniversalError::Incompatible("ρ_U is not A → B⊗U".into()));
            }
            if !rho.is_valid() {
                return Err(UniversalError::NotMorphism("ρ_U"));
            }
            let s = support(&rho, bc, &u)?;
            let gens = s.sub.obj().clone();
            let v = cosupport(&vee(&s.abs, bc, &gens)?, &dual(&gens), ac)?.sub;
            (s.abs, gens, v, Provenance::FromRhoU(rho))
        }
    };
    let rels = tambara_relations(a, b, &rho, &u);
    Ok(UniversalComeasuring {
        presentation: Presentation::new(&u, rels)?,
        rho,
        a: a.clone(),
        b: b.clone(),
        v,
        provenance,
    })
}

/// ρ_U = ∇⁻¹(ev∘(incl⊗id_A)): A → B⊗V*.
fn from_v(a: &Obj, b: &Obj, v: &Subobject) -> Result<(Mor, Obj), UniversalError> {
    let psi = ev_hom(a, b).after(&tensor_mor(&v.inclusion, &Mor::identity(a)));
    let rho = nabla_inverse(&psi, a, b, v.obj())?;
    if !rho.is_valid() {
        return Err(UniversalError::NotMorphism("ρ_U"));
    }
    Ok((rho, dual(v.obj())))
}
