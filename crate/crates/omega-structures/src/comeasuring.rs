use cat_backends::{braid, tensor, tensor_power, Mor, Obj, Report};
use exactla::Matrix;
use hopf_structures::{ComonoidStr, MonoidStr};

use crate::{OmegaError, OmegaMagma};

/// ψ: P⊗A → B with P a comonoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measuring {
    pub p: ComonoidStr,
    pub psi: Mor,
    pub a: OmegaMagma,
    pub b: OmegaMagma,
}

/// ρ: A → B⊗Q with Q a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comeasuring {
    pub q: MonoidStr,
    pub rho: Mor,
    pub a: OmegaMagma,
    pub b: OmegaMagma,
}

fn check_pair(a: &OmegaMagma, b: &OmegaMagma) -> Result<(), OmegaError> {
    if a.signature != b.signature {
        return Err(OmegaError::SignatureMismatch);
    }
    if a.carrier.cat != b.carrier.cat {
        return Err(cat_backends::CatError::CategoryMismatch.into());
    }
    Ok(())
}

impl Measuring {
    pub fn new(
        p: &ComonoidStr,
        psi: Matrix,
        a: &OmegaMagma,
        b: &OmegaMagma,
    ) -> Result<Measuring, OmegaError> {
        check_pair(a, b)?;
        let psi = Mor::new(&tensor(&p.carrier, &a.carrier), &b.carrier, psi)?;
        Ok(Measuring {
            p: p.clone(),
            psi,
            a: a.clone(),
            b: b.clone(),
        })
    }
}

impl Comeasuring {
    pub fn new(
        q: &MonoidStr,
        rho: Matrix,
        a: &OmegaMagma,
        b: &OmegaMagma,
    ) -> Result<Comeasuring, OmegaError> {
        check_pair(a, b)?;
        let rho = Mor::new(&a.carrier, &tensor(&b.carrier, &q.carrier), rho)?;
        Ok(Comeasuring {
            q: q.clone(),
            rho,
            a: a.clone(),
            b: b.clone(),
        })
    }

    /// A ≅ A⊗𝟙 followed by id⊗u: a ↦ a⊗1.
    pub fn trivial(a: &OmegaMagma, q: &MonoidStr) -> Comeasuring {
        let f = a.carrier.field();
        let rho = Matrix::identity(f, a.dim()).kron(&q.unit.matrix);
        Comeasuring::new(q, rho, a, a).expect("shapes agree")
    }
}

fn ident(f: exactla::FieldSpec, n: usize) -> Matrix {
    Matrix::identity(f, n)
}

/// ψ^{⊗̃m} as a matrix B^{⊗m} ← P⊗A^{⊗m}, built as ψ ⊗̃ ψ^{⊗̃(m-1)}.
pub(crate) fn meas_power(p: &ComonoidStr, a: &Obj, psi: &Matrix, m: usize) -> Matrix {
    let f = a.field();
    let (dp, da) = (p.carrier.dim, a.dim);
    match m {
        0 => p.counit.matrix.clone(),
        1 => psi.clone(),
        _ => {
            let prev = meas_power(p, a, psi, m - 1);
            let rest = da.pow(m as u32 - 1);
            let comul = p.comul.matrix.kron(&ident(f, da * rest));
            let c = braid(&p.carrier, a).matrix;
            let mid = ident(f, dp).kron(&c).kron(&ident(f, rest));
            psi.kron(&prev).mul(&mid).mul(&comul)
        }
    }
}

/// ρ^{⊗̃m} as a matrix B^{⊗m}⊗Q ← A^{⊗m}, built as ρ^{⊗̃(m-1)} ⊗̃ ρ.
pub(crate) fn comeas_power(q: &MonoidStr, b: &Obj, rho: &Matrix, m: usize) -> Matrix {
    let f = b.field();
    let (dq, db) = (q.carrier.dim, b.dim);
    match m {
        0 => q.unit.matrix.clone(),
        1 => rho.clone(),
        _ => {
            let prev = comeas_power(q, b, rho, m - 1);
            let rest = db.pow(m as u32 - 1);
            let c = braid(&q.carrier, b).matrix;
            let mid = ident(f, rest).kron(&c).kron(&ident(f, dq));
            let mul = ident(f, rest * db).kron(&q.mul.matrix);
            mul.mul(&mid).mul(&prev.kron(rho))
        }
    }
}

/// P⊗A^{⊗m} → B^{⊗m}; m = 0 gives the counit.
pub fn twisted_power_meas(m: &Measuring, k: usize) -> Mor {
    let mat = meas_power(&m.p, &m.a.carrier, &m.psi.matrix, k);
    let src = tensor(&m.p.carrier, &tensor_power(&m.a.carrier, k));
    Mor::new(&src, &tensor_power(&m.b.carrier, k), mat).expect("shape")
}

/// A^{⊗m} → B^{⊗m}⊗Q; m = 0 gives the unit.
pub fn twisted_power_comeas(c: &Comeasuring, k: usize) -> Mor {
    let mat = comeas_power(&c.q, &c.b.carrier, &c.rho.matrix, k);
    let dst = tensor(&tensor_power(&c.b.carrier, k), &c.q.carrier);
    Mor::new(&tensor_power(&c.a.carrier, k), &dst, mat).expect("shape")
}

/// Per operation ω: ψ^{⊗̃t}∘(id_P⊗ω_A) − ω_B∘ψ^{⊗̃s}.
pub fn measuring_residues(m: &Measuring) -> Vec<(String, Matrix)> {
    let f = m.a.carrier.field();
    let sig = m.a.signature.ops();
    sig.iter()
        .enumerate()
        .map(|(i, o)| {
            let lhs = meas_power(&m.p, &m.a.carrier, &m.psi.matrix, o.t)
                .mul(&ident(f, m.p.carrier.dim).kron(&m.a.ops[i].matrix));
            let rhs = m.b.ops[i]
                .matrix
                .mul(&meas_power(&m.p, &m.a.carrier, &m.psi.matrix, o.s));
            (o.name.clone(), lhs.sub(&rhs))
        })
        .collect()
}

/// Per operation ω: ρ^{⊗̃t}∘ω_A − (ω_B⊗id_Q)∘ρ^{⊗̃s}.
pub fn comeasuring_residues(c: &Comeasuring) -> Vec<(String, Matrix)> {
    let f = c.a.carrier.field();
    let sig = c.a.signature.ops();
    sig.iter()
        .enumerate()
        .map(|(i, o)| {
            let lhs = comeas_power(&c.q, &c.b.carrier, &c.rho.matrix, o.t).mul(&c.a.ops[i].matrix);
            let rhs = c.b.ops[i]
                .matrix
                .kron(&ident(f, c.q.carrier.dim))
                .mul(&comeas_power(&c.q, &c.b.carrier, &c.rho.matrix, o.s));
            (o.name.clone(), lhs.sub(&rhs))
        })
        .collect()
}

fn residue_report(res: Vec<(String, Matrix)>) -> Report {
    let mut r = Report::new();
    for (name, m) in res {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m.is_entry_zero(i, j) {
                    r.push(name.clone(), vec![i, j]);
                }
            }
        }
    }
    r
}

pub fn check_measuring(m: &Measuring) -> Report {
    residue_report(measuring_residues(m))
}

pub fn check_comeasuring(c: &Comeasuring) -> Report {
    residue_report(comeasuring_residues(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cat_backends::Category;
    use exactla::FieldSpec;
    use hopf_structures::catalog::{dual_numbers, trivial_comonoid, trivial_monoid};

    #[test]
    fn identity_measuring_and_trivial_comeasuring() {
        let c = Category::vect(FieldSpec::Rational);
        let a = OmegaMagma::from_monoid(&dual_numbers(&c).unwrap());
        let p = trivial_comonoid(&c);
        let id = Matrix::identity(FieldSpec::Rational, 2);
        let m = Measuring::new(&p, id, &a, &a).unwrap();
        assert!(check_measuring(&m).is_ok());
        let t = Comeasuring::trivial(&a, &trivial_monoid(&c));
        assert!(check_comeasuring(&t).is_ok());
        assert_eq!(twisted_power_comeas(&t, 0).matrix, Matrix::identity(FieldSpec::Rational, 1));
        assert_eq!(twisted_power_meas(&m, 3).matrix, Matrix::identity(FieldSpec::Rational, 8));
    }
}
