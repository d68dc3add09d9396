use cat_backends::{random_mor, unit_obj, Mor};
use exactla::Matrix;
use hopf_structures::{dual_comonoid, tensor_monoid, ComonoidStr, MonoidStr};
use ncalg::NCPoly;
use omega_structures::{
    check_measuring, nabla, nabla_inverse, twisted_power_comeas, twisted_power_meas, Comeasuring,
    Measuring, OmegaMagma,
};
use rand::seq::SliceRandom;
use rand::Rng;
use supports::cosupport;

use crate::presentation::coaction_power;
use crate::{induced_hom, Induced, UniversalComeasuring, UniversalError};

/// φ_m: U^{⊗m} → Q for m = 0..=max_len, the values of the monoid map
/// T(U) → Q extending φ on words of length m.
pub fn word_values(phi: &Matrix, q: &MonoidStr, max_len: usize) -> Vec<Matrix> {
    let mut vals = vec![q.unit.matrix.clone()];
    for m in 1..=max_len {
        let next = if m == 1 {
            phi.clone()
        } else {
            q.mul.matrix.mul(&vals[m - 1].kron(phi))
        };
        vals.push(next);
    }
    vals
}

pub(crate) fn eval_poly(p: &NCPoly, vals: &[Matrix]) -> Matrix {
    let g = p.gens.dim;
    let f = p.field();
    let mut out = Matrix::zeros(f, vals[0].rows(), 1);
    for (w, c) in p.terms() {
        let col = vals[w.len()].col(w.index(g));
        out = out.add(&col.scale(c));
    }
    out
}

/// (id_{B^m}⊗φ_m)·r for r with rows indexed by (B^m, U^m).
pub fn apply_coefficients(r: &Matrix, nb: usize, phi_m: &Matrix) -> Matrix {
    let k = phi_m.cols();
    let dq = phi_m.rows();
    let mut out = Matrix::zeros(r.field(), nb * dq, r.cols());
    for row in 0..r.rows() {
        let (y, w) = (row / k, row % k);
        for j in 0..r.cols() {
            if r.is_entry_zero(row, j) {
                continue;
            }
            let x = r.get(row, j);
            for q in 0..dq {
                if !phi_m.is_entry_zero(q, w) {
                    out.add_at(y * dq + q, j, &(&phi_m.get(q, w) * &x));
                }
            }
        }
    }
    out
}

fn monoid_of(m: &OmegaMagma) -> Result<MonoidStr, UniversalError> {
    let mul = m.op("mul").ok_or(UniversalError::SignatureMismatch)?;
    let unit = m.op("unit").ok_or(UniversalError::SignatureMismatch)?;
    Ok(MonoidStr {
        carrier: m.carrier.clone(),
        mul: mul.clone(),
        unit: unit.clone(),
    })
}

/// Dual basis of P* when every basis vector of P is group-like, else [1].
fn orthogonal_idempotents(p: &ComonoidStr, pd: &MonoidStr) -> Vec<Matrix> {
    let f = p.carrier.field();
    let n = p.carrier.dim;
    let grouplike = (0..n).all(|i| {
        let e = Matrix::unit_column(f, n, i);
        p.comul.matrix.mul(&e) == e.kron(&e) && !p.counit.matrix.mul(&e).is_zero()
    });
    if grouplike && n > 0 {
        (0..n).map(|i| Matrix::unit_column(f, n, i)).collect()
    } else {
        vec![pd.unit.matrix.clone()]
    }
}

/// A comeasuring A → B⊗P* of the form a ↦ w·(Σ_i f_i(a)⊗e_i)·w⁻¹, with f_i
/// drawn from `endos` (monoid maps A → B), e_i orthogonal idempotents of P*
/// and w a random unit of B⊗P*.
pub fn sample_comeasuring<R: Rng + ?Sized>(
    a: &OmegaMagma,
    b: &OmegaMagma,
    p: &ComonoidStr,
    endos: &[Matrix],
    rng: &mut R,
) -> Result<Comeasuring, UniversalError> {
    let pd = dual_comonoid(p);
    let bm = monoid_of(b)?;
    let f = a.carrier.field();
    let mut rho0 = Matrix::zeros(f, b.dim() * pd.carrier.dim, a.dim());
    for e in orthogonal_idempotents(p, &pd) {
        let fi = endos
            .choose(rng)
            .ok_or_else(|| UniversalError::Incompatible("no monoid maps A → B given".into()))?;
        rho0 = rho0.add(&fi.kron(&e));
    }
    let r = tensor_monoid(&bm, &pd);
    let n = r.carrier.dim;
    let one = unit_obj(&r.carrier.cat);
    let id = Matrix::identity(f, n);
    let mut rho = rho0.clone();
    for _ in 0..10 {
        let w = random_mor(&one, &r.carrier, rng).matrix;
        let left = r.mul.matrix.mul(&w.kron(&id));
        if let Some(inv) = left.inverse() {
            let winv = inv.mul(&r.unit.matrix);
            let right = r.mul.matrix.mul(&id.kron(&winv));
            rho = left.mul(&right).mul(&rho0);
            break;
        }
    }
    Ok(Comeasuring::new(&pd, rho, a, b)?)
}

/// For each comeasuring ρ': A → B⊗P*, checks that the induced φ: A□ → P*
/// exists, that ρ'^∇ is a measuring with cosupport inside V, that ∇ and ∇⁻¹
/// round trip, that φ kills the truncated Gröbner basis, and that
/// (id⊗φ_m)ρ_univ^{⊗̃m} = ρ'^{⊗̃m} with ∇ of it equal to (ρ'^∇)^{⊗̃m}
/// for m ≤ d.
pub fn duality_roundtrip(
    u: &UniversalComeasuring,
    p: &ComonoidStr,
    samples: &[Comeasuring],
    d: usize,
) -> Result<cat_backends::Report, UniversalError> {
    let mut rep = cat_backends::Report::new();
    if p.carrier.dim == 0 {
        return Ok(rep);
    }
    let pd = dual_comonoid(p);
    let (a, b) = (&u.a.carrier, &u.b.carrier);
    let powers: Vec<Matrix> = (0..=d)
        .map(|m| coaction_power(&u.rho, b, u.gens(), m))
        .collect();
    let gb = u.presentation.gb(d).elements();
    for (idx, c) in samples.iter().enumerate() {
        if c.q != pd {
            rep.push("sample target is not P*", vec![idx]);
            continue;
        }
        let h = match induced_hom(u, c)? {
            Induced::Hom(h) => h,
            Induced::Obstruction { relation, .. } => {
                rep.push("induced_hom: obstruction", vec![idx, relation]);
                continue;
            }
            Induced::OutOfClass => {
                rep.push("induced_hom: out of class", vec![idx]);
                continue;
            }
        };
        if !h.unique {
            rep.push("induced_hom: not unique", vec![idx]);
        }
        let psi = nabla(&c.rho, b, &p.carrier)?;
        let m = Measuring::new(p, psi.matrix.clone(), &u.a, &u.b)?;
        if !check_measuring(&m).is_ok() {
            rep.push("ρ'^∇ is not a measuring", vec![idx]);
        }
        if !u.v.contains(&cosupport(&psi, &p.carrier, a)?.sub) {
            rep.push("cosupport outside V", vec![idx]);
        }
        let back = nabla_inverse(&psi, a, b, &p.carrier)?;
        if back.matrix != c.rho.matrix || nabla(&back, b, &p.carrier)?.matrix != psi.matrix {
            rep.push("∇ round trip", vec![idx]);
        }
        let vals = word_values(&h.phi.matrix, &pd, d);
        for (k, g) in gb.iter().enumerate() {
            if !eval_poly(g, &vals).is_zero() {
                rep.push("φ on the Gröbner basis", vec![idx, k]);
            }
        }
        for (k, pw) in powers.iter().enumerate() {
            let lhs = apply_coefficients(pw, b.dim.pow(k as u32), &vals[k]);
            let comeas = twisted_power_comeas(c, k);
            if lhs != comeas.matrix {
                rep.push("pairing with ρ_univ", vec![idx, k]);
            }
            let bk = cat_backends::tensor_power(b, k);
            let lhs = nabla(&Mor::new(&comeas.src, &comeas.dst, comeas.matrix.clone())?, &bk, &p.carrier)?;
            if lhs.matrix != twisted_power_meas(&m, k).matrix {
                rep.push("∇ of powers", vec![idx, k]);
            }
        }
    }
    Ok(rep)
}
