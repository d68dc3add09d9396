//! Explicit Yetter-Drinfeld formulas, evaluated directly on structure matrices.
//!
//! These are independent of the categorical composites in the rest of the
//! crate and serve as cross-checks for them.

use exactla::{Matrix, Scalar};

use crate::category::Kind;
use crate::object::Obj;

fn parts(m: &Obj) -> (&crate::HopfData, &[Matrix], &[Matrix]) {
    let h = m.cat.hopf().expect("YD object");
    (
        h,
        m.action().expect("action"),
        m.coaction().expect("coaction"),
    )
}

fn is_left(m: &Obj) -> bool {
    matches!(m.cat.kind, Kind::LeftYD(_))
}

/// Entry (i·dn + j, p·dn + q) = Σ_h a_h[p, i] · b_h[q, j].
fn pairing_matrix(pairs: &[(Matrix, Matrix)], dm: usize, dn: usize) -> Matrix {
    let f = pairs
        .first()
        .map(|p| p.0.field())
        .unwrap_or(exactla::FieldSpec::Rational);
    let mut out = Matrix::zeros(f, dm * dn, dm * dn);
    for (a, b) in pairs {
        out = out.add(&a.transpose().kron(&b.transpose()));
    }
    out
}

/// Left: θ(f⊗g)(m⊗n) = f(m₀) g(m₋₁n).
pub fn theta_left(m: &Obj, n: &Obj) -> Matrix {
    assert!(is_left(m));
    let (h, _, cm) = parts(m);
    let (_, an, _) = parts(n);
    let pairs: Vec<_> = (0..h.dim())
        .map(|k| (cm[k].clone(), an[k].clone()))
        .collect();
    pairing_matrix(&pairs, m.dim, n.dim)
}

/// Left: θ^inv(f⊗g)(m⊗n) = f((S⁻¹n₋₁)m) g(n₀).
pub fn theta_inv_left(m: &Obj, n: &Obj) -> Matrix {
    assert!(is_left(m));
    let (h, am, _) = parts(m);
    let (_, _, cn) = parts(n);
    let pairs: Vec<_> = (0..h.dim())
        .map(|k| (h.combine(am, h.sinv_terms(k), m.dim), cn[k].clone()))
        .collect();
    pairing_matrix(&pairs, m.dim, n.dim)
}

/// Right: θ^inv(f⊗g)(m⊗n) = f(m₀) g(n S⁻¹m₁).
pub fn theta_inv_right(m: &Obj, n: &Obj) -> Matrix {
    assert!(!is_left(m));
    let (h, _, cm) = parts(m);
    let (_, an, _) = parts(n);
    let pairs: Vec<_> = (0..h.dim())
        .map(|k| (cm[k].clone(), h.combine(an, h.sinv_terms(k), n.dim)))
        .collect();
    pairing_matrix(&pairs, m.dim, n.dim)
}

/// φ: M → N*. Left: φ♭(n)(m) = φ(m₀)((S⁻¹m₋₁)n). Right: φ♭(n)(m) = φ(m S⁻¹n₁)(n₀).
pub fn flat_closed(phi: &Matrix, m: &Obj, n: &Obj) -> Matrix {
    let (h, am, cm) = parts(m);
    let (_, an, cn) = parts(n);
    let pt = phi.transpose();
    let mut out = Matrix::zeros(phi.field(), m.dim, n.dim);
    for k in 0..h.dim() {
        let t = if is_left(m) {
            cm[k]
                .transpose()
                .mul(&pt)
                .mul(&h.combine(an, h.sinv_terms(k), n.dim))
        } else {
            h.combine(am, h.sinv_terms(k), m.dim)
                .transpose()
                .mul(&pt)
                .mul(&cn[k])
        };
        out = out.add(&t);
    }
    out
}

/// φ: M → N*. Left: φ♯(n)(m) = φ(n₋₁m)(n₀).
pub fn sharp_left(phi: &Matrix, m: &Obj, n: &Obj) -> Matrix {
    assert!(is_left(m));
    let (h, am, _) = parts(m);
    let (_, _, cn) = parts(n);
    let pt = phi.transpose();
    let mut out = Matrix::zeros(phi.field(), m.dim, n.dim);
    for k in 0..h.dim() {
        out = out.add(&am[k].transpose().mul(&pt).mul(&cn[k]));
    }
    out
}

fn twisted(m: &Obj, power: i32) -> Matrix {
    let (h, am, cm) = parts(m);
    let s = if power >= 0 {
        h.antipode.pow(power as u32)
    } else {
        h.antipode_inv.pow((-power) as u32)
    };
    let mut out = Matrix::zeros(m.field(), m.dim, m.dim);
    for k in 0..h.dim() {
        let terms: Vec<(usize, Scalar)> = (0..h.dim())
            .filter(|&i| !s.is_entry_zero(i, k))
            .map(|i| (i, s.get(i, k)))
            .collect();
        out = out.add(&h.combine(am, &terms, m.dim).mul(&cm[k]));
    }
    out
}

/// ξ(m) = (S⁻²m₋₁) m₀.
pub fn xi(m: &Obj) -> Matrix {
    twisted(m, -2)
}

/// ζ(m) = (S m₋₁) m₀.
pub fn zeta(m: &Obj) -> Matrix {
    twisted(m, 1)
}
