use crate::structures::{ComonoidStr, MonoidStr};
use cat_backends::{
    curry_dual, dual, dual_mor, ev, tensor, tensor_mor, theta, theta_inv, unit_obj, CatError, Mor,
    Obj, Report,
};

/// ι: 𝟙 → 𝟙*, the transpose of the identification 𝟙⊗𝟙 ≅ 𝟙.
pub fn iota(x: &Obj) -> Mor {
    let one = unit_obj(&x.cat);
    curry_dual(&one, &one, &Mor::identity(&one))
}

/// (P, Δ, ε) ↦ (P*, Δ*∘θ_{P,P}, ε*∘ι).
pub fn dual_comonoid(p: &ComonoidStr) -> MonoidStr {
    let c = &p.carrier;
    let pd = dual(c);
    let mul = dual_mor(&p.comul).after(&theta(c, c));
    let unit = dual_mor(&p.counit).after(&iota(c));
    MonoidStr {
        mul: Mor::new(&tensor(&pd, &pd), &pd, mul.matrix).expect("shape"),
        unit: Mor::new(&unit_obj(&c.cat), &pd, unit.matrix).expect("shape"),
        carrier: pd,
    }
}

/// Finite dual of a finite-dimensional monoid: A° = A* with Δ = (θ^inv_{A,A})⁻¹ ∘ μ*
/// and ε = ι⁻¹ ∘ u*; κ is the identity of A*.
pub fn finite_dual(a: &MonoidStr) -> Result<(ComonoidStr, Mor), CatError> {
    let x = &a.carrier;
    let ad = dual(x);
    let ti = theta_inv(x, x);
    let ti_inv = ti
        .matrix
        .inverse()
        .ok_or_else(|| CatError::InvalidStructure("θ^inv is not invertible".into()))?;
    let mu_star = dual_mor(&a.mul);
    let comul = ti_inv.mul(&mu_star.matrix);
    let iota_inv = iota(x).matrix.inverse().expect("ι is invertible");
    let counit = iota_inv.mul(&dual_mor(&a.unit).matrix);
    let c = ComonoidStr {
        comul: Mor::new(&ad, &tensor(&ad, &ad), comul)?,
        counit: Mor::new(&ad, &unit_obj(&x.cat), counit)?,
        carrier: ad.clone(),
    };
    Ok((c, Mor::identity(&ad)))
}

/// Unit triangle: ev_P ∘ (u ⊗ id_P) = ε under 𝟙⊗P ≅ P.
pub fn check_pairing_unit(p: &ComonoidStr, pd: &MonoidStr) -> bool {
    let lhs = ev(&p.carrier).after(&tensor_mor(&pd.unit, &Mor::identity(&p.carrier)));
    lhs.matrix == p.counit.matrix
}

/// Multiplication square: ev_P ∘ (μ ⊗ id) = ev_{P⊗P} ∘ (θ_{P,P} ⊗ id) ∘ (id ⊗ Δ).
pub fn check_pairing_mul(p: &ComonoidStr, pd: &MonoidStr) -> bool {
    let c = &p.carrier;
    let lhs = ev(c).after(&tensor_mor(&pd.mul, &Mor::identity(c)));
    let dd = tensor(&pd.carrier, &pd.carrier);
    let rhs = ev(&tensor(c, c))
        .after(&tensor_mor(&theta(c, c), &Mor::identity(&tensor(c, c))))
        .after(&tensor_mor(&Mor::identity(&dd), &p.comul));
    lhs.matrix == rhs.matrix
}

/// Both pairing identities as a report.
pub fn pairing_report(p: &ComonoidStr) -> Report {
    let pd = dual_comonoid(p);
    let mut r = Report::new();
    if !check_pairing_unit(p, &pd) {
        r.push("pairing-unit", vec![]);
    }
    if !check_pairing_mul(p, &pd) {
        r.push("pairing-mul", vec![]);
    }
    r
}

/// Whether A ≅ (A°)* via α_A as monoids: α∘μ = μ'∘(α⊗α) and α∘u = u'.
pub fn alpha_is_monoid_iso(a: &MonoidStr) -> Result<bool, CatError> {
    let (c, _) = finite_dual(a)?;
    let back = dual_comonoid(&c);
    let al = cat_backends::alpha(&a.carrier);
    if al.matrix.rank() != a.dim() {
        return Ok(false);
    }
    let lhs = al.matrix.mul(&a.mul.matrix);
    let rhs = back.mul.matrix.mul(&al.matrix.kron(&al.matrix));
    Ok(lhs == rhs && al.matrix.mul(&a.unit.matrix) == back.unit.matrix)
}
