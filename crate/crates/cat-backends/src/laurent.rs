//! The Hopf algebra generated by c^{±1} and v with v² = 0, vc = −cv,
//! Δc = c⊗c, Δv = c⊗v + v⊗1, represented sparsely on the basis c^k v^l.
//! Bounded complexes become right comodules over it.

use std::collections::BTreeMap;

use exactla::{FieldSpec, Matrix, Scalar};

use crate::object::Obj;
use crate::CatError;

/// Basis element c^k v^l, l ∈ {0, 1}.
pub type Key = (i64, u8);

fn sign(f: FieldSpec, odd: bool) -> Scalar {
    if odd {
        -Scalar::one(f)
    } else {
        Scalar::one(f)
    }
}

/// (c^a v^l)(c^b v^m) = (−1)^{l·b} c^{a+b} v^{l+m}.
pub fn mul_basis(f: FieldSpec, x: Key, y: Key) -> Option<(Key, Scalar)> {
    if x.1 + y.1 > 1 {
        return None;
    }
    let odd = x.1 == 1 && y.0.rem_euclid(2) == 1;
    Some(((x.0 + y.0, x.1 + y.1), sign(f, odd)))
}

/// Δ(c^k) = c^k⊗c^k, Δ(c^k v) = c^{k+1}⊗c^k v + c^k v⊗c^k.
pub fn comul_basis(x: Key) -> Vec<(Key, Key)> {
    match x.1 {
        0 => vec![(x, x)],
        _ => vec![((x.0 + 1, 0), x), (x, (x.0, 0))],
    }
}

pub fn counit_basis(f: FieldSpec, x: Key) -> Scalar {
    if x.1 == 0 {
        Scalar::one(f)
    } else {
        Scalar::zero(f)
    }
}

/// Finitely supported element of H.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem(pub BTreeMap<Key, Scalar>);

/// Finitely supported element of H⊗H.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem2(pub BTreeMap<(Key, Key), Scalar>);

fn add_to<K: Ord + Clone>(m: &mut BTreeMap<K, Scalar>, k: K, s: Scalar) {
    if s.is_zero() {
        return;
    }
    let v = match m.get(&k) {
        Some(old) => old + &s,
        None => s,
    };
    if v.is_zero() {
        m.remove(&k);
    } else {
        m.insert(k, v);
    }
}

impl Elem {
    pub fn basis(f: FieldSpec, k: Key) -> Elem {
        let mut m = BTreeMap::new();
        m.insert(k, Scalar::one(f));
        Elem(m)
    }

    pub fn mul(&self, other: &Elem) -> Elem {
        let mut out = BTreeMap::new();
        for (a, s) in &self.0 {
            for (b, t) in &other.0 {
                if let Some((k, e)) = mul_basis(s.field(), *a, *b) {
                    add_to(&mut out, k, &(s * t) * &e);
                }
            }
        }
        Elem(out)
    }

    pub fn comul(&self) -> Elem2 {
        let mut out = BTreeMap::new();
        for (a, s) in &self.0 {
            for (l, r) in comul_basis(*a) {
                add_to(&mut out, (l, r), s.clone());
            }
        }
        Elem2(out)
    }
}

impl Elem2 {
    pub fn mul(&self, other: &Elem2) -> Elem2 {
        let mut out = BTreeMap::new();
        for ((a1, a2), s) in &self.0 {
            for ((b1, b2), t) in &other.0 {
                let f = s.field();
                if let (Some((k1, e1)), Some((k2, e2))) =
                    (mul_basis(f, *a1, *b1), mul_basis(f, *a2, *b2))
                {
                    add_to(&mut out, (k1, k2), &(&(s * t) * &e1) * &e2);
                }
            }
        }
        Elem2(out)
    }
}

/// Right H-comodule: ρ(e_i) = Σ e_j ⊗ c^k v^l · coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentComodule {
    pub field: FieldSpec,
    pub dim: usize,
    pub rho: Vec<BTreeMap<(usize, Key), Scalar>>,
}

/// ρ(a) = a⊗c^{−m} + da⊗vc^{−m} for a in degree m.
pub fn dg_to_comodule(x: &Obj) -> Result<LaurentComodule, CatError> {
    let (degrees, d) = x
        .dg_parts()
        .ok_or_else(|| CatError::InvalidStructure("expected a DgVect object".into()))?;
    let f = x.field();
    let mut rho = Vec::with_capacity(x.dim);
    for i in 0..x.dim {
        let m = degrees[i];
        let mut r = BTreeMap::new();
        add_to(&mut r, (i, (-m, 0)), Scalar::one(f));
        // v c^{−m} = (−1)^m c^{−m} v
        let s = sign(f, m.rem_euclid(2) == 1);
        for j in 0..x.dim {
            if !d.is_entry_zero(j, i) {
                add_to(&mut r, (j, (-m, 1)), &d.get(j, i) * &s);
            }
        }
        rho.push(r);
    }
    Ok(LaurentComodule {
        field: f,
        dim: x.dim,
        rho,
    })
}

impl LaurentComodule {
    /// (ρ⊗id)ρ = (id⊗Δ)ρ.
    pub fn is_coassociative(&self) -> bool {
        (0..self.dim).all(|i| {
            let mut lhs = BTreeMap::new();
            let mut rhs = BTreeMap::new();
            for ((j, k), s) in &self.rho[i] {
                for ((l, k2), t) in &self.rho[*j] {
                    add_to(&mut lhs, (*l, *k2, *k), s * t);
                }
                for (a, b) in comul_basis(*k) {
                    add_to(&mut rhs, (*j, a, b), s.clone());
                }
            }
            lhs == rhs
        })
    }

    /// (id⊗ε)ρ = id.
    pub fn is_counital(&self) -> bool {
        (0..self.dim).all(|i| {
            let mut v = BTreeMap::new();
            for ((j, k), s) in &self.rho[i] {
                add_to(&mut v, *j, s * &counit_basis(self.field, *k));
            }
            let mut e = BTreeMap::new();
            add_to(&mut e, i, Scalar::one(self.field));
            v == e
        })
    }

    /// Whether g: self → other satisfies (g⊗id)ρ = ρ'g.
    pub fn is_colinear(&self, other: &LaurentComodule, g: &Matrix) -> bool {
        (0..self.dim).all(|i| {
            let mut lhs = BTreeMap::new();
            let mut rhs = BTreeMap::new();
            for ((j, k), s) in &self.rho[i] {
                for r in 0..other.dim {
                    if !g.is_entry_zero(r, *j) {
                        add_to(&mut lhs, (r, *k), s * &g.get(r, *j));
                    }
                }
            }
            for j in 0..other.dim {
                if !g.is_entry_zero(j, i) {
                    for ((r, k), s) in &other.rho[j] {
                        add_to(&mut rhs, (*r, *k), s * &g.get(j, i));
                    }
                }
            }
            lhs == rhs
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        let f = FieldSpec::Rational;
        let c = Elem::basis(f, (1, 0));
        let v = Elem::basis(f, (0, 1));
        let mut neg_cv = c.mul(&v);
        for s in neg_cv.0.values_mut() {
            *s = -s.clone();
        }
        assert_eq!(v.mul(&c), neg_cv);
        assert!(v.mul(&v).0.is_empty());
        let ci = Elem::basis(f, (-1, 0));
        assert_eq!(c.mul(&ci), Elem::basis(f, (0, 0)));
    }

    #[test]
    fn comultiplication_is_multiplicative_on_a_window() {
        let f = FieldSpec::Rational;
        let keys: Vec<Key> = (-2..=2).flat_map(|k| [(k, 0u8), (k, 1u8)]).collect();
        for &a in &keys {
            for &b in &keys {
                let x = Elem::basis(f, a);
                let y = Elem::basis(f, b);
                assert_eq!(x.mul(&y).comul(), x.comul().mul(&y.comul()), "{a:?} {b:?}");
            }
        }
    }
}
