use exactla::{FieldSpec, Scalar};

use crate::CatError;

/// Finite abelian group ℤ/n₁ × … × ℤ/n_k; elements are indexed in mixed radix
/// with the first factor outermost, index 0 being the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub orders: Vec<u32>,
}

impl AbelianGroup {
    pub fn cyclic(n: u32) -> AbelianGroup {
        AbelianGroup { orders: vec![n] }
    }

    pub fn product(orders: &[u32]) -> AbelianGroup {
        AbelianGroup {
            orders: orders.to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    pub fn digits(&self, g: usize) -> Vec<u32> {
        let mut out = vec![0; self.orders.len()];
        let mut r = g;
        for k in (0..self.orders.len()).rev() {
            let o = self.orders[k] as usize;
            out[k] = (r % o) as u32;
            r /= o;
        }
        out
    }

    pub fn from_digits(&self, d: &[u32]) -> usize {
        let mut g = 0usize;
        for (k, &o) in self.orders.iter().enumerate() {
            g = g * o as usize + (d[k] % o) as usize;
        }
        g
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da
            .iter()
            .zip(&db)
            .zip(&self.orders)
            .map(|((x, y), o)| (x + y) % o)
            .collect();
        self.from_digits(&s)
    }

    pub fn inv(&self, a: usize) -> usize {
        let s: Vec<u32> = self
            .digits(a)
            .iter()
            .zip(&self.orders)
            .map(|(x, o)| (o - x) % o)
            .collect();
        self.from_digits(&s)
    }

    pub fn name(&self) -> String {
        let parts: Vec<String> = self.orders.iter().map(|o| format!("C{o}")).collect();
        if parts.is_empty() {
            "C1".into()
        } else {
            parts.join("x")
        }
    }
}

/// Bicharacter χ: G × G → 𝕜ˣ stored as a |G|×|G| table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bichar {
    pub table: Vec<Vec<Scalar>>,
}

impl Bichar {
    pub fn trivial(field: FieldSpec, g: &AbelianGroup) -> Bichar {
        let n = g.order();
        Bichar {
            table: vec![vec![Scalar::one(field); n]; n],
        }
    }

    /// χ(a, b) = (−1)^{a·b} on ℤ/2, the super-vector-space sign.
    pub fn super_sign(field: FieldSpec) -> Bichar {
        let one = Scalar::one(field);
        let m = -&one;
        Bichar {
            table: vec![vec![one.clone(), one.clone()], vec![one, m]],
        }
    }

    pub fn at(&self, a: usize, b: usize) -> &Scalar {
        &self.table[a][b]
    }

    pub fn validate(&self, g: &AbelianGroup) -> Result<(), CatError> {
        let n = g.order();
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(CatError::InvalidStructure(
                "bicharacter table has wrong shape".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                if self.at(a, b).is_zero() {
                    return Err(CatError::InvalidStructure(format!(
                        "bicharacter vanishes at ({a},{b})"
                    )));
                }
                for c in 0..n {
                    if *self.at(g.mul(a, b), c) != self.at(a, c) * self.at(b, c)
                        || *self.at(a, g.mul(b, c)) != self.at(a, b) * self.at(a, c)
                    {
                        return Err(CatError::InvalidStructure(format!(
                            "bicharacter not multiplicative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.table.len();
        (0..n).all(|a| (0..n).all(|b| (self.at(a, b) * self.at(b, a)).is_one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix() {
        let g = AbelianGroup::product(&[2, 3]);
        assert_eq!(g.order(), 6);
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..6 {
                assert_eq!(g.mul(a, b), g.mul(b, a));
            }
        }
        assert_eq!(g.digits(5), vec![1, 2]);
    }

    #[test]
    fn super_sign_is_symmetric_bicharacter() {
        let f = FieldSpec::Rational;
        let g = AbelianGroup::cyclic(2);
        let chi = Bichar::super_sign(f);
        chi.validate(&g).unwrap();
        assert!(chi.is_symmetric());
    }
}
