use cat_backends::{tensor_power, Mor, Obj, Report};
use exactla::Matrix;
use hopf_structures::{ComonoidStr, MonoidStr};

use crate::OmegaError;

/// An operation symbol with arity s and coarity t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSym {
    pub name: String,
    pub s: usize,
    pub t: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    ops: Vec<OpSym>,
}

impl Signature {
    pub fn new<'a>(
        ops: impl IntoIterator<Item = (&'a str, usize, usize)>,
    ) -> Result<Signature, OmegaError> {
        let mut out: Vec<OpSym> = Vec::new();
        for (name, s, t) in ops {
            if out.iter().any(|o| o.name == name) {
                return Err(OmegaError::DuplicateName(name.into()));
            }
            out.push(OpSym {
                name: name.into(),
                s,
                t,
            });
        }
        Ok(Signature { ops: out })
    }

    /// {mul: 2 → 1, unit: 0 → 1}
    pub fn monoid() -> Signature {
        Signature::new([("mul", 2, 1), ("unit", 0, 1)]).expect("distinct")
    }

    /// {comul: 1 → 2, counit: 1 → 0}
    pub fn comonoid() -> Signature {
        Signature::new([("comul", 1, 2), ("counit", 1, 0)]).expect("distinct")
    }

    pub fn ops(&self) -> &[OpSym] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.ops.iter().position(|o| o.name == name)
    }

    pub fn max_arity(&self) -> usize {
        self.ops.iter().map(|o| o.s.max(o.t)).max().unwrap_or(0)
    }
}

/// An object A with one morphism A^{⊗s(ω)} → A^{⊗t(ω)} per operation ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMagma {
    pub signature: Signature,
    pub carrier: Obj,
    pub ops: Vec<Mor>,
}

impl OmegaMagma {
    /// `mats[i]` is the matrix of the i-th operation of `signature`.
    pub fn new(
        signature: Signature,
        carrier: &Obj,
        mats: Vec<Matrix>,
    ) -> Result<OmegaMagma, OmegaError> {
        if mats.len() != signature.len() {
            return Err(OmegaError::DimensionMismatch(format!(
                "{} operations for a signature of size {}",
                mats.len(),
                signature.len()
            )));
        }
        let mut ops = Vec::with_capacity(mats.len());
        for (o, m) in signature.ops.iter().zip(mats) {
            let src = tensor_power(carrier, o.s);
            let dst = tensor_power(carrier, o.t);
            ops.push(Mor::new(&src, &dst, m)?);
        }
        Ok(OmegaMagma {
            signature,
            carrier: carrier.clone(),
            ops,
        })
    }

    pub fn from_monoid(m: &MonoidStr) -> OmegaMagma {
        OmegaMagma {
            signature: Signature::monoid(),
            carrier: m.carrier.clone(),
            ops: vec![m.mul.clone(), m.unit.clone()],
        }
    }

    pub fn from_comonoid(c: &ComonoidStr) -> OmegaMagma {
        OmegaMagma {
            signature: Signature::comonoid(),
            carrier: c.carrier.clone(),
            ops: vec![c.comul.clone(), c.counit.clone()],
        }
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn op(&self, name: &str) -> Option<&Mor> {
        self.signature.index_of(name).map(|i| &self.ops[i])
    }

    /// Every operation must be a morphism of the backend.
    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        for (i, (o, m)) in self.signature.ops.iter().zip(&self.ops).enumerate() {
            if !m.is_valid() {
                r.push(format!("op:{}", o.name), vec![i]);
            }
        }
        r
    }

    /// The isomorphic magma on `carrier` obtained by the linear iso p: A → carrier.
    pub fn transport(&self, carrier: &Obj, p: &Matrix) -> Result<OmegaMagma, OmegaError> {
        let pi = p
            .inverse()
            .ok_or_else(|| OmegaError::DimensionMismatch("transport along a singular map".into()))?;
        let f = p.field();
        let power = |m: &Matrix, k: usize| {
            (0..k).fold(Matrix::identity(f, 1), |acc, _| acc.kron(m))
        };
        let mats = self
            .signature
            .ops
            .iter()
            .zip(&self.ops)
            .map(|(o, m)| power(p, o.t).mul(&m.matrix).mul(&power(&pi, o.s)))
            .collect();
        OmegaMagma::new(self.signature.clone(), carrier, mats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_are_rejected() {
        assert_eq!(
            Signature::new([("m", 2, 1), ("m", 0, 1)]),
            Err(OmegaError::DuplicateName("m".into()))
        );
        assert_eq!(Signature::monoid().max_arity(), 2);
        assert!(Signature::default().is_empty());
    }
}
