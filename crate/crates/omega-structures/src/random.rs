//! Seeded random Ω-magmas.

use cat_backends::random::{conjugate, random_basis_change};
use cat_backends::{random_mor, tensor_power, Obj};
use exactla::Matrix;
use rand::Rng;

use crate::{OmegaMagma, Signature};

/// {mul: 2 → 1, neg: 1 → 1, one: 0 → 1}
pub fn mixed_signature() -> Signature {
    Signature::new([("mul", 2, 1), ("neg", 1, 1), ("one", 0, 1)]).expect("distinct")
}

/// Random morphisms A^{⊗s} → A^{⊗t} for each operation.
pub fn random_magma<R: Rng + ?Sized>(carrier: &Obj, sig: &Signature, rng: &mut R) -> OmegaMagma {
    let mats = sig
        .ops()
        .iter()
        .map(|o| {
            let src = tensor_power(carrier, o.s);
            let dst = tensor_power(carrier, o.t);
            random_mor(&src, &dst, rng).matrix
        })
        .collect();
    OmegaMagma::new(sig.clone(), carrier, mats).expect("shapes")
}

/// An isomorphic copy of `a` in a random basis, with the isomorphism A → copy.
pub fn random_copy<R: Rng + ?Sized>(a: &OmegaMagma, rng: &mut R) -> (OmegaMagma, Matrix) {
    let p = random_basis_change(&a.carrier, rng);
    let carrier = conjugate(&a.carrier, &p);
    (a.transport(&carrier, &p).expect("invertible"), p)
}
