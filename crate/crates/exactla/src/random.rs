use rand::Rng;

use crate::{FieldSpec, Matrix, Scalar};

/// Uniform residue over 𝔽_p; a small integer or half-integer over ℚ.
pub fn random_scalar<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> Scalar {
    match field {
        FieldSpec::Prime(p) => Scalar::Residue {
            v: rng.gen_range(0..p),
            p,
        },
        FieldSpec::Rational => {
            let n = rng.gen_range(-3i64..=3);
            let d = if rng.gen_bool(0.2) { 2 } else { 1 };
            Scalar::from_ratio(field, n, d).expect("nonzero denominator")
        }
    }
}

pub fn random_nonzero_scalar<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> Scalar {
    loop {
        let s = random_scalar(field, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_matrix<R: Rng + ?Sized>(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| random_scalar(field, rng))
}

pub fn random_invertible<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> Matrix {
    loop {
        let m = random_matrix(field, n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// Random combination of the columns of `basis` (a column vector).
pub fn random_combination<R: Rng + ?Sized>(basis: &Matrix, rng: &mut R) -> Matrix {
    let c = random_matrix(basis.field(), basis.cols(), 1, rng);
    basis.mul(&c)
}
