use crate::field::Arith;
use crate::matrix::{with_arith, Store};
use crate::{LaError, Matrix};

/// Result of [`Matrix::decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub rank: usize,
    /// Columns span the null space.
    pub kernel: Matrix,
    /// Columns span the column space (pivot columns of the input).
    pub image: Matrix,
}

/// Gauss-Jordan on a row-major buffer, pivots restricted to the first `pcols` columns.
fn rref<A: Arith>(ar: &A, v: &mut [A::E], rows: usize, cols: usize, pcols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pcols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !ar.is_zero(&v[i * cols + c])) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                v.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = ar.inv(&v[r * cols + c]);
        for j in c..cols {
            let x = &v[r * cols + j];
            if !ar.is_zero(x) {
                v[r * cols + j] = ar.mul(x, &inv);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = v[i * cols + c].clone();
            if ar.is_zero(&f) {
                continue;
            }
            for j in c..cols {
                let x = v[r * cols + j].clone();
                if !ar.is_zero(&x) {
                    let t = ar.mul(&f, &x);
                    v[i * cols + j] = ar.sub(&v[i * cols + j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Matrix {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (self.rows(), self.cols());
        let piv = match &mut m.store {
            Store::Q(v) => rref(&crate::field::QArith, v, rows, cols, cols),
            Store::P(p, v) => rref(&crate::field::PArith(*p), v, rows, cols, cols),
        };
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank, kernel basis and image basis.
    pub fn decompose(&self) -> Decomposition {
        let (r, piv) = self.rref();
        let f = self.field();
        let n = self.cols();
        let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
        let mut kernel = Matrix::zeros(f, n, free.len());
        for (k, &fc) in free.iter().enumerate() {
            kernel.set(fc, k, crate::Scalar::one(f));
            for (i, &pc) in piv.iter().enumerate() {
                let x = r.get(i, fc);
                if !x.is_zero() {
                    kernel.set(pc, k, -x);
                }
            }
        }
        Decomposition {
            rank: piv.len(),
            kernel,
            image: self.select_cols(&piv),
        }
    }

    pub fn kernel(&self) -> Matrix {
        self.decompose().kernel
    }

    /// Pivot columns of the input, a basis of the column space.
    pub fn image(&self) -> Matrix {
        let piv = self.rref().1;
        self.select_cols(&piv)
    }

    /// Canonical basis of the column space: columns of the transposed RREF.
    pub fn column_space_canonical(&self) -> Matrix {
        let (r, piv) = self.transpose().rref();
        let idx: Vec<usize> = (0..piv.len()).collect();
        r.select_rows(&idx).transpose()
    }

    /// Solves self·x = rhs; free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix, LaError> {
        if self.rows() != rhs.rows() {
            return Err(LaError::DimensionMismatch(format!(
                "system has {} rows, right-hand side {}",
                self.rows(),
                rhs.rows()
            )));
        }
        if self.field() != rhs.field() {
            return Err(LaError::FieldMismatch);
        }
        let (rows, n, k) = (self.rows(), self.cols(), rhs.cols());
        let mut aug = self.hstack(rhs);
        let cols = n + k;
        let piv = match &mut aug.store {
            Store::Q(v) => rref(&crate::field::QArith, v, rows, cols, n),
            Store::P(p, v) => rref(&crate::field::PArith(*p), v, rows, cols, n),
        };
        let consistent = with_arith!(aug, ar, v => {
            (piv.len()..rows).all(|i| (n..cols).all(|j| ar.is_zero(&v[i * cols + j])))
        });
        if !consistent {
            return Err(LaError::NoSolution);
        }
        let mut x = Matrix::zeros(self.field(), n, k);
        for (i, &pc) in piv.iter().enumerate() {
            for j in 0..k {
                if !aug.is_entry_zero(i, n + j) {
                    x.set(pc, j, aug.get(i, n + j));
                }
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field(), self.rows());
        if self.rank() != self.rows() {
            return None;
        }
        self.solve(&id).ok()
    }

    /// Whether every column of `other` lies in the column space of `self`.
    pub fn spans(&self, other: &Matrix) -> bool {
        if other.cols() == 0 {
            return true;
        }
        self.rank() == self.hstack(other).rank()
    }

    /// Equality of column spaces.
    pub fn same_column_space(&self, other: &Matrix) -> bool {
        let r = self.rank();
        r == other.rank() && r == self.hstack(other).rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows()
    }
}
