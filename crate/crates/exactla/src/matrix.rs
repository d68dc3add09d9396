use num_rational::BigRational;
use std::fmt;

use crate::field::{Arith, PArith, QArith};
use crate::{FieldSpec, LaError, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Store {
    Q(Vec<BigRational>),
    P(u64, Vec<u64>),
}

/// Dense row-major matrix over a single exact field.
///
/// Matrices act on coordinate columns, so `g.mul(&f)` is the composite g∘f.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    pub(crate) store: Store,
}

macro_rules! with_arith {
    ($m:expr, $ar:ident, $v:ident => $body:expr) => {
        match &$m.store {
            Store::Q($v) => {
                let $ar = $crate::field::QArith;
                $body
            }
            Store::P(p, $v) => {
                let $ar = $crate::field::PArith(*p);
                $body
            }
        }
    };
}

macro_rules! with_pair {
    ($a:expr, $b:expr, $ar:ident, $x:ident, $y:ident => $body:expr) => {
        match (&$a.store, &$b.store) {
            (Store::Q($x), Store::Q($y)) => {
                let $ar = $crate::field::QArith;
                $body
            }
            (Store::P(p, $x), Store::P(q, $y)) if p == q => {
                let $ar = $crate::field::PArith(*p);
                $body
            }
            _ => panic!("matrix field mismatch"),
        }
    };
}

pub(crate) use with_arith;

trait Wrap: Arith {
    fn wrap(&self, v: Vec<Self::E>) -> Store;
    fn lift(&self, e: &Self::E) -> Scalar;
    fn lower(&self, s: &Scalar) -> Self::E;
}

impl Wrap for QArith {
    fn wrap(&self, v: Vec<BigRational>) -> Store {
        Store::Q(v)
    }
    fn lift(&self, e: &BigRational) -> Scalar {
        Scalar::Rational(e.clone())
    }
    fn lower(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rational(q) => q.clone(),
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Wrap for PArith {
    fn wrap(&self, v: Vec<u64>) -> Store {
        Store::P(self.0, v)
    }
    fn lift(&self, e: &u64) -> Scalar {
        Scalar::Residue { v: *e, p: self.0 }
    }
    fn lower(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Residue { v, p } if *p == self.0 => *v,
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        let store = match field {
            FieldSpec::Rational => Store::Q(vec![QArith.zero(); rows * cols]),
            FieldSpec::Prime(p) => Store::P(p, vec![0; rows * cols]),
        };
        Matrix { rows, cols, store }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                if !s.is_zero() {
                    m.set(i, j, s);
                }
            }
        }
        m
    }

    /// Builds from rows of scalars; every entry must live in `field`.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<Scalar>]) -> Result<Matrix, LaError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(LaError::DimensionMismatch(format!(
                    "row {i} has length {} (expected {c})",
                    row.len()
                )));
            }
            for (j, s) in row.iter().enumerate() {
                if s.field() != field {
                    return Err(LaError::FieldMismatch);
                }
                m.set(i, j, s.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_fn(field, r, c, |i, j| Scalar::from_i64(field, rows[i][j]))
    }

    /// Column vector.
    pub fn column(field: FieldSpec, entries: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, entries.len(), 1, |i, _| entries[i].clone())
    }

    /// Standard basis column e_i of length n.
    pub fn unit_column(field: FieldSpec, n: usize, i: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, 1);
        m.set(i, 0, Scalar::one(field));
        m
    }

    /// Permutation matrix sending basis vector j to basis vector perm[j].
    pub fn permutation(field: FieldSpec, perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Scalar::one(field));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn field(&self) -> FieldSpec {
        match &self.store {
            Store::Q(_) => FieldSpec::Rational,
            Store::P(p, _) => FieldSpec::Prime(*p),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        let k = i * self.cols + j;
        with_arith!(self, ar, v => ar.lift(&v[k]))
    }

    pub fn is_entry_zero(&self, i: usize, j: usize) -> bool {
        let k = i * self.cols + j;
        with_arith!(self, ar, v => ar.is_zero(&v[k]))
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        let k = i * self.cols + j;
        match &mut self.store {
            Store::Q(v) => v[k] = QArith.lower(&s),
            Store::P(p, v) => v[k] = PArith(*p).lower(&s),
        }
    }

    /// Adds `s` to entry (i, j).
    pub fn add_at(&mut self, i: usize, j: usize, s: &Scalar) {
        let k = i * self.cols + j;
        match &mut self.store {
            Store::Q(v) => v[k] = &v[k] + QArith.lower(s),
            Store::P(p, v) => {
                let ar = PArith(*p);
                v[k] = ar.add(&v[k], &ar.lower(s))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        with_arith!(self, ar, v => v.iter().all(|e| ar.is_zero(e)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field(), self.rows)
    }

    pub fn nonzero_count(&self) -> usize {
        with_arith!(self, ar, v => v.iter().filter(|e| !ar.is_zero(e)).count())
    }

    /// Entries of row i as scalars.
    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col(&self, j: usize) -> Matrix {
        self.select_cols(&[j])
    }

    pub fn select_cols(&self, js: &[usize]) -> Matrix {
        with_arith!(self, ar, v => {
            let mut out = Vec::with_capacity(self.rows * js.len());
            for i in 0..self.rows {
                for &j in js {
                    out.push(v[i * self.cols + j].clone());
                }
            }
            Matrix { rows: self.rows, cols: js.len(), store: ar.wrap(out) }
        })
    }

    pub fn select_rows(&self, is: &[usize]) -> Matrix {
        with_arith!(self, ar, v => {
            let mut out = Vec::with_capacity(is.len() * self.cols);
            for &i in is {
                out.extend_from_slice(&v[i * self.cols..(i + 1) * self.cols]);
            }
            Matrix { rows: is.len(), cols: self.cols, store: ar.wrap(out) }
        })
    }

    pub fn transpose(&self) -> Matrix {
        with_arith!(self, ar, v => {
            let mut out = vec![ar.zero(); v.len()];
            for i in 0..self.rows {
                for j in 0..self.cols {
                    out[j * self.rows + i] = v[i * self.cols + j].clone();
                }
            }
            Matrix { rows: self.cols, cols: self.rows, store: ar.wrap(out) }
        })
    }

    /// Checked product self·other.
    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LaError> {
        if self.cols != other.rows {
            return Err(LaError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field() != other.field() {
            return Err(LaError::FieldMismatch);
        }
        Ok(self.mul(other))
    }

    /// Product self·other; panics on shape mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let (n, k, m) = (self.rows, self.cols, other.cols);
        with_pair!(self, other, ar, a, b => {
            let mut out = vec![ar.zero(); n * m];
            for i in 0..n {
                for l in 0..k {
                    let x = &a[i * k + l];
                    if ar.is_zero(x) {
                        continue;
                    }
                    let row = &b[l * m..(l + 1) * m];
                    for j in 0..m {
                        if !ar.is_zero(&row[j]) {
                            ar.fma(&mut out[i * m + j], x, &row[j]);
                        }
                    }
                }
            }
            Matrix { rows: n, cols: m, store: ar.wrap(out) }
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        with_pair!(self, other, ar, a, b => {
            let out = a.iter().zip(b).map(|(x, y)| ar.add(x, y)).collect();
            Matrix { rows: self.rows, cols: self.cols, store: ar.wrap(out) }
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        with_pair!(self, other, ar, a, b => {
            let out = a.iter().zip(b).map(|(x, y)| ar.sub(x, y)).collect();
            Matrix { rows: self.rows, cols: self.cols, store: ar.wrap(out) }
        })
    }

    pub fn neg(&self) -> Matrix {
        with_arith!(self, ar, a => {
            let out = a.iter().map(|x| ar.neg(x)).collect();
            Matrix { rows: self.rows, cols: self.cols, store: ar.wrap(out) }
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        with_arith!(self, ar, a => {
            let c = ar.lower(s);
            let out = a.iter().map(|x| ar.mul(x, &c)).collect();
            Matrix { rows: self.rows, cols: self.cols, store: ar.wrap(out) }
        })
    }

    /// Kronecker product; basis of X⊗Y ordered with the left index outer.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let (rows, cols) = (r1 * r2, c1 * c2);
        with_pair!(self, other, ar, a, b => {
            let mut out = vec![ar.zero(); rows * cols];
            for i in 0..r1 {
                for j in 0..c1 {
                    let x = &a[i * c1 + j];
                    if ar.is_zero(x) {
                        continue;
                    }
                    for k in 0..r2 {
                        for l in 0..c2 {
                            let y = &b[k * c2 + l];
                            if !ar.is_zero(y) {
                                out[(i * r2 + k) * cols + j * c2 + l] = ar.mul(x, y);
                            }
                        }
                    }
                }
            }
            Matrix { rows, cols, store: ar.wrap(out) }
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        with_pair!(self, other, ar, a, b => {
            let mut out = Vec::with_capacity(self.rows * cols);
            for i in 0..self.rows {
                out.extend_from_slice(&a[i * self.cols..(i + 1) * self.cols]);
                out.extend_from_slice(&b[i * other.cols..(i + 1) * other.cols]);
            }
            Matrix { rows: self.rows, cols, store: ar.wrap(out) }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        with_pair!(self, other, ar, a, b => {
            let mut out = a.clone();
            out.extend_from_slice(b);
            Matrix { rows: self.rows + other.rows, cols: self.cols, store: ar.wrap(out) }
        })
    }

    /// Stacks many blocks vertically (all with `cols` columns).
    pub fn vstack_all(field: FieldSpec, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut acc = Matrix::zeros(field, 0, cols);
        for b in blocks {
            acc = acc.vstack(b);
        }
        acc
    }

    /// Stacks many blocks horizontally (all with `rows` rows).
    pub fn hstack_all(field: FieldSpec, rows: usize, blocks: &[Matrix]) -> Matrix {
        let mut acc = Matrix::zeros(field, rows, 0);
        for b in blocks {
            acc = acc.hstack(b);
        }
        acc
    }

    /// Reinterprets the entries with new shape (row-major order kept).
    pub fn reshape(&self, rows: usize, cols: usize) -> Matrix {
        assert_eq!(rows * cols, self.rows * self.cols, "reshape size mismatch");
        Matrix {
            rows,
            cols,
            store: self.store.clone(),
        }
    }

    /// Column vector of the row-major entries.
    pub fn vectorize(&self) -> Matrix {
        self.reshape(self.rows * self.cols, 1)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut r = Matrix::identity(self.field(), self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Applies a column permutation: out column perm[j] = self column j.
    pub fn permute_cols(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.cols);
        let mut inv = vec![0; perm.len()];
        for (j, &t) in perm.iter().enumerate() {
            inv[t] = j;
        }
        self.select_cols(&inv)
    }

    /// Applies a row permutation: out row perm[i] = self row i.
    pub fn permute_rows(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.rows);
        let mut inv = vec![0; perm.len()];
        for (i, &t) in perm.iter().enumerate() {
            inv[t] = i;
        }
        self.select_rows(&inv)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix {}x{} over {} [",
            self.rows,
            self.cols,
            self.field()
        )?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
