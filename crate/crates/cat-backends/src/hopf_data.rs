use std::sync::Arc;

use exactla::{FieldSpec, Matrix, Scalar};

use crate::{CatError, Report};

/// Sparse list of (basis index, coefficient).
pub type Terms = Vec<(usize, Scalar)>;

/// Structure constants of a finite-dimensional Hopf algebra in Vect.
///
/// `mul` is n×n², `unit` n×1, `comul` n²×n, `counit` 1×n, `antipode` n×n;
/// tensor indices are (i, j) ↦ i·n + j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub mul: Matrix,
    pub unit: Matrix,
    pub comul: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
    mul_t: Vec<Terms>,
    comul_t: Vec<Vec<(usize, usize, Scalar)>>,
    s_t: Vec<Terms>,
    sinv_t: Vec<Terms>,
}

fn col_terms(m: &Matrix, j: usize) -> Terms {
    (0..m.rows())
        .filter(|&i| !m.is_entry_zero(i, j))
        .map(|i| (i, m.get(i, j)))
        .collect()
}

/// Swap map V⊗W → W⊗V on coordinates.
pub fn swap_matrix(field: FieldSpec, dv: usize, dw: usize) -> Matrix {
    let perm: Vec<usize> = (0..dv * dw).map(|k| (k % dw) * dv + k / dw).collect();
    Matrix::permutation(field, &perm)
}

/// (μ⊗μ)∘(id⊗c⊗id)∘(Δ⊗Δ) as an n²×n² matrix, expanded term by term so that
/// no n⁴-sized operator is formed.
pub fn braided_comul_product(mul: &Matrix, comul: &Matrix, c: &Matrix) -> Matrix {
    let n = mul.rows();
    let f = mul.field();
    let mul_cols: Vec<Terms> = (0..n * n).map(|k| col_terms(mul, k)).collect();
    let c_cols: Vec<Terms> = (0..n * n).map(|k| col_terms(c, k)).collect();
    let d_cols: Vec<Terms> = (0..n).map(|k| col_terms(comul, k)).collect();
    let mut out = Matrix::zeros(f, n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (pq, a) in &d_cols[i] {
                let (p, q) = (pq / n, pq % n);
                for (rs, b) in &d_cols[j] {
                    let (r, s) = (rs / n, rs % n);
                    let ab = a * b;
                    for (uv, cc) in &c_cols[q * n + r] {
                        let (u, v) = (uv / n, uv % n);
                        let w = &ab * cc;
                        for (x, m1) in &mul_cols[p * n + u] {
                            let w1 = &w * m1;
                            for (y, m2) in &mul_cols[v * n + s] {
                                out.add_at(x * n + y, i * n + j, &(&w1 * m2));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks the Hopf algebra axioms on raw structure constants.
pub fn check_hopf_axioms(
    mul: &Matrix,
    unit: &Matrix,
    comul: &Matrix,
    counit: &Matrix,
    antipode: &Matrix,
    antipode_inv: Option<&Matrix>,
) -> Report {
    let mut r = Report::new();
    let n = unit.rows();
    let f = mul.field();
    let shapes = [
        (mul.rows(), mul.cols(), n, n * n),
        (unit.rows(), unit.cols(), n, 1),
        (comul.rows(), comul.cols(), n * n, n),
        (counit.rows(), counit.cols(), 1, n),
        (antipode.rows(), antipode.cols(), n, n),
    ];
    for (k, (a, b, c, d)) in shapes.into_iter().enumerate() {
        if (a, b) != (c, d) {
            r.push("shape", vec![k, a, b]);
        }
    }
    if !r.is_ok() {
        return r;
    }
    let id = Matrix::identity(f, n);
    let one = Matrix::identity(f, 1);
    r.check_eq(
        "associativity",
        &mul.mul(&mul.kron(&id)),
        &mul.mul(&id.kron(mul)),
    );
    r.check_eq("left-unit", &mul.mul(&unit.kron(&id)), &id);
    r.check_eq("right-unit", &mul.mul(&id.kron(unit)), &id);
    r.check_eq(
        "coassociativity",
        &comul.kron(&id).mul(comul),
        &id.kron(comul).mul(comul),
    );
    r.check_eq("left-counit", &counit.kron(&id).mul(comul), &id);
    r.check_eq("right-counit", &id.kron(counit).mul(comul), &id);
    r.check_eq(
        "comul-multiplicative",
        &comul.mul(mul),
        &braided_comul_product(mul, comul, &swap_matrix(f, n, n)),
    );
    r.check_eq("comul-unital", &comul.mul(unit), &unit.kron(unit));
    r.check_eq(
        "counit-multiplicative",
        &counit.mul(mul),
        &counit.kron(counit),
    );
    r.check_eq("counit-unital", &counit.mul(unit), &one);
    let ue = unit.mul(counit);
    r.check_eq(
        "left-antipode",
        &mul.mul(&antipode.kron(&id)).mul(comul),
        &ue,
    );
    r.check_eq(
        "right-antipode",
        &mul.mul(&id.kron(antipode)).mul(comul),
        &ue,
    );
    match antipode_inv {
        Some(si) => {
            r.check_eq("antipode-inverse", &antipode.mul(si), &id);
            r.check_eq("antipode-inverse", &si.mul(antipode), &id);
        }
        None => r.push("antipode-invertible", vec![]),
    }
    r
}

impl HopfData {
    pub fn new(
        name: &str,
        labels: Vec<String>,
        mul: Matrix,
        unit: Matrix,
        comul: Matrix,
        counit: Matrix,
        antipode: Matrix,
    ) -> Result<Arc<HopfData>, CatError> {
        let antipode_inv = antipode.inverse();
        let report = check_hopf_axioms(
            &mul,
            &unit,
            &comul,
            &counit,
            &antipode,
            antipode_inv.as_ref(),
        );
        if !report.is_ok() {
            return Err(CatError::InvalidStructure(format!(
                "{name}: {}",
                report.axioms().join(", ")
            )));
        }
        let antipode_inv = antipode_inv.expect("checked");
        let n = unit.rows();
        if labels.len() != n {
            return Err(CatError::InvalidStructure(format!(
                "{name}: {} labels for dimension {n}",
                labels.len()
            )));
        }
        let mul_t = (0..n * n).map(|k| col_terms(&mul, k)).collect();
        let comul_t = (0..n)
            .map(|j| {
                col_terms(&comul, j)
                    .into_iter()
                    .map(|(k, c)| (k / n, k % n, c))
                    .collect()
            })
            .collect();
        let s_t = (0..n).map(|j| col_terms(&antipode, j)).collect();
        let sinv_t = (0..n).map(|j| col_terms(&antipode_inv, j)).collect();
        Ok(Arc::new(HopfData {
            name: name.to_string(),
            labels,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv,
            mul_t,
            comul_t,
            s_t,
            sinv_t,
        }))
    }

    pub fn dim(&self) -> usize {
        self.unit.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.mul.field()
    }

    /// h_i h_j
    pub fn mul_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mul_t[i * self.dim() + j]
    }

    /// Δ(h_i) = Σ c h_a ⊗ h_b
    pub fn comul_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comul_t[i]
    }

    pub fn s_terms(&self, i: usize) -> &[(usize, Scalar)] {
        &self.s_t[i]
    }

    pub fn sinv_terms(&self, i: usize) -> &[(usize, Scalar)] {
        &self.sinv_t[i]
    }

    pub fn counit_of(&self, i: usize) -> Scalar {
        self.counit.get(0, i)
    }

    pub fn unit_terms(&self) -> Terms {
        col_terms(&self.unit, 0)
    }

    /// Index of the unit if 1_H is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let t = self.unit_terms();
        match t.as_slice() {
            [(i, c)] if c.is_one() => Some(*i),
            _ => None,
        }
    }

    /// Product of two elements given as coordinate columns.
    pub fn product(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.mul.mul(&a.kron(b))
    }

    /// Σ_k c_k · mats[k] for an element with coordinates `terms`.
    pub fn combine(&self, mats: &[Matrix], terms: &[(usize, Scalar)], dim: usize) -> Matrix {
        let mut acc = Matrix::zeros(self.field(), dim, dim);
        for (k, c) in terms {
            acc = acc.add(&mats[*k].scale(c));
        }
        acc
    }

    /// Order of the antipode (smallest k > 0 with S^k = id), searched up to `bound`.
    pub fn antipode_order(&self, bound: u32) -> Option<u32> {
        let id = Matrix::identity(self.field(), self.dim());
        let mut p = self.antipode.clone();
        for k in 1..=bound {
            if p == id {
                return Some(k);
            }
            p = p.mul(&self.antipode);
        }
        None
    }
}
