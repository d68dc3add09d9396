use std::sync::Arc;

use cat_backends::{unit_obj, Cat, CatError, HopfData, Kind, Mor, Obj};
use exactla::{FieldSpec, Matrix, Scalar};

use crate::structures::{BimonoidStr, ComonoidStr, HopfStr, MonoidStr};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Cat(#[from] CatError),
}

/// Multiplication table of a finite group: labels, product indices and inverses.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl FiniteGroup {
    /// "C<n>", products like "C2xC2", or "S3".
    pub fn parse(name: &str) -> Result<FiniteGroup, CatalogError> {
        if name == "S3" {
            return Ok(symmetric3());
        }
        let mut orders = Vec::new();
        for part in name.split('x') {
            let n: u32 = part
                .strip_prefix('C')
                .and_then(|s| s.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| CatalogError::BadParams(format!("unknown group {name}")))?;
            orders.push(n);
        }
        let g = cat_backends::AbelianGroup::product(&orders);
        let n = g.order();
        let labels = (0..n)
            .map(|i| {
                let d = g.digits(i);
                if d.iter().all(|&x| x == 0) {
                    "e".to_string()
                } else {
                    d.iter()
                        .enumerate()
                        .filter(|(_, &x)| x > 0)
                        .map(|(k, &x)| {
                            let gen = if orders.len() == 1 {
                                "g".to_string()
                            } else {
                                format!("g{}", k + 1)
                            };
                            if x == 1 {
                                gen
                            } else {
                                format!("{gen}^{x}")
                            }
                        })
                        .collect::<Vec<_>>()
                        .join("")
                }
            })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| g.mul(a, b)).collect())
            .collect();
        let inv = (0..n).map(|a| g.inv(a)).collect();
        Ok(FiniteGroup {
            name: g.name(),
            labels,
            table,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }
}

fn symmetric3() -> FiniteGroup {
    let mut perms: Vec<[usize; 3]> = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    perms.push([a, b, c]);
                }
            }
        }
    }
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    // (p∘q)(i) = p(q(i))
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| idx([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect();
    let e = idx([0, 1, 2]);
    let inv = (0..6)
        .map(|a| (0..6).find(|&b| table[a][b] == e).unwrap())
        .collect();
    let labels = perms
        .iter()
        .map(|p| format!("[{}{}{}]", p[0], p[1], p[2]))
        .collect();
    FiniteGroup {
        name: "S3".into(),
        labels,
        table,
        inv,
    }
}

fn one(f: FieldSpec) -> Scalar {
    Scalar::one(f)
}

/// n×n² matrix from a sparse product rule.
fn mul_matrix(
    f: FieldSpec,
    n: usize,
    rule: impl Fn(usize, usize) -> Vec<(usize, Scalar)>,
) -> Matrix {
    let mut m = Matrix::zeros(f, n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in rule(i, j) {
                m.add_at(k, i * n + j, &c);
            }
        }
    }
    m
}

fn comul_matrix(
    f: FieldSpec,
    n: usize,
    rule: impl Fn(usize) -> Vec<(usize, usize, Scalar)>,
) -> Matrix {
    let mut m = Matrix::zeros(f, n * n, n);
    for i in 0..n {
        for (a, b, c) in rule(i) {
            m.add_at(a * n + b, i, &c);
        }
    }
    m
}

fn unit_col(f: FieldSpec, n: usize, i: usize) -> Matrix {
    Matrix::unit_column(f, n, i)
}

pub fn group_algebra(f: FieldSpec, group: &str) -> Result<Arc<HopfData>, CatalogError> {
    let g = FiniteGroup::parse(group)?;
    let n = g.order();
    let e = (0..n).find(|&i| g.table[i][i] == i).unwrap();
    let mul = mul_matrix(f, n, |i, j| vec![(g.table[i][j], one(f))]);
    let comul = comul_matrix(f, n, |i| vec![(i, i, one(f))]);
    let counit = Matrix::from_fn(f, 1, n, |_, _| one(f));
    let s = Matrix::permutation(f, &g.inv);
    Ok(HopfData::new(
        &format!("k{}", g.name),
        g.labels.clone(),
        mul,
        unit_col(f, n, e),
        comul,
        counit,
        s,
    )?)
}

pub fn function_algebra(f: FieldSpec, group: &str) -> Result<Arc<HopfData>, CatalogError> {
    let g = FiniteGroup::parse(group)?;
    let n = g.order();
    let e = (0..n).find(|&i| g.table[i][i] == i).unwrap();
    let mul = mul_matrix(f, n, |i, j| if i == j { vec![(i, one(f))] } else { vec![] });
    let unit = Matrix::from_fn(f, n, 1, |_, _| one(f));
    let comul = comul_matrix(f, n, |k| {
        let mut t = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if g.table[a][b] == k {
                    t.push((a, b, one(f)));
                }
            }
        }
        t
    });
    let counit = Matrix::from_fn(
        f,
        1,
        n,
        |_, j| if j == e { one(f) } else { Scalar::zero(f) },
    );
    let s = Matrix::permutation(f, &g.inv);
    let labels = g.labels.iter().map(|l| format!("d_{l}")).collect();
    Ok(HopfData::new(
        &format!("k^{}", g.name),
        labels,
        mul,
        unit,
        comul,
        counit,
        s,
    )?)
}

/// Validates q as a primitive n-th root of unity in the field.
pub fn check_root_of_unity(f: FieldSpec, n: usize, q: &Scalar) -> Result<(), CatalogError> {
    if n < 2 {
        return Err(CatalogError::BadParams("Taft algebras need n ≥ 2".into()));
    }
    if f == FieldSpec::Rational && n > 2 {
        return Err(CatalogError::BadParams(
            "over the rationals only n = 2 is admitted".into(),
        ));
    }
    if !q.pow(n as i64).is_one() || (1..n).any(|k| q.pow(k as i64).is_one()) {
        return Err(CatalogError::BadParams(format!(
            "q = {q} is not a primitive {n}-th root of unity"
        )));
    }
    Ok(())
}

/// Taft algebra: g^n = 1, x^n = 0, xg = q·gx, Δg = g⊗g, Δx = x⊗1 + g⊗x.
/// Basis g^a x^b at index a + n·b.
pub fn taft(f: FieldSpec, n: usize, q: &Scalar) -> Result<Arc<HopfData>, CatalogError> {
    check_root_of_unity(f, n, q)?;
    let dim = n * n;
    let idx = |a: usize, b: usize| a % n + n * b;
    let mul = mul_matrix(f, dim, |i, j| {
        let (a, b) = (i % n, i / n);
        let (c, d) = (j % n, j / n);
        if b + d >= n {
            vec![]
        } else {
            vec![(idx(a + c, b + d), q.pow((b * c) as i64))]
        }
    });
    let prod = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(f); dim];
        for (i, s) in x.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (j, t) in y.iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                for k in 0..dim {
                    if !mul.is_entry_zero(k, i * dim + j) {
                        out[k] = &out[k] + &(&(s * t) * &mul.get(k, i * dim + j));
                    }
                }
            }
        }
        out
    };
    let prod2 = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(f); dim * dim];
        for (i, s) in x.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (j, t) in y.iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                let (i1, i2, j1, j2) = (i / dim, i % dim, j / dim, j % dim);
                for k1 in 0..dim {
                    if mul.is_entry_zero(k1, i1 * dim + j1) {
                        continue;
                    }
                    for k2 in 0..dim {
                        if mul.is_entry_zero(k2, i2 * dim + j2) {
                            continue;
                        }
                        let c =
                            &(&(s * t) * &mul.get(k1, i1 * dim + j1)) * &mul.get(k2, i2 * dim + j2);
                        out[k1 * dim + k2] = &out[k1 * dim + k2] + &c;
                    }
                }
            }
        }
        out
    };
    let e = |k: usize| -> Vec<Scalar> {
        (0..dim)
            .map(|i| if i == k { one(f) } else { Scalar::zero(f) })
            .collect()
    };
    let e2 = |a: usize, b: usize| -> Vec<Scalar> {
        (0..dim * dim)
            .map(|i| {
                if i == a * dim + b {
                    one(f)
                } else {
                    Scalar::zero(f)
                }
            })
            .collect()
    };
    let (g, x, u) = (idx(1, 0), idx(0, 1), idx(0, 0));
    let dg = e2(g, g);
    let dx: Vec<Scalar> = e2(x, u).iter().zip(e2(g, x)).map(|(a, b)| a + &b).collect();
    let ginv = idx(n - 1, 0);
    let sg = e(ginv);
    let mut sx = prod(&e(ginv), &e(x));
    for s in sx.iter_mut() {
        *s = -s.clone();
    }
    let mut comul = Matrix::zeros(f, dim * dim, dim);
    let mut anti = Matrix::zeros(f, dim, dim);
    for b in 0..n {
        for a in 0..n {
            let mut d = e2(u, u);
            let mut s = e(u);
            for _ in 0..a {
                d = prod2(&d, &dg);
                s = prod(&sg, &s);
            }
            for _ in 0..b {
                d = prod2(&d, &dx);
                s = prod(&sx, &s);
            }
            for (k, c) in d.into_iter().enumerate() {
                if !c.is_zero() {
                    comul.set(k, idx(a, b), c);
                }
            }
            for (k, c) in s.into_iter().enumerate() {
                if !c.is_zero() {
                    anti.set(k, idx(a, b), c);
                }
            }
        }
    }
    let counit = Matrix::from_fn(
        f,
        1,
        dim,
        |_, j| if j / n == 0 { one(f) } else { Scalar::zero(f) },
    );
    let labels = (0..dim)
        .map(|i| {
            let (a, b) = (i % n, i / n);
            let gp = match a {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g^{a}"),
            };
            let xp = match b {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{b}"),
            };
            if a == 0 && b == 0 {
                "1".into()
            } else {
                format!("{gp}{xp}")
            }
        })
        .collect();
    let name = if n == 2 {
        "sweedler".to_string()
    } else {
        format!("taft({n},{q})")
    };
    Ok(HopfData::new(
        &name,
        labels,
        mul,
        unit_col(f, dim, u),
        comul,
        counit,
        anti,
    )?)
}

/// Sweedler's 4-dimensional algebra, basis [1, g, x, gx].
pub fn sweedler(f: FieldSpec) -> Arc<HopfData> {
    taft(f, 2, &-Scalar::one(f)).expect("Sweedler algebra")
}

/// R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) on kC₂, as a coefficient table.
pub fn kc2_triangular_r(f: FieldSpec) -> Result<Matrix, CatalogError> {
    let half = Scalar::from_ratio(f, 1, 2)
        .map_err(|_| CatalogError::BadParams("needs characteristic ≠ 2".into()))?;
    if f.characteristic() == 2 {
        return Err(CatalogError::BadParams("needs characteristic ≠ 2".into()));
    }
    Ok(Matrix::from_fn(f, 2, 2, |i, j| {
        if i == 1 && j == 1 {
            -half.clone()
        } else {
            half.clone()
        }
    }))
}

/// Trivial r(h, t) = ε(h)ε(t).
pub fn trivial_r_form(h: &HopfData) -> Matrix {
    let n = h.dim();
    Matrix::from_fn(h.field(), n, n, |i, j| &h.counit_of(i) * &h.counit_of(j))
}

/// The Hopf algebra itself as a Hopf structure in Vect.
pub fn hopf_str(h: &HopfData, vect: &Cat) -> Result<HopfStr, CatalogError> {
    let x = Obj::vect(vect, h.dim());
    let monoid = MonoidStr::new(&x, h.mul.clone(), h.unit.clone())?;
    let comonoid = ComonoidStr::new(&x, h.comul.clone(), h.counit.clone())?;
    Ok(HopfStr {
        bimonoid: BimonoidStr { monoid, comonoid },
        antipode: Mor::new(&x, &x, h.antipode.clone())?,
        antipode_inv: Mor::new(&x, &x, h.antipode_inv.clone())?,
    })
}

fn graded_or_plain(cat: &Cat, degrees: Vec<usize>) -> Result<Obj, CatalogError> {
    match &cat.kind {
        Kind::Vect => Ok(Obj::vect(cat, degrees.len())),
        Kind::Graded { group, .. } => Ok(Obj::graded(
            cat,
            degrees.into_iter().map(|d| d % group.order()).collect(),
        )?),
        _ => Err(CatalogError::BadParams(format!(
            "algebra not available in {}",
            cat.name()
        ))),
    }
}

/// k[ε]/(ε²), basis [1, ε]; in a graded backend ε has degree 1.
pub fn dual_numbers(cat: &Cat) -> Result<MonoidStr, CatalogError> {
    truncated_poly(cat, 2)
}

/// k[x]/(xⁿ), basis [1, x, …, x^{n−1}], x^k in degree k.
pub fn truncated_poly(cat: &Cat, n: usize) -> Result<MonoidStr, CatalogError> {
    if n == 0 {
        return Err(CatalogError::BadParams("n ≥ 1".into()));
    }
    let f = cat.field;
    let x = graded_or_plain(cat, (0..n).collect())?;
    if let Kind::Graded { group, .. } = &cat.kind {
        if group.orders.len() != 1 {
            return Err(CatalogError::BadParams(
                "grading by a cyclic group expected".into(),
            ));
        }
    }
    let mul = mul_matrix(f, n, |i, j| {
        if i + j < n {
            vec![(i + j, one(f))]
        } else {
            vec![]
        }
    });
    Ok(MonoidStr::new(&x, mul, unit_col(f, n, 0))?)
}

/// k × k. In Vect the basis is the pair of idempotents; in a graded backend it is
/// [1, t] with t² = 1 and t of degree 1.
pub fn product_algebra(cat: &Cat) -> Result<MonoidStr, CatalogError> {
    let f = cat.field;
    match &cat.kind {
        Kind::Vect => {
            let x = Obj::vect(cat, 2);
            let mul = mul_matrix(f, 2, |i, j| if i == j { vec![(i, one(f))] } else { vec![] });
            Ok(MonoidStr::new(&x, mul, Matrix::from_i64(f, &[&[1], &[1]]))?)
        }
        Kind::Graded { group, .. } if group.order() == 2 => {
            let x = Obj::graded(cat, vec![0, 1])?;
            let mul = mul_matrix(f, 2, |i, j| vec![((i + j) % 2, one(f))]);
            Ok(MonoidStr::new(&x, mul, unit_col(f, 2, 0))?)
        }
        _ => Err(CatalogError::BadParams(format!(
            "k×k not available in {}",
            cat.name()
        ))),
    }
}

/// Mₙ(k), basis e_ij at index i·n + j.
pub fn matrix_algebra(cat: &Cat, n: usize) -> Result<MonoidStr, CatalogError> {
    let f = cat.field;
    let x = graded_or_plain(cat, vec![0; n * n])?;
    let mul = mul_matrix(f, n * n, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            vec![(i * n + l, one(f))]
        } else {
            vec![]
        }
    });
    let unit = Matrix::from_fn(f, n * n, 1, |a, _| {
        if a / n == a % n {
            one(f)
        } else {
            Scalar::zero(f)
        }
    });
    Ok(MonoidStr::new(&x, mul, unit)?)
}

/// Matrix coalgebra: Δe_ij = Σ_k e_ik ⊗ e_kj, ε(e_ij) = δ_ij.
pub fn matrix_coalgebra(cat: &Cat, n: usize) -> Result<ComonoidStr, CatalogError> {
    let f = cat.field;
    let x = graded_or_plain(cat, vec![0; n * n])?;
    let comul = comul_matrix(f, n * n, |a| {
        let (i, j) = (a / n, a % n);
        (0..n).map(|k| (i * n + k, k * n + j, one(f))).collect()
    });
    let counit = Matrix::from_fn(f, 1, n * n, |_, a| {
        if a / n == a % n {
            one(f)
        } else {
            Scalar::zero(f)
        }
    });
    Ok(ComonoidStr::new(&x, comul, counit)?)
}

/// kG as a coalgebra of group-likes.
pub fn group_coalgebra(cat: &Cat, group: &str) -> Result<ComonoidStr, CatalogError> {
    let g = FiniteGroup::parse(group)?;
    let n = g.order();
    let f = cat.field;
    let x = graded_or_plain(cat, vec![0; n])?;
    let comul = comul_matrix(f, n, |i| vec![(i, i, one(f))]);
    let counit = Matrix::from_fn(f, 1, n, |_, _| one(f));
    Ok(ComonoidStr::new(&x, comul, counit)?)
}

/// The trivial comonoid 𝟙.
pub fn trivial_comonoid(cat: &Cat) -> ComonoidStr {
    let one = unit_obj(cat);
    let f = cat.field;
    ComonoidStr::new(&one, Matrix::identity(f, 1), Matrix::identity(f, 1)).expect("unit comonoid")
}

/// The trivial monoid 𝟙.
pub fn trivial_monoid(cat: &Cat) -> MonoidStr {
    let one = unit_obj(cat);
    let f = cat.field;
    MonoidStr::new(&one, Matrix::identity(f, 1), Matrix::identity(f, 1)).expect("unit monoid")
}

/// k[y]/(y²) over Sweedler's algebra: g·y = −y, x·y = λ, δ(y) = g⊗y
/// (right version: y·g = −y, y·x = λ, ρ(y) = y⊗g). Basis [1, y].
pub fn yd_module_algebra(cat: &Cat, lambda: &Scalar) -> Result<MonoidStr, CatalogError> {
    let f = cat.field;
    let h = match &cat.kind {
        Kind::LeftYD(h) | Kind::RightYD(h) if h.name == "sweedler" => h.clone(),
        _ => {
            return Err(CatalogError::BadParams(
                "needs a YD backend over Sweedler's algebra".into(),
            ))
        }
    };
    let z = Scalar::zero(f);
    let o = one(f);
    let m = |a: [[&Scalar; 2]; 2]| Matrix::from_fn(f, 2, 2, |i, j| a[i][j].clone());
    let neg = -o.clone();
    let act_g = m([[&o, &z], [&z, &neg]]);
    let act_x = m([[&z, lambda], [&z, &z]]);
    let right = matches!(cat.kind, Kind::RightYD(_));
    // basis [1, g, x, gx]; left gx acts as g∘x, right as x∘g
    let act_gx = if right {
        act_x.mul(&act_g)
    } else {
        act_g.mul(&act_x)
    };
    let act = vec![Matrix::identity(f, 2), act_g, act_x, act_gx];
    let c1 = m([[&o, &z], [&z, &z]]);
    let cg = m([[&z, &z], [&z, &o]]);
    let coact = vec![c1, cg, Matrix::zeros(f, 2, 2), Matrix::zeros(f, 2, 2)];
    let _ = h;
    let x = Obj::yd(cat, act, coact)?;
    let mul = mul_matrix(f, 2, |i, j| {
        if i + j < 2 {
            vec![(i + j, o.clone())]
        } else {
            vec![]
        }
    });
    Ok(MonoidStr::new(&x, mul, unit_col(f, 2, 0))?)
}

/// Catalog lookup result.
#[derive(Clone, Debug)]
pub enum CatalogItem {
    Hopf(Arc<HopfData>),
    Monoid(MonoidStr),
    Comonoid(ComonoidStr),
    RMatrix(Matrix),
}

/// Optional parameters of catalog entries.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub group: Option<String>,
    pub n: Option<usize>,
    pub q: Option<Scalar>,
    pub lambda: Option<Scalar>,
}

/// Names: group_algebra, function_algebra, sweedler, taft, kc2_r_matrix (Hopf data in Vect);
/// dual_numbers, truncated_poly, matrix_algebra, product_algebra, matrix_coalgebra,
/// group_coalgebra, yd_module_algebra (structures in `cat`).
pub fn catalog(name: &str, cat: &Cat, p: &Params) -> Result<CatalogItem, CatalogError> {
    let f = cat.field;
    let group = || {
        p.group
            .clone()
            .ok_or_else(|| CatalogError::BadParams("group required".into()))
    };
    let n = || {
        p.n.ok_or_else(|| CatalogError::BadParams("n required".into()))
    };
    Ok(match name {
        "group_algebra" => CatalogItem::Hopf(group_algebra(f, &group()?)?),
        "function_algebra" => CatalogItem::Hopf(function_algebra(f, &group()?)?),
        "sweedler" => CatalogItem::Hopf(sweedler(f)),
        "taft" => {
            let q =
                p.q.clone()
                    .ok_or_else(|| CatalogError::BadParams("q required".into()))?;
            CatalogItem::Hopf(taft(f, n()?, &q)?)
        }
        "kc2_r_matrix" => CatalogItem::RMatrix(kc2_triangular_r(f)?),
        "dual_numbers" => CatalogItem::Monoid(dual_numbers(cat)?),
        "truncated_poly" => CatalogItem::Monoid(truncated_poly(cat, n()?)?),
        "matrix_algebra" => CatalogItem::Monoid(matrix_algebra(cat, n()?)?),
        "product_algebra" => CatalogItem::Monoid(product_algebra(cat)?),
        "matrix_coalgebra" => CatalogItem::Comonoid(matrix_coalgebra(cat, n()?)?),
        "group_coalgebra" => CatalogItem::Comonoid(group_coalgebra(cat, &group()?)?),
        "yd_module_algebra" => {
            let l = p.lambda.clone().unwrap_or_else(|| Scalar::one(f));
            CatalogItem::Monoid(yd_module_algebra(cat, &l)?)
        }
        other => return Err(CatalogError::UnknownName(other.to_string())),
    })
}
