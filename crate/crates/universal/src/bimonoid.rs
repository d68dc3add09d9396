use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use cat_backends::{braid, tensor, tensor_power, unit_obj, Mor, Obj, Report};
use exactla::{Matrix, Scalar};
use ncalg::{render_word, NCPoly, Presentation, Word};
use supports::coefficient_span;

use crate::{UniversalComeasuring, UniversalError};

/// An element of T(U)⊗T(U), keyed by pairs of words.
pub type Tensor2 = BTreeMap<(Word, Word), Scalar>;

/// Δ and ε on the generators of the universal comeasuring monoid of A → A,
/// with the reports of the checks run by [`bimonoid_structure`].
#[derive(Clone, Debug)]
pub struct Bimonoid {
    pub gens: Obj,
    /// U → U⊗U.
    pub comul: Mor,
    /// U → 𝟙.
    pub counit: Mor,
    pub degree: usize,
    /// Coassociativity and counitality on generators, and Δ, ε being morphisms.
    pub axioms: Report,
    /// Δ(r) ≡ 0 in T⊗T modulo the ideal, and ε(r) = 0, for every relation r.
    pub certificate: Report,
}

fn add(t: &mut Tensor2, key: (Word, Word), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// (x⊗y)(x'⊗y') = x·c(y⊗x')·y' with the braiding of the backend.
struct Braided<'a> {
    gens: &'a Obj,
    cache: HashMap<(usize, usize), Matrix>,
}

impl Braided<'_> {
    fn braid(&mut self, p: usize, q: usize) -> &Matrix {
        let g = self.gens;
        self.cache
            .entry((p, q))
            .or_insert_with(|| braid(&tensor_power(g, p), &tensor_power(g, q)).matrix)
    }

    fn mul(&mut self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let n = self.gens.dim;
        let mut out = Tensor2::new();
        for ((a, b), c1) in x {
            for ((a2, b2), c2) in y {
                let (p, q) = (b.len(), a2.len());
                let c = self.braid(p, q);
                let col = b.index(n) * n.pow(q as u32) + a2.index(n);
                let np = n.pow(p as u32);
                let c12 = c1 * c2;
                for row in 0..c.rows() {
                    if c.is_entry_zero(row, col) {
                        continue;
                    }
                    let a3 = Word::from_index(row / np, q, n);
                    let b3 = Word::from_index(row % np, p, n);
                    add(
                        &mut out,
                        (a.concat(&a3), b3.concat(b2)),
                        &c12 * &c.get(row, col),
                    );
                }
            }
        }
        out
    }
}

impl Bimonoid {
    /// Δ on a generator as an element of U⊗U.
    pub fn delta_generator(&self, k: usize) -> Tensor2 {
        let n = self.gens.dim;
        let mut t = Tensor2::new();
        for row in 0..n * n {
            let c = self.comul.matrix.get(row, k);
            add(&mut t, (Word::letter(row / n), Word::letter(row % n)), c);
        }
        t
    }

    /// Δ extended multiplicatively to T(U), with the braided product on T⊗T.
    pub fn delta(&self, p: &NCPoly) -> Tensor2 {
        let f = self.gens.field();
        let mut br = Braided {
            gens: &self.gens,
            cache: HashMap::new(),
        };
        let gens: Vec<Tensor2> = (0..self.gens.dim).map(|k| self.delta_generator(k)).collect();
        let mut out = Tensor2::new();
        for (w, c) in p.terms() {
            let mut acc = Tensor2::new();
            acc.insert((Word::empty(), Word::empty()), Scalar::one(f));
            for &l in w.letters() {
                acc = br.mul(&acc, &gens[l]);
            }
            for (k, v) in acc {
                add(&mut out, k, &v * c);
            }
        }
        out
    }

    pub fn epsilon(&self, p: &NCPoly) -> Scalar {
        let f = self.gens.field();
        let mut out = Scalar::zero(f);
        for (w, c) in p.terms() {
            let mut v = c.clone();
            for &l in w.letters() {
                v = &v * &self.counit.matrix.get(0, l);
            }
            out = &out + &v;
        }
        out
    }
}

/// Both tensor factors reduced to normal form modulo the presentation at bound d.
pub fn normalize_tensor2(
    pres: &Presentation,
    t: &Tensor2,
    d: usize,
) -> Result<Tensor2, UniversalError> {
    let f = pres.gens.field();
    let gb = pres.gb(d);
    let mut cache: HashMap<Word, NCPoly> = HashMap::new();
    let mut nf = |w: &Word| -> Result<NCPoly, UniversalError> {
        if let Some(p) = cache.get(w) {
            return Ok(p.clone());
        }
        let p = gb.normal_form(&NCPoly::monomial(&pres.gens, w.clone(), Scalar::one(f)))?;
        cache.insert(w.clone(), p.clone());
        Ok(p)
    };
    let mut out = Tensor2::new();
    for ((x, y), c) in t {
        let (nx, ny) = (nf(x)?, nf(y)?);
        for (wx, cx) in nx.terms() {
            for (wy, cy) in ny.terms() {
                add(&mut out, (wx.clone(), wy.clone()), &(c * cx) * cy);
            }
        }
    }
    Ok(out)
}

/// Terms in increasing word order, joined by ⊗, e.g. "1⊗b + b⊗d".
pub fn render_tensor2(t: &Tensor2, names: &[String]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, ((x, y), c)) in t.iter().enumerate() {
        let neg = c.to_string().starts_with('-');
        let abs = if neg { -c.clone() } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format!("{abs}·"));
        }
        out.push_str(&format!("{}⊗{}", render_word(x, names), render_word(y, names)));
    }
    out
}

/// The bimonoid structure on the universal comeasuring monoid of A → A:
/// Δ is determined by (id_A⊗Δ)ρ = (ρ⊗id_U)ρ and ε by (id_A⊗ε)ρ = id_A.
/// Needs a symmetric backend, and V closed under composition and
/// containing id_A.
pub fn bimonoid_structure(u: &UniversalComeasuring, d: usize) -> Result<Bimonoid, UniversalError> {
    let cat = &u.a.carrier.cat;
    if !cat.symmetric {
        return Err(UniversalError::NotSymmetric(cat.name()));
    }
    if u.a != u.b {
        return Err(UniversalError::NotEndomorphic);
    }
    let a = &u.a.carrier;
    let g = u.gens();
    let f = a.field();
    let (da, n) = (a.dim, g.dim);
    let r = u.coefficient_matrix().transpose();
    let t = u
        .rho
        .matrix
        .kron(&Matrix::identity(f, n))
        .mul(&u.rho.matrix);
    let t = Mor::new(a, &tensor(a, &tensor(g, g)), t)?;
    let tcat = coefficient_span(&t, a, &tensor(g, g));
    let x = r
        .solve(&tcat.transpose())
        .map_err(|_| UniversalError::NotSubmonoid("not closed under composition"))?;
    let one = unit_obj(cat);
    let id = Mor::new(a, &tensor(a, &one), Matrix::identity(f, da))?;
    let e = r
        .solve(&coefficient_span(&id, a, &one).transpose())
        .map_err(|_| UniversalError::NotSubmonoid("does not contain the identity"))?;
    let comul = Mor::new(g, &tensor(g, g), x.transpose())?;
    let counit = Mor::new(g, &one, e.transpose())?;
    let mut axioms = Report::new();
    if !comul.is_valid() {
        axioms.push("Δ is a morphism", vec![]);
    }
    if !counit.is_valid() {
        axioms.push("ε is a morphism", vec![]);
    }
    let idu = Matrix::identity(f, n);
    axioms.check_eq(
        "coassociativity",
        &comul.matrix.kron(&idu).mul(&comul.matrix),
        &idu.kron(&comul.matrix).mul(&comul.matrix),
    );
    axioms.check_eq("left counit", &counit.matrix.kron(&idu).mul(&comul.matrix), &idu);
    axioms.check_eq("right counit", &idu.kron(&counit.matrix).mul(&comul.matrix), &idu);
    let bi = Bimonoid {
        gens: g.clone(),
        comul,
        counit,
        degree: d,
        axioms,
        certificate: Report::new(),
    };
    let mut certificate = Report::new();
    for (i, rel) in u.presentation.relations.iter().enumerate() {
        if rel.degree().unwrap_or(0) > d {
            continue;
        }
        if !normalize_tensor2(&u.presentation, &bi.delta(rel), d)?.is_empty() {
            certificate.push("Δ(r) ∉ I⊗T + T⊗I", vec![i]);
        }
        if !bi.epsilon(rel).is_zero() {
            certificate.push("ε(r) ≠ 0", vec![i]);
        }
    }
    Ok(Bimonoid { certificate, ..bi })
}
