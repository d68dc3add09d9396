use std::collections::HashMap;

use cat_backends::random::direct_sum;
use cat_backends::{braid, tensor_power, Obj, Report};
use exactla::{Matrix, Scalar};
use ncalg::{NCPoly, Presentation, Word};

use crate::{Bimonoid, UniversalComeasuring, UniversalError};

/// T(U ⊕ U' ⊕ … ⊕ U^{(level)})/J, where U^{(n)} stands for S^n(U) and J
/// holds the relations of every level together with
/// S(x_(1))x_(2) = ε(x) = x_(1)S(x_(2)) for generators below the top level.
#[derive(Clone, Debug)]
pub struct HopfEnvelope {
    pub presentation: Presentation,
    pub level: usize,
    /// Antipode residues on words of level 0 and S applied to relations.
    pub report: Report,
}

/// Braided reversal U^{⊗m} → U^{⊗m}, the combinatorial part of S on words.
struct Reversal<'a> {
    gens: &'a Obj,
    cache: HashMap<usize, Matrix>,
}

impl Reversal<'_> {
    fn get(&mut self, m: usize) -> Matrix {
        if let Some(r) = self.cache.get(&m) {
            return r.clone();
        }
        let g = self.gens;
        let r = if m <= 1 {
            Matrix::identity(g.field(), g.dim.pow(m as u32))
        } else {
            let prev = self.get(m - 1);
            braid(g, &tensor_power(g, m - 1))
                .matrix
                .mul(&Matrix::identity(g.field(), g.dim).kron(&prev))
        };
        self.cache.insert(m, r.clone());
        r
    }

    /// S^k(w) for a base word w, as a polynomial on the level-k letters.
    fn apply(&mut self, env: &Obj, w: &Word, c: &Scalar, k: usize) -> NCPoly {
        let n = self.gens.dim;
        let m = w.len();
        let shift = |v: Word| Word(v.0.into_iter().map(|l| l + k * n).collect());
        if k.is_multiple_of(2) {
            return NCPoly::monomial(env, shift(w.clone()), c.clone());
        }
        let r = self.get(m);
        let col = w.index(n);
        let terms = (0..r.rows())
            .filter(|&row| !r.is_entry_zero(row, col))
            .map(|row| (shift(Word::from_index(row, m, n)), c * &r.get(row, col)));
        NCPoly::from_terms(env, terms)
    }

    fn apply_poly(&mut self, env: &Obj, p: &NCPoly, k: usize) -> NCPoly {
        p.terms()
            .fold(NCPoly::zero(env), |acc, (w, c)| acc.add(&self.apply(env, w, c, k)))
    }
}

fn primes(k: usize) -> String {
    "'".repeat(k)
}

/// Presentation of the free Hopf monoid on the bimonoid `bi`, truncated at
/// `level` iterated antipodes. The report checks the antipode axioms on words
/// of level 0 up to length d/2 and that S maps each relation into J.
pub fn hopf_envelope_presentation(
    u: &UniversalComeasuring,
    bi: &Bimonoid,
    level: usize,
    d: usize,
) -> Result<HopfEnvelope, UniversalError> {
    if level < 1 {
        return Err(UniversalError::LevelTooLow(level));
    }
    let g = u.gens();
    let cat = &g.cat;
    if !cat.symmetric {
        return Err(UniversalError::NotSymmetric(cat.name()));
    }
    let n = g.dim;
    let f = g.field();
    let env = (0..level).fold(g.clone(), |acc, _| direct_sum(&acc, g));
    let names: Vec<String> = (0..=level)
        .flat_map(|k| u.presentation.names.iter().map(move |s| format!("{s}{}", primes(k))))
        .collect();
    let mut rev = Reversal {
        gens: g,
        cache: HashMap::new(),
    };
    let base = &u.presentation.relations;
    let mut rels = Vec::new();
    for k in 0..=level {
        for r in base {
            rels.push(rev.apply_poly(&env, r, k));
        }
    }
    let c = braid(g, g).matrix;
    let one = NCPoly::one(&env);
    for k in 0..level {
        let dk = if k % 2 == 0 {
            bi.comul.matrix.clone()
        } else {
            c.mul(&bi.comul.matrix)
        };
        for m in 0..n {
            let eps = one.scale(&bi.counit.matrix.get(0, m));
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for i in 0..n {
                for j in 0..n {
                    let x = dk.get(i * n + j, m);
                    let (lo, hi) = (k * n, (k + 1) * n);
                    left.push((Word(vec![hi + i, lo + j]), x.clone()));
                    right.push((Word(vec![lo + i, hi + j]), x));
                }
            }
            rels.push(NCPoly::from_terms(&env, left).sub(&eps));
            rels.push(NCPoly::from_terms(&env, right).sub(&eps));
        }
    }
    let presentation = Presentation::new(&env, rels)?.with_names(names)?;
    let embed = |w: &Word, c: &Scalar| NCPoly::monomial(&env, w.clone(), c.clone());
    let mut report = Report::new();
    for len in 1..=d / 2 {
        for w in Word::all(n, len) {
            let dw = bi.delta(&NCPoly::monomial(g, w.clone(), Scalar::one(f)));
            let eps = one.scale(&bi.epsilon(&NCPoly::monomial(g, w.clone(), Scalar::one(f))));
            let (mut left, mut right) = (eps.neg(), eps.neg());
            for ((x, y), cxy) in &dw {
                let sx = rev.apply(&env, x, cxy, 1);
                left = left.add(&sx.mul(&embed(y, &Scalar::one(f))));
                let sy = rev.apply(&env, y, cxy, 1);
                right = right.add(&embed(x, &Scalar::one(f)).mul(&sy));
            }
            if !presentation.normal_form(&left, d)?.is_zero() {
                report.push("S*id = ηε", vec![len, w.index(n)]);
            }
            if !presentation.normal_form(&right, d)?.is_zero() {
                report.push("id*S = ηε", vec![len, w.index(n)]);
            }
        }
    }
    for k in 0..level {
        for (i, r) in base.iter().enumerate() {
            if r.degree().unwrap_or(0) > d {
                continue;
            }
            let sr = rev.apply_poly(&env, r, k + 1);
            if !presentation.normal_form(&sr, d)?.is_zero() {
                report.push("S(r) ∉ J", vec![k, i]);
            }
        }
    }
    Ok(HopfEnvelope {
        presentation,
        level,
        report,
    })
}
