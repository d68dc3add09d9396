use std::collections::BTreeMap;

use cat_backends::Obj;
use exactla::{FieldSpec, Matrix, Scalar};

use crate::Word;

pub(crate) type Terms = BTreeMap<Word, Scalar>;

pub(crate) fn add_term(t: &mut Terms, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&w) {
        Some(e) => {
            let s = &*e + &c;
            if s.is_zero() {
                t.remove(&w);
            } else {
                *e = s;
            }
        }
        None => {
            t.insert(w, c);
        }
    }
}

/// t += c·u·p·v
pub(crate) fn add_multiple(t: &mut Terms, c: &Scalar, u: &Word, p: &Terms, v: &Word) {
    for (w, s) in p {
        add_term(t, w.wrap(u, v), c * s);
    }
}

/// A noncommutative polynomial in the basis vectors of a generator object U.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    pub gens: Obj,
    pub(crate) terms: Terms,
}

impl NCPoly {
    pub fn zero(gens: &Obj) -> NCPoly {
        NCPoly {
            gens: gens.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(gens: &Obj) -> NCPoly {
        NCPoly::monomial(gens, Word::empty(), Scalar::one(gens.field()))
    }

    pub fn generator(gens: &Obj, i: usize) -> NCPoly {
        NCPoly::monomial(gens, Word::letter(i), Scalar::one(gens.field()))
    }

    pub fn monomial(gens: &Obj, w: Word, c: Scalar) -> NCPoly {
        assert!(w.letters().iter().all(|&l| l < gens.dim), "letter out of range");
        let mut terms = Terms::new();
        add_term(&mut terms, w, c);
        NCPoly {
            gens: gens.clone(),
            terms,
        }
    }

    pub fn from_terms(gens: &Obj, terms: impl IntoIterator<Item = (Word, Scalar)>) -> NCPoly {
        let mut p = NCPoly::zero(gens);
        for (w, c) in terms {
            assert!(w.letters().iter().all(|&l| l < gens.dim), "letter out of range");
            add_term(&mut p.terms, w, c);
        }
        p
    }

    /// The element of U^{⊗n} with coordinates `v` (a column of length dim U^n).
    pub fn from_component(gens: &Obj, n: usize, v: &Matrix) -> NCPoly {
        let g = gens.dim;
        let mut p = NCPoly::zero(gens);
        for i in 0..v.rows() {
            add_term(&mut p.terms, Word::from_index(i, n, g), v.get(i, 0));
        }
        p
    }

    pub(crate) fn from_raw(gens: &Obj, terms: Terms) -> NCPoly {
        NCPoly {
            gens: gens.clone(),
            terms,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.gens.field()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            Some(n) => lens.all(|m| m == n),
            None => true,
        }
    }

    /// Coordinates of the degree-n part in U^{⊗n}.
    pub fn component(&self, n: usize) -> Matrix {
        let g = self.gens.dim;
        let mut m = Matrix::zeros(self.field(), g.pow(n as u32), 1);
        for (w, c) in self.terms.iter().filter(|(w, _)| w.len() == n) {
            m.set(w.index(g), 0, c.clone());
        }
        m
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut t = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut t, w.clone(), c.clone());
        }
        NCPoly::from_raw(&self.gens, t)
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&-Scalar::one(self.field()))
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        let mut t = Terms::new();
        for (w, c) in &self.terms {
            add_term(&mut t, w.clone(), c * s);
        }
        NCPoly::from_raw(&self.gens, t)
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut t = Terms::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                add_term(&mut t, w1.concat(w2), c1 * c2);
            }
        }
        NCPoly::from_raw(&self.gens, t)
    }

    /// u·self·v
    pub fn wrap(&self, u: &Word, v: &Word) -> NCPoly {
        let mut t = Terms::new();
        add_multiple(&mut t, &Scalar::one(self.field()), u, &self.terms, v);
        NCPoly::from_raw(&self.gens, t)
    }

    /// Renders with the given generator names, leading term first.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = self.field();
        let one = Scalar::one(f);
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.to_string().starts_with('-');
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = render_word(w, names);
            if w.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs == one {
                out.push_str(&word);
            } else {
                out.push_str(&format!("{abs}{word}"));
            }
        }
        out
    }
}

/// Letters joined directly when every name is one character, with `*`
/// otherwise; runs become powers.
pub fn render_word(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let sep = if names.iter().all(|n| n.chars().count() == 1) {
        ""
    } else {
        "*"
    };
    let mut parts = Vec::new();
    let l = w.letters();
    let mut i = 0;
    while i < l.len() {
        let mut j = i;
        while j < l.len() && l[j] == l[i] {
            j += 1;
        }
        let name = &names[l[i]];
        if j - i == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join(sep)
}

/// a, b, c, … for at most 26 generators, z0, z1, … otherwise.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("z{i}")).collect()
    }
}
