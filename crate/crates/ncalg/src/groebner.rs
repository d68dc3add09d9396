use std::collections::{BTreeMap, BTreeSet};

use cat_backends::Obj;
use exactla::Scalar;
use rand::Rng;

use crate::poly::{add_multiple, Terms};
use crate::{NCPoly, NcError, Word};

/// A combination Σ c·u·r_i·v of relation multiples, keyed by (u, i, v).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    terms: BTreeMap<(Word, usize, Word), Scalar>,
}

impl Certificate {
    pub fn relation(i: usize, c: Scalar) -> Certificate {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((Word::empty(), i, Word::empty()), c);
        }
        Certificate { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, usize, &Word, &Scalar)> {
        self.terms.iter().map(|((u, i, v), c)| (u, *i, v, c))
    }

    /// self += c·u·other·v
    pub(crate) fn add_scaled(&mut self, c: &Scalar, u: &Word, other: &Certificate, v: &Word) {
        for ((a, i, b), s) in &other.terms {
            let key = (u.concat(a), *i, b.concat(v));
            let add = c * s;
            let entry = self.terms.entry(key.clone());
            match entry {
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get() + &add;
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !add.is_zero() {
                        e.insert(add);
                    }
                }
            }
        }
    }

    pub(crate) fn scaled(&self, c: &Scalar) -> Certificate {
        let mut out = Certificate::default();
        out.add_scaled(c, &Word::empty(), self, &Word::empty());
        out
    }

    /// Σ c·u·r_i·v as a polynomial.
    pub fn expand(&self, gens: &Obj, relations: &[NCPoly]) -> Result<NCPoly, NcError> {
        let mut t = Terms::new();
        for ((u, i, v), c) in &self.terms {
            let r = relations.get(*i).ok_or(NcError::RelationIndex(*i))?;
            add_multiple(&mut t, c, u, &r.terms, v);
        }
        Ok(NCPoly::from_raw(gens, t))
    }

    /// Largest |u| + deg r_i + |v| among the terms.
    pub fn degree(&self, relations: &[NCPoly]) -> usize {
        self.terms
            .keys()
            .map(|(u, i, v)| u.len() + relations[*i].degree().unwrap_or(0) + v.len())
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
struct Elem {
    id: usize,
    lead: Word,
    tail: Terms,
    cert: Certificate,
}

impl Elem {
    fn poly(&self, f: exactla::FieldSpec) -> Terms {
        let mut t = self.tail.clone();
        t.insert(self.lead.clone(), Scalar::one(f));
        t
    }
}

/// A reduced Gröbner basis for the deglex order in which every overlap of
/// total degree at most `degree` resolves.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    gens: Obj,
    degree: usize,
    elems: Vec<Elem>,
}

fn reduce_against(elems: &[Elem], skip: Option<usize>, x: Terms) -> (Terms, Certificate) {
    let mut rem = x;
    let mut out = Terms::new();
    let mut cert = Certificate::default();
    while let Some((w, c)) = rem.pop_last() {
        let hit = elems
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .find_map(|(_, g)| w.find(&g.lead).map(|pos| (g, pos)));
        match hit {
            Some((g, pos)) => {
                let u = w.slice(0, pos);
                let v = w.slice(pos + g.lead.len(), w.len());
                add_multiple(&mut rem, &-c.clone(), &u, &g.tail, &v);
                cert.add_scaled(&c, &u, &g.cert, &v);
            }
            None => {
                out.insert(w, c);
            }
        }
    }
    (out, cert)
}

/// Splits off a monic leading term; `None` for the zero polynomial.
fn make_elem(id: usize, mut t: Terms, cert: Certificate) -> Option<Elem> {
    let (lead, c) = t.pop_last()?;
    let inv = c.inv().expect("nonzero leading coefficient");
    let tail = t.into_iter().map(|(w, s)| (w, &s * &inv)).collect();
    Some(Elem {
        id,
        lead,
        tail,
        cert: cert.scaled(&inv),
    })
}

impl GroebnerBasis {
    /// Truncated completion of the relations of degree at most `d`.
    pub fn compute(gens: &Obj, relations: &[NCPoly], d: usize) -> GroebnerBasis {
        let f = gens.field();
        let mut next_id = 0;
        let mut elems: Vec<Elem> = Vec::new();
        for (i, r) in relations.iter().enumerate() {
            if r.degree().is_some_and(|n| n <= d) {
                let (t, c) = reduce_against(&elems, None, r.terms.clone());
                let mut cert = Certificate::relation(i, Scalar::one(f));
                cert.add_scaled(&-Scalar::one(f), &Word::empty(), &c, &Word::empty());
                if let Some(e) = make_elem(next_id, t, cert) {
                    elems.push(e);
                    next_id += 1;
                }
            }
        }
        let mut done: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
        loop {
            interreduce(&mut elems, &mut next_id, f);
            let mut overlaps = Vec::new();
            for (i, gi) in elems.iter().enumerate() {
                for (j, gj) in elems.iter().enumerate() {
                    let (li, lj) = (&gi.lead, &gj.lead);
                    for k in 1..li.len().min(lj.len()) {
                        if li.len() + lj.len() - k > d || done.contains(&(gi.id, gj.id, k)) {
                            continue;
                        }
                        if li.letters()[li.len() - k..] == lj.letters()[..k] {
                            overlaps.push((i, j, k));
                        }
                    }
                }
            }
            let mut grew = false;
            for (i, j, k) in overlaps {
                let (gi, gj) = (&elems[i], &elems[j]);
                done.insert((gi.id, gj.id, k));
                let u = gi.lead.slice(0, gi.lead.len() - k);
                let v = gj.lead.slice(k, gj.lead.len());
                let one = Scalar::one(f);
                let mut s = Terms::new();
                add_multiple(&mut s, &one, &Word::empty(), &gi.poly(f), &v);
                add_multiple(&mut s, &-one.clone(), &u, &gj.poly(f), &Word::empty());
                let mut cert = Certificate::default();
                cert.add_scaled(&one, &Word::empty(), &gi.cert, &v);
                cert.add_scaled(&-one.clone(), &u, &gj.cert, &Word::empty());
                let (r, c) = reduce_against(&elems, None, s);
                cert.add_scaled(&-one, &Word::empty(), &c, &Word::empty());
                if let Some(e) = make_elem(next_id, r, cert) {
                    elems.push(e);
                    next_id += 1;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        elems.sort_by(|a, b| a.lead.cmp(&b.lead));
        GroebnerBasis {
            gens: gens.clone(),
            degree: d,
            elems,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn leads(&self) -> Vec<Word> {
        self.elems.iter().map(|e| e.lead.clone()).collect()
    }

    pub fn elements(&self) -> Vec<NCPoly> {
        let f = self.gens.field();
        self.elems
            .iter()
            .map(|e| NCPoly::from_raw(&self.gens, e.poly(f)))
            .collect()
    }

    /// Each basis element as a combination of relation multiples.
    pub fn certificates(&self) -> Vec<Certificate> {
        self.elems.iter().map(|e| e.cert.clone()).collect()
    }

    fn check(&self, x: &NCPoly) -> Result<(), NcError> {
        if x.gens.dim != self.gens.dim {
            return Err(NcError::GeneratorMismatch);
        }
        match x.degree() {
            Some(n) if n > self.degree => Err(NcError::DegreeExceedsBound {
                degree: n,
                bound: self.degree,
            }),
            _ => Ok(()),
        }
    }

    /// The normal form together with a certificate for x − nf(x).
    pub fn reduce(&self, x: &NCPoly) -> Result<(NCPoly, Certificate), NcError> {
        self.check(x)?;
        let (t, c) = reduce_against(&self.elems, None, x.terms.clone());
        Ok((NCPoly::from_raw(&self.gens, t), c))
    }

    pub fn normal_form(&self, x: &NCPoly) -> Result<NCPoly, NcError> {
        Ok(self.reduce(x)?.0)
    }

    /// Rewrites a randomly chosen reducible occurrence until none is left.
    pub fn reduce_shuffled<R: Rng + ?Sized>(&self, x: &NCPoly, rng: &mut R) -> Result<NCPoly, NcError> {
        self.check(x)?;
        let mut t = x.terms.clone();
        loop {
            let mut cands = Vec::new();
            for w in t.keys() {
                for (k, g) in self.elems.iter().enumerate() {
                    for pos in w.positions(&g.lead) {
                        cands.push((w.clone(), k, pos));
                    }
                }
            }
            if cands.is_empty() {
                return Ok(NCPoly::from_raw(&self.gens, t));
            }
            let (w, k, pos) = cands.swap_remove(rng.gen_range(0..cands.len()));
            let g = &self.elems[k];
            let c = t.remove(&w).expect("term present");
            let u = w.slice(0, pos);
            let v = w.slice(pos + g.lead.len(), w.len());
            add_multiple(&mut t, &-c, &u, &g.tail, &v);
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.elems.iter().all(|g| w.find(&g.lead).is_none())
    }

    /// Normal words of each degree 0..=d.
    pub fn normal_words(&self) -> Vec<Vec<Word>> {
        let n = self.gens.dim;
        let mut out: Vec<Vec<Word>> = vec![vec![Word::empty()]];
        if !self.is_normal(&Word::empty()) {
            out[0].clear();
        }
        for _ in 0..self.degree {
            let prev = out.last().expect("degree 0 present");
            let mut next = Vec::new();
            for w in prev {
                for l in 0..n {
                    let x = w.concat(&Word::letter(l));
                    if self.elems.iter().all(|g| !x.ends_with(&g.lead)) {
                        next.push(x);
                    }
                }
            }
            out.push(next);
        }
        out
    }
}

fn interreduce(elems: &mut Vec<Elem>, next_id: &mut usize, f: exactla::FieldSpec) {
    loop {
        elems.sort_by(|a, b| a.lead.cmp(&b.lead).then(a.id.cmp(&b.id)));
        let mut changed = false;
        let mut i = 0;
        while i < elems.len() {
            let poly = elems[i].poly(f);
            let (r, c) = reduce_against(elems, Some(i), poly.clone());
            if r == poly {
                i += 1;
                continue;
            }
            changed = true;
            let mut cert = elems[i].cert.clone();
            cert.add_scaled(&-Scalar::one(f), &Word::empty(), &c, &Word::empty());
            match make_elem(*next_id, r, cert) {
                Some(e) => {
                    *next_id += 1;
                    elems[i] = e;
                    i += 1;
                }
                None => {
                    elems.remove(i);
                }
            }
        }
        if !changed {
            return;
        }
    }
}
