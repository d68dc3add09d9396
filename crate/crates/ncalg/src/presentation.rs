use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use cat_backends::random::direct_sum;
use cat_backends::{is_subobject_basis, tensor_power, unit_obj, Obj, Report};
use exactla::Matrix;

use crate::poly::default_names;
use crate::{Certificate, GroebnerBasis, NCPoly, NcError, Word};

/// U^{⊗n} with the induced backend structure; n = 0 gives 𝟙.
pub fn tensor_algebra_component(u: &Obj, n: usize) -> Obj {
    tensor_power(u, n)
}

/// ⊕_{n ≤ d} U^{⊗n}, with basis the words of length ≤ d in deglex order.
pub fn truncated_tensor_algebra(u: &Obj, d: usize) -> Obj {
    (1..=d).fold(unit_obj(&u.cat), |acc, n| {
        direct_sum(&acc, &tensor_algebra_component(u, n))
    })
}

/// Position of a word in the basis of ⊕_{n ≤ d} U^{⊗n}.
pub fn truncated_index(w: &Word, n_gens: usize) -> usize {
    let offset: usize = (0..w.len()).map(|k| n_gens.pow(k as u32)).sum();
    offset + w.index(n_gens)
}

/// Normal words and their counts per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBasis {
    pub words: Vec<Vec<Word>>,
    pub dims: Vec<usize>,
}

/// A finitely presented monoid T(U)/(relations), with truncated Gröbner data
/// cached per degree bound.
#[derive(Debug)]
pub struct Presentation {
    pub gens: Obj,
    pub names: Vec<String>,
    pub relations: Vec<NCPoly>,
    cache: Mutex<BTreeMap<usize, Arc<GroebnerBasis>>>,
}

impl Clone for Presentation {
    fn clone(&self) -> Presentation {
        Presentation {
            gens: self.gens.clone(),
            names: self.names.clone(),
            relations: self.relations.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Presentation) -> bool {
        self.gens == other.gens && self.names == other.names && self.relations == other.relations
    }
}

impl Presentation {
    pub fn new(gens: &Obj, relations: Vec<NCPoly>) -> Result<Presentation, NcError> {
        if relations.iter().any(|r| r.gens.dim != gens.dim) {
            return Err(NcError::GeneratorMismatch);
        }
        Ok(Presentation {
            gens: gens.clone(),
            names: default_names(gens.dim),
            relations: relations.into_iter().filter(|r| !r.is_zero()).collect(),
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn free(gens: &Obj) -> Presentation {
        Presentation::new(gens, Vec::new()).expect("no relations")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Presentation, NcError> {
        if names.len() != self.gens.dim {
            return Err(NcError::GeneratorMismatch);
        }
        self.names = names;
        Ok(self)
    }

    /// The same generators with extra relations.
    pub fn add_relations(&self, more: Vec<NCPoly>) -> Result<Presentation, NcError> {
        let mut rels = self.relations.clone();
        rels.extend(more);
        Presentation::new(&self.gens, rels)?.with_names(self.names.clone())
    }

    pub fn gb(&self, d: usize) -> Arc<GroebnerBasis> {
        let mut cache = self.cache.lock().expect("cache lock");
        cache
            .entry(d)
            .or_insert_with(|| Arc::new(GroebnerBasis::compute(&self.gens, &self.relations, d)))
            .clone()
    }

    pub fn normal_form(&self, x: &NCPoly, d: usize) -> Result<NCPoly, NcError> {
        self.gb(d).normal_form(x)
    }

    /// nf(x) and a certificate c with x − nf(x) = expand(c) in terms of
    /// the original relations.
    pub fn normal_form_certified(
        &self,
        x: &NCPoly,
        d: usize,
    ) -> Result<(NCPoly, Certificate), NcError> {
        self.gb(d).reduce(x)
    }

    pub fn truncated_basis(&self, d: usize) -> TruncatedBasis {
        let words = self.gb(d).normal_words();
        let dims = words.iter().map(Vec::len).collect();
        TruncatedBasis { words, dims }
    }

    pub fn render(&self, p: &NCPoly) -> String {
        p.render(&self.names)
    }

    /// Reduced Gröbner basis elements at bound d, rendered.
    pub fn rendered_basis(&self, d: usize) -> Vec<String> {
        self.gb(d).elements().iter().map(|p| self.render(p)).collect()
    }

    /// Columns spanning {u·r·v : |u| + deg r + |v| ≤ d} in ⊕_{n ≤ d} U^{⊗n}.
    pub fn ideal_span(&self, d: usize) -> Matrix {
        let g = self.gens.dim;
        let total: usize = (0..=d).map(|k| g.pow(k as u32)).sum();
        let f = self.gens.field();
        let mut cols = Vec::new();
        for r in &self.relations {
            let Some(deg) = r.degree() else { continue };
            if deg > d {
                continue;
            }
            for lu in 0..=d - deg {
                for lv in 0..=d - deg - lu {
                    for u in Word::all(g, lu) {
                        for v in Word::all(g, lv) {
                            let mut col = Matrix::zeros(f, total, 1);
                            for (w, c) in r.terms() {
                                col.set(truncated_index(&w.wrap(&u, &v), g), 0, c.clone());
                            }
                            cols.push(col);
                        }
                    }
                }
            }
        }
        Matrix::hstack_all(f, total, &cols).image()
    }

    /// The degree-≤d ideal span is a subobject of ⊕_{n ≤ d} U^{⊗n}.
    pub fn check_backend_stability(&self, d: usize) -> Report {
        let mut r = Report::new();
        let ambient = truncated_tensor_algebra(&self.gens, d);
        if !is_subobject_basis(&ambient, &self.ideal_span(d)) {
            r.push("ideal span not stable", vec![d]);
        }
        r
    }
}
