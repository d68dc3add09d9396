use cat_backends::Mor;
use exactla::Matrix;
use omega_structures::Comeasuring;
use supports::{coefficient_span, preorder_cmp};

use crate::duality::{eval_poly, word_values};
use crate::{UniversalComeasuring, UniversalError};

#[derive(Clone, Debug)]
pub struct InducedHom {
    /// φ on generators, U → Q.
    pub phi: Mor,
    /// Whether φ is the only linear map with (id_B⊗φ)ρ_univ = ρ'.
    pub unique: bool,
}

#[derive(Clone, Debug)]
pub enum Induced {
    Hom(InducedHom),
    /// The first relation whose image in Q is nonzero.
    Obstruction { relation: usize, image: Matrix },
    /// ρ' is not coarser than the universal coaction.
    OutOfClass,
}

impl Induced {
    pub fn hom(&self) -> Option<&InducedHom> {
        match self {
            Induced::Hom(h) => Some(h),
            _ => None,
        }
    }
}

/// The monoid map T(U)/I → Q through which a comeasuring ρ': A → B⊗Q factors.
pub fn induced_hom(u: &UniversalComeasuring, c: &Comeasuring) -> Result<Induced, UniversalError> {
    if c.a != u.a || c.b != u.b {
        return Err(UniversalError::Incompatible("different A or B".into()));
    }
    let (b, q) = (&u.b.carrier, &c.q.carrier);
    if !preorder_cmp(&u.rho, u.gens(), &c.rho, q, b)?.first_dominates() {
        return Ok(Induced::OutOfClass);
    }
    let r = u.coefficient_matrix();
    let t = coefficient_span(&c.rho, b, q);
    let x = match r.transpose().solve(&t.transpose()) {
        Ok(x) => x.transpose(),
        Err(_) => return Ok(Induced::OutOfClass),
    };
    let phi = Mor::new(u.gens(), q, x)?;
    let rels = &u.presentation.relations;
    let max = rels.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let vals = word_values(&phi.matrix, &c.q, max);
    for (i, rel) in rels.iter().enumerate() {
        let image = eval_poly(rel, &vals);
        if !image.is_zero() {
            return Ok(Induced::Obstruction { relation: i, image });
        }
    }
    Ok(Induced::Hom(InducedHom {
        phi,
        unique: r.rank() == u.gens().dim,
    }))
}
