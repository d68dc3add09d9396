//! Tensor algebras T(U) over backend objects, noncommutative polynomials in
//! the basis of U, and a degree-truncated Buchberger completion for the deglex
//! order with certified reductions.

mod groebner;
mod poly;
mod presentation;
mod word;

pub use groebner::{Certificate, GroebnerBasis};
pub use poly::{default_names, render_word, NCPoly};
pub use presentation::{
    tensor_algebra_component, truncated_index, truncated_tensor_algebra, Presentation,
    TruncatedBasis,
};
pub use word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcError {
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("polynomials over different generator objects")]
    GeneratorMismatch,
    #[error("certificate refers to relation {0}, which does not exist")]
    RelationIndex(usize),
}
