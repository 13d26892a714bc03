//! Polynomial arithmetic over the coefficient field and Bott–Samelson
//! bimodules given by explicit right-action matrices.

mod bs;
mod poly;
mod polymatrix;

pub use bs::BSBimodule;
pub use poly::{Monomial, MultiPoly};
pub use polymatrix::PolyMatrix;

pub(crate) use poly::binomial;
