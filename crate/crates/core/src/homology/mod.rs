//! Graded Hochschild homology of Bott–Samelson bimodules and homology of
//! Koszul complexes, computed degree by degree over the coefficient field.

mod complex;
mod hh;
mod koszul;
mod sparse;

pub use complex::{koszul_on_operators, FreeComplex};
pub use hh::{
    commutator_koszul, ehr_reconstruct, hh_dims, hh_dims_capped, EhrValue, GradedDimTable,
};
pub use koszul::{koszul_complex, koszul_homology, koszul_homology_with_degrees};
pub use sparse::{sparse_rank, EchelonBasis, RankScalar, SparseRow};
