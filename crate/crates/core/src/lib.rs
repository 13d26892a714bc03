pub mod bimodule;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod homology;
pub mod scalars;
pub mod selftest;
pub mod trace;

pub use error::{Error, Result};
