//! Hecke algebras of Coxeter systems, the type A Markov trace, HOMFLY
//! polynomials, and checks of the trace identities for `⟨σ⟩_V`.

mod algebra;
mod homfly;
mod laurent;
mod ocneanu;
mod verify;

pub use algebra::{HeckeAlgebra, HeckeElement, DEFAULT_LENGTH_BOUND};
pub use homfly::{homfly, homfly_from_trace, HomflyValue};
pub use laurent::LaurentPoly;
pub use ocneanu::{ocneanu_trace, OcneanuTrace, OcneanuValue};
pub use verify::{
    all_pass, hecke_check, inverse_check, markov_check, markov_check_with, trace_of_hecke,
    trace_property_check, CheckCase,
};
