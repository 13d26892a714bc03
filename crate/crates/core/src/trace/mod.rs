//! Expansion of braid words into Bott–Samelson terms and the trace
//! `⟨σ⟩_V` as an exact rational function of `q` and `t`.

mod braid;
mod kr;
mod value;

pub use braid::{expand_braid, BraidWord, ExpansionTerm, Letter};
pub use kr::{TraceEngine, DEFAULT_TRUNCATION};
pub use value::TraceValue;

pub(crate) use value::rational_json;
