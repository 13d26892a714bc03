//! Exact arithmetic in `Q(2cos(π/N))` and dense linear algebra over it.

mod field;
mod matrix;
mod scalar;
mod upoly;

pub use field::{chebyshev, field_order_for_labels, minpoly_2cos, NumberField};
pub use matrix::{rank_nullspace, ScalarMatrix};
pub use scalar::AlgebraicScalar;
pub use upoly::RatPoly;

/// `2cos(kπ/N)` in the field of order `N`.
pub fn two_cos(k: i64, n: u32) -> AlgebraicScalar {
    NumberField::get(n).two_cos(k)
}
