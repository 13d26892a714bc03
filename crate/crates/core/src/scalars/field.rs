//! The real cyclotomic fields Q(2cos(π/N)).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::scalar::AlgebraicScalar;
use super::upoly::RatPoly;

/// `Q(θ)` with `θ = 2cos(π/N)`. Instances are interned, so a field is always
/// handled as `&'static NumberField` and compared by its order.
#[derive(Debug)]
pub struct NumberField {
    order: u32,
    minpoly: RatPoly,
    /// Floating approximation of θ, used only for display and root checks.
    theta_approx: f64,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for NumberField {}

impl std::hash::Hash for NumberField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
    }
}

impl NumberField {
    /// Interned field for `N = order`.
    pub fn get(order: u32) -> &'static NumberField {
        assert!(order >= 1, "field order must be positive");
        static FIELDS: OnceLock<Mutex<HashMap<u32, &'static NumberField>>> = OnceLock::new();
        let mut map = FIELDS.get_or_init(Default::default).lock().unwrap();
        map.entry(order).or_insert_with(|| {
            Box::leak(Box::new(NumberField {
                order,
                minpoly: minpoly_2cos(order),
                theta_approx: 2.0 * (std::f64::consts::PI / order as f64).cos(),
            }))
        })
    }

    /// The rationals, realized as `N = 1` (θ = −2).
    pub fn rationals() -> &'static NumberField {
        Self::get(1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn minpoly(&self) -> &RatPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(1)
    }

    pub fn theta_approx(&self) -> f64 {
        self.theta_approx
    }

    pub fn theta(&'static self) -> AlgebraicScalar {
        AlgebraicScalar::from_poly(self, RatPoly::x())
    }

    /// `2cos(kπ/N)` as an element of this field.
    pub fn two_cos(&'static self, k: i64) -> AlgebraicScalar {
        AlgebraicScalar::from_poly(self, chebyshev(k.unsigned_abs() as usize))
    }

    /// `cos(π/m)` for a Coxeter label `m`, provided `2cos(π/m)` lies in this field.
    pub fn cos_pi_over(&'static self, m: u32) -> AlgebraicScalar {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        match m {
            1 => AlgebraicScalar::from_i64(self, -1),
            2 => AlgebraicScalar::zero(self),
            3 => AlgebraicScalar::from_rational(self, half),
            _ => {
                assert!(
                    self.order.is_multiple_of(m),
                    "cos(pi/{m}) does not lie in Q(2cos(pi/{}))",
                    self.order
                );
                self.two_cos((self.order / m) as i64).scale(&half)
            }
        }
    }
}

/// Chebyshev-type polynomial `p_k` with `p_k(2cos α) = 2cos(kα)`.
pub fn chebyshev(k: usize) -> RatPoly {
    let mut prev = RatPoly::from_i64(&[2]);
    let mut cur = RatPoly::x();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = RatPoly::x().mul(&cur).sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn cyclotomic(m: u64, memo: &mut HashMap<u64, RatPoly>) -> RatPoly {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by every Φ_d for proper divisors d of m
    let mut p =
        RatPoly::monomial(BigRational::from_integer(1.into()), m as usize).sub(&RatPoly::one());
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = p.div_rem(&cyclotomic(d, memo));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    memo.insert(m, p.clone());
    p
}

/// Minimal polynomial of `2cos(π/N)` over Q.
///
/// Built from the cyclotomic polynomial Φ_{2N} by rewriting the palindromic
/// `z^{-h}Φ_{2N}(z)` in `x = z + 1/z`. The result is checked to divide the
/// Chebyshev relation `p_N(x) + 2` and to change sign across a rational
/// interval around `2cos(π/N)`.
pub fn minpoly_2cos(n: u32) -> RatPoly {
    assert!(n >= 1);
    if n == 1 {
        return RatPoly::from_i64(&[2, 1]);
    }
    let m = 2 * n as u64;
    let phi = cyclotomic(m, &mut HashMap::new());
    let deg = phi.degree().unwrap();
    debug_assert!(deg.is_even());
    let h = deg / 2;
    let mut psi = RatPoly::constant(phi.coeff(h));
    for k in 1..=h {
        psi = psi.add(&chebyshev(k).scale(&phi.coeff(h + k)));
    }

    let relation = chebyshev(n as usize).add(&RatPoly::from_i64(&[2]));
    assert!(
        relation.rem(&psi).is_zero(),
        "minimal polynomial does not divide p_N + 2"
    );
    let theta = 2.0 * (std::f64::consts::PI / n as f64).cos();
    let eps = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64));
    let approx = BigRational::from_float(theta).expect("finite");
    let lo = psi.eval(&(&approx - &eps));
    let hi = psi.eval(&(&approx + &eps));
    assert!(
        lo.is_zero() || hi.is_zero() || lo.is_negative() != hi.is_negative(),
        "selected factor does not vanish at 2cos(pi/{n})"
    );
    psi
}

/// Smallest field order whose field contains `cos(π/m)` for every label.
/// Labels 0 (∞), 2 and 3 have rational cosines and do not contribute.
pub fn field_order_for_labels<I: IntoIterator<Item = u32>>(labels: I) -> u32 {
    labels
        .into_iter()
        .filter(|&m| m >= 4)
        .fold(1u32, |acc, m| acc.lcm(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_minimal_polynomials() {
        assert_eq!(minpoly_2cos(1), RatPoly::from_i64(&[2, 1]));
        assert_eq!(minpoly_2cos(2), RatPoly::from_i64(&[0, 1]));
        assert_eq!(minpoly_2cos(3), RatPoly::from_i64(&[-1, 1]));
        assert_eq!(minpoly_2cos(4), RatPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(minpoly_2cos(5), RatPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn numeric_oracle_for_minpolys() {
        // θ² = 2 for N = 4 and the golden relation for N = 5, checked in floating point
        let t4 = 2.0 * (std::f64::consts::PI / 4.0).cos();
        assert!((t4 * t4 - 2.0).abs() < 1e-12);
        let t5 = 2.0 * (std::f64::consts::PI / 5.0).cos();
        assert!((t5 * t5 - t5 - 1.0).abs() < 1e-12);
        for n in 1..=30 {
            let p = minpoly_2cos(n);
            let t = 2.0 * (std::f64::consts::PI / n as f64).cos();
            assert!(p.eval_f64(t).abs() < 1e-8, "N = {n}");
            assert!(p.leading().unwrap() == &BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn degree_is_half_totient() {
        for n in 2..=24u32 {
            let m = 2 * n;
            let phi = (1..=m).filter(|k| k.gcd(&m) == 1).count();
            assert_eq!(minpoly_2cos(n).degree().unwrap(), phi / 2, "N = {n}");
        }
    }

    #[test]
    fn label_lcm() {
        assert_eq!(field_order_for_labels([2, 3, 3]), 1);
        assert_eq!(field_order_for_labels([4, 3]), 4);
        assert_eq!(field_order_for_labels([5, 3, 2]), 5);
        assert_eq!(field_order_for_labels([0, 2]), 1);
        assert_eq!(field_order_for_labels([4, 6]), 12);
    }
}
