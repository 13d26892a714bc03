use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::scalars::RatPoly;
use crate::trace::{rational_json, BraidWord};

use super::algebra::HeckeAlgebra;
use super::laurent::{fmt_terms, power};
use super::ocneanu::{ocneanu_trace, OcneanuValue};

type Laurent2 = BTreeMap<(i64, i64), BigRational>;

fn add_into(acc: &mut Laurent2, key: (i64, i64), c: BigRational) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(key).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

fn mul2(a: &Laurent2, b: &Laurent2) -> Laurent2 {
    let mut out = Laurent2::new();
    for (&(a1, s1), c1) in a {
        for (&(a2, s2), c2) in b {
            add_into(&mut out, (a1 + a2, s1 + s2), c1 * c2);
        }
    }
    out
}

fn pow2(a: &Laurent2, e: u32) -> Laurent2 {
    let mut acc = Laurent2::from([((0, 0), BigRational::one())]);
    for _ in 0..e {
        acc = mul2(&acc, a);
    }
    acc
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `a − a⁻¹` and `s − s⁻¹`.
fn a_minus_inv() -> Laurent2 {
    Laurent2::from([((1, 0), int(1)), ((-1, 0), int(-1))])
}

fn s_minus_inv() -> Laurent2 {
    Laurent2::from([((0, 1), int(1)), ((0, -1), int(-1))])
}

/// Exact quotient by `s − s⁻¹ = s⁻¹(s² − 1)`, if there is one.
fn div_s_minus_inv(n: &Laurent2) -> Option<Laurent2> {
    let mut by_a: BTreeMap<i64, Vec<(i64, BigRational)>> = BTreeMap::new();
    for (&(ae, se), c) in n {
        by_a.entry(ae).or_default().push((se, c.clone()));
    }
    let divisor = RatPoly::from_i64(&[-1, 0, 1]);
    let mut out = Laurent2::new();
    for (ae, terms) in by_a {
        // s·N_ae, shifted to a polynomial
        let low = terms.iter().map(|(se, _)| se + 1).min().unwrap();
        let width = terms.iter().map(|(se, _)| se + 1 - low).max().unwrap() as usize + 1;
        let mut coeffs = vec![BigRational::zero(); width];
        for (se, c) in terms {
            coeffs[(se + 1 - low) as usize] = c;
        }
        let (quot, rem) = RatPoly::new(coeffs).div_rem(&divisor);
        if !rem.is_zero() {
            return None;
        }
        for (k, c) in quot.coeffs().iter().enumerate() {
            add_into(&mut out, (ae, k as i64 + low), c.clone());
        }
    }
    Some(out)
}

/// HOMFLY polynomial `N(a, s) / (s − s⁻¹)^k` in lowest terms, for the skein
/// relation `a·P(L₊) − a⁻¹·P(L₋) = (s − s⁻¹)·P(L₀)` with `P(unknot) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomflyValue {
    num: Laurent2,
    den_pow: u32,
}

impl HomflyValue {
    fn canonical(mut num: Laurent2, mut den_pow: u32) -> Self {
        while den_pow > 0 {
            match div_s_minus_inv(&num) {
                Some(m) => {
                    num = m;
                    den_pow -= 1;
                }
                None => break,
            }
        }
        if num.is_empty() {
            den_pow = 0;
        }
        Self { num, den_pow }
    }

    /// `Σ c·a^i·s^j / (s − s⁻¹)^k` from `(c, i, j)` terms.
    pub fn from_terms(terms: &[(i64, i64, i64)], den_pow: u32) -> Self {
        let mut num = Laurent2::new();
        for &(c, ae, se) in terms {
            add_into(&mut num, (ae, se), int(c));
        }
        Self::canonical(num, den_pow)
    }

    pub fn one() -> Self {
        Self::from_terms(&[(1, 0, 0)], 0)
    }

    /// Numerator terms `(coefficient, a exponent, s exponent)`.
    pub fn numerator(&self) -> impl Iterator<Item = (&BigRational, i64, i64)> {
        self.num.iter().map(|((ae, se), c)| (c, *ae, *se))
    }

    pub fn den_pow(&self) -> u32 {
        self.den_pow
    }

    /// Numeric value, for sanity checks.
    pub fn eval_f64(&self, a: f64, s: f64) -> f64 {
        use num_traits::ToPrimitive;
        let n: f64 = self
            .num
            .iter()
            .map(|((ae, se), c)| {
                c.to_f64().unwrap_or(f64::NAN) * a.powi(*ae as i32) * s.powi(*se as i32)
            })
            .sum();
        n / (s - 1.0 / s).powi(self.den_pow as i32)
    }
}

impl fmt::Display for HomflyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = self.den_pow > 0;
        if wrap {
            write!(f, "(")?;
        }
        fmt_terms(
            f,
            self.num.iter().map(|((ae, se), c)| {
                let parts: Vec<String> = [power("a", *ae), power("s", *se)]
                    .into_iter()
                    .filter(|p| !p.is_empty())
                    .collect();
                (c, parts.join("*"))
            }),
        )?;
        match self.den_pow {
            0 => Ok(()),
            1 => write!(f, ")/(s - s^-1)"),
            k => write!(f, ")/(s - s^-1)^{k}"),
        }
    }
}

impl fmt::Debug for HomflyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for HomflyValue {
    /// `{"num": [[coef, aexp, sexp], …], "den_s_minus_sinv_pow": k}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let num: Vec<(serde_json::Value, i64, i64)> = self
            .num
            .iter()
            .map(|((ae, se), c)| (rational_json(c), *ae, *se))
            .collect();
        let mut st = serializer.serialize_struct("HomflyValue", 2)?;
        st.serialize_field("num", &num)?;
        st.serialize_field("den_s_minus_sinv_pow", &self.den_pow)?;
        st.end()
    }
}

/// `P = (as)^{−e} Σ_k c_k(s²)·(as)^k·A^{n−1−k}` for `τ = Σ_k c_k(q) z^k`,
/// where `A = (a − a⁻¹)/(s − s⁻¹)` is the value of the two-component unlink
/// and `e` the writhe. This is `A^{n−1}(as)^{−e} τ` after substituting
/// `q = s²` and `z = a²(1 − s²)/(1 − a²)`, for which `A·z = as`.
pub fn homfly_from_trace(strands: usize, writhe: i64, tau: &OcneanuValue) -> HomflyValue {
    let n1 = strands.saturating_sub(1) as u32;
    let mut num = Laurent2::new();
    for k in 0..=tau.z_degree().unwrap_or(0) {
        let ck = tau.z_coeff(k);
        if ck.is_zero() || k > n1 {
            debug_assert!(ck.is_zero(), "z-degree exceeds strands − 1");
            continue;
        }
        let ck2: Laurent2 = ck.terms().map(|(e, c)| ((0, 2 * e), c.clone())).collect();
        let ask = Laurent2::from([((k as i64, k as i64), BigRational::one())]);
        // A^{n−1−k} over the common denominator (s − s⁻¹)^{n−1}
        let rest = mul2(&pow2(&a_minus_inv(), n1 - k), &pow2(&s_minus_inv(), k));
        for (key, c) in mul2(&mul2(&ck2, &ask), &rest) {
            add_into(&mut num, key, c);
        }
    }
    let shift = Laurent2::from([((-writhe, -writhe), BigRational::one())]);
    HomflyValue::canonical(mul2(&num, &shift), n1)
}

/// HOMFLY polynomial of the closure of a braid on `strands` strands.
pub fn homfly(strands: usize, w: &BraidWord, length_bound: usize) -> Result<HomflyValue> {
    if strands == 0 {
        return Err(Error::Input("need at least one strand".into()));
    }
    w.check_rank(strands - 1)?;
    if strands == 1 {
        return Ok(HomflyValue::one());
    }
    let sys = CoxeterSystem::type_a(strands - 1)?;
    let alg = HeckeAlgebra::new(&sys, length_bound)?;
    let h = alg.normal_form(w)?;
    let tau = ocneanu_trace(&alg, &h)?;
    Ok(homfly_from_trace(strands, w.writhe(), &tau))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(strands: usize, w: &str) -> HomflyValue {
        homfly(strands, &w.parse().unwrap(), 12).unwrap()
    }

    #[test]
    fn unknots() {
        assert_eq!(p(1, ""), HomflyValue::one());
        assert_eq!(p(2, "1"), HomflyValue::one());
        assert_eq!(p(2, "-1"), HomflyValue::one());
        assert_eq!(p(3, "1 -2"), HomflyValue::one());
    }

    #[test]
    fn two_component_unlink() {
        let v = p(2, "");
        assert_eq!(v, HomflyValue::from_terms(&[(1, 1, 0), (-1, -1, 0)], 1));
        assert_eq!(v.to_string(), "(-a^-1 + a)/(s - s^-1)");
    }

    #[test]
    fn division_by_s_minus_inverse() {
        // (s² − s⁻²)/(s − s⁻¹) = s + s⁻¹
        let v = HomflyValue::from_terms(&[(1, 0, 2), (-1, 0, -2)], 1);
        assert_eq!(v, HomflyValue::from_terms(&[(1, 0, 1), (1, 0, -1)], 0));
    }
}
