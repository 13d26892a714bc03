use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::NumberField;
use super::upoly::RatPoly;

/// Element of `Q(θ)`, a polynomial in θ reduced modulo the minimal polynomial.
#[derive(Clone)]
pub struct AlgebraicScalar {
    field: &'static NumberField,
    coeffs: Vec<BigRational>,
}

impl AlgebraicScalar {
    pub fn from_poly(field: &'static NumberField, p: RatPoly) -> Self {
        let reduced = if p.degree().unwrap_or(0) >= field.degree() {
            p.rem(field.minpoly())
        } else {
            p
        };
        Self {
            field,
            coeffs: reduced.coeffs().to_vec(),
        }
    }

    pub fn zero(field: &'static NumberField) -> Self {
        Self {
            field,
            coeffs: vec![],
        }
    }

    pub fn one(field: &'static NumberField) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: &'static NumberField, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(field: &'static NumberField, c: BigRational) -> Self {
        let coeffs = if c.is_zero() { vec![] } else { vec![c] };
        Self { field, coeffs }
    }

    pub fn field(&self) -> &'static NumberField {
        self.field
    }

    /// Coefficients in the power basis `1, θ, θ², …`, trailing zeros omitted.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The rational value if this element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        Self {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.coeffs.len() == 1 {
            return Some(Self::from_rational(self.field, self.coeffs[0].recip()));
        }
        let (g, s) = self.as_poly().ext_gcd(self.field.minpoly());
        debug_assert!(g == RatPoly::one());
        Some(Self::from_poly(self.field, s))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value under the embedding θ ↦ 2cos(π/N).
    pub fn to_f64(&self) -> f64 {
        let t = self.field.theta_approx();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    fn check_field(&self, other: &Self) {
        debug_assert_eq!(
            self.field.order(),
            other.field.order(),
            "mixed number fields"
        );
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.check_field(other);
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            coeffs.push(match (a, b, negate) {
                (Some(a), Some(b), false) => a + b,
                (Some(a), Some(b), true) => a - b,
                (Some(a), None, _) => a.clone(),
                (None, Some(b), false) => b.clone(),
                (None, Some(b), true) => -b,
                (None, None, _) => unreachable!(),
            });
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self {
            field: self.field,
            coeffs,
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        if self.coeffs.len() == 1 && other.coeffs.len() == 1 {
            return Self {
                field: self.field,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        Self::from_poly(self.field, self.as_poly().mul(&other.as_poly()))
    }
}

impl PartialEq for AlgebraicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraicScalar {}

impl Hash for AlgebraicScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "θ")?;
                    } else {
                        write!(f, "θ^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&AlgebraicScalar> for &AlgebraicScalar {
            type Output = AlgebraicScalar;
            fn $method(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
                $body(self, rhs)
            }
        }
        impl $trait<AlgebraicScalar> for AlgebraicScalar {
            type Output = AlgebraicScalar;
            fn $method(self, rhs: AlgebraicScalar) -> AlgebraicScalar {
                $body(&self, &rhs)
            }
        }
        impl $trait<&AlgebraicScalar> for AlgebraicScalar {
            type Output = AlgebraicScalar;
            fn $method(self, rhs: &AlgebraicScalar) -> AlgebraicScalar {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &AlgebraicScalar, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &AlgebraicScalar, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &AlgebraicScalar, b| a.mul_impl(b));

impl AddAssign<&AlgebraicScalar> for AlgebraicScalar {
    fn add_assign(&mut self, rhs: &AlgebraicScalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&AlgebraicScalar> for AlgebraicScalar {
    fn sub_assign(&mut self, rhs: &AlgebraicScalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl Neg for &AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> AlgebraicScalar {
        AlgebraicScalar {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for AlgebraicScalar {
    type Output = AlgebraicScalar;
    fn neg(self) -> AlgebraicScalar {
        -&self
    }
}
