//! Sparse multivariate polynomials over a number field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalars::{AlgebraicScalar, NumberField};

/// Exponent vector, ordered graded-lexicographically (`x₁ > x₂ > …`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials of total degree `d` in `nvars` variables, in ascending order.
    pub fn of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Number of monomials of degree `d` in `nvars` variables.
    pub fn count(nvars: usize, d: i64) -> usize {
        if d < 0 {
            return 0;
        }
        if nvars == 0 {
            return usize::from(d == 0);
        }
        binomial(d as usize + nvars - 1, nvars - 1)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if any {
                write!(f, "*")?;
            }
            any = true;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{e}", i + 1)?;
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    field: &'static NumberField,
    nvars: usize,
    terms: BTreeMap<Monomial, AlgebraicScalar>,
}

impl MultiPoly {
    pub fn zero(field: &'static NumberField, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &'static NumberField, nvars: usize) -> Self {
        Self::constant(AlgebraicScalar::one(field), nvars)
    }

    pub fn constant(c: AlgebraicScalar, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn term(c: AlgebraicScalar, m: Monomial) -> Self {
        let mut p = Self::zero(c.field(), m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(field: &'static NumberField, nvars: usize, i: usize) -> Self {
        Self::term(AlgebraicScalar::one(field), Monomial::var(nvars, i))
    }

    /// The linear form `Σ coeffs[i]·x_i`.
    pub fn linear(field: &'static NumberField, coeffs: &[AlgebraicScalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(field, n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::var(n, i), c.clone());
            }
        }
        p
    }

    pub fn field(&self) -> &'static NumberField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &AlgebraicScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> AlgebraicScalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| AlgebraicScalar::zero(self.field))
    }

    /// Highest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common degree of all terms, `None` if mixed. Zero counts as homogeneous
    /// of every degree and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => Some(0),
            Some(d) => it.all(|e| e == d).then_some(d),
        }
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Constant term if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<AlgebraicScalar> {
        match self.terms.len() {
            0 => Some(AlgebraicScalar::zero(self.field)),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &AlgebraicScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.field, self.nvars);
        }
        Self {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale(&AlgebraicScalar::from_rational(self.field, c.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &AlgebraicScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &-c);
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field, self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `f(g₁, …, g_n)`, the ring homomorphism sending `x_i ↦ images[i]`.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target_vars = images.first().map_or(self.nvars, |g| g.nvars);
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|g| vec![MultiPoly::one(self.field, g.nvars)])
            .collect();
        let mut out = MultiPoly::zero(self.field, target_vars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone(), target_vars);
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out.add_assign(&t);
        }
        out
    }

    /// Exact quotient by a linear form, pivoting on variable `pivot` (whose
    /// coefficient in `linear` must be nonzero). Fails on a nonzero remainder.
    pub fn div_linear(&self, linear: &MultiPoly, pivot: usize) -> Result<MultiPoly> {
        let lead = linear.coeff(&Monomial::var(self.nvars, pivot));
        let lead_inv = lead.inv().ok_or(Error::InexactDivision)?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.field, self.nvars);
        // repeatedly cancel the term of highest pivot-degree
        while let Some((m, c)) = rem
            .terms
            .iter()
            .max_by(|a, b| a.0 .0[pivot].cmp(&b.0 .0[pivot]).then_with(|| a.0.cmp(b.0)))
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            if m.0[pivot] == 0 {
                return Err(Error::InexactDivision);
            }
            let mut e = m.0.clone();
            e[pivot] -= 1;
            let qm = Monomial(e);
            let qc = &c * &lead_inv;
            rem.sub_assign(&linear.mul_monomial(&qm).scale(&qc));
            quot.add_term(qm, &qc);
        }
        Ok(quot)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.degree() == 0 {
                    format!("({c})")
                } else if c.is_one() {
                    format!("{m}")
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}
