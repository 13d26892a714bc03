use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

/// Polynomial in `q` and `t`, keyed by `(q exponent, t exponent)`.
type Poly2 = BTreeMap<(u32, u32), BigRational>;

fn add_into(acc: &mut Poly2, key: (u32, u32), c: BigRational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

fn poly_mul(a: &Poly2, b: &Poly2) -> Poly2 {
    let mut out = Poly2::new();
    for (&(qa, ta), ca) in a {
        for (&(qb, tb), cb) in b {
            add_into(&mut out, (qa + qb, ta + tb), ca * cb);
        }
    }
    out
}

fn shift_q(a: &Poly2, k: u32) -> Poly2 {
    a.iter()
        .map(|(&(qe, te), c)| ((qe + k, te), c.clone()))
        .collect()
}

/// `(1 + tq)^k`.
fn one_plus_tq_pow(k: u32) -> Poly2 {
    (0..=k)
        .map(|i| {
            let c = crate::bimodule::binomial(k as usize, i as usize);
            ((i, i), BigRational::from_integer(BigInt::from(c)))
        })
        .collect()
}

/// Exact quotient by `1 + tq`, if there is one. Writing `N = Σ N_k t^k`,
/// the quotient `M` satisfies `M_k = N_k − q·M_{k−1}`.
fn div_one_plus_tq(a: &Poly2) -> Option<Poly2> {
    let top = a.keys().map(|&(_, te)| te).max()?;
    let mut by_t: Vec<BTreeMap<u32, BigRational>> = vec![BTreeMap::new(); top as usize + 1];
    for (&(qe, te), c) in a {
        by_t[te as usize].insert(qe, c.clone());
    }
    let mut quot: Vec<BTreeMap<u32, BigRational>> = Vec::with_capacity(top as usize);
    for k in 0..top as usize {
        let mut m = by_t[k].clone();
        if let Some(prev) = quot.last() {
            for (&qe, c) in prev {
                let e = m.entry(qe + 1).or_insert_with(BigRational::zero);
                *e -= c;
            }
            m.retain(|_, c| !c.is_zero());
        }
        quot.push(m);
    }
    // the top coefficient must equal q·M_{top−1}
    let last = quot.last().cloned().unwrap_or_default();
    let expect: BTreeMap<u32, BigRational> = last.into_iter().map(|(qe, c)| (qe + 1, c)).collect();
    if expect != by_t[top as usize] {
        return None;
    }
    let mut out = Poly2::new();
    for (te, m) in quot.into_iter().enumerate() {
        for (qe, c) in m {
            out.insert((qe, te as u32), c);
        }
    }
    Some(out)
}

/// An element of `Q[q, q⁻¹, t, (1+tq)⁻¹]` written as
/// `N(q, t) / (q^c · (1 + tq)^b)` in lowest terms: `q ∤ N` when `c > 0` and
/// `(1 + tq) ∤ N` when `b > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TraceValue {
    num: Vec<((u32, u32), BigRational)>,
    q_pow: u32,
    one_plus_tq_pow: u32,
}

impl TraceValue {
    fn from_parts(num: Poly2, q_pow: i64, one_plus_tq_pow: u32) -> Self {
        let mut num = num;
        let mut c = q_pow;
        if num.is_empty() {
            return Self::zero();
        }
        let min_q = num.keys().map(|&(qe, _)| qe).min().unwrap_or(0) as i64;
        // bring the q-adic valuation of N to zero, or as far as c allows
        let drop = if c <= 0 { c } else { min_q.min(c) };
        if drop != 0 {
            num = num
                .into_iter()
                .map(|((qe, te), v)| (((qe as i64 - drop) as u32, te), v))
                .collect();
            c -= drop;
        }
        let mut b = one_plus_tq_pow;
        while b > 0 {
            match div_one_plus_tq(&num) {
                Some(m) => {
                    num = m;
                    b -= 1;
                }
                None => break,
            }
        }
        debug_assert!(c >= 0);
        Self {
            num: num.into_iter().collect(),
            q_pow: c as u32,
            one_plus_tq_pow: b,
        }
    }

    fn poly(&self) -> Poly2 {
        self.num.iter().cloned().collect()
    }

    pub fn zero() -> Self {
        Self {
            num: Vec::new(),
            q_pow: 0,
            one_plus_tq_pow: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut p = Poly2::new();
        add_into(&mut p, (0, 0), c);
        Self::from_parts(p, 0, 0)
    }

    /// `c · q^qe · t^te`, with `qe` possibly negative.
    pub fn monomial(c: BigRational, qe: i64, te: u32) -> Self {
        let mut p = Poly2::new();
        let shift = (-qe).max(0);
        add_into(&mut p, ((qe + shift) as u32, te), c);
        Self::from_parts(p, shift, 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// `Σ c·q^qe·t^te / (q^q_pow (1+tq)^b)` from arbitrary data.
    pub fn from_terms<I>(terms: I, q_pow: i64, one_plus_tq_pow: u32) -> Self
    where
        I: IntoIterator<Item = (BigRational, i64, u32)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let shift = terms.iter().map(|(_, qe, _)| -qe).max().unwrap_or(0).max(0);
        let mut p = Poly2::new();
        for (c, qe, te) in terms {
            add_into(&mut p, ((qe + shift) as u32, te), c);
        }
        Self::from_parts(p, q_pow + shift, one_plus_tq_pow)
    }

    /// The Markov parameter `tq(q−1)/(tq+1)`.
    pub fn markov_z() -> Self {
        let one = BigRational::one();
        Self::from_terms([(one.clone(), 2, 1), (-one, 1, 1)], 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Numerator terms `(coefficient, q exponent, t exponent)`, sorted.
    pub fn numerator(&self) -> impl Iterator<Item = (&BigRational, u32, u32)> {
        self.num.iter().map(|((qe, te), c)| (c, *qe, *te))
    }

    pub fn q_pow(&self) -> u32 {
        self.q_pow
    }

    pub fn one_plus_tq_pow(&self) -> u32 {
        self.one_plus_tq_pow
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Multiplies by `q^k`.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        Self::from_parts(self.poly(), self.q_pow as i64 - k, self.one_plus_tq_pow)
    }

    /// Value at a numeric point, for display and sanity checks.
    pub fn eval_f64(&self, q: f64, t: f64) -> f64 {
        use num_traits::ToPrimitive;
        let n: f64 = self
            .num
            .iter()
            .map(|((qe, te), c)| {
                c.to_f64().unwrap_or(f64::NAN) * q.powi(*qe as i32) * t.powi(*te as i32)
            })
            .sum();
        n / (q.powi(self.q_pow as i32) * (1.0 + t * q).powi(self.one_plus_tq_pow as i32))
    }
}

impl Add for &TraceValue {
    type Output = TraceValue;
    fn add(self, rhs: &TraceValue) -> TraceValue {
        let c = self.q_pow.max(rhs.q_pow);
        let b = self.one_plus_tq_pow.max(rhs.one_plus_tq_pow);
        let lift = |v: &TraceValue| {
            poly_mul(
                &shift_q(&v.poly(), c - v.q_pow),
                &one_plus_tq_pow(b - v.one_plus_tq_pow),
            )
        };
        let mut sum = lift(self);
        for (k, v) in lift(rhs) {
            add_into(&mut sum, k, v);
        }
        TraceValue::from_parts(sum, c as i64, b)
    }
}

impl Neg for &TraceValue {
    type Output = TraceValue;
    fn neg(self) -> TraceValue {
        TraceValue {
            num: self.num.iter().map(|(k, c)| (*k, -c)).collect(),
            ..self.clone()
        }
    }
}

impl Sub for &TraceValue {
    type Output = TraceValue;
    fn sub(self, rhs: &TraceValue) -> TraceValue {
        self + &(-rhs)
    }
}

impl Mul for &TraceValue {
    type Output = TraceValue;
    fn mul(self, rhs: &TraceValue) -> TraceValue {
        TraceValue::from_parts(
            poly_mul(&self.poly(), &rhs.poly()),
            (self.q_pow + rhs.q_pow) as i64,
            self.one_plus_tq_pow + rhs.one_plus_tq_pow,
        )
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for TraceValue {
            type Output = TraceValue;
            fn $f(self, rhs: TraceValue) -> TraceValue {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for TraceValue {
    /// `(N)/(q^c*(1+t*q)^b)`, terms in increasing `(q, t)` order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.num.is_empty() {
            s.push('0');
        }
        for (i, ((qe, te), c)) in self.num.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (*qe == 0 && *te == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("q", *qe), ("t", *te)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            s.push_str(&factors.join("*"));
        }
        let mut den = Vec::new();
        match self.q_pow {
            0 => {}
            1 => den.push("q".to_string()),
            c => den.push(format!("q^{c}")),
        }
        match self.one_plus_tq_pow {
            0 => {}
            1 => den.push("(1+t*q)".to_string()),
            b => den.push(format!("(1+t*q)^{b}")),
        }
        match den.len() {
            0 => write!(f, "{s}"),
            1 => write!(f, "({s})/{}", den[0]),
            _ => write!(f, "({s})/({})", den.join("*")),
        }
    }
}

impl fmt::Debug for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for TraceValue {
    /// `{"num": [[coef, qexp, texp], …], "den_q_pow": c, "den_one_plus_tq_pow": b}`;
    /// integral coefficients are written as JSON integers, others as strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let num: Vec<(serde_json::Value, u32, u32)> = self
            .num
            .iter()
            .map(|((qe, te), c)| (rational_json(c), *qe, *te))
            .collect();
        let mut st = serializer.serialize_struct("TraceValue", 3)?;
        st.serialize_field("num", &num)?;
        st.serialize_field("den_q_pow", &self.q_pow)?;
        st.serialize_field("den_one_plus_tq_pow", &self.one_plus_tq_pow)?;
        st.end()
    }
}

pub(crate) fn rational_json(c: &BigRational) -> serde_json::Value {
    use num_traits::ToPrimitive;
    if c.is_integer() {
        if let Some(i) = c.to_integer().to_i64() {
            return serde_json::Value::from(i);
        }
    }
    serde_json::Value::from(c.to_string())
}
