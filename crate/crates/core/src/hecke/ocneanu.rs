use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::trace::TraceValue;

use super::algebra::{HeckeAlgebra, HeckeElement};
use super::laurent::{fmt_terms, power, LaurentPoly};

/// Polynomial in `q^{±1}` and a formal Markov parameter `z`, keyed by
/// `(q exponent, z exponent)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct OcneanuValue(BTreeMap<(i64, u32), BigRational>);

impl OcneanuValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_laurent(&LaurentPoly::one())
    }

    pub fn z() -> Self {
        let mut m = BTreeMap::new();
        m.insert((0, 1), BigRational::from_integer(1.into()));
        Self(m)
    }

    pub fn from_laurent(c: &LaurentPoly) -> Self {
        Self(c.terms().map(|(e, c)| ((e, 0), c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Terms `(coefficient, q exponent, z exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, i64, u32)> {
        self.0.iter().map(|((qe, ze), c)| (c, *qe, *ze))
    }

    /// Coefficient of `z^k` as a Laurent polynomial in `q`.
    pub fn z_coeff(&self, k: u32) -> LaurentPoly {
        self.0
            .iter()
            .filter(|((_, ze), _)| *ze == k)
            .fold(LaurentPoly::zero(), |acc, ((qe, _), c)| {
                acc + LaurentPoly::monomial(c.clone(), *qe)
            })
    }

    pub fn z_degree(&self) -> Option<u32> {
        self.0.keys().map(|&(_, ze)| ze).max()
    }

    /// Substitutes a value for `z`.
    pub fn substitute(&self, z: &TraceValue) -> TraceValue {
        let top = self.z_degree().unwrap_or(0);
        let mut powers = vec![TraceValue::one()];
        for _ in 0..top {
            let next = powers.last().unwrap() * z;
            powers.push(next);
        }
        self.0
            .iter()
            .fold(TraceValue::zero(), |acc, ((qe, ze), c)| {
                &acc + &(&TraceValue::monomial(c.clone(), *qe, 0) * &powers[*ze as usize])
            })
    }

    fn add_term(&mut self, key: (i64, u32), c: BigRational) {
        let slot = self.0.entry(key).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&key);
        }
    }
}

impl Add for &OcneanuValue {
    type Output = OcneanuValue;
    fn add(self, rhs: &OcneanuValue) -> OcneanuValue {
        let mut out = self.clone();
        for (k, c) in &rhs.0 {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Mul for &OcneanuValue {
    type Output = OcneanuValue;
    fn mul(self, rhs: &OcneanuValue) -> OcneanuValue {
        let mut out = OcneanuValue::zero();
        for ((qa, za), ca) in &self.0 {
            for ((qb, zb), cb) in &rhs.0 {
                out.add_term((qa + qb, za + zb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for OcneanuValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.0.iter().map(|((qe, ze), c)| {
                let parts: Vec<String> = [power("q", *qe), power("z", *ze as i64)]
                    .into_iter()
                    .filter(|p| !p.is_empty())
                    .collect();
                (c, parts.join("*"))
            }),
        )
    }
}

impl fmt::Debug for OcneanuValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Markov trace of a type A Hecke algebra with formal parameter `z`,
/// normalized by `τ(1) = 1`. Memoizes basis values.
pub struct OcneanuTrace<'h, 'a> {
    alg: &'h HeckeAlgebra<'a>,
    memo: HashMap<usize, OcneanuValue>,
}

impl<'h, 'a> OcneanuTrace<'h, 'a> {
    pub fn new(alg: &'h HeckeAlgebra<'a>) -> Result<Self> {
        let sys = alg.system();
        if !sys.is_type_a_path() {
            return Err(Error::NotTypeA(sys.name()));
        }
        Ok(Self {
            alg,
            memo: HashMap::new(),
        })
    }

    pub fn trace(&mut self, h: &HeckeElement) -> Result<OcneanuValue> {
        let mut total = OcneanuValue::zero();
        for (w, c) in h.terms() {
            let v = self.basis_trace(w)?;
            total = &total + &(&OcneanuValue::from_laurent(c) * &v);
        }
        Ok(total)
    }

    /// `τ(T_w)`. With `g` the largest letter of `w`, write `w = x·g·v`
    /// with `x, v` in the parabolic subgroup on letters `< g` (in type A the
    /// minimal coset representative contains `g` exactly once). Then
    /// `τ(T_x T_g T_v) = τ(T_v T_x T_g) = z·τ(T_v T_x)`.
    fn basis_trace(&mut self, w: usize) -> Result<OcneanuValue> {
        if let Some(v) = self.memo.get(&w) {
            return Ok(v.clone());
        }
        let table = self.alg.table();
        let value = match table.word(w).iter().max() {
            None => OcneanuValue::one(),
            Some(&g) => {
                let mut u = w;
                let mut v_word: Vec<usize> = Vec::new();
                'strip: loop {
                    for s in 0..g {
                        let us = table.right_mul(u, s).expect("descent stays in table");
                        if table.length(us) < table.length(u) {
                            u = us;
                            v_word.insert(0, s);
                            continue 'strip;
                        }
                    }
                    break;
                }
                let x = table.right_mul(u, g).expect("descent stays in table");
                if table.length(x) >= table.length(u) || table.word(x).contains(&g) {
                    return Err(Error::NotTypeA(format!(
                        "unexpected coset representative {:?}",
                        table.word(u)
                    )));
                }
                let tv = self.alg.basis_of_word(&v_word)?;
                let vx = self.alg.multiply(&tv, &self.alg.basis(x))?;
                &OcneanuValue::z() * &self.trace(&vx)?
            }
        };
        self.memo.insert(w, value.clone());
        Ok(value)
    }
}

/// `τ(h)` for `h` in the Hecke algebra of type `A_{strands−1}`.
pub fn ocneanu_trace(alg: &HeckeAlgebra<'_>, h: &HeckeElement) -> Result<OcneanuValue> {
    OcneanuTrace::new(alg)?.trace(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    #[test]
    fn small_values() {
        let sys = CoxeterSystem::preset("A2").unwrap();
        let alg = HeckeAlgebra::new(&sys, 6).unwrap();
        let mut tau = OcneanuTrace::new(&alg).unwrap();
        assert_eq!(tau.trace(&alg.one()).unwrap(), OcneanuValue::one());
        for s in 0..2 {
            let t = alg.basis_of_word(&[s]).unwrap();
            assert_eq!(tau.trace(&t).unwrap(), OcneanuValue::z());
        }
        // z((q−1)z + q) = (q−1)z² + qz
        let w0 = alg.basis_of_word(&[0, 1, 0]).unwrap();
        assert_eq!(tau.trace(&w0).unwrap().to_string(), "-z^2 + q*z + q*z^2");
    }

    #[test]
    fn trefoil_trace() {
        let sys = CoxeterSystem::preset("A1").unwrap();
        let alg = HeckeAlgebra::new(&sys, 2).unwrap();
        let h = alg.normal_form(&"1 1 1".parse().unwrap()).unwrap();
        let v = ocneanu_trace(&alg, &h).unwrap();
        // (q² − q + 1)z + q² − q
        assert_eq!(v.to_string(), "z - q - q*z + q^2 + q^2*z");
    }

    #[test]
    fn rejects_other_types() {
        let sys = CoxeterSystem::preset("B2").unwrap();
        let alg = HeckeAlgebra::new(&sys, 4).unwrap();
        assert!(matches!(OcneanuTrace::new(&alg), Err(Error::NotTypeA(_))));
    }
}
