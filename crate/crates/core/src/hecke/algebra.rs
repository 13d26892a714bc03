use std::collections::BTreeMap;
use std::fmt;

use crate::coxeter::{CoxeterSystem, GroupElementTable};
use crate::error::{Error, Result};
use crate::trace::BraidWord;

use super::laurent::LaurentPoly;

pub const DEFAULT_LENGTH_BOUND: usize = 12;

/// The Hecke algebra of a Coxeter system, restricted to elements of length
/// at most the bound of its element table.
pub struct HeckeAlgebra<'a> {
    sys: &'a CoxeterSystem,
    table: GroupElementTable,
}

/// `Σ c_w T_w`, keyed by element index in the algebra's table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HeckeElement(BTreeMap<usize, LaurentPoly>);

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.0.iter().map(|(w, c)| (*w, c))
    }

    pub fn coeff(&self, w: usize) -> LaurentPoly {
        self.0.get(&w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, w: usize, c: &LaurentPoly) {
        let slot = self.0.entry(w).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, d) in self.terms() {
            out.add_term(w, &(c * d));
        }
        out
    }
}

impl<'a> HeckeAlgebra<'a> {
    pub fn new(sys: &'a CoxeterSystem, length_bound: usize) -> Result<Self> {
        Ok(Self {
            sys,
            table: sys.element_table(length_bound)?,
        })
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    pub fn table(&self) -> &GroupElementTable {
        &self.table
    }

    /// Canonical reduced word of the basis element `T_w`.
    pub fn word(&self, w: usize) -> &[usize] {
        self.table.word(w)
    }

    pub fn one(&self) -> HeckeElement {
        self.basis(0)
    }

    pub fn basis(&self, w: usize) -> HeckeElement {
        let mut h = HeckeElement::zero();
        h.add_term(w, &LaurentPoly::one());
        h
    }

    /// `T_w` for a reduced word; fails if the word is not reduced.
    pub fn basis_of_word(&self, word: &[usize]) -> Result<HeckeElement> {
        let w = self.table.element_of_word(word)?;
        if self.table.length(w) != word.len() {
            return Err(Error::Input(format!("word {word:?} is not reduced")));
        }
        Ok(self.basis(w))
    }

    /// `h·T_s`: `T_w T_s = T_{ws}` if `ℓ(ws) > ℓ(w)`, else
    /// `(q−1)T_w + q T_{ws}`.
    pub fn mul_generator(&self, h: &HeckeElement, s: usize) -> Result<HeckeElement> {
        let q = LaurentPoly::q_pow(1);
        let qm1 = &q - &LaurentPoly::one();
        let mut out = HeckeElement::zero();
        for (w, c) in h.terms() {
            let ws = self
                .table
                .right_mul(w, s)
                .ok_or(Error::LengthBoundExceeded(self.table.bound()))?;
            if self.table.length(ws) > self.table.length(w) {
                out.add_term(ws, c);
            } else {
                out.add_term(w, &(&qm1 * c));
                out.add_term(ws, &(&q * c));
            }
        }
        Ok(out)
    }

    /// `h·T_s⁻¹ = q⁻¹ h T_s + (q⁻¹ − 1) h`.
    pub fn mul_generator_inverse(&self, h: &HeckeElement, s: usize) -> Result<HeckeElement> {
        let qi = LaurentPoly::q_pow(-1);
        let hs = self.mul_generator(h, s)?.scale(&qi);
        Ok(hs.add(&h.scale(&(&qi - &LaurentPoly::one()))))
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero();
        for (v, c) in b.terms() {
            let mut acc = a.scale(c);
            for &s in self.table.word(v) {
                acc = self.mul_generator(&acc, s)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Image of a braid word under `σ_s ↦ T_s`.
    pub fn normal_form(&self, w: &BraidWord) -> Result<HeckeElement> {
        w.check_rank(self.sys.rank())?;
        let mut h = self.one();
        for l in w.letters() {
            h = if l.inverse {
                self.mul_generator_inverse(&h, l.gen)?
            } else {
                self.mul_generator(&h, l.gen)?
            };
        }
        Ok(h)
    }

    /// Text form such as `(-1 + q)*T[1] + q*T[]`, 1-based letters.
    pub fn display(&self, h: &HeckeElement) -> String {
        if h.is_zero() {
            return "0".into();
        }
        h.terms()
            .map(|(w, c)| {
                let letters: Vec<String> =
                    self.word(w).iter().map(|g| (g + 1).to_string()).collect();
                format!("({c})*T[{}]", letters.join(" "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(w, c)| format!("({c})*T#{w}")).collect();
        write!(
            f,
            "{}",
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        )
    }
}
