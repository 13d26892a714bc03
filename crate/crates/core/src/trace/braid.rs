use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One letter `σ_s^{±1}`; `gen` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Self {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: usize) -> Self {
        Self { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Self {
            inverse: !self.inverse,
            ..self
        }
    }
}

/// A braid word. The text form is whitespace-separated nonzero integers,
/// 1-based, with a minus sign for inverse letters: `"1 2 -1"`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord(pub Vec<Letter>);

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    /// Positive word with the given 0-based generators.
    pub fn positive(gens: &[usize]) -> Self {
        Self(gens.iter().map(|&g| Letter::pos(g)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of positive letters minus number of inverse letters.
    pub fn writhe(&self) -> i64 {
        self.0.iter().map(|l| if l.inverse { -1 } else { 1 }).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self([self.0.as_slice(), other.0.as_slice()].concat())
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Rejects letters outside `0..rank`.
    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|l| l.gen >= rank) {
            Some(l) => Err(Error::GeneratorOutOfRange {
                index: l.gen + 1,
                rank,
            }),
            None => Ok(()),
        }
    }

    /// All words of length exactly `len` in the given generators, in both
    /// signs, in lexicographic order of the text form.
    pub fn enumerate(gens: &[usize], len: usize, signed: bool) -> Vec<Self> {
        let mut alphabet: Vec<Letter> = gens.iter().map(|&g| Letter::pos(g)).collect();
        if signed {
            alphabet.extend(gens.iter().map(|&g| Letter::neg(g)));
        }
        let mut out = vec![Self::default()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Self(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length `≤ max_len`, shortest first.
    pub fn enumerate_up_to(gens: &[usize], max_len: usize, signed: bool) -> Vec<Self> {
        (0..=max_len)
            .flat_map(|k| Self::enumerate(gens, k, signed))
            .collect()
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|tok| {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::BraidParse(format!("not an integer: {tok:?}")))?;
                if v == 0 {
                    return Err(Error::BraidParse(
                        "generator index 0 (indices start at 1)".into(),
                    ));
                }
                Ok(Letter {
                    gen: (v.unsigned_abs() - 1) as usize,
                    inverse: v < 0,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                let g = l.gen as i64 + 1;
                (if l.inverse { -g } else { g }).to_string()
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// One summand of the tensor product of the two-term complexes of the
/// letters: a Bott–Samelson bimodule in a given homological degree with a
/// grading shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub subword: Vec<usize>,
    pub hom_degree: i64,
    pub q_shift: u32,
}

/// The `2^k` terms, one per subset `A` of positions, listed by the subset
/// read as a binary number (first position most significant, bit set when
/// the position is *not* in `A`).
pub fn expand_braid(w: &BraidWord) -> Vec<ExpansionTerm> {
    let k = w.len();
    (0..1usize << k)
        .map(|mask| {
            let mut term = ExpansionTerm {
                subword: Vec::new(),
                hom_degree: 0,
                q_shift: 0,
            };
            for (i, l) in w.0.iter().enumerate() {
                let dropped = mask >> (k - 1 - i) & 1 == 1;
                match (dropped, l.inverse) {
                    (false, false) => term.subword.push(l.gen),
                    (false, true) => {
                        term.subword.push(l.gen);
                        term.q_shift += 1;
                    }
                    (true, false) => term.hom_degree += 1,
                    (true, true) => term.hom_degree -= 1,
                }
            }
            term
        })
        .collect()
}
