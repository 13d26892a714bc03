use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::bimodule::BSBimodule;
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::homology::{ehr_reconstruct, hh_dims, EhrValue, GradedDimTable};

use super::braid::{expand_braid, BraidWord};
use super::value::TraceValue;

pub const DEFAULT_TRUNCATION: usize = 16;

type Slot = Arc<OnceLock<Result<Arc<GradedDimTable>>>>;

/// Evaluates `⟨σ⟩_V` for braid words of one Coxeter system, memoizing the
/// Hochschild tables of Bott–Samelson words. Each table is computed once,
/// by whichever thread asks first; concurrent readers wait for it.
pub struct TraceEngine<'a> {
    sys: &'a CoxeterSystem,
    truncation: usize,
    margin: Option<usize>,
    cache: Mutex<HashMap<Vec<usize>, Slot>>,
}

impl<'a> TraceEngine<'a> {
    /// `margin = None` certifies each trace with margin `4 + word length`.
    pub fn new(sys: &'a CoxeterSystem, truncation: usize, margin: Option<usize>) -> Self {
        Self {
            sys,
            truncation,
            margin,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn margin_for(&self, word_len: usize) -> usize {
        self.margin.unwrap_or(4 + word_len)
    }

    /// Hochschild table of `Θ_word`, cached.
    pub fn table(&self, word: &[usize]) -> Result<Arc<GradedDimTable>> {
        let slot = {
            let mut cache = self.cache.lock().expect("cache lock");
            cache.entry(word.to_vec()).or_default().clone()
        };
        slot.get_or_init(|| {
            let theta = BSBimodule::build(self.sys, word)?;
            hh_dims(&theta, self.sys.field(), self.truncation).map(Arc::new)
        })
        .clone()
    }

    /// `ehr(Θ_word)`, failing unless certified with the given margin.
    pub fn ehr(&self, word: &[usize], margin: usize) -> Result<EhrValue> {
        let table = self.table(word)?;
        let e = ehr_reconstruct(&table, margin);
        if !e.certified {
            return Err(Error::TruncationInsufficient {
                word: word.iter().map(|g| g + 1).collect(),
                truncation: self.truncation,
                margin,
            });
        }
        Ok(e)
    }

    /// `ehr(Θ_word)·(1−q)^n` as a trace value `Σ_j N_j t^j`.
    pub fn ehr_numerator(&self, word: &[usize], margin: usize) -> Result<TraceValue> {
        let e = self.ehr(word, margin)?;
        Ok(TraceValue::from_terms(
            e.terms()
                .into_iter()
                .map(|(c, qe, te)| (BigRational::from_integer(BigInt::from(c)), qe as i64, te)),
            0,
            0,
        ))
    }

    /// `⟨w⟩ = Σ (−1)^i q^{−shift} N_subword(q, t) / (1+tq)^n` over the
    /// expansion of `w`.
    pub fn kr_trace(&self, w: &BraidWord) -> Result<TraceValue> {
        w.check_rank(self.sys.rank())?;
        let margin = self.margin_for(w.len());
        // group terms by subword: coefficient Σ ± q^{−shift}, keyed by shift
        let mut grouped: BTreeMap<Vec<usize>, BTreeMap<u32, i64>> = BTreeMap::new();
        for term in expand_braid(w) {
            let sign = if term.hom_degree.rem_euclid(2) == 0 {
                1
            } else {
                -1
            };
            *grouped
                .entry(term.subword)
                .or_default()
                .entry(term.q_shift)
                .or_default() += sign;
        }
        let words: Vec<&Vec<usize>> = grouped.keys().collect();
        let numerators: Vec<Result<TraceValue>> = words
            .par_iter()
            .map(|word| self.ehr_numerator(word, margin))
            .collect();
        let mut total = TraceValue::zero();
        for ((_, coeffs), num) in grouped.iter().zip(numerators) {
            let num = num?;
            let coeff = TraceValue::from_terms(
                coeffs.iter().filter(|(_, &c)| c != 0).map(|(&shift, &c)| {
                    (
                        BigRational::from_integer(BigInt::from(c)),
                        -(shift as i64),
                        0,
                    )
                }),
                0,
                0,
            );
            if !coeff.is_zero() {
                total = &total + &(&coeff * &num);
            }
        }
        let n = self.sys.rank() as u32;
        Ok(&total * &TraceValue::from_terms([(BigRational::from_integer(1.into()), 0, 0)], 0, n))
    }

    /// `kr_trace` of a word given as text.
    pub fn kr_trace_str(&self, w: &str) -> Result<TraceValue> {
        self.kr_trace(&w.parse()?)
    }

    /// Number of distinct Bott–Samelson words evaluated so far.
    pub fn cached_words(&self) -> usize {
        self.cache.lock().expect("cache lock").len()
    }
}
