use serde::Serialize;

use crate::error::Result;
use crate::trace::{BraidWord, Letter, TraceEngine, TraceValue};

use super::algebra::{HeckeAlgebra, HeckeElement};

/// One checked identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckCase {
    pub word: String,
    pub lhs: TraceValue,
    pub rhs: TraceValue,
    pub pass: bool,
}

impl CheckCase {
    fn new(word: String, lhs: TraceValue, rhs: TraceValue) -> Self {
        let pass = lhs == rhs;
        Self {
            word,
            lhs,
            rhs,
            pass,
        }
    }
}

pub fn all_pass(cases: &[CheckCase]) -> bool {
    cases.iter().all(|c| c.pass)
}

/// `Σ_w c_w(q)·⟨canonical word of w⟩`.
pub fn trace_of_hecke(
    engine: &TraceEngine<'_>,
    alg: &HeckeAlgebra<'_>,
    h: &HeckeElement,
) -> Result<TraceValue> {
    let mut total = TraceValue::zero();
    for (w, c) in h.terms() {
        let v = engine.kr_trace(&BraidWord::positive(alg.word(w)))?;
        total = &total + &(&c.to_trace_value() * &v);
    }
    Ok(total)
}

/// `⟨b·σ_s⟩ = z·⟨b⟩` for every signed word `b` of length `≤ max_len`
/// avoiding `s`, with `z = tq(q−1)/(tq+1)`.
pub fn markov_check(engine: &TraceEngine<'_>, s: usize, max_len: usize) -> Result<Vec<CheckCase>> {
    markov_check_with(engine, s, max_len, &TraceValue::markov_z())
}

/// As [`markov_check`] with an arbitrary candidate parameter `z`.
pub fn markov_check_with(
    engine: &TraceEngine<'_>,
    s: usize,
    max_len: usize,
    z: &TraceValue,
) -> Result<Vec<CheckCase>> {
    let n = engine.system().rank();
    BraidWord::new(vec![Letter::pos(s)]).check_rank(n)?;
    let others: Vec<usize> = (0..n).filter(|&t| t != s).collect();
    BraidWord::enumerate_up_to(&others, max_len, true)
        .into_iter()
        .map(|b| {
            let lhs = engine.kr_trace(&b.concat(&BraidWord::new(vec![Letter::pos(s)])))?;
            let rhs = z * &engine.kr_trace(&b)?;
            Ok(CheckCase::new(b.to_string(), lhs, rhs))
        })
        .collect()
}

/// `⟨a·σ_s⟩ = q⟨a·σ_s⁻¹⟩ + (q−1)⟨a⟩` for all signed words `a` of length
/// `≤ max_len` and all generators `s`. Cases are labelled by `a·σ_s`.
pub fn hecke_check(engine: &TraceEngine<'_>, max_len: usize) -> Result<Vec<CheckCase>> {
    let n = engine.system().rank();
    let gens: Vec<usize> = (0..n).collect();
    let q = TraceValue::q();
    let qm1 = &q - &TraceValue::one();
    let mut out = Vec::new();
    for a in BraidWord::enumerate_up_to(&gens, max_len, true) {
        let base = engine.kr_trace(&a)?;
        for s in 0..n {
            let pos = a.concat(&BraidWord::new(vec![Letter::pos(s)]));
            let neg = a.concat(&BraidWord::new(vec![Letter::neg(s)]));
            let lhs = engine.kr_trace(&pos)?;
            let rhs = &(&q * &engine.kr_trace(&neg)?) + &(&qm1 * &base);
            out.push(CheckCase::new(pos.to_string(), lhs, rhs));
        }
    }
    Ok(out)
}

/// `⟨ab⟩ = ⟨ba⟩` for every split of every signed word of length
/// `≤ max_len`. Cases are labelled `"a | b"`.
pub fn trace_property_check(engine: &TraceEngine<'_>, max_len: usize) -> Result<Vec<CheckCase>> {
    let n = engine.system().rank();
    let gens: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for w in BraidWord::enumerate_up_to(&gens, max_len, true) {
        if w.len() < 2 {
            continue;
        }
        let lhs = engine.kr_trace(&w)?;
        for k in 1..w.len() {
            let a = BraidWord::new(w.letters()[..k].to_vec());
            let b = BraidWord::new(w.letters()[k..].to_vec());
            let rhs = engine.kr_trace(&b.concat(&a))?;
            out.push(CheckCase::new(format!("{a} | {b}"), lhs.clone(), rhs));
        }
    }
    Ok(out)
}

/// `⟨σ_sσ_s⁻¹⟩ = ⟨σ_s⁻¹σ_s⟩ = 1` for every generator.
pub fn inverse_check(engine: &TraceEngine<'_>) -> Result<Vec<CheckCase>> {
    let mut out = Vec::new();
    for s in 0..engine.system().rank() {
        for w in [
            BraidWord::new(vec![Letter::pos(s), Letter::neg(s)]),
            BraidWord::new(vec![Letter::neg(s), Letter::pos(s)]),
        ] {
            out.push(CheckCase::new(
                w.to_string(),
                engine.kr_trace(&w)?,
                TraceValue::one(),
            ));
        }
    }
    Ok(out)
}
