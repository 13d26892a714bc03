//! Built-in invariant checks run by `krtrace selftest`.

use serde::Serialize;

use crate::bimodule::{BSBimodule, Monomial, MultiPoly};
use crate::coxeter::{CoxeterSystem, Label, Target, PRESETS};
use crate::error::Result;
use crate::hecke::{
    all_pass, hecke_check, homfly, inverse_check, markov_check, ocneanu_trace, trace_of_hecke,
    trace_property_check, HeckeAlgebra, HomflyValue,
};
use crate::homology::{ehr_reconstruct, hh_dims, koszul_homology};
use crate::scalars::{minpoly_2cos, AlgebraicScalar, NumberField, RatPoly, ScalarMatrix};
use crate::trace::{BraidWord, TraceEngine, TraceValue};

#[derive(Clone, Debug, Serialize)]
pub struct SelfTestResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

type Check = (&'static str, fn(usize) -> Result<bool>);

const CHECKS: &[Check] = &[
    ("scalars.minpoly", check_minpolys),
    ("scalars.field_laws", check_field_laws),
    ("scalars.rank", check_rank),
    ("coxeter.relations", check_relations),
    ("coxeter.invariant_split", check_invariant_split),
    ("coxeter.element_tables", check_element_tables),
    ("bimodule.commuting_actions", check_commuting),
    ("bimodule.graded_dims", check_graded_dims),
    ("homology.closed_forms", check_closed_forms),
    ("homology.koszul", check_koszul),
    ("trace.normalization", check_normalization),
    ("trace.single_letters", check_single_letters),
    ("trace.inverse", check_inverse),
    ("trace.hecke_property", check_hecke),
    ("trace.trace_property", check_trace_property),
    ("hecke.markov", check_markov),
    ("hecke.type_a_oracle", check_oracle),
    ("hecke.homfly", check_homfly),
];

/// Runs every check with the given truncation degree.
pub fn run_selftest(truncation: usize) -> Vec<SelfTestResult> {
    CHECKS
        .iter()
        .map(|(name, f)| {
            let (pass, detail) = match f(truncation) {
                Ok(true) => (true, String::new()),
                Ok(false) => (false, "identity failed".to_string()),
                Err(e) => (false, e.to_string()),
            };
            SelfTestResult {
                name: name.to_string(),
                pass,
                detail,
            }
        })
        .collect()
}

fn presets() -> Result<Vec<CoxeterSystem>> {
    PRESETS.iter().map(|p| CoxeterSystem::preset(p)).collect()
}

fn check_minpolys(_: usize) -> Result<bool> {
    let cases: [(u32, &[i64]); 4] = [
        (2, &[0, 1]),
        (3, &[-1, 1]),
        (4, &[-2, 0, 1]),
        (5, &[-1, -1, 1]),
    ];
    Ok(cases
        .iter()
        .all(|(n, c)| minpoly_2cos(*n) == RatPoly::from_i64(c)))
}

fn check_field_laws(_: usize) -> Result<bool> {
    let mut ok = true;
    for order in [4, 5, 12] {
        let f = NumberField::get(order);
        let th = f.theta();
        let elems: Vec<AlgebraicScalar> = (-2..=2)
            .flat_map(|a| (-2..=2).map(move |b| (a, b)))
            .map(|(a, b)| {
                &AlgebraicScalar::from_i64(f, a) + &(&th * &AlgebraicScalar::from_i64(f, b))
            })
            .collect();
        for a in &elems {
            if let Some(inv) = a.inv() {
                ok &= (a * &inv).is_one();
            } else {
                ok &= a.is_zero();
            }
            for b in elems.iter().step_by(3) {
                let c = &th + b;
                ok &= a * &(b + &c) == &(a * b) + &(a * &c);
                ok &= &(a + b) + &c == a + &(b + &c);
            }
        }
    }
    Ok(ok)
}

fn check_rank(_: usize) -> Result<bool> {
    let f = NumberField::get(4);
    let th = f.theta();
    let two = AlgebraicScalar::from_i64(f, 2);
    let one = AlgebraicScalar::one(f);
    let m = ScalarMatrix::from_rows(f, vec![vec![th.clone(), two], vec![one, th]]);
    Ok(m.rank() == 1 && m.transpose().rank() == 1)
}

fn check_relations(_: usize) -> Result<bool> {
    let mut ok = true;
    for sys in presets()? {
        let n = sys.rank();
        for s in 0..n {
            let r = sys.reflection_action(s, Target::V);
            ok &= (r * r).is_identity();
            for t in 0..n {
                if let Label::Finite(m) = sys.label(s, t) {
                    ok &= (r * sys.reflection_action(t, Target::V))
                        .pow(m)
                        .is_identity();
                }
            }
            let u = sys.root_form(s).to_vec();
            let su = sys.act_covector(s, &u);
            ok &= su.iter().zip(&u).all(|(a, b)| (a + b).is_zero());
        }
    }
    Ok(ok)
}

fn check_invariant_split(_: usize) -> Result<bool> {
    let mut ok = true;
    for name in ["A2", "B2", "H3"] {
        let sys = CoxeterSystem::preset(name)?;
        let n = sys.rank();
        let f = sys.field();
        let th = f.theta();
        for d in 0..=4u32 {
            let mut poly = MultiPoly::zero(f, n);
            for (i, m) in Monomial::of_degree(n, d).into_iter().enumerate() {
                let c = &AlgebraicScalar::from_i64(f, i as i64 - 2) + &th;
                poly.add_term(m, &c);
            }
            for s in 0..n {
                let (a, b) = sys.invariant_split(&poly, s)?;
                ok &= &a + &(&sys.root_form_poly(s) * &b) == poly;
                ok &= sys.act(s, &a) == a && sys.act(s, &b) == b;
            }
        }
    }
    Ok(ok)
}

fn check_element_tables(_: usize) -> Result<bool> {
    let counts = [
        ("A1", 5, 2),
        ("A2", 3, 6),
        ("A3", 6, 24),
        ("B3", 9, 48),
        ("H3", 15, 120),
        ("Atilde1", 4, 9),
    ];
    for (name, bound, want) in counts {
        if CoxeterSystem::preset(name)?.element_table(bound)?.len() != want {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_commuting(_: usize) -> Result<bool> {
    for (name, word) in [
        ("A2", &[0usize, 1, 0][..]),
        ("H2", &[1, 0]),
        ("B3", &[0, 2, 1]),
    ] {
        let sys = CoxeterSystem::preset(name)?;
        let theta = BSBimodule::build(&sys, word)?;
        for i in 0..sys.rank() {
            for j in 0..i {
                let (a, b) = (theta.right_action(i), theta.right_action(j));
                if a.mul(b) != b.mul(a) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn check_graded_dims(_: usize) -> Result<bool> {
    let sys = CoxeterSystem::preset("A3")?;
    let theta = BSBimodule::build(&sys, &[0, 1, 2])?;
    // coefficient of q^d in (1+q)^3/(1−q)^3
    Ok((0..8i64).all(|d| {
        let want: usize = (0..=3)
            .map(|k| crate::bimodule::binomial(3, k as usize) * Monomial::count(3, d - k))
            .sum();
        theta.graded_dim(d) == want
    }))
}

fn check_closed_forms(truncation: usize) -> Result<bool> {
    let mut ok = true;
    for name in ["A1", "A2", "B2", "A3"] {
        let sys = CoxeterSystem::preset(name)?;
        let n = sys.rank() as u32;
        let engine = TraceEngine::new(&sys, truncation, None);
        let one_tq = &TraceValue::one() + &(&TraceValue::q() * &TraceValue::t());
        ok &= engine.ehr_numerator(&[], 4)? == one_tq.pow(n);
        let tq2 = &TraceValue::one() + &(&TraceValue::q().pow(2) * &TraceValue::t());
        for s in 0..sys.rank() {
            ok &= engine.ehr_numerator(&[s], 5)? == &tq2 * &one_tq.pow(n - 1);
        }
        let theta = BSBimodule::build(&sys, &[0])?;
        let table = hh_dims(&theta, sys.field(), truncation)?;
        ok &= table.euler_consistent() && table.dims[0][0] == 1;
        ok &= ehr_reconstruct(&table, 4).certified;
    }
    Ok(ok)
}

fn check_koszul(truncation: usize) -> Result<bool> {
    let q = NumberField::rationals();
    let gens: Vec<MultiPoly> = (0..2).map(|i| MultiPoly::var(q, 2, i)).collect();
    let t = koszul_homology(q, 2, &gens, truncation.min(8))?;
    let regular =
        t.dims[0].iter().skip(1).all(|&d| d == 0) && t.dims[1..].iter().flatten().all(|&d| d == 0);
    let z = koszul_homology(q, 1, &[MultiPoly::zero(q, 1)], 4)?;
    Ok(regular && t.dims[0][0] == 1 && z.dims == vec![vec![1; 5], vec![1; 5]])
}

fn check_normalization(truncation: usize) -> Result<bool> {
    for sys in presets()? {
        if TraceEngine::new(&sys, truncation, None).kr_trace(&BraidWord::default())?
            != TraceValue::one()
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_single_letters(truncation: usize) -> Result<bool> {
    let z = TraceValue::markov_z();
    let inv = (&z - &(&TraceValue::q() - &TraceValue::one())).mul_q_pow(-1);
    for sys in presets()? {
        let engine = TraceEngine::new(&sys, truncation, None);
        for s in 0..sys.rank() {
            let g = (s + 1) as i64;
            if engine.kr_trace_str(&g.to_string())? != z
                || engine.kr_trace_str(&(-g).to_string())? != inv
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_inverse(truncation: usize) -> Result<bool> {
    for sys in presets()? {
        if !all_pass(&inverse_check(&TraceEngine::new(&sys, truncation, None))?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_hecke(truncation: usize) -> Result<bool> {
    for name in ["A2", "H2", "B3"] {
        let sys = CoxeterSystem::preset(name)?;
        if !all_pass(&hecke_check(&TraceEngine::new(&sys, truncation, None), 1)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_trace_property(truncation: usize) -> Result<bool> {
    let sys = CoxeterSystem::preset("A2")?;
    Ok(all_pass(&trace_property_check(
        &TraceEngine::new(&sys, truncation, None),
        3,
    )?))
}

fn check_markov(truncation: usize) -> Result<bool> {
    for name in ["A2", "B2", "H2", "Atilde1", "A3"] {
        let sys = CoxeterSystem::preset(name)?;
        let engine = TraceEngine::new(&sys, truncation, None);
        for s in 0..sys.rank() {
            if !all_pass(&markov_check(&engine, s, 2)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_oracle(truncation: usize) -> Result<bool> {
    let sys = CoxeterSystem::preset("A2")?;
    let alg = HeckeAlgebra::new(&sys, 6)?;
    let engine = TraceEngine::new(&sys, truncation, None);
    let z = TraceValue::markov_z();
    for w in 0..alg.table().len() {
        let h = alg.basis(w);
        if trace_of_hecke(&engine, &alg, &h)? != ocneanu_trace(&alg, &h)?.substitute(&z) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_homfly(_: usize) -> Result<bool> {
    let trefoil = homfly(2, &"1 1 1".parse()?, 12)?;
    let want = HomflyValue::from_terms(&[(1, -2, 2), (1, -2, -2), (-1, -4, 0)], 0);
    let stabilized = homfly(3, &"1 1 1 2".parse()?, 12)?;
    let conjugated = homfly(3, &"2 1 1 2 -1 1 -2".parse()?, 12)?;
    Ok(homfly(1, &BraidWord::default(), 12)? == HomflyValue::one()
        && trefoil == want
        && stabilized == want
        && conjugated == homfly(3, &"1 1 2 -1 1".parse()?, 12)?)
}
