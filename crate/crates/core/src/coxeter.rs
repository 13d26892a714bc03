//! Coxeter systems and their geometric representation.
//!
//! `V` has basis `e_s`, with the bilinear form `B(e_s, e_t) = −cos(π/m_st)`
//! (`−1` for `m_st = ∞`). Generators act by `s(v) = v − 2B(v, e_s)e_s`, and on
//! the coordinate ring `R = S(V*) = K[x_1, …, x_n]` by `(s·f)(v) = f(s·v)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use crate::bimodule::MultiPoly;
use crate::error::{Error, Result};
use crate::scalars::{
    field_order_for_labels, rank_nullspace, AlgebraicScalar, NumberField, ScalarMatrix,
};

/// Coxeter label; `Infinite` is written as `0` in input files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    fn from_input(m: i64) -> Self {
        if m == 0 {
            Label::Infinite
        } else {
            Label::Finite(m as u32)
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone)]
pub struct CoxeterSystem {
    name: Option<String>,
    rank: usize,
    labels: Vec<Vec<Label>>,
    field: &'static NumberField,
    form: ScalarMatrix,
    on_v: Vec<ScalarMatrix>,
    on_vdual: Vec<ScalarMatrix>,
    root_forms: Vec<Vec<AlgebraicScalar>>,
}

/// JSON input: `{"rank": n, "m": [[...]]}` with `0` meaning ∞.
#[derive(Debug, Deserialize)]
pub struct CoxeterSpec {
    pub rank: usize,
    pub m: Vec<Vec<i64>>,
}

pub const PRESETS: &[&str] = &["A1", "A2", "A3", "B2", "B3", "H2", "H3", "Atilde1"];

impl CoxeterSystem {
    /// Validates a Coxeter matrix and builds the geometric representation.
    pub fn new(m: &[Vec<i64>]) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::InvalidCoxeter("rank must be at least 1".into()));
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCoxeter(format!(
                    "row {} has length {}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != 1 {
                return Err(Error::InvalidCoxeter("diagonal entries must be 1".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if m[j][i] != v {
                    return Err(Error::InvalidCoxeter("matrix is not symmetric".into()));
                }
                if i != j && (v == 1 || v < 0) {
                    return Err(Error::InvalidCoxeter(
                        "off-diagonal entry must be ≥ 2 or ∞".into(),
                    ));
                }
            }
        }
        let labels: Vec<Vec<Label>> = m
            .iter()
            .map(|row| row.iter().map(|&v| Label::from_input(v)).collect())
            .collect();
        let order = field_order_for_labels(labels.iter().flatten().filter_map(|l| match l {
            Label::Finite(m) => Some(*m),
            Label::Infinite => None,
        }));
        let field = NumberField::get(order);

        let mut form = ScalarMatrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                let b = match labels[i][j] {
                    Label::Infinite => AlgebraicScalar::from_i64(field, -1),
                    Label::Finite(1) => AlgebraicScalar::one(field),
                    Label::Finite(mm) => -field.cos_pi_over(mm),
                };
                form.set(i, j, b);
            }
        }

        let two = AlgebraicScalar::from_i64(field, 2);
        let mut on_v = Vec::with_capacity(n);
        for s in 0..n {
            // column t holds s(e_t) = e_t − 2B(e_t, e_s)e_s
            let mut mat = ScalarMatrix::identity(field, n);
            for t in 0..n {
                let v = mat.get(s, t) - &(&two * form.get(t, s));
                mat.set(s, t, v);
            }
            on_v.push(mat);
        }
        let on_vdual = on_v.iter().map(ScalarMatrix::transpose).collect();
        let root_forms = (0..n)
            .map(|s| (0..n).map(|t| form.get(t, s).clone()).collect())
            .collect();

        Ok(Self {
            name: None,
            rank: n,
            labels,
            field,
            form,
            on_v,
            on_vdual,
            root_forms,
        })
    }

    pub fn from_spec(spec: &CoxeterSpec) -> Result<Self> {
        if spec.m.len() != spec.rank {
            return Err(Error::InvalidCoxeter(format!(
                "rank {} but matrix has {} rows",
                spec.rank,
                spec.m.len()
            )));
        }
        Self::new(&spec.m)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CoxeterSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidCoxeter(e.to_string()))?;
        Self::from_spec(&spec)
    }

    /// Named presets: A1, A2, A3, B2, B3, H2, H3 and Atilde1 (`m = ∞`).
    pub fn preset(name: &str) -> Result<Self> {
        let m: Vec<Vec<i64>> = match name {
            "A1" => vec![vec![1]],
            "A2" => line(&[3]),
            "A3" => line(&[3, 3]),
            "B2" => line(&[4]),
            "B3" => line(&[4, 3]),
            "H2" => line(&[5]),
            "H3" => line(&[5, 3]),
            "Atilde1" => line(&[0]),
            _ => return Err(Error::UnknownPreset(name.to_string())),
        };
        let mut sys = Self::new(&m)?;
        sys.name = Some(name.to_string());
        Ok(sys)
    }

    /// Type `A_k` (the symmetric group on `k + 1` letters).
    pub fn type_a(k: usize) -> Result<Self> {
        let labels = vec![3; k.saturating_sub(1)];
        let mut sys = Self::new(&line(&labels))?;
        sys.name = Some(format!("A{k}"));
        Ok(sys)
    }

    pub fn name(&self) -> String {
        self.name.clone().unwrap_or_else(|| {
            let rows: Vec<String> = self
                .labels
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            format!("[{}]", rows.join(";"))
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self, s: usize, t: usize) -> Label {
        self.labels[s][t]
    }

    pub fn field(&self) -> &'static NumberField {
        self.field
    }

    pub fn bilinear_form(&self) -> &ScalarMatrix {
        &self.form
    }

    pub fn check_generator(&self, s: usize) -> Result<()> {
        if s < self.rank {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                index: s + 1,
                rank: self.rank,
            })
        }
    }

    /// True when every off-diagonal label lies in {2, 3}, i.e. type A
    /// provided the diagram is a path.
    pub fn is_type_a_path(&self) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| {
                let expect = if i == j {
                    Label::Finite(1)
                } else if i.abs_diff(j) == 1 {
                    Label::Finite(3)
                } else {
                    Label::Finite(2)
                };
                self.labels[i][j] == expect
            })
        })
    }

    /// Matrix of `s` acting on `V` (`Target::V`) or on `V*`.
    pub fn reflection_action(&self, s: usize, target: Target) -> &ScalarMatrix {
        match target {
            Target::V => &self.on_v[s],
            Target::VDual => &self.on_vdual[s],
        }
    }

    /// Coefficients of the root form `u_s(v) = B(v, e_s)` in the basis `x_i`.
    pub fn root_form(&self, s: usize) -> &[AlgebraicScalar] {
        &self.root_forms[s]
    }

    pub fn root_form_poly(&self, s: usize) -> MultiPoly {
        MultiPoly::linear(self.field, &self.root_forms[s])
    }

    /// Images `s·x_i` of the coordinate functions.
    pub fn coordinate_images(&self, s: usize) -> Vec<MultiPoly> {
        let m = &self.on_v[s];
        (0..self.rank)
            .map(|i| MultiPoly::linear(self.field, m.row(i)))
            .collect()
    }

    /// `s·f` for a polynomial `f`.
    pub fn act(&self, s: usize, f: &MultiPoly) -> MultiPoly {
        f.substitute(&self.coordinate_images(s))
    }

    /// `s·f` for a covector given by coefficients.
    pub fn act_covector(&self, s: usize, f: &[AlgebraicScalar]) -> Vec<AlgebraicScalar> {
        self.on_vdual[s].mul_vec(f)
    }

    /// Splits `f = a + u_s·b` with `a`, `b` both `s`-invariant.
    pub fn invariant_split(&self, f: &MultiPoly, s: usize) -> Result<(MultiPoly, MultiPoly)> {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let sf = self.act(s, f);
        let a = (f + &sf).scale_rational(&half);
        let anti = (f - &sf).scale_rational(&half);
        // u_s has coefficient 1 on x_s
        let b = anti.div_linear(&self.root_form_poly(s), s)?;
        Ok((a, b))
    }

    /// A nonzero covector fixed by every generator other than `s`.
    pub fn invariant_vector(&self, s: usize) -> Vec<AlgebraicScalar> {
        let n = self.rank;
        let blocks: Vec<ScalarMatrix> = (0..n)
            .filter(|&t| t != s)
            .map(|t| self.on_vdual[t].sub(&ScalarMatrix::identity(self.field, n)))
            .collect();
        let stacked = ScalarMatrix::vstack(self.field, n, &blocks);
        let (_, basis) = rank_nullspace(&stacked);
        basis
            .into_iter()
            .next()
            .expect("n > n - 1 constraints leave a nonzero solution")
    }

    /// Basis of the `s`-invariant covectors, of dimension `n − 1`.
    pub fn invariant_covectors(&self, s: usize) -> Vec<Vec<AlgebraicScalar>> {
        let n = self.rank;
        let m = self.on_vdual[s].sub(&ScalarMatrix::identity(self.field, n));
        rank_nullspace(&m).1
    }

    /// Matrix on `V` of the element with the given word.
    pub fn word_matrix(&self, word: &[usize]) -> ScalarMatrix {
        word.iter()
            .fold(ScalarMatrix::identity(self.field, self.rank), |acc, &s| {
                &acc * &self.on_v[s]
            })
    }

    /// Breadth-first table of all elements of length `≤ bound`.
    pub fn element_table(&self, bound: usize) -> Result<GroupElementTable> {
        GroupElementTable::build(self, bound, DEFAULT_TABLE_CAP)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    V,
    VDual,
}

fn line(labels: &[i64]) -> Vec<Vec<i64>> {
    let n = labels.len() + 1;
    let mut m = vec![vec![2i64; n]; n];
    for i in 0..n {
        m[i][i] = 1;
    }
    for (i, &l) in labels.iter().enumerate() {
        m[i][i + 1] = l;
        m[i + 1][i] = l;
    }
    m
}

pub const DEFAULT_TABLE_CAP: usize = 200_000;

/// Elements of length `≤ bound`, each with its lexicographically least
/// reduced word.
#[derive(Clone, Debug)]
pub struct GroupElementTable {
    bound: usize,
    rank: usize,
    words: Vec<Vec<usize>>,
    matrices: Vec<ScalarMatrix>,
    by_matrix: HashMap<ScalarMatrix, usize>,
    by_word: HashMap<Vec<usize>, usize>,
    /// `right[i][s]`: index of `w_i·s` when it lies in the table.
    right: Vec<Vec<Option<usize>>>,
}

impl GroupElementTable {
    pub fn build(sys: &CoxeterSystem, bound: usize, cap: usize) -> Result<Self> {
        Self::build_with_order(sys, bound, cap, &(0..sys.rank()).collect::<Vec<_>>())
    }

    /// Same table, exploring generators in the given order. Canonical words
    /// are still the lexicographically least ones.
    pub fn build_with_order(
        sys: &CoxeterSystem,
        bound: usize,
        cap: usize,
        order: &[usize],
    ) -> Result<Self> {
        let n = sys.rank();
        let id = ScalarMatrix::identity(sys.field(), n);
        let mut words = vec![vec![]];
        let mut matrices = vec![id.clone()];
        let mut by_matrix = HashMap::from([(id, 0usize)]);
        let mut level: Vec<usize> = vec![0];
        for _len in 1..=bound {
            let mut next: Vec<usize> = Vec::new();
            for &i in &level {
                for &s in order {
                    let mut cand = words[i].clone();
                    cand.push(s);
                    let mat = &matrices[i] * sys.reflection_action(s, Target::V);
                    match by_matrix.get(&mat) {
                        Some(&j) => {
                            if words[j].len() == cand.len() && cand < words[j] {
                                words[j] = cand;
                            }
                        }
                        None => {
                            if words.len() >= cap {
                                return Err(Error::ResourceCap(format!(
                                    "element table exceeds {cap} entries"
                                )));
                            }
                            let j = words.len();
                            words.push(cand);
                            by_matrix.insert(mat.clone(), j);
                            matrices.push(mat);
                            next.push(j);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            level = next;
        }

        // sort by (length, word) so indices are independent of exploration order
        let mut perm: Vec<usize> = (0..words.len()).collect();
        perm.sort_by(|&a, &b| {
            words[a]
                .len()
                .cmp(&words[b].len())
                .then_with(|| words[a].cmp(&words[b]))
        });
        let words: Vec<Vec<usize>> = perm.iter().map(|&i| words[i].clone()).collect();
        let matrices: Vec<ScalarMatrix> = perm.iter().map(|&i| matrices[i].clone()).collect();
        let by_matrix: HashMap<ScalarMatrix, usize> = matrices
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let by_word = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let right = matrices
            .iter()
            .map(|m| {
                (0..n)
                    .map(|s| {
                        by_matrix
                            .get(&(m * sys.reflection_action(s, Target::V)))
                            .copied()
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            bound,
            rank: n,
            words,
            matrices,
            by_matrix,
            by_word,
            right,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn length(&self, i: usize) -> usize {
        self.words[i].len()
    }

    pub fn matrix(&self, i: usize) -> &ScalarMatrix {
        &self.matrices[i]
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn lookup_matrix(&self, m: &ScalarMatrix) -> Option<usize> {
        self.by_matrix.get(m).copied()
    }

    /// Index of the element whose canonical word is `w`.
    pub fn lookup_word(&self, w: &[usize]) -> Option<usize> {
        self.by_word.get(w).copied()
    }

    /// Index of `w_i·s`, or `None` if it is longer than the bound.
    pub fn right_mul(&self, i: usize, s: usize) -> Option<usize> {
        self.right[i][s]
    }

    /// Element represented by an arbitrary word, reducing letter by letter.
    pub fn element_of_word(&self, w: &[usize]) -> Result<usize> {
        let mut cur = 0;
        for &s in w {
            cur = self
                .right_mul(cur, s)
                .ok_or(Error::LengthBoundExceeded(self.bound))?;
        }
        Ok(cur)
    }

    /// Number of elements of each length `0..=bound`.
    pub fn length_profile(&self) -> Vec<usize> {
        let mut counts = vec![0; self.bound + 1];
        for w in &self.words {
            counts[w.len()] += 1;
        }
        counts
    }
}
