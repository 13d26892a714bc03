use serde::Serialize;

use crate::bimodule::{BSBimodule, MultiPoly, PolyMatrix};
use crate::error::{Error, Result};
use crate::scalars::NumberField;

use super::complex::{koszul_on_operators, FreeComplex};

/// Largest total dimension of a single chain space `C_{j,d}` that
/// [`hh_dims`] is willing to handle.
pub const DEFAULT_CHAIN_CAP: usize = 2_000_000;

/// `dims[j][d] = dim H_j` in internal degree `d`, for `0 ≤ j ≤ n`, `0 ≤ d ≤ D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDimTable {
    pub n: usize,
    pub truncation: usize,
    pub dims: Vec<Vec<usize>>,
    /// `chain_dims[j][d] = dim C_{j,d}` of the complex the table came from.
    pub chain_dims: Vec<Vec<usize>>,
}

impl GradedDimTable {
    pub fn get(&self, j: usize, d: usize) -> usize {
        self.dims
            .get(j)
            .and_then(|r| r.get(d))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ_j (−1)^j dims[j][d] = Σ_j (−1)^j dim C_{j,d}` for every `d`.
    pub fn euler_consistent(&self) -> bool {
        (0..=self.truncation).all(|d| {
            let alt = |t: &Vec<Vec<usize>>| -> i64 {
                t.iter()
                    .enumerate()
                    .map(|(j, r)| {
                        if j % 2 == 0 {
                            r[d] as i64
                        } else {
                            -(r[d] as i64)
                        }
                    })
                    .sum()
            };
            alt(&self.dims) == alt(&self.chain_dims)
        })
    }

    pub(super) fn from_complex(cx: &FreeComplex, n: usize, truncation: usize) -> Self {
        let chain_dims: Vec<Vec<usize>> = (0..=cx.length())
            .map(|j| {
                (0..=truncation)
                    .map(|d| cx.chain_dim(j, d as i64))
                    .collect()
            })
            .collect();
        let dims = cx.minimize().homology_dims(truncation);
        let mut table = Self {
            n,
            truncation,
            dims,
            chain_dims,
        };
        table.pad(n + 1);
        table
    }

    fn pad(&mut self, rows: usize) {
        let width = self.truncation + 1;
        for t in [&mut self.dims, &mut self.chain_dims] {
            while t.len() < rows {
                t.push(vec![0; width]);
            }
        }
    }
}

/// Koszul complex of the commutators `L_i = x_i·(−) − (−)·x_i` acting on `Θ`.
/// Its homology is `HH_•(R, Θ)`.
pub fn commutator_koszul(theta: &BSBimodule, field: &'static NumberField) -> FreeComplex {
    let n = theta.nvars();
    let r = theta.rank();
    let ops: Vec<PolyMatrix> = (0..n)
        .map(|i| {
            let left = PolyMatrix::scalar(&MultiPoly::var(field, n, i), r);
            left.sub(theta.right_action(i))
        })
        .collect();
    koszul_on_operators(field, n, theta.basis_degrees(), &ops, &vec![1; n])
}

/// Graded dimensions of `HH_j(R, Θ)_d` for `d ≤ truncation`.
pub fn hh_dims(
    theta: &BSBimodule,
    field: &'static NumberField,
    truncation: usize,
) -> Result<GradedDimTable> {
    hh_dims_capped(theta, field, truncation, DEFAULT_CHAIN_CAP)
}

pub fn hh_dims_capped(
    theta: &BSBimodule,
    field: &'static NumberField,
    truncation: usize,
    cap: usize,
) -> Result<GradedDimTable> {
    let cx = commutator_koszul(theta, field);
    for j in 0..=cx.length() {
        let top = cx.chain_dim(j, truncation as i64);
        if top > cap {
            return Err(Error::ResourceCap(format!(
                "chain space C_{{{j},{truncation}}} has dimension {top} (cap {cap})"
            )));
        }
    }
    Ok(GradedDimTable::from_complex(&cx, theta.nvars(), truncation))
}

/// Hilbert series of `HH_•`: `Σ_j N_j(q) t^j / (1−q)^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrValue {
    pub n: usize,
    pub truncation: usize,
    /// `numerators[j][k]` is the coefficient of `q^k` in `N_j`.
    pub numerators: Vec<Vec<i64>>,
    pub certified: bool,
}

impl EhrValue {
    /// Nonzero terms `(coefficient, q exponent, t exponent)` of `Σ_j N_j t^j`.
    pub fn terms(&self) -> Vec<(i64, u32, u32)> {
        let mut out = Vec::new();
        for (j, nj) in self.numerators.iter().enumerate() {
            for (k, &c) in nj.iter().enumerate() {
                if c != 0 {
                    out.push((c, k as u32, j as u32));
                }
            }
        }
        out
    }
}

/// Multiplies each row of `table` by `(1−q)^n` and checks that the result
/// stabilises at least `margin` degrees below the truncation.
pub fn ehr_reconstruct(table: &GradedDimTable, margin: usize) -> EhrValue {
    let n = table.n;
    let top = table.truncation;
    let mut one_minus_q = vec![0i64; n + 1];
    for (k, c) in one_minus_q.iter_mut().enumerate() {
        let b = crate::bimodule::binomial(n, k) as i64;
        *c = if k % 2 == 0 { b } else { -b };
    }
    let mut certified = true;
    let numerators = table
        .dims
        .iter()
        .map(|row| {
            let mut num: Vec<i64> = (0..=top)
                .map(|d| {
                    (0..=n.min(d))
                        .map(|k| one_minus_q[k] * row[d - k] as i64)
                        .sum()
                })
                .collect();
            while num.last() == Some(&0) {
                num.pop();
            }
            let deg = num.len().saturating_sub(1);
            if top < deg + margin {
                certified = false;
            }
            num
        })
        .collect();
    EhrValue {
        n,
        truncation: top,
        numerators,
        certified,
    }
}
