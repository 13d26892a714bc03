//! Bounded complexes of graded free modules over `K[x_1, …, x_n]`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::bimodule::{Monomial, MultiPoly, PolyMatrix};
use crate::scalars::{AlgebraicScalar, NumberField};

use super::sparse::{sparse_rank, SparseRow};

/// `F_m → … → F_1 → F_0`. `degrees[j]` lists the generator degrees of `F_j`
/// and `diffs[j - 1]` is the matrix of `d_j : F_j → F_{j-1}` (rows index the
/// generators of `F_{j-1}`), with homogeneous entries of degree
/// `deg(source) − deg(target)`.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    field: &'static NumberField,
    nvars: usize,
    degrees: Vec<Vec<u32>>,
    diffs: Vec<PolyMatrix>,
}

impl FreeComplex {
    pub fn new(
        field: &'static NumberField,
        nvars: usize,
        degrees: Vec<Vec<u32>>,
        diffs: Vec<PolyMatrix>,
    ) -> Self {
        assert_eq!(diffs.len() + 1, degrees.len());
        for (j, d) in diffs.iter().enumerate() {
            assert_eq!(d.rows(), degrees[j].len());
            assert_eq!(d.cols(), degrees[j + 1].len());
        }
        Self {
            field,
            nvars,
            degrees,
            diffs,
        }
    }

    pub fn field(&self) -> &'static NumberField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Index of the top module.
    pub fn length(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degrees(&self, j: usize) -> &[u32] {
        &self.degrees[j]
    }

    /// `d_j`, for `1 ≤ j ≤ length`.
    pub fn differential(&self, j: usize) -> &PolyMatrix {
        &self.diffs[j - 1]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// `dim_K (F_j)_d`.
    pub fn chain_dim(&self, j: usize, d: i64) -> usize {
        self.degrees[j]
            .iter()
            .map(|&g| Monomial::count(self.nvars, d - g as i64))
            .sum()
    }

    /// Checks `d_{j} ∘ d_{j+1} = 0` for all `j` as polynomial matrices.
    pub fn is_complex(&self) -> bool {
        self.diffs.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    /// Checks that every entry of every differential is homogeneous of the
    /// degree dictated by the generator degrees.
    pub fn is_graded(&self) -> bool {
        self.diffs.iter().enumerate().all(|(k, d)| {
            let (tgt, src) = (&self.degrees[k], &self.degrees[k + 1]);
            (0..d.rows()).all(|r| {
                (0..d.cols()).all(|c| {
                    let e = d.get(r, c);
                    e.is_zero() || (src[c] >= tgt[r] && e.is_homogeneous_of(src[c] - tgt[r]))
                })
            })
        })
    }

    /// Gaussian elimination on unit entries: while some differential has a
    /// nonzero constant entry, cancel the corresponding pair of generators.
    /// The result is homotopy equivalent to `self` and minimal (all entries
    /// lie in the irrelevant ideal), with the same homology in every degree.
    ///
    /// Cancelling `d_j[r][c]` replaces `d_j` by `δ − γ·d_j[r][c]⁻¹·β` on the
    /// remaining generators and drops row `c` of `d_{j+1}` and column `r` of
    /// `d_{j−1}`; dropped generators are only marked dead until the end.
    pub fn minimize(&self) -> FreeComplex {
        let mut diffs = self.diffs.clone();
        let mut alive: Vec<Vec<bool>> = self.degrees.iter().map(|g| vec![true; g.len()]).collect();
        loop {
            let mut changed = false;
            for j in 1..=diffs.len() {
                let (src, tgt) = (&self.degrees[j], &self.degrees[j - 1]);
                for c in 0..src.len() {
                    if !alive[j][c] {
                        continue;
                    }
                    let pivot = (0..tgt.len()).find(|&r| {
                        alive[j - 1][r] && tgt[r] == src[c] && !diffs[j - 1].get(r, c).is_zero()
                    });
                    if let Some(r) = pivot {
                        eliminate(&mut diffs[j - 1], &alive[j - 1], &alive[j], r, c);
                        alive[j - 1][r] = false;
                        alive[j][c] = false;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let keep: Vec<Vec<usize>> = alive
            .iter()
            .map(|a| (0..a.len()).filter(|&i| a[i]).collect())
            .collect();
        let degrees = keep
            .iter()
            .zip(&self.degrees)
            .map(|(k, g)| k.iter().map(|&i| g[i]).collect())
            .collect();
        let diffs = diffs
            .iter()
            .enumerate()
            .map(|(idx, d)| {
                let (rows, cols) = (&keep[idx], &keep[idx + 1]);
                let mut out = PolyMatrix::zeros(self.field, self.nvars, rows.len(), cols.len());
                for (ni, &i) in rows.iter().enumerate() {
                    for (nk, &k) in cols.iter().enumerate() {
                        out.set(ni, nk, d.get(i, k).clone());
                    }
                }
                out
            })
            .collect();
        FreeComplex::new(self.field, self.nvars, degrees, diffs)
    }

    /// Rank over `K` of `d_j` restricted to degree `d`.
    pub fn rank_in_degree(&self, j: usize, d: i64) -> usize {
        if j == 0 || j > self.length() || d < 0 {
            return 0;
        }
        let (src, tgt) = (&self.degrees[j], &self.degrees[j - 1]);
        let diff = &self.diffs[j - 1];
        if src.is_empty() || tgt.is_empty() || diff.is_zero() {
            return 0;
        }
        let mut index: HashMap<u32, HashMap<Monomial, usize>> = HashMap::new();
        let mut offsets = Vec::with_capacity(tgt.len());
        let mut ncols = 0;
        for &g in tgt {
            offsets.push(ncols);
            let md = d - g as i64;
            if md >= 0 {
                let md = md as u32;
                index.entry(md).or_insert_with(|| {
                    Monomial::of_degree(self.nvars, md)
                        .into_iter()
                        .enumerate()
                        .map(|(i, m)| (m, i))
                        .collect()
                });
                ncols += Monomial::count(self.nvars, md as i64);
            }
        }
        if ncols == 0 {
            return 0;
        }
        let mut rows: Vec<SparseRow<AlgebraicScalar>> = Vec::new();
        for (x, &gx) in src.iter().enumerate() {
            let md = d - gx as i64;
            if md < 0 {
                continue;
            }
            let column: Vec<(usize, &MultiPoly)> = (0..tgt.len())
                .map(|y| (y, diff.get(y, x)))
                .filter(|(_, e)| !e.is_zero())
                .collect();
            if column.is_empty() {
                continue;
            }
            for m in Monomial::of_degree(self.nvars, md as u32) {
                let mut row: SparseRow<AlgebraicScalar> = Vec::new();
                for &(y, e) in &column {
                    let tdeg = (d - tgt[y] as i64) as u32;
                    let idx = &index[&tdeg];
                    for (em, c) in e.terms() {
                        row.push((offsets[y] + idx[&em.mul(&m)], c.clone()));
                    }
                }
                row.sort_by_key(|(c, _)| *c);
                rows.push(row);
            }
        }
        sparse_rank(ncols, rows)
    }

    /// `dim H_j` in degree `d` for every `0 ≤ j ≤ length`, `0 ≤ d ≤ max_degree`.
    /// Cells are evaluated in parallel and merged in index order.
    pub fn homology_dims(&self, max_degree: usize) -> Vec<Vec<usize>> {
        let m = self.length();
        let cells: Vec<(usize, usize)> = (1..=m)
            .flat_map(|j| (0..=max_degree).map(move |d| (j, d)))
            .collect();
        let ranks: Vec<usize> = cells
            .par_iter()
            .map(|&(j, d)| self.rank_in_degree(j, d as i64))
            .collect();
        let rank = |j: usize, d: usize| -> usize {
            if j == 0 || j > m {
                0
            } else {
                ranks[(j - 1) * (max_degree + 1) + d]
            }
        };
        (0..=m)
            .map(|j| {
                (0..=max_degree)
                    .map(|d| self.chain_dim(j, d as i64) - rank(j, d) - rank(j + 1, d))
                    .collect()
            })
            .collect()
    }
}

/// `d[i][k] −= d[i][c]·d[r][c]⁻¹·d[r][k]` over live rows `i ≠ r` and live
/// columns `k ≠ c`.
fn eliminate(d: &mut PolyMatrix, rows_alive: &[bool], cols_alive: &[bool], r: usize, c: usize) {
    let unit = d.get(r, c).as_constant().expect("constant pivot");
    let inv = unit.inv().expect("nonzero pivot");
    let pivot_row: Vec<(usize, MultiPoly)> = (0..d.cols())
        .filter(|&k| k != c && cols_alive[k] && !d.get(r, k).is_zero())
        .map(|k| (k, d.get(r, k).clone()))
        .collect();
    if pivot_row.is_empty() {
        return;
    }
    for i in 0..d.rows() {
        if i == r || !rows_alive[i] || d.get(i, c).is_zero() {
            continue;
        }
        let factor = d.get(i, c).scale(&inv);
        for (k, top) in &pivot_row {
            d.get_mut(i, *k).sub_assign(&(&factor * top));
        }
    }
}

/// Subsets of `{0, …, n-1}` of size `j`, in lexicographic order.
pub(crate) fn subsets(n: usize, j: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < left {
                break;
            }
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, j, &mut Vec::new(), &mut out);
    out
}

/// Koszul complex on a family of commuting `R`-linear endomorphisms `ops`
/// of a free module with generator degrees `base_degrees`, where `ops[i]`
/// raises degree by `op_degrees[i]`.
///
/// `F_j = ⊕_{|λ| = j} F·e_λ` and
/// `d(m ⊗ e_{i₁} ∧ … ∧ e_{i_j}) = Σ_r (−1)^{r+1} ops[i_r](m) ⊗ e_{λ∖i_r}`.
pub fn koszul_on_operators(
    field: &'static NumberField,
    nvars: usize,
    base_degrees: &[u32],
    ops: &[PolyMatrix],
    op_degrees: &[u32],
) -> FreeComplex {
    let k = ops.len();
    let r = base_degrees.len();
    let layers: Vec<Vec<Vec<usize>>> = (0..=k).map(|j| subsets(k, j)).collect();
    let positions: Vec<HashMap<Vec<usize>, usize>> = layers
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let degrees: Vec<Vec<u32>> = layers
        .iter()
        .map(|l| {
            l.iter()
                .flat_map(|lam| {
                    let shift: u32 = lam.iter().map(|&i| op_degrees[i]).sum();
                    base_degrees.iter().map(move |&g| g + shift)
                })
                .collect()
        })
        .collect();
    let mut diffs = Vec::with_capacity(k);
    for j in 1..=k {
        let mut d = PolyMatrix::zeros(field, nvars, layers[j - 1].len() * r, layers[j].len() * r);
        for (li, lam) in layers[j].iter().enumerate() {
            for (pos, &i) in lam.iter().enumerate() {
                let mut rest = lam.clone();
                rest.remove(pos);
                let ri = positions[j - 1][&rest];
                let negate = pos % 2 == 1;
                let op = &ops[i];
                for eps in 0..r {
                    for eta in 0..r {
                        let e = op.get(eta, eps);
                        if e.is_zero() {
                            continue;
                        }
                        let v = if negate { -e } else { e.clone() };
                        d.get_mut(ri * r + eta, li * r + eps).add_assign(&v);
                    }
                }
            }
        }
        diffs.push(d);
    }
    FreeComplex::new(field, nvars, degrees, diffs)
}
