//! Incremental sparse row echelon form, used for the per-degree ranks.

use crate::scalars::AlgebraicScalar;

/// Field operations needed by [`EchelonBasis`].
pub trait RankScalar: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn sub_assign_mul(&mut self, a: &Self, b: &Self);
    fn inv(&self) -> Self;
}

impl RankScalar for AlgebraicScalar {
    fn zero_like(&self) -> Self {
        AlgebraicScalar::zero(self.field())
    }

    fn one_like(&self) -> Self {
        AlgebraicScalar::one(self.field())
    }

    fn is_zero(&self) -> bool {
        AlgebraicScalar::is_zero(self)
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn sub_assign_mul(&mut self, a: &Self, b: &Self) {
        *self -= &(a * b);
    }

    fn inv(&self) -> Self {
        AlgebraicScalar::inv(self).expect("nonzero pivot")
    }
}

pub type SparseRow<F> = Vec<(usize, F)>;

/// Row echelon basis of a growing set of vectors in `F^ncols`. Every stored
/// row has leading coefficient 1 and a distinct leading column.
pub struct EchelonBasis<F: RankScalar> {
    ncols: usize,
    pivots: Vec<Option<SparseRow<F>>>,
    rank: usize,
    scratch: Vec<Option<F>>,
}

impl<F: RankScalar> EchelonBasis<F> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: vec![None; ncols],
            rank: 0,
            scratch: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds a vector; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        if row.is_empty() {
            return false;
        }
        let mut lo = usize::MAX;
        for (c, v) in row {
            debug_assert!(c < self.ncols);
            if v.is_zero() {
                continue;
            }
            lo = lo.min(c);
            match &mut self.scratch[c] {
                Some(x) => x.add_assign(&v),
                slot @ None => *slot = Some(v),
            }
        }
        if lo == usize::MAX {
            return false;
        }
        let mut c = lo;
        while c < self.ncols {
            let Some(val) = self.scratch[c].take() else {
                c += 1;
                continue;
            };
            if val.is_zero() {
                c += 1;
                continue;
            }
            match &self.pivots[c] {
                Some(prow) => {
                    for (pc, pv) in prow.iter().skip(1) {
                        match &mut self.scratch[*pc] {
                            Some(x) => x.sub_assign_mul(&val, pv),
                            slot @ None => {
                                let mut x = val.zero_like();
                                x.sub_assign_mul(&val, pv);
                                *slot = Some(x);
                            }
                        }
                    }
                    c += 1;
                }
                None => {
                    let inv = val.inv();
                    let mut new_row: SparseRow<F> = vec![(c, val.one_like())];
                    for cc in c + 1..self.ncols {
                        if let Some(x) = self.scratch[cc].take() {
                            if !x.is_zero() {
                                new_row.push((cc, x.mul(&inv)));
                            }
                        }
                    }
                    self.pivots[c] = Some(new_row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

/// Rank of the span of the given sparse rows.
pub fn sparse_rank<F: RankScalar>(
    ncols: usize,
    rows: impl IntoIterator<Item = SparseRow<F>>,
) -> usize {
    let mut basis = EchelonBasis::new(ncols);
    for r in rows {
        basis.insert(r);
        if basis.rank() == ncols {
            break;
        }
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{NumberField, ScalarMatrix};

    #[test]
    fn agrees_with_dense_rank() {
        let q = NumberField::rationals();
        let dense = ScalarMatrix::from_i64(
            q,
            &[
                &[1, 2, 0, 3],
                &[2, 4, 0, 6],
                &[0, 0, 1, 1],
                &[1, 2, 1, 4],
                &[0, 1, 0, 0],
            ],
        );
        let rows = (0..dense.rows()).map(|r| {
            dense
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect::<SparseRow<_>>()
        });
        assert_eq!(sparse_rank(4, rows), dense.rank());
    }
}
