use std::fmt;
use std::ops::Mul;

use super::field::NumberField;
use super::scalar::AlgebraicScalar;

/// Dense matrix over one number field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarMatrix {
    field: &'static NumberField,
    rows: usize,
    cols: usize,
    entries: Vec<AlgebraicScalar>,
}

impl ScalarMatrix {
    pub fn zeros(field: &'static NumberField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![AlgebraicScalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &'static NumberField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, AlgebraicScalar::one(field));
        }
        m
    }

    pub fn from_rows(field: &'static NumberField, rows: Vec<Vec<AlgebraicScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(field: &'static NumberField, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| AlgebraicScalar::from_i64(field, x))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn field(&self) -> &'static NumberField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &AlgebraicScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: AlgebraicScalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[AlgebraicScalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul_vec(&self, v: &[AlgebraicScalar]) -> Vec<AlgebraicScalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(AlgebraicScalar::zero(self.field), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: &'static NumberField, cols: usize, blocks: &[ScalarMatrix]) -> Self {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Self {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.field, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.field, self.rows)
    }

    pub fn rank(&self) -> usize {
        rank_nullspace(self).0
    }
}

impl Mul for &ScalarMatrix {
    type Output = ScalarMatrix;
    fn mul(self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = ScalarMatrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank of `m` and a basis of its right nullspace `{v : m·v = 0}`.
///
/// Fraction-free elimination: rows are combined as `p·row − a·pivot_row`, with
/// the first nonzero entry of each column taken as pivot. Division only
/// happens during back substitution of the nullspace vectors.
pub fn rank_nullspace(m: &ScalarMatrix) -> (usize, Vec<Vec<AlgebraicScalar>>) {
    let field = m.field;
    let mut rows: Vec<Vec<AlgebraicScalar>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut next = 0;
    for col in 0..m.cols {
        let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let (head, tail) = rows.split_at_mut(next + 1);
        let prow = &head[next];
        let pv = &prow[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            for c in col..m.cols {
                let v = &(pv * &row[c]) - &(&a * &prow[c]);
                row[c] = v;
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    let rank = pivots.len();

    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![AlgebraicScalar::zero(field); m.cols];
        v[f] = AlgebraicScalar::one(field);
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let row = &rows[i];
            let mut acc = AlgebraicScalar::zero(field);
            for c in pc + 1..m.cols {
                if !row[c].is_zero() && !v[c].is_zero() {
                    acc += &(&row[c] * &v[c]);
                }
            }
            v[pc] = -&(&acc * &row[pc].inv().expect("pivot is nonzero"));
        }
        basis.push(v);
    }
    (rank, basis)
}
