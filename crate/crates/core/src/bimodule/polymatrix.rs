use std::fmt;

use crate::scalars::NumberField;

use super::poly::MultiPoly;

/// Dense matrix with polynomial entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: &'static NumberField,
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(field: &'static NumberField, nvars: usize, rows: usize, cols: usize) -> Self {
        Self {
            field,
            nvars,
            rows,
            cols,
            entries: vec![MultiPoly::zero(field, nvars); rows * cols],
        }
    }

    pub fn identity(field: &'static NumberField, nvars: usize, n: usize) -> Self {
        Self::scalar(&MultiPoly::one(field, nvars), n)
    }

    /// `f` times the identity.
    pub fn scalar(f: &MultiPoly, n: usize) -> Self {
        let mut m = Self::zeros(f.field(), f.nvars(), n, n);
        for i in 0..n {
            m.set(i, i, f.clone());
        }
        m
    }

    pub fn field(&self) -> &'static NumberField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut MultiPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: MultiPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MultiPoly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
            ..*self
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
            ..*self
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.field, self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j].add_assign(&(a * b));
                    }
                }
            }
        }
        out
    }

    /// Interleaved block matrix: entry `(2i + p, 2j + q)` comes from block
    /// `(p, q)` at position `(i, j)`. This is the layout used when the new
    /// tensor factor index is the lowest bit.
    pub fn interleave2(blocks: [[&Self; 2]; 2]) -> Self {
        let b00 = blocks[0][0];
        let n = b00.rows;
        let mut out = Self::zeros(b00.field, b00.nvars, 2 * n, 2 * n);
        for (p, row) in blocks.iter().enumerate() {
            for (q, b) in row.iter().enumerate() {
                for i in 0..n {
                    for j in 0..n {
                        out.set(2 * i + p, 2 * j + q, b.get(i, j).clone());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
