use crate::coxeter::CoxeterSystem;
use crate::error::Result;

use super::poly::{Monomial, MultiPoly};
use super::polymatrix::PolyMatrix;

/// Bott–Samelson bimodule `Θ_w = B_{t₁} ⊗_R … ⊗_R B_{t_k}`.
///
/// Stored as a free left `R`-module with basis `e_ε`, `ε ∈ {0,1}^k`, where
/// `ε_i = 1` picks `1 ⊗ u_{t_i}` in the `i`-th factor and `0` picks `1 ⊗ 1`.
/// The index of `e_ε` reads `ε` as a binary number with the first letter as
/// the most significant bit. The right action of `x_j` is the matrix
/// `right_action[j]`: `e_ε·x_j = Σ_η right_action[j][η][ε]·e_η`.
#[derive(Clone, Debug)]
pub struct BSBimodule {
    word: Vec<usize>,
    nvars: usize,
    basis_degrees: Vec<u32>,
    right_action: Vec<PolyMatrix>,
}

impl BSBimodule {
    pub fn build(sys: &CoxeterSystem, word: &[usize]) -> Result<Self> {
        for &t in word {
            sys.check_generator(t)?;
        }
        let n = sys.rank();
        let field = sys.field();
        let mut theta = BSBimodule {
            word: vec![],
            nvars: n,
            basis_degrees: vec![0],
            right_action: (0..n)
                .map(|j| PolyMatrix::scalar(&MultiPoly::var(field, n, j), 1))
                .collect(),
        };
        for &t in word {
            theta = theta.append(sys, t)?;
        }
        Ok(theta)
    }

    /// `Θ_w ⊗_R B_t`.
    fn append(&self, sys: &CoxeterSystem, t: usize) -> Result<Self> {
        let u = sys.root_form_poly(t);
        let u2 = u.pow(2);
        let mut right_action = Vec::with_capacity(self.nvars);
        for j in 0..self.nvars {
            let x = MultiPoly::var(sys.field(), self.nvars, j);
            // 1 ⊗ x_j = a ⊗ 1 + b ⊗ u_t with a, b ∈ R^t
            let (a, b) = sys.invariant_split(&x, t)?;
            let ra = self.right_polynomial_action(&a);
            let rb = self.right_polynomial_action(&b);
            let ru2b = self.right_polynomial_action(&(&u2 * &b));
            right_action.push(PolyMatrix::interleave2([[&ra, &ru2b], [&rb, &ra]]));
        }
        let basis_degrees = self
            .basis_degrees
            .iter()
            .flat_map(|&d| [d, d + 1])
            .collect();
        let mut word = self.word.clone();
        word.push(t);
        Ok(Self {
            word,
            nvars: self.nvars,
            basis_degrees,
            right_action,
        })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Rank as a free left module, `2^k`.
    pub fn rank(&self) -> usize {
        self.basis_degrees.len()
    }

    pub fn basis_degrees(&self) -> &[u32] {
        &self.basis_degrees
    }

    pub fn right_action(&self, j: usize) -> &PolyMatrix {
        &self.right_action[j]
    }

    /// Matrix of right multiplication by `f`, i.e. `f` evaluated at the
    /// commuting matrices `right_action(x_j)`.
    pub fn right_polynomial_action(&self, f: &MultiPoly) -> PolyMatrix {
        let r = self.rank();
        let field = f.field();
        let mut out = PolyMatrix::zeros(field, self.nvars, r, r);
        let mut powers: Vec<Vec<PolyMatrix>> = (0..self.nvars)
            .map(|_| vec![PolyMatrix::identity(field, self.nvars, r)])
            .collect();
        for (m, c) in f.terms() {
            let mut term = PolyMatrix::scalar(&MultiPoly::constant(c.clone(), self.nvars), r);
            for (j, &e) in m.exponents().iter().enumerate() {
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().unwrap().mul(&self.right_action[j]);
                    powers[j].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[j][e as usize]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Basis `m·e_ε` of the degree-`d` piece, ordered by monomial then `ε`.
    pub fn graded_basis(&self, d: i64) -> Vec<(Monomial, usize)> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        for (eps, &deg) in self.basis_degrees.iter().enumerate() {
            let md = d - deg as i64;
            if md >= 0 {
                for m in Monomial::of_degree(self.nvars, md as u32) {
                    out.push((m, eps));
                }
            }
        }
        out.sort();
        out
    }

    pub fn graded_dim(&self, d: i64) -> usize {
        self.basis_degrees
            .iter()
            .map(|&deg| Monomial::count(self.nvars, d - deg as i64))
            .sum()
    }
}
