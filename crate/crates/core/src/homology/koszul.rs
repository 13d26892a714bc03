use crate::bimodule::{MultiPoly, PolyMatrix};
use crate::error::{Error, Result};
use crate::scalars::NumberField;

use super::complex::{koszul_on_operators, FreeComplex};
use super::hh::GradedDimTable;

/// The Koszul complex `(a_1, …, a_k)` over `K[x_1, …, x_vars]`, with `e_i`
/// in degree `degrees[i]`.
pub fn koszul_complex(
    field: &'static NumberField,
    vars: usize,
    generators: &[MultiPoly],
    degrees: &[u32],
) -> FreeComplex {
    let ops: Vec<PolyMatrix> = generators
        .iter()
        .map(|g| PolyMatrix::scalar(g, 1))
        .collect();
    koszul_on_operators(field, vars, &[0], &ops, degrees)
}

/// Graded homology of the Koszul complex on homogeneous `generators`. The
/// zero polynomial is placed in degree 0.
pub fn koszul_homology(
    field: &'static NumberField,
    vars: usize,
    generators: &[MultiPoly],
    truncation: usize,
) -> Result<GradedDimTable> {
    let degrees = generators
        .iter()
        .enumerate()
        .map(|(i, g)| {
            if g.is_zero() {
                Ok(0)
            } else {
                g.homogeneous_degree().ok_or(Error::NonHomogeneous(i))
            }
        })
        .collect::<Result<Vec<u32>>>()?;
    koszul_homology_with_degrees(field, vars, generators, &degrees, truncation)
}

/// As [`koszul_homology`], with the degree of each Koszul generator given
/// explicitly (a zero generator may sit in any degree).
pub fn koszul_homology_with_degrees(
    field: &'static NumberField,
    vars: usize,
    generators: &[MultiPoly],
    degrees: &[u32],
    truncation: usize,
) -> Result<GradedDimTable> {
    for (i, (g, &d)) in generators.iter().zip(degrees).enumerate() {
        if !g.is_zero() && !g.is_homogeneous_of(d) {
            return Err(Error::NonHomogeneous(i));
        }
    }
    let cx = koszul_complex(field, vars, generators, degrees);
    Ok(GradedDimTable::from_complex(
        &cx,
        generators.len(),
        truncation,
    ))
}
