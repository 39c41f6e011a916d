//! Evaluation of `Lambda A*` cochains on sections through the determinant
//! pairing `xi^{a1} ... xi^{ap}(phi_1, ..., phi_p) = det(xi^{a_j}(phi_k))`.

use super::Cochain;
use crate::algebroid::{Ambient, Section};
use crate::error::{Error, Result};
use crate::scalars::Polynomial;

/// Determinant of a square polynomial matrix by cofactor expansion along the first row.
pub fn determinant(matrix: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = matrix.len();
    if n == 0 {
        return Polynomial::one(nvars);
    }
    let cols: Vec<usize> = (0..n).collect();
    minor(matrix, 0, &cols, nvars)
}

fn minor(matrix: &[Vec<Polynomial>], row: usize, cols: &[usize], nvars: usize) -> Polynomial {
    if cols.len() == 1 {
        return matrix[row][cols[0]].clone();
    }
    let mut total = Polynomial::zero(nvars);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &matrix[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &minor(matrix, row + 1, &rest, nvars);
        total = if k % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Evaluates a cochain of degree `p` with no `F*` factors on `p` sections of `A`.
pub fn evaluate(gamma: &Cochain, sections: &[Section]) -> Result<Polynomial> {
    let shape = gamma.shape();
    let m = shape.base_dim;
    if sections.len() != gamma.degree() {
        return Err(Error::DegreeMismatch { left: gamma.degree(), right: sections.len() });
    }
    for s in sections {
        if s.ambient() != Ambient::A {
            return Err(Error::AmbientMismatch { expected: Ambient::A.name(), found: s.ambient().name() });
        }
        if s.len() != shape.rank {
            return Err(Error::RankMismatch { expected: shape.rank, found: s.len() });
        }
        if s.nvars() != m {
            return Err(Error::VariableMismatch { left: m, right: s.nvars() });
        }
    }
    let mut total = Polynomial::zero(m);
    for (key, coeff) in gamma.terms() {
        if !key.sym().is_empty() {
            return Err(Error::InvalidSpec("evaluation needs a cochain without b factors".into()));
        }
        let matrix: Vec<Vec<Polynomial>> = key
            .wedge()
            .iter()
            .map(|&a| sections.iter().map(|s| s.coeffs()[a as usize].clone()).collect())
            .collect();
        total = &total + &(coeff * &determinant(&matrix, m));
    }
    Ok(total)
}
