//! Cohomology of the finite-dimensional pieces of the cochain complex.
//!
//! Over a point (`m = 0`) every `C^n` is finite dimensional. When all
//! structure functions are constant, the cochains with constant coefficients
//! form a subcomplex (the anchor terms of `d` vanish on constants), and that
//! subcomplex is what gets computed. Other specs are rejected.

mod rank;

pub use rank::exact_rank;

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebroid::AlgebroidSpec;
use crate::cochain::{BasisKey, Cochain, CochainCalculus, CochainShape};
use crate::error::{Error, Result};
use crate::scalars::{Polynomial, Rational};

/// Basis of `C^n` ordered by the number of `xi` factors, then
/// lexicographically on the `xi` indices and the `b` indices.
pub fn degree_basis(shape: CochainShape, degree: usize) -> Vec<BasisKey> {
    let mut out = Vec::new();
    for p in 0..=degree.min(shape.rank) {
        if (degree - p) % 2 != 0 {
            continue;
        }
        let q = (degree - p) / 2;
        if q > 0 && shape.kernel_rank == 0 {
            continue;
        }
        let wedges = combinations(shape.rank, p, false);
        let syms = combinations(shape.kernel_rank, q, true);
        for w in &wedges {
            for s in &syms {
                out.push(BasisKey::new(w.clone(), s.clone()));
            }
        }
    }
    out
}

fn combinations(n: usize, size: usize, repeat: bool) -> Vec<Vec<u16>> {
    fn go(start: usize, n: usize, size: usize, repeat: bool, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u16);
            go(if repeat { i } else { i + 1 }, n, size, repeat, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, repeat, &mut Vec::new(), &mut out);
    out
}

/// The matrix of `d: C^n -> C^{n+1}` on constant-coefficient cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSlice {
    degree: usize,
    source: Vec<BasisKey>,
    target: Vec<BasisKey>,
    /// `matrix[row][col]`, rows indexed by `target`, columns by `source`.
    matrix: Vec<Vec<Rational>>,
}

impl ComplexSlice {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source_basis(&self) -> &[BasisKey] {
        &self.source
    }

    pub fn target_basis(&self) -> &[BasisKey] {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        exact_rank(&self.matrix)
    }
}

fn finite_type(spec: &AlgebroidSpec) -> Result<()> {
    if spec.base_dim() == 0 || spec.is_constant() {
        Ok(())
    } else {
        Err(Error::InfiniteDimensional(
            "structure functions are not constant, so no finite constant-coefficient subcomplex".into(),
        ))
    }
}

fn assemble(calc: &CochainCalculus, degree: usize) -> Result<ComplexSlice> {
    let shape = calc.shape();
    let source = degree_basis(shape, degree);
    let target = degree_basis(shape, degree + 1);
    let columns: Vec<Vec<Rational>> = source
        .par_iter()
        .map(|key| {
            let mut gamma = Cochain::zero(shape, degree);
            gamma.add_term(key.clone(), Polynomial::one(shape.base_dim));
            let image = calc.total_differential(&gamma)?;
            target
                .iter()
                .map(|t| {
                    let c = image.coefficient(t);
                    c.constant_value().ok_or(Error::ComplexNotClosed(degree))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = (0..target.len())
        .map(|row| columns.iter().map(|col| col[row].clone()).collect())
        .collect();
    Ok(ComplexSlice { degree, source, target, matrix })
}

pub fn assemble_slice(spec: &AlgebroidSpec, degree: usize) -> Result<ComplexSlice> {
    finite_type(spec)?;
    assemble(&CochainCalculus::new(spec)?, degree)
}

fn composite_is_zero(after: &ComplexSlice, before: &ComplexSlice) -> bool {
    let inner = before.source.len();
    after.matrix.iter().all(|row| {
        (0..inner).all(|col| {
            let mut acc = Rational::zero();
            for (k, a) in row.iter().enumerate() {
                if !a.is_zero() && !before.matrix[k][col].is_zero() {
                    acc += a * &before.matrix[k][col];
                }
            }
            acc.is_zero()
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BettiRow {
    pub degree: usize,
    pub dimension: usize,
    /// `dim ker d_n`
    pub kernel: usize,
    /// `rank d_{n-1}`
    pub incoming_rank: usize,
    pub betti: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    rows: Vec<BettiRow>,
}

impl BettiTable {
    pub fn rows(&self) -> &[BettiRow] {
        &self.rows
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.betti).collect()
    }

    /// One `degree kernel rank betti` line per degree.
    pub fn to_lines(&self) -> String {
        self.rows
            .iter()
            .map(|r| format!("{} {} {} {}\n", r.degree, r.kernel, r.incoming_rank, r.betti))
            .collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header = ["degree", "dim", "kernel", "rank", "betti"];
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [r.degree, r.dimension, r.kernel, r.incoming_rank, r.betti].map(|x| x.to_string())
            })
            .collect();
        let widths: Vec<usize> = (0..5)
            .map(|i| cells.iter().map(|c| c[i].len()).chain([header[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |f: &mut fmt::Formatter<'_>, items: [&str; 5]| -> fmt::Result {
            let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            writeln!(f, "{}", padded.join("  "))
        };
        line(f, header)?;
        for c in &cells {
            line(f, [&c[0], &c[1], &c[2], &c[3], &c[4]].map(String::as_str))?;
        }
        Ok(())
    }
}

/// Betti numbers in degrees `0..=max_degree`, after checking that the
/// assembled consecutive matrices compose to zero.
pub fn betti_table(spec: &AlgebroidSpec, max_degree: usize) -> Result<BettiTable> {
    finite_type(spec)?;
    let calc = CochainCalculus::new(spec)?;
    let slices = (0..=max_degree).map(|n| assemble(&calc, n)).collect::<Result<Vec<_>>>()?;
    for n in 1..slices.len() {
        if !composite_is_zero(&slices[n], &slices[n - 1]) {
            return Err(Error::ComplexNotClosed(n - 1));
        }
    }
    let ranks: Vec<usize> = slices.par_iter().map(ComplexSlice::rank).collect();
    let rows = slices
        .iter()
        .enumerate()
        .map(|(n, s)| {
            let dimension = s.source.len();
            let kernel = dimension - ranks[n];
            let incoming_rank = if n == 0 { 0 } else { ranks[n - 1] };
            BettiRow { degree: n, dimension, kernel, incoming_rank, betti: kernel - incoming_rank }
        })
        .collect();
    Ok(BettiTable { rows })
}
