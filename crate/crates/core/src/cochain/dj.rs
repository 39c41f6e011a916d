//! The Bianchi-type identity `D J = 0` for the Jacobiator viewed as an
//! `F`-valued 3-form, checked directly on the frame with the invariant
//! formula for the exterior covariant derivative.

use std::fmt;

use crate::algebroid::{AlgebroidSpec, Ambient, Section};
use crate::error::{Error, Result};
use crate::scalars::Polynomial;

/// Outcome of [`check_dj_zero`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjReport {
    pub tuples_checked: usize,
    /// Frame 4-tuples on which `DJ` does not vanish, with the offending value.
    pub failures: Vec<([usize; 4], Vec<Polynomial>)>,
}

impl DjReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for DjReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DJ = 0 on {} frame 4-tuples", self.tuples_checked)?;
        for (t, v) in &self.failures {
            let shown: Vec<String> = v.iter().map(|p| p.to_string()).collect();
            write!(f, "\n  DJ(e{}, e{}, e{}, e{}) = ({})", t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1, shown.join(", "))?;
        }
        Ok(())
    }
}

fn kernel_jacobiator(spec: &AlgebroidSpec, x: &Section, y: &Section, z: &Section) -> Result<Section> {
    let j = spec.jacobiator(x, y, z)?;
    spec.kernel_component(&j)?
        .ok_or_else(|| Error::NotKernelValued(format!("J({x}, {y}, {z}) = {j}")))
}

/// `(DJ)(psi_0, ..., psi_3) = sum_i (-1)^i nabla_{psi_i} J(.. psi_i omitted ..)
///   + sum_{i<j} (-1)^{i+j} J([psi_i, psi_j], .. psi_i, psi_j omitted ..)`.
pub fn dj_value(spec: &AlgebroidSpec, psi: &[Section; 4]) -> Result<Section> {
    let m = spec.base_dim();
    let mut total = Section::zero(Ambient::F, spec.kernel_rank(), m);
    for i in 0..4 {
        let rest: Vec<&Section> = (0..4).filter(|&k| k != i).map(|k| &psi[k]).collect();
        let j = kernel_jacobiator(spec, rest[0], rest[1], rest[2])?;
        let term = spec.connection(&psi[i], &j)?;
        total = if i % 2 == 0 { &total + &term } else { &total - &term };
    }
    for i in 0..4 {
        for k in i + 1..4 {
            let br = spec.bracket(&psi[i], &psi[k])?;
            let rest: Vec<&Section> = (0..4).filter(|&l| l != i && l != k).map(|l| &psi[l]).collect();
            let term = kernel_jacobiator(spec, &br, rest[0], rest[1])?;
            total = if (i + k) % 2 == 0 { &total + &term } else { &total - &term };
        }
    }
    Ok(total)
}

/// Evaluates `DJ` on every increasing 4-tuple of frame sections.
pub fn check_dj_zero(spec: &AlgebroidSpec) -> Result<DjReport> {
    let n = spec.rank();
    let mut report = DjReport { tuples_checked: 0, failures: Vec::new() };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let psi = [spec.frame(a), spec.frame(b), spec.frame(c), spec.frame(d)];
                    let value = dj_value(spec, &psi)?;
                    report.tuples_checked += 1;
                    if !value.is_zero() {
                        report.failures.push(([a, b, c, d], value.coeffs().to_vec()));
                    }
                }
            }
        }
    }
    Ok(report)
}
