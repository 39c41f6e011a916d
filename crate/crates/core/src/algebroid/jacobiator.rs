use std::collections::BTreeMap;

use super::AlgebroidSpec;
use crate::error::{Error, Result};
use crate::scalars::Polynomial;

/// Kernel components `J^B_abc` of the Jacobiator on frame sections,
/// `J(e_a, e_b, e_c) = J^B_abc t(e_B)`.
///
/// Only strictly increasing triples `a < b < c` with a nonzero value are
/// stored; [`JacobiatorTensor::component`] restores the full alternating
/// tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiatorTensor {
    rank: usize,
    kernel_rank: usize,
    base_dim: usize,
    values: BTreeMap<[usize; 3], Vec<Polynomial>>,
}

/// Sorts three distinct indices, returning the sign of the sorting permutation.
fn sort3(mut idx: [usize; 3]) -> Option<(i32, [usize; 3])> {
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            } else if idx[j] == idx[j + 1] {
                return None;
            }
        }
    }
    if idx[0] == idx[1] || idx[1] == idx[2] {
        return None;
    }
    Some((sign, idx))
}

impl JacobiatorTensor {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kernel_rank(&self) -> usize {
        self.kernel_rank
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `J^B_abc` for any index triple.
    pub fn component(&self, a: usize, b: usize, c: usize, kernel_index: usize) -> Polynomial {
        match sort3([a, b, c]) {
            None => Polynomial::zero(self.base_dim),
            Some((sign, key)) => match self.values.get(&key) {
                None => Polynomial::zero(self.base_dim),
                Some(v) if sign > 0 => v[kernel_index].clone(),
                Some(v) => -&v[kernel_index],
            },
        }
    }

    /// Nonzero entries `([a, b, c], J^_abc)` with `a < b < c`.
    pub fn nonzero(&self) -> impl Iterator<Item = (&[usize; 3], &[Polynomial])> {
        self.values.iter().map(|(k, v)| (k, v.as_slice()))
    }
}

impl AlgebroidSpec {
    /// Jacobiator on all frame triples, checked to satisfy `rho o J = 0` and
    /// to lie in the span of the kernel frame.
    pub fn jacobiator_tensor(&self) -> Result<JacobiatorTensor> {
        let n = self.rank();
        let mut values = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let j = self.jacobiator(&self.frame(a), &self.frame(b), &self.frame(c))?;
                    if j.is_zero() {
                        continue;
                    }
                    if !self.anchor_of(&j)?.is_zero() {
                        return Err(Error::SpecNotValidated(format!(
                            "rho(J(e{}, e{}, e{})) does not vanish",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                    let v = self
                        .kernel_component(&j)?
                        .ok_or(Error::JacobiatorEscapesKernel(a, b, c))?;
                    values.insert([a, b, c], v.coeffs().to_vec());
                }
            }
        }
        Ok(JacobiatorTensor {
            rank: n,
            kernel_rank: self.kernel_rank(),
            base_dim: self.base_dim(),
            values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::integer;

    #[test]
    fn lie_algebra_has_zero_tensor() {
        let so3 = AlgebroidSpec::almost_lie_algebra(
            3,
            [(0, 1, 2, integer(1)), (1, 2, 0, integer(1)), (2, 0, 1, integer(1))],
        )
        .unwrap();
        assert!(so3.jacobiator_tensor().unwrap().is_zero());
    }

    #[test]
    fn triple_bracket_table() {
        let spec = AlgebroidSpec::almost_lie_algebra(
            3,
            [(0, 1, 0, integer(1)), (1, 2, 1, integer(1)), (2, 0, 2, integer(1))],
        )
        .unwrap();
        let j = spec.jacobiator_tensor().unwrap();
        for b in 0..3 {
            assert_eq!(j.component(0, 1, 2, b), Polynomial::one(0));
            assert_eq!(j.component(1, 0, 2, b), Polynomial::from_int(0, -1));
            assert_eq!(j.component(2, 0, 1, b), Polynomial::one(0));
            assert!(j.component(0, 0, 2, b).is_zero());
        }
    }

    #[test]
    fn escaping_jacobiator_is_an_error() {
        // zero anchor, but the kernel frame only spans e1
        let spec = AlgebroidSpec::builder(1, 3, 1)
            .structure(0, 1, 0, Polynomial::one(1))
            .structure(1, 2, 1, Polynomial::one(1))
            .structure(2, 0, 2, Polynomial::one(1))
            .kernel_frame(0, 0, Polynomial::one(1))
            .kernel_projection(0, 0, Polynomial::one(1))
            .build()
            .unwrap();
        assert_eq!(spec.jacobiator_tensor(), Err(Error::JacobiatorEscapesKernel(0, 1, 2)));
    }

    #[test]
    fn sorting_sign() {
        assert_eq!(sort3([2, 0, 1]), Some((1, [0, 1, 2])));
        assert_eq!(sort3([1, 0, 2]), Some((-1, [0, 1, 2])));
        assert_eq!(sort3([1, 1, 2]), None);
    }
}
