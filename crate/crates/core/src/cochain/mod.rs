//! The graded commutative cochain algebra
//! `C^n = sum_{p+2q=n} Lambda^p A* (x) Sym^q F*` over `Q[x1..xm]`.
//!
//! It is generated by functions, the odd degree-1 generators `xi^a` dual to
//! the frame of `A`, and the even degree-2 generators `b^B` dual to the
//! kernel frame. A cochain is stored as a map from canonical basis keys
//! (strictly increasing `xi` indices, weakly increasing `b` indices) to
//! polynomial coefficients; signs from reordering odd generators are
//! absorbed into the coefficients.

mod coordinate;
mod dj;
mod operators;
mod pairing;
mod text;

pub use coordinate::{q_coordinate_check, QCheckReport};
pub use dj::{check_dj_zero, DjReport};
pub use operators::{CochainCalculus, Operator};
pub use pairing::{determinant, evaluate};

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::algebroid::AlgebroidSpec;
use crate::error::{Error, Result};
use crate::scalars::{Polynomial, Rational};

/// The dimensions a cochain lives over: base variables, rank of `A`, rank of `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CochainShape {
    pub base_dim: usize,
    pub rank: usize,
    pub kernel_rank: usize,
}

impl CochainShape {
    pub fn of(spec: &AlgebroidSpec) -> Self {
        CochainShape { base_dim: spec.base_dim(), rank: spec.rank(), kernel_rank: spec.kernel_rank() }
    }
}

/// A basis monomial `xi^{a1} ... xi^{ap} b^{B1} ... b^{Bq}` (zero based indices).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    wedge: Vec<u16>,
    sym: Vec<u16>,
}

impl BasisKey {
    /// `wedge` must be strictly increasing and `sym` weakly increasing.
    pub fn new(wedge: Vec<u16>, sym: Vec<u16>) -> Self {
        debug_assert!(wedge.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(sym.windows(2).all(|w| w[0] <= w[1]));
        BasisKey { wedge, sym }
    }

    pub fn unit() -> Self {
        BasisKey { wedge: Vec::new(), sym: Vec::new() }
    }

    pub fn wedge(&self) -> &[u16] {
        &self.wedge
    }

    pub fn sym(&self) -> &[u16] {
        &self.sym
    }

    pub fn degree(&self) -> usize {
        self.wedge.len() + 2 * self.sym.len()
    }

    /// Product of two keys: `None` when an odd generator repeats, otherwise
    /// the Koszul sign and the canonical key.
    pub fn product(&self, other: &BasisKey) -> Option<(bool, BasisKey)> {
        let mut wedge = Vec::with_capacity(self.wedge.len() + other.wedge.len());
        let mut negative = false;
        let (mut i, mut j) = (0, 0);
        while i < self.wedge.len() || j < other.wedge.len() {
            if j == other.wedge.len() || (i < self.wedge.len() && self.wedge[i] < other.wedge[j]) {
                wedge.push(self.wedge[i]);
                i += 1;
            } else if i == self.wedge.len() || other.wedge[j] < self.wedge[i] {
                // other.wedge[j] jumps over the remaining self.wedge[i..]
                if (self.wedge.len() - i) % 2 == 1 {
                    negative = !negative;
                }
                wedge.push(other.wedge[j]);
                j += 1;
            } else {
                return None;
            }
        }
        let mut sym = Vec::with_capacity(self.sym.len() + other.sym.len());
        sym.extend_from_slice(&self.sym);
        sym.extend_from_slice(&other.sym);
        sym.sort_unstable();
        Some((negative, BasisKey { wedge, sym }))
    }
}

/// Homogeneous element of `C^degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    shape: CochainShape,
    degree: usize,
    terms: BTreeMap<BasisKey, Polynomial>,
}

impl Cochain {
    pub fn zero(shape: CochainShape, degree: usize) -> Self {
        Cochain { shape, degree, terms: BTreeMap::new() }
    }

    /// A function `f` in `C^0`.
    pub fn function(shape: CochainShape, f: Polynomial) -> Self {
        assert_eq!(f.nvars(), shape.base_dim, "function has wrong variable count");
        let mut c = Self::zero(shape, 0);
        c.add_term(BasisKey::unit(), f);
        c
    }

    /// The odd generator `xi^{a+1}`.
    pub fn xi(shape: CochainShape, a: usize) -> Self {
        assert!(a < shape.rank, "xi index out of range");
        let mut c = Self::zero(shape, 1);
        c.add_term(BasisKey::new(vec![a as u16], vec![]), Polynomial::one(shape.base_dim));
        c
    }

    /// The even generator `b^{b+1}`.
    pub fn b(shape: CochainShape, b: usize) -> Self {
        assert!(b < shape.kernel_rank, "b index out of range");
        let mut c = Self::zero(shape, 2);
        c.add_term(BasisKey::new(vec![], vec![b as u16]), Polynomial::one(shape.base_dim));
        c
    }

    /// `coeff * xi^{wedge[0]} ... xi^{wedge[p-1]} b^{sym[0]} ... b^{sym[q-1]}` in
    /// the order given; reordering signs are applied.
    pub fn monomial(shape: CochainShape, wedge: &[usize], sym: &[usize], coeff: Polynomial) -> Result<Self> {
        if coeff.nvars() != shape.base_dim {
            return Err(Error::VariableMismatch { left: shape.base_dim, right: coeff.nvars() });
        }
        if let Some(&a) = wedge.iter().find(|&&a| a >= shape.rank) {
            return Err(Error::IndexOutOfRange { index: a + 1, bound: shape.rank });
        }
        if let Some(&b) = sym.iter().find(|&&b| b >= shape.kernel_rank) {
            return Err(Error::IndexOutOfRange { index: b + 1, bound: shape.kernel_rank });
        }
        let degree = wedge.len() + 2 * sym.len();
        let mut out = Self::zero(shape, degree);
        let mut key = BasisKey::unit();
        let mut negative = false;
        for &a in wedge {
            match key.product(&BasisKey::new(vec![a as u16], vec![])) {
                None => return Ok(out),
                Some((neg, k)) => {
                    negative ^= neg;
                    key = k;
                }
            }
        }
        key.sym = sym.iter().map(|&b| b as u16).collect();
        key.sym.sort_unstable();
        out.add_term(key, if negative { -coeff } else { coeff });
        Ok(out)
    }

    pub fn shape(&self) -> CochainShape {
        self.shape
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &BasisKey) -> Polynomial {
        self.terms.get(key).cloned().unwrap_or_else(|| Polynomial::zero(self.shape.base_dim))
    }

    /// Highest polynomial degree among the coefficients.
    pub fn coefficient_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(Polynomial::degree).max()
    }

    pub(crate) fn add_term(&mut self, key: BasisKey, value: Polynomial) {
        debug_assert_eq!(key.degree(), self.degree);
        if value.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &value;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v);
        }
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Cochain) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    /// `f * self` for a function `f`.
    pub fn scale(&self, f: &Polynomial) -> Cochain {
        let mut out = Cochain::zero(self.shape, self.degree);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * f);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Cochain {
        if c.is_zero() {
            return Cochain::zero(self.shape, self.degree);
        }
        Cochain {
            shape: self.shape,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect(),
        }
    }

    /// Graded commutative product. Only the odd `xi` generators produce
    /// Koszul signs.
    pub fn wedge(&self, other: &Cochain) -> Result<Cochain> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(self.wedge_unchecked(other))
    }

    pub(crate) fn wedge_unchecked(&self, other: &Cochain) -> Cochain {
        let mut out = Cochain::zero(self.shape, self.degree + other.degree);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                if let Some((negative, key)) = k1.product(k2) {
                    let p = v1 * v2;
                    out.add_term(key, if negative { -p } else { p });
                }
            }
        }
        out
    }
}

impl Add for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        self.checked_add(rhs).expect("cochain addition")
    }
}

impl Sub for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        self.checked_sub(rhs).expect("cochain subtraction")
    }
}

impl Neg for &Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        Cochain {
            shape: self.shape,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SHAPE: CochainShape = CochainShape { base_dim: 0, rank: 3, kernel_rank: 2 };

    #[test]
    fn odd_generator_squares_to_zero() {
        let xi = Cochain::xi(SHAPE, 0);
        assert!(xi.wedge(&xi).unwrap().is_zero());
    }

    #[test]
    fn even_generator_square_survives() {
        let b = Cochain::b(SHAPE, 0);
        let sq = b.wedge(&b).unwrap();
        assert_eq!(sq.degree(), 4);
        assert_eq!(sq.coefficient(&BasisKey::new(vec![], vec![0, 0])), Polynomial::one(0));
    }

    #[test]
    fn koszul_sign() {
        let x1 = Cochain::xi(SHAPE, 0);
        let x2 = Cochain::xi(SHAPE, 1);
        assert_eq!(x1.wedge(&x2).unwrap(), -&x2.wedge(&x1).unwrap());
        // an even factor commutes with everything
        let b = Cochain::b(SHAPE, 1);
        assert_eq!(x1.wedge(&b).unwrap(), b.wedge(&x1).unwrap());
    }

    #[test]
    fn monomial_reorders_with_sign() {
        let m = Cochain::monomial(SHAPE, &[2, 0, 1], &[1, 0], Polynomial::one(0)).unwrap();
        let key = BasisKey::new(vec![0, 1, 2], vec![0, 1]);
        // (2 0 1) -> (0 1 2) is an even permutation
        assert_eq!(m.coefficient(&key), Polynomial::one(0));
        let m = Cochain::monomial(SHAPE, &[1, 0], &[], Polynomial::one(0)).unwrap();
        assert_eq!(m.coefficient(&BasisKey::new(vec![0, 1], vec![])), Polynomial::from_int(0, -1));
        assert!(Cochain::monomial(SHAPE, &[1, 1], &[], Polynomial::one(0)).unwrap().is_zero());
        assert!(Cochain::monomial(SHAPE, &[3], &[], Polynomial::one(0)).is_err());
    }

    #[test]
    fn degree_and_shape_mismatches() {
        let x1 = Cochain::xi(SHAPE, 0);
        let b = Cochain::b(SHAPE, 0);
        assert!(matches!(x1.checked_add(&b), Err(Error::DegreeMismatch { .. })));
        let other = CochainShape { base_dim: 0, rank: 4, kernel_rank: 2 };
        assert_eq!(x1.wedge(&Cochain::xi(other, 0)), Err(Error::ShapeMismatch));
    }
}
