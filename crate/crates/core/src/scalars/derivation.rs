use std::fmt;

use super::Polynomial;
use crate::error::{Error, Result};

/// A derivation `sum_i f_i d/dx_i` of the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    nvars: usize,
    components: Vec<Polynomial>,
}

impl Derivation {
    pub fn zero(nvars: usize) -> Self {
        Derivation { nvars, components: vec![Polynomial::zero(nvars); nvars] }
    }

    /// `d/dx_{index+1}`.
    pub fn coordinate(nvars: usize, index: usize) -> Self {
        let mut d = Self::zero(nvars);
        d.components[index] = Polynomial::one(nvars);
        d
    }

    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let nvars = components.len();
        if let Some(bad) = components.iter().find(|c| c.nvars() != nvars) {
            return Err(Error::VariableMismatch { left: nvars, right: bad.nvars() });
        }
        Ok(Derivation { nvars, components })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: f.nvars() });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (i, xi) in self.components.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let df = f.partial(i);
            if !df.is_zero() {
                out = &out + &(xi * &df);
            }
        }
        Ok(out)
    }

    /// `[X, Y]` with components `X[Y_i] - Y[X_i]`.
    pub fn commutator(&self, other: &Derivation) -> Result<Derivation> {
        if other.nvars != self.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(x_i, y_i)| Ok(&self.apply(y_i)? - &other.apply(x_i)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Derivation { nvars: self.nvars, components })
    }

    pub fn scale(&self, f: &Polynomial) -> Derivation {
        Derivation {
            nvars: self.nvars,
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    pub fn checked_add(&self, other: &Derivation) -> Result<Derivation> {
        if other.nvars != self.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(Derivation {
            nvars: self.nvars,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        })
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}) d/dx{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::integer;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(2, i)
    }

    #[test]
    fn differentiates_monomial() {
        let f = &(&x(0) * &x(0)) * &x(1);
        let d = Derivation::coordinate(2, 0);
        assert_eq!(d.apply(&f).unwrap(), (&x(0) * &x(1)).scale(&integer(2)));
    }

    #[test]
    fn kills_constants() {
        let d = Derivation::new(vec![&x(0) * &x(1), x(1)]).unwrap();
        assert!(d.apply(&Polynomial::from_int(2, 9)).unwrap().is_zero());
    }

    #[test]
    fn x_d_dy_on_y_squared() {
        // X = x d/dy, f = y^2 gives 2xy
        let d = Derivation::new(vec![Polynomial::zero(2), x(0)]).unwrap();
        let f = &x(1) * &x(1);
        assert_eq!(d.apply(&f).unwrap(), (&x(0) * &x(1)).scale(&integer(2)));
    }

    #[test]
    fn coordinate_fields_commute() {
        let dx = Derivation::coordinate(2, 0);
        let dy = Derivation::coordinate(2, 1);
        assert!(dx.commutator(&dy).unwrap().is_zero());
    }

    #[test]
    fn euler_field_against_d_dx() {
        // [x d/dx, d/dx] = -d/dx; checked on the test functions x and x^2
        let one_var = |i| Polynomial::var(1, i);
        let euler = Derivation::new(vec![one_var(0)]).unwrap();
        let dx = Derivation::coordinate(1, 0);
        let z = euler.commutator(&dx).unwrap();
        assert_eq!(z, Derivation::new(vec![Polynomial::from_int(1, -1)]).unwrap());
        for f in [one_var(0), &one_var(0) * &one_var(0)] {
            let lhs = z.apply(&f).unwrap();
            let rhs = &euler.apply(&dx.apply(&f).unwrap()).unwrap()
                - &dx.apply(&euler.apply(&f).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn self_commutator_vanishes() {
        let d = Derivation::new(vec![&x(0) * &x(1), &x(0) * &x(0)]).unwrap();
        assert!(d.commutator(&d).unwrap().is_zero());
    }

    #[test]
    fn mismatch_is_an_error() {
        let d = Derivation::coordinate(2, 0);
        assert!(d.apply(&Polynomial::var(3, 0)).is_err());
        assert!(d.commutator(&Derivation::coordinate(1, 0)).is_err());
    }
}
