use std::fmt;
use std::ops::{Add, Sub};

use crate::scalars::Polynomial;

/// Which module a section belongs to: `A` or the kernel bundle `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    A,
    F,
}

impl Ambient {
    pub fn name(self) -> &'static str {
        match self {
            Ambient::A => "A",
            Ambient::F => "F",
        }
    }
}

/// Coefficients of a section in the chosen frame of `A` or `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    ambient: Ambient,
    nvars: usize,
    coeffs: Vec<Polynomial>,
}

impl Section {
    /// Panics if the coefficients disagree on the number of base variables
    /// or if `coeffs` is empty (use [`Section::new_with_vars`] then).
    pub fn new(ambient: Ambient, coeffs: Vec<Polynomial>) -> Self {
        let nvars = coeffs.first().map(Polynomial::nvars).expect("empty section; use new_with_vars");
        Self::new_with_vars(ambient, coeffs, nvars)
    }

    pub fn new_with_vars(ambient: Ambient, coeffs: Vec<Polynomial>, nvars: usize) -> Self {
        assert!(coeffs.iter().all(|c| c.nvars() == nvars), "mixed variable counts in section");
        Section { ambient, nvars, coeffs }
    }

    pub fn zero(ambient: Ambient, len: usize, nvars: usize) -> Self {
        Section { ambient, nvars, coeffs: vec![Polynomial::zero(nvars); len] }
    }

    pub fn basis(ambient: Ambient, len: usize, nvars: usize, index: usize) -> Self {
        let mut s = Self::zero(ambient, len, nvars);
        s.coeffs[index] = Polynomial::one(nvars);
        s
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// `f * self`.
    pub fn scale(&self, f: &Polynomial) -> Section {
        Section {
            ambient: self.ambient,
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        }
    }

    fn zip_with(&self, other: &Section, op: impl Fn(&Polynomial, &Polynomial) -> Polynomial) -> Section {
        assert_eq!(self.ambient, other.ambient, "sections of different modules");
        assert_eq!(self.coeffs.len(), other.coeffs.len(), "sections of different rank");
        Section {
            ambient: self.ambient,
            nvars: self.nvars,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| op(a, b)).collect(),
        }
    }
}

impl Add for &Section {
    type Output = Section;
    fn add(self, rhs: &Section) -> Section {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Section {
    type Output = Section;
    fn sub(self, rhs: &Section) -> Section {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.ambient {
            Ambient::A => "e",
            Ambient::F => "f",
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}) {letter}{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
