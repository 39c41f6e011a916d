//! Differential forms and bivectors with polynomial coefficients, and the
//! Cartan calculus on them.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{Derivation, Polynomial};

/// A `k`-form `sum_{i1<...<ik} w_I dx^{i1} ^ ... ^ dx^{ik}` (zero based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormField {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Polynomial>,
}

/// Sorts `indices`, returning the permutation sign, or `None` on a repeat.
fn sort_with_sign(indices: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    indices.windows(2).all(|w| w[0] < w[1]).then_some(negative)
}

impl FormField {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        FormField { nvars, degree, coeffs: BTreeMap::new() }
    }

    pub fn function(f: Polynomial) -> Self {
        let mut w = FormField::zero(f.nvars(), 0);
        w.add(vec![], f);
        w
    }

    /// `dx^i`.
    pub fn differential(nvars: usize, i: usize) -> Self {
        let mut w = FormField::zero(nvars, 1);
        w.add(vec![i], Polynomial::one(nvars));
        w
    }

    /// `coeff dx^{indices[0]} ^ ...` in any index order.
    pub fn monomial(nvars: usize, indices: &[usize], coeff: Polynomial) -> Result<Self> {
        if coeff.nvars() != nvars {
            return Err(Error::VariableMismatch { left: nvars, right: coeff.nvars() });
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= nvars) {
            return Err(Error::IndexOutOfRange { index: i + 1, bound: nvars });
        }
        let mut w = FormField::zero(nvars, indices.len());
        let mut sorted = indices.to_vec();
        if let Some(negative) = sort_with_sign(&mut sorted) {
            w.add(sorted, if negative { -&coeff } else { coeff });
        }
        Ok(w)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, indices: &[usize]) -> Polynomial {
        self.coeffs.get(indices).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Polynomial)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn add(&mut self, key: Vec<usize>, value: Polynomial) {
        if value.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key.clone()).or_insert_with(|| Polynomial::zero(value.nvars()));
        *slot = &*slot + &value;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    fn check_same(&self, other: &FormField) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &FormField) -> Result<FormField> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &FormField) -> Result<FormField> {
        self.checked_add(&other.scale(&Polynomial::from_int(other.nvars, -1)))
    }

    pub fn scale(&self, f: &Polynomial) -> FormField {
        let mut out = FormField::zero(self.nvars, self.degree);
        for (k, v) in &self.coeffs {
            out.add(k.clone(), v * f);
        }
        out
    }

    pub fn wedge(&self, other: &FormField) -> Result<FormField> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        let mut out = FormField::zero(self.nvars, self.degree + other.degree);
        for (k1, v1) in &self.coeffs {
            for (k2, v2) in &other.coeffs {
                let mut key: Vec<usize> = k1.iter().chain(k2).copied().collect();
                if let Some(negative) = sort_with_sign(&mut key) {
                    let v = v1 * v2;
                    out.add(key, if negative { -&v } else { v });
                }
            }
        }
        Ok(out)
    }

    /// `w(X_1, ..., X_k)` for vector fields given by their components.
    pub fn evaluate(&self, args: &[&Derivation]) -> Result<Polynomial> {
        if args.len() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: args.len() });
        }
        let mut w = self.clone();
        for x in args {
            w = cartan_contract(x, &w)?;
        }
        Ok(w.coefficient(&[]))
    }
}

impl fmt::Display for FormField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, v)| {
                if k.is_empty() {
                    format!("({v})")
                } else {
                    let dx: Vec<String> = k.iter().map(|i| format!("dx{}", i + 1)).collect();
                    format!("({v}) {}", dx.join("^"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// de Rham differential.
pub fn cartan_d(w: &FormField) -> FormField {
    let mut out = FormField::zero(w.nvars, w.degree + 1);
    for (key, f) in &w.coeffs {
        for j in 0..w.nvars {
            let df = f.partial(j);
            if df.is_zero() {
                continue;
            }
            let mut k = Vec::with_capacity(key.len() + 1);
            k.push(j);
            k.extend_from_slice(key);
            if let Some(negative) = sort_with_sign(&mut k) {
                out.add(k, if negative { -&df } else { df });
            }
        }
    }
    out
}

/// Interior product `i_X w`, inserting `X` into the first slot.
pub fn cartan_contract(x: &Derivation, w: &FormField) -> Result<FormField> {
    if x.nvars() != w.nvars {
        return Err(Error::DimensionMismatch(format!(
            "vector field on {} variables, form on {}",
            x.nvars(),
            w.nvars
        )));
    }
    if w.degree == 0 {
        return Ok(FormField::zero(w.nvars, 0));
    }
    let mut out = FormField::zero(w.nvars, w.degree - 1);
    for (key, f) in &w.coeffs {
        for (l, &i) in key.iter().enumerate() {
            let xi = &x.components()[i];
            if xi.is_zero() {
                continue;
            }
            let mut rest = key.clone();
            rest.remove(l);
            let v = xi * f;
            out.add(rest, if l % 2 == 1 { -&v } else { v });
        }
    }
    Ok(out)
}

/// Lie derivative by the Cartan formula `L_X = i_X d + d i_X`.
pub fn cartan_lie(x: &Derivation, w: &FormField) -> Result<FormField> {
    let a = cartan_contract(x, &cartan_d(w))?;
    if w.degree == 0 {
        return Ok(a);
    }
    let b = cartan_d(&cartan_contract(x, w)?);
    a.checked_add(&b)
}

/// A bivector `Pi = 1/2 Pi^{ij} d_i ^ d_j` stored as its antisymmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivectorField {
    nvars: usize,
    matrix: Vec<Vec<Polynomial>>,
}

impl BivectorField {
    pub fn zero(nvars: usize) -> Self {
        BivectorField { nvars, matrix: vec![vec![Polynomial::zero(nvars); nvars]; nvars] }
    }

    /// Builds `Pi` from its entries `Pi^{ij}` with `i < j`.
    pub fn from_upper(nvars: usize, entries: impl IntoIterator<Item = (usize, usize, Polynomial)>) -> Result<Self> {
        let mut pi = BivectorField::zero(nvars);
        for (i, j, v) in entries {
            pi.set(i, j, v)?;
        }
        Ok(pi)
    }

    /// Checks exact antisymmetry of a full matrix.
    pub fn from_matrix(matrix: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if v.nvars() != n {
                    return Err(Error::VariableMismatch { left: n, right: v.nvars() });
                }
                if !(v + &matrix[j][i]).is_zero() {
                    return Err(Error::InvalidSpec(format!("Pi^{{{}{}}} is not antisymmetric", i + 1, j + 1)));
                }
            }
        }
        Ok(BivectorField { nvars: n, matrix })
    }

    /// Sets `Pi^{ij} = v` and `Pi^{ji} = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) -> Result<()> {
        let n = self.nvars;
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange { index: i.max(j) + 1, bound: n });
        }
        if v.nvars() != n {
            return Err(Error::VariableMismatch { left: n, right: v.nvars() });
        }
        if i == j {
            return if v.is_zero() { Ok(()) } else { Err(Error::InvalidSpec("Pi^{ii} must vanish".into())) };
        }
        self.matrix[j][i] = -&v;
        self.matrix[i][j] = v;
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.matrix
    }

    /// `Pi^#(alpha) = alpha_i Pi^{ij} d_j`.
    pub fn sharp(&self, alpha: &FormField) -> Result<Derivation> {
        if alpha.degree() != 1 || alpha.nvars() != self.nvars {
            return Err(Error::DimensionMismatch("Pi^# takes a 1-form on the same base".into()));
        }
        let n = self.nvars;
        let comps = (0..n)
            .map(|j| {
                let mut acc = Polynomial::zero(n);
                for i in 0..n {
                    let a = alpha.coefficient(&[i]);
                    if !a.is_zero() {
                        acc = &acc + &(&a * &self.matrix[i][j]);
                    }
                }
                acc
            })
            .collect();
        Derivation::new(comps)
    }
}
