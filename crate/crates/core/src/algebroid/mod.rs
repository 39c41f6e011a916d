//! Anchored free modules with a skew bracket: the almost Lie-Rinehart
//! core over `Q[x1..xm]`.
//!
//! A spec fixes a frame `e_1..e_n` of `A`. The bracket is stored through
//! its structure functions `[e_a, e_b] = C^c_ab e_c` and extended to all
//! sections by the Leibniz rule. The anchor kernel `F` is described by a
//! user supplied frame `t: F -> A` together with a splitting `s: A -> F`,
//! `s t = id`.

mod axioms;
mod connection;
mod jacobiator;
mod section;

pub use axioms::{Axiom, AxiomCheck, AxiomReport, Outcome};
pub use connection::{frame_connection, ConnectionCoefficients};
pub use jacobiator::JacobiatorTensor;
pub use section::{Ambient, Section};

use crate::error::{Error, Result};
use crate::scalars::{Derivation, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebroidSpec {
    base_dim: usize,
    rank: usize,
    kernel_rank: usize,
    /// `anchor[a][i] = rho^i_a`
    anchor: Vec<Vec<Polynomial>>,
    /// `structure[a][b][c] = C^c_ab`
    structure: Vec<Vec<Vec<Polynomial>>>,
    /// `kernel_frame[a][B] = t^a_B`
    kernel_frame: Vec<Vec<Polynomial>>,
    /// `kernel_projection[B][a] = s^B_a`
    kernel_projection: Vec<Vec<Polynomial>>,
}

/// Incremental construction of an [`AlgebroidSpec`]. Indices are zero based.
#[derive(Clone, Debug)]
pub struct SpecBuilder {
    spec: AlgebroidSpec,
    error: Option<Error>,
}

impl SpecBuilder {
    fn check(&mut self, index: usize, bound: usize) -> bool {
        if index >= bound {
            self.error.get_or_insert(Error::IndexOutOfRange { index: index + 1, bound });
            return false;
        }
        true
    }

    fn check_poly(&mut self, p: &Polynomial) -> bool {
        if p.nvars() != self.spec.base_dim {
            self.error.get_or_insert(Error::VariableMismatch {
                left: self.spec.base_dim,
                right: p.nvars(),
            });
            return false;
        }
        true
    }

    /// Sets `rho^i_a`.
    pub fn anchor(mut self, a: usize, i: usize, value: Polynomial) -> Self {
        let (n, m) = (self.spec.rank, self.spec.base_dim);
        if self.check(a, n) && self.check(i, m) && self.check_poly(&value) {
            self.spec.anchor[a][i] = value;
        }
        self
    }

    /// Sets `C^c_ab = value` and `C^c_ba = -value`.
    pub fn structure(mut self, a: usize, b: usize, c: usize, value: Polynomial) -> Self {
        let n = self.spec.rank;
        if self.check(a, n) && self.check(b, n) && self.check(c, n) && self.check_poly(&value) {
            if a == b {
                if !value.is_zero() {
                    self.error.get_or_insert(Error::InvalidSpec(format!(
                        "[e{0}, e{0}] must vanish",
                        a + 1
                    )));
                }
                return self;
            }
            self.spec.structure[b][a][c] = -&value;
            self.spec.structure[a][b][c] = value;
        }
        self
    }

    /// Sets a single structure function without touching its mirror entry.
    /// Only useful for exercising the skewness check.
    pub fn structure_unchecked(mut self, a: usize, b: usize, c: usize, value: Polynomial) -> Self {
        let n = self.spec.rank;
        if self.check(a, n) && self.check(b, n) && self.check(c, n) && self.check_poly(&value) {
            self.spec.structure[a][b][c] = value;
        }
        self
    }

    /// Sets `t^a_B`.
    pub fn kernel_frame(mut self, a: usize, b: usize, value: Polynomial) -> Self {
        let (n, r) = (self.spec.rank, self.spec.kernel_rank);
        if self.check(a, n) && self.check(b, r) && self.check_poly(&value) {
            self.spec.kernel_frame[a][b] = value;
        }
        self
    }

    /// Sets `s^B_a`.
    pub fn kernel_projection(mut self, b: usize, a: usize, value: Polynomial) -> Self {
        let (n, r) = (self.spec.rank, self.spec.kernel_rank);
        if self.check(b, r) && self.check(a, n) && self.check_poly(&value) {
            self.spec.kernel_projection[b][a] = value;
        }
        self
    }

    /// `t = s = id`; requires `kernel_rank == rank`.
    pub fn identity_kernel(mut self) -> Self {
        if self.spec.kernel_rank != self.spec.rank {
            self.error.get_or_insert(Error::InvalidSpec(
                "identity kernel frame needs kernel_rank == rank".into(),
            ));
            return self;
        }
        let m = self.spec.base_dim;
        for a in 0..self.spec.rank {
            self.spec.kernel_frame[a][a] = Polynomial::one(m);
            self.spec.kernel_projection[a][a] = Polynomial::one(m);
        }
        self
    }

    pub fn build(self) -> Result<AlgebroidSpec> {
        match self.error {
            Some(e) => Err(e),
            None => Ok(self.spec),
        }
    }
}

impl AlgebroidSpec {
    /// Starts a spec with zero anchor, zero bracket and zero kernel data.
    ///
    /// Over a point (`base_dim == 0`) the anchor vanishes, so the kernel is
    /// all of `A` and `kernel_rank` must equal `rank`.
    pub fn builder(base_dim: usize, rank: usize, kernel_rank: usize) -> SpecBuilder {
        let zero = Polynomial::zero(base_dim);
        let error = if kernel_rank > rank {
            Some(Error::InvalidSpec(format!(
                "kernel rank {kernel_rank} exceeds rank {rank}"
            )))
        } else if base_dim == 0 && kernel_rank != rank {
            Some(Error::InvalidSpec(
                "over a point the kernel frame must span A (kernel_rank == rank)".into(),
            ))
        } else {
            None
        };
        SpecBuilder {
            spec: AlgebroidSpec {
                base_dim,
                rank,
                kernel_rank,
                anchor: vec![vec![zero.clone(); base_dim]; rank],
                structure: vec![vec![vec![zero.clone(); rank]; rank]; rank],
                kernel_frame: vec![vec![zero.clone(); kernel_rank]; rank],
                kernel_projection: vec![vec![zero; rank]; kernel_rank],
            },
            error,
        }
    }

    /// An almost Lie algebra: rank `n` over a point with identity kernel frame
    /// and the given constants `C^c_ab` (for `a < b`).
    pub fn almost_lie_algebra(
        rank: usize,
        constants: impl IntoIterator<Item = (usize, usize, usize, crate::scalars::Rational)>,
    ) -> Result<AlgebroidSpec> {
        let mut b = Self::builder(0, rank, rank).identity_kernel();
        for (x, y, z, c) in constants {
            b = b.structure(x, y, z, Polynomial::constant(0, c));
        }
        b.build()
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kernel_rank(&self) -> usize {
        self.kernel_rank
    }

    pub fn anchor_entry(&self, a: usize, i: usize) -> &Polynomial {
        &self.anchor[a][i]
    }

    pub fn structure_entry(&self, a: usize, b: usize, c: usize) -> &Polynomial {
        &self.structure[a][b][c]
    }

    pub fn kernel_frame_entry(&self, a: usize, b: usize) -> &Polynomial {
        &self.kernel_frame[a][b]
    }

    pub fn kernel_projection_entry(&self, b: usize, a: usize) -> &Polynomial {
        &self.kernel_projection[b][a]
    }

    pub(crate) fn structure_mut(&mut self) -> &mut Vec<Vec<Vec<Polynomial>>> {
        &mut self.structure
    }

    /// The frame section `e_a` of `A`.
    pub fn frame(&self, a: usize) -> Section {
        Section::basis(Ambient::A, self.rank, self.base_dim, a)
    }

    /// The frame section `e_B` of `F`.
    pub fn kernel_basis(&self, b: usize) -> Section {
        Section::basis(Ambient::F, self.kernel_rank, self.base_dim, b)
    }

    /// True when anchor, structure functions and kernel data are all constants.
    pub fn is_constant(&self) -> bool {
        let flat = self
            .anchor
            .iter()
            .flatten()
            .chain(self.structure.iter().flatten().flatten())
            .chain(self.kernel_frame.iter().flatten())
            .chain(self.kernel_projection.iter().flatten());
        flat.into_iter().all(Polynomial::is_constant)
    }

    fn check_section(&self, s: &Section, ambient: Ambient) -> Result<()> {
        if s.ambient() != ambient {
            return Err(Error::AmbientMismatch { expected: ambient.name(), found: s.ambient().name() });
        }
        let expected = match ambient {
            Ambient::A => self.rank,
            Ambient::F => self.kernel_rank,
        };
        if s.len() != expected {
            return Err(Error::RankMismatch { expected, found: s.len() });
        }
        if s.nvars() != self.base_dim {
            return Err(Error::VariableMismatch { left: self.base_dim, right: s.nvars() });
        }
        Ok(())
    }

    /// `rho(phi) = sum_a phi^a rho^i_a d/dx_i`.
    pub fn anchor_of(&self, phi: &Section) -> Result<Derivation> {
        self.check_section(phi, Ambient::A)?;
        let m = self.base_dim;
        let mut comps = vec![Polynomial::zero(m); m];
        for (a, coeff) in phi.coeffs().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (i, comp) in comps.iter_mut().enumerate() {
                let r = &self.anchor[a][i];
                if !r.is_zero() {
                    *comp = &*comp + &(coeff * r);
                }
            }
        }
        Derivation::new(comps)
    }

    /// `[phi, psi]^c = phi^a psi^b C^c_ab + rho(phi)[psi^c] - rho(psi)[phi^c]`.
    pub fn bracket(&self, phi: &Section, psi: &Section) -> Result<Section> {
        self.check_section(phi, Ambient::A)?;
        self.check_section(psi, Ambient::A)?;
        let (n, m) = (self.rank, self.base_dim);
        let mut out = vec![Polynomial::zero(m); n];
        for (a, pa) in phi.coeffs().iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, qb) in psi.coeffs().iter().enumerate() {
                if qb.is_zero() || a == b {
                    continue;
                }
                let weight = pa * qb;
                for (c, slot) in out.iter_mut().enumerate() {
                    let cc = &self.structure[a][b][c];
                    if !cc.is_zero() {
                        *slot = &*slot + &(&weight * cc);
                    }
                }
            }
        }
        if m > 0 {
            let rho_phi = self.anchor_of(phi)?;
            let rho_psi = self.anchor_of(psi)?;
            for (c, slot) in out.iter_mut().enumerate() {
                let t1 = rho_phi.apply(&psi.coeffs()[c])?;
                let t2 = rho_psi.apply(&phi.coeffs()[c])?;
                *slot = &(&*slot + &t1) - &t2;
            }
        }
        Ok(Section::new_with_vars(Ambient::A, out, m))
    }

    /// `t(v)`.
    pub fn embed(&self, v: &Section) -> Result<Section> {
        self.check_section(v, Ambient::F)?;
        let m = self.base_dim;
        let coeffs = (0..self.rank)
            .map(|a| {
                let mut acc = Polynomial::zero(m);
                for (b, vb) in v.coeffs().iter().enumerate() {
                    if !vb.is_zero() && !self.kernel_frame[a][b].is_zero() {
                        acc = &acc + &(&self.kernel_frame[a][b] * vb);
                    }
                }
                acc
            })
            .collect();
        Ok(Section::new_with_vars(Ambient::A, coeffs, m))
    }

    /// `s(phi)`.
    pub fn project(&self, phi: &Section) -> Result<Section> {
        self.check_section(phi, Ambient::A)?;
        let m = self.base_dim;
        let coeffs = (0..self.kernel_rank)
            .map(|b| {
                let mut acc = Polynomial::zero(m);
                for (a, pa) in phi.coeffs().iter().enumerate() {
                    if !pa.is_zero() && !self.kernel_projection[b][a].is_zero() {
                        acc = &acc + &(&self.kernel_projection[b][a] * pa);
                    }
                }
                acc
            })
            .collect();
        Ok(Section::new_with_vars(Ambient::F, coeffs, m))
    }

    /// `s(phi)` provided `t(s(phi)) == phi`, i.e. `phi` lies in the span of the kernel frame.
    pub fn kernel_component(&self, phi: &Section) -> Result<Option<Section>> {
        let v = self.project(phi)?;
        Ok((self.embed(&v)? == *phi).then_some(v))
    }

    /// `[phi, [psi, chi]] + [psi, [chi, phi]] + [chi, [phi, psi]]`.
    pub fn jacobiator(&self, phi: &Section, psi: &Section, chi: &Section) -> Result<Section> {
        let t1 = self.bracket(phi, &self.bracket(psi, chi)?)?;
        let t2 = self.bracket(psi, &self.bracket(chi, phi)?)?;
        let t3 = self.bracket(chi, &self.bracket(phi, psi)?)?;
        Ok(&(&t1 + &t2) + &t3)
    }

    /// Relabels the frame of `A`: the new `e_k` is the old `e_{perm[k]}`.
    pub fn permute_frame(&self, perm: &[usize]) -> Result<AlgebroidSpec> {
        let n = self.rank;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidSpec(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut inv = vec![0; n];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let mut out = self.clone();
        for k in 0..n {
            out.anchor[k] = self.anchor[perm[k]].clone();
            out.kernel_frame[k] = self.kernel_frame[perm[k]].clone();
            for l in 0..n {
                for c in 0..n {
                    out.structure[k][l][inv[c]] = self.structure[perm[k]][perm[l]][c].clone();
                }
            }
        }
        for b in 0..self.kernel_rank {
            for k in 0..n {
                out.kernel_projection[b][k] = self.kernel_projection[b][perm[k]].clone();
            }
        }
        Ok(out)
    }
}
