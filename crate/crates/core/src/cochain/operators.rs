//! Operators on the cochain algebra, each given by its values on the
//! generators (functions via the coordinates `x^i`, the `xi^a` and the `b^B`)
//! and extended as a graded derivation: odd operators pick up the sign
//! `(-1)^k` when passing `k` odd generators, even ones satisfy the
//! ungraded Leibniz rule.

use std::fmt;

use super::{BasisKey, Cochain, CochainShape};
use crate::algebroid::{AlgebroidSpec, ConnectionCoefficients, JacobiatorTensor};
use crate::error::{Error, Result};
use crate::scalars::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug)]
struct GeneratorAction {
    parity: Parity,
    shift: usize,
    on_coordinates: Vec<Cochain>,
    on_xi: Vec<Cochain>,
    on_b: Vec<Cochain>,
}

impl GeneratorAction {
    fn zero(shape: CochainShape, parity: Parity, shift: usize) -> Self {
        GeneratorAction {
            parity,
            shift,
            on_coordinates: vec![Cochain::zero(shape, shift); shape.base_dim],
            on_xi: vec![Cochain::zero(shape, 1 + shift); shape.rank],
            on_b: vec![Cochain::zero(shape, 2 + shift); shape.kernel_rank],
        }
    }

    fn apply(&self, gamma: &Cochain) -> Cochain {
        let shape = gamma.shape();
        let mut out = Cochain::zero(shape, gamma.degree() + self.shift);
        for (key, f) in gamma.terms() {
            let rest = unit_cochain(shape, key.clone());
            for (i, image) in self.on_coordinates.iter().enumerate() {
                if image.is_zero() {
                    continue;
                }
                let df = f.partial(i);
                if !df.is_zero() {
                    out.add_assign_unchecked(&image.wedge_unchecked(&rest).scale(&df));
                }
            }
            let wedge = key.wedge();
            for (k, &a) in wedge.iter().enumerate() {
                let image = &self.on_xi[a as usize];
                if image.is_zero() {
                    continue;
                }
                let prefix = unit_cochain(shape, BasisKey::new(wedge[..k].to_vec(), vec![]));
                let suffix = unit_cochain(shape, BasisKey::new(wedge[k + 1..].to_vec(), key.sym().to_vec()));
                let mut term = prefix.wedge_unchecked(image).wedge_unchecked(&suffix).scale(f);
                if self.parity == Parity::Odd && k % 2 == 1 {
                    term = -&term;
                }
                out.add_assign_unchecked(&term);
            }
            let sym = key.sym();
            for (l, &b) in sym.iter().enumerate() {
                let image = &self.on_b[b as usize];
                if image.is_zero() {
                    continue;
                }
                let prefix = unit_cochain(shape, BasisKey::new(wedge.to_vec(), vec![]));
                let mut others = sym.to_vec();
                others.remove(l);
                let suffix = unit_cochain(shape, BasisKey::new(vec![], others));
                let mut term = prefix.wedge_unchecked(image).wedge_unchecked(&suffix).scale(f);
                if self.parity == Parity::Odd && wedge.len() % 2 == 1 {
                    term = -&term;
                }
                out.add_assign_unchecked(&term);
            }
        }
        out
    }
}

fn unit_cochain(shape: CochainShape, key: BasisKey) -> Cochain {
    let mut c = Cochain::zero(shape, key.degree());
    c.add_term(key, Polynomial::one(shape.base_dim));
    c
}

/// The operators of the twisted cochain complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    /// Exterior covariant derivative `D` (odd, degree +1).
    D,
    /// `delta_hat`: transpose of the kernel frame on `A*` generators (odd, +1).
    DeltaHat,
    /// `J_hat`: inserts the Jacobiator on `F*` generators (odd, +1).
    JHat,
    /// `J_tilde`: `alpha |-> alpha(t(J))` on `A*` generators (even, +2).
    JTilde,
    /// `L*`: partial transpose of `v |-> J(t(v), ., .)` on `F*` generators (even, +2).
    LStar,
    /// `d = D + J_hat + delta_hat`.
    Total,
}

impl Operator {
    pub const ALL: [Operator; 6] =
        [Operator::D, Operator::DeltaHat, Operator::JHat, Operator::JTilde, Operator::LStar, Operator::Total];

    pub fn is_odd(self) -> bool {
        !matches!(self, Operator::JTilde | Operator::LStar)
    }

    pub fn degree_shift(self) -> usize {
        if self.is_odd() {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operator::D => "D",
            Operator::DeltaHat => "delta_hat",
            Operator::JHat => "J_hat",
            Operator::JTilde => "J_tilde",
            Operator::LStar => "L*",
            Operator::Total => "d",
        })
    }
}

/// Operator tables for a spec that passed its axiom checks.
#[derive(Clone, Debug)]
pub struct CochainCalculus {
    spec: AlgebroidSpec,
    shape: CochainShape,
    jacobiator: JacobiatorTensor,
    connection: ConnectionCoefficients,
    d: GeneratorAction,
    delta_hat: GeneratorAction,
    j_hat: GeneratorAction,
    j_tilde: GeneratorAction,
    l_star: GeneratorAction,
}

impl CochainCalculus {
    pub fn new(spec: &AlgebroidSpec) -> Result<Self> {
        let report = spec.check_axioms();
        if !report.passed() {
            let reasons: Vec<String> = report.failures().map(|(a, m)| format!("{a}: {m}")).collect();
            return Err(Error::SpecNotValidated(reasons.join("; ")));
        }
        let jacobiator = spec.jacobiator_tensor()?;
        let connection = spec.connection_coefficients()?;
        let shape = CochainShape::of(spec);
        let (m, n, r) = (shape.base_dim, shape.rank, shape.kernel_rank);
        let zero = Polynomial::zero(m);
        let xi = |a| Cochain::xi(shape, a);
        let b = |c| Cochain::b(shape, c);

        // D: x^i -> rho^i_a xi^a, xi^c -> -sum_{a<b} C^c_ab xi^a xi^b,
        // b^C -> -Gamma^C_aB xi^a b^B
        let mut d = GeneratorAction::zero(shape, Parity::Odd, 1);
        for i in 0..m {
            for a in 0..n {
                let coeff = spec.anchor_entry(a, i);
                if !coeff.is_zero() {
                    d.on_coordinates[i].add_assign_unchecked(&xi(a).scale(coeff));
                }
            }
        }
        for c in 0..n {
            for a in 0..n {
                for bb in a + 1..n {
                    let coeff = spec.structure_entry(a, bb, c);
                    if !coeff.is_zero() {
                        let term = Cochain::monomial(shape, &[a, bb], &[], -coeff)?;
                        d.on_xi[c].add_assign_unchecked(&term);
                    }
                }
            }
        }
        for cc in 0..r {
            for a in 0..n {
                for bb in 0..r {
                    let gamma = connection.get(a, bb, cc);
                    if !gamma.is_zero() {
                        let term = Cochain::monomial(shape, &[a], &[bb], -gamma)?;
                        d.on_b[cc].add_assign_unchecked(&term);
                    }
                }
            }
        }

        // delta_hat: xi^a -> t^a_B b^B
        let mut delta_hat = GeneratorAction::zero(shape, Parity::Odd, 1);
        for a in 0..n {
            for bb in 0..r {
                let t = spec.kernel_frame_entry(a, bb);
                if !t.is_zero() {
                    delta_hat.on_xi[a].add_assign_unchecked(&b(bb).scale(t));
                }
            }
        }

        // J_hat: b^B -> sum_{a<b<c} J^B_abc xi^a xi^b xi^c
        let mut j_hat = GeneratorAction::zero(shape, Parity::Odd, 1);
        for (&[a1, a2, a3], comps) in jacobiator.nonzero() {
            for (bb, coeff) in comps.iter().enumerate() {
                if !coeff.is_zero() {
                    let term = Cochain::monomial(shape, &[a1, a2, a3], &[], coeff.clone())?;
                    j_hat.on_b[bb].add_assign_unchecked(&term);
                }
            }
        }

        // J_tilde: xi^c -> t^c_B J_hat(b^B)
        let mut j_tilde = GeneratorAction::zero(shape, Parity::Even, 2);
        for c in 0..n {
            for bb in 0..r {
                let t = spec.kernel_frame_entry(c, bb);
                if !t.is_zero() {
                    let image = j_hat.on_b[bb].scale(t);
                    j_tilde.on_xi[c].add_assign_unchecked(&image);
                }
            }
        }

        // L*: b^C -> sum_B sum_{a<b} (t^e_B J^C_eab) xi^a xi^b b^B
        let mut l_star = GeneratorAction::zero(shape, Parity::Even, 2);
        if !jacobiator.is_zero() {
            for cc in 0..r {
                for bb in 0..r {
                    for a in 0..n {
                        for a2 in a + 1..n {
                            let mut coeff = zero.clone();
                            for e in 0..n {
                                let t = spec.kernel_frame_entry(e, bb);
                                if !t.is_zero() {
                                    coeff = &coeff + &(t * &jacobiator.component(e, a, a2, cc));
                                }
                            }
                            if !coeff.is_zero() {
                                let term = Cochain::monomial(shape, &[a, a2], &[bb], coeff)?;
                                l_star.on_b[cc].add_assign_unchecked(&term);
                            }
                        }
                    }
                }
            }
        }

        Ok(CochainCalculus {
            spec: spec.clone(),
            shape,
            jacobiator,
            connection,
            d,
            delta_hat,
            j_hat,
            j_tilde,
            l_star,
        })
    }

    pub fn spec(&self) -> &AlgebroidSpec {
        &self.spec
    }

    pub fn shape(&self) -> CochainShape {
        self.shape
    }

    pub fn jacobiator(&self) -> &JacobiatorTensor {
        &self.jacobiator
    }

    pub fn connection(&self) -> &ConnectionCoefficients {
        &self.connection
    }

    fn check(&self, gamma: &Cochain) -> Result<()> {
        if gamma.shape() != self.shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    pub fn apply(&self, op: Operator, gamma: &Cochain) -> Result<Cochain> {
        self.check(gamma)?;
        Ok(match op {
            Operator::D => self.d.apply(gamma),
            Operator::DeltaHat => self.delta_hat.apply(gamma),
            Operator::JHat => self.j_hat.apply(gamma),
            Operator::JTilde => self.j_tilde.apply(gamma),
            Operator::LStar => self.l_star.apply(gamma),
            Operator::Total => {
                let mut out = self.d.apply(gamma);
                out.add_assign_unchecked(&self.j_hat.apply(gamma));
                out.add_assign_unchecked(&self.delta_hat.apply(gamma));
                out
            }
        })
    }

    /// `first(second(gamma))`.
    pub fn compose(&self, first: Operator, second: Operator, gamma: &Cochain) -> Result<Cochain> {
        self.apply(first, &self.apply(second, gamma)?)
    }

    /// `x(y(gamma)) + y(x(gamma))`.
    pub fn anticommutator(&self, x: Operator, y: Operator, gamma: &Cochain) -> Result<Cochain> {
        Ok(&self.compose(x, y, gamma)? + &self.compose(y, x, gamma)?)
    }

    pub fn d_operator(&self, gamma: &Cochain) -> Result<Cochain> {
        self.apply(Operator::D, gamma)
    }

    pub fn delta_hat(&self, gamma: &Cochain) -> Result<Cochain> {
        self.apply(Operator::DeltaHat, gamma)
    }

    pub fn j_hat(&self, gamma: &Cochain) -> Result<Cochain> {
        self.apply(Operator::JHat, gamma)
    }

    pub fn j_tilde(&self, gamma: &Cochain) -> Result<Cochain> {
        self.apply(Operator::JTilde, gamma)
    }

    pub fn l_star(&self, gamma: &Cochain) -> Result<Cochain> {
        self.apply(Operator::LStar, gamma)
    }

    pub fn total_differential(&self, gamma: &Cochain) -> Result<Cochain> {
        self.apply(Operator::Total, gamma)
    }

    /// `d(d(gamma))`; zero for every valid spec.
    pub fn d_squared(&self, gamma: &Cochain) -> Result<Cochain> {
        self.compose(Operator::Total, Operator::Total, gamma)
    }

    /// `D^2 + J_tilde + L*` applied to `gamma`; zero for every valid spec.
    pub fn curvature_defect(&self, gamma: &Cochain) -> Result<Cochain> {
        let mut out = self.compose(Operator::D, Operator::D, gamma)?;
        out.add_assign_unchecked(&self.j_tilde(gamma)?);
        out.add_assign_unchecked(&self.l_star(gamma)?);
        Ok(out)
    }

    /// `delta_hat J_hat + J_hat delta_hat - J_tilde - L*` applied to `gamma`;
    /// zero for every valid spec.
    pub fn jacobiator_defect(&self, gamma: &Cochain) -> Result<Cochain> {
        let mut out = self.anticommutator(Operator::DeltaHat, Operator::JHat, gamma)?;
        out = &out - &self.j_tilde(gamma)?;
        out = &out - &self.l_star(gamma)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::integer;

    fn so3() -> AlgebroidSpec {
        AlgebroidSpec::almost_lie_algebra(
            3,
            [(0, 1, 2, integer(1)), (1, 2, 0, integer(1)), (2, 0, 1, integer(1))],
        )
        .unwrap()
    }

    fn triple() -> AlgebroidSpec {
        AlgebroidSpec::almost_lie_algebra(
            3,
            [(0, 1, 0, integer(1)), (1, 2, 1, integer(1)), (2, 0, 2, integer(1))],
        )
        .unwrap()
    }

    fn tangent(m: usize) -> AlgebroidSpec {
        let mut b = AlgebroidSpec::builder(m, m, 0);
        for i in 0..m {
            b = b.anchor(i, i, Polynomial::one(m));
        }
        b.build().unwrap()
    }

    #[test]
    fn constants_are_closed() {
        for spec in [so3(), triple(), tangent(2)] {
            let calc = CochainCalculus::new(&spec).unwrap();
            let c = Cochain::function(calc.shape(), Polynomial::from_int(spec.base_dim(), 5));
            assert!(calc.d_operator(&c).unwrap().is_zero());
            assert!(calc.total_differential(&c).unwrap().is_zero());
        }
    }

    #[test]
    fn de_rham_on_the_plane() {
        // d(x2 dx1) = dx2 ^ dx1 = -dx1 ^ dx2
        let calc = CochainCalculus::new(&tangent(2)).unwrap();
        let shape = calc.shape();
        let gamma = Cochain::monomial(shape, &[0], &[], Polynomial::var(2, 1)).unwrap();
        let expected = Cochain::monomial(shape, &[0, 1], &[], Polynomial::from_int(2, -1)).unwrap();
        assert_eq!(calc.d_operator(&gamma).unwrap(), expected);
        assert_eq!(calc.total_differential(&gamma).unwrap(), expected);
    }

    #[test]
    fn chevalley_eilenberg_on_so3() {
        // D xi^3 = -xi^1 xi^2
        let calc = CochainCalculus::new(&so3()).unwrap();
        let shape = calc.shape();
        let expected = Cochain::monomial(shape, &[0, 1], &[], Polynomial::from_int(0, -1)).unwrap();
        assert_eq!(calc.d_operator(&Cochain::xi(shape, 2)).unwrap(), expected);
    }

    #[test]
    fn delta_hat_with_identity_frame() {
        let calc = CochainCalculus::new(&so3()).unwrap();
        let shape = calc.shape();
        for a in 0..3 {
            assert_eq!(calc.delta_hat(&Cochain::xi(shape, a)).unwrap(), Cochain::b(shape, a));
        }
        let f = Cochain::function(shape, Polynomial::from_int(0, 3));
        assert!(calc.delta_hat(&f).unwrap().is_zero());
        // delta_hat(xi^1 xi^2) = b^1 xi^2 - xi^1 b^2
        let x12 = Cochain::xi(shape, 0).wedge(&Cochain::xi(shape, 1)).unwrap();
        let expected = &Cochain::monomial(shape, &[1], &[0], Polynomial::one(0)).unwrap()
            - &Cochain::monomial(shape, &[0], &[1], Polynomial::one(0)).unwrap();
        assert_eq!(calc.delta_hat(&x12).unwrap(), expected);
    }

    #[test]
    fn j_hat_and_j_tilde_on_triple_bracket_table() {
        let calc = CochainCalculus::new(&triple()).unwrap();
        let shape = calc.shape();
        let top = Cochain::monomial(shape, &[0, 1, 2], &[], Polynomial::one(0)).unwrap();
        assert_eq!(calc.j_hat(&Cochain::b(shape, 0)).unwrap(), top);
        assert_eq!(calc.j_tilde(&Cochain::xi(shape, 0)).unwrap(), top);
        // J_hat kills forms without F* part
        assert!(calc.j_hat(&Cochain::xi(shape, 1)).unwrap().is_zero());
        // L* vanishes on functions and A* generators
        assert!(calc.l_star(&Cochain::xi(shape, 1)).unwrap().is_zero());
    }

    #[test]
    fn l_star_on_triple_bracket_table() {
        // <L*(b^1), f_B> = <b^1, J(e_B, ., .)>: J^1_{B a b} xi^a xi^b b^B
        let calc = CochainCalculus::new(&triple()).unwrap();
        let shape = calc.shape();
        let one = || Polynomial::one(0);
        let expected = [
            Cochain::monomial(shape, &[1, 2], &[0], one()).unwrap(),
            Cochain::monomial(shape, &[2, 0], &[1], one()).unwrap(),
            Cochain::monomial(shape, &[0, 1], &[2], one()).unwrap(),
        ]
        .iter()
        .fold(Cochain::zero(shape, 4), |acc, c| &acc + c);
        assert_eq!(calc.l_star(&Cochain::b(shape, 0)).unwrap(), expected);
    }

    #[test]
    fn lie_algebra_has_no_jacobiator_terms() {
        let calc = CochainCalculus::new(&so3()).unwrap();
        let shape = calc.shape();
        for gen in [Cochain::xi(shape, 0), Cochain::b(shape, 2)] {
            for op in [Operator::JHat, Operator::JTilde, Operator::LStar] {
                assert!(calc.apply(op, &gen).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rejects_unvalidated_spec() {
        let spec = AlgebroidSpec::builder(1, 2, 1)
            .anchor(0, 0, Polynomial::one(1))
            .structure(0, 1, 0, Polynomial::one(1))
            .kernel_frame(1, 0, Polynomial::one(1))
            .kernel_projection(0, 1, Polynomial::one(1))
            .build()
            .unwrap();
        assert!(matches!(CochainCalculus::new(&spec), Err(Error::SpecNotValidated(_))));
    }

    #[test]
    fn d_squares_to_zero_on_generators() {
        for spec in [so3(), triple(), tangent(3)] {
            let calc = CochainCalculus::new(&spec).unwrap();
            let shape = calc.shape();
            let mut gens = vec![];
            for a in 0..shape.rank {
                gens.push(Cochain::xi(shape, a));
            }
            for b in 0..shape.kernel_rank {
                gens.push(Cochain::b(shape, b));
            }
            for i in 0..shape.base_dim {
                gens.push(Cochain::function(shape, Polynomial::var(shape.base_dim, i)));
            }
            for g in gens {
                assert!(calc.d_squared(&g).unwrap().is_zero(), "d^2 {g:?}");
                assert!(calc.curvature_defect(&g).unwrap().is_zero());
                assert!(calc.jacobiator_defect(&g).unwrap().is_zero());
            }
        }
    }
}
