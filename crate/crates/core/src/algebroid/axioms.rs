use std::fmt;

use super::AlgebroidSpec;
use crate::scalars::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// `C^c_ab = -C^c_ba`
    Skew,
    /// `[phi, f psi] = rho(phi)[f] psi + f [phi, psi]`
    Leibniz,
    /// `rho([e_a, e_b]) = [rho(e_a), rho(e_b)]`
    Morphism,
    /// `rho o t = 0`
    KernelInKerAnchor,
    /// `s o t = id_F`
    ProjectionSplits,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Skew => "skew",
            Axiom::Leibniz => "leibniz",
            Axiom::Morphism => "morphism",
            Axiom::KernelInKerAnchor => "kernel-in-ker-anchor",
            Axiom::ProjectionSplits => "projection-splits",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Holds for every spec because of how [`AlgebroidSpec::bracket`] is defined.
    ByConstruction,
    /// First violating component.
    Fail(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn outcome(&self, axiom: Axiom) -> &Outcome {
        &self
            .checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is checked")
            .outcome
    }

    pub fn failures(&self) -> impl Iterator<Item = (&'static str, &str)> {
        self.checks.iter().filter_map(|c| match &c.outcome {
            Outcome::Fail(msg) => Some((c.axiom.name(), msg.as_str())),
            _ => None,
        })
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "{:<22} PASS", c.axiom.name())?,
                Outcome::ByConstruction => {
                    writeln!(f, "{:<22} PASS (by construction of the bracket)", c.axiom.name())?
                }
                Outcome::Fail(msg) => writeln!(f, "{:<22} FAIL {msg}", c.axiom.name())?,
            }
        }
        Ok(())
    }
}

impl AlgebroidSpec {
    /// Verifies the almost Lie algebroid axioms as exact polynomial
    /// identities on frame sections. Function linearity and the Leibniz rule
    /// carry them over to arbitrary sections.
    pub fn check_axioms(&self) -> AxiomReport {
        let checks = vec![
            AxiomCheck { axiom: Axiom::Skew, outcome: self.check_skew() },
            AxiomCheck { axiom: Axiom::Leibniz, outcome: Outcome::ByConstruction },
            AxiomCheck { axiom: Axiom::Morphism, outcome: self.check_morphism() },
            AxiomCheck { axiom: Axiom::KernelInKerAnchor, outcome: self.check_anchor_kills_kernel() },
            AxiomCheck { axiom: Axiom::ProjectionSplits, outcome: self.check_projection() },
        ];
        AxiomReport { checks }
    }

    fn check_skew(&self) -> Outcome {
        let n = self.rank();
        for a in 0..n {
            for b in a..n {
                for c in 0..n {
                    let sum = self.structure_entry(a, b, c) + self.structure_entry(b, a, c);
                    if !sum.is_zero() {
                        return Outcome::Fail(format!(
                            "C^{c}_{a}{b} + C^{c}_{b}{a} = {sum}",
                            a = a + 1,
                            b = b + 1,
                            c = c + 1
                        ));
                    }
                }
            }
        }
        Outcome::Pass
    }

    fn check_morphism(&self) -> Outcome {
        let n = self.rank();
        let anchors: Vec<_> = (0..n)
            .map(|a| self.anchor_of(&self.frame(a)).expect("frame section"))
            .collect();
        for a in 0..n {
            for b in a + 1..n {
                let br = self.bracket(&self.frame(a), &self.frame(b)).expect("frame sections");
                let lhs = self.anchor_of(&br).expect("bracket of frame sections");
                let rhs = anchors[a].commutator(&anchors[b]).expect("same base");
                if lhs != rhs {
                    let i = lhs
                        .components()
                        .iter()
                        .zip(rhs.components())
                        .position(|(l, r)| l != r)
                        .unwrap_or(0);
                    return Outcome::Fail(format!(
                        "rho([e{}, e{}]) has d/dx{} component {} but [rho(e{}), rho(e{})] has {}",
                        a + 1,
                        b + 1,
                        i + 1,
                        lhs.components()[i],
                        a + 1,
                        b + 1,
                        rhs.components()[i]
                    ));
                }
            }
        }
        Outcome::Pass
    }

    fn check_anchor_kills_kernel(&self) -> Outcome {
        for b in 0..self.kernel_rank() {
            let tv = self.embed(&self.kernel_basis(b)).expect("kernel basis");
            let rho = self.anchor_of(&tv).expect("embedded section");
            if let Some(i) = rho.components().iter().position(|c| !c.is_zero()) {
                return Outcome::Fail(format!(
                    "rho(t(f{}))^{} = {}",
                    b + 1,
                    i + 1,
                    rho.components()[i]
                ));
            }
        }
        Outcome::Pass
    }

    fn check_projection(&self) -> Outcome {
        let r = self.kernel_rank();
        let m = self.base_dim();
        for b in 0..r {
            let v = self.kernel_basis(b);
            let back = self.project(&self.embed(&v).expect("kernel basis")).expect("section of A");
            for c in 0..r {
                let expected = if b == c { Polynomial::one(m) } else { Polynomial::zero(m) };
                if back.coeffs()[c] != expected {
                    return Outcome::Fail(format!(
                        "(s t)^{}_{} = {}",
                        c + 1,
                        b + 1,
                        back.coeffs()[c]
                    ));
                }
            }
        }
        Outcome::Pass
    }
}
