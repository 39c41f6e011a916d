//! The differential written as a homological vector field in coordinates,
//!
//! ```text
//! Q x^i = rho^i_a xi^a
//! Q xi^c = -1/2 C^c_ab xi^a xi^b + t^c_B b^B
//! Q b^C = -Gamma^C_aB xi^a b^B + 1/6 J^C_abc xi^a xi^b xi^c
//! ```
//!
//! (full sums over repeated indices), applied through left partial
//! derivatives and compared with [`CochainCalculus::total_differential`].

use std::fmt;

use super::{BasisKey, Cochain, CochainCalculus, CochainShape};
use crate::error::Result;
use crate::scalars::{rational, Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCheckReport {
    pub cutoff: usize,
    pub generators_checked: usize,
    pub monomials_checked: usize,
    /// Human readable descriptions of inputs on which the two routes differ.
    pub mismatches: Vec<String>,
}

impl QCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for QCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coordinate form agrees on {} generators and {} monomials up to weight {}",
            self.generators_checked, self.monomials_checked, self.cutoff
        )?;
        for m in &self.mismatches {
            write!(f, "\n  mismatch: {m}")?;
        }
        Ok(())
    }
}

struct VectorField {
    on_x: Vec<Cochain>,
    on_xi: Vec<Cochain>,
    on_b: Vec<Cochain>,
}

impl VectorField {
    fn from_calculus(calc: &CochainCalculus) -> Result<Self> {
        let spec = calc.spec();
        let shape = calc.shape();
        let (m, n, r) = (shape.base_dim, shape.rank, shape.kernel_rank);
        let jac = calc.jacobiator();
        let conn = calc.connection();
        let mut on_x = Vec::with_capacity(m);
        for i in 0..m {
            let mut q = Cochain::zero(shape, 1);
            for a in 0..n {
                q.add_assign_unchecked(&Cochain::monomial(shape, &[a], &[], spec.anchor_entry(a, i).clone())?);
            }
            on_x.push(q);
        }
        let half = Polynomial::constant(m, rational(-1, 2));
        let sixth = Polynomial::constant(m, rational(1, 6));
        let mut on_xi = Vec::with_capacity(n);
        for c in 0..n {
            let mut q = Cochain::zero(shape, 2);
            for a in 0..n {
                for b in 0..n {
                    let coeff = &half * spec.structure_entry(a, b, c);
                    q.add_assign_unchecked(&Cochain::monomial(shape, &[a, b], &[], coeff)?);
                }
            }
            for bb in 0..r {
                q.add_assign_unchecked(&Cochain::monomial(shape, &[], &[bb], spec.kernel_frame_entry(c, bb).clone())?);
            }
            on_xi.push(q);
        }
        let mut on_b = Vec::with_capacity(r);
        for cc in 0..r {
            let mut q = Cochain::zero(shape, 3);
            for a in 0..n {
                for bb in 0..r {
                    q.add_assign_unchecked(&Cochain::monomial(shape, &[a], &[bb], -conn.get(a, bb, cc))?);
                }
            }
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let coeff = &sixth * &jac.component(a, b, c, cc);
                        q.add_assign_unchecked(&Cochain::monomial(shape, &[a, b, c], &[], coeff)?);
                    }
                }
            }
            on_b.push(q);
        }
        Ok(VectorField { on_x, on_xi, on_b })
    }

    fn apply(&self, gamma: &Cochain) -> Cochain {
        let shape = gamma.shape();
        let mut out = Cochain::zero(shape, gamma.degree() + 1);
        for (key, f) in gamma.terms() {
            for (i, q) in self.on_x.iter().enumerate() {
                let df = f.partial(i);
                if !df.is_zero() {
                    let rest = single(shape, key.clone(), df);
                    out.add_assign_unchecked(&q.wedge_unchecked(&rest));
                }
            }
            for (k, &c) in key.wedge().iter().enumerate() {
                let mut wedge = key.wedge().to_vec();
                wedge.remove(k);
                let coeff = if k % 2 == 0 { f.clone() } else { -f };
                let rest = single(shape, BasisKey::new(wedge, key.sym().to_vec()), coeff);
                out.add_assign_unchecked(&self.on_xi[c as usize].wedge_unchecked(&rest));
            }
            let sym = key.sym();
            for (l, &cc) in sym.iter().enumerate() {
                if l > 0 && sym[l - 1] == cc {
                    continue;
                }
                let multiplicity = sym.iter().filter(|&&x| x == cc).count() as i64;
                let mut rest_sym = sym.to_vec();
                rest_sym.remove(l);
                let coeff = f * &Polynomial::from_int(shape.base_dim, multiplicity);
                let rest = single(shape, BasisKey::new(key.wedge().to_vec(), rest_sym), coeff);
                out.add_assign_unchecked(&self.on_b[cc as usize].wedge_unchecked(&rest));
            }
        }
        out
    }
}

fn single(shape: CochainShape, key: BasisKey, coeff: Polynomial) -> Cochain {
    let mut c = Cochain::zero(shape, key.degree());
    c.add_term(key, coeff);
    c
}

fn exponent_vectors(nvars: usize, max_total: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        let mut next = Vec::new();
        for v in &out {
            let used: u32 = v.iter().sum();
            for e in 0..=(max_total as u32 - used) {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn increasing_subsets(n: usize, size: usize) -> Vec<Vec<u16>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u16);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

fn multisets(n: usize, size: usize) -> Vec<Vec<u16>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u16);
            go(i, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Compares the coordinate vector field with the generator tables of `calc`
/// on every generator and on every monomial `x^alpha xi^I b^K` with
/// `|alpha| + |I| + 2|K| <= cutoff`.
pub fn q_coordinate_check(calc: &CochainCalculus, cutoff: usize) -> Result<QCheckReport> {
    let q = VectorField::from_calculus(calc)?;
    let shape = calc.shape();
    let m = shape.base_dim;
    let mut report = QCheckReport { cutoff, generators_checked: 0, monomials_checked: 0, mismatches: Vec::new() };
    let compare = |gamma: &Cochain, label: String, report: &mut QCheckReport| -> Result<()> {
        let lhs = q.apply(gamma);
        let rhs = calc.total_differential(gamma)?;
        if lhs != rhs {
            report.mismatches.push(format!("{label}: Q gives {lhs}, d gives {rhs}"));
        }
        Ok(())
    };

    for i in 0..m {
        compare(&Cochain::function(shape, Polynomial::var(m, i)), format!("x{}", i + 1), &mut report)?;
        report.generators_checked += 1;
    }
    for a in 0..shape.rank {
        compare(&Cochain::xi(shape, a), format!("xi({})", a + 1), &mut report)?;
        report.generators_checked += 1;
    }
    for b in 0..shape.kernel_rank {
        compare(&Cochain::b(shape, b), format!("b({})", b + 1), &mut report)?;
        report.generators_checked += 1;
    }

    for q_len in 0..=cutoff / 2 {
        for p_len in 0..=(cutoff - 2 * q_len).min(shape.rank) {
            let budget = cutoff - 2 * q_len - p_len;
            let syms = multisets(shape.kernel_rank, q_len);
            let wedges = increasing_subsets(shape.rank, p_len);
            for alpha in exponent_vectors(m, budget) {
                let coeff = Polynomial::term(m, rational(1, 1), Monomial::from_exponents(alpha));
                for w in &wedges {
                    for s in &syms {
                        let key = BasisKey::new(w.clone(), s.clone());
                        let gamma = single(shape, key, coeff.clone());
                        let label = gamma.to_string();
                        compare(&gamma, label, &mut report)?;
                        report.monomials_checked += 1;
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::AlgebroidSpec;
    use crate::scalars::integer;

    fn check(spec: &AlgebroidSpec, cutoff: usize) -> QCheckReport {
        let calc = CochainCalculus::new(spec).unwrap();
        let report = q_coordinate_check(&calc, cutoff).unwrap();
        assert!(report.passed(), "{report}");
        report
    }

    #[test]
    fn triple_bracket_table() {
        let spec = AlgebroidSpec::almost_lie_algebra(
            3,
            [(0, 1, 0, integer(1)), (1, 2, 1, integer(1)), (2, 0, 2, integer(1))],
        )
        .unwrap();
        let r = check(&spec, 4);
        assert_eq!(r.generators_checked, 6);
        assert!(r.monomials_checked > 20);
    }

    #[test]
    fn line_with_twisted_kernel() {
        // rho(e1) = d/dx, e2 spans the kernel, [e1, e2] = x e2
        let x = Polynomial::var(1, 0);
        let spec = AlgebroidSpec::builder(1, 2, 1)
            .anchor(0, 0, Polynomial::one(1))
            .structure(0, 1, 1, x)
            .kernel_frame(1, 0, Polynomial::one(1))
            .kernel_projection(0, 1, Polynomial::one(1))
            .build()
            .unwrap();
        check(&spec, 3);
    }

    #[test]
    fn monomial_count_over_a_point() {
        // rank 2 with identity kernel frame, weight <= 2: 1, xi1, xi2, xi1 xi2, b1, b2
        let spec = AlgebroidSpec::almost_lie_algebra(2, [(0, 1, 1, integer(1))]).unwrap();
        assert_eq!(check(&spec, 2).monomials_checked, 6);
    }
}
