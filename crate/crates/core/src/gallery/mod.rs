//! Constructors for standard families of almost Lie algebroids.

pub mod examples;
mod forms;

pub use forms::{cartan_contract, cartan_d, cartan_lie, BivectorField, FormField};

use num_traits::Zero;

use crate::algebroid::{AlgebroidSpec, Ambient, Section};
use crate::cochain::determinant;
use crate::error::{Error, Result};
use crate::scalars::{Derivation, Polynomial};

fn require_axioms(spec: AlgebroidSpec, wrap: fn(String) -> Error) -> Result<AlgebroidSpec> {
    let report = spec.check_axioms();
    if report.passed() {
        Ok(spec)
    } else {
        let reasons: Vec<String> = report.failures().map(|(a, m)| format!("{a}: {m}")).collect();
        Err(wrap(reasons.join("; ")))
    }
}

/// `A = TM` over `m` coordinates: `rho = id`, zero bracket on coordinate fields, no kernel.
pub fn tangent(m: usize) -> AlgebroidSpec {
    let mut b = AlgebroidSpec::builder(m, m, 0);
    for i in 0..m {
        b = b.anchor(i, i, Polynomial::one(m));
    }
    b.build().expect("indices in range")
}

fn require_lie(g: &AlgebroidSpec) -> Result<()> {
    if g.base_dim() != 0 {
        return Err(Error::NotALieAlgebra("structure table must live over a point".into()));
    }
    match g.jacobiator_tensor() {
        Ok(j) if j.is_zero() => Ok(()),
        Ok(j) => {
            let (abc, _) = j.nonzero().next().expect("nonzero tensor");
            Err(Error::NotALieAlgebra(format!(
                "Jacobi fails on (e{}, e{}, e{})",
                abc[0] + 1,
                abc[1] + 1,
                abc[2] + 1
            )))
        }
        Err(e) => Err(Error::NotALieAlgebra(e.to_string())),
    }
}

/// `TM (+) (M x g)`: the first `m` frame sections are the coordinate fields,
/// the remaining `dim g` are the constant sections of `g`, which also form
/// the kernel frame. `g` is given as a Lie algebra over a point.
pub fn product(m: usize, g: &AlgebroidSpec) -> Result<AlgebroidSpec> {
    require_lie(g)?;
    let k = g.rank();
    let mut b = AlgebroidSpec::builder(m, m + k, k);
    for i in 0..m {
        b = b.anchor(i, i, Polynomial::one(m));
    }
    for a in 0..k {
        for c in 0..k {
            b = b
                .kernel_frame(m + a, c, if a == c { Polynomial::one(m) } else { Polynomial::zero(m) })
                .kernel_projection(c, m + a, if a == c { Polynomial::one(m) } else { Polynomial::zero(m) });
        }
        for a2 in a + 1..k {
            for c in 0..k {
                let v = g.structure_entry(a, a2, c).constant_value().expect("constant over a point");
                if !v.is_zero() {
                    b = b.structure(m + a, m + a2, m + c, Polynomial::constant(m, v));
                }
            }
        }
    }
    b.build()
}

/// `[phi, psi]_B = [phi, psi] + B(phi, psi)` for a regular Lie algebroid with
/// kernel frame. `twist` lists `(a, b, B(e_a, e_b))` with `a < b`, each value
/// an `A`-valued section that must lie in the span of the kernel frame.
pub fn b_twist(spec: &AlgebroidSpec, twist: &[(usize, usize, Section)]) -> Result<AlgebroidSpec> {
    let j = spec.jacobiator_tensor()?;
    if !j.is_zero() {
        return Err(Error::InvalidSpec("B-twists start from a Lie algebroid (J = 0)".into()));
    }
    let n = spec.rank();
    let mut out = spec.clone();
    for (a, b, value) in twist {
        let (a, b) = (*a, *b);
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange { index: a.max(b) + 1, bound: n });
        }
        if a == b {
            if value.is_zero() {
                continue;
            }
            return Err(Error::InvalidSpec(format!("B(e{0}, e{0}) must vanish", a + 1)));
        }
        if spec.kernel_component(value)?.is_none() {
            return Err(Error::NotKernelValued(format!("B(e{}, e{}) = {value}", a + 1, b + 1)));
        }
        let structure = out.structure_mut();
        for (c, v) in value.coeffs().iter().enumerate() {
            structure[a][b][c] = &structure[a][b][c] + v;
            structure[b][a][c] = &structure[b][a][c] - v;
        }
    }
    require_axioms(out, Error::InvalidSpec)
}

/// `A = T*M` with frame `dx^1, ..., dx^m`, anchor `Pi^#` and bracket
///
/// ```text
/// [alpha, beta] = L_{Pi^# alpha} beta - L_{Pi^# beta} alpha
///                 + d <alpha, Pi^# beta> + H(Pi^# alpha, Pi^# beta, .)
/// ```
///
/// where `Pi^#(alpha) = alpha_i Pi^{ij} d_j`. With this orientation the
/// bracket reduces to the Koszul bracket for `H = 0`, and for
/// `Pi = omega^{-1}` (as matrices) the morphism axiom holds when `H = -d omega`
/// and fails for `H = d omega` whenever `d omega != 0`.
///
/// When `det Pi` is a nonzero polynomial, `Pi^#` has no kernel over the
/// polynomial ring and `kernel` may be omitted. Otherwise the caller supplies
/// the kernel frame `t[a][B]` and projection `s[B][a]`.
pub fn twisted_poisson(
    pi: &BivectorField,
    h: &FormField,
    kernel: Option<(Vec<Vec<Polynomial>>, Vec<Vec<Polynomial>>)>,
) -> Result<AlgebroidSpec> {
    let m = pi.nvars();
    if h.nvars() != m || h.degree() != 3 {
        return Err(Error::DimensionMismatch(format!("H must be a 3-form on {m} variables")));
    }
    let (t, s) = match kernel {
        Some(ts) => ts,
        None if m == 0 || determinant(pi.matrix(), m).is_zero() => {
            return Err(Error::InvalidSpec("Pi is degenerate, a kernel frame is required".into()));
        }
        None => (vec![vec![]; m], vec![]),
    };
    let r = s.len();
    if t.len() != m || t.iter().any(|row| row.len() != r) || s.iter().any(|row| row.len() != m) {
        return Err(Error::DimensionMismatch(format!("kernel frame must be {m} x {r} and projection {r} x {m}")));
    }
    let dx: Vec<FormField> = (0..m).map(|i| FormField::differential(m, i)).collect();
    let sharp: Vec<Derivation> = dx.iter().map(|a| pi.sharp(a)).collect::<Result<_>>()?;
    let mut b = AlgebroidSpec::builder(m, m, r);
    for i in 0..m {
        for k in 0..m {
            b = b.anchor(i, k, sharp[i].components()[k].clone());
        }
        for bb in 0..r {
            b = b.kernel_frame(i, bb, t[i][bb].clone()).kernel_projection(bb, i, s[bb][i].clone());
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let bracket = koszul_twisted(&dx[i], &dx[j], &sharp[i], &sharp[j], h)?;
            for c in 0..m {
                b = b.structure(i, j, c, bracket.coefficient(&[c]));
            }
        }
    }
    require_axioms(b.build()?, Error::NotTwistedPoisson)
}

fn koszul_twisted(
    alpha: &FormField,
    beta: &FormField,
    sharp_alpha: &Derivation,
    sharp_beta: &Derivation,
    h: &FormField,
) -> Result<FormField> {
    let lie = cartan_lie(sharp_alpha, beta)?.checked_sub(&cartan_lie(sharp_beta, alpha)?)?;
    let pairing = cartan_contract(sharp_beta, alpha)?;
    let twist = cartan_contract(sharp_beta, &cartan_contract(sharp_alpha, h)?)?;
    lie.checked_add(&cartan_d(&pairing))?.checked_add(&twist)
}

/// Data of a twisted action of a Lie algebra `g` on `Q^m`.
#[derive(Clone, Debug)]
pub struct TwistedAction {
    /// `g` as a Lie algebra over a point.
    pub algebra: AlgebroidSpec,
    /// `anchor[a][i]`: the vector field `rho(e_a)`.
    pub anchor: Vec<Vec<Polynomial>>,
    /// `(a, b, k(e_a, e_b))` for `a < b`, values given in the frame of `g`.
    pub twist: Vec<(usize, usize, Vec<Polynomial>)>,
    /// `kernel_frame[a][B]`.
    pub kernel_frame: Vec<Vec<Polynomial>>,
    /// `kernel_projection[B][a]`.
    pub kernel_projection: Vec<Vec<Polynomial>>,
}

/// `M x g` with bracket `[e_1, e_2]_k = [e_1, e_2]_{M x g} + k(e_1, e_2)`.
///
/// Verified before building: `k(t(f_B), .) = 0` for the supplied kernel frame,
/// and `rho([e_a, e_b]_g) = [rho(e_a), rho(e_b)] - rho(k(e_a, e_b))`.
pub fn twisted_action(data: &TwistedAction) -> Result<AlgebroidSpec> {
    let g = &data.algebra;
    require_lie(g)?;
    let n = g.rank();
    let m = data.anchor.first().map_or(0, Vec::len);
    let r = data.kernel_projection.len();
    if data.anchor.len() != n || data.anchor.iter().any(|row| row.len() != m) {
        return Err(Error::DimensionMismatch(format!("anchor must be {n} x {m}")));
    }
    if data.kernel_frame.len() != n || data.kernel_frame.iter().any(|row| row.len() != r) {
        return Err(Error::DimensionMismatch(format!("kernel frame must be {n} x {r}")));
    }
    let mut k = vec![vec![vec![Polynomial::zero(m); n]; n]; n];
    for (a, b, value) in &data.twist {
        let (a, b) = (*a, *b);
        if a >= n || b >= n || value.len() != n {
            return Err(Error::DimensionMismatch(format!("twist entry ({}, {}) does not fit g", a + 1, b + 1)));
        }
        if a == b {
            return Err(Error::InvalidSpec(format!("k(e{0}, e{0}) must vanish", a + 1)));
        }
        for (c, v) in value.iter().enumerate() {
            k[a][b][c] = &k[a][b][c] + v;
            k[b][a][c] = &k[b][a][c] - v;
        }
    }

    for bb in 0..r {
        for e in 0..n {
            for c in 0..n {
                let mut acc = Polynomial::zero(m);
                for a in 0..n {
                    acc = &acc + &(&data.kernel_frame[a][bb] * &k[a][e][c]);
                }
                if !acc.is_zero() {
                    return Err(Error::TwistNotKernelTrivial(format!(
                        "k(t(f{}), e{}) has e{} component {acc}",
                        bb + 1,
                        e + 1,
                        c + 1
                    )));
                }
            }
        }
    }

    let mut builder = AlgebroidSpec::builder(m, n, r);
    for a in 0..n {
        for i in 0..m {
            builder = builder.anchor(a, i, data.anchor[a][i].clone());
        }
        for bb in 0..r {
            builder = builder
                .kernel_frame(a, bb, data.kernel_frame[a][bb].clone())
                .kernel_projection(bb, a, data.kernel_projection[bb][a].clone());
        }
    }
    let untwisted = builder.clone();
    let mut twisted = builder;
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                let gv = Polynomial::constant(m, g.structure_entry(a, b, c).constant_value().expect("constant over a point"));
                twisted = twisted.structure(a, b, c, &gv + &k[a][b][c]);
            }
        }
    }
    let untwisted = untwisted.build()?;
    let spec = twisted.build()?;

    let rho: Vec<Derivation> = (0..n).map(|a| untwisted.anchor_of(&untwisted.frame(a))).collect::<Result<_>>()?;
    for a in 0..n {
        for b in a + 1..n {
            let mut g_bracket = vec![Polynomial::zero(m); n];
            for (c, slot) in g_bracket.iter_mut().enumerate() {
                *slot = Polynomial::constant(m, g.structure_entry(a, b, c).constant_value().expect("constant over a point"));
            }
            let lhs = untwisted.anchor_of(&Section::new_with_vars(Ambient::A, g_bracket, m))?;
            let k_ab = untwisted.anchor_of(&Section::new_with_vars(Ambient::A, k[a][b].clone(), m))?;
            let rhs = rho[a].commutator(&rho[b])?.checked_add(&k_ab.scale(&Polynomial::from_int(m, -1)))?;
            if lhs != rhs {
                return Err(Error::TwistViolatesMorphism(format!(
                    "rho([e{a1}, e{b1}]_g) = {lhs} but [rho(e{a1}), rho(e{b1})] - rho(k(e{a1}, e{b1})) = {rhs}",
                    a1 = a + 1,
                    b1 = b + 1
                )));
            }
        }
    }
    require_axioms(spec, Error::TwistViolatesMorphism)
}

/// Inverse of a square polynomial matrix whose determinant is a nonzero
/// constant, by the adjugate formula.
pub fn invert_unimodular(matrix: &[Vec<Polynomial>], nvars: usize) -> Result<Vec<Vec<Polynomial>>> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch("matrix is not square".into()));
    }
    let det = determinant(matrix, nvars);
    let inv_det = match det.constant_value() {
        Some(c) if !c.is_zero() => Polynomial::constant(nvars, c.recip()),
        _ => return Err(Error::InvalidSpec(format!("determinant {det} is not a nonzero constant"))),
    };
    let mut out = vec![vec![Polynomial::zero(nvars); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<Polynomial>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| matrix[r][c].clone()).collect())
                .collect();
            let cof = &determinant(&minor, nvars) * &inv_det;
            out[i][j] = if (i + j) % 2 == 0 { cof } else { -&cof };
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
