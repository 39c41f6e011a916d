use almost_lie::algebroid::{Ambient, Section};
use almost_lie::gallery::examples;
use almost_lie::gallery::{self, BivectorField, FormField, TwistedAction};
use almost_lie::random::{random_almost_lie_algebra, rng_from_seed};
use almost_lie::{AlgebroidSpec, Polynomial};
use anyhow::{bail, Context, Result};

use crate::params::Params;

pub const NAMES: [&str; 6] = ["tangent", "product", "b-twist", "twisted-poisson", "twisted-action", "random-algebra"];

#[derive(Clone, Debug, Default)]
pub struct RecipeArgs {
    pub base_dim: Option<usize>,
    pub dim: Option<usize>,
    pub seed: u64,
    pub params: Option<Params>,
}

pub fn build(name: &str, args: &RecipeArgs) -> Result<AlgebroidSpec> {
    match name {
        "tangent" => {
            let m = args.base_dim.unwrap_or(2);
            if m == 0 {
                bail!("tangent needs --base-dim >= 1");
            }
            Ok(gallery::tangent(m))
        }
        "product" => {
            let (m, g) = product_inputs(args)?;
            Ok(gallery::product(m, &g)?)
        }
        "b-twist" => b_twist(args),
        "twisted-poisson" => twisted_poisson(args),
        "twisted-action" => twisted_action(args),
        "random-algebra" => {
            let dim = args.dim.unwrap_or(3);
            Ok(random_almost_lie_algebra(&mut rng_from_seed(args.seed), dim))
        }
        other => bail!("unknown recipe `{other}`; expected one of {}", NAMES.join(", ")),
    }
}

fn params(args: &RecipeArgs) -> Params {
    args.params.clone().unwrap_or_default()
}

/// The Lie algebra from the `LIE` block (`a b c : C^c_ab`), of dimension `--dim`.
fn lie_algebra(p: &Params, dim: usize) -> Result<AlgebroidSpec> {
    let mut constants = Vec::new();
    for (idx, value) in p.entries("LIE", &[dim, dim, dim], 0)? {
        let c = value.constant_value().expect("no variables");
        constants.push((idx[0], idx[1], idx[2], c));
    }
    AlgebroidSpec::almost_lie_algebra(dim, constants).context("LIE block")
}

fn product_inputs(args: &RecipeArgs) -> Result<(usize, AlgebroidSpec)> {
    let p = params(args);
    let m = args.base_dim.unwrap_or(1);
    let k = args.dim.unwrap_or(1);
    Ok((m, lie_algebra(&p, k)?))
}

/// Product model twisted by the `B` block: `a b c : B(e_a, e_b)^c`.
/// Without parameters: the line with abelian `g` of dimension one and `B(e1, e2) = x1 e2`.
fn b_twist(args: &RecipeArgs) -> Result<AlgebroidSpec> {
    let Some(p) = &args.params else {
        return Ok(examples::b_twisted_line());
    };
    let (m, g) = product_inputs(args)?;
    let base = gallery::product(m, &g)?;
    let n = base.rank();
    let mut twist: Vec<(usize, usize, Section)> = Vec::new();
    for (idx, value) in p.entries("B", &[n, n, n], m)? {
        let (a, b) = if idx[0] < idx[1] { (idx[0], idx[1]) } else { (idx[1], idx[0]) };
        let value = if idx[0] < idx[1] { value } else { -&value };
        let pos = match twist.iter().position(|(x, y, _)| (*x, *y) == (a, b)) {
            Some(pos) => pos,
            None => {
                twist.push((a, b, Section::zero(Ambient::A, n, m)));
                twist.len() - 1
            }
        };
        let mut coeffs = twist[pos].2.coeffs().to_vec();
        coeffs[idx[2]] = &coeffs[idx[2]] + &value;
        twist[pos].2 = Section::new_with_vars(Ambient::A, coeffs, m);
    }
    Ok(gallery::b_twist(&base, &twist)?)
}

/// `PI` block `i j : Pi^{ij}`, `H` block `i j k : H_ijk`, optional kernel
/// blocks. Without parameters: constant symplectic `Pi^{12} = 1`, `H = 0`.
fn twisted_poisson(args: &RecipeArgs) -> Result<AlgebroidSpec> {
    let Some(p) = &args.params else {
        return Ok(gallery::twisted_poisson(&examples::constant_symplectic(), &FormField::zero(2, 3), None)?);
    };
    let m = args.base_dim.unwrap_or(2);
    let mut pi = BivectorField::zero(m);
    for (idx, value) in p.entries("PI", &[m, m], m)? {
        pi.set(idx[0], idx[1], value)?;
    }
    let mut h = FormField::zero(m, 3);
    for (idx, value) in p.entries("H", &[m, m, m], m)? {
        h = h.checked_add(&FormField::monomial(m, &idx, value)?)?;
    }
    let kernel = if p.has("KERNEL_FRAME") || p.has("KERNEL_PROJECTION") {
        let r = p.extent(&["KERNEL_FRAME"], 1).max(p.extent(&["KERNEL_PROJECTION"], 0));
        Some(kernel_blocks(p, m, m, r)?)
    } else {
        None
    };
    Ok(gallery::twisted_poisson(&pi, &h, kernel)?)
}

fn kernel_blocks(p: &Params, n: usize, m: usize, r: usize) -> Result<(Vec<Vec<Polynomial>>, Vec<Vec<Polynomial>>)> {
    let mut t = vec![vec![Polynomial::zero(m); r]; n];
    for (idx, value) in p.entries("KERNEL_FRAME", &[n, r], m)? {
        t[idx[0]][idx[1]] = value;
    }
    let mut s = vec![vec![Polynomial::zero(m); n]; r];
    for (idx, value) in p.entries("KERNEL_PROJECTION", &[r, n], m)? {
        s[idx[0]][idx[1]] = value;
    }
    Ok((t, s))
}

/// `LIE`, `ANCHOR` (`a i : rho^i_a`), `TWIST` (`a b c : k(e_a, e_b)^c`) and
/// kernel blocks. Without parameters: the Heisenberg twisted action, which has
/// a nonzero Jacobiator.
fn twisted_action(args: &RecipeArgs) -> Result<AlgebroidSpec> {
    let Some(p) = &args.params else {
        return Ok(gallery::twisted_action(&examples::heisenberg_twisted_action())?);
    };
    let m = args.base_dim.unwrap_or(1);
    let n = args.dim.unwrap_or(1);
    let algebra = lie_algebra(p, n)?;
    let mut anchor = vec![vec![Polynomial::zero(m); m]; n];
    for (idx, value) in p.entries("ANCHOR", &[n, m], m)? {
        anchor[idx[0]][idx[1]] = value;
    }
    let mut twist: Vec<(usize, usize, Vec<Polynomial>)> = Vec::new();
    for (idx, value) in p.entries("TWIST", &[n, n, n], m)? {
        let mut v = vec![Polynomial::zero(m); n];
        v[idx[2]] = value;
        twist.push((idx[0], idx[1], v));
    }
    let r = p.extent(&["KERNEL_FRAME"], 1).max(p.extent(&["KERNEL_PROJECTION"], 0));
    let (kernel_frame, kernel_projection) = kernel_blocks(p, n, m, r)?;
    Ok(gallery::twisted_action(&TwistedAction { algebra, anchor, twist, kernel_frame, kernel_projection })?)
}
