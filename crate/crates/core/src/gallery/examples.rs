//! Named reference instances of each gallery family.

use super::{b_twist, invert_unimodular, product, tangent, twisted_action, twisted_poisson};
use super::{cartan_d, BivectorField, FormField, TwistedAction};
use crate::algebroid::{AlgebroidSpec, Ambient, Section};
use crate::scalars::{integer, Polynomial};

pub fn abelian(dim: usize) -> AlgebroidSpec {
    AlgebroidSpec::almost_lie_algebra(dim, []).expect("indices in range")
}

pub fn so3() -> AlgebroidSpec {
    AlgebroidSpec::almost_lie_algebra(3, [(0, 1, 2, integer(1)), (1, 2, 0, integer(1)), (2, 0, 1, integer(1))])
        .expect("indices in range")
}

/// `[e1, e2] = e1`, `[e2, e3] = e2`, `[e3, e1] = e3`: Jacobiator `J(e1, e2, e3) = e1 + e2 + e3`.
pub fn triple_bracket() -> AlgebroidSpec {
    AlgebroidSpec::almost_lie_algebra(3, [(0, 1, 0, integer(1)), (1, 2, 1, integer(1)), (2, 0, 2, integer(1))])
        .expect("indices in range")
}

/// Product model over the line with `g` abelian of dimension one, twisted by
/// `B(e1, e2) = x1 e2`.
pub fn b_twisted_line() -> AlgebroidSpec {
    let base = product(1, &abelian(1)).expect("abelian algebra");
    let value = Section::new(Ambient::A, vec![Polynomial::zero(1), Polynomial::var(1, 0)]);
    b_twist(&base, &[(0, 1, value)]).expect("kernel valued twist")
}

/// Abelian `g` of dimension three over a point, twisted into the triple bracket table.
pub fn b_twisted_point() -> AlgebroidSpec {
    let unit = |c: usize| {
        let mut v = vec![Polynomial::zero(0); 3];
        v[c] = Polynomial::one(0);
        Section::new(Ambient::A, v)
    };
    b_twist(&abelian(3), &[(0, 1, unit(0)), (1, 2, unit(1)), (0, 2, unit(2).scale(&Polynomial::from_int(0, -1)))])
        .expect("everything is kernel over a point")
}

/// `Pi^{12} = 1` on the plane.
pub fn constant_symplectic() -> BivectorField {
    BivectorField::from_upper(2, [(0, 1, Polynomial::one(2))]).expect("indices in range")
}

/// `omega = dx1^dx2 + dx3^dx4 + x2 dx1^dx3` as an antisymmetric matrix.
/// Its Pfaffian is 1, so the inverse is polynomial, and
/// `d omega = -dx1^dx2^dx3` is nonzero.
pub fn non_closed_omega() -> Vec<Vec<Polynomial>> {
    let mut w = vec![vec![Polynomial::zero(4); 4]; 4];
    let mut set = |i: usize, j: usize, v: Polynomial| {
        w[j][i] = -&v;
        w[i][j] = v;
    };
    set(0, 1, Polynomial::one(4));
    set(2, 3, Polynomial::one(4));
    set(0, 2, Polynomial::var(4, 1));
    w
}

/// The 2-form with the given antisymmetric coefficient matrix.
pub fn two_form(w: &[Vec<Polynomial>]) -> FormField {
    let n = w.len();
    let mut out = FormField::zero(n, 2);
    for i in 0..n {
        for j in i + 1..n {
            let term = FormField::monomial(n, &[i, j], w[i][j].clone()).expect("indices in range");
            out = out.checked_add(&term).expect("same shape");
        }
    }
    out
}

/// `(Pi, d omega)` for [`non_closed_omega`], `Pi = omega^{-1}`.
pub fn non_closed_pair() -> (BivectorField, FormField) {
    let w = non_closed_omega();
    let pi = BivectorField::from_matrix(invert_unimodular(&w, 4).expect("unimodular")).expect("antisymmetric");
    (pi, cartan_d(&two_form(&w)))
}

/// `Pi = d1 ^ d2` on `Q^3` with `H = (x1 x3 + 2) dx1^dx2^dx3` and kernel frame `dx3`.
pub fn degenerate_twisted_poisson() -> AlgebroidSpec {
    let pi = BivectorField::from_upper(3, [(0, 1, Polynomial::one(3))]).expect("indices in range");
    let h = FormField::monomial(3, &[0, 1, 2], Polynomial::parse("x1 x3 + 2", 3).expect("literal"))
        .expect("indices in range");
    let (zero, one) = (Polynomial::zero(3), Polynomial::one(3));
    let t = vec![vec![zero.clone()], vec![zero.clone()], vec![one.clone()]];
    let s = vec![vec![zero.clone(), zero, one]];
    twisted_poisson(&pi, &h, Some((t, s))).expect("valid twisted Poisson structure")
}

/// `g = span(e1, e2) (+) heis(e3, e4, e5)` with `[e4, e3] = e5`, acting on
/// the plane by `rho(e1) = d1`, `rho(e2) = d2`, twisted by `k(e1, e2) = e3`.
/// The kernel frame is `e3, e4, e5` and `J(e1, e2, e4) = e5`.
pub fn heisenberg_twisted_action() -> TwistedAction {
    let algebra = AlgebroidSpec::almost_lie_algebra(5, [(3, 2, 4, integer(1))]).expect("indices in range");
    let (zero, one) = (Polynomial::zero(2), Polynomial::one(2));
    let mut anchor = vec![vec![zero.clone(); 2]; 5];
    anchor[0][0] = one.clone();
    anchor[1][1] = one.clone();
    let mut k12 = vec![zero.clone(); 5];
    k12[2] = one.clone();
    let mut kernel_frame = vec![vec![zero.clone(); 3]; 5];
    let mut kernel_projection = vec![vec![zero; 5]; 3];
    for b in 0..3 {
        kernel_frame[b + 2][b] = one.clone();
        kernel_projection[b][b + 2] = one.clone();
    }
    TwistedAction { algebra, anchor, twist: vec![(0, 1, k12)], kernel_frame, kernel_projection }
}

/// One instance of every gallery family, with a short name.
pub fn reference_specs() -> Vec<(&'static str, AlgebroidSpec)> {
    let (pi, dw) = non_closed_pair();
    let minus_dw = dw.scale(&Polynomial::from_int(4, -1));
    let mut untwisted = heisenberg_twisted_action();
    untwisted.twist.clear();
    vec![
        ("tangent-1", tangent(1)),
        ("tangent-2", tangent(2)),
        ("tangent-3", tangent(3)),
        ("product-1-abelian-1", product(1, &abelian(1)).expect("Lie algebra")),
        ("product-2-so3", product(2, &so3()).expect("Lie algebra")),
        ("product-0-so3", product(0, &so3()).expect("Lie algebra")),
        ("b-twist-line", b_twisted_line()),
        ("b-twist-point", b_twisted_point()),
        ("twisted-poisson-symplectic", twisted_poisson(&constant_symplectic(), &FormField::zero(2, 3), None).expect("Poisson")),
        ("twisted-poisson-non-closed", twisted_poisson(&pi, &minus_dw, None).expect("twisted Poisson")),
        ("twisted-poisson-degenerate", degenerate_twisted_poisson()),
        ("twisted-action-heisenberg", twisted_action(&heisenberg_twisted_action()).expect("valid twist")),
        ("action-heisenberg", twisted_action(&untwisted).expect("valid action")),
        ("triple-bracket", triple_bracket()),
    ]
}
