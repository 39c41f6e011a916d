use super::*;
use crate::cochain::check_dj_zero;
use crate::cohomology::betti_table;
use crate::scalars::integer;
use examples::*;

fn p(s: &str, n: usize) -> Polynomial {
    Polynomial::parse(s, n).unwrap()
}



fn assert_valid(spec: &AlgebroidSpec) {
    assert!(spec.check_axioms().passed(), "{}", spec.check_axioms());
    assert!(check_dj_zero(spec).unwrap().passed());
}

#[test]
fn tangent_model() {
    for m in 1..4 {
        let spec = tangent(m);
        assert_valid(&spec);
        assert!(spec.jacobiator_tensor().unwrap().is_zero());
    }
    assert_eq!(betti_table(&tangent(1), 1).unwrap().betti_numbers(), vec![1, 1]);
}

#[test]
fn product_model() {
    let spec = product(1, &abelian(1)).unwrap();
    assert_valid(&spec);
    assert_eq!(betti_table(&spec, 3).unwrap().betti_numbers(), vec![1, 1, 0, 0]);
    let spec = product(2, &so3()).unwrap();
    assert_valid(&spec);
    assert!(spec.jacobiator_tensor().unwrap().is_zero());
    assert_eq!(product(0, &so3()).unwrap(), so3());
}

#[test]
fn product_rejects_non_lie_table() {
    let bad = AlgebroidSpec::almost_lie_algebra(3, [(0, 1, 0, integer(1)), (1, 2, 1, integer(1)), (2, 0, 2, integer(1))])
        .unwrap();
    assert!(matches!(product(1, &bad), Err(Error::NotALieAlgebra(_))));
}

#[test]
fn b_twist_of_product() {
    let base = product(1, &abelian(1)).unwrap();
    assert_eq!(b_twist(&base, &[]).unwrap(), base);
    let zero = Section::zero(Ambient::A, 2, 1);
    assert_eq!(b_twist(&base, &[(0, 1, zero)]).unwrap(), base);
    let value = Section::new(Ambient::A, vec![Polynomial::zero(1), p("x1", 1)]);
    let twisted = b_twist(&base, &[(0, 1, value)]).unwrap();
    assert_valid(&twisted);
    assert_eq!(twisted.structure_entry(0, 1, 1), &p("x1", 1));
    assert_eq!(twisted.structure_entry(1, 0, 1), &p("-x1", 1));
    let off_kernel = Section::new(Ambient::A, vec![Polynomial::one(1), Polynomial::zero(1)]);
    assert!(matches!(b_twist(&base, &[(0, 1, off_kernel)]), Err(Error::NotKernelValued(_))));
}

#[test]
fn b_twist_over_a_point_has_jacobiator() {
    let base = product(0, &abelian(3)).unwrap();
    let one = |c: usize| {
        let mut v = vec![Polynomial::zero(0); 3];
        v[c] = Polynomial::one(0);
        Section::new(Ambient::A, v)
    };
    let twisted = b_twist(&base, &[(0, 1, one(0)), (1, 2, one(1)), (0, 2, one(2))]).unwrap();
    assert_valid(&twisted);
    assert!(!twisted.jacobiator_tensor().unwrap().is_zero());
}




#[test]
fn twisted_poisson_constant_symplectic() {
    let spec = twisted_poisson(&constant_symplectic(), &FormField::zero(2, 3), None).unwrap();
    assert_valid(&spec);
    assert!(spec.jacobiator_tensor().unwrap().is_zero());
    assert_eq!(spec.kernel_rank(), 0);
}

#[test]
fn twisted_poisson_from_non_closed_form() {
    let w = non_closed_omega();
    let pi = BivectorField::from_matrix(invert_unimodular(&w, 4).unwrap()).unwrap();
    let dw = cartan_d(&two_form(&w));
    assert!(!dw.is_zero());
    let minus = dw.scale(&Polynomial::from_int(4, -1));
    let spec = twisted_poisson(&pi, &minus, None).unwrap();
    assert_valid(&spec);
    // Pi^# is injective, so the Jacobiator, which it annihilates, vanishes
    assert!(spec.jacobiator_tensor().unwrap().is_zero());
    assert!(matches!(twisted_poisson(&pi, &dw, None), Err(Error::NotTwistedPoisson(_))));
    assert!(matches!(twisted_poisson(&pi, &FormField::zero(4, 3), None), Err(Error::NotTwistedPoisson(_))));
}

#[test]
fn twisted_poisson_degenerate_needs_kernel() {
    let pi = BivectorField::from_upper(3, [(0, 1, Polynomial::one(3))]).unwrap();
    let h = FormField::monomial(3, &[0, 1, 2], p("x1 x3 + 2", 3)).unwrap();
    assert!(matches!(twisted_poisson(&pi, &h, None), Err(Error::InvalidSpec(_))));
    let t = vec![vec![Polynomial::zero(3)], vec![Polynomial::zero(3)], vec![Polynomial::one(3)]];
    let s = vec![vec![Polynomial::zero(3), Polynomial::zero(3), Polynomial::one(3)]];
    let spec = twisted_poisson(&pi, &h, Some((t, s))).unwrap();
    assert_valid(&spec);
    assert_eq!(spec.structure_entry(0, 1, 2), &p("x1 x3 + 2", 3));
}


#[test]
fn twisted_action_with_jacobiator() {
    let spec = twisted_action(&heisenberg_twisted_action()).unwrap();
    assert_valid(&spec);
    let j = spec.jacobiator_tensor().unwrap();
    assert!(!j.is_zero());
    // J(e1, e2, e4) = [e4, [e1, e2]] = [e4, e3] = e5, the third kernel direction
    assert!(j.component(0, 1, 3, 2).is_one());
}

#[test]
fn untwisted_action_is_lie() {
    let mut data = heisenberg_twisted_action();
    data.twist.clear();
    let spec = twisted_action(&data).unwrap();
    assert_valid(&spec);
    assert!(spec.jacobiator_tensor().unwrap().is_zero());
}

#[test]
fn twisted_action_errors() {
    let mut data = heisenberg_twisted_action();
    let mut off = vec![Polynomial::zero(2); 5];
    off[0] = Polynomial::one(2);
    data.twist = vec![(0, 1, off)];
    assert!(matches!(twisted_action(&data), Err(Error::TwistViolatesMorphism(_))));

    let mut data = heisenberg_twisted_action();
    let mut into_kernel = vec![Polynomial::zero(2); 5];
    into_kernel[4] = Polynomial::one(2);
    data.twist.push((0, 3, into_kernel));
    assert!(matches!(twisted_action(&data), Err(Error::TwistNotKernelTrivial(_))));
}

#[test]
fn line_twist_with_kernel_argument_is_rejected() {
    // abelian g of dim 2 on the line, rho(e1) = d/dx, e2 spans the kernel,
    // k(e1, e2) = x1 e2: k(e2, e1) = -x1 e2 does not vanish
    let (zero, one) = (Polynomial::zero(1), Polynomial::one(1));
    let data = TwistedAction {
        algebra: abelian(2),
        anchor: vec![vec![one.clone()], vec![zero.clone()]],
        twist: vec![(0, 1, vec![zero.clone(), p("x1", 1)])],
        kernel_frame: vec![vec![zero.clone()], vec![one.clone()]],
        kernel_projection: vec![vec![zero, one]],
    };
    assert!(matches!(twisted_action(&data), Err(Error::TwistNotKernelTrivial(_))));
}

#[test]
fn unimodular_inverse() {
    let w = non_closed_omega();
    let inv = invert_unimodular(&w, 4).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Polynomial::zero(4);
            for k in 0..4 {
                acc = &acc + &(&w[i][k] * &inv[k][j]);
            }
            assert_eq!(acc, Polynomial::from_int(4, (i == j) as i64));
        }
    }
    let singular = vec![vec![p("x1", 1)]];
    assert!(invert_unimodular(&singular, 1).is_err());
}

#[test]
fn reference_specs_are_valid() {
    for (name, spec) in reference_specs() {
        assert!(spec.check_axioms().passed(), "{name}");
        assert!(check_dj_zero(&spec).unwrap().passed(), "{name}");
    }
    assert_eq!(b_twisted_point(), triple_bracket());
    let j = triple_bracket().jacobiator_tensor().unwrap();
    for c in 0..3 {
        assert!(j.component(0, 1, 2, c).is_one());
    }
}
