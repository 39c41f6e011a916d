//! Seeded random inputs for spot checks and property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebroid::AlgebroidSpec;
use crate::cochain::{Cochain, CochainShape};
use crate::cohomology::degree_basis;
use crate::scalars::{rational, Monomial, Polynomial, Rational};

/// The generator used throughout; streams are stable across platforms.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational `p/q` with `q` in `{1, 2, 3}` and `|p/q| <= 2`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let q = rng.gen_range(1..=3i64);
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-2 * q..=2 * q);
    }
    rational(p, q)
}

/// An almost Lie algebra of the given dimension: each `C^c_ab` (`a < b`) is
/// nonzero with probability one half, with values from [`small_rational`].
pub fn random_almost_lie_algebra<R: Rng>(rng: &mut R, dim: usize) -> AlgebroidSpec {
    let mut constants = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            for c in 0..dim {
                if rng.gen_bool(0.5) {
                    constants.push((a, b, c, small_rational(rng)));
                }
            }
        }
    }
    AlgebroidSpec::almost_lie_algebra(dim, constants).expect("indices in range")
}

/// A polynomial with up to three terms of degree at most two.
pub fn random_polynomial<R: Rng>(rng: &mut R, nvars: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u32; nvars];
        if nvars > 0 {
            for _ in 0..rng.gen_range(0..=2) {
                exps[rng.gen_range(0..nvars)] += 1;
            }
        }
        p = &p + &Polynomial::term(nvars, small_rational(rng), Monomial::from_exponents(exps));
    }
    p
}

/// A homogeneous cochain of the given degree with up to `max_terms` terms,
/// or `None` when `C^degree` is zero for this shape.
pub fn random_cochain<R: Rng>(rng: &mut R, shape: CochainShape, degree: usize, max_terms: usize) -> Option<Cochain> {
    let basis = degree_basis(shape, degree);
    if basis.is_empty() {
        return None;
    }
    let mut gamma = Cochain::zero(shape, degree);
    let count = rng.gen_range(1..=max_terms.max(1));
    let keys: Vec<_> = basis.choose_multiple(rng, count).cloned().collect();
    for key in keys {
        let mut term = Cochain::zero(shape, degree);
        term.add_term(key, random_polynomial(rng, shape.base_dim));
        gamma = &gamma + &term;
    }
    Some(gamma)
}

/// `count` random cochains with degrees drawn from `0..=max_degree`,
/// skipping degrees where the cochain space is zero.
pub fn random_cochains<R: Rng>(rng: &mut R, shape: CochainShape, max_degree: usize, count: usize) -> Vec<Cochain> {
    let degrees: Vec<usize> = (0..=max_degree).filter(|&d| !degree_basis(shape, d).is_empty()).collect();
    (0..count)
        .map(|_| {
            let d = *degrees.choose(rng).expect("degree 0 is always available");
            random_cochain(rng, shape, d, 4).expect("nonempty basis")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_streams_repeat() {
        let a = random_almost_lie_algebra(&mut rng_from_seed(7), 4);
        let b = random_almost_lie_algebra(&mut rng_from_seed(7), 4);
        assert_eq!(a, b);
        assert_eq!(a.to_spec_text(), b.to_spec_text());
    }

    #[test]
    fn rationals_are_bounded() {
        let mut rng = rng_from_seed(1);
        for _ in 0..200 {
            let q = small_rational(&mut rng);
            assert!(q != rational(0, 1) && q <= rational(2, 1) && q >= rational(-2, 1));
            assert!(*q.denom() <= 3.into());
        }
    }

    #[test]
    fn cochains_have_requested_degrees() {
        let mut rng = rng_from_seed(3);
        let shape = CochainShape { base_dim: 2, rank: 3, kernel_rank: 1 };
        for c in random_cochains(&mut rng, shape, 6, 30) {
            assert!(c.degree() <= 6);
            assert!(c.terms().all(|(k, _)| k.degree() == c.degree()));
        }
        let empty = CochainShape { base_dim: 2, rank: 2, kernel_rank: 0 };
        assert!(random_cochain(&mut rng, empty, 3, 2).is_none());
    }
}
