#![allow(dead_code)]

use almost_lie::cochain::{check_dj_zero, q_coordinate_check};
use almost_lie::gallery::examples::reference_specs;
use almost_lie::random::{random_almost_lie_algebra, random_cochains, rng_from_seed};
use almost_lie::{AlgebroidSpec, Cochain, CochainCalculus};

/// 100 seeded random almost Lie algebras of dimensions 2 to 5.
pub fn random_corpus() -> Vec<(String, AlgebroidSpec)> {
    (0..100u64)
        .map(|i| {
            let dim = 2 + (i % 4) as usize;
            let spec = random_almost_lie_algebra(&mut rng_from_seed(1000 + i), dim);
            (format!("random-{i}-dim-{dim}"), spec)
        })
        .collect()
}

/// The random corpus followed by every gallery reference instance.
pub fn corpus() -> Vec<(String, AlgebroidSpec)> {
    let mut out = random_corpus();
    out.extend(reference_specs().into_iter().map(|(n, s)| (n.to_string(), s)));
    out
}

/// 25 random cochains of degree at most 6, seeded per spec.
pub fn sample_cochains(spec: &AlgebroidSpec, seed: u64) -> Vec<Cochain> {
    let shape = almost_lie::CochainShape::of(spec);
    random_cochains(&mut rng_from_seed(seed), shape, 6, 25)
}

/// Axioms, Jacobiator tensor, `DJ = 0`, the coordinate cross-check at cutoff 3
/// and `d^2 = 0` on 25 random cochains; `Err` names the first failing check.
pub fn full_check(spec: &AlgebroidSpec, seed: u64) -> Result<(), String> {
    let axioms = spec.check_axioms();
    if !axioms.passed() {
        return Err(format!("axioms: {axioms}"));
    }
    spec.jacobiator_tensor().map_err(|e| format!("jacobiator: {e}"))?;
    let dj = check_dj_zero(spec).map_err(|e| format!("DJ: {e}"))?;
    if !dj.passed() {
        return Err(format!("DJ: {dj}"));
    }
    let calc = CochainCalculus::new(spec).map_err(|e| e.to_string())?;
    let q = q_coordinate_check(&calc, 3).map_err(|e| e.to_string())?;
    if !q.passed() {
        return Err(format!("coordinate check: {q}"));
    }
    for gamma in sample_cochains(spec, seed) {
        if !calc.d_squared(&gamma).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("d^2 does not vanish on {gamma}"));
        }
    }
    Ok(())
}
