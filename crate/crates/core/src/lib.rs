//! Exact computations for almost Lie algebroids.
//!
//! The crate models an almost Lie algebroid over the polynomial ring
//! `Q[x1, ..., xm]` by a free module with a chosen frame: anchor matrix,
//! structure functions of the bracket, and a split frame of the anchor
//! kernel. On top of that it builds the graded cochain algebra
//! `C^n = sum_{p+2q=n} Lambda^p A* (x) Sym^q F*` with the operators
//! `D`, `delta_hat`, `J_hat`, `J_tilde`, `L*` and the total differential
//! `d = D + J_hat + delta_hat`, and computes cohomology of the finite
//! dimensional (constant coefficient) pieces by exact rank computation.
//!
//! Module map:
//! - [`scalars`]: rationals, sparse polynomials, derivations.
//! - [`algebroid`]: specs, sections, bracket, anchor, axiom checks, Jacobiator, kernel connection.
//! - [`cochain`]: the cochain algebra and its operators, `DJ = 0` and coordinate cross-checks.
//! - [`cohomology`]: slice assembly, fraction-free rank, Betti tables.
//! - [`gallery`]: constructors for the standard example families.
//! - spec files: [`AlgebroidSpec::parse_spec`] and [`AlgebroidSpec::to_spec_text`].
//! - [`random`]: seeded random algebras and cochains.

pub mod algebroid;
pub mod cochain;
pub mod cohomology;
mod error;
pub mod gallery;
pub mod random;
pub mod scalars;
mod specfile;

pub use algebroid::{AlgebroidSpec, Ambient, Section};
pub use cochain::{BasisKey, Cochain, CochainCalculus, CochainShape, Operator};
pub use error::{Error, Result};
pub use scalars::{Derivation, Monomial, Polynomial, Rational};
