//! Exact scalar and matrix arithmetic.
//!
//! Submodules:
//!
//! * [`rational`] — arbitrary-precision rationals (re-exported from
//!   `num-rational`) plus parsing and formatting helpers.
//! * [`cyclotomic`] — elements of cyclotomic fields `Q(zeta_n)` on the power
//!   basis modulo the n-th cyclotomic polynomial, always stored at minimal
//!   conductor so that equality is structural.
//! * [`modpoly`] — dense polynomials over a small prime field, and the
//!   deterministic canonical irreducible factor of a cyclotomic polynomial
//!   modulo p.
//! * [`matrix`] — integer matrices with Smith normal form, integer linear
//!   solving, and integer kernel bases.
//!
//! Nothing here ever rounds: every operation either returns an exact value
//! or reports an error.

pub mod cyclotomic;
pub mod matrix;
pub mod modpoly;
pub mod rational;

pub use cyclotomic::{cyclotomic_polynomial, CycError, CyclotomicNumber};
pub use matrix::{lattice_kernel, smith_normal_form, smith_solve, IntegerMatrix, SmithDecomposition};
pub use modpoly::{factor_cyclotomic_mod_p, ModPolyError, ModPolynomial};
pub use rational::{frac, rat, Rational};
