//! Exact computation of equivariant signature invariants for finite abelian
//! group actions.
//!
//! Everything in this crate is exact: rationals are arbitrary-precision,
//! cyclotomic numbers are stored on the power basis of a primitive root of
//! unity at minimal conductor, and all linear algebra over the integers goes
//! through Smith normal form.  No floating point is used anywhere.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`] — rationals, cyclotomic fields, polynomials over small
//!   prime fields, and integer matrices with Smith normal form.
//! * [`grouprep`] — finite abelian groups, their dual character groups, and
//!   the representation ring `Z[G^]` with restriction, induction, inflation
//!   and lambda operations.
//! * [`primeloc`] — prime ideals of the representation ring described by an
//!   evaluation element together with a residual characteristic, membership
//!   and unit tests, support computation, and localized elements.
//! * [`artin`] — integral Artin induction certificates from cyclic subgroups
//!   and the induction/restriction transfer identity.
//! * [`charseries`] — truncated multivariate power series with cyclotomic
//!   coefficients: exponentials, L-class factors and angle factors.
//! * [`gsig`] — fixed-point evaluation of equivariant signatures from germ
//!   data, signature oracles from cup-product matrices, Dedekind sums, and
//!   the structural decomposition of a localized signature class.
//! * [`lens`] — weighted lens spaces, their exact rho vectors, homotopy and
//!   isometry classification, and the search for homotopy-equivalent
//!   non-isometric pairs.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line live in the companion crate `equisig`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod artin;
pub mod charseries;
pub mod exactnum;
pub mod grouprep;
pub mod gsig;
pub mod lens;
pub mod primeloc;
