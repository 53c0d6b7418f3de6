//! Operadic dynamics of the harmonic oscillator.
//!
//! The crate is layered bottom-up:
//!
//! * [`operad`]: multilinear operations on a finite-dimensional real space,
//!   partial/total composition and Gerstenhaber brackets.
//! * [`oscillator`]: the exact oscillator flow, quasi-canonical coordinates
//!   `(Q, P)` and a finite-difference Poisson bracket.
//! * [`lax`]: the 3x3 matrix Lax pair and the nine-parameter operadic Lax pair
//!   `(mu, M)` with its initial-value solver.
//! * [`bianchi`]: Bianchi structure constants and their time-dependent
//!   deformations.
//! * [`ncalg`]: exact noncommutative polynomials with rational coefficients,
//!   normal ordering and substitution.
//! * [`qjacobi`]: quantum Bianchi algebras, their Jacobi operators, the
//!   semiclassical reductions and the derivative algebra.
//! * [`suite`]: seeded verification sweeps producing deterministic reports.

pub mod bianchi;
pub mod error;
pub mod lax;
pub mod ncalg;
pub mod operad;
pub mod oscillator;
pub mod qjacobi;
pub mod suite;

pub use error::{Error, Result};
