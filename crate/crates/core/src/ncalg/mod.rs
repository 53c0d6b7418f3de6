//! Exact noncommutative algebra for the quasi-canonical operators.
//!
//! Coefficients ([`CoeffPoly`]) are commutative Laurent polynomials with
//! rational coefficients in central symbols (`λ = ħ/i`, `ε̂`, `√(2Ĥ)`, …);
//! [`NCPoly`] adds the noncommuting letters and keeps every value in normal
//! order with respect to a [`CommutationTable`].

mod coeff;
mod poly;
pub mod render;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use coeff::{determinant_poly, int, rat, CoeffPoly, Monomial, Rational, Symbol, SYMBOL_COUNT};
pub use poly::{Alphabet, CommutationTable, Letter, NCPoly, Var, Word};

use crate::error::Result;

/// Normal form of `x` under `table` (re-targets `x` if its table differs).
pub fn normal_order(x: &NCPoly, table: &Arc<CommutationTable>) -> Result<NCPoly> {
    x.into_table(table)
}

/// `xy − yx`.
pub fn commutator(x: &NCPoly, y: &NCPoly) -> Result<NCPoly> {
    x.try_commutator(y)
}

pub fn substitute(x: &NCPoly, defs: &BTreeMap<Var, NCPoly>) -> Result<NCPoly> {
    x.substitute(defs)
}

pub fn hbar_truncate(x: &NCPoly, k: i32) -> NCPoly {
    x.hbar_truncate(k)
}

/// Semiclassical constraints read as definitions, over the four-letter
/// table: `p̂ ≔ (P̂² − Q̂²)/2`, `q̂ ≔ (P̂Q̂ + Q̂P̂)/(2ω)`.
pub fn semiclassical_defs(table: &Arc<CommutationTable>) -> BTreeMap<Var, NCPoly> {
    let p = NCPoly::letter(table, Letter::P);
    let q = NCPoly::letter(table, Letter::Q);
    let half = rat(1, 2);
    let p_hat = p.mul(&p).sub(&q.mul(&q)).scale_rational(&half);
    let omega_q = p.mul(&q).add(&q.mul(&p)).scale_rational(&half);
    let inv_omega = CoeffPoly::monomial(int(1), &[(Symbol::Omega, -1)]);
    BTreeMap::from([
        (Var::Letter(Letter::SmallP), p_hat),
        (Var::Letter(Letter::SmallQ), omega_q.scale(&inv_omega)),
    ])
}

/// `√(2Ĥ) ≔ (P̂² + Q̂²)/2` as a polynomial in the given table.
pub fn energy_root_def(table: &Arc<CommutationTable>) -> NCPoly {
    let p = NCPoly::letter(table, Letter::P);
    let q = NCPoly::letter(table, Letter::Q);
    p.mul(&p).add(&q.mul(&q)).scale_rational(&rat(1, 2))
}

/// Energy conservation `Ĥ = E`: `√(2Ĥ) → p₀`, `ε̂ → ω/(2p₀)`.
pub fn energy_conservation_defs(table: &Arc<CommutationTable>) -> BTreeMap<Var, NCPoly> {
    BTreeMap::from([
        (Var::Sym(Symbol::H), NCPoly::symbol(table, Symbol::P0)),
        (
            Var::Sym(Symbol::Eps),
            NCPoly::scalar(
                table,
                CoeffPoly::monomial(rat(1, 2), &[(Symbol::Omega, 1), (Symbol::P0, -1)]),
            ),
        ),
    ])
}

#[cfg(test)]
mod tests;
