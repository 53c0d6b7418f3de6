//! Quantum Bianchi algebras, their Jacobi operator and its semiclassical
//! reduction.
//!
//! Structure constants are noncommutative polynomials in `P̂, Q̂` (and
//! optionally `q̂, p̂`). Coordinates `x^i, y^i, z^i` are central symbols,
//! `Delta` denotes the determinant `(x, y, z)` and `r = √(2p₀)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::bianchi::{BianchiType, TABLE_INDICES};
use crate::error::{Error, Result};
use crate::ncalg::{
    determinant_poly, energy_conservation_defs, energy_root_def, rat, semiclassical_defs, Alphabet,
    CoeffPoly, CommutationTable, Letter, NCPoly, Symbol,
};

/// Which side of the operator-valued components the structure constant
/// multiplies in `μ̂^i_{jk} x^j y^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Left,
    Right,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Left, Convention::Right];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Left => "left",
            Convention::Right => "right",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Convention::Left),
            "right" => Ok(Convention::Right),
            _ => Err(Error::InvalidArgument(format!("unknown convention {s}"))),
        }
    }
}

fn table_for(alphabet: Alphabet) -> Arc<CommutationTable> {
    Arc::new(CommutationTable::for_alphabet(alphabet))
}

fn extended() -> Arc<CommutationTable> {
    table_for(Alphabet::QpPQ)
}

/// `a` for VII and VI, `1` for III.
fn a_coeff(ty: BianchiType) -> Result<CoeffPoly> {
    match ty {
        BianchiType::VIIa | BianchiType::VIa => Ok(CoeffPoly::symbol(Symbol::A)),
        BianchiType::IIIa1 => Ok(CoeffPoly::one()),
        BianchiType::II => Err(Error::Unsupported(format!(
            "no quantum counterpart for type {ty}"
        ))),
    }
}

fn mono(n: i64, d: i64, factors: &[(Symbol, i32)]) -> CoeffPoly {
    CoeffPoly::monomial(rat(n, d), factors)
}

/// `1/r`.
fn inv_r() -> CoeffPoly {
    mono(1, 2, &[(Symbol::R, 1), (Symbol::P0, -1)])
}

/// `1/(r p₀) = 1/√(2p₀³)`.
fn inv_r_p0() -> CoeffPoly {
    mono(1, 2, &[(Symbol::R, 1), (Symbol::P0, -2)])
}

/// Operator-valued structure constants `μ̂^i_{jk}`, antisymmetric in `j, k`.
#[derive(Debug, Clone, PartialEq)]
pub struct QStructureConstants {
    ty: BianchiType,
    table: Arc<CommutationTable>,
    mu: Vec<NCPoly>,
}

impl QStructureConstants {
    pub fn ty(&self) -> BianchiType {
        self.ty
    }

    pub fn table(&self) -> &Arc<CommutationTable> {
        &self.table
    }

    pub fn alphabet(&self) -> Alphabet {
        self.table.alphabet()
    }

    /// `μ̂^i_{jk}` with 0-based indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &NCPoly {
        &self.mu[9 * i + 3 * j + k]
    }

    /// The nine independent entries in table order.
    pub fn row(&self) -> Vec<&NCPoly> {
        TABLE_INDICES.iter().map(|&(i, j, k)| self.get(i, j, k)).collect()
    }
}

/// Quantum structure constants of `ty`; over `{P, Q}` the operators
/// `q̂, p̂` are eliminated through the semiclassical constraints.
pub fn q_structure(ty: BianchiType, alphabet: Alphabet) -> Result<QStructureConstants> {
    let a = a_coeff(ty)?;
    let t = extended();
    let big_p = NCPoly::letter(&t, Letter::P);
    let big_q = NCPoly::letter(&t, Letter::Q);
    let p_hat = NCPoly::letter(&t, Letter::SmallP);
    let q_hat = NCPoly::letter(&t, Letter::SmallQ);
    let p0 = NCPoly::symbol(&t, Symbol::P0);
    let a_over_r = &a * &inv_r();
    let inv_2p0 = mono(1, 2, &[(Symbol::P0, -1)]);
    let minus_w_2p0 = mono(-1, 2, &[(Symbol::Omega, 1), (Symbol::P0, -1)]);
    let mu3_12 = if ty == BianchiType::VIIa { 1 } else { -1 };
    let row = [
        big_q.scale(&a_over_r),
        big_p.scale(&-&a_over_r),
        NCPoly::scalar(&t, CoeffPoly::integer(mu3_12)),
        p_hat.sub(&p0).scale(&-&inv_2p0),
        q_hat.scale(&minus_w_2p0),
        big_q.scale(&-&a_over_r),
        q_hat.scale(&minus_w_2p0),
        p_hat.add(&p0).scale(&inv_2p0),
        big_p.scale(&a_over_r),
    ];
    let row: Vec<NCPoly> = match alphabet {
        Alphabet::QpPQ => row.to_vec(),
        Alphabet::PQ => {
            let defs = semiclassical_defs(&t);
            let target = table_for(Alphabet::PQ);
            row.iter()
                .map(|x| x.substitute(&defs)?.into_table(&target))
                .collect::<Result<_>>()?
        }
    };
    let table = Arc::clone(row[0].table());
    let mut mu = vec![NCPoly::zero(&table); 27];
    for (&(i, j, k), v) in TABLE_INDICES.iter().zip(&row) {
        mu[9 * i + 3 * j + k] = v.clone();
        mu[9 * i + 3 * k + j] = v.neg();
    }
    Ok(QStructureConstants { ty, table, mu })
}

/// Element `x^i e_i` with operator-valued components.
#[derive(Debug, Clone, PartialEq)]
pub struct QElement(pub [NCPoly; 3]);

impl QElement {
    /// `(s[0], s[1], s[2])` as central coordinate symbols.
    pub fn symbolic(table: &Arc<CommutationTable>, s: [Symbol; 3]) -> Self {
        Self(s.map(|c| NCPoly::symbol(table, c)))
    }

    pub fn unit(table: &Arc<CommutationTable>, i: usize) -> Self {
        Self(std::array::from_fn(|k| {
            if k == i {
                NCPoly::one(table)
            } else {
                NCPoly::zero(table)
            }
        }))
    }

    pub fn scalars(table: &Arc<CommutationTable>, v: [CoeffPoly; 3]) -> Self {
        Self(v.map(|c| NCPoly::scalar(table, c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i].add(&other.0[i])))
    }

    pub fn scale(&self, c: &CoeffPoly) -> Self {
        Self(std::array::from_fn(|i| self.0[i].scale(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(NCPoly::is_zero)
    }
}

/// `[x, y]_ħ^i = μ̂^i_{jk} ⋆ x^j y^k`.
pub fn q_bracket(
    x: &QElement,
    y: &QElement,
    qsc: &QStructureConstants,
    conv: Convention,
) -> QElement {
    QElement(std::array::from_fn(|i| {
        let mut out = NCPoly::zero(&qsc.table);
        for j in 0..3 {
            for k in 0..3 {
                let mu = qsc.get(i, j, k);
                if mu.is_zero() || x.0[j].is_zero() || y.0[k].is_zero() {
                    continue;
                }
                let xy = x.0[j].mul(&y.0[k]);
                let term = match conv {
                    Convention::Left => mu.mul(&xy),
                    Convention::Right => xy.mul(mu),
                };
                out = out.add(&term);
            }
        }
        out
    }))
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
pub fn q_jacobiator(
    x: &QElement,
    y: &QElement,
    z: &QElement,
    qsc: &QStructureConstants,
    conv: Convention,
) -> QElement {
    let b = |u: &QElement, v: &QElement| q_bracket(u, v, qsc, conv);
    b(x, &b(y, z)).add(&b(y, &b(z, x))).add(&b(z, &b(x, y)))
}

/// Jacobiator on the symbolic coordinates `x, y, z`.
pub fn symbolic_jacobiator(qsc: &QStructureConstants, conv: Convention) -> QElement {
    let t = &qsc.table;
    q_jacobiator(
        &QElement::symbolic(t, Symbol::X),
        &QElement::symbolic(t, Symbol::Y),
        &QElement::symbolic(t, Symbol::Z),
        qsc,
        conv,
    )
}

/// `ξ̂¹ = ωq̂Q̂ + (p̂ − p₀)P̂` and `ξ̂² = ωq̂P̂ − (p̂ + p₀)Q̂` in the four-letter
/// algebra.
fn xi_letters(t: &Arc<CommutationTable>) -> (NCPoly, NCPoly) {
    let big_p = NCPoly::letter(t, Letter::P);
    let big_q = NCPoly::letter(t, Letter::Q);
    let p_hat = NCPoly::letter(t, Letter::SmallP);
    let wq = NCPoly::letter(t, Letter::SmallQ).scale(&CoeffPoly::symbol(Symbol::Omega));
    let p0 = NCPoly::symbol(t, Symbol::P0);
    let xi1 = wq.mul(&big_q).add(&p_hat.sub(&p0).mul(&big_p));
    let xi2 = wq.mul(&big_p).sub(&p_hat.add(&p0).mul(&big_q));
    (xi1, xi2)
}

/// `ξ̂¹, ξ̂²` in the given alphabet (constraints substituted for `{P, Q}`).
pub fn xi(alphabet: Alphabet) -> Result<(NCPoly, NCPoly)> {
    let t = extended();
    let (xi1, xi2) = xi_letters(&t);
    match alphabet {
        Alphabet::QpPQ => Ok((xi1, xi2)),
        Alphabet::PQ => {
            let defs = semiclassical_defs(&t);
            let target = table_for(Alphabet::PQ);
            Ok((
                xi1.substitute(&defs)?.into_table(&target)?,
                xi2.substitute(&defs)?.into_table(&target)?,
            ))
        }
    }
}

fn expand_delta(x: &NCPoly) -> Result<NCPoly> {
    let det = determinant_poly();
    x.try_map_coeffs(|c| c.substitute_one(Symbol::Delta, &det))
}

/// Right-hand sides `−(aΔ/(rp₀))ξ̂¹`, `−(aΔ/(rp₀))ξ̂²`, `(a²Δ/p₀)[P̂, Q̂]`
/// with `Δ` kept symbolic.
pub fn theorem_forms(ty: BianchiType, alphabet: Alphabet) -> Result<[NCPoly; 3]> {
    let a = a_coeff(ty)?;
    let (xi1, xi2) = xi(alphabet)?;
    let t = Arc::clone(xi1.table());
    let delta = CoeffPoly::symbol(Symbol::Delta);
    let k = -&(&(&a * &delta) * &inv_r_p0());
    let big_p = NCPoly::letter(&t, Letter::P);
    let big_q = NCPoly::letter(&t, Letter::Q);
    let k3 = &(&(&a * &a) * &delta) * &mono(1, 1, &[(Symbol::P0, -1)]);
    Ok([xi1.scale(&k), xi2.scale(&k), big_p.commutator(&big_q).scale(&k3)])
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentCheck {
    pub index: usize,
    pub computed: String,
    pub expected: String,
    pub matches: bool,
    /// `computed − expected`, `"0"` on a match.
    pub residual: String,
    pub divisible_by_delta: bool,
    /// `computed / Δ` when the division is exact.
    pub quotient: Option<String>,
    pub quotient_coordinate_free: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub label: BianchiType,
    pub convention: Convention,
    pub alphabet: &'static str,
    pub components: Vec<ComponentCheck>,
    pub exact_match: bool,
    pub delta_factorization: bool,
}

fn div_by_delta(x: &NCPoly) -> Option<NCPoly> {
    let det = determinant_poly();
    x.try_map_coeffs(|c| {
        c.div_exact(&det)
            .ok_or_else(|| Error::NotRepresentable("remainder".into()))
    })
    .ok()
}

fn coordinate_free(x: &NCPoly) -> bool {
    Symbol::ALL
        .iter()
        .filter(|s| s.is_coordinate())
        .all(|&s| !x.contains_symbol(s))
}

/// Compares the symbolic Jacobiator with the closed-form components.
pub fn verify_theorem_q(
    ty: BianchiType,
    conv: Convention,
    alphabet: Alphabet,
) -> Result<TheoremReport> {
    let qsc = q_structure(ty, alphabet)?;
    let computed = symbolic_jacobiator(&qsc, conv);
    let expected = theorem_forms(ty, alphabet)?;
    let mut components = Vec::with_capacity(3);
    for (i, (c, e)) in computed.0.iter().zip(&expected).enumerate() {
        let residual = c.sub(&expand_delta(e)?);
        let quotient = div_by_delta(c);
        components.push(ComponentCheck {
            index: i + 1,
            computed: quotient
                .as_ref()
                .map(|q| q.scale(&CoeffPoly::symbol(Symbol::Delta)).to_string())
                .unwrap_or_else(|| c.to_string()),
            expected: e.to_string(),
            matches: residual.is_zero(),
            residual: residual.to_string(),
            divisible_by_delta: quotient.is_some(),
            quotient_coordinate_free: quotient.as_ref().is_some_and(coordinate_free),
            quotient: quotient.map(|q| q.to_string()),
        });
    }
    Ok(TheoremReport {
        label: ty,
        convention: conv,
        alphabet: alphabet.name(),
        exact_match: components.iter().all(|c| c.matches),
        delta_factorization: components
            .iter()
            .all(|c| c.divisible_by_delta && c.quotient_coordinate_free),
        components,
    })
}

/// All four (convention, alphabet) configurations.
pub fn verify_theorem_all(ty: BianchiType) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for alphabet in [Alphabet::PQ, Alphabet::QpPQ] {
        for conv in Convention::ALL {
            out.push(verify_theorem_q(ty, conv, alphabet)?);
        }
    }
    Ok(out)
}

/// Semiclassical expansion of one `ξ̂` component.
#[derive(Debug, Clone)]
pub struct XiExpansion {
    /// Constraints substituted and normal-ordered.
    pub computed: NCPoly,
    /// The closed form with `h = √(2Ĥ)` kept as a central symbol.
    pub reduced: NCPoly,
    /// `reduced` with `h ≔ (P̂² + Q̂²)/2` placed to the right.
    pub reduced_expanded: NCPoly,
    pub matches: bool,
}

fn xi_expansion(computed: NCPoly, reduced: NCPoly) -> Result<XiExpansion> {
    let h = energy_root_def(computed.table());
    let reduced_expanded = reduced.expand_central_right(Symbol::H, &h)?;
    Ok(XiExpansion {
        matches: reduced_expanded == computed,
        computed,
        reduced,
        reduced_expanded,
    })
}

/// `ξ̂¹ = (λ/2)εQ̂ + P̂(h − p₀)` and `ξ̂² = −(λ/2)εP̂ + Q̂(h − p₀)`.
pub fn xi_reduced_forms(t: &Arc<CommutationTable>) -> (NCPoly, NCPoly) {
    let big_p = NCPoly::letter(t, Letter::P);
    let big_q = NCPoly::letter(t, Letter::Q);
    let half_lam_eps = mono(1, 2, &[(Symbol::Lambda, 1), (Symbol::Eps, 1)]);
    let h_minus_p0 = &CoeffPoly::symbol(Symbol::H) - &CoeffPoly::symbol(Symbol::P0);
    (
        big_q.scale(&half_lam_eps).add(&big_p.scale(&h_minus_p0)),
        big_p.scale(&-&half_lam_eps).add(&big_q.scale(&h_minus_p0)),
    )
}

pub fn semiclassical_xi() -> Result<[XiExpansion; 2]> {
    let (xi1, xi2) = xi(Alphabet::PQ)?;
    let (r1, r2) = xi_reduced_forms(xi1.table());
    Ok([xi_expansion(xi1, r1)?, xi_expansion(xi2, r2)?])
}

/// Jacobiator components in the semiclassical approximation.
#[derive(Debug, Clone)]
pub struct SemiclassicalJacobi {
    /// `−(aΔ/(rp₀))ξ̂`, `(a²Δ/p₀)[P̂,Q̂]` with `h` symbolic.
    pub components: [NCPoly; 3],
    /// Independently written `(aΔ/(rp₀))[P̂(p₀ − h) − (λ/2)Q̂ε]`, …
    pub expected: [NCPoly; 3],
    pub matches: [bool; 3],
    /// `components` with `h` expanded equals the constraint-substituted
    /// theorem forms.
    pub consistent_with_xi: bool,
}

pub fn semiclassical_jacobi(ty: BianchiType) -> Result<SemiclassicalJacobi> {
    let a = a_coeff(ty)?;
    let t = table_for(Alphabet::PQ);
    let delta = CoeffPoly::symbol(Symbol::Delta);
    let k = &(&a * &delta) * &inv_r_p0();
    let (r1, r2) = xi_reduced_forms(&t);
    let big_p = NCPoly::letter(&t, Letter::P);
    let big_q = NCPoly::letter(&t, Letter::Q);
    let k3 = &(&(&a * &a) * &delta) * &mono(1, 1, &[(Symbol::P0, -1)]);
    let components = [
        r1.scale(&-&k),
        r2.scale(&-&k),
        big_p.commutator(&big_q).scale(&k3),
    ];

    let h = CoeffPoly::symbol(Symbol::H);
    let p0 = CoeffPoly::symbol(Symbol::P0);
    let half_lam_eps = mono(1, 2, &[(Symbol::Lambda, 1), (Symbol::Eps, 1)]);
    let p0_minus_h = &p0 - &h;
    let lam_eps = mono(1, 1, &[(Symbol::Lambda, 1), (Symbol::Eps, 1)]);
    let expected = [
        big_p
            .scale(&p0_minus_h)
            .sub(&big_q.scale(&half_lam_eps))
            .scale(&k),
        big_q
            .scale(&p0_minus_h)
            .add(&big_p.scale(&half_lam_eps))
            .scale(&k),
        NCPoly::scalar(&t, &lam_eps * &k3),
    ];
    let matches = std::array::from_fn(|i| components[i] == expected[i]);

    let theorem = theorem_forms(ty, Alphabet::PQ)?;
    let root = energy_root_def(&t);
    let mut consistent = true;
    for (c, th) in components.iter().zip(&theorem) {
        consistent &= &c.expand_central_right(Symbol::H, &root)? == th;
    }
    Ok(SemiclassicalJacobi {
        components,
        expected,
        matches,
        consistent_with_xi: consistent,
    })
}

/// `c = aΔω/(4rp₀²)`, the common magnitude of the first two components
/// under energy conservation.
fn he_magnitude(a: &CoeffPoly) -> CoeffPoly {
    a * &mono(1, 8, &[(Symbol::Delta, 1), (Symbol::Omega, 1), (Symbol::R, 1), (Symbol::P0, -3)])
}

#[derive(Debug, Clone)]
pub struct CorollaryHE {
    pub components: [NCPoly; 3],
    /// `−λcQ̂`, `λcP̂`, `λa²Δω/(2p₀²)`.
    pub expected: [NCPoly; 3],
    pub matches: bool,
    /// No `λ⁰` term survives in the first two components.
    pub first_order: bool,
}

/// Energy conservation `h → p₀`, `ε → ω/(2p₀)` applied to the
/// semiclassical components.
pub fn corollary_he(ty: BianchiType) -> Result<CorollaryHE> {
    let a = a_coeff(ty)?;
    let sj = semiclassical_jacobi(ty)?;
    let t = Arc::clone(sj.components[0].table());
    let defs = energy_conservation_defs(&t);
    let components = [
        sj.components[0].substitute(&defs)?,
        sj.components[1].substitute(&defs)?,
        sj.components[2].substitute(&defs)?,
    ];
    let lam = CoeffPoly::symbol(Symbol::Lambda);
    let lc = &lam * &he_magnitude(&a);
    let j3 = &(&lam * &(&a * &a)) * &mono(1, 2, &[(Symbol::Delta, 1), (Symbol::Omega, 1), (Symbol::P0, -2)]);
    let expected = [
        NCPoly::letter(&t, Letter::Q).scale(&-&lc),
        NCPoly::letter(&t, Letter::P).scale(&lc),
        NCPoly::scalar(&t, j3),
    ];
    let first_order = components[..2]
        .iter()
        .all(|c| c.terms().all(|(_, v)| v.terms().all(|(m, _)| m.exp(Symbol::Lambda) >= 1)));
    Ok(CorollaryHE {
        matches: components == expected,
        components,
        expected,
        first_order,
    })
}

/// Splits `x` over a basis whose elements are each a single term; returns
/// `None` when `x` is not in their span.
fn decompose(x: &NCPoly, basis: &[NCPoly; 3]) -> Option<[CoeffPoly; 3]> {
    let mut out: [CoeffPoly; 3] = Default::default();
    for (word, c) in x.terms() {
        let idx = basis.iter().position(|b| b.len() == 1 && b.terms().next().unwrap().0 == word)?;
        let (_, bc) = basis[idx].terms().next()?;
        out[idx] = c * &bc.inverse_monomial()?;
    }
    Some(out)
}

#[derive(Debug, Clone)]
pub struct DerivativeAlgebra {
    pub label: BianchiType,
    /// `[Ĵ¹,Ĵ²] = C Ĵ³`.
    pub c: CoeffPoly,
    /// `β² = −CΔ`.
    pub beta_sq: CoeffPoly,
    pub c_expected: CoeffPoly,
    pub c_matches: bool,
    pub c_free_of_a: bool,
    /// `[Ĵ¹,Ĵ³]` and `[Ĵ²,Ĵ³]` vanish.
    pub closure: bool,
    /// Structure constants in the basis `e₁ = −ΔĴ³, e₂ = −ΔĴ¹, e₃ = −ΔĴ²`,
    /// table order.
    pub basis_constants: [CoeffPoly; 9],
    /// Only `[e₂,e₃] = β² e₁` is non-zero.
    pub basis_bracket: bool,
    /// Constants after `ẽ₂ = e₂/β`, `ẽ₃ = e₃/β`.
    pub rescaled_constants: [CoeffPoly; 9],
    /// `rescaled_constants` equal the type II row.
    pub heisenberg: bool,
}

/// Exponent of `β` in `ẽ_i = β^{-s_i} e_i`.
const BETA_EXPONENTS: [i32; 3] = [0, 1, 1];

pub fn derivative_algebra(ty: BianchiType) -> Result<DerivativeAlgebra> {
    let he = corollary_he(ty)?;
    let t = Arc::clone(he.components[0].table());
    let defs = energy_conservation_defs(&t);
    let reduce = |x: NCPoly| x.substitute(&defs);
    let [j1, j2, j3] = he.components.clone();
    let j3_scalar = j3
        .as_scalar()
        .ok_or_else(|| Error::NotRepresentable("third component is not central".into()))?;

    let j12 = reduce(j1.commutator(&j2))?;
    let c = j12
        .as_scalar()
        .and_then(|s| Some(&s * &j3_scalar.inverse_monomial()?))
        .ok_or_else(|| Error::NotRepresentable("[J1,J2] is not proportional to J3".into()))?;
    let closure = reduce(j1.commutator(&j3))?.is_zero() && reduce(j2.commutator(&j3))?.is_zero();
    let delta = CoeffPoly::symbol(Symbol::Delta);
    let beta_sq = -&(&c * &delta);
    let c_expected = mono(1, 32, &[(Symbol::Lambda, 2), (Symbol::Omega, 2), (Symbol::Delta, 1), (Symbol::P0, -4)]);

    let minus_delta = -&delta;
    let basis = [j3.scale(&minus_delta), j1.scale(&minus_delta), j2.scale(&minus_delta)];
    let mut basis_constants: [CoeffPoly; 9] = Default::default();
    for (slot, &(i, j, k)) in TABLE_INDICES.iter().enumerate() {
        let br = reduce(basis[j].commutator(&basis[k]))?;
        let coords = decompose(&br, &basis)
            .ok_or_else(|| Error::NotRepresentable("bracket leaves the span".into()))?;
        basis_constants[slot] = coords[i].clone();
    }
    let mut expected_basis: [CoeffPoly; 9] = Default::default();
    expected_basis[3] = beta_sq.clone();
    let basis_bracket = basis_constants == expected_basis;

    let inv_beta_sq = beta_sq
        .inverse_monomial()
        .ok_or_else(|| Error::NotRepresentable("beta^2 is not a monomial".into()))?;
    let mut rescaled_constants: [CoeffPoly; 9] = Default::default();
    let mut representable = true;
    for (slot, &(i, j, k)) in TABLE_INDICES.iter().enumerate() {
        let v = &basis_constants[slot];
        if v.is_zero() {
            continue;
        }
        let e = BETA_EXPONENTS[i] - BETA_EXPONENTS[j] - BETA_EXPONENTS[k];
        if e % 2 != 0 {
            representable = false;
            continue;
        }
        rescaled_constants[slot] = v * &inv_beta_sq.pow(-e / 2)?;
    }
    let mut type_ii: [CoeffPoly; 9] = Default::default();
    type_ii[3] = CoeffPoly::one();

    Ok(DerivativeAlgebra {
        label: ty,
        c_matches: c == c_expected,
        c_free_of_a: !c.contains(Symbol::A),
        c,
        beta_sq,
        c_expected,
        closure,
        basis_constants,
        basis_bracket,
        heisenberg: representable && rescaled_constants == type_ii,
        rescaled_constants,
    })
}

/// `|Δ| = 4√2 (2n + 1)`: the determinant at which `β = 1` when
/// `E = ħω(n + 1/2)`.
pub fn spectrum_determinant(n: u32) -> f64 {
    4.0 * std::f64::consts::SQRT_2 * (2 * n + 1) as f64
}

/// `β = (ħω/(2E)) |Δ| / (4√2)`.
pub fn beta(hbar: f64, omega: f64, energy: f64, delta_abs: f64) -> f64 {
    hbar * omega / (2.0 * energy) * delta_abs / (4.0 * std::f64::consts::SQRT_2)
}

/// The energy solving `β = 1` for a given `|Δ|`.
pub fn energy_for_unit_beta(hbar: f64, omega: f64, delta_abs: f64) -> f64 {
    hbar * omega * delta_abs / (8.0 * std::f64::consts::SQRT_2)
}
