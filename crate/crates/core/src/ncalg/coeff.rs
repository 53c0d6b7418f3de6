//! Commutative Laurent polynomials with exact rational coefficients over the
//! fixed set of central symbols.
//!
//! The radical `r = √(2p₀)` is kept in canonical form: its exponent is always
//! 0 or 1, higher and negative powers being folded into `p₀` via `r² = 2p₀`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Central (commuting) symbols. The declaration order is the canonical
/// factor order used for rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// `ħ/i`, never expanded.
    Lambda,
    A,
    /// The determinant `(x, y, z)`.
    Delta,
    Omega,
    P0,
    /// `√(2p₀)`.
    R,
    /// `ε̂ = ω/(2√(2Ĥ))`, treated as central.
    Eps,
    /// `√(2Ĥ)`, treated as central.
    H,
    X1,
    X2,
    X3,
    Y1,
    Y2,
    Y3,
    Z1,
    Z2,
    Z3,
}

pub const SYMBOL_COUNT: usize = 17;

impl Symbol {
    pub const ALL: [Symbol; SYMBOL_COUNT] = [
        Symbol::Lambda,
        Symbol::A,
        Symbol::Delta,
        Symbol::Omega,
        Symbol::P0,
        Symbol::R,
        Symbol::Eps,
        Symbol::H,
        Symbol::X1,
        Symbol::X2,
        Symbol::X3,
        Symbol::Y1,
        Symbol::Y2,
        Symbol::Y3,
        Symbol::Z1,
        Symbol::Z2,
        Symbol::Z3,
    ];

    pub const X: [Symbol; 3] = [Symbol::X1, Symbol::X2, Symbol::X3];
    pub const Y: [Symbol; 3] = [Symbol::Y1, Symbol::Y2, Symbol::Y3];
    pub const Z: [Symbol; 3] = [Symbol::Z1, Symbol::Z2, Symbol::Z3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Lambda => "lambda",
            Symbol::A => "a",
            Symbol::Delta => "Delta",
            Symbol::Omega => "omega",
            Symbol::P0 => "p0",
            Symbol::R => "r",
            Symbol::Eps => "eps",
            Symbol::H => "h",
            Symbol::X1 => "x1",
            Symbol::X2 => "x2",
            Symbol::X3 => "x3",
            Symbol::Y1 => "y1",
            Symbol::Y2 => "y2",
            Symbol::Y3 => "y3",
            Symbol::Z1 => "z1",
            Symbol::Z2 => "z2",
            Symbol::Z3 => "z3",
        }
    }

    pub fn is_coordinate(self) -> bool {
        self.index() >= Symbol::X1.index()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by [`Symbol::index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [i32; SYMBOL_COUNT]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn of(symbol: Symbol, exp: i32) -> Self {
        let mut m = Self::default();
        m.0[symbol.index()] = exp;
        m
    }

    pub fn exp(&self, symbol: Symbol) -> i32 {
        self.0[symbol.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a += b;
        }
        out
    }

    fn inverse(&self) -> Self {
        let mut out = *self;
        for a in out.0.iter_mut() {
            *a = -*a;
        }
        out
    }

    /// Applies `r² = 2p₀`, returning the power of two absorbed into the
    /// coefficient.
    fn canonicalize(&mut self) -> i32 {
        let k = self.0[Symbol::R.index()];
        let m = k.div_euclid(2);
        self.0[Symbol::R.index()] = k.rem_euclid(2);
        self.0[Symbol::P0.index()] += m;
        m
    }

    /// Coordinate exponents only (x¹…z³), used for division ordering.
    fn coordinate_part(&self) -> [i32; 9] {
        let mut out = [0; 9];
        out.copy_from_slice(&self.0[Symbol::X1.index()..]);
        out
    }
}

fn pow2(m: i32) -> Rational {
    let base = int(2);
    if m >= 0 {
        num_traits::pow(base, m as usize)
    } else {
        num_traits::pow(base, (-m) as usize).recip()
    }
}

/// Element of `ℚ[λ, a, Δ, ω, p₀^{±1}, r, ε, h, x, y, z]` (Laurent in every
/// symbol), in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CoeffPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(rat(n, d))
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::term(Rational::one(), Monomial::of(s, 1))
    }

    /// `c · Π sᵉ` from `(symbol, exponent)` pairs.
    pub fn monomial(c: Rational, factors: &[(Symbol, i32)]) -> Self {
        let mut m = Monomial::one();
        for &(s, e) in factors {
            m.0[s.index()] += e;
        }
        Self::term(c, m)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    fn add_term(&mut self, mut m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let shift = m.canonicalize();
        let c = if shift == 0 { c } else { c * pow2(shift) };
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The rational value if no symbol occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.terms.keys().any(|m| m.exp(s) != 0)
    }

    pub fn max_exp(&self, s: Symbol) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(s)).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    /// Multiplicative inverse of a single-term polynomial.
    pub fn inverse_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        Some(Self::term(c.recip(), m.inverse()))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            let mut out = Self::one();
            for _ in 0..e {
                out = &out * self;
            }
            Ok(out)
        } else {
            let inv = self.inverse_monomial().ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "negative power of non-monomial {self}"
                ))
            })?;
            inv.pow(-e)
        }
    }

    /// Keeps only terms whose `λ` exponent is at most `k`.
    pub fn truncate_lambda(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(Symbol::Lambda) <= k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Simultaneous substitution of symbols by central values. Negative
    /// powers require single-term replacements.
    pub fn substitute(&self, defs: &BTreeMap<Symbol, CoeffPoly>) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = *m;
            let mut factor = Self::constant(c.clone());
            for (s, value) in defs {
                let e = m.exp(*s);
                if e != 0 {
                    kept.0[s.index()] = 0;
                    factor = &factor * &value.pow(e)?;
                }
            }
            out = &out + &(&factor * &Self::term(Rational::one(), kept));
        }
        Ok(out)
    }

    pub fn substitute_one(&self, s: Symbol, value: &CoeffPoly) -> Result<Self> {
        self.substitute(&BTreeMap::from([(s, value.clone())]))
    }

    /// Numerical value; `value(s)` supplies every symbol that occurs.
    pub fn eval(&self, value: &dyn Fn(Symbol) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = c.to_f64().unwrap_or(f64::NAN);
                for s in Symbol::ALL {
                    let e = m.exp(s);
                    if e != 0 {
                        v *= value(s).powi(e);
                    }
                }
                v
            })
            .sum()
    }

    /// Exact quotient by a divisor whose coordinate-leading term has a unit
    /// coefficient and no non-coordinate symbols (such as the determinant
    /// polynomial). Returns `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &CoeffPoly) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let lead = *divisor
            .terms
            .keys()
            .max_by_key(|m| (m.coordinate_part(), **m))?;
        let lead_c = divisor.terms[&lead].clone();
        let lead_coord = lead.coordinate_part();
        if lead.0[..Symbol::X1.index()].iter().any(|&e| e != 0) {
            return None;
        }
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(top) = rem
            .terms
            .keys()
            .max_by_key(|m| (m.coordinate_part(), **m))
            .copied()
        {
            let top_coord = top.coordinate_part();
            if top_coord.iter().zip(lead_coord).any(|(a, b)| *a < b) {
                return None;
            }
            let c = &rem.terms[&top] / &lead_c;
            let q = Self::term(c, top.mul(&lead.inverse()));
            rem = &rem - &(&q * divisor);
            quotient = &quotient + &q;
        }
        Some(quotient)
    }
}

impl From<Symbol> for CoeffPoly {
    fn from(s: Symbol) -> Self {
        Self::symbol(s)
    }
}

impl From<i64> for CoeffPoly {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;

    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CoeffPoly> for CoeffPoly {
    fn add_assign(&mut self, rhs: &CoeffPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;

    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;

    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;

    fn neg(self) -> CoeffPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CoeffPoly {
            type Output = CoeffPoly;
            fn $m(self, rhs: CoeffPoly) -> CoeffPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        -&self
    }
}

/// `det[[x¹,x²,x³],[y¹,y²,y³],[z¹,z²,z³]]` in the coordinate symbols.
pub fn determinant_poly() -> CoeffPoly {
    let (x, y, z) = (Symbol::X, Symbol::Y, Symbol::Z);
    let mut out = CoeffPoly::zero();
    for (perm, sign) in [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ] {
        out += &CoeffPoly::monomial(
            int(sign),
            &[(x[perm[0]], 1), (y[perm[1]], 1), (z[perm[2]], 1)],
        );
    }
    out
}

pub(crate) fn rational_text(c: &Rational) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
