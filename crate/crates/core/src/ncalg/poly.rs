//! Noncommutative polynomials in the operator letters `q̂, p̂, P̂, Q̂` with
//! [`CoeffPoly`] coefficients, always stored in normal order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::coeff::{CoeffPoly, Rational, Symbol};
use crate::error::{Error, Result};

/// Operator letters. Declaration order is the normal order: a word is
/// normal when its letters are non-decreasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `q̂`
    SmallQ,
    /// `p̂`
    SmallP,
    /// `P̂`
    P,
    /// `Q̂`
    Q,
}

impl Letter {
    pub fn name(self) -> &'static str {
        match self {
            Letter::SmallQ => "q",
            Letter::SmallP => "p",
            Letter::P => "P",
            Letter::Q => "Q",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    /// `{P̂, Q̂}`; `q̂, p̂` are eliminated through the semiclassical
    /// constraints.
    PQ,
    /// `{q̂, p̂, P̂, Q̂}`; `q̂, p̂` commute with `P̂, Q̂`.
    QpPQ,
}

impl Alphabet {
    pub fn letters(self) -> &'static [Letter] {
        match self {
            Alphabet::PQ => &[Letter::P, Letter::Q],
            Alphabet::QpPQ => &[Letter::SmallQ, Letter::SmallP, Letter::P, Letter::Q],
        }
    }

    pub fn contains(self, l: Letter) -> bool {
        self.letters().contains(&l)
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::PQ => "pq",
            Alphabet::QpPQ => "qpPQ",
        }
    }
}

impl std::str::FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pq" | "PQ" => Ok(Alphabet::PQ),
            "qpPQ" => Ok(Alphabet::QpPQ),
            _ => Err(Error::InvalidArgument(format!("unknown alphabet {s}"))),
        }
    }
}

/// Rewrite rules `b·a → a·b + c` for letters `b > a`. Pairs without a rule
/// commute freely. Every swap removes one inversion, so rewriting
/// terminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationTable {
    alphabet: Alphabet,
    rules: BTreeMap<(Letter, Letter), CoeffPoly>,
}

impl CommutationTable {
    pub fn free(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            rules: BTreeMap::new(),
        }
    }

    /// Sets `[low, high] = c`, i.e. `high·low → low·high − c`.
    pub fn with_commutator(mut self, low: Letter, high: Letter, c: CoeffPoly) -> Result<Self> {
        for l in [low, high] {
            if !self.alphabet.contains(l) {
                return Err(Error::UnknownLetter(l.to_string()));
            }
        }
        if low >= high {
            return Err(Error::InvalidArgument(format!(
                "commutator [{low},{high}] must list letters in normal order"
            )));
        }
        self.rules.insert((high, low), -c);
        Ok(self)
    }

    /// Quasi-canonical relation `[P̂, Q̂] = λε`, i.e. `Q̂P̂ → P̂Q̂ − λε`.
    pub fn quasi_ccr() -> Self {
        Self::free(Alphabet::PQ)
            .with_commutator(Letter::P, Letter::Q, lambda_eps())
            .expect("letters belong to the alphabet")
    }

    /// Four-letter table: `[P̂, Q̂] = λε`, `[p̂, q̂] = λ` (so `[q̂, p̂] = iħ`),
    /// `q̂, p̂` commuting with `P̂, Q̂`.
    pub fn quasi_ccr_extended() -> Self {
        Self::free(Alphabet::QpPQ)
            .with_commutator(Letter::P, Letter::Q, lambda_eps())
            .and_then(|t| {
                t.with_commutator(
                    Letter::SmallQ,
                    Letter::SmallP,
                    -CoeffPoly::symbol(Symbol::Lambda),
                )
            })
            .expect("letters belong to the alphabet")
    }

    pub fn for_alphabet(alphabet: Alphabet) -> Self {
        match alphabet {
            Alphabet::PQ => Self::quasi_ccr(),
            Alphabet::QpPQ => Self::quasi_ccr_extended(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn swap_term(&self, high: Letter, low: Letter) -> Option<&CoeffPoly> {
        self.rules.get(&(high, low))
    }
}

fn lambda_eps() -> CoeffPoly {
    &CoeffPoly::symbol(Symbol::Lambda) * &CoeffPoly::symbol(Symbol::Eps)
}

pub type Word = Vec<Letter>;

/// Normal form of a single word with a coefficient, accumulated into `out`.
fn normal_order_into(
    table: &CommutationTable,
    word: Word,
    coeff: CoeffPoly,
    out: &mut BTreeMap<Word, CoeffPoly>,
) {
    let mut stack = vec![(word, coeff)];
    while let Some((w, c)) = stack.pop() {
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => {
                let slot = out.entry(w).or_default();
                *slot += &c;
            }
            Some(i) => {
                if let Some(extra) = table.swap_term(w[i], w[i + 1]) {
                    let mut shorter = w.clone();
                    shorter.drain(i..i + 2);
                    stack.push((shorter, &c * extra));
                }
                let mut swapped = w;
                swapped.swap(i, i + 1);
                stack.push((swapped, c));
            }
        }
    }
}

fn prune(map: &mut BTreeMap<Word, CoeffPoly>) {
    map.retain(|_, c| !c.is_zero());
}

/// Polynomial in the noncommuting letters of a [`CommutationTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPoly {
    table: Arc<CommutationTable>,
    terms: BTreeMap<Word, CoeffPoly>,
}

/// Substitution target: an operator letter or a central symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Letter(Letter),
    Sym(Symbol),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Letter(l) => l.fmt(f),
            Var::Sym(s) => s.fmt(f),
        }
    }
}

impl NCPoly {
    pub fn zero(table: &Arc<CommutationTable>) -> Self {
        Self {
            table: Arc::clone(table),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(table: &Arc<CommutationTable>, c: CoeffPoly) -> Self {
        Self::from_word(table, Vec::new(), c)
    }

    pub fn one(table: &Arc<CommutationTable>) -> Self {
        Self::scalar(table, CoeffPoly::one())
    }

    pub fn symbol(table: &Arc<CommutationTable>, s: Symbol) -> Self {
        Self::scalar(table, CoeffPoly::symbol(s))
    }

    /// Panics if the letter is outside the table's alphabet; see
    /// [`NCPoly::try_letter`].
    pub fn letter(table: &Arc<CommutationTable>, l: Letter) -> Self {
        Self::try_letter(table, l).expect("letter outside the alphabet")
    }

    pub fn try_letter(table: &Arc<CommutationTable>, l: Letter) -> Result<Self> {
        if !table.alphabet.contains(l) {
            return Err(Error::UnknownLetter(l.to_string()));
        }
        Ok(Self::from_word(table, vec![l], CoeffPoly::one()))
    }

    /// `c · w`, normal-ordered.
    pub fn from_word(table: &Arc<CommutationTable>, word: Word, c: CoeffPoly) -> Self {
        debug_assert!(word.iter().all(|l| table.alphabet.contains(*l)));
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            normal_order_into(table, word, c, &mut terms);
            prune(&mut terms);
        }
        Self {
            table: Arc::clone(table),
            terms,
        }
    }

    /// Builds from arbitrary (possibly unordered) words and normal-orders.
    pub fn from_terms<I>(table: &Arc<CommutationTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, CoeffPoly)>,
    {
        let mut out = BTreeMap::new();
        for (w, c) in terms {
            normal_order_into(table, w, c, &mut out);
        }
        prune(&mut out);
        Self {
            table: Arc::clone(table),
            terms: out,
        }
    }

    /// Moves the polynomial into another table, re-normal-ordering under its
    /// rules. Fails if a letter is outside the target alphabet.
    pub fn into_table(&self, table: &Arc<CommutationTable>) -> Result<Self> {
        for w in self.terms.keys() {
            if let Some(l) = w.iter().find(|l| !table.alphabet.contains(**l)) {
                return Err(Error::UnknownLetter(l.to_string()));
            }
        }
        Ok(Self::from_terms(table, self.terms.clone()))
    }

    pub fn table(&self) -> &Arc<CommutationTable> {
        &self.table
    }

    pub fn alphabet(&self) -> Alphabet {
        self.table.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[Letter]) -> CoeffPoly {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Central part if no letters occur.
    pub fn as_scalar(&self) -> Option<CoeffPoly> {
        match self.terms.len() {
            0 => Some(CoeffPoly::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn is_normal(&self) -> bool {
        self.terms
            .keys()
            .all(|w| w.windows(2).all(|p| p[0] <= p[1]))
    }

    pub fn contains_symbol(&self, s: Symbol) -> bool {
        self.terms.values().any(|c| c.contains(s))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            *terms.entry(w.clone()).or_default() += c;
        }
        prune(&mut terms);
        Ok(Self {
            table: Arc::clone(&self.table),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                normal_order_into(&self.table, w, ca * cb, &mut terms);
            }
        }
        prune(&mut terms);
        Ok(Self {
            table: Arc::clone(&self.table),
            terms,
        })
    }

    /// `xy − yx`.
    pub fn try_commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("alphabet mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("alphabet mismatch")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("alphabet mismatch")
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.try_commutator(other).expect("alphabet mismatch")
    }

    pub fn neg(&self) -> Self {
        self.scale(&CoeffPoly::integer(-1))
    }

    /// Multiplication by a central coefficient.
    pub fn scale(&self, c: &CoeffPoly) -> Self {
        let mut terms: BTreeMap<Word, CoeffPoly> =
            self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect();
        prune(&mut terms);
        Self {
            table: Arc::clone(&self.table),
            terms,
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&CoeffPoly::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.table), |acc, _| acc.mul(self))
    }

    /// Applies `f` to every coefficient and re-prunes.
    pub fn try_map_coeffs<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&CoeffPoly) -> Result<CoeffPoly>,
    {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            terms.insert(w.clone(), f(c)?);
        }
        prune(&mut terms);
        Ok(Self {
            table: Arc::clone(&self.table),
            terms,
        })
    }

    /// Re-applies normal ordering. Values are kept normal at all times, so
    /// this is the identity on well-formed inputs.
    pub fn normal_order(&self) -> Self {
        Self::from_terms(&self.table, self.terms.clone())
    }

    /// Drops every term of `λ`-degree above `k`.
    pub fn hbar_truncate(&self, k: i32) -> Self {
        self.try_map_coeffs(|c| Ok(c.truncate_lambda(k)))
            .expect("truncation cannot fail")
    }

    /// Replaces each occurrence of the central symbol `s` by `value`,
    /// placed to the right of the word it multiplies. Only non-negative
    /// powers of `s` are supported.
    pub fn expand_central_right(&self, s: Symbol, value: &NCPoly) -> Result<Self> {
        self.check(value)?;
        let mut out = Self::zero(&self.table);
        for (w, c) in &self.terms {
            let mut by_power: BTreeMap<i32, CoeffPoly> = BTreeMap::new();
            for (m, v) in c.terms() {
                let e = m.exp(s);
                if e < 0 {
                    return Err(Error::InvalidArgument(format!(
                        "negative power of {s} cannot be expanded"
                    )));
                }
                let mut rest = *m;
                rest.0[s.index()] = 0;
                *by_power.entry(e).or_default() += &CoeffPoly::term(v.clone(), rest);
            }
            for (e, coeff) in by_power {
                let head = Self::from_word(&self.table, w.clone(), coeff);
                out = out.add(&head.mul(&value.pow(e as u32)));
            }
        }
        Ok(out)
    }

    /// Substitutes letters and central symbols until none of the defined
    /// variables remains. Letters are replaced in place; central symbols
    /// must map to central values.
    pub fn substitute(&self, defs: &BTreeMap<Var, NCPoly>) -> Result<Self> {
        for v in defs.values() {
            self.check(v)?;
        }
        check_acyclic(defs)?;
        let mut central = BTreeMap::new();
        for (var, value) in defs {
            if let Var::Sym(s) = var {
                let c = value
                    .as_scalar()
                    .ok_or_else(|| Error::NonCentralSubstitution(s.to_string()))?;
                central.insert(*s, c);
            }
        }
        let mut current = self.clone();
        for _ in 0..=defs.len() {
            if !current.mentions_any(defs) {
                return Ok(current);
            }
            current = current.substitute_once(defs, &central)?;
        }
        // Acyclic definitions are exhausted after `defs.len()` rounds.
        unreachable!("substitution did not terminate on acyclic definitions")
    }

    fn substitute_once(
        &self,
        defs: &BTreeMap<Var, NCPoly>,
        central: &BTreeMap<Symbol, CoeffPoly>,
    ) -> Result<Self> {
        let mut out = Self::zero(&self.table);
        for (w, c) in &self.terms {
            let coeff = c.substitute(central)?;
            let mut term = Self::scalar(&self.table, coeff);
            for l in w {
                let factor = match defs.get(&Var::Letter(*l)) {
                    Some(v) => v.clone(),
                    None => Self::letter(&self.table, *l),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        for (w, c) in &self.terms {
            out.extend(w.iter().map(|l| Var::Letter(*l)));
            for s in Symbol::ALL {
                if c.contains(s) {
                    out.insert(Var::Sym(s));
                }
            }
        }
        out
    }

    fn mentions_any(&self, defs: &BTreeMap<Var, NCPoly>) -> bool {
        self.vars().iter().any(|v| defs.contains_key(v))
    }

    /// Classical value: letters commute and take the given numbers.
    pub fn eval(&self, letter: &dyn Fn(Letter) -> f64, symbol: &dyn Fn(Symbol) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(w, c)| c.eval(symbol) * w.iter().map(|l| letter(*l)).product::<f64>())
            .sum()
    }
}

fn check_acyclic(defs: &BTreeMap<Var, NCPoly>) -> Result<()> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Open,
        Done,
    }
    fn visit(
        v: Var,
        defs: &BTreeMap<Var, NCPoly>,
        marks: &mut BTreeMap<Var, Mark>,
    ) -> Result<()> {
        match marks.get(&v) {
            Some(Mark::Done) => return Ok(()),
            Some(Mark::Open) => return Err(Error::CyclicDefinitions(v.to_string())),
            None => {}
        }
        if let Some(body) = defs.get(&v) {
            marks.insert(v, Mark::Open);
            for dep in body.vars() {
                visit(dep, defs, marks)?;
            }
        }
        marks.insert(v, Mark::Done);
        Ok(())
    }
    let mut marks = BTreeMap::new();
    for v in defs.keys() {
        visit(*v, defs, &mut marks)?;
    }
    Ok(())
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render(self, super::render::Style::Lambda))
    }
}
