//! Exact multivariate Laurent polynomials.
//!
//! [`LaurentPoly`] is the coefficient ring for the whole engine: classes of
//! varieties, Poincaré and Hodge polynomials, and realized powers of the
//! Lefschetz class all live here. The representation is deliberately strict:
//!
//! * coefficients are arbitrary-precision [`Rational`]s,
//! * exponents are [`Rational`]s too (half-integer powers show up as soon as
//!   an odd-dimensional variety enters the stringy formulas),
//! * values are canonical — no zero coefficients, no zero exponents, and a
//!   deterministic term order — so structural equality is mathematical
//!   equality and printing is reproducible byte for byte.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// An interned variable name.
///
/// `VarId` is a cheap copyable handle; equality, ordering and hashing all go
/// through the name, so two handles with the same name denote the same
/// variable no matter how they were obtained. The name `t` is reserved for
/// the series layer and rejected here.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(&'static str);

static REGISTRY: OnceLock<Mutex<BTreeSet<&'static str>>> = OnceLock::new();

impl VarId {
    /// Interns `name` and returns its handle.
    ///
    /// Names must be an ASCII letter followed by ASCII letters, digits or
    /// underscores. `"t"` is rejected as reserved.
    pub fn new(name: &str) -> Result<Self, Error> {
        if name == "t" {
            return Err(Error::ReservedVariable);
        }
        let mut chars = name.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
        let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !(head_ok && tail_ok) {
            return Err(Error::InvalidVariableName(name.to_owned()));
        }
        let mut registry = REGISTRY
            .get_or_init(|| Mutex::new(BTreeSet::new()))
            .lock()
            .expect("variable registry poisoned");
        if let Some(interned) = registry.get(name) {
            return Ok(VarId(interned));
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        registry.insert(leaked);
        Ok(VarId(leaked))
    }

    /// Crate-internal constructor for the fixed realization variables.
    pub(crate) const fn from_static(name: &'static str) -> Self {
        VarId(name)
    }

    pub fn name(&self) -> &'static str {
        self.0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// The exponent part of a monomial: a finite map from variables to nonzero
/// rational exponents, kept sorted by variable name.
///
/// The derived equality plus the canonical form (no zero entries) make two
/// exponent vectors equal exactly when they agree as functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExponentVector {
    entries: Vec<(VarId, Rational)>,
}

impl ExponentVector {
    /// The empty exponent vector, i.e. the monomial `1`.
    pub fn empty() -> Self {
        ExponentVector::default()
    }

    /// Single-variable exponent vector `v^e`. A zero exponent yields the
    /// empty vector.
    pub fn var(v: VarId, e: Rational) -> Self {
        if e.is_zero() {
            ExponentVector::empty()
        } else {
            ExponentVector {
                entries: vec![(v, e)],
            }
        }
    }

    /// Builds an exponent vector from arbitrary `(variable, exponent)` pairs,
    /// summing duplicates and dropping zero entries.
    pub fn from_entries(entries: impl IntoIterator<Item = (VarId, Rational)>) -> Self {
        let mut map: BTreeMap<VarId, Rational> = BTreeMap::new();
        for (v, e) in entries {
            let slot = map.entry(v).or_insert_with(Rational::zero);
            *slot += e;
        }
        ExponentVector {
            entries: map.into_iter().filter(|(_, e)| !e.is_zero()).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The exponent of `v`, which is 0 when `v` does not occur.
    pub fn exponent(&self, v: VarId) -> Rational {
        self.entries
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| e.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &[(VarId, Rational)] {
        &self.entries
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.entries.iter().map(|(v, _)| *v)
    }

    /// Componentwise sum — the exponent vector of a product of monomials.
    pub fn combined(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector::from_entries(
            self.entries
                .iter()
                .chain(other.entries.iter())
                .map(|(v, e)| (*v, e.clone())),
        )
    }

    /// Multiplies every exponent by `k` — the exponent vector of a monomial
    /// power.
    pub fn scaled(&self, k: &Rational) -> ExponentVector {
        if k.is_zero() {
            return ExponentVector::empty();
        }
        ExponentVector {
            entries: self
                .entries
                .iter()
                .map(|(v, e)| (*v, e * k))
                .collect(),
        }
    }

    /// Splits off the exponent of `var`: returns it together with the vector
    /// of the remaining variables.
    pub fn split_var(&self, var: VarId) -> (Rational, ExponentVector) {
        let mut rest = Vec::with_capacity(self.entries.len());
        let mut exponent = Rational::zero();
        for (v, e) in &self.entries {
            if *v == var {
                exponent = e.clone();
            } else {
                rest.push((*v, e.clone()));
            }
        }
        (exponent, ExponentVector { entries: rest })
    }
}

/// Lexicographic order with variables taken in ascending name order and a
/// missing variable read as exponent 0. The first differing exponent decides.
///
/// This cannot be the derived `Vec` order: `v^2` must compare against
/// `u*v^3` on `u` first (where one side is 0), not on vector prefixes.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let zero = Rational::zero();
        let mut lhs = self.entries.iter();
        let mut rhs = other.entries.iter();
        let (mut l, mut r) = (lhs.next(), rhs.next());
        loop {
            match (l, r) {
                (None, None) => return Ordering::Equal,
                // Stored exponents are never zero, so a leftover entry decides.
                (Some((_, le)), None) => return le.cmp(&zero),
                (None, Some((_, re))) => return zero.cmp(re),
                (Some((lv, le)), Some((rv, re))) => match lv.cmp(rv) {
                    Ordering::Less => return le.cmp(&zero),
                    Ordering::Greater => return zero.cmp(re),
                    Ordering::Equal => match le.cmp(re) {
                        Ordering::Equal => {
                            l = lhs.next();
                            r = rhs.next();
                        }
                        decided => return decided,
                    },
                },
            }
        }
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial in finitely many variables over the rationals, with
/// rational exponents.
///
/// Internally a map from canonical [`ExponentVector`]s to nonzero
/// coefficients; the map order is the canonical term order, and printing
/// walks it descending, so `Display` output is deterministic and parses back
/// via [`crate::parse::parse_poly`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentVector, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rational) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(ExponentVector::empty(), c);
        p
    }

    /// The polynomial `v`.
    pub fn variable(v: VarId) -> Self {
        LaurentPoly::monomial(ExponentVector::var(v, Rational::one()), Rational::one())
    }

    /// The single-term polynomial `c * x^ev`.
    pub fn monomial(ev: ExponentVector, c: Rational) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(ev, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num_terms() == 1 && self.constant_term().is_one()
    }

    /// True when the polynomial has no variables (including the zero
    /// polynomial).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_empty)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order (reversible for descending walks).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    /// The coefficient of the monomial `ev` (zero when absent).
    pub fn coeff(&self, ev: &ExponentVector) -> Rational {
        self.terms.get(ev).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of the empty monomial.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&ExponentVector::empty())
    }

    /// `Some((exponents, coefficient))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The set of variables that actually occur.
    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|ev| ev.vars()).collect()
    }

    /// Adds `c * x^ev`, keeping the canonical form (a term whose coefficient
    /// cancels to zero is removed).
    pub fn add_term(&mut self, ev: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(ev);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(ev, coeff)| (ev.clone(), coeff * c))
                .collect(),
        }
    }

    /// `self^n` by repeated squaring, with `f^0 = 1` (also for `f = 0`).
    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces every occurrence `var^e` by `m^e`, where `m` must be a single
    /// term with coefficient 1 (so the result stays a Laurent polynomial even
    /// for negative and fractional `e`).
    pub fn substitute_monomial(&self, var: VarId, m: &LaurentPoly) -> Result<LaurentPoly, Error> {
        let (m_ev, m_coeff) = m.as_monomial().ok_or_else(|| {
            Error::UnsupportedSubstitution(format!(
                "image of '{var}' must be a single term, got {} terms",
                m.num_terms()
            ))
        })?;
        if !m_coeff.is_one() {
            return Err(Error::UnsupportedSubstitution(format!(
                "image of '{var}' must have coefficient 1, got {m_coeff}"
            )));
        }
        let mut out = LaurentPoly::zero();
        for (ev, c) in &self.terms {
            let (e, rest) = ev.split_var(var);
            if e.is_zero() {
                out.add_term(ev.clone(), c.clone());
            } else {
                out.add_term(rest.combined(&m_ev.scaled(&e)), c.clone());
            }
        }
        Ok(out)
    }

    /// Evaluates at the given (total) assignment of rational values.
    ///
    /// Fractional exponents are only evaluated at the value 1; negative
    /// exponents reject the value 0. Both keep the result an exact rational.
    pub fn eval(&self, assignment: &BTreeMap<VarId, Rational>) -> Result<Rational, Error> {
        let mut total = Rational::zero();
        for (ev, c) in &self.terms {
            let mut acc = c.clone();
            for (v, e) in ev.entries() {
                let value = assignment
                    .get(v)
                    .ok_or(Error::IncompleteAssignment(*v))?;
                if e.is_integer() {
                    let exponent = e
                        .to_integer()
                        .to_i32()
                        .ok_or(Error::ExponentOverflow)?;
                    if exponent < 0 && value.is_zero() {
                        return Err(Error::NegativePowerOfZero(*v));
                    }
                    acc *= value.pow(exponent);
                } else if value.is_one() {
                    // 1^(p/q) = 1: nothing to multiply.
                } else {
                    return Err(Error::NonRationalEvaluation(*v));
                }
            }
            total += acc;
        }
        Ok(total)
    }

    /// Smallest exponent of `v` over all terms (0 for terms lacking `v`);
    /// `None` for the zero polynomial.
    pub fn min_exponent(&self, v: VarId) -> Option<Rational> {
        self.terms.keys().map(|ev| ev.exponent(v)).min()
    }

    /// Largest exponent of `v` over all terms (0 for terms lacking `v`);
    /// `None` for the zero polynomial.
    pub fn max_exponent(&self, v: VarId) -> Option<Rational> {
        self.terms.keys().map(|ev| ev.exponent(v)).max()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (ev, c) in &rhs.terms {
            out.add_term(ev.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (ev, c) in &rhs.terms {
            out.add_term(ev.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(ev, c)| (ev.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (lev, lc) in &self.terms {
            for (rev, rc) in &rhs.terms {
                out.add_term(lev.combined(rev), lc * rc);
            }
        }
        out
    }
}

/// Writes `e` in the canonical exponent syntax: `^3` for integers >= 2,
/// `^(-2)` and `^(3/2)` for negative or fractional exponents, nothing for 1.
fn write_exponent(f: &mut fmt::Formatter<'_>, e: &Rational) -> fmt::Result {
    if e.is_one() {
        return Ok(());
    }
    if e.is_integer() && !e.is_negative() {
        write!(f, "^{e}")
    } else {
        write!(f, "^({e})")
    }
}

/// Canonical text form: terms in descending canonical order, joined with
/// `+`/`-`, explicit `*` between all factors, no whitespace. The zero
/// polynomial prints as `0`. The output round-trips through
/// [`crate::parse::parse_poly`].
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (index, (ev, c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if index > 0 {
                f.write_str("+")?;
            }
            let magnitude = c.abs();
            if ev.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                for (pos, (v, e)) in ev.entries().iter().enumerate() {
                    if pos > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{v}")?;
                    write_exponent(f, e)?;
                }
            }
        }
        Ok(())
    }
}
