//! Realizations: where the class of a variety lives and what the Lefschetz
//! class specializes to.
//!
//! The engine works with three nested realizations of the Grothendieck ring:
//!
//! * **Hodge** — E-polynomials `E(X; u, v) = Σ (-1)^(p+q) h^{p,q} u^p v^q`,
//!   with `L = uv`;
//! * **Poincaré** — `P(X; v) = E(X; v, v)`, with `L = v^2`;
//! * **Euler** — `e(X) = P(X; 1)`, a plain number, with `L = 1`.
//!
//! Each realization fixes the variable alphabet of its coefficient
//! polynomials and the image `L^s` of rational powers of the Lefschetz
//! class. The specialization maps Hodge → Poincaré (`u ↦ v`) and
//! Poincaré → Euler (`v ↦ 1`) commute with every operation of the engine,
//! which the test suite checks on random inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::One;

use crate::error::Error;
use crate::poly::{ExponentVector, LaurentPoly, VarId};
use crate::rational::{rat, Rational};
use crate::series::TruncatedSeries;

/// The Hodge variable `u`.
pub const VAR_U: VarId = VarId::from_static("u");
/// The Poincaré/Hodge variable `v`.
pub const VAR_V: VarId = VarId::from_static("v");

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Realization {
    Euler,
    Poincare,
    Hodge,
}

impl Realization {
    /// The variables a coefficient polynomial may mention.
    pub fn variables(self) -> &'static [VarId] {
        match self {
            Realization::Euler => &[],
            Realization::Poincare => &[VAR_V],
            Realization::Hodge => &[VAR_U, VAR_V],
        }
    }

    /// The image of `L^s` for a rational exponent `s`: `1`, `v^(2s)` or
    /// `(uv)^s`. Fractional powers of `L` are where rational exponents
    /// enter the engine (odd dimension ⟹ half-integer `s`).
    pub fn lefschetz_power(self, s: &Rational) -> LaurentPoly {
        match self {
            Realization::Euler => LaurentPoly::one(),
            Realization::Poincare => {
                LaurentPoly::monomial(ExponentVector::var(VAR_V, s * rat(2)), Rational::one())
            }
            Realization::Hodge => LaurentPoly::monomial(
                ExponentVector::from_entries([(VAR_U, s.clone()), (VAR_V, s.clone())]),
                Rational::one(),
            ),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Realization::Euler => "euler",
            Realization::Poincare => "poincare",
            Realization::Hodge => "hodge",
        }
    }

    /// Checks that `f` only mentions variables of this realization.
    pub fn check_vars(self, f: &LaurentPoly) -> Result<(), Error> {
        let allowed = self.variables();
        for var in f.vars() {
            if !allowed.contains(&var) {
                return Err(Error::UnexpectedVariable {
                    var,
                    allowed: allowed_names(allowed),
                });
            }
        }
        Ok(())
    }
}

fn allowed_names(vars: &[VarId]) -> String {
    if vars.is_empty() {
        "(none)".to_owned()
    } else {
        vars.iter()
            .map(VarId::name)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Realization {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "euler" => Ok(Realization::Euler),
            "poincare" => Ok(Realization::Poincare),
            "hodge" => Ok(Realization::Hodge),
            other => Err(format!(
                "unknown realization '{other}' (expected euler, poincare or hodge)"
            )),
        }
    }
}

/// Specializes a Hodge polynomial to the Poincaré realization: `u ↦ v`.
pub fn hodge_to_poincare(f: &LaurentPoly) -> Result<LaurentPoly, Error> {
    Realization::Hodge.check_vars(f)?;
    f.substitute_monomial(VAR_U, &LaurentPoly::variable(VAR_V))
}

/// Specializes a Poincaré polynomial to the Euler number: `v ↦ 1`.
pub fn poincare_to_euler(f: &LaurentPoly) -> Result<Rational, Error> {
    Realization::Poincare.check_vars(f)?;
    let mut assignment = BTreeMap::new();
    assignment.insert(VAR_V, Rational::one());
    f.eval(&assignment)
}

/// Applies a specialization map to every coefficient of a series.
pub fn specialize_series(
    f: &TruncatedSeries,
    map: SpecializationMap,
) -> Result<TruncatedSeries, Error> {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| match map {
            SpecializationMap::HodgeToPoincare => hodge_to_poincare(c),
            SpecializationMap::PoincareToEuler => {
                poincare_to_euler(c).map(LaurentPoly::constant)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecializationMap {
    HodgeToPoincare,
    PoincareToEuler,
}
