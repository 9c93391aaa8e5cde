//! Stringy classes of symmetric products.
//!
//! For a smooth projective variety `X` of dimension `d ≥ 2` the symmetric
//! products `X^(n) = X^n / S_n` are singular, and their stringy classes
//! assemble into the generating series
//!
//! ```text
//! Σ_{n>=0} [X^(n)]_st t^n  =  Exp( [X]·t / (1 - L^(d/2)·t) ),
//! ```
//!
//! computed here with `[X]` and `L^(d/2)` realized as Laurent polynomials
//! (see [`crate::realize`]). The same coefficient has a closed finite form
//! as a sum over partitions `λ ⊢ n` with multiplicities `(1^a_1 … r^a_r)`:
//!
//! ```text
//! [X^(n)]_st = Σ_{λ ⊢ n} ( Π_k σ_{a_k}([X]) ) · L^((d/2)(n - l(λ))),
//! ```
//!
//! where each cycle of length `k` in the underlying orbifold contributes
//! discrepancy weight `d(k-1)/2`, so a permutation of type `λ` contributes
//! `(d/2)(n - l(λ))` in total. [`stringy_series`] and
//! [`stringy_partition_sum`] implement the two formulas independently and
//! must agree; the `check` subcommand of the CLI re-verifies that on random
//! inputs.
//!
//! Two specializations of the same series are worth naming: for a surface
//! (`d = 2`) the coefficients are the classes of Hilbert schemes of points
//! ([`hilbert_series`]), and dividing `[X]` by `L^(d/2)` first yields the
//! normalized series `Exp(([X]/L^(d/2))·t/(1-t))` whose coefficients are
//! palindromic in a suitable sense ([`normalized_stringy_series`]). In the
//! Euler realization with `e(X) = e` the whole series degenerates to the
//! product `Π_{k>=1} (1-t^k)^(-e)` ([`euler_product`]).

use std::fmt;

use num::One;

use crate::error::Error;
use crate::lambda::{plethystic_exp, sigma_table};
use crate::poly::LaurentPoly;
use crate::rational::{ratio, Rational};
use crate::realize::Realization;
use crate::series::{geometric, TruncatedSeries};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates and wraps a parts list (weakly decreasing, all positive).
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The weight `|λ|` (sum of parts).
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The length `l(λ)` (number of parts).
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// The multiplicity form `(1^{a_1} 2^{a_2} …)`: pairs `(k, a_k)` with
    /// `a_k > 0`, ascending in `k`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        // Parts are decreasing, so walk them backwards to get ascending k.
        for &part in self.parts.iter().rev() {
            match out.last_mut() {
                Some((k, a)) if *k == part => *a += 1,
                _ => out.push((part, 1)),
            }
        }
        out
    }
}

/// Prints as `(3,1,1)`; the empty partition prints as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n` in decreasing lexicographic order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. `partitions(0)` is `[()]`.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            stack.push(part);
            descend(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out
}

/// Discrepancy weight of a single cycle of length `k` on a `d`-fold:
/// `d(k-1)/2`.
///
/// # Panics
/// Panics unless `k >= 1` and `d >= 1`.
pub fn cycle_weight(k: u32, d: u32) -> Rational {
    assert!(k >= 1, "cycles have positive length");
    assert!(d >= 1, "dimension is positive");
    ratio(d as i64 * (k as i64 - 1), 2)
}

/// Total weight of a permutation of cycle type `λ` on a `d`-fold:
/// `(d/2)(|λ| - l(λ))`, the sum of its cycle weights.
pub fn perm_weight(p: &Partition, d: u32) -> Rational {
    assert!(d >= 1, "dimension is positive");
    ratio(
        d as i64 * (p.weight() as i64 - p.length() as i64),
        2,
    )
}

/// A variety presented to the engine: its class in a chosen realization and
/// its dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarietyInput {
    realization: Realization,
    cls: LaurentPoly,
    dim: u32,
}

impl VarietyInput {
    /// Validates that `dim >= 1` and that `cls` only uses the realization's
    /// variables. Stringy operations additionally require `dim >= 2`
    /// (symmetric products of curves are smooth; there is nothing stringy to
    /// compute), which is checked per call.
    pub fn new(realization: Realization, cls: LaurentPoly, dim: u32) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        realization.check_vars(&cls)?;
        Ok(VarietyInput {
            realization,
            cls,
            dim,
        })
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    pub fn cls(&self) -> &LaurentPoly {
        &self.cls
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    fn require_stringy_dim(&self) -> Result<(), Error> {
        if self.dim < 2 {
            Err(Error::DimensionTooSmall(self.dim))
        } else {
            Ok(())
        }
    }

    /// `L^(d/2)` in this input's realization.
    fn half_dim_lefschetz(&self) -> LaurentPoly {
        self.realization
            .lefschetz_power(&ratio(self.dim as i64, 2))
    }
}

/// The class of the `n`-th symmetric product `X^(n) = X^n/S_n`, which is
/// `σ_n([X])`. Defined for every `dim >= 1` — no stringy correction is
/// involved.
pub fn sym_product_class(x: &VarietyInput, n: u32) -> LaurentPoly {
    sigma_table(x.cls(), n).pop().expect("table is never empty")
}

/// One row of the partition-sum audit: a partition `λ ⊢ n` with its weight
/// exponent `(d/2)(n - l(λ))` and its contribution
/// `(Π_k σ_{a_k}([X]))·L^weight`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionTerm {
    pub partition: Partition,
    pub weight: Rational,
    pub term: LaurentPoly,
}

/// The partition-sum form of `[X^(n)]_st`, term by term:
///
/// ```text
/// [X^(n)]_st = Σ_{λ ⊢ n} (Π_k σ_{a_k}([X])) · L^((d/2)(n - l(λ)))
/// ```
///
/// This route never touches the plethystic exponential, which is exactly
/// what makes it an independent cross-check of [`stringy_series`].
pub fn stringy_partition_terms(x: &VarietyInput, n: u32) -> Result<Vec<PartitionTerm>, Error> {
    x.require_stringy_dim()?;
    let sigmas = sigma_table(x.cls(), n);
    let mut rows = Vec::new();
    for partition in partitions(n) {
        let mut product = LaurentPoly::one();
        for (_, a) in partition.multiplicities() {
            product = &product * &sigmas[a as usize];
        }
        let weight = perm_weight(&partition, x.dim());
        let lefschetz = x.realization().lefschetz_power(&weight);
        rows.push(PartitionTerm {
            term: &product * &lefschetz,
            partition,
            weight,
        });
    }
    Ok(rows)
}

/// The partition-sum form of `[X^(n)]_st` (the sum of
/// [`stringy_partition_terms`]).
pub fn stringy_partition_sum(x: &VarietyInput, n: u32) -> Result<LaurentPoly, Error> {
    let mut total = LaurentPoly::zero();
    for row in stringy_partition_terms(x, n)? {
        total = &total + &row.term;
    }
    Ok(total)
}

/// The generating series `Σ_n [X^(n)]_st t^n = Exp([X]·t/(1 - L^(d/2)·t))`
/// up to `t^order`. This is the production route (plethystic exponential of
/// a geometric series); see [`stringy_partition_sum`] for the independent
/// closed form of each coefficient.
pub fn stringy_series(x: &VarietyInput, order: usize) -> Result<TruncatedSeries, Error> {
    x.require_stringy_dim()?;
    let argument = geometric(x.cls(), &x.half_dim_lefschetz(), order)?;
    plethystic_exp(&argument)
}

/// For a surface the stringy classes of symmetric products are the classes
/// of Hilbert schemes of points: `[X^(n)]_st = [X^[n]]`. Same series as
/// [`stringy_series`], restricted to `dim == 2`.
pub fn hilbert_series(x: &VarietyInput, order: usize) -> Result<TruncatedSeries, Error> {
    if x.dim() != 2 {
        return Err(Error::NotASurface(x.dim()));
    }
    stringy_series(x, order)
}

/// The normalized series `Exp(([X]/L^(d/2))·t/(1-t))`, i.e. the stringy
/// series of `X` with its class divided by `L^(d/2)`. Its `t^n` coefficient
/// is `[X^(n)]_st / L^(nd/2)`, a Laurent polynomial symmetric under the
/// Poincaré-duality involution when `[X]` is.
pub fn normalized_stringy_series(x: &VarietyInput, order: usize) -> Result<TruncatedSeries, Error> {
    x.require_stringy_dim()?;
    let inverse_half = x
        .realization()
        .lefschetz_power(&(-ratio(x.dim() as i64, 2)));
    let normalized_class = x.cls() * &inverse_half;
    let argument = geometric(&normalized_class, &LaurentPoly::one(), order)?;
    plethystic_exp(&argument)
}

/// The Euler-realization series for a variety with Euler number `e`:
///
/// ```text
/// Σ_n e(X^(n))_st t^n = Π_{k>=1} (1 - t^k)^(-e),
/// ```
///
/// computed directly as the finite product of the factors with `k <= order`
/// (later factors do not move coefficients below `t^(order+1)`). For
/// `e = 1` the coefficients are the partition numbers `p(n)`.
pub fn euler_product(e: i64, order: usize) -> TruncatedSeries {
    let mut result = TruncatedSeries::one(order);
    if e == 0 {
        return result;
    }
    let exponent = e.unsigned_abs() as u32;
    for k in 1..=order {
        let mut base = TruncatedSeries::one(order);
        base.set_coeff(k, LaurentPoly::constant(-Rational::one()));
        let factor = if e > 0 {
            base.invert()
                .expect("1 - t^k has constant term 1")
                .pow(exponent)
        } else {
            base.pow(exponent)
        };
        result = &result * &factor;
    }
    result
}
