//! Truncated power series in the formal variable `t` over [`LaurentPoly`].
//!
//! A [`TruncatedSeries`] stores the coefficients `c_0, …, c_N` of a series
//! modulo `t^(N+1)`; `N` is the *order* of the truncation. All operations
//! are exact on the retained coefficients:
//!
//! * ring operations truncate to the smaller order of the two operands and
//!   never silently extend a series,
//! * `exp` and `log` are computed by the standard derivative recurrences,
//!   which only ever divide by integers and so stay inside the rationals,
//! * `t` itself is reserved: coefficient polynomials cannot mention it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::poly::LaurentPoly;
use crate::rational::{rat, ratio, Rational};

/// A power series `c_0 + c_1 t + … + c_N t^N` known modulo `t^(N+1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    /// The zero series at truncation order `order`.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    /// The constant series 1 at truncation order `order`.
    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// Builds a series from its coefficient list; the order is `len - 1`.
    ///
    /// # Panics
    /// Panics on an empty list — a truncated series knows at least `c_0`.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `t^n`.
    ///
    /// # Panics
    /// Panics when `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        assert!(
            n <= self.order(),
            "coefficient {n} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Overwrites the coefficient of `t^n`.
    ///
    /// # Panics
    /// Panics when `n` exceeds the truncation order.
    pub fn set_coeff(&mut self, n: usize, c: LaurentPoly) {
        assert!(
            n <= self.order(),
            "coefficient {n} beyond truncation order {}",
            self.order()
        );
        self.coeffs[n] = c;
    }

    /// Truncates to order `min(order, self.order())`. Truncation can only
    /// drop information, never invent coefficients.
    pub fn truncated(&self, order: usize) -> TruncatedSeries {
        let keep = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scaled(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|p| p.scaled(c)).collect(),
        }
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scaled_poly(&self, p: &LaurentPoly) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// `self^n` by repeated squaring (the order is preserved).
    pub fn pow(&self, n: u32) -> TruncatedSeries {
        let mut result = TruncatedSeries::one(self.order());
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

    /// The exponential `exp(F) = Σ F^k / k!` of a series with `c_0 = 0`,
    /// computed by the recurrence `n·g_n = Σ_{k=1..n} k·f_k·g_{n-k}` (from
    /// `G' = F'·G`), which divides by integers only.
    pub fn exp(&self) -> Result<TruncatedSeries, Error> {
        if !self.coeff(0).is_zero() {
            return Err(Error::ExpNonzeroConstant);
        }
        let order = self.order();
        let mut out = TruncatedSeries::one(order);
        for n in 1..=order {
            let mut acc = LaurentPoly::zero();
            for k in 1..=n {
                let contribution = &self.coeffs[k].scaled(&rat(k as i64)) * &out.coeffs[n - k];
                acc = &acc + &contribution;
            }
            out.coeffs[n] = acc.scaled(&ratio(1, n as i64));
        }
        Ok(out)
    }

    /// The logarithm of a series with `c_0 = 1`, inverse to [`Self::exp`]:
    /// `l_n = g_n - (1/n) Σ_{k=1..n-1} k·l_k·g_{n-k}`.
    pub fn log(&self) -> Result<TruncatedSeries, Error> {
        if !self.coeff(0).is_one() {
            return Err(Error::LogConstantNotOne);
        }
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        for n in 1..=order {
            let mut acc = LaurentPoly::zero();
            for k in 1..n {
                let contribution = &out.coeffs[k].scaled(&rat(k as i64)) * &self.coeffs[n - k];
                acc = &acc + &contribution;
            }
            out.coeffs[n] = &self.coeffs[n] - &acc.scaled(&ratio(1, n as i64));
        }
        Ok(out)
    }

    /// The multiplicative inverse of a series with `c_0 = 1`:
    /// `r_0 = 1`, `r_n = -Σ_{k=1..n} g_k·r_{n-k}`.
    pub fn invert(&self) -> Result<TruncatedSeries, Error> {
        if !self.coeff(0).is_one() {
            return Err(Error::InvertConstantNotOne);
        }
        let order = self.order();
        let mut out = TruncatedSeries::one(order);
        for n in 1..=order {
            let mut acc = LaurentPoly::zero();
            for k in 1..=n {
                acc = &acc + &(&self.coeffs[k] * &out.coeffs[n - k]);
            }
            out.coeffs[n] = -&acc;
        }
        Ok(out)
    }
}

/// The geometric series `Σ_{k>=0} a·m^k·t^(k+1) = a·t / (1 - m·t)` at the
/// given truncation order. `m` must be a single term (with any coefficient),
/// which keeps all coefficients monomial multiples of `a`.
pub fn geometric(
    a: &LaurentPoly,
    m: &LaurentPoly,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    if m.as_monomial().is_none() {
        return Err(Error::ExpectedMonomial(m.num_terms()));
    }
    let mut out = TruncatedSeries::zero(order);
    let mut current = a.clone();
    for k in 1..=order {
        out.coeffs[k] = current.clone();
        if k < order {
            current = &current * m;
        }
    }
    Ok(out)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Coefficientwise sum, truncated to the smaller order.
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product, truncated to the smaller order.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for n in 0..=order {
            let mut acc = LaurentPoly::zero();
            for k in 0..=n {
                acc = &acc + &(&self.coeffs[k] * &rhs.coeffs[n - k]);
            }
            out.coeffs[n] = acc;
        }
        out
    }
}

/// Text form `c_0+(c_1)*t+(c_2)*t^2+…` with zero coefficients skipped and no
/// whitespace. A coefficient prints bare when it is a nonnegative constant
/// (`24*t`), drops entirely when it is 1 (`t^2`), and is parenthesized
/// otherwise (`(v^4+22*v^2+1)*t`). The zero series prints as `0`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num::Signed;
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if n == 0 {
                write!(f, "{c}")?;
                continue;
            }
            if c.is_one() {
                // nothing before t
            } else if c.is_constant() && !c.constant_term().is_negative() {
                write!(f, "{c}*")?;
            } else {
                write!(f, "({c})*")?;
            }
            if n == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{n}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::VarId;

    fn v() -> VarId {
        VarId::new("v").unwrap()
    }

    fn p(src: &str) -> LaurentPoly {
        parse_poly(src, &[v()]).unwrap()
    }

    fn series(coeffs: &[&str]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|s| p(s)).collect())
    }

    #[test]
    fn arithmetic_truncates_to_the_smaller_order() {
        let a = series(&["1", "v", "v^2", "v^3"]);
        let b = series(&["1", "1"]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a * &b).coeff(1), &p("v+1"));
        assert_eq!(a.truncated(2).order(), 2);
        // Truncation never extends.
        assert_eq!(a.truncated(10).order(), 3);
    }

    #[test]
    fn cauchy_product_against_hand_expansion() {
        // (1 + vt + v^2 t^2)^2 = 1 + 2vt + 3v^2 t^2 mod t^3.
        let a = series(&["1", "v", "v^2"]);
        let sq = &a * &a;
        assert_eq!(sq, series(&["1", "2*v", "3*v^2"]));
    }

    #[test]
    fn exp_log_roundtrip_on_a_small_series() {
        let f = series(&["0", "v", "2", "v^(-1)"]);
        let g = f.exp().unwrap();
        assert_eq!(g.log().unwrap(), f);
        // And the other way around from a unit series.
        let h = series(&["1", "v^2+1", "0", "3"]);
        assert_eq!(h.log().unwrap().exp().unwrap(), h);
    }

    #[test]
    fn exp_matches_the_exponential_series() {
        // exp(t) = 1 + t + t^2/2 + t^3/6 + t^4/24.
        let mut t = TruncatedSeries::zero(4);
        t.set_coeff(1, LaurentPoly::one());
        let e = t.exp().unwrap();
        assert_eq!(e.coeff(0), &p("1"));
        assert_eq!(e.coeff(1), &p("1"));
        assert_eq!(e.coeff(2), &p("1/2"));
        assert_eq!(e.coeff(3), &p("1/6"));
        assert_eq!(e.coeff(4), &p("1/24"));
    }

    #[test]
    fn log_of_geometric_series_is_harmonic() {
        // log(1/(1-t)) = t + t^2/2 + t^3/3 + t^4/4.
        let g = series(&["1", "1", "1", "1", "1"]);
        let l = g.log().unwrap();
        for n in 1..=4usize {
            assert_eq!(l.coeff(n), &LaurentPoly::constant(ratio(1, n as i64)));
        }
    }

    #[test]
    fn exp_log_preconditions() {
        assert_eq!(series(&["1", "0"]).exp(), Err(Error::ExpNonzeroConstant));
        assert_eq!(series(&["0", "1"]).log(), Err(Error::LogConstantNotOne));
        assert_eq!(series(&["2", "1"]).log(), Err(Error::LogConstantNotOne));
        assert_eq!(series(&["0", "1"]).invert(), Err(Error::InvertConstantNotOne));
    }

    #[test]
    fn inversion_is_a_two_sided_inverse() {
        let g = series(&["1", "v^4+22*v^2+1", "v", "7"]);
        let inv = g.invert().unwrap();
        assert_eq!(&g * &inv, TruncatedSeries::one(3));
        assert_eq!(&inv * &g, TruncatedSeries::one(3));
    }

    #[test]
    fn geometric_series_examples() {
        // a t / (1 - v^2 t) = a t + a v^2 t^2 + a v^4 t^3 + …
        let a = p("v^4+22*v^2+1");
        let m = p("v^2");
        let g = geometric(&a, &m, 3).unwrap();
        assert!(g.coeff(0).is_zero());
        assert_eq!(g.coeff(1), &a);
        assert_eq!(g.coeff(2), &(&a * &m));
        assert_eq!(g.coeff(3), &(&a * &m.pow(2)));

        // Ratio 1 gives the plain repeated coefficient.
        let ones = geometric(&LaurentPoly::one(), &LaurentPoly::one(), 4).unwrap();
        assert_eq!(ones, series(&["0", "1", "1", "1", "1"]));

        // Monomials with any coefficient are accepted, sums are not.
        assert!(geometric(&a, &p("2*v"), 2).is_ok());
        assert_eq!(
            geometric(&a, &p("v+1"), 2),
            Err(Error::ExpectedMonomial(2))
        );
    }

    #[test]
    fn geometric_at_order_zero_is_zero() {
        let g = geometric(&p("5"), &p("v"), 0).unwrap();
        assert!(g.is_zero());
        assert_eq!(g.order(), 0);
    }

    #[test]
    fn display_formats() {
        assert_eq!(TruncatedSeries::zero(3).to_string(), "0");
        assert_eq!(TruncatedSeries::one(0).to_string(), "1");
        assert_eq!(
            series(&["1", "24", "324"]).to_string(),
            "1+24*t+324*t^2"
        );
        assert_eq!(
            series(&["1", "v^4+22*v^2+1"]).to_string(),
            "1+(v^4+22*v^2+1)*t"
        );
        assert_eq!(series(&["0", "1", "1"]).to_string(), "t+t^2");
        assert_eq!(series(&["0", "-2", "0", "v"]).to_string(), "(-2)*t+(v)*t^3");
        assert_eq!(series(&["v^2+1", "0", "1/2"]).to_string(), "v^2+1+1/2*t^2");
    }
}
