//! λ-ring operations on polynomials and series.
//!
//! The coefficient ring of Laurent polynomials carries a λ-ring structure in
//! which every monomial is a line element: the Adams operation `ψ_k` raises
//! each monomial to its k-th power, i.e. multiplies all exponents by `k`
//! (`ψ_k(f(x)) = f(x^k)`), and fixes the rational coefficients. The
//! σ-operations (symmetric powers) are recovered from the Adams operations
//! by the Newton recurrence
//!
//! ```text
//! n·σ_n(f) = Σ_{k=1..n} ψ_k(f)·σ_{n-k}(f),      σ_0 = 1,
//! ```
//!
//! and the plethystic exponential of an augmentation-positive series
//! `F = Σ_{n>=1} c_n t^n` (with `ψ_k(t) = t^k`) is
//!
//! ```text
//! Exp(F) = Σ_{n>=0} σ_n(F) = exp( Σ_{k>=1} ψ_k(F)/k ).
//! ```
//!
//! `Exp` turns sums into products and has a plethystic inverse `Log`,
//! computed by Möbius inversion:
//!
//! ```text
//! Log(G) = Σ_{k>=1} (μ(k)/k)·ψ_k(log G).
//! ```
//!
//! Two independent routes to `Exp` are kept side by side:
//! [`plethystic_exp`] (the production path, through Adams operations and the
//! series exponential) and [`plethystic_exp_via_sigma`] (the definition, as
//! a product of σ-series) — they must agree coefficient for coefficient and
//! the test suite holds them to that.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Error;
use crate::poly::LaurentPoly;
use crate::rational::{rat, ratio};
use crate::series::TruncatedSeries;

/// The Adams operation `ψ_k` on a polynomial: every exponent is multiplied
/// by `k`, coefficients are untouched. `ψ_1` is the identity and
/// `ψ_k ∘ ψ_l = ψ_{kl}`.
///
/// # Panics
/// Panics when `k == 0`; Adams operations are indexed by positive integers.
pub fn adams_poly(f: &LaurentPoly, k: u32) -> LaurentPoly {
    assert!(k >= 1, "Adams operations are indexed from 1");
    let factor = rat(k as i64);
    let mut out = LaurentPoly::zero();
    for (ev, c) in f.terms() {
        out.add_term(ev.scaled(&factor), c.clone());
    }
    out
}

/// The Adams operation `ψ_k` on a truncated series: `ψ_k(c t^n) =
/// ψ_k(c) t^(kn)`, with terms pushed beyond the truncation order dropped.
///
/// # Panics
/// Panics when `k == 0`.
pub fn adams_series(f: &TruncatedSeries, k: u32) -> TruncatedSeries {
    assert!(k >= 1, "Adams operations are indexed from 1");
    let order = f.order();
    let mut out = TruncatedSeries::zero(order);
    for (n, c) in f.coeffs().iter().enumerate() {
        let target = n.checked_mul(k as usize).expect("series degree overflow");
        if target > order {
            // All later coefficients land even further out.
            break;
        }
        out.set_coeff(target, adams_poly(c, k));
    }
    out
}

/// The σ-operations `σ_0(f), …, σ_n(f)` via the Newton recurrence. Computing
/// the whole table at once is what every caller needs anyway, and it shares
/// the `ψ_k(f)` images across the recurrence. No state is cached between
/// calls, so concurrent use needs no locking.
///
/// For a line element (single term with coefficient 1) this collapses to
/// `σ_n(x^α) = x^(nα)`.
pub fn sigma_table(f: &LaurentPoly, n: u32) -> Vec<LaurentPoly> {
    let n = n as usize;
    let mut table = Vec::with_capacity(n + 1);
    table.push(LaurentPoly::one());
    if n == 0 {
        return table;
    }
    let psi: Vec<LaurentPoly> = (1..=n).map(|k| adams_poly(f, k as u32)).collect();
    for i in 1..=n {
        let mut acc = LaurentPoly::zero();
        for k in 1..=i {
            let contribution = &psi[k - 1] * &table[i - k];
            acc = &acc + &contribution;
        }
        table.push(acc.scaled(&ratio(1, i as i64)));
    }
    table
}

/// The single σ-operation `σ_n(f)`; see [`sigma_table`].
pub fn sigma_poly(f: &LaurentPoly, n: u32) -> LaurentPoly {
    sigma_table(f, n).pop().expect("table is never empty")
}

/// The plethystic exponential `Exp(F) = exp(Σ_{k>=1} ψ_k(F)/k)` of an
/// augmentation-positive series (`c_0 = 0`).
///
/// This is the production route: the sum over Adams images is finite after
/// truncation (`k` beyond the order contributes nothing), and the outer
/// exponential is the exact series recurrence.
pub fn plethystic_exp(f: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    if !f.coeff(0).is_zero() {
        return Err(Error::ExpAugmentation);
    }
    let order = f.order();
    let mut inner = TruncatedSeries::zero(order);
    for k in 1..=order {
        let scaled = adams_series(f, k as u32).scaled(&ratio(1, k as i64));
        inner = &inner + &scaled;
    }
    inner.exp()
}

/// The plethystic exponential computed from its definition as a sum of
/// σ-operations: `Exp(Σ_m c_m t^m) = Π_m Σ_a σ_a(c_m) t^(am)`.
///
/// Kept deliberately independent of [`plethystic_exp`] as a cross-check;
/// the two must agree exactly.
pub fn plethystic_exp_via_sigma(f: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    if !f.coeff(0).is_zero() {
        return Err(Error::ExpAugmentation);
    }
    let order = f.order();
    let mut result = TruncatedSeries::one(order);
    for m in 1..=order {
        let c = f.coeff(m);
        if c.is_zero() {
            continue;
        }
        let reach = order / m;
        let sigmas = sigma_table(c, reach as u32);
        let mut factor = TruncatedSeries::zero(order);
        for (a, sigma) in sigmas.into_iter().enumerate() {
            factor.set_coeff(a * m, sigma);
        }
        result = &result * &factor;
    }
    Ok(result)
}

/// The plethystic logarithm, inverse to [`plethystic_exp`], for series with
/// constant term 1: `Log(G) = Σ_k (μ(k)/k)·ψ_k(log G)`.
pub fn plethystic_log(g: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    let inner = g.log()?;
    let order = g.order();
    let mut out = TruncatedSeries::zero(order);
    for k in 1..=order {
        let mu = mobius(k as u64);
        if mu == 0 {
            continue;
        }
        let scaled = adams_series(&inner, k as u32).scaled(&ratio(mu as i64, k as i64));
        out = &out + &scaled;
    }
    Ok(out)
}

/// The Möbius function μ(k): 0 when k has a squared prime factor, otherwise
/// (-1)^(number of prime factors). Values are memoized; the inputs here are
/// bounded by the series order, so trial division is plenty.
///
/// # Panics
/// Panics when `k == 0`.
pub fn mobius(k: u64) -> i8 {
    assert!(k >= 1, "mobius is defined on positive integers");
    static CACHE: OnceLock<Mutex<BTreeMap<u64, i8>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(&value) = cache.lock().expect("mobius cache poisoned").get(&k) {
        return value;
    }
    let mut remaining = k;
    let mut factors = 0u32;
    let mut p = 2u64;
    let mut value = None;
    while p * p <= remaining {
        if remaining.is_multiple_of(p) {
            remaining /= p;
            factors += 1;
            if remaining.is_multiple_of(p) {
                value = Some(0);
                break;
            }
        }
        p += 1;
    }
    let value = value.unwrap_or_else(|| {
        if remaining > 1 {
            factors += 1;
        }
        if factors.is_multiple_of(2) {
            1
        } else {
            -1
        }
    });
    cache.lock().expect("mobius cache poisoned").insert(k, value);
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::{ExponentVector, VarId};
    use crate::rational::rat;

    fn v() -> VarId {
        VarId::new("v").unwrap()
    }

    fn u() -> VarId {
        VarId::new("u").unwrap()
    }

    fn p(src: &str) -> LaurentPoly {
        parse_poly(src, &[u(), v()]).unwrap()
    }

    fn k3() -> LaurentPoly {
        p("v^4+22*v^2+1")
    }

    #[test]
    fn adams_is_exponent_scaling() {
        assert_eq!(adams_poly(&k3(), 1), k3());
        assert_eq!(adams_poly(&k3(), 2), p("v^8+22*v^4+1"));
        // Coefficients (including fractional ones) are fixed points.
        assert_eq!(adams_poly(&p("3/2"), 5), p("3/2"));
        // Negative and fractional exponents scale too.
        let f = LaurentPoly::monomial(ExponentVector::var(v(), crate::ratio(1, 2)), rat(1));
        assert_eq!(adams_poly(&f, 2), p("v"));
    }

    #[test]
    #[should_panic]
    fn adams_index_zero_is_rejected() {
        let _ = adams_poly(&k3(), 0);
    }

    #[test]
    fn adams_composition_law() {
        let f = p("u^2*v^(-1)+3*v+1/2");
        for k in 1..=4u32 {
            for l in 1..=4u32 {
                assert_eq!(
                    adams_poly(&adams_poly(&f, l), k),
                    adams_poly(&f, k * l)
                );
            }
        }
    }

    #[test]
    fn adams_is_a_ring_homomorphism() {
        let f = p("u*v+2");
        let g = p("v^2-u");
        for k in 1..=5u32 {
            assert_eq!(adams_poly(&(&f + &g), k), &adams_poly(&f, k) + &adams_poly(&g, k));
            assert_eq!(adams_poly(&(&f * &g), k), &adams_poly(&f, k) * &adams_poly(&g, k));
        }
    }

    #[test]
    fn adams_on_series_stretches_degrees() {
        let mut f = TruncatedSeries::zero(6);
        f.set_coeff(1, k3());
        f.set_coeff(2, p("v"));
        let g = adams_series(&f, 3);
        assert!(g.coeff(0).is_zero());
        assert_eq!(g.coeff(3), &adams_poly(&k3(), 3));
        assert_eq!(g.coeff(6), &p("v^3"));
        for n in [1usize, 2, 4, 5] {
            assert!(g.coeff(n).is_zero());
        }
    }

    #[test]
    fn sigma_of_line_elements_is_a_power() {
        // σ_n(x^α) = x^(nα) for single terms with coefficient 1.
        let cases = [p("v^2"), p("u*v"), p("v^(-1)"), p("u^3*v^(-2)")];
        for f in &cases {
            for n in 1..=10u32 {
                assert_eq!(sigma_poly(f, n), adams_poly(f, n));
            }
        }
    }

    #[test]
    fn sigma_frozen_values() {
        assert_eq!(sigma_poly(&k3(), 0), LaurentPoly::one());
        assert_eq!(sigma_poly(&p("v^2+1"), 2), p("v^4+v^2+1"));
        // σ_2(f) = (f^2 + ψ_2(f))/2 for the K3 class, expanded by hand.
        assert_eq!(
            sigma_poly(&k3(), 2),
            p("v^8+22*v^6+254*v^4+22*v^2+1")
        );
        // σ_n(c) for a constant c is the binomial series value
        // C(c+n-1, n): σ_2(24) = 300, σ_3(24) = 2600.
        assert_eq!(sigma_poly(&p("24"), 2), p("300"));
        assert_eq!(sigma_poly(&p("24"), 3), p("2600"));
    }

    #[test]
    fn sigma_table_matches_single_calls() {
        let f = p("u+v^(-1)");
        let table = sigma_table(&f, 5);
        assert_eq!(table.len(), 6);
        for (n, sigma) in table.iter().enumerate() {
            assert_eq!(sigma, &sigma_poly(&f, n as u32));
        }
    }

    #[test]
    fn exp_of_zero_is_one_and_log_of_one_is_zero() {
        let zero = TruncatedSeries::zero(5);
        assert_eq!(plethystic_exp(&zero).unwrap(), TruncatedSeries::one(5));
        assert_eq!(
            plethystic_log(&TruncatedSeries::one(5)).unwrap(),
            TruncatedSeries::zero(5)
        );
    }

    #[test]
    fn exp_rejects_nonzero_constant_term() {
        assert_eq!(
            plethystic_exp(&TruncatedSeries::one(3)),
            Err(Error::ExpAugmentation)
        );
        assert_eq!(
            plethystic_exp_via_sigma(&TruncatedSeries::one(3)),
            Err(Error::ExpAugmentation)
        );
        let mut bad = TruncatedSeries::zero(3);
        bad.set_coeff(0, p("2"));
        assert_eq!(plethystic_log(&bad), Err(Error::LogConstantNotOne));
    }

    #[test]
    fn exp_of_single_class_times_t_starts_with_sigmas() {
        // Exp(c·t) = Σ σ_n(c) t^n.
        let mut f = TruncatedSeries::zero(6);
        f.set_coeff(1, k3());
        let g = plethystic_exp(&f).unwrap();
        let sigmas = sigma_table(&k3(), 6);
        for (n, sigma) in sigmas.iter().enumerate() {
            assert_eq!(g.coeff(n), sigma);
        }
    }

    #[test]
    fn the_two_exp_routes_agree() {
        let mut f = TruncatedSeries::zero(8);
        f.set_coeff(1, k3());
        f.set_coeff(2, p("u*v^(-1)+1"));
        f.set_coeff(5, p("2*v"));
        assert_eq!(
            plethystic_exp(&f).unwrap(),
            plethystic_exp_via_sigma(&f).unwrap()
        );
    }

    #[test]
    fn exp_and_log_are_mutually_inverse() {
        let mut f = TruncatedSeries::zero(7);
        f.set_coeff(1, p("v^2"));
        f.set_coeff(2, p("u+1"));
        f.set_coeff(3, p("v^(-2)"));
        let g = plethystic_exp(&f).unwrap();
        assert_eq!(plethystic_log(&g).unwrap(), f);

        // Exp(Log(G)) = G for an arbitrary unit series.
        let mut g = TruncatedSeries::one(6);
        g.set_coeff(1, p("u"));
        g.set_coeff(2, p("7*v^2-u"));
        g.set_coeff(6, p("1/3"));
        let f = plethystic_log(&g).unwrap();
        assert_eq!(plethystic_exp(&f).unwrap(), g);
    }

    #[test]
    fn exp_is_additive_to_multiplicative() {
        let mut f = TruncatedSeries::zero(6);
        f.set_coeff(1, p("v"));
        f.set_coeff(3, p("u*v"));
        let mut g = TruncatedSeries::zero(6);
        g.set_coeff(1, p("2"));
        g.set_coeff(2, p("v^(-1)"));
        let sum = &f + &g;
        let lhs = plethystic_exp(&sum).unwrap();
        let rhs = &plethystic_exp(&f).unwrap() * &plethystic_exp(&g).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn log_of_pure_geometric_is_t() {
        // Log(1/(1-t)) = t: the defining example of Möbius inversion here.
        let g = TruncatedSeries::from_coeffs(vec![LaurentPoly::one(); 9]);
        let mut expected = TruncatedSeries::zero(8);
        expected.set_coeff(1, LaurentPoly::one());
        assert_eq!(plethystic_log(&g).unwrap(), expected);
    }

    #[test]
    fn mobius_first_values() {
        let expected: [i8; 12] = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, want) in expected.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), *want, "mu({})", i + 1);
        }
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(36), 0);
        assert_eq!(mobius(210), 1);
    }
}
