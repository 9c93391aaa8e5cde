//! Seeded random inputs for self-checks.
//!
//! Both the test suite and the `check` subcommand draw random coefficient
//! polynomials from here. Everything is driven by a caller-supplied RNG, so
//! a fixed seed gives a byte-reproducible run.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::poly::{ExponentVector, LaurentPoly, VarId};
use crate::rational::rat;

/// A random Laurent polynomial over `vars`: up to `max_terms` terms, integer
/// exponents drawn from `exp_range`, integer coefficients drawn from
/// `[-coeff_bound, coeff_bound]`.
///
/// Colliding exponent draws keep the latest coefficient rather than summing,
/// so every coefficient of the result stays inside the stated range. A zero
/// draw erases its term, so the result can have fewer terms than `max_terms`
/// — or be zero outright, which is a useful edge case for the consumers.
pub fn random_poly<R: Rng + ?Sized>(
    rng: &mut R,
    vars: &[VarId],
    exp_range: RangeInclusive<i64>,
    coeff_bound: i64,
    max_terms: usize,
) -> LaurentPoly {
    let terms = rng.random_range(0..=max_terms);
    let mut chosen = std::collections::BTreeMap::new();
    for _ in 0..terms {
        let ev = ExponentVector::from_entries(
            vars.iter()
                .map(|&v| (v, rat(rng.random_range(exp_range.clone())))),
        );
        let coeff = rat(rng.random_range(-coeff_bound..=coeff_bound));
        chosen.insert(ev, coeff);
    }
    let mut poly = LaurentPoly::zero();
    for (ev, coeff) in chosen {
        poly.add_term(ev, coeff);
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fixed_seed_is_reproducible() {
        let vars = [VarId::new("u").unwrap(), VarId::new("v").unwrap()];
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert_eq!(
                random_poly(&mut a, &vars, -4..=4, 5, 5),
                random_poly(&mut b, &vars, -4..=4, 5, 5)
            );
        }
    }

    #[test]
    fn respects_bounds() {
        use num::Signed;
        let v = VarId::new("v").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = random_poly(&mut rng, &[v], -3..=3, 4, 6);
            assert!(p.num_terms() <= 6);
            for (ev, c) in p.terms() {
                assert!(c.abs() <= rat(4));
                let e = ev.exponent(v);
                assert!(e >= rat(-3) && e <= rat(3));
            }
        }
    }
}
