//! The Riemann-Siegel coefficient sequences lambda_n, rho_n, mu_n, their
//! integrality, and the 2-adic valuation law nu_2(lambda_n) = nu_2(rho_n)
//! = s(n).
//!
//! lambda and rho satisfy convolution recurrences against the weights
//! `2^(4k+1) |E_{2k+2}|`; the division by n+1 at each step is provably
//! exact, so any remainder is reported as an internal error rather than
//! rounded away.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::congruences::{geometric_quotient, pointwise_product};
use crate::error::{Error, Result};
use crate::sequences::{binary_digit_sum, euler_abs, euler_numbers, padic_valuation, IntegerSequence};

/// The three coefficient sequences over a shared index range 0..=N.
///
/// Invariants checked at construction: lambda_0 = 1, rho_0 = -1, and
/// 2 mu_n = lambda_n + rho_n exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabckeTriple {
    pub lambda: IntegerSequence,
    pub rho: IntegerSequence,
    pub mu: IntegerSequence,
}

/// Observed-versus-expected 2-adic valuations for one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationRow {
    pub n: u64,
    pub lambda_valuation: u64,
    pub rho_valuation: u64,
    /// Binary digit sum s(n), the value both valuations must equal.
    pub expected: u64,
}

impl ValuationRow {
    pub fn is_match(&self) -> bool {
        self.lambda_valuation == self.expected && self.rho_valuation == self.expected
    }
}

/// Valuation profile over the contiguous range 0..=N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationProfile {
    pub rows: Vec<ValuationRow>,
}

impl ValuationProfile {
    pub fn is_pass(&self) -> bool {
        self.rows.iter().all(ValuationRow::is_match)
    }

    pub fn first_mismatch(&self) -> Option<&ValuationRow> {
        self.rows.iter().find(|r| !r.is_match())
    }
}

/// The fixed-point counts `a_n = 2^(4n-3) |E_{2n}|` for n = 1..N, built
/// from the Euler magnitudes and the realizable power sequence 16^n / 8.
pub fn gabcke_sequence(n_terms: usize) -> Result<IntegerSequence> {
    let euler = euler_abs(n_terms)?;
    let powers = geometric_quotient(16, 8, n_terms)?;
    pointwise_product(&euler, &powers)
}

/// Convolution weights `g_k = 2^(4k+1) |E_{2k+2}|` for k = 0..count-1,
/// equal to the gabcke sequence shifted down one index.
fn weights(count: usize, euler: &IntegerSequence) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(count);
    for k in 0..count as u64 {
        out.push(euler.get(k + 1)?.abs() << (4 * k + 1));
    }
    Ok(out)
}

fn convolution_sequence(
    max_index: usize,
    weights: &[BigInt],
    negated: bool,
    context: &'static str,
) -> Result<IntegerSequence> {
    let seed = if negated { -1i64 } else { 1i64 };
    let mut values = vec![BigInt::from(seed)];
    for n in 0..max_index {
        let mut sum = BigInt::zero();
        for k in 0..=n {
            sum += &weights[k] * &values[n - k];
        }
        if negated {
            sum = -sum;
        }
        let (q, r) = sum.div_rem(&BigInt::from(n as u64 + 1));
        if !r.is_zero() {
            return Err(Error::NonIntegralResult {
                context,
                index: n as u64 + 1,
            });
        }
        values.push(q);
    }
    IntegerSequence::new(0, values)
}

/// `lambda_0 .. lambda_N` by the recurrence
/// `(n+1) lambda_{n+1} = sum_{k=0}^{n} 2^(4k+1) |E_{2k+2}| lambda_{n-k}`,
/// `lambda_0 = 1`. Equals the zeta coefficients of [`gabcke_sequence`].
pub fn lambda_numbers(max_index: usize) -> Result<IntegerSequence> {
    let euler = euler_numbers(max_index.max(1));
    convolution_sequence(max_index, &weights(max_index, &euler)?, false, "lambda")
}

/// `rho_0 .. rho_N` by the negated recurrence
/// `(n+1) rho_{n+1} = -sum_{k=0}^{n} 2^(4k+1) |E_{2k+2}| rho_{n-k}`,
/// `rho_0 = -1`. Equals minus the zeta coefficients of the negated
/// gabcke sequence.
pub fn rho_numbers(max_index: usize) -> Result<IntegerSequence> {
    let euler = euler_numbers(max_index.max(1));
    convolution_sequence(max_index, &weights(max_index, &euler)?, true, "rho")
}

/// `mu_n = (lambda_n + rho_n) / 2` for n = 0..N; an odd sum is an internal
/// error (the valuation law guarantees even sums).
pub fn mu_numbers(max_index: usize) -> Result<IntegerSequence> {
    Ok(gabcke_triple(max_index)?.mu)
}

/// Compute lambda, rho and mu over 0..=N with a single shared Euler prefix.
pub fn gabcke_triple(max_index: usize) -> Result<GabckeTriple> {
    let euler = euler_numbers(max_index.max(1));
    let weights = weights(max_index, &euler)?;
    let lambda = convolution_sequence(max_index, &weights, false, "lambda")?;
    let rho = convolution_sequence(max_index, &weights, true, "rho")?;
    let mut mu_values = Vec::with_capacity(max_index + 1);
    for n in 0..=max_index as u64 {
        let sum = lambda.get(n)? + rho.get(n)?;
        let (q, r) = sum.div_rem(&BigInt::from(2));
        if !r.is_zero() {
            return Err(Error::NonIntegralResult {
                context: "mu",
                index: n,
            });
        }
        mu_values.push(q);
    }
    Ok(GabckeTriple {
        lambda,
        rho,
        mu: IntegerSequence::new(0, mu_values)?,
    })
}

/// Observed 2-adic valuations of lambda_n and rho_n against the binary
/// digit sum s(n), for every n in 0..=N.
pub fn valuation_check(max_index: usize) -> Result<ValuationProfile> {
    let euler = euler_numbers(max_index.max(1));
    let weights = weights(max_index, &euler)?;
    let lambda = convolution_sequence(max_index, &weights, false, "lambda")?;
    let rho = convolution_sequence(max_index, &weights, true, "rho")?;
    let mut rows = Vec::with_capacity(max_index + 1);
    for n in 0..=max_index as u64 {
        rows.push(ValuationRow {
            n,
            lambda_valuation: padic_valuation(lambda.get(n)?, 2)?,
            rho_valuation: padic_valuation(rho.get(n)?, 2)?,
            expected: binary_digit_sum(n) as u64,
        });
    }
    Ok(ValuationProfile { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::zeta_coefficients;
    use num_traits::One;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn gabcke_sequence_first_values() {
        let a = gabcke_sequence(6).unwrap();
        assert_eq!(
            a.values(),
            &ints(&[2, 160, 31232, 11345920, 6621888512, 5668109025280])[..]
        );
    }

    #[test]
    fn lambda_matches_published_prefix() {
        let lambda = lambda_numbers(7).unwrap();
        assert_eq!(
            lambda.values(),
            &ints(&[
                1,
                2,
                82,
                10572,
                2860662,
                1330910844,
                947622146676,
                957663025230936
            ])[..]
        );
    }

    #[test]
    fn rho_first_values() {
        let rho = rho_numbers(4).unwrap();
        assert_eq!(rho.values(), &ints(&[-1, 2, 78, 10252, 2812618])[..]);
    }

    #[test]
    fn mu_first_values() {
        let mu = mu_numbers(4).unwrap();
        assert_eq!(mu.values(), &ints(&[0, 2, 80, 10412, 2836640])[..]);
    }

    #[test]
    fn lambda_equals_zeta_coefficients_of_gabcke_sequence() {
        let a = gabcke_sequence(12).unwrap();
        let series = zeta_coefficients(&a, 12).unwrap();
        let lambda = lambda_numbers(12).unwrap();
        assert_eq!(
            series.to_integer_coefficients().unwrap(),
            lambda.values()
        );
    }

    #[test]
    fn rho_equals_negated_zeta_coefficients_of_negated_sequence() {
        let a = gabcke_sequence(12).unwrap();
        let negated =
            IntegerSequence::new(1, a.values().iter().map(|v| -v).collect()).unwrap();
        let series = zeta_coefficients(&negated, 12).unwrap();
        let rho = rho_numbers(12).unwrap();
        let negated_rho: Vec<BigInt> = rho.values().iter().map(|v| -v).collect();
        assert_eq!(series.to_integer_coefficients().unwrap(), negated_rho);
    }

    #[test]
    fn triple_invariants_hold() {
        let triple = gabcke_triple(50).unwrap();
        assert!(triple.lambda.get(0).unwrap().is_one());
        assert_eq!(triple.rho.get(0).unwrap(), &BigInt::from(-1));
        for n in 0..=50u64 {
            let sum = triple.lambda.get(n).unwrap() + triple.rho.get(n).unwrap();
            assert_eq!(&sum, &(triple.mu.get(n).unwrap() * 2));
        }
    }

    #[test]
    fn valuations_track_binary_digit_sums() {
        let profile = valuation_check(64).unwrap();
        assert!(profile.is_pass());
        assert_eq!(profile.rows.len(), 65);
        // spot checks: nu_2(lambda_3) = nu_2(10572) = 2 = s(3), and
        // lambda_4 = 2860662 = 2 * 1430331 with odd cofactor
        let row3 = profile.rows[3];
        assert_eq!(row3.lambda_valuation, 2);
        assert_eq!(row3.expected, 2);
        let row4 = profile.rows[4];
        assert_eq!(row4.lambda_valuation, 1);
        assert_eq!(row4.expected, 1);
        let row0 = profile.rows[0];
        assert_eq!(row0.lambda_valuation, 0);
        assert_eq!(row0.expected, 0);
    }

    #[test]
    fn valuation_increments_follow_digit_sum_identity() {
        // nu_2(lambda_{n+1}) = s(n) - nu_2(n+1) + 1
        let profile = valuation_check(48).unwrap();
        for n in 0..48u64 {
            let expected = binary_digit_sum(n) as u64 + 1 - (n + 1).trailing_zeros() as u64;
            assert_eq!(profile.rows[(n + 1) as usize].lambda_valuation, expected);
        }
    }

    #[test]
    fn gabcke_sequence_passes_all_checks() {
        use crate::congruences::*;
        let a = gabcke_sequence(16).unwrap();
        assert!(prerealizable_via_orbit_counts(&a, 16).unwrap().is_pass());
        assert!(prerealizable_via_zeta_coefficients(&a, 16).unwrap().is_pass());
        assert!(prerealizable_via_congruences(&a, 16).unwrap().is_pass());
        assert!(realizability_check(&a, 16).unwrap().is_pass());
    }

    #[test]
    fn zero_index_triples_are_seeds_only() {
        let triple = gabcke_triple(0).unwrap();
        assert_eq!(triple.lambda.values(), &ints(&[1])[..]);
        assert_eq!(triple.rho.values(), &ints(&[-1])[..]);
        assert_eq!(triple.mu.values(), &ints(&[0])[..]);
    }
}
