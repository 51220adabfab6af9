//! Truncated formal power series with exact rational coefficients, plus the
//! formal exp/log used throughout the transform identities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A truncated formal power series: exact rational coefficients of
/// `x^0 .. x^(order-1)` where `order` is the truncation length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coefficients: Vec<BigRational>,
}

impl RationalSeries {
    /// Wrap a nonempty coefficient list (constant term first).
    pub fn new(coefficients: Vec<BigRational>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidArgument(
                "series needs at least the constant term".into(),
            ));
        }
        Ok(Self { coefficients })
    }

    /// Build from machine integers, mostly for tests and fixtures.
    pub fn from_i64(coefficients: &[i64]) -> Result<Self> {
        Self::new(
            coefficients
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Build from exact integers.
    pub fn from_integers(coefficients: Vec<BigInt>) -> Result<Self> {
        Self::new(
            coefficients
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
        )
    }

    /// Truncation length: the number of stored coefficients.
    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficient(&self, k: usize) -> Result<&BigRational> {
        self.coefficients.get(k).ok_or(Error::IndexOutOfRange {
            index: k as u64,
            lo: 0,
            hi: self.coefficients.len() as u64 - 1,
        })
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.coefficients[0]
    }

    pub fn all_integral(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_integer())
    }

    /// The coefficients as exact integers; errors on the first fractional one.
    pub fn to_integer_coefficients(&self) -> Result<Vec<BigInt>> {
        let mut out = Vec::with_capacity(self.coefficients.len());
        for (k, c) in self.coefficients.iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient {
                    index: k,
                    value: c.to_string(),
                });
            }
            out.push(c.to_integer());
        }
        Ok(out)
    }

    /// Formal exponential, same truncation order. Requires constant term 0.
    ///
    /// Uses g' = f' g: `(n+1) g_{n+1} = sum_{k=0}^{n} (k+1) f_{k+1} g_{n-k}`.
    pub fn exp(&self) -> Result<RationalSeries> {
        if !self.coefficients[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: self.coefficients[0].to_string(),
            });
        }
        let order = self.order();
        let mut g = Vec::with_capacity(order);
        g.push(BigRational::one());
        for n in 0..order - 1 {
            let mut sum = BigRational::zero();
            for k in 0..=n {
                sum += BigRational::from_integer(BigInt::from(k as u64 + 1))
                    * &self.coefficients[k + 1]
                    * &g[n - k];
            }
            g.push(sum / BigRational::from_integer(BigInt::from(n as u64 + 1)));
        }
        RationalSeries::new(g)
    }

    /// Formal logarithm, same truncation order. Requires constant term 1.
    pub fn log(&self) -> Result<RationalSeries> {
        if !self.coefficients[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: self.coefficients[0].to_string(),
            });
        }
        let order = self.order();
        let mut f = Vec::with_capacity(order);
        f.push(BigRational::zero());
        for n in 0..order - 1 {
            // (n+1) g_{n+1} = sum_{k=0}^{n} (k+1) f_{k+1} g_{n-k}, solved for f_{n+1}
            let mut sum = BigRational::zero();
            for k in 0..n {
                sum += BigRational::from_integer(BigInt::from(k as u64 + 1))
                    * &f[k + 1]
                    * &self.coefficients[n - k];
            }
            f.push(
                &self.coefficients[n + 1]
                    - sum / BigRational::from_integer(BigInt::from(n as u64 + 1)),
            );
        }
        RationalSeries::new(f)
    }
}

/// Coefficients of `(1 - x^step)^exponent` truncated to `order` terms, for
/// any integer exponent. Entry k is the coefficient of `x^(step*k)`, i.e.
/// `(-1)^k C(exponent, k)`; for negative exponents this is the geometric
/// power `C(-exponent + k - 1, k)`. All divisions are exact.
pub(crate) fn one_minus_power(step: usize, exponent: &BigInt, order: usize) -> Vec<BigInt> {
    let terms = if step == 0 || order == 0 {
        0
    } else {
        (order - 1) / step
    };
    let mut coeffs = Vec::with_capacity(terms + 1);
    coeffs.push(BigInt::one());
    for k in 1..=terms {
        let k_big = BigInt::from(k as u64);
        let prev = coeffs.last().unwrap();
        // d_k = -d_{k-1} (e - k + 1) / k, exact because binomials are integers
        let next = -(prev * (exponent - &k_big + 1u32)) / k_big;
        coeffs.push(next);
    }
    coeffs
}

/// Multiply integer series `s` by a factor supported on multiples of `step`
/// (the output of [`one_minus_power`]), truncated to `s.len()` terms.
pub(crate) fn mul_by_sparse(s: &[BigInt], step: usize, factor: &[BigInt]) -> Vec<BigInt> {
    let order = s.len();
    let mut out = vec![BigInt::zero(); order];
    for (k, f) in factor.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let shift = k * step;
        if shift >= order {
            break;
        }
        for j in 0..order - shift {
            out[j + shift] += f * &s[j];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exp_of_x_gives_factorial_reciprocals() {
        let f = RationalSeries::from_i64(&[0, 1, 0, 0]).unwrap();
        let g = f.exp().unwrap();
        assert_eq!(
            g.coefficients(),
            &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]
        );
    }

    #[test]
    fn log_of_one_plus_x_alternates() {
        let g = RationalSeries::from_i64(&[1, 1, 0, 0]).unwrap();
        let f = g.log().unwrap();
        assert_eq!(
            f.coefficients(),
            &[rat(0, 1), rat(1, 1), rat(-1, 2), rat(1, 3)]
        );
    }

    #[test]
    fn constant_term_preconditions_are_enforced() {
        let f = RationalSeries::from_i64(&[1, 1]).unwrap();
        assert!(matches!(f.exp(), Err(Error::ConstantTerm { .. })));
        let g = RationalSeries::from_i64(&[0, 1]).unwrap();
        assert!(matches!(g.log(), Err(Error::ConstantTerm { .. })));
        assert!(RationalSeries::new(vec![]).is_err());
    }

    #[test]
    fn integer_extraction_reports_fractional_coefficient() {
        let s = RationalSeries::new(vec![rat(1, 1), rat(3, 2)]).unwrap();
        match s.to_integer_coefficients() {
            Err(Error::NonIntegerCoefficient { index: 1, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn geometric_and_binomial_powers() {
        // (1 - x)^-1 = 1 + x + x^2 + ...
        let g = one_minus_power(1, &BigInt::from(-1), 5);
        assert!(g.iter().all(|c| c == &BigInt::one()));
        // (1 - x^2)^3 = 1 - 3x^2 + 3x^4 - x^6
        let b = one_minus_power(2, &BigInt::from(3), 9);
        let want: Vec<BigInt> = [1i64, -3, 3, -1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(b, want);
    }

    proptest! {
        #[test]
        fn log_inverts_exp(coeffs in proptest::collection::vec(-9i64..=9, 1..10)) {
            let mut c = vec![0i64];
            c.extend(&coeffs);
            let f = RationalSeries::from_i64(&c).unwrap();
            let back = f.exp().unwrap().log().unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
