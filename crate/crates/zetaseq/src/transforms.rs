//! The three mutually convertible representations of a dynamical zeta
//! function, all in exact arithmetic:
//!
//! - fixed-point counts `a_n` (the sequence itself),
//! - orbit counts `b_n` with `n b_n = sum_{d|n} mu(n/d) a_d`, the exponents
//!   of the Euler product `prod (1-x^n)^{-b_n}`,
//! - zeta coefficients `A_n`, the power series `exp(sum a_n x^n / n)`.
//!
//! Both product and exponential expansions agree with these term by term;
//! the checks in [`crate::congruences`] are built on that identity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sequences::{divisors, mobius, IntegerSequence, RationalSequence};
use crate::series::{mul_by_sparse, one_minus_power, RationalSeries};

/// Per-index result of the orbit-count transform
/// `b_n = (sum_{d|n} mu(n/d) a_d) / n`, kept as an exact rational together
/// with its integrality verdict (non-integrality is a verdict, not an
/// error: pre-realizability checks query it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTransformResult {
    values: Vec<BigRational>, // index n at values[n-1]
}

impl DivisorTransformResult {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Exact value of `b_n`.
    pub fn value(&self, n: u64) -> Result<&BigRational> {
        if n == 0 || n > self.values.len() as u64 {
            return Err(Error::IndexOutOfRange {
                index: n,
                lo: 1,
                hi: self.values.len() as u64,
            });
        }
        Ok(&self.values[n as usize - 1])
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Integrality verdict for index n.
    pub fn is_integral_at(&self, n: u64) -> Result<bool> {
        self.value(n).map(|v| v.is_integer())
    }

    pub fn all_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Smallest index with a fractional value, if any.
    pub fn first_non_integral(&self) -> Option<u64> {
        self.values
            .iter()
            .position(|v| !v.is_integer())
            .map(|i| i as u64 + 1)
    }

    /// The orbit counts as an integer sequence (offset 1); errors on the
    /// first fractional index.
    pub fn to_integer_sequence(&self) -> Result<IntegerSequence> {
        let mut out = Vec::with_capacity(self.values.len());
        for (i, v) in self.values.iter().enumerate() {
            if !v.is_integer() {
                return Err(Error::NonIntegerCoefficient {
                    index: i + 1,
                    value: v.to_string(),
                });
            }
            out.push(v.to_integer());
        }
        IntegerSequence::new(1, out)
    }
}

fn require_from_one(a: &IntegerSequence, n_terms: usize) -> Result<()> {
    if a.first_index() != 1 {
        return Err(Error::WrongOffset {
            expected: 1,
            found: a.first_index(),
        });
    }
    if (a.len() as u64) < n_terms as u64 {
        return Err(Error::InsufficientLength {
            needed: n_terms as u64,
            have: a.last_index(),
        });
    }
    if n_terms == 0 {
        return Err(Error::InvalidArgument(
            "transform needs at least one term".into(),
        ));
    }
    Ok(())
}

/// Orbit counts from fixed-point counts: exact `b_n` for n = 1..n_terms
/// with per-index integrality verdicts. `b_1 = a_1` always.
pub fn orbit_counts(a: &IntegerSequence, n_terms: usize) -> Result<DivisorTransformResult> {
    require_from_one(a, n_terms)?;
    let mut values = Vec::with_capacity(n_terms);
    for n in 1..=n_terms as u64 {
        let mut sum = BigInt::zero();
        for d in divisors(n) {
            let mu = mobius(n / d)?;
            match mu {
                1 => sum += a.get(d)?,
                -1 => sum -= a.get(d)?,
                _ => {}
            }
        }
        values.push(BigRational::new(sum, BigInt::from(n)));
    }
    Ok(DivisorTransformResult { values })
}

/// Fixed-point counts from orbit counts by Moebius inversion:
/// `a_n = sum_{d|n} d b_d`.
pub fn fixed_point_counts(b: &IntegerSequence, n_terms: usize) -> Result<IntegerSequence> {
    require_from_one(b, n_terms)?;
    let mut values = Vec::with_capacity(n_terms);
    for n in 1..=n_terms as u64 {
        let mut sum = BigInt::zero();
        for d in divisors(n) {
            sum += b.get(d)? * d;
        }
        values.push(sum);
    }
    IntegerSequence::new(1, values)
}

/// Zeta coefficients `A_0 .. A_{n_terms}` of `exp(sum a_n x^n / n)` by the
/// recurrence `(n+1) A_{n+1} = sum_{k=0}^{n} A_{n-k} a_{k+1}`, `A_0 = 1`.
pub fn zeta_coefficients(a: &IntegerSequence, n_terms: usize) -> Result<RationalSeries> {
    require_from_one(a, n_terms)?;
    let mut coeffs = Vec::with_capacity(n_terms + 1);
    coeffs.push(BigRational::one());
    for n in 0..n_terms as u64 {
        let mut sum = BigRational::zero();
        for k in 0..=n {
            sum += &coeffs[(n - k) as usize] * BigRational::from_integer(a.get(k + 1)?.clone());
        }
        coeffs.push(sum / BigRational::from_integer(BigInt::from(n + 1)));
    }
    RationalSeries::new(coeffs)
}

/// Recover the fixed-point counts from zeta coefficients (the unique `a`
/// with `zeta_coefficients(a) = series`), solved from the same recurrence:
/// `a_{n+1} = (n+1) A_{n+1} - sum_{k=0}^{n-1} A_{n-k} a_{k+1}`.
///
/// Requires `A_0 = 1`; returns exact rationals `a_1 .. a_N`.
pub fn from_zeta_coefficients(series: &RationalSeries) -> Result<RationalSequence> {
    if !series.constant_term().is_one() {
        return Err(Error::ConstantTerm {
            expected: "1".into(),
            found: series.constant_term().to_string(),
        });
    }
    let n_terms = series.order() - 1;
    if n_terms == 0 {
        return Err(Error::InvalidArgument(
            "series must carry at least one coefficient beyond the constant".into(),
        ));
    }
    let coeffs = series.coefficients();
    let mut a: Vec<BigRational> = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        let mut sum = BigRational::zero();
        for k in 0..n {
            sum += &coeffs[n - k] * &a[k];
        }
        a.push(
            BigRational::from_integer(BigInt::from(n as u64 + 1)) * &coeffs[n + 1] - sum,
        );
    }
    RationalSequence::new(1, a)
}

/// Expand the Euler product `prod_{n=1}^{N} (1 - x^n)^{-b_n}` truncated at
/// `x^N`. Coefficients are integers whenever the exponents are (they always
/// are here; the rational wrapper keeps the series type uniform).
pub fn euler_product(b: &IntegerSequence, n_terms: usize) -> Result<RationalSeries> {
    require_from_one(b, n_terms)?;
    let order = n_terms + 1;
    let mut coeffs = vec![BigInt::zero(); order];
    coeffs[0] = BigInt::one();
    for n in 1..=n_terms as u64 {
        let exponent = -b.get(n)?;
        if exponent.is_zero() {
            continue;
        }
        let factor = one_minus_power(n as usize, &exponent, order);
        coeffs = mul_by_sparse(&coeffs, n as usize, &factor);
    }
    RationalSeries::from_integers(coeffs)
}

/// Recover the exponents of an integer-coefficient Euler product by
/// inductive peeling: after the exponents below n are stripped, the
/// coefficient of `x^n` is the next exponent `c_n`, and multiplying by
/// `(1 - x^n)^{c_n}` clears it. Requires constant term 1; fractional input
/// coefficients are rejected.
pub fn euler_product_exponents(series: &RationalSeries) -> Result<IntegerSequence> {
    if !series.constant_term().is_one() {
        return Err(Error::ConstantTerm {
            expected: "1".into(),
            found: series.constant_term().to_string(),
        });
    }
    let coeffs = series.to_integer_coefficients()?;
    let n_terms = coeffs.len() - 1;
    if n_terms == 0 {
        return Err(Error::InvalidArgument(
            "series must carry at least one coefficient beyond the constant".into(),
        ));
    }
    let order = coeffs.len();
    let mut stripped = coeffs;
    let mut exponents = Vec::with_capacity(n_terms);
    for n in 1..=n_terms {
        let c = stripped[n].clone();
        if !c.is_zero() {
            let factor = one_minus_power(n, &c, order);
            stripped = mul_by_sparse(&stripped, n, &factor);
        }
        debug_assert!(stripped[1..=n].iter().all(|v| v.is_zero()));
        exponents.push(c);
    }
    IntegerSequence::new(1, exponents)
}
