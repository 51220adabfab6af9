//! Exact sequence containers and generators for the classical sequences
//! everything else consumes: Euler, Bernoulli and tangent numbers, the
//! Moebius function, the divisor sum, p-adic valuations and binary digit
//! sums.
//!
//! All values are arbitrary-precision and exact; nothing in this crate
//! ever rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A finite prefix of an integer sequence, indexed from `offset` (0 or 1).
///
/// Indexing outside the stored range is a reported error, never a silent
/// extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSequence {
    offset: u64,
    values: Vec<BigInt>,
}

impl IntegerSequence {
    /// Wrap a nonempty list of values starting at index `offset` (0 or 1).
    pub fn new(offset: u64, values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "sequence must contain at least one value".into(),
            ));
        }
        if offset > 1 {
            return Err(Error::InvalidArgument(format!(
                "sequence offset must be 0 or 1, got {offset}"
            )));
        }
        Ok(Self { offset, values })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(offset: u64, values: &[i64]) -> Result<Self> {
        Self::new(offset, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    /// First valid index.
    pub fn first_index(&self) -> u64 {
        self.offset
    }

    /// Last valid index.
    pub fn last_index(&self) -> u64 {
        self.offset + self.values.len() as u64 - 1
    }

    /// Value at sequence index `index` (honoring the offset).
    pub fn get(&self, index: u64) -> Result<&BigInt> {
        if index < self.first_index() || index > self.last_index() {
            return Err(Error::IndexOutOfRange {
                index,
                lo: self.first_index(),
                hi: self.last_index(),
            });
        }
        Ok(&self.values[(index - self.offset) as usize])
    }

    /// The stored values in index order.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Pointwise absolute value, same indexing.
    pub fn abs(&self) -> Self {
        Self {
            offset: self.offset,
            values: self.values.iter().map(|v| v.abs()).collect(),
        }
    }

    /// The window `a_{shift+1} .. a_{shift+n_terms}` relabeled to start at
    /// index 1. `shifted(0, n)` truncates an index-1 sequence to its first
    /// `n` terms, or drops the index-0 entry of an index-0 sequence.
    pub fn shifted(&self, shift: u64, n_terms: usize) -> Result<Self> {
        if n_terms == 0 {
            return Err(Error::InvalidArgument(
                "shifted window must keep at least one term".into(),
            ));
        }
        let needed = shift + n_terms as u64;
        if shift + 1 < self.first_index() || needed > self.last_index() {
            return Err(Error::InsufficientLength {
                needed,
                have: self.last_index(),
            });
        }
        let lo = (shift + 1 - self.offset) as usize;
        Ok(Self {
            offset: 1,
            values: self.values[lo..lo + n_terms].to_vec(),
        })
    }
}

/// A finite prefix of a rational sequence in lowest terms, indexed from
/// `offset` (0 or 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSequence {
    offset: u64,
    values: Vec<BigRational>,
}

impl RationalSequence {
    pub fn new(offset: u64, values: Vec<BigRational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "sequence must contain at least one value".into(),
            ));
        }
        if offset > 1 {
            return Err(Error::InvalidArgument(format!(
                "sequence offset must be 0 or 1, got {offset}"
            )));
        }
        Ok(Self { offset, values })
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn first_index(&self) -> u64 {
        self.offset
    }

    pub fn last_index(&self) -> u64 {
        self.offset + self.values.len() as u64 - 1
    }

    pub fn get(&self, index: u64) -> Result<&BigRational> {
        if index < self.first_index() || index > self.last_index() {
            return Err(Error::IndexOutOfRange {
                index,
                lo: self.first_index(),
                hi: self.last_index(),
            });
        }
        Ok(&self.values[(index - self.offset) as usize])
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// True when every stored value has denominator 1.
    pub fn all_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Convert to an integer sequence; errors on the first fractional value.
    pub fn to_integer_sequence(&self) -> Result<IntegerSequence> {
        let mut out = Vec::with_capacity(self.values.len());
        for (i, v) in self.values.iter().enumerate() {
            if !v.is_integer() {
                return Err(Error::NonIntegerCoefficient {
                    index: self.offset as usize + i,
                    value: v.to_string(),
                });
            }
            out.push(v.to_integer());
        }
        IntegerSequence::new(self.offset, out)
    }
}

/// Euler numbers `E_0, E_2, ..., E_{2*count}` (index n holds `E_{2n}`).
///
/// Computed by the integer convolution forced by `cosh(x) * sum E_n x^n/n! = 1`:
/// `sum_k C(2n,2k) E_{2k} = 0` for n >= 1, with `E_0 = 1`. No rational
/// arithmetic is involved.
pub fn euler_numbers(count: usize) -> IntegerSequence {
    let mut values: Vec<BigInt> = Vec::with_capacity(count + 1);
    values.push(BigInt::one());
    for n in 1..=count {
        // Walk C(2n, 2k) for k = 0..n-1 two multiplicative steps at a time.
        let mut binom = BigInt::one(); // C(2n, 0)
        let mut sum = BigInt::zero();
        for k in 0..n {
            sum += &binom * &values[k];
            let j = 2 * k as u64;
            let m = 2 * n as u64;
            binom = binom * (m - j) / (j + 1);
            binom = binom * (m - j - 1) / (j + 2);
        }
        values.push(-sum);
    }
    IntegerSequence { offset: 0, values }
}

/// `|E_2|, |E_4|, ..., |E_{2*n_terms}|` indexed from 1: the fixed-point
/// count sequence whose realizability this crate verifies.
pub fn euler_abs(n_terms: usize) -> Result<IntegerSequence> {
    euler_numbers(n_terms).shifted(0, n_terms).map(|s| s.abs())
}

/// Bernoulli numbers `B_0 .. B_count` as exact rationals, with the
/// `B_1 = -1/2` convention (only even indices feed the tangent formula,
/// so the convention does not matter downstream).
pub fn bernoulli_numbers(count: usize) -> RationalSequence {
    let mut values: Vec<BigRational> = Vec::with_capacity(count + 1);
    values.push(BigRational::one());
    for n in 1..=count {
        // sum_{k=0}^{n} C(n+1,k) B_k = 0  =>  B_n = -sum_{k<n} C(n+1,k) B_k / C(n+1,n)
        let mut binom = BigInt::one(); // C(n+1, 0)
        let mut sum = BigRational::zero();
        for (k, b) in values.iter().enumerate() {
            sum += BigRational::from_integer(binom.clone()) * b;
            binom = binom * (n as u64 + 1 - k as u64) / (k as u64 + 1);
        }
        values.push(-sum / BigRational::from_integer(binom));
    }
    RationalSequence { offset: 0, values }
}

/// Tangent numbers `T_1, T_3, ..., T_{2*count+1}` (index n holds `T_{2n+1}`),
/// via `T_{2n+1} = (-1)^n 4^{n+1} (4^{n+1} - 1) B_{2n+2} / (2n+2)`.
///
/// The formula provably yields integers; a fractional intermediate is an
/// internal error.
pub fn tangent_numbers(count: usize) -> Result<IntegerSequence> {
    let bernoulli = bernoulli_numbers(2 * count + 2);
    let mut values = Vec::with_capacity(count + 1);
    for n in 0..=count {
        let pow = BigInt::one() << (2 * (n + 1)); // 4^{n+1}
        let factor = &pow * (&pow - 1);
        let mut t = BigRational::from_integer(factor) * bernoulli.get(2 * n as u64 + 2)?
            / BigRational::from_integer(BigInt::from(2 * n + 2));
        if n % 2 == 1 {
            t = -t;
        }
        if !t.is_integer() {
            return Err(Error::NonIntegralResult {
                context: "tangent number",
                index: 2 * n as u64 + 1,
            });
        }
        values.push(t.to_integer());
    }
    IntegerSequence::new(0, values)
}

/// Moebius function: `(-1)^k` on squarefree products of k distinct primes,
/// 0 otherwise.
pub fn mobius(n: u64) -> Result<i32> {
    if n == 0 {
        return Err(Error::InvalidArgument("mobius is defined for n >= 1".into()));
    }
    let mut m = n;
    let mut sign = 1;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Sum of the positive divisors of n.
pub fn sigma(n: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidArgument("sigma is defined for n >= 1".into()));
    }
    let mut sum: u128 = 0;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            sum += d as u128;
            let q = n / d;
            if q != d {
                sum += q as u128;
            }
        }
        d += 1;
    }
    Ok(sum)
}

/// p-adic valuation: the largest a with p^a dividing m.
///
/// m = 0 is rejected (the valuation would be infinite) and p must be prime.
pub fn padic_valuation(m: &BigInt, p: u64) -> Result<u64> {
    if m.is_zero() {
        return Err(Error::InvalidArgument(
            "valuation of 0 is infinite".into(),
        ));
    }
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if p == 2 {
        return Ok(m.trailing_zeros().unwrap_or(0));
    }
    let p = BigInt::from(p);
    let mut m = m.abs();
    let mut a = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Ok(a);
        }
        m = q;
        a += 1;
    }
}

/// Binary digit sum s(n).
pub fn binary_digit_sum(n: u64) -> u32 {
    n.count_ones()
}

/// Deterministic trial-division primality test for machine-word inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes up to and including `limit`, ascending.
pub(crate) fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Sorted list of the positive divisors of n.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn euler_first_values() {
        let e = euler_numbers(6);
        let expect = [1i64, -1, 5, -61, 1385, -50521, 2702765];
        for (n, want) in expect.iter().enumerate() {
            assert_eq!(e.get(n as u64).unwrap(), &big(*want));
        }
        assert_eq!(euler_numbers(0).values(), &[big(1)]);
    }

    #[test]
    fn euler_abs_index_twelve() {
        // |E_12| = 2702765
        let e = euler_abs(6).unwrap();
        assert_eq!(e.get(6).unwrap(), &big(2702765));
        assert_eq!(e.first_index(), 1);
    }

    #[test]
    fn euler_convolution_sign_and_parity() {
        let e = euler_numbers(40);
        for n in 1..=40u64 {
            // sum_k C(2n,2k) E_2k = 0
            let mut binom = BigInt::one();
            let mut sum = BigInt::zero();
            for k in 0..=n {
                sum += &binom * e.get(k).unwrap();
                if k < n {
                    let j = 2 * k;
                    binom = binom * (2 * n - j) / (j + 1);
                    binom = binom * (2 * n - j - 1) / (j + 2);
                }
            }
            assert!(sum.is_zero(), "convolution identity fails at n={n}");
        }
        for n in 0..=40u64 {
            let v = e.get(n).unwrap();
            assert!(v.is_odd(), "E_{} even", 2 * n);
            assert_eq!(v.is_negative(), n % 2 == 1, "sign of E_{}", 2 * n);
        }
    }

    #[test]
    fn bernoulli_first_values() {
        let b = bernoulli_numbers(4);
        let r = |n: i64, d: i64| BigRational::new(big(n), big(d));
        assert_eq!(b.get(0).unwrap(), &r(1, 1));
        assert_eq!(b.get(1).unwrap(), &r(-1, 2));
        assert_eq!(b.get(2).unwrap(), &r(1, 6));
        assert_eq!(b.get(3).unwrap(), &r(0, 1));
        assert_eq!(b.get(4).unwrap(), &r(-1, 30));
    }

    #[test]
    fn tangent_numbers_match_known_prefix() {
        let t = tangent_numbers(4).unwrap();
        // T_1, T_3, T_5, T_7, T_9
        let expect = [1i64, 2, 16, 272, 7936];
        for (n, want) in expect.iter().enumerate() {
            assert_eq!(t.get(n as u64).unwrap(), &big(*want));
        }
    }

    #[test]
    fn tangent_integrality_holds_deep() {
        let t = tangent_numbers(30).unwrap();
        assert_eq!(t.len(), 31);
    }

    #[test]
    fn mobius_values_and_errors() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(4).unwrap(), 0);
        assert_eq!(mobius(6).unwrap(), 1);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn sigma_values_and_errors() {
        assert_eq!(sigma(1).unwrap(), 1);
        assert_eq!(sigma(6).unwrap(), 12);
        assert_eq!(sigma(12).unwrap(), 28);
        assert!(sigma(0).is_err());
    }

    #[test]
    fn padic_valuation_values_and_errors() {
        assert_eq!(padic_valuation(&big(8), 2).unwrap(), 3);
        assert_eq!(padic_valuation(&big(9), 3).unwrap(), 2);
        assert_eq!(padic_valuation(&big(10572), 2).unwrap(), 2);
        assert!(padic_valuation(&big(0), 2).is_err());
        assert!(padic_valuation(&big(8), 4).is_err());
    }

    #[test]
    fn digit_sum_values() {
        assert_eq!(binary_digit_sum(0), 0);
        assert_eq!(binary_digit_sum(3), 2);
        assert_eq!(binary_digit_sum(100), 3);
    }

    #[test]
    fn indexing_outside_range_is_an_error() {
        let s = IntegerSequence::from_i64(1, &[7, 8, 9]).unwrap();
        assert!(s.get(0).is_err());
        assert!(s.get(4).is_err());
        assert_eq!(s.get(3).unwrap(), &big(9));
        assert!(IntegerSequence::new(0, vec![]).is_err());
        assert!(IntegerSequence::from_i64(2, &[1]).is_err());
    }

    #[test]
    fn shifted_relabels_and_validates() {
        let s = IntegerSequence::from_i64(1, &[10, 20, 30, 40]).unwrap();
        let w = s.shifted(1, 2).unwrap();
        assert_eq!(w.first_index(), 1);
        assert_eq!(w.values(), &[big(20), big(30)]);
        assert!(s.shifted(2, 3).is_err());
        let z = IntegerSequence::from_i64(0, &[5, 6]).unwrap();
        assert_eq!(z.shifted(0, 1).unwrap().values(), &[big(6)]);
    }

    #[test]
    fn divisor_and_prime_helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(primes_up_to(13), vec![2, 3, 5, 7, 11, 13]);
        assert!(primes_up_to(1).is_empty());
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
    }

    proptest! {
        #[test]
        fn digit_sum_floor_identity(n in 0u64..200_000) {
            // s(n) = n - sum_j floor(n / 2^j)
            let mut acc = 0u64;
            let mut j = 1u32;
            while n >> j != 0 {
                acc += n >> j;
                j += 1;
            }
            prop_assert_eq!(binary_digit_sum(n) as u64, n - acc);
        }

        #[test]
        fn digit_sum_increment_identity(n in 0u64..200_000) {
            // s(n+1) + nu_2(n+1) = s(n) + 1
            let v2 = (n + 1).trailing_zeros();
            prop_assert_eq!(
                binary_digit_sum(n + 1) + v2,
                binary_digit_sum(n) + 1
            );
        }

        #[test]
        fn mobius_is_multiplicative(a in 1u64..500, b in 1u64..500) {
            if num_integer::gcd(a, b) == 1 {
                prop_assert_eq!(
                    mobius(a * b).unwrap(),
                    mobius(a).unwrap() * mobius(b).unwrap()
                );
            }
        }

        #[test]
        fn mobius_divisor_sums_vanish(n in 2u64..2000) {
            let total: i32 = divisors(n).iter().map(|&d| mobius(d).unwrap()).sum();
            prop_assert_eq!(total, 0);
        }
    }

    #[test]
    fn mobius_divisor_sum_at_one() {
        let total: i32 = divisors(1).iter().map(|&d| mobius(d).unwrap()).sum();
        assert_eq!(total, 1);
    }
}
