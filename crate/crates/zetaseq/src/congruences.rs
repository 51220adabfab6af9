//! Congruence checkers: Kummer congruences, the three equivalent
//! pre-realizability criteria, the Puri-Ward realizability criterion, and
//! the closure constructions (pointwise products, geometric quotients).
//!
//! Every check returns a [`CongruenceReport`] whose violations carry full
//! witness data (indices, modulus, residue), so a failure can be re-checked
//! independently of this code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sequences::{is_prime, primes_up_to, IntegerSequence};
use crate::transforms::{
    euler_product_exponents, orbit_counts, zeta_coefficients,
};

/// Which congruence family a report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Alternating binomial sums modulo p^min(m, ne) (Kummer congruences).
    Kummer,
    /// Orbit counts `b_n` are integers (pre-realizability via divisor sums).
    OrbitIntegrality,
    /// Zeta coefficients `A_n` are integers (pre-realizability via the
    /// exponential recurrence).
    ZetaIntegrality,
    /// `a_{n p^alpha} = a_{n p^(alpha-1)} mod p^alpha` for all admissible
    /// prime powers (pre-realizability via congruences).
    PrimePowerCongruence,
    /// Orbit counts are nonnegative integers (Puri-Ward realizability).
    Realizability,
    /// Prime-power congruences for a shifted window of the sequence.
    ShiftedPrerealizability,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Kummer => "kummer",
            CheckKind::OrbitIntegrality => "orbit-integrality",
            CheckKind::ZetaIntegrality => "zeta-integrality",
            CheckKind::PrimePowerCongruence => "prime-power-congruence",
            CheckKind::Realizability => "realizability",
            CheckKind::ShiftedPrerealizability => "shifted-prerealizability",
        }
    }
}

/// One failed congruence, reproducible from its own data.
///
/// `indices` are the sequence (or coefficient) indices involved, `modulus`
/// the modulus of the stated congruence and `residue` the nonzero value
/// observed. Sign violations in realizability checks use modulus 1 and
/// store the offending negative orbit count as the residue; integrality
/// violations of rational values use the denominator as the modulus and
/// the numerator reduced by it as the residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<u64>,
    pub modulus: BigInt,
    pub residue: BigInt,
}

/// Structured pass/fail evidence for one check run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub kind: CheckKind,
    /// Human-readable description of the examined range and parameters.
    pub scope: String,
    pub violations: Vec<Violation>,
}

impl CongruenceReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Parameters of one Kummer congruence instance
/// `sum_s (-1)^s C(n,s) a_{m+sw} = 0 mod (p^m, p^(ne))`.
///
/// Construction validates the theorem's hypothesis
/// `p^(e-1) (p-1) | w`; `start` (m) may be 0, which the checker treats as
/// a vacuous pass rather than guessing a modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KummerParams {
    /// The prime p.
    pub prime: u64,
    /// The exponent e >= 1 entering the modulus p^(ne).
    pub exponent: u32,
    /// The index step w.
    pub step: u64,
    /// The difference order n (number of finite differences).
    pub order: u32,
    /// The base index m.
    pub start: u64,
}

impl KummerParams {
    pub fn new(prime: u64, exponent: u32, step: u64, order: u32, start: u64) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::InvalidArgument(format!("{prime} is not prime")));
        }
        if exponent == 0 {
            return Err(Error::InvalidArgument("exponent e must be >= 1".into()));
        }
        if step == 0 {
            return Err(Error::InvalidArgument("step w must be >= 1".into()));
        }
        let mut required: u128 = (prime - 1) as u128;
        for _ in 1..exponent {
            required = required.saturating_mul(prime as u128);
        }
        if required == 0 || (step as u128) % required != 0 {
            return Err(Error::InvalidArgument(format!(
                "p^(e-1)(p-1) = {required} must divide w = {step}"
            )));
        }
        Ok(Self {
            prime,
            exponent,
            step,
            order,
            start,
        })
    }

    /// The modulus p^min(m, ne): in the integers the ideal (p^m, p^(ne)) is
    /// generated by the smaller power.
    pub fn modulus(&self) -> BigInt {
        let e = (self.start).min(self.order as u64 * self.exponent as u64);
        BigInt::from(self.prime).pow(e as u32)
    }
}

/// Evaluate one Kummer congruence exactly for a sequence indexed from 1.
///
/// `order = 0` or `start = 0` passes vacuously (the modulus degenerates
/// to 1).
pub fn kummer_check(a: &IntegerSequence, params: &KummerParams) -> Result<CongruenceReport> {
    if a.first_index() != 1 {
        return Err(Error::WrongOffset {
            expected: 1,
            found: a.first_index(),
        });
    }
    let scope = format!(
        "p={} e={} w={} n={} m={}",
        params.prime, params.exponent, params.step, params.order, params.start
    );
    let mut violations = Vec::new();
    if params.order > 0 && params.start > 0 {
        let needed = params.start + params.order as u64 * params.step;
        if a.last_index() < needed {
            return Err(Error::InsufficientLength {
                needed,
                have: a.last_index(),
            });
        }
        let modulus = params.modulus();
        let mut sum = BigInt::zero();
        let mut binom = BigInt::one();
        let mut indices = Vec::with_capacity(params.order as usize + 1);
        for s in 0..=params.order as u64 {
            let index = params.start + s * params.step;
            indices.push(index);
            let term = &binom * a.get(index)?;
            if s % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            binom = binom * (params.order as u64 - s) / (s + 1);
        }
        let residue = sum.mod_floor(&modulus);
        if !residue.is_zero() {
            violations.push(Violation {
                indices,
                modulus,
                residue,
            });
        }
    }
    Ok(CongruenceReport {
        kind: CheckKind::Kummer,
        scope,
        violations,
    })
}

/// Pre-realizability criterion (a): every orbit count
/// `b_n = (sum_{d|n} mu(n/d) a_d) / n` is an integer.
pub fn prerealizable_via_orbit_counts(
    a: &IntegerSequence,
    n_terms: usize,
) -> Result<CongruenceReport> {
    let b = orbit_counts(a, n_terms)?;
    let mut violations = Vec::new();
    for n in 1..=n_terms as u64 {
        let value = b.value(n)?;
        if !value.is_integer() {
            let modulus = BigInt::from(n);
            // numerator of the unreduced b_n is the divisor sum itself
            let divisor_sum =
                (value * num_rational::BigRational::from_integer(modulus.clone())).to_integer();
            violations.push(Violation {
                indices: vec![n],
                modulus: modulus.clone(),
                residue: divisor_sum.mod_floor(&modulus),
            });
        }
    }
    Ok(CongruenceReport {
        kind: CheckKind::OrbitIntegrality,
        scope: format!("b_1..b_{n_terms}"),
        violations,
    })
}

/// Pre-realizability criterion (b): every zeta coefficient `A_0..A_N` is an
/// integer. Violations carry the fractional coefficient's denominator as
/// the modulus.
pub fn prerealizable_via_zeta_coefficients(
    a: &IntegerSequence,
    n_terms: usize,
) -> Result<CongruenceReport> {
    let series = zeta_coefficients(a, n_terms)?;
    let mut violations = Vec::new();
    for (k, c) in series.coefficients().iter().enumerate() {
        if !c.is_integer() {
            violations.push(Violation {
                indices: vec![k as u64],
                modulus: c.denom().clone(),
                residue: c.numer().mod_floor(c.denom()),
            });
        }
    }
    Ok(CongruenceReport {
        kind: CheckKind::ZetaIntegrality,
        scope: format!("A_0..A_{n_terms}"),
        violations,
    })
}

/// Pre-realizability criterion (c): for every prime p, alpha >= 1 and n
/// coprime to p with `n p^alpha <= N`,
/// `a_{n p^alpha} = a_{n p^(alpha-1)} mod p^alpha`.
///
/// N = 1 passes vacuously (no admissible prime powers).
pub fn prerealizable_via_congruences(
    a: &IntegerSequence,
    n_terms: usize,
) -> Result<CongruenceReport> {
    if a.first_index() != 1 {
        return Err(Error::WrongOffset {
            expected: 1,
            found: a.first_index(),
        });
    }
    if n_terms == 0 {
        return Err(Error::InvalidArgument(
            "check needs at least one term".into(),
        ));
    }
    if (a.last_index()) < n_terms as u64 {
        return Err(Error::InsufficientLength {
            needed: n_terms as u64,
            have: a.last_index(),
        });
    }
    let limit = n_terms as u64;
    let mut violations = Vec::new();
    for p in primes_up_to(limit) {
        let mut power = p; // p^alpha
        while power <= limit {
            let modulus = BigInt::from(power);
            for n in 1..=limit / power {
                if n % p == 0 {
                    continue;
                }
                let hi = n * power;
                let lo = n * (power / p);
                let diff = a.get(hi)? - a.get(lo)?;
                let residue = diff.mod_floor(&modulus);
                if !residue.is_zero() {
                    violations.push(Violation {
                        indices: vec![hi, lo],
                        modulus: modulus.clone(),
                        residue,
                    });
                }
            }
            match power.checked_mul(p) {
                Some(next) => power = next,
                None => break,
            }
        }
    }
    Ok(CongruenceReport {
        kind: CheckKind::PrimePowerCongruence,
        scope: format!("indices <= {n_terms}"),
        violations,
    })
}

/// Puri-Ward realizability: every orbit count is a nonnegative integer.
/// Nonnegativity applies to the orbit counts, never to the sequence itself.
pub fn realizability_check(a: &IntegerSequence, n_terms: usize) -> Result<CongruenceReport> {
    let b = orbit_counts(a, n_terms)?;
    let mut violations = Vec::new();
    for n in 1..=n_terms as u64 {
        let value = b.value(n)?;
        if !value.is_integer() {
            let modulus = BigInt::from(n);
            let divisor_sum =
                (value * num_rational::BigRational::from_integer(modulus.clone())).to_integer();
            violations.push(Violation {
                indices: vec![n],
                modulus: modulus.clone(),
                residue: divisor_sum.mod_floor(&modulus),
            });
        } else if value.is_negative() {
            violations.push(Violation {
                indices: vec![n],
                modulus: BigInt::one(),
                residue: value.to_integer(),
            });
        }
    }
    Ok(CongruenceReport {
        kind: CheckKind::Realizability,
        scope: format!("b_1..b_{n_terms}"),
        violations,
    })
}

/// Prime-power congruences for the window `a_{shift+1} .. a_{shift+N}`
/// relabeled to start at 1. Violation indices refer to the shifted frame.
pub fn shifted_prerealizability_check(
    a: &IntegerSequence,
    shift: u64,
    n_terms: usize,
) -> Result<CongruenceReport> {
    let window = a.shifted(shift, n_terms)?;
    let inner = prerealizable_via_congruences(&window, n_terms)?;
    Ok(CongruenceReport {
        kind: CheckKind::ShiftedPrerealizability,
        scope: format!("shift={shift}, indices <= {n_terms}"),
        violations: inner.violations,
    })
}

/// Pointwise product of two sequences over identical index ranges (the
/// fixed-point counts of a product system).
pub fn pointwise_product(
    a: &IntegerSequence,
    b: &IntegerSequence,
) -> Result<IntegerSequence> {
    if a.first_index() != b.first_index() || a.len() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "index ranges differ: [{},{}] vs [{},{}]",
            a.first_index(),
            a.last_index(),
            b.first_index(),
            b.last_index()
        )));
    }
    let values = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| x * y)
        .collect();
    IntegerSequence::new(a.first_index(), values)
}

/// The sequence `base^n / div` for n = 1..N, which is realizable when
/// `div | base` and every prime of `base` also divides `base/div`. The
/// hypothesis is validated and the offending prime reported on failure.
pub fn geometric_quotient(base: u64, div: u64, n_terms: usize) -> Result<IntegerSequence> {
    if base == 0 || div == 0 {
        return Err(Error::InvalidArgument(
            "base and div must be positive".into(),
        ));
    }
    if n_terms == 0 {
        return Err(Error::InvalidArgument(
            "sequence needs at least one term".into(),
        ));
    }
    if base % div != 0 {
        return Err(Error::InvalidArgument(format!(
            "div = {div} does not divide base = {base}"
        )));
    }
    let quotient = base / div;
    let mut rest = base;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            if quotient % p != 0 {
                return Err(Error::QuotientHypothesis { prime: p });
            }
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 && quotient % rest != 0 {
        return Err(Error::QuotientHypothesis { prime: rest });
    }
    let big_base = BigInt::from(base);
    let big_div = BigInt::from(div);
    let mut power = BigInt::one();
    let mut values = Vec::with_capacity(n_terms);
    for n in 1..=n_terms as u64 {
        power *= &big_base;
        let (q, r) = power.div_rem(&big_div);
        if !r.is_zero() {
            return Err(Error::NonIntegralResult {
                context: "geometric quotient",
                index: n,
            });
        }
        values.push(q);
    }
    IntegerSequence::new(1, values)
}

/// One disagreement found by [`equivalence_sweep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepMismatch {
    pub trial: u64,
    pub values: Vec<i64>,
    pub orbit_verdict: bool,
    pub zeta_verdict: bool,
    pub congruence_verdict: bool,
    /// For integral trials: did the peeled product exponents equal the
    /// orbit counts?
    pub exponents_match: Option<bool>,
}

/// Result of a randomized agreement sweep over the three pre-realizability
/// criteria. Reproducible from `seed` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub trials: u64,
    pub max_len: usize,
    pub seed: u64,
    pub mismatches: Vec<SweepMismatch>,
}

impl SweepOutcome {
    pub fn is_pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Run `trials` random integer prefixes (length 1..=max_len, entries in
/// [-9, 9], ChaCha8 stream seeded by `seed`) through all three
/// pre-realizability criteria and record every disagreement. On integral
/// trials the Euler-product exponents are also peeled and compared against
/// the orbit counts.
pub fn equivalence_sweep(trials: u64, max_len: usize, seed: u64) -> Result<SweepOutcome> {
    if max_len == 0 {
        return Err(Error::InvalidArgument("max_len must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for trial in 0..trials {
        let len = rng.gen_range(1..=max_len);
        let values: Vec<i64> = (0..len).map(|_| rng.gen_range(-9i64..=9)).collect();
        let a = IntegerSequence::from_i64(1, &values)?;
        let orbit = prerealizable_via_orbit_counts(&a, len)?;
        let zeta = prerealizable_via_zeta_coefficients(&a, len)?;
        let congruence = prerealizable_via_congruences(&a, len)?;
        let verdicts = (orbit.is_pass(), zeta.is_pass(), congruence.is_pass());
        let mut exponents_match = None;
        if verdicts.0 && verdicts.1 {
            let series = zeta_coefficients(&a, len)?;
            let peeled = euler_product_exponents(&series)?;
            let counts = orbit_counts(&a, len)?.to_integer_sequence()?;
            exponents_match = Some(peeled == counts);
        }
        let agree = verdicts.0 == verdicts.1 && verdicts.1 == verdicts.2;
        if !agree || exponents_match == Some(false) {
            mismatches.push(SweepMismatch {
                trial,
                values,
                orbit_verdict: verdicts.0,
                zeta_verdict: verdicts.1,
                congruence_verdict: verdicts.2,
                exponents_match,
            });
        }
    }
    Ok(SweepOutcome {
        trials,
        max_len,
        seed,
        mismatches,
    })
}
