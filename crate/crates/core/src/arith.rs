//! Classical arithmetic functions, the divisor-sum transform, and exact
//! log-combination arithmetic.
//!
//! Factorization is plain trial division: every argument in this crate is
//! desk scale (a few thousand at most). The von Mangoldt function is never
//! evaluated as a real number; identities involving `log` are checked in the
//! free abelian group on primes via [`LogCombination`], so equality of both
//! sides is decided exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

fn check_positive(m: usize) {
    assert!(m >= 1, "argument must be a positive integer");
}

/// Prime factorization `m = prod p_i^{c_i}` with ascending primes.
pub fn factorize(mut m: usize) -> Vec<(usize, u32)> {
    check_positive(m);
    let mut out = Vec::new();
    let mut p = 2usize;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut c = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                c += 1;
            }
            out.push((p, c));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// All positive divisors of `m`, ascending.
pub fn divisors(m: usize) -> Vec<usize> {
    check_positive(m);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1usize;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Möbius function: 0 if `m` has a squared prime factor, otherwise
/// `(-1)^(number of distinct prime factors)`.
pub fn mobius(m: usize) -> i64 {
    let f = factorize(m);
    if f.iter().any(|&(_, c)| c > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Liouville function `(-1)^Omega(m)`, counting prime factors with
/// multiplicity.
pub fn liouville(m: usize) -> i64 {
    let omega: u32 = factorize(m).iter().map(|&(_, c)| c).sum();
    if omega.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler's totient: the number of `1 <= j <= m` coprime to `m`.
pub fn totient(m: usize) -> usize {
    let mut r = m;
    for (p, _) in factorize(m) {
        r = r / p * (p - 1);
    }
    r
}

/// Number of positive divisors of `m`.
pub fn tau(m: usize) -> usize {
    factorize(m).iter().map(|&(_, c)| c as usize + 1).product()
}

/// Sum of the `alpha`-th powers of the divisors of `m`; `sigma(0, m)` is the
/// divisor count.
pub fn sigma(alpha: u32, m: usize) -> BigInt {
    divisors(m)
        .into_iter()
        .map(|d| BigInt::from(d).pow(alpha))
        .sum()
}

/// Writes `m = p^c` with `p` prime and `c >= 1` when possible; `1` and
/// numbers with more than one prime factor return `None`.
pub fn prime_power_decompose(m: usize) -> Option<(usize, u32)> {
    let f = factorize(m);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// An arithmetic function `A(m)` named by kind, so verification reports can
/// say which substitution they checked. User-supplied functions go through
/// [`divisor_sum_with`] instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithmeticFunctionSpec {
    /// `A(m) = floor(1/m)`: 1 at `m = 1`, 0 elsewhere.
    UnitFloor,
    Mobius,
    /// The constant function `A(m) = 1`.
    One,
    Liouville,
    /// `A(m) = m^alpha`.
    Power(u32),
    /// Not integer valued; see [`log_expand`].
    VonMangoldt,
    Totient,
}

impl ArithmeticFunctionSpec {
    /// `A(m)` as an exact integer.
    ///
    /// Panics for [`ArithmeticFunctionSpec::VonMangoldt`], whose values are
    /// integer multiples of `log p` rather than integers; use [`log_expand`]
    /// and the log-combination identity path for that case.
    pub fn eval(&self, m: usize) -> BigInt {
        check_positive(m);
        match self {
            ArithmeticFunctionSpec::UnitFloor => {
                if m == 1 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            ArithmeticFunctionSpec::Mobius => BigInt::from(mobius(m)),
            ArithmeticFunctionSpec::One => BigInt::one(),
            ArithmeticFunctionSpec::Liouville => BigInt::from(liouville(m)),
            ArithmeticFunctionSpec::Power(alpha) => BigInt::from(m).pow(*alpha),
            ArithmeticFunctionSpec::VonMangoldt => {
                panic!("von Mangoldt is not integer valued; use log_expand")
            }
            ArithmeticFunctionSpec::Totient => BigInt::from(totient(m)),
        }
    }

    pub fn name(&self) -> String {
        match self {
            ArithmeticFunctionSpec::UnitFloor => "unit-floor".into(),
            ArithmeticFunctionSpec::Mobius => "mobius".into(),
            ArithmeticFunctionSpec::One => "one".into(),
            ArithmeticFunctionSpec::Liouville => "liouville".into(),
            ArithmeticFunctionSpec::Power(alpha) => format!("power({alpha})"),
            ArithmeticFunctionSpec::VonMangoldt => "von-mangoldt".into(),
            ArithmeticFunctionSpec::Totient => "totient".into(),
        }
    }
}

/// Divisor-sum transform `B(m) = sum_{d|m} A(d)`.
///
/// Panics for the von Mangoldt kind: its divisor sum is `log m`, not an
/// integer — expand it with [`log_expand`] instead.
pub fn divisor_sum(a: &ArithmeticFunctionSpec, m: usize) -> BigInt {
    assert!(
        *a != ArithmeticFunctionSpec::VonMangoldt,
        "the divisor sum of von Mangoldt is log m; use log_expand"
    );
    divisor_sum_with(|d| a.eval(d), m)
}

/// Divisor-sum transform for an arbitrary integer-valued function.
pub fn divisor_sum_with<F: Fn(usize) -> BigInt>(a: F, m: usize) -> BigInt {
    check_positive(m);
    divisors(m).into_iter().map(a).sum()
}

/// An element of the free abelian group on primes: a formal sum
/// `sum c_p * log p` with exact integer coefficients. Zero coefficients are
/// never stored, so map equality decides "equal as real numbers" exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LogCombination {
    terms: BTreeMap<usize, BigInt>,
}

impl LogCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `log p` (zero when absent).
    pub fn coefficient(&self, p: usize) -> BigInt {
        self.terms.get(&p).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `c * log p`, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, p: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    /// Adds `scale * other` componentwise.
    pub fn add_scaled(&mut self, other: &Self, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for (&p, c) in &other.terms {
            self.add_term(p, &(c * scale));
        }
    }

    /// Terms in ascending prime order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.terms.iter().map(|(&p, c)| (p, c))
    }
}

impl fmt::Display for LogCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == &BigInt::one() {
                write!(f, "log({p})")?;
            } else {
                write!(f, "{c}*log({p})")?;
            }
        }
        Ok(())
    }
}

/// `log m` as an exact log-combination: the prime-factorization exponents of
/// `m`, so `log_expand(12) = 2*log(2) + log(3)` and `log_expand(1) = 0`.
pub fn log_expand(m: usize) -> LogCombination {
    check_positive(m);
    let mut lc = LogCombination::new();
    for (p, c) in factorize(m) {
        lc.add_term(p, &BigInt::from(c));
    }
    lc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn liouville_values() {
        assert_eq!(liouville(1), 1);
        assert_eq!(liouville(8), -1);
        assert_eq!(liouville(36), 1);
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(8), 4);
        assert_eq!(totient(11), 10);
    }

    #[test]
    fn tau_and_sigma_values() {
        assert_eq!(tau(12), 6);
        assert_eq!(sigma(1, 6), BigInt::from(12));
        for m in 1..=100 {
            assert_eq!(sigma(0, m), BigInt::from(tau(m)), "m={m}");
        }
    }

    #[test]
    fn prime_power_decompose_values() {
        assert_eq!(prime_power_decompose(8), Some((2, 3)));
        assert_eq!(prime_power_decompose(1), None);
        assert_eq!(prime_power_decompose(12), None);
        assert_eq!(prime_power_decompose(11), Some((11, 1)));
    }

    #[test]
    fn divisor_sum_examples() {
        use ArithmeticFunctionSpec as A;
        assert_eq!(divisor_sum(&A::Mobius, 6), BigInt::zero());
        assert_eq!(divisor_sum(&A::Mobius, 1), BigInt::one());
        assert_eq!(divisor_sum(&A::One, 12), BigInt::from(6));
        assert_eq!(divisor_sum(&A::Liouville, 9), BigInt::one());
        assert_eq!(divisor_sum(&A::Liouville, 8), BigInt::zero());
    }

    #[test]
    #[should_panic(expected = "use log_expand")]
    fn divisor_sum_rejects_von_mangoldt() {
        let _ = divisor_sum(&ArithmeticFunctionSpec::VonMangoldt, 6);
    }

    #[test]
    fn mobius_divisor_sum_is_unit_floor() {
        for m in 1..=500 {
            let want = if m == 1 { BigInt::one() } else { BigInt::zero() };
            assert_eq!(divisor_sum(&ArithmeticFunctionSpec::Mobius, m), want, "m={m}");
        }
    }

    #[test]
    fn totient_divisor_sum_recovers_m() {
        for m in 1..=500 {
            assert_eq!(
                divisor_sum(&ArithmeticFunctionSpec::Totient, m),
                BigInt::from(m),
                "m={m}"
            );
        }
    }

    #[test]
    fn liouville_divisor_sum_detects_squares() {
        for m in 1..=500usize {
            let is_square = {
                let r = (m as f64).sqrt() as usize;
                (r.saturating_sub(1)..=r + 1).any(|x| x * x == m)
            };
            let want = if is_square { BigInt::one() } else { BigInt::zero() };
            assert_eq!(divisor_sum(&ArithmeticFunctionSpec::Liouville, m), want, "m={m}");
        }
    }

    #[test]
    fn log_expand_values() {
        let twelve = log_expand(12);
        assert_eq!(twelve.coefficient(2), BigInt::from(2));
        assert_eq!(twelve.coefficient(3), BigInt::one());
        assert_eq!(twelve.coefficient(5), BigInt::zero());
        assert!(log_expand(1).is_zero());
        assert_eq!(log_expand(11).coefficient(11), BigInt::one());
    }

    #[test]
    fn log_expand_is_multiplicative() {
        for a in 1..=100usize {
            for b in 1..=100usize {
                let mut sum = log_expand(a);
                sum.add_scaled(&log_expand(b), &BigInt::one());
                assert_eq!(sum, log_expand(a * b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn log_combination_cancellation() {
        let mut lc = log_expand(8); // 3*log(2)
        lc.add_scaled(&log_expand(8), &BigInt::from(-1));
        assert!(lc.is_zero());
        assert_eq!(lc.to_string(), "0");
        assert_eq!(log_expand(12).to_string(), "2*log(2) + log(3)");
    }

    #[test]
    fn eval_matches_named_functions() {
        use ArithmeticFunctionSpec as A;
        for m in 1..=60 {
            assert_eq!(A::Mobius.eval(m), BigInt::from(mobius(m)));
            assert_eq!(A::Power(2).eval(m), BigInt::from(m * m));
            assert_eq!(A::UnitFloor.eval(m), BigInt::from((m == 1) as u32));
        }
    }
}
