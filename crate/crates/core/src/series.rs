//! Exact truncated formal power series over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] holds the coefficients of `q^0 .. q^N` for a fixed
//! truncation order `N` chosen at construction. All arithmetic is exact;
//! there is no floating point anywhere in this module. Binary operations
//! require both operands to share the same truncation order and panic
//! otherwise — mixing orders is a bug, and silently re-truncating would hide
//! off-by-truncation errors in identity checks.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients `a_0 .. a_N` of a power series truncated at order `N`.
///
/// Values are immutable after construction and safe to share between
/// threads; all operations are pure functions returning new series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The monomial `c * q^exponent`; exponents beyond `order` give zero.
    pub fn monomial(c: BigInt, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// Wrap an explicit coefficient vector `a_0 .. a_N` (order = length - 1).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant coefficient"
        );
        TruncatedSeries { coeffs }
    }

    /// Truncation order `N` (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^i`. Panics if `i` exceeds the truncation order.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// All coefficients, index = exponent.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    fn check_same_order(&self, other: &Self, op: &str) {
        assert_eq!(
            self.order(),
            other.order(),
            "cannot {op} series of different truncation orders"
        );
    }

    /// Coefficient-wise sum. Panics on mismatched truncation orders.
    pub fn add(&self, other: &Self) -> Self {
        self.check_same_order(other, "add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Coefficient-wise difference. Panics on mismatched truncation orders.
    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_order(other, "subtract");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Cauchy product `c_n = sum_{i=0}^{n} a_i * b_{n-i}`, truncated at the
    /// shared order. Panics on mismatched truncation orders.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_order(other, "multiply");
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplication by `q^k`: coefficient `i` of the result is coefficient
    /// `i - k` of `self` (zero for `i < k`). Shifting past the order yields
    /// the zero series.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        if k <= n {
            for i in 0..=n - k {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }
}

/// Binomial coefficient `C(n, k)` by the multiplicative running product,
/// dividing exactly at each step so intermediates stay small.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        debug_assert!((&acc % i).is_zero());
        acc /= i;
    }
    acc
}

/// `1 / (1 - q^k)^e` truncated at `order`: the coefficient of `q^{jk}` is
/// `C(e-1+j, j)`, all other coefficients are zero. `e = 0` gives the
/// constant 1. Panics if `k = 0`.
pub fn inv_one_minus_pow(k: usize, e: usize, order: usize) -> TruncatedSeries {
    assert!(k >= 1, "inv_one_minus_pow: k must be positive");
    if e == 0 {
        return TruncatedSeries::one(order);
    }
    let mut s = TruncatedSeries::zero(order);
    let mut c = BigInt::one(); // C(e-1, 0)
    let mut j = 0usize;
    loop {
        let idx = j * k;
        if idx > order {
            break;
        }
        s.coeffs[idx] = c.clone();
        // C(e-1+j, j) -> C(e+j, j+1)
        c *= (e + j) as u64;
        debug_assert!((&c % (j as u64 + 1)).is_zero());
        c /= j as u64 + 1;
        j += 1;
    }
    s
}

/// `prod_{m=r}^{order} 1 / (1 - q^m)^m`, the generating function of n-color
/// partitions with every part at least `r` (factors beyond the order cannot
/// affect retained coefficients). Built by iterated multiplication in
/// increasing `m`. Panics if `r = 0`.
pub fn colored_product(r: usize, order: usize) -> TruncatedSeries {
    assert!(r >= 1, "colored_product: r must be positive");
    let mut acc = TruncatedSeries::one(order);
    for m in r..=order {
        acc = acc.mul(&inv_one_minus_pow(m, m, order));
    }
    acc
}

/// `prod_{m=1}^{order} 1 / (1 - q^m)`, the ordinary partition generating
/// function truncated at `order`.
pub fn partition_product(order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for m in 1..=order {
        acc = acc.mul(&inv_one_minus_pow(m, 1, order));
    }
    acc
}

/// `q^k / (1 - q^k)` truncated at `order`: coefficient 1 at every positive
/// multiple of `k`, zero elsewhere. Panics if `k = 0`.
pub fn lambert_term(k: usize, order: usize) -> TruncatedSeries {
    assert!(k >= 1, "lambert_term: k must be positive");
    let mut s = TruncatedSeries::zero(order);
    let mut j = 1usize;
    while j * k <= order {
        s.coeffs[j * k] = BigInt::one();
        j += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_i64(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn add_cancels() {
        let a = from_i64(&[1, 1, 0]); // 1 + q
        let b = from_i64(&[1, -1, 0]); // 1 - q
        assert_eq!(a.add(&b), from_i64(&[2, 0, 0]));
    }

    #[test]
    fn add_zero_is_identity() {
        let a = from_i64(&[3, -2, 7, 0, 5]);
        assert_eq!(a.add(&TruncatedSeries::zero(4)), a);
    }

    #[test]
    fn add_doubles_pl_coefficient() {
        let pl = colored_product(1, 4);
        let doubled = pl.add(&pl);
        assert_eq!(doubled.coeff(4), &BigInt::from(26));
    }

    #[test]
    #[should_panic(expected = "different truncation orders")]
    fn add_rejects_mismatched_orders() {
        let _ = TruncatedSeries::one(3).add(&TruncatedSeries::one(4));
    }

    #[test]
    fn mul_inverse_pair_is_one() {
        let inv = inv_one_minus_pow(1, 1, 5);
        let poly = from_i64(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(inv.mul(&poly), TruncatedSeries::one(5));
    }

    #[test]
    fn mul_by_monomial_shifts() {
        let s = from_i64(&[5, 4, 3, 2, 1, 0, 0]);
        let q3 = TruncatedSeries::monomial(BigInt::one(), 3, 6);
        assert_eq!(s.mul(&q3), s.shift(3));
    }

    #[test]
    fn finite_product_gives_pl4() {
        // prod_{m=1}^{4} 1/(1-q^m)^m has coefficient 13 at q^4
        let mut acc = TruncatedSeries::one(4);
        for m in 1..=4 {
            acc = acc.mul(&inv_one_minus_pow(m, m, 4));
        }
        assert_eq!(acc.coeff(4), &BigInt::from(13));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(
            TruncatedSeries::one(5).shift(3),
            TruncatedSeries::monomial(BigInt::one(), 3, 5)
        );
        let s = from_i64(&[2, 3, 5, 7]);
        assert_eq!(s.shift(0), s);
        assert_eq!(s.shift(2), from_i64(&[0, 0, 2, 3]));
        assert_eq!(s.shift(9), TruncatedSeries::zero(3));
    }

    #[test]
    fn inv_one_minus_pow_examples() {
        assert_eq!(inv_one_minus_pow(2, 2, 6), from_i64(&[1, 0, 2, 0, 3, 0, 4]));
        assert_eq!(inv_one_minus_pow(1, 1, 3), from_i64(&[1, 1, 1, 1]));
        assert_eq!(inv_one_minus_pow(3, 0, 5), TruncatedSeries::one(5));
    }

    #[test]
    #[should_panic(expected = "k must be positive")]
    fn inv_one_minus_pow_rejects_k_zero() {
        let _ = inv_one_minus_pow(0, 2, 5);
    }

    #[test]
    fn colored_product_small_coefficients() {
        let pl = colored_product(1, 8);
        let want: Vec<BigInt> = [1, 1, 3, 6, 13, 24, 48, 86, 160]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(pl.coeffs(), &want[..]);

        // empty product
        assert_eq!(colored_product(6, 5), TruncatedSeries::one(5));

        // smallest part >= 3: three one-part objects 3_1, 3_2, 3_3 at q^3
        assert_eq!(colored_product(3, 5).coeff(3), &BigInt::from(3));
    }

    #[test]
    fn colored_product_support() {
        // coefficient 0 is 1; coefficients vanish strictly between 0 and r and
        // are positive from r on (a single part of size m always fits)
        for r in 1..=6 {
            let s = colored_product(r, 14);
            assert_eq!(s.coeff(0), &BigInt::one());
            for m in 1..=14 {
                if m < r {
                    assert!(s.coeff(m).is_zero(), "r={r} m={m}");
                } else {
                    assert!(s.coeff(m) > &BigInt::zero(), "r={r} m={m}");
                }
            }
        }
    }

    #[test]
    fn lambert_term_examples() {
        assert_eq!(lambert_term(2, 7), from_i64(&[0, 0, 1, 0, 1, 0, 1, 0]));
        assert_eq!(lambert_term(1, 3), from_i64(&[0, 1, 1, 1]));
    }

    #[test]
    fn partition_product_counts_partitions() {
        let p = partition_product(10);
        let want: Vec<BigInt> = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(p.coeffs(), &want[..]);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 10), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    fn series_triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)>
    {
        (0usize..=30).prop_flat_map(|order| {
            let coeffs = || prop::collection::vec(-50i64..=50, order + 1);
            (coeffs(), coeffs(), coeffs()).prop_map(|(a, b, c)| {
                (from_i64(&a), from_i64(&b), from_i64(&c))
            })
        })
    }

    proptest! {
        #[test]
        fn mul_is_associative_and_commutative((a, b, c) in series_triple()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
        }

        #[test]
        fn mul_distributes_over_add((a, b, c) in series_triple()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn inv_one_minus_pow_times_expansion_is_one(k in 1usize..=5, e in 0usize..=5, order in 0usize..=24) {
            // (1 - q^k)^e expanded by repeated multiplication
            let mut poly = TruncatedSeries::one(order);
            let base = TruncatedSeries::one(order)
                .sub(&TruncatedSeries::monomial(BigInt::one(), k, order));
            for _ in 0..e {
                poly = poly.mul(&base);
            }
            prop_assert_eq!(inv_one_minus_pow(k, e, order).mul(&poly), TruncatedSeries::one(order));
        }

        #[test]
        fn shift_matches_monomial_mul(v in prop::collection::vec(-20i64..=20, 1..=20), k in 0usize..=25) {
            let s = from_i64(&v);
            let q_k = TruncatedSeries::monomial(BigInt::one(), k, s.order());
            prop_assert_eq!(s.shift(k), s.mul(&q_k));
        }
    }
}
