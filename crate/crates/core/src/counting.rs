//! Generating-function computation of the counting sequences: `PL(m)`,
//! `p(n)`, `T_k^r(m)`, `ell_r(m)`, `S_k(n)`, `S_{s(k)}(n)`, `T_{|k}(n)`, and
//! `T_{s(k)}(n)`.
//!
//! Every sequence here is extracted from a single [`TruncatedSeries`]; the
//! enumeration oracles in [`crate::enumerate`] provide the independent
//! cross-check. The `S`/`T` statistics use the simplified product forms
//! (the restricted product pulled out of the sum over residues), which keeps
//! each table to one product and one Cauchy multiplication.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::series::{
    binomial, colored_product, inv_one_minus_pow, lambert_term, partition_product, TruncatedSeries,
};

fn zero_big() -> &'static BigInt {
    static ZERO: OnceLock<BigInt> = OnceLock::new();
    ZERO.get_or_init(BigInt::zero)
}

/// A named integer sequence `v_0 .. v_N` extracted from a truncated series,
/// with the parameters that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    name: &'static str,
    params: Vec<(&'static str, usize)>,
    values: Vec<BigInt>,
}

impl SequenceTable {
    fn new(name: &'static str, params: Vec<(&'static str, usize)>, series: TruncatedSeries) -> Self {
        SequenceTable {
            name,
            params,
            values: series.into_coeffs(),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn params(&self) -> &[(&'static str, usize)] {
        &self.params
    }

    /// Truncation order `N`; the table holds indices `0 ..= N`.
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Value at index `i`; panics past the order.
    pub fn value(&self, i: usize) -> &BigInt {
        &self.values[i]
    }

    /// Value at a possibly out-of-range index, with indices below 0 or above
    /// the order reading as 0. This is the zero-extension convention used by
    /// every identity check.
    pub fn at(&self, i: i64) -> &BigInt {
        if i < 0 || i as usize >= self.values.len() {
            zero_big()
        } else {
            &self.values[i as usize]
        }
    }

    /// CSV rendering: header `index,value`, one row per index, `\n` endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,value\n");
        for (i, v) in self.values.iter().enumerate() {
            writeln!(out, "{i},{v}").unwrap();
        }
        out
    }

    /// Compact single-line JSON `{"name":…,"params":{…},"values":[…]}` with
    /// exact integer values.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        write!(out, "{{\"name\":\"{}\",\"params\":{{", self.name).unwrap();
        for (i, (key, val)) in self.params.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "\"{key}\":{val}").unwrap();
        }
        out.push_str("},\"values\":[");
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{v}").unwrap();
        }
        out.push_str("]}");
        out
    }
}

/// `PL(0..N)`: the number of n-color partitions (equivalently plane
/// partitions) of each weight, from `prod 1/(1-q^m)^m`.
pub fn pl_table(order: usize) -> SequenceTable {
    SequenceTable::new("pl", vec![], colored_product(1, order))
}

/// `p(0..N)`: the ordinary partition numbers, from `prod 1/(1-q^m)`.
pub fn p_table(order: usize) -> SequenceTable {
    SequenceTable::new("p", vec![], partition_product(order))
}

/// `T_k^r(0..N)` from `q^k/(1-q^k) * prod_{m>=r} 1/(1-q^m)^m`; one formula
/// serves both the `r <= k` and `r > k` branches of the definition. Zeros
/// below index `k`. Panics if `k > N` (the table could not hold the first
/// nonzero entry).
pub fn t_table(k: usize, r: usize, order: usize) -> SequenceTable {
    assert!(k >= 1 && r >= 1, "k and r must be positive");
    assert!(k <= order, "k = {k} exceeds the truncation order {order}");
    SequenceTable::new(
        "t",
        vec![("k", k), ("r", r)],
        lambert_term(k, order).mul(&colored_product(r, order)),
    )
}

/// `T_k^r` tables for every `k = 1 ..= k_max` at once, sharing the single
/// `prod_{m>=r} 1/(1-q^m)^m` factor. Index `k - 1` holds the table for `k`.
pub fn t_tables(r: usize, k_max: usize, order: usize) -> Vec<SequenceTable> {
    assert!(r >= 1, "r must be positive");
    assert!(k_max <= order, "k_max = {k_max} exceeds the truncation order {order}");
    let product = colored_product(r, order);
    (1..=k_max)
        .map(|k| {
            SequenceTable::new(
                "t",
                vec![("k", k), ("r", r)],
                lambert_term(k, order).mul(&product),
            )
        })
        .collect()
}

/// `ell_r(0..N)` by the binomial recursion
/// `ell_r(m) = sum_{k=0}^{floor(m/r)} C(r+k-1, k) ell_{r-1}(m - kr)`,
/// built up from the base cases `ell_1 = 1` and `ell_0 = (1, 0, 0, ...)`.
pub fn ell_table_recursive(r: usize, order: usize) -> SequenceTable {
    let params = vec![("r", r)];
    if r == 0 {
        return SequenceTable::new("ell", params, TruncatedSeries::one(order));
    }
    let mut prev: Vec<BigInt> = vec![BigInt::from(1u32); order + 1];
    for rr in 2..=r {
        let mut cur = vec![BigInt::zero(); order + 1];
        for (m, slot) in cur.iter_mut().enumerate() {
            for k in 0..=m / rr {
                *slot += binomial((rr - 1 + k) as u64, k as u64) * &prev[m - k * rr];
            }
        }
        prev = cur;
    }
    SequenceTable::new("ell", params, TruncatedSeries::from_coeffs(prev))
}

/// `ell_r(0..N)` from the finite product `prod_{m=1}^{r} 1/(1-q^m)^m`
/// (`r = 0` is the empty product). Must agree with
/// [`ell_table_recursive`] exactly.
pub fn ell_table_gf(r: usize, order: usize) -> SequenceTable {
    let mut acc = TruncatedSeries::one(order);
    for m in 1..=r.min(order) {
        acc = acc.mul(&inv_one_minus_pow(m, m, order));
    }
    SequenceTable::new("ell", vec![("r", r)], acc)
}

/// `S_k(0..N)`: total appearances of the part `k` in the partitions of each
/// `n`, from `q^k/(1-q^k) * prod 1/(1-q^n)`.
pub fn s_table(k: usize, order: usize) -> SequenceTable {
    assert!(k >= 1, "k must be positive");
    SequenceTable::new(
        "s",
        vec![("k", k)],
        lambert_term(k, order).mul(&partition_product(order)),
    )
}

/// `S_{s(k)}(0..N)`: over partitions of `n`, the number of part sizes
/// `kj + s` (`j >= 1`) appearing with multiplicity exactly one. Computed
/// from the closed reduction
/// `(q^{s+k}/(1-q^k) - q^{2s+2k}/(1-q^{2k})) * prod 1/(1-q^n)`.
/// Panics unless `0 <= s < k`.
pub fn s_cong_table(s: usize, k: usize, order: usize) -> SequenceTable {
    assert!(s < k, "s must satisfy 0 <= s < k");
    let numerator = lambert_term(k, order)
        .shift(s)
        .sub(&lambert_term(2 * k, order).shift(2 * s));
    SequenceTable::new(
        "s_cong",
        vec![("s", s), ("k", k)],
        numerator.mul(&partition_product(order)),
    )
}

/// `T_{|k}(0..N)`: over n-color partitions of `n`, the number of uniquely
/// appearing `(size, color)` pairs with `k | size`, scaled by `1/k`.
/// Computed as `(sum_j kj q^{kj} (1 - q^{kj})) * prod 1/(1-q^n)^n` followed
/// by exact division by `k` (divisibility asserted).
pub fn t_div_table(k: usize, order: usize) -> SequenceTable {
    assert!(k >= 1, "k must be positive");
    let mut numerator = vec![BigInt::zero(); order + 1];
    let mut j = 1usize;
    while j * k <= order {
        numerator[j * k] += (j * k) as u64;
        if 2 * j * k <= order {
            numerator[2 * j * k] -= (j * k) as u64;
        }
        j += 1;
    }
    let series = TruncatedSeries::from_coeffs(numerator).mul(&colored_product(1, order));
    let values: Vec<BigInt> = series
        .into_coeffs()
        .into_iter()
        .map(|v| {
            assert!(
                (&v % (k as u64)).is_zero(),
                "series for T_|{k} must be divisible by {k}"
            );
            v / k as u64
        })
        .collect();
    SequenceTable {
        name: "t_div",
        params: vec![("k", k)],
        values,
    }
}

/// `T_{s(k)}(0..N)`: over n-color partitions of `n`, the number of uniquely
/// appearing `(size, color)` pairs with `size = kj + s`, `j >= 1`. Computed
/// as `(sum_j (kj+s) q^{kj+s} (1 - q^{kj+s})) * prod 1/(1-q^n)^n`.
/// Panics unless `0 <= s < k`.
pub fn t_cong_table(s: usize, k: usize, order: usize) -> SequenceTable {
    assert!(s < k, "s must satisfy 0 <= s < k");
    let mut numerator = vec![BigInt::zero(); order + 1];
    let mut j = 1usize;
    while j * k + s <= order {
        let e = j * k + s;
        numerator[e] += e as u64;
        if 2 * e <= order {
            numerator[2 * e] -= e as u64;
        }
        j += 1;
    }
    SequenceTable::new(
        "t_cong",
        vec![("s", s), ("k", k)],
        TruncatedSeries::from_coeffs(numerator).mul(&colored_product(1, order)),
    )
}
