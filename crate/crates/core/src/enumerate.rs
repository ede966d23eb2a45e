//! Brute-force enumeration of ordinary and n-color partitions, and every
//! counting statistic computed by literal counting.
//!
//! These are the independent oracles the generating-function tables in
//! [`crate::counting`] are validated against. They exist for correctness,
//! not performance: object counts grow fast, so callers keep weights at
//! desk scale (n-color weight <= ~18, ordinary weight <= ~30).
//!
//! Objects are generated directly in a canonical non-increasing part order,
//! which guarantees each multiset appears exactly once without a dedup set.

use std::fmt;

/// A partition: non-increasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// An n-color partition: a multiset of `(size, color)` pairs with
/// `1 <= color <= size`, stored in non-increasing `(size, color)` order.
/// Rendered in subscript notation as `3_2+2_1+1_1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NColorPartition {
    parts: Vec<(usize, usize)>,
}

impl NColorPartition {
    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&(s, _)| s).sum()
    }
}

impl fmt::Display for NColorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (size, color)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{size}_{color}")?;
        }
        Ok(())
    }
}

/// A colored multiset (all sizes at least some `r`) together with an
/// uncolored part of unrestricted multiplicity. This is the object counted
/// by the `r > k` branch of [`t_oracle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HybridPartition {
    pub colored: Vec<(usize, usize)>,
    pub plain_count: usize,
}

fn descend_plain<F: FnMut(&[usize])>(
    remaining: usize,
    max_part: usize,
    acc: &mut Vec<usize>,
    f: &mut F,
) {
    if remaining == 0 {
        f(acc);
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        acc.push(part);
        descend_plain(remaining - part, part, acc, f);
        acc.pop();
    }
}

/// Visits every partition of `n` exactly once, parts non-increasing.
/// `n = 0` visits the single empty partition.
pub fn for_each_partition<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut acc = Vec::new();
    if n == 0 {
        f(&acc);
        return;
    }
    descend_plain(n, n, &mut acc, &mut f);
}

/// All partitions of `n`; the count is `p(n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        out.push(Partition {
            parts: parts.to_vec(),
        })
    });
    out
}

fn descend_colored<F: FnMut(&[(usize, usize)])>(
    remaining: usize,
    max_size: usize,
    max_color: usize,
    min_part: usize,
    acc: &mut Vec<(usize, usize)>,
    f: &mut F,
) {
    if remaining == 0 {
        f(acc);
        return;
    }
    for size in (min_part..=remaining.min(max_size)).rev() {
        let top_color = if size == max_size { max_color } else { size };
        for color in (1..=top_color).rev() {
            acc.push((size, color));
            descend_colored(remaining - size, size, color, min_part, acc, f);
            acc.pop();
        }
    }
}

/// Visits every n-color partition of `m` with all part sizes at least
/// `min_part`, exactly once, in canonical non-increasing `(size, color)`
/// order. `m = 0` visits the single empty object.
pub fn for_each_ncolor<F: FnMut(&[(usize, usize)])>(m: usize, min_part: usize, mut f: F) {
    assert!(min_part >= 1, "min_part must be positive");
    let mut acc = Vec::new();
    if m == 0 {
        f(&acc);
        return;
    }
    descend_colored(m, m, m, min_part, &mut acc, &mut f);
}

/// All n-color partitions of `m` with part sizes at least `min_part`; the
/// count at `min_part = 1` is `PL(m)`.
pub fn enumerate_ncolor(m: usize, min_part: usize) -> Vec<NColorPartition> {
    let mut out = Vec::new();
    for_each_ncolor(m, min_part, |parts| {
        out.push(NColorPartition {
            parts: parts.to_vec(),
        })
    });
    out
}

/// Visits every hybrid object of the given weight: a colored multiset with
/// sizes at least `min_part` plus `plain_count` copies of the uncolored part
/// `plain_part`, so that the sizes and the copies sum to `weight`.
pub fn for_each_hybrid<F: FnMut(&[(usize, usize)], usize)>(
    weight: usize,
    min_part: usize,
    plain_part: usize,
    mut f: F,
) {
    assert!(plain_part >= 1, "plain_part must be positive");
    for plain_count in 0..=weight / plain_part {
        let rest = weight - plain_count * plain_part;
        for_each_ncolor(rest, min_part, |parts| f(parts, plain_count));
    }
}

/// All hybrid objects of the given weight.
pub fn enumerate_hybrid(weight: usize, min_part: usize, plain_part: usize) -> Vec<HybridPartition> {
    let mut out = Vec::new();
    for_each_hybrid(weight, min_part, plain_part, |colored, plain_count| {
        out.push(HybridPartition {
            colored: colored.to_vec(),
            plain_count,
        })
    });
    out
}

/// `T_k^r(m)` by literal counting.
///
/// For `r <= k`: enumerate the n-color partitions of `m` with smallest part
/// at least `r`, count every occurrence of a part of size `k` (all colors),
/// and divide by `k`. The raw count is always divisible by `k` by color
/// symmetry; this is asserted, never rounded.
///
/// For `r > k`: count the hybrid objects of weight `m - k` whose colored
/// parts are at least `r` and whose uncolored part is `k`.
///
/// Returns 0 whenever `m < k`.
pub fn t_oracle(k: usize, r: usize, m: usize) -> usize {
    assert!(k >= 1 && r >= 1, "k and r must be positive");
    if m < k {
        return 0;
    }
    if r <= k {
        let mut total = 0usize;
        for_each_ncolor(m, r, |parts| {
            total += parts.iter().filter(|&&(size, _)| size == k).count();
        });
        assert!(
            total.is_multiple_of(k),
            "count of parts of size {k} must be divisible by {k} (got {total})"
        );
        total / k
    } else {
        let mut count = 0usize;
        for_each_hybrid(m - k, r, k, |_, _| count += 1);
        count
    }
}

/// Total multiplicity of the part `k` over all partitions of `n`.
pub fn s_oracle(k: usize, n: usize) -> usize {
    assert!(k >= 1 && n >= 1, "k and n must be positive");
    let mut total = 0usize;
    for_each_partition(n, |parts| {
        total += parts.iter().filter(|&&p| p == k).count();
    });
    total
}

fn for_each_run<T: Eq, F: FnMut(&T, usize)>(items: &[T], mut f: F) {
    let mut i = 0;
    while i < items.len() {
        let mut j = i + 1;
        while j < items.len() && items[j] == items[i] {
            j += 1;
        }
        f(&items[i], j - i);
        i = j;
    }
}

/// Over all partitions of `n`, counts the part sizes of the form `kj + s`
/// with `j >= 1` (so size at least `k + s`; the part equal to `s` itself is
/// excluded) whose multiplicity in that partition is exactly 1, summed over
/// partitions. Panics unless `0 <= s < k`.
pub fn s_cong_oracle(s: usize, k: usize, n: usize) -> usize {
    assert!(s < k, "s must satisfy 0 <= s < k");
    assert!(n >= 1, "n must be positive");
    let mut total = 0usize;
    for_each_partition(n, |parts| {
        for_each_run(parts, |&size, mult| {
            if mult == 1 && size % k == s && size >= k + s {
                total += 1;
            }
        });
    });
    total
}

/// Over all n-color partitions of `n`, counts the `(size, color)` pairs with
/// `k | size` whose multiplicity is exactly 1, summed over objects and
/// divided exactly by `k` (divisibility asserted).
pub fn t_div_oracle(k: usize, n: usize) -> usize {
    assert!(k >= 1 && n >= 1, "k and n must be positive");
    let mut total = 0usize;
    for_each_ncolor(n, 1, |parts| {
        for_each_run(parts, |&(size, _), mult| {
            if mult == 1 && size % k == 0 {
                total += 1;
            }
        });
    });
    assert!(
        total.is_multiple_of(k),
        "uniquely-appearing count must be divisible by {k} (got {total})"
    );
    total / k
}

/// Over all n-color partitions of `n`, counts the `(size, color)` pairs with
/// `size = kj + s`, `j >= 1` (size at least `k + s`) and multiplicity
/// exactly 1, summed over objects. Panics unless `0 <= s < k`.
pub fn t_cong_oracle(s: usize, k: usize, n: usize) -> usize {
    assert!(s < k, "s must satisfy 0 <= s < k");
    assert!(n >= 1, "n must be positive");
    let mut total = 0usize;
    for_each_ncolor(n, 1, |parts| {
        for_each_run(parts, |&(size, _), mult| {
            if mult == 1 && size % k == s && size >= k + s {
                total += 1;
            }
        });
    });
    total
}
