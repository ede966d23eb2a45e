//! Machine verification of the convolution identities and counting theorems,
//! producing structured pass/fail reports with first counterexamples.
//!
//! Every check computes its two sides by structurally different code paths
//! (e.g. a `PL` convolution against a `T`/`ell` double sum, or a
//! restricted-product series against a Lambert-series combination), so a
//! shared bug cannot validate itself. Out-of-range sequence indices read as
//! zero throughout; that convention is part of each identity's statement
//! here. Counterexamples are deterministic: the smallest failing `m`/`n`
//! first, then lexicographically smallest parameters.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{
    divisor_sum, log_expand, prime_power_decompose, totient, ArithmeticFunctionSpec,
    LogCombination,
};
use crate::counting::{
    ell_table_recursive, pl_table, s_cong_table, s_table, t_cong_table, t_div_table, t_table,
    t_tables, SequenceTable,
};

/// Which identity a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityId {
    MainTheorem,
    CorollaryUnit,
    CorollaryMobius,
    CorollaryTau,
    CorollaryLiouville,
    CorollarySigma,
    CorollaryVonMangoldt,
    R1SpecialCase,
    PhiTheorem,
    AndrewsDeutsch,
    SCongTheorem,
    TDivTheorem,
    TCongTheorem,
}

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::MainTheorem => "main_theorem",
            IdentityId::CorollaryUnit => "corollary_unit",
            IdentityId::CorollaryMobius => "corollary_mobius",
            IdentityId::CorollaryTau => "corollary_tau",
            IdentityId::CorollaryLiouville => "corollary_liouville",
            IdentityId::CorollarySigma => "corollary_sigma",
            IdentityId::CorollaryVonMangoldt => "corollary_vonmangoldt",
            IdentityId::R1SpecialCase => "r1_special_case",
            IdentityId::PhiTheorem => "phi_theorem",
            IdentityId::AndrewsDeutsch => "andrews_deutsch",
            IdentityId::SCongTheorem => "s_cong_theorem",
            IdentityId::TDivTheorem => "t_div_theorem",
            IdentityId::TCongTheorem => "t_cong_theorem",
        }
    }
}

/// One side of a failed comparison: an exact integer or an exact
/// log-combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckedValue {
    Integer(BigInt),
    Logs(LogCombination),
}

impl std::fmt::Display for CheckedValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckedValue::Integer(v) => write!(f, "{v}"),
            CheckedValue::Logs(lc) => write!(f, "{lc}"),
        }
    }
}

/// The first failing point of an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// The failing index and parameters, e.g. `[("n", 7), ("k", 2), ("s", 1)]`.
    pub location: Vec<(&'static str, usize)>,
    pub lhs: CheckedValue,
    pub rhs: CheckedValue,
}

/// Result of checking one identity over a parameter range. The check passed
/// iff `counterexample` is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    /// The arithmetic function substituted into the identity, when one is.
    pub function: Option<ArithmeticFunctionSpec>,
    /// Fixed parameters and range bounds, in a canonical order.
    pub params: Vec<(&'static str, usize)>,
    /// Largest `m`/`n` checked.
    pub range: usize,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    fn pass(
        identity: IdentityId,
        function: Option<ArithmeticFunctionSpec>,
        params: Vec<(&'static str, usize)>,
        range: usize,
    ) -> Self {
        VerificationReport {
            identity,
            function,
            params,
            range,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// One-line JSON rendering; numbers and log-combinations are emitted as
    /// exact decimal strings.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        write!(out, "{{\"identity\":\"{}\"", self.identity.as_str()).unwrap();
        if let Some(f) = &self.function {
            write!(out, ",\"function\":\"{}\"", f.name()).unwrap();
        }
        out.push_str(",\"params\":{");
        for (i, (key, val)) in self.params.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "\"{key}\":{val}").unwrap();
        }
        write!(
            out,
            "}},\"range\":{},\"status\":\"{}\"",
            self.range,
            if self.passed() { "pass" } else { "fail" }
        )
        .unwrap();
        if let Some(ce) = &self.counterexample {
            out.push_str(",\"counterexample\":{\"location\":{");
            for (i, (key, val)) in ce.location.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write!(out, "\"{key}\":{val}").unwrap();
            }
            write!(out, "}},\"lhs\":\"{}\",\"rhs\":\"{}\"}}", ce.lhs, ce.rhs).unwrap();
        }
        out.push('}');
        out
    }

    /// Human-readable one-liner.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        write!(
            out,
            "{} {}",
            if self.passed() { "pass" } else { "FAIL" },
            self.identity.as_str()
        )
        .unwrap();
        if let Some(f) = &self.function {
            write!(out, " A={}", f.name()).unwrap();
        }
        for (key, val) in &self.params {
            write!(out, " {key}={val}").unwrap();
        }
        write!(out, " range={}", self.range).unwrap();
        if let Some(ce) = &self.counterexample {
            out.push_str(" at");
            for (key, val) in &ce.location {
                write!(out, " {key}={val}").unwrap();
            }
            write!(out, ": lhs={} rhs={}", ce.lhs, ce.rhs).unwrap();
        }
        out
    }
}

fn fail_int(
    mut report: VerificationReport,
    location: Vec<(&'static str, usize)>,
    lhs: BigInt,
    rhs: BigInt,
) -> VerificationReport {
    report.counterexample = Some(Counterexample {
        location,
        lhs: CheckedValue::Integer(lhs),
        rhs: CheckedValue::Integer(rhs),
    });
    report
}

/// `sum_{k=1}^{m} sum_{j=0}^{m-k} A(k) T_k^r(m-j) ell_{r-1}(j)` with the
/// `T` tables indexed by `k - 1`.
fn double_sum<F: Fn(usize) -> BigInt>(
    a: F,
    t: &[SequenceTable],
    ell: &SequenceTable,
    m: usize,
) -> BigInt {
    let mut total = BigInt::zero();
    for k in 1..=m {
        let ak = a(k);
        if ak.is_zero() {
            continue;
        }
        let mut inner = BigInt::zero();
        for j in 0..=m - k {
            let tv = t[k - 1].value(m - j);
            if !tv.is_zero() {
                inner += tv * ell.value(j);
            }
        }
        total += ak * inner;
    }
    total
}

/// Checks `sum_{k=1}^{m} PL(m-k) B(k) =
/// sum_{k=1}^{m} sum_{j=0}^{m-k} A(k) T_k^r(m-j) ell_{r-1}(j)` for every
/// `r <= m <= max_m`, where `B` is the divisor sum of `A`. The left side is
/// a `PL` convolution against tabulated divisor sums; the right side is the
/// `T`/`ell` double sum. The von Mangoldt kind is routed to
/// [`verify_vonmangoldt`], which compares log-combinations instead.
pub fn verify_main(
    a: &ArithmeticFunctionSpec,
    r: usize,
    max_m: usize,
) -> VerificationReport {
    assert!(r >= 1, "r must be positive");
    if *a == ArithmeticFunctionSpec::VonMangoldt {
        return verify_vonmangoldt(r, max_m);
    }
    let report = VerificationReport::pass(
        IdentityId::MainTheorem,
        Some(a.clone()),
        vec![("r", r)],
        max_m,
    );
    let pl = pl_table(max_m);
    let t = t_tables(r, max_m, max_m);
    let ell = ell_table_recursive(r - 1, max_m);
    let b: Vec<BigInt> = (1..=max_m).map(|k| divisor_sum(a, k)).collect();
    for m in r..=max_m {
        let lhs: BigInt = (1..=m).map(|k| pl.value(m - k) * &b[k - 1]).sum();
        let rhs = double_sum(|k| a.eval(k), &t, &ell, m);
        if lhs != rhs {
            return fail_int(report, vec![("m", m)], lhs, rhs);
        }
    }
    report
}

/// Checks the `r = 1` collapse
/// `sum_{k=1}^{m} PL(m-k) B(k) = sum_{k=1}^{m} A(k) T_k^1(m)` for
/// `1 <= m <= max_m`.
pub fn verify_r1_special(a: &ArithmeticFunctionSpec, max_m: usize) -> VerificationReport {
    assert!(
        *a != ArithmeticFunctionSpec::VonMangoldt,
        "the r = 1 special case is checked for integer-valued functions"
    );
    let report = VerificationReport::pass(
        IdentityId::R1SpecialCase,
        Some(a.clone()),
        vec![],
        max_m,
    );
    let pl = pl_table(max_m);
    let t = t_tables(1, max_m, max_m);
    let b: Vec<BigInt> = (1..=max_m).map(|k| divisor_sum(a, k)).collect();
    for m in 1..=max_m {
        let lhs: BigInt = (1..=m).map(|k| pl.value(m - k) * &b[k - 1]).sum();
        let rhs: BigInt = (1..=m).map(|k| a.eval(k) * t[k - 1].value(m)).sum();
        if lhs != rhs {
            return fail_int(report, vec![("m", m)], lhs, rhs);
        }
    }
    report
}

/// Checks the six named substitutions of the main identity, one report per
/// `(corollary, r, alpha)` combination:
///
/// * unit divisor sum: `sum PL(m-k) = T_1^1(m)`;
/// * Möbius: `PL(m-1) = sum sum mu(k) T_k^r(m-j) ell_{r-1}(j)`;
/// * divisor count: `sum PL(m-k) tau(k) = sum sum T_k^r(m-j) ell_{r-1}(j)`;
/// * Liouville: `sum_{k <= sqrt(m)} PL(m-k^2) = sum sum lambda(k) T ell`
///   (the left side summed over squares exactly as written);
/// * power sums: `sum PL(m-k) sigma_alpha(k) = sum sum k^alpha T ell` for
///   `1 <= alpha <= alpha_max`.
///
/// The von Mangoldt corollary has its own log-combination check,
/// [`verify_vonmangoldt`].
pub fn verify_corollaries(max_m: usize, r_max: usize, alpha_max: u32) -> Vec<VerificationReport> {
    assert!(r_max >= 1, "r_max must be positive");
    let mut reports = Vec::new();
    let pl = pl_table(max_m);

    // unit divisor sum, tied to r = 1 by its T_1^1 form
    {
        let report = VerificationReport::pass(IdentityId::CorollaryUnit, None, vec![], max_m);
        let t11 = t_table(1, 1, max_m);
        let mut out = report;
        for m in 1..=max_m {
            let lhs: BigInt = (1..=m).map(|k| pl.value(m - k).clone()).sum();
            let rhs = t11.value(m).clone();
            if lhs != rhs {
                out = fail_int(out, vec![("m", m)], lhs, rhs);
                break;
            }
        }
        reports.push(out);
    }

    for r in 1..=r_max {
        let t = t_tables(r, max_m, max_m);
        let ell = ell_table_recursive(r - 1, max_m);

        let mut mobius_report = VerificationReport::pass(
            IdentityId::CorollaryMobius,
            Some(ArithmeticFunctionSpec::Mobius),
            vec![("r", r)],
            max_m,
        );
        for m in r..=max_m {
            let lhs = pl.value(m - 1).clone();
            let rhs = double_sum(|k| ArithmeticFunctionSpec::Mobius.eval(k), &t, &ell, m);
            if lhs != rhs {
                mobius_report = fail_int(mobius_report, vec![("m", m)], lhs, rhs);
                break;
            }
        }
        reports.push(mobius_report);

        let mut tau_report = VerificationReport::pass(
            IdentityId::CorollaryTau,
            Some(ArithmeticFunctionSpec::One),
            vec![("r", r)],
            max_m,
        );
        for m in r..=max_m {
            let lhs: BigInt = (1..=m)
                .map(|k| pl.value(m - k) * crate::arith::tau(k) as u64)
                .sum();
            let rhs = double_sum(|_| BigInt::from(1u32), &t, &ell, m);
            if lhs != rhs {
                tau_report = fail_int(tau_report, vec![("m", m)], lhs, rhs);
                break;
            }
        }
        reports.push(tau_report);

        let mut liouville_report = VerificationReport::pass(
            IdentityId::CorollaryLiouville,
            Some(ArithmeticFunctionSpec::Liouville),
            vec![("r", r)],
            max_m,
        );
        for m in r..=max_m {
            let mut lhs = BigInt::zero();
            let mut k = 1;
            while k * k <= m {
                lhs += pl.value(m - k * k);
                k += 1;
            }
            let rhs = double_sum(|k| ArithmeticFunctionSpec::Liouville.eval(k), &t, &ell, m);
            if lhs != rhs {
                liouville_report = fail_int(liouville_report, vec![("m", m)], lhs, rhs);
                break;
            }
        }
        reports.push(liouville_report);

        for alpha in 1..=alpha_max {
            let spec = ArithmeticFunctionSpec::Power(alpha);
            let mut sigma_report = VerificationReport::pass(
                IdentityId::CorollarySigma,
                Some(spec.clone()),
                vec![("r", r), ("alpha", alpha as usize)],
                max_m,
            );
            for m in r..=max_m {
                let lhs: BigInt = (1..=m)
                    .map(|k| pl.value(m - k) * crate::arith::sigma(alpha, k))
                    .sum();
                let rhs = double_sum(|k| spec.eval(k), &t, &ell, m);
                if lhs != rhs {
                    sigma_report = fail_int(sigma_report, vec![("m", m)], lhs, rhs);
                    break;
                }
            }
            reports.push(sigma_report);
        }
    }
    reports
}

/// Checks the von Mangoldt substitution
/// `sum_{k=1}^{m} PL(m-k) log k =
/// sum_{k=p^c <= m} sum_{j=0}^{m-k} T_k^r(m-j) ell_{r-1}(j) log p`
/// for `1 <= m <= max_m`, comparing both sides as exact log-combinations.
/// The left side expands each `log k` into prime-exponent form; the right
/// side iterates prime powers directly.
pub fn verify_vonmangoldt(r: usize, max_m: usize) -> VerificationReport {
    assert!(r >= 1, "r must be positive");
    let report = VerificationReport::pass(
        IdentityId::CorollaryVonMangoldt,
        Some(ArithmeticFunctionSpec::VonMangoldt),
        vec![("r", r)],
        max_m,
    );
    let pl = pl_table(max_m);
    let t = t_tables(r, max_m, max_m);
    let ell = ell_table_recursive(r - 1, max_m);
    for m in 1..=max_m {
        let mut lhs = LogCombination::new();
        for k in 2..=m {
            lhs.add_scaled(&log_expand(k), pl.value(m - k));
        }
        let mut rhs = LogCombination::new();
        for k in 2..=m {
            if let Some((p, _)) = prime_power_decompose(k) {
                let weight: BigInt = (0..=m - k).map(|j| t[k - 1].value(m - j) * ell.value(j)).sum();
                rhs.add_term(p, &weight);
            }
        }
        if lhs != rhs {
            let mut out = report;
            out.counterexample = Some(Counterexample {
                location: vec![("m", m)],
                lhs: CheckedValue::Logs(lhs),
                rhs: CheckedValue::Logs(rhs),
            });
            return out;
        }
    }
    report
}

/// Checks `PL(m+2) - PL(m) = (1/2) sum_{k=3}^{m+5} phi(k) T_k^3(m+5)` for
/// `0 <= m <= max_m`. To stay in exact integers the doubled form
/// `2 (PL(m+2) - PL(m)) = sum phi(k) T_k^3(m+5)` is compared, which also
/// catches an odd right-hand sum; a counterexample reports the two doubled
/// sides.
pub fn verify_phi(max_m: usize) -> VerificationReport {
    let report = VerificationReport::pass(IdentityId::PhiTheorem, None, vec![], max_m);
    let order = max_m + 5;
    let pl = pl_table(order);
    let t = t_tables(3, order, order);
    for m in 0..=max_m {
        let lhs_doubled: BigInt = (pl.value(m + 2) - pl.value(m)) * 2u32;
        let rhs_sum: BigInt = (3..=m + 5)
            .map(|k| t[k - 1].value(m + 5) * totient(k) as u64)
            .sum();
        if lhs_doubled != rhs_sum {
            return fail_int(report, vec![("m", m)], lhs_doubled, rhs_sum);
        }
    }
    report
}

/// Checks `S_{|k}(n) = S_{2k}(n+k)` for `1 <= k <= k_max` and
/// `1 <= n <= n_max`. The left side comes from the restricted-product form
/// (the `s = 0` congruence table); the right side from the plain
/// appearance-count table, computed at order `n_max + k_max` so every shift
/// stays in range.
pub fn verify_andrews_deutsch(k_max: usize, n_max: usize) -> VerificationReport {
    assert!(k_max >= 1, "k_max must be positive");
    let report = VerificationReport::pass(
        IdentityId::AndrewsDeutsch,
        None,
        vec![("k_max", k_max)],
        n_max,
    );
    let order = n_max + k_max;
    let lhs_tables: Vec<SequenceTable> =
        (1..=k_max).map(|k| s_cong_table(0, k, order)).collect();
    let rhs_tables: Vec<SequenceTable> = (1..=k_max).map(|k| s_table(2 * k, order)).collect();
    for n in 1..=n_max {
        for k in 1..=k_max {
            let lhs = lhs_tables[k - 1].value(n);
            let rhs = rhs_tables[k - 1].value(n + k);
            if lhs != rhs {
                return fail_int(report, vec![("n", n), ("k", k)], lhs.clone(), rhs.clone());
            }
        }
    }
    report
}

/// Checks `S_{s(k)}(n) = S_{2k}(n+k-s) + S_{2k}(n-s) - S_{2k}(n-2s)` for
/// `1 <= k <= k_max`, `0 <= s < k`, `1 <= n <= n_max`, with out-of-range
/// indices reading as zero.
pub fn verify_s_cong(k_max: usize, n_max: usize) -> VerificationReport {
    assert!(k_max >= 1, "k_max must be positive");
    let report = VerificationReport::pass(
        IdentityId::SCongTheorem,
        None,
        vec![("k_max", k_max)],
        n_max,
    );
    let order = n_max + k_max;
    let rhs_tables: Vec<SequenceTable> = (1..=k_max).map(|k| s_table(2 * k, order)).collect();
    let lhs_tables: Vec<Vec<SequenceTable>> = (1..=k_max)
        .map(|k| (0..k).map(|s| s_cong_table(s, k, order)).collect())
        .collect();
    for n in 1..=n_max {
        for k in 1..=k_max {
            let s2k = &rhs_tables[k - 1];
            for (s, lhs_table) in lhs_tables[k - 1].iter().enumerate() {
                let lhs = lhs_table.value(n);
                let (n_i, k_i, s_i) = (n as i64, k as i64, s as i64);
                let rhs = s2k.at(n_i + k_i - s_i) + s2k.at(n_i - s_i) - s2k.at(n_i - 2 * s_i);
                if *lhs != rhs {
                    return fail_int(
                        report,
                        vec![("n", n), ("k", k), ("s", s)],
                        lhs.clone(),
                        rhs,
                    );
                }
            }
        }
    }
    report
}

/// Right side of the divisible-case identity:
/// `sum_{j>=0} T_{2k}^1(n-(2j-1)k) + T_{2k}^1(n-2jk) + T_{2k}^1(n-(2j+1)k)`.
fn t_div_rhs(t2k: &SequenceTable, k: usize, n: usize) -> BigInt {
    let (n_i, k_i) = (n as i64, k as i64);
    let mut total = BigInt::zero();
    let mut j = 0i64;
    while n_i + k_i - 2 * j * k_i >= 0 {
        total += t2k.at(n_i - (2 * j - 1) * k_i);
        total += t2k.at(n_i - 2 * j * k_i);
        total += t2k.at(n_i - (2 * j + 1) * k_i);
        j += 1;
    }
    total
}

/// Checks `T_{|k}(n) = sum_{j>=0} (T_{2k}^1(n-(2j-1)k) + T_{2k}^1(n-2jk) +
/// T_{2k}^1(n-(2j+1)k))` for `1 <= k <= k_max`, `1 <= n <= n_max`, with
/// `T_{2k}^1` read as zero outside its support.
pub fn verify_t_div(k_max: usize, n_max: usize) -> VerificationReport {
    assert!(k_max >= 1, "k_max must be positive");
    let report = VerificationReport::pass(
        IdentityId::TDivTheorem,
        None,
        vec![("k_max", k_max)],
        n_max,
    );
    // every shifted index fits, and each T_{2k}^1 table can hold index 2k
    let order = (n_max + k_max).max(2 * k_max);
    let lhs_tables: Vec<SequenceTable> = (1..=k_max).map(|k| t_div_table(k, order)).collect();
    let rhs_tables: Vec<SequenceTable> = (1..=k_max).map(|k| t_table(2 * k, 1, order)).collect();
    for n in 1..=n_max {
        for k in 1..=k_max {
            let lhs = lhs_tables[k - 1].value(n);
            let rhs = t_div_rhs(&rhs_tables[k - 1], k, n);
            if *lhs != rhs {
                return fail_int(report, vec![("n", n), ("k", k)], lhs.clone(), rhs);
            }
        }
    }
    report
}

/// Checks `T_{s(k)}(n) = (k+s)(T_{2k}^1(n+k-s) - T_{2k}^1(n-2s)) +
/// s T_{2k}^1(n-s) + 2k sum_{l>=1} T_{2k}^1(n+k-s-kl) -
/// k sum_{l>=1} T_{2k}^1(n-2s-2kl)` for `1 <= k <= k_max`, `0 <= s < k`,
/// `1 <= n <= n_max`. At `s = 0` it additionally re-derives the divisible
/// case: the right side must equal `k` times the [`verify_t_div`]
/// combination.
pub fn verify_t_cong(k_max: usize, n_max: usize) -> VerificationReport {
    assert!(k_max >= 1, "k_max must be positive");
    let report = VerificationReport::pass(
        IdentityId::TCongTheorem,
        None,
        vec![("k_max", k_max)],
        n_max,
    );
    // every shifted index fits, and each T_{2k}^1 table can hold index 2k
    let order = (n_max + k_max).max(2 * k_max);
    let rhs_tables: Vec<SequenceTable> = (1..=k_max).map(|k| t_table(2 * k, 1, order)).collect();
    let lhs_tables: Vec<Vec<SequenceTable>> = (1..=k_max)
        .map(|k| (0..k).map(|s| t_cong_table(s, k, order)).collect())
        .collect();
    for n in 1..=n_max {
        for k in 1..=k_max {
            let t2k = &rhs_tables[k - 1];
            for (s, lhs_table) in lhs_tables[k - 1].iter().enumerate() {
                let lhs = lhs_table.value(n);
                let (n_i, k_i, s_i) = (n as i64, k as i64, s as i64);
                let mut rhs =
                    (t2k.at(n_i + k_i - s_i) - t2k.at(n_i - 2 * s_i)) * ((k + s) as u64);
                rhs += t2k.at(n_i - s_i) * s as u64;
                let mut l = 1i64;
                while n_i + k_i - s_i - k_i * l >= 0 {
                    rhs += t2k.at(n_i + k_i - s_i - k_i * l) * (2 * k as u64);
                    l += 1;
                }
                l = 1;
                while n_i - 2 * s_i - 2 * k_i * l >= 0 {
                    rhs -= t2k.at(n_i - 2 * s_i - 2 * k_i * l) * (k as u64);
                    l += 1;
                }
                if *lhs != rhs {
                    return fail_int(
                        report,
                        vec![("n", n), ("k", k), ("s", s)],
                        lhs.clone(),
                        rhs,
                    );
                }
                if s == 0 {
                    let divisible_form = t_div_rhs(t2k, k, n) * (k as u64);
                    if rhs != divisible_form {
                        return fail_int(
                            report,
                            vec![("n", n), ("k", k), ("s", s)],
                            rhs,
                            divisible_form,
                        );
                    }
                }
            }
        }
    }
    report
}
