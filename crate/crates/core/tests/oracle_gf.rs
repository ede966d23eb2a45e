//! Cross-validation of every generating-function table against its
//! brute-force enumeration oracle. The oracle is ground truth: any
//! disagreement fails with the minimal counterexample.

use num_bigint::BigInt;

use ncolor::counting::{
    p_table, pl_table, s_cong_table, s_table, t_cong_table, t_div_table, t_table,
};
use ncolor::enumerate::{
    enumerate_ncolor, enumerate_partitions, s_cong_oracle, s_oracle, t_cong_oracle, t_div_oracle,
    t_oracle,
};

#[test]
fn pl_series_counts_ncolor_objects() {
    let pl = pl_table(18);
    for m in 0..=18 {
        assert_eq!(
            pl.value(m),
            &BigInt::from(enumerate_ncolor(m, 1).len()),
            "first mismatch at m={m}"
        );
    }
}

#[test]
fn p_series_counts_partitions() {
    let p = p_table(30);
    for n in 0..=30 {
        assert_eq!(
            p.value(n),
            &BigInt::from(enumerate_partitions(n).len()),
            "first mismatch at n={n}"
        );
    }
}

#[test]
fn t_series_matches_oracle_on_full_grid() {
    const MAX: usize = 14;
    for r in 1..=MAX {
        for k in 1..=MAX {
            let table = t_table(k, r, MAX);
            for m in 0..=MAX {
                assert_eq!(
                    table.value(m),
                    &BigInt::from(t_oracle(k, r, m)),
                    "first mismatch at k={k} r={r} m={m}"
                );
            }
        }
    }
}

#[test]
fn s_series_matches_oracle() {
    const MAX: usize = 25;
    // one enumeration pass per n serves every k
    let counts: Vec<Vec<usize>> = (0..=MAX)
        .map(|n| {
            let mut row = vec![0usize; MAX + 1];
            for p in enumerate_partitions(n) {
                for &part in p.parts() {
                    row[part] += 1;
                }
            }
            row
        })
        .collect();
    for k in 1..=MAX {
        let table = s_table(k, MAX);
        for (n, row) in counts.iter().enumerate().skip(1) {
            assert_eq!(
                table.value(n),
                &BigInt::from(row[k]),
                "first mismatch at k={k} n={n}"
            );
        }
    }
    // the batched pass agrees with the per-statistic oracle
    for k in 1..=5 {
        for (n, row) in counts.iter().enumerate().skip(1) {
            assert_eq!(row[k], s_oracle(k, n), "k={k} n={n}");
        }
    }
}

#[test]
fn s_cong_series_matches_oracle() {
    const MAX: usize = 25;
    for k in 1..=5 {
        for s in 0..k {
            let table = s_cong_table(s, k, MAX);
            for n in 1..=MAX {
                assert_eq!(
                    table.value(n),
                    &BigInt::from(s_cong_oracle(s, k, n)),
                    "first mismatch at s={s} k={k} n={n}"
                );
            }
        }
    }
}

#[test]
fn t_div_series_matches_oracle() {
    const MAX: usize = 18;
    for k in 1..=4 {
        let table = t_div_table(k, MAX);
        for n in 1..=MAX {
            assert_eq!(
                table.value(n),
                &BigInt::from(t_div_oracle(k, n)),
                "first mismatch at k={k} n={n}"
            );
        }
    }
}

#[test]
fn t_cong_series_matches_oracle() {
    const MAX: usize = 18;
    for k in 1..=3 {
        for s in 0..k {
            let table = t_cong_table(s, k, MAX);
            for n in 1..=MAX {
                assert_eq!(
                    table.value(n),
                    &BigInt::from(t_cong_oracle(s, k, n)),
                    "first mismatch at s={s} k={k} n={n}"
                );
            }
        }
    }
}

#[test]
fn table_json_round_trips() {
    for table in [pl_table(12), t_table(3, 3, 11), s_cong_table(1, 3, 10)] {
        let json: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
        assert_eq!(json["name"], table.name());
        for (key, val) in table.params() {
            assert_eq!(json["params"][key], serde_json::json!(val));
        }
        let values = json["values"].as_array().unwrap();
        assert_eq!(values.len(), table.order() + 1);
        for (i, v) in values.iter().enumerate() {
            // arbitrary-precision parse keeps every digit; compare exactly
            assert_eq!(v.to_string(), table.value(i).to_string(), "index {i}");
        }
    }
}
