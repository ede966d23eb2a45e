//! Exact counting functions on n-color partitions and machine verification
//! of the identities relating them to classical arithmetic functions.
//!
//! An n-color partition of `m` is a partition in which a part of size `n`
//! may carry any of `n` colors; `PL(m)` counts them and equals the plane
//! partition numbers. The crate computes `PL`, the two-branch statistic
//! `T_k^r`, the `ell_r` coefficient tables, and the part-counting statistics
//! `S_k`, `S_{s(k)}`, `T_{|k}`, `T_{s(k)}` — each one twice: once from a
//! truncated generating function over big integers, and once by brute-force
//! enumeration. The [`identities`] module checks every identity tying these
//! together, exactly, with structured pass/fail reports.
//!
//! * [`series`] — truncated formal power series over `BigInt`.
//! * [`arith`] — Möbius, Liouville, totient, divisor sums, log-combinations.
//! * [`enumerate`] — partition object enumeration, the oracle side.
//! * [`counting`] — the generating-function sequence tables.
//! * [`identities`] — identity verification with reports.

pub mod arith;
pub mod counting;
pub mod enumerate;
pub mod identities;
pub mod series;

pub use arith::{ArithmeticFunctionSpec, LogCombination};
pub use counting::SequenceTable;
pub use identities::{IdentityId, VerificationReport};
pub use series::TruncatedSeries;

/// Re-export of the big-integer type appearing throughout the public API.
pub use num_bigint::BigInt;
