//! Command-line front end: sequence tables, object enumeration, identity
//! verification, and the pinned-value self-test.
//!
//! Exit codes: 0 on success / all checks passing, 1 on verification failure,
//! 2 on usage errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ncolor::arith::{log_expand, prime_power_decompose, totient, LogCombination};
use ncolor::counting::{
    ell_table_gf, p_table, pl_table, s_cong_table, s_table, t_cong_table, t_div_table, t_table,
    t_tables, SequenceTable,
};
use ncolor::enumerate::{
    enumerate_ncolor, enumerate_partitions, for_each_ncolor, for_each_partition, t_oracle,
};
use ncolor::identities::{
    verify_andrews_deutsch, verify_corollaries, verify_main, verify_phi, verify_r1_special,
    verify_s_cong, verify_t_cong, verify_t_div, verify_vonmangoldt, VerificationReport,
};
use ncolor::ArithmeticFunctionSpec;

#[derive(Parser)]
#[command(
    name = "ncolor",
    version,
    about = "Exact n-color partition counting tables, enumeration, and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Jsonl,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Print a counting sequence (pl, p, t, ell, s, s-cong, t-div, t-cong)
    Table {
        /// Sequence name
        name: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Truncation order N (indices 0..=N)
        #[arg(long, default_value_t = 40)]
        max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write to a file instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List partition objects one per line (kinds: ncolor, partitions)
    Enumerate {
        kind: String,
        weight: usize,
        /// Smallest allowed part size (ncolor only)
        #[arg(long, default_value_t = 1)]
        min_part: usize,
    },
    /// Check identities; reports stream to stdout as JSON lines
    Verify(VerifyOpts),
    /// Re-check the pinned reference values
    Selftest,
}

#[derive(clap::Args)]
struct VerifyOpts {
    /// One of: all, main, r1, corollaries, vonmangoldt, phi,
    /// andrews-deutsch, s-cong, t-div, t-cong
    identity: String,
    /// Arithmetic function for main/r1: unit, mobius, one, liouville,
    /// sigma (with --alpha), totient, vonmangoldt
    #[arg(long = "A", visible_alias = "a")]
    function: Option<String>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long, default_value_t = 4)]
    r_max: usize,
    #[arg(long, default_value_t = 2)]
    alpha_max: u32,
    /// Largest m or n to check
    #[arg(long, default_value_t = 40)]
    max: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Jsonl)]
    format: ReportFormat,
}

/// A user error: reported on stderr, exit code 2.
struct UsageError(String);

impl UsageError {
    fn new(msg: impl Into<String>) -> Self {
        UsageError(msg.into())
    }
}

const SEQUENCE_NAMES: &str = "pl, p, t, ell, s, s-cong, t-div, t-cong";
const IDENTITY_NAMES: &str =
    "all, main, r1, corollaries, vonmangoldt, phi, andrews-deutsch, s-cong, t-div, t-cong";
const FUNCTION_NAMES: &str = "unit, mobius, one, liouville, sigma, power, totient, vonmangoldt";

fn require<T>(value: Option<T>, what: &str, name: &str) -> Result<T, UsageError> {
    value.ok_or_else(|| UsageError::new(format!("'{name}' requires {what}")))
}

fn build_table(
    name: &str,
    k: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    max: usize,
) -> Result<SequenceTable, UsageError> {
    if max < 1 {
        return Err(UsageError::new("--max must be at least 1"));
    }
    let check_s_k = |s: usize, k: usize| {
        if s >= k {
            Err(UsageError::new(format!("--s must be below --k (got s={s}, k={k})")))
        } else {
            Ok(())
        }
    };
    let check_positive = |v: usize, flag: &str| {
        if v == 0 {
            Err(UsageError::new(format!("--{flag} must be positive")))
        } else {
            Ok(())
        }
    };
    match name {
        "pl" => Ok(pl_table(max)),
        "p" => Ok(p_table(max)),
        "t" => {
            let k = require(k, "--k", name)?;
            let r = require(r, "--r", name)?;
            check_positive(k, "k")?;
            check_positive(r, "r")?;
            if k > max {
                return Err(UsageError::new(format!(
                    "--k ({k}) exceeds the truncation order --max ({max})"
                )));
            }
            Ok(t_table(k, r, max))
        }
        "ell" => Ok(ell_table_gf(require(r, "--r", name)?, max)),
        "s" => {
            let k = require(k, "--k", name)?;
            check_positive(k, "k")?;
            Ok(s_table(k, max))
        }
        "s-cong" => {
            let s = require(s, "--s", name)?;
            let k = require(k, "--k", name)?;
            check_positive(k, "k")?;
            check_s_k(s, k)?;
            Ok(s_cong_table(s, k, max))
        }
        "t-div" => {
            let k = require(k, "--k", name)?;
            check_positive(k, "k")?;
            Ok(t_div_table(k, max))
        }
        "t-cong" => {
            let s = require(s, "--s", name)?;
            let k = require(k, "--k", name)?;
            check_positive(k, "k")?;
            check_s_k(s, k)?;
            Ok(t_cong_table(s, k, max))
        }
        other => Err(UsageError::new(format!(
            "unknown sequence '{other}'; valid names: {SEQUENCE_NAMES}"
        ))),
    }
}

fn render_table(table: &SequenceTable, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
        TableFormat::Pretty => {
            let mut header = format!("# {}", table.name());
            for (key, val) in table.params() {
                write!(header, " {key}={val}").unwrap();
            }
            let width = table.order().to_string().len();
            let mut out = header;
            out.push('\n');
            for (i, v) in table.values().iter().enumerate() {
                writeln!(out, "{i:>width$} {v}").unwrap();
            }
            out
        }
    }
}

fn parse_function(
    name: &str,
    alpha: Option<u32>,
) -> Result<ArithmeticFunctionSpec, UsageError> {
    use ArithmeticFunctionSpec as A;
    Ok(match name {
        "unit" | "unit-floor" => A::UnitFloor,
        "mobius" => A::Mobius,
        "one" => A::One,
        "liouville" => A::Liouville,
        "sigma" | "power" => A::Power(alpha.unwrap_or(1)),
        "totient" => A::Totient,
        "vonmangoldt" | "von-mangoldt" => A::VonMangoldt,
        other => {
            return Err(UsageError::new(format!(
                "unknown arithmetic function '{other}'; valid names: {FUNCTION_NAMES}"
            )))
        }
    })
}

/// The default grid run by `verify all`: every identity at bound `max`.
fn verify_all(max: usize) -> Vec<VerificationReport> {
    use ArithmeticFunctionSpec as A;
    let specs = [A::UnitFloor, A::Mobius, A::One, A::Liouville, A::Power(1), A::Power(2)];
    let mut reports = Vec::new();
    for a in &specs {
        for r in 1..=4.min(max) {
            reports.push(verify_main(a, r, max));
        }
        reports.push(verify_r1_special(a, max));
    }
    reports.extend(verify_corollaries(max, 4.min(max), 2));
    for r in 1..=4.min(max) {
        reports.push(verify_vonmangoldt(r, max));
    }
    reports.push(verify_phi(max.saturating_sub(5)));
    reports.push(verify_andrews_deutsch(4, max));
    reports.push(verify_s_cong(4, max));
    reports.push(verify_t_div(3, max));
    reports.push(verify_t_cong(3, max));
    reports
}

fn run_verify(opts: VerifyOpts) -> Result<ExitCode, UsageError> {
    let max = opts.max;
    if max < 1 {
        return Err(UsageError::new("--max must be at least 1"));
    }
    let r = opts.r.unwrap_or(1);
    if r < 1 {
        return Err(UsageError::new("--r must be positive"));
    }
    if r > max {
        return Err(UsageError::new(format!("--r ({r}) exceeds --max ({max})")));
    }
    if opts.k_max == Some(0) {
        return Err(UsageError::new("--k-max must be positive"));
    }
    if opts.r_max < 1 {
        return Err(UsageError::new("--r-max must be positive"));
    }
    let identity = opts.identity.as_str();
    let reports = match identity {
        "all" => verify_all(max),
        "main" => {
            let name = require(opts.function, "--A", identity)?;
            vec![verify_main(&parse_function(&name, opts.alpha)?, r, max)]
        }
        "r1" => {
            let name = require(opts.function, "--A", identity)?;
            let spec = parse_function(&name, opts.alpha)?;
            if spec == ArithmeticFunctionSpec::VonMangoldt {
                return Err(UsageError::new(
                    "the r=1 special case needs an integer-valued function; \
                     use 'verify vonmangoldt' instead",
                ));
            }
            vec![verify_r1_special(&spec, max)]
        }
        "corollaries" => verify_corollaries(max, opts.r_max.min(max), opts.alpha_max),
        "vonmangoldt" => vec![verify_vonmangoldt(r, max)],
        "phi" => vec![verify_phi(max)],
        "andrews-deutsch" => vec![verify_andrews_deutsch(opts.k_max.unwrap_or(4), max)],
        "s-cong" => vec![verify_s_cong(opts.k_max.unwrap_or(4), max)],
        "t-div" => vec![verify_t_div(opts.k_max.unwrap_or(3), max)],
        "t-cong" => vec![verify_t_cong(opts.k_max.unwrap_or(3), max)],
        other => {
            return Err(UsageError::new(format!(
                "unknown identity '{other}'; valid names: {IDENTITY_NAMES}"
            )))
        }
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut failures = 0usize;
    for report in &reports {
        if !report.passed() {
            failures += 1;
        }
        let line = match opts.format {
            ReportFormat::Jsonl => report.to_json(),
            ReportFormat::Pretty => report.pretty(),
        };
        writeln!(out, "{line}").expect("write to stdout");
    }
    out.flush().expect("flush stdout");
    if failures > 0 {
        eprintln!("{failures} of {} reports failed", reports.len());
        Ok(ExitCode::from(1))
    } else {
        eprintln!("all {} reports passed", reports.len());
        Ok(ExitCode::SUCCESS)
    }
}

fn run_enumerate(kind: &str, weight: usize, min_part: usize) -> Result<ExitCode, UsageError> {
    if min_part < 1 {
        return Err(UsageError::new("--min-part must be positive"));
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match kind {
        "ncolor" => {
            for_each_ncolor(weight, min_part, |parts| {
                let mut line = String::new();
                for (i, (size, color)) in parts.iter().enumerate() {
                    if i > 0 {
                        line.push('+');
                    }
                    write!(line, "{size}_{color}").unwrap();
                }
                writeln!(out, "{line}").expect("write to stdout");
            });
        }
        "partitions" => {
            if min_part != 1 {
                return Err(UsageError::new("--min-part only applies to 'ncolor'"));
            }
            for_each_partition(weight, |parts| {
                let line = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+");
                writeln!(out, "{line}").expect("write to stdout");
            });
        }
        other => {
            return Err(UsageError::new(format!(
                "unknown kind '{other}'; valid kinds: ncolor, partitions"
            )))
        }
    }
    out.flush().expect("flush stdout");
    Ok(ExitCode::SUCCESS)
}

fn selftest() -> ExitCode {
    let mut failures = 0usize;
    let mut check = |name: &str, got: String, want: String| {
        if got == want {
            println!("ok {name}");
        } else {
            println!("FAIL {name}: expected {want}, got {got}");
            failures += 1;
        }
    };

    check("p(4) = 5", enumerate_partitions(4).len().to_string(), "5".into());
    check(
        "PL(4) = 13 (series)",
        pl_table(4).value(4).to_string(),
        "13".into(),
    );
    check(
        "PL(4) = 13 (enumeration)",
        enumerate_ncolor(4, 1).len().to_string(),
        "13".into(),
    );
    for (k, r, m, want) in [(3, 2, 5, "2"), (2, 3, 5, "3"), (2, 3, 7, "8")] {
        check(
            &format!("T_{k}^{r}({m}) = {want} (series)"),
            t_table(k, r, m).value(m).to_string(),
            want.into(),
        );
        check(
            &format!("T_{k}^{r}({m}) = {want} (enumeration)"),
            t_oracle(k, r, m).to_string(),
            want.into(),
        );
    }

    let ell2: Vec<String> = ncolor::counting::ell_table_recursive(2, 9)
        .values()
        .iter()
        .map(|v| v.to_string())
        .collect();
    check(
        "ell_2(0..9) row",
        ell2.join(","),
        "1,1,3,3,6,6,10,10,15,15".into(),
    );

    let t33 = t_table(3, 3, 11);
    check("T_3^3(11) = 38", t33.value(11).to_string(), "38".into());
    check("T_3^3(10) = 23", t33.value(10).to_string(), "23".into());

    // log-coefficient row at m = 11, r = 3
    {
        let m = 11;
        let pl = pl_table(m);
        let t = t_tables(3, m, m);
        let ell = ncolor::counting::ell_table_recursive(2, m);
        let mut lhs = LogCombination::new();
        for k in 2..=m {
            lhs.add_scaled(&log_expand(k), pl.value(m - k));
        }
        let mut rhs = LogCombination::new();
        for k in 2..=m {
            if let Some((p, _)) = prime_power_decompose(k) {
                let w = (0..=m - k).map(|j| t[k - 1].value(m - j) * ell.value(j)).sum();
                rhs.add_term(p, &w);
            }
        }
        let want = "497*log(2) + 190*log(3) + 49*log(5) + 13*log(7) + log(11)";
        check("log row at m=11 (left side)", lhs.to_string(), want.into());
        check("log row at m=11 (right side)", rhs.to_string(), want.into());
        let part3: ncolor::BigInt =
            (0..=8).map(|j| t[3 - 1].value(m - j) * ell.value(j)).sum();
        let part9: ncolor::BigInt =
            (0..=2).map(|j| t[9 - 1].value(m - j) * ell.value(j)).sum();
        check("log(3) split 187 + 3", format!("{part3}+{part9}"), "187+3".into());
    }

    // totient identity at m = 6
    {
        let pl = pl_table(8);
        check(
            "PL(8) - PL(6) = 112",
            (pl.value(8) - pl.value(6)).to_string(),
            "112".into(),
        );
        let t = t_tables(3, 11, 11);
        let sum: ncolor::BigInt = (3..=11)
            .map(|k| t[k - 1].value(11) * totient(k) as u64)
            .sum();
        check("phi-weighted sum at m=6", (sum / 2u32).to_string(), "112".into());
    }

    if failures == 0 {
        println!("selftest: all pinned values match");
        ExitCode::SUCCESS
    } else {
        println!("selftest: {failures} mismatches");
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Table {
            name,
            k,
            r,
            s,
            max,
            format,
            output,
        } => {
            let table = build_table(&name, k, r, s, max)?;
            let rendered = render_table(&table, format);
            match output {
                Some(path) => {
                    fs::write(&path, rendered)
                        .map_err(|e| UsageError::new(format!("cannot write {}: {e}", path.display())))?;
                }
                None => {
                    print!("{rendered}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            kind,
            weight,
            min_part,
        } => run_enumerate(&kind, weight, min_part),
        Command::Verify(opts) => run_verify(opts),
        Command::Selftest => Ok(selftest()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
