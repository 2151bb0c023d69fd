//! Command-line surface for the nucleus machinery: render Pascal's triangle
//! modulo p, print nucleus dimension tables and class decompositions, and
//! run the three-way cross-verification sweep.
//!
//! Exit codes: 0 on success (and when every verification record agrees),
//! 1 on usage errors, 2 on a verification mismatch, 3 when a resource
//! guard is exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::time::Instant;

use nrc_core::basep::{to_base_p, Prime};
use nrc_core::classes::{self, ClassIndex};
use nrc_core::error::Error;
use nrc_core::gf::Fq;
use nrc_core::linalg::{MatrixFq, Subspace};
use nrc_core::nrc::CurveContext;
use nrc_core::nuclei::{self, NucleusReport};

const MAX_TRIANGLE_ROWS: u64 = 1000;
const MAX_VERIFY_N: u64 = 12;
const LINALG_CHECK_CASES: usize = 100;

#[derive(Parser)]
#[command(
    name = "nrc",
    version,
    about = "Nuclei of normal rational curves over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Align {
    Center,
    Left,
}

#[derive(Subcommand)]
enum Command {
    /// Render the first rows of Pascal's triangle modulo p.
    Triangle {
        /// Characteristic (a prime).
        #[arg(long)]
        p: u64,
        /// Number of rows to render (at most 1000).
        #[arg(long)]
        rows: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Text layout of the triangle.
        #[arg(long, value_enum, default_value_t = Align::Center)]
        align: Align,
    },
    /// Print the nucleus dimension table for the curve of degree n.
    Nuclei {
        /// Characteristic (a prime).
        #[arg(long)]
        p: u64,
        /// Ambient projective dimension.
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose the zero entries of row n of the triangle into classes.
    Classes {
        /// Characteristic (a prime).
        #[arg(long)]
        p: u64,
        /// Row of the triangle.
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check the dimension formula, the vanishing-binomial basis and
    /// the geometric intersection over GF(p^e), for n = 2..=max-n.
    Verify {
        /// Characteristic (a prime).
        #[arg(long)]
        p: u64,
        /// Extension degree of the field.
        #[arg(long, default_value_t = 1)]
        e: u32,
        /// Largest curve degree to sweep (at most 12).
        #[arg(long, default_value_t = 8)]
        max_n: u64,
        /// Seed for the randomized linear-algebra self-checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                std::process::exit(0);
            }
            eprint!("{err}");
            std::process::exit(1);
        }
    };
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    };
    std::process::exit(code);
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceLimit { .. } | Error::FieldTooLarge { .. } => 3,
        _ => 1,
    }
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Triangle {
            p,
            rows,
            format,
            align,
        } => cmd_triangle(p, rows, format, align),
        Command::Nuclei { p, n, format } => cmd_nuclei(p, n, format),
        Command::Classes { p, n, format } => cmd_classes(p, n, format),
        Command::Verify {
            p,
            e,
            max_n,
            seed,
            format,
        } => cmd_verify(p, e, max_n, seed, format),
    }
}

/// Little-endian digit list of any `u64` (b = n + 1 can reach 2^63, one
/// past the range `to_base_p` accepts).
fn raw_digits(value: u64, p: Prime) -> Vec<u64> {
    let mut digits = Vec::new();
    let mut rest = value;
    while rest > 0 {
        digits.push(rest % p.get());
        rest /= p.get();
    }
    digits
}

/// Big-endian digit list `<d,d,...,d>` of `value`, zero-padded to `width`
/// digits. Humans read most-significant-first; JSON output keeps the
/// little-endian internal convention instead.
fn digits_big_endian(value: u64, p: Prime, width: usize) -> String {
    let digits = raw_digits(value, p);
    let mut out: Vec<String> = Vec::with_capacity(width);
    for lambda in (0..width).rev() {
        out.push(digits.get(lambda).copied().unwrap_or(0).to_string());
    }
    format!("<{}>", out.join(","))
}

fn print_json(command: &str, params: Value, result: Value) {
    let doc = json!({
        "command": command,
        "params": params,
        "result": result,
    });
    println!("{doc}");
}

// ---------------------------------------------------------------------------
// triangle
// ---------------------------------------------------------------------------

fn cmd_triangle(p: u64, rows: u64, format: Format, align: Align) -> Result<i32, Error> {
    let prime = Prime::new(p)?;
    if rows > MAX_TRIANGLE_ROWS {
        return Err(Error::ResourceLimit {
            what: "triangle rows",
            requested: rows,
            limit: MAX_TRIANGLE_ROWS,
        });
    }
    let mut triangle: Vec<Vec<u64>> = Vec::with_capacity(rows as usize);
    let mut row = vec![1u64];
    for _ in 0..rows {
        triangle.push(row.clone());
        row.push(0);
        for s in (1..row.len()).rev() {
            row[s] = (row[s] + row[s - 1]) % prime.get();
        }
    }
    match format {
        Format::Json => {
            let params = json!({
                "align": if align == Align::Center { "center" } else { "left" },
                "format": "json",
                "p": p,
                "rows": rows,
            });
            print_json("triangle", params, json!({ "rows": triangle }));
        }
        Format::Text => {
            let lines: Vec<String> = triangle
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            let width = lines.last().map(|l| l.len()).unwrap_or(0);
            for line in &lines {
                match align {
                    Align::Left => println!("{line}"),
                    Align::Center => {
                        let pad = (width - line.len()) / 2;
                        println!("{}{line}", " ".repeat(pad));
                    }
                }
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// nuclei
// ---------------------------------------------------------------------------

fn cmd_nuclei(p: u64, n: u64, format: Format) -> Result<i32, Error> {
    let prime = Prime::new(p)?;
    let table = nuclei::nuclei_table(n, prime)?;
    match format {
        Format::Json => {
            let params = json!({ "format": "json", "n": n, "p": p });
            print_json("nuclei", params, nuclei_report_json(&table, prime)?);
        }
        Format::Text => {
            let width = raw_digits(table.b, prime).len();
            println!(
                "p = {}, n = {}, b = {} = {}, distinct nuclei: {}",
                p,
                n,
                table.b,
                digits_big_endian(table.b, prime, width),
                table.count()
            );
            let bound_width = table.b.to_string().len();
            for interval in &table.intervals {
                // k_high + 2 can exceed i64 when b = 2^63; widen first.
                let low = (interval.k_low as i128 + 1) as u64;
                let high = (interval.k_high as i128 + 2) as u64;
                println!(
                    "{} = {:>bw$} <= k+1 < {:>bw$} = {}   dim N^k = {}",
                    digits_big_endian(low, prime, width),
                    low,
                    high,
                    digits_big_endian(high, prime, width),
                    interval.dim,
                    bw = bound_width,
                );
            }
        }
    }
    Ok(0)
}

fn nuclei_report_json(table: &NucleusReport, prime: Prime) -> Result<Value, Error> {
    let intervals: Vec<Value> = table
        .intervals
        .iter()
        .map(|iv| {
            json!({
                "dim": iv.dim,
                "k_high": iv.k_high,
                "k_low": iv.k_low,
                "min_class": iv.min_class,
            })
        })
        .collect();
    Ok(json!({
        "b": table.b,
        "b_digits": raw_digits(table.b, prime),
        "d": table.count(),
        "endianness": "little",
        "intervals": intervals,
        "n": table.n,
        "p": table.p,
    }))
}

// ---------------------------------------------------------------------------
// classes
// ---------------------------------------------------------------------------

fn cmd_classes(p: u64, n: u64, format: Format) -> Result<i32, Error> {
    let prime = Prime::new(p)?;
    let b = n.checked_add(1).ok_or(Error::NaturalTooLarge(n))?;
    let digit_count = to_base_p(n, prime)?.len() as u64;
    let mut rows = Vec::new();
    let mut largest_nonempty = 0u64;
    for i in 1..=digit_count.max(1) {
        let phi = classes::phi(i, n, prime)?;
        let top = classes::top_line(ClassIndex::Finite(i), b, prime)?;
        let max_member = classes::max_class_member(i, n, prime)?;
        if phi > 0 {
            largest_nonempty = i;
        }
        rows.push((i, phi, top, max_member));
    }
    rows.truncate(largest_nonempty as usize);
    let sigma_1 = classes::sigma(1, n, prime)?;

    match format {
        Format::Json => {
            let class_rows: Vec<Value> = rows
                .iter()
                .map(|&(i, phi, top, max_member)| {
                    json!({
                        "i": i,
                        "max_member": max_member,
                        "phi": phi,
                        "top_line": top,
                    })
                })
                .collect();
            let params = json!({ "format": "json", "n": n, "p": p });
            let result = json!({
                "b": b,
                "b_digits": raw_digits(b, prime),
                "classes": class_rows,
                "endianness": "little",
                "n": n,
                "p": p,
                "sigma_1": sigma_1,
            });
            print_json("classes", params, result);
        }
        Format::Text => {
            let width = raw_digits(b, prime).len();
            println!(
                "p = {}, n = {}, b = {} = {}",
                p,
                n,
                b,
                digits_big_endian(b, prime, width)
            );
            if rows.is_empty() {
                println!("no non-empty classes");
            } else {
                println!(
                    "{:>5}  {:>10}  {:>10}  {:>10}",
                    "class", "phi", "top_line", "max"
                );
                for (i, phi, top, max_member) in &rows {
                    let max = match max_member {
                        Some(m) => m.to_string(),
                        None => "empty".to_string(),
                    };
                    println!("{i:>5}  {phi:>10}  {top:>10}  {max:>10}");
                }
            }
            println!("sigma(1, {n}) = {sigma_1} zero entries in row {n}");
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerificationRecord {
    n: u64,
    k: i64,
    dim_formula: i64,
    dim_basis: i64,
    dim_geometric: i64,
    basis_match: bool,
    agree: bool,
    elapsed_ms: u64,
}

fn cmd_verify(p: u64, e: u32, max_n: u64, seed: u64, format: Format) -> Result<i32, Error> {
    let prime = Prime::new(p)?;
    if max_n > MAX_VERIFY_N {
        return Err(Error::ResourceLimit {
            what: "max-n",
            requested: max_n,
            limit: MAX_VERIFY_N,
        });
    }
    let field = Fq::new(prime, e)?;
    let q = field.order();

    let linalg_ok = linalg_self_checks(&field, seed);

    let mut records = Vec::new();
    for n in 2..=max_n {
        let ctx = CurveContext::new(field.clone(), n as usize)?;
        for k in -1..n as i64 {
            if q < (k + 1) as u64 {
                continue;
            }
            let started = Instant::now();
            let dim_formula = nuclei::nucleus_dim(k, n, prime)?;
            let indices = nuclei::nucleus_basis_indices(k, n, prime)?;
            let dim_basis = indices.len() as i64 - 1;
            let geometric = ctx.geometric_nucleus(k)?;
            let dim_geometric = geometric.projective_dim();
            let expected_rows: Vec<Vec<_>> = indices
                .iter()
                .map(|&j| {
                    let mut v = vec![field.zero(); n as usize + 1];
                    v[j as usize] = field.one();
                    v
                })
                .collect();
            let expected = Subspace::from_rows(field.clone(), n as usize + 1, expected_rows);
            let basis_match = geometric == expected;
            let agree = dim_formula == dim_basis && dim_basis == dim_geometric;
            records.push(VerificationRecord {
                n,
                k,
                dim_formula,
                dim_basis,
                dim_geometric,
                basis_match,
                agree,
                elapsed_ms: started.elapsed().as_millis() as u64,
            });
        }
    }
    let all_agree = records.iter().all(|r| r.agree && r.basis_match) && linalg_ok;

    match format {
        Format::Json => {
            let params = json!({
                "e": e,
                "format": "json",
                "max_n": max_n,
                "p": p,
                "seed": seed,
            });
            let record_values: Vec<Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "agree": r.agree,
                        "basis_match": r.basis_match,
                        "dim_basis": r.dim_basis,
                        "dim_formula": r.dim_formula,
                        "dim_geometric": r.dim_geometric,
                        "e": e,
                        "elapsed_ms": r.elapsed_ms,
                        "k": r.k,
                        "n": r.n,
                        "p": p,
                        "q": q,
                    })
                })
                .collect();
            let result = json!({
                "all_agree": all_agree,
                "endianness": "little",
                "linalg_checks": {
                    "cases": LINALG_CHECK_CASES,
                    "passed": linalg_ok,
                    "seed": seed,
                },
                "modulus": field.modulus(),
                "q": q,
                "records": record_values,
            });
            print_json("verify", params, result);
        }
        Format::Text => {
            println!(
                "field {} (q = {q}), modulus coefficients (low to high): {:?}",
                field,
                field.modulus()
            );
            println!(
                "linalg self-checks (seed {seed}, {LINALG_CHECK_CASES} cases): {}",
                if linalg_ok { "ok" } else { "FAILED" }
            );
            println!(
                "{:>4} {:>4} {:>8} {:>6} {:>10} {:>12} {:>6} {:>4}",
                "n", "k", "formula", "basis", "geometric", "basis-match", "agree", "ms"
            );
            for r in &records {
                println!(
                    "{:>4} {:>4} {:>8} {:>6} {:>10} {:>12} {:>6} {:>4}",
                    r.n,
                    r.k,
                    r.dim_formula,
                    r.dim_basis,
                    r.dim_geometric,
                    if r.basis_match { "yes" } else { "NO" },
                    if r.agree { "yes" } else { "NO" },
                    r.elapsed_ms
                );
            }
            let mismatches = records
                .iter()
                .filter(|r| !(r.agree && r.basis_match))
                .count();
            println!(
                "summary: {} records, {} mismatches",
                records.len(),
                mismatches
            );
        }
    }
    Ok(if all_agree { 0 } else { 2 })
}

/// Deterministic randomized sanity checks of the exact linear algebra:
/// reduction idempotence, row/column rank symmetry and the rank-nullity
/// identity on random matrices over the chosen field.
fn linalg_self_checks(field: &Fq, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..LINALG_CHECK_CASES {
        let entries = (0..6 * 8)
            .map(|_| field.from_index(rng.gen_range(0..field.order())).unwrap())
            .collect();
        let m = MatrixFq::new(field.clone(), 6, 8, entries);
        let (reduced, rank) = m.rref();
        if reduced.rref() != (reduced.clone(), rank) {
            return false;
        }
        if m.transpose().rank() != rank {
            return false;
        }
        if rank + m.nullspace().rank() != 8 {
            return false;
        }
    }
    true
}
