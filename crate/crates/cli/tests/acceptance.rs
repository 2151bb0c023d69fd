//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Run with `cargo test -p nrc-cli --test acceptance -- --nocapture` to see
//! the per-criterion lines. Every tolerance here is exact (integer
//! equality); the only non-exact assertions are the stated runtime budgets.

use serde_json::Value;
use std::process::Command;
use std::time::{Duration, Instant};

use nrc_core::basep::{binom_mod_p_direct, lucas_binom, pascal_row_mod_p, preceq, to_base_p};
use nrc_core::classes::{self, ClassIndex};
use nrc_core::gf::Fq;
use nrc_core::linalg::{MatrixFq, Subspace};
use nrc_core::nrc::CurveContext;
use nrc_core::nuclei::{self, PointNucleus};
use nrc_core::Prime;

fn prime(v: u64) -> Prime {
    Prime::new(v).unwrap()
}

fn unit_span(field: &Fq, ambient: usize, indices: &[u64]) -> Subspace {
    let rows = indices
        .iter()
        .map(|&j| {
            let mut v = vec![field.zero(); ambient];
            v[j as usize] = field.one();
            v
        })
        .collect();
    Subspace::from_rows(field.clone(), ambient, rows)
}

/// All prime powers q = p^e up to 16 for p in {2, 3}, as (p, e) pairs.
fn sweep_fields() -> Vec<(u64, u32)> {
    vec![(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)]
}

#[test]
fn criterion_1_degree_305_table_through_the_cli() {
    let out = Command::new(env!("CARGO_BIN_EXE_nrc"))
        .args(["nuclei", "--p", "3", "--n", "305", "--format", "json"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let intervals = doc["result"]["intervals"].as_array().unwrap();
    assert_eq!(intervals.len(), 3, "exactly three intervals");
    let bounds: Vec<(i64, i64, i64)> = intervals
        .iter()
        .map(|iv| {
            (
                iv["k_low"].as_i64().unwrap() + 1,
                iv["k_high"].as_i64().unwrap() + 2,
                iv["dim"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(bounds, vec![(0, 243, -1), (243, 297, 179), (297, 306, 251)]);

    let started = Instant::now();
    let table = nuclei::nuclei_table(305, prime(3)).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(table.count(), 3);
    assert!(
        elapsed < Duration::from_millis(10),
        "table computed in {elapsed:?}"
    );
    println!("[PASS] 1: dimension table for p=3, n=305 reproduced exactly ({elapsed:?})");
}

#[test]
fn criterion_2_binary_quartic_example() {
    let started = Instant::now();
    let p2 = prime(2);
    let dims: Vec<i64> = (0..4)
        .map(|k| nuclei::nucleus_dim(k, 4, p2).unwrap())
        .collect();
    assert_eq!(dims, vec![-1, -1, -1, 2]);
    assert_eq!(
        nuclei::nucleus_basis_indices(3, 4, p2).unwrap(),
        vec![1, 2, 3]
    );

    let field = Fq::new(p2, 2).unwrap();
    let ctx = CurveContext::new(field.clone(), 4).unwrap();
    let nucleus = ctx.geometric_nucleus(3).unwrap();
    assert_eq!(nucleus.projective_dim(), 2);
    assert_eq!(nucleus, unit_span(&field, 5, &[1, 2, 3]));
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_millis(100), "{elapsed:?}");
    println!("[PASS] 2: p=2, n=4 dims (-1,-1,-1,2) and plane P1 P2 P3 ({elapsed:?})");
}

#[test]
fn criterion_3_concurrent_conic_tangents() {
    let p2 = prime(2);
    assert_eq!(
        nuclei::point_nucleus(2, p2).unwrap(),
        Some(PointNucleus {
            exponent: 1,
            point_index: 1
        })
    );
    for e in 1..=3u32 {
        let field = Fq::new(p2, e).unwrap();
        let ctx = CurveContext::new(field.clone(), 2).unwrap();
        let nucleus = ctx.geometric_nucleus(1).unwrap();
        assert_eq!(nucleus.projective_dim(), 0, "e={e}");
        assert_eq!(nucleus, unit_span(&field, 3, &[1]), "e={e}");
    }
    println!("[PASS] 3: conic tangents over GF(2^e) meet in the point P_1");
}

#[test]
fn criterion_4_three_way_oracle_sweep() {
    let started = Instant::now();
    let mut records = 0usize;
    for (p, e) in sweep_fields() {
        let pr = prime(p);
        let field = Fq::new(pr, e).unwrap();
        let q = field.order();
        for n in 2..=8u64 {
            let ctx = CurveContext::new(field.clone(), n as usize).unwrap();
            for k in -1..n as i64 {
                if q < (k + 1) as u64 {
                    continue;
                }
                let dim_formula = nuclei::nucleus_dim(k, n, pr).unwrap();
                let indices = nuclei::nucleus_basis_indices(k, n, pr).unwrap();
                let geometric = ctx.geometric_nucleus(k).unwrap();
                assert_eq!(
                    dim_formula,
                    indices.len() as i64 - 1,
                    "formula vs basis p={p} e={e} n={n} k={k}"
                );
                assert_eq!(
                    dim_formula,
                    geometric.projective_dim(),
                    "formula vs geometric p={p} e={e} n={n} k={k}"
                );
                assert_eq!(
                    geometric,
                    unit_span(&field, n as usize + 1, &indices),
                    "geometric basis p={p} e={e} n={n} k={k}"
                );
                records += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "{elapsed:?}");
    println!("[PASS] 4: three-way sweep agreed on {records} records ({elapsed:?})");
}

#[test]
fn criterion_5_combinatorial_oracles() {
    let started = Instant::now();

    // (a) Digit-product rule vs additive recurrence on the full square
    // n, j <= 2000, including the j > n region where both vanish.
    for &p in &[2u64, 3, 5, 7] {
        let pr = prime(p);
        for n in 0..=2000u64 {
            let row = pascal_row_mod_p(n, pr).unwrap();
            for j in 0..=2000u64 {
                let direct = if j > n { 0 } else { row[j as usize] };
                assert_eq!(lucas_binom(n, j, pr), direct, "p={p} n={n} j={j}");
            }
        }
        // Pin the single-entry wrapper on a sample, including j > n.
        for &(n, j) in &[(0u64, 0u64), (1999, 1001), (2000, 2000), (100, 1500)] {
            let row = pascal_row_mod_p(n, pr).unwrap();
            let expected = if j > n { 0 } else { row[j as usize] };
            assert_eq!(binom_mod_p_direct(n, j, pr).unwrap(), expected);
        }
    }

    // (b) Closed-form class sizes vs brute-force enumeration.
    for &p in &[2u64, 3, 5] {
        let pr = prime(p);
        for n in 0..=1000u64 {
            let max_i = to_base_p(n + 1, pr).unwrap().len() as u64 + 1;
            for i in 1..=max_i {
                assert_eq!(
                    classes::phi(i, n, pr).unwrap(),
                    classes::class_members(ClassIndex::Finite(i), n, pr, n)
                        .unwrap()
                        .len() as u64,
                    "p={p} n={n} i={i}"
                );
            }
        }
    }

    // (c) Telescoping of the tail counts, and the complement identity
    // sigma(1, n) = n + 1 - prod (n_lambda + 1) with the product equal to
    // the number of j preceq n.
    for &p in &[2u64, 3, 5] {
        let pr = prime(p);
        for n in 0..=1000u64 {
            let max_i = to_base_p(n + 1, pr).unwrap().len() as u64 + 1;
            for i in 1..=max_i {
                assert_eq!(
                    classes::sigma(i, n, pr).unwrap() - classes::sigma(i + 1, n, pr).unwrap(),
                    classes::phi(i, n, pr).unwrap(),
                    "telescoping p={p} n={n} i={i}"
                );
            }
            let prod: u64 = to_base_p(n, pr)
                .unwrap()
                .as_slice()
                .iter()
                .map(|&d| d + 1)
                .product();
            assert_eq!(
                classes::sigma(1, n, pr).unwrap(),
                n + 1 - prod,
                "p={p} n={n}"
            );
            let count = (0..=n).filter(|&j| preceq(j, n, pr)).count() as u64;
            assert_eq!(count, prod, "p={p} n={n}");
        }
    }

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "{elapsed:?}");
    println!("[PASS] 5: combinatorial oracles agreed with zero mismatches ({elapsed:?})");
}

#[test]
fn criterion_6_structural_invariants() {
    // Partition totality: an entry vanishes mod p iff it belongs to a class.
    for &p in &[2u64, 3] {
        let pr = prime(p);
        for n in 0..=500u64 {
            for j in 0..=2 * n {
                assert_eq!(
                    classes::class_of(n, j, pr).is_some(),
                    lucas_binom(n, j, pr) == 0,
                    "p={p} n={n} j={j}"
                );
            }
        }
    }

    // Top line chain: constant b through the lowest nonzero digit position
    // of b, a strict drop right above it, non-increasing ever after.
    for &p in &[2u64, 3, 5] {
        let pr = prime(p);
        for n in 0..=500u64 {
            let b = n + 1;
            let profile = classes::class_profile(n, pr).unwrap();
            let mut prev = b;
            for r in 0..=profile.max_nonzero + 2 {
                let t = classes::top_line(ClassIndex::Finite(r), b, pr).unwrap();
                if r <= profile.min_nonzero {
                    assert_eq!(t, b, "flat part p={p} n={n} r={r}");
                } else {
                    assert!(t <= prev, "monotone p={p} n={n} r={r}");
                    if r == profile.min_nonzero + 1 {
                        assert!(t < b, "strict drop p={p} n={n}");
                    }
                }
                prev = t;
            }
        }
    }

    // Strictly decreasing top lines between non-empty classes.
    for &p in &[2u64, 3, 5] {
        let pr = prime(p);
        for n in 0..=500u64 {
            let b = n + 1;
            let nonempty: Vec<u64> = (1..=12)
                .filter(|&i| !classes::is_class_empty(i, n, pr).unwrap())
                .collect();
            for w in nonempty.windows(2) {
                assert!(
                    classes::top_line(ClassIndex::Finite(w[1]), b, pr).unwrap()
                        < classes::top_line(ClassIndex::Finite(w[0]), b, pr).unwrap(),
                    "p={p} n={n}"
                );
            }
        }
    }

    // Stability: members of class i of row n keep their class on every row
    // from the top line down to n, and sit below the top line itself.
    for &p in &[2u64, 3] {
        let pr = prime(p);
        for n in 1..=500u64 {
            let b = n + 1;
            let max_i = to_base_p(b, pr).unwrap().len() as u64;
            for i in 1..=max_i {
                let members = classes::class_members(ClassIndex::Finite(i), n, pr, n).unwrap();
                if members.is_empty() {
                    continue;
                }
                let t = classes::top_line(ClassIndex::Finite(i), b, pr).unwrap();
                let member_digits: Vec<Vec<u64>> = members
                    .iter()
                    .map(|&j| to_base_p(j, pr).unwrap().as_slice().to_vec())
                    .collect();
                for (&j, jd) in members.iter().zip(&member_digits) {
                    assert!(preceq(j, t - 1, pr), "p={p} n={n} i={i} j={j}");
                    let mut xd = to_base_p(t, pr).unwrap().as_slice().to_vec();
                    for x in t..=n {
                        let label = classes::classify_digits(&xd, jd)
                            .unwrap_or_else(|| panic!("p={p} n={n} i={i} j={j} x={x}"));
                        assert_eq!(
                            label.index,
                            ClassIndex::Finite(i),
                            "p={p} n={n} i={i} j={j} x={x}"
                        );
                        increment_digits(&mut xd, p);
                    }
                }
            }
        }
    }

    // Derivative matrices invert by negating the parameter, on every field
    // of order at most 16 and every degree up to 8.
    for &(p, e) in &[
        (2u64, 1u32),
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 1),
        (3, 2),
        (5, 1),
        (7, 1),
        (11, 1),
        (13, 1),
    ] {
        let field = Fq::new(prime(p), e).unwrap();
        for n in 2..=8usize {
            let ctx = CurveContext::new(field.clone(), n).unwrap();
            let id = MatrixFq::identity(field.clone(), n + 1);
            for t in field.elements() {
                let product = ctx
                    .derivative_matrix(&t)
                    .mul(&ctx.derivative_matrix(&field.neg(&t)));
                assert_eq!(product, id, "p={p} e={e} n={n}");
            }
        }
    }

    // Ascending nucleus chain, empty below the midpoint and below the
    // digit threshold: numerically on a wide range, geometrically on the
    // sweep fields.
    for &p in &[2u64, 3, 5, 7] {
        let pr = prime(p);
        for n in 1..=400u64 {
            let threshold = nuclei::empty_threshold(n, pr).unwrap();
            let mut prev = -1i64;
            for k in -1..n as i64 {
                let dim = nuclei::nucleus_dim(k, n, pr).unwrap();
                assert!(dim >= prev, "monotone p={p} n={n} k={k}");
                if k <= (n as i64 - 1) / 2 || k <= threshold {
                    assert_eq!(dim, -1, "emptiness p={p} n={n} k={k}");
                }
                prev = dim;
            }
        }
    }
    for &(p, e, n) in &[(2u64, 2u32, 4usize), (2, 3, 6), (3, 2, 5), (2, 4, 8)] {
        let field = Fq::new(prime(p), e).unwrap();
        let ctx = CurveContext::new(field.clone(), n).unwrap();
        let mut previous: Option<Subspace> = None;
        for k in -1..n as i64 {
            let nucleus = ctx.geometric_nucleus(k).unwrap();
            if let Some(prev) = &previous {
                assert!(nucleus.contains(prev), "chain p={p} e={e} n={n} k={k}");
            }
            if k <= (n as i64 - 1) / 2 {
                assert_eq!(nucleus.projective_dim(), -1, "p={p} e={e} n={n} k={k}");
            }
            previous = Some(nucleus);
        }
    }

    println!("[PASS] 6: structural invariant suites all hold on their ranges");
}

fn increment_digits(digits: &mut Vec<u64>, p: u64) {
    for d in digits.iter_mut() {
        if *d + 1 < p {
            *d += 1;
            return;
        }
        *d = 0;
    }
    digits.push(1);
}

#[test]
fn criterion_7_distinct_nuclei_count() {
    for &p in &[2u64, 3, 5, 7] {
        let pr = prime(p);
        for n in 0..=400u64 {
            let mut dims: Vec<i64> = (-1..n as i64)
                .map(|k| nuclei::nucleus_dim(k, n, pr).unwrap())
                .collect();
            dims.sort_unstable();
            dims.dedup();
            assert_eq!(
                dims.len() as u64,
                nuclei::distinct_nuclei_count(n, pr).unwrap(),
                "p={p} n={n}"
            );
        }
    }
    println!("[PASS] 7: nonzero digit count of n+1 equals the number of distinct dimensions");
}

#[test]
fn criterion_8_hyperplane_nucleus_consistency() {
    for &p in &[2u64, 3, 5, 7] {
        let pr = prime(p);
        for n in 0..=400u64 {
            assert_eq!(
                nuclei::hyperplane_nucleus_dim(n, pr).unwrap(),
                nuclei::nucleus_dim(n as i64 - 1, n, pr).unwrap(),
                "p={p} n={n}"
            );
        }
    }
    println!("[PASS] 8: product formula matches the table at k = n - 1");
}
