//! Closed-form nucleus dimensions from base-p digits.
//!
//! For a normal rational curve of degree n in characteristic p, every
//! nucleus dimension can be read off the digits of n and of b = n + 1:
//!
//! - the positions of the nonzero digits of b split the range of k into
//!   intervals on which the k-nucleus is constant, via the top line
//!   function: `top_line(N+1, b) <= k+1 < top_line(N, b)` selects the
//!   position N, and the dimension is `sigma(N+1, n) - 1`;
//! - the nucleus itself is spanned by the base points P_j whose binomials
//!   `binom(k+1, j), ..., binom(n, j)` all vanish mod p;
//! - the number of distinct nuclei equals the number of nonzero digits of b.
//!
//! These functions are pure number theory in (k, n, p). Interpreting a
//! result geometrically requires the field to have at least k + 1 elements
//! (at least n for the distinct-nuclei count); the geometric cross-check
//! lives in [`crate::nrc`].

use crate::basep::{self, lucas_binom, Prime};
use crate::classes::{self, ClassIndex};
use crate::error::{Error, MAX_NATURAL};

/// One interval of the dimension table: `dim N^k = dim` for all
/// `k_low <= k <= k_high`. All classes with index at least `min_class`
/// contribute base points on this interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NucleusInterval {
    pub k_low: i64,
    pub k_high: i64,
    pub min_class: u64,
    pub dim: i64,
}

/// The full dimension table for fixed (p, n): one interval per nonzero
/// base-p digit of b = n + 1, in increasing k, with strictly increasing
/// dimensions starting from -1 (the empty nucleus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NucleusReport {
    pub p: u64,
    pub n: u64,
    pub b: u64,
    pub intervals: Vec<NucleusInterval>,
}

impl NucleusReport {
    /// Number of distinct nuclei: the interval count.
    pub fn count(&self) -> u64 {
        self.intervals.len() as u64
    }
}

/// A one-point nucleus: for n = 2 p^i - 2 the smallest non-empty nucleus
/// is the single base point P_(p^i - 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointNucleus {
    pub exponent: u64,
    pub point_index: u64,
}

fn check_k(k: i64, n: u64) -> Result<(), Error> {
    if k < -1 || k as i128 >= n as i128 {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(())
}

/// Projective dimension of the k-nucleus (-1 when empty), for
/// -1 <= k <= n - 1.
pub fn nucleus_dim(k: i64, n: u64, p: Prime) -> Result<i64, Error> {
    check_k(k, n)?;
    let table = nuclei_table(n, p)?;
    let interval = table
        .intervals
        .iter()
        .find(|iv| iv.k_low <= k && k <= iv.k_high)
        .expect("the intervals cover -1..=n-1");
    Ok(interval.dim)
}

/// Indices j of the base points spanning the k-nucleus: exactly those j
/// in 0..=n with binom(m, j) = 0 (mod p) for every m in k+1..=n. Their
/// count is `nucleus_dim(k, n, p) + 1`.
pub fn nucleus_basis_indices(k: i64, n: u64, p: Prime) -> Result<Vec<u64>, Error> {
    check_k(k, n)?;
    if n > MAX_NATURAL {
        return Err(Error::NaturalTooLarge(n));
    }
    let first = (k + 1) as u64;
    let indices = (0..=n)
        .filter(|&j| (first..=n).all(|m| lucas_binom(m, j, p) == 0))
        .collect();
    Ok(indices)
}

/// The interval decomposition of the dimension table.
pub fn nuclei_table(n: u64, p: Prime) -> Result<NucleusReport, Error> {
    let profile = classes::class_profile(n, p)?;
    let b = profile.b;
    let mut intervals = Vec::with_capacity(profile.nonzero_positions.len());
    // Lowest interval first: positions from the highest nonzero digit down.
    for &pos in profile.nonzero_positions.iter().rev() {
        let low = classes::top_line(ClassIndex::Finite(pos + 1), b, p)?;
        let high = classes::top_line(ClassIndex::Finite(pos), b, p)?;
        debug_assert!(low < high);
        let dim = classes::sigma(pos + 1, n, p)? as i64 - 1;
        // high can reach 2^63 (= b for n at the top of the range), so the
        // shift to k bounds goes through i128.
        intervals.push(NucleusInterval {
            k_low: (low as i128 - 1) as i64,
            k_high: (high as i128 - 2) as i64,
            min_class: pos + 1,
            dim,
        });
    }
    Ok(NucleusReport {
        p: p.get(),
        n,
        b,
        intervals,
    })
}

/// Number of distinct nuclei: the number of nonzero base-p digits of
/// b = n + 1 (the empty nucleus counts as one).
pub fn distinct_nuclei_count(n: u64, p: Prime) -> Result<u64, Error> {
    Ok(classes::class_profile(n, p)?.count())
}

/// The k-nucleus is empty for every k up to this value: with J the highest
/// nonzero digit position of b, the threshold is `b_J p^J - 2`, which is
/// exactly the upper end of the lowest interval of the table.
pub fn empty_threshold(n: u64, p: Prime) -> Result<i64, Error> {
    let profile = classes::class_profile(n, p)?;
    // All digits above J vanish, so T(J, b) = b_J p^J.
    let leading = classes::top_line(ClassIndex::Finite(profile.max_nonzero), profile.b, p)?;
    Ok((leading as i128 - 2) as i64)
}

/// Dimension of the hyperplane nucleus (k = n - 1) in product form:
/// `n - prod (n_lambda + 1)` over the base-p digits of n.
pub fn hyperplane_nucleus_dim(n: u64, p: Prime) -> Result<i64, Error> {
    let digits = basep::to_base_p(n, p)?;
    let mut prod: i128 = 1;
    for &d in digits.as_slice() {
        prod *= (d + 1) as i128;
    }
    Ok((n as i128 - prod) as i64)
}

/// Detects the one-point-nucleus case n = 2 p^i - 2 (i >= 1); the point is
/// the base point with index p^i - 1.
pub fn point_nucleus(n: u64, p: Prime) -> Result<Option<PointNucleus>, Error> {
    if n > MAX_NATURAL {
        return Err(Error::NaturalTooLarge(n));
    }
    if n % 2 != 0 {
        return Ok(None);
    }
    let half = n / 2 + 1; // (n + 2) / 2, without overflow
    let mut exponent = 0u64;
    let mut rest = half;
    while rest % p.get() == 0 {
        rest /= p.get();
        exponent += 1;
    }
    if rest != 1 || exponent == 0 {
        return Ok(None);
    }
    Ok(Some(PointNucleus {
        exponent,
        point_index: half - 1,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn dimension_table_p3_n305() {
        let table = nuclei_table(305, p(3)).unwrap();
        assert_eq!(table.b, 306);
        assert_eq!(table.count(), 3);
        let rows: Vec<(i64, i64, i64)> = table
            .intervals
            .iter()
            .map(|iv| (iv.k_low + 1, iv.k_high + 2, iv.dim))
            .collect();
        // Bounds on k + 1, as in the dimension table.
        assert_eq!(rows, vec![(0, 243, -1), (243, 297, 179), (297, 306, 251)]);
    }

    #[test]
    fn nucleus_dim_p3_n305() {
        let pr = p(3);
        assert_eq!(nucleus_dim(-1, 305, pr).unwrap(), -1);
        assert_eq!(nucleus_dim(241, 305, pr).unwrap(), -1); // k+1 = 242 < 243
        assert_eq!(nucleus_dim(242, 305, pr).unwrap(), 179); // k+1 = 243
        assert_eq!(nucleus_dim(295, 305, pr).unwrap(), 179); // k+1 = 296 < 297
        assert_eq!(nucleus_dim(296, 305, pr).unwrap(), 251); // k+1 = 297
        assert_eq!(nucleus_dim(300, 305, pr).unwrap(), 251);
        assert_eq!(nucleus_dim(304, 305, pr).unwrap(), 251);
        assert!(nucleus_dim(305, 305, pr).is_err());
        assert!(nucleus_dim(-2, 305, pr).is_err());
    }

    #[test]
    fn nucleus_dim_p2_n4() {
        let pr = p(2);
        assert_eq!(nucleus_dim(3, 4, pr).unwrap(), 2);
        for k in -1..3 {
            assert_eq!(nucleus_dim(k, 4, pr).unwrap(), -1, "k={k}");
        }
        let table = nuclei_table(4, pr).unwrap();
        assert_eq!(table.count(), 2);
        let rows: Vec<(i64, i64, i64)> = table
            .intervals
            .iter()
            .map(|iv| (iv.k_low + 1, iv.k_high + 2, iv.dim))
            .collect();
        assert_eq!(rows, vec![(0, 4, -1), (4, 5, 2)]);
    }

    #[test]
    fn single_row_table_for_large_p() {
        // n = p - 2 makes b = p - 1 a single digit: one all-empty interval.
        for &pr in &[5u64, 7, 11] {
            let table = nuclei_table(pr - 2, p(pr)).unwrap();
            assert_eq!(table.count(), 1);
            assert_eq!(table.intervals[0].dim, -1);
            assert_eq!(table.intervals[0].k_low, -1);
            assert_eq!(table.intervals[0].k_high, (pr - 2) as i64 - 1);
        }
    }

    #[test]
    fn basis_indices_examples() {
        assert_eq!(nucleus_basis_indices(3, 4, p(2)).unwrap(), vec![1, 2, 3]);
        assert_eq!(nucleus_basis_indices(1, 2, p(2)).unwrap(), vec![1]);
        // p > n: single-digit binomials never vanish.
        for k in -1..5i64 {
            assert_eq!(
                nucleus_basis_indices(k, 5, p(7)).unwrap(),
                Vec::<u64>::new()
            );
        }
    }

    #[test]
    fn basis_indices_count_and_position() {
        for &pr in &[2u64, 3, 5] {
            let pr = p(pr);
            for n in 2..=120u64 {
                for k in -1..n as i64 {
                    let indices = nucleus_basis_indices(k, n, pr).unwrap();
                    assert_eq!(
                        indices.len() as i64 - 1,
                        nucleus_dim(k, n, pr).unwrap(),
                        "p={pr} n={n} k={k}"
                    );
                    // Every spanning base point sits beyond n - k - 1.
                    for &j in &indices {
                        assert!(j as i64 > n as i64 - k - 1, "p={pr} n={n} k={k} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn distinct_count_examples() {
        assert_eq!(distinct_nuclei_count(305, p(3)).unwrap(), 3);
        assert_eq!(distinct_nuclei_count(4, p(2)).unwrap(), 2);
        for &pr in &[2u64, 3, 5] {
            for i in 1..=4u32 {
                let n = pr.pow(i) - 1;
                assert_eq!(distinct_nuclei_count(n, p(pr)).unwrap(), 1, "n={n}");
            }
        }
    }

    #[test]
    fn empty_threshold_examples() {
        assert_eq!(empty_threshold(305, p(3)).unwrap(), 241);
        assert_eq!(empty_threshold(4, p(2)).unwrap(), 2);
        assert_eq!(empty_threshold(2, p(2)).unwrap(), 0);
    }

    #[test]
    fn threshold_matches_lowest_interval() {
        for &pr in &[2u64, 3, 5, 7] {
            let pr = p(pr);
            for n in 0..=400u64 {
                let table = nuclei_table(n, pr).unwrap();
                assert_eq!(
                    empty_threshold(n, pr).unwrap(),
                    table.intervals[0].k_high,
                    "p={pr} n={n}"
                );
            }
        }
    }

    #[test]
    fn hyperplane_dimension_examples() {
        assert_eq!(hyperplane_nucleus_dim(305, p(3)).unwrap(), 251);
        assert_eq!(hyperplane_nucleus_dim(4, p(2)).unwrap(), 2);
        for &pr in &[2u64, 3, 5] {
            for i in 1..=4u32 {
                let n = pr.pow(i) - 1;
                assert_eq!(hyperplane_nucleus_dim(n, p(pr)).unwrap(), -1, "n={n}");
            }
        }
    }

    #[test]
    fn point_nucleus_examples() {
        assert_eq!(
            point_nucleus(2, p(2)).unwrap(),
            Some(PointNucleus {
                exponent: 1,
                point_index: 1
            })
        );
        assert_eq!(
            point_nucleus(16, p(3)).unwrap(),
            Some(PointNucleus {
                exponent: 2,
                point_index: 8
            })
        );
        assert_eq!(point_nucleus(5, p(2)).unwrap(), None);
        assert_eq!(point_nucleus(4, p(2)).unwrap(), None);
        assert_eq!(
            point_nucleus(6, p(2)).unwrap(),
            Some(PointNucleus {
                exponent: 2,
                point_index: 3
            })
        );
        assert_eq!(point_nucleus(0, p(2)).unwrap(), None);
    }

    #[test]
    fn point_nucleus_iff_zero_dimension_occurs() {
        for &pr in &[2u64, 3, 5] {
            let pr = p(pr);
            for n in 0..=300u64 {
                let has_point = point_nucleus(n, pr).unwrap().is_some();
                let zero_dim = nuclei_table(n, pr)
                    .unwrap()
                    .intervals
                    .iter()
                    .any(|iv| iv.dim == 0);
                assert_eq!(has_point, zero_dim, "p={pr} n={n}");
            }
        }
    }

    #[test]
    fn table_consistency() {
        for &pr in &[2u64, 3, 5, 7] {
            let pr = p(pr);
            for n in 0..=400u64 {
                let table = nuclei_table(n, pr).unwrap();
                // The intervals tile -1..=n-1 in increasing k.
                assert_eq!(table.intervals[0].k_low, -1);
                assert_eq!(table.intervals.last().unwrap().k_high, n as i64 - 1);
                for w in table.intervals.windows(2) {
                    assert_eq!(w[0].k_high + 1, w[1].k_low, "p={pr} n={n}");
                    assert!(w[0].dim < w[1].dim, "p={pr} n={n}");
                }
                assert!(table.intervals[0].dim >= -1);
                assert_eq!(table.count(), distinct_nuclei_count(n, pr).unwrap());
                assert_eq!(
                    table.intervals.last().unwrap().dim,
                    hyperplane_nucleus_dim(n, pr).unwrap(),
                    "p={pr} n={n}"
                );
            }
        }
    }

    #[test]
    fn monotone_and_empty_below_thresholds() {
        for &pr in &[2u64, 3, 5, 7] {
            let pr = p(pr);
            for n in 1..=200u64 {
                let mut prev = -1i64;
                let threshold = empty_threshold(n, pr).unwrap();
                for k in -1..n as i64 {
                    let dim = nucleus_dim(k, n, pr).unwrap();
                    assert!(dim >= prev, "monotone p={pr} n={n} k={k}");
                    if k <= (n as i64 - 1) / 2 || k <= threshold {
                        assert_eq!(dim, -1, "p={pr} n={n} k={k}");
                    }
                    prev = dim;
                }
            }
        }
    }

    #[test]
    fn characteristic_zero_shadow() {
        // p > n behaves like characteristic 0: every nucleus is empty.
        for &pr in &[11u64, 13, 31] {
            let pr = p(pr);
            for n in 0..pr.get().min(40) {
                for k in -1..n as i64 {
                    assert_eq!(nucleus_dim(k, n, pr).unwrap(), -1);
                }
            }
        }
    }

    #[test]
    fn counting_matches_value_set() {
        for &pr in &[2u64, 3, 5, 7] {
            let pr = p(pr);
            for n in 0..=200u64 {
                let mut dims: Vec<i64> = (-1..n as i64)
                    .map(|k| nucleus_dim(k, n, pr).unwrap())
                    .collect();
                dims.sort_unstable();
                dims.dedup();
                assert_eq!(
                    dims.len() as u64,
                    distinct_nuclei_count(n, pr).unwrap(),
                    "p={pr} n={n}"
                );
            }
        }
    }
}
