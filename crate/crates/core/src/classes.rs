//! The partition of the zero entries of Pascal's triangle modulo p into
//! classes, and the counting functions built on it.
//!
//! A zero entry `(n, j)`, i.e. one with `binom(n, j) = 0 (mod p)`, is
//! classified by its digits: with `L` the highest position where
//! `j_L > n_L`, the class index `i` is the smallest position above `L`
//! where `j_i < n_i`, or infinity when no such position exists (which
//! happens exactly for `j > n`). Geometrically, class i collects the
//! maximal inverted zero triangles of side p^i - 1.
//!
//! Three functions summarize a row n of the triangle, all driven by the
//! digits of n and of b = n + 1:
//!
//! - `phi(i, n)`: how many columns of row n lie in class i,
//! - `sigma(i, n)`: how many lie in classes i, i+1, ... combined,
//! - `top_line(r, b)`: b minus its digits below position r, which is the
//!   first row meeting the same class-r zero blocks as row n.

use crate::basep::{self, Digits, Prime};
use crate::error::{Error, MAX_NATURAL};
use std::fmt;

/// Class index: a positive natural or infinity.
///
/// `Finite(0)` is never produced by classification; operations that take a
/// class index reject 0 where their domain starts at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassIndex {
    Finite(u64),
    Infinite,
}

impl ClassIndex {
    pub fn is_finite(self) -> bool {
        matches!(self, ClassIndex::Finite(_))
    }

    pub fn as_finite(self) -> Option<u64> {
        match self {
            ClassIndex::Finite(i) => Some(i),
            ClassIndex::Infinite => None,
        }
    }
}

impl fmt::Display for ClassIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassIndex::Finite(i) => write!(f, "{i}"),
            ClassIndex::Infinite => write!(f, "inf"),
        }
    }
}

/// Class membership of a zero entry.
///
/// `witness` is the position `L = max { lambda : j_lambda > n_lambda }`. It
/// is below `index` whenever the index is finite; for the infinite class it
/// is stored as well, even though nothing downstream consumes it there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassLabel {
    pub index: ClassIndex,
    pub witness: u64,
}

/// Classifies the entry `(n, j)`; `None` when `binom(n, j) != 0 (mod p)`,
/// i.e. when `j preceq n`.
pub fn class_of(n: u64, j: u64, p: Prime) -> Option<ClassLabel> {
    let p = p.get();
    let mut n_digits = Vec::new();
    let mut j_digits = Vec::new();
    let (mut nn, mut jj) = (n, j);
    while nn > 0 || jj > 0 {
        n_digits.push(nn % p);
        j_digits.push(jj % p);
        nn /= p;
        jj /= p;
    }
    classify_digits(&n_digits, &j_digits)
}

/// Digit-level classification; the vectors are little-endian and may have
/// different lengths (missing digits are zero).
pub fn classify_digits(n_digits: &[u64], j_digits: &[u64]) -> Option<ClassLabel> {
    let len = n_digits.len().max(j_digits.len());
    let nd = |lambda: usize| n_digits.get(lambda).copied().unwrap_or(0);
    let jd = |lambda: usize| j_digits.get(lambda).copied().unwrap_or(0);

    let mut witness = None;
    for lambda in (0..len).rev() {
        if jd(lambda) > nd(lambda) {
            witness = Some(lambda);
            break;
        }
    }
    let witness = witness?; // j preceq n: no class

    let mut index = ClassIndex::Infinite;
    for lambda in witness + 1..len {
        if jd(lambda) < nd(lambda) {
            index = ClassIndex::Finite(lambda as u64);
            break;
        }
    }
    Some(ClassLabel {
        index,
        witness: witness as u64,
    })
}

/// Number of columns of row n in class i: the closed product formula
/// `(p^i - 1 - (n mod p^i)) * n_i * prod_{lambda > i} (n_lambda + 1)`.
pub fn phi(i: u64, n: u64, p: Prime) -> Result<u64, Error> {
    if i == 0 {
        return Err(Error::ClassIndexZero);
    }
    let d = basep::to_base_p(n, p)?;
    let n_i = d.digit(i);
    if n_i == 0 {
        return Ok(0);
    }
    // n_i != 0 implies p^i <= n, so the power fits in u64.
    let (low, power) = low_part(&d, i);
    let mut acc = (power - 1 - low) as u128 * n_i as u128;
    for lambda in (i + 1) as usize..d.len() {
        acc *= (d.as_slice()[lambda] + 1) as u128;
    }
    debug_assert!(acc <= n as u128);
    Ok(acc as u64)
}

/// `(n mod p^i, p^i)` from a digit vector, for `p^i` within range of the
/// stored digits (callers guarantee i is small enough).
fn low_part(d: &Digits, i: u64) -> (u64, u64) {
    let p = d.prime().get();
    let mut low = 0u64;
    let mut power = 1u64;
    for lambda in 0..i {
        low += d.digit(lambda) * power;
        power *= p;
    }
    (low, power)
}

/// Hard guard for [`class_members`].
pub const MAX_MEMBER_BOUND: u64 = 1_000_000;

/// Brute-force enumeration of the members of a class within `0..=bound`,
/// checking the digit conditions directly (independently of [`class_of`]).
///
/// Classes with finite index lie below n, so `bound = n` captures them
/// completely; the infinite class is unbounded and is truncated at `bound`.
pub fn class_members(index: ClassIndex, n: u64, p: Prime, bound: u64) -> Result<Vec<u64>, Error> {
    if index == ClassIndex::Finite(0) {
        return Err(Error::ClassIndexZero);
    }
    if bound > MAX_MEMBER_BOUND {
        return Err(Error::ResourceLimit {
            what: "class member bound",
            requested: bound,
            limit: MAX_MEMBER_BOUND,
        });
    }
    let n_digits = basep::to_base_p(n, p)?;
    let mut members = Vec::new();
    let mut j_digits: Vec<u64> = Vec::new();
    for j in 0..=bound {
        match index {
            ClassIndex::Infinite => {
                if j > n {
                    members.push(j);
                }
            }
            ClassIndex::Finite(i) => {
                if satisfies_class_conditions(n_digits.as_slice(), &j_digits, i) {
                    members.push(j);
                }
            }
        }
        increment(&mut j_digits, p.get());
    }
    Ok(members)
}

/// The digit conditions for membership in a finite class i: some position
/// `L < i` has `j_L > n_L` with `j_lambda = n_lambda` strictly between L
/// and i, `j_i < n_i`, and `j_lambda <= n_lambda` above i.
fn satisfies_class_conditions(n_digits: &[u64], j_digits: &[u64], i: u64) -> bool {
    let len = n_digits.len().max(j_digits.len());
    let nd = |lambda: usize| n_digits.get(lambda).copied().unwrap_or(0);
    let jd = |lambda: usize| j_digits.get(lambda).copied().unwrap_or(0);
    let i = i as usize;

    if i >= len || jd(i) >= nd(i) {
        return false;
    }
    for lambda in i + 1..len {
        if jd(lambda) > nd(lambda) {
            return false;
        }
    }
    // The highest position below i where the digits differ must exceed its
    // counterpart; positions between it and i are then equal by choice.
    for lambda in (0..i).rev() {
        if jd(lambda) != nd(lambda) {
            return jd(lambda) > nd(lambda);
        }
    }
    false
}

/// Little-endian digit odometer.
fn increment(digits: &mut Vec<u64>, p: u64) {
    for d in digits.iter_mut() {
        if *d + 1 < p {
            *d += 1;
            return;
        }
        *d = 0;
    }
    digits.push(1);
}

/// Digit of `v` at position `lambda` in base p, for any `u64` value.
///
/// `b = n + 1` can reach 2^63 (one past the supported naturals), so digits
/// of b are extracted directly rather than through [`basep::to_base_p`].
fn raw_digit(v: u64, lambda: u64, p: u64) -> u64 {
    let mut rest = v;
    for _ in 0..lambda {
        if rest == 0 {
            return 0;
        }
        rest /= p;
    }
    rest % p
}

/// Whether class i contributes no columns to row n, decided from the
/// digits of b = n + 1 alone: for `i <= M` (M the lowest nonzero position
/// of b) the class is empty iff `b_{i-1} = 0`, above M iff `b_i = 0`.
pub fn is_class_empty(i: u64, n: u64, p: Prime) -> Result<bool, Error> {
    if i == 0 {
        return Err(Error::ClassIndexZero);
    }
    if n > MAX_NATURAL {
        return Err(Error::NaturalTooLarge(n));
    }
    let b = n + 1;
    let mut min_nonzero = 0u64;
    let mut rest = b;
    while rest % p.get() == 0 {
        rest /= p.get();
        min_nonzero += 1;
    }
    Ok(if i <= min_nonzero {
        raw_digit(b, i - 1, p.get()) == 0
    } else {
        raw_digit(b, i, p.get()) == 0
    })
}

/// The top line function `T(r, b) = b - (b mod p^r)`, with `T(inf, b) = 0`.
///
/// For a class i that meets row n = b - 1, `T(i, b)` is the first row of
/// the triangle touching the same zero blocks; `T` is non-increasing in r
/// and equals b for r up to the lowest nonzero digit position of b.
pub fn top_line(r: ClassIndex, b: u64, p: Prime) -> Result<u64, Error> {
    if b == 0 {
        return Err(Error::InvalidArgument("top line requires b >= 1"));
    }
    let r = match r {
        ClassIndex::Infinite => return Ok(0),
        ClassIndex::Finite(r) => r,
    };
    let p = p.get();
    let mut low = 0u64;
    let mut power = 1u64;
    for _ in 0..r {
        low += b / power % p * power;
        match power.checked_mul(p) {
            Some(next) if next <= b => power = next,
            _ => break, // p^r exceeds b: everything below r is the whole of b
        }
    }
    Ok(b - low)
}

/// Number of columns of row n in classes i, i+1, ...:
/// `n + 1 - (1 + (n mod p^i)) * prod_{lambda >= i} (n_lambda + 1)`.
pub fn sigma(i: u64, n: u64, p: Prime) -> Result<u64, Error> {
    if i == 0 {
        return Err(Error::ClassIndexZero);
    }
    if n > MAX_NATURAL {
        return Err(Error::NaturalTooLarge(n));
    }
    let d = basep::to_base_p(n, p)?;
    let mut low = 0u128;
    let mut power = 1u128;
    for lambda in 0..(i as usize).min(d.len()) {
        low += d.as_slice()[lambda] as u128 * power;
        power *= p.get() as u128;
    }
    if i as usize >= d.len() {
        low = n as u128;
    }
    let mut covered = 1 + low;
    for lambda in (i as usize)..d.len() {
        covered *= (d.as_slice()[lambda] + 1) as u128;
    }
    let b = n as u128 + 1;
    debug_assert!(covered <= b);
    Ok((b - covered) as u64)
}

/// Largest member of class i in row n, `T(i, b) - 1`; `None` when the
/// class is empty.
pub fn max_class_member(i: u64, n: u64, p: Prime) -> Result<Option<u64>, Error> {
    if is_class_empty(i, n, p)? {
        return Ok(None);
    }
    Ok(Some(top_line(ClassIndex::Finite(i), n + 1, p)? - 1))
}

/// Positions of the nonzero base-p digits of b = n + 1.
///
/// These positions drive the interval decomposition of the nucleus
/// dimension table: there is one distinct nucleus per position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassProfile {
    pub n: u64,
    pub p: u64,
    pub b: u64,
    /// Lowest position with a nonzero digit of b.
    pub min_nonzero: u64,
    /// Highest position with a nonzero digit of b.
    pub max_nonzero: u64,
    /// All positions with nonzero digits of b, ascending.
    pub nonzero_positions: Vec<u64>,
}

impl ClassProfile {
    /// Number of nonzero digits of b.
    pub fn count(&self) -> u64 {
        self.nonzero_positions.len() as u64
    }
}

pub fn class_profile(n: u64, p: Prime) -> Result<ClassProfile, Error> {
    if n > MAX_NATURAL {
        return Err(Error::NaturalTooLarge(n));
    }
    let b = n + 1;
    let mut nonzero_positions = Vec::new();
    let mut rest = b;
    let mut lambda = 0u64;
    while rest > 0 {
        if rest % p.get() != 0 {
            nonzero_positions.push(lambda);
        }
        rest /= p.get();
        lambda += 1;
    }
    Ok(ClassProfile {
        n,
        p: p.get(),
        b,
        min_nonzero: nonzero_positions[0],
        max_nonzero: *nonzero_positions.last().unwrap(),
        nonzero_positions,
    })
}
