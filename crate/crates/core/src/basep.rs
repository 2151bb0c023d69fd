//! Base-p digit arithmetic and binomial coefficients modulo a prime.
//!
//! Everything downstream reduces to digit manipulation of naturals written
//! in base p: the half order `j preceq n` (digitwise `j_lambda <= n_lambda`),
//! binomial residues via the digit-product rule of Lucas's theorem, and an
//! independent oracle that evaluates the additive Pascal recurrence row by
//! row and never looks at digits.
//!
//! Digit vectors are little-endian: index equals the power of p. Display
//! conventions (most-significant digit first) are left to callers.

use crate::error::{Error, MAX_NATURAL};
use std::fmt;

/// A prime validated by trial division.
///
/// Capped at 2^31 - 1 so that products of residues stay exact in `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Prime(u64);

impl Prime {
    /// Largest admissible prime.
    pub const MAX: u64 = (1 << 31) - 1;

    pub fn new(p: u64) -> Result<Self, Error> {
        if p > Self::MAX {
            return Err(Error::PrimeTooLarge(p));
        }
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        if p % 2 == 0 {
            return if p == 2 {
                Ok(Prime(2))
            } else {
                Err(Error::NotPrime(p))
            };
        }
        let mut d = 3u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p));
            }
            d += 2;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Little-endian base-p digit vector of a natural number.
///
/// Trailing zeros are trimmed, so the representation of 0 is the empty
/// vector. Every stored digit is in {0, ..., p-1} and the encoded value is
/// at most [`MAX_NATURAL`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digits {
    p: Prime,
    digits: Vec<u64>,
}

impl Digits {
    /// Validates digit range, trims trailing zeros and checks that the
    /// encoded value fits the supported range.
    pub fn new(p: Prime, mut digits: Vec<u64>) -> Result<Self, Error> {
        if digits.iter().any(|&d| d >= p.get()) {
            return Err(Error::InvalidDigits("digit not below p"));
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        let mut value: u128 = 0;
        let mut power: u128 = 1;
        for &d in &digits {
            if d > 0 {
                // A nonzero digit at a position whose power is already out
                // of range makes the value too large; below that, the
                // product stays far from overflowing u128.
                if power > MAX_NATURAL as u128 {
                    return Err(Error::InvalidDigits("encoded value above 2^63 - 1"));
                }
                value += d as u128 * power;
                if value > MAX_NATURAL as u128 {
                    return Err(Error::InvalidDigits("encoded value above 2^63 - 1"));
                }
            }
            power = power.saturating_mul(p.get() as u128);
        }
        Ok(Digits { p, digits })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Digit at position `lambda`; zero beyond the stored length.
    pub fn digit(&self, lambda: u64) -> u64 {
        usize::try_from(lambda)
            .ok()
            .and_then(|i| self.digits.get(i).copied())
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.digits
    }

    /// The natural number this vector encodes.
    pub fn value(&self) -> u64 {
        let mut value: u64 = 0;
        for &d in self.digits.iter().rev() {
            value = value * self.p.get() + d;
        }
        value
    }
}

/// Base-p representation of `n`, little-endian.
pub fn to_base_p(n: u64, p: Prime) -> Result<Digits, Error> {
    if n > MAX_NATURAL {
        return Err(Error::NaturalTooLarge(n));
    }
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push(rest % p.get());
        rest /= p.get();
    }
    Ok(Digits { p, digits })
}

/// Inverse of [`to_base_p`].
pub fn from_digits(d: &Digits) -> u64 {
    d.value()
}

/// The half order: true iff every base-p digit of `j` is at most the
/// corresponding digit of `n`. Equivalent to `binom(n, j) != 0 (mod p)`.
pub fn preceq(j: u64, n: u64, p: Prime) -> bool {
    let p = p.get();
    let (mut j, mut n) = (j, n);
    while j > 0 {
        if j % p > n % p {
            return false;
        }
        j /= p;
        n /= p;
    }
    true
}

/// `binom(n, j) mod p` as the product of digitwise binomials (Lucas).
///
/// `j > n` is allowed and yields 0.
pub fn lucas_binom(n: u64, j: u64, p: Prime) -> u64 {
    let p = p.get();
    let (mut n, mut j) = (n, j);
    let mut acc = 1u64;
    while j > 0 || n > 0 {
        acc = acc * digit_binom(n % p, j % p, p) % p;
        if acc == 0 {
            return 0;
        }
        n /= p;
        j /= p;
    }
    acc
}

/// `binom(a, b) mod p` for single digits `a, b < p`, by the multiplicative
/// formula with a Fermat inverse.
fn digit_binom(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1u64;
    let mut den = 1u64;
    for s in 1..=b {
        num = num * (a - b + s) % p;
        den = den * s % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

/// `base^exp mod m` for `m < 2^32` (products fit in `u64`).
pub(crate) fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut base = base % m;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Hard memory guard for [`pascal_row_mod_p`].
pub const MAX_PASCAL_ROW: u64 = 10_000_000;

/// Row `n` of Pascal's triangle modulo p, computed entry by entry with the
/// additive recurrence starting from row 0. Never uses digits or Lucas.
pub fn pascal_row_mod_p(n: u64, p: Prime) -> Result<Vec<u64>, Error> {
    if n > MAX_PASCAL_ROW {
        return Err(Error::ResourceLimit {
            what: "pascal row index",
            requested: n,
            limit: MAX_PASCAL_ROW,
        });
    }
    let p = p.get();
    let n = n as usize;
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for r in 1..=n {
        // In-place update from the right: row[s] += row[s-1].
        for s in (1..=r).rev() {
            row[s] = (row[s] + row[s - 1]) % p;
        }
    }
    Ok(row)
}

/// Independent oracle for `binom(n, j) mod p` via [`pascal_row_mod_p`].
///
/// `j > n` yields 0.
pub fn binom_mod_p_direct(n: u64, j: u64, p: Prime) -> Result<u64, Error> {
    let row = pascal_row_mod_p(n, p)?;
    Ok(if j > n { 0 } else { row[j as usize] })
}
