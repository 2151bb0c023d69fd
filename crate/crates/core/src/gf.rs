//! Exact arithmetic in GF(p^e).
//!
//! A field is built deterministically from (p, e): the modulus is the first
//! monic irreducible polynomial of degree e over GF(p) in lexicographic
//! order of its little-endian coefficient list. Elements are canonical
//! coefficient vectors of length e. The field order is capped at 2^20 so
//! that whole-field sweeps (every parameter of the curve) stay cheap.
//!
//! Elements carry (p, e) and the field methods panic when handed an element
//! of a different field; since the modulus is a function of (p, e), equal
//! parameters mean equal fields.

use crate::basep::{pow_mod, Prime};
use crate::error::Error;
use std::fmt;

/// Enumeration cap on the field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// The finite field GF(p^e).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fq {
    p: u64,
    e: u32,
    q: u64,
    /// Monic modulus of degree e, little-endian, length e + 1.
    modulus: Vec<u64>,
}

/// An element of GF(p^e): the canonical representative of a residue class,
/// as a little-endian coefficient vector of length e.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqElement {
    p: u64,
    e: u32,
    coeffs: Vec<u64>,
}

impl FqElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl Fq {
    /// Constructs GF(p^e) with the deterministic modulus.
    pub fn new(p: Prime, e: u32) -> Result<Self, Error> {
        if e == 0 {
            return Err(Error::InvalidArgument(
                "extension degree must be at least 1",
            ));
        }
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q
                .checked_mul(p.get())
                .filter(|&q| q <= MAX_FIELD_ORDER)
                .ok_or(Error::FieldTooLarge { p: p.get(), e })?;
        }
        let modulus = least_irreducible(p.get(), e);
        Ok(Fq {
            p: p.get(),
            e,
            q,
            modulus,
        })
    }

    pub fn prime_field(p: Prime) -> Result<Self, Error> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// The field order q = p^e.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElement {
        self.raw(vec![0; self.e as usize])
    }

    pub fn one(&self) -> FqElement {
        self.from_int(1)
    }

    fn raw(&self, coeffs: Vec<u64>) -> FqElement {
        debug_assert_eq!(coeffs.len(), self.e as usize);
        FqElement {
            p: self.p,
            e: self.e,
            coeffs,
        }
    }

    /// Element with the given coefficients (low to high); shorter vectors
    /// are zero-padded.
    pub fn element(&self, coeffs: &[u64]) -> Result<FqElement, Error> {
        if coeffs.len() > self.e as usize {
            return Err(Error::InvalidArgument(
                "too many coefficients for this field",
            ));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidDigits("coefficient not below p"));
        }
        let mut full = coeffs.to_vec();
        full.resize(self.e as usize, 0);
        Ok(self.raw(full))
    }

    /// The image of an integer under reduction mod p (a constant polynomial).
    pub fn from_int(&self, v: u64) -> FqElement {
        let mut coeffs = vec![0; self.e as usize];
        coeffs[0] = v % self.p;
        self.raw(coeffs)
    }

    /// The element at position `index` in enumeration order, i.e. with
    /// coefficients the base-p digits of the index.
    pub fn from_index(&self, index: u64) -> Result<FqElement, Error> {
        if index >= self.q {
            return Err(Error::InvalidArgument(
                "element index not below the field order",
            ));
        }
        let mut coeffs = vec![0; self.e as usize];
        let mut rest = index;
        for c in coeffs.iter_mut() {
            *c = rest % self.p;
            rest /= self.p;
        }
        Ok(self.raw(coeffs))
    }

    /// Position of an element in enumeration order: sum of c_lambda p^lambda.
    pub fn index_of(&self, a: &FqElement) -> u64 {
        self.check_member(a);
        let mut index = 0u64;
        for &c in a.coeffs.iter().rev() {
            index = index * self.p + c;
        }
        index
    }

    /// All q elements in a fixed deterministic order, zero first: element
    /// number k has coefficient vector the base-p digits of k.
    pub fn elements(&self) -> Vec<FqElement> {
        (0..self.q).map(|i| self.from_index(i).unwrap()).collect()
    }

    fn check_member(&self, a: &FqElement) {
        assert!(
            a.p == self.p && a.e == self.e,
            "element of GF({}^{}) used in GF({}^{})",
            a.p,
            a.e,
            self.p,
            self.e
        );
    }

    pub fn add(&self, a: &FqElement, b: &FqElement) -> FqElement {
        self.check_member(a);
        self.check_member(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        self.raw(coeffs)
    }

    pub fn neg(&self, a: &FqElement) -> FqElement {
        self.check_member(a);
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        self.raw(coeffs)
    }

    pub fn sub(&self, a: &FqElement, b: &FqElement) -> FqElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FqElement, b: &FqElement) -> FqElement {
        self.check_member(a);
        self.check_member(b);
        let e = self.e as usize;
        // Schoolbook product, then reduction by the monic modulus.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for d in (e..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (lambda, &m) in self.modulus.iter().take(e).enumerate() {
                prod[d - e + lambda] = (prod[d - e + lambda] + c * (self.p - m) % self.p) % self.p;
            }
        }
        prod.truncate(e);
        self.raw(prod)
    }

    /// `a^exp` by square and multiply; `a^0 = 1` for every a.
    pub fn pow(&self, a: &FqElement, exp: u64) -> FqElement {
        self.check_member(a);
        let mut acc = self.one();
        let mut base = a.clone();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via `a^(q-2)`.
    pub fn inv(&self, a: &FqElement) -> Result<FqElement, Error> {
        self.check_member(a);
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.e)
        }
    }
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over GF(p), used only for modulus construction.
// Polynomials are little-endian coefficient vectors, not necessarily trimmed.
// ---------------------------------------------------------------------------

fn ptrim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pdeg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    ptrim(&mut out);
    out
}

/// Remainder of a modulo b (b nonzero).
fn prem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = pdeg(b).expect("division by the zero polynomial");
    let lead_inv = pow_mod(b[db], p - 2, p);
    let mut rem = a.to_vec();
    ptrim(&mut rem);
    while let Some(dr) = pdeg(&rem) {
        if dr < db {
            break;
        }
        let factor = rem[dr] * lead_inv % p;
        for i in 0..=db {
            rem[dr - db + i] = (rem[dr - db + i] + p - factor * b[i] % p) % p;
        }
        ptrim(&mut rem);
    }
    rem
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    ptrim(&mut x);
    ptrim(&mut y);
    while !y.is_empty() {
        let r = prem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(d) = pdeg(&x) {
        let inv = pow_mod(x[d], p - 2, p);
        for c in x.iter_mut() {
            *c = *c * inv % p;
        }
    }
    x
}

fn ppow_mod(base: &[u64], exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = prem(base, f, p);
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = prem(&pmul(&acc, &base, p), f, p);
        }
        base = prem(&pmul(&base, &base, p), f, p);
        exp >>= 1;
    }
    acc
}

/// `x^(p^k) mod f` by k-fold exponentiation.
fn frobenius_power(k: u32, f: &[u64], p: u64) -> Vec<u64> {
    let mut g = vec![0u64, 1];
    for _ in 0..k {
        g = ppow_mod(&g, p, f, p);
    }
    g
}

fn prime_divisors(mut e: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= e {
        if e % d == 0 {
            out.push(d);
            while e % d == 0 {
                e /= d;
            }
        }
        d += 1;
    }
    if e > 1 {
        out.push(e);
    }
    out
}

/// Irreducibility of a monic polynomial of degree e over GF(p): a root scan
/// for degrees up to 3, the gcd test against Frobenius powers beyond.
fn is_irreducible(f: &[u64], p: u64, e: u32) -> bool {
    match e {
        0 => false,
        1 => true,
        2 | 3 => {
            for a in 0..p {
                let mut value = 0u64;
                for &c in f.iter().rev() {
                    value = (value * a + c) % p;
                }
                if value == 0 {
                    return false;
                }
            }
            true
        }
        _ => {
            let x = vec![0u64, 1];
            if psub(&frobenius_power(e, f, p), &x, p) != Vec::<u64>::new() {
                return false;
            }
            for r in prime_divisors(e) {
                let h = frobenius_power(e / r, f, p);
                let g = pgcd(&psub(&h, &x, p), f, p);
                if pdeg(&g) != Some(0) {
                    return false;
                }
            }
            true
        }
    }
}

/// Writes the non-leading coefficients of the enumeration `index` into
/// `candidate[0..e]`, with c_0 as the most significant digit, so that
/// ascending indices enumerate coefficient lists (c_0, c_1, ...) in
/// lexicographic order.
fn coefficients_for_index(index: u64, p: u64, candidate: &mut [u64]) {
    let e = candidate.len() - 1;
    let mut rest = index;
    for lambda in (0..e).rev() {
        candidate[lambda] = rest % p;
        rest /= p;
    }
}

/// First monic irreducible of degree e over GF(p), in lexicographic order
/// of the little-endian coefficient list (c_0 compared first).
fn least_irreducible(p: u64, e: u32) -> Vec<u64> {
    let e_us = e as usize;
    let total: u64 = (0..e).fold(1u64, |acc, _| acc * p);
    // A zero constant term means the polynomial is divisible by x, so the
    // whole first block (c_0 = 0) is skipped for e >= 2.
    let start = if e >= 2 { total / p } else { 0 };
    let mut candidate = vec![0u64; e_us + 1];
    candidate[e_us] = 1;
    for index in start..total {
        coefficients_for_index(index, p, &mut candidate);
        if is_irreducible(&candidate, p, e) {
            return candidate;
        }
    }
    unreachable!("an irreducible polynomial of any degree exists over GF(p)")
}
