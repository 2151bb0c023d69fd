//! The normal rational curve in PG(n, F) and its osculating subspaces.
//!
//! The curve is the point set {(1, t, ..., t^n) : t in F} together with the
//! point (0, ..., 0, 1) for t = infinity. Differentiating the parametrization
//! with Hasse derivatives (which stay meaningful in characteristic p, where
//! iterated derivatives die) gives the derivative points at t: the columns
//! of a lower-triangular matrix C_t with entries binom(r, c) t^(r-c).
//!
//! The osculating k-subspace at a point is the span of the curve point and
//! its first k derivative points. Since C_t has inverse C_(-t), the same
//! subspace is cut out by the linear system whose rows are the last n - k
//! rows of C_(-t); at infinity it is simply x_0 = ... = x_(n-k-1) = 0. The
//! k-nucleus is the intersection of all osculating k-subspaces, computed
//! here by stacking every system row over all parameters and taking one
//! exact kernel.

use crate::error::Error;
use crate::gf::{Fq, FqElement};
use crate::linalg::{EchelonBuilder, MatrixFq, Subspace};

/// A parameter of the curve: an element of F, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    Finite(FqElement),
    Infinity,
}

/// A normal rational curve of degree n over a fixed finite field.
///
/// Binomial coefficients mod p for the derivative matrices are tabulated at
/// construction with the additive Pascal recurrence, keeping the geometric
/// route independent of the digit-based machinery.
#[derive(Debug, Clone)]
pub struct CurveContext {
    field: Fq,
    n: usize,
    binom: Vec<Vec<u64>>,
}

impl CurveContext {
    pub fn new(field: Fq, n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidArgument(
                "the ambient projective dimension must be at least 2",
            ));
        }
        let p = field.p();
        let mut binom: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut row = vec![0u64; m + 1];
            row[0] = 1;
            if m > 0 {
                let prev = &binom[m - 1];
                for j in 1..=m {
                    let left = if j < m { prev[j] } else { 0 };
                    row[j] = (prev[j - 1] + left) % p;
                }
            }
            binom.push(row);
        }
        Ok(CurveContext { field, n, binom })
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    /// Ambient projective dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    /// `binom(m, j) mod p` from the tabulated triangle (0 for j > m).
    pub fn binom_mod_p(&self, m: usize, j: usize) -> u64 {
        if j > m {
            0
        } else {
            self.binom[m][j]
        }
    }

    /// The curve point for a parameter: (1, t, ..., t^n), or the last unit
    /// vector at infinity.
    pub fn curve_point(&self, t: &Param) -> Vec<FqElement> {
        match t {
            Param::Infinity => self.unit_vector(self.n),
            Param::Finite(t) => {
                let f = &self.field;
                let mut point = Vec::with_capacity(self.n + 1);
                let mut power = f.one();
                for _ in 0..=self.n {
                    point.push(power.clone());
                    power = f.mul(&power, t);
                }
                point
            }
        }
    }

    fn unit_vector(&self, index: usize) -> Vec<FqElement> {
        let mut v = vec![self.field.zero(); self.n + 1];
        v[index] = self.field.one();
        v
    }

    /// Successive powers t^0, ..., t^n.
    fn powers(&self, t: &FqElement) -> Vec<FqElement> {
        let f = &self.field;
        let mut powers = Vec::with_capacity(self.n + 1);
        let mut acc = f.one();
        for _ in 0..=self.n {
            powers.push(acc.clone());
            acc = f.mul(&acc, t);
        }
        powers
    }

    /// The (n+1) x (n+1) matrix with entry (r, c) = binom(r, c) t^(r-c) for
    /// c <= r; its columns are the derivative points at t.
    pub fn derivative_matrix(&self, t: &FqElement) -> MatrixFq {
        let f = &self.field;
        let powers = self.powers(t);
        let mut m = MatrixFq::zeros(f.clone(), self.n + 1, self.n + 1);
        for r in 0..=self.n {
            for c in 0..=r {
                let coeff = f.from_int(self.binom_mod_p(r, c));
                m.set(r, c, f.mul(&coeff, &powers[r - c]));
            }
        }
        m
    }

    /// The k-th derivative point at infinity: the unit vector at n - k.
    pub fn derivative_point_at_infinity(&self, k: usize) -> Result<Vec<FqElement>, Error> {
        if k > self.n {
            return Err(Error::InvalidArgument(
                "derivative order exceeds the curve degree",
            ));
        }
        Ok(self.unit_vector(self.n - k))
    }

    fn check_k(&self, k: i64) -> Result<(), Error> {
        if k < -1 || k >= self.n as i64 {
            return Err(Error::KOutOfRange {
                k,
                n: self.n as u64,
            });
        }
        Ok(())
    }

    /// The osculating k-subspace at parameter t: the span of the curve
    /// point and its first k derivative points (projective dimension k;
    /// empty for k = -1).
    pub fn osculating_subspace(&self, k: i64, t: &Param) -> Result<Subspace, Error> {
        self.check_k(k)?;
        if k == -1 {
            return Ok(Subspace::empty(self.field.clone(), self.n + 1));
        }
        let k = k as usize;
        let rows = match t {
            Param::Infinity => (0..=k)
                .map(|d| self.derivative_point_at_infinity(d).unwrap())
                .collect(),
            Param::Finite(t) => {
                let c_t = self.derivative_matrix(t);
                // Columns 0..=k of C_t, as spanning rows.
                (0..=k)
                    .map(|c| (0..=self.n).map(|r| c_t.get(r, c).clone()).collect())
                    .collect::<Vec<Vec<FqElement>>>()
            }
        };
        Ok(Subspace::from_rows(self.field.clone(), self.n + 1, rows))
    }

    /// The rows of the linear system cutting out the osculating k-subspace
    /// at t: rows m = k+1, ..., n with coefficients binom(m, j) (-t)^(m-j)
    /// for finite t, and the first n - k unit rows at infinity.
    pub fn osculating_system_rows(&self, k: i64, t: &Param) -> Result<Vec<Vec<FqElement>>, Error> {
        self.check_k(k)?;
        let f = &self.field;
        let first = (k + 1) as usize;
        match t {
            Param::Infinity => Ok((0..self.n + 1 - first)
                .map(|i| self.unit_vector(i))
                .collect()),
            Param::Finite(t) => {
                let neg_t = f.neg(t);
                let powers = self.powers(&neg_t);
                let mut rows = Vec::with_capacity(self.n + 1 - first);
                for m in first..=self.n {
                    let mut row = vec![f.zero(); self.n + 1];
                    for (j, slot) in row.iter_mut().enumerate().take(m + 1) {
                        let coeff = f.from_int(self.binom_mod_p(m, j));
                        *slot = f.mul(&coeff, &powers[m - j]);
                    }
                    rows.push(row);
                }
                Ok(rows)
            }
        }
    }

    /// Same system as a matrix, for direct inspection.
    pub fn osculating_system(&self, k: i64, t: &Param) -> Result<MatrixFq, Error> {
        let rows = self.osculating_system_rows(k, t)?;
        Ok(MatrixFq::from_rows(self.field.clone(), self.n + 1, rows))
    }

    /// The k-nucleus: the intersection of the osculating k-subspaces over
    /// all q + 1 parameters, computed as one exact kernel of the stacked
    /// system rows.
    pub fn geometric_nucleus(&self, k: i64) -> Result<Subspace, Error> {
        self.check_k(k)?;
        let mut builder = EchelonBuilder::new(self.field.clone(), self.n + 1);
        for t in self.field.elements() {
            for row in self.osculating_system_rows(k, &Param::Finite(t))? {
                builder.push_row(row);
            }
        }
        for row in self.osculating_system_rows(k, &Param::Infinity)? {
            builder.push_row(row);
        }
        Ok(builder.into_matrix().nullspace())
    }
}
