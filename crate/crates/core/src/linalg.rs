//! Exact dense linear algebra over GF(q): reduced row echelon form, rank,
//! kernels, and canonical subspace intersection.
//!
//! Subspaces are stored as RREF bases, so structural equality of the basis
//! matrices is equality of subspaces. Each subspace also carries its
//! annihilator (the kernel of its basis, again in RREF); intersections are
//! computed by stacking annihilators and taking one kernel.

use crate::gf::{Fq, FqElement};

/// Dense matrix over GF(q), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFq {
    field: Fq,
    rows: usize,
    cols: usize,
    entries: Vec<FqElement>,
}

impl MatrixFq {
    pub fn new(field: Fq, rows: usize, cols: usize, entries: Vec<FqElement>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        MatrixFq {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(field: Fq, rows: usize, cols: usize) -> Self {
        let zero = field.zero();
        let entries = vec![zero; rows * cols];
        MatrixFq {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(field: Fq, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: Fq, cols: usize, rows: Vec<Vec<FqElement>>) -> Self {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            entries.extend(row);
        }
        MatrixFq {
            field,
            rows: n_rows,
            cols,
            entries,
        }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FqElement {
        assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FqElement) {
        assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FqElement] {
        assert!(r < self.rows);
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> MatrixFq {
        let mut out = MatrixFq::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &MatrixFq) -> MatrixFq {
        assert_eq!(self.field, rhs.field);
        assert_eq!(self.cols, rhs.rows);
        let f = &self.field;
        let mut out = MatrixFq::zeros(self.field.clone(), self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = f.zero();
                for k in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.get(r, k), rhs.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn stack(top: &MatrixFq, bottom: &MatrixFq) -> MatrixFq {
        assert_eq!(top.field, bottom.field);
        assert_eq!(top.cols, bottom.cols);
        let mut entries = top.entries.clone();
        entries.extend(bottom.entries.iter().cloned());
        MatrixFq {
            field: top.field.clone(),
            rows: top.rows + bottom.rows,
            cols: top.cols,
            entries,
        }
    }

    /// Reduced row echelon form (Gauss-Jordan, exact) and the rank. The
    /// result has the same shape, with zero rows at the bottom.
    pub fn rref(&self) -> (MatrixFq, usize) {
        let mut builder = EchelonBuilder::new(self.field.clone(), self.cols);
        for r in 0..self.rows {
            builder.push_row(self.row(r).to_vec());
        }
        let rank = builder.rank();
        let mut rows = builder.into_rows();
        let zero_row = vec![self.field.zero(); self.cols];
        rows.resize(self.rows, zero_row);
        (
            MatrixFq::from_rows(self.field.clone(), self.cols, rows),
            rank,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Canonical basis (RREF, zero rows dropped) of `{x : self . x = 0}`,
    /// one kernel vector per row.
    pub fn kernel_basis(&self) -> MatrixFq {
        let (r, rank) = self.rref();
        let f = &self.field;
        let mut pivot_cols = Vec::with_capacity(rank);
        for i in 0..rank {
            let pivot = (0..self.cols)
                .find(|&c| !r.get(i, c).is_zero())
                .expect("nonzero row in the reduced form");
            pivot_cols.push(pivot);
        }
        let mut kernel_rows = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            kernel_rows.push(v);
        }
        // The vectors above are independent; reduce once more so the basis
        // is canonical RREF.
        let mut builder = EchelonBuilder::new(self.field.clone(), self.cols);
        for row in kernel_rows {
            builder.push_row(row);
        }
        builder.into_matrix()
    }

    /// The kernel as a subspace value, annihilated exactly by the row space
    /// of `self`.
    pub fn nullspace(&self) -> Subspace {
        let basis = self.kernel_basis();
        let (reduced, rank) = self.rref();
        let mut rows = Vec::with_capacity(rank);
        for i in 0..rank {
            rows.push(reduced.row(i).to_vec());
        }
        let annihilator = MatrixFq::from_rows(self.field.clone(), self.cols, rows);
        Subspace {
            field: self.field.clone(),
            ambient_dim: self.cols,
            basis,
            annihilator,
        }
    }
}

/// Incremental Gauss-Jordan: rows pushed one at a time, the retained rows
/// kept in reduced row echelon form throughout. Lets a caller reduce a
/// conceptually huge stacked system while holding at most `cols` rows.
pub struct EchelonBuilder {
    field: Fq,
    cols: usize,
    /// Retained rows, sorted by pivot column, fully reduced.
    rows: Vec<Vec<FqElement>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: Fq, cols: usize) -> Self {
        EchelonBuilder {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn push_row(&mut self, mut row: Vec<FqElement>) {
        assert_eq!(row.len(), self.cols);
        let f = self.field.clone();
        // Reduce the incoming row against every existing pivot.
        for (i, &pc) in self.pivots.iter().enumerate() {
            if row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for (entry, basis) in row.iter_mut().zip(&self.rows[i]) {
                *entry = f.sub(entry, &f.mul(&factor, basis));
            }
        }
        let Some(pivot) = row.iter().position(|v| !v.is_zero()) else {
            return; // dependent row
        };
        // Normalize so the pivot entry is 1.
        let inv = f.inv(&row[pivot]).expect("pivot is nonzero");
        for entry in row.iter_mut() {
            *entry = f.mul(entry, &inv);
        }
        // Eliminate the new pivot column from the retained rows.
        for retained in self.rows.iter_mut() {
            if retained[pivot].is_zero() {
                continue;
            }
            let factor = retained[pivot].clone();
            for (entry, new) in retained.iter_mut().zip(&row) {
                *entry = f.sub(entry, &f.mul(&factor, new));
            }
        }
        let at = self.pivots.partition_point(|&pc| pc < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, row);
    }

    pub fn into_rows(self) -> Vec<Vec<FqElement>> {
        self.rows
    }

    pub fn into_matrix(self) -> MatrixFq {
        MatrixFq::from_rows(self.field.clone(), self.cols, self.rows)
    }
}

/// A linear subspace of F^(n+1), viewed projectively.
///
/// `basis` is in RREF with no zero rows, so equal subspaces compare equal
/// structurally; the empty subspace has a 0-row basis and projective
/// dimension -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Fq,
    ambient_dim: usize,
    basis: MatrixFq,
    annihilator: MatrixFq,
}

impl Subspace {
    /// Row space of the given spanning rows.
    pub fn from_rows(field: Fq, ambient_dim: usize, rows: Vec<Vec<FqElement>>) -> Self {
        let mut builder = EchelonBuilder::new(field.clone(), ambient_dim);
        for row in rows {
            builder.push_row(row);
        }
        let basis = builder.into_matrix();
        let annihilator = basis.kernel_basis();
        Subspace {
            field,
            ambient_dim,
            basis,
            annihilator,
        }
    }

    pub fn from_matrix(m: &MatrixFq) -> Self {
        let rows = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        Self::from_rows(m.field().clone(), m.cols(), rows)
    }

    pub fn empty(field: Fq, ambient_dim: usize) -> Self {
        Self::from_rows(field, ambient_dim, Vec::new())
    }

    pub fn full(field: Fq, ambient_dim: usize) -> Self {
        let id = MatrixFq::identity(field.clone(), ambient_dim);
        Self::from_matrix(&id)
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Vector-space dimension.
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Projective dimension: rank - 1, hence -1 for the empty subspace.
    pub fn projective_dim(&self) -> i64 {
        self.basis.rows() as i64 - 1
    }

    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &MatrixFq {
        &self.basis
    }

    /// RREF basis of the annihilator (all y with basis . y = 0).
    pub fn annihilator(&self) -> &MatrixFq {
        &self.annihilator
    }

    /// Exact intersection: the joint kernel of both annihilators.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.field, other.field, "subspaces over different fields");
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "subspaces of different ambient dimension"
        );
        let stacked = MatrixFq::stack(&self.annihilator, &other.annihilator);
        stacked.nullspace()
    }

    pub fn contains_vector(&self, v: &[FqElement]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut builder = EchelonBuilder::new(self.field.clone(), self.ambient_dim);
        for r in 0..self.basis.rows() {
            builder.push_row(self.basis.row(r).to_vec());
        }
        let rank = builder.rank();
        builder.push_row(v.to_vec());
        builder.rank() == rank
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.basis.rows()).all(|r| self.contains_vector(other.basis.row(r)))
    }
}
