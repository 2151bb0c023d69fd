//! Exact computation of the nuclei of normal rational curves in PG(n, F)
//! over finite fields of characteristic p.
//!
//! The k-nucleus of the curve {(1, t, ..., t^n)} is the intersection of all
//! of its osculating k-subspaces: empty in characteristic 0, but often large
//! in characteristic p, where it is governed entirely by the base-p digits
//! of n and n + 1. This crate computes nuclei three independent ways and is
//! built so the routes can be cross-verified:
//!
//! - the closed-form dimension formula driven by digit counting
//!   ([`nuclei::nucleus_dim`]),
//! - the basis characterization through vanishing binomial coefficients
//!   ([`nuclei::nucleus_basis_indices`]),
//! - brute-force intersection of the osculating subspaces by exact linear
//!   algebra over GF(q) ([`nrc::CurveContext::geometric_nucleus`]).
//!
//! The combinatorial layer ([`basep`], [`classes`]) provides digit
//! arithmetic, the half order on naturals, binomial residues mod p, and the
//! partition of the zero entries of Pascal's triangle modulo p on which the
//! dimension formula rests. [`gf`] and [`linalg`] supply the exact field
//! and matrix substrate for the geometric route.
//!
//! Everything is pure and immutable; all values are safe to share across
//! threads.

pub mod basep;
pub mod classes;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod nrc;
pub mod nuclei;

pub use basep::{Digits, Prime};
pub use classes::{ClassIndex, ClassLabel, ClassProfile};
pub use error::{Error, MAX_NATURAL};
pub use gf::{Fq, FqElement};
pub use linalg::{MatrixFq, Subspace};
pub use nrc::{CurveContext, Param};
pub use nuclei::{NucleusInterval, NucleusReport, PointNucleus};
