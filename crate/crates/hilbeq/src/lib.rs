//! Exact symbolic toolkit for the defining equations of Hilbert schemes
//! inside Grassmannians.
//!
//! The crate is organized around the pipeline
//!
//! * [`hilbpoly`] — admissible Hilbert polynomials, their Gotzmann
//!   decomposition and the derived counting functions `q(t)`, `q'(t)`;
//! * [`monom`] — monomial bases of the graded pieces `S_t` in descending
//!   DegRevLex order, Borel-fixed checks and lexsegment sets;
//! * [`exterior`] — multi-index sign calculus, sparse exterior algebra over a
//!   pluggable coefficient ring, and the meet operator on extensors;
//! * [`plucker`] — formal Plücker variables, the `δ`/`θ` generator families of
//!   `∧^m F` that are linear in the Plücker coordinates, and the quadratic
//!   Plücker relations;
//! * [`equations`] — the Iarrobino–Kleiman minors, the Bayer wedge
//!   coefficients and the local/global low-degree equation families, together
//!   with the symbolic PGL action used to globalize the local ones;
//! * [`verify`] — exact rational linear algebra: Plücker coordinates of
//!   explicit subspaces, the persistence rank oracle deciding membership, and
//!   equation evaluation at points.
//!
//! All arithmetic is exact: arbitrary-precision integers for symbolic
//! coefficients and arbitrary-precision rationals for numeric verification.

pub mod equations;
pub mod exterior;
pub mod hilbpoly;
pub mod monom;
pub mod plucker;
pub mod verify;

use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The input polynomial has no admissible Gotzmann decomposition.
    #[error("not an admissible Hilbert polynomial: {0}")]
    NotAdmissible(String),
    /// `d >= n`: the small coordinate ring `k[x_{d+1},...,x_n]` degenerates.
    #[error("degenerate dimension: degree d = {d} must be smaller than n = {n}")]
    DegenerateDimension { d: u32, n: u32 },
    /// A multi-index is malformed or does not fit its context.
    #[error("bad multi-index: {0}")]
    BadMultiIndex(String),
    /// Exterior elements live in different ambient dimensions, or the meet
    /// operator is applied with `p + q < N`.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A minor was requested with selections of inconsistent sizes.
    #[error("selection size mismatch: {0}")]
    SelectionSizeMismatch(String),
    /// A wedge tuple violates the composition constraints of its family.
    #[error("bad composition: {0}")]
    BadComposition(String),
    /// A matrix expected to have full row rank is rank deficient.
    #[error("rank deficient: {0}")]
    RankDeficient(String),
    /// A derived dimension does not fit into machine range.
    #[error("dimension overflow: {0}")]
    Overflow(String),
    /// Malformed textual input (polynomial grammar, files).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
