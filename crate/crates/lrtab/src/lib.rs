//! Combinatorics of Littlewood-Richardson (LR) tableaux for sequences of
//! rectangles: the R-cocyclage graded poset, the generalized charge statistic,
//! the rectangle-switching action of the symmetric group, and an independent
//! algebraic computation of the Poincare polynomials `K_{lambda;R}(q)` via the
//! q-analogue of the Kostant partition function.
//!
//! The two computations of `K_{lambda;R}(q)` — enumerating LR tableaux by
//! charge, and expanding an alternant over the q-Kostant partition function —
//! are kept fully independent so that their agreement is a meaningful check.
//! The `verify` module packages that check and the structural invariants of
//! the poset and the S_t action into runnable suites.

pub mod crystal;
pub mod cyclage;
pub mod lr;
pub mod poincare;
pub mod rsk;
pub mod shape;
pub mod tableau;
pub mod verify;
pub mod word;

pub use crystal::Permutation;
pub use lr::{Rect, RectSequence};
pub use poincare::QPolynomial;
pub use shape::{Partition, SkewShape, Weight};
pub use tableau::Tableau;
pub use word::Word;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not column-strict: {0}")]
    NotColumnStrict(String),
    #[error("word is not R-LR")]
    NotRLr,
    #[error("cell {0:?} is not a corner of the shape")]
    NotACorner((usize, usize)),
    #[error("infeasible target length {0}")]
    InfeasibleTarget(usize),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
