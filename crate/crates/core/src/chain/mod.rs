//! Finite cell complexes, exact integral homology and the operators built on
//! top of them.

use thiserror::Error;

pub mod complex;
pub mod homology;
pub mod matrix;
pub mod ops;
pub mod simplicial;
pub mod snf;
pub mod split;

pub use complex::{Cell, CellComplex, CellMeta, ValidationReport, Violation};
pub use homology::{homology, is_homology_sphere, HomologyResult};
pub use matrix::{BigMatrix, DenseMatrix, IntMatrix, SparseMatrix};
pub use ops::{join, minimal_circle, suspension, zero_sphere};
pub use simplicial::SimplicialComplex;
pub use snf::{invariant_factors, smith_normal_form, SmithForm};
pub use split::{split_boundary, BigradedSplit, SplitIdentities};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("complex {name} is invalid: {report}")]
    Invalid { name: String, report: ValidationReport },
    #[error("cell {cell} carries no h1-rank metadata")]
    MissingRank { cell: String },
    #[error("incidence {cell} -> {face} changes complementary h1-rank by {jump}")]
    RankJump { cell: String, face: String, jump: i64 },
    #[error("torsion coefficient does not fit in 64 bits")]
    TorsionOverflow,
    #[error("malformed complex JSON: {0}")]
    Json(String),
}
