use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weights {0:?} are not well-posed (some three of them share a common factor)")]
    NotWellPosed([u64; 4]),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("point {0} is not in the lattice")]
    NotInLattice(String),
    #[error("monomial parse error in {text:?}: {reason}")]
    MonomialSyntax { text: String, reason: String },
    #[error("monomial {monomial} has degree {degree}, expected {expected}")]
    WrongDegree { monomial: String, degree: u64, expected: u64 },
    #[error("points are degenerate (affine dimension {0} < 3)")]
    Degenerate(usize),
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("polytope is not a lattice polytope")]
    NotLattice,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("polytope is not contained in {0}")]
    NotContained(String),
    #[error("fewer than three linearly independent columns")]
    RankDeficientColumns,
    #[error("no linear map fits column {0}")]
    InconsistentColumns(usize),
    #[error("derived map is not unimodular: {0}")]
    NotUnimodular(String),
    #[error("line {line}: {reason}")]
    Format { line: usize, reason: String },
    #[error("dataset: {0}")]
    Dataset(String),
}
