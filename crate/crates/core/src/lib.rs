//! Exact lattice-polytope toolkit for monomial correspondences between
//! families of weighted K3 hypersurfaces.
//!
//! The building blocks are generic over an exact integer scalar
//! ([`scalar::Exact`]); the aliases below fix it to [`BigInt`], which is what
//! the command-line tool and the shipped dataset checks use.

pub mod correspondence;
pub mod error;
pub mod linalg;
pub mod picard;
pub mod polytope;
pub mod scalar;
pub mod weights;

pub use correspondence::{Dataset, RowRecord, VerificationReport};
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use weights::{Monomial, WeightSystem};

pub type IntMatrix = linalg::Matrix<BigInt>;
pub type Polytope = polytope::Polytope3<BigInt>;
pub type Point = scalar::Point3<BigInt>;
pub type RatPoint = scalar::RatPoint3<BigInt>;
pub type Iso = correspondence::LatticeIso<BigInt>;
