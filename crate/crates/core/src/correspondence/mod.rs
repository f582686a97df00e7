//! Monomial correspondences between weight systems: the shipped row table,
//! the lattice isomorphisms it encodes, row verification and the
//! reflexive-subpolytope search.

pub mod dataset;
pub mod iso;
pub mod search;
pub mod verify;

pub use dataset::{Dataset, RowRecord};
pub use iso::{amoeba_map, column_points, derive_from_points, derive_iso, LatticeIso};
pub use search::{deletion_children, search_sub_reflexive, SearchLimits, SearchOutcome, SubPolytope};
pub use verify::{common_delta, verify_record, verify_row, verify_swaps, Check, ReportKind, VerificationReport};
