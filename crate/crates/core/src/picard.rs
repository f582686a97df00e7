//! Picard rank of the minimal model of a generic anticanonical hypersurface
//! of the toric 3-fold of a reflexive polytope `P` (the Newton polytope).
//!
//! ```text
//! rho = l(P*) - 4 - sum_{facets F* of P*} l*(F*) + sum_{edges E of P} l*(E) l*(E*)
//! ```
//!
//! The last sum is the part of the lattice not restricted from the ambient
//! toric variety; its value is reported separately as the L0 rank.

use crate::error::{Error, Result};
use crate::polytope::Polytope3;
use crate::scalar::{segment_interior_points, Exact};

/// Contribution of one edge `E` of `P` paired with its dual edge `E*` of `P*`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EdgeTerm {
    /// Index into [`Polytope3::edges`] of `P`.
    pub edge: usize,
    pub interior: usize,
    pub dual_interior: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PicardBreakdown {
    pub rho: i64,
    /// `l(P*) - 4 - sum l*(F*)`
    pub toric_part: i64,
    /// `sum l*(E) l*(E*)`
    pub correction: i64,
    pub dual_points: usize,
    /// `l*(F*)` per facet of `P*`, in the dual's facet order.
    pub dual_facet_interior: Vec<usize>,
    pub edge_terms: Vec<EdgeTerm>,
}

pub fn picard_rank<T: Exact>(p: &Polytope3<T>) -> Result<PicardBreakdown> {
    if !p.is_reflexive()? {
        return Err(Error::NotReflexive);
    }
    let dual = p.polar_dual()?;
    let counts = dual.face_counts();

    // Facet F of P (normal n, offset 1) is dual to the vertex n of P*; the
    // edge between facets F1, F2 is dual to the segment [n1, n2].
    let mut edge_terms = Vec::with_capacity(p.edges().len());
    for (i, e) in p.edges().iter().enumerate() {
        let n1 = &p.facets()[e.facets[0]].normal;
        let n2 = &p.facets()[e.facets[1]].normal;
        let interior = to_usize(p.edge_interior_count(e)?);
        let dual_interior = to_usize(segment_interior_points(n1, n2));
        edge_terms.push(EdgeTerm { edge: i, interior, dual_interior });
    }

    let facet_sum: usize = counts.facet_interior.iter().sum();
    let toric_part = counts.total as i64 - 4 - facet_sum as i64;
    let correction: i64 = edge_terms.iter().map(|t| (t.interior * t.dual_interior) as i64).sum();
    Ok(PicardBreakdown {
        rho: toric_part + correction,
        toric_part,
        correction,
        dual_points: counts.total,
        dual_facet_interior: counts.facet_interior,
        edge_terms,
    })
}

/// Rank of L0, the correction term of [`picard_rank`].
pub fn l0_rank<T: Exact>(p: &Polytope3<T>) -> Result<i64> {
    Ok(picard_rank(p)?.correction)
}

fn to_usize<T: Exact>(x: T) -> usize {
    x.to_usize().expect("lattice point counts fit in usize")
}
