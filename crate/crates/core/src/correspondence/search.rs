//! Breadth-first vertex-deletion search for reflexive subpolytopes.

use std::collections::{HashSet, VecDeque};

use crate::error::Result;
use crate::picard::picard_rank;
use crate::polytope::Polytope3;
use crate::scalar::{Exact, Point3};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchLimits {
    /// Deletions allowed from the start polytope.
    pub max_depth: usize,
    pub max_results: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { max_depth: 6, max_results: 64 }
    }
}

#[derive(Clone, Debug)]
pub struct SubPolytope<T: Exact> {
    pub polytope: Polytope3<T>,
    /// Number of deletions at which it was first reached.
    pub depth: usize,
    pub rho: i64,
    pub l0: i64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome<T: Exact> {
    pub results: Vec<SubPolytope<T>>,
    /// Set when a limit stopped the search before the closure was exhausted.
    pub truncated: bool,
    /// Distinct polytopes visited, the start excluded.
    pub explored: usize,
}

/// Children of `p`: delete one vertex, hull the remaining lattice points,
/// keep the result if it is full-dimensional with the origin inside.
pub fn deletion_children<T: Exact>(p: &Polytope3<T>) -> Vec<Polytope3<T>> {
    let points = p.lattice_points();
    let Ok(vertices) = p.lattice_vertices() else { return Vec::new() };
    let mut out: Vec<Polytope3<T>> = Vec::new();
    for v in &vertices {
        let rest: Vec<Point3<T>> = points.iter().filter(|q| *q != v).cloned().collect();
        let Ok(child) = Polytope3::from_lattice_points(&rest) else { continue };
        if child.origin_is_interior() && !out.contains(&child) {
            out.push(child);
        }
    }
    out
}

/// All reflexive polytopes in the vertex-deletion closure of `p`, up to
/// GL(3,Z), in breadth-first order. The start polytope is not reported.
pub fn search_sub_reflexive<T: Exact>(p: &Polytope3<T>, limits: SearchLimits) -> Result<SearchOutcome<T>> {
    let mut seen: HashSet<Vec<Point3<T>>> = HashSet::new();
    seen.insert(p.lattice_vertices()?);
    let mut queue: VecDeque<(Polytope3<T>, usize)> = VecDeque::from([(p.clone(), 0)]);
    let mut results: Vec<SubPolytope<T>> = Vec::new();
    let mut truncated = false;
    let mut explored = 0;

    while let Some((node, depth)) = queue.pop_front() {
        let children = deletion_children(&node);
        if depth == limits.max_depth {
            if children.iter().any(|c| c.lattice_vertices().is_ok_and(|v| !seen.contains(&v))) {
                truncated = true;
            }
            continue;
        }
        for child in children {
            let key = child.lattice_vertices()?;
            if !seen.insert(key) {
                continue;
            }
            explored += 1;
            if child.is_reflexive()? && !results.iter().any(|r| r.polytope.unimodular_equivalent(&child).is_some()) {
                if results.len() == limits.max_results {
                    truncated = true;
                    return Ok(SearchOutcome { results, truncated, explored });
                }
                let b = picard_rank(&child)?;
                results.push(SubPolytope { polytope: child.clone(), depth: depth + 1, rho: b.rho, l0: b.correction });
            }
            queue.push_back((child, depth + 1));
        }
    }
    Ok(SearchOutcome { results, truncated, explored })
}
