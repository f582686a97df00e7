//! Exact 3D convex hull by gift wrapping over facets.
//!
//! Start from one facet through the lexicographically smallest point, then
//! for every boundary edge of a known facet rotate a plane around that edge
//! until it supports the point set. Coplanar points are grouped per facet and
//! each facet polygon comes from an exact 2D monotone chain, so collinear and
//! coplanar inputs need no special casing.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{pair3, primitive3, rcross3, rdot3, rsub3, Exact, Point3, Rat, RatPoint3};

/// Raw hull output, indices refer to the deduplicated input.
pub(crate) struct RawHull<T: Exact> {
    pub points: Vec<RatPoint3<T>>,
    /// (inward primitive normal, value of the normal on the plane, cyclic point indices)
    pub facets: Vec<(Point3<T>, Rat<T>, Vec<usize>)>,
}

fn orient<T: Exact>(a: &RatPoint3<T>, b: &RatPoint3<T>, c: &RatPoint3<T>, q: &RatPoint3<T>) -> Rat<T> {
    rdot3(&rcross3(&rsub3(b, a), &rsub3(c, a)), &rsub3(q, a))
}

fn is_zero3<T: Exact>(v: &RatPoint3<T>) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Affine dimension of a point set (at most 3).
pub(crate) fn affine_dimension<T: Exact>(pts: &[RatPoint3<T>]) -> usize {
    let Some(p0) = pts.first() else { return 0 };
    let Some(p1) = pts.iter().find(|p| *p != p0) else { return 0 };
    let d1 = rsub3(p1, p0);
    let Some(n) = pts.iter().map(|p| rcross3(&d1, &rsub3(p, p0))).find(|n| !is_zero3(n)) else {
        return 1;
    };
    if pts.iter().any(|p| !rdot3(&n, &rsub3(p, p0)).is_zero()) {
        3
    } else {
        2
    }
}

/// Plane through a, b, c with its normal oriented so that `inside` is on the nonnegative side.
fn oriented_plane<T: Exact>(
    a: &RatPoint3<T>,
    b: &RatPoint3<T>,
    c: &RatPoint3<T>,
    inside: &RatPoint3<T>,
) -> (Point3<T>, Rat<T>) {
    let n = primitive3(&rcross3(&rsub3(b, a), &rsub3(c, a)));
    let mut n = n;
    if pair3(&n, inside) < pair3(&n, a) {
        n = [-n[0].clone(), -n[1].clone(), -n[2].clone()];
    }
    let h = pair3(&n, a);
    (n, h)
}

fn supports<T: Exact>(pts: &[RatPoint3<T>], n: &Point3<T>, h: &Rat<T>) -> bool {
    pts.iter().all(|p| pair3(n, p) >= *h)
}

/// Vertices of the convex polygon formed by coplanar points, in cyclic order.
fn polygon<T: Exact>(pts: &[RatPoint3<T>], on: &[usize], normal: &Point3<T>) -> Vec<usize> {
    // Drop the coordinate where the normal is nonzero; the projection is injective on the plane.
    let drop = (0..3).find(|&k| !normal[k].is_zero()).expect("nonzero normal");
    let (ax, ay) = match drop {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut idx: Vec<usize> = on.to_vec();
    idx.sort_by(|&i, &j| (&pts[i][ax], &pts[i][ay]).cmp(&(&pts[j][ax], &pts[j][ay])));
    let cross = |o: usize, a: usize, b: usize| -> Rat<T> {
        (pts[a][ax].clone() - pts[o][ax].clone()) * (pts[b][ay].clone() - pts[o][ay].clone())
            - (pts[a][ay].clone() - pts[o][ay].clone()) * (pts[b][ax].clone() - pts[o][ax].clone())
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && !cross(lower[lower.len() - 2], lower[lower.len() - 1], i).is_positive() {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && !cross(upper[upper.len() - 2], upper[upper.len() - 1], i).is_positive() {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

pub(crate) fn hull<T: Exact>(input: &[RatPoint3<T>]) -> Result<RawHull<T>> {
    let mut points: Vec<RatPoint3<T>> = input.to_vec();
    points.sort();
    points.dedup();
    let dim = affine_dimension(&points);
    if dim < 3 {
        return Err(Error::Degenerate(dim));
    }

    let first = first_facet(&points);
    let mut planes: BTreeMap<(Point3<T>, Rat<T>), Vec<usize>> = BTreeMap::new();
    let mut queue: VecDeque<(Point3<T>, Rat<T>)> = VecDeque::new();
    let mut done_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    queue.push_back(first);

    while let Some((n, h)) = queue.pop_front() {
        if planes.contains_key(&(n.clone(), h.clone())) {
            continue;
        }
        let on: Vec<usize> = (0..points.len()).filter(|&i| pair3(&n, &points[i]) == h).collect();
        let poly = polygon(&points, &on, &n);
        debug_assert!(poly.len() >= 3);
        for k in 0..poly.len() {
            let (u, v) = (poly[k], poly[(k + 1) % poly.len()]);
            let key = (u.min(v), u.max(v));
            if !done_edges.insert(key) {
                continue;
            }
            // any polygon vertex off the edge lies on this facet but not on the edge line
            let f = poly[(k + 2) % poly.len()];
            let next = wrap(&points, u, v, f, &n, &h);
            if !planes.contains_key(&next) {
                queue.push_back(next);
            }
        }
        planes.insert((n, h), poly);
    }

    let facets = planes.into_iter().map(|((n, h), poly)| (n, h, poly)).collect();
    Ok(RawHull { points, facets })
}

fn first_facet<T: Exact>(pts: &[RatPoint3<T>]) -> (Point3<T>, Rat<T>) {
    // pts[0] is the lexicographic minimum, hence a vertex.
    let p0 = &pts[0];
    for j in 1..pts.len() {
        for k in j + 1..pts.len() {
            let nrm = rcross3(&rsub3(&pts[j], p0), &rsub3(&pts[k], p0));
            if is_zero3(&nrm) {
                continue;
            }
            let n = primitive3(&nrm);
            let h = pair3(&n, p0);
            if supports(pts, &n, &h) {
                return (n, h);
            }
            let neg = [-n[0].clone(), -n[1].clone(), -n[2].clone()];
            let hn = -h;
            if supports(pts, &neg, &hn) {
                return (neg, hn);
            }
        }
    }
    unreachable!("a full-dimensional point set has a facet through each vertex")
}

/// The facet other than (n, h) that contains the edge `a b`; `f` is on the
/// known facet but off the edge.
fn wrap<T: Exact>(
    pts: &[RatPoint3<T>],
    a: usize,
    b: usize,
    f: usize,
    n: &Point3<T>,
    h: &Rat<T>,
) -> (Point3<T>, Rat<T>) {
    let (pa, pb, pf) = (&pts[a], &pts[b], &pts[f]);
    let mut c =
        (0..pts.len()).find(|&i| pair3(n, &pts[i]) > *h).expect("full-dimensional hull has points off every facet");
    let mut side_f = orient(pa, pb, &pts[c], pf);
    for q in 0..pts.len() {
        let s = orient(pa, pb, &pts[c], &pts[q]);
        if (s.is_positive() && side_f.is_negative()) || (s.is_negative() && side_f.is_positive()) {
            c = q;
            side_f = orient(pa, pb, &pts[c], pf);
        }
    }
    let plane = oriented_plane(pa, pb, &pts[c], pf);
    debug_assert!(supports(pts, &plane.0, &plane.1));
    plane
}
