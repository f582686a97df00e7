//! Exact 3-dimensional polytopes with rational vertices.
//!
//! A [`Polytope3`] is always full-dimensional and carries its whole face
//! lattice: lexicographically sorted vertices, facets as primitive inward
//! normals `n` with offsets `c` meaning `<n, x> >= -c`, and edges recorded
//! together with the two facets that meet in them.

mod hull;
pub mod text;

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{integral, inverse_rational, is_unimodular, to_rational, Matrix};
use crate::scalar::{int, pair3, rat, segment_interior_points, to_int3, to_rat3, Exact, Point3, Rat, RatPoint3};

/// Supporting half-space `<normal, x> >= -offset` together with the facet's vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet<T: Exact> {
    pub normal: Point3<T>,
    pub offset: Rat<T>,
    /// Vertex indices in cyclic order around the facet.
    pub vertices: Vec<usize>,
}

impl<T: Exact> Facet<T> {
    /// `<normal, x> + offset`: zero on the facet, positive inside.
    pub fn slack(&self, x: &RatPoint3<T>) -> Rat<T> {
        pair3(&self.normal, x) + self.offset.clone()
    }

    pub fn contains_point(&self, x: &RatPoint3<T>) -> bool {
        !self.slack(x).is_negative()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub vertices: [usize; 2],
    pub facets: [usize; 2],
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polytope3<T: Exact> {
    vertices: Vec<RatPoint3<T>>,
    facets: Vec<Facet<T>>,
    edges: Vec<Edge>,
}

/// Lattice point statistics by face.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FaceCounts {
    /// All lattice points, l(P).
    pub total: usize,
    /// Lattice points in the interior of the polytope, l*(P).
    pub interior: usize,
    /// Per facet (same order as [`Polytope3::facets`]), points in the relative interior.
    pub facet_interior: Vec<usize>,
    /// Per edge (same order as [`Polytope3::edges`]), points strictly between the endpoints.
    pub edge_interior: Vec<usize>,
    /// Vertices that are lattice points.
    pub lattice_vertices: usize,
}

impl<T: Exact> Polytope3<T> {
    /// Convex hull of rational points.
    pub fn hull(points: &[RatPoint3<T>]) -> Result<Self> {
        let raw = hull::hull(points)?;
        // Keep only points used as polygon corners, renumbered in lexicographic order.
        let mut used: Vec<usize> = raw.facets.iter().flat_map(|f| f.2.iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        let renumber: BTreeMap<usize, usize> = used.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let vertices: Vec<RatPoint3<T>> = used.iter().map(|&i| raw.points[i].clone()).collect();

        let mut facets: Vec<Facet<T>> = raw
            .facets
            .into_iter()
            .map(|(normal, value, cyc)| Facet {
                normal,
                offset: -value,
                vertices: canonical_cycle(cyc.iter().map(|i| renumber[i]).collect()),
            })
            .collect();
        facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));

        let mut edge_facets: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
        for (fi, f) in facets.iter().enumerate() {
            let k = f.vertices.len();
            for j in 0..k {
                let (a, b) = (f.vertices[j], f.vertices[(j + 1) % k]);
                edge_facets.entry([a.min(b), a.max(b)]).or_default().push(fi);
            }
        }
        let edges = edge_facets
            .into_iter()
            .map(|(vertices, fs)| {
                debug_assert_eq!(fs.len(), 2, "every edge lies on exactly two facets");
                Edge { vertices, facets: [fs[0].min(fs[1]), fs[0].max(fs[1])] }
            })
            .collect();

        Ok(Self { vertices, facets, edges })
    }

    /// Convex hull of integer points.
    pub fn from_lattice_points(points: &[Point3<T>]) -> Result<Self> {
        let pts: Vec<RatPoint3<T>> = points.iter().map(to_rat3).collect();
        Self::hull(&pts)
    }

    pub fn vertices(&self) -> &[RatPoint3<T>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet<T>] {
        &self.facets
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|c| c.is_integer()))
    }

    /// Integer vertices, or [`Error::NotLattice`].
    pub fn lattice_vertices(&self) -> Result<Vec<Point3<T>>> {
        self.vertices.iter().map(|v| to_int3(v).ok_or(Error::NotLattice)).collect()
    }

    pub fn contains_point(&self, x: &RatPoint3<T>) -> bool {
        self.facets.iter().all(|f| f.contains_point(x))
    }

    pub fn contains_lattice_point(&self, x: &Point3<T>) -> bool {
        self.contains_point(&to_rat3(x))
    }

    /// True iff every vertex of `inner` lies in `self`.
    pub fn contains(&self, inner: &Polytope3<T>) -> bool {
        inner.vertices.iter().all(|v| self.contains_point(v))
    }

    pub fn origin_is_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_positive())
    }

    /// Polar dual `{y : <x, y> >= -1 for all x in self}`.
    ///
    /// Its vertices are `n / c` for the facets `<n, x> >= -c`.
    pub fn polar_dual(&self) -> Result<Self> {
        if !self.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        let pts: Vec<RatPoint3<T>> = self
            .facets
            .iter()
            .map(|f| {
                [
                    rat(f.normal[0].clone()) / f.offset.clone(),
                    rat(f.normal[1].clone()) / f.offset.clone(),
                    rat(f.normal[2].clone()) / f.offset.clone(),
                ]
            })
            .collect();
        Self::hull(&pts)
    }

    /// Lattice polytope whose facets all sit at lattice distance one from the origin.
    pub fn is_reflexive(&self) -> Result<bool> {
        if !self.origin_is_interior() {
            return Err(Error::OriginNotInterior);
        }
        Ok(self.is_lattice() && self.facets.iter().all(|f| f.offset.is_one()))
    }

    /// All integer points, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<Point3<T>> {
        let lo = |k: usize| self.vertices.iter().map(|v| v[k].clone()).min().expect("nonempty").ceil().to_integer();
        let hi = |k: usize| self.vertices.iter().map(|v| v[k].clone()).max().expect("nonempty").floor().to_integer();
        let mut out = Vec::new();
        let mut x = lo(0);
        let (xh, yl, yh) = (hi(0), lo(1), hi(1));
        while x <= xh {
            let mut y = yl.clone();
            while y <= yh {
                if let Some((zl, zh)) = self.z_range(&x, &y) {
                    let mut z = zl;
                    while z <= zh {
                        out.push([x.clone(), y.clone(), z.clone()]);
                        z = z + T::one();
                    }
                }
                y = y + T::one();
            }
            x = x + T::one();
        }
        out
    }

    /// Integer `z` interval of the column over `(x, y)`, if nonempty.
    fn z_range(&self, x: &T, y: &T) -> Option<(T, T)> {
        let mut lo: Option<T> = None;
        let mut hi: Option<T> = None;
        for f in &self.facets {
            // n_z z >= -c - n_x x - n_y y
            let rhs = -f.offset.clone() - rat(f.normal[0].clone() * x.clone()) - rat(f.normal[1].clone() * y.clone());
            let nz = &f.normal[2];
            if nz.is_zero() {
                if rhs.is_positive() {
                    return None;
                }
            } else if nz.is_positive() {
                let b = (rhs / rat(nz.clone())).ceil().to_integer();
                if lo.as_ref().is_none_or(|l| b > *l) {
                    lo = Some(b);
                }
            } else {
                let b = (rhs / rat(nz.clone())).floor().to_integer();
                if hi.as_ref().is_none_or(|h| b < *h) {
                    hi = Some(b);
                }
            }
        }
        let (lo, hi) = (lo?, hi?);
        (lo <= hi).then_some((lo, hi))
    }

    /// Facets on which `x` lies.
    pub fn tight_facets(&self, x: &RatPoint3<T>) -> Vec<usize> {
        (0..self.facets.len()).filter(|&i| self.facets[i].slack(x).is_zero()).collect()
    }

    pub fn face_counts(&self) -> FaceCounts {
        let edge_of: BTreeMap<[usize; 2], usize> = self.edges.iter().enumerate().map(|(i, e)| (e.facets, i)).collect();
        let mut counts = FaceCounts {
            facet_interior: vec![0; self.facets.len()],
            edge_interior: vec![0; self.edges.len()],
            ..FaceCounts::default()
        };
        for p in self.lattice_points() {
            counts.total += 1;
            let tight = self.tight_facets(&to_rat3(&p));
            match tight.len() {
                0 => counts.interior += 1,
                1 => counts.facet_interior[tight[0]] += 1,
                2 => counts.edge_interior[edge_of[&[tight[0], tight[1]]]] += 1,
                _ => counts.lattice_vertices += 1,
            }
        }
        counts
    }

    /// Lattice points strictly inside an edge, from its endpoints.
    pub fn edge_interior_count(&self, edge: &Edge) -> Result<T> {
        let a = to_int3(&self.vertices[edge.vertices[0]]).ok_or(Error::NotLattice)?;
        let b = to_int3(&self.vertices[edge.vertices[1]]).ok_or(Error::NotLattice)?;
        Ok(segment_interior_points(&a, &b))
    }

    /// Image under the linear map `x -> u x`.
    pub fn transform(&self, u: &Matrix<T>) -> Result<Self> {
        let ur = to_rational(u);
        let pts: Vec<RatPoint3<T>> = self
            .vertices
            .iter()
            .map(|v| {
                let w = ur.apply(v);
                [w[0].clone(), w[1].clone(), w[2].clone()]
            })
            .collect();
        Self::hull(&pts)
    }

    /// Finds `u` in GL(3, Z) with `u * self = other` as vertex sets.
    ///
    /// Brute force over images of one fixed independent vertex triple; fine for
    /// the handful of vertices these polytopes have.
    pub fn unimodular_equivalent(&self, other: &Self) -> Option<Matrix<T>> {
        if self.vertices.len() != other.vertices.len()
            || self.facets.len() != other.facets.len()
            || self.edges.len() != other.edges.len()
        {
            return None;
        }
        let n = self.vertices.len();
        let src_inv = independent_triple_inverse(&self.vertices)?;
        let mut target_sorted = other.vertices.clone();
        target_sorted.sort();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let cols = [&other.vertices[i], &other.vertices[j], &other.vertices[k]];
                    let q = Matrix::from_rows(&cols.map(|c| c.to_vec())).transpose();
                    let Some(u) = integral(&q.mul(&src_inv)) else { continue };
                    if !is_unimodular(&u) {
                        continue;
                    }
                    let ur = to_rational(&u);
                    let mut image: Vec<RatPoint3<T>> = self
                        .vertices
                        .iter()
                        .map(|v| {
                            let w = ur.apply(v);
                            [w[0].clone(), w[1].clone(), w[2].clone()]
                        })
                        .collect();
                    image.sort();
                    if image == target_sorted {
                        return Some(u);
                    }
                }
            }
        }
        None
    }

    /// Euler characteristic `V - E + F`.
    pub fn euler(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.facets.len() as i64
    }
}

/// Rotate so the smallest index comes first and its smaller neighbour second.
fn canonical_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let m = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
    c.rotate_left(m);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// Inverse of the column matrix of the first linearly independent vertex triple.
fn independent_triple_inverse<T: Exact>(vs: &[RatPoint3<T>]) -> Option<Matrix<Rat<T>>> {
    let n = vs.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let m = Matrix::from_rows(&[vs[i].to_vec(), vs[j].to_vec(), vs[k].to_vec()]).transpose();
                if let Some(inv) = inverse_rational(&m) {
                    return Some(inv);
                }
            }
        }
    }
    None
}

/// Axis cube `[-r, r]^3`.
pub fn cube<T: Exact>(r: i64) -> Polytope3<T> {
    let mut pts = Vec::new();
    for sx in [-r, r] {
        for sy in [-r, r] {
            for sz in [-r, r] {
                pts.push([int(sx), int(sy), int(sz)]);
            }
        }
    }
    Polytope3::from_lattice_points(&pts).expect("cube is full-dimensional")
}

/// `conv{±a e1, ±b e2, ±c e3}`.
pub fn cross_polytope<T: Exact>(a: i64, b: i64, c: i64) -> Polytope3<T> {
    let pts = [
        [int(a), int(0), int(0)],
        [int(-a), int(0), int(0)],
        [int(0), int(b), int(0)],
        [int(0), int(-b), int(0)],
        [int(0), int(0), int(c)],
        [int(0), int(0), int(-c)],
    ];
    Polytope3::from_lattice_points(&pts).expect("cross-polytope is full-dimensional")
}
