//! Weight systems of weighted projective 3-spaces, their anticanonical
//! monomials, and the two polytopes attached to them: the rational
//! tetrahedron `{m : m_i >= -1}` in the degree-zero exponent lattice and the
//! full Newton polytope (hull of its lattice points).
//!
//! Monomials are written over `W, X, Y, Z`, which correspond to the weights
//! in ascending order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{from_coords, kernel_basis, to_coords, to_coords_rational, Matrix};
use crate::polytope::Polytope3;
use crate::scalar::{int, Exact, Point3, Rat, RatPoint3};

const VARS: [char; 4] = ['W', 'X', 'Y', 'Z'];

/// Exponent vector of a monomial in `W, X, Y, Z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn exponents(&self) -> [u32; 4] {
        self.0
    }

    /// Parses monomials written like `W^3X^7`, `WXYZ`, `W^{24}` or `1`.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::MonomialSyntax { text: text.to_string(), reason: reason.into() };
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err("empty monomial"));
        }
        if t == "1" {
            return Ok(Monomial([0; 4]));
        }
        let mut e = [0u32; 4];
        let mut seen = [false; 4];
        let chars: Vec<char> = t.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let v = VARS
                .iter()
                .position(|&c| c == chars[i])
                .ok_or_else(|| err(&format!("unexpected symbol {:?}", chars[i])))?;
            if seen[v] {
                return Err(err(&format!("variable {} repeated", VARS[v])));
            }
            seen[v] = true;
            i += 1;
            let mut exp = 1u32;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let braced = i < chars.len() && chars[i] == '{';
                if braced {
                    i += 1;
                }
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                exp = digits.parse().map_err(|_| err("missing exponent"))?;
                if braced {
                    if i >= chars.len() || chars[i] != '}' {
                        return Err(err("unclosed brace"));
                    }
                    i += 1;
                }
                if exp == 0 {
                    return Err(err("exponents must be positive"));
                }
            }
            e[v] = exp;
        }
        Ok(Monomial(e))
    }

    /// Comma-separated list of monomials.
    pub fn parse_list(text: &str) -> Result<Vec<Self>> {
        text.split(',').map(Self::parse).collect()
    }
}

impl FromStr for Monomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == [0; 4] {
            return write!(f, "1");
        }
        for (v, &e) in VARS.iter().zip(&self.0) {
            match e {
                0 => {}
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}

/// A well-posed quadruple of weights, stored in ascending order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightSystem {
    weights: [u64; 4],
    degree: u64,
    /// `original[perm[i]] == weights[i]`
    perm: [usize; 4],
}

impl WeightSystem {
    /// Accepts weights in any order; they are sorted and the permutation kept.
    pub fn new(raw: [u64; 4]) -> Result<Self> {
        if raw.contains(&0) {
            return Err(Error::InvalidWeights(format!("{raw:?} has a zero weight")));
        }
        let mut perm = [0, 1, 2, 3];
        perm.sort_by_key(|&i| (raw[i], i));
        let weights = perm.map(|i| raw[i]);
        let as_int: Vec<i128> = weights.iter().map(|&w| w as i128).collect();
        kernel_basis::<i128>(&as_int).map_err(|e| match e {
            Error::NotWellPosed(_) => Error::NotWellPosed(raw),
            other => other,
        })?;
        Ok(Self { weights, degree: weights.iter().sum(), perm })
    }

    /// Parses `1,6,14,21`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::InvalidWeights(format!("expected four weights in {text:?}")));
        }
        let mut raw = [0u64; 4];
        for (slot, p) in raw.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| Error::InvalidWeights(format!("bad weight {p:?} in {text:?}")))?;
        }
        Self::new(raw)
    }

    pub fn weights(&self) -> [u64; 4] {
        self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Position in the caller's original ordering of each sorted weight.
    pub fn permutation(&self) -> [usize; 4] {
        self.perm
    }

    /// Canonical basis of the degree-zero exponent lattice.
    pub fn basis<T: Exact>(&self) -> Matrix<T> {
        let w: Vec<T> = self.weights.iter().map(|&x| int(x as i64)).collect();
        kernel_basis(&w).expect("validated at construction")
    }

    pub fn degree_of(&self, m: &Monomial) -> u64 {
        self.weights.iter().zip(&m.0).map(|(&a, &e)| a * e as u64).sum()
    }

    pub fn check_degree(&self, m: &Monomial) -> Result<()> {
        let degree = self.degree_of(m);
        if degree == self.degree {
            Ok(())
        } else {
            Err(Error::WrongDegree { monomial: m.to_string(), degree, expected: self.degree })
        }
    }

    /// All monomials of degree `d`, in lexicographic exponent order.
    pub fn anticanonical_monomials(&self) -> Vec<Monomial> {
        let [a0, a1, a2, a3] = self.weights;
        let d = self.degree;
        let mut out = Vec::new();
        for e0 in 0..=d / a0 {
            let r0 = d - a0 * e0;
            for e1 in 0..=r0 / a1 {
                let r1 = r0 - a1 * e1;
                for e2 in 0..=r1 / a2 {
                    let r2 = r1 - a2 * e2;
                    if r2.is_multiple_of(a3) {
                        out.push(Monomial([e0, e1, e2, (r2 / a3)].map(|x| x as u32)));
                    }
                }
            }
        }
        out
    }

    /// Coordinates of `e - (1,1,1,1)` in the canonical basis.
    pub fn monomial_to_point<T: Exact>(&self, m: &Monomial) -> Result<Point3<T>> {
        self.check_degree(m)?;
        let shifted: Vec<T> = m.0.iter().map(|&e| int(e as i64 - 1)).collect();
        let c = to_coords(&shifted, &self.basis())?;
        Ok([c[0].clone(), c[1].clone(), c[2].clone()])
    }

    /// Inverse of [`Self::monomial_to_point`]; fails if some exponent would be negative.
    pub fn point_to_monomial<T: Exact>(&self, p: &Point3<T>) -> Result<Monomial> {
        let m = from_coords(p, &self.basis());
        let mut e = [0u32; 4];
        for (slot, v) in e.iter_mut().zip(&m) {
            let x = (v.clone() + T::one())
                .to_i64()
                .filter(|&x| x >= 0)
                .ok_or_else(|| Error::NotInLattice(format!("{p:?} is outside the tetrahedron")))?;
            *slot = x as u32;
        }
        Ok(Monomial(e))
    }

    /// Degree-zero exponent vector (in `Z^4`) of a point given in canonical coordinates.
    pub fn exponent_vector<T: Exact>(&self, p: &Point3<T>) -> Vec<T> {
        from_coords(p, &self.basis())
    }

    /// The tetrahedron `{m : m_i >= -1}`, vertex `j` having `m_i = -1` for `i != j`.
    pub fn delta_tetrahedron<T: Exact>(&self) -> Polytope3<T> {
        let basis = self.basis::<T>();
        let verts: Vec<RatPoint3<T>> = (0..4)
            .map(|j| {
                let others: u64 = (0..4).filter(|&i| i != j).map(|i| self.weights[i]).sum();
                let m: Vec<Rat<T>> = (0..4)
                    .map(|i| {
                        if i == j {
                            Rat::new(int(others as i64), int(self.weights[j] as i64))
                        } else {
                            Rat::from_integer(int(-1))
                        }
                    })
                    .collect();
                let c = to_coords_rational(&m, &basis).expect("degree-zero vector lies in the span");
                [c[0].clone(), c[1].clone(), c[2].clone()]
            })
            .collect();
        Polytope3::hull(&verts).expect("tetrahedron is full-dimensional")
    }

    /// Lattice points of the tetrahedron, one per anticanonical monomial.
    pub fn anticanonical_points<T: Exact>(&self) -> Vec<Point3<T>> {
        self.anticanonical_monomials()
            .iter()
            .map(|m| self.monomial_to_point(m).expect("anticanonical monomials have degree d"))
            .collect()
    }

    /// Full Newton polytope: hull of all anticanonical lattice points.
    pub fn newton_polytope<T: Exact>(&self) -> Result<Polytope3<T>> {
        Polytope3::from_lattice_points(&self.anticanonical_points())
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.weights;
        write!(f, "P({a},{b},{c},{d})")
    }
}

impl FromStr for WeightSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use std::collections::BTreeSet;

    fn ws(a: [u64; 4]) -> WeightSystem {
        WeightSystem::new(a).unwrap()
    }

    #[test]
    fn parse_exponent_notation() {
        assert_eq!(Monomial::parse("Z^2").unwrap(), Monomial([0, 0, 0, 2]));
        assert_eq!(Monomial::parse("WXYZ").unwrap(), Monomial([1, 1, 1, 1]));
        assert_eq!(Monomial::parse("W^3X^7").unwrap(), Monomial([3, 7, 0, 0]));
        assert_eq!(Monomial::parse("W^{24}").unwrap(), Monomial([24, 0, 0, 0]));
        assert_eq!(Monomial::parse(" X^5 Y ").unwrap(), Monomial([0, 5, 1, 0]));
        assert_eq!(Monomial::parse("W^3X^7").unwrap().to_string(), "W^3X^7");
    }

    #[test]
    fn parse_rejections() {
        for bad in ["WW", "W^2XW", "W^0", "Q^2", "W^", "", "W^{3", "W^-1", "2W"] {
            assert!(Monomial::parse(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn weights_sorted_with_permutation() {
        let w = WeightSystem::parse("14, 1, 21, 6").unwrap();
        assert_eq!(w.weights(), [1, 6, 14, 21]);
        assert_eq!(w.degree(), 42);
        assert_eq!(w.permutation(), [1, 3, 0, 2]);
        assert_eq!(w.to_string(), "P(1,6,14,21)");
    }

    #[test]
    fn weights_rejected() {
        assert!(matches!(WeightSystem::new([2, 4, 6, 9]), Err(Error::NotWellPosed(_))));
        assert!(WeightSystem::new([0, 1, 1, 1]).is_err());
        assert!(WeightSystem::parse("1,2,3").is_err());
        assert!(WeightSystem::parse("1,2,x,3").is_err());
    }

    #[test]
    fn origin_monomial() {
        for a in [[1, 1, 1, 1], [2, 4, 5, 9], [5, 6, 22, 33]] {
            let p: Point3<BigInt> = ws(a).monomial_to_point(&Monomial([1, 1, 1, 1])).unwrap();
            assert_eq!(p, [int(0), int(0), int(0)]);
        }
    }

    #[test]
    fn table_monomials_land_on_expected_exponents() {
        let a = ws([1, 6, 14, 21]);
        let p: Point3<BigInt> = a.monomial_to_point(&Monomial::parse("W^42").unwrap()).unwrap();
        assert_eq!(a.exponent_vector(&p), vec![int(41), int(-1), int(-1), int(-1)]);
        let b = ws([1, 2, 5, 7]);
        let q: Point3<BigInt> = b.monomial_to_point(&Monomial::parse("X^5Y").unwrap()).unwrap();
        assert_eq!(b.exponent_vector(&q), vec![int(-1), int(4), int(0), int(-1)]);
        assert_eq!(b.point_to_monomial(&q).unwrap(), Monomial([0, 5, 1, 0]));
    }

    #[test]
    fn wrong_degree_reports_value() {
        let err = ws([1, 6, 14, 21]).monomial_to_point::<i64>(&Monomial([0, 0, 0, 3])).unwrap_err();
        assert_eq!(err, Error::WrongDegree { monomial: "Z^3".into(), degree: 63, expected: 42 });
    }

    #[test]
    fn quartic_counts() {
        let q = ws([1, 1, 1, 1]);
        assert_eq!(q.anticanonical_monomials().len(), 35);
        let n: Polytope3<BigInt> = q.newton_polytope().unwrap();
        assert_eq!(n, q.delta_tetrahedron());
        assert_eq!(n.lattice_points().len(), 35);
    }

    #[test]
    fn tetrahedron_vertices_integral_for_14() {
        let a = ws([1, 6, 14, 21]);
        let t: Polytope3<BigInt> = a.delta_tetrahedron();
        assert_eq!(t.vertices().len(), 4);
        assert!(t.is_lattice());
        let mut exps: Vec<Vec<BigInt>> = t.lattice_vertices().unwrap().iter().map(|v| a.exponent_vector(v)).collect();
        exps.sort();
        let mut expected: Vec<Vec<BigInt>> = [[41, -1, -1, -1], [-1, 6, -1, -1], [-1, -1, 2, -1], [-1, -1, -1, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        expected.sort();
        assert_eq!(exps, expected);
        assert_eq!(a.newton_polytope::<BigInt>().unwrap(), t);
    }

    #[test]
    fn tetrahedron_rational_for_26() {
        let a = ws([2, 4, 5, 9]);
        let t: Polytope3<BigInt> = a.delta_tetrahedron();
        assert!(!t.is_lattice());
        let n = a.newton_polytope::<BigInt>().unwrap();
        assert!(t.contains(&n));
        assert_ne!(t, n);
        assert!(n.origin_is_interior());
    }

    #[test]
    fn monomial_points_are_injective() {
        let a = ws([3, 4, 10, 13]);
        let pts: Vec<Point3<BigInt>> = a.anticanonical_points();
        let set: BTreeSet<_> = pts.iter().cloned().collect();
        assert_eq!(set.len(), pts.len());
    }
}
