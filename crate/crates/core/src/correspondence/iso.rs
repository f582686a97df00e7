//! Lattice isomorphisms between degree-zero exponent lattices, derived from
//! corresponding monomials.

use crate::error::{Error, Result};
use crate::linalg::{
    det, from_coords, integral, inverse_rational, inverse_unimodular, is_unimodular, to_coords, to_rational, Matrix,
};

use crate::scalar::{to_rat3, Exact, Point3};
use crate::weights::WeightSystem;

use super::dataset::RowRecord;

/// `u` maps canonical coordinates of `M(source)` to those of `M(target)`
/// (acting on column vectors).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeIso<T: Exact> {
    u: Matrix<T>,
    source: WeightSystem,
    target: WeightSystem,
}

impl<T: Exact> LatticeIso<T> {
    pub fn identity(ws: &WeightSystem) -> Self {
        Self { u: Matrix::identity(3), source: ws.clone(), target: ws.clone() }
    }

    /// Wraps a unimodular matrix.
    pub fn new(u: Matrix<T>, source: WeightSystem, target: WeightSystem) -> Result<Self> {
        if u.rows() != 3 || u.cols() != 3 || !is_unimodular(&u) {
            return Err(Error::NotUnimodular(format!("det = {}", det(&u))));
        }
        Ok(Self { u, source, target })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.u
    }

    pub fn source(&self) -> &WeightSystem {
        &self.source
    }

    pub fn target(&self) -> &WeightSystem {
        &self.target
    }

    pub fn apply(&self, p: &Point3<T>) -> Point3<T> {
        let v = self.u.apply(p);
        [v[0].clone(), v[1].clone(), v[2].clone()]
    }

    /// The induced map on degree-zero exponent vectors in `Z^4`.
    pub fn map_exponent(&self, m: &[T]) -> Result<Vec<T>> {
        let c = to_coords(m, &self.source.basis())?;
        let img = self.u.apply(&c);
        Ok(from_coords(&img, &self.target.basis()))
    }

    pub fn inverse(&self) -> Self {
        Self {
            u: inverse_unimodular(&self.u).expect("unimodular by construction"),
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Self) -> Self {
        debug_assert_eq!(self.target, next.source);
        Self { u: next.u.mul(&self.u), source: self.source.clone(), target: next.target.clone() }
    }
}

/// The unique linear map sending each source point to the target point of the
/// same index. Solves on the first three independent columns and checks the rest.
pub fn derive_from_points<T: Exact>(src: &[Point3<T>], dst: &[Point3<T>]) -> Result<Matrix<T>> {
    assert_eq!(src.len(), dst.len(), "column count mismatch");
    let n = src.len();
    let mut solving = None;
    'search: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = Matrix::from_rows(&[src[i].to_vec(), src[j].to_vec(), src[k].to_vec()]).transpose();
                if !det(&s).is_zero() {
                    solving = Some((s, [i, j, k]));
                    break 'search;
                }
            }
        }
    }
    let (s, [i, j, k]) = solving.ok_or(Error::RankDeficientColumns)?;
    let t = Matrix::from_rows(&[dst[i].to_vec(), dst[j].to_vec(), dst[k].to_vec()]).transpose();
    let u = to_rational(&t).mul(&inverse_rational(&to_rational(&s)).expect("nonzero determinant"));
    for c in 0..n {
        if u.apply(&to_rat3(&src[c])) != to_rat3(&dst[c]) {
            return Err(Error::InconsistentColumns(c));
        }
    }
    let u = integral(&u).ok_or_else(|| Error::NotUnimodular("non-integral entries".into()))?;
    if !is_unimodular(&u) {
        return Err(Error::NotUnimodular(format!("det = {}", det(&u))));
    }
    Ok(u)
}

/// Columns of family `k` as lattice points.
pub fn column_points<T: Exact>(row: &RowRecord, k: usize) -> Result<Vec<Point3<T>>> {
    let ws = &row.weights[k];
    row.monomials_of(k).iter().map(|m| ws.monomial_to_point(m)).collect()
}

/// Isomorphism `M(weights[from]) -> M(weights[to])` given by the row's columns.
pub fn derive_iso<T: Exact>(row: &RowRecord, from: usize, to: usize) -> Result<LatticeIso<T>> {
    let src = column_points::<T>(row, from)?;
    let dst = column_points::<T>(row, to)?;
    let u = derive_from_points(&src, &dst)?;
    Ok(LatticeIso { u, source: row.weights[from].clone(), target: row.weights[to].clone() })
}

/// Linear map between the real logarithm spaces `Hom(M, R)` induced by an
/// isomorphism of character lattices: the inverse transpose of `u`.
pub fn amoeba_map<T: Exact>(iso: &LatticeIso<T>) -> Matrix<T> {
    inverse_unimodular(iso.matrix()).expect("unimodular by construction").transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::dataset::Dataset;
    use crate::scalar::{dot3, int};
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn row(ids: &[u32]) -> RowRecord {
        Dataset::embedded().rows().iter().find(|r| r.ids == ids && r.table == 1).unwrap().clone()
    }

    #[test]
    fn row_16_54_matches_all_five_columns() {
        let r = row(&[16, 54]);
        let iso = derive_iso::<BigInt>(&r, 0, 1).unwrap();
        let src = column_points::<BigInt>(&r, 0).unwrap();
        let dst = column_points::<BigInt>(&r, 1).unwrap();
        for (s, t) in src.iter().zip(&dst) {
            assert_eq!(&iso.apply(s), t);
        }
        assert!(is_unimodular(iso.matrix()));
    }

    #[test]
    fn row_14_28_exponents() {
        let r = row(&[14, 28, 45, 51]);
        let iso = derive_iso::<BigInt>(&r, 0, 1).unwrap();
        // W^42 <-> W^21 at the exponent level: (41,-1,-1,-1) -> (20,-1,-1,-1)
        let img = iso.map_exponent(&[int(41), int(-1), int(-1), int(-1)]).unwrap();
        assert_eq!(img, vec![int(20), int(-1), int(-1), int(-1)]);
        // Z^2 <-> WZ^2
        let img = iso.map_exponent(&[int(-1), int(-1), int(-1), int(1)]).unwrap();
        assert_eq!(img, vec![int(0), int(-1), int(-1), int(1)]);
    }

    #[test]
    fn identical_families_give_identity() {
        let mut r = row(&[14, 28, 45, 51]);
        for c in r.columns.iter_mut() {
            c[1] = c[0];
        }
        r.weights[1] = r.weights[0].clone();
        let iso = derive_iso::<BigInt>(&r, 0, 1).unwrap();
        assert!(iso.matrix().is_identity());
        assert!(amoeba_map(&iso).is_identity());
    }

    #[test]
    fn error_kinds() {
        let p = |v: [i64; 3]| v.map(int::<BigInt>);
        let flat = [p([1, 0, 0]), p([0, 1, 0]), p([1, 1, 0])];
        assert_eq!(derive_from_points(&flat, &flat).unwrap_err(), Error::RankDeficientColumns);

        let src = [p([1, 0, 0]), p([0, 1, 0]), p([0, 0, 1]), p([1, 1, 1])];
        let bad = [p([1, 0, 0]), p([0, 1, 0]), p([0, 0, 1]), p([1, 1, 2])];
        assert_eq!(derive_from_points(&src, &bad).unwrap_err(), Error::InconsistentColumns(3));

        let doubled = [p([2, 0, 0]), p([0, 1, 0]), p([0, 0, 1]), p([2, 1, 1])];
        assert!(matches!(derive_from_points(&src, &doubled), Err(Error::NotUnimodular(_))));
        let halved = [p([1, 0, 0]), p([0, 2, 0]), p([0, 0, 1])];
        let h = [p([1, 0, 0]), p([0, 1, 0]), p([0, 0, 1])];
        assert!(matches!(derive_from_points(&halved, &h), Err(Error::NotUnimodular(_))));
    }

    #[test]
    fn amoeba_inverse_pair() {
        let r = row(&[14, 28, 45, 51]);
        let fwd = derive_iso::<BigInt>(&r, 0, 1).unwrap();
        let back = derive_iso::<BigInt>(&r, 1, 0).unwrap();
        assert!(amoeba_map(&fwd).mul(&amoeba_map(&back)).is_identity());
        assert!(det(&amoeba_map(&fwd)).abs() == int(1));
        assert_eq!(back, fwd.inverse());
        assert!(fwd.then(&back).matrix().is_identity());
    }

    #[test]
    fn amoeba_map_preserves_pairing() {
        // <u m, A l> = <m, l> for characters m and log points l
        let r = row(&[16, 54]);
        let iso = derive_iso::<BigInt>(&r, 0, 1).unwrap();
        let a = amoeba_map(&iso);
        for (m, l) in [([1, 0, 0], [0, 0, 1]), ([2, -1, 3], [5, 7, -2]), ([0, 4, 1], [1, 1, 1])] {
            let m = m.map(int::<BigInt>);
            let l = l.map(int::<BigInt>);
            let al = a.apply(&l);
            let um = iso.apply(&m);
            assert_eq!(dot3(&um, &[al[0].clone(), al[1].clone(), al[2].clone()]), dot3(&m, &l));
        }
    }
}
