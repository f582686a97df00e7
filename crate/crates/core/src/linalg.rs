//! Exact integer and rational linear algebra.
//!
//! Matrices are small (at most 4x4 in practice) and dense. Nothing here uses
//! floating point: integer routines work over any [`Exact`] scalar and the
//! rational ones over [`Rat`].

use std::fmt;
use std::ops::{Index, IndexMut, Neg};

use num_traits::{Num, One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, rat, Exact, Rat};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Self { rows, cols, data }
    }

    /// Builds a matrix from equally long rows. An empty list gives a 0x0 matrix.
    pub fn from_rows<R: AsRef<[E]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Submatrix made of the listed rows.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows: Vec<Vec<E>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        let mut m = Self::from_rows(&rows);
        m.cols = self.cols;
        m
    }
}

impl<E: Clone + Zero + One> Matrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![E::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = E::one();
        }
        m
    }

    pub fn is_identity(&self) -> bool
    where
        E: PartialEq,
    {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(E::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect()
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[E]) -> Vec<E> {
        assert_eq!(self.rows, v.len(), "dimension mismatch in left_apply");
        (0..self.cols)
            .map(|j| (0..self.rows).fold(E::zero(), |acc, i| acc + v[i].clone() * self[(i, j)].clone()))
            .collect()
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

impl<E: fmt::Display> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

fn row_axpy<T: Exact>(m: &mut Matrix<T>, target: usize, q: &T, source: usize) {
    // row[target] -= q * row[source]
    for j in 0..m.cols {
        let v = m[(target, j)].clone() - q.clone() * m[(source, j)].clone();
        m[(target, j)] = v;
    }
}

fn row_negate<T: Exact>(m: &mut Matrix<T>, r: usize) {
    for j in 0..m.cols {
        let v = -m[(r, j)].clone();
        m[(r, j)] = v;
    }
}

/// Row Hermite normal form: returns `(h, u)` with `h = u * m`, `u` unimodular.
///
/// Pivots are positive, entries above a pivot lie in `[0, pivot)`, zero rows
/// come last. The form is unique, so it doubles as a canonical lattice basis.
pub fn hnf<T: Exact>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let mut h = m.clone();
    let mut u = Matrix::identity(m.rows);
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        loop {
            let pivot =
                (r..m.rows).filter(|&i| !h[(i, c)].is_zero()).min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..m.rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                row_axpy(&mut h, i, &q, r);
                row_axpy(&mut u, i, &q, r);
                clean &= h[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            row_negate(&mut h, r);
            row_negate(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                row_axpy(&mut h, i, &q, r);
                row_axpy(&mut u, i, &q, r);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Nonzero invariant factors of the Smith normal form, in divisibility order.
pub fn smith_invariants<T: Exact>(m: &Matrix<T>) -> Vec<T> {
    let mut cur = m.clone();
    // Alternate row and column HNF until the matrix is diagonal.
    loop {
        let (h, _) = hnf(&cur);
        let (ht, _) = hnf(&h.transpose());
        cur = ht.transpose();
        let diagonal = (0..cur.rows).all(|i| (0..cur.cols).all(|j| i == j || cur[(i, j)].is_zero()));
        if diagonal {
            break;
        }
    }
    let mut d: Vec<T> = (0..cur.rows.min(cur.cols)).map(|i| cur[(i, i)].abs()).filter(|x| !x.is_zero()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det<T: Exact>(m: &Matrix<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return T::zero();
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone()) / prev.clone();
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}

pub fn is_unimodular<T: Exact>(m: &Matrix<T>) -> bool {
    m.rows == m.cols && det(m).abs().is_one()
}

/// Canonical basis (as rows, in HNF) of the lattice `{x in Z^n : sum a_i x_i = 0}`.
///
/// Rejects weight vectors that are not well-posed, i.e. where some
/// `n - 1` of the entries share a factor.
pub fn kernel_basis<T: Exact>(weights: &[T]) -> Result<Matrix<T>> {
    let n = weights.len();
    if n < 2 || weights.iter().any(|w| !w.is_positive()) {
        return Err(Error::InvalidWeights(format!("{weights:?}")));
    }
    for skip in 0..n {
        let g = weights.iter().enumerate().filter(|&(i, _)| i != skip).fold(T::zero(), |g, (_, w)| g.gcd(w));
        if !g.is_one() {
            let mut ws = [0u64; 4];
            for (slot, w) in ws.iter_mut().zip(weights) {
                *slot = w.to_u64().unwrap_or(0);
            }
            return Err(Error::NotWellPosed(ws));
        }
    }
    Ok(integer_kernel(weights))
}

/// HNF basis of the integer kernel of a single nonzero row vector.
pub fn integer_kernel<T: Exact>(a: &[T]) -> Matrix<T> {
    let col = Matrix::from_vec(a.len(), 1, a.to_vec());
    let (h, u) = hnf(&col);
    debug_assert!(h[(0, 0)].is_positive());
    let rest: Vec<usize> = (1..a.len()).collect();
    hnf(&u.select_rows(&rest)).0
}

/// Solves `x * basis = target` over the rationals; `None` if inconsistent.
///
/// `basis` must have full row rank.
pub fn solve_left_rational<T: Exact>(target: &[Rat<T>], basis: &Matrix<T>) -> Option<Vec<Rat<T>>> {
    // Transposed system: basis^T x = target.
    let a = basis.transpose().map(|v| rat(v.clone()));
    solve_rational_system(&a, target)
}

/// Coordinates of `m` in the lattice spanned by the rows of `basis`.
pub fn to_coords<T: Exact>(m: &[T], basis: &Matrix<T>) -> Result<Vec<T>> {
    let target: Vec<Rat<T>> = m.iter().map(|v| rat(v.clone())).collect();
    let x = solve_left_rational(&target, basis).ok_or_else(|| Error::NotInLattice(fmt_vec(m)))?;
    if x.iter().all(|c| c.is_integer()) {
        Ok(x.into_iter().map(|c| c.to_integer()).collect())
    } else {
        Err(Error::NotInLattice(fmt_vec(m)))
    }
}

/// Rational coordinates of a point of the real span of `basis`.
pub fn to_coords_rational<T: Exact>(m: &[Rat<T>], basis: &Matrix<T>) -> Result<Vec<Rat<T>>> {
    solve_left_rational(m, basis).ok_or_else(|| Error::NotInLattice(fmt_vec(m)))
}

pub fn from_coords<T: Exact>(x: &[T], basis: &Matrix<T>) -> Vec<T> {
    basis.left_apply(x)
}

fn fmt_vec<E: fmt::Display>(v: &[E]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Gaussian elimination for a consistent system of full column rank.
fn solve_rational_system<F>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>>
where
    F: Num + Clone + Neg<Output = F>,
{
    let (rows, cols) = (a.rows(), a.cols());
    let mut aug = Matrix::zeros(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, cols)] = b[i].clone();
    }
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows).find(|&i| !aug[(i, c)].is_zero())?;
        aug.swap_rows(r, p);
        let pv = aug[(r, c)].clone();
        for j in 0..=cols {
            let v = aug[(r, j)].clone() / pv.clone();
            aug[(r, j)] = v;
        }
        for i in 0..rows {
            if i != r && !aug[(i, c)].is_zero() {
                let f = aug[(i, c)].clone();
                for j in 0..=cols {
                    let v = aug[(i, j)].clone() - f.clone() * aug[(r, j)].clone();
                    aug[(i, j)] = v;
                }
            }
        }
        r += 1;
    }
    // Remaining rows must be 0 = 0.
    if (r..rows).any(|i| !aug[(i, cols)].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| aug[(i, cols)].clone()).collect())
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn inverse_rational<T: Exact>(m: &Matrix<Rat<T>>) -> Option<Matrix<Rat<T>>> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "inverse of a non-square matrix");
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Rat<T>> = (0..n).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect();
        cols.push(solve_rational_system(m, &e)?);
    }
    Some(Matrix::from_rows(&cols).transpose())
}

/// Converts a rational matrix to an integer one if every entry is integral.
pub fn integral<T: Exact>(m: &Matrix<Rat<T>>) -> Option<Matrix<T>> {
    if m.data.iter().all(|c| c.is_integer()) {
        Some(m.map(|c| c.to_integer()))
    } else {
        None
    }
}

pub fn to_rational<T: Exact>(m: &Matrix<T>) -> Matrix<Rat<T>> {
    m.map(|v| rat(v.clone()))
}

/// Inverse of a unimodular integer matrix.
pub fn inverse_unimodular<T: Exact>(m: &Matrix<T>) -> Option<Matrix<T>> {
    if !is_unimodular(m) {
        return None;
    }
    integral(&inverse_rational(&to_rational(m))?)
}

/// Integer matrix from small literals.
pub fn int_matrix<T: Exact>(rows: &[&[i64]]) -> Matrix<T> {
    let rows: Vec<Vec<T>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    Matrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;
    use proptest::prelude::*;

    type M = Matrix<BigInt>;

    fn is_row_hnf(h: &M) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            match h.row(i).iter().position(|v| !v.is_zero()) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last_pivot.is_some_and(|p| c <= p) || !h[(i, c)].is_positive() {
                        return false;
                    }
                    for k in 0..i {
                        if h[(k, c)].is_negative() || h[(k, c)] >= h[(i, c)] {
                            return false;
                        }
                    }
                    last_pivot = Some(c);
                }
            }
        }
        true
    }

    #[test]
    fn hnf_identity() {
        let id: M = Matrix::identity(3);
        let (h, u) = hnf(&id);
        assert!(h.is_identity() && u.is_identity());
    }

    #[test]
    fn hnf_already_reduced() {
        let m: M = int_matrix(&[&[2, 0], &[0, 3]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, m);
        assert!(u.is_identity());
    }

    #[test]
    fn hnf_single_row() {
        let m: M = int_matrix(&[&[1, 3, 8, 12]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, m);
        assert_eq!(u, int_matrix(&[&[1]]));
    }

    #[test]
    fn hnf_zero_matrix() {
        let m: M = Matrix::zeros(2, 3);
        let (h, u) = hnf(&m);
        assert_eq!(h, m);
        assert!(is_unimodular(&u));
    }

    #[test]
    fn unimodular_predicate() {
        assert!(is_unimodular(&M::identity(3)));
        assert!(!is_unimodular(&int_matrix::<BigInt>(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]])));
        assert!(is_unimodular(&int_matrix::<BigInt>(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])));
        assert!(is_unimodular(&int_matrix::<BigInt>(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])));
    }

    #[test]
    fn determinant_small() {
        let m: M = int_matrix(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(det(&m), BigInt::from(4));
        let s: M = int_matrix(&[&[0, 1, 2], &[0, 3, 4], &[1, 5, 6]]);
        assert_eq!(det(&s), BigInt::from(-2));
    }

    #[test]
    fn kernel_of_all_ones() {
        let k = kernel_basis::<BigInt>(&[int(1), int(1), int(1), int(1)]).unwrap();
        assert_eq!(k, int_matrix(&[&[1, 0, 0, -1], &[0, 1, 0, -1], &[0, 0, 1, -1]]));
    }

    #[test]
    fn kernel_rejects_ill_posed() {
        let err = kernel_basis::<i64>(&[2, 4, 6, 7]).unwrap_err();
        assert_eq!(err, Error::NotWellPosed([2, 4, 6, 7]));
        assert!(kernel_basis::<i64>(&[0, 1, 1, 1]).is_err());
    }

    #[test]
    fn coords_not_in_lattice() {
        let k = kernel_basis::<i64>(&[1, 6, 14, 21]).unwrap();
        assert!(matches!(to_coords(&[1, 0, 0, 0], &k), Err(Error::NotInLattice(_))));
        let b = int_matrix::<i64>(&[&[2, 0], &[0, 1]]);
        assert!(to_coords(&[1, 0], &b).is_err());
        assert_eq!(to_coords(&[4, 3], &b).unwrap(), vec![2, 3]);
    }

    #[test]
    fn coords_of_basis_rows_and_origin() {
        let k = kernel_basis::<BigInt>(&[int(1), int(6), int(14), int(21)]).unwrap();
        assert_eq!(to_coords(k.row(0), &k).unwrap(), vec![int(1), int(0), int(0)]);
        assert_eq!(to_coords(&[int(0), int(0), int(0), int(0)], &k).unwrap(), vec![int(0); 3]);
    }

    #[test]
    fn smith_small() {
        let m: M = int_matrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(smith_invariants(&m), vec![int(2), int(6), int(12)]);
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let m: M = int_matrix(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = inverse_rational(&to_rational(&m)).unwrap();
        assert!(to_rational(&m).mul(&inv).is_identity());
        let sing: M = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert!(inverse_rational(&to_rational(&sing)).is_none());
    }

    proptest! {
        #[test]
        fn hnf_factorisation(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-30i64..30, 16)) {
            let m: M = Matrix::from_vec(rows, cols, seed[..rows * cols].iter().map(|&x| int(x)).collect());
            let (h, u) = hnf(&m);
            prop_assert_eq!(u.mul(&m), h.clone());
            prop_assert!(is_unimodular(&u));
            prop_assert!(is_row_hnf(&h));
        }

        #[test]
        fn det_multiplicative(a in prop::collection::vec(-9i64..9, 9), b in prop::collection::vec(-9i64..9, 9)) {
            let ma: M = Matrix::from_vec(3, 3, a.iter().map(|&x| int(x)).collect());
            let mb: M = Matrix::from_vec(3, 3, b.iter().map(|&x| int(x)).collect());
            prop_assert_eq!(det(&ma.mul(&mb)), det(&ma) * det(&mb));
        }
    }
}
