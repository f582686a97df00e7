//! The exact scalar abstraction shared by every lattice computation.
//!
//! Everything in this crate is generic over an exact signed integer type.
//! [`num_bigint::BigInt`] is the default (see the aliases at the crate root);
//! `i64` and `i128` work too and are handy for quick experiments, at the cost
//! of silent overflow on large inputs.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer usable as lattice coordinates.
pub trait Exact:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + FromStr + Send + Sync + 'static
{
}

impl<T> Exact for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Rational numbers over `T`, always kept in lowest terms with a positive denominator.
pub type Rat<T> = Ratio<T>;

/// Integer point of a rank-3 lattice.
pub type Point3<T> = [T; 3];

/// Rational point of a 3-dimensional real space.
pub type RatPoint3<T> = [Rat<T>; 3];

#[inline]
pub fn int<T: Exact>(x: i64) -> T {
    T::from_i64(x).expect("every exact scalar holds an i64")
}

#[inline]
pub fn rat<T: Exact>(x: T) -> Rat<T> {
    Ratio::from_integer(x)
}

pub fn to_rat3<T: Exact>(p: &Point3<T>) -> RatPoint3<T> {
    [rat(p[0].clone()), rat(p[1].clone()), rat(p[2].clone())]
}

/// Returns the integer point if all three coordinates are integral.
pub fn to_int3<T: Exact>(p: &RatPoint3<T>) -> Option<Point3<T>> {
    if p.iter().all(|c| c.is_integer()) {
        Some([p[0].to_integer(), p[1].to_integer(), p[2].to_integer()])
    } else {
        None
    }
}

pub fn dot3<T: Exact>(a: &Point3<T>, b: &Point3<T>) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

/// Pairing of an integer covector with a rational point.
pub fn pair3<T: Exact>(n: &Point3<T>, x: &RatPoint3<T>) -> Rat<T> {
    x[0].clone() * n[0].clone() + x[1].clone() * n[1].clone() + x[2].clone() * n[2].clone()
}

pub fn sub3<T: Exact>(a: &Point3<T>, b: &Point3<T>) -> Point3<T> {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()]
}

pub fn rsub3<T: Exact>(a: &RatPoint3<T>, b: &RatPoint3<T>) -> RatPoint3<T> {
    [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone(), a[2].clone() - b[2].clone()]
}

pub fn rcross3<T: Exact>(u: &RatPoint3<T>, v: &RatPoint3<T>) -> RatPoint3<T> {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

pub fn rdot3<T: Exact>(u: &RatPoint3<T>, v: &RatPoint3<T>) -> Rat<T> {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

/// Gcd of all entries (0 for the zero vector).
pub fn content<T: Exact>(xs: &[T]) -> T {
    xs.iter().fold(T::zero(), |g, x| g.gcd(x))
}

/// Scales a nonzero rational vector to the primitive integer vector pointing the same way.
pub fn primitive3<T: Exact>(v: &RatPoint3<T>) -> Point3<T> {
    let l = v.iter().fold(T::one(), |l, c| l.lcm(c.denom()));
    let mut n: Point3<T> = [
        (v[0].clone() * rat(l.clone())).to_integer(),
        (v[1].clone() * rat(l.clone())).to_integer(),
        (v[2].clone() * rat(l)).to_integer(),
    ];
    let g = content(&n);
    debug_assert!(!g.is_zero());
    for c in n.iter_mut() {
        *c = c.clone() / g.clone();
    }
    n
}

/// Number of lattice points strictly inside the segment `[a, b]`.
pub fn segment_interior_points<T: Exact>(a: &Point3<T>, b: &Point3<T>) -> T {
    let g = content(&sub3(a, b));
    if g.is_zero() {
        T::zero()
    } else {
        g - T::one()
    }
}
