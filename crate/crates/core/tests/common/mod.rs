#![allow(dead_code)]

use k3poly::correspondence::{common_delta, Dataset};
use k3poly::linalg::{is_unimodular, Matrix};
use k3poly::scalar::{int, Exact, Point3};
use k3poly::{BigInt, Polytope, RowRecord, WeightSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Product of a few elementary moves with small multipliers, a permutation
/// and sign flips. Entries stay small so lattice scans remain cheap.
pub fn random_unimodular<T: Exact>(rng: &mut impl Rng) -> Matrix<T> {
    let mut m: Matrix<T> = Matrix::identity(3);
    for _ in 0..3 {
        let i = rng.gen_range(0..3);
        let j = (i + rng.gen_range(1..3)) % 3;
        let c: i64 = rng.gen_range(-2..=2);
        let mut e: Vec<Vec<T>> = Matrix::<T>::identity(3).to_rows();
        e[i][j] = int(c);
        m = Matrix::from_rows(&e).mul(&m);
    }
    let mut rows = m.to_rows();
    let k = rng.gen_range(0..3);
    rows.swap(0, k);
    for r in rows.iter_mut() {
        if rng.gen_bool(0.5) {
            for x in r.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    let m = Matrix::from_rows(&rows);
    assert!(is_unimodular(&m));
    m
}

pub fn lattice(points: &[[i64; 3]]) -> Vec<Point3<BigInt>> {
    points.iter().map(|p| p.map(int)).collect()
}

pub fn dataset() -> Dataset {
    Dataset::embedded()
}

pub fn row(ids: &[u32]) -> RowRecord {
    dataset().rows().iter().find(|r| r.ids == ids).expect("row present").clone()
}

pub fn table_deltas() -> Vec<(RowRecord, Polytope)> {
    dataset().table(1).map(|r| (r.clone(), common_delta(r).expect("common delta"))).collect()
}

/// Every distinct weight system of the shipped table with its printed rank.
pub fn table_weights() -> Vec<(WeightSystem, i64)> {
    let mut out: Vec<(WeightSystem, i64)> = Vec::new();
    for r in dataset().rows() {
        for w in &r.weights {
            if !out.iter().any(|(v, _)| v == w) {
                out.push((w.clone(), r.rank));
            }
        }
    }
    out
}
