//! Plain-text point lists: one point per line, three whitespace-separated
//! coordinates, `#` starts a comment. Coordinates are integers; `p/q`
//! rationals are accepted too so that duals of non-reflexive polytopes
//! round-trip.

use std::fmt::Write;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::{rat, Exact, Point3, RatPoint3};

fn parse_coord<T: Exact>(tok: &str, line: usize) -> Result<crate::scalar::Rat<T>> {
    let bad = || Error::Format { line, reason: format!("bad coordinate {tok:?}") };
    match tok.split_once('/') {
        None => tok.parse::<T>().map(rat).map_err(|_| bad()),
        Some((p, q)) => {
            let p = p.parse::<T>().map_err(|_| bad())?;
            let q = q.parse::<T>().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Ratio::new(p, q))
        }
    }
}

pub fn parse_points<T: Exact>(text: &str) -> Result<Vec<RatPoint3<T>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::Format { line: i + 1, reason: format!("expected 3 coordinates, found {}", toks.len()) });
        }
        out.push([parse_coord(toks[0], i + 1)?, parse_coord(toks[1], i + 1)?, parse_coord(toks[2], i + 1)?]);
    }
    Ok(out)
}

pub fn format_points<T: Exact>(points: &[RatPoint3<T>]) -> String {
    let mut s = String::new();
    for p in points {
        let _ = writeln!(s, "{} {} {}", p[0], p[1], p[2]);
    }
    s
}

pub fn format_lattice_points<T: Exact>(points: &[Point3<T>]) -> String {
    let mut s = String::new();
    for p in points {
        let _ = writeln!(s, "{} {} {}", p[0], p[1], p[2]);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parses_comments_and_rationals() {
        let text = "# cube corner\n1 1 1\n\n -1 2/4 3 # trailing\n";
        let pts = parse_points::<BigInt>(text).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[1][1], Ratio::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(format_points(&pts), "1 1 1\n-1 1/2 3\n");
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(parse_points::<i64>("1 2\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_points::<i64>("0 0 0\n1 x 2\n"), Err(Error::Format { line: 2, .. })));
        assert!(parse_points::<i64>("1/0 0 0").is_err());
    }
}
