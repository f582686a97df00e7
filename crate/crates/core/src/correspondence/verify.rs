//! Row verification: every check that a row-set really is a monomial
//! correspondence through a common reflexive polytope with the printed
//! Picard rank.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::picard::picard_rank;
use crate::polytope::Polytope3;
use crate::scalar::Exact;

use super::dataset::RowRecord;
use super::iso::{column_points, derive_iso, LatticeIso};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    /// Stable key, e.g. `degree[1]` or `iso[0->2]`.
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportKind {
    Row,
    Swaps,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub row: String,
    pub kind: ReportKind,
    pub expected_rank: i64,
    pub checks: Vec<Check>,
    /// Picard rank of the common polytope, when it could be computed.
    pub delta_rank: Option<i64>,
    /// L0 rank of the common polytope.
    pub delta_l0: Option<i64>,
    /// Picard rank of each family's full Newton polytope.
    pub newton_ranks: Vec<Option<i64>>,
    /// Lattice points of the common polytope.
    pub delta_points: Option<usize>,
}

impl VerificationReport {
    fn new(row: &RowRecord, kind: ReportKind) -> Self {
        Self {
            row: row.name(),
            kind,
            expected_rank: row.rank,
            checks: Vec::new(),
            delta_rank: None,
            delta_l0: None,
            newton_ranks: vec![None; row.family_count()],
            delta_points: None,
        }
    }

    fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn label(&self) -> &'static str {
        match self.kind {
            ReportKind::Row => "row",
            ReportKind::Swaps => "swaps",
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = write!(s, "{status} {} {}", self.label(), self.row);
        if let Some(r) = self.delta_rank {
            let _ = write!(s, "  rho(delta)={r}");
        }
        if let Some(l0) = self.delta_l0 {
            let _ = write!(s, " l0={l0}");
        }
        if self.newton_ranks.iter().any(Option::is_some) {
            let ranks: Vec<String> =
                self.newton_ranks.iter().map(|r| r.map_or("-".into(), |r| r.to_string())).collect();
            let _ = write!(s, " rho(newton)=[{}] expected={}", ranks.join(","), self.expected_rank);
        }
        s.push('\n');
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "  {mark} {:<18} {}", c.name, c.detail);
        }
        s
    }

    /// `key=value` lines, one per check plus a summary line.
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        let prefix = format!("{}.{}", self.label(), self.row);
        for c in &self.checks {
            let _ = writeln!(s, "{prefix}.{}={}", c.name, if c.passed { "pass" } else { "fail" });
        }
        if let Some(r) = self.delta_rank {
            let _ = writeln!(s, "{prefix}.rho_delta={r}");
        }
        if let Some(l0) = self.delta_l0 {
            let _ = writeln!(s, "{prefix}.l0_delta={l0}");
        }
        for (k, r) in self.newton_ranks.iter().enumerate() {
            if let Some(r) = r {
                let _ = writeln!(s, "{prefix}.rho_newton[{k}]={r}");
            }
        }
        let _ = writeln!(s, "{prefix}.result={}", if self.passed() { "pass" } else { "fail" });
        s
    }
}

/// Hull of the first family's column points; must be reflexive and map into
/// every family's full Newton polytope.
pub fn common_delta<T: Exact>(row: &RowRecord) -> Result<Polytope3<T>> {
    let isos: Vec<LatticeIso<T>> = (1..row.family_count()).map(|k| derive_iso(row, 0, k)).collect::<Result<_>>()?;
    let delta = Polytope3::from_lattice_points(&column_points::<T>(row, 0)?)?;
    if !delta.is_reflexive()? {
        return Err(Error::NotReflexive);
    }
    for k in 0..row.family_count() {
        let image = if k == 0 { delta.clone() } else { delta.transform(isos[k - 1].matrix())? };
        if !row.weights[k].newton_polytope::<T>()?.contains(&image) {
            return Err(Error::NotContained(format!("N({})", row.weights[k])));
        }
    }
    Ok(delta)
}

/// Runs all checks of one row-set. Never fails: problems become failed checks.
pub fn verify_row<T: Exact>(row: &RowRecord) -> VerificationReport {
    let mut rep = VerificationReport::new(row, ReportKind::Row);
    let n = row.family_count();

    // printed degrees and monomial degrees
    let mut degrees_ok = true;
    for k in 0..n {
        let ws = &row.weights[k];
        let mut bad = Vec::new();
        if row.degrees[k] != ws.degree() {
            bad.push(format!("printed degree {} but weights sum to {}", row.degrees[k], ws.degree()));
        }
        for (j, m) in row.monomials_of(k).iter().enumerate() {
            let d = ws.degree_of(m);
            if d != ws.degree() {
                bad.push(format!("column {j}: {m} has degree {d}, expected {}", ws.degree()));
            }
        }
        let ok = bad.is_empty();
        degrees_ok &= ok;
        let detail = if ok {
            format!("{} columns of degree {} in {}", row.columns.len(), ws.degree(), ws)
        } else {
            bad.join("; ")
        };
        rep.record(format!("degree[{k}]"), ok, detail);
    }
    if !degrees_ok {
        return rep;
    }

    // isomorphisms from the first family
    let mut isos: Vec<Option<LatticeIso<T>>> = vec![Some(LatticeIso::identity(&row.weights[0]))];
    for k in 1..n {
        match derive_iso::<T>(row, 0, k) {
            Ok(iso) => {
                let m = iso.matrix();
                rep.record(format!("iso[0->{k}]"), true, format!("all {} columns matched", row.columns.len()));
                rep.record(
                    format!("unimodular[0->{k}]"),
                    crate::linalg::is_unimodular(m),
                    format!("det = {}", crate::linalg::det(m)),
                );
                let back = derive_iso::<T>(row, k, 0);
                let inv_ok = back.as_ref().is_ok_and(|b| *b == iso.inverse());
                rep.record(
                    format!("inverse[{k}->0]"),
                    inv_ok,
                    if inv_ok { "reverse derivation is the inverse".to_string() } else { format!("{back:?}") },
                );
                isos.push(Some(iso));
            }
            Err(e) => {
                rep.record(format!("iso[0->{k}]"), false, e.to_string());
                isos.push(None);
            }
        }
    }
    // path independence among the other families
    for k in 1..n {
        for l in k + 1..n {
            let (Some(ik), Some(il)) = (&isos[k], &isos[l]) else { continue };
            let composed = ik.inverse().then(il);
            let ok = derive_iso::<T>(row, k, l).is_ok_and(|direct| direct == composed);
            rep.record(format!("path[{k}->{l}]"), ok, "direct map equals the composite through family 0");
        }
    }
    if isos.iter().any(Option::is_none) {
        return rep;
    }

    let delta = match column_points::<T>(row, 0).and_then(|p| Polytope3::from_lattice_points(&p)) {
        Ok(d) => d,
        Err(e) => {
            rep.record("delta", false, e.to_string());
            return rep;
        }
    };
    rep.delta_points = Some(delta.lattice_points().len());
    let reflexive = delta.is_reflexive();
    rep.record(
        "reflexive",
        matches!(reflexive, Ok(true)),
        match &reflexive {
            Ok(true) => {
                format!("{} vertices, {} lattice points", delta.vertices().len(), rep.delta_points.unwrap_or(0))
            }
            Ok(false) => "some facet is not at lattice distance one".to_string(),
            Err(e) => e.to_string(),
        },
    );

    for (k, ws) in row.weights.iter().enumerate() {
        let newton = match ws.newton_polytope::<T>() {
            Ok(p) => p,
            Err(e) => {
                rep.record(format!("contained[{k}]"), false, e.to_string());
                continue;
            }
        };
        let iso = isos[k].as_ref().expect("all isomorphisms derived");
        let contained = delta.transform(iso.matrix()).is_ok_and(|img| newton.contains(&img));
        rep.record(format!("contained[{k}]"), contained, format!("image of delta inside N({ws})"));
        match picard_rank(&newton) {
            Ok(b) => {
                rep.newton_ranks[k] = Some(b.rho);
                rep.record(
                    format!("rank_newton[{k}]"),
                    b.rho == row.rank,
                    format!("rho(N({ws})) = {}, table {}", b.rho, row.rank),
                );
            }
            Err(e) => rep.record(format!("rank_newton[{k}]"), false, e.to_string()),
        }
    }

    if matches!(reflexive, Ok(true)) {
        match picard_rank(&delta) {
            Ok(b) => {
                rep.delta_rank = Some(b.rho);
                rep.delta_l0 = Some(b.correction);
                rep.record(
                    "rank_delta",
                    b.rho == row.rank,
                    format!(
                        "rho = {} (toric {} + correction {}), table {}",
                        b.rho, b.toric_part, b.correction, row.rank
                    ),
                );
            }
            Err(e) => rep.record("rank_delta", false, e.to_string()),
        }
    }
    rep
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Exchanges the monomials of a bold group within one family and re-verifies.
///
/// For family `k >= 1` and permutation `perm` of group `g`, column `g[i]` of
/// family `k` receives the monomial previously in column `perm[i]`.
pub fn verify_swaps<T: Exact>(row: &RowRecord) -> VerificationReport {
    let mut rep = VerificationReport::new(row, ReportKind::Swaps);
    for group in &row.bold {
        for k in 1..row.family_count() {
            for perm in permutations(group) {
                if perm == *group {
                    continue;
                }
                let mut swapped = row.clone();
                for (dst, src) in group.iter().zip(&perm) {
                    swapped.columns[*dst][k] = row.columns[*src][k];
                }
                let sub = verify_row::<T>(&swapped);
                let detail = if sub.passed() {
                    format!("rho(delta) = {}", sub.delta_rank.unwrap_or(-1))
                } else {
                    let names: Vec<&str> = sub.failures().map(|c| c.name.as_str()).collect();
                    format!("failed: {}", names.join(", "))
                };
                let key = format!("swap[{k}]({:?}->{:?})", group, perm).replace(' ', "");
                rep.record(key, sub.passed(), detail);
            }
        }
    }
    rep
}

/// Report for one dataset record: the row checks, plus the exchanges when
/// the record carries exchangeable groups.
pub fn verify_record<T: Exact>(row: &RowRecord) -> VerificationReport {
    let mut rep = verify_row::<T>(row);
    if row.table == 2 {
        rep.kind = ReportKind::Swaps;
        rep.checks.extend(verify_swaps::<T>(row).checks);
    }
    rep
}
