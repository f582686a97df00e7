//! Row-set records and the shipped table of correspondences.

use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::weights::{Monomial, WeightSystem};

const EMBEDDED: &str = include_str!("../../data/rows.toml");

/// One row-set: several families whose monomials correspond column by column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowRecord {
    /// 1 for plain correspondences, 2 for records carrying exchangeable groups.
    pub table: u8,
    pub ids: Vec<u32>,
    pub weights: Vec<WeightSystem>,
    /// Degrees as printed; audited against the weights, not trusted.
    pub degrees: Vec<u64>,
    /// `columns[j][k]` is the monomial of family `k` in column `j`.
    pub columns: Vec<Vec<Monomial>>,
    pub lattice: String,
    pub rank: i64,
    /// Groups of column indices whose monomials may be permuted.
    pub bold: Vec<Vec<usize>>,
}

impl RowRecord {
    /// `13/72` style name.
    pub fn name(&self) -> String {
        let ids: Vec<String> = self.ids.iter().map(u32::to_string).collect();
        ids.join("/")
    }

    pub fn family_count(&self) -> usize {
        self.weights.len()
    }

    /// Monomials of family `k`, in column order.
    pub fn monomials_of(&self, k: usize) -> Vec<Monomial> {
        self.columns.iter().map(|c| c[k]).collect()
    }

    pub fn position(&self, id: u32) -> Option<usize> {
        self.ids.iter().position(|&i| i == id)
    }
}

impl fmt::Display for RowRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "No. {} ({}, rank {})", self.name(), self.lattice, self.rank)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    row: Vec<RawRow>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRow {
    table: u8,
    ids: Vec<u32>,
    weights: Vec<String>,
    degree: Vec<u64>,
    lattice: String,
    rank: i64,
    columns: Vec<Vec<String>>,
    #[serde(default)]
    bold: Vec<Vec<usize>>,
}

impl RawRow {
    fn into_record(self, index: usize) -> Result<RowRecord> {
        let at = |msg: String| Error::Dataset(format!("row {}: {msg}", index + 1));
        let n = self.ids.len();
        if n < 2 {
            return Err(at("a row-set needs at least two families".into()));
        }
        if self.weights.len() != n || self.degree.len() != n {
            return Err(at(format!("{n} ids but {} weights and {} degrees", self.weights.len(), self.degree.len())));
        }
        if !matches!(self.table, 1 | 2) {
            return Err(at(format!("unknown table {}", self.table)));
        }
        let weights = self
            .weights
            .iter()
            .map(|w| WeightSystem::parse(w).map_err(|e| at(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let mut columns = Vec::with_capacity(self.columns.len());
        for (j, col) in self.columns.iter().enumerate() {
            if col.len() != n {
                return Err(at(format!("column {j} has {} monomials, expected {n}", col.len())));
            }
            let ms =
                col.iter().map(|m| Monomial::parse(m).map_err(|e| at(e.to_string()))).collect::<Result<Vec<_>>>()?;
            columns.push(ms);
        }
        for group in &self.bold {
            if group.iter().any(|&j| j >= columns.len()) {
                return Err(at(format!("bold group {group:?} refers to a missing column")));
            }
        }
        Ok(RowRecord {
            table: self.table,
            ids: self.ids,
            weights,
            degrees: self.degree,
            columns,
            lattice: self.lattice,
            rank: self.rank,
            bold: self.bold,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Dataset {
    rows: Vec<RowRecord>,
}

impl Dataset {
    /// The table compiled into the library.
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED).expect("embedded dataset is well-formed")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawFile = toml::from_str(text).map_err(|e| Error::Dataset(e.to_string()))?;
        let rows = raw.row.into_iter().enumerate().map(|(i, r)| r.into_record(i)).collect::<Result<Vec<_>>>()?;
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[RowRecord] {
        &self.rows
    }

    pub fn table(&self, table: u8) -> impl Iterator<Item = &RowRecord> {
        self.rows.iter().filter(move |r| r.table == table)
    }

    /// Rows mentioning the given family number.
    pub fn select(&self, id: u32) -> Vec<&RowRecord> {
        self.rows.iter().filter(|r| r.ids.contains(&id)).collect()
    }

    /// Sorted distinct family numbers.
    pub fn ids(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self.rows.iter().flat_map(|r| r.ids.iter().copied()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}
