//! Partitions and overpartitions as data: construction, canonical text
//! format, exhaustive enumeration, Durfee-square machinery, and the
//! classical rank statistics.

mod durfee;
mod enumerate;
mod stats;

pub use durfee::{durfee_sizes, generalized_durfee, parts_below_durfee};
pub use enumerate::{enumerate_overpartitions, enumerate_partitions};
pub use stats::{crank, d_rank, dyson_rank, k_rank};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordinary partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Validation("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Validation(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from arbitrary order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part at 1-based row index, 0 beyond the last row.
    pub fn row(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// The conjugate partition (column counts of the Ferrers graph).
    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut conj = Vec::with_capacity(cols);
        for j in 1..=cols {
            let count = self.parts.iter().take_while(|&&p| p as usize >= j).count();
            conj.push(count as u32);
        }
        Partition { parts: conj }
    }

    /// The rows strictly below row `rows` (0-based suffix), as a partition.
    pub fn rows_below(&self, rows: usize) -> Partition {
        Partition {
            parts: self.parts.iter().skip(rows).copied().collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

/// One part of an overpartition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct OverPart {
    pub value: u32,
    pub overlined: bool,
}

/// An overpartition: weakly decreasing positive parts where the first
/// occurrence of each distinct value may be overlined.
///
/// Canonical order lists the overlined copy before non-overlined copies of
/// equal value, giving a unique normal form for equality and hashing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    pub fn new(parts: Vec<(u32, bool)>) -> Result<Self> {
        let parts: Vec<OverPart> = parts
            .into_iter()
            .map(|(value, overlined)| OverPart { value, overlined })
            .collect();
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::Validation(
                "overpartition parts must be positive".into(),
            ));
        }
        for w in parts.windows(2) {
            if w[0].value < w[1].value {
                return Err(Error::Validation(
                    "overpartition parts must be weakly decreasing".into(),
                ));
            }
            if w[0].value == w[1].value && w[1].overlined {
                return Err(Error::Validation(format!(
                    "only the first occurrence of {} may be overlined",
                    w[1].value
                )));
            }
        }
        Ok(Overpartition { parts })
    }

    pub fn empty() -> Self {
        Overpartition { parts: Vec::new() }
    }

    /// Assemble from overlined values (which must be distinct) and
    /// non-overlined values, producing the canonical order.
    pub fn assemble(overlined: &[u32], plain: &[u32]) -> Result<Self> {
        let mut over: Vec<u32> = overlined.to_vec();
        over.sort_unstable_by(|a, b| b.cmp(a));
        if over.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Validation(
                "overlined values must be distinct".into(),
            ));
        }
        let mut plain: Vec<u32> = plain.to_vec();
        plain.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = Vec::with_capacity(over.len() + plain.len());
        let mut i = 0;
        let mut j = 0;
        while i < over.len() || j < plain.len() {
            let take_over = match (over.get(i), plain.get(j)) {
                (Some(&o), Some(&p)) => o >= p,
                (Some(_), None) => true,
                _ => false,
            };
            if take_over {
                parts.push((over[i], true));
                i += 1;
            } else {
                parts.push((plain[j], false));
                j += 1;
            }
        }
        Overpartition::new(parts)
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.value as u64).sum()
    }

    /// Largest part value, 0 when empty.
    pub fn first(&self) -> u32 {
        self.parts.first().map(|p| p.value).unwrap_or(0)
    }

    /// Number of overlined parts.
    pub fn overline_count(&self) -> usize {
        self.parts.iter().filter(|p| p.overlined).count()
    }

    /// Overlined values, descending, overlines dropped.
    pub fn overlined_values(&self) -> Vec<u32> {
        self.parts
            .iter()
            .filter(|p| p.overlined)
            .map(|p| p.value)
            .collect()
    }

    /// Non-overlined values, descending.
    pub fn plain_values(&self) -> Vec<u32> {
        self.parts
            .iter()
            .filter(|p| !p.overlined)
            .map(|p| p.value)
            .collect()
    }

    /// True if no part is overlined (the overpartition is a partition).
    pub fn is_plain(&self) -> bool {
        self.parts.iter().all(|p| !p.overlined)
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    /// Parse the wire format: comma-separated values, descending, with a
    /// trailing `o` marking an overline (`"13,10,9,7o,6"`). The empty
    /// string is the empty overpartition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Overpartition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let (num, overlined) = match tok.strip_suffix(['o', 'O']) {
                Some(rest) => (rest, true),
                None => (tok, false),
            };
            let value: u32 = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad overpartition part {tok:?}")))?;
            parts.push((value, overlined));
        }
        Overpartition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p.value)?;
            if p.overlined {
                write!(f, "o")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Overpartition({})", self)
    }
}
