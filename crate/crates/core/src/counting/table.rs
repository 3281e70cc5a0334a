use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// The counting statistic a table holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    /// Dyson rank counts N(m,n).
    N,
    /// Crank counts M(m,n).
    M,
    /// Garvan k-rank counts N_k(m,n).
    Nk,
    /// Overpartition D-rank counts.
    Nbar,
    /// k-bar rank counts refined by overline number.
    NbarK,
}

impl Stat {
    pub fn uses_k(self) -> bool {
        matches!(self, Stat::Nk | Stat::NbarK)
    }

    pub fn name(self) -> &'static str {
        match self {
            Stat::N => "n",
            Stat::M => "m",
            Stat::Nk => "nk",
            Stat::Nbar => "nbar",
            Stat::NbarK => "nbark",
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a table was computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Gf,
    Multisum,
    Enum,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Gf => "gf",
            Method::Multisum => "multisum",
            Method::Enum => "enum",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A complete table of counts for one statistic: `(n, m, j) -> count` for
/// `1 <= n <= max_n`, with `j` fixed to 0 for the unrefined statistics.
/// Only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankTable {
    pub stat: Stat,
    pub method: Method,
    /// `k` for the k-statistics, `None` otherwise.
    pub k: Option<u32>,
    pub max_n: u32,
    entries: BTreeMap<(u32, i64, u32), i64>,
}

impl RankTable {
    pub(crate) fn new(stat: Stat, method: Method, k: Option<u32>, max_n: u32) -> Self {
        RankTable {
            stat,
            method,
            k,
            max_n,
            entries: BTreeMap::new(),
        }
    }

    /// Rebuild a table from raw entries (the cache path). Zero counts are
    /// dropped, so a rebuilt table compares equal to a computed one.
    pub fn from_entries(
        stat: Stat,
        method: Method,
        k: Option<u32>,
        max_n: u32,
        entries: impl IntoIterator<Item = (u32, i64, u32, i64)>,
    ) -> Self {
        let mut table = RankTable::new(stat, method, k, max_n);
        for (n, m, j, count) in entries {
            table.set(n, m, j, count);
        }
        table
    }

    pub(crate) fn set(&mut self, n: u32, m: i64, j: u32, count: i64) {
        if count != 0 {
            self.entries.insert((n, m, j), count);
        }
    }

    pub(crate) fn bump(&mut self, n: u32, m: i64, j: u32) {
        *self.entries.entry((n, m, j)).or_insert(0) += 1;
    }

    pub fn get(&self, n: u32, m: i64, j: u32) -> i64 {
        self.entries.get(&(n, m, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(n, m, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, i64, u32), &i64)> {
        self.entries.iter()
    }

    /// Sum of counts over `m` and `j` at fixed `n`.
    pub fn row_total(&self, n: u32) -> i64 {
        self.entries
            .range((n, i64::MIN, 0)..=(n, i64::MAX, u32::MAX))
            .map(|(_, &c)| c)
            .sum()
    }

    /// First `(n, m, j)` where the two tables disagree, restricted to
    /// `from_n ..= upto_n`.
    pub fn first_difference(
        &self,
        other: &RankTable,
        from_n: u32,
        upto_n: u32,
    ) -> Option<(u32, i64, u32, i64, i64)> {
        let keys = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .filter(|&&(n, _, _)| n >= from_n && n <= upto_n);
        let mut keys: Vec<_> = keys.collect();
        keys.sort();
        keys.dedup();
        for &&(n, m, j) in &keys {
            let a = self.get(n, m, j);
            let b = other.get(n, m, j);
            if a != b {
                return Some((n, m, j, a, b));
            }
        }
        None
    }

    /// TSV export: header plus one `n m j count` line per nonzero entry.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tm\tj\tcount\n");
        for (&(n, m, j), &c) in &self.entries {
            out.push_str(&format!("{n}\t{m}\t{j}\t{c}\n"));
        }
        out
    }

    /// JSON export mirroring the table fields.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            n: u32,
            m: i64,
            j: u32,
            count: i64,
        }
        #[derive(Serialize)]
        struct Table {
            stat: Stat,
            method: Method,
            #[serde(skip_serializing_if = "Option::is_none")]
            k: Option<u32>,
            max_n: u32,
            entries: Vec<Entry>,
        }
        let entries = self
            .entries
            .iter()
            .map(|(&(n, m, j), &count)| Entry { n, m, j, count })
            .collect();
        serde_json::to_string_pretty(&Table {
            stat: self.stat,
            method: self.method,
            k: self.k,
            max_n: self.max_n,
            entries,
        })
        .expect("table serialization cannot fail")
    }
}
