//! Brute-force enumeration route for the rank tables.

use crate::bijection::{kbar_rank_of_vector, over_to_vector};
use crate::error::{Error, Result};
use crate::partitions::{
    crank, d_rank, durfee_sizes, dyson_rank, enumerate_overpartitions, enumerate_partitions,
    k_rank,
};

use super::table::{Method, RankTable, Stat};

pub(crate) fn enum_table(stat: Stat, k: Option<u32>, max_n: u32) -> Result<RankTable> {
    let mut table = RankTable::new(stat, Method::Enum, k, max_n);
    match stat {
        Stat::N => {
            for n in 1..=max_n {
                for p in enumerate_partitions(n) {
                    table.bump(n, dyson_rank(&p)?, 0);
                }
            }
        }
        Stat::M => {
            for n in 1..=max_n {
                for p in enumerate_partitions(n) {
                    table.bump(n, crank(&p)?, 0);
                }
            }
        }
        Stat::Nk => {
            let k = k.expect("k validated by rank_table");
            for n in 1..=max_n {
                for p in enumerate_partitions(n) {
                    // Theorem scope: at least k-1 successive Durfee squares.
                    let sizes = durfee_sizes(&p, (k - 1) as usize);
                    if sizes[(k - 2) as usize] >= 1 {
                        table.bump(n, k_rank(&p, k)?, 0);
                    }
                }
            }
        }
        Stat::Nbar => {
            for n in 1..=max_n {
                for o in enumerate_overpartitions(n) {
                    table.bump(n, d_rank(&o)?, 0);
                }
            }
        }
        Stat::NbarK => {
            let k = k.expect("k validated by rank_table");
            for n in 1..=max_n {
                for o in enumerate_overpartitions(n) {
                    let v = over_to_vector(&o);
                    // at least k-2 successive Durfee squares in beta
                    // (vacuously true at k = 2)
                    if k > 2 {
                        let sizes = durfee_sizes(v.beta(), (k - 2) as usize);
                        if sizes[(k - 3) as usize] < 1 {
                            continue;
                        }
                    }
                    let j = o.overline_count() as u32;
                    table.bump(n, kbar_rank_of_vector(&v, k), j);
                }
            }
        }
    }
    validate_support(&table)?;
    Ok(table)
}

/// Finished-table invariant: nonzero entries satisfy `|m| <= n` and
/// `0 <= j <= n`.
pub(crate) fn validate_support(table: &RankTable) -> Result<()> {
    for (&(n, m, j), &c) in table.entries() {
        if c != 0 && (m.abs() > n as i64 || j > n) {
            return Err(Error::Verification(format!(
                "table {}/{} entry ({n}, {m}, {j}) outside support bound",
                table.stat, table.method
            )));
        }
    }
    Ok(())
}
