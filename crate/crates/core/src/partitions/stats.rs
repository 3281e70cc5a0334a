use super::{durfee_sizes, Overpartition, Partition};
use crate::error::{Error, Result};

fn require_nonempty(len: usize, what: &str) -> Result<()> {
    if len == 0 {
        Err(Error::Domain(format!("{what} of the empty object is undefined")))
    } else {
        Ok(())
    }
}

/// Dyson's rank: largest part minus number of parts.
pub fn dyson_rank(p: &Partition) -> Result<i64> {
    require_nonempty(p.len(), "rank")?;
    Ok(p.first() as i64 - p.len() as i64)
}

/// The Andrews-Garvan crank: the largest part if there are no ones,
/// otherwise the number of parts larger than the number of ones minus the
/// number of ones.
pub fn crank(p: &Partition) -> Result<i64> {
    require_nonempty(p.len(), "crank")?;
    let ones = p.parts().iter().filter(|&&v| v == 1).count() as u32;
    if ones == 0 {
        return Ok(p.first() as i64);
    }
    let larger = p.parts().iter().filter(|&&v| v > ones).count() as i64;
    Ok(larger - ones as i64)
}

/// D-rank of an overpartition: largest part minus number of parts.
pub fn d_rank(o: &Overpartition) -> Result<i64> {
    require_nonempty(o.len(), "D-rank")?;
    Ok(o.first() as i64 - o.len() as i64)
}

/// Garvan's k-rank: the number of columns to the right of the first
/// Durfee square whose length is at most `n_{k-1}`, minus the number of
/// parts below the `(k-1)`-th successive Durfee square.
pub fn k_rank(p: &Partition, k: u32) -> Result<i64> {
    if k < 2 {
        return Err(Error::Usage(format!("k-rank requires k >= 2, got {k}")));
    }
    require_nonempty(p.len(), "k-rank")?;
    let sizes = durfee_sizes(p, (k - 1) as usize);
    let n1 = sizes[0];
    let n_last = sizes[(k - 2) as usize];
    let conj = p.conjugate();
    let columns = (n1 + 1..=p.first())
        .filter(|&j| conj.row(j as usize) <= n_last)
        .count() as i64;
    let consumed: usize = sizes.iter().map(|&s| s as usize).sum();
    let below = (p.len() - consumed.min(p.len())) as i64;
    Ok(columns - below)
}
