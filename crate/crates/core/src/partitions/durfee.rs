use super::{Overpartition, Partition};

/// Side of the Durfee square of `p`: the largest `s` with at least `s`
/// parts of size at least `s`.
fn durfee_side(p: &Partition) -> u32 {
    let mut s = 0u32;
    while p.row(s as usize + 1) > s {
        s += 1;
    }
    s
}

/// Sizes `[n_1, ..., n_depth]` of the successive Durfee squares.
///
/// The i-th square is the Durfee square of the partition lying under the
/// (i-1)-th one; when the squares run out the remaining sizes are zero,
/// so the sequence is weakly decreasing.
pub fn durfee_sizes(p: &Partition, depth: usize) -> Vec<u32> {
    let mut sizes = Vec::with_capacity(depth);
    let mut residual = p.clone();
    for _ in 0..depth {
        let s = durfee_side(&residual);
        sizes.push(s);
        residual = residual.rows_below(s as usize);
    }
    sizes
}

/// Number of parts strictly below the `d`-th successive Durfee square,
/// together with the residual partition formed by those parts.
///
/// `d = 0` uses the convention `n_0 = infinity`: every part counts as
/// lying below, so the count is the number of parts and the residual is
/// the whole partition.
pub fn parts_below_durfee(p: &Partition, d: usize) -> (usize, Partition) {
    if d == 0 {
        return (p.len(), p.clone());
    }
    let sizes = durfee_sizes(p, d);
    let consumed: usize = sizes.iter().map(|&s| s as usize).sum();
    let residual = p.rows_below(consumed);
    (residual.len(), residual)
}

/// Size of the generalized Durfee square of an overpartition: the largest
/// `N` such that the number of overlined parts plus the number of
/// non-overlined parts of size at least `N` is at least `N`.
pub fn generalized_durfee(o: &Overpartition) -> u32 {
    let overlined = o.overline_count() as u32;
    let plain = o.plain_values();
    let mut best = 0u32;
    for n in 0..=(o.len() as u32) {
        let big_plain = plain.iter().filter(|&&v| v >= n).count() as u32;
        if overlined + big_plain >= n {
            best = n;
        }
    }
    best
}
