use super::{OverPart, Overpartition, Partition};

/// All partitions of `n`, lexicographically descending; `n = 0` yields
/// exactly the empty partition.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(prefix.clone()).expect("prefix is sorted"));
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// All overpartitions of `n`: every partition of `n` with every subset of
/// its distinct values overlined (on the first occurrence).
pub fn enumerate_overpartitions(n: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for p in enumerate_partitions(n) {
        let mut distinct: Vec<u32> = p.parts().to_vec();
        distinct.dedup();
        let d = distinct.len();
        for mask in 0u64..(1u64 << d) {
            let mut parts: Vec<OverPart> = Vec::with_capacity(p.len());
            let mut seen = vec![false; d];
            let mut di = 0;
            for &v in p.parts() {
                if di < d && distinct[di] != v {
                    di += 1;
                }
                let overlined = mask & (1 << di) != 0 && !seen[di];
                if overlined {
                    seen[di] = true;
                }
                parts.push(OverPart { value: v, overlined });
            }
            out.push(Overpartition { parts });
        }
    }
    out
}
