//! Enumeration counts against the classical generating functions.

use okrank_core::partitions::{enumerate_overpartitions, enumerate_partitions};
use okrank_core::qobjects::{euler_product, neg_euler_product};
use okrank_core::Int;

#[test]
fn partition_counts_match_euler_inverse() {
    let pgf = euler_product::<Int>(30).unwrap().invert().unwrap();
    for n in 0..=30u32 {
        assert_eq!(
            pgf.coeff_at(n as i64).unwrap(),
            Int::from(enumerate_partitions(n).len()),
            "p({n})"
        );
    }
}

#[test]
fn overpartition_counts_match_quotient() {
    let gf = neg_euler_product::<Int>(30)
        .unwrap()
        .mul(&euler_product::<Int>(30).unwrap().invert().unwrap());
    for n in 0..=30u32 {
        assert_eq!(
            gf.coeff_at(n as i64).unwrap(),
            Int::from(enumerate_overpartitions(n).len()),
            "pbar({n})"
        );
    }
}

#[test]
fn overpartition_counts_match_literature() {
    // 1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232: the standard
    // overpartition numbers
    let expected = [1usize, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232];
    for (n, &count) in expected.iter().enumerate() {
        assert_eq!(
            enumerate_overpartitions(n as u32).len(),
            count,
            "pbar({n})"
        );
    }
}

#[test]
fn partition_counts_match_literature() {
    // 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
    let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for (n, &count) in expected.iter().enumerate() {
        assert_eq!(enumerate_partitions(n as u32).len(), count, "p({n})");
    }
}
