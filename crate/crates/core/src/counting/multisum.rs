//! The graded multiple sums: the combinatorial side of the k-bar rank
//! generating function and its relatives.
//!
//! All of them share the shape
//! `sum over n_1 >= ... >= n_r` of
//! `q^{binom(n_1+1,2) + n_2^2 + ... + n_r^2} a^{n_1} (-1/a;q)_{n_1}
//!  / [(q;q)_{n_1-n_2} ... (q;q)_{n_{r-1}-n_r} * F(n_r)]`,
//! differing only in the lower bound of the last index and in the final
//! factor `F`. Tuples are enumerated once with shared prefix products,
//! and the `z`-heavy final factors are multiplied in per last-index value
//! rather than per tuple.

use num_traits::One;

use crate::error::Result;
use crate::qobjects::poch_finite;
use crate::series::{Int, MarkerPoly, SignedMonomial, TruncatedSeries};

pub(crate) type ZaSeries = TruncatedSeries<MarkerPoly<Int>>;

/// Final factor of the multiple sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum LastFactor {
    /// `(zq;q)_{n_r} (z^{-1}q;q)_{n_r}` in the denominator.
    ZPair,
    /// `(q;q)_{n_r}` in the denominator.
    PlainQ,
    /// `(q^2;q^2)_{n_r}` in the denominator.
    QSquared,
}

/// `a^{n} (-1/a;q)_{n} = prod_{i=0}^{n-1} (a + q^i)` with sign `(-1)^0`;
/// the polynomial carries only non-negative `a` exponents.
pub(crate) fn a_pochhammer(n: u32, trunc: i64) -> Result<ZaSeries> {
    let poch = poch_finite::<MarkerPoly<Int>>(SignedMonomial::neg_inv_a(), n, 1, trunc)?;
    Ok(poch.scaled(&MarkerPoly::monomial(0, n as i64, Int::one())))
}

/// `1/(1 - z^{dir} q^d) = sum_i z^{dir*i} q^{di}` for `d >= 1`.
pub(crate) fn z_geometric(dir: i64, d: i64, trunc: i64) -> ZaSeries {
    debug_assert!(d >= 1);
    let mut total = TruncatedSeries::zero(trunc);
    let mut i = 0i64;
    while i * d <= trunc {
        let term = TruncatedSeries::monomial(
            MarkerPoly::monomial(dir * i, 0, Int::one()),
            i * d,
            trunc,
        )
        .expect("in range");
        total = total.add(&term);
        i += 1;
    }
    total
}

/// `1/(1 - q^{bd}) = sum_i q^{bdi}` in the marker ring.
fn scalar_geometric(step: i64, trunc: i64) -> ZaSeries {
    debug_assert!(step >= 1);
    let mut total = TruncatedSeries::zero(trunc);
    let mut e = 0i64;
    while e <= trunc {
        total = total.add(
            &TruncatedSeries::monomial(MarkerPoly::one(), e, trunc).expect("in range"),
        );
        e += step;
    }
    total
}

/// The generic graded multiple sum over `indices >= 1` summation
/// variables with `n_last >= min_last` and final factor `last`.
pub(crate) fn graded_multisum(
    indices: usize,
    min_last: u32,
    last: LastFactor,
    trunc: i64,
) -> Result<ZaSeries> {
    assert!(indices >= 1);
    // n_1 is bounded by binom(n_1+1, 2) <= trunc.
    let mut n1_max = 0u32;
    while (n1_max as i64 + 1) * (n1_max as i64 + 2) / 2 <= trunc {
        n1_max += 1;
    }

    // inv (q;q)_j for the difference factors.
    let mut inv_q: Vec<ZaSeries> = Vec::with_capacity(n1_max as usize + 1);
    inv_q.push(TruncatedSeries::one(trunc)?);
    for j in 1..=n1_max {
        let prev = &inv_q[(j - 1) as usize];
        inv_q.push(prev.mul(&scalar_geometric(j as i64, trunc)).truncated(trunc));
    }

    // Per-value-of-last-index accumulation of the (a, q) part.
    let mut buckets: Vec<ZaSeries> = (0..=n1_max)
        .map(|_| TruncatedSeries::zero(trunc))
        .collect();

    struct Walk<'a> {
        indices: usize,
        min_last: u32,
        trunc: i64,
        inv_q: &'a [ZaSeries],
        buckets: &'a mut [ZaSeries],
    }
    impl Walk<'_> {
        fn descend(&mut self, level: usize, n_prev: u32, exp: i64, prod: &ZaSeries) {
            if level > self.indices {
                let shifted = prod.truncated(self.trunc - exp).shifted(exp);
                self.buckets[n_prev as usize] =
                    self.buckets[n_prev as usize].add(&shifted);
                return;
            }
            for v in self.min_last..=n_prev {
                let add = (v as i64) * (v as i64);
                if exp + add > self.trunc {
                    break;
                }
                let next = prod.mul(&self.inv_q[(n_prev - v) as usize]).truncated(self.trunc);
                self.descend(level + 1, v, exp + add, &next);
            }
        }
    }

    for n1 in min_last..=n1_max {
        let base_exp = (n1 as i64) * (n1 as i64 + 1) / 2;
        if base_exp > trunc {
            break;
        }
        let prod = a_pochhammer(n1, trunc - base_exp)?;
        if indices == 1 {
            buckets[n1 as usize] = buckets[n1 as usize].add(&prod.shifted(base_exp));
        } else {
            let mut walk = Walk {
                indices,
                min_last,
                trunc,
                inv_q: &inv_q,
                buckets: &mut buckets,
            };
            walk.descend(2, n1, base_exp, &prod);
        }
    }

    // Multiply the shared final factor in per bucket value.
    let mut total = TruncatedSeries::zero(trunc);
    let mut last_series = TruncatedSeries::one(trunc)?;
    for d in 0..=n1_max {
        if d > 0 {
            last_series = match last {
                LastFactor::ZPair => last_series
                    .mul(&z_geometric(1, d as i64, trunc))
                    .truncated(trunc)
                    .mul(&z_geometric(-1, d as i64, trunc))
                    .truncated(trunc),
                LastFactor::PlainQ => last_series
                    .mul(&scalar_geometric(d as i64, trunc))
                    .truncated(trunc),
                LastFactor::QSquared => last_series
                    .mul(&scalar_geometric(2 * d as i64, trunc))
                    .truncated(trunc),
            };
        }
        if !buckets[d as usize].is_zero_window() {
            total = total.add(&buckets[d as usize].mul(&last_series).truncated(trunc));
        }
    }
    Ok(total)
}

/// Right side of the k-bar rank multiple-sum identity: indices
/// `n_1 >= ... >= n_{k-1} >= 1` with the `(zq;q)(z^{-1}q;q)` pair.
pub fn nbark_multisum_series(k: u32, trunc: i64) -> Result<ZaSeries> {
    assert!(k >= 2);
    graded_multisum((k - 1) as usize, 1, LastFactor::ZPair, trunc)
}

/// Same sum with the last index allowed to reach zero.
pub(crate) fn multisum_last_zero(k: u32, trunc: i64) -> Result<ZaSeries> {
    assert!(k >= 2);
    graded_multisum((k - 1) as usize, 0, LastFactor::ZPair, trunc)
}

/// The self-k-conjugate multiple sum: last factor `(q^2;q^2)_{n_{k-1}}`,
/// last index from zero.
pub fn self_conjugate_lhs(k: u32, trunc: i64) -> Result<ZaSeries> {
    assert!(k >= 2);
    graded_multisum((k - 1) as usize, 0, LastFactor::QSquared, trunc)
}

/// The plain-tail multiple sum over `r` indices (the specialization
/// target of the bilateral sums): last factor `(q;q)_{n_r}`.
pub(crate) fn plain_tail_multisum(r: usize, trunc: i64) -> Result<ZaSeries> {
    graded_multisum(r, 0, LastFactor::PlainQ, trunc)
}
