//! Rank tables for every counting statistic, built by up to three
//! independent routes (generating function, multiple sum, enumeration),
//! plus the self-k-conjugate series and the reduction cross-checks.

pub(crate) mod bilateral;
mod enumerate;
mod gf;
mod multisum;
mod table;

pub use multisum::nbark_multisum_series;
pub use table::{Method, RankTable, Stat};

pub(crate) use gf::{GfBuilder, NbarKGf};
pub(crate) use multisum::{
    a_pochhammer, multisum_last_zero, plain_tail_multisum, self_conjugate_lhs, z_geometric,
    ZaSeries,
};

use crate::error::{Error, Result};
use crate::series::{Int, TruncatedSeries};

/// Build the table for `stat` by `method` up to weight `max_n`.
///
/// `k` is required for the k-statistics (`k >= 2`, except that the
/// generating-function route of `Nk` also accepts `k = 1`, where it
/// degenerates to the crank) and must be absent otherwise.
pub fn rank_table(stat: Stat, method: Method, k: Option<u32>, max_n: u32) -> Result<RankTable> {
    if max_n < 1 {
        return Err(Error::Usage("max_n must be at least 1".into()));
    }
    match (stat.uses_k(), k) {
        (true, None) => {
            return Err(Error::Usage(format!("stat {stat} requires --k")));
        }
        (false, Some(_)) => {
            return Err(Error::Usage(format!("stat {stat} does not take k")));
        }
        _ => {}
    }
    if let Some(k) = k {
        let min_k = if stat == Stat::Nk && method == Method::Gf {
            1
        } else {
            2
        };
        if k < min_k {
            return Err(Error::Usage(format!(
                "stat {stat} with method {method} requires k >= {min_k}"
            )));
        }
    }
    match method {
        Method::Enum => enumerate::enum_table(stat, k, max_n),
        Method::Gf => gf_table(stat, k, max_n),
        Method::Multisum => match stat {
            Stat::NbarK => multisum_table(k.expect("k checked"), max_n),
            _ => Err(Error::Usage(format!(
                "method multisum is only available for stat nbark, not {stat}"
            ))),
        },
    }
}

fn gf_table(stat: Stat, k: Option<u32>, max_n: u32) -> Result<RankTable> {
    let trunc = max_n as i64;
    let mut table = RankTable::new(stat, Method::Gf, k, max_n);
    match stat {
        Stat::N | Stat::M | Stat::Nk => {
            let c = match stat {
                Stat::N => 2,
                Stat::M => 1,
                Stat::Nk => k.expect("k checked"),
                _ => unreachable!(),
            };
            let builder = GfBuilder::new(trunc)?;
            for m in 0..=max_n as i64 {
                let series = builder.classical_m(c, m, trunc);
                if fill_scalar(&mut table, m, &series)? == 0 && m > 0 {
                    break;
                }
            }
        }
        Stat::Nbar => {
            let builder = GfBuilder::new(trunc)?;
            for m in 0..=max_n as i64 {
                let series = builder.nbar_m(m, trunc)?;
                if fill_scalar(&mut table, m, &series)? == 0 && m > 0 {
                    break;
                }
            }
        }
        Stat::NbarK => {
            let k = k.expect("k checked");
            let builder = NbarKGf::new(k, trunc)?;
            for m in 0..=max_n as i64 {
                let series = builder.gf_m(m);
                let mut nonzero = 0usize;
                for n in 1..=max_n {
                    let poly = series.coeff_or_zero(n as i64);
                    for (&(z_exp, a_exp), c) in poly.terms() {
                        assert_eq!(z_exp, 0, "unexpected z marker in k-bar gf");
                        assert!(a_exp >= 0, "negative overline count in finished gf");
                        let count = i64::try_from(c).expect("count fits in i64");
                        table.set(n, m, a_exp as u32, count);
                        if m > 0 {
                            table.set(n, -m, a_exp as u32, count);
                        }
                        nonzero += 1;
                    }
                }
                if nonzero == 0 && m > 0 {
                    break;
                }
            }
        }
    }
    enumerate::validate_support(&table)?;
    // gf entries are honest counts except for the crank's classical
    // n = 1 row (M(0,1) = -1, also reached as N_1), preserved not patched
    let is_crank = stat == Stat::M || (stat == Stat::Nk && k == Some(1));
    for (&(n, m, j), &c) in table.entries() {
        if c < 0 && !(is_crank && n == 1) {
            return Err(Error::Verification(format!(
                "negative gf count {c} at stat {stat}, (n,m,j) = ({n},{m},{j})"
            )));
        }
    }
    Ok(table)
}

/// Copy the coefficients of a scalar generating function into rows
/// `(n, m, 0)` and `(n, -m, 0)`; returns how many were nonzero.
fn fill_scalar(table: &mut RankTable, m: i64, series: &TruncatedSeries<Int>) -> Result<usize> {
    let mut nonzero = 0usize;
    for n in 1..=table.max_n {
        let c = series.coeff_or_zero(n as i64);
        let count = i64::try_from(&c).expect("count fits in i64");
        if count != 0 {
            table.set(n, m, 0, count);
            if m > 0 {
                table.set(n, -m, 0, count);
            }
            nonzero += 1;
        }
    }
    Ok(nonzero)
}

fn multisum_table(k: u32, max_n: u32) -> Result<RankTable> {
    let series = nbark_multisum_series(k, max_n as i64)?;
    let mut table = RankTable::new(Stat::NbarK, Method::Multisum, Some(k), max_n);
    for n in 1..=max_n {
        let poly = series.coeff_or_zero(n as i64);
        for (&(z_exp, a_exp), c) in poly.terms() {
            assert!(a_exp >= 0, "negative overline count in finished multisum");
            let count = i64::try_from(c).expect("count fits in i64");
            table.set(n, z_exp, a_exp as u32, count);
        }
    }
    enumerate::validate_support(&table)?;
    Ok(table)
}

/// Which side of the self-k-conjugate identity to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SkconSide {
    Lhs,
    Rhs,
}

/// The self-k-conjugate generating identity: `Lhs` is the multiple sum
/// ending in `(q^2;q^2)_{n_{k-1}}`, `Rhs` the bilateral-sum expression
/// with the `(-aq;q)_inf/(q;q)_inf` prefactor. Both carry the overline
/// marker `a`.
pub fn self_conjugate_series(k: u32, side: SkconSide, trunc: i64) -> Result<ZaSeries> {
    if k < 2 {
        return Err(Error::Usage(format!(
            "self-conjugate series requires k >= 2, got {k}"
        )));
    }
    match side {
        SkconSide::Lhs => self_conjugate_lhs(k, trunc),
        SkconSide::Rhs => bilateral::skcon_rhs(k, trunc),
    }
}

/// Check `Nbar_k(m, n, 0) = N_k(m, n)` for `n <= max_n` on the
/// generating-function tables.
pub fn reduction_check_a0(k: u32, max_n: u32) -> Result<()> {
    let nbark = rank_table(Stat::NbarK, Method::Gf, Some(k), max_n)?;
    let nk = rank_table(Stat::Nk, Method::Gf, Some(k), max_n)?;
    for n in 1..=max_n {
        for m in -(n as i64)..=n as i64 {
            let lhs = nbark.get(n, m, 0);
            let rhs = nk.get(n, m, 0);
            if lhs != rhs {
                return Err(Error::Verification(format!(
                    "Nbar_{k}({m},{n},0) = {lhs} but N_{k}({m},{n}) = {rhs}"
                )));
            }
        }
    }
    Ok(())
}

/// Check `sum_j Nbar_2(m, n, j) = Nbar(m, n)` for `n <= max_n` on the
/// generating-function tables.
pub fn reduction_check_jsum(max_n: u32) -> Result<()> {
    let nbark = rank_table(Stat::NbarK, Method::Gf, Some(2), max_n)?;
    let nbar = rank_table(Stat::Nbar, Method::Gf, None, max_n)?;
    for n in 1..=max_n {
        for m in -(n as i64)..=n as i64 {
            let jsum: i64 = (0..=n).map(|j| nbark.get(n, m, j)).sum();
            let direct = nbar.get(n, m, 0);
            if jsum != direct {
                return Err(Error::Verification(format!(
                    "sum_j Nbar_2({m},{n},j) = {jsum} but Nbar({m},{n}) = {direct}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::over_to_vector;
    use crate::partitions::{durfee_sizes, enumerate_overpartitions, enumerate_partitions};
    use num_traits::One;

    #[test]
    fn dyson_enum_table_at_four() {
        let t = rank_table(Stat::N, Method::Enum, None, 4).unwrap();
        assert_eq!(t.get(4, 0, 0), 1);
        assert_eq!(t.get(4, 1, 0), 1);
        assert_eq!(t.get(4, -1, 0), 1);
        assert_eq!(t.get(4, 3, 0), 1);
        assert_eq!(t.get(4, -3, 0), 1);
        assert_eq!(t.row_total(4), 5);
        assert_eq!(t.get(4, 2, 0), 0);
        assert_eq!(t.get(4, 4, 0), 0);
    }

    #[test]
    fn crank_gf_anomaly_row() {
        let t = rank_table(Stat::M, Method::Gf, None, 3).unwrap();
        assert_eq!(t.get(1, 0, 0), -1);
        assert_eq!(t.get(1, 1, 0), 1);
        assert_eq!(t.get(1, -1, 0), 1);
        // the row still sums to p(1)
        assert_eq!(t.row_total(1), 1);
    }

    #[test]
    fn nbar_enum_table_at_two() {
        let t = rank_table(Stat::Nbar, Method::Enum, None, 2).unwrap();
        assert_eq!(t.get(2, 1, 0), 2);
        assert_eq!(t.get(2, -1, 0), 2);
        assert_eq!(t.row_total(2), 4);
    }

    #[test]
    fn row_totals_count_objects() {
        let n_table = rank_table(Stat::N, Method::Gf, None, 12).unwrap();
        let nbar_table = rank_table(Stat::Nbar, Method::Gf, None, 12).unwrap();
        for n in 1..=12u32 {
            assert_eq!(
                n_table.row_total(n) as usize,
                enumerate_partitions(n).len(),
                "sum_m N(m,{n}) != p({n})"
            );
            assert_eq!(
                nbar_table.row_total(n) as usize,
                enumerate_overpartitions(n).len(),
                "sum Nbar(m,{n}) != pbar({n})"
            );
        }
    }

    #[test]
    fn usage_errors() {
        assert!(rank_table(Stat::N, Method::Multisum, None, 5).is_err());
        assert!(rank_table(Stat::Nbar, Method::Multisum, None, 5).is_err());
        assert!(rank_table(Stat::Nk, Method::Multisum, Some(2), 5).is_err());
        assert!(rank_table(Stat::Nk, Method::Gf, None, 5).is_err());
        assert!(rank_table(Stat::N, Method::Gf, Some(2), 5).is_err());
        assert!(rank_table(Stat::NbarK, Method::Gf, Some(1), 5).is_err());
        assert!(rank_table(Stat::Nk, Method::Enum, Some(1), 5).is_err());
        assert!(rank_table(Stat::Nk, Method::Gf, Some(1), 5).is_ok());
        assert!(rank_table(Stat::N, Method::Gf, None, 0).is_err());
    }

    #[test]
    fn nbark_j0_slice_at_k2_is_dyson() {
        let nbark = rank_table(Stat::NbarK, Method::Gf, Some(2), 18).unwrap();
        let dyson = rank_table(Stat::N, Method::Gf, None, 18).unwrap();
        for n in 1..=18u32 {
            for m in -(n as i64)..=n as i64 {
                assert_eq!(
                    nbark.get(n, m, 0),
                    dyson.get(n, m, 0),
                    "j = 0 slice differs from N at ({m},{n})"
                );
            }
        }
    }

    #[test]
    fn nbark_enum_column_sums() {
        // sum over (m, j) of the enum table at weight n counts the
        // overpartitions with at least k-2 successive squares in beta
        let k = 3u32;
        let t = rank_table(Stat::NbarK, Method::Enum, Some(k), 10).unwrap();
        for n in 1..=10u32 {
            let direct = enumerate_overpartitions(n)
                .iter()
                .filter(|o| {
                    let v = over_to_vector(o);
                    durfee_sizes(v.beta(), 1)[0] >= 1
                })
                .count();
            assert_eq!(t.row_total(n) as usize, direct, "column sum at n = {n}");
        }
    }

    #[test]
    fn self_conjugate_series_basics() {
        for k in [2u32, 3, 4] {
            let lhs = self_conjugate_series(k, SkconSide::Lhs, 16).unwrap();
            let rhs = self_conjugate_series(k, SkconSide::Rhs, 16).unwrap();
            assert!(
                lhs.equal_up_to(&rhs, 16).unwrap().is_equal(),
                "self-conjugate identity fails at k = {k}"
            );
            // constant term 1: the all-zero tuple
            assert!(lhs.coeff_or_zero(0).is_one());
        }
        assert!(self_conjugate_series(1, SkconSide::Lhs, 5).is_err());
    }

    #[test]
    fn multisum_table_small_entries() {
        // Nbar_2(m, n, j) entries for n <= 2, read off the multisum
        let t = rank_table(Stat::NbarK, Method::Multisum, Some(2), 2).unwrap();
        // overpartitions of 1: (1) has j = 0, (1bar) j = 1; both rank 0
        assert_eq!(t.get(1, 0, 0), 1);
        assert_eq!(t.get(1, 0, 1), 1);
        // of 2: (2), (2bar) rank 1; (1,1), (1bar,1) rank -1
        assert_eq!(t.get(2, 1, 0), 1);
        assert_eq!(t.get(2, 1, 1), 1);
        assert_eq!(t.get(2, -1, 0), 1);
        assert_eq!(t.get(2, -1, 1), 1);
    }

    #[test]
    fn exports_are_well_formed() {
        let t = rank_table(Stat::N, Method::Enum, None, 3).unwrap();
        let tsv = t.to_tsv();
        assert!(tsv.starts_with("n\tm\tj\tcount\n"));
        assert!(tsv.contains("3\t0\t0\t1"));
        let json = t.to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["stat"], "n");
        assert_eq!(v["method"], "enum");
        assert_eq!(v["max_n"], 3);
        assert!(v["entries"].as_array().unwrap().len() >= 3);
    }
}
