//! Generating-function route for the rank tables.
//!
//! Each statistic's series is expanded once per rank value `m`, sharing
//! the prefactor series across all `m` (an O(max_n) build instead of
//! O(max_n^2)).

use num_traits::One;

use crate::error::Result;
use crate::qobjects::{euler_product, inv_one_minus, neg_euler_product, poch_finite, poch_inf};
use crate::series::{Int, MarkerPoly, SignedMonomial, TruncatedSeries};

type IntSeries = TruncatedSeries<Int>;
type ASeries = TruncatedSeries<MarkerPoly<Int>>;

/// Shared state for the classical (unmarked) generating functions: the
/// rank, crank, and k-rank families and the overpartition D-rank.
pub struct GfBuilder {
    trunc: i64,
    /// `1/(q;q)_inf`
    euler_inv: IntSeries,
    /// `2(-q;q)_inf/(q;q)_inf`
    nbar_prefactor: IntSeries,
}

impl GfBuilder {
    pub fn new(trunc: i64) -> Result<Self> {
        let euler_inv = euler_product::<Int>(trunc)?.invert()?;
        let nbar_prefactor = neg_euler_product::<Int>(trunc)?
            .mul(&euler_inv)
            .scaled(&Int::from(2));
        Ok(GfBuilder {
            trunc,
            euler_inv,
            nbar_prefactor,
        })
    }

    /// `sum_n N_k(m,n) q^n` for the family with quadratic coefficient
    /// `2c - 1`: `c = 1` is the crank, `c = 2` the rank, `c = k` the
    /// k-rank.
    ///
    /// Expands `(q;q)_inf^{-1} sum_{r>=1} (-1)^{r-1}
    /// q^{r((2c-1)r-1)/2 + |m| r} (1 - q^r)`.
    pub fn classical_m(&self, c: u32, m: i64, trunc: i64) -> IntSeries {
        debug_assert!(c >= 1 && trunc <= self.trunc);
        let m = m.abs();
        let mut inner = TruncatedSeries::zero(trunc);
        let mut r = 1i64;
        loop {
            let e = r * ((2 * c as i64 - 1) * r - 1) / 2 + m * r;
            if e > trunc {
                break;
            }
            let sign = if r % 2 == 1 { 1 } else { -1 };
            inner = inner.add(
                &TruncatedSeries::monomial(Int::from(sign), e, trunc).expect("e <= trunc"),
            );
            if e + r <= trunc {
                inner = inner.add(
                    &TruncatedSeries::monomial(Int::from(-sign), e + r, trunc).expect("in range"),
                );
            }
            r += 1;
        }
        self.euler_inv.truncated(trunc).mul(&inner).truncated(trunc)
    }

    /// `sum_n Nbar(m,n) q^n`: the overpartition D-rank generating
    /// function `2 (-q;q)_inf (q;q)_inf^{-1} sum_{r>=1}
    /// (-1)^{r-1} q^{r^2 + |m| r} (1 - q^r) / (1 + q^r)`.
    pub fn nbar_m(&self, m: i64, trunc: i64) -> Result<IntSeries> {
        debug_assert!(trunc <= self.trunc);
        let m = m.abs();
        let mut inner = TruncatedSeries::zero(trunc);
        let mut r = 1i64;
        loop {
            let e = r * r + m * r;
            if e > trunc {
                break;
            }
            let sign = if r % 2 == 1 { 1 } else { -1 };
            let geom = inv_one_minus::<Int>(true, r, trunc - e)?;
            let mut term = geom.scaled(&Int::from(sign)).shifted(e);
            if e + r <= trunc {
                let geom2 = inv_one_minus::<Int>(true, r, trunc - e - r)?;
                term = term.add(&geom2.scaled(&Int::from(-sign)).shifted(e + r));
            }
            inner = inner.add(&term.truncated(trunc));
            r += 1;
        }
        Ok(self.nbar_prefactor.truncated(trunc).mul(&inner).truncated(trunc))
    }
}

/// Shared state for the k-bar rank generating function, whose
/// coefficients carry the overline marker `a`.
pub struct NbarKGf {
    trunc: i64,
    k: u32,
    /// `(-aq;q)_inf / (q;q)_inf`
    prefactor: ASeries,
    /// `(-1)^{r-1} a^r (-1/a;q)_r (1-q^r) / (-aq;q)_r`, indexed by `r-1`.
    terms: Vec<ASeries>,
}

impl NbarKGf {
    pub fn new(k: u32, trunc: i64) -> Result<Self> {
        debug_assert!(k >= 2);
        let prefactor = poch_inf::<MarkerPoly<Int>>(SignedMonomial::neg_a_q(), 1, trunc)?
            .mul(&euler_product::<MarkerPoly<Int>>(trunc)?.invert()?);
        let mut terms = Vec::new();
        let mut r = 1u32;
        while (k as i64 - 1) * (r as i64) * (r as i64) <= trunc {
            let ri = r as i64;
            let inner = trunc - (k as i64 - 1) * ri * ri;
            let sign = if r % 2 == 1 { 1 } else { -1 };
            let a_r = MarkerPoly::monomial(0, ri, Int::from(sign));
            let num = poch_finite::<MarkerPoly<Int>>(SignedMonomial::neg_inv_a(), r, 1, inner)?;
            let den_inv =
                poch_finite::<MarkerPoly<Int>>(SignedMonomial::neg_a_q(), r, 1, inner)?.invert()?;
            let mut one_minus_qr = TruncatedSeries::one(inner)?;
            if ri <= inner {
                let qr = TruncatedSeries::monomial(MarkerPoly::one(), ri, inner).expect("in range");
                one_minus_qr = one_minus_qr.sub(&qr);
            }
            terms.push(num.mul(&den_inv).mul(&one_minus_qr).scaled(&a_r));
            r += 1;
        }
        Ok(NbarKGf {
            trunc,
            k,
            prefactor,
            terms,
        })
    }

    /// `sum_{n,j} Nbar_k(m,n,j) a^j q^n` for one rank value `m`.
    pub fn gf_m(&self, m: i64) -> ASeries {
        let m = m.abs();
        let k1 = self.k as i64 - 1;
        let mut inner = TruncatedSeries::zero(self.trunc);
        for (i, t) in self.terms.iter().enumerate() {
            let r = i as i64 + 1;
            let e = k1 * r * r + m * r;
            if e > self.trunc {
                break;
            }
            inner = inner.add(&t.truncated(self.trunc - e).shifted(e));
        }
        self.prefactor.mul(&inner).truncated(self.trunc)
    }
}
