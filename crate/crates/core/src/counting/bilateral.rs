//! Bilateral sums in the overline marker `a`.

use num_traits::One;

use crate::error::Result;
use crate::qobjects::{bilateral_sum, euler_product, poch_finite, poch_inf, poch_int};
use crate::series::{Coeff, Int, MarkerPoly, SignedMonomial, TruncatedSeries};

use super::multisum::ZaSeries;

/// `(-aq;q)_inf / (q;q)_inf`, the overpartition prefactor with the
/// overline marker.
pub(crate) fn overline_prefactor(trunc: i64) -> Result<ZaSeries> {
    let num = poch_inf::<MarkerPoly<Int>>(SignedMonomial::neg_a_q(), 1, trunc)?;
    Ok(num.mul(&euler_product::<MarkerPoly<Int>>(trunc)?.invert()?))
}

/// `1/(arg;q^p)_n` for an integer index: the reciprocal of
/// [`poch_int`], computed without a detour through double inversion.
pub(crate) fn poch_int_inverse<C: Coeff>(
    arg: SignedMonomial,
    n: i64,
    p: u32,
    trunc: i64,
) -> Result<TruncatedSeries<C>> {
    if n >= 0 {
        let denom = poch_finite::<C>(arg, n as u32, p, trunc)?;
        let inv = denom.invert()?;
        debug_assert!(inv.trunc_order() >= trunc);
        Ok(inv.truncated(trunc.max(inv.min_order())))
    } else {
        // 1/(arg;q^p)_{-m} = (arg q^{-mp}; q^p)_m
        poch_finite(arg.shift_q(n * p as i64), (-n) as u32, p, trunc)
    }
}

/// The bilateral sum
/// `sum_{n in Z} (-1)^n a^n q^{q_exp(n)} (-1/a;q)_n / (-aq;q)_n`
/// for a convex exponent function with `q_exp(n) -> infinity` fast enough
/// that terms have valuation `q_exp(n) + max(0, -n)`.
pub(crate) fn a_ratio_bilateral(
    q_exp: impl Fn(i64) -> i64,
    trunc: i64,
) -> Result<ZaSeries> {
    let val = |n: i64| q_exp(n) + (-n).max(0);
    bilateral_sum(trunc, val, |n, order| {
        let e = q_exp(n);
        // For n = -m the two Pochhammers have opposite valuations
        // (+binom(m+1,2) and -binom(m,2)); pad their product so nothing
        // is lost before the shift.
        let pad = if n < 0 { (-n) * (-n - 1) / 2 } else { 0 };
        let inner = order - e + pad;
        let num = poch_int::<MarkerPoly<Int>>(SignedMonomial::neg_inv_a(), n, 1, inner)?;
        let den_inv = poch_int_inverse::<MarkerPoly<Int>>(SignedMonomial::neg_a_q(), n, 1, inner)?;
        let sign = if n.rem_euclid(2) == 1 { -1 } else { 1 };
        let marker = MarkerPoly::monomial(0, n, Int::from(sign));
        Ok(num.mul(&den_inv).scaled(&marker).shifted(e))
    })
}

/// Exponent of the self-k-conjugate bilateral: `(k-1)n^2 + binom(n+1,2)`.
pub(crate) fn skcon_exponent(k: u32, n: i64) -> i64 {
    (k as i64 - 1) * n * n + n * (n + 1) / 2
}

/// Exponent of the plain-tail specialization: `kappa n^2 + n`.
pub(crate) fn plain_tail_exponent(kappa: u32, n: i64) -> i64 {
    (kappa as i64) * n * n + n
}

/// `(-aq;q)_inf/(q;q)_inf * sum_n (-1)^n a^n q^{(k-1)n^2 + binom(n+1,2)}
/// (-1/a;q)_n/(-aq;q)_n`: the product side of the self-k-conjugate
/// identity.
pub(crate) fn skcon_rhs(k: u32, trunc: i64) -> Result<ZaSeries> {
    let sum = a_ratio_bilateral(|n| skcon_exponent(k, n), trunc)?;
    Ok(overline_prefactor(trunc)?.mul(&sum).truncated(trunc))
}

/// `(-aq;q)_inf/(q;q)_inf * sum_n (-1)^n a^n q^{kappa n^2 + n}
/// (-1/a;q)_n/(-aq;q)_n`: the bilateral side of the plain-tail
/// specialization.
pub(crate) fn plain_tail_bilateral(kappa: u32, trunc: i64) -> Result<ZaSeries> {
    let sum = a_ratio_bilateral(|n| plain_tail_exponent(kappa, n), trunc)?;
    Ok(overline_prefactor(trunc)?.mul(&sum).truncated(trunc))
}

/// `1 + sum_{n>=1} (-1)^n a^n q^{cn^2} (1+q^n) (-1/a;q)_n / (-aq;q)_n`,
/// the unilateral form that opens the plain-tail derivation.
pub(crate) fn plain_tail_unilateral(c: u32, trunc: i64) -> Result<ZaSeries> {
    let mut total = TruncatedSeries::one(trunc)?;
    let c = c as i64;
    let mut n = 1i64;
    while c * n * n <= trunc {
        let e = c * n * n;
        let inner = trunc - e;
        let num = poch_finite::<MarkerPoly<Int>>(SignedMonomial::neg_inv_a(), n as u32, 1, inner)?;
        let den_inv =
            poch_int_inverse::<MarkerPoly<Int>>(SignedMonomial::neg_a_q(), n, 1, inner)?;
        let mut one_plus_qn = TruncatedSeries::one(inner)?;
        if n <= inner {
            one_plus_qn = one_plus_qn.add(
                &TruncatedSeries::monomial(MarkerPoly::one(), n, inner).expect("in range"),
            );
        }
        let sign = if n % 2 == 1 { -1 } else { 1 };
        let marker = MarkerPoly::monomial(0, n, Int::from(sign));
        let term = num.mul(&den_inv).mul(&one_plus_qn).scaled(&marker).shifted(e);
        total = total.add(&term.truncated(trunc));
        n += 1;
    }
    Ok(total)
}
