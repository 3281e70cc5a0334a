//! Builders for the named q-objects: Pochhammer symbols, Gaussian
//! binomials, the theta function `j(z;q)`, Appell-Lerch sums, and the
//! tenth-order mock theta functions `X(q)` and `chi(q)`.
//!
//! Every builder returns a series whose truncation order equals the
//! requested one; internal factors are padded so that no precision is
//! silently lost through Laurent factors with negative valuation.
//! Bilateral sums use an exact per-term valuation bound and scan outward
//! until the (convex) bound exceeds the target order, so a term can never
//! be dropped while it still contributes.

use crate::error::{Error, Result};
use crate::series::{Coeff, Rat, SignedMonomial, TruncatedSeries};

/// `1 - arg * q^0` as a series known to `trunc`.
fn linear_factor<C: Coeff>(arg: SignedMonomial, trunc: i64) -> Result<TruncatedSeries<C>> {
    let one = TruncatedSeries::<C>::one(trunc)?;
    if arg.q_exp > trunc {
        return Ok(one);
    }
    let c = C::signed_a_power(!arg.negative, arg.a_exp).ok_or_else(|| {
        Error::Usage(format!("coefficient ring has no marker a (argument {arg})"))
    })?;
    let term = TruncatedSeries::monomial(c, arg.q_exp, trunc)?;
    Ok(one.add(&term))
}

/// Finite Pochhammer `(arg; q^p)_n = prod_{i=0}^{n-1} (1 - arg * q^{ip})`.
pub fn poch_finite<C: Coeff>(
    arg: SignedMonomial,
    n: u32,
    p: u32,
    trunc: i64,
) -> Result<TruncatedSeries<C>> {
    if p == 0 {
        return Err(Error::Usage("pochhammer base exponent must be >= 1".into()));
    }
    let p = p as i64;
    // Pad for factors with negative q-exponents so the final product is
    // still exact to the requested order.
    let neg: i64 = (0..n as i64)
        .map(|i| (arg.q_exp + i * p).min(0))
        .sum();
    let padded = trunc - neg;
    let mut prod = TruncatedSeries::<C>::one(padded)?;
    for i in 0..n as i64 {
        let factor = linear_factor(arg.shift_q(i * p), padded)?;
        prod = prod.mul(&factor);
    }
    debug_assert!(prod.trunc_order() >= trunc);
    Ok(clamp(prod, trunc))
}

/// Pochhammer with an integer index: `(arg; q^p)_{-m} = 1 / (arg q^{-mp}; q^p)_m`.
pub fn poch_int<C: Coeff>(
    arg: SignedMonomial,
    n: i64,
    p: u32,
    trunc: i64,
) -> Result<TruncatedSeries<C>> {
    if n >= 0 {
        return poch_finite(arg, n as u32, p, trunc);
    }
    let m = (-n) as u32;
    let shifted = arg.shift_q(n * p as i64);
    // The finite product below has some exact negative valuation -b;
    // inverting raises the usable order by 2b, so a small window suffices.
    let b: i64 = (0..m as i64)
        .map(|i| -(shifted.q_exp + i * p as i64).min(0))
        .sum();
    let denom = poch_finite::<C>(shifted, m, p, (trunc - 2 * b).max(0))?;
    let inv = denom.invert()?;
    if inv.min_order() > trunc {
        // Valuation beyond the window: indistinguishable from zero here.
        return Ok(TruncatedSeries::zero(trunc));
    }
    debug_assert!(inv.trunc_order() >= trunc);
    Ok(clamp(inv, trunc))
}

/// Infinite Pochhammer `(arg; q^p)_inf`, truncated at `trunc`.
///
/// Rejects arguments that make some factor vanish identically, e.g.
/// `(q^0; q)_inf = 0`.
pub fn poch_inf<C: Coeff>(
    arg: SignedMonomial,
    p: u32,
    trunc: i64,
) -> Result<TruncatedSeries<C>> {
    if p == 0 {
        return Err(Error::Usage("pochhammer base exponent must be >= 1".into()));
    }
    let p = p as i64;
    if !arg.negative && arg.a_exp == 0 && arg.q_exp <= 0 && arg.q_exp % p == 0 {
        return Err(Error::Domain(format!(
            "({arg}; q^{p})_inf vanishes: factor 1 - q^0 at i = {}",
            -arg.q_exp / p
        )));
    }
    let neg: i64 = negative_exponent_sum(arg.q_exp, p);
    let padded = trunc - neg;
    let mut prod = TruncatedSeries::<C>::one(padded)?;
    let mut i = 0;
    loop {
        let e = arg.q_exp + i * p;
        if e > padded {
            break;
        }
        prod = prod.mul(&linear_factor(arg.shift_q(i * p), padded)?);
        i += 1;
    }
    debug_assert!(prod.trunc_order() >= trunc);
    Ok(clamp(prod, trunc))
}

/// Sum of the negative members of `start, start + p, start + 2p, ...`.
fn negative_exponent_sum(start: i64, p: i64) -> i64 {
    let mut total = 0;
    let mut e = start;
    while e < 0 {
        total += e;
        e += p;
    }
    total
}

pub(crate) fn clamp<C: Coeff>(s: TruncatedSeries<C>, trunc: i64) -> TruncatedSeries<C> {
    if s.min_order() > trunc {
        TruncatedSeries::zero(trunc)
    } else {
        s.truncated(trunc)
    }
}

/// Gaussian binomial `[n over m]_q`, the generating function for
/// partitions into at most `m` parts each at most `n - m`.
///
/// Returns the zero series when `m > n` (standard convention).
pub fn gauss_binomial<C: Coeff>(n: u32, m: u32, trunc: i64) -> Result<TruncatedSeries<C>> {
    if m > n {
        return Ok(TruncatedSeries::zero(trunc));
    }
    let degree = (m as i64) * ((n - m) as i64);
    let work = trunc.max(degree);
    let q = SignedMonomial::q_pow(1);
    let num = poch_finite::<C>(q, n, 1, work)?;
    let den = poch_finite::<C>(q, m, 1, work)?.mul(&poch_finite::<C>(q, n - m, 1, work)?);
    let quot = num.mul(&den.invert()?);
    debug_assert!(quot.trunc_order() >= trunc);
    Ok(clamp(quot, trunc))
}

/// The theta function `j(z; q^p) = (z;q^p)_inf (q^p/z;q^p)_inf (q^p;q^p)_inf`
/// for a signed q-monomial `z`.
///
/// `z = +q^{kp}` is rejected: the product vanishes identically.
pub fn jtheta<C: Coeff>(z: SignedMonomial, p: u32, trunc: i64) -> Result<TruncatedSeries<C>> {
    if z.a_exp != 0 {
        return Err(Error::Usage(format!("theta argument must be a q-monomial, got {z}")));
    }
    if p == 0 {
        return Err(Error::Usage("theta base exponent must be >= 1".into()));
    }
    let pi = p as i64;
    if !z.negative && z.q_exp.rem_euclid(pi) == 0 {
        return Err(Error::Domain(format!(
            "j({z}; q^{p}) is identically zero (argument is +q^{{kp}})"
        )));
    }
    let z_inv_q = SignedMonomial::new(z.negative, pi - z.q_exp, 0);
    let neg = negative_exponent_sum(z.q_exp, pi) + negative_exponent_sum(z_inv_q.q_exp, pi);
    let padded = trunc - neg;
    let prod = poch_inf::<C>(z, p, padded)?
        .mul(&poch_inf::<C>(z_inv_q, p, padded)?)
        .mul(&poch_inf::<C>(SignedMonomial::q_pow(pi), p, padded)?);
    debug_assert!(prod.trunc_order() >= trunc);
    Ok(clamp(prod, trunc))
}

/// `1 / (1 - s*q^d)` as a series known to `trunc`.
///
/// For `d = 0` the value is the constant `1/(1-s)`: a pole when `s = +1`,
/// otherwise `1/2` (the ring must contain it). For `d < 0` the dominant
/// monomial is factored out first, so the result is an honest series with
/// valuation `|d|`.
pub fn inv_one_minus<C: Coeff>(
    negative: bool,
    d: i64,
    trunc: i64,
) -> Result<TruncatedSeries<C>> {
    let sign = if negative { -1i64 } else { 1 };
    if d == 0 {
        if !negative {
            return Err(Error::Domain("pole: 1/(1 - q^0)".into()));
        }
        let half = C::from_int(2).checked_inv().ok_or_else(|| {
            Error::Domain("term 1/(1 + q^0) = 1/2 requires rational coefficients".into())
        })?;
        return TruncatedSeries::monomial(half, 0, trunc);
    }
    let mut total = TruncatedSeries::zero(trunc);
    if d > 0 {
        let mut i = 0;
        let mut s = 1i64;
        while i * d <= trunc {
            total = total.add(&TruncatedSeries::monomial(C::from_int(s), i * d, trunc)?);
            i += 1;
            s *= sign;
        }
    } else {
        // 1/(1 - s q^d) = -sum_{j>=1} s^j q^{|d| j}
        let step = -d;
        let mut j = 1;
        let mut s = sign;
        while j * step <= trunc {
            total = total.add(&TruncatedSeries::monomial(C::from_int(-s), j * step, trunc)?);
            j += 1;
            s *= sign;
        }
    }
    Ok(total)
}

/// Walk over every integer `n` whose valuation bound `val(n)` is at most
/// `trunc`. `val` must be a convex lower bound on the term valuation: the
/// scan stops in each direction once the bound exceeds `trunc` and is
/// rising, which convexity makes safe.
fn scan_bilateral(
    trunc: i64,
    val: impl Fn(i64) -> i64,
    mut visit: impl FnMut(i64) -> Result<()>,
) -> Result<()> {
    const GUARD: i64 = 2_000_000;
    let mut n = 0i64;
    loop {
        if val(n) > trunc {
            if val(n + 1) >= val(n) {
                break;
            }
        } else {
            visit(n)?;
        }
        n += 1;
        assert!(n < GUARD, "bilateral scan did not terminate (rising side)");
    }
    let mut n = -1i64;
    loop {
        if val(n) > trunc {
            if val(n - 1) >= val(n) {
                break;
            }
        } else {
            visit(n)?;
        }
        n -= 1;
        assert!(n > -GUARD, "bilateral scan did not terminate (falling side)");
    }
    Ok(())
}

/// Sums `term(n, order)` over all integers `n` whose valuation bound
/// `val(n)` reaches the target order; omitted terms are certified to lie
/// entirely above `trunc`.
pub fn bilateral_sum<C: Coeff>(
    trunc: i64,
    val: impl Fn(i64) -> i64,
    mut term: impl FnMut(i64, i64) -> Result<TruncatedSeries<C>>,
) -> Result<TruncatedSeries<C>> {
    let mut total = TruncatedSeries::zero(trunc);
    scan_bilateral(trunc, val, |n| {
        let t = term(n, trunc)?;
        debug_assert!(t.trunc_order() >= trunc, "bilateral term at n={n} too short");
        total = total.add(&clamp(t, trunc));
        Ok(())
    })?;
    Ok(total)
}

/// The Appell-Lerch sum
/// `m(x, q^p, z) = j(z;q^p)^{-1} * sum_n (-1)^n q^{p*binom(n,2)} z^n / (1 - q^{p(n-1)} x z)`
/// over the rationals.
///
/// `x` and `z` must be signed q-monomials; every denominator is checked
/// against the pole `q^{p(n-1)} x z = +q^0` before expansion.
pub fn appell_lerch(
    x: SignedMonomial,
    z: SignedMonomial,
    p: u32,
    trunc: i64,
) -> Result<TruncatedSeries<Rat>> {
    if x.a_exp != 0 || z.a_exp != 0 {
        return Err(Error::Usage(
            "appell-lerch arguments must be signed q-monomials".into(),
        ));
    }
    if p == 0 {
        return Err(Error::Usage("appell-lerch base exponent must be >= 1".into()));
    }
    let pi = p as i64;
    let xz = x.times(z);
    if !xz.negative && xz.q_exp.rem_euclid(pi) == 0 {
        // q^{p(n-1)} x z = +q^0 exactly at n = 1 - (x.q + z.q)/p.
        let n = 1 - xz.q_exp / pi;
        return Err(Error::Domain(format!(
            "appell-lerch pole: denominator vanishes at n = {n}"
        )));
    }

    // Valuation of term n: numerator exponent plus the shift the
    // denominator forces when its q-exponent is negative.
    let den_exp = |n: i64| pi * (n - 1) + xz.q_exp;
    let val = |n: i64| {
        let num = pi * n * (n - 1) / 2 + z.q_exp * n;
        let d = den_exp(n);
        num + if d < 0 { -d } else { 0 }
    };

    // First pass to learn the valuations involved, then a padded pass.
    let theta = jtheta::<Rat>(z, p, trunc.max(0))?;
    let v_theta = theta.valuation().ok_or_else(|| {
        Error::Domain(format!("j({z}; q^{p}) vanishes through order {trunc}"))
    })?;
    let mut v_sum = 0i64;
    scan_bilateral(trunc, val, |n| {
        v_sum = v_sum.min(val(n));
        Ok(())
    })?;
    let padded = trunc + 2 * v_theta.abs() + 2 * v_sum.abs() + 2;

    let theta = jtheta::<Rat>(z, p, padded)?;
    let sum = bilateral_sum(padded, val, |n, order| {
        let num_exp = pi * n * (n - 1) / 2 + z.q_exp * n;
        // coefficient (-1)^n sign(z)^n
        let sign = if !z.negative && n.rem_euclid(2) == 1 { -1 } else { 1 };
        let den = inv_one_minus::<Rat>(xz.negative, den_exp(n), order - num_exp)?;
        Ok(den.scaled(&Rat::from_int(sign)).shifted(num_exp))
    })?;
    let result = sum.mul(&theta.invert()?);
    assert!(
        result.trunc_order() >= trunc,
        "appell-lerch padding too small: got {} for requested {trunc}",
        result.trunc_order()
    );
    Ok(clamp(result, trunc))
}

/// The bilateral Jacobi-type sum
/// `sum_n (-1)^n q^{p*binom(n+1,2)} / (1 - z q^{pn})`,
/// equal to `(q^p;q^p)_inf^3 / j(z;q^p)` when `z` avoids the poles.
pub fn jacobi_bilateral_sum<C: Coeff>(
    z: SignedMonomial,
    p: u32,
    trunc: i64,
) -> Result<TruncatedSeries<C>> {
    if z.a_exp != 0 {
        return Err(Error::Usage("argument must be a signed q-monomial".into()));
    }
    if p == 0 {
        return Err(Error::Usage("base exponent must be >= 1".into()));
    }
    let pi = p as i64;
    if !z.negative && z.q_exp.rem_euclid(pi) == 0 {
        let n = -z.q_exp / pi;
        return Err(Error::Domain(format!(
            "bilateral sum pole: denominator vanishes at n = {n}"
        )));
    }
    let den_exp = |n: i64| z.q_exp + pi * n;
    let val = |n: i64| {
        let num = pi * n * (n + 1) / 2;
        let d = den_exp(n);
        num + if d < 0 { -d } else { 0 }
    };
    bilateral_sum(trunc, val, |n, order| {
        let num_exp = pi * n * (n + 1) / 2;
        let sign = if n.rem_euclid(2) == 1 { -1 } else { 1 };
        let den = inv_one_minus::<C>(z.negative, den_exp(n), order - num_exp)?;
        Ok(den.scaled(&C::from_int(sign)).shifted(num_exp))
    })
}

/// Ramanujan's tenth-order `X(q) = sum_{n>=0} (-1)^n q^{n^2} / (-q;q)_{2n}`.
pub fn mock_x<C: Coeff>(trunc: i64) -> Result<TruncatedSeries<C>> {
    let mut total = TruncatedSeries::zero(trunc);
    let mut n = 0i64;
    while n * n <= trunc {
        let rest = poch_finite::<C>(SignedMonomial::neg_q_pow(1), 2 * n as u32, 1, trunc - n * n)?
            .invert()?;
        let sign = if n % 2 == 1 { -1 } else { 1 };
        total = total.add(&rest.scaled(&C::from_int(sign)).shifted(n * n));
        n += 1;
    }
    Ok(total)
}

/// Ramanujan's tenth-order `chi(q) = sum_{n>=0} (-1)^n q^{(n+1)^2} / (-q;q)_{2n+1}`.
pub fn mock_chi<C: Coeff>(trunc: i64) -> Result<TruncatedSeries<C>> {
    let mut total = TruncatedSeries::zero(trunc);
    let mut n = 0i64;
    while (n + 1) * (n + 1) <= trunc {
        let e = (n + 1) * (n + 1);
        let rest =
            poch_finite::<C>(SignedMonomial::neg_q_pow(1), (2 * n + 1) as u32, 1, trunc - e)?
                .invert()?;
        let sign = if n % 2 == 1 { -1 } else { 1 };
        total = total.add(&rest.scaled(&C::from_int(sign)).shifted(e));
        n += 1;
    }
    Ok(total)
}

/// `(q;q)_inf` truncated at `trunc`; the most common prefactor.
pub fn euler_product<C: Coeff>(trunc: i64) -> Result<TruncatedSeries<C>> {
    poch_inf(SignedMonomial::q_pow(1), 1, trunc)
}

/// `(-q;q)_inf` truncated at `trunc`.
pub fn neg_euler_product<C: Coeff>(trunc: i64) -> Result<TruncatedSeries<C>> {
    poch_inf(SignedMonomial::neg_q_pow(1), 1, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{Int, MarkerPoly};

    type S = TruncatedSeries<Int>;

    fn int(n: i64) -> Int {
        Int::from(n)
    }

    fn q(e: i64) -> SignedMonomial {
        SignedMonomial::q_pow(e)
    }

    /// Independent oracle: the pentagonal-number expansion of (q;q)_inf.
    fn euler_by_pentagonal(trunc: i64) -> S {
        let mut s = TruncatedSeries::zero(trunc);
        let mut k = -trunc;
        while k <= trunc {
            let e = k * (3 * k - 1) / 2;
            if e <= trunc && k != 0 {
                let sign = if k.rem_euclid(2) == 1 { -1 } else { 1 };
                s = s.add(&TruncatedSeries::monomial(int(sign), e, trunc).unwrap());
            }
            k += 1;
        }
        s.add(&TruncatedSeries::one(trunc).unwrap())
    }

    #[test]
    fn poch_finite_examples() {
        // (q;q)_2 = 1 - q - q^2 + q^3
        let s = poch_finite::<Int>(q(1), 2, 1, 5).unwrap();
        assert_eq!(
            (0..=5).map(|e| s.coeff_or_zero(e)).collect::<Vec<_>>(),
            [1, -1, -1, 1, 0, 0].map(int)
        );

        // (-1/a;q)_2 = (1 + 1/a)(1 + q/a)
        let s = poch_finite::<MarkerPoly<Int>>(SignedMonomial::neg_inv_a(), 2, 1, 4).unwrap();
        assert_eq!(s.coeff_or_zero(0), MarkerPoly::constant(int(1)) + MarkerPoly::monomial(0, -1, int(1)));
        assert_eq!(s.coeff_or_zero(1), MarkerPoly::monomial(0, -1, int(1)) + MarkerPoly::monomial(0, -2, int(1)));

        // (q;q)_1 = 1 - q
        let one_minus_q = TruncatedSeries::one(10)
            .unwrap()
            .sub(&TruncatedSeries::monomial(int(1), 1, 10).unwrap());
        let s = poch_finite::<Int>(q(1), 1, 1, 10).unwrap();
        assert!(s.equal_up_to(&one_minus_q, 10).unwrap().is_equal());

        // (-1;q)_3 = 2(-q;q)_2
        let lhs = poch_finite::<Int>(SignedMonomial::neg_one(), 3, 1, 10).unwrap();
        let rhs = poch_finite::<Int>(SignedMonomial::neg_q_pow(1), 2, 1, 10)
            .unwrap()
            .scaled(&int(2));
        assert!(lhs.equal_up_to(&rhs, 10).unwrap().is_equal());

        // marker argument in a scalar ring is a usage error
        assert!(poch_finite::<Int>(SignedMonomial::neg_inv_a(), 1, 1, 4).is_err());
    }

    #[test]
    fn poch_inf_matches_pentagonal_oracle() {
        let lhs = poch_inf::<Int>(q(1), 1, 30).unwrap();
        assert!(lhs.equal_up_to(&euler_by_pentagonal(30), 30).unwrap().is_equal());
        // spot check the stated low-order pattern 1 - q - q^2 + q^5 + ...
        assert_eq!(
            (0..=5).map(|e| lhs.coeff_or_zero(e)).collect::<Vec<_>>(),
            [1, -1, -1, 0, 0, 1].map(int)
        );
    }

    #[test]
    fn poch_inf_odd_even_split() {
        // (q;q)_inf = (q;q^2)_inf (q^2;q^2)_inf
        let lhs = poch_inf::<Int>(q(1), 1, 30).unwrap();
        let rhs = poch_inf::<Int>(q(1), 2, 30)
            .unwrap()
            .mul(&poch_inf::<Int>(q(2), 2, 30).unwrap());
        assert!(lhs.equal_up_to(&rhs, 30).unwrap().is_equal());
    }

    #[test]
    fn poch_inf_rejects_vanishing_factor() {
        assert!(matches!(
            poch_inf::<Int>(q(0), 1, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            poch_inf::<Int>(q(-5), 5, 10),
            Err(Error::Domain(_))
        ));
        // -1 is fine: (-1;q)_inf has constant term 2
        assert!(poch_inf::<Int>(SignedMonomial::neg_one(), 1, 10).is_ok());
    }

    #[test]
    fn poch_int_negative_index_inverts() {
        // (x;q)_{-m} (x q^{-m};q)_m = 1; the -1/a case stays unit-led in
        // the marker ring because the lowest term is the monomial a^{-m}
        let m = 2i64;
        let arg = SignedMonomial::neg_inv_a();
        let neg = poch_int::<MarkerPoly<Int>>(arg, -m, 1, 12).unwrap();
        let finite =
            poch_finite::<MarkerPoly<Int>>(arg.shift_q(-m), m as u32, 1, 12 + 2 * m * m).unwrap();
        let prod = neg.mul(&finite);
        let upto = prod.trunc_order().min(10);
        assert!(prod
            .equal_up_to(&TruncatedSeries::one(upto).unwrap(), upto)
            .unwrap()
            .is_equal());

        // (-q;q)_{-3} needs rationals: its reversal carries the factor
        // (1 + q^0) = 2
        let arg = SignedMonomial::neg_q_pow(1);
        assert!(matches!(
            poch_int::<Int>(arg, -3, 1, 12),
            Err(Error::NonInvertible { .. })
        ));
        let neg = poch_int::<Rat>(arg, -3, 1, 12).unwrap();
        let finite = poch_finite::<Rat>(arg.shift_q(-3), 3, 1, 12 + 18).unwrap();
        let prod = neg.mul(&finite);
        let upto = prod.trunc_order().min(10);
        assert!(prod
            .equal_up_to(&TruncatedSeries::one(upto).unwrap(), upto)
            .unwrap()
            .is_equal());
    }

    #[test]
    fn gauss_binomial_examples() {
        let s = gauss_binomial::<Int>(2, 1, 4).unwrap();
        assert_eq!(
            (0..=2).map(|e| s.coeff_or_zero(e)).collect::<Vec<_>>(),
            [1, 1, 0].map(int)
        );

        // oracle: partitions in a 2x2 box, counted directly
        let s = gauss_binomial::<Int>(4, 2, 6).unwrap();
        assert_eq!(
            (0..=4).map(|e| s.coeff_or_zero(e)).collect::<Vec<_>>(),
            [1, 1, 2, 1, 1].map(int)
        );

        for n in 0..=8 {
            let s = gauss_binomial::<Int>(n, 0, 8).unwrap();
            assert!(s.equal_up_to(&TruncatedSeries::one(8).unwrap(), 8).unwrap().is_equal());
        }

        // m > n yields the zero series by convention
        assert!(gauss_binomial::<Int>(3, 5, 8).unwrap().is_zero_window());
    }

    #[test]
    fn gauss_binomial_symmetry_and_degree() {
        for n in 0..=12u32 {
            for m in 0..=n {
                let deg = (m as i64) * ((n - m) as i64);
                let a = gauss_binomial::<Int>(n, m, deg.max(1)).unwrap();
                let b = gauss_binomial::<Int>(n, n - m, deg.max(1)).unwrap();
                assert!(a.equal_up_to(&b, deg).unwrap().is_equal(), "[{n} {m}]");
                for (e, c) in a.support() {
                    assert!(e <= deg, "degree bound violated for [{n} {m}]");
                    assert!(c > &int(0), "negative coefficient in [{n} {m}]");
                }
                assert_eq!(a.coeff_or_zero(deg), int(1), "top coefficient of [{n} {m}]");
            }
        }
    }

    #[test]
    fn jtheta_regroups_euler_product() {
        // j(q;q^3) = (q;q^3)(q^2;q^3)(q^3;q^3) = (q;q)_inf
        let lhs = jtheta::<Int>(q(1), 3, 30).unwrap();
        let rhs = poch_inf::<Int>(q(1), 1, 30).unwrap();
        assert!(lhs.equal_up_to(&rhs, 30).unwrap().is_equal());
    }

    #[test]
    fn jtheta_at_minus_one() {
        // j(-1;q) = 2(-q;q)_inf^2 (q;q)_inf
        let lhs = jtheta::<Int>(SignedMonomial::neg_one(), 1, 30).unwrap();
        let negq = poch_inf::<Int>(SignedMonomial::neg_q_pow(1), 1, 30).unwrap();
        let rhs = negq
            .mul(&negq)
            .mul(&poch_inf::<Int>(q(1), 1, 30).unwrap())
            .scaled(&int(2));
        assert!(lhs.equal_up_to(&rhs, 30).unwrap().is_equal());
    }

    #[test]
    fn jtheta_constant_terms_and_errors() {
        let s = jtheta::<Int>(q(4), 5, 20).unwrap();
        assert_eq!(s.coeff_or_zero(0), int(1));

        assert!(matches!(jtheta::<Int>(q(0), 1, 10), Err(Error::Domain(_))));
        assert!(matches!(jtheta::<Int>(q(5), 5, 10), Err(Error::Domain(_))));
        assert!(matches!(jtheta::<Int>(q(-10), 5, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn jtheta_quasi_periodicity() {
        // j(q^p z; q^p) = -z^{-1} j(z; q^p)
        for (z, p) in [(q(2), 5u32), (SignedMonomial::neg_q_pow(3), 5), (q(1), 3)] {
            let lhs = jtheta::<Int>(z.shift_q(p as i64), p, 25).unwrap();
            let r = jtheta::<Int>(z, p, 25 + z.q_exp).unwrap();
            let sign = if z.negative { 1 } else { -1 };
            let rhs = r.scaled(&int(sign)).shifted(-z.q_exp);
            let upto = lhs.trunc_order().min(rhs.trunc_order());
            assert!(
                lhs.equal_up_to(&rhs, upto).unwrap().is_equal(),
                "quasi-periodicity fails for z = {z}, p = {p}"
            );
        }
    }

    #[test]
    fn appell_lerch_basics() {
        // constant term of m(-q^2, q^5, q^4) is 1
        let m = appell_lerch(SignedMonomial::neg_q_pow(2), q(4), 5, 20).unwrap();
        assert_eq!(m.coeff_or_zero(0), Rat::from_int(1));

        // denominator exponent 5n - 2 never vanishes
        assert!(appell_lerch(SignedMonomial::neg_q_pow(1), q(2), 5, 10).is_ok());

        // x z = +q^5 has a genuine pole at n = 0
        let err = appell_lerch(q(2), q(3), 5, 10).unwrap_err();
        match err {
            Error::Domain(msg) => assert!(msg.contains("n = 0"), "pole message: {msg}"),
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn mock_theta_low_coefficients() {
        let x = mock_x::<Rat>(10).unwrap();
        assert_eq!(x.coeff_or_zero(0), Rat::from_int(1));
        assert_eq!(x.coeff_or_zero(1), Rat::from_int(-1));

        let chi = mock_chi::<Rat>(10).unwrap();
        assert_eq!(chi.coeff_or_zero(0), Rat::from_int(0));
        assert_eq!(chi.coeff_or_zero(1), Rat::from_int(1));
    }

    #[test]
    fn jacobi_bilateral_identity_valid_combinations() {
        // sum_n (-1)^n q^{p binom(n+1,2)} / (1 - z q^{pn})
        //   = (q^p;q^p)_inf^3 / j(z;q^p)
        let combos: [(SignedMonomial, u32); 4] = [
            (q(1), 5),
            (q(2), 5),
            (SignedMonomial::neg_q_pow(1), 5),
            (SignedMonomial::neg_q_pow(1), 1),
        ];
        for (z, p) in combos {
            let lhs = jacobi_bilateral_sum::<Rat>(z, p, 40).unwrap();
            let e = poch_inf::<Rat>(q(p as i64), p, 40 + 2).unwrap();
            let theta = jtheta::<Rat>(z, p, 40 + 2).unwrap();
            let rhs = e.mul(&e).mul(&e).mul(&theta.invert().unwrap());
            assert!(
                lhs.equal_up_to(&rhs, 40).unwrap().is_equal(),
                "bilateral identity fails for z = {z}, p = {p}"
            );
        }
    }

    #[test]
    fn jacobi_bilateral_degenerate_arguments() {
        // z = q^j with base 1 makes j(z;q) identically zero on the right
        // and puts a pole in the sum on the left
        assert!(matches!(
            jacobi_bilateral_sum::<Rat>(q(1), 1, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            jacobi_bilateral_sum::<Rat>(q(2), 1, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(jtheta::<Rat>(q(1), 1, 10), Err(Error::Domain(_))));
        assert!(matches!(jtheta::<Rat>(q(2), 1, 10), Err(Error::Domain(_))));
    }
}
