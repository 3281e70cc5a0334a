//! The identity registry: every verified identity as a pair of series
//! builders, each parameterized by the truncation order.

use std::time::Instant;

use num_traits::One;

use crate::counting::bilateral::{
    overline_prefactor, plain_tail_bilateral, plain_tail_unilateral, poch_int_inverse,
};
use crate::counting::{
    self, a_pochhammer, multisum_last_zero, nbark_multisum_series, plain_tail_multisum,
    z_geometric, Method, NbarKGf, Stat, ZaSeries,
};
use crate::error::{Error, Result};
use crate::identity::report::{Mismatch, Outcome, VerificationReport};
use crate::identity::ORDER_CEILING;
use crate::qobjects::{
    appell_lerch, bilateral_sum, clamp, euler_product, inv_one_minus, jacobi_bilateral_sum,
    jtheta, mock_chi, mock_x, neg_euler_product, poch_finite, poch_inf,
};
use crate::series::{Coeff, Int, MarkerPoly, Rat, SignedMonomial, TruncatedSeries};

type RatSeries = TruncatedSeries<Rat>;

/// Coefficient ring an identity is verified over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingKind {
    Integer,
    Rational,
}

/// Markers appearing in an identity's series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MarkerSet {
    None,
    Z,
    A,
    Za,
}

type RatBuilder = Box<dyn Fn(i64) -> Result<(RatSeries, RatSeries)> + Send + Sync>;
type MarkedBuilder = Box<dyn Fn(i64) -> Result<(ZaSeries, ZaSeries)> + Send + Sync>;

enum Builder {
    Rat(RatBuilder),
    Marked(MarkedBuilder),
}

/// One registered identity.
pub struct IdentityCase {
    pub id: &'static str,
    pub ring: RingKind,
    pub markers: MarkerSet,
    pub default_order: i64,
    /// Where the identity comes from in the literature, human-readable.
    pub source: &'static str,
    /// First compared exponent; `None` compares the whole known window.
    /// The crank case starts at 2: its generating function and the
    /// combinatorial crank legitimately differ at n = 1.
    pub compare_from: Option<i64>,
    builder: Builder,
}

impl IdentityCase {
    /// Expand both sides at `order` (default when `None`) and compare
    /// every coefficient, marker terms included.
    pub fn verify(&self, order: Option<i64>) -> Result<VerificationReport> {
        self.run(order, None)
    }

    /// Harness self-test: verify with the left side perturbed by
    /// `+q^fault_exp`, which must surface as a mismatch at exactly that
    /// exponent when the identity itself holds.
    pub fn verify_with_fault(
        &self,
        order: Option<i64>,
        fault_exp: i64,
    ) -> Result<VerificationReport> {
        self.run(order, Some(fault_exp))
    }

    fn run(&self, order: Option<i64>, fault: Option<i64>) -> Result<VerificationReport> {
        let order = order.unwrap_or(self.default_order);
        if !(1..=ORDER_CEILING).contains(&order) {
            return Err(Error::Usage(format!(
                "order must lie in [1, {ORDER_CEILING}], got {order}"
            )));
        }
        let start = Instant::now();
        let mismatch = match &self.builder {
            Builder::Rat(b) => {
                let (lhs, rhs) = b(order)?;
                compare(&fault_series(lhs, fault)?, &rhs, self.compare_from, order, scalar_diff)
            }
            Builder::Marked(b) => {
                let (lhs, rhs) = b(order)?;
                compare(&fault_series(lhs, fault)?, &rhs, self.compare_from, order, marked_diff)
            }
        };
        let ms = start.elapsed().as_millis();
        Ok(VerificationReport {
            id: self.id.to_string(),
            order,
            outcome: if mismatch.is_none() {
                Outcome::Equal
            } else {
                Outcome::Mismatch
            },
            mismatch,
            ms,
        })
    }
}

fn fault_series<C: Coeff>(
    lhs: TruncatedSeries<C>,
    fault: Option<i64>,
) -> Result<TruncatedSeries<C>> {
    match fault {
        None => Ok(lhs),
        Some(e) => {
            if e > lhs.trunc_order() {
                return Err(Error::Usage(format!(
                    "fault exponent {e} beyond truncation {}",
                    lhs.trunc_order()
                )));
            }
            Ok(lhs.add(&TruncatedSeries::monomial(C::one(), e, lhs.trunc_order())?))
        }
    }
}

fn compare<C: Coeff>(
    lhs: &TruncatedSeries<C>,
    rhs: &TruncatedSeries<C>,
    compare_from: Option<i64>,
    order: i64,
    diff: impl Fn(i64, &C, &C) -> Mismatch,
) -> Option<Mismatch> {
    assert!(
        lhs.trunc_order() >= order && rhs.trunc_order() >= order,
        "builder returned a series short of the requested order"
    );
    let start = compare_from.unwrap_or_else(|| lhs.min_order().min(rhs.min_order()));
    for e in start..=order {
        let l = lhs.coeff_or_zero(e);
        let r = rhs.coeff_or_zero(e);
        if l != r {
            return Some(diff(e, &l, &r));
        }
    }
    None
}

fn scalar_diff<C: Coeff>(e: i64, l: &C, r: &C) -> Mismatch {
    Mismatch {
        q_exp: e,
        z_exp: None,
        a_exp: None,
        lhs: l.to_string(),
        rhs: r.to_string(),
    }
}

fn marked_diff(e: i64, l: &MarkerPoly<Int>, r: &MarkerPoly<Int>) -> Mismatch {
    let mut keys: Vec<(i64, i64)> = l.terms().chain(r.terms()).map(|(&k, _)| k).collect();
    keys.sort_unstable();
    keys.dedup();
    for (z, a) in keys {
        let lc = l.coeff(z, a);
        let rc = r.coeff(z, a);
        if lc != rc {
            return Mismatch {
                q_exp: e,
                z_exp: Some(z),
                a_exp: Some(a),
                lhs: lc.to_string(),
                rhs: rc.to_string(),
            };
        }
    }
    unreachable!("polynomials differ but no differing term found")
}

// ---------------------------------------------------------------------------
// shared builders
// ---------------------------------------------------------------------------

/// Assemble `sum z^m a^j T(n, m, j) q^n` from a rank table.
fn table_to_series(table: &counting::RankTable, order: i64) -> ZaSeries {
    let mut polys: std::collections::BTreeMap<u32, MarkerPoly<Int>> =
        std::collections::BTreeMap::new();
    for (&(n, m, j), &c) in table.entries() {
        if (n as i64) <= order {
            let slot = polys.entry(n).or_default();
            *slot = std::mem::take(slot) + MarkerPoly::monomial(m, j as i64, Int::from(c));
        }
    }
    let mut total = TruncatedSeries::zero(order);
    for (n, poly) in polys {
        total = total.add(&TruncatedSeries::monomial(poly, n as i64, order).expect("n <= order"));
    }
    total
}

/// Pair a generating-function table against an enumeration table as
/// marked series.
fn table_pair(
    stat: Stat,
    k: Option<u32>,
    order: i64,
) -> Result<(ZaSeries, ZaSeries)> {
    let gf = counting::rank_table(stat, Method::Gf, k, order as u32)?;
    let en = counting::rank_table(stat, Method::Enum, k, order as u32)?;
    Ok((table_to_series(&gf, order), table_to_series(&en, order)))
}

/// `sum_m z^m` times the k-bar-rank generating function in `a`.
fn nbark_gf_bivariate(k: u32, order: i64) -> Result<ZaSeries> {
    let builder = NbarKGf::new(k, order)?;
    let mut total = TruncatedSeries::zero(order);
    for m in 0..=order {
        let s = builder.gf_m(m);
        if s.is_zero_window() && m > 0 {
            break;
        }
        total = total.add(&s.convert(|p| p.mul_monomial(m, 0, &Int::one())));
        if m > 0 {
            total = total.add(&s.convert(|p| p.mul_monomial(-m, 0, &Int::one())));
        }
    }
    Ok(total)
}

/// Left side of the k-fold specialization: `1 + sum_{n>=1}
/// (-1)^n a^n (-1/a;q)_n q^{(k-1)n^2+n} (1+q^n)(1-z)(1-z^{-1})
/// / [(-aq;q)_n (1-zq^n)(1-z^{-1}q^n)]`.
fn kfold1_lhs(k: u32, order: i64) -> Result<ZaSeries> {
    let mut total = TruncatedSeries::one(order)?;
    let k1 = k as i64 - 1;
    let mut n = 1i64;
    while k1 * n * n + n <= order {
        let e = k1 * n * n + n;
        let inner = order - e;
        let num = poch_finite::<MarkerPoly<Int>>(SignedMonomial::neg_inv_a(), n as u32, 1, inner)?;
        let den_inv =
            poch_int_inverse::<MarkerPoly<Int>>(SignedMonomial::neg_a_q(), n, 1, inner)?;
        let mut one_plus = TruncatedSeries::one(inner)?;
        if n <= inner {
            one_plus = one_plus.add(
                &TruncatedSeries::monomial(MarkerPoly::one(), n, inner).expect("in range"),
            );
        }
        // (1-z)(1-1/z) = 2 - z - 1/z
        let zpoly = MarkerPoly::constant(Int::from(2))
            + MarkerPoly::monomial(1, 0, Int::from(-1))
            + MarkerPoly::monomial(-1, 0, Int::from(-1));
        let zconst = TruncatedSeries::monomial(zpoly, 0, inner)?;
        let gz = z_geometric(1, n, inner);
        let gzi = z_geometric(-1, n, inner);
        let sign = if n % 2 == 1 { -1 } else { 1 };
        let marker = MarkerPoly::monomial(0, n, Int::from(sign));
        let term = num
            .mul(&den_inv)
            .mul(&one_plus)
            .mul(&zconst)
            .mul(&gz)
            .mul(&gzi)
            .scaled(&marker)
            .shifted(e);
        total = total.add(&term.truncated(order));
        n += 1;
    }
    Ok(total)
}

/// Right side of the k-fold specialization: the `(k-1)`-fold sum over
/// independent indices `m_1, ..., m_{k-1} >= 0` with prefactor
/// `(q;q)_inf / (-aq;q)_inf`.
fn kfold1_rhs(k: u32, order: i64) -> Result<ZaSeries> {
    let r = (k - 1) as usize;
    let prefactor = euler_product::<MarkerPoly<Int>>(order)?
        .mul(&poch_inf::<MarkerPoly<Int>>(SignedMonomial::neg_a_q(), 1, order)?.invert()?);

    // inv (q;q)_j caches: each factor 1/(1-q^j) is a geometric series
    let mut m_max = 0u32;
    while ((m_max as i64 + 1) * (m_max as i64 + 2)) / 2 <= order {
        m_max += 1;
    }
    let mut inv_q: Vec<ZaSeries> = vec![TruncatedSeries::one(order)?];
    for j in 1..=m_max as i64 {
        let mut g = TruncatedSeries::zero(order);
        let mut e = 0i64;
        while e <= order {
            g = g.add(&TruncatedSeries::monomial(MarkerPoly::one(), e, order).expect("in range"));
            e += j;
        }
        inv_q.push(inv_q[(j - 1) as usize].mul(&g).truncated(order));
    }
    let mut a_poch: Vec<ZaSeries> = Vec::new();
    for big_m in 0..=m_max {
        a_poch.push(a_pochhammer(big_m, order)?);
    }

    // buckets indexed by m_1, which carries the z factors
    let mut buckets: Vec<ZaSeries> = (0..=m_max as usize)
        .map(|_| TruncatedSeries::zero(order))
        .collect();
    // enumerate (m_1, ..., m_{k-1}); exponent = binom(M+1,2) + sum of
    // squared prefix sums s_1^2 .. s_{k-2}^2
    let mut tuple = vec![0u32; r];
    enumerate_tuples(&mut tuple, 0, m_max, order, &mut |tuple| {
        let m1 = tuple[0];
        let total_m: u32 = tuple.iter().sum();
        let mut exp = (total_m as i64) * (total_m as i64 + 1) / 2;
        let mut prefix = 0i64;
        for (i, &mi) in tuple.iter().enumerate() {
            if i < r - 1 {
                prefix += mi as i64;
                exp += prefix * prefix;
            }
        }
        if exp > order || total_m > m_max {
            return;
        }
        let mut term = a_poch[total_m as usize].truncated(order - exp);
        for &mi in &tuple[1..] {
            term = term.mul(&inv_q[mi as usize]).truncated(order - exp);
        }
        buckets[m1 as usize] = buckets[m1 as usize].add(&term.shifted(exp));
    });

    let mut total = TruncatedSeries::zero(order);
    let mut zfactors = TruncatedSeries::one(order)?;
    for (d, bucket) in buckets.iter().enumerate() {
        if d > 0 {
            zfactors = zfactors
                .mul(&z_geometric(1, d as i64, order))
                .truncated(order)
                .mul(&z_geometric(-1, d as i64, order))
                .truncated(order);
        }
        if !bucket.is_zero_window() {
            total = total.add(&bucket.mul(&zfactors).truncated(order));
        }
    }
    Ok(prefactor.mul(&total).truncated(order))
}

fn enumerate_tuples(
    tuple: &mut Vec<u32>,
    level: usize,
    max: u32,
    order: i64,
    visit: &mut impl FnMut(&[u32]),
) {
    if level == tuple.len() {
        visit(tuple);
        return;
    }
    for v in 0..=max {
        tuple[level] = v;
        // cheap prune: the total alone already bounds the exponent
        let total: u32 = tuple[..=level].iter().sum();
        if (total as i64) * (total as i64 + 1) / 2 > order {
            break;
        }
        enumerate_tuples(tuple, level + 1, max, order, visit);
    }
    tuple[level] = 0;
}

/// Garvan's partial-fraction lemma at a fixed `n`, bivariate in `z`.
fn garvan36_pair(n: i64, order: i64) -> Result<(ZaSeries, ZaSeries)> {
    // q^n (1-z)(1-1/z) / ((1-zq^n)(1-q^n/z)); invisible when n > order
    let lhs = if n > order {
        TruncatedSeries::zero(order)
    } else {
        let inner = order - n;
        let zpoly = MarkerPoly::constant(Int::from(2))
            + MarkerPoly::monomial(1, 0, Int::from(-1))
            + MarkerPoly::monomial(-1, 0, Int::from(-1));
        TruncatedSeries::monomial(zpoly, 0, inner)?
            .mul(&z_geometric(1, n, inner))
            .mul(&z_geometric(-1, n, inner))
            .shifted(n)
            .truncated(order)
    };

    // 1 - (1-q^n)/(1+q^n) * (sum_{m>=0} z^m q^{mn} + sum_{m>=1} z^-m q^{mn})
    let mut one_minus_qn = TruncatedSeries::one(order)?;
    if n <= order {
        one_minus_qn = one_minus_qn.sub(&TruncatedSeries::monomial(MarkerPoly::one(), n, order)?);
    }
    let g = one_minus_qn
        .mul(&inv_one_minus::<MarkerPoly<Int>>(true, n, order)?)
        .truncated(order);
    let pos = z_geometric(1, n, order);
    let neg = z_geometric(-1, n, order).sub(&TruncatedSeries::one(order)?);
    let rhs = TruncatedSeries::one(order)?
        .sub(&g.mul(&pos).truncated(order))
        .sub(&g.mul(&neg).truncated(order));
    Ok((lhs, rhs))
}

// ---------------------------------------------------------------------------
// rational-side builders (the mock theta chain)
// ---------------------------------------------------------------------------

/// `prod(nums) / prod(dens)`, padded so the result is exact to `order`.
fn rat_ratio(
    order: i64,
    nums: &[&dyn Fn(i64) -> Result<RatSeries>],
    dens: &[&dyn Fn(i64) -> Result<RatSeries>],
) -> Result<RatSeries> {
    let mut pad = 2i64;
    for f in nums.iter().chain(dens.iter()) {
        let probe = f(order.max(0))?;
        let v = probe.valuation().ok_or_else(|| {
            Error::Domain("ratio factor vanishes through the working order".into())
        })?;
        pad += 2 * v.abs();
    }
    let p = order + pad;
    let mut acc = TruncatedSeries::one(p)?;
    for f in nums {
        acc = acc.mul(&f(p)?);
    }
    for f in dens {
        acc = acc.mul(&f(p)?.invert()?);
    }
    assert!(acc.trunc_order() >= order, "ratio padding too small");
    Ok(clamp(acc, order))
}

/// `2 (-q;q)_inf / (q;q)_inf` over the rationals.
fn pref2(order: i64) -> Result<RatSeries> {
    Ok(neg_euler_product::<Rat>(order)?
        .mul(&euler_product::<Rat>(order)?.invert()?)
        .scaled(&Rat::from_int(2))
        .truncated(order))
}

/// The double sum `sum_{n1>=n2>=0} (-1;q)_{n1} q^{binom(n1+1,2)+n2^2}
/// / ((q;q)_{n1-n2} (q^2;q^2)_{n2})`: both the self-3-conjugate
/// specialization at `a = 1` and the left side of the mock theta
/// decomposition.
fn skcon3_a1_multisum(order: i64) -> Result<RatSeries> {
    let mut n1_max = 0i64;
    while (n1_max + 1) * (n1_max + 2) / 2 <= order {
        n1_max += 1;
    }
    let mut inv_q: Vec<RatSeries> = vec![TruncatedSeries::one(order)?];
    let mut inv_q2: Vec<RatSeries> = vec![TruncatedSeries::one(order)?];
    for j in 1..=n1_max {
        inv_q.push(
            inv_q[(j - 1) as usize]
                .mul(&inv_one_minus::<Rat>(false, j, order)?)
                .truncated(order),
        );
        inv_q2.push(
            inv_q2[(j - 1) as usize]
                .mul(&inv_one_minus::<Rat>(false, 2 * j, order)?)
                .truncated(order),
        );
    }
    let mut total = TruncatedSeries::zero(order);
    for n1 in 0..=n1_max {
        let base = n1 * (n1 + 1) / 2;
        let poch = poch_finite::<Rat>(SignedMonomial::neg_one(), n1 as u32, 1, order - base)?;
        for n2 in 0..=n1 {
            let e = base + n2 * n2;
            if e > order {
                break;
            }
            let term = poch
                .truncated(order - e)
                .mul(&inv_q[(n1 - n2) as usize])
                .mul(&inv_q2[n2 as usize])
                .truncated(order - e)
                .shifted(e);
            total = total.add(&term);
        }
    }
    Ok(total)
}

/// `sum_n (-1)^n q^{e(n)} / (1 + q^{d(n)})` with exact valuation bounds.
fn one_plus_bilateral(
    order: i64,
    e: impl Fn(i64) -> i64,
    d: impl Fn(i64) -> i64,
) -> Result<RatSeries> {
    let val = |n: i64| e(n) + (-d(n)).max(0);
    bilateral_sum(order, val, |n, target| {
        let en = e(n);
        let sign = if n.rem_euclid(2) == 1 { -1 } else { 1 };
        let den = inv_one_minus::<Rat>(true, d(n), target - en)?;
        Ok(den.scaled(&Rat::from_int(sign)).shifted(en))
    })
}

/// The dissected bilateral: numerator `1 - q^n + q^{2n} - q^{3n} + q^{4n}`
/// against denominator `1 + q^{5n}`.
fn dissected_bilateral(order: i64) -> Result<RatSeries> {
    let e = |n: i64| 5 * n * (n - 1) / 2 + 3 * n;
    // for n < 0 the numerator contributes valuation 4n and the
    // denominator expansion |5n|, a net shift of -n
    let val = |n: i64| if n < 0 { e(n) - n } else { e(n) };
    bilateral_sum(order, val, |n, target| {
        let en = e(n);
        let pad = if n < 0 { -4 * n } else { 0 };
        let inner = target - en + pad;
        let mut numer = TruncatedSeries::zero(inner.max(0));
        for t in 0..5i64 {
            let exp = t * n;
            if exp <= numer.trunc_order() {
                let sign = if t % 2 == 1 { -1 } else { 1 };
                numer = numer.add(&TruncatedSeries::monomial(Rat::from_int(sign), exp, inner)?);
            }
        }
        let den = inv_one_minus::<Rat>(true, 5 * n, inner)?;
        let sign = if n.rem_euclid(2) == 1 { -1 } else { 1 };
        Ok(numer
            .mul(&den)
            .scaled(&Rat::from_int(sign))
            .shifted(en))
    })
}

/// The three-sum combination that the dissection collapses to.
fn three_sum_combination(order: i64) -> Result<RatSeries> {
    let b3 = one_plus_bilateral(order, |n| 5 * n * (n - 1) / 2 + 3 * n, |n| 5 * n)?;
    let b4 = one_plus_bilateral(order, |n| 5 * n * (n - 1) / 2 + 4 * n, |n| 5 * n)?;
    let bt = one_plus_bilateral(order, |n| 5 * n * (n + 1) / 2, |n| 5 * n)?;
    Ok(b3
        .scaled(&Rat::from_int(2))
        .sub(&b4.scaled(&Rat::from_int(2)))
        .add(&bt))
}

/// The Appell-Lerch form closing the chain:
/// `2 j(q^3;q^5) m(-q^2,q^5,q^3) - 2 j(q^4;q^5) m(-q,q^5,q^4)
///  + (q^5;q^5)_inf^3 / j(-1;q^5)`.
fn appell_lerch_combination(order: i64) -> Result<RatSeries> {
    let q = SignedMonomial::q_pow;
    let j3 = jtheta::<Rat>(q(3), 5, order)?;
    let m3 = appell_lerch(SignedMonomial::neg_q_pow(2), q(3), 5, order)?;
    let j4 = jtheta::<Rat>(q(4), 5, order)?;
    let m4 = appell_lerch(SignedMonomial::neg_q_pow(1), q(4), 5, order)?;
    let e5cubed = |o: i64| -> Result<RatSeries> {
        let e = poch_inf::<Rat>(q(5), 5, o)?;
        Ok(e.mul(&e).mul(&e).truncated(o))
    };
    let jm1 = |o: i64| jtheta::<Rat>(SignedMonomial::neg_one(), 5, o);
    let tail = rat_ratio(order, &[&e5cubed], &[&jm1])?;
    Ok(j3
        .mul(&m3)
        .scaled(&Rat::from_int(2))
        .truncated(order)
        .sub(&j4.mul(&m4).scaled(&Rat::from_int(2)).truncated(order))
        .add(&tail))
}

/// Right side of the mock theta decomposition.
fn eqmock_rhs(order: i64) -> Result<RatSeries> {
    let q = SignedMonomial::q_pow;
    let neg_euler = neg_euler_product::<Rat>(order)?;
    let x_part = neg_euler
        .mul(&mock_x::<Rat>(order)?)
        .mul(&poch_inf::<Rat>(q(1), 5, order)?.invert()?)
        .mul(&poch_inf::<Rat>(q(4), 5, order)?.invert()?)
        .scaled(&Rat::from_int(2))
        .truncated(order);
    let chi_part = neg_euler
        .mul(&mock_chi::<Rat>(order)?)
        .mul(&poch_inf::<Rat>(q(2), 5, order)?.invert()?)
        .mul(&poch_inf::<Rat>(q(3), 5, order)?.invert()?)
        .scaled(&Rat::from_int(2))
        .truncated(order);
    let last = euler_product::<Rat>(order)?
        .mul(&neg_euler.invert()?)
        .truncated(order);
    Ok(x_part.sub(&chi_part).sub(&last))
}

/// The bracketed theta combination and its closed product form.
fn bracket_pair(order: i64) -> Result<(RatSeries, RatSeries)> {
    let q = SignedMonomial::q_pow;
    let j = |z: SignedMonomial, p: u32| move |o: i64| jtheta::<Rat>(z, p, o);
    let first = rat_ratio(
        order,
        &[&j(q(3), 5), &j(q(3), 10), &j(q(5), 10)],
        &[&j(q(1), 5)],
    )?;
    let second = rat_ratio(
        order - 1,
        &[&j(q(4), 5), &j(q(1), 10), &j(q(5), 10)],
        &[&j(q(2), 5)],
    )?
    .shifted(1);
    let e5cubed = |o: i64| -> Result<RatSeries> {
        let e = poch_inf::<Rat>(q(5), 5, o)?;
        Ok(e.mul(&e).mul(&e).truncated(o))
    };
    let jm1 = |o: i64| jtheta::<Rat>(SignedMonomial::neg_one(), 5, o);
    let third = rat_ratio(order, &[&e5cubed], &[&jm1])?.scaled(&Rat::from_int(3));
    let lhs = first.add(&second).sub(&third);

    // -(q;q)_inf^2 / (2 (-q;q)_inf^2)
    let euler = euler_product::<Rat>(order)?;
    let neg = neg_euler_product::<Rat>(order)?;
    let rhs = euler
        .mul(&euler)
        .mul(&neg.mul(&neg).invert()?)
        .scaled(&(-Rat::from_int(2).recip()))
        .truncated(order);
    Ok((lhs, rhs))
}

fn mmtrans_pair(
    x: SignedMonomial,
    p: u32,
    z0: SignedMonomial,
    z1: SignedMonomial,
    order: i64,
) -> Result<(RatSeries, RatSeries)> {
    let lhs = appell_lerch(x, z1, p, order)?.sub(&appell_lerch(x, z0, p, order)?);
    let pi = p as i64;
    let ecubed = move |o: i64| -> Result<RatSeries> {
        let e = poch_inf::<Rat>(SignedMonomial::q_pow(pi), p, o)?;
        Ok(e.mul(&e).mul(&e).truncated(o))
    };
    let j = |z: SignedMonomial| move |o: i64| jtheta::<Rat>(z, p, o);
    let z1z0 = z1.times(z0.inverse());
    let xz0z1 = x.times(z0).times(z1);
    let xz0 = x.times(z0);
    let xz1 = x.times(z1);
    let ratio = rat_ratio(
        order - z0.q_exp,
        &[&ecubed, &j(z1z0), &j(xz0z1)],
        &[&j(z0), &j(z1), &j(xz0), &j(xz1)],
    )?;
    let sign = if z0.negative { -1 } else { 1 };
    let rhs = ratio.scaled(&Rat::from_int(sign)).shifted(z0.q_exp);
    Ok((lhs, rhs.truncated(order)))
}

fn mdif_pair(
    x: SignedMonomial,
    z0: SignedMonomial,
    z1: SignedMonomial,
    negate: bool,
    order: i64,
) -> Result<(RatSeries, RatSeries)> {
    let lhs = appell_lerch(x, z0, 5, order)?.sub(&appell_lerch(x, z1, 5, order)?);
    let q = SignedMonomial::q_pow;
    let ecubed = |o: i64| -> Result<RatSeries> {
        let e = poch_inf::<Rat>(q(5), 5, o)?;
        Ok(e.mul(&e).mul(&e).truncated(o))
    };
    let jz0 = |o: i64| jtheta::<Rat>(z0, 5, o);
    let jneg = |o: i64| jtheta::<Rat>(SignedMonomial::neg_q_pow(5), 5, o);
    let ratio = rat_ratio(order, &[&ecubed], &[&jz0, &jneg])?;
    let rhs = if negate { ratio.negated() } else { ratio };
    Ok((lhs, rhs))
}

fn tenord_x_pair(order: i64) -> Result<(RatSeries, RatSeries)> {
    let q = SignedMonomial::q_pow;
    let lhs = mock_x::<Rat>(order)?;
    let m = appell_lerch(SignedMonomial::neg_q_pow(2), q(4), 5, order)?;
    let j = |z: SignedMonomial, p: u32| move |o: i64| jtheta::<Rat>(z, p, o);
    let quot = rat_ratio(order, &[&j(q(3), 10), &j(q(5), 10)], &[&j(q(1), 5)])?;
    Ok((lhs, m.scaled(&Rat::from_int(2)).sub(&quot)))
}

fn tenord_chi_pair(order: i64) -> Result<(RatSeries, RatSeries)> {
    let q = SignedMonomial::q_pow;
    let lhs = mock_chi::<Rat>(order)?;
    let m = appell_lerch(SignedMonomial::neg_q_pow(1), q(2), 5, order)?;
    let j = |z: SignedMonomial, p: u32| move |o: i64| jtheta::<Rat>(z, p, o);
    let quot = rat_ratio(order - 1, &[&j(q(1), 10), &j(q(5), 10)], &[&j(q(2), 5)])?.shifted(1);
    Ok((lhs, m.scaled(&Rat::from_int(2)).add(&quot).truncated(order)))
}

// ---------------------------------------------------------------------------
// the registry
// ---------------------------------------------------------------------------

fn case_marked(
    id: &'static str,
    markers: MarkerSet,
    default_order: i64,
    source: &'static str,
    compare_from: Option<i64>,
    builder: MarkedBuilder,
) -> IdentityCase {
    IdentityCase {
        id,
        ring: RingKind::Integer,
        markers,
        default_order,
        source,
        compare_from,
        builder: Builder::Marked(builder),
    }
}

fn case_rat(
    id: &'static str,
    default_order: i64,
    source: &'static str,
    builder: RatBuilder,
) -> IdentityCase {
    IdentityCase {
        id,
        ring: RingKind::Rational,
        markers: MarkerSet::None,
        default_order,
        source,
        compare_from: None,
        builder: Builder::Rat(builder),
    }
}

/// The full fixed registry.
pub fn registry() -> Vec<IdentityCase> {
    let mut cases: Vec<IdentityCase> = Vec::new();

    cases.push(case_marked(
        "dyson-rank-gf",
        MarkerSet::Z,
        40,
        "Dyson's rank generating function against direct enumeration",
        None,
        Box::new(|o| table_pair(Stat::N, None, o)),
    ));
    cases.push(case_marked(
        "crank-gf",
        MarkerSet::Z,
        40,
        "Andrews-Garvan crank generating function against enumeration (n >= 2; the n = 1 row is the classical anomaly)",
        Some(2),
        Box::new(|o| table_pair(Stat::M, None, o)),
    ));
    for k in 2..=5u32 {
        let id: &'static str = match k {
            2 => "nk-gf-k2",
            3 => "nk-gf-k3",
            4 => "nk-gf-k4",
            _ => "nk-gf-k5",
        };
        cases.push(case_marked(
            id,
            MarkerSet::Z,
            25,
            "Garvan k-rank generating function against Durfee-dissection enumeration",
            None,
            Box::new(move |o| table_pair(Stat::Nk, Some(k), o)),
        ));
    }
    cases.push(case_marked(
        "op2-gf",
        MarkerSet::Z,
        20,
        "Lovejoy's D-rank generating function against enumeration",
        None,
        Box::new(|o| table_pair(Stat::Nbar, None, o)),
    ));
    for k in 2..=4u32 {
        let id: &'static str = match k {
            2 => "kgen-vs-multisum-k2",
            3 => "kgen-vs-multisum-k3",
            _ => "kgen-vs-multisum-k4",
        };
        cases.push(case_marked(
            id,
            MarkerSet::Za,
            40,
            "k-bar rank generating function against its graded multiple sum",
            None,
            Box::new(move |o| {
                Ok((nbark_gf_bivariate(k, o)?, nbark_multisum_series(k, o)?))
            }),
        ));
    }
    for k in [3u32, 4] {
        let id: &'static str = if k == 3 { "kfold1-k3" } else { "kfold1-k4" };
        cases.push(case_marked(
            id,
            MarkerSet::Za,
            30,
            "specialized multiple-series transformation, raw form",
            None,
            Box::new(move |o| Ok((kfold1_lhs(k, o)?, kfold1_rhs(k, o)?))),
        ));
        let id2: &'static str = if k == 3 { "kfold2-k3" } else { "kfold2-k4" };
        cases.push(case_marked(
            id2,
            MarkerSet::Za,
            30,
            "specialized multiple-series transformation, prefactored and reindexed",
            None,
            Box::new(move |o| {
                let lhs = overline_prefactor(o)?.mul(&kfold1_lhs(k, o)?).truncated(o);
                Ok((lhs, multisum_last_zero(k, o)?))
            }),
        ));
        let id4: &'static str = if k == 3 { "kfold4-k3" } else { "kfold4-k4" };
        cases.push(case_marked(
            id4,
            MarkerSet::A,
            30,
            "unilateral-to-multisum collapse of the zero-tail part",
            None,
            Box::new(move |o| {
                let lhs = overline_prefactor(o)?
                    .mul(&plain_tail_unilateral(k - 1, o)?)
                    .truncated(o);
                Ok((lhs, plain_tail_multisum((k - 2) as usize, o)?))
            }),
        ));
    }
    for n in 1..=8i64 {
        let id: &'static str = match n {
            1 => "garvan-lemma36-n1",
            2 => "garvan-lemma36-n2",
            3 => "garvan-lemma36-n3",
            4 => "garvan-lemma36-n4",
            5 => "garvan-lemma36-n5",
            6 => "garvan-lemma36-n6",
            7 => "garvan-lemma36-n7",
            _ => "garvan-lemma36-n8",
        };
        cases.push(case_marked(
            id,
            MarkerSet::Z,
            30,
            "Garvan's partial-fraction expansion of the rank kernel",
            None,
            Box::new(move |o| garvan36_pair(n, o)),
        ));
    }
    for kappa in [2u32, 3] {
        let id: &'static str = if kappa == 2 {
            "corteel-mallet-spec-k2"
        } else {
            "corteel-mallet-spec-k3"
        };
        cases.push(case_marked(
            id,
            MarkerSet::A,
            30,
            "Corteel-Mallet bilateral-to-multisum identity, specialized",
            None,
            Box::new(move |o| {
                Ok((
                    plain_tail_bilateral(kappa, o)?,
                    plain_tail_multisum((kappa - 1) as usize, o)?,
                ))
            }),
        ));
    }
    for k in 2..=4u32 {
        let id: &'static str = match k {
            2 => "skcon-k2",
            3 => "skcon-k3",
            _ => "skcon-k4",
        };
        cases.push(case_marked(
            id,
            MarkerSet::A,
            40,
            "Corteel-Lovejoy-Mallet self-k-conjugate generating identity",
            None,
            Box::new(move |o| {
                Ok((
                    counting::self_conjugate_series(k, counting::SkconSide::Lhs, o)?,
                    counting::self_conjugate_series(k, counting::SkconSide::Rhs, o)?,
                ))
            }),
        ));
    }

    cases.push(case_rat(
        "twocm1-step1",
        60,
        "self-3-conjugate multiple sum as a bilateral sum",
        Box::new(|o| {
            let lhs = skcon3_a1_multisum(o)?;
            let bil = one_plus_bilateral(o, |n| 5 * n * (n - 1) / 2 + 3 * n, |n| n)?;
            Ok((lhs, pref2(o)?.mul(&bil).truncated(o)))
        }),
    ));
    cases.push(case_rat(
        "twocm1-step2",
        60,
        "geometric five-term dissection of the bilateral denominator",
        Box::new(|o| {
            let bil = one_plus_bilateral(o, |n| 5 * n * (n - 1) / 2 + 3 * n, |n| n)?;
            let dis = dissected_bilateral(o)?;
            let p = pref2(o)?;
            Ok((p.mul(&bil).truncated(o), p.mul(&dis).truncated(o)))
        }),
    ));
    cases.push(case_rat(
        "twocm1-step3",
        60,
        "three-sum combination expressed through Appell-Lerch sums",
        Box::new(|o| {
            let p = pref2(o)?;
            let lhs = p.mul(&three_sum_combination(o)?).truncated(o);
            let rhs = p.mul(&appell_lerch_combination(o)?).truncated(o);
            Ok((lhs, rhs))
        }),
    ));
    cases.push(case_rat(
        "jacobi-bilateral",
        60,
        "partial-fraction expansion of the theta quotient (q^5;q^5)^3 / j(z;q^5) at z = q",
        Box::new(|o| {
            let lhs = jacobi_bilateral_sum::<Rat>(SignedMonomial::q_pow(1), 5, o)?;
            let q = SignedMonomial::q_pow;
            let ecubed = |t: i64| -> Result<RatSeries> {
                let e = poch_inf::<Rat>(q(5), 5, t)?;
                Ok(e.mul(&e).mul(&e).truncated(t))
            };
            let jq = |t: i64| jtheta::<Rat>(q(1), 5, t);
            Ok((lhs, rat_ratio(o, &[&ecubed], &[&jq])?))
        }),
    ));
    cases.push(case_rat(
        "tenord-x",
        60,
        "tenth-order mock theta X(q) as an Appell-Lerch sum plus theta quotient",
        Box::new(tenord_x_pair),
    ));
    cases.push(case_rat(
        "tenord-chi",
        60,
        "tenth-order mock theta chi(q) as an Appell-Lerch sum plus theta quotient",
        Box::new(tenord_chi_pair),
    ));
    cases.push(case_rat(
        "mmtrans-inst1",
        60,
        "Appell-Lerch change-of-z transformation at (x, p, z0, z1) = (-q^2, 5, q^3, q^4)",
        Box::new(|o| {
            mmtrans_pair(
                SignedMonomial::neg_q_pow(2),
                5,
                SignedMonomial::q_pow(3),
                SignedMonomial::q_pow(4),
                o,
            )
        }),
    ));
    cases.push(case_rat(
        "mmtrans-inst2",
        60,
        "Appell-Lerch change-of-z transformation at (x, p, z0, z1) = (-q, 5, q^2, q^4)",
        Box::new(|o| {
            mmtrans_pair(
                SignedMonomial::neg_q_pow(1),
                5,
                SignedMonomial::q_pow(2),
                SignedMonomial::q_pow(4),
                o,
            )
        }),
    ));
    cases.push(case_rat(
        "mmtrans-inst3",
        60,
        "Appell-Lerch change-of-z transformation at (x, p, z0, z1) = (-q^3, 7, q, q^2)",
        Box::new(|o| {
            mmtrans_pair(
                SignedMonomial::neg_q_pow(3),
                7,
                SignedMonomial::q_pow(1),
                SignedMonomial::q_pow(2),
                o,
            )
        }),
    ));
    cases.push(case_rat(
        "mdif1",
        60,
        "Appell-Lerch difference m(-q^2,q^5,q^3) - m(-q^2,q^5,q^4) in closed form",
        Box::new(|o| {
            mdif_pair(
                SignedMonomial::neg_q_pow(2),
                SignedMonomial::q_pow(3),
                SignedMonomial::q_pow(4),
                true,
                o,
            )
        }),
    ));
    cases.push(case_rat(
        "mdif2",
        60,
        "Appell-Lerch difference m(-q,q^5,q^4) - m(-q,q^5,q^2) in closed form",
        Box::new(|o| {
            mdif_pair(
                SignedMonomial::neg_q_pow(1),
                SignedMonomial::q_pow(4),
                SignedMonomial::q_pow(2),
                false,
                o,
            )
        }),
    ));
    cases.push(case_rat(
        "eqmock",
        60,
        "self-3-conjugate series against the tenth-order mock theta decomposition",
        Box::new(|o| Ok((skcon3_a1_multisum(o)?, eqmock_rhs(o)?))),
    ));
    cases.push(case_rat(
        "bracket-modular",
        60,
        "closed product form of the residual theta bracket",
        Box::new(bracket_pair),
    ));

    cases
}

/// The five-term dissection collapses to the three-sum combination,
/// linking the two registered steps.
#[cfg(test)]
pub(crate) fn dissection_collapse_pair(order: i64) -> Result<(RatSeries, RatSeries)> {
    Ok((dissected_bilateral(order)?, three_sum_combination(order)?))
}
