//! Exact truncated Laurent series in `q`.
//!
//! A [`TruncatedSeries`] stores a dense window of coefficients for the
//! exponents `min_order ..= trunc_order`. Coefficients above `trunc_order`
//! are unknown, not zero; coefficients below `min_order` are zero by
//! construction (every builder in this crate starts the window at or below
//! the true valuation). Every operation computes the largest result order
//! that is provably correct from its inputs, so precision loss is always
//! explicit in the `trunc_order` field.
//!
//! Coefficients live in a ring implementing [`Coeff`]: exact big integers,
//! exact rationals, or sparse marker polynomials over either.

mod coeff;
mod marker;
mod monomial;

pub use coeff::{Coeff, Int, Rat};
pub use marker::MarkerPoly;
pub use monomial::SignedMonomial;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exact Laurent series in `q`, truncated at a stated order.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coeff> {
    min_order: i64,
    trunc_order: i64,
    coeffs: Vec<C>,
}

/// Outcome of [`TruncatedSeries::equal_up_to`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesCmp<C> {
    Equal,
    Mismatch { exponent: i64, lhs: C, rhs: C },
}

impl<C> SeriesCmp<C> {
    pub fn is_equal(&self) -> bool {
        matches!(self, SeriesCmp::Equal)
    }
}

impl<C: Coeff> TruncatedSeries<C> {
    fn from_window(min_order: i64, trunc_order: i64, coeffs: Vec<C>) -> Self {
        debug_assert!(min_order <= trunc_order);
        debug_assert_eq!(coeffs.len() as i64, trunc_order - min_order + 1);
        TruncatedSeries {
            min_order,
            trunc_order,
            coeffs,
        }
    }

    /// The zero series known up to `trunc` (window starts at 0).
    pub fn zero(trunc: i64) -> Self {
        let min = trunc.min(0);
        let len = (trunc - min + 1) as usize;
        Self::from_window(min, trunc, vec![C::zero(); len])
    }

    /// The constant series 1 known up to `trunc`.
    pub fn one(trunc: i64) -> Result<Self> {
        Self::monomial(C::one(), 0, trunc)
    }

    /// Dense construction: coefficients for `min_order`, `min_order + 1`,
    /// ... in order. The truncation order is `min_order + coeffs.len() - 1`.
    pub fn from_coeffs(min_order: i64, coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidTruncation {
                exp: min_order,
                trunc: min_order - 1,
            });
        }
        let trunc = min_order + coeffs.len() as i64 - 1;
        Ok(Self::from_window(min_order, trunc, coeffs))
    }

    /// The single term `c * q^e`, known up to `trunc`.
    pub fn monomial(c: C, e: i64, trunc: i64) -> Result<Self> {
        if trunc < e {
            return Err(Error::InvalidTruncation { exp: e, trunc });
        }
        let len = (trunc - e + 1) as usize;
        let mut coeffs = vec![C::zero(); len];
        coeffs[0] = c;
        Ok(Self::from_window(e, trunc, coeffs))
    }

    pub fn min_order(&self) -> i64 {
        self.min_order
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc_order
    }

    /// Exponent of the lowest nonzero known coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.min_order + i as i64)
    }

    /// Valuation for truncation propagation: an all-zero window means the
    /// first possibly-nonzero exponent is `trunc_order + 1`.
    fn effective_valuation(&self) -> i64 {
        self.valuation().unwrap_or(self.trunc_order + 1)
    }

    /// Exact coefficient of `q^n`.
    ///
    /// Errors when `n` lies outside the known window: above `trunc_order`
    /// the coefficient is unknown, below `min_order` the caller is outside
    /// the stated contract (even though such coefficients vanish).
    pub fn coeff_at(&self, n: i64) -> Result<C> {
        if n < self.min_order || n > self.trunc_order {
            return Err(Error::CoeffOutOfWindow {
                n,
                min: self.min_order,
                max: self.trunc_order,
            });
        }
        Ok(self.coeffs[(n - self.min_order) as usize].clone())
    }

    /// Coefficient with zero-extension below the window.
    ///
    /// Panics above `trunc_order`; internal callers must stay within the
    /// known range.
    pub fn coeff_or_zero(&self, n: i64) -> C {
        assert!(
            n <= self.trunc_order,
            "coefficient of q^{n} requested above truncation order {}",
            self.trunc_order
        );
        if n < self.min_order {
            C::zero()
        } else {
            self.coeffs[(n - self.min_order) as usize].clone()
        }
    }

    /// Compare two series coefficientwise up to and including `q^upto`.
    ///
    /// A mismatch beyond `upto` is invisible; `upto` must not exceed either
    /// truncation order.
    pub fn equal_up_to(&self, other: &Self, upto: i64) -> Result<SeriesCmp<C>> {
        for t in [self.trunc_order, other.trunc_order] {
            if upto > t {
                return Err(Error::OrderBeyondTruncation {
                    requested: upto,
                    trunc: t,
                });
            }
        }
        let start = self.min_order.min(other.min_order);
        for e in start..=upto {
            let l = self.coeff_or_zero(e);
            let r = other.coeff_or_zero(e);
            if l != r {
                return Ok(SeriesCmp::Mismatch {
                    exponent: e,
                    lhs: l,
                    rhs: r,
                });
            }
        }
        Ok(SeriesCmp::Equal)
    }

    /// Coefficientwise sum; the result is known to the smaller truncation.
    pub fn add(&self, other: &Self) -> Self {
        let min = self.min_order.min(other.min_order);
        let trunc = self.trunc_order.min(other.trunc_order);
        let min = min.min(trunc);
        let coeffs = (min..=trunc)
            .map(|e| self.coeff_or_zero(e) + other.coeff_or_zero(e))
            .collect();
        Self::from_window(min, trunc, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| -c.clone()).collect();
        Self::from_window(self.min_order, self.trunc_order, coeffs)
    }

    /// Cauchy product.
    ///
    /// The result order is the largest provably correct one: with
    /// valuations `v1, v2`, coefficients are exact up to
    /// `min(trunc1 + v2, trunc2 + v1)`.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = (self.trunc_order + other.effective_valuation())
            .min(other.trunc_order + self.effective_valuation());
        let min = (self.min_order + other.min_order).min(trunc);
        let len = (trunc - min + 1) as usize;
        let mut acc = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.min_order + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = ea + other.min_order + j as i64;
                if e > trunc {
                    break;
                }
                if e >= min {
                    let slot = &mut acc[(e - min) as usize];
                    *slot = std::mem::replace(slot, C::zero()) + a.clone() * b.clone();
                }
            }
        }
        Self::from_window(min, trunc, acc)
    }

    /// Multiplicative inverse.
    ///
    /// Requires the lowest nonzero coefficient to be a unit; the result has
    /// `min_order = -v` and truncation `trunc_order - 2v` where `v` is the
    /// valuation of `self`.
    pub fn invert(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::ZeroWindow {
            trunc: self.trunc_order,
        })?;
        let lead = self.coeff_or_zero(v);
        let lead_inv = lead.checked_inv().ok_or_else(|| Error::NonInvertible {
            lead: lead.to_string(),
            order: v,
        })?;
        // Solve u * w = 1 for the unit part u_i = self[v + i].
        let len = (self.trunc_order - v + 1) as usize;
        let u: Vec<C> = (0..len as i64).map(|i| self.coeff_or_zero(v + i)).collect();
        let mut w = vec![C::zero(); len];
        w[0] = lead_inv.clone();
        for n in 1..len {
            let mut s = C::zero();
            for i in 1..=n {
                if u[i].is_zero() || w[n - i].is_zero() {
                    continue;
                }
                s = s + u[i].clone() * w[n - i].clone();
            }
            w[n] = -(lead_inv.clone() * s);
        }
        Ok(Self::from_window(-v, self.trunc_order - 2 * v, w))
    }

    /// Multiply by `q^delta`.
    pub fn shifted(&self, delta: i64) -> Self {
        Self::from_window(
            self.min_order + delta,
            self.trunc_order + delta,
            self.coeffs.clone(),
        )
    }

    /// Multiply every coefficient by `c`.
    pub fn scaled(&self, c: &C) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x.clone() * c.clone()).collect();
        Self::from_window(self.min_order, self.trunc_order, coeffs)
    }

    /// Forget knowledge above `new_trunc` (which must stay >= `min_order`).
    pub fn truncated(&self, new_trunc: i64) -> Self {
        if new_trunc >= self.trunc_order {
            return self.clone();
        }
        assert!(
            new_trunc >= self.min_order,
            "cannot truncate to {new_trunc}: window starts at {}",
            self.min_order
        );
        let len = (new_trunc - self.min_order + 1) as usize;
        Self::from_window(self.min_order, new_trunc, self.coeffs[..len].to_vec())
    }

    /// Change the coefficient ring elementwise. `f` must send zero to
    /// zero, or the below-window zeros stop being zeros.
    pub fn convert<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries::from_window(
            self.min_order,
            self.trunc_order,
            self.coeffs.iter().map(f).collect(),
        )
    }

    /// Nonzero coefficients as `(exponent, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_order + i as i64, c))
    }

    pub fn is_zero_window(&self) -> bool {
        self.valuation().is_none()
    }
}

impl<C: Coeff> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        self.negated()
    }
}

impl<C: Coeff> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (e, c) in self.support() {
            if wrote {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{e}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc_order + 1)
    }
}

impl<C: Coeff> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{}..{}]({self})", self.min_order, self.trunc_order)
    }
}
