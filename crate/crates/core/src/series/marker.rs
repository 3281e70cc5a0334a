use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coeff::Coeff;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in the two markers `z` and `a`.
///
/// `z` carries a rank exponent, `a` an overline-count exponent. Keys are
/// `(z_exp, a_exp)` pairs; no zero coefficient is ever stored. Negative
/// `a` exponents are legal in intermediate values (`(-1/a;q)_n` needs
/// them) and are validated away only on finished objects.
#[derive(Clone, PartialEq, Eq)]
pub struct MarkerPoly<B> {
    terms: BTreeMap<(i64, i64), B>,
}

impl<B: Coeff> MarkerPoly<B> {
    pub fn new() -> Self {
        MarkerPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: B) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The single term `c * z^z_exp * a^a_exp`.
    pub fn monomial(z_exp: i64, a_exp: i64, c: B) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((z_exp, a_exp), c);
        }
        MarkerPoly { terms }
    }

    /// Coefficient of `z^z_exp * a^a_exp`, zero if absent.
    pub fn coeff(&self, z_exp: i64, a_exp: i64) -> B {
        self.terms
            .get(&(z_exp, a_exp))
            .cloned()
            .unwrap_or_else(B::zero)
    }

    /// Nonzero terms in `(z_exp, a_exp)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &B)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(terms: &mut BTreeMap<(i64, i64), B>, key: (i64, i64), val: B) {
        if val.is_zero() {
            return;
        }
        match terms.remove(&key) {
            None => {
                terms.insert(key, val);
            }
            Some(old) => {
                let sum = old + val;
                if !sum.is_zero() {
                    terms.insert(key, sum);
                }
            }
        }
    }

    /// Multiply every term by `c * z^z_exp * a^a_exp`.
    pub fn mul_monomial(&self, z_exp: i64, a_exp: i64, c: &B) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&(z, a), v)| ((z + z_exp, a + a_exp), v.clone() * c.clone()))
            .collect();
        MarkerPoly { terms }
    }

    /// True if every term has `a_exp == 0` and `z_exp == 0`.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|&(z, a)| z == 0 && a == 0)
    }

    /// Largest `|z_exp|` over nonzero terms (0 for the zero polynomial).
    pub fn max_abs_z_exp(&self) -> i64 {
        self.terms.keys().map(|&(z, _)| z.abs()).max().unwrap_or(0)
    }

    /// Largest `a_exp` over nonzero terms (0 for the zero polynomial).
    pub fn max_a_exp(&self) -> i64 {
        self.terms.keys().map(|&(_, a)| a).max().unwrap_or(0)
    }

    /// Smallest `a_exp` over nonzero terms (0 for the zero polynomial).
    pub fn min_a_exp(&self) -> i64 {
        self.terms.keys().map(|&(_, a)| a).min().unwrap_or(0)
    }

    /// Substitute `a = 0`: terms with `a_exp > 0` vanish.
    ///
    /// Errors if a term carries a negative `a` exponent, which would make
    /// the substitution undefined.
    pub fn eval_a_zero(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&(z, a), v) in &self.terms {
            if a < 0 {
                return Err(Error::Domain(format!(
                    "cannot set a = 0: term carries a^{a}"
                )));
            }
            if a == 0 {
                terms.insert((z, 0), v.clone());
            }
        }
        Ok(MarkerPoly { terms })
    }

    /// Substitute `a = 1`: collapse the `a` exponents.
    pub fn eval_a_one(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (&(z, _), v) in &self.terms {
            Self::insert_add(&mut terms, (z, 0), v.clone());
        }
        MarkerPoly { terms }
    }

    /// Substitute `z = 1`: collapse the `z` exponents.
    pub fn eval_z_one(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (&(_, a), v) in &self.terms {
            Self::insert_add(&mut terms, (0, a), v.clone());
        }
        MarkerPoly { terms }
    }
}

impl<B: Coeff> Default for MarkerPoly<B> {
    fn default() -> Self {
        Self::new()
    }
}

impl<B: Coeff> Add for MarkerPoly<B> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut terms = self.terms;
        for (key, val) in rhs.terms {
            Self::insert_add(&mut terms, key, val);
        }
        MarkerPoly { terms }
    }
}

impl<B: Coeff> Sub for MarkerPoly<B> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<B: Coeff> Neg for MarkerPoly<B> {
    type Output = Self;

    fn neg(self) -> Self {
        let terms = self.terms.into_iter().map(|(k, v)| (k, -v)).collect();
        MarkerPoly { terms }
    }
}

impl<B: Coeff> Mul for MarkerPoly<B> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut terms = BTreeMap::new();
        for (&(z1, a1), v1) in &self.terms {
            for (&(z2, a2), v2) in &rhs.terms {
                Self::insert_add(&mut terms, (z1 + z2, a1 + a2), v1.clone() * v2.clone());
            }
        }
        MarkerPoly { terms }
    }
}

impl<B: Coeff> Zero for MarkerPoly<B> {
    fn zero() -> Self {
        Self::new()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<B: Coeff> One for MarkerPoly<B> {
    fn one() -> Self {
        Self::constant(B::one())
    }
}

impl<B: Coeff> fmt::Display for MarkerPoly<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(z, a), v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({v})")?;
            if z != 0 {
                write!(f, "*z^{z}")?;
            }
            if a != 0 {
                write!(f, "*a^{a}")?;
            }
        }
        Ok(())
    }
}

impl<B: Coeff> fmt::Debug for MarkerPoly<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MarkerPoly({self})")
    }
}

impl<B: Coeff> Coeff for MarkerPoly<B> {
    /// Units are single monomials with unit base coefficients.
    fn checked_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(z, a), v) = self.terms.iter().next().unwrap();
        let inv = v.checked_inv()?;
        Some(Self::monomial(-z, -a, inv))
    }

    fn from_int(n: i64) -> Self {
        Self::constant(B::from_int(n))
    }

    fn signed_a_power(negative: bool, a_exp: i64) -> Option<Self> {
        let base = if negative {
            -B::one()
        } else {
            B::one()
        };
        Some(Self::monomial(0, a_exp, base))
    }
}
