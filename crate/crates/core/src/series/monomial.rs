use std::fmt;

/// A signed monomial `±q^q_exp * a^a_exp`.
///
/// These are the only arguments the named q-objects ever take: Pochhammer
/// bases like `-aq` or `-1/a`, theta arguments like `q^3`, Appell-Lerch
/// parameters like `-q^2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct SignedMonomial {
    pub negative: bool,
    pub q_exp: i64,
    pub a_exp: i64,
}

impl SignedMonomial {
    pub const fn new(negative: bool, q_exp: i64, a_exp: i64) -> Self {
        SignedMonomial {
            negative,
            q_exp,
            a_exp,
        }
    }

    /// `+q^e`
    pub const fn q_pow(e: i64) -> Self {
        Self::new(false, e, 0)
    }

    /// `-q^e`
    pub const fn neg_q_pow(e: i64) -> Self {
        Self::new(true, e, 0)
    }

    /// `+1`
    pub const fn one() -> Self {
        Self::q_pow(0)
    }

    /// `-1`
    pub const fn neg_one() -> Self {
        Self::neg_q_pow(0)
    }

    /// `-aq`, the standard overline marker base.
    pub const fn neg_a_q() -> Self {
        Self::new(true, 1, 1)
    }

    /// `-1/a`
    pub const fn neg_inv_a() -> Self {
        Self::new(true, 0, -1)
    }

    /// Product of two monomials.
    pub fn times(self, other: SignedMonomial) -> Self {
        SignedMonomial {
            negative: self.negative != other.negative,
            q_exp: self.q_exp + other.q_exp,
            a_exp: self.a_exp + other.a_exp,
        }
    }

    /// Multiplicative inverse.
    pub fn inverse(self) -> Self {
        SignedMonomial {
            negative: self.negative,
            q_exp: -self.q_exp,
            a_exp: -self.a_exp,
        }
    }

    /// Shift the q exponent: `self * q^delta`.
    pub fn shift_q(self, delta: i64) -> Self {
        SignedMonomial {
            q_exp: self.q_exp + delta,
            ..self
        }
    }

    /// True if this is exactly `+q^e` for a pure power of `q`.
    pub fn is_plus_q_power(&self) -> bool {
        !self.negative && self.a_exp == 0
    }

    pub fn sign_factor(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        match (self.q_exp, self.a_exp) {
            (0, 0) => write!(f, "1"),
            (e, 0) => write!(f, "q^{e}"),
            (0, a) => write!(f, "a^{a}"),
            (e, a) => write!(f, "q^{e}*a^{a}"),
        }
    }
}
