//! Scalars of a real quadratic extension `Q(sqrt(d))`.
//!
//! A [`QuadExt`] stores `p + q*sqrt(d)` with exact rational `p`, `q` and a
//! square-free radicand `d >= 0`. These cover every exact irrational value
//! this crate produces: double roots of a semi-definite quartic come from a
//! quadratic factor, so their coordinates live in one such extension.
//!
//! Arithmetic is closed for a fixed radicand. Purely rational values carry
//! `d = 0` and combine with any radicand; mixing two distinct nonzero
//! radicands is a caller bug and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_rat, isqrt, square_free_split, Rat};

/// Exact element `p + q*sqrt(d)` of a real quadratic extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    p: Rat,
    q: Rat,
    d: u64,
}

impl QuadExt {
    /// Builds `p + q*sqrt(d)`. `d` must be square-free (0 and 1 are
    /// normalized away); a zero radical part collapses to the rational form.
    pub fn new(p: Rat, q: Rat, d: u64) -> Self {
        if q.is_zero() || d == 0 {
            return Self {
                p,
                q: Rat::zero(),
                d: 0,
            };
        }
        if d == 1 {
            return Self {
                p: p + q,
                q: Rat::zero(),
                d: 0,
            };
        }
        let (square, free) = square_free_split(&BigInt::from(d));
        debug_assert!(square.is_one(), "radicand {d} is not square-free");
        debug_assert_eq!(free, BigInt::from(d));
        Self { p, q, d }
    }

    pub fn from_rational(p: Rat) -> Self {
        Self {
            p,
            q: Rat::zero(),
            d: 0,
        }
    }

    /// Exact square root of a non-negative rational, as `(s/m) * sqrt(d)`.
    pub fn sqrt_of_rational(value: &Rat) -> Self {
        assert!(!value.is_negative(), "square root of a negative rational");
        if value.is_zero() {
            return Self::from_rational(Rat::zero());
        }
        // sqrt(n/m) = sqrt(n*m)/m; split n*m into square * square-free.
        let n = value.numer().clone();
        let m = value.denom().clone();
        let (square, free) = square_free_split(&(&n * &m));
        let q = Rat::new(square, m);
        if free.is_one() {
            Self::from_rational(q)
        } else {
            let d = u64::try_from(&free).expect("radicand exceeds u64; out of operating range");
            Self {
                p: Rat::zero(),
                q,
                d,
            }
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.p
    }

    pub fn radical_part(&self) -> &Rat {
        &self.q
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    /// Returns the rational value if the radical part vanishes.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.q.is_zero() {
            Some(&self.p)
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: -self.q.clone(),
            d: self.d,
        }
    }

    /// `p^2 - q^2 d`, the field norm; zero only for the zero element.
    pub fn norm(&self) -> Rat {
        &self.p * &self.p - &self.q * &self.q * Rat::from_integer(BigInt::from(self.d))
    }

    /// Exact sign: -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.q.is_zero() {
            return sign_of(&self.p);
        }
        if self.p.is_zero() {
            return sign_of(&self.q);
        }
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sp == sq {
            return sp;
        }
        // Opposite signs: compare p^2 against q^2 d.
        let lhs = &self.p * &self.p;
        let rhs = &self.q * &self.q * Rat::from_integer(BigInt::from(self.d));
        match lhs.cmp(&rhs) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0, // impossible for square-free d >= 2
        }
    }

    pub fn is_zero_value(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Total numeric order, valid across different radicands.
    pub fn cmp_numeric(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        if self.d == other.d || self.q.is_zero() || other.q.is_zero() {
            let diff = self.clone() - other.clone();
            return match diff.signum() {
                s if s > 0 => Ordering::Greater,
                s if s < 0 => Ordering::Less,
                _ => Ordering::Equal,
            };
        }
        // Distinct radicands: the values differ (1, sqrt(d1), sqrt(d2) are
        // rationally independent), so refined bounds separate them.
        let mut bits = 8u32;
        loop {
            let (alo, ahi) = self.bounds(bits);
            let (blo, bhi) = other.bounds(bits);
            if ahi < blo {
                return Ordering::Less;
            }
            if bhi < alo {
                return Ordering::Greater;
            }
            bits *= 2;
        }
    }

    /// Rational bounds `lo <= value <= hi` with `hi - lo <= |q| / 2^(bits-1)`.
    pub fn bounds(&self, bits: u32) -> (Rat, Rat) {
        if self.q.is_zero() {
            return (self.p.clone(), self.p.clone());
        }
        let scale = BigInt::one() << bits;
        let a = isqrt(&(BigInt::from(self.d) * &scale * &scale));
        let lo_sqrt = Rat::new(a.clone(), scale.clone());
        let hi_sqrt = Rat::new(a + 1, scale);
        let (lo, hi) = if self.q.is_positive() {
            (&self.p + &self.q * lo_sqrt, &self.p + &self.q * hi_sqrt)
        } else {
            (&self.p + &self.q * hi_sqrt, &self.p + &self.q * lo_sqrt)
        };
        (lo, hi)
    }

    fn unified_d(&self, other: &Self) -> u64 {
        match (self.q.is_zero(), other.q.is_zero()) {
            (true, _) => other.d,
            (false, true) => self.d,
            (false, false) => {
                assert!(
                    self.d == other.d,
                    "mixed quadratic extensions: sqrt({}) vs sqrt({})",
                    self.d,
                    other.d
                );
                self.d
            }
        }
    }
}

fn sign_of(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for QuadExt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.unified_d(&rhs);
        Self::new(self.p + rhs.p, self.q + rhs.q, d)
    }
}

impl Sub for QuadExt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadExt {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            p: -self.p,
            q: -self.q,
            d: self.d,
        }
    }
}

impl Mul for QuadExt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.unified_d(&rhs);
        let dd = Rat::from_integer(BigInt::from(d));
        let p = &self.p * &rhs.p + &self.q * &rhs.q * dd;
        let q = &self.p * &rhs.q + &self.q * &rhs.p;
        Self::new(p, q, d)
    }
}

impl Div for QuadExt {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero_value(), "division by zero");
        let norm = rhs.norm();
        let scaled = self * rhs.conjugate();
        Self::new(scaled.p / &norm, scaled.q / &norm, scaled.d)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::from_rational(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.is_zero_value()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::from_rational(Rat::one())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", format_rat(&self.p));
        }
        if self.p.is_zero() {
            return write!(f, "{}*sqrt({})", format_rat(&self.q), self.d);
        }
        write!(
            f,
            "{} + {}*sqrt({})",
            format_rat(&self.p),
            format_rat(&self.q),
            self.d
        )
    }
}
