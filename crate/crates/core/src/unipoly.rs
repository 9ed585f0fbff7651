//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros; the empty vector is the zero polynomial. Downstream callers only
//! need degree <= 4, but nothing here depends on that.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::quadext::QuadExt;
use crate::rational::{format_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// Convenience constructor from small integers, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation inside a quadratic extension.
    pub fn eval_quad(&self, x: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + QuadExt::from_rational(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(k.into()))
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let inv = Rat::one() / lead;
                self.scale(&inv)
            }
        }
    }

    /// Quotient and remainder of exact division. Panics on zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg && !rem.iter().all(Rat::is_zero) {
            while rem.last().is_some_and(Rat::is_zero) {
                rem.pop();
            }
            if rem.len() <= ddeg {
                break;
            }
            let shift = rem.len() - 1 - ddeg;
            let factor = rem.last().unwrap() / &dlead;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = &rem[shift + k] - &(dc * &factor);
            }
            quot[shift] = factor;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor. `gcd(p, 0) = monic(p)`; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free part: the product of the distinct irreducible factors.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Decomposes a nonzero polynomial into pairwise-coprime monic
    /// square-free factors with multiplicities, in increasing multiplicity
    /// order. The product of `factor^multiplicity` reproduces the input up
    /// to a rational constant; constant inputs yield an empty list.
    pub fn square_free_decomposition(&self) -> Result<Vec<(UniPoly, u32)>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.monic();
        let mut out = Vec::new();
        let mut g = p.gcd(&p.derivative());
        let mut w = p.div_exact(&g).monic();
        let mut mult = 1u32;
        while w.degree().unwrap_or(0) > 0 {
            let y = w.gcd(&g);
            let factor = w.div_exact(&y).monic();
            if factor.degree().unwrap_or(0) > 0 {
                out.push((factor, mult));
            }
            g = g.div_exact(&y);
            w = y;
            mult += 1;
        }
        Ok(out)
    }

    /// Sturm chain of a square-free polynomial.
    fn sturm_chain(&self) -> Vec<UniPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        chain
    }

    /// Exact count of distinct real roots in the open interval `(lo, hi)`.
    ///
    /// The polynomial must be square-free and must not vanish at either
    /// endpoint; an endpoint root is reported as an error rather than
    /// silently perturbed.
    pub fn count_real_roots_between(&self, lo: &Rat, hi: &Rat) -> Result<usize, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.gcd(&self.derivative()).degree().unwrap_or(0) > 0 {
            return Err(Error::NotSquareFree);
        }
        if self.eval(lo).is_zero() {
            return Err(Error::EndpointIsRoot(format_rat(lo)));
        }
        if self.eval(hi).is_zero() {
            return Err(Error::EndpointIsRoot(format_rat(hi)));
        }
        assert!(lo < hi, "empty interval");
        let chain = self.sturm_chain();
        Ok(sign_variations(&chain, lo) - sign_variations(&chain, hi))
    }

    /// Cauchy bound: every real root lies strictly inside `(-b, b)`.
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading().expect("root bound of zero polynomial");
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let ratio = (c / lead).abs();
            if ratio > max {
                max = ratio;
            }
        }
        Rat::one() + max
    }
}

fn sign_variations(chain: &[UniPoly], x: &Rat) -> usize {
    let mut variations = 0;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let positive = v.is_positive();
        if let Some(prev) = last {
            if prev != positive {
                variations += 1;
            }
        }
        last = Some(positive);
    }
    variations
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: Self) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: Self) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        UniPoly::new(coeffs)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: Self) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::new(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{}", format_rat(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", format_rat(&mag))?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}
