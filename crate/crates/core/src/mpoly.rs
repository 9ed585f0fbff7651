//! Sparse integer polynomials in the four matrix entries `z1..z4`.
//!
//! Just enough multivariate machinery to expand determinant identities
//! symbolically and divide them by `det T = z1 z4 - z2 z3` with an exact
//! (zero remainder) check. Exponents are tiny, coefficients are small
//! integers.

use std::collections::BTreeMap;
use std::fmt;

/// Monomial exponents `(z1, z2, z3, z4)`. The derived `Ord` is the lex
/// order with `z1` most significant, which makes `z1*z4` the leading
/// monomial of the determinant binomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mono4(pub [u8; 4]);

impl Mono4 {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn checked_div(&self, other: &Mono4) -> Option<Mono4> {
        let mut out = [0u8; 4];
        for (slot, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *slot = a.checked_sub(*b)?;
        }
        Some(Mono4(out))
    }

    fn mul(&self, other: &Mono4) -> Mono4 {
        Mono4(std::array::from_fn(|k| self.0[k] + other.0[k]))
    }
}

impl fmt::Display for Mono4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if any {
                write!(f, "*")?;
            }
            any = true;
            write!(f, "z{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial in `z1..z4` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly4 {
    terms: BTreeMap<Mono4, i64>,
}

impl MPoly4 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single variable `z1..z4` for `index` in `0..4`.
    pub fn var(index: usize) -> Self {
        let mut exps = [0u8; 4];
        exps[index] = 1;
        Self::monomial(Mono4(exps), 1)
    }

    pub fn monomial(mono: Mono4, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(mono, coeff);
        }
        Self { terms }
    }

    /// `z1 z4 - z2 z3`, the determinant of the substituted matrix.
    pub fn det_t() -> Self {
        let mut p = Self::monomial(Mono4([1, 0, 0, 1]), 1);
        p.add_term(Mono4([0, 1, 1, 0]), -1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono4, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Mono4) -> i64 {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    fn add_term(&mut self, mono: Mono4, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(mono).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&mono);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mono, coeff) in &other.terms {
            out.add_term(*mono, *coeff);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mono, coeff) in &other.terms {
            out.add_term(*mono, -coeff);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Divides by `divisor` with the single-divisor division algorithm in
    /// lex order. Returns `(quotient, remainder)`; the divisor's leading
    /// coefficient must be a unit (it is 1 for `det_t`).
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let (dlead_mono, dlead_coeff) = divisor
            .terms
            .iter()
            .next_back()
            .expect("division by zero polynomial");
        assert!(
            *dlead_coeff == 1 || *dlead_coeff == -1,
            "divisor leading coefficient must be a unit"
        );
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let mut normal = Self::zero();
        while let Some((&mono, &coeff)) = rem.terms.iter().next_back() {
            match mono.checked_div(dlead_mono) {
                Some(qmono) => {
                    let qcoeff = coeff / dlead_coeff;
                    let qterm = Self::monomial(qmono, qcoeff);
                    quot = quot.add(&qterm);
                    rem = rem.sub(&qterm.mul(divisor));
                }
                None => {
                    // Move the irreducible leading term to the remainder.
                    normal.add_term(mono, coeff);
                    rem.terms.remove(&mono);
                }
            }
        }
        (quot, normal)
    }
}
