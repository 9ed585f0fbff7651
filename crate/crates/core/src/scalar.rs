//! The scalar abstraction shared by the map machinery.
//!
//! Maps and determinant computations are generic over [`Coeff`] so that the
//! same code runs over the rationals and over a quadratic extension (needed
//! when a normalizing change of variables has irrational entries).

use std::fmt;
use std::ops::{Div, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::quadext::QuadExt;
use crate::rational::Rat;

/// Exact field scalar: rationals or a fixed quadratic extension.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn from_int(n: i64) -> Self;

    fn from_rat(r: &Rat) -> Self;

    /// Exact division by a small integer constant.
    fn div_int(&self, n: i64) -> Self {
        self.clone() / Self::from_int(n)
    }
}

impl Coeff for Rat {
    fn from_int(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

impl Coeff for QuadExt {
    fn from_int(n: i64) -> Self {
        QuadExt::from_rational(Rat::from_integer(BigInt::from(n)))
    }

    fn from_rat(r: &Rat) -> Self {
        QuadExt::from_rational(r.clone())
    }
}

/// Sum of products, the 2x2 determinant building block.
pub fn det2<S: Coeff>(a: &S, b: &S, c: &S, d: &S) -> S {
    a.clone() * d.clone() - b.clone() * c.clone()
}
