//! Binary quartic forms over the rationals.

use num_traits::Zero;

use crate::map::DetSextet;
use crate::quadext::QuadExt;
use crate::rational::Rat;
use crate::unipoly::UniPoly;

/// Homogeneous quartic `a0 z1^4 + a1 z1^3 z2 + a2 z1^2 z2^2 + a3 z1 z2^3 + a4 z2^4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryQuartic {
    pub coeffs: [Rat; 5],
}

impl BinaryQuartic {
    pub fn new(coeffs: [Rat; 5]) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(coeffs: [i64; 5]) -> Self {
        Self::new(coeffs.map(|c| Rat::from_integer(c.into())))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn eval(&self, z1: &Rat, z2: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut term = c.clone();
            for _ in 0..(4 - k) {
                term *= z1;
            }
            for _ in 0..k {
                term *= z2;
            }
            acc += term;
        }
        acc
    }

    /// Exact evaluation at a point with quadratic-extension coordinates.
    pub fn eval_quad(&self, z1: &QuadExt, z2: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut term = QuadExt::from_rational(c.clone());
            for _ in 0..(4 - k) {
                term = term * z1.clone();
            }
            for _ in 0..k {
                term = term * z2.clone();
            }
            acc = acc + term;
        }
        acc
    }

    /// The univariate polynomial `q(t, 1)` in ascending degree order.
    pub fn dehomogenized(&self) -> UniPoly {
        let [a0, a1, a2, a3, a4] = self.coeffs.clone();
        UniPoly::new(vec![a4, a3, a2, a1, a0])
    }
}

impl DetSextet<Rat> {
    /// The binary quartic built on the sextet; its sign type and root
    /// structure drive the whole classification.
    pub fn quartic(&self) -> BinaryQuartic {
        let three = Rat::from_integer(3.into());
        let two = Rat::from_integer(2.into());
        BinaryQuartic::new([
            self.g1111.clone(),
            &two * &self.g1112,
            &three * &self.g1212 + &self.g1122,
            &two * &self.g1222,
            self.g2222.clone(),
        ])
    }
}
