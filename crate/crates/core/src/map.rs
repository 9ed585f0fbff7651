//! Cubic polynomial maps of the plane and affine changes of variables.
//!
//! A map sends `(x1, x2)` to two polynomials of total degree at most
//! three. The cubic part is stored as the four symmetric-tensor
//! components per output row, so the polynomial coefficient of the mixed
//! monomials carries the 1-3-3-1 weighting:
//!
//! ```text
//! y_i = f[i][0] x1^3 + 3 f[i][1] x1^2 x2 + 3 f[i][2] x1 x2^2 + f[i][3] x2^3
//!     + q[i][0] x1^2 + 2 q[i][1] x1 x2  +   q[i][2] x2^2
//!     + l[i][0] x1   +   l[i][1] x2     +   c[i]
//! ```
//!
//! Both-sided composition with affine changes is exact, and the six 2x2
//! column determinants of the cubic tensor drive everything downstream.

use num_traits::Zero;

use crate::quadext::QuadExt;
use crate::rational::Rat;
use crate::scalar::{det2, Coeff};

/// Degree-<=3 polynomial map of the plane with exact coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicMap<S: Coeff = Rat> {
    /// Cubic tensor rows: `[F_111, F_112, F_122, F_222]` per output.
    pub f: [[S; 4]; 2],
    /// Quadratic tensor rows: `[Q_11, Q_12, Q_22]` per output.
    pub q: [[S; 3]; 2],
    /// Linear part rows.
    pub l: [[S; 2]; 2],
    /// Constant part.
    pub c: [S; 2],
}

/// Affine change of variables `x -> T x + a`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineChange<S: Coeff = Rat> {
    pub t: [[S; 2]; 2],
    pub a: [S; 2],
}

/// The six determinants of cubic-tensor column pairs, in the fixed order
/// `(g1111, g1112, g1122, g1212, g1222, g2222)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DetSextet<S: Coeff = Rat> {
    pub g1111: S,
    pub g1112: S,
    pub g1122: S,
    pub g1212: S,
    pub g1222: S,
    pub g2222: S,
}

impl<S: Coeff> CubicMap<S> {
    /// Map with the given cubic tensor rows and no lower-degree terms.
    pub fn from_tensor(f: [[S; 4]; 2]) -> Self {
        Self {
            f,
            q: [
                [S::zero(), S::zero(), S::zero()],
                [S::zero(), S::zero(), S::zero()],
            ],
            l: [[S::zero(), S::zero()], [S::zero(), S::zero()]],
            c: [S::zero(), S::zero()],
        }
    }

    /// Map from raw polynomial coefficients per row, ordered
    /// `[x1^3, x1^2 x2, x1 x2^2, x2^3]`, `[x1^2, x1 x2, x2^2]`, `[x1, x2]`,
    /// constant. The mixed cubic coefficients are divided by 3 and the
    /// mixed quadratic coefficient by 2, exactly.
    pub fn from_polynomial_coefficients(
        cubic: [[S; 4]; 2],
        quadratic: [[S; 3]; 2],
        linear: [[S; 2]; 2],
        constant: [S; 2],
    ) -> Self {
        let f = cubic.map(|row| {
            let [c30, c21, c12, c03] = row;
            [c30, c21.div_int(3), c12.div_int(3), c03]
        });
        let q = quadratic.map(|row| {
            let [c20, c11, c02] = row;
            [c20, c11.div_int(2), c02]
        });
        Self {
            f,
            q,
            l: linear,
            c: constant,
        }
    }

    /// True when some cubic tensor component is nonzero; only such maps
    /// are classifiable.
    pub fn is_cubic(&self) -> bool {
        self.f.iter().flatten().any(|v| !v.is_zero())
    }

    /// Cubic-tensor column for a lower-index multiset `0..4` =
    /// `111, 112, 122, 222`: the pair `(F^1_X, F^2_X)`.
    pub fn column(&self, index: usize) -> [S; 2] {
        [self.f[0][index].clone(), self.f[1][index].clone()]
    }

    /// Exact value of the map at a point.
    pub fn evaluate(&self, x: &[S; 2]) -> [S; 2] {
        let rows = self.rows();
        [rows[0].eval(&x[0], &x[1]), rows[1].eval(&x[0], &x[1])]
    }

    /// Right composition `self . change`: substitutes the affine change
    /// into the inputs. A singular matrix is allowed; the result is then
    /// simply degenerate.
    pub fn compose_right(&self, change: &AffineChange<S>) -> Self {
        let lx = Poly2::linear(
            change.t[0][0].clone(),
            change.t[0][1].clone(),
            change.a[0].clone(),
        );
        let ly = Poly2::linear(
            change.t[1][0].clone(),
            change.t[1][1].clone(),
            change.a[1].clone(),
        );
        let rows = self.rows().map(|row| row.substitute(&lx, &ly));
        Self::from_rows(rows)
    }

    /// Left composition `change . self`: applies the affine change to the
    /// outputs.
    pub fn compose_left(&self, change: &AffineChange<S>) -> Self {
        let rows = self.rows();
        let combined = [0, 1].map(|i| {
            let mut row = rows[0].scale(&change.t[i][0]);
            row.add_assign(&rows[1].scale(&change.t[i][1]));
            row.c[0] = row.c[0].clone() + change.a[i].clone();
            row
        });
        Self::from_rows(combined)
    }

    /// The six column-pair determinants of the cubic tensor.
    pub fn determinants(&self) -> DetSextet<S> {
        let col = |k: usize| self.column(k);
        let d = |a: [S; 2], b: [S; 2]| det2(&a[0], &b[0], &a[1], &b[1]);
        DetSextet {
            g1111: d(col(0), col(1)),
            g1112: d(col(0), col(2)),
            g1122: d(col(0), col(3)),
            g1212: d(col(1), col(2)),
            g1222: d(col(1), col(3)),
            g2222: d(col(2), col(3)),
        }
    }

    /// Reinterprets the coefficients in a larger scalar type.
    pub fn map_coeffs<T: Coeff>(&self, f: impl Fn(&S) -> T + Copy) -> CubicMap<T> {
        CubicMap {
            f: [0, 1].map(|i| [0, 1, 2, 3].map(|j| f(&self.f[i][j]))),
            q: [0, 1].map(|i| [0, 1, 2].map(|j| f(&self.q[i][j]))),
            l: [0, 1].map(|i| [0, 1].map(|j| f(&self.l[i][j]))),
            c: [0, 1].map(|i| f(&self.c[i])),
        }
    }

    fn rows(&self) -> [Poly2<S>; 2] {
        [0, 1].map(|i| {
            let mut p = Poly2::zero();
            p.c[0] = self.c[i].clone();
            p.c[1] = self.l[i][0].clone();
            p.c[2] = self.l[i][1].clone();
            p.c[3] = self.q[i][0].clone();
            p.c[4] = self.q[i][1].clone() * S::from_int(2);
            p.c[5] = self.q[i][2].clone();
            p.c[6] = self.f[i][0].clone();
            p.c[7] = self.f[i][1].clone() * S::from_int(3);
            p.c[8] = self.f[i][2].clone() * S::from_int(3);
            p.c[9] = self.f[i][3].clone();
            p
        })
    }

    fn from_rows(rows: [Poly2<S>; 2]) -> Self {
        let mut out = Self::from_tensor([
            [S::zero(), S::zero(), S::zero(), S::zero()],
            [S::zero(), S::zero(), S::zero(), S::zero()],
        ]);
        for (i, p) in rows.iter().enumerate() {
            out.c[i] = p.c[0].clone();
            out.l[i] = [p.c[1].clone(), p.c[2].clone()];
            out.q[i] = [p.c[3].clone(), p.c[4].div_int(2), p.c[5].clone()];
            out.f[i] = [
                p.c[6].clone(),
                p.c[7].div_int(3),
                p.c[8].div_int(3),
                p.c[9].clone(),
            ];
        }
        out
    }
}

impl CubicMap<Rat> {
    /// Embeds a rational map into quadratic-extension scalars.
    pub fn to_quad(&self) -> CubicMap<QuadExt> {
        self.map_coeffs(|r| QuadExt::from_rational(r.clone()))
    }
}

impl<S: Coeff> AffineChange<S> {
    pub fn identity() -> Self {
        Self {
            t: [[S::one(), S::zero()], [S::zero(), S::one()]],
            a: [S::zero(), S::zero()],
        }
    }

    pub fn linear(t: [[S; 2]; 2]) -> Self {
        Self {
            t,
            a: [S::zero(), S::zero()],
        }
    }

    pub fn det(&self) -> S {
        det2(&self.t[0][0], &self.t[0][1], &self.t[1][0], &self.t[1][1])
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    /// The image `T x + a` of a point.
    pub fn apply(&self, x: &[S; 2]) -> [S; 2] {
        [0, 1].map(|i| {
            self.t[i][0].clone() * x[0].clone()
                + self.t[i][1].clone() * x[1].clone()
                + self.a[i].clone()
        })
    }
}

impl<S: Coeff> DetSextet<S> {
    pub fn zero() -> Self {
        Self {
            g1111: S::zero(),
            g1112: S::zero(),
            g1122: S::zero(),
            g1212: S::zero(),
            g1222: S::zero(),
            g2222: S::zero(),
        }
    }

    pub fn as_array(&self) -> [S; 6] {
        [
            self.g1111.clone(),
            self.g1112.clone(),
            self.g1122.clone(),
            self.g1212.clone(),
            self.g1222.clone(),
            self.g2222.clone(),
        ]
    }

    pub fn from_array(values: [S; 6]) -> Self {
        let [g1111, g1112, g1122, g1212, g1222, g2222] = values;
        Self {
            g1111,
            g1112,
            g1122,
            g1212,
            g1222,
            g2222,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_array().iter().all(Zero::is_zero)
    }
}

/// Dense bivariate polynomial of total degree <= 3, the substitution
/// workhorse behind both compositions. Monomial slots are
/// `1, x, y, x^2, xy, y^2, x^3, x^2 y, x y^2, y^3`.
#[derive(Debug, Clone, PartialEq)]
struct Poly2<S: Coeff> {
    c: [S; 10],
}

const MONO2: [(u8, u8); 10] = [
    (0, 0),
    (1, 0),
    (0, 1),
    (2, 0),
    (1, 1),
    (0, 2),
    (3, 0),
    (2, 1),
    (1, 2),
    (0, 3),
];

fn mono_slot(i: u8, j: u8) -> usize {
    MONO2
        .iter()
        .position(|&m| m == (i, j))
        .expect("degree overflow in substitution")
}

impl<S: Coeff> Poly2<S> {
    fn zero() -> Self {
        Self {
            c: std::array::from_fn(|_| S::zero()),
        }
    }

    fn linear(x: S, y: S, constant: S) -> Self {
        let mut p = Self::zero();
        p.c[1] = x;
        p.c[2] = y;
        p.c[0] = constant;
        p
    }

    fn scale(&self, factor: &S) -> Self {
        Self {
            c: std::array::from_fn(|k| self.c[k].clone() * factor.clone()),
        }
    }

    fn add_assign(&mut self, other: &Self) {
        for k in 0..10 {
            self.c[k] = self.c[k].clone() + other.c[k].clone();
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = mono_slot(MONO2[i].0 + MONO2[j].0, MONO2[i].1 + MONO2[j].1);
                out.c[slot] = out.c[slot].clone() + a.clone() * b.clone();
            }
        }
        out
    }

    /// Substitutes two degree-<=1 polynomials for the variables.
    fn substitute(&self, x: &Self, y: &Self) -> Self {
        let one = {
            let mut p = Self::zero();
            p.c[0] = S::one();
            p
        };
        let mut out = Self::zero();
        for (k, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (i, j) = MONO2[k];
            let mut term = one.clone();
            for _ in 0..i {
                term = term.mul(x);
            }
            for _ in 0..j {
                term = term.mul(y);
            }
            out.add_assign(&term.scale(coeff));
        }
        out
    }

    fn eval(&self, x: &S, y: &S) -> S {
        let mut acc = S::zero();
        for (k, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (i, j) = MONO2[k];
            let mut term = coeff.clone();
            for _ in 0..i {
                term = term * x.clone();
            }
            for _ in 0..j {
                term = term * y.clone();
            }
            acc = acc + term;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{indefinite_fixture, semidefinite_fixture, zero_class_fixture};
    use crate::rational::{rat, rat_int};
    use num_traits::{One, Zero};

    fn sextet_ints(g: &DetSextet<Rat>) -> [Rat; 6] {
        g.as_array()
    }

    #[test]
    fn tensor_weighting_matches_polynomial_coefficients() {
        // y2 polynomial coefficients (0, 3, 3, 0) correspond to tensor row (0, 1, 1, 0)
        let m = CubicMap::from_polynomial_coefficients(
            [
                [rat_int(1), rat_int(0), rat_int(0), rat_int(1)],
                [rat_int(0), rat_int(3), rat_int(3), rat_int(0)],
            ],
            [
                [Rat::zero(), Rat::zero(), Rat::zero()],
                [Rat::zero(), Rat::zero(), Rat::zero()],
            ],
            [[Rat::zero(), Rat::zero()], [Rat::zero(), Rat::zero()]],
            [Rat::zero(), Rat::zero()],
        );
        assert_eq!(m, indefinite_fixture());
    }

    #[test]
    fn all_zero_cubic_part_is_flagged() {
        let mut m = CubicMap::from_tensor([
            [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
            [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
        ]);
        m.l = [[Rat::one(), Rat::zero()], [Rat::zero(), Rat::one()]];
        assert!(!m.is_cubic());
        assert!(indefinite_fixture().is_cubic());
    }

    #[test]
    fn evaluate_matches_direct_substitution() {
        // map_a at (1,1) = (1+1, 3+3)
        assert_eq!(
            indefinite_fixture().evaluate(&[rat_int(1), rat_int(1)]),
            [rat_int(2), rat_int(6)]
        );
        // map_b at (2,3) = (8, 27)
        assert_eq!(
            semidefinite_fixture().evaluate(&[rat_int(2), rat_int(3)]),
            [rat_int(8), rat_int(27)]
        );
        // constant term shows at the origin
        let mut m = indefinite_fixture();
        m.c = [rat(1, 2), rat(-2, 3)];
        assert_eq!(
            m.evaluate(&[Rat::zero(), Rat::zero()]),
            [rat(1, 2), rat(-2, 3)]
        );
    }

    #[test]
    fn determinants_of_fixture_maps() {
        assert_eq!(
            sextet_ints(&indefinite_fixture().determinants()),
            [
                rat_int(1),
                rat_int(1),
                rat_int(0),
                rat_int(0),
                rat_int(-1),
                rat_int(-1)
            ]
        );
        assert_eq!(
            sextet_ints(&semidefinite_fixture().determinants()),
            [
                rat_int(0),
                rat_int(0),
                rat_int(1),
                rat_int(0),
                rat_int(0),
                rat_int(0)
            ]
        );
        assert!(zero_class_fixture().determinants().is_zero());
    }

    #[test]
    fn shear_turns_pure_cubes_into_binomial_tensor() {
        // y1 = (x1+x2)^3 expands to coefficients (1,3,3,1), tensor (1,1,1,1)
        let shear = AffineChange::linear([[rat_int(1), rat_int(1)], [rat_int(0), rat_int(1)]]);
        let composed = semidefinite_fixture().compose_right(&shear);
        assert_eq!(
            composed.f[0],
            [rat_int(1), rat_int(1), rat_int(1), rat_int(1)]
        );
        assert_eq!(
            composed.f[1],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(1)]
        );
        assert_eq!(
            sextet_ints(&composed.determinants()),
            [
                rat_int(0),
                rat_int(0),
                rat_int(1),
                rat_int(0),
                rat_int(1),
                rat_int(1)
            ]
        );
    }

    #[test]
    fn identity_changes_leave_maps_alone() {
        let id = AffineChange::identity();
        assert_eq!(
            indefinite_fixture().compose_right(&id),
            indefinite_fixture()
        );
        assert_eq!(indefinite_fixture().compose_left(&id), indefinite_fixture());
    }

    #[test]
    fn translation_populates_lower_degree_terms() {
        // (x1 + 1)^3 = x1^3 + 3 x1^2 + 3 x1 + 1
        let only_cube = CubicMap::from_tensor([
            [rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(0)],
        ]);
        let shift = AffineChange {
            t: [[rat_int(1), rat_int(0)], [rat_int(0), rat_int(1)]],
            a: [rat_int(1), rat_int(0)],
        };
        let moved = only_cube.compose_right(&shift);
        assert_eq!(moved.f[0], [rat_int(1), rat_int(0), rat_int(0), rat_int(0)]);
        assert_eq!(moved.q[0], [rat_int(3), rat_int(0), rat_int(0)]);
        assert_eq!(moved.l[0], [rat_int(3), rat_int(0)]);
        assert_eq!(moved.c[0], rat_int(1));
        // degree never exceeds three: compose twice more and evaluate coherently
        let twice = moved.compose_right(&shift);
        let x = [rat(3, 2), rat(-1, 3)];
        assert_eq!(twice.evaluate(&x), moved.evaluate(&shift.apply(&x)));
    }

    #[test]
    fn left_composition_combines_rows() {
        let s = AffineChange::linear([[rat_int(1), rat_int(2)], [rat_int(-2), rat_int(1)]]);
        let combined = zero_class_fixture().compose_left(&s);
        assert_eq!(
            combined.f[0],
            [rat_int(5), rat_int(0), rat_int(0), rat_int(5)]
        );
        assert_eq!(
            combined.f[1],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(0)]
        );

        let swap = AffineChange::linear([[rat_int(0), rat_int(1)], [rat_int(1), rat_int(0)]]);
        let swapped = semidefinite_fixture().compose_left(&swap);
        assert_eq!(
            swapped.f[0],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(1)]
        );
        assert_eq!(
            swapped.f[1],
            [rat_int(1), rat_int(0), rat_int(0), rat_int(0)]
        );
    }

    #[test]
    fn composition_commutes_with_evaluation() {
        let phi = AffineChange {
            t: [[rat(1, 2), rat_int(3)], [rat_int(-1), rat(2, 5)]],
            a: [rat(5, 7), rat_int(2)],
        };
        let x = [rat(-4, 3), rat(7, 2)];
        let f = indefinite_fixture();
        assert_eq!(
            f.compose_right(&phi).evaluate(&x),
            f.evaluate(&phi.apply(&x))
        );
        assert_eq!(
            f.compose_left(&phi).evaluate(&x),
            phi.apply(&f.evaluate(&x))
        );
    }
}
