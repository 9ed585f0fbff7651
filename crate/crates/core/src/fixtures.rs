//! Small reference maps exercised throughout the test suite.
//!
//! Each fixture pins one classification outcome end to end: determinants,
//! quartic, class, and normal form are all known in closed form.

use crate::map::CubicMap;
use crate::rational::rat_int;

/// `y1 = x1^3 + x2^3`, `y2 = 3 x1^2 x2 + 3 x1 x2^2`.
///
/// Sextet `(1, 1, 0, 0, -1, -1)`; quartic `(z1 - z2)(z1 + z2)^3`, an
/// indefinite form with simple root `(1, 1)` and triple root `(-1, 1)`.
pub fn indefinite_fixture() -> CubicMap {
    CubicMap::from_tensor([
        [rat_int(1), rat_int(0), rat_int(0), rat_int(1)],
        [rat_int(0), rat_int(1), rat_int(1), rat_int(0)],
    ])
}

/// `y1 = x1^3`, `y2 = x2^3`.
///
/// Sextet `(0, 0, 1, 0, 0, 0)`; quartic `(z1 z2)^2`, positive
/// semi-definite with double roots on both axes.
pub fn semidefinite_fixture() -> CubicMap {
    CubicMap::from_tensor([
        [rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
        [rat_int(0), rat_int(0), rat_int(0), rat_int(1)],
    ])
}

/// `y1 = x1^3 + x2^3`, `y2 = 2 x1^3 + 2 x2^3`: proportional cubic rows.
///
/// Every determinant vanishes, so the quartic is identically zero.
pub fn zero_class_fixture() -> CubicMap {
    CubicMap::from_tensor([
        [rat_int(1), rat_int(0), rat_int(0), rat_int(1)],
        [rat_int(2), rat_int(0), rat_int(0), rat_int(2)],
    ])
}

/// `y1 = x1^3 + 6 x1 x2^2`, `y2 = 3 x1^2 x2 + 2 x2^3`.
///
/// Sextet `(1, 0, 2, -2, 0, 4)`; quartic `(z1^2 - 2 z2^2)^2`, positive
/// semi-definite with irrational double roots `(+-sqrt(2), 1)`.
pub fn surd_double_root_fixture() -> CubicMap {
    CubicMap::from_tensor([
        [rat_int(1), rat_int(0), rat_int(2), rat_int(0)],
        [rat_int(0), rat_int(1), rat_int(0), rat_int(2)],
    ])
}

/// `y1 = x1^3`, `y2 = 3 x1^2 x2`.
///
/// Sextet `(1, 0, 0, 0, 0, 0)`; quartic `(z1)^4`, positive semi-definite
/// with one quadruple root at `(0, 1)`.
pub fn quadruple_root_fixture() -> CubicMap {
    CubicMap::from_tensor([
        [rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
        [rat_int(0), rat_int(1), rat_int(0), rat_int(0)],
    ])
}

/// The coordinate form of the complex cube: `y1 = x1^3 - 3 x1 x2^2`,
/// `y2 = 3 x1^2 x2 - x2^3`.
///
/// Sextet `(1, 0, -1, 1, 0, 1)`; quartic `(z1^2 + z2^2)^2`, positive
/// definite.
pub fn definite_fixture() -> CubicMap {
    CubicMap::from_tensor([
        [rat_int(1), rat_int(0), rat_int(-1), rat_int(0)],
        [rat_int(0), rat_int(1), rat_int(0), rat_int(-1)],
    ])
}
