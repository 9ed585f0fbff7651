//! Exact classification of cubic polynomial maps of the real plane.
//!
//! A cubic map sends the plane to itself through two polynomials of
//! degree at most three. Its cubic tensor yields six column-pair
//! determinants; those build a binary quartic whose sign type and
//! projective root structure split the maps into four rough classes
//! (zero, indefinite, semi-definite, definite) that survive invertible
//! affine changes on both sides. This crate computes all of it in exact
//! arithmetic: arbitrary-precision rationals, one real quadratic
//! extension where closed-form roots need it, and isolating intervals
//! with certified refinement everywhere else.
//!
//! The pipeline:
//!
//! 1. [`map::CubicMap`] holds the coefficients and composes exactly with
//!    affine changes on either side.
//! 2. [`map::CubicMap::determinants`] produces the sextet, and
//!    [`quartic::BinaryQuartic`] the associated form.
//! 3. [`classify::classify_map`] decides the class with exact roots.
//! 4. [`normalize`] builds equivalent maps realizing the normal form of
//!    each class and reports which extra determinants can be made to
//!    vanish.
//! 5. [`forms::QuarticForms`] is the symbolically derived transport
//!    table behind the whole scheme; [`oracle`] cross-checks it by brute
//!    force and feeds the seeded generators used in tests.
//!
//! ```
//! use cubic_forms::{classify_map, CubicMap, Kind};
//! use cubic_forms::rational::rat_int;
//!
//! // y1 = x1^3, y2 = x2^3
//! let map = CubicMap::from_tensor([
//!     [rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
//!     [rat_int(0), rat_int(0), rat_int(0), rat_int(1)],
//! ]);
//! let class = classify_map(&map)?;
//! assert!(matches!(class.kind, Kind::SemiDefinite { .. }));
//! assert_eq!(class.roots.len(), 2); // double roots on both axes
//! # Ok::<(), cubic_forms::Error>(())
//! ```

pub mod classify;
pub mod error;
pub mod fixtures;
pub mod forms;
pub mod map;
pub mod mpoly;
pub mod normalize;
pub mod oracle;
pub mod quadext;
pub mod quartic;
pub mod rational;
pub mod roots;
pub mod scalar;
pub mod unipoly;

pub use classify::{classify_map, classify_quartic, Classification, Kind, Sign};
pub use error::Error;
pub use map::{AffineChange, CubicMap, DetSextet};
pub use quadext::QuadExt;
pub use quartic::BinaryQuartic;
pub use rational::Rat;
pub use unipoly::UniPoly;
