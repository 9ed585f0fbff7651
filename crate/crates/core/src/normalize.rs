//! Normal forms under two-sided affine equivalence.
//!
//! Three constructions, one per classifiable case:
//!
//! * zero quartic: the cubic columns are all proportional, so one left
//!   change clears the entire second output row exactly;
//! * two distinct projective roots (indefinite, or semi-definite with two
//!   double roots): the right change whose matrix columns are root
//!   representatives kills the first and last determinants - exactly when
//!   the roots live in the rationals or one quadratic extension, and to
//!   any requested residual otherwise;
//! * a single known root (quadruple or lone double root): the root fixes
//!   the first column, the second is the canonical perpendicular
//!   completion, and the result is flagged partial.
//!
//! On top of the two-root construction sits the refinement report: for
//! every ordered pair of distinct roots it records which of the four
//! middle determinants also vanish. Any equivalent map with vanishing
//! outer determinants arises this way (the transport identity forces the
//! columns to be roots, and left changes only scale), so the per-pair
//! patterns decide the refinement conditions R1..R4.

use num_traits::{One, Signed, Zero};

use crate::classify::{classify_map, Kind, ProjectivePoint, ProjectiveRoot, SemiDefiniteSubcase};
use crate::error::Error;
use crate::map::{AffineChange, CubicMap, DetSextet};
use crate::quadext::QuadExt;
use crate::rational::{rat_int, Rat};
use crate::scalar::Coeff;

/// How a normalization's targeted determinants were driven to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    /// The targeted determinants are only bounded: their absolute values
    /// do not exceed the recorded residual.
    Approximate {
        residual_bound: Rat,
    },
}

/// Outcome of a normalization over one scalar type.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationResult<S: Coeff> {
    /// Output-side change (identity unless the zero case applied).
    pub left: AffineChange<Rat>,
    /// Input-side change (identity in the zero case).
    pub right: AffineChange<S>,
    pub normalized: CubicMap<S>,
    pub achieved: DetSextet<S>,
    pub exactness: Exactness,
    /// Set when the construction leaves a free choice (single known
    /// root): the second column is canonical but not forced.
    pub partial: bool,
}

/// Normalization outcome with the scalar type chosen at runtime.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Normalization {
    Rational(NormalizationResult<Rat>),
    Quadratic(NormalizationResult<QuadExt>),
}

impl Normalization {
    pub fn exactness(&self) -> &Exactness {
        match self {
            Normalization::Rational(r) => &r.exactness,
            Normalization::Quadratic(r) => &r.exactness,
        }
    }

    pub fn is_partial(&self) -> bool {
        match self {
            Normalization::Rational(r) => r.partial,
            Normalization::Quadratic(r) => r.partial,
        }
    }
}

/// Clears the second output row of a map whose quartic vanishes.
///
/// All four cubic columns of such a map are rational multiples of the
/// first nonzero one, scanned in column order. With that column `v`, the
/// left change `[[v1, v2], [-v2, v1]]` (determinant `v1^2 + v2^2 > 0`)
/// rotates every column onto the first axis. A map whose second row is
/// already clear is returned unchanged under the identity.
pub fn normalize_zero_case(map: &CubicMap) -> Result<NormalizationResult<Rat>, Error> {
    let class = classify_map(map)?;
    if class.kind != Kind::Zero {
        return Err(Error::WrongClass {
            expected: "zero",
            found: class.kind.name().to_string(),
        });
    }

    if map.f[1].iter().all(Rat::is_zero) {
        return Ok(NormalizationResult {
            left: AffineChange::identity(),
            right: AffineChange::identity(),
            normalized: map.clone(),
            achieved: map.determinants(),
            exactness: Exactness::Exact,
            partial: false,
        });
    }

    let pivot = (0..4)
        .find(|&k| map.column(k).iter().any(|c| !c.is_zero()))
        .expect("cubic map has a nonzero column");
    let v = map.column(pivot);

    // Every other column must be a rational multiple of the pivot column;
    // anything else contradicts the vanishing of the sextet.
    for k in 0..4 {
        let col = map.column(k);
        let cross = &col[0] * &v[1] - &col[1] * &v[0];
        if !cross.is_zero() {
            return Err(Error::Internal(format!(
                "column {k} is not proportional to the pivot despite a zero sextet"
            )));
        }
    }

    let left = AffineChange::linear([[v[0].clone(), v[1].clone()], [-v[1].clone(), v[0].clone()]]);
    let normalized = map.compose_left(&left);
    if !normalized.f[1].iter().all(Rat::is_zero) {
        return Err(Error::Internal(
            "left change failed to clear the second row".into(),
        ));
    }
    let achieved = normalized.determinants();
    Ok(NormalizationResult {
        left,
        right: AffineChange::identity(),
        normalized,
        achieved,
        exactness: Exactness::Exact,
        partial: false,
    })
}

enum RootColumn {
    /// `(t, 1)` or `(1, 0)`.
    Rational([Rat; 2]),
    /// `(t, 1)` with `t` in a quadratic extension.
    Quadratic(QuadExt),
    /// `(t, 1)` with `t` only isolated.
    Interval(crate::roots::IsolatedRoot),
}

/// Scalar entries of the column representing a projective root, over the
/// tightest exact type available.
fn root_column(root: &ProjectiveRoot) -> RootColumn {
    match &root.point {
        ProjectivePoint::Infinity => RootColumn::Rational([Rat::one(), Rat::zero()]),
        ProjectivePoint::Finite(r) => match r.exact_value() {
            Some(v) => match v.as_quad().as_rational() {
                Some(t) => RootColumn::Rational([t.clone(), Rat::one()]),
                None => RootColumn::Quadratic(v.as_quad()),
            },
            None => RootColumn::Interval(r.clone()),
        },
    }
}

impl RootColumn {
    fn radicand(&self) -> Option<u64> {
        match self {
            RootColumn::Quadratic(q) => Some(q.radicand()),
            _ => None,
        }
    }

    fn is_interval(&self) -> bool {
        matches!(self, RootColumn::Interval(_))
    }

    fn quad_entries(&self) -> Option<[QuadExt; 2]> {
        match self {
            RootColumn::Rational([u, v]) => Some([
                QuadExt::from_rational(u.clone()),
                QuadExt::from_rational(v.clone()),
            ]),
            RootColumn::Quadratic(t) => Some([t.clone(), QuadExt::one()]),
            RootColumn::Interval(_) => None,
        }
    }

    /// Rational approximation of the column within `width`.
    fn approx_entries(&self, width: &Rat) -> [Rat; 2] {
        match self {
            RootColumn::Rational(col) => col.clone(),
            RootColumn::Quadratic(t) => {
                let mut bits = 16u32;
                loop {
                    let (lo, hi) = t.bounds(bits);
                    if &hi - &lo <= *width {
                        return [lo, Rat::one()];
                    }
                    bits *= 2;
                }
            }
            RootColumn::Interval(r) => [r.rational_approximation(width), Rat::one()],
        }
    }
}

/// Builds the right change whose matrix columns represent the two roots
/// and drives the first and last determinants to zero.
///
/// Exact whenever both representatives fit one quadratic extension
/// (rationals included); otherwise the representatives are refined until
/// both residuals are at most `residual`.
pub fn normalize_two_roots(
    map: &CubicMap,
    first: &ProjectiveRoot,
    second: &ProjectiveRoot,
    residual: &Rat,
) -> Result<Normalization, Error> {
    if !map.is_cubic() {
        return Err(Error::NotCubic);
    }
    if map.determinants().quartic().is_zero() {
        return Err(Error::ZeroQuartic);
    }
    if first.same_point(second) {
        return Err(Error::EqualRoots);
    }
    let a = root_column(first);
    let b = root_column(second);

    let exact_possible = match (a.radicand(), b.radicand()) {
        (Some(da), Some(db)) => da == db,
        _ => !a.is_interval() && !b.is_interval(),
    };

    if exact_possible {
        let (col_a, col_b) = (a.quad_entries().unwrap(), b.quad_entries().unwrap());
        let all_rational = col_a
            .iter()
            .chain(col_b.iter())
            .all(|e| e.as_rational().is_some());
        if all_rational {
            let t = AffineChange::linear([
                [
                    col_a[0].as_rational().unwrap().clone(),
                    col_b[0].as_rational().unwrap().clone(),
                ],
                [
                    col_a[1].as_rational().unwrap().clone(),
                    col_b[1].as_rational().unwrap().clone(),
                ],
            ]);
            if !t.is_invertible() {
                return Err(Error::EqualRoots);
            }
            return Ok(Normalization::Rational(exact_two_root_result(map, t)?));
        }
        let t = AffineChange::linear([
            [col_a[0].clone(), col_b[0].clone()],
            [col_a[1].clone(), col_b[1].clone()],
        ]);
        if !t.is_invertible() {
            return Err(Error::EqualRoots);
        }
        return Ok(Normalization::Quadratic(exact_two_root_result(
            &map.to_quad(),
            t,
        )?));
    }

    // Interval or mixed-extension representatives: certified residuals.
    if !residual.is_positive() {
        return Err(Error::ResidualBudget);
    }
    let step = rat_int(1 << 16);
    let mut width = Rat::one() / &step;
    for _ in 0..64 {
        let col_a = a.approx_entries(&width);
        let col_b = b.approx_entries(&width);
        let t = AffineChange::linear([
            [col_a[0].clone(), col_b[0].clone()],
            [col_a[1].clone(), col_b[1].clone()],
        ]);
        if t.is_invertible() {
            let normalized = map.compose_right(&t);
            let achieved = normalized.determinants();
            if achieved.g1111.abs() <= *residual && achieved.g2222.abs() <= *residual {
                return Ok(Normalization::Rational(NormalizationResult {
                    left: AffineChange::identity(),
                    right: t,
                    normalized,
                    achieved,
                    exactness: Exactness::Approximate {
                        residual_bound: residual.clone(),
                    },
                    partial: false,
                }));
            }
        }
        width /= &step;
    }
    Err(Error::ResidualBudget)
}

fn exact_two_root_result<S: Coeff>(
    map: &CubicMap<S>,
    right: AffineChange<S>,
) -> Result<NormalizationResult<S>, Error> {
    let normalized = map.compose_right(&right);
    let achieved = normalized.determinants();
    if !achieved.g1111.is_zero() || !achieved.g2222.is_zero() {
        return Err(Error::Internal(
            "root columns failed to clear the outer determinants".into(),
        ));
    }
    Ok(NormalizationResult {
        left: AffineChange::identity(),
        right,
        normalized,
        achieved,
        exactness: Exactness::Exact,
        partial: false,
    })
}

/// Normalizes a semi-definite map.
///
/// Two double roots delegate to the two-root construction, which is
/// always exact here (double roots come from a quadratic factor). The
/// quadruple and lone-double cases have one rational root `(v1, v2)`;
/// the first column takes it, the second column is `(-v2, v1)`, and the
/// result is flagged partial.
pub fn normalize_semidefinite(map: &CubicMap) -> Result<Normalization, Error> {
    let class = classify_map(map)?;
    let subcase = match class.kind {
        Kind::SemiDefinite { subcase, .. } => subcase,
        other => {
            return Err(Error::WrongClass {
                expected: "semi-definite",
                found: other.name().to_string(),
            })
        }
    };
    match subcase {
        SemiDefiniteSubcase::TwoDoubleRoots => {
            normalize_two_roots(map, &class.roots[0], &class.roots[1], &default_residual())
        }
        SemiDefiniteSubcase::QuadrupleRoot | SemiDefiniteSubcase::OneDoubleRoot => {
            let column = match root_column(&class.roots[0]) {
                RootColumn::Rational(col) => col,
                _ => {
                    return Err(Error::Internal(
                        "single even root of a rational quartic must be rational".into(),
                    ))
                }
            };
            let t = AffineChange::linear([
                [column[0].clone(), -column[1].clone()],
                [column[1].clone(), column[0].clone()],
            ]);
            let normalized = map.compose_right(&t);
            let achieved = normalized.determinants();
            if !achieved.g1111.is_zero() {
                return Err(Error::Internal("root column failed to clear g1111".into()));
            }
            Ok(Normalization::Rational(NormalizationResult {
                left: AffineChange::identity(),
                right: t,
                normalized,
                achieved,
                exactness: Exactness::Exact,
                partial: true,
            }))
        }
    }
}

/// The residual bound used when none is requested explicitly: `10^-30`.
pub fn default_residual() -> Rat {
    Rat::new(1.into(), num_bigint::BigInt::from(10u8).pow(30))
}

/// The vanishing pattern of the four middle determinants after a
/// two-root normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VanishingPattern {
    pub g1112: bool,
    pub g1122: bool,
    pub g1212: bool,
    pub g1222: bool,
}

impl VanishingPattern {
    pub fn conditions(&self) -> [bool; 4] {
        [self.g1112, self.g1122, self.g1212, self.g1222]
    }

    /// Label such as `R2.3.4`; `None` when nothing vanishes.
    pub fn label(&self) -> Option<String> {
        let held: Vec<String> = self
            .conditions()
            .iter()
            .enumerate()
            .filter(|&(_, &h)| h)
            .map(|(k, _)| (k + 1).to_string())
            .collect();
        if held.is_empty() {
            None
        } else {
            Some(format!("R{}", held.join(".")))
        }
    }

    pub fn all_four(&self) -> bool {
        self.conditions().iter().all(|&h| h)
    }
}

/// One ordered root pair in a refinement report.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinementPair {
    pub first: ProjectiveRoot,
    pub second: ProjectiveRoot,
    /// `None` when the pair has no exact common-extension representation
    /// and the pattern is therefore undetermined.
    pub pattern: Option<VanishingPattern>,
}

/// Which refinement conditions the map can realize, by exhaustive ordered
/// root-pair enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinementReport {
    pub pairs: Vec<RefinementPair>,
    /// Distinct labels realized by decided pairs, sorted.
    pub summary: Vec<String>,
    /// True when every pair was decided exactly.
    pub complete: bool,
}

/// Enumerates every ordered pair of distinct projective roots and records
/// which middle determinants vanish after the corresponding two-root
/// normalization. Needs at least two distinct roots.
pub fn refinement_report(map: &CubicMap) -> Result<RefinementReport, Error> {
    let class = classify_map(map)?;
    match class.kind {
        Kind::Indefinite { .. } | Kind::SemiDefinite { .. } => {}
        other => {
            return Err(Error::WrongClass {
                expected: "indefinite or semi-definite",
                found: other.name().to_string(),
            })
        }
    }
    if class.roots.len() < 2 {
        return Err(Error::TooFewRoots);
    }

    let mut pairs = Vec::new();
    let mut summary = Vec::new();
    let mut complete = true;
    for i in 0..class.roots.len() {
        for j in 0..class.roots.len() {
            if i == j {
                continue;
            }
            let first = class.roots[i].clone();
            let second = class.roots[j].clone();
            let pattern = decide_pattern(map, &first, &second)?;
            match pattern {
                Some(p) => {
                    if let Some(label) = p.label() {
                        if !summary.contains(&label) {
                            summary.push(label);
                        }
                    }
                }
                None => complete = false,
            }
            pairs.push(RefinementPair {
                first,
                second,
                pattern,
            });
        }
    }
    summary.sort();
    Ok(RefinementReport {
        pairs,
        summary,
        complete,
    })
}

fn decide_pattern(
    map: &CubicMap,
    first: &ProjectiveRoot,
    second: &ProjectiveRoot,
) -> Result<Option<VanishingPattern>, Error> {
    match normalize_two_roots(map, first, second, &default_residual())? {
        Normalization::Rational(r) => match r.exactness {
            Exactness::Exact => Ok(Some(pattern_of(&r.achieved))),
            // Certified residuals bound the values but cannot certify a
            // zero, so the pattern stays undetermined.
            Exactness::Approximate { .. } => Ok(None),
        },
        Normalization::Quadratic(r) => Ok(Some(pattern_of(&r.achieved))),
    }
}

/// Reads the vanishing pattern off an achieved sextet.
pub fn pattern_of<S: Coeff>(achieved: &DetSextet<S>) -> VanishingPattern {
    VanishingPattern {
        g1112: achieved.g1112.is_zero(),
        g1122: achieved.g1122.is_zero(),
        g1212: achieved.g1212.is_zero(),
        g1222: achieved.g1222.is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        indefinite_fixture, quadruple_root_fixture, semidefinite_fixture, surd_double_root_fixture,
        zero_class_fixture,
    };
    use crate::forms::{right_transport_report, z_point, QuarticForms};
    use crate::rational::rat;

    #[test]
    fn zero_case_clears_the_second_row() {
        let result = normalize_zero_case(&zero_class_fixture()).unwrap();
        assert_eq!(
            result.left.t,
            [[rat_int(1), rat_int(2)], [rat_int(-2), rat_int(1)]]
        );
        assert_eq!(
            result.normalized.f[0],
            [rat_int(5), rat_int(0), rat_int(0), rat_int(5)]
        );
        assert_eq!(
            result.normalized.f[1],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(0)]
        );
        assert_eq!(result.exactness, Exactness::Exact);
        // the witness reproduces the normalized map
        assert_eq!(
            zero_class_fixture().compose_left(&result.left),
            result.normalized
        );
    }

    #[test]
    fn zero_case_last_column_branch() {
        let map = CubicMap::from_tensor([
            [rat_int(0), rat_int(0), rat_int(0), rat_int(0)],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(1)],
        ]);
        let result = normalize_zero_case(&map).unwrap();
        assert_eq!(
            result.left.t,
            [[rat_int(0), rat_int(1)], [rat_int(-1), rat_int(0)]]
        );
        assert_eq!(
            result.normalized.f[0],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(1)]
        );
        assert_eq!(
            result.normalized.f[1],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(0)]
        );
    }

    #[test]
    fn zero_case_is_idempotent() {
        let map = CubicMap::from_tensor([
            [rat_int(3), rat_int(0), rat_int(0), rat_int(7)],
            [rat_int(0), rat_int(0), rat_int(0), rat_int(0)],
        ]);
        let result = normalize_zero_case(&map).unwrap();
        assert_eq!(result.left, AffineChange::identity());
        assert_eq!(result.normalized, map);
    }

    #[test]
    fn zero_case_rejects_other_classes() {
        assert!(matches!(
            normalize_zero_case(&indefinite_fixture()),
            Err(Error::WrongClass { .. })
        ));
    }

    #[test]
    fn two_roots_on_the_indefinite_fixture() {
        let map = indefinite_fixture();
        let class = classify_map(&map).unwrap();
        let result =
            normalize_two_roots(&map, &class.roots[0], &class.roots[1], &default_residual())
                .unwrap();
        let r = match result {
            Normalization::Rational(r) => r,
            other => panic!("expected rational normalization, got {other:?}"),
        };
        assert_eq!(
            r.right.t,
            [[rat_int(1), rat_int(-1)], [rat_int(1), rat_int(1)]]
        );
        assert_eq!(
            r.normalized.f[0],
            [rat_int(2), rat_int(0), rat_int(2), rat_int(0)]
        );
        assert_eq!(
            r.normalized.f[1],
            [rat_int(6), rat_int(0), rat_int(-2), rat_int(0)]
        );
        assert_eq!(
            r.achieved.as_array(),
            [
                rat_int(0),
                rat_int(-16),
                rat_int(0),
                rat_int(0),
                rat_int(0),
                rat_int(0)
            ]
        );
        assert_eq!(r.exactness, Exactness::Exact);
        assert_eq!(map.compose_right(&r.right), r.normalized);

        // transport cross-check: achieved = det T * form values at the columns
        let report = right_transport_report(&map, &r.right);
        assert!(report.all_match());
        let g = map.determinants();
        let z = z_point(&r.right.t);
        let det = r.right.det();
        for (k, actual) in r.achieved.as_array().iter().enumerate() {
            let predicted = det.clone() * QuarticForms::shared().eval(k + 1, &g, &z);
            assert_eq!(*actual, predicted);
        }
    }

    #[test]
    fn two_roots_identity_for_axis_roots() {
        let map = semidefinite_fixture();
        let class = classify_map(&map).unwrap();
        let result =
            normalize_two_roots(&map, &class.roots[0], &class.roots[1], &default_residual())
                .unwrap();
        match result {
            Normalization::Rational(r) => {
                assert_eq!(r.right, AffineChange::identity());
                assert_eq!(r.normalized, map);
            }
            other => panic!("expected rational normalization, got {other:?}"),
        }
    }

    #[test]
    fn two_surd_roots_normalize_exactly_in_one_extension() {
        let map = surd_double_root_fixture();
        let class = classify_map(&map).unwrap();
        let result =
            normalize_two_roots(&map, &class.roots[0], &class.roots[1], &default_residual())
                .unwrap();
        match result {
            Normalization::Quadratic(r) => {
                assert!(r.achieved.g1111.is_zero());
                assert!(r.achieved.g2222.is_zero());
                assert_eq!(r.exactness, Exactness::Exact);
                // recompute the determinants from scratch and recompose
                let again = r.normalized.determinants();
                assert!(again.g1111.is_zero());
                assert!(again.g2222.is_zero());
                assert_eq!(map.to_quad().compose_right(&r.right), r.normalized);
                // transport cross-check inside the extension
                let report = right_transport_report(&map.to_quad(), &r.right);
                assert!(report.all_match());
            }
            other => panic!("expected quadratic normalization, got {other:?}"),
        }
    }

    #[test]
    fn equal_roots_are_rejected() {
        let map = indefinite_fixture();
        let class = classify_map(&map).unwrap();
        assert_eq!(
            normalize_two_roots(&map, &class.roots[0], &class.roots[0], &default_residual()),
            Err(Error::EqualRoots)
        );
    }

    #[test]
    fn semidefinite_dispatch_covers_all_subcases() {
        match normalize_semidefinite(&semidefinite_fixture()).unwrap() {
            Normalization::Rational(r) => {
                assert_eq!(r.right, AffineChange::identity());
                assert!(!r.partial);
            }
            other => panic!("unexpected {other:?}"),
        }

        match normalize_semidefinite(&surd_double_root_fixture()).unwrap() {
            Normalization::Quadratic(r) => {
                assert_eq!(r.exactness, Exactness::Exact);
                assert!(!r.partial);
            }
            other => panic!("unexpected {other:?}"),
        }

        // quadruple root at (0, 1): first column (0, 1), completion (-1, 0)
        match normalize_semidefinite(&quadruple_root_fixture()).unwrap() {
            Normalization::Rational(r) => {
                assert!(r.partial);
                assert_eq!(
                    r.right.t,
                    [[rat_int(0), rat_int(-1)], [rat_int(1), rat_int(0)]]
                );
                assert!(r.achieved.g1111.is_zero());
                // the old g1111 value lands in the g2222 slot
                assert_eq!(r.achieved.g2222, rat_int(1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn refinement_of_the_indefinite_fixture() {
        let report = refinement_report(&indefinite_fixture()).unwrap();
        assert_eq!(report.pairs.len(), 2);
        assert!(report.complete);
        // root order (1,1), (-1,1): the forward pair realizes R2.3.4 and
        // the swapped pair R1.2.3
        let pattern = report.pairs[0].pattern.unwrap();
        assert_eq!(pattern.label().as_deref(), Some("R2.3.4"));
        assert!(!pattern.g1112 && pattern.g1122 && pattern.g1212 && pattern.g1222);
        assert_eq!(
            report.summary,
            vec!["R1.2.3".to_string(), "R2.3.4".to_string()]
        );
    }

    #[test]
    fn refinement_of_the_semidefinite_fixture() {
        let report = refinement_report(&semidefinite_fixture()).unwrap();
        assert_eq!(report.summary, vec!["R1.3.4".to_string()]);
        assert!(report.complete);
    }

    #[test]
    fn refinement_needs_two_roots() {
        assert_eq!(
            refinement_report(&quadruple_root_fixture()),
            Err(Error::TooFewRoots)
        );
        assert!(matches!(
            refinement_report(&zero_class_fixture()),
            Err(Error::WrongClass { .. })
        ));
    }

    #[test]
    fn residual_normalization_reaches_tiny_bounds() {
        // columns chosen so the quartic has interval roots only
        let map = CubicMap::from_tensor([
            [rat_int(1), rat_int(0), rat_int(1), rat_int(1)],
            [rat_int(0), rat_int(1), rat_int(1), rat_int(-1)],
        ]);
        let class = classify_map(&map).unwrap();
        assert!(matches!(class.kind, Kind::Indefinite { .. }));
        assert!(class.roots.iter().any(|r| !r.is_exact()));
        let residual = default_residual();
        let result =
            normalize_two_roots(&map, &class.roots[0], &class.roots[1], &residual).unwrap();
        match result {
            Normalization::Rational(r) => {
                assert!(r.achieved.g1111.abs() <= residual);
                assert!(r.achieved.g2222.abs() <= residual);
                assert_eq!(
                    r.exactness,
                    Exactness::Approximate {
                        residual_bound: residual
                    }
                );
            }
            other => panic!("expected approximate normalization, got {other:?}"),
        }
    }

    #[test]
    fn halving_the_residual_never_worsens_the_result() {
        let map = CubicMap::from_tensor([
            [rat_int(1), rat_int(0), rat_int(1), rat_int(1)],
            [rat_int(0), rat_int(1), rat_int(1), rat_int(-1)],
        ]);
        let class = classify_map(&map).unwrap();
        let mut bound = rat(1, 1000);
        let mut last: Option<Rat> = None;
        for _ in 0..4 {
            let result =
                normalize_two_roots(&map, &class.roots[0], &class.roots[1], &bound).unwrap();
            let achieved = match result {
                Normalization::Rational(r) => r.achieved.g1111.abs().max(r.achieved.g2222.abs()),
                other => panic!("unexpected {other:?}"),
            };
            if let Some(prev) = last {
                assert!(achieved <= prev);
            }
            last = Some(achieved);
            bound /= rat_int(2);
        }
    }
}
