//! The six quartic forms that transport the determinants through right
//! composition.
//!
//! For a symbolic change of variables with matrix entries
//! `z1 = T11, z2 = T21, z3 = T12, z4 = T22`, each determinant of the
//! composed map expands as a bilinear combination of the original six
//! determinants whose cofactors are all divisible by `det T`. Dividing
//! exactly yields, for each determinant, a quartic form in `z1..z4` with
//! integer coefficients on the six determinant symbols. The table is
//! *derived* here, not transcribed: the zero-remainder division doubles
//! as a machine check of the transport identity, and the result is
//! compared against a widely tabulated version of the same coefficients,
//! which it corrects in exactly two entries.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::Error;
use crate::map::DetSextet;
use crate::mpoly::{MPoly4, Mono4};
use crate::scalar::Coeff;

/// Determinant labels in sextet order.
pub const DET_NAMES: [&str; 6] = ["g1111", "g1112", "g1122", "g1212", "g1222", "g2222"];

/// Linear combination of the six determinant symbols.
pub type DetComb = [i64; 6];

/// Coefficient table of one quartic form: monomial in `z1..z4` to the
/// determinant combination it multiplies.
pub type FormTable = BTreeMap<Mono4, DetComb>;

/// The six derived quartic forms, indexed 1..=6 in sextet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticForms {
    forms: [FormTable; 6],
}

/// Column index multisets `111, 112, 122, 222` of the cubic tensor.
const COLUMN_INDICES: [[usize; 3]; 4] = [[1, 1, 1], [1, 1, 2], [1, 2, 2], [2, 2, 2]];

/// The column pairs whose determinants form the sextet, in order.
const DET_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Variable index of the matrix entry `T^upper_lower`.
fn entry_var(upper: usize, lower: usize) -> usize {
    match (upper, lower) {
        (1, 1) => 0, // z1
        (2, 1) => 1, // z2
        (1, 2) => 2, // z3
        (2, 2) => 3, // z4
        _ => unreachable!(),
    }
}

/// Coefficient of the source column `source` in the composed column
/// `column`: the symmetrized sum of entry products.
fn substitution_weight(column: usize, source: usize) -> MPoly4 {
    let lower = COLUMN_INDICES[column];
    let target = COLUMN_INDICES[source];
    let mut acc = MPoly4::zero();
    for a in 1..=2usize {
        for b in 1..=2usize {
            for c in 1..=2usize {
                let mut upper = [a, b, c];
                upper.sort_unstable();
                if upper != target {
                    continue;
                }
                let vars = [
                    entry_var(a, lower[0]),
                    entry_var(b, lower[1]),
                    entry_var(c, lower[2]),
                ];
                let mut mono = [0u8; 4];
                for v in vars {
                    mono[v] += 1;
                }
                acc = acc.add(&MPoly4::monomial(Mono4(mono), 1));
            }
        }
    }
    acc
}

impl QuarticForms {
    /// Derives the full table symbolically. Fails only if some cofactor
    /// is not divisible by `det T`, which would mean the expansion logic
    /// is broken.
    pub fn derive() -> Result<Self, Error> {
        let det = MPoly4::det_t();
        let mut forms: [FormTable; 6] = Default::default();
        for (k, &(m, n)) in DET_PAIRS.iter().enumerate() {
            for (g, &(x, y)) in DET_PAIRS.iter().enumerate() {
                let cofactor = substitution_weight(m, x)
                    .mul(&substitution_weight(n, y))
                    .sub(&substitution_weight(m, y).mul(&substitution_weight(n, x)));
                let (quotient, remainder) = cofactor.div_rem(&det);
                if !remainder.is_zero() {
                    return Err(Error::Internal(format!(
                        "cofactor of {} in form {} is not divisible by det T",
                        DET_NAMES[g],
                        k + 1
                    )));
                }
                for (mono, coeff) in quotient.terms() {
                    debug_assert_eq!(mono.total_degree(), 4);
                    forms[k].entry(*mono).or_insert([0; 6])[g] += coeff;
                }
            }
        }
        Ok(Self { forms })
    }

    /// The table derived once and shared read-only.
    pub fn shared() -> &'static Self {
        static TABLE: OnceLock<QuarticForms> = OnceLock::new();
        TABLE.get_or_init(|| Self::derive().expect("form derivation is exact"))
    }

    /// Coefficient table of form `k` in `1..=6`.
    pub fn form(&self, k: usize) -> &FormTable {
        &self.forms[k - 1]
    }

    /// Exact value of form `k` with the determinant symbols bound to `g`
    /// at the point `z = (z1, z2, z3, z4)`.
    pub fn eval<S: Coeff>(&self, k: usize, g: &DetSextet<S>, z: &[S; 4]) -> S {
        let symbols = g.as_array();
        let mut acc = S::zero();
        for (mono, comb) in &self.forms[k - 1] {
            let mut combined = S::zero();
            for (sym, &coeff) in symbols.iter().zip(comb.iter()) {
                if coeff != 0 {
                    combined = combined + S::from_int(coeff) * sym.clone();
                }
            }
            if combined.is_zero() {
                continue;
            }
            let mut term = combined;
            for (var, &exp) in z.iter().zip(mono.0.iter()) {
                for _ in 0..exp {
                    term = term * var.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Differences between the derived table and the tabulated reference.
    pub fn tabulated_mismatches(&self) -> Vec<FormMismatch> {
        let reference = tabulated_forms();
        let mut out = Vec::new();
        for (k, (derived_table, printed_table)) in
            self.forms.iter().zip(reference.iter()).enumerate()
        {
            let mut monos: Vec<Mono4> = derived_table
                .keys()
                .chain(printed_table.keys())
                .copied()
                .collect();
            monos.sort();
            monos.dedup();
            for mono in monos {
                let derived = derived_table.get(&mono).copied().unwrap_or([0; 6]);
                let printed = printed_table.get(&mono).copied().unwrap_or([0; 6]);
                if derived != printed {
                    out.push(FormMismatch {
                        form: k + 1,
                        monomial: mono,
                        printed,
                        derived,
                    });
                }
            }
        }
        out
    }
}

/// A single disagreement between the tabulated reference coefficients and
/// the derived table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMismatch {
    /// Form index `1..=6`.
    pub form: usize,
    pub monomial: Mono4,
    pub printed: DetComb,
    pub derived: DetComb,
}

/// The commonly tabulated closed-form coefficients of the six forms, kept
/// as data under test. The symbolic derivation disagrees with this table
/// at exactly two entries; `tabulated_mismatches` localizes them.
pub fn tabulated_forms() -> [FormTable; 6] {
    // (exponents of z1..z4, determinant symbol index, coefficient)
    const ROWS: [&[([u8; 4], usize, i64)]; 6] = [
        &[
            ([4, 0, 0, 0], 0, 1),
            ([3, 1, 0, 0], 1, 2),
            ([2, 2, 0, 0], 3, 3),
            ([2, 2, 0, 0], 2, 1),
            ([1, 3, 0, 0], 4, 2),
            ([0, 4, 0, 0], 5, 1),
        ],
        &[
            ([3, 0, 1, 0], 0, 2),
            ([3, 0, 0, 1], 1, 1),
            ([2, 1, 1, 0], 1, 3),
            ([2, 1, 0, 1], 3, 3),
            ([2, 1, 0, 1], 2, 1),
            ([1, 2, 1, 0], 3, 3),
            ([1, 2, 1, 0], 2, 1),
            ([1, 2, 0, 1], 4, 3),
            ([0, 3, 1, 0], 5, 1),
            ([0, 3, 0, 1], 5, 2),
        ],
        &[
            ([2, 0, 2, 0], 0, 3),
            ([2, 0, 1, 1], 1, 3),
            ([2, 0, 0, 2], 2, 1),
            ([1, 1, 2, 0], 1, 3),
            ([1, 1, 1, 1], 3, 9),
            ([1, 1, 1, 1], 2, 1),
            ([1, 1, 0, 2], 4, 3),
            ([0, 2, 2, 0], 2, 1),
            ([0, 2, 1, 1], 4, 3),
            ([0, 2, 0, 2], 5, 3),
        ],
        &[
            ([2, 0, 2, 0], 0, 1),
            ([2, 0, 1, 1], 1, 1),
            ([2, 0, 0, 2], 3, 1),
            ([1, 1, 2, 0], 1, 1),
            ([1, 1, 1, 1], 3, 1),
            ([1, 1, 1, 1], 2, 1),
            ([1, 1, 0, 2], 4, 1),
            ([0, 2, 2, 0], 3, 1),
            ([0, 2, 1, 1], 4, 1),
            ([0, 2, 0, 2], 4, 1),
        ],
        &[
            ([1, 0, 3, 0], 0, 2),
            ([0, 1, 3, 0], 1, 1),
            ([1, 0, 2, 1], 1, 3),
            ([0, 1, 2, 1], 3, 3),
            ([0, 1, 2, 1], 2, 1),
            ([1, 0, 1, 2], 3, 3),
            ([1, 0, 1, 2], 2, 1),
            ([0, 1, 1, 2], 4, 3),
            ([1, 0, 0, 3], 4, 1),
            ([0, 1, 0, 3], 5, 2),
        ],
        &[
            ([0, 0, 4, 0], 0, 1),
            ([0, 0, 3, 1], 1, 2),
            ([0, 0, 2, 2], 3, 3),
            ([0, 0, 2, 2], 2, 1),
            ([0, 0, 1, 3], 4, 2),
            ([0, 0, 0, 4], 5, 1),
        ],
    ];
    ROWS.map(|rows| {
        let mut table = FormTable::new();
        for &(exps, g, coeff) in rows {
            table.entry(Mono4(exps)).or_insert([0; 6])[g] += coeff;
        }
        table
    })
}

/// The `(z1, z2, z3, z4)` point read off an affine change's matrix.
pub fn z_point<S: Coeff>(t: &[[S; 2]; 2]) -> [S; 4] {
    [
        t[0][0].clone(),
        t[1][0].clone(),
        t[0][1].clone(),
        t[1][1].clone(),
    ]
}

/// The two sides of the transport identity for each determinant.
#[derive(Debug, Clone, PartialEq)]
pub struct TransportReport<S: Coeff> {
    /// Determinants of the composed map.
    pub actual: [S; 6],
    /// `det` times the form values of the original map.
    pub predicted: [S; 6],
}

impl<S: Coeff> TransportReport<S> {
    pub fn matches(&self, k: usize) -> bool {
        self.actual[k] == self.predicted[k]
    }

    pub fn all_match(&self) -> bool {
        (0..6).all(|k| self.matches(k))
    }
}

/// Checks, exactly, that right composition transports the determinants
/// through the six forms. Singular matrices are allowed; the identity
/// holds regardless.
pub fn right_transport_report<S: Coeff>(
    original: &crate::map::CubicMap<S>,
    change: &crate::map::AffineChange<S>,
) -> TransportReport<S> {
    let forms = QuarticForms::shared();
    let composed = original.compose_right(change);
    let actual = composed.determinants().as_array();
    let g = original.determinants();
    let z = z_point(&change.t);
    let det = change.det();
    let predicted = std::array::from_fn(|k| det.clone() * forms.eval(k + 1, &g, &z));
    TransportReport { actual, predicted }
}

/// Checks that left composition scales every determinant by the matrix
/// determinant of the output-side change. The change must be invertible.
pub fn left_transport_report<S: Coeff>(
    change: &crate::map::AffineChange<S>,
    original: &crate::map::CubicMap<S>,
) -> Result<TransportReport<S>, Error> {
    if !change.is_invertible() {
        return Err(Error::SingularChange);
    }
    let composed = original.compose_left(change);
    let actual = composed.determinants().as_array();
    let det = change.det();
    let predicted = original.determinants().as_array().map(|g| det.clone() * g);
    Ok(TransportReport { actual, predicted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{indefinite_fixture, semidefinite_fixture};
    use crate::map::AffineChange;
    use crate::rational::{rat_int, Rat};
    use num_traits::Zero;

    #[test]
    fn derivation_succeeds_with_zero_remainders() {
        let forms = QuarticForms::derive().unwrap();
        for k in 1..=6 {
            for mono in forms.form(k).keys() {
                assert_eq!(mono.total_degree(), 4);
            }
        }
    }

    #[test]
    fn first_form_matches_the_tabulated_coefficients() {
        let forms = QuarticForms::shared();
        let reference = tabulated_forms();
        assert_eq!(*forms.form(1), reference[0]);
        assert_eq!(*forms.form(3), reference[2]);
        assert_eq!(*forms.form(6), reference[5]);
    }

    #[test]
    fn first_and_last_forms_use_one_column_each() {
        let forms = QuarticForms::shared();
        for mono in forms.form(1).keys() {
            assert_eq!(mono.0[2], 0);
            assert_eq!(mono.0[3], 0);
        }
        for mono in forms.form(6).keys() {
            assert_eq!(mono.0[0], 0);
            assert_eq!(mono.0[1], 0);
        }
        // form 6 is form 1 with z1,z2 renamed to z3,z4
        for (mono, comb) in forms.form(1) {
            let renamed = Mono4([0, 0, mono.0[0], mono.0[1]]);
            assert_eq!(forms.form(6).get(&renamed), Some(comb));
        }
    }

    #[test]
    fn mismatches_hit_exactly_the_two_known_sites() {
        let mismatches = QuarticForms::shared().tabulated_mismatches();
        assert_eq!(mismatches.len(), 2);

        assert_eq!(mismatches[0].form, 2);
        assert_eq!(mismatches[0].monomial, Mono4([0, 3, 1, 0]));
        // tabulated g2222, derived g1222
        assert_eq!(mismatches[0].printed, [0, 0, 0, 0, 0, 1]);
        assert_eq!(mismatches[0].derived, [0, 0, 0, 0, 1, 0]);

        assert_eq!(mismatches[1].form, 4);
        assert_eq!(mismatches[1].monomial, Mono4([0, 2, 0, 2]));
        // tabulated g1222, derived g2222
        assert_eq!(mismatches[1].printed, [0, 0, 0, 0, 1, 0]);
        assert_eq!(mismatches[1].derived, [0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn eval_reproduces_hand_expansions() {
        let forms = QuarticForms::shared();
        let g = semidefinite_fixture().determinants();
        // only the g1122 terms of form 3 survive: z1^2 z4^2 + z1 z2 z3 z4 + z2^2 z3^2
        let z = [rat_int(1), rat_int(0), rat_int(1), rat_int(1)];
        assert_eq!(forms.eval(3, &g, &z), rat_int(1));
        // form 6 = (z3 z4)^2 for this sextet
        let z = [rat_int(0), rat_int(0), rat_int(1), rat_int(1)];
        assert_eq!(forms.eval(6, &g, &z), rat_int(1));
        // homogeneous: zero at the origin
        let z = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        assert_eq!(forms.eval(4, &g, &z), Rat::zero());
    }

    #[test]
    fn right_transport_on_shear_fixture() {
        let shear = AffineChange::linear([[rat_int(1), rat_int(1)], [rat_int(0), rat_int(1)]]);
        let report = right_transport_report(&semidefinite_fixture(), &shear);
        assert!(report.all_match());
        // g1122 of the composed map is 1 = det * form3(1,0,1,1)
        assert_eq!(report.actual[2], rat_int(1));
    }

    #[test]
    fn right_transport_through_identity_is_trivial() {
        let report = right_transport_report(&indefinite_fixture(), &AffineChange::identity());
        assert!(report.all_match());
        assert_eq!(
            report.actual,
            indefinite_fixture().determinants().as_array()
        );
    }

    #[test]
    fn right_transport_vanishes_at_a_quartic_root() {
        // columns (1,1) and (-1,1): the first column is a root of the
        // indefinite fixture's quartic, so the composed g1111 vanishes.
        let t = AffineChange::linear([[rat_int(1), rat_int(-1)], [rat_int(1), rat_int(1)]]);
        let report = right_transport_report(&indefinite_fixture(), &t);
        assert!(report.all_match());
        assert_eq!(report.actual[0], Rat::zero());
    }

    #[test]
    fn left_transport_scales_by_the_determinant() {
        let double = AffineChange::linear([[rat_int(2), rat_int(0)], [rat_int(0), rat_int(2)]]);
        let report = left_transport_report(&double, &indefinite_fixture()).unwrap();
        assert!(report.all_match());
        let scaled = indefinite_fixture()
            .determinants()
            .as_array()
            .map(|g| g * rat_int(4));
        assert_eq!(report.actual, scaled);

        let swap = AffineChange::linear([[rat_int(0), rat_int(1)], [rat_int(1), rat_int(0)]]);
        let report = left_transport_report(&swap, &semidefinite_fixture()).unwrap();
        assert!(report.all_match());
        assert_eq!(report.actual[2], rat_int(-1));

        let singular = AffineChange::linear([[rat_int(1), rat_int(2)], [rat_int(2), rat_int(4)]]);
        assert_eq!(
            left_transport_report(&singular, &indefinite_fixture()),
            Err(Error::SingularChange)
        );
    }
}
