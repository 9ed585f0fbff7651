//! Sign-type and projective-root classification of the binary quartic.
//!
//! A nonzero binary quartic falls into one of three cases, read off the
//! parity of its real projective root multiplicities: it is indefinite
//! when some real root has odd multiplicity, semi-definite when real
//! roots exist and all have even multiplicity, and definite when there
//! are no real roots at all. The zero quartic is its own class. Roots
//! are computed exactly, with isolating intervals where no closed form
//! in one quadratic extension exists.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::error::Error;
use crate::map::CubicMap;
use crate::quartic::BinaryQuartic;
use crate::rational::{rat_int, Rat};
use crate::roots::{isolate_real_roots, ExactValue, IsolatedRoot};
use crate::unipoly::UniPoly;

/// A point of the real projective line.
#[derive(Debug, Clone, PartialEq)]
pub enum ProjectivePoint {
    /// The point `(1 : 0)`.
    Infinity,
    /// A finite point `(t : 1)`.
    Finite(IsolatedRoot),
}

/// A projective root with its multiplicity in the quartic.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveRoot {
    pub point: ProjectivePoint,
    pub multiplicity: u32,
}

impl ProjectiveRoot {
    pub fn is_exact(&self) -> bool {
        match &self.point {
            ProjectivePoint::Infinity => true,
            ProjectivePoint::Finite(root) => root.is_exact(),
        }
    }

    /// Structural identity of two roots from the same quartic.
    pub fn same_point(&self, other: &ProjectiveRoot) -> bool {
        match (&self.point, &other.point) {
            (ProjectivePoint::Infinity, ProjectivePoint::Infinity) => true,
            (ProjectivePoint::Finite(a), ProjectivePoint::Finite(b)) => {
                a.cmp_root(b) == Ordering::Equal
            }
            _ => false,
        }
    }
}

/// Sign taken by a quartic that does not change sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// Subcase of the semi-definite class, by double-root structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemiDefiniteSubcase {
    /// Two distinct roots of multiplicity two.
    TwoDoubleRoots,
    /// One root of multiplicity four.
    QuadrupleRoot,
    /// One root of multiplicity two and no other real roots.
    OneDoubleRoot,
}

/// Two rational points exhibiting both strict signs of an indefinite
/// quartic.
#[derive(Debug, Clone, PartialEq)]
pub struct SignWitness {
    pub positive_at: (Rat, Rat),
    pub negative_at: (Rat, Rat),
}

/// The classification outcome.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Kind {
    Zero,
    Indefinite {
        witness: SignWitness,
    },
    SemiDefinite {
        sign: Sign,
        subcase: SemiDefiniteSubcase,
    },
    Definite {
        sign: Sign,
    },
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Zero => "zero",
            Kind::Indefinite { .. } => "indefinite",
            Kind::SemiDefinite { .. } => "semi-definite",
            Kind::Definite { .. } => "definite",
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            Kind::SemiDefinite { sign, .. } | Kind::Definite { sign } => Some(*sign),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub kind: Kind,
    /// Distinct real projective roots: the root at infinity first, then
    /// finite roots in descending order.
    pub roots: Vec<ProjectiveRoot>,
}

/// Deterministic projective sample points `(1,0), (0,1), (1,1), (2,1),
/// (1,2), (3,1), ...`: the axes followed by the mediant tree of positive
/// rationals in breadth-first order, big side first. With
/// `with_negatives`, each tree point is followed by its mirror image.
pub fn sample_points(count: usize, with_negatives: bool) -> Vec<(Rat, Rat)> {
    let mut out: Vec<(Rat, Rat)> = vec![(rat_int(1), rat_int(0)), (rat_int(0), rat_int(1))];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(((0i64, 1i64), (1i64, 0i64)));
    while out.len() < count {
        let ((a, b), (c, d)) = queue.pop_front().expect("mediant tree is infinite");
        let mediant = (a + c, b + d);
        out.push((rat_int(mediant.0), rat_int(mediant.1)));
        if with_negatives && out.len() < count {
            out.push((rat_int(-mediant.0), rat_int(mediant.1)));
        }
        queue.push_back((mediant, (c, d)));
        queue.push_back(((a, b), mediant));
    }
    out.truncate(count);
    out
}

/// All distinct real projective roots of a nonzero quartic with their
/// multiplicities (total at most 4), ordered with infinity first and
/// finite roots descending.
pub fn projective_real_roots(q: &BinaryQuartic) -> Result<Vec<ProjectiveRoot>, Error> {
    if q.is_zero() {
        return Err(Error::ZeroQuartic);
    }
    let p = q.dehomogenized();
    let degree = p.degree().unwrap_or(0);
    let mut roots = Vec::new();
    if degree < 4 {
        roots.push(ProjectiveRoot {
            point: ProjectivePoint::Infinity,
            multiplicity: (4 - degree) as u32,
        });
    }
    if degree > 0 {
        let mut finite = finite_roots_with_multiplicity(&p)?;
        // descending order
        finite.reverse();
        roots.extend(finite);
    }
    Ok(roots)
}

/// Ascending finite roots with multiplicities, via the square-free
/// decomposition. Isolating intervals from different factors are refined
/// until the whole list is totally ordered.
fn finite_roots_with_multiplicity(p: &UniPoly) -> Result<Vec<ProjectiveRoot>, Error> {
    let factors = p.square_free_decomposition()?;
    let mut entries: Vec<(IsolatedRoot, u32)> = Vec::new();
    for (factor, multiplicity) in &factors {
        for root in isolate_real_roots(factor) {
            entries.push((root, *multiplicity));
        }
    }
    separate(&mut entries);
    entries.sort_by(|a, b| a.0.cmp_root(&b.0));
    Ok(entries
        .into_iter()
        .map(|(root, multiplicity)| ProjectiveRoot {
            point: ProjectivePoint::Finite(root),
            multiplicity,
        })
        .collect())
}

/// Refines interval roots until they exclude every exact root and every
/// other interval in the list. Distinctness is guaranteed because the
/// square-free factors are pairwise coprime.
fn separate(entries: &mut [(IsolatedRoot, u32)]) {
    let exact: Vec<ExactValue> = entries
        .iter()
        .filter_map(|(r, _)| r.exact_value().cloned())
        .collect();
    for (root, _) in entries.iter_mut() {
        if root.is_exact() {
            continue;
        }
        for value in &exact {
            loop {
                let (lo, hi) = root.interval().expect("interval root");
                let lo_side = value.cmp_numeric(&ExactValue::Rational(lo.clone()));
                let hi_side = value.cmp_numeric(&ExactValue::Rational(hi.clone()));
                if lo_side != Ordering::Greater || hi_side != Ordering::Less {
                    break;
                }
                let width = (hi - lo) / rat_int(4);
                *root = root.refine(&width);
            }
        }
    }
    // Pairwise interval separation.
    loop {
        let mut touched = false;
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                let overlap = match (entries[i].0.interval(), entries[j].0.interval()) {
                    (Some((alo, ahi)), Some((blo, bhi))) => alo < bhi && blo < ahi,
                    _ => false,
                };
                if overlap {
                    let width_i = {
                        let (lo, hi) = entries[i].0.interval().unwrap();
                        (hi - lo) / rat_int(4)
                    };
                    entries[i].0 = entries[i].0.refine(&width_i);
                    let width_j = {
                        let (lo, hi) = entries[j].0.interval().unwrap();
                        (hi - lo) / rat_int(4)
                    };
                    entries[j].0 = entries[j].0.refine(&width_j);
                    touched = true;
                }
            }
        }
        if !touched {
            break;
        }
    }
}

/// Classifies a binary quartic exactly.
pub fn classify_quartic(q: &BinaryQuartic) -> Classification {
    if q.is_zero() {
        return Classification {
            kind: Kind::Zero,
            roots: Vec::new(),
        };
    }
    let roots = projective_real_roots(q).expect("nonzero quartic");
    let kind = if roots.is_empty() {
        Kind::Definite {
            sign: constant_sign(q),
        }
    } else if roots.iter().all(|r| r.multiplicity % 2 == 0) {
        let mut mults: Vec<u32> = roots.iter().map(|r| r.multiplicity).collect();
        mults.sort_unstable();
        let subcase = match mults.as_slice() {
            [2, 2] => SemiDefiniteSubcase::TwoDoubleRoots,
            [4] => SemiDefiniteSubcase::QuadrupleRoot,
            [2] => SemiDefiniteSubcase::OneDoubleRoot,
            other => unreachable!("even multiplicities summing to <= 4: {other:?}"),
        };
        Kind::SemiDefinite {
            sign: constant_sign(q),
            subcase,
        }
    } else {
        Kind::Indefinite {
            witness: sign_witness(q, &roots),
        }
    };
    Classification { kind, roots }
}

/// Classifies a cubic map through its determinant quartic.
pub fn classify_map(map: &CubicMap) -> Result<Classification, Error> {
    if !map.is_cubic() {
        return Err(Error::NotCubic);
    }
    Ok(classify_quartic(&map.determinants().quartic()))
}

/// Sign of a quartic of constant sign, read at the first sample point
/// that is not a root. Five candidates always suffice: a nonzero quartic
/// has at most four projective roots.
fn constant_sign(q: &BinaryQuartic) -> Sign {
    for (u, v) in sample_points(8, false) {
        let value = q.eval(&u, &v);
        if value.is_positive() {
            return Sign::Positive;
        }
        if value.is_negative() {
            return Sign::Negative;
        }
    }
    unreachable!("a nonzero quartic cannot vanish at five distinct projective points")
}

/// Exhibits rational points of both strict signs for an indefinite
/// quartic by sampling around its finite roots.
fn sign_witness(q: &BinaryQuartic, roots: &[ProjectiveRoot]) -> SignWitness {
    let mut positive = None;
    let mut negative = None;
    for t in sample_points_around_roots(roots) {
        let value = q.eval(&t, &rat_int(1));
        if value.is_positive() && positive.is_none() {
            positive = Some((t.clone(), rat_int(1)));
        } else if value.is_negative() && negative.is_none() {
            negative = Some((t, rat_int(1)));
        }
        if let (Some(p), Some(n)) = (&positive, &negative) {
            return SignWitness {
                positive_at: p.clone(),
                negative_at: n.clone(),
            };
        }
    }
    unreachable!("an indefinite quartic changes sign across a finite odd root")
}

/// Rational points covering every sign region of the dehomogenized
/// quartic: one strictly below all finite roots, one strictly between
/// each adjacent pair, one strictly above.
fn sample_points_around_roots(roots: &[ProjectiveRoot]) -> Vec<Rat> {
    // Finite roots arrive in descending order; work ascending.
    let finite: Vec<&IsolatedRoot> = roots
        .iter()
        .rev()
        .filter_map(|r| match &r.point {
            ProjectivePoint::Finite(root) => Some(root),
            ProjectivePoint::Infinity => None,
        })
        .collect();
    let mut points = Vec::new();
    if finite.is_empty() {
        return points;
    }
    points.push(finite[0].bounds(16).0 - rat_int(1));
    for pair in finite.windows(2) {
        points.push(strictly_between(pair[0], pair[1]));
    }
    points.push(finite.last().unwrap().bounds(16).1 + rat_int(1));
    points
}

/// A rational strictly between two distinct ordered roots, found by
/// refining both until their bounds separate.
fn strictly_between(a: &IsolatedRoot, b: &IsolatedRoot) -> Rat {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut bits = 16u32;
    loop {
        let (_, ahi) = a.bounds(bits);
        let (blo, _) = b.bounds(bits);
        if ahi < blo {
            return (ahi + blo) / rat_int(2);
        }
        a = shrink_once(a);
        b = shrink_once(b);
        bits = bits.saturating_mul(2);
    }
}

fn shrink_once(root: IsolatedRoot) -> IsolatedRoot {
    match root.interval() {
        Some((lo, hi)) => {
            let width = (hi - lo) / rat_int(4);
            root.refine(&width)
        }
        None => root,
    }
}
