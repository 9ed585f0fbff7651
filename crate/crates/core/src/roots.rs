//! Exact real-root isolation for univariate polynomials.
//!
//! Rational roots are screened out exactly first; what remains of the
//! square-free part is solved in closed form when its degree is at most
//! two (one quadratic extension suffices) and bracketed by disjoint
//! rational isolating intervals otherwise. Intervals are refinable to any
//! requested width without ever losing the root.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::quadext::QuadExt;
use crate::rational::{positive_divisors, Rat};
use crate::unipoly::UniPoly;

/// An exactly known root value.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactValue {
    Rational(Rat),
    Quadratic(QuadExt),
}

impl ExactValue {
    pub fn signum(&self) -> i32 {
        match self {
            ExactValue::Rational(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            ExactValue::Quadratic(q) => q.signum(),
        }
    }

    pub fn as_quad(&self) -> QuadExt {
        match self {
            ExactValue::Rational(r) => QuadExt::from_rational(r.clone()),
            ExactValue::Quadratic(q) => q.clone(),
        }
    }

    pub fn cmp_numeric(&self, other: &ExactValue) -> Ordering {
        self.as_quad().cmp_numeric(&other.as_quad())
    }
}

/// Position of a single real root: exact, or bracketed by an interval.
#[derive(Debug, Clone, PartialEq)]
enum RootState {
    Exact(ExactValue),
    Interval { lo: Rat, hi: Rat },
}

/// One real root of a square-free polynomial.
///
/// Interval roots satisfy `lo < root < hi` with a sign change of the
/// polynomial at the endpoints; refinement bisects and never widens.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolatedRoot {
    poly: UniPoly,
    state: RootState,
}

impl IsolatedRoot {
    pub fn exact_rational(poly: UniPoly, value: Rat) -> Self {
        debug_assert!(poly.eval(&value).is_zero());
        Self {
            poly,
            state: RootState::Exact(ExactValue::Rational(value)),
        }
    }

    pub fn exact_quadratic(poly: UniPoly, value: QuadExt) -> Self {
        debug_assert!(poly.eval_quad(&value).is_zero_value());
        Self {
            poly,
            state: RootState::Exact(ExactValue::Quadratic(value)),
        }
    }

    /// Builds an interval root. The polynomial must change sign over
    /// `[lo, hi]` and hold exactly one root there.
    pub fn bracketed(poly: UniPoly, lo: Rat, hi: Rat) -> Self {
        assert!(lo < hi, "empty bracket");
        assert!(
            poly.eval(&lo).signum() * poly.eval(&hi).signum() == -Rat::one(),
            "no sign change over the bracket"
        );
        Self {
            poly,
            state: RootState::Interval { lo, hi },
        }
    }

    /// The square-free polynomial this root belongs to.
    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn exact_value(&self) -> Option<&ExactValue> {
        match &self.state {
            RootState::Exact(v) => Some(v),
            RootState::Interval { .. } => None,
        }
    }

    pub fn interval(&self) -> Option<(&Rat, &Rat)> {
        match &self.state {
            RootState::Exact(_) => None,
            RootState::Interval { lo, hi } => Some((lo, hi)),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.state, RootState::Exact(_))
    }

    /// Bisects until the bracket is no wider than `width`. Exact roots are
    /// returned unchanged; the refined interval is nested in the old one.
    pub fn refine(&self, width: &Rat) -> Self {
        assert!(width.is_positive(), "refinement width must be positive");
        let (mut lo, mut hi) = match &self.state {
            RootState::Exact(_) => return self.clone(),
            RootState::Interval { lo, hi } => (lo.clone(), hi.clone()),
        };
        let sign_lo = self.poly.eval(&lo).is_positive();
        while &hi - &lo > *width {
            let mid = (&lo + &hi) / Rat::from_integer(2.into());
            let at_mid = self.poly.eval(&mid);
            if at_mid.is_zero() {
                return Self {
                    poly: self.poly.clone(),
                    state: RootState::Exact(ExactValue::Rational(mid)),
                };
            }
            if at_mid.is_positive() == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Self {
            poly: self.poly.clone(),
            state: RootState::Interval { lo, hi },
        }
    }

    /// A rational point within `width` of the root (the root itself when
    /// it is rational).
    pub fn rational_approximation(&self, width: &Rat) -> Rat {
        match &self.state {
            RootState::Exact(ExactValue::Rational(r)) => r.clone(),
            RootState::Exact(ExactValue::Quadratic(q)) => {
                let mut bits = 8u32;
                loop {
                    let (lo, hi) = q.bounds(bits);
                    if &hi - &lo <= *width {
                        return lo;
                    }
                    bits *= 2;
                }
            }
            RootState::Interval { .. } => {
                let refined = self.refine(width);
                match refined.state {
                    RootState::Exact(ExactValue::Rational(r)) => r,
                    RootState::Interval { lo, .. } => lo,
                    RootState::Exact(ExactValue::Quadratic(_)) => unreachable!(),
                }
            }
        }
    }

    /// Exact position of the root relative to a rational point.
    pub fn cmp_rational(&self, x: &Rat) -> Ordering {
        match &self.state {
            RootState::Exact(ExactValue::Rational(r)) => r.cmp(x),
            RootState::Exact(ExactValue::Quadratic(q)) => {
                q.cmp_numeric(&QuadExt::from_rational(x.clone()))
            }
            RootState::Interval { lo, hi } => {
                if self.poly.eval(x).is_zero() {
                    // x can only be the root itself if someone bracketed a
                    // rational root by hand.
                    let root_here = x > lo && x < hi;
                    if root_here {
                        return Ordering::Equal;
                    }
                }
                let mut cur = self.clone();
                loop {
                    let (lo, hi) = cur.interval().expect("interval root");
                    if x <= lo {
                        return Ordering::Greater;
                    }
                    if x >= hi {
                        return Ordering::Less;
                    }
                    let width = (hi - lo) / Rat::from_integer(4.into());
                    cur = cur.refine(&width);
                    if let Some(v) = cur.exact_value() {
                        return v.cmp_numeric(&ExactValue::Rational(x.clone()));
                    }
                }
            }
        }
    }

    /// Rational bounds `lo <= root <= hi`; `bits` controls the precision
    /// used for closed-form irrational values.
    pub fn bounds(&self, bits: u32) -> (Rat, Rat) {
        match &self.state {
            RootState::Interval { lo, hi } => (lo.clone(), hi.clone()),
            RootState::Exact(ExactValue::Rational(r)) => (r.clone(), r.clone()),
            RootState::Exact(ExactValue::Quadratic(q)) => q.bounds(bits),
        }
    }

    /// Total numeric order between two roots known to be distinct unless
    /// they are structurally equal.
    pub fn cmp_root(&self, other: &IsolatedRoot) -> Ordering {
        match (&self.state, &other.state) {
            (RootState::Exact(a), RootState::Exact(b)) => a.cmp_numeric(b),
            (_, RootState::Exact(ExactValue::Rational(r))) => self.cmp_rational(r),
            (RootState::Exact(ExactValue::Rational(r)), _) => other.cmp_rational(r).reverse(),
            _ => {
                if self == other {
                    return Ordering::Equal;
                }
                let mut a = self.clone();
                let mut b = other.clone();
                let mut bits = 32u32;
                loop {
                    let (alo, ahi) = a.bounds(bits);
                    let (blo, bhi) = b.bounds(bits);
                    if ahi <= blo {
                        return Ordering::Less;
                    }
                    if bhi <= alo {
                        return Ordering::Greater;
                    }
                    a = shrink(a);
                    b = shrink(b);
                    bits = bits.saturating_mul(2);
                }
            }
        }
    }
}

/// One refinement step for interval roots; exact roots pass through.
fn shrink(root: IsolatedRoot) -> IsolatedRoot {
    match root.interval() {
        Some((lo, hi)) => {
            let width = (hi - lo) / Rat::from_integer(4.into());
            root.refine(&width)
        }
        None => root,
    }
}

/// Isolates every distinct real root of a nonzero polynomial, in
/// ascending order. Rational roots and the roots of a degree-<=2
/// irrational remainder are exact; higher-degree irrational roots come as
/// disjoint isolating intervals with rational endpoints.
pub fn isolate_real_roots(p: &UniPoly) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    let sf = p.square_free_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }

    let mut roots = Vec::new();
    let mut rest = sf.clone();
    for r in rational_roots(&rest) {
        let linear = UniPoly::new(vec![-r.clone(), Rat::one()]);
        rest = rest.div_exact(&linear);
        roots.push(IsolatedRoot::exact_rational(sf.clone(), r));
    }

    match rest.degree().unwrap_or(0) {
        0 => {}
        1 => {
            // Cannot happen after exact screening; kept for robustness.
            let r = -(rest.coeff(0) / rest.coeff(1));
            roots.push(IsolatedRoot::exact_rational(sf.clone(), r));
        }
        2 => {
            let a = rest.coeff(2);
            let b = rest.coeff(1);
            let c = rest.coeff(0);
            let disc = &b * &b - Rat::from_integer(4.into()) * &a * &c;
            if disc.is_positive() {
                let sqrt_disc = QuadExt::sqrt_of_rational(&disc);
                let two_a = QuadExt::from_rational(Rat::from_integer(2.into()) * &a);
                let minus_b = QuadExt::from_rational(-b.clone());
                let r1 = (minus_b.clone() - sqrt_disc.clone()) / two_a.clone();
                let r2 = (minus_b + sqrt_disc) / two_a;
                for r in [r1, r2] {
                    roots.push(match r.as_rational() {
                        Some(v) => IsolatedRoot::exact_rational(sf.clone(), v.clone()),
                        None => IsolatedRoot::exact_quadratic(sf.clone(), r),
                    });
                }
            }
            // disc == 0 is impossible (square-free); disc < 0 has no real roots.
        }
        _ => {
            for (lo, hi) in isolate_by_bisection(&rest) {
                roots.push(IsolatedRoot::bracketed(rest.clone(), lo, hi));
            }
        }
    }

    // Shrink intervals until they exclude the exact roots found above, so
    // that the list is totally ordered by position.
    let exact: Vec<ExactValue> = roots
        .iter()
        .filter_map(|r| r.exact_value().cloned())
        .collect();
    for root in roots.iter_mut() {
        if root.is_exact() {
            continue;
        }
        for value in &exact {
            loop {
                let (lo, hi) = root.interval().expect("interval root");
                let inside = match value {
                    ExactValue::Rational(r) => r > lo && r < hi,
                    ExactValue::Quadratic(q) => {
                        q.cmp_numeric(&QuadExt::from_rational(lo.clone())) == Ordering::Greater
                            && q.cmp_numeric(&QuadExt::from_rational(hi.clone())) == Ordering::Less
                    }
                };
                if !inside {
                    break;
                }
                let width = (hi - lo) / Rat::from_integer(4.into());
                *root = root.refine(&width);
            }
        }
    }

    roots.sort_by(|a, b| a.cmp_root(b));
    roots
}

/// All rational roots of a polynomial, exactly, via divisor screening of
/// the primitive integer form.
pub fn rational_roots(p: &UniPoly) -> Vec<Rat> {
    if p.is_zero() || p.degree() == Some(0) {
        return Vec::new();
    }
    // Clear denominators to a primitive integer polynomial.
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();

    let mut roots = Vec::new();
    // Factor out t^k first.
    let zero_order = ints.iter().take_while(|c| c.is_zero()).count();
    if zero_order > 0 {
        roots.push(Rat::zero());
    }
    let ints = &ints[zero_order..];
    if ints.len() <= 1 {
        roots.sort();
        return roots;
    }
    let constant = &ints[0];
    let leading = ints.last().unwrap();
    for num in positive_divisors(constant) {
        for den in positive_divisors(leading) {
            for sign in [1i64, -1] {
                let candidate = Rat::new(&num * BigInt::from(sign), den.clone());
                if p.eval(&candidate).is_zero() && !roots.contains(&candidate) {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Sturm-guided bisection producing one open interval per real root of a
/// square-free polynomial with no rational roots.
fn isolate_by_bisection(p: &UniPoly) -> Vec<(Rat, Rat)> {
    let bound = p.root_bound();
    let lo = -bound.clone();
    let hi = bound;
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((lo, hi)) = stack.pop() {
        // Endpoints are rational and p has no rational roots, so counting
        // never hits an endpoint root.
        let count = p
            .count_real_roots_between(&lo, &hi)
            .expect("clean endpoints");
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rat::from_integer(2.into());
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}
