//! Deterministic generators and independent brute-force cross-checks.
//!
//! Everything here is a pure function of a [`GeneratorConfig`]: identical
//! seeds give identical streams, and every comparison is an exact
//! rational equality. The ground-truth quartic builder constructs forms
//! with known factorization so classifier output can be checked against
//! construction rather than against itself.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::classify::sample_points;
use crate::forms::{tabulated_forms, FormMismatch, QuarticForms};
use crate::map::{AffineChange, CubicMap, DetSextet};
use crate::quadext::QuadExt;
use crate::quartic::BinaryQuartic;
use crate::rational::{rat_int, Rat};

/// Seeded generation parameters. Numerators are drawn from
/// `[-bound, bound]` and denominators from `[1, bound]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub bound: i64,
    pub count: usize,
}

impl GeneratorConfig {
    pub fn new(seed: u64, bound: i64, count: usize) -> Self {
        assert!(bound >= 1, "coefficient bound must be at least 1");
        Self { seed, bound, count }
    }

    fn rng(&self, stream: u64) -> ChaCha20Rng {
        let mut rng = ChaCha20Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    /// Stream of cubic maps, each with a nonzero cubic tensor.
    pub fn cubic_maps(&self) -> CubicMapStream {
        CubicMapStream {
            rng: self.rng(1),
            bound: self.bound,
            remaining: self.count,
        }
    }

    /// Stream of invertible affine changes; `with_translation` off keeps
    /// every translation at zero.
    pub fn invertible_changes(&self, with_translation: bool) -> ChangeStream {
        ChangeStream {
            rng: self.rng(2),
            bound: self.bound,
            remaining: self.count,
            with_translation,
            force_singular: false,
        }
    }

    /// Stream of singular linear changes (second column proportional to
    /// the first).
    pub fn singular_changes(&self) -> ChangeStream {
        ChangeStream {
            rng: self.rng(3),
            bound: self.bound,
            remaining: self.count,
            with_translation: false,
            force_singular: true,
        }
    }

    /// Stream of maps whose cubic columns are all proportional, so the
    /// associated quartic vanishes identically.
    pub fn proportional_column_maps(&self) -> ProportionalMapStream {
        ProportionalMapStream {
            rng: self.rng(4),
            bound: self.bound,
            remaining: self.count,
        }
    }

    /// Stream of quartics with known factorization.
    pub fn factored_quartics(&self) -> FactoredQuarticStream {
        FactoredQuarticStream {
            rng: self.rng(5),
            bound: self.bound,
            remaining: self.count,
        }
    }
}

fn random_rat(rng: &mut ChaCha20Rng, bound: i64) -> Rat {
    let numer = rng.gen_range(-bound..=bound);
    let denom = rng.gen_range(1..=bound);
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

fn random_rat_nonzero(rng: &mut ChaCha20Rng, bound: i64) -> Rat {
    loop {
        let r = random_rat(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Iterator of seeded cubic maps.
pub struct CubicMapStream {
    rng: ChaCha20Rng,
    bound: i64,
    remaining: usize,
}

impl Iterator for CubicMapStream {
    type Item = CubicMap;

    fn next(&mut self) -> Option<CubicMap> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        loop {
            let f = [0; 2].map(|_| [0; 4].map(|_| random_rat(&mut self.rng, self.bound)));
            if f.iter().flatten().all(Rat::is_zero) {
                continue;
            }
            let mut map = CubicMap::from_tensor(f);
            map.q = [0; 2].map(|_| [0; 3].map(|_| random_rat(&mut self.rng, self.bound)));
            map.l = [0; 2].map(|_| [0; 2].map(|_| random_rat(&mut self.rng, self.bound)));
            map.c = [0; 2].map(|_| random_rat(&mut self.rng, self.bound));
            return Some(map);
        }
    }
}

/// Iterator of seeded affine changes.
pub struct ChangeStream {
    rng: ChaCha20Rng,
    bound: i64,
    remaining: usize,
    with_translation: bool,
    force_singular: bool,
}

impl Iterator for ChangeStream {
    type Item = AffineChange;

    fn next(&mut self) -> Option<AffineChange> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let t = loop {
            if self.force_singular {
                let col = [
                    random_rat(&mut self.rng, self.bound),
                    random_rat(&mut self.rng, self.bound),
                ];
                let factor = random_rat(&mut self.rng, self.bound);
                break [
                    [col[0].clone(), &col[0] * &factor],
                    [col[1].clone(), &col[1] * &factor],
                ];
            }
            let t = [0; 2].map(|_| [0; 2].map(|_| random_rat(&mut self.rng, self.bound)));
            let det = &t[0][0] * &t[1][1] - &t[0][1] * &t[1][0];
            if !det.is_zero() {
                break t;
            }
        };
        let a = if self.with_translation {
            [
                random_rat(&mut self.rng, self.bound),
                random_rat(&mut self.rng, self.bound),
            ]
        } else {
            [Rat::zero(), Rat::zero()]
        };
        Some(AffineChange { t, a })
    }
}

/// Iterator of maps forced into the zero class.
pub struct ProportionalMapStream {
    rng: ChaCha20Rng,
    bound: i64,
    remaining: usize,
}

impl Iterator for ProportionalMapStream {
    type Item = CubicMap;

    fn next(&mut self) -> Option<CubicMap> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let base = loop {
            let v = [
                random_rat(&mut self.rng, self.bound),
                random_rat(&mut self.rng, self.bound),
            ];
            if !v.iter().all(Rat::is_zero) {
                break v;
            }
        };
        let mults = loop {
            let m = [0; 4].map(|_| random_rat(&mut self.rng, self.bound));
            if !m.iter().all(Rat::is_zero) {
                break m;
            }
        };
        let f = [0, 1].map(|i| [0, 1, 2, 3].map(|k| &mults[k] * &base[i]));
        let mut map = CubicMap::from_tensor(f);
        map.l = [0; 2].map(|_| [0; 2].map(|_| random_rat(&mut self.rng, self.bound)));
        Some(map)
    }
}

/// A factor of a constructed quartic.
#[derive(Debug, Clone, PartialEq)]
pub enum GroundFactor {
    /// `v z1 - u z2`, vanishing at the projective point `(u : v)`.
    Linear { u: Rat, v: Rat },
    /// `a z1^2 + b z1 z2 + c z2^2`, irreducible over the rationals.
    Quadratic { a: Rat, b: Rat, c: Rat },
}

impl GroundFactor {
    /// Dense coefficients as a binary form, highest `z1` power first.
    fn coefficients(&self) -> Vec<Rat> {
        match self {
            GroundFactor::Linear { u, v } => vec![v.clone(), -u.clone()],
            GroundFactor::Quadratic { a, b, c } => vec![a.clone(), b.clone(), c.clone()],
        }
    }

    /// Real projective roots with exact values.
    fn real_roots(&self) -> Vec<GroundRoot> {
        match self {
            GroundFactor::Linear { u, v } => {
                if v.is_zero() {
                    vec![GroundRoot::Infinity]
                } else {
                    vec![GroundRoot::Rational(u / v)]
                }
            }
            GroundFactor::Quadratic { a, b, c } => {
                let disc = b * b - rat_int(4) * a * c;
                if !disc.is_positive() {
                    return Vec::new();
                }
                let sqrt_disc = QuadExt::sqrt_of_rational(&disc);
                let two_a = QuadExt::from_rational(rat_int(2) * a);
                let minus_b = QuadExt::from_rational(-b.clone());
                vec![
                    GroundRoot::Quadratic((minus_b.clone() - sqrt_disc.clone()) / two_a.clone()),
                    GroundRoot::Quadratic((minus_b + sqrt_disc) / two_a),
                ]
            }
        }
    }

    fn eval(&self, z1: &Rat, z2: &Rat) -> Rat {
        match self {
            GroundFactor::Linear { u, v } => v * z1 - u * z2,
            GroundFactor::Quadratic { a, b, c } => a * z1 * z1 + b * z1 * z2 + c * z2 * z2,
        }
    }
}

/// Exact location of a constructed root.
#[derive(Debug, Clone, PartialEq)]
pub enum GroundRoot {
    Infinity,
    Rational(Rat),
    Quadratic(QuadExt),
}

impl GroundRoot {
    pub fn same_as(&self, other: &GroundRoot) -> bool {
        match (self, other) {
            (GroundRoot::Infinity, GroundRoot::Infinity) => true,
            (GroundRoot::Rational(a), GroundRoot::Rational(b)) => a == b,
            (GroundRoot::Quadratic(a), GroundRoot::Quadratic(b)) => a == b,
            (GroundRoot::Rational(a), GroundRoot::Quadratic(b))
            | (GroundRoot::Quadratic(b), GroundRoot::Rational(a)) => b.as_rational() == Some(a),
            _ => false,
        }
    }
}

/// A quartic with fully known factorization, used as classifier ground
/// truth.
#[derive(Debug, Clone, PartialEq)]
pub struct FactoredQuartic {
    pub scale: Rat,
    /// Distinct factors with exponents; total degree 4.
    pub factors: Vec<(GroundFactor, u32)>,
}

impl FactoredQuartic {
    /// Multiplies the factors out.
    pub fn expand(&self) -> BinaryQuartic {
        let mut coeffs = vec![self.scale.clone()];
        for (factor, exponent) in &self.factors {
            for _ in 0..*exponent {
                coeffs = multiply_forms(&coeffs, &factor.coefficients());
            }
        }
        assert_eq!(
            coeffs.len(),
            5,
            "constructed factors must have total degree 4"
        );
        BinaryQuartic::new([
            coeffs[0].clone(),
            coeffs[1].clone(),
            coeffs[2].clone(),
            coeffs[3].clone(),
            coeffs[4].clone(),
        ])
    }

    /// Expected distinct real roots with multiplicities.
    pub fn expected_roots(&self) -> Vec<(GroundRoot, u32)> {
        let mut out: Vec<(GroundRoot, u32)> = Vec::new();
        for (factor, exponent) in &self.factors {
            for root in factor.real_roots() {
                match out.iter_mut().find(|(r, _)| r.same_as(&root)) {
                    Some((_, m)) => *m += exponent,
                    None => out.push((root, *exponent)),
                }
            }
        }
        out
    }

    /// Expected class name, sign and semi-definite subcase, computed from
    /// the construction alone.
    pub fn expected_outcome(&self) -> (&'static str, Option<i32>, Option<&'static str>) {
        let roots = self.expected_roots();
        if roots.iter().any(|(_, m)| m % 2 == 1) {
            return ("indefinite", None, None);
        }
        let sign = self.sign_at_first_clean_point();
        if roots.is_empty() {
            return ("definite", Some(sign), None);
        }
        let mut mults: Vec<u32> = roots.iter().map(|(_, m)| *m).collect();
        mults.sort_unstable();
        let subcase = match mults.as_slice() {
            [2, 2] => "two-double-roots",
            [4] => "quadruple-root",
            [2] => "one-double-root",
            other => unreachable!("even multiplicities: {other:?}"),
        };
        ("semi-definite", Some(sign), Some(subcase))
    }

    /// Sign at the first sample point where no factor vanishes, decided by
    /// exact factor evaluation rather than by the expanded quartic.
    fn sign_at_first_clean_point(&self) -> i32 {
        for (u, v) in sample_points(16, false) {
            let mut sign = if self.scale.is_positive() { 1 } else { -1 };
            let mut vanished = false;
            for (factor, exponent) in &self.factors {
                let value = factor.eval(&u, &v);
                if value.is_zero() {
                    vanished = true;
                    break;
                }
                if value.is_negative() && exponent % 2 == 1 {
                    sign = -sign;
                }
            }
            if !vanished {
                return sign;
            }
        }
        unreachable!("a nonzero quartic has at most four projective roots")
    }
}

fn multiply_forms(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Iterator of seeded factored quartics.
pub struct FactoredQuarticStream {
    rng: ChaCha20Rng,
    bound: i64,
    remaining: usize,
}

impl FactoredQuarticStream {
    fn linear(&mut self) -> GroundFactor {
        if self.rng.gen_range(0..8u8) == 0 {
            GroundFactor::Linear {
                u: Rat::one(),
                v: Rat::zero(),
            }
        } else {
            GroundFactor::Linear {
                u: random_rat(&mut self.rng, self.bound),
                v: Rat::one(),
            }
        }
    }

    fn quadratic(&mut self) -> GroundFactor {
        loop {
            let a = random_rat_nonzero(&mut self.rng, self.bound);
            let b = random_rat(&mut self.rng, self.bound);
            let c = random_rat(&mut self.rng, self.bound);
            let disc = &b * &b - rat_int(4) * &a * &c;
            if disc.is_zero() {
                continue;
            }
            // Irreducible over the rationals: a positive discriminant must
            // not be a rational square.
            if disc.is_positive() && QuadExt::sqrt_of_rational(&disc).as_rational().is_some() {
                continue;
            }
            return GroundFactor::Quadratic { a, b, c };
        }
    }
}

impl Iterator for FactoredQuarticStream {
    type Item = FactoredQuartic;

    fn next(&mut self) -> Option<FactoredQuartic> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let scale = random_rat_nonzero(&mut self.rng, self.bound);
        let mut factors: Vec<(GroundFactor, u32)> = Vec::new();
        let mut remaining_degree = 4u32;
        while remaining_degree > 0 {
            let use_quadratic = remaining_degree >= 2 && self.rng.gen_bool(0.5);
            let (factor, degree) = if use_quadratic {
                (self.quadratic(), 2)
            } else {
                (self.linear(), 1)
            };
            let exponent = self.rng.gen_range(1..=remaining_degree / degree);
            remaining_degree -= degree * exponent;
            // Merge coinciding factors so expected multiplicities stay
            // truthful.
            match factors.iter_mut().find(|(f, _)| proportional(f, &factor)) {
                Some((_, m)) => *m += exponent,
                None => factors.push((factor, exponent)),
            }
        }
        Some(FactoredQuartic { scale, factors })
    }
}

fn proportional(a: &GroundFactor, b: &GroundFactor) -> bool {
    let (ca, cb) = (a.coefficients(), b.coefficients());
    if ca.len() != cb.len() {
        return false;
    }
    for i in 0..ca.len() {
        for j in (i + 1)..ca.len() {
            if &ca[i] * &cb[j] != &ca[j] * &cb[i] {
                return false;
            }
        }
    }
    true
}

/// Exact sign sampling of a quartic over deterministic projective points.
#[derive(Debug, Clone, PartialEq)]
pub struct SignProfile {
    pub saw_positive: bool,
    pub saw_negative: bool,
    pub zero_points: Vec<(Rat, Rat)>,
}

/// Evaluates the quartic at `n` deterministic points spread over the
/// projective line: the axes, then the mediant tree with both signs.
pub fn sign_profile(q: &BinaryQuartic, n: usize) -> SignProfile {
    let mut profile = SignProfile {
        saw_positive: false,
        saw_negative: false,
        zero_points: Vec::new(),
    };
    for (u, v) in sample_points(n, true) {
        let value = q.eval(&u, &v);
        if value.is_positive() {
            profile.saw_positive = true;
        } else if value.is_negative() {
            profile.saw_negative = true;
        } else {
            profile.zero_points.push((u, v));
        }
    }
    profile
}

/// Outcome of the brute-force conformance scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ConformanceReport {
    /// Trials of the direct-composition check of the derived table.
    pub trials: usize,
    /// Trials where some determinant disagreed with the derived-table
    /// prediction; must stay zero.
    pub derived_mismatches: usize,
    /// Sites where the tabulated reference disagrees with the derivation.
    pub tabulated_sites: Vec<FormMismatch>,
}

/// Re-derives every composed determinant numerically for seeded maps and
/// changes, compares them against the derived-table prediction, and diffs
/// the derived table against the tabulated reference.
pub fn conformance_check(cfg: &GeneratorConfig) -> ConformanceReport {
    let forms = QuarticForms::shared();
    let mut derived_mismatches = 0;
    let mut trials = 0;
    for (map, change) in cfg.cubic_maps().zip(cfg.invertible_changes(true)) {
        trials += 1;
        let report = crate::forms::right_transport_report(&map, &change);
        if !report.all_match() {
            derived_mismatches += 1;
        }
    }
    ConformanceReport {
        trials,
        derived_mismatches,
        tabulated_sites: forms.tabulated_mismatches(),
    }
}

/// Evaluates one tabulated form at a rational point with the determinant
/// symbols bound to `g`; the numeric side of the reference comparison.
pub fn eval_tabulated_form(k: usize, g: &DetSextet, z: &[Rat; 4]) -> Rat {
    let table = &tabulated_forms()[k - 1];
    let symbols = g.as_array();
    let mut acc = Rat::zero();
    for (mono, comb) in table {
        let mut combined = Rat::zero();
        for (sym, &coeff) in symbols.iter().zip(comb.iter()) {
            if coeff != 0 {
                combined += rat_int(coeff) * sym.clone();
            }
        }
        let mut term = combined;
        for (var, &exp) in z.iter().zip(mono.0.iter()) {
            for _ in 0..exp {
                term *= var.clone();
            }
        }
        acc += term;
    }
    acc
}

/// Scans seeded integer maps for ones whose quartic is indefinite with
/// only simple roots, at least one of them interval-isolated. Exercises
/// the certified-residual normalization path.
pub fn interval_root_indefinite_maps(cfg: &GeneratorConfig) -> Vec<CubicMap> {
    let mut out = Vec::new();
    let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
    rng.set_stream(6);
    while out.len() < cfg.count {
        let f = [0; 2].map(|_| {
            [0; 4].map(|_| Rat::from_integer(rng.gen_range(-cfg.bound..=cfg.bound).into()))
        });
        let map = CubicMap::from_tensor(f);
        if !map.is_cubic() {
            continue;
        }
        if map.determinants().quartic().is_zero() {
            continue;
        }
        let Ok(class) = crate::classify::classify_map(&map) else {
            continue;
        };
        if !matches!(class.kind, crate::classify::Kind::Indefinite { .. }) {
            continue;
        }
        if class.roots.len() >= 2
            && class.roots.iter().all(|r| r.multiplicity == 1)
            && class.roots.iter().any(|r| !r.is_exact())
        {
            out.push(map);
        }
    }
    out
}
