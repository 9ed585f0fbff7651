//! Machine-readable reports. Every number is an exact rational string,
//! a quadratic-extension triple, or an interval with its defining
//! polynomial; nothing is ever rounded. Identical inputs produce
//! byte-identical reports.

use serde::Serialize;

use cubic_forms::classify::{Classification, Kind, ProjectivePoint, ProjectiveRoot, Sign};
use cubic_forms::forms::{DetComb, FormMismatch, DET_NAMES};
use cubic_forms::map::{AffineChange, CubicMap, DetSextet};
use cubic_forms::normalize::{
    Exactness, Normalization, NormalizationResult, RefinementReport, VanishingPattern,
};
use cubic_forms::quadext::QuadExt;
use cubic_forms::quartic::BinaryQuartic;
use cubic_forms::rational::{format_rat, Rat};
use cubic_forms::scalar::Coeff;

use crate::document::MapDocument;

/// Scalar rendering: a rational string, or a quadratic-extension triple.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Rational(String),
    Quadratic { p: String, q: String, d: u64 },
}

impl ScalarJson {
    pub fn rational(value: &Rat) -> Self {
        ScalarJson::Rational(format_rat(value))
    }

    pub fn quadratic(value: &QuadExt) -> Self {
        match value.as_rational() {
            Some(r) => ScalarJson::Rational(format_rat(r)),
            None => ScalarJson::Quadratic {
                p: format_rat(value.rational_part()),
                q: format_rat(value.radical_part()),
                d: value.radicand(),
            },
        }
    }

    pub fn render(&self) -> String {
        match self {
            ScalarJson::Rational(s) => s.clone(),
            ScalarJson::Quadratic { p, q, d } => {
                let radical = match q.as_str() {
                    "1" => format!("sqrt({d})"),
                    "-1" => format!("-sqrt({d})"),
                    _ => format!("{q}*sqrt({d})"),
                };
                if p == "0" {
                    radical
                } else if let Some(tail) = radical.strip_prefix('-') {
                    format!("{p} - {tail}")
                } else {
                    format!("{p} + {radical}")
                }
            }
        }
    }
}

trait ToScalarJson: Coeff {
    fn to_json(&self) -> ScalarJson;
}

impl ToScalarJson for Rat {
    fn to_json(&self) -> ScalarJson {
        ScalarJson::rational(self)
    }
}

impl ToScalarJson for QuadExt {
    fn to_json(&self) -> ScalarJson {
        ScalarJson::quadratic(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SextetJson {
    pub g1111: ScalarJson,
    pub g1112: ScalarJson,
    pub g1122: ScalarJson,
    pub g1212: ScalarJson,
    pub g1222: ScalarJson,
    pub g2222: ScalarJson,
}

fn sextet_json<S: ToScalarJson>(g: &DetSextet<S>) -> SextetJson {
    SextetJson {
        g1111: g.g1111.to_json(),
        g1112: g.g1112.to_json(),
        g1122: g.g1122.to_json(),
        g1212: g.g1212.to_json(),
        g1222: g.g1222.to_json(),
        g2222: g.g2222.to_json(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum RootJson {
    Infinity {
        multiplicity: u32,
    },
    Rational {
        value: String,
        multiplicity: u32,
    },
    Quadratic {
        value: ScalarJson,
        multiplicity: u32,
    },
    Interval {
        lo: String,
        hi: String,
        poly: Vec<String>,
        multiplicity: u32,
    },
}

fn root_json(root: &ProjectiveRoot) -> RootJson {
    match &root.point {
        ProjectivePoint::Infinity => RootJson::Infinity {
            multiplicity: root.multiplicity,
        },
        ProjectivePoint::Finite(r) => match (r.exact_value(), r.interval()) {
            (Some(v), _) => match v.as_quad().as_rational() {
                Some(t) => RootJson::Rational {
                    value: format_rat(t),
                    multiplicity: root.multiplicity,
                },
                None => RootJson::Quadratic {
                    value: ScalarJson::quadratic(&v.as_quad()),
                    multiplicity: root.multiplicity,
                },
            },
            (None, Some((lo, hi))) => RootJson::Interval {
                lo: format_rat(lo),
                hi: format_rat(hi),
                poly: r.poly().coeffs().iter().map(format_rat).collect(),
                multiplicity: root.multiplicity,
            },
            _ => unreachable!(),
        },
    }
}

impl RootJson {
    pub fn render(&self) -> String {
        match self {
            RootJson::Infinity { multiplicity } => format!("(1 : 0) multiplicity {multiplicity}"),
            RootJson::Rational {
                value,
                multiplicity,
            } => {
                format!("({value} : 1) multiplicity {multiplicity}")
            }
            RootJson::Quadratic {
                value,
                multiplicity,
            } => {
                format!("({} : 1) multiplicity {multiplicity}", value.render())
            }
            RootJson::Interval {
                lo,
                hi,
                multiplicity,
                ..
            } => {
                format!("(t : 1), t isolated in ({lo}, {hi}), multiplicity {multiplicity}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessJson {
    pub positive_at: [String; 2],
    pub negative_at: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationJson {
    pub kind: String,
    pub sign: Option<String>,
    pub subcase: Option<String>,
    pub roots: Vec<RootJson>,
    pub witness: Option<WitnessJson>,
}

pub fn classification_json(class: &Classification) -> ClassificationJson {
    let sign = class.kind.sign().map(|s| {
        match s {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
        }
        .to_string()
    });
    let subcase = match &class.kind {
        Kind::SemiDefinite { subcase, .. } => Some(
            match subcase {
                cubic_forms::classify::SemiDefiniteSubcase::TwoDoubleRoots => "two-double-roots",
                cubic_forms::classify::SemiDefiniteSubcase::QuadrupleRoot => "quadruple-root",
                cubic_forms::classify::SemiDefiniteSubcase::OneDoubleRoot => "one-double-root",
            }
            .to_string(),
        ),
        _ => None,
    };
    let witness = match &class.kind {
        Kind::Indefinite { witness } => Some(WitnessJson {
            positive_at: [
                format_rat(&witness.positive_at.0),
                format_rat(&witness.positive_at.1),
            ],
            negative_at: [
                format_rat(&witness.negative_at.0),
                format_rat(&witness.negative_at.1),
            ],
        }),
        _ => None,
    };
    ClassificationJson {
        kind: class.kind.name().to_string(),
        sign,
        subcase,
        roots: class.roots.iter().map(root_json).collect(),
        witness,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChangeJson {
    pub t: [[ScalarJson; 2]; 2],
    pub a: [ScalarJson; 2],
}

fn change_json<S: ToScalarJson>(change: &AffineChange<S>) -> ChangeJson {
    ChangeJson {
        t: [0, 1].map(|i| [0, 1].map(|j| change.t[i][j].to_json())),
        a: [0, 1].map(|i| change.a[i].to_json()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapJson {
    pub f: [[ScalarJson; 4]; 2],
    pub q: [[ScalarJson; 3]; 2],
    pub l: [[ScalarJson; 2]; 2],
    pub c: [ScalarJson; 2],
}

fn map_json<S: ToScalarJson>(map: &CubicMap<S>) -> MapJson {
    MapJson {
        f: [0, 1].map(|i| [0, 1, 2, 3].map(|k| map.f[i][k].to_json())),
        q: [0, 1].map(|i| [0, 1, 2].map(|k| map.q[i][k].to_json())),
        l: [0, 1].map(|i| [0, 1].map(|k| map.l[i][k].to_json())),
        c: [0, 1].map(|i| map.c[i].to_json()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalizationJson {
    /// `exact`, `approximate`, or `not-defined`.
    pub status: String,
    pub note: Option<String>,
    pub left: Option<ChangeJson>,
    pub right: Option<ChangeJson>,
    pub normalized: Option<MapJson>,
    pub achieved: Option<SextetJson>,
    pub residual_bound: Option<String>,
}

fn normalization_result_json<S: ToScalarJson>(
    result: &NormalizationResult<S>,
) -> NormalizationJson {
    let (status, residual_bound) = match &result.exactness {
        Exactness::Exact => ("exact".to_string(), None),
        Exactness::Approximate { residual_bound } => {
            ("approximate".to_string(), Some(format_rat(residual_bound)))
        }
    };
    let note = result
        .partial
        .then(|| "partial: second column is a canonical completion".to_string());
    NormalizationJson {
        status,
        note,
        left: Some(change_json(&result.left)),
        right: Some(change_json(&result.right)),
        normalized: Some(map_json(&result.normalized)),
        achieved: Some(sextet_json(&result.achieved)),
        residual_bound,
    }
}

pub fn normalization_json(normalization: &Normalization) -> NormalizationJson {
    match normalization {
        Normalization::Rational(r) => normalization_result_json(r),
        Normalization::Quadratic(r) => normalization_result_json(r),
    }
}

/// The marker block emitted when no normal form is defined for the class.
pub fn normalization_not_defined(note: &str) -> NormalizationJson {
    NormalizationJson {
        status: "not-defined".to_string(),
        note: Some(note.to_string()),
        left: None,
        right: None,
        normalized: None,
        achieved: None,
        residual_bound: None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VanishingJson {
    pub g1112: bool,
    pub g1122: bool,
    pub g1212: bool,
    pub g1222: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairJson {
    pub first: RootJson,
    pub second: RootJson,
    pub decided: bool,
    pub vanishing: Option<VanishingJson>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RefinementJson {
    pub pairs: Vec<PairJson>,
    pub summary: Vec<String>,
    pub complete: bool,
}

pub fn refinement_json(report: &RefinementReport) -> RefinementJson {
    let pair_json = |pattern: &Option<VanishingPattern>,
                     first: &ProjectiveRoot,
                     second: &ProjectiveRoot| PairJson {
        first: root_json(first),
        second: root_json(second),
        decided: pattern.is_some(),
        vanishing: pattern.map(|p| VanishingJson {
            g1112: p.g1112,
            g1122: p.g1122,
            g1212: p.g1212,
            g1222: p.g1222,
        }),
        label: pattern.and_then(|p| p.label()),
    };
    RefinementJson {
        pairs: report
            .pairs
            .iter()
            .map(|pair| pair_json(&pair.pattern, &pair.first, &pair.second))
            .collect(),
        summary: report.summary.clone(),
        complete: report.complete,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MismatchSiteJson {
    pub form: usize,
    pub monomial: String,
    pub printed: String,
    pub derived: String,
}

fn render_comb(comb: &DetComb) -> String {
    let mut parts = Vec::new();
    for (coeff, name) in comb.iter().zip(DET_NAMES.iter()) {
        match coeff {
            0 => {}
            1 => parts.push((*name).to_string()),
            c => parts.push(format!("{c}*{name}")),
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub fn mismatch_site_json(site: &FormMismatch) -> MismatchSiteJson {
    MismatchSiteJson {
        form: site.form,
        monomial: site.monomial.to_string(),
        printed: render_comb(&site.printed),
        derived: render_comb(&site.derived),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConformanceJson {
    pub right_trials: usize,
    pub right_failures: usize,
    pub singular_trials: usize,
    pub left_trials: usize,
    pub left_failures: usize,
    pub derived_check_trials: usize,
    pub derived_mismatches: usize,
    pub tabulated_sites: Vec<MismatchSiteJson>,
}

/// The full report: blocks are present when the command computes them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<MapDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinants: Option<SextetJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quartic: Option<[String; 5]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization: Option<NormalizationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refinement: Option<RefinementJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conformance: Option<ConformanceJson>,
}

impl Report {
    pub fn empty() -> Self {
        Report {
            input: None,
            determinants: None,
            quartic: None,
            classification: None,
            normalization: None,
            refinement: None,
            conformance: None,
        }
    }

    pub fn with_forms(mut self, doc: &MapDocument, g: &DetSextet, q: &BinaryQuartic) -> Self {
        self.input = Some(doc.clone());
        self.determinants = Some(sextet_json(g));
        self.quartic = Some([0, 1, 2, 3, 4].map(|k| format_rat(&q.coeffs[k])));
        self
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization");
        out.push('\n');
        out
    }

    /// Deterministic human-readable summary.
    pub fn render_human(&self) -> String {
        let mut lines = Vec::new();
        if let Some(g) = &self.determinants {
            lines.push(format!(
                "determinants: g1111={} g1112={} g1122={} g1212={} g1222={} g2222={}",
                g.g1111.render(),
                g.g1112.render(),
                g.g1122.render(),
                g.g1212.render(),
                g.g1222.render(),
                g.g2222.render()
            ));
        }
        if let Some(q) = &self.quartic {
            lines.push(format!("quartic: {}", q.join(" ")));
        }
        if let Some(class) = &self.classification {
            let mut line = format!("class: {}", class.kind);
            if let Some(sign) = &class.sign {
                line.push_str(&format!(" {sign}"));
            }
            if let Some(subcase) = &class.subcase {
                line.push_str(&format!(" ({subcase})"));
            }
            lines.push(line);
            for root in &class.roots {
                lines.push(format!("root: {}", root.render()));
            }
            if let Some(witness) = &class.witness {
                lines.push(format!(
                    "witness: positive at ({} : {}), negative at ({} : {})",
                    witness.positive_at[0],
                    witness.positive_at[1],
                    witness.negative_at[0],
                    witness.negative_at[1]
                ));
            }
        }
        if let Some(n) = &self.normalization {
            let mut line = format!("normalization: {}", n.status);
            if let Some(bound) = &n.residual_bound {
                line.push_str(&format!(" (residual bound {bound})"));
            }
            if let Some(note) = &n.note {
                line.push_str(&format!(" [{note}]"));
            }
            lines.push(line);
            if let Some(left) = &n.left {
                lines.push(format!("left: {}", render_change(left)));
            }
            if let Some(right) = &n.right {
                lines.push(format!("right: {}", render_change(right)));
            }
            if let Some(achieved) = &n.achieved {
                lines.push(format!(
                    "achieved: g1111={} g1112={} g1122={} g1212={} g1222={} g2222={}",
                    achieved.g1111.render(),
                    achieved.g1112.render(),
                    achieved.g1122.render(),
                    achieved.g1212.render(),
                    achieved.g1222.render(),
                    achieved.g2222.render()
                ));
            }
        }
        if let Some(r) = &self.refinement {
            let summary = if r.summary.is_empty() {
                "none".to_string()
            } else {
                r.summary.join(" ")
            };
            let completeness = if r.complete { "complete" } else { "incomplete" };
            lines.push(format!("refinement: {summary} ({completeness})"));
            for pair in &r.pairs {
                let verdict = match (&pair.decided, &pair.label) {
                    (false, _) => "undetermined".to_string(),
                    (true, Some(label)) => label.clone(),
                    (true, None) => "none".to_string(),
                };
                lines.push(format!(
                    "pair: {} | {} -> {verdict}",
                    pair.first.render(),
                    pair.second.render()
                ));
            }
        }
        if let Some(c) = &self.conformance {
            lines.push(format!(
                "right-composition identity: {}/{} exact ({} singular)",
                c.right_trials - c.right_failures,
                c.right_trials,
                c.singular_trials
            ));
            lines.push(format!(
                "left-composition identity: {}/{} exact",
                c.left_trials - c.left_failures,
                c.left_trials
            ));
            lines.push(format!(
                "derived-table spot checks: {} mismatches in {} trials",
                c.derived_mismatches, c.derived_check_trials
            ));
            lines.push(format!(
                "tabulated reference: {} corrected sites",
                c.tabulated_sites.len()
            ));
            for site in &c.tabulated_sites {
                lines.push(format!(
                    "  form {} at {}: printed {}, derived {}",
                    site.form, site.monomial, site.printed, site.derived
                ));
            }
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

fn render_change(change: &ChangeJson) -> String {
    format!(
        "[[{}, {}], [{}, {}]] + ({}, {})",
        change.t[0][0].render(),
        change.t[0][1].render(),
        change.t[1][0].render(),
        change.t[1][1].render(),
        change.a[0].render(),
        change.a[1].render()
    )
}

/// Re-derives the claims of a normalization block from the normalized
/// coefficients before the report is emitted. Any discrepancy is an
/// internal error.
pub fn verify_normalization(normalization: &Normalization) -> Result<(), String> {
    use num_traits::Signed;
    use num_traits::Zero;
    match normalization {
        Normalization::Rational(r) => {
            let again = r.normalized.determinants();
            if again != r.achieved {
                return Err("achieved sextet does not match a recomputation".into());
            }
            match &r.exactness {
                Exactness::Exact => {
                    if !r.partial && (!again.g1111.is_zero() || !again.g2222.is_zero()) {
                        return Err("exactness claim not backed by zero determinants".into());
                    }
                    if r.partial && !again.g1111.is_zero() {
                        return Err("partial normalization left g1111 nonzero".into());
                    }
                }
                Exactness::Approximate { residual_bound } => {
                    if again.g1111.abs() > *residual_bound || again.g2222.abs() > *residual_bound {
                        return Err("residual bound claim not met".into());
                    }
                }
            }
        }
        Normalization::Quadratic(r) => {
            let again = r.normalized.determinants();
            if again != r.achieved {
                return Err("achieved sextet does not match a recomputation".into());
            }
            if !again.g1111.is_zero() || !again.g2222.is_zero() {
                return Err("exactness claim not backed by zero determinants".into());
            }
        }
    }
    Ok(())
}

/// Re-checks a zero-case result: second cubic row cleared exactly and the
/// left change reproduces the normalized map.
pub fn verify_zero_case(
    original: &CubicMap,
    result: &NormalizationResult<Rat>,
) -> Result<(), String> {
    use num_traits::Zero;
    if !result.normalized.f[1].iter().all(Rat::is_zero) {
        return Err("second cubic row not cleared".into());
    }
    if original.compose_left(&result.left) != result.normalized {
        return Err("left change does not reproduce the normalized map".into());
    }
    Ok(())
}
