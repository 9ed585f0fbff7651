//! Exact classification of cubic maps of the plane, from the command
//! line. See `--help` for the subcommands; every emitted number is an
//! exact rational, a quadratic-extension triple, or an isolating
//! interval.

mod document;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cubic_forms::classify::{classify_map, Kind};
use cubic_forms::error::Error;
use cubic_forms::forms::{left_transport_report, right_transport_report};
use cubic_forms::map::CubicMap;
use cubic_forms::normalize::{
    default_residual, normalize_semidefinite, normalize_two_roots, normalize_zero_case,
    refinement_report, Normalization,
};
use cubic_forms::oracle::{conformance_check, GeneratorConfig};
use cubic_forms::rational::{parse_rat, Rat};

use document::MapDocument;
use report::{
    classification_json, mismatch_site_json, normalization_json, normalization_not_defined,
    refinement_json, verify_normalization, verify_zero_case, ConformanceJson, Report,
};

/// Input or usage failure.
const EXIT_USAGE: u8 = 1;
/// An internal identity failed; by definition an implementation bug.
const EXIT_INTERNAL: u8 = 2;
/// The requested residual was not reached within the iteration budget.
const EXIT_RESIDUAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cubic-forms",
    version,
    about = "Exact invariants, classification and normal forms for cubic maps of the plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the determinant sextet and the associated binary quartic.
    Forms {
        file: PathBuf,
        /// Emit the full machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Classify the map by sign type and projective root structure.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Construct the normal form for the map's class.
    Normalize {
        file: PathBuf,
        /// Residual bound for interval-root normalizations, as `p/q`
        /// (default 1/10^30).
        #[arg(long)]
        residual: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check the transport identities and the tabulated-form conformance
    /// scan over seeded random cases.
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        bound: i64,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }

    fn from_core(error: Error) -> Self {
        match error {
            Error::NotCubic | Error::BadRational(_) => Failure::usage(error.to_string()),
            Error::ResidualBudget => Failure {
                code: EXIT_RESIDUAL,
                message: error.to_string(),
            },
            other => Failure::internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Forms { file, json } => cmd_forms(&file).map(|r| (r, json)),
        Command::Classify { file, json } => cmd_classify(&file).map(|r| (r, json)),
        Command::Normalize {
            file,
            residual,
            json,
        } => cmd_normalize(&file, residual.as_deref()).map(|r| (r, json)),
        Command::Verify {
            trials,
            seed,
            bound,
            json,
        } => cmd_verify(trials, seed, bound).map(|r| (r, json)),
    };
    match outcome {
        Ok((report, json)) => {
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.render_human());
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn load_document(file: &PathBuf) -> Result<(MapDocument, CubicMap), Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
    let doc = MapDocument::parse(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
    let map = doc
        .to_map()
        .map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
    let canonical = doc.canonicalize().expect("validated document");
    Ok((canonical, map))
}

fn cmd_forms(file: &PathBuf) -> Result<Report, Failure> {
    let (doc, map) = load_document(file)?;
    let g = map.determinants();
    let q = g.quartic();
    Ok(Report::empty().with_forms(&doc, &g, &q))
}

fn cmd_classify(file: &PathBuf) -> Result<Report, Failure> {
    let (doc, map) = load_document(file)?;
    let class = classify_map(&map).map_err(Failure::from_core)?;
    let g = map.determinants();
    let q = g.quartic();
    let mut report = Report::empty().with_forms(&doc, &g, &q);
    report.classification = Some(classification_json(&class));
    Ok(report)
}

fn cmd_normalize(file: &PathBuf, residual: Option<&str>) -> Result<Report, Failure> {
    let (doc, map) = load_document(file)?;
    let residual = match residual {
        None => default_residual(),
        Some(text) => {
            let value = parse_rat(text)
                .map_err(|_| Failure::usage(format!("--residual: not a rational: {text:?}")))?;
            if value <= Rat::from_integer(0.into()) {
                return Err(Failure::usage("--residual must be positive"));
            }
            value
        }
    };

    let class = classify_map(&map).map_err(Failure::from_core)?;
    let g = map.determinants();
    let q = g.quartic();
    let mut report = Report::empty().with_forms(&doc, &g, &q);
    report.classification = Some(classification_json(&class));

    match &class.kind {
        Kind::Zero => {
            let result = normalize_zero_case(&map).map_err(Failure::from_core)?;
            verify_zero_case(&map, &result).map_err(Failure::internal)?;
            let wrapped = Normalization::Rational(result);
            verify_normalization(&wrapped).map_err(Failure::internal)?;
            report.normalization = Some(normalization_json(&wrapped));
        }
        Kind::Definite { .. } => {
            report.normalization = Some(normalization_not_defined("partial: definite case"));
        }
        Kind::Indefinite { .. } => {
            let result = normalize_two_roots(&map, &class.roots[0], &class.roots[1], &residual)
                .map_err(Failure::from_core)?;
            verify_normalization(&result).map_err(Failure::internal)?;
            report.normalization = Some(normalization_json(&result));
            attach_refinement(&mut report, &map)?;
        }
        Kind::SemiDefinite { .. } => {
            let result = normalize_semidefinite(&map).map_err(Failure::from_core)?;
            verify_normalization(&result).map_err(Failure::internal)?;
            report.normalization = Some(normalization_json(&result));
            attach_refinement(&mut report, &map)?;
        }
    }
    Ok(report)
}

fn attach_refinement(report: &mut Report, map: &CubicMap) -> Result<(), Failure> {
    match refinement_report(map) {
        Ok(r) => {
            report.refinement = Some(refinement_json(&r));
            Ok(())
        }
        // a single known root has no pairs to enumerate
        Err(Error::TooFewRoots) => Ok(()),
        Err(other) => Err(Failure::from_core(other)),
    }
}

fn cmd_verify(trials: usize, seed: u64, bound: i64) -> Result<Report, Failure> {
    if trials == 0 {
        return Err(Failure::usage("--trials must be at least 1"));
    }
    if bound < 1 {
        return Err(Failure::usage("--bound must be at least 1"));
    }

    let maps = GeneratorConfig::new(seed, bound, trials).cubic_maps();
    let invertible = GeneratorConfig::new(seed, bound, trials).invertible_changes(true);
    let mut singular = GeneratorConfig::new(seed, bound, trials).singular_changes();
    let mut right_failures = 0;
    let mut singular_trials = 0;
    for (i, (map, change)) in maps.zip(invertible).enumerate() {
        let change = if i % 20 == 19 {
            singular_trials += 1;
            singular.next().expect("singular stream")
        } else {
            change
        };
        if !right_transport_report(&map, &change).all_match() {
            right_failures += 1;
        }
    }

    let maps = GeneratorConfig::new(seed.wrapping_add(1), bound, trials).cubic_maps();
    let changes =
        GeneratorConfig::new(seed.wrapping_add(2), bound, trials).invertible_changes(true);
    let mut left_failures = 0;
    for (map, change) in maps.zip(changes) {
        match left_transport_report(&change, &map) {
            Ok(report) => {
                if !report.all_match() {
                    left_failures += 1;
                }
            }
            Err(_) => left_failures += 1,
        }
    }

    let scan = conformance_check(&GeneratorConfig::new(seed, bound, trials.min(200)));

    let mut report = Report::empty();
    report.conformance = Some(ConformanceJson {
        right_trials: trials,
        right_failures,
        singular_trials,
        left_trials: trials,
        left_failures,
        derived_check_trials: scan.trials,
        derived_mismatches: scan.derived_mismatches,
        tabulated_sites: scan
            .tabulated_sites
            .iter()
            .map(mismatch_site_json)
            .collect(),
    });

    if right_failures > 0 || left_failures > 0 || scan.derived_mismatches > 0 {
        // still print the report for diagnosis, then fail
        eprint!("{}", report.render_human());
        return Err(Failure::internal(
            "transport identity failed; this is a bug",
        ));
    }
    Ok(report)
}
