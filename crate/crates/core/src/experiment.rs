//! Seeded batch experiments: construct a design, simulate outcomes, corrupt
//! them, decode, and score, over many independent trials.
//!
//! Trial i derives its seed purely from `(config seed, i)`, so reports are
//! reproducible and extending the trial count never changes earlier rows.
//! Trials run in parallel; reports are ordered by trial index.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decode::{
    algorithm1_decode, comp_decode, default_isolation_blocks,
    make_single_isolation_pair_with_blocks,
};
use crate::matrix::MeasurementMatrix;
use crate::model::{sample_ground_truth, validate_spec, ModelError, ModelSpec};
use crate::oracle::{apply_noise, majority_collapse, run_tests, tile_repeats, OutcomeVector};
use crate::seeding::{derive_u64, TAG_MATRIX, TAG_TRIAL};

/// Errors from configuration, trial execution, and report emission.
#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    /// A pipeline stage failed inside one trial.
    #[error("trial {trial}: {message}")]
    Trial { trial: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("report serialization: {0}")]
    Csv(#[from] csv::Error),
    #[error("report serialization: {0}")]
    Json(#[from] serde_json::Error),
}

/// How each trial's measurement design is built and decoded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixRecipe {
    /// Random isolation selector over a bit-test identifier, decoded block
    /// by block. `blocks` defaults to [`default_isolation_blocks`].
    SingleIsolationPair {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        blocks: Option<usize>,
    },
    /// Flat Bernoulli design decoded by the cover decoder; reports only a
    /// defective candidate set.
    BernoulliComp { tests: usize, density: f64 },
}

/// A complete batch description: the population model, the design recipe,
/// the repetition factor for noise tolerance, and the trial schedule.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub model: ModelSpec,
    pub recipe: MatrixRecipe,
    /// Consecutive copies of each test; majority voting collapses them.
    #[serde(default = "default_repetition")]
    pub repetition_factor: usize,
    pub trials: usize,
    pub seed: u64,
    /// Default report destination; command-line flags may override it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

fn default_repetition() -> usize {
    1
}

impl ExperimentConfig {
    /// Checks schedule and recipe invariants plus the embedded model.
    pub fn validate(&self) -> Result<(), ExperimentError> {
        if self.trials < 1 {
            return Err(ExperimentError::InvalidConfig(
                "trial count must be at least 1".into(),
            ));
        }
        if self.repetition_factor < 1 {
            return Err(ExperimentError::InvalidConfig(
                "repetition factor must be at least 1".into(),
            ));
        }
        if self.model.noise.max_flips > 0 && self.repetition_factor.is_multiple_of(2) {
            return Err(ExperimentError::InvalidConfig(format!(
                "repetition factor {} must be odd when noise is enabled (majority vote)",
                self.repetition_factor
            )));
        }
        match &self.recipe {
            MatrixRecipe::SingleIsolationPair { blocks } => {
                if blocks == &Some(0) {
                    return Err(ExperimentError::InvalidConfig(
                        "selector block count must be at least 1".into(),
                    ));
                }
            }
            MatrixRecipe::BernoulliComp { tests, density } => {
                if *tests < 1 {
                    return Err(ExperimentError::InvalidConfig(
                        "test count must be at least 1".into(),
                    ));
                }
                if !(*density > 0.0 && *density < 1.0) {
                    return Err(ExperimentError::InvalidConfig(format!(
                        "invalid density {density}: must lie strictly between 0 and 1"
                    )));
                }
            }
        }
        validate_spec(&self.model)?;
        Ok(())
    }
}

/// Outcome summary of one trial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub trial: usize,
    /// Seed derived for this trial from the config seed.
    pub seed: u64,
    /// Tests physically run, repetition included.
    pub t: usize,
    /// Decode wall time in whole milliseconds; environment-dependent and
    /// excluded from any reproducibility comparison of substantive fields.
    pub decode_ms: u64,
    pub s1: usize,
    pub s2: usize,
    pub s3: usize,
    pub d_covered: bool,
    pub h_covered: bool,
    pub b_covered: bool,
    pub s1_extra: usize,
    pub s2_extra: usize,
    pub s3_extra: usize,
}

/// Fixed CSV column order for report emission.
pub const REPORT_HEADER: [&str; 13] = [
    "trial", "seed", "t", "decode_ms", "s1", "s2", "s3", "d_covered", "h_covered", "b_covered",
    "s1_extra", "s2_extra", "s3_extra",
];

/// Report file format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format {other:?}")),
        }
    }
}

/// Runs every trial of `cfg` and returns reports ordered by trial index.
///
/// The report fields other than `decode_ms` are a pure function of the
/// config. Each trial samples a truth, builds its design, simulates clean
/// outcomes, tiles them by the repetition factor, injects noise, collapses
/// repeats by majority vote, decodes, and scores coverage. Repetition
/// copies share the base test's identity: a repeated test is the same pool
/// read again, so per-test role and gap resolutions agree across copies.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<TrialReport>, ExperimentError> {
    cfg.validate()?;
    let mut reports = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            run_trial(cfg, trial).map_err(|message| ExperimentError::Trial { trial, message })
        })
        .collect::<Result<Vec<TrialReport>, ExperimentError>>()?;
    reports.sort_by_key(|r| r.trial);
    Ok(reports)
}

fn run_trial(cfg: &ExperimentConfig, trial: usize) -> Result<TrialReport, String> {
    let trial_seed = derive_u64(&[cfg.seed, trial as u64, TAG_TRIAL]);
    let spec = cfg.model.reseeded(trial_seed);
    let truth = sample_ground_truth(&spec, trial_seed).map_err(|e| e.to_string())?;
    let matrix_seed = derive_u64(&[trial_seed, TAG_MATRIX]);
    let factor = cfg.repetition_factor;

    let (clean, group, decoded, elapsed_ms) = match &cfg.recipe {
        MatrixRecipe::SingleIsolationPair { blocks } => {
            let m0 = spec.sparsity_bound();
            let blocks = blocks.unwrap_or_else(|| default_isolation_blocks(spec.n, m0));
            let pair = make_single_isolation_pair_with_blocks(spec.n, m0, blocks, matrix_seed);
            let design = pair.measurement_matrix();
            let clean = run_tests(&design, &truth, &spec).map_err(|e| e.to_string())?;
            let collapsed = corrupt_and_collapse(&clean, pair.block_len(), factor, &spec)?;
            let start = Instant::now();
            let sets = algorithm1_decode(&collapsed, &pair).map_err(|e| e.to_string())?;
            let elapsed_ms = start.elapsed().as_millis() as u64;
            (clean, pair.block_len(), sets, elapsed_ms)
        }
        MatrixRecipe::BernoulliComp { tests, density } => {
            let design = MeasurementMatrix::bernoulli(*tests, spec.n, *density, matrix_seed)
                .map_err(|e| e.to_string())?;
            let clean = run_tests(&design, &truth, &spec).map_err(|e| e.to_string())?;
            let collapsed = corrupt_and_collapse(&clean, 1, factor, &spec)?;
            let start = Instant::now();
            let candidates = comp_decode(&collapsed, &design).map_err(|e| e.to_string())?;
            let elapsed_ms = start.elapsed().as_millis() as u64;
            let mut sets = crate::decode::DecodedSets::default();
            sets.defectives.extend(candidates);
            (clean, 1, sets, elapsed_ms)
        }
    };
    let _ = group;

    let covered = |set: &std::collections::BTreeSet<usize>, members: &[usize]| {
        members.iter().all(|j| set.contains(j))
    };
    let extra = |set: &std::collections::BTreeSet<usize>, members: &[usize]| {
        set.iter().filter(|j| !members.contains(j)).count()
    };
    Ok(TrialReport {
        trial,
        seed: trial_seed,
        t: clean.len() * factor,
        decode_ms: elapsed_ms,
        s1: decoded.defectives.len(),
        s2: decoded.inhibitors.len(),
        s3: decoded.hybrids.len(),
        d_covered: covered(&decoded.defectives, truth.defectives()),
        h_covered: covered(&decoded.inhibitors, truth.inhibitors()),
        b_covered: covered(&decoded.hybrids, truth.hybrids()),
        s1_extra: extra(&decoded.defectives, truth.defectives()),
        s2_extra: extra(&decoded.inhibitors, truth.inhibitors()),
        s3_extra: extra(&decoded.hybrids, truth.hybrids()),
    })
}

/// Tiles clean outcomes by the repetition factor, applies the configured
/// noise to the repeated vector, and majority-collapses back.
fn corrupt_and_collapse(
    clean: &OutcomeVector,
    group: usize,
    factor: usize,
    spec: &ModelSpec,
) -> Result<OutcomeVector, String> {
    let tiled = tile_repeats(clean, group, factor).map_err(|e| e.to_string())?;
    let noisy = apply_noise(&tiled, &spec.noise, None).map_err(|e| e.to_string())?;
    majority_collapse(&noisy, group, factor).map_err(|e| e.to_string())
}

/// Writes reports to `writer` in the chosen format. CSV always begins with
/// [`REPORT_HEADER`], even for an empty report list.
pub fn write_report<W: Write>(
    reports: &[TrialReport],
    writer: W,
    format: ReportFormat,
) -> Result<(), ExperimentError> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(writer);
            w.write_record(REPORT_HEADER)?;
            for report in reports {
                w.serialize(report)?;
            }
            w.flush()?;
        }
        ReportFormat::Json => {
            let mut w = writer;
            serde_json::to_writer_pretty(&mut w, reports)?;
            writeln!(w)?;
        }
    }
    Ok(())
}

/// Writes reports to a file; see [`write_report`].
pub fn emit_report<P: AsRef<Path>>(
    reports: &[TrialReport],
    path: P,
    format: ReportFormat,
) -> Result<(), ExperimentError> {
    let file = BufWriter::new(File::create(path)?);
    write_report(reports, file, format)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{
        DefectiveModel, GapPolicy, HybridPolicy, InhibitorModel, NoiseMode, NoiseSpec,
    };

    fn cgt_config(n: usize, d: usize, trials: usize) -> ExperimentConfig {
        ExperimentConfig {
            model: ModelSpec {
                n,
                d,
                h: 0,
                b: 0,
                defective_model: DefectiveModel::Classical,
                inhibitor_model: InhibitorModel::None,
                hybrid_policy: HybridPolicy::PerRunRole(Default::default()),
                gap_policy: GapPolicy::AlwaysNegative,
                noise: NoiseSpec::none(),
            },
            recipe: MatrixRecipe::SingleIsolationPair { blocks: None },
            repetition_factor: 1,
            trials,
            seed: 7,
            out: None,
        }
    }

    #[test]
    fn config_rejects_bad_schedules() {
        let mut cfg = cgt_config(16, 2, 0);
        assert!(matches!(
            cfg.validate(),
            Err(ExperimentError::InvalidConfig(msg)) if msg.contains("trial count")
        ));
        cfg.trials = 1;
        cfg.model.noise = NoiseSpec {
            max_flips: 1,
            mode: NoiseMode::RandomSeeded(0),
        };
        cfg.repetition_factor = 2;
        assert!(matches!(
            cfg.validate(),
            Err(ExperimentError::InvalidConfig(msg)) if msg.contains("odd")
        ));
        cfg.repetition_factor = 3;
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn config_rejects_bad_recipes() {
        let mut cfg = cgt_config(16, 2, 1);
        cfg.recipe = MatrixRecipe::BernoulliComp {
            tests: 10,
            density: 1.5,
        };
        assert!(matches!(
            cfg.validate(),
            Err(ExperimentError::InvalidConfig(msg)) if msg.contains("invalid density")
        ));
        cfg.recipe = MatrixRecipe::SingleIsolationPair { blocks: Some(0) };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn single_trial_covers_defectives() {
        let cfg = cgt_config(64, 2, 1);
        let reports = run_experiment(&cfg).unwrap();
        assert_eq!(reports.len(), 1);
        let report = &reports[0];
        assert!(report.d_covered);
        assert!(report.h_covered && report.b_covered);
        assert_eq!(report.s2, 0);
        assert_eq!(report.s3, 0);
        assert_eq!(report.t, default_isolation_blocks(64, 2) * 7);
    }

    #[test]
    fn reports_are_deterministic_and_trial_stable() {
        let cfg = cgt_config(32, 2, 6);
        let a = run_experiment(&cfg).unwrap();
        let b = run_experiment(&cfg).unwrap();
        assert_eq!(a, b);
        // extending the schedule preserves earlier trials.
        let mut longer = cfg.clone();
        longer.trials = 9;
        let c = run_experiment(&longer).unwrap();
        assert_eq!(&c[..6], &a[..]);
    }

    #[test]
    fn decoded_set_sizes_respect_block_cap() {
        let cfg = cgt_config(48, 3, 8);
        for report in run_experiment(&cfg).unwrap() {
            let cap = default_isolation_blocks(48, 3) * 3;
            assert!(report.s1 <= cap);
            if report.d_covered {
                assert!(report.s1_extra <= cap - 3);
            }
        }
    }

    #[test]
    fn repetition_with_noise_matches_noiseless_run() {
        let mut noisy_cfg = cgt_config(64, 2, 10);
        noisy_cfg.model.noise = NoiseSpec {
            max_flips: 1,
            mode: NoiseMode::RandomSeeded(3),
        };
        noisy_cfg.repetition_factor = 3;
        let clean_cfg = cgt_config(64, 2, 10);
        let noisy = run_experiment(&noisy_cfg).unwrap();
        let clean = run_experiment(&clean_cfg).unwrap();
        for (a, b) in noisy.iter().zip(&clean) {
            assert_eq!(a.t, 3 * b.t);
            assert_eq!(
                (a.s1, a.d_covered, a.s1_extra),
                (b.s1, b.d_covered, b.s1_extra)
            );
        }
    }

    #[test]
    fn bernoulli_comp_recipe_reports_candidate_supersets() {
        let mut cfg = cgt_config(40, 3, 5);
        cfg.recipe = MatrixRecipe::BernoulliComp {
            tests: 60,
            density: 0.2,
        };
        for report in run_experiment(&cfg).unwrap() {
            assert!(report.d_covered);
            assert_eq!(report.t, 60);
            assert_eq!(report.s2 + report.s3, 0);
        }
    }

    #[test]
    fn csv_report_layout_is_pinned() {
        let cfg = cgt_config(16, 1, 1);
        let reports = run_experiment(&cfg).unwrap();
        let mut buf = Vec::new();
        write_report(&reports, &mut buf, ReportFormat::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "trial,seed,t,decode_ms,s1,s2,s3,d_covered,h_covered,b_covered,s1_extra,s2_extra,s3_extra"
        );
        assert_eq!(lines.count(), 1);
    }

    #[test]
    fn empty_report_is_header_only() {
        let mut buf = Vec::new();
        write_report(&[], &mut buf, ReportFormat::Csv).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "trial,seed,t,decode_ms,s1,s2,s3,d_covered,h_covered,b_covered,s1_extra,s2_extra,s3_extra\n"
        );
        let mut buf = Vec::new();
        write_report(&[], &mut buf, ReportFormat::Json).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "[]\n");
    }

    #[test]
    fn csv_and_json_describe_identical_reports() {
        let cfg = cgt_config(24, 2, 3);
        let reports = run_experiment(&cfg).unwrap();
        let mut json_buf = Vec::new();
        write_report(&reports, &mut json_buf, ReportFormat::Json).unwrap();
        let from_json: Vec<TrialReport> = serde_json::from_slice(&json_buf).unwrap();
        let mut csv_buf = Vec::new();
        write_report(&reports, &mut csv_buf, ReportFormat::Csv).unwrap();
        let mut reader = csv::Reader::from_reader(csv_buf.as_slice());
        let from_csv: Vec<TrialReport> = reader
            .deserialize()
            .collect::<Result<Vec<_>, _>>()
            .unwrap();
        assert_eq!(from_json, from_csv);
        assert_eq!(from_json, reports);
    }

    #[test]
    fn identical_configs_emit_identical_csv_bytes() {
        let cfg = cgt_config(32, 2, 4);
        let emit = || {
            let mut buf = Vec::new();
            write_report(&run_experiment(&cfg).unwrap(), &mut buf, ReportFormat::Csv).unwrap();
            buf
        };
        assert_eq!(emit(), emit());
    }

    #[test]
    fn trial_errors_carry_the_trial_index() {
        let mut cfg = cgt_config(16, 2, 3);
        // force a runtime failure inside trials: noise exceeding test count.
        cfg.recipe = MatrixRecipe::BernoulliComp {
            tests: 2,
            density: 0.5,
        };
        cfg.model.noise = NoiseSpec {
            max_flips: 3,
            mode: NoiseMode::RandomSeeded(0),
        };
        cfg.repetition_factor = 1;
        let err = run_experiment(&cfg).unwrap_err();
        assert!(matches!(err, ExperimentError::Trial { .. }));
        assert!(err.to_string().contains("noise exceeds test count"));
    }

    #[test]
    fn config_round_trips_through_json() {
        let mut cfg = cgt_config(64, 2, 5);
        cfg.recipe = MatrixRecipe::SingleIsolationPair { blocks: Some(20) };
        let json = serde_json::to_string_pretty(&cfg).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cfg);
    }
}
