//! Command-line front end: construct designs, simulate pooled tests, decode
//! outcomes, run batch experiments, and classify pooled-neuron scenarios.
//!
//! Exit codes: 0 on success, 1 when the request or its inputs are invalid,
//! 2 when a valid request fails at runtime (unreadable or unwritable paths,
//! trial failures).

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use gti_core::{
    algorithm1_decode, apply_noise, default_isolation_blocks, enumerate_model_space,
    feasible_classify, make_single_isolation_pair_with_blocks, run_experiment, run_tests,
    sample_ground_truth, validate_spec, write_report, DecodeError, DecodedSets, ExperimentConfig,
    ExperimentError, GapPolicy, HybridPolicy, InstanceConfig, MatrixError, MeasurementMatrix,
    ModelError, NeuroError, NeuronScenario, NoiseMode, OracleError, OutcomeVector, PerfectPair,
    ReportFormat,
};

#[derive(Parser)]
#[command(
    name = "gti",
    version,
    about = "Group testing with inhibitors: designs, simulation, decoding"
)]
struct Cli {
    /// Base seed for randomized constructions; overrides any seed in the
    /// config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Configuration file for the subcommand (instance, experiment, or
    /// scenario JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output destination; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format where a choice exists.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the factored count of expressible testing models.
    EnumerateModels,
    /// Construct a measurement matrix and write its text form.
    GenMatrix(GenMatrixArgs),
    /// Sample a ground truth from an instance config and report the test
    /// outcomes of a design against it, noise included.
    Simulate(SimulateArgs),
    /// Decode an outcome vector with a selector/identifier pair.
    Decode(DecodeArgs),
    /// Run a batch experiment config and emit per-trial reports.
    Bench,
    /// Split a neuron scenario into negative and non-negative sets from
    /// pooled multimeter readings.
    NeuroClassify(NeuroClassifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFamily {
    /// One singleton test per item.
    Identity,
    /// Binary-address rows plus an all-ones presence row.
    BitTest,
    /// Independent fixed-density entries.
    Bernoulli,
    /// Random selector rows with density 1/sparsity.
    Isolation,
    /// Row-wise tensor product of two matrix files.
    Tensor,
}

#[derive(Args)]
struct GenMatrixArgs {
    #[arg(long, value_enum)]
    family: MatrixFamily,
    /// Population size (columns).
    #[arg(long)]
    n: Option<usize>,
    /// Row count (bernoulli).
    #[arg(long)]
    rows: Option<usize>,
    /// Entry density in (0, 1) (bernoulli).
    #[arg(long)]
    density: Option<f64>,
    /// Target sparsity; selector density is its reciprocal (isolation).
    #[arg(long)]
    sparsity: Option<usize>,
    /// Selector row count (isolation); defaults to the high-coverage count.
    #[arg(long)]
    blocks: Option<usize>,
    /// Left factor file (tensor).
    #[arg(long)]
    outer: Option<PathBuf>,
    /// Right factor file (tensor).
    #[arg(long)]
    inner: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Measurement matrix file.
    #[arg(long)]
    matrix: PathBuf,
    /// Override the number of flipped outcomes.
    #[arg(long)]
    noise_z: Option<usize>,
    /// Override how flipped outcomes are chosen.
    #[arg(long, value_enum)]
    noise_mode: Option<NoiseModeArg>,
    /// Override the in-band resolution rule.
    #[arg(long, value_enum)]
    gap_policy: Option<GapPolicyArg>,
    /// Override how hybrid items pick a side.
    #[arg(long, value_enum)]
    hybrid_policy: Option<HybridPolicyArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum NoiseModeArg {
    /// Seeded uniform flip set.
    Random,
    /// Exhaustive worst-case flip search.
    Adversarial,
}

#[derive(Clone, Copy, ValueEnum)]
enum GapPolicyArg {
    AlwaysNegative,
    AlwaysPositive,
    /// Seeded per-test bit.
    Random,
    /// Crossover rule.
    Adversarial,
}

#[derive(Clone, Copy, ValueEnum)]
enum HybridPolicyArg {
    /// One side for the whole run (defective unless mapped otherwise).
    PerRun,
    /// Seeded per-test side.
    PerTest,
}

#[derive(Args)]
struct DecodeArgs {
    /// Pair description JSON file.
    #[arg(long)]
    pair: PathBuf,
    /// Outcome file: one line of 0/1 characters.
    #[arg(long)]
    outcomes: PathBuf,
}

#[derive(Args)]
struct NeuroClassifyArgs {
    /// Pooling design file.
    #[arg(long)]
    matrix: PathBuf,
}

/// Serialized description of a decodable pair.
#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum PairSpec {
    /// Random isolation selector over a bit-test identifier.
    SingleIsolation {
        n: usize,
        sparsity: usize,
        seed: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        blocks: Option<usize>,
    },
}

impl PairSpec {
    fn build(&self) -> Result<PerfectPair, CliError> {
        match *self {
            PairSpec::SingleIsolation {
                n,
                sparsity,
                seed,
                blocks,
            } => {
                if n < 2 {
                    return Err(CliError::Validation(format!(
                        "pair population {n} too small: need at least 2 items"
                    )));
                }
                if sparsity < 1 {
                    return Err(CliError::Validation(
                        "pair sparsity must be at least 1".into(),
                    ));
                }
                let blocks = blocks.unwrap_or_else(|| default_isolation_blocks(n, sparsity));
                if blocks < 1 {
                    return Err(CliError::Validation(
                        "pair block count must be at least 1".into(),
                    ));
                }
                Ok(make_single_isolation_pair_with_blocks(
                    n, sparsity, blocks, seed,
                ))
            }
        }
    }
}

enum CliError {
    Validation(String),
    Runtime(String),
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<DecodeError> for CliError {
    fn from(e: DecodeError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<NeuroError> for CliError {
    fn from(e: NeuroError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::Io(_) => CliError::Runtime(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::InvalidConfig(_) | ExperimentError::Model(_) => {
                CliError::Validation(e.to_string())
            }
            other => CliError::Runtime(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let Cli {
        seed,
        config,
        out,
        format,
        command,
    } = cli;
    let out = out.as_deref();
    let config = config.as_deref();
    match command {
        Command::EnumerateModels => cmd_enumerate_models(out, format),
        Command::GenMatrix(args) => cmd_gen_matrix(args, seed, out),
        Command::Simulate(args) => cmd_simulate(args, seed, config, out),
        Command::Decode(args) => cmd_decode(args, out, format),
        Command::Bench => cmd_bench(seed, config, out, format),
        Command::NeuroClassify(args) => cmd_neuro_classify(args, config, out, format),
    }
}

fn require_config(config: Option<&Path>) -> Result<&Path, CliError> {
    config.ok_or_else(|| CliError::Validation("--config <path> is required".into()))
}

fn read_text_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))
}

fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Validation(format!("invalid {what}: {e}")))
}

fn read_matrix(path: &Path) -> Result<MeasurementMatrix, CliError> {
    let text = read_text_file(path)?;
    Ok(MeasurementMatrix::read_text(&text)?)
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn index_line(set: impl IntoIterator<Item = usize>) -> String {
    set.into_iter()
        .map(|j| j.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_enumerate_models(out: Option<&Path>, format: Option<OutputFormat>) -> Result<(), CliError> {
    let factors = enumerate_model_space();
    let named = [
        ("defective_choices", factors.defective_choices),
        ("inhibitor_choices", factors.inhibitor_choices),
        ("hybrid_choices", factors.hybrid_choices),
        ("outcome_settings", factors.outcome_settings),
        ("testing_strategies", factors.testing_strategies),
        ("criteria_combinations", factors.criteria_combinations),
        ("total", factors.total()),
    ];
    let content = match format {
        Some(OutputFormat::Json) => {
            let map: serde_json::Map<String, serde_json::Value> = named
                .iter()
                .map(|&(name, value)| (name.to_string(), value.into()))
                .collect();
            let mut text = serde_json::to_string_pretty(&map).expect("string-keyed map");
            text.push('\n');
            text
        }
        Some(OutputFormat::Csv) => {
            let mut text = String::from("factor,count\n");
            for (name, value) in named {
                text.push_str(&format!("{name},{value}\n"));
            }
            text
        }
        None => {
            let mut text = String::new();
            for (name, value) in named {
                text.push_str(&format!("{name} {value}\n"));
            }
            text
        }
    };
    write_output(out, &content)
}

fn require_flag<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Validation(format!("{flag} is required for family {family}")))
}

fn cmd_gen_matrix(
    args: GenMatrixArgs,
    seed: Option<u64>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let matrix = match args.family {
        MatrixFamily::Identity => {
            let n = require_flag(args.n, "--n", "identity")?;
            check_positive(n, "--n")?;
            MeasurementMatrix::identity(n)
        }
        MatrixFamily::BitTest => {
            let n = require_flag(args.n, "--n", "bit-test")?;
            check_positive(n, "--n")?;
            MeasurementMatrix::bit_test(n)
        }
        MatrixFamily::Bernoulli => {
            let rows = require_flag(args.rows, "--rows", "bernoulli")?;
            let n = require_flag(args.n, "--n", "bernoulli")?;
            let density = require_flag(args.density, "--density", "bernoulli")?;
            check_positive(rows, "--rows")?;
            check_positive(n, "--n")?;
            MeasurementMatrix::bernoulli(rows, n, density, seed.unwrap_or(0))?
        }
        MatrixFamily::Isolation => {
            let n = require_flag(args.n, "--n", "isolation")?;
            let sparsity = require_flag(args.sparsity, "--sparsity", "isolation")?;
            check_positive(n, "--n")?;
            check_positive(sparsity, "--sparsity")?;
            let blocks = args
                .blocks
                .unwrap_or_else(|| default_isolation_blocks(n, sparsity));
            check_positive(blocks, "--blocks")?;
            MeasurementMatrix::isolation(n, sparsity, blocks, seed.unwrap_or(0))
        }
        MatrixFamily::Tensor => {
            let outer_path = args
                .outer
                .ok_or_else(|| CliError::Validation("--outer is required for family tensor".into()))?;
            let inner_path = args
                .inner
                .ok_or_else(|| CliError::Validation("--inner is required for family tensor".into()))?;
            let outer = read_matrix(&outer_path)?;
            let inner = read_matrix(&inner_path)?;
            outer.tensor_product(&inner)?
        }
    };
    let mut text = Vec::new();
    matrix
        .write_text(&mut text)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    write_output(out, &String::from_utf8(text).expect("binary matrix text"))
}

fn check_positive(value: usize, flag: &str) -> Result<(), CliError> {
    if value == 0 {
        return Err(CliError::Validation(format!("{flag} must be at least 1")));
    }
    Ok(())
}

fn cmd_simulate(
    args: SimulateArgs,
    seed: Option<u64>,
    config: Option<&Path>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let config_path = require_config(config)?;
    let text = read_text_file(config_path)?;
    let mut instance: InstanceConfig = parse_json(&text, "instance config")?;
    if let Some(seed) = seed {
        instance.seed = seed;
    }
    let spec = &mut instance.model;
    if let Some(z) = args.noise_z {
        spec.noise.max_flips = z;
    }
    if let Some(mode) = args.noise_mode {
        spec.noise.mode = match mode {
            NoiseModeArg::Random => NoiseMode::RandomSeeded(instance.seed),
            NoiseModeArg::Adversarial => NoiseMode::AdversarialSearch,
        };
    }
    if let Some(policy) = args.gap_policy {
        spec.gap_policy = match policy {
            GapPolicyArg::AlwaysNegative => GapPolicy::AlwaysNegative,
            GapPolicyArg::AlwaysPositive => GapPolicy::AlwaysPositive,
            GapPolicyArg::Random => GapPolicy::RandomSeeded(instance.seed),
            GapPolicyArg::Adversarial => GapPolicy::Adversarial,
        };
    }
    if let Some(policy) = args.hybrid_policy {
        spec.hybrid_policy = match policy {
            HybridPolicyArg::PerRun => HybridPolicy::PerRunRole(BTreeMap::new()),
            HybridPolicyArg::PerTest => HybridPolicy::PerTestRole {
                seed: instance.seed,
            },
        };
    }
    validate_spec(&instance.model)?;
    let design = read_matrix(&args.matrix)?;
    let truth = sample_ground_truth(&instance.model, instance.seed)?;
    let clean = run_tests(&design, &truth, &instance.model)?;
    let reported = apply_noise(&clean, &instance.model.noise, None)?;
    write_output(out, &format!("{reported}\n"))
}

fn cmd_decode(
    args: DecodeArgs,
    out: Option<&Path>,
    format: Option<OutputFormat>,
) -> Result<(), CliError> {
    if format == Some(OutputFormat::Csv) {
        return Err(CliError::Validation(
            "decode emits index lines or json, not csv".into(),
        ));
    }
    let pair_text = read_text_file(&args.pair)?;
    let pair_spec: PairSpec = parse_json(&pair_text, "pair description")?;
    let pair = pair_spec.build()?;
    let outcome_text = read_text_file(&args.outcomes)?;
    let outcomes = OutcomeVector::from_str(&outcome_text)?;
    let sets = algorithm1_decode(&outcomes, &pair)?;
    let content = match format {
        Some(OutputFormat::Json) => {
            let as_list = |set: &BTreeSet<usize>| set.iter().copied().collect::<Vec<_>>();
            let mut text = serde_json::to_string_pretty(&serde_json::json!({
                "s1": as_list(&sets.defectives),
                "s2": as_list(&sets.inhibitors),
                "s3": as_list(&sets.hybrids),
            }))
            .expect("index lists");
            text.push('\n');
            text
        }
        _ => format_set_lines(&sets),
    };
    write_output(out, &content)
}

/// Three lines of sorted indices: defective, inhibitor, hybrid candidates.
fn format_set_lines(sets: &DecodedSets) -> String {
    format!(
        "{}\n{}\n{}\n",
        index_line(sets.defectives.iter().copied()),
        index_line(sets.inhibitors.iter().copied()),
        index_line(sets.hybrids.iter().copied()),
    )
}

fn cmd_bench(
    seed: Option<u64>,
    config: Option<&Path>,
    out: Option<&Path>,
    format: Option<OutputFormat>,
) -> Result<(), CliError> {
    let config_path = require_config(config)?;
    let text = read_text_file(config_path)?;
    let mut cfg: ExperimentConfig = parse_json(&text, "experiment config")?;
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    let reports = run_experiment(&cfg)?;
    let format = match format {
        Some(OutputFormat::Json) => ReportFormat::Json,
        _ => ReportFormat::Csv,
    };
    let destination: Option<PathBuf> = out
        .map(Path::to_path_buf)
        .or_else(|| cfg.out.as_ref().map(PathBuf::from));
    match destination {
        Some(path) => {
            let file = fs::File::create(&path)
                .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
            write_report(&reports, file, format)?;
        }
        None => {
            let stdout = std::io::stdout();
            write_report(&reports, stdout.lock(), format)?;
        }
    }
    Ok(())
}

fn cmd_neuro_classify(
    args: NeuroClassifyArgs,
    config: Option<&Path>,
    out: Option<&Path>,
    format: Option<OutputFormat>,
) -> Result<(), CliError> {
    let config_path = require_config(config)?;
    let text = read_text_file(config_path)?;
    let scenario: NeuronScenario = parse_json(&text, "neuron scenario")?;
    let design = read_matrix(&args.matrix)?;
    let (negative, non_negative) = feasible_classify(&design, &scenario)?;
    let content = match format {
        Some(OutputFormat::Json) => {
            let mut text = serde_json::to_string_pretty(&serde_json::json!({
                "negative": negative,
                "non_negative": non_negative,
            }))
            .expect("index lists");
            text.push('\n');
            text
        }
        Some(OutputFormat::Csv) => {
            return Err(CliError::Validation(
                "neuro-classify emits index lines or json, not csv".into(),
            ));
        }
        None => format!(
            "{}\n{}\n",
            index_line(negative.iter().copied()),
            index_line(non_negative.iter().copied()),
        ),
    };
    write_output(out, &content)
}
