//! Simulation and decoding toolkit for pooled testing in populations that mix
//! defective items, inhibitor items, and hybrid items that can act as either.
//!
//! The crate is organized as a pipeline:
//!
//! * [`model`] describes a population: which semantics defectives and
//!   inhibitors follow, how hybrid items pick a side, how threshold gaps are
//!   resolved, and how much outcome noise is tolerated.
//! * [`matrix`] builds binary measurement matrices (Bernoulli, bit-test,
//!   isolation) and combines them with the row-wise tensor product.
//! * [`oracle`] evaluates test outcomes for a ground truth under any model,
//!   and injects bounded noise.
//! * [`decode`] recovers item sets from outcome vectors: the block decoder
//!   over matrix pairs, cover decoding, and an exhaustive consistency search.
//! * [`neuro`] maps neuron classification onto the same machinery.
//! * [`experiment`] runs seeded batch trials and emits CSV or JSON reports.
//!
//! All indices are 0-based. Every randomized step takes an explicit `u64`
//! seed and is reproducible across runs and platforms.

pub mod decode;
pub mod experiment;
pub mod matrix;
pub mod model;
pub mod neuro;
pub mod oracle;

mod seeding;

pub use decode::{
    algorithm1_decode, brute_force_decode, comp_decode, default_isolation_blocks,
    make_single_isolation_pair, make_single_isolation_pair_with_blocks, BlockDecoder, DecodeError,
    DecodedSets, DecoderRegistry, PerfectPair, PropertyFamily, SingleItemDecoder,
};
pub use experiment::{
    emit_report, run_experiment, write_report, ExperimentConfig, ExperimentError, MatrixRecipe,
    ReportFormat, TrialReport, REPORT_HEADER,
};
pub use matrix::{
    min_gap_order, tensor_product, zero_gap_cost, MatrixError, MeasurementMatrix, OrderingMode,
    RowOrder,
};
pub use model::{
    enumerate_model_space, sample_ground_truth, validate_spec, DefectiveModel, GapPolicy,
    GroundTruth, HybridPolicy, HybridRole, InhibitorModel, InstanceConfig, ItemType, ModelError,
    ModelSpaceFactors, ModelSpec, NoiseMode, NoiseSpec, ValidatedSpec,
};
pub use neuro::{
    feasible_classify, graph_closeness, map_scenario, ConnectivityGraph, NeuroError,
    NeuronScenario, NeuronType,
};
pub use oracle::{
    apply_noise, majority_collapse, run_tests, run_tests_offset, test_subset, tile_repeats,
    OracleError, OutcomeVector, TestContext,
};
