//! Decoders that recover item sets from outcome vectors.
//!
//! The block decoder walks the outcome of a tensor-product design block by
//! block, runs one pluggable per-block decoder per role family, and unions
//! the surviving supports. Alongside it live the classic cover decoder for
//! purely defective populations and an exhaustive consistency search used
//! as a ground-truth oracle at small scale.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::matrix::MeasurementMatrix;
use crate::model::{
    DefectiveModel, GroundTruth, HybridPolicy, HybridRole, InhibitorModel, ModelError, ModelSpec,
};
use crate::oracle::{run_tests, OracleError, OutcomeVector};

/// Errors from decoding.
#[derive(Debug, Error)]
pub enum DecodeError {
    /// Outcome length does not match the design.
    #[error("dimension mismatch: {outcomes} outcomes for {tests} tests")]
    DimensionMismatch { outcomes: usize, tests: usize },
    /// Outcome length does not split into whole blocks.
    #[error("block misalignment: {len} outcomes cannot split into {blocks} blocks of {block_len}")]
    BlockMisalignment {
        len: usize,
        blocks: usize,
        block_len: usize,
    },
    /// Exhaustive search was requested beyond its size guards.
    #[error(
        "oracle scale exceeded: n = {n} and bounds sum {bounds}; exhaustive search allows \
         n <= {max_n} and bounds sum <= {max_bounds}"
    )]
    OracleScaleExceeded {
        n: usize,
        bounds: usize,
        max_n: usize,
        max_bounds: usize,
    },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A per-block decoder: reads one block's outcome bits against the inner
/// identification matrix and returns a sparse support, or `None` when the
/// block is unreadable. Implementations must be pure functions of their
/// arguments.
pub trait BlockDecoder: Send + Sync {
    fn name(&self) -> &'static str;
    fn decode(&self, block: &[bool], inner: &MeasurementMatrix) -> Option<Vec<usize>>;
}

/// Role family a per-block decoder reports into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PropertyFamily {
    Defective,
    Inhibitor,
    Hybrid,
}

/// Named decoders, keyed by the role family they serve.
pub struct DecoderRegistry {
    entries: BTreeMap<(PropertyFamily, String), Arc<dyn BlockDecoder>>,
}

impl DecoderRegistry {
    pub fn new() -> Self {
        DecoderRegistry {
            entries: BTreeMap::new(),
        }
    }

    /// Registry preloaded with the built-in decoders.
    pub fn with_builtins() -> Self {
        let mut registry = Self::new();
        registry.register(PropertyFamily::Defective, Arc::new(SingleItemDecoder));
        registry
    }

    pub fn register(&mut self, family: PropertyFamily, decoder: Arc<dyn BlockDecoder>) {
        self.entries
            .insert((family, decoder.name().to_string()), decoder);
    }

    pub fn get(&self, family: PropertyFamily, name: &str) -> Option<Arc<dyn BlockDecoder>> {
        self.entries.get(&(family, name.to_string())).cloned()
    }

    pub fn names(&self, family: PropertyFamily) -> Vec<&str> {
        self.entries
            .keys()
            .filter(|(f, _)| *f == family)
            .map(|(_, name)| name.as_str())
            .collect()
    }
}

impl Default for DecoderRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

/// A block-selector matrix paired with an identification matrix and the
/// decoders that read its blocks.
///
/// The measurement design is the row-wise tensor product of `outer` and
/// `inner`: block i of the outcomes corresponds to `inner` restricted to
/// the items selected by `outer`'s row i. Any decoded support larger than
/// `sparsity_cap` is discarded, which caps every reported set at
/// `outer.rows() * sparsity_cap` items.
#[derive(Clone)]
pub struct PerfectPair {
    pub outer: MeasurementMatrix,
    pub inner: MeasurementMatrix,
    pub defective_decoder: Option<Arc<dyn BlockDecoder>>,
    pub inhibitor_decoder: Option<Arc<dyn BlockDecoder>>,
    pub hybrid_decoder: Option<Arc<dyn BlockDecoder>>,
    pub sparsity_cap: usize,
}

impl PerfectPair {
    pub fn block_count(&self) -> usize {
        self.outer.rows()
    }

    pub fn block_len(&self) -> usize {
        self.inner.rows()
    }

    pub fn test_count(&self) -> usize {
        self.block_count() * self.block_len()
    }

    /// The full measurement design the pair stands for.
    pub fn measurement_matrix(&self) -> MeasurementMatrix {
        self.outer
            .tensor_product(&self.inner)
            .expect("pair factors share a population")
    }
}

/// Decoded role sets, one per family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecodedSets {
    pub defectives: BTreeSet<usize>,
    pub inhibitors: BTreeSet<usize>,
    pub hybrids: BTreeSet<usize>,
}

impl DecodedSets {
    /// Sorted indices of one family, for line-oriented output.
    pub fn sorted(set: &BTreeSet<usize>) -> Vec<usize> {
        set.iter().copied().collect()
    }
}

/// Decoder for blocks expected to select at most one item: reads the final
/// all-ones row as presence, then the index rows as the item's binary
/// address. Returns `None` when the address exceeds the population, which
/// happens only when several selected items overlap in one block.
pub struct SingleItemDecoder;

impl BlockDecoder for SingleItemDecoder {
    fn name(&self) -> &'static str {
        "single-item"
    }

    fn decode(&self, block: &[bool], inner: &MeasurementMatrix) -> Option<Vec<usize>> {
        debug_assert_eq!(block.len(), inner.rows());
        let presence = *block.last()?;
        if !presence {
            return Some(vec![]);
        }
        let mut index = 0usize;
        for (r, &bit) in block[..block.len() - 1].iter().enumerate() {
            if bit {
                index |= 1 << r;
            }
        }
        if index < inner.cols() {
            Some(vec![index])
        } else {
            None
        }
    }
}

/// Number of selector rows that give a random single-item block a high
/// chance of isolating each target at least once: `ceil(e * sparsity * ln n)`.
pub fn default_isolation_blocks(n: usize, sparsity: usize) -> usize {
    let blocks = (std::f64::consts::E * sparsity as f64 * (n as f64).ln()).ceil();
    (blocks as usize).max(1)
}

/// Pair for recovering up to `sparsity` defective items under classical
/// semantics: a random isolation selector over a bit-test identifier, read
/// by [`SingleItemDecoder`]. Uses [`default_isolation_blocks`] rows.
pub fn make_single_isolation_pair(n: usize, sparsity: usize, seed: u64) -> PerfectPair {
    make_single_isolation_pair_with_blocks(n, sparsity, default_isolation_blocks(n, sparsity), seed)
}

/// [`make_single_isolation_pair`] with an explicit selector row count.
pub fn make_single_isolation_pair_with_blocks(
    n: usize,
    sparsity: usize,
    blocks: usize,
    seed: u64,
) -> PerfectPair {
    PerfectPair {
        outer: MeasurementMatrix::isolation(n, sparsity, blocks, seed),
        inner: MeasurementMatrix::bit_test(n),
        defective_decoder: Some(Arc::new(SingleItemDecoder)),
        inhibitor_decoder: None,
        hybrid_decoder: None,
        sparsity_cap: sparsity.max(1),
    }
}

/// Runs the pair's decoders over every block and unions their supports into
/// per-family sets.
///
/// A decoder answer is kept only when its support is at most
/// `sparsity_cap`, so each returned set has at most
/// `block_count * sparsity_cap` members no matter how the decoders behave.
pub fn algorithm1_decode(
    outcomes: &OutcomeVector,
    pair: &PerfectPair,
) -> Result<DecodedSets, DecodeError> {
    let blocks = pair.block_count();
    let block_len = pair.block_len();
    if outcomes.len() != blocks * block_len {
        return Err(DecodeError::BlockMisalignment {
            len: outcomes.len(),
            blocks,
            block_len,
        });
    }
    let mut sets = DecodedSets::default();
    for i in 0..blocks {
        let block = &outcomes.as_bools()[i * block_len..(i + 1) * block_len];
        collect_block(&pair.defective_decoder, block, pair, &mut sets.defectives);
        collect_block(&pair.inhibitor_decoder, block, pair, &mut sets.inhibitors);
        collect_block(&pair.hybrid_decoder, block, pair, &mut sets.hybrids);
    }
    Ok(sets)
}

fn collect_block(
    decoder: &Option<Arc<dyn BlockDecoder>>,
    block: &[bool],
    pair: &PerfectPair,
    target: &mut BTreeSet<usize>,
) {
    let Some(decoder) = decoder else { return };
    let Some(support) = decoder.decode(block, &pair.inner) else {
        return;
    };
    if support.len() <= pair.sparsity_cap {
        target.extend(support);
    }
}

/// Cover decoder for purely defective populations: an item is a candidate
/// iff it never appears in a negative test. The result is a superset of the
/// defectives whenever outcomes are noiseless and classical.
pub fn comp_decode(
    outcomes: &OutcomeVector,
    matrix: &MeasurementMatrix,
) -> Result<Vec<usize>, DecodeError> {
    if outcomes.len() != matrix.rows() {
        return Err(DecodeError::DimensionMismatch {
            outcomes: outcomes.len(),
            tests: matrix.rows(),
        });
    }
    let mut candidate = vec![true; matrix.cols()];
    for i in 0..matrix.rows() {
        if !outcomes.get(i) {
            for j in matrix.row_support(i) {
                candidate[j] = false;
            }
        }
    }
    Ok(candidate
        .iter()
        .enumerate()
        .filter_map(|(j, &keep)| keep.then_some(j))
        .collect())
}

/// Population guard for [`brute_force_decode`].
pub const BRUTE_FORCE_MAX_N: usize = 14;
/// Bounds-sum guard for [`brute_force_decode`].
pub const BRUTE_FORCE_MAX_BOUNDS: usize = 4;

/// Exhaustively enumerates every ground truth within the spec's bounds and
/// returns those whose outcomes lie within the noise budget of `outcomes`.
///
/// Component partitions of complex models are enumerated in full, and
/// per-run hybrid roles are treated as hidden state: a truth is consistent
/// when any complete role assignment of its hybrids reproduces the
/// outcomes. The result is deterministic and ordered by construction.
pub fn brute_force_decode(
    outcomes: &OutcomeVector,
    matrix: &MeasurementMatrix,
    spec: &ModelSpec,
) -> Result<Vec<GroundTruth>, DecodeError> {
    let n = spec.n;
    let bounds = spec.d + spec.h + spec.b;
    if n > BRUTE_FORCE_MAX_N || bounds > BRUTE_FORCE_MAX_BOUNDS {
        return Err(DecodeError::OracleScaleExceeded {
            n,
            bounds,
            max_n: BRUTE_FORCE_MAX_N,
            max_bounds: BRUTE_FORCE_MAX_BOUNDS,
        });
    }
    if outcomes.len() != matrix.rows() {
        return Err(DecodeError::DimensionMismatch {
            outcomes: outcomes.len(),
            tests: matrix.rows(),
        });
    }
    let items: Vec<usize> = (0..n).collect();
    let mut consistent = Vec::new();
    for d_size in 0..=spec.d {
        for defectives in items.iter().copied().combinations(d_size) {
            let rest: Vec<usize> = items
                .iter()
                .copied()
                .filter(|j| !defectives.contains(j))
                .collect();
            for h_size in 0..=spec.h {
                for inhibitors in rest.iter().copied().combinations(h_size) {
                    let rest2: Vec<usize> = rest
                        .iter()
                        .copied()
                        .filter(|j| !inhibitors.contains(j))
                        .collect();
                    for b_size in 0..=spec.b {
                        for hybrids in rest2.iter().copied().combinations(b_size) {
                            check_candidate(
                                outcomes,
                                matrix,
                                spec,
                                &defectives,
                                &inhibitors,
                                &hybrids,
                                &mut consistent,
                            )?;
                        }
                    }
                }
            }
        }
    }
    Ok(consistent)
}

fn check_candidate(
    outcomes: &OutcomeVector,
    matrix: &MeasurementMatrix,
    spec: &ModelSpec,
    defectives: &[usize],
    inhibitors: &[usize],
    hybrids: &[usize],
    consistent: &mut Vec<GroundTruth>,
) -> Result<(), DecodeError> {
    let def_partitions = component_assignments(defectives, &spec.defective_model);
    let inh_partitions = inhibitor_assignments(inhibitors, &spec.inhibitor_model);
    for def_parts in &def_partitions {
        for inh_parts in &inh_partitions {
            let mut truth = GroundTruth::from_sets(
                spec.n,
                defectives.to_vec(),
                inhibitors.to_vec(),
                hybrids.to_vec(),
            )?;
            if let Some(parts) = def_parts {
                truth = truth.with_defective_parts(parts.clone())?;
            }
            if let Some(parts) = inh_parts {
                truth = truth.with_inhibitor_parts(parts.clone())?;
            }
            if candidate_matches(outcomes, matrix, spec, &truth, hybrids)? {
                consistent.push(truth);
            }
        }
    }
    Ok(())
}

/// Whether some admissible hybrid behavior makes `truth` reproduce
/// `outcomes` within the noise budget.
fn candidate_matches(
    outcomes: &OutcomeVector,
    matrix: &MeasurementMatrix,
    spec: &ModelSpec,
    truth: &GroundTruth,
    hybrids: &[usize],
) -> Result<bool, DecodeError> {
    let z = spec.noise.max_flips;
    match &spec.hybrid_policy {
        HybridPolicy::PerTestRole { .. } => {
            let y = run_tests(matrix, truth, spec)?;
            Ok(y.hamming(outcomes) <= z)
        }
        HybridPolicy::PerRunRole(_) => {
            // hidden per-run roles: try every complete assignment.
            for mask in 0..1u32 << hybrids.len() {
                let map: BTreeMap<usize, HybridRole> = hybrids
                    .iter()
                    .enumerate()
                    .map(|(pos, &item)| {
                        let role = if mask >> pos & 1 == 1 {
                            HybridRole::Inhibitor
                        } else {
                            HybridRole::Defective
                        };
                        (item, role)
                    })
                    .collect();
                let mut candidate_spec = spec.clone();
                candidate_spec.hybrid_policy = HybridPolicy::PerRunRole(map);
                let y = run_tests(matrix, truth, &candidate_spec)?;
                if y.hamming(outcomes) <= z {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// All ways to attach `set` to the model's components; `None` entries mean
/// the model carries no partition.
fn component_assignments(
    set: &[usize],
    model: &DefectiveModel,
) -> Vec<Option<Vec<Vec<usize>>>> {
    match model {
        DefectiveModel::Complex(windows) => all_partitions(set, windows.len()),
        _ => vec![None],
    }
}

fn inhibitor_assignments(
    set: &[usize],
    model: &InhibitorModel,
) -> Vec<Option<Vec<Vec<usize>>>> {
    match model {
        InhibitorModel::Complex(windows) => all_partitions(set, windows.len()),
        _ => vec![None],
    }
}

/// Every function from `set` into `components` buckets, as partition lists;
/// buckets may be empty.
fn all_partitions(set: &[usize], components: usize) -> Vec<Option<Vec<Vec<usize>>>> {
    let total = components.pow(set.len() as u32);
    (0..total)
        .map(|code| {
            let mut parts = vec![Vec::new(); components];
            let mut rest = code;
            for &item in set {
                parts[rest % components].push(item);
                rest /= components;
            }
            Some(parts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{sample_ground_truth, GapPolicy, NoiseSpec};
    use crate::oracle::run_tests;

    fn cgt_spec(n: usize, d: usize) -> ModelSpec {
        ModelSpec {
            n,
            d,
            h: 0,
            b: 0,
            defective_model: DefectiveModel::Classical,
            inhibitor_model: InhibitorModel::None,
            hybrid_policy: HybridPolicy::PerRunRole(BTreeMap::new()),
            gap_policy: GapPolicy::AlwaysNegative,
            noise: NoiseSpec::none(),
        }
    }

    #[test]
    fn single_item_decoder_reads_addresses() {
        let inner = MeasurementMatrix::bit_test(8);
        let dec = SingleItemDecoder;
        // block for item 5 alone: index bits 101 plus presence.
        let block = [true, false, true, true];
        assert_eq!(dec.decode(&block, &inner), Some(vec![5]));
        // silent block decodes to the empty support.
        let silent = [false, false, false, false];
        assert_eq!(dec.decode(&silent, &inner), Some(vec![]));
    }

    #[test]
    fn single_item_decoder_fails_on_out_of_range_address() {
        let inner = MeasurementMatrix::bit_test(5);
        // overlap of items 3 and 4 reads as address 7, outside 0..5.
        let block = [true, true, true, true];
        assert_eq!(SingleItemDecoder.decode(&block, &inner), None);
    }

    #[test]
    fn pair_shapes_and_design() {
        let pair = make_single_isolation_pair(64, 2, 9);
        assert_eq!(pair.block_len(), 7);
        assert_eq!(pair.block_count(), default_isolation_blocks(64, 2));
        let design = pair.measurement_matrix();
        assert_eq!(design.rows(), pair.test_count());
        assert_eq!(design.cols(), 64);
    }

    #[test]
    fn block_decode_recovers_single_defective_exactly() {
        let spec = cgt_spec(8, 1);
        let truth = GroundTruth::from_sets(8, vec![5], vec![], vec![]).unwrap();
        for seed in 0..5 {
            let pair = make_single_isolation_pair_with_blocks(8, 1, 6, seed);
            let y = run_tests(&pair.measurement_matrix(), &truth, &spec).unwrap();
            let sets = algorithm1_decode(&y, &pair).unwrap();
            assert_eq!(DecodedSets::sorted(&sets.defectives), vec![5]);
            assert!(sets.inhibitors.is_empty());
            assert!(sets.hybrids.is_empty());
        }
    }

    #[test]
    fn block_decode_covers_two_defectives() {
        let spec = cgt_spec(32, 2);
        let truth = GroundTruth::from_sets(32, vec![7, 19], vec![], vec![]).unwrap();
        let pair = make_single_isolation_pair(32, 2, 4);
        let y = run_tests(&pair.measurement_matrix(), &truth, &spec).unwrap();
        let sets = algorithm1_decode(&y, &pair).unwrap();
        assert!(sets.defectives.contains(&7) && sets.defectives.contains(&19));
        assert!(sets.defectives.len() <= pair.block_count() * pair.sparsity_cap);
    }

    #[test]
    fn block_decode_rejects_misaligned_outcomes() {
        let pair = make_single_isolation_pair_with_blocks(8, 1, 3, 0);
        let y = OutcomeVector::from_bits(vec![false; 11]);
        assert!(matches!(
            algorithm1_decode(&y, &pair),
            Err(DecodeError::BlockMisalignment {
                len: 11,
                blocks: 3,
                block_len: 4
            })
        ));
    }

    struct OversizeDecoder;

    impl BlockDecoder for OversizeDecoder {
        fn name(&self) -> &'static str {
            "oversize"
        }

        fn decode(&self, _: &[bool], _: &MeasurementMatrix) -> Option<Vec<usize>> {
            Some(vec![0, 1, 2])
        }
    }

    #[test]
    fn oversized_supports_are_discarded() {
        let mut pair = make_single_isolation_pair_with_blocks(8, 2, 3, 1);
        pair.defective_decoder = Some(Arc::new(OversizeDecoder));
        let y = OutcomeVector::from_bits(vec![true; pair.test_count()]);
        let sets = algorithm1_decode(&y, &pair).unwrap();
        assert!(sets.defectives.is_empty());
    }

    #[test]
    fn registry_serves_builtins_and_custom_decoders() {
        let mut registry = DecoderRegistry::with_builtins();
        assert!(registry
            .get(PropertyFamily::Defective, "single-item")
            .is_some());
        assert!(registry.get(PropertyFamily::Inhibitor, "single-item").is_none());
        registry.register(PropertyFamily::Hybrid, Arc::new(OversizeDecoder));
        assert_eq!(registry.names(PropertyFamily::Hybrid), vec!["oversize"]);
    }

    #[test]
    fn comp_decode_on_identity_is_exact() {
        let y = OutcomeVector::from_bits(vec![false, true, false, false]);
        let m = MeasurementMatrix::identity(4);
        assert_eq!(comp_decode(&y, &m).unwrap(), vec![1]);
    }

    #[test]
    fn comp_decode_covers_defectives_under_random_designs() {
        let spec = cgt_spec(40, 3);
        for seed in 0..10 {
            let truth = sample_ground_truth(&spec, seed).unwrap();
            let m = MeasurementMatrix::bernoulli(60, 40, 0.2, seed).unwrap();
            let y = run_tests(&m, &truth, &spec).unwrap();
            let candidates = comp_decode(&y, &m).unwrap();
            for d in truth.defectives() {
                assert!(candidates.contains(d), "seed {seed} lost {d}");
            }
        }
    }

    #[test]
    fn comp_decode_rejects_length_mismatch() {
        let y = OutcomeVector::from_bits(vec![true; 3]);
        let m = MeasurementMatrix::identity(4);
        assert!(matches!(
            comp_decode(&y, &m),
            Err(DecodeError::DimensionMismatch {
                outcomes: 3,
                tests: 4
            })
        ));
    }

    #[test]
    fn brute_force_identifies_unique_truth() {
        let spec = cgt_spec(4, 1);
        let m = MeasurementMatrix::identity(4);
        let y = OutcomeVector::from_bits(vec![false, true, false, false]);
        let truths = brute_force_decode(&y, &m, &spec).unwrap();
        assert_eq!(truths.len(), 1);
        assert_eq!(truths[0].defectives(), &[1]);
    }

    #[test]
    fn brute_force_results_all_reproduce_outcomes() {
        let mut spec = cgt_spec(6, 1);
        spec.h = 1;
        spec.inhibitor_model = InhibitorModel::Classical;
        let truth = GroundTruth::from_sets(6, vec![2], vec![4], vec![]).unwrap();
        let m = MeasurementMatrix::bernoulli(8, 6, 0.4, 3).unwrap();
        let y = run_tests(&m, &truth, &spec).unwrap();
        let truths = brute_force_decode(&y, &m, &spec).unwrap();
        assert!(truths.contains(&truth));
        for candidate in &truths {
            let y_hat = run_tests(&m, candidate, &spec).unwrap();
            assert_eq!(y_hat, y);
        }
    }

    #[test]
    fn brute_force_enumerates_hidden_hybrid_roles() {
        let mut spec = cgt_spec(5, 0);
        spec.b = 1;
        spec.inhibitor_model = InhibitorModel::Classical;
        // hybrid 3 acted as an inhibitor: all tests containing it negative.
        let mut map = BTreeMap::new();
        map.insert(3, HybridRole::Inhibitor);
        spec.hybrid_policy = HybridPolicy::PerRunRole(map);
        let truth = GroundTruth::from_sets(5, vec![], vec![], vec![3]).unwrap();
        let m = MeasurementMatrix::identity(5);
        let y = run_tests(&m, &truth, &spec).unwrap();
        // search under an empty role map must still find the truth.
        spec.hybrid_policy = HybridPolicy::PerRunRole(BTreeMap::new());
        let truths = brute_force_decode(&y, &m, &spec).unwrap();
        assert!(truths.contains(&truth));
    }

    #[test]
    fn brute_force_respects_scale_guards() {
        let spec = cgt_spec(20, 1);
        let m = MeasurementMatrix::identity(20);
        let y = OutcomeVector::from_bits(vec![false; 20]);
        assert!(matches!(
            brute_force_decode(&y, &m, &spec),
            Err(DecodeError::OracleScaleExceeded { n: 20, .. })
        ));
        let spec = cgt_spec(10, 5);
        let m = MeasurementMatrix::identity(10);
        let y = OutcomeVector::from_bits(vec![false; 10]);
        assert!(matches!(
            brute_force_decode(&y, &m, &spec),
            Err(DecodeError::OracleScaleExceeded { bounds: 5, .. })
        ));
    }

    #[test]
    fn brute_force_is_deterministic() {
        let spec = cgt_spec(6, 2);
        let m = MeasurementMatrix::bernoulli(5, 6, 0.5, 2).unwrap();
        let truth = sample_ground_truth(&spec, 9).unwrap();
        let y = run_tests(&m, &truth, &spec).unwrap();
        let a = brute_force_decode(&y, &m, &spec).unwrap();
        let b = brute_force_decode(&y, &m, &spec).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }
}
