//! Test outcome evaluation.
//!
//! [`test_subset`] is the single source of outcome semantics: it tallies the
//! effective defectives and inhibitors in a pooled subset, lets the
//! inhibitor stage veto the test, then evaluates the defective stage.
//! [`run_tests`] applies it row by row, and [`apply_noise`] flips a bounded
//! number of reported outcomes.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::MeasurementMatrix;
use crate::model::{
    DefectiveModel, GroundTruth, HybridRole, InhibitorModel, ItemType, ModelSpec, NoiseMode,
    NoiseSpec,
};
use crate::seeding::{derive_rng, TAG_NOISE};

/// Errors from outcome evaluation and noise injection.
#[derive(Debug, Error)]
pub enum OracleError {
    /// Matrix columns and population size disagree.
    #[error("dimension mismatch: matrix has {cols} columns but population is {n}")]
    DimensionMismatch { cols: usize, n: usize },
    /// More flips requested than tests exist.
    #[error("noise exceeds test count: z = {z} but t = {t}")]
    NoiseExceedsTests { z: usize, t: usize },
    /// Adversarial flip search would enumerate too many subsets.
    #[error("adversarial noise search space too large: {candidates} candidate flip sets")]
    SearchTooLarge { candidates: u128 },
    /// Outcome length is not divisible into repeated blocks.
    #[error("block misalignment: {len} outcomes cannot split into blocks of {group}")]
    BlockMisalignment { len: usize, group: usize },
    /// An outcome line contains a character other than 0 or 1.
    #[error("non-binary entry {0:?} in outcome line")]
    NonBinaryOutcome(char),
}

/// Ordered test outcomes, one bit per test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeVector(Vec<bool>);

impl OutcomeVector {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        OutcomeVector(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn as_bools(&self) -> &[bool] {
        &self.0
    }

    /// Number of positions where `self` and `other` disagree.
    pub fn hamming(&self, other: &OutcomeVector) -> usize {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }

    fn flip(&mut self, i: usize) {
        self.0[i] = !self.0[i];
    }
}

impl fmt::Display for OutcomeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.0 {
            write!(f, "{}", if bit { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for OutcomeVector {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, OracleError> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(OracleError::NonBinaryOutcome(other)),
            })
            .collect::<Result<Vec<bool>, _>>()
            .map(OutcomeVector)
    }
}

/// Everything a single outcome evaluation depends on besides the pooled
/// subset: the truth, the semantics, and the test's identity (which keys
/// per-test hybrid roles and seeded gap resolutions).
#[derive(Clone, Copy)]
pub struct TestContext<'a> {
    pub truth: &'a GroundTruth,
    pub spec: &'a ModelSpec,
    pub test_id: usize,
}

/// Per-component tallies of effective defectives and inhibitors in a pool.
struct Tally {
    defective: Vec<usize>,
    inhibitor: Vec<usize>,
}

fn tally_subset<I: IntoIterator<Item = usize>>(subset: I, ctx: &TestContext) -> Tally {
    let spec = ctx.spec;
    let def_components = spec.defective_model.component_count();
    let inh_components = spec.inhibitor_model.component_count();
    let mut tally = Tally {
        defective: vec![0; def_components],
        inhibitor: vec![0; inh_components],
    };
    for item in subset {
        match ctx.truth.role(item) {
            ItemType::Negative => {}
            ItemType::Defective => {
                let c = ctx.truth.defective_component(item).unwrap_or(0);
                tally.defective[c] += 1;
            }
            ItemType::Inhibitor => {
                let c = ctx.truth.inhibitor_component(item).unwrap_or(0);
                tally.inhibitor[c] += 1;
            }
            ItemType::Hybrid => match spec.hybrid_policy.role(item, ctx.test_id) {
                HybridRole::Defective => tally.defective[item % def_components] += 1,
                HybridRole::Inhibitor => tally.inhibitor[item % inh_components] += 1,
            },
        }
    }
    tally
}

/// Whether the inhibitor stage forces this test negative.
fn inhibitor_stage_suppresses(tally: &Tally, ctx: &TestContext) -> bool {
    let policy = &ctx.spec.gap_policy;
    match &ctx.spec.inhibitor_model {
        InhibitorModel::None => false,
        InhibitorModel::Classical => tally.inhibitor.iter().sum::<usize>() >= 1,
        InhibitorModel::Threshold(l, u) => {
            let count = tally.inhibitor.iter().sum::<usize>();
            count >= *u
                || (count > *l && policy.gap_inhibits(count, *l, *u, ctx.test_id, 0))
        }
        InhibitorModel::Complex(windows) => {
            windows.iter().enumerate().any(|(a, (l, u))| {
                let count = tally.inhibitor[a];
                count >= *u
                    || (count > *l && policy.gap_inhibits(count, *l, *u, ctx.test_id, a))
            })
        }
    }
}

/// Whether the defective stage reports positive.
fn defective_stage_positive(tally: &Tally, ctx: &TestContext) -> bool {
    let policy = &ctx.spec.gap_policy;
    match &ctx.spec.defective_model {
        DefectiveModel::Classical => tally.defective.iter().sum::<usize>() >= 1,
        DefectiveModel::Threshold(l, u) => {
            let count = tally.defective.iter().sum::<usize>();
            count >= *u
                || (count > *l && policy.gap_outcome(count, *l, *u, ctx.test_id, 0))
        }
        DefectiveModel::Complex(windows) => {
            windows.iter().enumerate().any(|(a, (l, u))| {
                let count = tally.defective[a];
                count >= *u
                    || (count > *l && policy.gap_outcome(count, *l, *u, ctx.test_id, a))
            })
        }
    }
}

/// Outcome of testing the pooled `subset` under `ctx`.
///
/// Negatives in the subset are ignored, hybrids are resolved to one side
/// through the policy, then inhibitors may veto before defectives decide.
/// Identical inputs always produce identical outcomes.
pub fn test_subset<I: IntoIterator<Item = usize>>(subset: I, ctx: &TestContext) -> bool {
    let tally = tally_subset(subset, ctx);
    if inhibitor_stage_suppresses(&tally, ctx) {
        return false;
    }
    defective_stage_positive(&tally, ctx)
}

/// Evaluates every row of `matrix` against `truth`, numbering tests from 0.
pub fn run_tests(
    matrix: &MeasurementMatrix,
    truth: &GroundTruth,
    spec: &ModelSpec,
) -> Result<OutcomeVector, OracleError> {
    run_tests_offset(matrix, truth, spec, 0)
}

/// Like [`run_tests`] but numbering tests from `base_test_id`, so a slice of
/// a larger design reproduces the outcomes it would have inside the whole.
pub fn run_tests_offset(
    matrix: &MeasurementMatrix,
    truth: &GroundTruth,
    spec: &ModelSpec,
    base_test_id: usize,
) -> Result<OutcomeVector, OracleError> {
    if matrix.cols() != truth.n() {
        return Err(OracleError::DimensionMismatch {
            cols: matrix.cols(),
            n: truth.n(),
        });
    }
    let bits = (0..matrix.rows())
        .map(|i| {
            let ctx = TestContext {
                truth,
                spec,
                test_id: base_test_id + i,
            };
            test_subset(matrix.row_support(i), &ctx)
        })
        .collect();
    Ok(OutcomeVector(bits))
}

/// Bound on enumerated flip sets in adversarial noise search.
const ADVERSARIAL_SEARCH_LIMIT: u128 = 200_000;

/// Corrupts at most `noise.max_flips` outcome bits.
///
/// `RandomSeeded` flips exactly `z` distinct positions chosen by the seed.
/// `AdversarialSearch` enumerates all flip sets of size at most `z` and
/// keeps the one maximizing `adversary` (first maximum wins); with no
/// adversary it flips the first `z` positions.
pub fn apply_noise(
    outcomes: &OutcomeVector,
    noise: &NoiseSpec,
    adversary: Option<&dyn Fn(&OutcomeVector) -> u64>,
) -> Result<OutcomeVector, OracleError> {
    let t = outcomes.len();
    let z = noise.max_flips;
    if z > t {
        return Err(OracleError::NoiseExceedsTests { z, t });
    }
    if z == 0 {
        return Ok(outcomes.clone());
    }
    match &noise.mode {
        NoiseMode::RandomSeeded(seed) => {
            let mut rng = derive_rng(&[*seed, TAG_NOISE]);
            let mut noisy = outcomes.clone();
            for i in rand::seq::index::sample(&mut rng, t, z) {
                noisy.flip(i);
            }
            Ok(noisy)
        }
        NoiseMode::AdversarialSearch => {
            let candidates = flip_set_count(t, z);
            if candidates > ADVERSARIAL_SEARCH_LIMIT {
                return Err(OracleError::SearchTooLarge { candidates });
            }
            let Some(score) = adversary else {
                let mut noisy = outcomes.clone();
                for i in 0..z {
                    noisy.flip(i);
                }
                return Ok(noisy);
            };
            let mut best = outcomes.clone();
            let mut best_score = score(&best);
            for size in 1..=z {
                for flips in (0..t).combinations(size) {
                    let mut candidate = outcomes.clone();
                    for i in flips {
                        candidate.flip(i);
                    }
                    let s = score(&candidate);
                    if s > best_score {
                        best_score = s;
                        best = candidate;
                    }
                }
            }
            Ok(best)
        }
    }
}

fn flip_set_count(t: usize, z: usize) -> u128 {
    let mut total: u128 = 0;
    let mut choose: u128 = 1;
    for size in 0..=z {
        total = total.saturating_add(choose);
        choose = choose
            .saturating_mul((t - size) as u128)
            .saturating_div((size + 1) as u128);
    }
    total
}

/// Repeats each length-`group` block of `outcomes` `factor` times
/// consecutively: the reported outcomes of re-running every test of a
/// block-structured design `factor` times. [`majority_collapse`] inverts
/// this layout.
pub fn tile_repeats(
    outcomes: &OutcomeVector,
    group: usize,
    factor: usize,
) -> Result<OutcomeVector, OracleError> {
    assert!(group >= 1 && factor >= 1);
    if !outcomes.len().is_multiple_of(group) {
        return Err(OracleError::BlockMisalignment {
            len: outcomes.len(),
            group,
        });
    }
    let mut bits = Vec::with_capacity(outcomes.len() * factor);
    for block in 0..outcomes.len() / group {
        for _ in 0..factor {
            for pos in 0..group {
                bits.push(outcomes.get(block * group + pos));
            }
        }
    }
    Ok(OutcomeVector(bits))
}

/// Collapses `factor` consecutive copies of each length-`group` block by
/// per-position majority vote. With an odd `factor` and at most
/// `(factor - 1) / 2` corrupted copies per position, the collapse restores
/// the uncorrupted outcomes exactly.
pub fn majority_collapse(
    outcomes: &OutcomeVector,
    group: usize,
    factor: usize,
) -> Result<OutcomeVector, OracleError> {
    assert!(group >= 1 && factor >= 1);
    let span = group * factor;
    if !outcomes.len().is_multiple_of(span) {
        return Err(OracleError::BlockMisalignment {
            len: outcomes.len(),
            group: span,
        });
    }
    let blocks = outcomes.len() / span;
    let mut bits = Vec::with_capacity(blocks * group);
    for block in 0..blocks {
        for pos in 0..group {
            let votes = (0..factor)
                .filter(|r| outcomes.get(block * span + r * group + pos))
                .count();
            bits.push(2 * votes > factor);
        }
    }
    Ok(OutcomeVector(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{GapPolicy, HybridPolicy, NoiseSpec};
    use std::collections::BTreeMap;

    fn spec(defective: DefectiveModel, inhibitor: InhibitorModel) -> ModelSpec {
        ModelSpec {
            n: 12,
            d: 3,
            h: 3,
            b: 2,
            defective_model: defective,
            inhibitor_model: inhibitor,
            hybrid_policy: HybridPolicy::PerRunRole(BTreeMap::new()),
            gap_policy: GapPolicy::AlwaysNegative,
            noise: NoiseSpec::none(),
        }
    }

    fn ctx<'a>(truth: &'a GroundTruth, spec: &'a ModelSpec) -> TestContext<'a> {
        TestContext {
            truth,
            spec,
            test_id: 0,
        }
    }

    #[test]
    fn classical_outcome_is_any_defective() {
        let s = spec(DefectiveModel::Classical, InhibitorModel::None);
        let truth = GroundTruth::from_sets(12, vec![1, 5], vec![], vec![]).unwrap();
        assert!(test_subset([0, 1, 2], &ctx(&truth, &s)));
        assert!(!test_subset([0, 2, 3], &ctx(&truth, &s)));
        assert!(!test_subset([], &ctx(&truth, &s)));
    }

    #[test]
    fn threshold_band_respects_gap_policy() {
        let mut s = spec(DefectiveModel::Threshold(1, 3), InhibitorModel::None);
        let truth = GroundTruth::from_sets(12, vec![1, 2, 5], vec![], vec![]).unwrap();
        // two pooled defectives sit strictly inside the band (1, 3).
        let pool = [1, 2, 7];
        assert!(!test_subset(pool, &ctx(&truth, &s)));
        s.gap_policy = GapPolicy::AlwaysPositive;
        assert!(test_subset(pool, &ctx(&truth, &s)));
        // one defective is at the lower threshold, three at the upper.
        assert!(!test_subset([1, 7], &ctx(&truth, &s)));
        assert!(test_subset([1, 2, 5], &ctx(&truth, &s)));
    }

    #[test]
    fn seeded_gap_bits_are_reproducible() {
        let mut s = spec(DefectiveModel::Threshold(0, 3), InhibitorModel::None);
        s.gap_policy = GapPolicy::RandomSeeded(13);
        let truth = GroundTruth::from_sets(12, vec![1, 2], vec![], vec![]).unwrap();
        let outcomes: Vec<bool> = (0..40)
            .map(|t| {
                test_subset(
                    [1, 2],
                    &TestContext {
                        truth: &truth,
                        spec: &s,
                        test_id: t,
                    },
                )
            })
            .collect();
        let again: Vec<bool> = (0..40)
            .map(|t| {
                test_subset(
                    [1, 2],
                    &TestContext {
                        truth: &truth,
                        spec: &s,
                        test_id: t,
                    },
                )
            })
            .collect();
        assert_eq!(outcomes, again);
        assert!(outcomes.iter().any(|&b| b));
        assert!(outcomes.iter().any(|&b| !b));
    }

    #[test]
    fn crossover_band_resolution() {
        let mut s = spec(DefectiveModel::Threshold(1, 5), InhibitorModel::None);
        s.gap_policy = GapPolicy::Adversarial;
        let truth = GroundTruth::from_sets(12, vec![0, 1, 2, 3, 4], vec![], vec![]).unwrap();
        // counts 2 and 3 cross to positive, count 4 falls back to negative.
        assert!(test_subset([0, 1], &ctx(&truth, &s)));
        assert!(test_subset([0, 1, 2], &ctx(&truth, &s)));
        assert!(!test_subset([0, 1, 2, 3], &ctx(&truth, &s)));
    }

    #[test]
    fn classical_inhibitor_vetoes_everything() {
        let s = spec(DefectiveModel::Classical, InhibitorModel::Classical);
        let truth = GroundTruth::from_sets(12, vec![1, 2, 3, 4, 5], vec![6], vec![]).unwrap();
        assert!(!test_subset([1, 2, 3, 4, 5, 6], &ctx(&truth, &s)));
        assert!(test_subset([1, 2, 3, 4, 5], &ctx(&truth, &s)));
    }

    #[test]
    fn threshold_inhibitors_suppress_at_upper_bound() {
        let s = spec(DefectiveModel::Classical, InhibitorModel::Threshold(1, 3));
        let truth =
            GroundTruth::from_sets(12, vec![1, 2, 3, 4, 5], vec![6, 7, 8], vec![]).unwrap();
        // three inhibitors reach the upper bound: suppressed.
        assert!(!test_subset([1, 2, 3, 4, 5, 6, 7, 8], &ctx(&truth, &s)));
        // one inhibitor stays at the lower bound: audible.
        assert!(test_subset([1, 2, 3, 4, 5, 6], &ctx(&truth, &s)));
    }

    #[test]
    fn inhibitor_band_resolution_follows_policy() {
        let mut s = spec(DefectiveModel::Classical, InhibitorModel::Threshold(1, 3));
        let truth = GroundTruth::from_sets(12, vec![1], vec![6, 7], vec![]).unwrap();
        let pool = [1, 6, 7];
        // two inhibitors sit inside the band (1, 3).
        assert!(!test_subset(pool, &ctx(&truth, &s)));
        s.gap_policy = GapPolicy::AlwaysPositive;
        assert!(test_subset(pool, &ctx(&truth, &s)));
        // letting defectives through still needs a defective present.
        let empty_truth = GroundTruth::from_sets(12, vec![], vec![6, 7], vec![2]).unwrap();
        assert!(!test_subset([6, 7], &ctx(&empty_truth, &s)));
    }

    #[test]
    fn complex_defectives_fire_per_component() {
        let s = spec(
            DefectiveModel::Complex(vec![(0, 1), (1, 3)]),
            InhibitorModel::None,
        );
        let truth = GroundTruth::from_sets(12, vec![1, 2, 3, 4], vec![], vec![])
            .unwrap()
            .with_defective_parts(vec![vec![1], vec![2, 3, 4]])
            .unwrap();
        // component 0 fires on a single member.
        assert!(test_subset([1], &ctx(&truth, &s)));
        // component 1 needs three members; two fall into the band.
        assert!(!test_subset([2, 3], &ctx(&truth, &s)));
        assert!(test_subset([2, 3, 4], &ctx(&truth, &s)));
    }

    #[test]
    fn complex_inhibitors_veto_per_component() {
        let s = spec(
            DefectiveModel::Classical,
            InhibitorModel::Complex(vec![(0, 1), (1, 2)]),
        );
        let truth = GroundTruth::from_sets(12, vec![1], vec![5, 6, 7], vec![])
            .unwrap()
            .with_inhibitor_parts(vec![vec![5], vec![6, 7]])
            .unwrap();
        // component 0 vetoes alone; component 1 needs both members.
        assert!(!test_subset([1, 5], &ctx(&truth, &s)));
        assert!(!test_subset([1, 6, 7], &ctx(&truth, &s)));
        assert!(test_subset([1, 6], &ctx(&truth, &s)));
    }

    #[test]
    fn complex_inhibitor_band_follows_policy_per_component() {
        let mut s = spec(
            DefectiveModel::Classical,
            InhibitorModel::Complex(vec![(0, 1), (0, 2)]),
        );
        let truth = GroundTruth::from_sets(12, vec![1], vec![5, 6], vec![])
            .unwrap()
            .with_inhibitor_parts(vec![vec![5], vec![6]])
            .unwrap();
        // one member of component 1 sits inside its band (0, 2).
        assert!(!test_subset([1, 6], &ctx(&truth, &s)));
        s.gap_policy = GapPolicy::AlwaysPositive;
        assert!(test_subset([1, 6], &ctx(&truth, &s)));
    }

    #[test]
    fn hybrids_follow_per_run_roles() {
        let mut s = spec(DefectiveModel::Classical, InhibitorModel::Classical);
        let truth = GroundTruth::from_sets(12, vec![1], vec![], vec![6]).unwrap();
        // unmapped hybrid defaults to defective.
        assert!(test_subset([6], &ctx(&truth, &s)));
        s.hybrid_policy = HybridPolicy::PerRunRole([(6, HybridRole::Inhibitor)].into());
        assert!(!test_subset([1, 6], &ctx(&truth, &s)));
        assert!(!test_subset([6], &ctx(&truth, &s)));
    }

    #[test]
    fn per_test_hybrids_key_on_test_id() {
        let mut s = spec(DefectiveModel::Classical, InhibitorModel::Classical);
        s.hybrid_policy = HybridPolicy::PerTestRole { seed: 3 };
        let truth = GroundTruth::from_sets(12, vec![], vec![], vec![6]).unwrap();
        let outcomes: Vec<bool> = (0..32)
            .map(|t| {
                test_subset(
                    [6],
                    &TestContext {
                        truth: &truth,
                        spec: &s,
                        test_id: t,
                    },
                )
            })
            .collect();
        // a lone hybrid is positive exactly when it acts defective.
        assert!(outcomes.iter().any(|&b| b));
        assert!(outcomes.iter().any(|&b| !b));
    }

    #[test]
    fn run_tests_on_identity_reveals_defectives() {
        let s = spec(DefectiveModel::Classical, InhibitorModel::None);
        let truth = GroundTruth::from_sets(12, vec![2, 9], vec![], vec![]).unwrap();
        let y = run_tests(&MeasurementMatrix::identity(12), &truth, &s).unwrap();
        for j in 0..12 {
            assert_eq!(y.get(j), j == 2 || j == 9);
        }
    }

    #[test]
    fn run_tests_rejects_dimension_mismatch() {
        let s = spec(DefectiveModel::Classical, InhibitorModel::None);
        let truth = GroundTruth::from_sets(12, vec![2], vec![], vec![]).unwrap();
        assert!(matches!(
            run_tests(&MeasurementMatrix::identity(10), &truth, &s),
            Err(OracleError::DimensionMismatch { cols: 10, n: 12 })
        ));
    }

    #[test]
    fn offset_slices_reproduce_whole_run() {
        let mut s = spec(DefectiveModel::Threshold(0, 2), InhibitorModel::None);
        s.gap_policy = GapPolicy::RandomSeeded(5);
        let truth = GroundTruth::from_sets(12, vec![2, 9], vec![], vec![]).unwrap();
        let m = MeasurementMatrix::bernoulli(8, 12, 0.5, 1).unwrap();
        let whole = run_tests(&m, &truth, &s).unwrap();
        for i in 0..8 {
            let ctx = TestContext {
                truth: &truth,
                spec: &s,
                test_id: i,
            };
            assert_eq!(whole.get(i), test_subset(m.row_support(i), &ctx));
        }
    }

    #[test]
    fn random_noise_flips_exactly_z() {
        let y = OutcomeVector::from_bits(vec![false; 40]);
        let noise = NoiseSpec {
            max_flips: 3,
            mode: NoiseMode::RandomSeeded(8),
        };
        let noisy = apply_noise(&y, &noise, None).unwrap();
        assert_eq!(y.hamming(&noisy), 3);
        assert_eq!(noisy, apply_noise(&y, &noise, None).unwrap());
    }

    #[test]
    fn zero_noise_is_identity() {
        let y = OutcomeVector::from_bits(vec![true, false, true]);
        assert_eq!(apply_noise(&y, &NoiseSpec::none(), None).unwrap(), y);
    }

    #[test]
    fn noise_cannot_exceed_tests() {
        let y = OutcomeVector::from_bits(vec![true, false]);
        let noise = NoiseSpec {
            max_flips: 3,
            mode: NoiseMode::RandomSeeded(0),
        };
        assert!(matches!(
            apply_noise(&y, &noise, None),
            Err(OracleError::NoiseExceedsTests { z: 3, t: 2 })
        ));
    }

    #[test]
    fn adversarial_search_maximizes_score() {
        let y = OutcomeVector::from_bits(vec![false; 6]);
        let noise = NoiseSpec {
            max_flips: 2,
            mode: NoiseMode::AdversarialSearch,
        };
        // adversary wants ones at the end of the vector.
        let score = |v: &OutcomeVector| {
            v.as_bools()
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i as u64)
                .sum()
        };
        let noisy = apply_noise(&y, &noise, Some(&score)).unwrap();
        assert_eq!(noisy.to_string(), "000011");
    }

    #[test]
    fn adversarial_search_without_adversary_is_prefix_flip() {
        let y = OutcomeVector::from_bits(vec![false; 5]);
        let noise = NoiseSpec {
            max_flips: 2,
            mode: NoiseMode::AdversarialSearch,
        };
        assert_eq!(apply_noise(&y, &noise, None).unwrap().to_string(), "11000");
    }

    #[test]
    fn adversarial_search_rejects_huge_spaces() {
        let y = OutcomeVector::from_bits(vec![false; 4000]);
        let noise = NoiseSpec {
            max_flips: 3,
            mode: NoiseMode::AdversarialSearch,
        };
        assert!(matches!(
            apply_noise(&y, &noise, None),
            Err(OracleError::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn majority_collapse_recovers_from_minority_corruption() {
        // two blocks of length 2, each repeated three times.
        let clean = OutcomeVector::from_bits(vec![
            true, false, true, false, true, false, // block 0 copies
            false, true, false, true, false, true, // block 1 copies
        ]);
        let mut noisy = clean.clone();
        noisy.flip(0);
        noisy.flip(9);
        let collapsed = majority_collapse(&noisy, 2, 3).unwrap();
        assert_eq!(collapsed.to_string(), "1001");
    }

    #[test]
    fn tiling_then_collapsing_is_identity() {
        let y: OutcomeVector = "10110".parse().unwrap();
        for factor in [1, 3, 5] {
            let tiled = tile_repeats(&y, 1, factor).unwrap();
            assert_eq!(tiled.len(), 5 * factor);
            assert_eq!(majority_collapse(&tiled, 1, factor).unwrap(), y);
        }
        let grouped: OutcomeVector = "101101".parse().unwrap();
        let tiled = tile_repeats(&grouped, 3, 3).unwrap();
        assert_eq!(majority_collapse(&tiled, 3, 3).unwrap(), grouped);
    }

    #[test]
    fn majority_collapse_checks_alignment() {
        let y = OutcomeVector::from_bits(vec![true; 10]);
        assert!(matches!(
            majority_collapse(&y, 2, 3),
            Err(OracleError::BlockMisalignment { len: 10, group: 6 })
        ));
    }

    #[test]
    fn outcome_vector_parses_and_prints() {
        let y: OutcomeVector = "01101".parse().unwrap();
        assert_eq!(y.to_string(), "01101");
        assert!(matches!(
            "0121".parse::<OutcomeVector>(),
            Err(OracleError::NonBinaryOutcome('2'))
        ));
    }
}
