//! Population models for pooled testing with defective, inhibitor, and
//! hybrid items.
//!
//! A [`ModelSpec`] fixes the population size, per-role cardinality bounds,
//! the semantics each role follows inside a test, the policy resolving
//! under-specified threshold bands, and the outcome noise budget. A
//! [`GroundTruth`] is one concrete assignment of roles to items, sampled
//! reproducibly from a spec and a seed.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::seeding::{derive_bit, derive_rng, derive_u64, TAG_GAP, TAG_HYBRID, TAG_NOISE, TAG_TRUTH};

/// Role of a single item in the population.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ItemType {
    /// Inert: never influences an outcome.
    Negative,
    /// Drives outcomes positive under the defective semantics.
    Defective,
    /// Suppresses outcomes under the inhibitor semantics.
    Inhibitor,
    /// Acts as defective or inhibitor per the hybrid policy.
    Hybrid,
}

/// How pooled defectives determine a positive outcome.
///
/// `Threshold(l, u)` with `u = 1` behaves exactly like `Classical`, and a
/// one-component `Complex` behaves exactly like its `Threshold`;
/// [`validate_spec`] canonicalizes both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DefectiveModel {
    /// One pooled defective suffices for a positive outcome.
    Classical,
    /// At most `l` pooled defectives test negative, at least `u` positive,
    /// and counts strictly between fall to the gap policy. Requires `l < u`.
    Threshold(usize, usize),
    /// The defective set splits into components, each with its own
    /// threshold window; the test is positive when some component's count
    /// clears its window.
    Complex(Vec<(usize, usize)>),
}

impl DefectiveModel {
    /// Width of each unresolved band, per component: `u - l - 1`.
    pub fn gaps(&self) -> Vec<usize> {
        match self {
            DefectiveModel::Classical => vec![0],
            DefectiveModel::Threshold(l, u) => vec![u.saturating_sub(l + 1)],
            DefectiveModel::Complex(windows) => {
                windows.iter().map(|(l, u)| u.saturating_sub(l + 1)).collect()
            }
        }
    }

    pub(crate) fn component_count(&self) -> usize {
        match self {
            DefectiveModel::Complex(windows) => windows.len(),
            _ => 1,
        }
    }
}

/// How pooled inhibitors suppress an otherwise positive outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InhibitorModel {
    /// No inhibitor semantics; inhibitor items are inert.
    None,
    /// A single pooled inhibitor forces the outcome negative.
    Classical,
    /// At least `u` pooled inhibitors force negative, at most `l` leave the
    /// defectives audible, and the band between falls to the gap policy.
    Threshold(usize, usize),
    /// Inhibitors split into components, each with its own window; any
    /// component reaching its upper bound forces negative.
    Complex(Vec<(usize, usize)>),
}

impl InhibitorModel {
    /// Width of each unresolved band, per component; empty for `None`.
    pub fn gaps(&self) -> Vec<usize> {
        match self {
            InhibitorModel::None => vec![],
            InhibitorModel::Classical => vec![0],
            InhibitorModel::Threshold(l, u) => vec![u.saturating_sub(l + 1)],
            InhibitorModel::Complex(windows) => {
                windows.iter().map(|(l, u)| u.saturating_sub(l + 1)).collect()
            }
        }
    }

    pub(crate) fn component_count(&self) -> usize {
        match self {
            InhibitorModel::Complex(windows) => windows.len(),
            _ => 1,
        }
    }
}

/// Side a hybrid item takes inside one test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HybridRole {
    Defective,
    Inhibitor,
}

/// How hybrid items pick a side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HybridPolicy {
    /// Each hybrid keeps one side for the whole run. Items missing from the
    /// map act as defectives; map keys that name no hybrid are ignored.
    PerRunRole(BTreeMap<usize, HybridRole>),
    /// Each hybrid re-picks a side per test, as a pure function of
    /// `(seed, item, test id)`.
    PerTestRole { seed: u64 },
}

impl HybridPolicy {
    /// Effective side of hybrid `item` inside test `test_id`.
    pub fn role(&self, item: usize, test_id: usize) -> HybridRole {
        match self {
            HybridPolicy::PerRunRole(map) => {
                map.get(&item).copied().unwrap_or(HybridRole::Defective)
            }
            HybridPolicy::PerTestRole { seed } => {
                if derive_bit(&[*seed, item as u64, test_id as u64, TAG_HYBRID]) {
                    HybridRole::Defective
                } else {
                    HybridRole::Inhibitor
                }
            }
        }
    }
}

/// Resolution rule for counts that fall strictly inside a threshold band.
///
/// In a defective band the policy decides the outcome directly. In an
/// inhibitor band it decides whether the component suppresses the test:
/// `AlwaysNegative` suppresses, `AlwaysPositive` lets the defective stage
/// speak (the outcome is still negative when no defectives are pooled).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GapPolicy {
    AlwaysNegative,
    AlwaysPositive,
    /// Deterministic pseudo-random bit per `(seed, test id, stage,
    /// component, count)`.
    RandomSeeded(u64),
    /// Crossover rule: counts in the lower half of the band (midpoint
    /// included) behave as if they had reached the upper threshold, counts
    /// in the upper half as if they had stayed at the lower one.
    Adversarial,
}

/// True when an in-band `count` adopts upper-threshold behavior under the
/// crossover rule.
fn crossed(count: usize, lower: usize, upper: usize) -> bool {
    count - lower <= upper - count
}

impl GapPolicy {
    /// Outcome for a defective count strictly inside `(lower, upper)`.
    pub(crate) fn gap_outcome(
        &self,
        count: usize,
        lower: usize,
        upper: usize,
        test_id: usize,
        component: usize,
    ) -> bool {
        debug_assert!(count > lower && count < upper);
        match self {
            GapPolicy::AlwaysNegative => false,
            GapPolicy::AlwaysPositive => true,
            GapPolicy::RandomSeeded(seed) => derive_bit(&[
                *seed,
                test_id as u64,
                TAG_GAP + 2 * component as u64,
                count as u64,
            ]),
            GapPolicy::Adversarial => crossed(count, lower, upper),
        }
    }

    /// Whether an inhibitor count strictly inside `(lower, upper)`
    /// suppresses the test.
    pub(crate) fn gap_inhibits(
        &self,
        count: usize,
        lower: usize,
        upper: usize,
        test_id: usize,
        component: usize,
    ) -> bool {
        debug_assert!(count > lower && count < upper);
        match self {
            GapPolicy::AlwaysNegative => true,
            GapPolicy::AlwaysPositive => false,
            GapPolicy::RandomSeeded(seed) => derive_bit(&[
                *seed,
                test_id as u64,
                TAG_GAP + 2 * component as u64 + 1,
                count as u64,
            ]),
            GapPolicy::Adversarial => crossed(count, lower, upper),
        }
    }
}

/// How flipped outcomes are chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseMode {
    /// Flip exactly `z` outcome positions chosen by the seed.
    RandomSeeded(u64),
    /// Search all flip sets of size at most `z` for the worst one under a
    /// caller-supplied score; without a score, flip the first `z` positions.
    AdversarialSearch,
}

/// Outcome noise budget: at most `max_flips` tests report the wrong bit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoiseSpec {
    #[serde(rename = "z")]
    pub max_flips: usize,
    pub mode: NoiseMode,
}

impl NoiseSpec {
    /// Noiseless: every outcome is reported faithfully.
    pub fn none() -> Self {
        NoiseSpec {
            max_flips: 0,
            mode: NoiseMode::RandomSeeded(0),
        }
    }
}

/// Complete description of a population and its test semantics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    /// Population size.
    pub n: usize,
    /// Upper bound on defective items.
    pub d: usize,
    /// Upper bound on inhibitor items.
    pub h: usize,
    /// Upper bound on hybrid items.
    pub b: usize,
    pub defective_model: DefectiveModel,
    pub inhibitor_model: InhibitorModel,
    pub hybrid_policy: HybridPolicy,
    pub gap_policy: GapPolicy,
    pub noise: NoiseSpec,
}

impl ModelSpec {
    /// Sparsity bound used by block decoders: `max(d, h, b)`.
    pub fn sparsity_bound(&self) -> usize {
        self.d.max(self.h).max(self.b)
    }

    /// Spec with every embedded seed re-derived from `trial_seed`, so batch
    /// trials draw independent gap bits, hybrid roles, and noise patterns.
    pub fn reseeded(&self, trial_seed: u64) -> Self {
        let mut spec = self.clone();
        if let GapPolicy::RandomSeeded(seed) = spec.gap_policy {
            spec.gap_policy = GapPolicy::RandomSeeded(derive_u64(&[seed, trial_seed, TAG_GAP]));
        }
        if let HybridPolicy::PerTestRole { seed } = spec.hybrid_policy {
            spec.hybrid_policy = HybridPolicy::PerTestRole {
                seed: derive_u64(&[seed, trial_seed, TAG_HYBRID]),
            };
        }
        if let NoiseMode::RandomSeeded(seed) = spec.noise.mode {
            spec.noise.mode = NoiseMode::RandomSeeded(derive_u64(&[seed, trial_seed, TAG_NOISE]));
        }
        spec
    }
}

/// A [`ModelSpec`] plus the base seed, in the JSON layout consumed and
/// produced by the command-line tools.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceConfig {
    #[serde(flatten)]
    pub model: ModelSpec,
    pub seed: u64,
}

/// Which role family a violation concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Defective,
    Inhibitor,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Defective => write!(f, "defective"),
            Side::Inhibitor => write!(f, "inhibitor"),
        }
    }
}

/// One reason a [`ModelSpec`] is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    /// A threshold window `(l, u)` needs `l < u`.
    #[error("invalid threshold window ({lower}, {upper}) on the {side} side")]
    InvalidThresholdWindow {
        side: Side,
        lower: usize,
        upper: usize,
    },
    /// A complex model needs at least one component.
    #[error("empty decomposition on the {side} side")]
    EmptyDecomposition { side: Side },
    /// The cardinality bounds exceed the population.
    #[error("overfull population: bounds sum to {sum} but n = {n}")]
    OverfullPopulation { sum: usize, n: usize },
    /// Nothing to search for: all three bounds are zero.
    #[error("bounds d, h, b are all zero")]
    NoTargets,
    /// The population is empty.
    #[error("population size n must be positive")]
    EmptyPopulation,
}

/// Errors from model validation, sampling, and truth construction.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid model: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
    /// A complex decomposition has more components than sampled items.
    #[error("decomposition larger than set: {components} components exceed {bound} items")]
    DecompositionLargerThanSet { components: usize, bound: usize },
    /// Ground truth sets overlap, repeat items, or leave `0..n`.
    #[error("malformed ground truth: {0}")]
    MalformedTruth(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Canonical form of a spec together with its derived band widths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedSpec {
    canonical: ModelSpec,
    defective_gaps: Vec<usize>,
    inhibitor_gaps: Vec<usize>,
}

impl ValidatedSpec {
    /// The canonical spec: degenerate thresholds collapsed to classical,
    /// one-component complex models collapsed to plain thresholds.
    pub fn spec(&self) -> &ModelSpec {
        &self.canonical
    }

    /// Band width per defective component, before canonicalization.
    pub fn defective_gaps(&self) -> &[usize] {
        &self.defective_gaps
    }

    /// Band width per inhibitor component, before canonicalization.
    pub fn inhibitor_gaps(&self) -> &[usize] {
        &self.inhibitor_gaps
    }
}

fn check_windows(windows: &[(usize, usize)], side: Side, violations: &mut Vec<Violation>) {
    for &(l, u) in windows {
        if l >= u {
            violations.push(Violation::InvalidThresholdWindow {
                side,
                lower: l,
                upper: u,
            });
        }
    }
}

fn canonical_defective(model: &DefectiveModel) -> DefectiveModel {
    match model {
        DefectiveModel::Complex(windows) if windows.len() == 1 => {
            canonical_defective(&DefectiveModel::Threshold(windows[0].0, windows[0].1))
        }
        DefectiveModel::Threshold(_, 1) => DefectiveModel::Classical,
        other => other.clone(),
    }
}

fn canonical_inhibitor(model: &InhibitorModel) -> InhibitorModel {
    match model {
        InhibitorModel::Complex(windows) if windows.len() == 1 => {
            canonical_inhibitor(&InhibitorModel::Threshold(windows[0].0, windows[0].1))
        }
        InhibitorModel::Threshold(_, 1) => InhibitorModel::Classical,
        other => other.clone(),
    }
}

/// Checks a spec's structural invariants and returns its canonical form,
/// or every violation found.
pub fn validate_spec(spec: &ModelSpec) -> Result<ValidatedSpec, ModelError> {
    let mut violations = Vec::new();
    if spec.n == 0 {
        violations.push(Violation::EmptyPopulation);
    }
    match &spec.defective_model {
        DefectiveModel::Classical => {}
        DefectiveModel::Threshold(l, u) => check_windows(&[(*l, *u)], Side::Defective, &mut violations),
        DefectiveModel::Complex(windows) => {
            if windows.is_empty() {
                violations.push(Violation::EmptyDecomposition {
                    side: Side::Defective,
                });
            }
            check_windows(windows, Side::Defective, &mut violations);
        }
    }
    match &spec.inhibitor_model {
        InhibitorModel::None | InhibitorModel::Classical => {}
        InhibitorModel::Threshold(l, u) => check_windows(&[(*l, *u)], Side::Inhibitor, &mut violations),
        InhibitorModel::Complex(windows) => {
            if windows.is_empty() {
                violations.push(Violation::EmptyDecomposition {
                    side: Side::Inhibitor,
                });
            }
            check_windows(windows, Side::Inhibitor, &mut violations);
        }
    }
    if spec.d == 0 && spec.h == 0 && spec.b == 0 {
        violations.push(Violation::NoTargets);
    }
    let sum = spec.d + spec.h + spec.b;
    if sum > spec.n {
        violations.push(Violation::OverfullPopulation { sum, n: spec.n });
    }
    if !violations.is_empty() {
        return Err(ModelError::Invalid(violations));
    }
    let mut canonical = spec.clone();
    canonical.defective_model = canonical_defective(&spec.defective_model);
    canonical.inhibitor_model = canonical_inhibitor(&spec.inhibitor_model);
    Ok(ValidatedSpec {
        defective_gaps: spec.defective_model.gaps(),
        inhibitor_gaps: spec.inhibitor_model.gaps(),
        canonical,
    })
}

/// One concrete role assignment: which items are defective, inhibitor, or
/// hybrid, with component partitions for complex models.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundTruth {
    n: usize,
    defectives: Vec<usize>,
    inhibitors: Vec<usize>,
    hybrids: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    defective_parts: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inhibitor_parts: Option<Vec<Vec<usize>>>,
}

impl GroundTruth {
    /// Builds a truth from the three role sets. Sets must be pairwise
    /// disjoint subsets of `0..n` without repeats; each is stored sorted.
    pub fn from_sets(
        n: usize,
        mut defectives: Vec<usize>,
        mut inhibitors: Vec<usize>,
        mut hybrids: Vec<usize>,
    ) -> Result<Self, ModelError> {
        defectives.sort_unstable();
        inhibitors.sort_unstable();
        hybrids.sort_unstable();
        let mut seen = vec![false; n];
        for &item in defectives.iter().chain(&inhibitors).chain(&hybrids) {
            if item >= n {
                return Err(ModelError::MalformedTruth(format!(
                    "item {item} outside population 0..{n}"
                )));
            }
            if seen[item] {
                return Err(ModelError::MalformedTruth(format!(
                    "item {item} assigned more than one role"
                )));
            }
            seen[item] = true;
        }
        Ok(GroundTruth {
            n,
            defectives,
            inhibitors,
            hybrids,
            defective_parts: None,
            inhibitor_parts: None,
        })
    }

    /// Attaches a component partition of the defective set. Parts may be
    /// empty but must be disjoint and cover exactly the defectives.
    pub fn with_defective_parts(mut self, parts: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        validate_parts(&self.defectives, &parts, "defective")?;
        self.defective_parts = Some(sorted_parts(parts));
        Ok(self)
    }

    /// Attaches a component partition of the inhibitor set.
    pub fn with_inhibitor_parts(mut self, parts: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        validate_parts(&self.inhibitors, &parts, "inhibitor")?;
        self.inhibitor_parts = Some(sorted_parts(parts));
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn defectives(&self) -> &[usize] {
        &self.defectives
    }

    pub fn inhibitors(&self) -> &[usize] {
        &self.inhibitors
    }

    pub fn hybrids(&self) -> &[usize] {
        &self.hybrids
    }

    pub fn defective_parts(&self) -> Option<&[Vec<usize>]> {
        self.defective_parts.as_deref()
    }

    pub fn inhibitor_parts(&self) -> Option<&[Vec<usize>]> {
        self.inhibitor_parts.as_deref()
    }

    /// Role of `item`.
    pub fn role(&self, item: usize) -> ItemType {
        if self.defectives.binary_search(&item).is_ok() {
            ItemType::Defective
        } else if self.inhibitors.binary_search(&item).is_ok() {
            ItemType::Inhibitor
        } else if self.hybrids.binary_search(&item).is_ok() {
            ItemType::Hybrid
        } else {
            ItemType::Negative
        }
    }

    /// Component index of a defective item, when a partition is attached.
    pub(crate) fn defective_component(&self, item: usize) -> Option<usize> {
        let parts = self.defective_parts.as_ref()?;
        parts.iter().position(|p| p.binary_search(&item).is_ok())
    }

    /// Component index of an inhibitor item, when a partition is attached.
    pub(crate) fn inhibitor_component(&self, item: usize) -> Option<usize> {
        let parts = self.inhibitor_parts.as_ref()?;
        parts.iter().position(|p| p.binary_search(&item).is_ok())
    }

    /// Number of items holding any non-negative role.
    pub fn support_size(&self) -> usize {
        self.defectives.len() + self.inhibitors.len() + self.hybrids.len()
    }
}

fn validate_parts(set: &[usize], parts: &[Vec<usize>], side: &str) -> Result<(), ModelError> {
    let mut all: Vec<usize> = parts.iter().flatten().copied().collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(ModelError::MalformedTruth(format!(
            "{side} parts overlap"
        )));
    }
    if all != set {
        return Err(ModelError::MalformedTruth(format!(
            "{side} parts do not cover the {side} set"
        )));
    }
    Ok(())
}

fn sorted_parts(mut parts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for part in &mut parts {
        part.sort_unstable();
    }
    parts
}

/// Samples a ground truth with exactly `d` defectives, `h` inhibitors, and
/// `b` hybrids, plus component partitions for complex models. Identical
/// `(spec, seed)` pairs yield identical truths.
pub fn sample_ground_truth(spec: &ModelSpec, seed: u64) -> Result<GroundTruth, ModelError> {
    validate_spec(spec)?;
    let mut rng = derive_rng(&[seed, TAG_TRUTH]);
    let picks = rand::seq::index::sample(&mut rng, spec.n, spec.d + spec.h + spec.b).into_vec();
    let drawn_defectives = picks[..spec.d].to_vec();
    let inhibitors = picks[spec.d..spec.d + spec.h].to_vec();
    let hybrids = picks[spec.d + spec.h..].to_vec();
    let mut truth = GroundTruth::from_sets(
        spec.n,
        drawn_defectives.clone(),
        inhibitors.clone(),
        hybrids,
    )?;
    if let DefectiveModel::Complex(windows) = &spec.defective_model {
        let parts = split_into_parts(&drawn_defectives, windows.len(), spec.d, &mut rng)?;
        truth = truth.with_defective_parts(parts)?;
    }
    if let InhibitorModel::Complex(windows) = &spec.inhibitor_model {
        let parts = split_into_parts(&inhibitors, windows.len(), spec.h, &mut rng)?;
        truth = truth.with_inhibitor_parts(parts)?;
    }
    Ok(truth)
}

/// Splits `drawn` (in draw order) into `components` nonempty runs at random
/// cut points.
fn split_into_parts(
    drawn: &[usize],
    components: usize,
    bound: usize,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Result<Vec<Vec<usize>>, ModelError> {
    if components > bound {
        return Err(ModelError::DecompositionLargerThanSet {
            components,
            bound,
        });
    }
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, bound - 1, components - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(bound);
    Ok(cuts
        .windows(2)
        .map(|w| drawn[w[0]..w[1]].to_vec())
        .collect())
}

/// Multiplicative breakdown of the space of testing models expressible in
/// this crate's vocabulary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelSpaceFactors {
    /// Nonempty subsets of the three defective semantics: `2^3 - 1`.
    pub defective_choices: u64,
    /// Subsets of the three inhibitor semantics, absence included: `2^3`.
    pub inhibitor_choices: u64,
    /// Hybrid pairings of a defective with an inhibitor semantics: `2^(3*3)`.
    pub hybrid_choices: u64,
    /// Noiseless or noisy outcomes: 2.
    pub outcome_settings: u64,
    /// Adaptive or non-adaptive test scheduling: 2.
    pub testing_strategies: u64,
    /// Nonempty subsets of the six design criteria a scheme can target:
    /// `2^6 - 1`.
    pub criteria_combinations: u64,
}

impl ModelSpaceFactors {
    pub fn factors(&self) -> [u64; 6] {
        [
            self.defective_choices,
            self.inhibitor_choices,
            self.hybrid_choices,
            self.outcome_settings,
            self.testing_strategies,
            self.criteria_combinations,
        ]
    }

    pub fn total(&self) -> u64 {
        self.factors().iter().product()
    }
}

/// Counts the distinct testing models spanned by the defective, inhibitor,
/// hybrid, noise, strategy, and design-criteria axes.
pub fn enumerate_model_space() -> ModelSpaceFactors {
    ModelSpaceFactors {
        defective_choices: (1 << 3) - 1,
        inhibitor_choices: 1 << 3,
        hybrid_choices: 1 << 9,
        outcome_settings: 2,
        testing_strategies: 2,
        criteria_combinations: (1 << 6) - 1,
    }
}
