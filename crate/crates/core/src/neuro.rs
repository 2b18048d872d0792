//! Neuron classification on top of the pooled-testing machinery.
//!
//! Excitatory, inhibitory, hybrid, and negative neurons map onto defective,
//! inhibitor, hybrid, and negative items. Because an action potential is
//! all-or-none, the mapped models never carry threshold gaps. The module
//! also scores how well a pooled-recording graph can realize a measurement
//! design, and implements the coarse classifier that a multimeter readout
//! permits: separating negative from non-negative neurons.

use std::collections::BTreeSet;

use pathfinding::matrix::Matrix as WeightMatrix;
use pathfinding::prelude::kuhn_munkres;
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decode::{comp_decode, DecodeError};
use crate::matrix::MeasurementMatrix;
use crate::model::{
    DefectiveModel, GapPolicy, GroundTruth, HybridPolicy, InhibitorModel, ModelError, ModelSpec,
    NoiseSpec,
};
use crate::oracle::{run_tests, OracleError};
use crate::seeding::{derive_rng, derive_u64, TAG_HYBRID, TAG_MATRIX};

/// Errors from scenario mapping, graph scoring, and classification.
#[derive(Debug, Error)]
pub enum NeuroError {
    /// The scenario has no inhibitory or hybrid neuron.
    #[error("model must include inhibitors: no inhibitory or hybrid neuron in scenario")]
    MissingInhibitors,
    /// The scenario has no excitatory neuron.
    #[error("model must include defectives: no excitatory neuron in scenario")]
    MissingExcitatory,
    /// A threshold window with a nonzero gap was requested.
    #[error("AP all-or-none forbids gaps: window ({lower}, {upper}) has gap {gap}")]
    GapForbidden {
        lower: usize,
        upper: usize,
        gap: usize,
    },
    /// The design has no memberships, so closeness is undefined.
    #[error("empty matrix: no memberships to cover")]
    EmptyDesign,
    /// A pooled node's adjacency names a neuron outside the population.
    #[error("neuron index {index} outside population 0..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// The four neuron classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NeuronType {
    Negative,
    Excitatory,
    Inhibitory,
    Hybrid,
}

/// A population of typed neurons under one stimulus.
///
/// Hybrid neurons may change sides between stimuli, so the stimulus
/// identity participates in the per-test role derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeuronScenario {
    pub types: Vec<NeuronType>,
    pub stimulus_id: u64,
}

impl NeuronScenario {
    pub fn n(&self) -> usize {
        self.types.len()
    }

    fn indices_of(&self, wanted: NeuronType) -> Vec<usize> {
        self.types
            .iter()
            .enumerate()
            .filter_map(|(i, &t)| (t == wanted).then_some(i))
            .collect()
    }

    /// Neurons of any non-negative class, ascending.
    pub fn non_negative(&self) -> Vec<usize> {
        self.types
            .iter()
            .enumerate()
            .filter_map(|(i, &t)| (t != NeuronType::Negative).then_some(i))
            .collect()
    }
}

/// Bipartite adjacency from pooled recording nodes to the neurons they
/// reach synaptically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityGraph {
    n: usize,
    adjacency: Vec<BTreeSet<usize>>,
}

impl ConnectivityGraph {
    /// Builds a graph over `n` neurons; every adjacency entry must name
    /// neurons below `n`.
    pub fn new(n: usize, adjacency: Vec<BTreeSet<usize>>) -> Result<Self, NeuroError> {
        for node in &adjacency {
            if let Some(&index) = node.iter().find(|&&j| j >= n) {
                return Err(NeuroError::IndexOutOfRange { index, n });
            }
        }
        Ok(ConnectivityGraph { n, adjacency })
    }

    /// Complete bipartite graph: every pooled node reaches every neuron.
    pub fn complete(nodes: usize, n: usize) -> Self {
        ConnectivityGraph {
            n,
            adjacency: vec![(0..n).collect(); nodes],
        }
    }

    /// Graph with pooled nodes but no edges.
    pub fn edgeless(nodes: usize, n: usize) -> Self {
        ConnectivityGraph {
            n,
            adjacency: vec![BTreeSet::new(); nodes],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, node: usize) -> &BTreeSet<usize> {
        &self.adjacency[node]
    }

    /// Adds one edge; the monotonicity of closeness under this operation is
    /// part of the scoring contract.
    pub fn add_edge(&mut self, node: usize, neuron: usize) -> Result<(), NeuroError> {
        if neuron >= self.n {
            return Err(NeuroError::IndexOutOfRange {
                index: neuron,
                n: self.n,
            });
        }
        self.adjacency[node].insert(neuron);
        Ok(())
    }
}

/// Maps a scenario onto a ground truth and a zero-gap model spec.
///
/// Excitatory neurons become defectives, inhibitory neurons inhibitors,
/// hybrid neurons hybrids with per-test roles keyed on `(stimulus_seed,
/// stimulus_id)`, and negatives stay negative. Both semantics are
/// classical, the zero-gap limit of any threshold window.
pub fn map_scenario(
    sc: &NeuronScenario,
    stimulus_seed: u64,
) -> Result<(GroundTruth, ModelSpec), NeuroError> {
    map_scenario_with_windows(sc, stimulus_seed, None, None)
}

/// [`map_scenario`] with explicit threshold windows. Each window must have
/// gap zero (`u = l + 1`): an action potential either fires or does not, so
/// no count can sit in an unresolved band.
pub fn map_scenario_with_windows(
    sc: &NeuronScenario,
    stimulus_seed: u64,
    defective_window: Option<(usize, usize)>,
    inhibitor_window: Option<(usize, usize)>,
) -> Result<(GroundTruth, ModelSpec), NeuroError> {
    let excitatory = sc.indices_of(NeuronType::Excitatory);
    let inhibitory = sc.indices_of(NeuronType::Inhibitory);
    let hybrid = sc.indices_of(NeuronType::Hybrid);
    if excitatory.is_empty() {
        return Err(NeuroError::MissingExcitatory);
    }
    if inhibitory.is_empty() && hybrid.is_empty() {
        return Err(NeuroError::MissingInhibitors);
    }
    for (l, u) in [defective_window, inhibitor_window].into_iter().flatten() {
        if u != l + 1 {
            return Err(NeuroError::GapForbidden {
                lower: l,
                upper: u,
                gap: u.saturating_sub(l + 1),
            });
        }
    }
    let defective_model = match defective_window {
        Some((l, u)) => DefectiveModel::Threshold(l, u),
        None => DefectiveModel::Classical,
    };
    let inhibitor_model = match inhibitor_window {
        Some((l, u)) => InhibitorModel::Threshold(l, u),
        None => InhibitorModel::Classical,
    };
    let spec = ModelSpec {
        n: sc.n(),
        d: excitatory.len(),
        h: inhibitory.len(),
        b: hybrid.len(),
        defective_model,
        inhibitor_model,
        hybrid_policy: HybridPolicy::PerTestRole {
            seed: derive_u64(&[stimulus_seed, sc.stimulus_id, TAG_HYBRID]),
        },
        gap_policy: GapPolicy::AlwaysNegative,
        noise: NoiseSpec::none(),
    };
    debug_assert!(spec.defective_model.gaps().iter().all(|&g| g == 0));
    debug_assert!(spec.inhibitor_model.gaps().iter().all(|&g| g == 0));
    let truth = GroundTruth::from_sets(sc.n(), excitatory, inhibitory, hybrid)?;
    Ok((truth, spec))
}

/// Size bound under which row-to-node assignment is solved exactly.
const EXACT_ASSIGNMENT_LIMIT: usize = 20_000;
/// Restarts used by the large-instance greedy assignment.
const GREEDY_RESTARTS: u64 = 8;

/// Scores how closely `graph` can realize `design`: rows are assigned
/// injectively to pooled nodes, each row is credited with the memberships
/// its node's adjacency covers, and the best achievable credit is divided
/// by the total memberships (ones) in the design.
///
/// 1.0 means every pooled set is exactly reachable; a graph with no edges
/// scores 0.0. Small instances are scored by an optimal assignment, which
/// makes the score monotone under edge addition; very large ones fall back
/// to a deterministic greedy with restarts.
pub fn graph_closeness(
    graph: &ConnectivityGraph,
    design: &MeasurementMatrix,
) -> Result<f64, NeuroError> {
    let total = design.total_weight();
    if total == 0 {
        return Err(NeuroError::EmptyDesign);
    }
    let t = design.rows();
    let p = graph.node_count();
    let weights: Vec<Vec<i64>> = (0..t)
        .map(|i| {
            let support = design.row_support(i);
            (0..p)
                .map(|q| {
                    support
                        .iter()
                        .filter(|j| graph.neighbors(q).contains(j))
                        .count() as i64
                })
                .collect()
        })
        .collect();
    let covered = if t * p.max(t) <= EXACT_ASSIGNMENT_LIMIT {
        exact_assignment(&weights, t, p)
    } else {
        greedy_assignment(&weights, t, p)
    };
    Ok(covered as f64 / total as f64)
}

/// Optimal injective assignment value; columns are padded with zero-weight
/// dummy nodes when rows outnumber pooled nodes.
fn exact_assignment(weights: &[Vec<i64>], t: usize, p: usize) -> i64 {
    let cols = p.max(t);
    let padded = WeightMatrix::from_rows(weights.iter().map(|row| {
        let mut full = row.clone();
        full.resize(cols, 0);
        full
    }))
    .expect("rectangular weight rows");
    let (value, _) = kuhn_munkres(&padded);
    value
}

fn greedy_assignment(weights: &[Vec<i64>], t: usize, p: usize) -> i64 {
    let mut best = 0i64;
    for restart in 0..GREEDY_RESTARTS {
        let mut order: Vec<usize> = (0..t).collect();
        if restart > 0 {
            order.shuffle(&mut derive_rng(&[restart, TAG_MATRIX]));
        }
        let mut used = vec![false; p];
        let mut value = 0i64;
        for &i in &order {
            let pick = (0..p)
                .filter(|&q| !used[q])
                .max_by_key(|&q| (weights[i][q], p - q));
            if let Some(q) = pick {
                if weights[i][q] > 0 {
                    used[q] = true;
                    value += weights[i][q];
                }
            }
        }
        best = best.max(value);
    }
    best
}

/// Classifies neurons into negative and non-negative sets from pooled
/// multimeter readings.
///
/// A multimeter registers any action potential, so every non-negative
/// neuron reads as active regardless of its synaptic role: the outcomes
/// equal a classical run whose defective set is all non-negative neurons.
/// Cover decoding then yields the non-negative candidates; neurons absent
/// from every pool cannot be ruled out and stay candidates. The split is
/// exact when the design is disjunct for the non-negative count.
pub fn feasible_classify(
    design: &MeasurementMatrix,
    sc: &NeuronScenario,
) -> Result<(Vec<usize>, Vec<usize>), NeuroError> {
    let n = sc.n();
    if design.cols() != n {
        return Err(OracleError::DimensionMismatch {
            cols: design.cols(),
            n,
        }
        .into());
    }
    let non_negative = sc.non_negative();
    let spec = ModelSpec {
        n,
        d: non_negative.len(),
        h: 0,
        b: 0,
        defective_model: DefectiveModel::Classical,
        inhibitor_model: InhibitorModel::None,
        hybrid_policy: HybridPolicy::PerRunRole(Default::default()),
        gap_policy: GapPolicy::AlwaysNegative,
        noise: NoiseSpec::none(),
    };
    let truth = GroundTruth::from_sets(n, non_negative, vec![], vec![])?;
    let y = run_tests(design, &truth, &spec)?;
    let candidates = comp_decode(&y, design)?;
    let candidate_set: BTreeSet<usize> = candidates.iter().copied().collect();
    let negative = (0..n).filter(|j| !candidate_set.contains(j)).collect();
    Ok((negative, candidates))
}
