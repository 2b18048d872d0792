//! Shared builders for the throughput benchmarks.

use gti_core::model::{
    DefectiveModel, GapPolicy, HybridPolicy, InhibitorModel, ModelSpec, NoiseSpec,
};

/// Classical-defective spec with `d` targets, the workload most benches use.
pub fn cgt_spec(n: usize, d: usize) -> ModelSpec {
    ModelSpec {
        n,
        d,
        h: 0,
        b: 0,
        defective_model: DefectiveModel::Classical,
        inhibitor_model: InhibitorModel::None,
        hybrid_policy: HybridPolicy::PerRunRole(Default::default()),
        gap_policy: GapPolicy::AlwaysNegative,
        noise: NoiseSpec::none(),
    }
}
