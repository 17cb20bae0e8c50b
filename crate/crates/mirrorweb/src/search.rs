//! Data-parallel W-search and web construction. Results are merged in
//! subset order, so output does not depend on the worker count.

use std::collections::BTreeMap;

use ftv_core::ftv::{MirrorModel, PartitionedFtv};
use ftv_core::web::{assemble_web, for_each_subset, intermediate_model, resolve_subsets, test_candidate, AdmissibleW, MirrorWeb, Selection};
use ftv_core::IntMatrix;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::Result;

/// Run `f` on a pool with `jobs` workers (0 = rayon default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Parallel version of `ftv_core::web::find_admissible_w`; same output.
pub fn find_admissible_w(base: &PartitionedFtv, lambda: &IntMatrix, blocks: &[Vec<BigInt>]) -> Vec<AdmissibleW> {
    let mut subsets = Vec::new();
    for_each_subset(lambda.cols(), lambda.rows() + 1, |s| subsets.push(s.to_vec()));
    subsets
        .par_iter()
        .filter_map(|s| test_candidate(base, lambda, blocks, s))
        .collect()
}

pub fn build_web(base: &PartitionedFtv, bb: &MirrorModel, w: &AdmissibleW, sel: &Selection) -> Result<MirrorWeb> {
    let iw = w.complement(bb.dual_fan_matrix.cols());
    let subsets = resolve_subsets(&iw, sel)?;
    let built: Vec<(Vec<usize>, MirrorModel)> = subsets
        .into_par_iter()
        .map(|a| intermediate_model(&bb.dual_fan_matrix, &bb.dual_blocks, &a).map(|m| (a, m)))
        .collect::<std::result::Result<_, _>>()?;
    let models: BTreeMap<_, _> = built.into_iter().collect();
    Ok(assemble_web(base, bb, w, models)?)
}
