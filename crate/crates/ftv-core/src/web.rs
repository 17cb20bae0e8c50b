//! Admissible LT submatrices and the web of intermediate models between them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{is_fan_matrix_of_wps_quotient, WpsDecision};
use crate::ftv::{build_model, dual_ambient, same_framed, support, MirrorModel, PartitionedFtv};
use crate::lattice::augmented_determinant;
use crate::matrix::IntMatrix;
use crate::polytope::{convex_hull, primitive_points_excluding_origin};

/// Largest |I^W| for which the whole powerset of subsets may be requested.
pub const MAX_FULL_POWERSET: usize = 20;

/// Per-block test of assumption (A). Blocks must be in normal form
/// (0,…,0,1,…,1,δ,0,…,0).
pub fn check_assumption_a(x: &PartitionedFtv) -> Result<Vec<bool>> {
    x.blocks
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let s = support(b);
            let contiguous = s.windows(2).all(|w| w[1] == w[0] + 1);
            let ones = s[..s.len() - 1].iter().all(|&j| b[j].is_one());
            if !contiguous || !ones {
                return Err(Error::NotNormalForm { block: k + 1 });
            }
            Ok(s.len() >= 3 || (s.len() == 2 && b[s[1]].is_one()))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleW {
    /// Sorted 0-based column indices into Λ.
    pub columns: Vec<usize>,
    pub w: IntMatrix,
    pub q: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
    pub c_blocks: Vec<Vec<BigInt>>,
    pub aug_det: BigInt,
    pub passes_c: bool,
    /// supp(c_k) = supp(a_k) for every k, reading W's columns in Λ order
    /// against V's columns.
    pub aligned: bool,
}

impl AdmissibleW {
    /// |q| = Σ q_i, the anticanonical degree of the weighted projective space.
    pub fn q_sum(&self) -> BigInt {
        self.q.iter().sum()
    }

    /// I^W: the columns of Λ not in W.
    pub fn complement(&self, total: usize) -> Vec<usize> {
        (0..total).filter(|j| !self.columns.contains(j)).collect()
    }
}

/// Test one column list: `None` if (B) fails, otherwise the candidate with its (C) verdict.
pub fn test_candidate(
    base: &PartitionedFtv,
    lambda: &IntMatrix,
    blocks: &[Vec<BigInt>],
    columns: &[usize],
) -> Option<AdmissibleW> {
    let w = lambda.select_columns(columns);
    let WpsDecision::Accept { q, torsion } = is_fan_matrix_of_wps_quotient(&w) else {
        return None;
    };
    let c_blocks: Vec<Vec<BigInt>> =
        blocks.iter().map(|b| columns.iter().map(|&j| b[j].clone()).collect()).collect();
    let aug_det = augmented_determinant(&w).ok()?;
    let passes_c = passes_c(base, &w, &c_blocks);
    let aligned = c_blocks.iter().zip(&base.blocks).all(|(c, a)| support(c) == support(a));
    Some(AdmissibleW { columns: columns.to_vec(), w, q, torsion, c_blocks, aug_det, passes_c, aligned })
}

/// Assumption (C): dualising (W, c) gives back (V, a) up to column permutation.
pub fn passes_c(base: &PartitionedFtv, w: &IntMatrix, c: &[Vec<BigInt>]) -> bool {
    let Ok(lt) = PartitionedFtv::new(w.clone(), c.to_vec()) else {
        return false;
    };
    match dual_ambient(&lt) {
        Ok(d) => same_framed(&d.fan_matrix, &d.blocks, &base.fan_matrix, &base.blocks),
        Err(_) => false,
    }
}

/// Visit every k-subset of 0..n in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exhaustive scan of the (n+1)-column submatrices of Λ; (B)-passing lists in lexicographic order.
pub fn find_admissible_w(base: &PartitionedFtv, lambda: &IntMatrix, blocks: &[Vec<BigInt>]) -> Vec<AdmissibleW> {
    let mut out = Vec::new();
    for_each_subset(lambda.cols(), lambda.rows() + 1, |s| {
        if let Some(c) = test_candidate(base, lambda, blocks, s) {
            out.push(c);
        }
    });
    out
}

/// The model with fan matrix Λ^A and blocks b^A (columns/entries in `removed` deleted).
pub fn intermediate_model(lambda: &IntMatrix, blocks: &[Vec<BigInt>], removed: &[usize]) -> Result<MirrorModel> {
    let fan = lambda.remove_columns(removed);
    let b: Vec<Vec<BigInt>> = blocks
        .iter()
        .map(|b| (0..b.len()).filter(|j| !removed.contains(j)).map(|j| b[j].clone()).collect())
        .collect();
    let mut m = build_model(&fan, &b)?;
    if m.dual_blocks.iter().any(|b| b.iter().all(|x| x.is_zero())) {
        return Err(Error::InvalidFraming("a block vanishes after removal".into()));
    }
    m.block_origin.clear();
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    List(Vec<Vec<usize>>),
    None,
}

/// Resolve a selection into sorted subsets of I^W, applying the size guard.
pub fn resolve_subsets(iw: &[usize], sel: &Selection) -> Result<Vec<Vec<usize>>> {
    match sel {
        Selection::None => Ok(Vec::new()),
        Selection::All => {
            if iw.len() > MAX_FULL_POWERSET {
                return Err(Error::SizeGuard { size: iw.len() });
            }
            let mut out: Vec<Vec<usize>> = (0u64..1 << iw.len())
                .map(|mask| (0..iw.len()).filter(|&i| mask >> i & 1 == 1).map(|i| iw[i]).collect())
                .collect();
            out.sort();
            Ok(out)
        }
        Selection::List(l) => {
            let mut out = Vec::with_capacity(l.len());
            for s in l {
                let mut s = s.clone();
                s.sort_unstable();
                s.dedup();
                if let Some(j) = s.iter().find(|j| !iw.contains(j)) {
                    return Err(Error::SubsetOutOfRange(format!("subset column {}", j + 1)));
                }
                out.push(s);
            }
            out.sort();
            out.dedup();
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorWeb {
    pub base: PartitionedFtv,
    pub bb: MirrorModel,
    pub chosen_w: AdmissibleW,
    pub models: BTreeMap<Vec<usize>, MirrorModel>,
}

impl MirrorWeb {
    pub fn i_w(&self) -> Vec<usize> {
        self.chosen_w.complement(self.bb.dual_fan_matrix.cols())
    }
}

/// Sequential web construction.
pub fn build_web(base: &PartitionedFtv, bb: &MirrorModel, w: &AdmissibleW, sel: &Selection) -> Result<MirrorWeb> {
    let iw = w.complement(bb.dual_fan_matrix.cols());
    let mut models = BTreeMap::new();
    for a in resolve_subsets(&iw, sel)? {
        let m = intermediate_model(&bb.dual_fan_matrix, &bb.dual_blocks, &a)?;
        models.insert(a, m);
    }
    assemble_web(base, bb, w, models)
}

/// Cross-check the extremes and package the models.
pub fn assemble_web(
    base: &PartitionedFtv,
    bb: &MirrorModel,
    w: &AdmissibleW,
    models: BTreeMap<Vec<usize>, MirrorModel>,
) -> Result<MirrorWeb> {
    let iw = w.complement(bb.dual_fan_matrix.cols());
    if let Some(m) = models.get(&Vec::new()) {
        if m.dual_fan_matrix != bb.dual_fan_matrix || m.exponent_matrices != bb.exponent_matrices {
            return Err(Error::Shape("A = {} does not reproduce the calibrated dual".into()));
        }
    }
    if let Some(m) = models.get(&iw) {
        if m.dual_fan_matrix != w.w || m.dual_blocks != w.c_blocks {
            return Err(Error::Shape("A = I^W does not reproduce (W, c)".into()));
        }
    }
    Ok(MirrorWeb { base: base.clone(), bb: bb.clone(), chosen_w: w.clone(), models })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebInvariants {
    /// aug_det value → number of (C)-passing lists with that value.
    pub aug_dets: BTreeMap<BigInt, usize>,
    /// The same, restricted to lists that are also `aligned`.
    pub aligned_aug_dets: BTreeMap<BigInt, usize>,
    /// (columns, torsion, |q|) per (C)-passing list.
    pub per_w: Vec<(Vec<usize>, Vec<BigInt>, BigInt)>,
    pub model_count: usize,
}

pub fn web_invariants(admissible: &[AdmissibleW], web: Option<&MirrorWeb>) -> WebInvariants {
    let mut aug_dets = BTreeMap::new();
    let mut aligned_aug_dets = BTreeMap::new();
    let mut per_w = Vec::new();
    for a in admissible.iter().filter(|a| a.passes_c) {
        *aug_dets.entry(a.aug_det.abs()).or_insert(0) += 1;
        if a.aligned {
            *aligned_aug_dets.entry(a.aug_det.abs()).or_insert(0) += 1;
        }
        per_w.push((a.columns.clone(), a.torsion.clone(), a.q_sum()));
    }
    WebInvariants { aug_dets, aligned_aug_dets, per_w, model_count: web.map_or(0, |w| w.models.len()) }
}

/// All nonzero primitive lattice points of conv(columns of M).
pub fn mpcp_rays(m: &IntMatrix) -> Result<IntMatrix> {
    let pts: Vec<_> = m.columns().iter().map(|c| crate::matrix::to_rat(c)).collect();
    primitive_points_excluding_origin(&convex_hull(&pts)?)
}
