//! Replay of the appendix tables against freshly computed models.

use std::collections::BTreeSet;

use ftv_core::ftv::f_dual;
use ftv_core::web::{intermediate_model, mpcp_rays};
use ftv_core::IntMatrix;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::fixtures::{self, Entry};
use crate::scenario::scenario;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCheck {
    pub label: String,
    pub ok: bool,
    /// First mismatch, empty when `ok`.
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Appendix {
    A,
    B,
    C,
}

impl std::str::FromStr for Appendix {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Appendix::A),
            "B" => Ok(Appendix::B),
            "C" => Ok(Appendix::C),
            _ => Err(CliError::Parse(format!("unknown appendix {s:?} (expected A, B or C)"))),
        }
    }
}

pub fn verify(which: Appendix) -> Result<Vec<EntryCheck>> {
    match which {
        Appendix::A => {
            let mut entries = fixtures::y22_extremes()?.entries;
            entries.extend(fixtures::appendix_a()?.entries);
            replay("y22", &entries)
        }
        Appendix::B => verify_b(),
        Appendix::C => replay("y33", &fixtures::appendix_c()?.entries),
    }
}

fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("exponent fits in i64")).collect()
}

fn label(removed: &[usize]) -> String {
    let s: Vec<String> = removed.iter().map(|i| i.to_string()).collect();
    format!("A={{{}}}", s.join(","))
}

fn replay(name: &str, entries: &[Entry]) -> Result<Vec<EntryCheck>> {
    let bb = f_dual(&scenario(name)?.input)?;
    Ok(entries
        .par_iter()
        .map(|e| check_entry(&bb.dual_fan_matrix, &bb.dual_blocks, e))
        .collect())
}

/// Compare one intermediate model with a table entry.
pub fn check_entry(lambda: &IntMatrix, blocks: &[Vec<BigInt>], e: &Entry) -> EntryCheck {
    let label = label(&e.removed);
    let fail = |detail: String| EntryCheck { label: label.clone(), ok: false, detail };
    if e.removed.iter().any(|&i| i == 0 || i > lambda.cols()) {
        return fail("removed index out of range".into());
    }
    let removed: Vec<usize> = e.removed.iter().map(|i| i - 1).collect();
    let m = match intermediate_model(lambda, blocks, &removed) {
        Ok(m) => m,
        Err(err) => return fail(err.to_string()),
    };
    if m.dual_fan_matrix.cols() != lambda.cols() - removed.len() {
        return fail("fan matrix has the wrong number of columns".into());
    }
    if m.exponent_matrices.len() != e.polynomials.len() {
        return fail(format!("{} polynomials, table has {}", m.exponent_matrices.len(), e.polynomials.len()));
    }
    // the table does not keep the block order, so match polynomials as a family
    let mut unused: Vec<Vec<Vec<i64>>> = e
        .polynomials
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.sort();
            p
        })
        .collect();
    for (k, mk) in m.exponent_matrices.iter().enumerate() {
        let mut ours: Vec<Vec<i64>> = mk.columns().iter().map(|c| to_i64(c)).collect();
        ours.sort();
        let psi = to_i64(&m.dual_blocks[k]);
        debug_assert!(ours.contains(&psi));
        match unused.iter().position(|p| *p == ours) {
            Some(i) => {
                unused.remove(i);
            }
            None => {
                let all: Vec<&Vec<i64>> = unused.iter().flatten().collect();
                let first = ours
                    .iter()
                    .find(|c| !all.contains(c))
                    .map(|c| format!("computed monomial {c:?} absent"))
                    .unwrap_or_else(|| "monomial sets differ".into());
                return fail(format!("polynomial with block {} = {psi:?}: {first}", k + 1));
            }
        }
    }
    let ours: BTreeSet<Vec<usize>> =
        m.irrelevant_ideal.generators.iter().map(|g| g.iter().map(|i| i + 1).collect()).collect();
    let theirs: BTreeSet<Vec<usize>> = e
        .ideal
        .iter()
        .map(|g| {
            let mut g = g.clone();
            g.sort_unstable();
            g
        })
        .collect();
    if ours != theirs {
        let d = ours
            .difference(&theirs)
            .next()
            .map(|g| format!("computed generator {g:?} absent from table"))
            .or_else(|| theirs.difference(&ours).next().map(|g| format!("table generator {g:?} not computed")))
            .unwrap_or_default();
        return fail(format!("irrelevant ideal: {d}"));
    }
    EntryCheck { label, ok: true, detail: String::new() }
}

fn verify_b() -> Result<Vec<EntryCheck>> {
    let bb = f_dual(&scenario("y33")?.input)?;
    let rays = mpcp_rays(&bb.dual_fan_matrix)?;
    let ours: BTreeSet<Vec<i64>> = rays.columns().iter().map(|c| to_i64(c)).collect();
    let table = fixtures::appendix_b()?.columns;
    let theirs: BTreeSet<Vec<i64>> = table.iter().cloned().collect();
    let mut detail = String::new();
    if rays.cols() != table.len() || ours.len() != rays.cols() {
        detail = format!("{} computed columns, table has {}", rays.cols(), table.len());
    } else if let Some(c) = ours.difference(&theirs).next() {
        detail = format!("computed column {c:?} absent from table");
    } else if let Some(c) = theirs.difference(&ours).next() {
        detail = format!("table column {c:?} not computed");
    }
    Ok(vec![EntryCheck { label: format!("{} columns", table.len()), ok: detail.is_empty(), detail }])
}
