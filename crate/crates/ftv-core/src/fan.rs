//! Fans spanned by polytopes, irrelevant ideals and unstable loci.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lattice::{class_group, gale_dual, rank};
use crate::matrix::{to_rat, IntMatrix};
use crate::polytope::{convex_hull, primitive_vertices, RatPolytope};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpannedFan {
    pub dim: usize,
    /// Primitive ray generators as columns.
    pub rays: IntMatrix,
    /// One cone per facet of the spanning polytope, as sorted 0-based ray indices.
    pub max_cones: Vec<Vec<usize>>,
}

/// Squarefree monomial ideal; each generator is a sorted set of 0-based variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    pub generators: Vec<Vec<usize>>,
}

impl MonomialIdeal {
    /// Drop generators divisible by others; sort.
    pub fn minimalized(gens: Vec<Vec<usize>>) -> Self {
        let mut g: Vec<Vec<usize>> = gens
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        g.sort();
        g.dedup();
        let keep: Vec<Vec<usize>> = g
            .iter()
            .filter(|s| !g.iter().any(|t| t != *s && is_subset(t, s)))
            .cloned()
            .collect();
        MonomialIdeal { generators: keep }
    }
}

pub fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.contains(x))
}

/// Fan over the faces of P, rays are the primitive reductions of P's vertices (in P's order).
pub fn spanned_fan(p: &RatPolytope) -> Result<SpannedFan> {
    if !p.origin_interior() {
        return Err(Error::OriginNotInterior);
    }
    let rays = primitive_vertices(p)?;
    let max_cones = p.halfspaces.iter().map(|h| p.tight_vertices(h)).collect();
    Ok(SpannedFan { dim: p.dim, rays: IntMatrix::from_columns(p.dim, &rays)?, max_cones })
}

/// Fan spanned by conv(columns of `rays`), keeping the column order of `rays`.
///
/// Every column must be a vertex of the hull.
pub fn fan_of_rays(rays: &IntMatrix) -> Result<SpannedFan> {
    let cols: Vec<_> = rays.columns();
    let pts: Vec<_> = cols.iter().map(|c| to_rat(c)).collect();
    let hull = convex_hull(&pts)?;
    if !hull.origin_interior() {
        return Err(Error::OriginNotInterior);
    }
    if hull.vertices.len() != cols.len() {
        return Err(Error::NotAFanMatrix(format!(
            "{} of {} columns are not vertices of their convex hull",
            cols.len() - hull.vertices.len(),
            cols.len()
        )));
    }
    let max_cones = hull
        .halfspaces
        .iter()
        .map(|h| (0..cols.len()).filter(|&j| h.is_tight(&pts[j])).collect())
        .collect();
    Ok(SpannedFan { dim: rays.rows(), rays: rays.clone(), max_cones })
}

impl SpannedFan {
    /// Each ridge (codimension-one face of a maximal cone) lies in exactly two maximal cones.
    pub fn is_complete(&self) -> bool {
        let n = self.dim;
        let mut ridges: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (a, ca) in self.max_cones.iter().enumerate() {
            for cb in self.max_cones.iter().skip(a + 1) {
                let common: Vec<usize> = ca.iter().copied().filter(|x| cb.contains(x)).collect();
                if common.len() + 1 >= n && self.span_rank(&common) == n - 1 {
                    ridges.insert(common, 0);
                }
            }
        }
        if ridges.is_empty() && n > 1 {
            return false;
        }
        for (r, count) in ridges.iter_mut() {
            *count = self.max_cones.iter().filter(|c| is_subset(r, c)).count();
        }
        ridges.values().all(|&c| c == 2)
            && self.max_cones.iter().all(|c| self.span_rank(c) == n)
            && (0..self.rays.cols()).all(|j| self.max_cones.iter().any(|c| c.contains(&j)))
    }

    fn span_rank(&self, idx: &[usize]) -> usize {
        if idx.is_empty() {
            return 0;
        }
        rank(&self.rays.select_columns(idx))
    }

    pub fn is_simplicial(&self) -> bool {
        self.max_cones.iter().all(|c| c.len() == self.dim)
    }
}

/// One generator per maximal cone: the variables of rays outside the cone.
pub fn irrelevant_ideal(f: &SpannedFan) -> MonomialIdeal {
    let n = f.rays.cols();
    let gens = f
        .max_cones
        .iter()
        .map(|c| (0..n).filter(|j| !c.contains(j)).collect())
        .collect();
    MonomialIdeal::minimalized(gens)
}

/// Minimal primes of a squarefree monomial ideal: the minimal transversals
/// of the generator supports.
pub fn unstable_components(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let mut cur: Vec<Vec<usize>> = alloc::vec![Vec::new()];
    for g in &ideal.generators {
        let mut next: Vec<Vec<usize>> = Vec::new();
        for t in &cur {
            if t.iter().any(|x| g.contains(x)) {
                next.push(t.clone());
            } else {
                for &v in g {
                    let mut u = t.clone();
                    u.push(v);
                    u.sort_unstable();
                    next.push(u);
                }
            }
        }
        cur = MonomialIdeal::minimalized(next).generators;
    }
    cur
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WpsDecision {
    Accept { q: Vec<BigInt>, torsion: Vec<BigInt> },
    Reject { reason: alloc::string::String },
}

impl WpsDecision {
    pub fn accepted(&self) -> bool {
        matches!(self, WpsDecision::Accept { .. })
    }
}

/// Assumption (B): W is n×(n+1) of rank n with a strictly positive Gale dual row.
pub fn is_fan_matrix_of_wps_quotient(w: &IntMatrix) -> WpsDecision {
    let reject = |s: alloc::string::String| WpsDecision::Reject { reason: s };
    if w.cols() != w.rows() + 1 {
        return reject(format!("shape {}x{} is not n x (n+1)", w.rows(), w.cols()));
    }
    let q = match gale_dual(w) {
        Ok(q) => q,
        Err(e) => return reject(format!("{e}")),
    };
    if q.rows() != 1 {
        return reject(format!("Gale dual has {} rows", q.rows()));
    }
    let mut row = q.row(0).to_vec();
    if row.iter().any(|x| x.is_negative()) {
        row = row.iter().map(|x| -x).collect();
    }
    if !row.iter().all(|x| x.is_positive()) {
        return reject("Gale dual row is not strictly positive".into());
    }
    let torsion = match class_group(w) {
        Ok(cg) => cg.invariant_factors,
        Err(e) => return reject(format!("{e}")),
    };
    debug_assert!(torsion.iter().all(|t| *t > BigInt::one()));
    WpsDecision::Accept { q: row, torsion }
}
