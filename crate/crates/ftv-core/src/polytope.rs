//! Exact rational polytopes in both representations.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dd::extreme_rays;
use crate::error::{Error, Result};
use crate::lattice::{is_primitive, primitive, rank_rat};
use crate::lp::in_convex_hull;
use crate::matrix::{clear_denominators, dot_rat, lex_desc, to_rat, IntMatrix, Rat};

/// ⟨normal, m⟩ >= -offset
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Halfspace {
    /// ⟨normal, p⟩ + offset
    pub fn slack(&self, p: &[Rat]) -> Rat {
        dot_rat(&self.normal, p) + Rat::from_integer(self.offset.clone())
    }

    pub fn contains(&self, p: &[Rat]) -> bool {
        !self.slack(p).is_negative()
    }

    pub fn is_tight(&self, p: &[Rat]) -> bool {
        self.slack(p).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPolytope {
    pub dim: usize,
    pub halfspaces: Vec<Halfspace>,
    /// Lexicographically descending.
    pub vertices: Vec<Vec<Rat>>,
}

impl RatPolytope {
    pub fn contains(&self, p: &[Rat]) -> bool {
        self.halfspaces.iter().all(|h| h.contains(p))
    }

    pub fn contains_int(&self, p: &[BigInt]) -> bool {
        self.contains(&to_rat(p))
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|x| x.is_integer()))
    }

    /// Indices of the vertices lying on a halfspace's boundary.
    pub fn tight_vertices(&self, h: &Halfspace) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&i| h.is_tight(&self.vertices[i])).collect()
    }

    /// Origin strictly inside every halfspace.
    pub fn origin_interior(&self) -> bool {
        self.halfspaces.iter().all(|h| h.offset.is_positive())
    }
}

fn sort_desc(pts: &mut Vec<Vec<Rat>>) {
    pts.sort_by(|a, b| lex_desc(a, b));
    pts.dedup();
}

/// Δ_a = {m : ⟨v_i, m⟩ >= -a_i}, with vertices by exact enumeration.
pub fn framing_polytope(v: &IntMatrix, a: &[BigInt]) -> Result<RatPolytope> {
    if a.len() != v.cols() {
        return Err(Error::Shape(alloc::format!(
            "framing of length {} for {} columns",
            a.len(),
            v.cols()
        )));
    }
    let halfspaces: Vec<Halfspace> = (0..v.cols())
        .map(|j| Halfspace { normal: v.col(j), offset: a[j].clone() })
        .collect();
    from_halfspaces(v.rows(), halfspaces)
}

/// Vertices of {m : ⟨n_i, m⟩ + b_i >= 0}; errors if the region is unbounded.
pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>) -> Result<RatPolytope> {
    // homogenise: (n_i, b_i)·(m, t) >= 0 and t >= 0
    let mut rows: Vec<Vec<BigInt>> = halfspaces
        .iter()
        .map(|h| {
            let mut r = h.normal.clone();
            r.push(h.offset.clone());
            r
        })
        .collect();
    let mut t = vec![BigInt::zero(); dim + 1];
    t[dim] = BigInt::one();
    rows.push(t);
    let rays = extreme_rays(&rows, dim + 1).map_err(|_| Error::FanNotComplete)?;
    let mut vertices = Vec::new();
    for r in rays {
        let t = &r[dim];
        if t.is_zero() {
            return Err(Error::FanNotComplete);
        }
        vertices.push(r[..dim].iter().map(|x| Rat::new(x.clone(), t.clone())).collect::<Vec<_>>());
    }
    sort_desc(&mut vertices);
    Ok(RatPolytope { dim, halfspaces, vertices })
}

/// Convex hull of a full-dimensional point set: extreme points and facets.
pub fn convex_hull(points: &[Vec<Rat>]) -> Result<RatPolytope> {
    let Some(first) = points.first() else {
        return Err(Error::Degenerate { affine_dim: 0, expected: 0 });
    };
    let dim = first.len();
    let mut pts = points.to_vec();
    sort_desc(&mut pts);
    let homog: Vec<Vec<Rat>> = pts
        .iter()
        .map(|p| {
            let mut h = p.clone();
            h.push(Rat::one());
            h
        })
        .collect();
    let r = rank_rat(&homog);
    if r != dim + 1 {
        return Err(Error::Degenerate { affine_dim: r.saturating_sub(1), expected: dim });
    }
    // exact feasibility test for every point against the others
    let vertices: Vec<Vec<Rat>> = (0..pts.len())
        .filter(|&i| {
            let others: Vec<Vec<Rat>> =
                pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            !in_convex_hull(&pts[i], &others)
        })
        .map(|i| pts[i].clone())
        .collect();
    let halfspaces = facets_of(dim, &vertices)?;
    Ok(RatPolytope { dim, halfspaces, vertices })
}

/// Facet inequalities of conv(points) as extreme rays of the polar cone.
fn facets_of(dim: usize, points: &[Vec<Rat>]) -> Result<Vec<Halfspace>> {
    let rows: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut h = p.clone();
            h.push(Rat::one());
            clear_denominators(&h)
        })
        .collect();
    let rays = extreme_rays(&rows, dim + 1)?;
    let mut hs: Vec<Halfspace> = rays
        .into_iter()
        .map(|r| Halfspace { normal: r[..dim].to_vec(), offset: r[dim].clone() })
        .collect();
    hs.sort();
    Ok(hs)
}

/// The vertex list (lexicographically descending).
pub fn vertices(p: &RatPolytope) -> Vec<Vec<Rat>> {
    p.vertices.clone()
}

/// All lattice points, lexicographically ascending.
pub fn lattice_points(p: &RatPolytope) -> Result<Vec<Vec<BigInt>>> {
    let dim = p.dim;
    if p.vertices.is_empty() {
        return Ok(Vec::new());
    }
    let mut lo = vec![0i64; dim];
    let mut hi = vec![0i64; dim];
    for i in 0..dim {
        let min = p.vertices.iter().map(|v| v[i].ceil()).min().unwrap();
        let max = p.vertices.iter().map(|v| v[i].floor()).max().unwrap();
        lo[i] = min.to_integer().to_i64().ok_or(Error::Overflow)?;
        hi[i] = max.to_integer().to_i64().ok_or(Error::Overflow)?;
        if lo[i] > hi[i] {
            return Ok(Vec::new());
        }
    }
    let hs: Vec<(Vec<i128>, i128)> = p
        .halfspaces
        .iter()
        .map(|h| {
            let n: Option<Vec<i128>> = h.normal.iter().map(|x| x.to_i128()).collect();
            Some((n?, h.offset.to_i128()?))
        })
        .collect::<Option<_>>()
        .ok_or(Error::Overflow)?;
    // best case remaining contribution of coordinates k.. for each halfspace
    let mut tail = vec![vec![0i128; dim + 1]; hs.len()];
    for (h, (n, _)) in hs.iter().enumerate() {
        for k in (0..dim).rev() {
            let best = (n[k] * lo[k] as i128).max(n[k] * hi[k] as i128);
            tail[h][k] = tail[h][k + 1] + best;
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; dim];
    let mut partial = vec![vec![0i128; hs.len()]; dim + 1];
    for (h, (_, b)) in hs.iter().enumerate() {
        partial[0][h] = *b;
    }
    scan(0, dim, &lo, &hi, &hs, &tail, &mut partial, &mut x, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn scan(
    k: usize,
    dim: usize,
    lo: &[i64],
    hi: &[i64],
    hs: &[(Vec<i128>, i128)],
    tail: &[Vec<i128>],
    partial: &mut Vec<Vec<i128>>,
    x: &mut Vec<i64>,
    out: &mut Vec<Vec<BigInt>>,
) {
    if k == dim {
        if partial[dim].iter().all(|&s| s >= 0) {
            out.push(x.iter().map(|&c| BigInt::from(c)).collect());
        }
        return;
    }
    for c in lo[k]..=hi[k] {
        x[k] = c;
        let mut ok = true;
        for h in 0..hs.len() {
            let s = partial[k][h] + hs[h].0[k] * c as i128;
            partial[k + 1][h] = s;
            if s + tail[h][k + 1] < 0 {
                ok = false;
                break;
            }
        }
        if ok {
            scan(k + 1, dim, lo, hi, hs, tail, partial, x, out);
        }
    }
}

/// [P] = conv(P ∩ Z^n).
pub fn integer_part(p: &RatPolytope) -> Result<RatPolytope> {
    let pts = lattice_points(p)?;
    if pts.is_empty() {
        return Err(Error::NoLatticePoints);
    }
    let rat: Vec<Vec<Rat>> = pts.iter().map(|x| to_rat(x)).collect();
    convex_hull(&rat)
}

/// Columns: all primitive lattice points of P other than the origin.
pub fn primitive_points_excluding_origin(p: &RatPolytope) -> Result<IntMatrix> {
    if !p.origin_interior() {
        return Err(Error::OriginNotInterior);
    }
    let pts: Vec<Vec<BigInt>> = lattice_points(p)?
        .into_iter()
        .filter(|x| x.iter().any(|c| !c.is_zero()) && is_primitive(x))
        .collect();
    IntMatrix::from_columns(p.dim, &pts)
}

/// Primitive reduction of every vertex (vertices must avoid the origin).
pub fn primitive_vertices(p: &RatPolytope) -> Result<Vec<Vec<BigInt>>> {
    p.vertices.iter().map(|v| primitive(&clear_denominators(v))).collect()
}
