//! Partitioned framed toric varieties and their f-duals.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{fan_of_rays, irrelevant_ideal, is_fan_matrix_of_wps_quotient, MonomialIdeal, WpsDecision};
use crate::lattice::{class_group, is_primitive, primitive, rank, ClassGroupData};
use crate::matrix::{dot, lex_desc, to_int, IntMatrix, Rat};
use crate::polytope::{convex_hull, framing_polytope, integer_part, lattice_points, RatPolytope};

/// A fan matrix with a partitioned framing a = Σ a_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedFtv {
    pub fan_matrix: IntMatrix,
    pub blocks: Vec<Vec<BigInt>>,
}

impl PartitionedFtv {
    pub fn new(fan_matrix: IntMatrix, blocks: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = fan_matrix.cols();
        if rank(&fan_matrix) != fan_matrix.rows() {
            return Err(Error::NotAFanMatrix("fan matrix is not of full rank".into()));
        }
        for j in 0..n {
            if !is_primitive(&fan_matrix.col(j)) {
                return Err(Error::NotAFanMatrix(format!("column {} is not primitive", j + 1)));
            }
        }
        if blocks.is_empty() {
            return Err(Error::InvalidFraming("no framing blocks".into()));
        }
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for (k, b) in blocks.iter().enumerate() {
            if b.len() != n {
                return Err(Error::InvalidFraming(format!(
                    "block {} has length {}, expected {n}",
                    k + 1,
                    b.len()
                )));
            }
            if b.iter().all(|x| x.is_zero()) {
                return Err(Error::InvalidFraming(format!("block {} is zero", k + 1)));
            }
            for (j, x) in b.iter().enumerate() {
                if x.is_negative() {
                    return Err(Error::InvalidFraming(format!("negative entry in block {}", k + 1)));
                }
                if x.is_positive() {
                    if let Some(o) = owner[j] {
                        return Err(Error::InvalidFraming(format!(
                            "blocks {} and {} overlap at index {}",
                            o + 1,
                            k + 1,
                            j + 1
                        )));
                    }
                    owner[j] = Some(k);
                }
            }
        }
        if let Some(j) = owner.iter().position(|o| o.is_none()) {
            return Err(Error::InvalidFraming(format!("framing vanishes at index {}", j + 1)));
        }
        Ok(PartitionedFtv { fan_matrix, blocks })
    }

    pub fn dim(&self) -> usize {
        self.fan_matrix.rows()
    }

    /// Support I_k of block k (0-based indices).
    pub fn support(&self, k: usize) -> Vec<usize> {
        support(&self.blocks[k])
    }

    /// δ_k = d_k − m_k + 1 with d_k the block sum and m_k its support size.
    pub fn delta(&self, k: usize) -> BigInt {
        delta(&self.blocks[k])
    }
}

pub fn support(b: &[BigInt]) -> Vec<usize> {
    (0..b.len()).filter(|&j| b[j].is_positive()).collect()
}

pub fn delta(b: &[BigInt]) -> BigInt {
    let d: BigInt = b.iter().sum();
    d - BigInt::from(support(b).len()) + BigInt::one()
}

/// Assumption (A) for one block, read off its nonzero entries: m >= 3 or exactly (1,1).
pub fn block_satisfies_a(b: &[BigInt]) -> bool {
    let nz: Vec<&BigInt> = b.iter().filter(|x| !x.is_zero()).collect();
    nz.len() >= 3 || (nz.len() == 2 && nz.iter().all(|x| x.is_one()))
}

/// The dual ambient data: fan matrix and framing blocks, before any polynomial data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAmbient {
    pub fan_matrix: IntMatrix,
    pub blocks: Vec<Vec<BigInt>>,
    /// For each column, the lowest k with the (unreduced) vertex in Δ_{a_k}.
    pub block_origin: Vec<Option<usize>>,
    /// Columns whose vertex was not primitive before reduction.
    pub reduced: Vec<bool>,
    /// Δ_{a_k} per block.
    pub block_polytopes: Vec<RatPolytope>,
    /// conv(∪ Δ_{a_k}), or its integer part when that hull is not a lattice polytope.
    pub polytope: RatPolytope,
    pub used_integer_part: bool,
}

/// Dual fan matrix and framing of a partitioned ftv.
///
/// Columns come block by block (by `block_origin`), lexicographically
/// descending within a block. Dual blocks follow
/// b_{k,i} = max(0, −min_{j ∈ I_k} ⟨λ_i, v_j⟩).
pub fn dual_ambient(x: &PartitionedFtv) -> Result<DualAmbient> {
    let v = &x.fan_matrix;
    let n = v.rows();
    let polys: Vec<RatPolytope> =
        x.blocks.iter().map(|a| framing_polytope(v, a)).collect::<Result<_>>()?;
    let mut pts: Vec<Vec<Rat>> = polys.iter().flat_map(|p| p.vertices.iter().cloned()).collect();
    pts.sort();
    pts.dedup();
    let hull = convex_hull(&pts)?;
    let (poly, used_integer_part) =
        if hull.is_lattice() { (hull, false) } else { (integer_part(&hull)?, true) };
    let l = polys.len();
    let mut verts: Vec<(usize, Vec<BigInt>)> = poly
        .vertices
        .iter()
        .map(|u| {
            let origin = polys.iter().position(|p| p.contains(u)).unwrap_or(l);
            (origin, to_int(u).expect("lattice polytope vertex"))
        })
        .collect();
    verts.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| lex_desc(&a.1, &b.1)));
    let mut cols = Vec::with_capacity(verts.len());
    let mut reduced = Vec::with_capacity(verts.len());
    for (_, u) in &verts {
        let p = primitive(u)?;
        reduced.push(&p != u);
        cols.push(p);
    }
    let fan_matrix = IntMatrix::from_columns(n, &cols)?;
    let blocks = dual_blocks(&fan_matrix, v, &x.blocks);
    Ok(DualAmbient {
        fan_matrix,
        blocks,
        block_origin: verts.iter().map(|(o, _)| if *o < l { Some(*o) } else { None }).collect(),
        reduced,
        block_polytopes: polys,
        polytope: poly,
        used_integer_part,
    })
}

/// b_{k,i} = max(0, −min_{j ∈ supp a_k} ⟨λ_i, v_j⟩).
pub fn dual_blocks(lambda: &IntMatrix, v: &IntMatrix, blocks: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let lcols = lambda.columns();
    let vcols = v.columns();
    blocks
        .iter()
        .map(|a| {
            let s = support(a);
            lcols
                .iter()
                .map(|l| {
                    let m = s.iter().map(|&j| dot(l, &vcols[j])).min().unwrap_or_else(BigInt::zero);
                    if m.is_negative() {
                        -m
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Output of an f-dual: ambient data plus the polynomial (exponent) data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorModel {
    pub dual_fan_matrix: IntMatrix,
    pub dual_blocks: Vec<Vec<BigInt>>,
    pub block_origin: Vec<Option<usize>>,
    /// M_k, one column per lattice point of Δ_{b_k} (lexicographically ascending).
    pub exponent_matrices: Vec<IntMatrix>,
    pub irrelevant_ideal: MonomialIdeal,
    pub class_group: ClassGroupData,
    /// Q·(column of M_k), one per block.
    pub degrees: Vec<Vec<BigInt>>,
}

impl MirrorModel {
    /// Degree of −K: Q·(1,…,1).
    pub fn anticanonical_degree(&self) -> Vec<BigInt> {
        let q = &self.class_group.weight_matrix;
        (0..q.rows()).map(|i| q.row(i).iter().sum()).collect()
    }
}

/// Exponent matrices, ideal and class group of the framed fan matrix (F, f).
pub fn build_model(fan: &IntMatrix, blocks: &[Vec<BigInt>]) -> Result<MirrorModel> {
    let cg = class_group(fan)?;
    let ideal = irrelevant_ideal(&fan_of_rays(fan)?);
    let q = &cg.weight_matrix;
    let ft = fan.transpose();
    let mut mats = Vec::with_capacity(blocks.len());
    let mut degrees = Vec::with_capacity(blocks.len());
    for b in blocks {
        let pts = lattice_points(&framing_polytope(fan, b)?)?;
        let cols: Vec<Vec<BigInt>> = pts
            .iter()
            .map(|m| ft.mul_vec(m).into_iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        if cols.iter().flatten().any(|x| x.is_negative()) {
            return Err(Error::Shape("negative exponent".into()));
        }
        let degs: Vec<Vec<BigInt>> = cols.iter().map(|c| q.mul_vec(c)).collect();
        if degs.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Shape("exponent columns of different degrees".into()));
        }
        degrees.push(degs.first().cloned().unwrap_or_else(|| q.mul_vec(b)));
        mats.push(IntMatrix::from_columns(fan.cols(), &cols)?);
    }
    Ok(MirrorModel {
        dual_fan_matrix: fan.clone(),
        dual_blocks: blocks.to_vec(),
        block_origin: vec![None; fan.cols()],
        exponent_matrices: mats,
        irrelevant_ideal: ideal,
        class_group: cg,
        degrees,
    })
}

/// Forward f-dual (calibrated direction), for framings with every δ_k = 1.
pub fn f_dual(x: &PartitionedFtv) -> Result<MirrorModel> {
    for k in 0..x.blocks.len() {
        let d = x.delta(k);
        if d > BigInt::one() {
            return Err(Error::UnsupportedDualFraming { block: k + 1, delta: format!("{d}") });
        }
    }
    let amb = dual_ambient(x)?;
    if x.blocks.iter().all(|b| block_satisfies_a(b)) {
        if let Some(i) = amb.reduced.iter().position(|&r| r) {
            return Err(Error::NonPrimitiveVertex { vertex: i + 1 });
        }
    }
    let mut model = build_model(&amb.fan_matrix, &amb.blocks)?;
    model.block_origin = amb.block_origin;
    Ok(model)
}

/// Dual in the quotient direction: integer part of conv(∪ Δ_{c_k}).
pub fn f_dual_reverse(x: &PartitionedFtv) -> Result<DualAmbient> {
    if let WpsDecision::Reject { reason } = is_fan_matrix_of_wps_quotient(&x.fan_matrix) {
        return Err(Error::NotWpsQuotient(reason));
    }
    dual_ambient(x)
}

/// Equality of framed fan matrices up to a column permutation, with the
/// blocks permuted consistently and compared as an unordered family.
pub fn same_framed(f1: &IntMatrix, b1: &[Vec<BigInt>], f2: &IntMatrix, b2: &[Vec<BigInt>]) -> bool {
    if f1.rows() != f2.rows() || f1.cols() != f2.cols() || b1.len() != b2.len() {
        return false;
    }
    let c1 = f1.columns();
    let c2 = f2.columns();
    let mut perm = Vec::with_capacity(c2.len());
    for c in &c2 {
        match c1.iter().position(|x| x == c) {
            Some(p) if !perm.contains(&p) => perm.push(p),
            _ => return false,
        }
    }
    let mut mapped: Vec<Vec<BigInt>> =
        b1.iter().map(|b| perm.iter().map(|&p| b[p].clone()).collect()).collect();
    let mut target = b2.to_vec();
    mapped.sort();
    target.sort();
    mapped == target
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Calibration {
    Calibrated,
    Uncalibrated,
}

/// Dualise twice and compare with the input at the matrix level.
pub fn check_calibration(x: &PartitionedFtv) -> Result<Calibration> {
    let first = dual_ambient(x)?;
    let back = PartitionedFtv::new(first.fan_matrix, first.blocks)?;
    let second = dual_ambient(&back)?;
    Ok(if same_framed(&second.fan_matrix, &second.blocks, &x.fan_matrix, &x.blocks) {
        Calibration::Calibrated
    } else {
        Calibration::Uncalibrated
    })
}

/// Polynomial strings, one per block; the column equal to b_k carries `psi`.
pub fn render_family(m: &MirrorModel) -> Vec<String> {
    m.exponent_matrices
        .iter()
        .zip(&m.dual_blocks)
        .map(|(mat, b)| {
            let terms: Vec<String> = mat
                .columns()
                .iter()
                .map(|c| render_monomial(c, c == b))
                .collect();
            terms.join(" + ")
        })
        .collect()
}

pub fn render_monomial(exps: &[BigInt], psi: bool) -> String {
    let mut parts: Vec<String> = Vec::new();
    if psi {
        parts.push("psi".into());
    }
    for (i, e) in exps.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if e.is_one() {
            parts.push(format!("x{}", i + 1));
        } else {
            parts.push(format!("x{}^{}", i + 1, e));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Fan matrix [I_n | −1] of P^n.
pub fn projective_space(n: usize) -> IntMatrix {
    let mut v = IntMatrix::zeros(n, n + 1);
    for i in 0..n {
        v[(i, i)] = BigInt::one();
        v[(i, n)] = -BigInt::one();
    }
    v
}

/// (P^n, a = Σ a_k) for blocks given as small integers.
pub fn projective_input(n: usize, blocks: &[&[i64]]) -> Result<PartitionedFtv> {
    let b = blocks.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    PartitionedFtv::new(projective_space(n), b)
}

/// Closed-form matrices for Y_{d,d} ⊂ P^{2d−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdExpected {
    pub lambda: IntMatrix,
    pub w: IntMatrix,
    pub m: [IntMatrix; 2],
    /// Exponent matrices of the (W, c) model; `m_dual[k]` has c_k as its ψ column.
    pub m_dual: [IntMatrix; 2],
    pub b: [Vec<BigInt>; 2],
    pub c: [Vec<BigInt>; 2],
}

/// (P^{2d−1}, a_1 = (1_d, 0_d), a_2 = (0_d, 1_d)) and the block formulas of its duals.
pub fn generate_dd_input(d: usize) -> Result<(PartitionedFtv, DdExpected)> {
    if d < 2 {
        return Err(Error::InvalidFraming(format!("d = {d} < 2")));
    }
    let di = d as i64;
    let n = 2 * d - 1;
    let a1: Vec<i64> = (0..2 * d).map(|j| (j < d) as i64).collect();
    let a2: Vec<i64> = (0..2 * d).map(|j| (j >= d) as i64).collect();
    let x = projective_input(n, &[&a1, &a2])?;
    let kd = |i: usize, j: usize| if i == j { di } else { 0 };
    // Λ^T·V, a 4d × 2d matrix in four row blocks
    let g = |r: usize, c: usize| -> i64 {
        let (blk, i) = (r / d, r % d);
        let (left, j) = (c < d, c % d);
        match (blk, left) {
            (0, true) => kd(i, j) - 1,
            (0, false) => 0,
            (1, true) => -1,
            (1, false) => kd(i, j),
            (2, true) => kd(i, j),
            (2, false) => -1,
            (3, true) => 0,
            _ => kd(i, j) - 1,
        }
    };
    let lambda = mat(n, 4 * d, |i, j| g(j, i));
    let central: Vec<usize> = (d..3 * d).collect();
    let w_formula = mat(n, 2 * d, |i, j| match (i < d, j < d) {
        (true, true) => -1,
        (true, false) => kd(i, j - d),
        (false, true) => kd(i - d, j),
        (false, false) => -1,
    });
    debug_assert!(w_formula.same_columns_as(&lambda.select_columns(&central)));
    let ones = |r: usize, lo: usize, hi: usize| (lo..hi).contains(&r) as i64;
    let m1 = mat(4 * d, d + 1, |r, c| {
        if c == d {
            ones(r, 0, 2 * d)
        } else if r < d || (2 * d..3 * d).contains(&r) {
            kd(r % d, c)
        } else {
            0
        }
    });
    let m2 = mat(4 * d, d + 1, |r, c| {
        if c == d {
            ones(r, 2 * d, 4 * d)
        } else if (d..2 * d).contains(&r) || r >= 3 * d {
            kd(r % d, c)
        } else {
            0
        }
    });
    let md1 = mat(2 * d, d + 1, |r, c| if c == d { ones(r, d, 2 * d) } else if r < d { kd(r, c) } else { 0 });
    let md2 = mat(2 * d, d + 1, |r, c| if c == d { ones(r, 0, d) } else if r >= d { kd(r - d, c) } else { 0 });
    let ind = |len: usize, lo: usize, hi: usize| (0..len).map(|j| BigInt::from(ones(j, lo, hi))).collect::<Vec<_>>();
    Ok((
        x,
        DdExpected {
            lambda,
            w: w_formula,
            m: [m1, m2],
            m_dual: [md2, md1],
            b: [ind(4 * d, 0, 2 * d), ind(4 * d, 2 * d, 4 * d)],
            c: [ind(2 * d, 0, d), ind(2 * d, d, 2 * d)],
        },
    ))
}

fn mat(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = BigInt::from(f(i, j));
        }
    }
    m
}
