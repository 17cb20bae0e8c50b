//! Normal forms, kernels, Gale duals and class-group data of integer matrices.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{clear_denominators, gcd_all, IntMatrix, Rat};

/// g = x*a + y*b with g >= 0.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &IntMatrix) -> Result<BigInt> {
    let n = a.rows();
    if n != a.cols() {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", n, a.cols())));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    Ok(sign * &m[(n - 1, n - 1)])
}

/// Rank by fraction-free row echelon reduction.
pub fn rank(a: &IntMatrix) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        for i in r + 1..rows {
            if m[(i, c)].is_zero() {
                continue;
            }
            let a = m[(r, c)].clone();
            let b = m[(i, c)].clone();
            for j in c..cols {
                let v = &m[(i, j)] * &a - &m[(r, j)] * &b;
                m[(i, j)] = v;
            }
            // keep entries small
            let g = gcd_all(m.row(i));
            if !g.is_zero() && !g.is_one() {
                for j in c..cols {
                    let v = &m[(i, j)] / &g;
                    m[(i, j)] = v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank of a list of rational vectors (as rows).
pub fn rank_rat(vs: &[Vec<Rat>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<BigInt>> = vs.iter().map(|v| clear_denominators(v)).collect();
    match IntMatrix::from_rows(rows) {
        Ok(m) => rank(&m),
        Err(_) => 0,
    }
}

/// Column-style Hermite normal form: returns (H, U) with A·U = H, U unimodular.
///
/// H is in column echelon form: pivot rows strictly increase with the column
/// index, pivots are positive, and entries left of a pivot lie in [0, pivot).
/// Columns after the last pivot are zero.
pub fn hnf(a: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    if a.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let (h, u, _) = hnf_inner(a);
    Ok((h, u))
}

fn hnf_inner(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut k = 0;
    for i in 0..m {
        if k == n {
            break;
        }
        for j in k + 1..n {
            if h[(i, j)].is_zero() {
                continue;
            }
            let x = h[(i, k)].clone();
            let y = h[(i, j)].clone();
            let (g, s, t) = ext_gcd(&x, &y);
            let p = -(&y / &g);
            let q = &x / &g;
            h.combine_cols(k, j, &s, &t, &p, &q);
            u.combine_cols(k, j, &s, &t, &p, &q);
        }
        if h[(i, k)].is_zero() {
            continue;
        }
        if h[(i, k)].is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        let piv = h[(i, k)].clone();
        for j in 0..k {
            let q = h[(i, j)].div_floor(&piv);
            if !q.is_zero() {
                let nq = -q;
                h.add_col_multiple(j, k, &nq);
                u.add_col_multiple(j, k, &nq);
            }
        }
        k += 1;
    }
    (h, u, k)
}

/// Row-style Hermite normal form of the row lattice; only nonzero rows are returned.
pub fn row_hnf(a: &IntMatrix) -> IntMatrix {
    if a.is_empty() {
        return IntMatrix::zeros(0, a.cols());
    }
    let (h, _, k) = hnf_inner(&a.transpose());
    h.transpose().top_rows(k)
}

/// Two matrices have the same row lattice.
pub fn same_row_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.cols() == b.cols() && row_hnf(a) == row_hnf(b)
}

/// Smith normal form: (S, U, W) with S = U·A·W diagonal and s_1 | s_2 | ...
pub fn snf(a: &IntMatrix) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    if a.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut w = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block goes to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Ok((s, u, w));
            };
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            w.swap_cols(t, bj);
            let piv = s[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = s[(i, t)].div_floor(&piv);
                let nq = -q;
                s.add_row_multiple(i, t, &nq);
                u.add_row_multiple(i, t, &nq);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = s[(t, j)].div_floor(&piv);
                let nq = -q;
                s.add_col_multiple(j, t, &nq);
                w.add_col_multiple(j, t, &nq);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[(i, j)].is_multiple_of(&piv)));
            if let Some(i) = bad {
                let one = BigInt::one();
                s.add_row_multiple(t, i, &one);
                u.add_row_multiple(t, i, &one);
                continue;
            }
            break;
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    Ok((s, u, w))
}

/// Diagonal of the Smith form (length min(rows, cols)).
pub fn smith_diagonal(a: &IntMatrix) -> Result<Vec<BigInt>> {
    let (s, _, _) = snf(a)?;
    Ok((0..a.rows().min(a.cols())).map(|i| s[(i, i)].clone()).collect())
}

/// Basis (as rows) of the integer kernel {x : A·x = 0}. Always saturated.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let n = a.cols();
    if a.rows() == 0 {
        return IntMatrix::identity(n);
    }
    let (_, u, k) = hnf_inner(a);
    let cols: Vec<usize> = (k..n).collect();
    u.select_columns(&cols).transpose()
}

/// Gale dual of a fan matrix: HNF basis of the saturated relation lattice.
pub fn gale_dual(v: &IntMatrix) -> Result<IntMatrix> {
    if rank(v) != v.rows() {
        return Err(Error::NotAFanMatrix(format!(
            "rank {} < {} rows",
            rank(v),
            v.rows()
        )));
    }
    Ok(row_hnf(&kernel_basis(v)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroupData {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
    pub weight_matrix: IntMatrix,
    /// Row i is read modulo `torsion_moduli[i]`.
    pub torsion_matrix: IntMatrix,
    pub torsion_moduli: Vec<BigInt>,
}

impl ClassGroupData {
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

/// Class group Cl = coker(V^T) = Z^r ⊕ torsion, with weight and torsion matrices.
pub fn class_group(v: &IntMatrix) -> Result<ClassGroupData> {
    let q = gale_dual(v)?;
    let n = v.rows();
    let vt = v.transpose();
    let (s, u, _) = snf(&vt)?;
    let mut factors = Vec::new();
    let mut trows = Vec::new();
    for i in 0..n {
        let d = s[(i, i)].clone();
        if d > BigInt::one() {
            trows.push(u.row(i).iter().map(|x| x.mod_floor(&d)).collect::<Vec<_>>());
            factors.push(d);
        }
    }
    let torsion_matrix = if trows.is_empty() {
        IntMatrix::zeros(0, v.cols())
    } else {
        IntMatrix::from_rows(trows)?
    };
    Ok(ClassGroupData {
        free_rank: v.cols() - n,
        invariant_factors: factors.clone(),
        weight_matrix: q,
        torsion_matrix,
        torsion_moduli: factors,
    })
}

/// Divide by the gcd of the entries.
pub fn primitive(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Primitive integer vector on the ray through a rational point.
pub fn primitive_rat(v: &[Rat]) -> Result<Vec<BigInt>> {
    primitive(&clear_denominators(v))
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    gcd_all(v).is_one()
}

/// |det| of the n×(n+1) matrix W with the row (0,…,0,1) appended.
pub fn augmented_determinant(w: &IntMatrix) -> Result<BigInt> {
    if w.cols() != w.rows() + 1 {
        return Err(Error::Shape(format!(
            "augmented determinant needs n x (n+1), got {}x{}",
            w.rows(),
            w.cols()
        )));
    }
    let mut a = w.clone();
    let mut last = alloc::vec![BigInt::zero(); w.cols()];
    last[w.cols() - 1] = BigInt::one();
    a.push_row(last)?;
    Ok(det(&a)?.abs())
}
