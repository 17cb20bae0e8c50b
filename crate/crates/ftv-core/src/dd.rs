//! Double description: extreme rays of a pointed cone {y : a_i·y >= 0}.
//!
//! Integer-only. Rays are kept primitive; adjacency is decided combinatorially
//! from the sets of tight constraints.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{primitive, rank};
use crate::matrix::{dot, IntMatrix, Rat};

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn contains(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<BigInt>,
    tight: Bits,
}

/// Extreme rays of {y in R^dim : rows[i]·y >= 0 for all i}.
///
/// The cone must be pointed (rows of full rank `dim`); otherwise an error is
/// returned. The result is a list of primitive integer vectors.
pub fn extreme_rays(rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>> {
    let m = rows.len();
    // greedy choice of dim independent rows
    let mut basis: Vec<usize> = Vec::new();
    let mut cur = IntMatrix::zeros(0, dim);
    for (i, r) in rows.iter().enumerate() {
        let mut trial = cur.clone();
        trial.push_row(r.clone())?;
        if rank(&trial) > basis.len() {
            cur = trial;
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return Err(Error::Shape(alloc::format!(
            "cone is not pointed: constraint rank {} < {}",
            basis.len(),
            dim
        )));
    }
    // initial simplicial cone: rays are the columns of B^{-1}
    let inv = inverse_columns(&cur)?;
    let mut rays: Vec<Ray> = Vec::new();
    for (j, col) in inv.into_iter().enumerate() {
        let mut tight = Bits::new(m);
        for (jj, &bi) in basis.iter().enumerate() {
            if jj != j {
                tight.set(bi);
            }
        }
        rays.push(Ray { v: col, tight });
    }
    let mut done = vec![false; m];
    for &b in &basis {
        done[b] = true;
    }
    // rows that are multiples of basis rows would be tight at zero-slack rays; fix tight sets lazily
    for i in 0..m {
        if done[i] {
            continue;
        }
        done[i] = true;
        let a = &rows[i];
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if neg.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    r.tight.set(i);
                }
            }
            continue;
        }
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.and(&rays[q].tight);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|k| k == p || k == q || !rays[k].tight.contains(&common));
                if !adjacent {
                    continue;
                }
                let sp = &vals[p];
                let sq = -&vals[q];
                let v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| sp * x + &sq * y)
                    .collect();
                let v = primitive(&v)?;
                let mut tight = common;
                tight.set(i);
                fresh.push(Ray { v, tight });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                r.tight.set(i);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }
    Ok(rays.into_iter().map(|r| r.v).collect())
}

/// Columns of B^{-1} for square invertible B, each scaled to a primitive integer vector.
fn inverse_columns(b: &IntMatrix) -> Result<Vec<Vec<BigInt>>> {
    let n = b.rows();
    // Gauss-Jordan over the rationals on [B | I]
    let mut t: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = b.row(i).iter().map(|x| Rat::from_integer(x.clone())).collect();
            row.extend((0..n).map(|j| Rat::from_integer(BigInt::from((i == j) as i64))));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !t[i][c].is_zero()).ok_or(Error::Shape("singular basis".into()))?;
        t.swap(c, p);
        let piv = t[c][c].clone();
        for x in t[c].iter_mut() {
            *x /= &piv;
        }
        let prow = t[c].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                *x -= &f * y;
            }
        }
    }
    (0..n)
        .map(|j| {
            let col: Vec<Rat> = (0..n).map(|i| t[i][n + j].clone()).collect();
            crate::lattice::primitive_rat(&col)
        })
        .collect()
}
