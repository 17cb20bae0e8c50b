//! Small dense exact simplex, used for feasibility questions only.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::matrix::Rat;

/// Is there x >= 0 with A·x = b?  Phase I of the simplex method with Bland's rule.
pub fn feasible(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m + 1;
    // tableau rows: [A | I | b], made to have b >= 0
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = vec![Rat::zero(); width];
        let flip = b[i].is_negative();
        for j in 0..n {
            row[j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[n + i] = Rat::from_integer(1.into());
        row[width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    // objective: minimise the sum of artificials, expressed in nonbasic terms
    let mut obj = vec![Rat::zero(); width];
    for row in t.iter() {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best = Rat::zero();
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match leave {
                    None => true,
                    Some(l) => ratio < best || (ratio == best && basis[i] < basis[l]),
                };
                if better {
                    best = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(r) = leave else {
            // unbounded phase I cannot happen (objective bounded below by 0)
            break;
        };
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        let f = obj[enter].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
        basis[r] = enter;
    }
    obj[width - 1].is_zero()
}

/// Is `p` a convex combination of `pts`?
pub fn in_convex_hull(p: &[Rat], pts: &[Vec<Rat>]) -> bool {
    if pts.is_empty() {
        return false;
    }
    let dim = p.len();
    let one = Rat::from_integer(1.into());
    let mut a: Vec<Vec<Rat>> = (0..dim).map(|i| pts.iter().map(|q| q[i].clone()).collect()).collect();
    a.push(vec![one.clone(); pts.len()]);
    let mut b: Vec<Rat> = p.to_vec();
    b.push(one);
    feasible(&a, &b)
}
