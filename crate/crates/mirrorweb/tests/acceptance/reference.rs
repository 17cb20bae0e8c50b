//! Reference values, transcribed from the printed displays.

#![allow(dead_code)]

pub const LAMBDA_22: &[&[i64]] = &[
    &[1, -1, -1, -1, 2, 0, 0, 0],
    &[-1, 1, -1, -1, 0, 2, 0, 0],
    &[0, 0, 2, 0, -1, -1, 1, -1],
];

pub const M1_22: &[&[i64]] = &[
    &[1, 0, 2],
    &[1, 2, 0],
    &[1, 0, 0],
    &[1, 0, 0],
    &[0, 0, 2],
    &[0, 2, 0],
    &[0, 0, 0],
    &[0, 0, 0],
];

pub const M2_22: &[&[i64]] = &[
    &[0, 0, 0],
    &[0, 0, 0],
    &[0, 0, 2],
    &[2, 0, 0],
    &[0, 1, 0],
    &[0, 1, 0],
    &[0, 1, 2],
    &[2, 1, 0],
];

pub const W_22: &[&[i64]] = &[
    &[2, 0, -1, -1],
    &[0, 2, -1, -1],
    &[-1, -1, 2, 0],
];

pub const LAMBDA_33: &[&[i64]] = &[
    &[2, -1, -1, -1, -1, -1, 3, 0, 0, 0, 0, 0],
    &[-1, 2, -1, -1, -1, -1, 0, 3, 0, 0, 0, 0],
    &[-1, -1, 2, -1, -1, -1, 0, 0, 3, 0, 0, 0],
    &[0, 0, 0, 3, 0, 0, -1, -1, -1, 2, -1, -1],
    &[0, 0, 0, 0, 3, 0, -1, -1, -1, -1, 2, -1],
];

pub const M1_33: &[&[i64]] = &[
    &[3, 0, 0, 1],
    &[0, 3, 0, 1],
    &[0, 0, 3, 1],
    &[0, 0, 0, 1],
    &[0, 0, 0, 1],
    &[0, 0, 0, 1],
    &[3, 0, 0, 0],
    &[0, 3, 0, 0],
    &[0, 0, 3, 0],
    &[0, 0, 0, 0],
    &[0, 0, 0, 0],
    &[0, 0, 0, 0],
];

pub const M2_33: &[&[i64]] = &[
    &[0, 0, 0, 0],
    &[0, 0, 0, 0],
    &[0, 0, 0, 0],
    &[3, 0, 0, 0],
    &[0, 3, 0, 0],
    &[0, 0, 3, 0],
    &[0, 0, 0, 1],
    &[0, 0, 0, 1],
    &[0, 0, 0, 1],
    &[3, 0, 0, 1],
    &[0, 3, 0, 1],
    &[0, 0, 3, 1],
];

pub const W_33: &[&[i64]] = &[
    &[3, 0, 0, -1, -1, -1],
    &[0, 3, 0, -1, -1, -1],
    &[0, 0, 3, -1, -1, -1],
    &[-1, -1, -1, 3, 0, 0],
    &[-1, -1, -1, 0, 3, 0],
];

pub const Q_LAMBDA_33: &[&[i64]] = &[
    &[1, 0, 0, 0, 0, 2, 0, 1, 1, 2, 2, 0],
    &[0, 1, 0, 0, 0, 2, 1, 0, 1, 2, 2, 0],
    &[0, 0, 1, 0, 0, 2, 1, 1, 0, 2, 2, 0],
    &[0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    &[0, 0, 0, 0, 1, 2, 1, 1, 1, 2, 1, 0],
    &[0, 0, 0, 0, 0, 3, 1, 1, 1, 3, 3, 0],
    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
];

pub const W_HAT_33: &[&[i64]] = &[
    &[-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3],
    &[-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 1, 2, 3, 0, 1, 2, 0, 1, 0],
    &[-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 3, 2, 1, 0, 2, 1, 0, 1, 0, 0],
    &[0, 0, 0, 0, 1, 1, 1, 2, 2, 3, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
    &[0, 1, 2, 3, 0, 1, 2, 0, 1, 0, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
];

pub const W_P5: &[&[i64]] = &[
    &[1, -1, 0, 0, 0, 0],
    &[-1, -1, 2, 0, 0, 0],
    &[0, 0, -1, -1, 3, 0],
    &[0, 0, -1, -1, 0, 3],
    &[0, 2, 0, 0, -1, -1],
];

pub const DUAL_P5: &[&[i64]] = &[
    &[0, 1, -1, -1, 0, 0, 1, 2, 0, -1],
    &[1, 0, 0, 0, 0, 0, 1, 0, 0, -1],
    &[0, 0, 0, 0, 0, 1, 0, 0, 0, -1],
    &[0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
    &[0, 0, 0, -1, 0, 0, 1, 1, 1, -1],
];

pub const W1_456: &[&[i64]] = &[
    &[-1, -1, -1, 5, 0, 0, 0, 0, 0],
    &[-1, -1, -1, 0, 5, 0, 0, 0, 0],
    &[-2, -2, -2, 0, 0, 5, 0, 0, 0],
    &[0, 0, 0, -1, -1, -1, 6, 0, 0],
    &[0, 0, 0, -1, -1, -1, 0, 6, 0],
    &[0, 0, 0, -3, -3, -3, 0, 0, 6],
    &[4, 0, 0, 0, 0, 0, -1, -1, -1],
    &[0, 4, 0, 0, 0, 0, -1, -1, -1],
];

pub const W2_456: &[&[i64]] = &[
    &[-1, -1, -1, 0, 0, 0, 6, 0, 0],
    &[-1, -1, -1, 0, 0, 0, 0, 6, 0],
    &[-2, -2, -2, 0, 0, 0, 0, 0, 6],
    &[4, 0, 0, -1, -1, -1, 0, 0, 0],
    &[0, 4, 0, -1, -1, -1, 0, 0, 0],
    &[0, 0, 4, -3, -3, -3, 0, 0, 0],
    &[0, 0, 0, 5, 0, 0, -1, -1, -1],
    &[0, 0, 0, 0, 5, 0, -1, -1, -1],
];

pub const W3_456: &[&[i64]] = &[
    &[-1, -1, -1, 0, 0, 0, 6, 0, 0],
    &[-1, -1, -1, 0, 0, 0, 0, 6, 0],
    &[-2, -2, -2, 5, 0, 0, 0, 0, 0],
    &[0, 0, 0, -1, -1, -1, 0, 0, 6],
    &[0, 0, 0, -1, 4, -1, 0, 0, 0],
    &[0, 0, 0, -3, -3, 2, 0, 0, 0],
    &[4, 0, 0, 0, 0, 0, -1, -1, -1],
    &[0, 4, 0, 0, 0, 0, -1, -1, -1],
];

pub const LAMBDA_P6: &[&[i64]] = &[
    &[1, -1, -1, -1, -1, -1, -1, 2, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0],
    &[-1, 1, -1, -1, -1, -1, -1, 0, 2, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0],
    &[0, 0, 2, 0, 0, 0, 0, -1, -1, 1, -1, -1, -1, -1, 0, 0, 3, 0, 0, 0, 0],
    &[0, 0, 0, 2, 0, 0, 0, -1, -1, -1, 1, -1, -1, -1, 0, 0, 0, 3, 0, 0, 0],
    &[0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 0, 0, -1, -1, -1, -1, 2, -1, -1],
    &[0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2, 0, -1, -1, -1, -1, -1, 2, -1],
];
pub const LAMBDA_P5: &[&[i64]] = &[
    &[1, -1, -1, -1, -1, -1, 2, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0],
    &[-1, 1, -1, -1, -1, -1, 0, 2, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0],
    &[0, 0, 2, 0, 0, 0, -1, -1, 1, -1, -1, -1, 0, 0, 3, 0, 0, 0],
    &[0, 0, 0, 2, 0, 0, -1, -1, -1, 1, -1, -1, 0, 0, 0, 3, 0, 0],
    &[0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 2, 0, -1, -1, -1, -1, 1, -1],
];

pub const LAMBDA_456: &[&[i64]] = &[
    &[3, -1, -1, -1, -1, -1, -1, -1, -1, 5, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0],
    &[-1, 3, -1, -1, -1, -1, -1, -1, -1, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 0],
    &[-2, -2, 2, -2, -2, -2, -2, -2, -2, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0],
    &[0, 0, 0, 4, 0, 0, 0, 0, 0, -1, -1, -1, 4, -1, -1, -1, -1, -1, 0, 0, 0, 6, 0, 0, 0, 0, 0],
    &[0, 0, 0, 0, 4, 0, 0, 0, 0, -1, -1, -1, -1, 4, -1, -1, -1, -1, 0, 0, 0, 0, 6, 0, 0, 0, 0],
    &[0, 0, 0, 0, 0, 4, 0, 0, 0, -3, -3, -3, -3, -3, 2, -3, -3, -3, 0, 0, 0, 0, 0, 6, 0, 0, 0],
    &[0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, -1, -1, -1, -1, -1, -1, 5, -1, -1],
    &[0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, -1, -1, -1, -1, -1, -1, -1, 5, -1],
];

/// Y_{2,2,3} ⊂ P^6: the 42 printed LT column lists (1-based).
pub const P6_LISTS: &[[usize; 7]] = &[
    [3,4,12,13,15,16,21],
    [3,4,12,14,15,16,20],
    [3,4,13,14,15,16,19],
    [3,5,8,13,16,18,21],
    [3,5,8,14,16,18,20],
    [3,5,9,13,15,18,21],
    [3,5,9,14,15,18,20],
    [3,5,13,14,15,16,18],
    [3,6,8,12,16,18,21],
    [3,6,8,14,16,18,19],
    [3,6,9,12,15,18,21],
    [3,6,9,14,15,18,19],
    [3,6,12,14,15,16,18],
    [3,7,8,12,16,18,20],
    [3,7,8,13,16,18,19],
    [3,7,9,12,15,18,20],
    [3,7,9,13,15,18,19],
    [3,7,12,13,15,16,18],
    [4,5,8,13,16,17,21],
    [4,5,8,14,16,17,20],
    [4,5,9,13,15,17,21],
    [4,5,9,14,15,17,20],
    [4,5,13,14,15,16,17],
    [4,6,8,12,16,17,21],
    [4,6,8,14,16,17,19],
    [4,6,9,12,15,17,21],
    [4,6,9,14,15,17,19],
    [4,6,12,14,15,16,17],
    [4,7,8,12,16,17,20],
    [4,7,8,13,16,17,19],
    [4,7,9,12,15,17,20],
    [4,7,9,13,15,17,19],
    [4,7,12,13,15,16,17],
    [5,6,8,9,17,18,21],
    [5,6,8,14,16,17,18],
    [5,6,9,14,15,17,18],
    [5,7,8,9,17,18,20],
    [5,7,8,13,16,17,18],
    [5,7,9,13,15,17,18],
    [6,7,8,9,17,18,19],
    [6,7,8,12,16,17,18],
    [6,7,9,12,15,17,18],
];

// Polynomials as printed; `psi` marks the deformation monomial.

pub const BB_22: [&str; 2] = ["x1^2*x5^2 + x2^2*x6^2 + psi*x1*x2*x3*x4", "x3^2*x7^2 + x4^2*x8^2 + psi*x5*x6*x7*x8"];

/// Variables numbered as in the displayed W.
pub const LT_22: [&str; 2] = ["x1^2 + x2^2 + psi*x3*x4", "psi*x1*x2 + x3^2 + x4^2"];

pub const BB_33: [&str; 2] = [
    "x1^3*x7^3 + x2^3*x8^3 + x3^3*x9^3 + psi*x1*x2*x3*x4*x5*x6",
    "x4^3*x10^3 + x5^3*x11^3 + x6^3*x12^3 + psi*x7*x8*x9*x10*x11*x12",
];

pub const LT_33: [&str; 2] = ["x1^3 + x2^3 + x3^3 + psi*x4*x5*x6", "psi*x1*x2*x3 + x4^3 + x5^3 + x6^3"];

/// Y_{4,5,6}, first LT model (W_1, variables in Λ order).
pub const LT_456_1: [&str; 3] = [
    "x1*x2*x3*x4^5 + x1*x2*x3*x5^5 + x6^5 + psi*x1^2*x2^2*x3^2",
    "x4^2*x5^2*x6^2*x7^6 + x9^6 + x4^2*x5^2*x6^2*x8^6 + psi*x4^3*x5^3*x6^3",
    "x1^4*x7^3*x8^3*x9^3 + x2^4*x7^3*x8^3*x9^3 + x3^4 + psi*x7^4*x8^4*x9^4",
];

/// Y_{4,5,6}, second LT model (W_2).
pub const LT_456_2: [&str; 3] = [
    "x1*x2*x3*x7^6 + x1*x2*x3*x8^6 + x9^6 + psi*x1^2*x2^2*x3^2",
    "x1^4*x4^2*x5^2*x6^2 + x2^4*x4^2*x5^2*x6^2 + x3^4 + psi*x4^3*x5^3*x6^3",
    "x4^5*x7^3*x8^3*x9^3 + x5^5*x7^3*x8^3*x9^3 + x6^5 + psi*x7^4*x8^4*x9^4",
];

pub const BB_P6: [&str; 3] = [
    "x1^2*x8^2*x15^3 + x2^2*x9^2*x16^3 + psi*x1*x2*x3*x4*x5*x6*x7",
    "x3^2*x10^2*x17^3 + x4^2*x11^2*x18^3 + psi*x8*x9*x10*x11*x12*x13*x14",
    "x5^2*x12^2*x19^3 + x6^2*x13^2*x20^3 + x7^2*x14^2*x21^3 + psi*x15*x16*x17*x18*x19*x20*x21",
];

/// Degrees of the three BB polynomials for Y_{2,2,3} ⊂ P^6, and their sum.
pub const DEG_P6: [[i64; 15]; 3] = [
    [4, 4, 4, 4, 4, 2, 3, 2, 6, 0, 0, 0, 0, 0, 0],
    [21, 21, 23, 24, 24, 15, 18, 12, 36, 2, 6, 3, 3, 3, 0],
    [26, 26, 26, 26, 28, 16, 26, 16, 50, 0, 2, 2, 6, 6, 3],
];
pub const ANTICANONICAL_P6: [i64; 15] = [51, 51, 53, 54, 56, 33, 47, 30, 92, 2, 8, 5, 9, 9, 3];
