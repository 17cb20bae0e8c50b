//! Canned inputs, generated from closed forms rather than typed-in matrices.

use ftv_core::ftv::{dual_ambient, generate_dd_input, projective_input, DdExpected, PartitionedFtv};
use ftv_core::IntMatrix;
use num_bigint::BigInt;

use crate::error::{CliError, Result};

#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub input: PartitionedFtv,
    /// Candidate LT column lists (0-based into Λ); the first is the default choice.
    pub lt_columns: Vec<Vec<usize>>,
    /// Only the LT side is in scope (forward dual gated by δ > 1).
    pub lt_only: bool,
    pub dd: Option<DdExpected>,
}

fn zero_based(lists: &[&[usize]]) -> Vec<Vec<usize>> {
    lists.iter().map(|l| l.iter().map(|i| i - 1).collect()).collect()
}

pub const NAMES: &[&str] = &["y22", "y33", "ydd:<d>", "y223p5", "y223p6", "y456"];

pub fn scenario(name: &str) -> Result<Scenario> {
    let unknown = || CliError::Parse(format!("unknown scenario {name:?}; known: {}", NAMES.join(", ")));
    let s = match name {
        "y22" => dd(2, name)?,
        "y33" => dd(3, name)?,
        "y223p5" => Scenario {
            name: name.into(),
            input: projective_input(5, &[&[1, 1, 0, 0, 0, 0], &[0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 1, 2]])?,
            lt_columns: zero_based(&[&[1, 5, 8, 12, 15, 16]]),
            lt_only: true,
            dd: None,
        },
        "y223p6" => Scenario {
            name: name.into(),
            input: projective_input(
                6,
                &[&[1, 1, 0, 0, 0, 0, 0], &[0, 0, 1, 1, 0, 0, 0], &[0, 0, 0, 0, 1, 1, 1]],
            )?,
            lt_columns: zero_based(&[&[3, 4, 12, 13, 15, 16, 21], &[3, 5, 8, 14, 16, 18, 20]]),
            lt_only: false,
            dd: None,
        },
        "y456" => Scenario {
            name: name.into(),
            input: projective_input(
                8,
                &[
                    &[1, 1, 2, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 1, 3, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, 1, 1, 4],
                ],
            )?,
            lt_columns: zero_based(&[
                &[7, 8, 9, 10, 11, 12, 22, 23, 24],
                &[4, 5, 6, 16, 17, 18, 19, 20, 21],
                &[7, 8, 9, 12, 14, 15, 19, 20, 22],
            ]),
            lt_only: true,
            dd: None,
        },
        _ => {
            let d: usize = name.strip_prefix("ydd:").and_then(|d| d.parse().ok()).ok_or_else(unknown)?;
            dd(d, name)?
        }
    };
    Ok(s)
}

fn dd(d: usize, name: &str) -> Result<Scenario> {
    let (input, e) = generate_dd_input(d)?;
    Ok(Scenario {
        name: name.into(),
        input,
        lt_columns: vec![(d..3 * d).collect()],
        lt_only: false,
        dd: Some(e),
    })
}

impl Scenario {
    /// (Λ, b) of the calibrated dual.
    pub fn lambda(&self) -> Result<(IntMatrix, Vec<Vec<BigInt>>)> {
        let a = dual_ambient(&self.input)?;
        Ok((a.fan_matrix, a.blocks))
    }
}

/// The Y_{d,d} LT input with the two halves of W swapped, which is the
/// column order used when that matrix is displayed on its own.
pub fn dd_lt_display(d: usize) -> Result<PartitionedFtv> {
    let (_, e) = generate_dd_input(d)?;
    let perm: Vec<usize> = (d..2 * d).chain(0..d).collect();
    let w = e.w.select_columns(&perm);
    let c = e.c.iter().map(|c| perm.iter().map(|&j| c[j].clone()).collect()).collect();
    Ok(PartitionedFtv::new(w, c)?)
}
