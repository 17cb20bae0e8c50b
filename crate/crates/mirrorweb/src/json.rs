//! JSON encodings. Numbers are written as decimal strings; on input both
//! JSON integers and decimal strings are accepted. Variable and column
//! indices are 1-based on the wire.

use std::collections::BTreeMap;

use ftv_core::fan::MonomialIdeal;
use ftv_core::ftv::{render_family, DualAmbient, MirrorModel, PartitionedFtv};
use ftv_core::lattice::ClassGroupData;
use ftv_core::web::{AdmissibleW, MirrorWeb, WebInvariants};
use ftv_core::IntMatrix;
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{CliError, Result};

#[derive(Debug, Deserialize)]
struct RawFtv {
    fan_matrix: Vec<Vec<Value>>,
    blocks: Vec<Vec<Value>>,
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer literal")),
        Value::String(s) => s.trim().parse().map_err(|_| CliError::Parse(format!("not an integer: {s:?}"))),
        other => Err(CliError::Parse(format!("not an integer: {other}"))),
    }
}

fn parse_rows(rows: &[Vec<Value>]) -> Result<Vec<Vec<BigInt>>> {
    rows.iter().map(|r| r.iter().map(parse_int).collect()).collect()
}

/// `{"fan_matrix": [[..row..], ...], "blocks": [[..], ...]}`.
pub fn parse_ftv(text: &str) -> Result<PartitionedFtv> {
    let raw: RawFtv = serde_json::from_str(text)?;
    let fan = IntMatrix::from_rows(parse_rows(&raw.fan_matrix)?).map_err(|e| CliError::Parse(e.to_string()))?;
    let blocks = parse_rows(&raw.blocks)?;
    PartitionedFtv::new(fan, blocks).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| ints(m.row(i))).collect())
}

pub fn rows(r: &[Vec<BigInt>]) -> Value {
    Value::Array(r.iter().map(|x| ints(x)).collect())
}

pub fn index_list(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|i| Value::String((i + 1).to_string())).collect())
}

pub fn ideal(i: &MonomialIdeal) -> Value {
    Value::Array(i.generators.iter().map(|g| index_list(g)).collect())
}

pub fn class_group(cg: &ClassGroupData) -> Value {
    json!({
        "free_rank": cg.free_rank.to_string(),
        "invariant_factors": ints(&cg.invariant_factors),
        "weight_matrix": matrix(&cg.weight_matrix),
        "torsion_matrix": matrix(&cg.torsion_matrix),
        "torsion_moduli": ints(&cg.torsion_moduli),
    })
}

pub fn ftv(x: &PartitionedFtv) -> Value {
    json!({ "fan_matrix": matrix(&x.fan_matrix), "blocks": rows(&x.blocks) })
}

pub fn model(m: &MirrorModel) -> Value {
    json!({
        "dual_fan_matrix": matrix(&m.dual_fan_matrix),
        "dual_blocks": rows(&m.dual_blocks),
        "block_origin": m.block_origin.iter()
            .map(|o| o.map_or(Value::Null, |k| Value::String((k + 1).to_string())))
            .collect::<Vec<_>>(),
        "exponent_matrices": m.exponent_matrices.iter().map(matrix).collect::<Vec<_>>(),
        "polynomials": render_family(m),
        "irrelevant_ideal": ideal(&m.irrelevant_ideal),
        "class_group": class_group(&m.class_group),
        "degrees": rows(&m.degrees),
    })
}

pub fn ambient(a: &DualAmbient) -> Value {
    json!({
        "dual_fan_matrix": matrix(&a.fan_matrix),
        "dual_blocks": rows(&a.blocks),
        "block_origin": a.block_origin.iter()
            .map(|o| o.map_or(Value::Null, |k| Value::String((k + 1).to_string())))
            .collect::<Vec<_>>(),
        "integer_part_taken": a.used_integer_part,
    })
}

pub fn admissible(w: &AdmissibleW) -> Value {
    json!({
        "columns": index_list(&w.columns),
        "q": ints(&w.q),
        "torsion": ints(&w.torsion),
        "c_blocks": rows(&w.c_blocks),
        "aug_det": w.aug_det.to_string(),
        "passes_C": w.passes_c,
        "aligned": w.aligned,
    })
}

/// Sorted comma-joined 1-based indices; the empty subset is `""`.
pub fn subset_key(a: &[usize]) -> String {
    a.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

pub fn invariants(inv: &WebInvariants) -> Value {
    let multiset = |m: &BTreeMap<BigInt, usize>| -> BTreeMap<String, String> {
        m.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    };
    json!({
        "aug_det_multiset": multiset(&inv.aug_dets),
        "aligned_aug_det_multiset": multiset(&inv.aligned_aug_dets),
        "per_W": inv.per_w.iter().map(|(c, t, q)| json!({
            "columns": index_list(c), "torsion": ints(t), "q_sum": q.to_string(),
        })).collect::<Vec<_>>(),
        "model_count": inv.model_count.to_string(),
    })
}

pub fn web_report(admissible_ws: &[AdmissibleW], web: Option<&MirrorWeb>, inv: &WebInvariants) -> Value {
    let mut models = serde_json::Map::new();
    if let Some(w) = web {
        for (a, m) in &w.models {
            models.insert(subset_key(a), model(m));
        }
    }
    json!({
        "admissible_W": admissible_ws.iter().map(admissible).collect::<Vec<_>>(),
        "chosen_W": web.map(|w| index_list(&w.chosen_w.columns)),
        "models": models,
        "invariants": invariants(inv),
    })
}
