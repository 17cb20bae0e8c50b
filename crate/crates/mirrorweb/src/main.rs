use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ftv_core::ftv::{build_model, f_dual, f_dual_reverse, render_family, MirrorModel, PartitionedFtv};
use ftv_core::web::{test_candidate, web_invariants, Selection};
use ftv_core::Error as CoreError;
use mirrorweb::appendix::{verify, Appendix};
use mirrorweb::error::{CliError, Result};
use mirrorweb::scenario::{scenario, Scenario};
use mirrorweb::{json, search};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "mirrorweb", version, about = "Framed duals and webs of intermediate mirror models")]
struct Cli {
    /// Worker threads for parallel enumeration (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Dual of a partitioned framed toric variety.
    Dual {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        scenario: Option<String>,
        /// JSON file {"fan_matrix": [...], "blocks": [...]}.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Treat the input as an LT side (quotient of weighted projective space).
        #[arg(long)]
        reverse: bool,
    },
    /// Admissible LT submatrices and intermediate models.
    Web {
        #[arg(long)]
        scenario: String,
        /// all | none | explicit subsets such as "1,2;7,8" (1-based, ';'-separated).
        #[arg(long, default_value = "none")]
        subsets: String,
        /// Scan every (n+1)-column submatrix of the dual fan matrix.
        #[arg(long)]
        find_w: bool,
        /// Column list of the LT submatrix (1-based, comma-separated); defaults to the scenario's.
        #[arg(long)]
        w: Option<String>,
    },
    /// Replay an appendix table.
    VerifyAppendix { which: String },
}

fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(CliError::Parse(format!("bad index {t:?}"))),
        })
        .collect()
}

fn parse_selection(s: &str) -> Result<Selection> {
    Ok(match s {
        "all" => Selection::All,
        "none" => Selection::None,
        list => Selection::List(list.split(';').map(parse_indices).collect::<Result<_>>()?),
    })
}

fn load(scenario_name: Option<&str>, input: Option<&PathBuf>) -> Result<PartitionedFtv> {
    match (scenario_name, input) {
        (Some(s), _) => Ok(scenario(s)?.input),
        (None, Some(p)) => json::parse_ftv(&std::fs::read_to_string(p)?),
        (None, None) => Err(CliError::Parse("either --scenario or --input is required".into())),
    }
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    let out = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serialisable") + "\n",
        Format::Text => text(),
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn model_text(m: &MirrorModel) -> String {
    let mut out = format!("dual fan matrix {:?}\n", m.dual_fan_matrix);
    for (k, p) in render_family(m).iter().enumerate() {
        out += &format!("p{} = {p}\n", k + 1);
    }
    out += &format!("class group: free rank {}, torsion {:?}\n", m.class_group.free_rank, m.class_group.invariant_factors);
    out
}

fn cmd_dual(cli: &Cli, scenario: Option<&str>, input: Option<&PathBuf>, reverse: bool) -> Result<()> {
    let x = load(scenario, input)?;
    if reverse {
        let a = f_dual_reverse(&x)?;
        emit(cli.format, &json::ambient(&a), || format!("dual fan matrix {:?}\nblocks {:?}\n", a.fan_matrix, a.blocks));
    } else {
        let m = f_dual(&x)?;
        emit(cli.format, &json::model(&m), || model_text(&m));
    }
    Ok(())
}

/// Model for A = ∅: the calibrated dual, or for gated framings the same
/// ambient data with exponent matrices computed directly.
fn base_model(s: &Scenario) -> Result<MirrorModel> {
    match f_dual(&s.input) {
        Ok(m) => Ok(m),
        Err(CoreError::UnsupportedDualFraming { .. }) | Err(CoreError::NonPrimitiveVertex { .. }) if s.lt_only => {
            let (l, b) = s.lambda()?;
            Ok(build_model(&l, &b)?)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_web(cli: &Cli, name: &str, subsets: &str, find_w: bool, w: Option<&str>) -> Result<()> {
    let s = scenario(name)?;
    let sel = parse_selection(subsets)?;
    let (lambda, blocks) = s.lambda()?;
    let chosen_cols = match w {
        Some(w) => parse_indices(w)?,
        None => s.lt_columns[0].clone(),
    };
    if chosen_cols.len() != lambda.rows() + 1 || chosen_cols.iter().any(|&c| c >= lambda.cols()) {
        return Err(CliError::Parse(format!("W needs {} distinct columns in 1..={}", lambda.rows() + 1, lambda.cols())));
    }
    let mut chosen_cols = chosen_cols;
    chosen_cols.sort_unstable();
    let admissible = if find_w {
        search::with_jobs(cli.jobs, || search::find_admissible_w(&s.input, &lambda, &blocks))
    } else {
        s.lt_columns
            .iter()
            .chain(std::iter::once(&chosen_cols))
            .filter_map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                test_candidate(&s.input, &lambda, &blocks, &c)
            })
            .fold(Vec::new(), |mut acc, a| {
                if !acc.iter().any(|b: &ftv_core::web::AdmissibleW| b.columns == a.columns) {
                    acc.push(a);
                }
                acc
            })
    };
    let web = if sel == Selection::None {
        None
    } else {
        let chosen = test_candidate(&s.input, &lambda, &blocks, &chosen_cols)
            .ok_or_else(|| CliError::Unsupported("the chosen W fails assumption (B)".into()))?;
        let iw = chosen.complement(lambda.cols());
        // size guard before any model is built
        ftv_core::web::resolve_subsets(&iw, &sel)?;
        let bb = base_model(&s)?;
        Some(search::with_jobs(cli.jobs, || search::build_web(&s.input, &bb, &chosen, &sel))?)
    };
    let inv = web_invariants(&admissible, web.as_ref());
    let report = json::web_report(&admissible, web.as_ref(), &inv);
    emit(cli.format, &report, || {
        let aligned = admissible.iter().filter(|a| a.passes_c && a.aligned).count();
        let mut out = format!(
            "scenario {}: {} lists pass (B), {} pass (C), {aligned} of those aligned\n",
            s.name,
            admissible.len(),
            inv.per_w.len()
        );
        for a in &admissible {
            let cols: Vec<usize> = a.columns.iter().map(|c| c + 1).collect();
            out += &format!("  {cols:?} q={:?} torsion={:?} aug_det={} C={} aligned={}\n", a.q, a.torsion, a.aug_det, a.passes_c, a.aligned);
        }
        out += &format!(
            "aug_det multiset {:?}\naligned aug_det multiset {:?}\nmodels built: {}\n",
            inv.aug_dets, inv.aligned_aug_dets, inv.model_count
        );
        out
    });
    Ok(())
}

fn cmd_verify(cli: &Cli, which: &str) -> Result<()> {
    let which: Appendix = which.parse()?;
    let checks = search::with_jobs(cli.jobs, || verify(which))?;
    let failed = checks.iter().filter(|c| !c.ok).count();
    let value = Value::Array(
        checks
            .iter()
            .map(|c| serde_json::json!({"entry": c.label, "pass": c.ok, "detail": c.detail}))
            .collect(),
    );
    emit(cli.format, &value, || {
        checks
            .iter()
            .map(|c| if c.ok { format!("PASS {}\n", c.label) } else { format!("FAIL {}: {}\n", c.label, c.detail) })
            .collect()
    });
    if failed > 0 {
        return Err(CliError::Verification(format!("{failed} of {} entries differ", checks.len())));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Command::Dual { scenario, input, reverse } => cmd_dual(&cli, scenario.as_deref(), input.as_ref(), *reverse),
        Command::Web { scenario, subsets, find_w, w } => cmd_web(&cli, scenario, subsets, *find_w, w.as_deref()),
        Command::VerifyAppendix { which } => cmd_verify(&cli, which),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mirrorweb: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
