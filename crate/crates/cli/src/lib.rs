//! Command implementations for the `p3crank` binary.
//!
//! Every command returns its full stdout as a string together with an exit
//! status, so output is assembled in a fixed order before anything is printed.

pub mod emit;
pub mod report;

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use p3crank::congruence::{characterize, family, is_divisible, verify_characterization, Family};
use p3crank::cranks::{
    build_arrangement, c_ls, c_ls_histogram_by_rows, cycle_decomposition, ehrhart_crank, histogram,
    labeled_arrangement, CaseLabel, CrankHistogram, TableRow,
};
use p3crank::ehrhart::{box_decompose, h_star, h_star_from_gf, tile_partition_triangle};
use p3crank::partitions::{Partition3, Partitions3};
use p3crank::quasipoly::{evaluate, Method};

pub use report::{Command, Outcome, ReportRecord};

/// Environment variable holding the worker count for sweeps.
pub const WORKERS_ENV: &str = "P3CRANK_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] p3crank::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    VerificationFailed = 1,
    InputError = 2,
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Core(p3crank::Error::Internal(_)) | CliError::Core(p3crank::Error::CoverCheck(_)) => {
                Exit::VerificationFailed
            }
            _ => Exit::InputError,
        }
    }
}

/// Buffered result of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit: Exit,
}

impl Output {
    fn report(record: &ReportRecord) -> Result<Output, CliError> {
        let exit = match record.outcome {
            Outcome::Success => Exit::Success,
            Outcome::Failure => Exit::VerificationFailed,
        };
        Ok(Output { stdout: record.to_json()? + "\n", exit })
    }
}

/// Builds the global rayon pool from [`WORKERS_ENV`]; unset means one worker per logical core.
pub fn configure_workers(value: Option<&str>) -> Result<(), CliError> {
    let Some(raw) = value else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}")))?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn inputs<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Which evaluators `count` runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    One(Method),
    All,
}

impl std::str::FromStr for CountMethod {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if s == "all" {
            return Ok(CountMethod::All);
        }
        s.parse().map(CountMethod::One).map_err(|e: p3crank::Error| CliError::Input(e.to_string()))
    }
}

pub fn cmd_count(n: u64, method: CountMethod) -> Result<Output, CliError> {
    let methods: Vec<Method> = match method {
        CountMethod::One(m) => vec![m],
        CountMethod::All => Method::ALL.to_vec(),
    };
    let results = methods.iter().map(|&m| evaluate(m, n)).collect::<Result<Vec<_>, _>>()?;
    let consistent = results.windows(2).all(|w| w[0].value == w[1].value);
    let rows: Vec<Value> = results.iter().map(|r| json!({"method": r.method, "value": r.value})).collect();
    let label = match method {
        CountMethod::All => "all".to_string(),
        CountMethod::One(m) => m.to_string(),
    };
    let record = ReportRecord {
        command: Command::Count,
        inputs: inputs([("n", json!(n)), ("method", json!(label))]),
        outcome: if consistent { Outcome::Success } else { Outcome::Failure },
        payload: json!({"values": rows, "consistent": consistent}),
        notes: Vec::new(),
    };
    Output::report(&record)
}

/// Prints exactly `{"mu":[…],"tau":[…]}`.
pub fn cmd_decompose(parts: [u64; 3]) -> Result<Output, CliError> {
    let lambda = Partition3::new(parts[0], parts[1], parts[2])?;
    let d = box_decompose(&lambda);
    let body = serde_json::to_string(&json!({"mu": d.remainder.point(), "tau": d.quotient}))?;
    Ok(Output { stdout: body + "\n", exit: Exit::Success })
}

pub fn cmd_hstar() -> Result<Output, CliError> {
    let h = h_star();
    let agrees = h_star_from_gf() == h;
    let record = ReportRecord {
        command: Command::Hstar,
        inputs: BTreeMap::new(),
        outcome: if agrees && h.total() == 36 { Outcome::Success } else { Outcome::Failure },
        payload: json!({
            "h_star": h.counts,
            "total": h.total(),
            "symmetric": h.is_symmetric(),
            "generating_function_agrees": agrees,
        }),
        notes: Vec::new(),
    };
    Output::report(&record)
}

pub fn cmd_residues(m: u64) -> Result<Output, CliError> {
    let ch = characterize(m)?;
    let unwitnessed = ch.unwitnessed();
    let mut notes = Vec::new();
    if !unwitnessed.is_empty() {
        notes.push(format!("largest-minus-smallest does not witness residues {unwitnessed:?}"));
    }
    let record = ReportRecord {
        command: Command::Residues,
        inputs: inputs([("m", json!(m))]),
        outcome: Outcome::Success,
        payload: json!({
            "family": ch.family,
            "period": ch.period,
            "residues": ch.residues,
            "sqrt_minus3": ch.sqrt_minus3,
            "unwitnessed": unwitnessed,
        }),
        notes,
    };
    Output::report(&record)
}

/// Residue check against brute-force counts, plus uniformity of largest-minus-smallest
/// on every witnessed qualifying `n ≤ max_n`.
pub fn cmd_verify(m: u64, max_n: u64) -> Result<Output, CliError> {
    let ch = characterize(m)?;
    let residue_report = verify_characterization(m, max_n)?;
    let unwitnessed = ch.unwitnessed();
    // sweeps are sharded by n; collect() keeps n order regardless of scheduling
    let non_uniform: Vec<u64> = (3..=max_n)
        .into_par_iter()
        .filter(|&n| ch.contains(n) && !unwitnessed.contains(&(n % ch.period)))
        .filter(|&n| !c_ls_histogram_by_rows(n, m).is_uniform())
        .collect();
    let first_failure = match (residue_report.counterexample, non_uniform.first()) {
        (Some(a), Some(&b)) => Some(a.min(b)),
        (a, b) => a.or(b.copied()),
    };
    let mut notes = Vec::new();
    if !unwitnessed.is_empty() {
        notes.push(format!(
            "residues {unwitnessed:?} mod {} are divisible but not witnessed by largest-minus-smallest",
            ch.period
        ));
    }
    if let Some(n) = first_failure {
        notes.push(format!("first failure at n = {n}"));
    }
    let record = ReportRecord {
        command: Command::Verify,
        inputs: inputs([("m", json!(m)), ("max_n", json!(max_n))]),
        outcome: if first_failure.is_none() { Outcome::Success } else { Outcome::Failure },
        payload: json!({
            "residues_match": residue_report.success,
            "residue_counterexample": residue_report.counterexample,
            "non_uniform": non_uniform,
            "unwitnessed": unwitnessed,
        }),
        notes,
    };
    Output::report(&record)
}

/// Crank used by `histogram`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrankChoice {
    LargestMinusSmallest,
    Ehrhart,
}

pub fn cmd_histogram(n: u64, m: u64, crank: CrankChoice) -> Result<Output, CliError> {
    if m < 2 {
        return Err(CliError::Input(format!("modulus must be at least 2, got {m}")));
    }
    let (h, name) = match crank {
        CrankChoice::LargestMinusSmallest => (histogram(n, m, |l| c_ls(l, m)), "ls"),
        CrankChoice::Ehrhart => {
            let case = CaseLabel::from_height(n, m).ok_or(p3crank::Error::NonQualifyingHeight { n, m })?;
            let plan = build_arrangement(case, m)?;
            let mut counts = vec![0u64; m as usize];
            for lambda in Partitions3::new(n) {
                counts[ehrhart_crank(&plan, &lambda)? as usize] += 1;
            }
            (CrankHistogram { modulus: m, counts }, "ehrhart")
        }
    };
    let divisible = match family(m) {
        Ok(_) => Some(is_divisible(n, m)?),
        Err(_) => None,
    };
    let record = ReportRecord {
        command: Command::Histogram,
        inputs: inputs([("n", json!(n)), ("m", json!(m)), ("crank", json!(name))]),
        outcome: Outcome::Success,
        payload: json!({
            "counts": h.counts,
            "total": h.total(),
            "uniform": h.is_uniform(),
            "divisible": divisible,
        }),
        notes: Vec::new(),
    };
    Output::report(&record)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleFormat {
    Csv,
    Json,
}

pub fn cmd_cycles(n: u64, m: u64, format: CycleFormat) -> Result<Output, CliError> {
    if family(m)? != Family::MinusOne {
        return Err(p3crank::Error::UnsupportedModulus(m).into());
    }
    let d = cycle_decomposition(n, m)?;
    let stdout = match format {
        CycleFormat::Csv => emit::cycles_csv(&d)?,
        CycleFormat::Json => {
            let cycles: Vec<Value> = d
                .cycles
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    json!({
                        "index": i,
                        "length": c.len(),
                        "partitions": c,
                        "cranks": c.iter().map(|l| c_ls(l, m)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let record = ReportRecord {
                command: Command::Cycles,
                inputs: inputs([("n", json!(n)), ("m", json!(m))]),
                outcome: Outcome::Success,
                payload: json!({
                    "lengths": d.lengths(),
                    "row_permutation": d.row_permutation()?.to_string(),
                    "cycles": cycles,
                }),
                notes: Vec::new(),
            };
            record.to_json()? + "\n"
        }
    };
    Ok(Output { stdout, exit: Exit::Success })
}

pub fn cmd_rectangle(m: u64, kp: u64, case: CaseLabel, labeled: bool, csv_path: Option<&Path>) -> Result<Output, CliError> {
    let table = TableRow::new(case, m)?;
    let n = table.n_at(kp);
    let (w, h) = (table.width.at(kp as i64), table.height.at(kp as i64));
    let base = inputs([
        ("m", json!(m)),
        ("k_prime", json!(kp)),
        ("case", json!(case.as_str())),
        ("labeled", json!(labeled)),
    ]);
    if n < 0 || w <= 0 || h <= 0 {
        let record = ReportRecord {
            command: Command::Rectangle,
            inputs: base,
            outcome: Outcome::Success,
            payload: json!({"n": n, "width": w.max(0), "height": h.max(0), "vacuous": true, "cover_check": "vacuous"}),
            notes: vec![format!("k'={kp} gives an empty progression instance (n = {n})")],
        };
        return Output::report(&record);
    }
    let plan = if labeled { labeled_arrangement(case, m)? } else { build_arrangement(case, m)? };
    let placements: Vec<Value> = plan
        .placements
        .iter()
        .map(|p| {
            json!({
                "mu": p.remainder.point(),
                "triangle_shift": p.shift,
                "matrix": p.map.matrix(),
                "offset": p.map.offset(),
            })
        })
        .collect();
    let (outcome, verdict, grid) = match plan.grid(kp) {
        Ok(g) => (Outcome::Success, "ok".to_string(), Some(g)),
        Err(e) => (Outcome::Failure, e.to_string(), None),
    };
    if let (Some(path), Some(grid)) = (csv_path, &grid) {
        let body = emit::rectangle_csv(&plan, w, grid)?;
        write_file(path, body.as_bytes())?;
    }
    let record = ReportRecord {
        command: Command::Rectangle,
        inputs: base,
        outcome,
        payload: json!({
            "n": n,
            "width": w,
            "height": h,
            "vacuous": false,
            "eta": plan.eta,
            "step": plan.step,
            "crank_conditions_hold": plan.crank_conditions_hold(),
            "placements": placements,
            "cover_check": verdict,
        }),
        notes: Vec::new(),
    };
    Output::report(&record)
}

pub fn cmd_tile(n: u64, svg_path: &Path) -> Result<Output, CliError> {
    if n < 3 {
        return Err(CliError::Input(format!("tile needs n >= 3, got {n}")));
    }
    let groups = tile_partition_triangle(n);
    let svg = emit::tile_svg(n, &groups);
    write_file(svg_path, svg.as_bytes())?;
    let rows: Vec<Value> = groups
        .iter()
        .map(|g| json!({"mu": g.remainder.point(), "triangle": g.triangle, "size": g.members.len()}))
        .collect();
    let record = ReportRecord {
        command: Command::Tile,
        inputs: inputs([("n", json!(n)), ("svg", json!(svg_path.display().to_string()))]),
        outcome: Outcome::Success,
        payload: json!({"points": groups.iter().map(|g| g.members.len()).sum::<usize>(), "groups": rows}),
        notes: Vec::new(),
    };
    Output::report(&record)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}
