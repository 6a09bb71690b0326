//! End-to-end runs of the `p3crank` binary: outputs, exit codes and schema conformance.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use p3crank_cli::ReportRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p3crank"))
        .args(args)
        .env("P3CRANK_WORKERS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Checks `required`, `enum`, `type` and `$ref` recursively; enough for the shapes the schema uses.
fn conforms(value: &Value, schema: &Value, root: &Value) -> Result<(), String> {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let name = r.trim_start_matches("#/$defs/");
        return conforms(value, &root["$defs"][name], root);
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{value} not in {options:?}"));
        }
    }
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        if !options.iter().any(|s| conforms(value, s, root).is_ok()) {
            return Err(format!("{value} matches no alternative"));
        }
    }
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let ok = types.iter().any(|t| match *t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "integer" => value.is_i64() || value.is_u64(),
            "boolean" => value.is_boolean(),
            "string" => value.is_string(),
            "null" => value.is_null(),
            _ => true,
        });
        if !ok {
            return Err(format!("{value} is not {types:?}"));
        }
    }
    if let Some(req) = schema.get("required").and_then(Value::as_array) {
        for k in req.iter().filter_map(Value::as_str) {
            if value.get(k).is_none() {
                return Err(format!("missing {k}"));
            }
        }
    }
    if let (Some(props), Some(obj)) = (schema.get("properties").and_then(Value::as_object), value.as_object()) {
        for (k, sub) in props {
            if let Some(v) = obj.get(k) {
                conforms(v, sub, root).map_err(|e| format!("{k}: {e}"))?;
            }
        }
        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
            if let Some(extra) = obj.keys().find(|k| !props.contains_key(*k)) {
                return Err(format!("unexpected key {extra}"));
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), value.as_array()) {
        for v in arr {
            conforms(v, items, root)?;
        }
    }
    Ok(())
}

fn assert_report(o: &Output) -> Value {
    let v = json(o);
    let root = schema();
    conforms(&v, &root, &root).unwrap();
    let command = v["command"].as_str().unwrap();
    conforms(&v["payload"], &root["$defs"][command], &root).unwrap();
    let record = ReportRecord::from_json(&stdout(o)).unwrap();
    assert_eq!(record.to_json().unwrap() + "\n", stdout(o), "report re-serializes byte for byte");
    v
}

#[test]
fn count_all_agrees() {
    let o = run(&["count", "22", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let v = assert_report(&o);
    let values: Vec<u64> = v["payload"]["values"].as_array().unwrap().iter().map(|r| r["value"].as_u64().unwrap()).collect();
    assert_eq!(values, vec![40; 5]);
    assert_eq!(v["payload"]["consistent"], true);
}

#[test]
fn count_single_methods() {
    let v = json(&run(&["count", "0", "--method", "brute"]));
    assert_eq!(v["payload"]["values"][0]["value"], 0);
    let v = json(&run(&["count", "20", "--method", "binomial"]));
    assert_eq!(v["payload"]["values"][0]["value"], 33);
    assert_eq!(run(&["count", "20", "--method", "guess"]).status.code(), Some(2));
    assert_eq!(run(&["count", "-3"]).status.code(), Some(2));
}

#[test]
fn decompose_exact_output() {
    assert_eq!(stdout(&run(&["decompose", "13", "4", "3"])), "{\"mu\":[5,2,1],\"tau\":[1,0,1]}\n");
    assert_eq!(stdout(&run(&["decompose", "1", "1", "1"])), "{\"mu\":[1,1,1],\"tau\":[0,0,0]}\n");
    assert_eq!(stdout(&run(&["decompose", "11,5,2"])), "{\"mu\":[2,2,2],\"tau\":[1,1,0]}\n");
    assert_eq!(run(&["decompose", "1", "2", "3"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "3", "3", "0"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "x"]).status.code(), Some(2));
}

#[test]
fn hstar_and_residues() {
    let v = assert_report(&run(&["hstar"]));
    assert_eq!(v["payload"]["total"], 36);
    let v = assert_report(&run(&["residues", "7"]));
    assert_eq!(v["payload"]["residues"], serde_json::json!([0, 1, 2, 9, 13, 16, 26, 29, 33, 40, 41]));
    assert_eq!(v["payload"]["unwitnessed"], serde_json::json!([9, 33]));
    let v = assert_report(&run(&["residues", "5"]));
    assert_eq!(v["payload"]["residues"], serde_json::json!([0, 1, 2, 8, 11, 19, 22, 28, 29]));
    assert_eq!(run(&["residues", "9"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "5", "300"]);
    assert_eq!(o.status.code(), Some(0));
    assert_report(&o);
    let o = run(&["verify", "7", "420"]);
    assert_eq!(o.status.code(), Some(0));
    let v = assert_report(&o);
    assert_eq!(v["payload"]["unwitnessed"], serde_json::json!([9, 33]));
    assert!(v["notes"][0].as_str().unwrap().contains("{9, 33}"));
    assert_eq!(run(&["verify", "6", "100"]).status.code(), Some(2));
}

#[test]
fn histogram_reports() {
    let v = assert_report(&run(&["histogram", "22", "5"]));
    assert_eq!(v["payload"]["counts"], serde_json::json!([8, 8, 8, 8, 8]));
    let v = assert_report(&run(&["histogram", "9", "7"]));
    assert_eq!(v["payload"]["counts"], serde_json::json!([1, 0, 1, 2, 1, 1, 1]));
    assert_eq!(v["payload"]["uniform"], false);
    assert_eq!(v["payload"]["divisible"], true);
    let v = assert_report(&run(&["histogram", "38", "5", "--crank", "ehrhart"]));
    assert_eq!(v["payload"]["uniform"], true);
    assert_eq!(run(&["histogram", "10", "5", "--crank", "ehrhart"]).status.code(), Some(2));
}

#[test]
fn cycles_csv_and_json() {
    let o = run(&["cycles", "22", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers, ["cycle_index", "position", "lambda1", "lambda2", "lambda3", "crank"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 40);
    let mut lens = std::collections::BTreeMap::<String, usize>::new();
    for r in &rows {
        *lens.entry(r[0].to_string()).or_default() += 1;
    }
    let mut lens: Vec<usize> = lens.into_values().collect();
    lens.sort();
    assert_eq!(lens, vec![10, 10, 20]);

    let v = assert_report(&run(&["cycles", "8", "5", "--format", "json"]));
    assert_eq!(v["payload"]["lengths"], serde_json::json!([5]));
    let v = assert_report(&run(&["cycles", "22", "5", "--format", "json"]));
    assert_eq!(v["payload"]["row_permutation"], "(1)(2 3 5)(4 7 6)");

    let o = run(&["cycles", "38", "5"]);
    let rows: Vec<csv::StringRecord> =
        csv::Reader::from_reader(o.stdout.as_slice()).records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 120);
    let mut per = std::collections::BTreeMap::<String, usize>::new();
    for r in &rows {
        *per.entry(r[0].to_string()).or_default() += 1;
    }
    assert!(per.values().all(|l| l % 5 == 0));

    assert_eq!(run(&["cycles", "10", "5"]).status.code(), Some(2));
}

#[test]
fn rectangle_reports() {
    let v = assert_report(&run(&["rectangle", "5", "1", "2m-2"]));
    assert_eq!((v["payload"]["width"].as_u64(), v["payload"]["height"].as_u64()), (Some(20), Some(6)));
    assert_eq!(v["payload"]["cover_check"], "ok");
    let v = assert_report(&run(&["rectangle", "5", "0", "2m-2"]));
    assert_eq!((v["payload"]["width"].as_u64(), v["payload"]["height"].as_u64()), (Some(5), Some(1)));
    let o = run(&["rectangle", "5", "0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = assert_report(&o);
    assert_eq!(v["payload"]["vacuous"], true);
    assert_eq!((v["payload"]["width"].as_u64(), v["payload"]["height"].as_u64()), (Some(0), Some(0)));
    let v = assert_report(&run(&["rectangle", "11", "2", "-(2m+1)", "--labeled"]));
    assert_eq!(v["payload"]["cover_check"], "ok");
    assert_eq!(run(&["rectangle", "5", "1", "3"]).status.code(), Some(2));
    assert_eq!(run(&["rectangle", "7", "1", "0"]).status.code(), Some(2));
}

#[test]
fn rectangle_csv_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cells.csv");
    let o = run(&["rectangle", "5", "1", "2m-2", "--csv", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 121);
    assert!(body.starts_with("x,y,lambda1,lambda2,lambda3,crank"));
}

#[test]
fn tile_svg_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    let o = run(&["tile", "20", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = assert_report(&o);
    let mut sizes: Vec<u64> = v["payload"]["groups"].as_array().unwrap().iter().map(|g| g["size"].as_u64().unwrap()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![3, 6, 6, 6, 6, 6]);
    run(&["tile", "20", b.to_str().unwrap()]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let v = json(&run(&["tile", "18", a.to_str().unwrap()]));
    assert_eq!(v["payload"]["points"], 27);
    assert_eq!(std::fs::read_to_string(&a).unwrap().matches("<circle").count(), 27);
    let v = json(&run(&["tile", "3", a.to_str().unwrap()]));
    assert_eq!(v["payload"]["points"], 1);

    assert_eq!(run(&["tile", "2", a.to_str().unwrap()]).status.code(), Some(2));
    let bad = dir.path().join("missing/dir/x.svg");
    assert_eq!(run(&["tile", "20", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn outputs_do_not_depend_on_worker_count() {
    let one = Command::new(env!("CARGO_BIN_EXE_p3crank"))
        .args(["verify", "11", "700"])
        .env("P3CRANK_WORKERS", "1")
        .output()
        .unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_p3crank"))
        .args(["verify", "11", "700"])
        .env("P3CRANK_WORKERS", "8")
        .output()
        .unwrap();
    assert_eq!(one.stdout, many.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_p3crank"))
        .args(["hstar"])
        .env("P3CRANK_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn fuzz_seed_reports_round_trip() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/parse_report");
    for entry in std::fs::read_dir(dir).unwrap() {
        let body = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let record = ReportRecord::from_json(&body).unwrap();
        assert_eq!(ReportRecord::from_json(&record.to_json().unwrap()).unwrap(), record);
    }
}
