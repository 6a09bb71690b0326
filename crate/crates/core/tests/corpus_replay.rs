//! Replays the checked-in fuzz seeds through the same assertions the fuzz targets make.

use std::path::PathBuf;

use p3crank::cranks::CaseLabel;
use p3crank::ehrhart::{box_compose, box_decompose};
use p3crank::Partition3;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| String::from_utf8_lossy(&std::fs::read(e.unwrap().path()).unwrap()).into_owned())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn partition_seeds() {
    let mut accepted = 0;
    for s in seeds("parse_partition") {
        if let Ok(lambda) = s.parse::<Partition3>() {
            accepted += 1;
            assert_eq!(lambda.to_string().parse::<Partition3>().unwrap(), lambda);
            let d = box_decompose(&lambda);
            assert_eq!(box_compose(&d.remainder, d.quotient).unwrap(), lambda);
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn case_label_seeds() {
    for s in seeds("parse_case_label") {
        let case = s.parse::<CaseLabel>().unwrap_or_else(|e| panic!("{s:?}: {e}"));
        assert_eq!(case.as_str().parse::<CaseLabel>().unwrap(), case);
    }
}
