#![no_main]

use libfuzzer_sys::fuzz_target;
use p3crank_cli::ReportRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(record) = ReportRecord::from_json(s) {
        let again = record.to_json().unwrap();
        assert_eq!(ReportRecord::from_json(&again).unwrap(), record);
    }
});
