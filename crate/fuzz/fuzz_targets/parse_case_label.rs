#![no_main]

use libfuzzer_sys::fuzz_target;
use p3crank::cranks::CaseLabel;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(case) = s.parse::<CaseLabel>() {
            assert_eq!(case.as_str().parse::<CaseLabel>().unwrap(), case);
        }
    }
});
