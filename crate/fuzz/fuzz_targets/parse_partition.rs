#![no_main]

use libfuzzer_sys::fuzz_target;
use p3crank::ehrhart::{box_compose, box_decompose};
use p3crank::Partition3;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(lambda) = s.parse::<Partition3>() else {
        return;
    };
    // accepted input must print back to something that parses to the same partition
    assert_eq!(lambda.to_string().parse::<Partition3>().unwrap(), lambda);
    if lambda.height() < 1 << 40 {
        let d = box_decompose(&lambda);
        assert_eq!(box_compose(&d.remainder, d.quotient).unwrap(), lambda);
    }
});
