#![no_main]

use libfuzzer_sys::fuzz_target;
use p6c4::reductions::{parse_dimacs, to_dimacs};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(i) = parse_dimacs(text) {
        assert_eq!(parse_dimacs(&to_dimacs(&i)).unwrap(), i);
    }
});
