#![no_main]

use libfuzzer_sys::fuzz_target;
use p6c4::reductions::{parse_nae_json, to_nae_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(i) = parse_nae_json(text) {
        assert_eq!(parse_nae_json(&to_nae_json(&i).unwrap()).unwrap(), i);
    }
});
