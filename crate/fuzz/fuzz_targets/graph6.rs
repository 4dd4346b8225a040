#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // Anything that parses must re-encode to a string that parses back to
    // the same graph.
    if let Ok(g) = p6c4::graph6::from_graph6_bytes(data) {
        let text = p6c4::to_graph6(&g);
        assert_eq!(p6c4::from_graph6(&text).unwrap(), g);
    }
});
