#![no_main]

use libfuzzer_sys::fuzz_target;
use p6c4::Graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = Graph::from_edge_list_json(text) {
        assert_eq!(Graph::from_edge_list_json(&g.to_edge_list_json()).unwrap(), g);
    }
});
