#![no_main]

use libfuzzer_sys::fuzz_target;
use p6c4::enumerate::Checkpoint;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cp) = Checkpoint::parse(text) {
        let _ = cp.frontier_graphs();
        let _ = cp.emitted_graphs();
    }
});
