#![no_main]

use libfuzzer_sys::fuzz_target;
use p6c4::coloring::Catalog;

// Input layout: graph6 lines, a NUL byte, then the manifest JSON.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Some((g6, manifest)) = text.split_once('\0') else { return };
    if let Ok(c) = Catalog::from_texts(g6, manifest) {
        let (g6, manifest) = c.to_texts();
        let back = Catalog::from_texts(&g6, &manifest).unwrap();
        assert_eq!(back.entries(), c.entries());
    }
});
