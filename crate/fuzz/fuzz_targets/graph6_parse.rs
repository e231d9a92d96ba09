#![no_main]

use libfuzzer_sys::fuzz_target;
use matchgame::graph6::{parse_graph6_bytes, parse_graph6_lines};
use matchgame::{canonical_certificate, emit_graph6, parse_graph6};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6_bytes(data) {
        // anything accepted re-emits to an equal graph
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).expect("emitted graph6 parses");
        assert_eq!(back, g);
        assert_eq!(canonical_certificate(&back), canonical_certificate(&g));
    }
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_graph6_lines(text);
    }
});
