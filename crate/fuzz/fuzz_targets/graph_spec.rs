#![no_main]

use libfuzzer_sys::fuzz_target;
use matchgame::construct::parse_graph_spec;
use matchgame::MAX_VERTICES;

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph_spec(spec) {
        assert!(g.vertex_count() <= MAX_VERTICES);
    }
});
