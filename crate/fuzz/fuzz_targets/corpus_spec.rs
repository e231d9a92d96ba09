#![no_main]

use libfuzzer_sys::fuzz_target;
use matchgame::corpus::parse_corpora;

// Parsing only; expanding a valid spec can legitimately take minutes.
fuzz_target!(|data: &[u8]| {
    let Ok(spec) = std::str::from_utf8(data) else { return };
    let _ = parse_corpora(spec, 0);
});
