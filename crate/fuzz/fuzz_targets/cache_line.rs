#![no_main]

use libfuzzer_sys::fuzz_target;
use matchgame_cli::store::CacheEntry;

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else { return };
    if let Ok(entry) = CacheEntry::parse_line(line) {
        let again = CacheEntry::parse_line(&entry.to_line()).expect("formatted line parses");
        assert_eq!(again, entry);
    }
});
