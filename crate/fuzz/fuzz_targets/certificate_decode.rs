#![no_main]

use libfuzzer_sys::fuzz_target;
use matchgame::{canonical_certificate, Certificate};

fuzz_target!(|data: &[u8]| {
    let Some(cert) = Certificate::from_bytes(data.to_vec()) else { return };
    if let Some(g) = cert.to_graph() {
        assert_eq!(canonical_certificate(&g), cert);
    }
});
