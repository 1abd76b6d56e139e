#![no_main]

use hypersub::subdivision::{Subdivision, VerifyOptions};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(subdivision) = Subdivision::from_json_str(text) else {
        return;
    };

    // Encode/decode must be the identity on accepted subdivisions.
    let reencoded = subdivision.to_json_string();
    let reparsed = Subdivision::from_json_str(&reencoded).expect("own encoding parses");
    assert_eq!(reparsed, subdivision);

    // Small instances can afford the full validation and verification paths;
    // a cell list that validates as canonical must verify cleanly.
    if subdivision.d() <= 4 && subdivision.r() <= 4 && subdivision.cells().len() <= 64 {
        let canonical = subdivision.validate_canonical().is_ok();
        let report = subdivision.verify(&VerifyOptions {
            samples: 8,
            seed: 0,
            ..VerifyOptions::default()
        });
        if canonical {
            assert!(report.passed(), "canonical cells failed verification:\n{report}");
        }
    }
});
