#![no_main]

use k3curves::registry::{emit, run_claims, Format, Manifest};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // a manifest that validates must also run and render
    if let Ok(m) = Manifest::from_json_str(text) {
        let report = run_claims(&m, None).expect("unfiltered run cannot fail");
        let _ = emit(&report, Format::Text);
        let _ = emit(&report, Format::Json);
    }
});
