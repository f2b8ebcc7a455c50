#![no_main]

use k3curves::surfaces::{aut_dim, SurfaceKind};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(kind) = text.parse::<SurfaceKind>() {
        let _ = aut_dim(kind);
    }
});
