#![no_main]

use k3curves::registry::{evaluate, Recipe};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(recipe) = serde_json::from_slice::<Recipe>(data) {
        let _ = evaluate(&recipe);
    }
});
