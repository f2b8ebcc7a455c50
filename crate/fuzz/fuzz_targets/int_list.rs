#![no_main]

use k3curves::parse::parse_int_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(list) = parse_int_list(&text) {
        // round trip through the canonical rendering
        let rendered: Vec<String> = list.iter().map(u64::to_string).collect();
        assert_eq!(parse_int_list(&rendered.join(",")).unwrap(), list);
    }
});
