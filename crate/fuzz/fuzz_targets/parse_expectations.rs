#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(e) = qgor_tool::parse_expectations(text) {
        let again = serde_json::to_string(&e).unwrap();
        assert_eq!(qgor_tool::parse_expectations(&again).unwrap(), e);
    }
});
