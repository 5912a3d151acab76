#![no_main]
use libfuzzer_sys::fuzz_target;
use nilsplit::format::{matrix_to_json, parse_matrix};

fuzz_target!(|data: &str| {
    if let Ok(m) = parse_matrix(data) {
        let text = matrix_to_json(&m).to_string();
        assert_eq!(parse_matrix(&text).unwrap(), m);
    }
});
