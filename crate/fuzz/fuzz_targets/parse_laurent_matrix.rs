#![no_main]
use libfuzzer_sys::fuzz_target;
use nilsplit::format::{laurent_matrix_to_json, parse_laurent_matrix};

fuzz_target!(|data: &str| {
    if let Ok(t) = parse_laurent_matrix(data) {
        let again = parse_laurent_matrix(&laurent_matrix_to_json(&t).to_string()).unwrap();
        assert_eq!(again, t);
    }
});
