#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let _ = nilsplit::format::parse_lie_generators(data);
});
