#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok((u, v)) = nilsplit::format::parse_flag_pair(data) {
        let _ = nilsplit::nilpotent::check_complementary_flags(&u, &v);
    }
});
