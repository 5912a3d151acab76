#![no_main]
use libfuzzer_sys::fuzz_target;
use nilsplit::Rat;

fuzz_target!(|data: &str| {
    if let Ok(r) = data.parse::<Rat>() {
        assert_eq!(r.to_string().parse::<Rat>().unwrap(), r);
    }
});
