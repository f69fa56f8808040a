#![no_main]
use lft_mech::io::parse_sampled_csv;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(f) = parse_sampled_csv(s) {
            assert!(f.len() >= 2);
            assert!(f.abscissae().windows(2).all(|w| w[0] < w[1]));
        }
    }
});
