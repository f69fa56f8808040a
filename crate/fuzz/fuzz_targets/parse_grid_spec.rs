#![no_main]
use lft_mech::io::parse_grid_spec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = parse_grid_spec(s) {
            // cap the allocation; the grid itself is valid either way
            if g.points <= 1 << 16 {
                let xs = g.values();
                assert_eq!(xs.len(), g.points);
                assert_eq!(xs[0], g.min);
                assert_eq!(xs[xs.len() - 1], g.max);
            }
        }
    }
});
