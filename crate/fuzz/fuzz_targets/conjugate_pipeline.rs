#![no_main]
use lft_mech::conjugate::{
    biconjugate, conjugate_bruteforce, conjugate_fast, flat_regions, SlopeGrid,
};
use lft_mech::io::parse_sampled_csv;
use libfuzzer_sys::fuzz_target;

// Parsed input through every transform; the fast path must agree with the
// exhaustive one wherever the arithmetic stays in a sane range.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(f) = parse_sampled_csv(s) else { return };
    if f.len() > 512 {
        return;
    }
    let g = SlopeGrid::linspace(-8.0, 8.0, 33).unwrap();
    let fast = conjugate_fast(&f, &g);
    let brute = conjugate_bruteforce(&f, &g);
    let scale = f
        .abscissae()
        .iter()
        .chain(f.values())
        .fold(1.0f64, |m, v| m.max(v.abs()));
    if scale < 1e6 {
        for (a, b) in fast.values.iter().zip(&brute.values) {
            assert!((a - b).abs() <= 1e-9 * scale, "{a} vs {b}");
        }
    }
    let h = biconjugate(&f);
    assert_eq!(h.len(), f.len());
    let _ = flat_regions(&f);
});
