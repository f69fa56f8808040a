#![no_main]
use lft_mech::conjugate::effective_domain;
use lft_mech::io::parse_coefficients;
use lft_mech::PolynomialLagrangian;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(coeffs) = parse_coefficients(s) {
            let poly =
                PolynomialLagrangian::new(coeffs).expect("parser only yields finite coefficients");
            let _ = effective_domain(&poly);
            let _ = poly.eval(0.5);
        }
    }
});
