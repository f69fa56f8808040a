//! Replays the checked-in fuzz seeds on stable so parser regressions show up
//! in `cargo test` without a fuzzing toolchain.

use std::fs;
use std::path::PathBuf;

use lft_mech::conjugate::{
    biconjugate, conjugate_bruteforce, conjugate_fast, effective_domain, SlopeGrid,
};
use lft_mech::io::{parse_coefficients, parse_grid_spec, parse_sampled_csv};
use lft_mech::PolynomialLagrangian;

fn corpus(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(PathBuf, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .filter_map(|p| {
            let bytes = fs::read(&p).unwrap();
            String::from_utf8(bytes).ok().map(|s| (p, s))
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "empty corpus {}", dir.display());
    out
}

#[test]
fn sampled_csv_seeds() {
    let mut accepted = 0;
    for (path, text) in corpus("parse_sampled_csv") {
        if let Ok(f) = parse_sampled_csv(&text) {
            assert!(
                f.abscissae().windows(2).all(|w| w[0] < w[1]),
                "{}",
                path.display()
            );
            accepted += 1;
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn grid_spec_seeds() {
    for (path, text) in corpus("parse_grid_spec") {
        if let Ok(g) = parse_grid_spec(&text) {
            let xs = g.values();
            assert_eq!(xs.len(), g.points, "{}", path.display());
            assert!(xs.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn coefficient_seeds() {
    for (_, text) in corpus("parse_coefficients") {
        if let Ok(c) = parse_coefficients(&text) {
            let poly = PolynomialLagrangian::new(c).unwrap();
            let _ = effective_domain(&poly);
        }
    }
}

#[test]
fn conjugate_pipeline_seeds() {
    let g = SlopeGrid::linspace(-8.0, 8.0, 33).unwrap();
    for (path, text) in corpus("conjugate_pipeline") {
        let Ok(f) = parse_sampled_csv(&text) else {
            continue;
        };
        let (a, b) = (conjugate_fast(&f, &g), conjugate_bruteforce(&f, &g));
        let scale = f
            .abscissae()
            .iter()
            .chain(f.values())
            .fold(1.0f64, |m, v| m.max(v.abs()));
        if scale < 1e6 {
            for (x, y) in a.values.iter().zip(&b.values) {
                assert!((x - y).abs() <= 1e-9 * scale, "{}", path.display());
            }
        }
        assert_eq!(biconjugate(&f).len(), f.len());
    }
}
