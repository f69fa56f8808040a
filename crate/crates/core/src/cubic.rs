//! Real roots of the depressed cubic `v³ − κ·v − p = 0`.
//!
//! This is the inverse of the Legendre map `p = v³ − κ·v`. Three real roots
//! use the trigonometric form, a single real root uses Cardano with the
//! cancellation-free pairing `v = u + κ/(3u)`, and the double-root case at the
//! cusp momenta is resolved in closed form. Simple roots get a guarded Newton
//! polish.

use std::f64::consts::PI;

/// A real root together with its multiplicity (1 or 2; a triple root only
/// occurs for `κ = p = 0`, reported as 3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    pub multiplicity: u8,
}

impl Root {
    fn simple(value: f64) -> Self {
        Root {
            value,
            multiplicity: 1,
        }
    }
}

/// Relative width of the band around a vanishing discriminant that is
/// treated as an exact double root.
const DOUBLE_ROOT_RTOL: f64 = 1e-12;

/// Classification of `v³ − κ·v = p` by its discriminant `4κ³ − 27p²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootCount {
    One,
    Double,
    Three,
}

pub fn classify(kappa: f64, p: f64) -> RootCount {
    // monotone map
    if kappa <= 0.0 {
        return RootCount::One;
    }
    let a = 4.0 * kappa * kappa * kappa;
    let b = 27.0 * p * p;
    let disc = a - b;
    if disc.abs() <= DOUBLE_ROOT_RTOL * (a + b) {
        RootCount::Double
    } else if disc > 0.0 {
        RootCount::Three
    } else {
        RootCount::One
    }
}

/// All distinct real roots of `v³ − κ·v = p`, ascending.
pub fn solve(kappa: f64, p: f64) -> Vec<Root> {
    if kappa == 0.0 && p == 0.0 {
        return vec![Root {
            value: 0.0,
            multiplicity: 3,
        }];
    }
    match classify(kappa, p) {
        RootCount::One => vec![Root::simple(polish(kappa, p, single_root(kappa, p)))],
        RootCount::Double => {
            let r = (kappa / 3.0).sqrt();
            if p > 0.0 {
                vec![
                    Root {
                        value: -r,
                        multiplicity: 2,
                    },
                    Root::simple(polish(kappa, p, 2.0 * r)),
                ]
            } else {
                vec![
                    Root::simple(polish(kappa, p, -2.0 * r)),
                    Root {
                        value: r,
                        multiplicity: 2,
                    },
                ]
            }
        }
        RootCount::Three => {
            let m = 2.0 * (kappa / 3.0).sqrt();
            // cos(3θ) = 4p / m³
            let c = (4.0 * p / (m * m * m)).clamp(-1.0, 1.0);
            let theta = c.acos() / 3.0;
            let mut roots = [
                m * (theta + 2.0 * PI / 3.0).cos(),
                m * (theta - 2.0 * PI / 3.0).cos(),
                m * theta.cos(),
            ];
            for r in roots.iter_mut() {
                *r = polish(kappa, p, *r);
            }
            roots.sort_by(|a, b| a.total_cmp(b));
            roots.iter().map(|&v| Root::simple(v)).collect()
        }
    }
}

fn single_root(kappa: f64, p: f64) -> f64 {
    // u³ = p/2 ± sqrt(p²/4 − κ³/27), sign chosen to match p
    let half = 0.5 * p;
    let rad = half * half - kappa * kappa * kappa / 27.0;
    let s = rad.max(0.0).sqrt();
    let u3 = if half >= 0.0 { half + s } else { half - s };
    let u = u3.cbrt();
    if u == 0.0 {
        return 0.0;
    }
    u + kappa / (3.0 * u)
}

/// Newton steps on `v³ − κv − p`, accepted only while the residual shrinks.
fn polish(kappa: f64, p: f64, mut v: f64) -> f64 {
    let residual = |v: f64| v * v * v - kappa * v - p;
    let mut r = residual(v);
    for _ in 0..4 {
        if r == 0.0 {
            break;
        }
        let d = 3.0 * v * v - kappa;
        if d == 0.0 {
            break;
        }
        let next = v - r / d;
        let rn = residual(next);
        if rn.abs() >= r.abs() {
            break;
        }
        v = next;
        r = rn;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(kappa: f64, p: f64, v: f64) -> f64 {
        v * v * v - kappa * v - p
    }

    #[test]
    fn three_roots_at_zero_momentum() {
        let roots = solve(1.0, 0.0);
        let vals: Vec<f64> = roots.iter().map(|r| r.value).collect();
        assert_eq!(vals.len(), 3);
        assert!((vals[0] + 1.0).abs() < 1e-15);
        assert!(vals[1].abs() < 1e-15);
        assert!((vals[2] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn double_root_at_cusp() {
        let p2 = 2.0 / (3.0 * 3f64.sqrt());
        let roots = solve(1.0, p2);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].multiplicity, 2);
        assert!((roots[0].value + 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((roots[1].value - 2.0 / 3f64.sqrt()).abs() < 1e-15);

        let roots = solve(1.0, -p2);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[1].multiplicity, 2);
        assert!((roots[0].value + 2.0 / 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn convex_regime_is_single_root() {
        for &(k, p) in &[
            (-1.0, 0.0),
            (-2.0, 5.0),
            (-0.5, -3.0),
            (0.0, 8.0),
            (0.0, -1e-9),
        ] {
            let roots = solve(k, p);
            assert_eq!(roots.len(), 1);
            assert!(residual(k, p, roots[0].value).abs() < 1e-12);
        }
        assert_eq!(solve(0.0, 0.0)[0].multiplicity, 3);
    }

    #[test]
    fn large_momenta_stay_accurate() {
        for &p in &[1e3, -1e3, 1e6, -1e6, 1e-300] {
            let v = solve(1.0, p).last().unwrap().value;
            assert!(residual(1.0, p, v).abs() <= 1e-12 * p.abs().max(1.0));
        }
    }
}
