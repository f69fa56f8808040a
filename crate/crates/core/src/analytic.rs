//! Closed forms for the quartic model `L(v) = v⁴/4 − κ·v²/2`.
//!
//! The free functions without a `ModelParams` argument are the `κ = 1`
//! formulas. Methods on [`ModelParams`] extend them to any `κ > 0` through
//! the exact rescaling `v = √κ·u`, `p = κ^{3/2}·q`, `L = κ²·L̃(u)`, and fall
//! back to the ordinary Legendre transform when `κ ≤ 0` (convex regime).

use num_complex::Complex64;

use crate::cubic::{self, Root};
use crate::error::AnalyticError;

/// `2/(3√3)`, the upper cusp momentum of the `κ = 1` model.
pub fn unit_cusp_momentum() -> f64 {
    2.0 / (3.0 * 3f64.sqrt())
}

/// Below this distance of `27p² − 4` from zero the radicals are replaced by
/// the polished cubic root.
const NEAR_CUSP_RADICAND: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    kappa: f64,
}

impl ModelParams {
    pub const UNIT: ModelParams = ModelParams { kappa: 1.0 };

    pub fn new(kappa: f64) -> Result<Self, AnalyticError> {
        if !kappa.is_finite() {
            return Err(AnalyticError::NonFiniteKappa(kappa));
        }
        Ok(ModelParams { kappa })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `κ ≤ 0`: the Legendre map is monotone and the ordinary transform works.
    pub fn is_convex_regime(&self) -> bool {
        self.kappa <= 0.0
    }

    fn require_nonconvex(&self) -> Result<(), AnalyticError> {
        if self.is_convex_regime() {
            Err(AnalyticError::ConvexRegime(self.kappa))
        } else {
            Ok(())
        }
    }

    // Scale factors of the rescaling to the unit model.
    fn velocity_scale(&self) -> f64 {
        self.kappa.sqrt()
    }

    fn momentum_scale(&self) -> f64 {
        self.kappa * self.kappa.sqrt()
    }

    fn energy_scale(&self) -> f64 {
        self.kappa * self.kappa
    }

    /// Supporting-line tangent point for slope `p`.
    ///
    /// `p ≥ 0` selects the right tangent point, `p < 0` the left one.
    pub fn tangent_point(&self, p: f64) -> TangentPoint {
        if self.is_convex_regime() {
            let v = cubic::solve(self.kappa, p)[0].value;
            return TangentPoint::at(p, v, lagrangian_eval(v, self), 0.0);
        }
        let q = p / self.momentum_scale();
        let unit = if q >= 0.0 {
            right_unchecked(q)
        } else {
            left_unchecked(q)
        };
        TangentPoint {
            momentum: p,
            velocity: self.velocity_scale() * unit.velocity,
            intercept: self.energy_scale() * unit.intercept,
            imaginary_residue: self.velocity_scale() * unit.imaginary_residue,
        }
    }

    /// Single-valued Hamiltonian `H(p) = sup_v [p·v − L(v)]`.
    pub fn hamiltonian(&self, p: f64) -> f64 {
        -self.tangent_point(p).intercept
    }

    /// Subdifferential of the Hamiltonian: the kink at `p = 0` spans the
    /// whole flat segment `[−√κ, √κ]` of the convex hull.
    pub fn hamiltonian_subgradient(&self, p: f64) -> VelocitySet {
        if p == 0.0 && !self.is_convex_regime() {
            let w = self.velocity_scale();
            VelocitySet::Interval { lo: -w, hi: w }
        } else {
            VelocitySet::Finite(vec![self.tangent_point(p).velocity])
        }
    }

    /// Convex hull of the Lagrangian: flat at `−κ²/4` on `|v| ≤ √κ`.
    pub fn revised_lagrangian(&self, v: f64) -> f64 {
        if self.is_convex_regime() {
            return lagrangian_eval(v, self);
        }
        let w = self.velocity_scale();
        if v.abs() > w {
            lagrangian_eval(v, self)
        } else {
            -0.25 * self.energy_scale()
        }
    }

    /// Derivative of the hull: zero across the flat segment, the Legendre map
    /// outside it.
    pub fn momentum_of_velocity_revised(&self, v: f64) -> f64 {
        if self.is_convex_regime() || v.abs() > self.velocity_scale() {
            legendre_map(v, self)
        } else {
            0.0
        }
    }

    /// Minimum of the single-valued Hamiltonian.
    pub fn vacuum_lft(&self) -> VacuumState {
        VacuumState {
            energy: self.hamiltonian(0.0),
            momenta: vec![0.0],
            velocity_set: self.hamiltonian_subgradient(0.0),
        }
    }

    /// Minimum of the multi-valued Hamiltonian, reached at the two cusps.
    ///
    /// `momenta[i]` pairs with the `i`-th velocity: the cusp at `+p₂` sits on
    /// the double root `−√(κ/3)` and vice versa.
    pub fn vacuum_cusp(&self) -> Result<VacuumState, AnalyticError> {
        let (p1, p2) = cusp_momenta(self)?;
        let mut momenta = Vec::with_capacity(2);
        let mut velocities = Vec::with_capacity(2);
        for p in [p1, p2] {
            let double = invert_legendre_map(p, self)
                .into_iter()
                .find(|r| r.multiplicity == 2)
                .expect("cusp momentum has a double root");
            momenta.push(p);
            velocities.push(double.value);
        }
        let energy = multivalued_hamiltonian(velocities[0], self)
            .min(multivalued_hamiltonian(velocities[1], self));
        Ok(VacuumState {
            energy,
            momenta,
            velocity_set: VelocitySet::Finite(velocities),
        })
    }
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams::UNIT
    }
}

/// Polynomial Lagrangian `L(v) = Σ cᵢ vⁱ`, trailing zero coefficients trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialLagrangian {
    coeffs: Vec<f64>,
}

impl PolynomialLagrangian {
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self, AnalyticError> {
        if let Some(c) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(AnalyticError::NonFiniteCoefficient(*c));
        }
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Ok(PolynomialLagrangian { coeffs })
    }

    /// The quartic model as a polynomial.
    pub fn quartic(params: &ModelParams) -> Self {
        PolynomialLagrangian {
            coeffs: vec![0.0, 0.0, -0.5 * params.kappa(), 0.0, 0.25],
        }
    }

    /// `½v² − ⅓v³ + (1/17)v⁴`, a non-symmetric non-convex example.
    pub fn extended_example() -> Self {
        PolynomialLagrangian {
            coeffs: vec![0.0, 0.0, 0.5, -1.0 / 3.0, 1.0 / 17.0],
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    pub fn eval(&self, v: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * v + c)
    }

    /// Coercive polynomials (even degree ≥ 2, positive leading term) have a
    /// conjugate that is finite for every momentum.
    pub fn is_coercive(&self) -> bool {
        let d = self.degree();
        d >= 2 && d.is_multiple_of(2) && self.leading() > 0.0
    }

    pub fn conjugate_may_be_unbounded(&self) -> bool {
        !self.is_coercive()
    }
}

/// Tangent point of the supporting line of slope `momentum`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentPoint {
    pub momentum: f64,
    pub velocity: f64,
    /// `Y = L(v) − p·v`; the Hamiltonian is `−Y`.
    pub intercept: f64,
    /// Magnitude of the imaginary part discarded from the radical formula.
    pub imaginary_residue: f64,
}

impl TangentPoint {
    fn at(momentum: f64, velocity: f64, lagrangian: f64, imaginary_residue: f64) -> Self {
        TangentPoint {
            momentum,
            velocity,
            intercept: lagrangian - momentum * velocity,
            imaginary_residue,
        }
    }

    pub fn hamiltonian(&self) -> f64 {
        -self.intercept
    }
}

/// Either a finite set of velocities or a closed interval of them.
#[derive(Debug, Clone, PartialEq)]
pub enum VelocitySet {
    Finite(Vec<f64>),
    Interval { lo: f64, hi: f64 },
}

impl VelocitySet {
    pub fn contains(&self, v: f64) -> bool {
        match self {
            VelocitySet::Finite(vs) => vs.contains(&v),
            VelocitySet::Interval { lo, hi } => *lo <= v && v <= *hi,
        }
    }

    pub fn is_interval(&self) -> bool {
        matches!(self, VelocitySet::Interval { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VacuumState {
    pub energy: f64,
    pub momenta: Vec<f64>,
    pub velocity_set: VelocitySet,
}

pub fn lagrangian_eval(v: f64, params: &ModelParams) -> f64 {
    let v2 = v * v;
    0.25 * v2 * v2 - 0.5 * params.kappa * v2
}

/// `p = ∂L/∂v = v³ − κ·v`.
pub fn legendre_map(v: f64, params: &ModelParams) -> f64 {
    v * v * v - params.kappa * v
}

/// Every real velocity with `legendre_map(v) = p`, ascending, double roots
/// reported once with multiplicity 2.
pub fn invert_legendre_map(p: f64, params: &ModelParams) -> Vec<Root> {
    cubic::solve(params.kappa, p)
}

/// `(p₁, p₂) = (−2κ^{3/2}/(3√3), 2κ^{3/2}/(3√3))`, the extrema of the
/// Legendre map.
pub fn cusp_momenta(params: &ModelParams) -> Result<(f64, f64), AnalyticError> {
    params.require_nonconvex()?;
    let p2 = unit_cusp_momentum() * params.momentum_scale();
    Ok((-p2, p2))
}

/// The naive Hamiltonian `p·v − L(v)` with `p = v³ − κv`, parameterized by
/// velocity: `(3/4)v⁴ − (κ/2)v²`.
pub fn multivalued_hamiltonian(v: f64, params: &ModelParams) -> f64 {
    let v2 = v * v;
    0.75 * v2 * v2 - 0.5 * params.kappa * v2
}

fn principal_cbrt(z: Complex64) -> Complex64 {
    // normalize -0.0 so the negative real axis maps to arg = +π
    let z = Complex64::new(z.re, z.im + 0.0);
    let (r, theta) = z.to_polar();
    Complex64::from_polar(r.cbrt(), theta / 3.0)
}

fn near_cusp(p: f64) -> bool {
    (27.0 * p * p - 4.0).abs() < NEAR_CUSP_RADICAND
}

fn right_unchecked(p: f64) -> TangentPoint {
    let unit = ModelParams::UNIT;
    if near_cusp(p) {
        let v = cubic::solve(1.0, p).last().unwrap().value;
        return TangentPoint::at(p, v, lagrangian_eval(v, &unit), 0.0);
    }
    let radicand = Complex64::new(27.0 * p * p - 4.0, 0.0).sqrt();
    let z = Complex64::new(9.0 * p, 0.0) + 3f64.sqrt() * radicand;
    let w = principal_cbrt(z);
    let v = (2.0f64 / 3.0).cbrt() / w + w / (2f64.cbrt() * 9f64.cbrt());
    TangentPoint::at(p, v.re, lagrangian_eval(v.re, &unit), v.im.abs())
}

fn left_unchecked(p: f64) -> TangentPoint {
    let unit = ModelParams::UNIT;
    if near_cusp(p) {
        let v = cubic::solve(1.0, p)[0].value;
        return TangentPoint::at(p, v, lagrangian_eval(v, &unit), 0.0);
    }
    let s3 = 3f64.sqrt();
    let radicand = 27.0 * p * p - 4.0;
    let z = if radicand >= 0.0 {
        // 9p + √3·√(27p²−4) cancels for p < 0; use its product with the
        // conjugate surd, which is exactly 12.
        Complex64::new(12.0 / (9.0 * p - s3 * radicand.sqrt()), 0.0)
    } else {
        Complex64::new(9.0 * p, s3 * (-radicand).sqrt())
    };
    let w = principal_cbrt(z);
    let one_plus = Complex64::new(1.0, s3);
    let one_minus = Complex64::new(1.0, -s3);
    let v = -one_plus / (2f64.cbrt() * 2f64.cbrt() * 3f64.cbrt() * w)
        - one_minus * w / (2.0 * 2f64.cbrt() * 9f64.cbrt());
    TangentPoint::at(p, v.re, lagrangian_eval(v.re, &unit), v.im.abs())
}

/// Right tangent point (largest root of `v³ − v = p`) from the radical
/// formula, for `p ≥ 0`.
pub fn tangent_point_right(p: f64) -> Result<TangentPoint, AnalyticError> {
    if p.is_nan() || p < 0.0 {
        return Err(AnalyticError::Domain {
            op: "tangent_point_right",
            p,
        });
    }
    Ok(right_unchecked(p))
}

/// Left tangent point (smallest root of `v³ − v = p`) from the radical
/// formula with complex cube roots, for `p < 0`.
pub fn tangent_point_left(p: f64) -> Result<TangentPoint, AnalyticError> {
    if p.is_nan() || p >= 0.0 {
        return Err(AnalyticError::Domain {
            op: "tangent_point_left",
            p,
        });
    }
    Ok(left_unchecked(p))
}

/// `H(p)` for `κ = 1`: right tangent point for `p ≥ 0`, left for `p < 0`.
pub fn hamiltonian_closed_form(p: f64) -> f64 {
    ModelParams::UNIT.hamiltonian(p)
}

pub fn hamiltonian_subgradient(p: f64) -> VelocitySet {
    ModelParams::UNIT.hamiltonian_subgradient(p)
}

pub fn revised_lagrangian(v: f64) -> f64 {
    ModelParams::UNIT.revised_lagrangian(v)
}

pub fn momentum_of_velocity_revised(v: f64) -> f64 {
    ModelParams::UNIT.momentum_of_velocity_revised(v)
}

pub fn vacuum_lft() -> VacuumState {
    ModelParams::UNIT.vacuum_lft()
}

pub fn vacuum_cusp() -> VacuumState {
    ModelParams::UNIT
        .vacuum_cusp()
        .expect("unit model is non-convex")
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNIT: ModelParams = ModelParams::UNIT;

    /// Bisection on a bracketing interval; independent of the cubic solver.
    fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        let mut flo = f(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let fm = f(mid);
            if (fm < 0.0) == (flo < 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Roots of v³ − v − p by scanning for sign changes on a fine grid.
    fn oracle_roots(p: f64) -> Vec<f64> {
        let f = |v: f64| v * v * v - v - p;
        let n = 20_000;
        let (a, b) = (-5.0, 5.0);
        let h = (b - a) / n as f64;
        let mut out = Vec::new();
        for i in 0..n {
            let x0 = a + i as f64 * h;
            let x1 = x0 + h;
            if f(x0) == 0.0 {
                out.push(x0);
            } else if f(x0) * f(x1) < 0.0 {
                out.push(bisect(f, x0, x1));
            }
        }
        out
    }

    #[test]
    fn lagrangian_values() {
        assert_eq!(lagrangian_eval(0.0, &UNIT), 0.0);
        assert_eq!(lagrangian_eval(1.0, &UNIT), -0.25);
        assert_eq!(lagrangian_eval(2.0, &UNIT), 2.0);
    }

    #[test]
    fn legendre_map_values() {
        let s3 = 3f64.sqrt();
        assert_eq!(legendre_map(0.0, &UNIT), 0.0);
        assert!((legendre_map(-1.0 / s3, &UNIT) - unit_cusp_momentum()).abs() < 1e-15);
        assert!((legendre_map(2.0 / s3, &UNIT) - unit_cusp_momentum()).abs() < 1e-15);
    }

    #[test]
    fn inversion_matches_bisection_oracle() {
        let expected = oracle_roots(0.2);
        assert_eq!(expected.len(), 3);
        // frozen from the oracle
        assert!((expected[0] + 0.878885).abs() < 1e-6);
        assert!((expected[1] + 0.209149).abs() < 1e-6);
        assert!((expected[2] - 1.088034).abs() < 1e-6);
        let got = invert_legendre_map(0.2, &UNIT);
        assert_eq!(got.len(), 3);
        for (g, e) in got.iter().zip(&expected) {
            assert!((g.value - e).abs() < 1e-12, "{} vs {}", g.value, e);
        }
        let sum: f64 = got.iter().map(|r| r.value).sum();
        assert!(sum.abs() < 1e-14);

        let zero: Vec<f64> = invert_legendre_map(0.0, &UNIT)
            .iter()
            .map(|r| r.value)
            .collect();
        assert_eq!(zero.len(), 3);
        assert!(
            (zero[0] + 1.0).abs() < 1e-15 && zero[1].abs() < 1e-15 && (zero[2] - 1.0).abs() < 1e-15
        );

        let six = invert_legendre_map(6.0, &UNIT);
        assert_eq!(six.len(), 1);
        assert!((six[0].value - 2.0).abs() < 1e-15);
    }

    #[test]
    fn cusps() {
        let (p1, p2) = cusp_momenta(&UNIT).unwrap();
        let s3 = 3f64.sqrt();
        assert!((p2 - 2.0 / (3.0 * s3)).abs() < 1e-16);
        assert_eq!(p1, -p2);
        let (q1, q2) = cusp_momenta(&ModelParams::new(4.0).unwrap()).unwrap();
        assert!((q2 - 16.0 / (3.0 * s3)).abs() < 1e-14);
        assert_eq!(q1, -q2);
        assert!(matches!(
            cusp_momenta(&ModelParams::new(0.0).unwrap()),
            Err(AnalyticError::ConvexRegime(_))
        ));
        assert!(ModelParams::new(f64::NAN).is_err());
    }

    #[test]
    fn tangent_points() {
        let s3 = 3f64.sqrt();
        let p2 = unit_cusp_momentum();
        let t = tangent_point_right(p2).unwrap();
        assert!((t.velocity - 2.0 / s3).abs() < 1e-12);
        assert!((tangent_point_right(6.0).unwrap().velocity - 2.0).abs() < 1e-13);
        assert!((tangent_point_right(0.0).unwrap().velocity - 1.0).abs() < 1e-14);
        assert!((tangent_point_right(1e-12).unwrap().velocity - 1.0).abs() < 1e-11);

        assert!((tangent_point_left(-p2).unwrap().velocity + 2.0 / s3).abs() < 1e-12);
        assert!((tangent_point_left(-6.0).unwrap().velocity + 2.0).abs() < 1e-13);
        assert!((tangent_point_left(-1e-12).unwrap().velocity + 1.0).abs() < 1e-11);

        assert!(tangent_point_right(-1.0).is_err());
        assert!(tangent_point_left(0.0).is_err());
        assert!(tangent_point_left(1.0).is_err());
    }

    #[test]
    fn tangency_near_the_cusp() {
        let p2 = unit_cusp_momentum();
        for k in -20..=20 {
            let p = p2 + k as f64 * 1e-10;
            let t = tangent_point_right(p).unwrap();
            let r = t.velocity.powi(3) - t.velocity - p;
            assert!(r.abs() <= 1e-10);
            let t = tangent_point_left(-p).unwrap();
            let r = t.velocity.powi(3) - t.velocity + p;
            assert!(r.abs() <= 1e-10);
        }
    }

    #[test]
    fn hamiltonian_values() {
        assert!((hamiltonian_closed_form(0.0) - 0.25).abs() < 1e-15);
        assert!((hamiltonian_closed_form(6.0) - 10.0).abs() < 1e-12);
        assert!((hamiltonian_closed_form(-6.0) - 10.0).abs() < 1e-12);
        assert!(hamiltonian_closed_form(0.1) > 0.25);
    }

    #[test]
    fn subgradient() {
        assert_eq!(
            hamiltonian_subgradient(0.0),
            VelocitySet::Interval { lo: -1.0, hi: 1.0 }
        );
        match hamiltonian_subgradient(6.0) {
            VelocitySet::Finite(v) => assert!((v[0] - 2.0).abs() < 1e-13),
            other => panic!("{other:?}"),
        }
        let expected = bisect(|v| v * v * v - v - 1e-4, 0.9, 1.1);
        assert!((expected - 1.00005).abs() < 1e-8);
        match hamiltonian_subgradient(1e-4) {
            VelocitySet::Finite(v) => assert!((v[0] - expected).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn multivalued_values() {
        assert_eq!(multivalued_hamiltonian(0.0, &UNIT), 0.0);
        let v = 1.0 / 3f64.sqrt();
        assert!((multivalued_hamiltonian(v, &UNIT) + 1.0 / 12.0).abs() < 1e-16);
        assert_eq!(multivalued_hamiltonian(1.0, &UNIT), 0.25);
    }

    #[test]
    fn revised_values() {
        assert_eq!(revised_lagrangian(0.0), -0.25);
        assert_eq!(revised_lagrangian(1.0), -0.25);
        assert_eq!(revised_lagrangian(2.0), 2.0);
        assert_eq!(momentum_of_velocity_revised(0.5), 0.0);
        assert_eq!(momentum_of_velocity_revised(2.0), 6.0);
        assert_eq!(momentum_of_velocity_revised(-2.0), -6.0);
    }

    #[test]
    fn vacua() {
        let lft = vacuum_lft();
        assert_eq!(lft.energy, 0.25);
        assert_eq!(lft.momenta, vec![0.0]);
        assert_eq!(
            lft.velocity_set,
            VelocitySet::Interval { lo: -1.0, hi: 1.0 }
        );

        let cusp = vacuum_cusp();
        let p2 = unit_cusp_momentum();
        let v = 1.0 / 3f64.sqrt();
        assert!((cusp.energy + 1.0 / 12.0).abs() < 1e-12);
        assert!((cusp.momenta[0] + p2).abs() < 1e-12);
        assert!((cusp.momenta[1] - p2).abs() < 1e-12);
        match &cusp.velocity_set {
            VelocitySet::Finite(vs) => {
                assert!((vs[0] - v).abs() < 1e-12);
                assert!((vs[1] + v).abs() < 1e-12);
                assert!((legendre_map(vs[1], &UNIT) - p2).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rescaled_model_matches_direct_sup() {
        let params = ModelParams::new(2.5).unwrap();
        for &p in &[-7.0, -1.0, -0.3, 0.0, 0.2, 1.5, 9.0] {
            let h = params.hamiltonian(p);
            let direct = (0..=200_000)
                .map(|i| -6.0 + 12.0 * i as f64 / 200_000.0)
                .map(|v| p * v - lagrangian_eval(v, &params))
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(h >= direct - 1e-12);
            assert!(h - direct < 1e-6, "p={p}: {h} vs {direct}");
        }
        let vac = params.vacuum_lft();
        assert!((vac.energy - 2.5f64.powi(2) / 4.0).abs() < 1e-12);
        let cusp = params.vacuum_cusp().unwrap();
        assert!((cusp.energy + 2.5f64.powi(2) / 12.0).abs() < 1e-12);
    }

    #[test]
    fn convex_regime_uses_ordinary_transform() {
        let params = ModelParams::new(-1.0).unwrap();
        assert!(params.is_convex_regime());
        let t = params.tangent_point(3.0);
        assert!((legendre_map(t.velocity, &params) - 3.0).abs() < 1e-12);
        assert_eq!(
            params.revised_lagrangian(0.3),
            lagrangian_eval(0.3, &params)
        );
        assert!(!params.hamiltonian_subgradient(0.0).is_interval());
        assert!(params.vacuum_cusp().is_err());
    }

    #[test]
    fn polynomial_lagrangian() {
        let q = PolynomialLagrangian::quartic(&UNIT);
        assert_eq!(q.degree(), 4);
        for &v in &[-2.0, -0.3, 0.0, 1.0, 2.7] {
            assert!((q.eval(v) - lagrangian_eval(v, &UNIT)).abs() < 1e-14);
        }
        assert!(q.is_coercive());
        let trimmed = PolynomialLagrangian::new(vec![1.0, 3.0, 0.0, 0.0]).unwrap();
        assert_eq!(trimmed.degree(), 1);
        assert!(trimmed.conjugate_may_be_unbounded());
        assert!(PolynomialLagrangian::new(vec![0.0, f64::INFINITY]).is_err());
        assert!(!PolynomialLagrangian::new(vec![0.0, 0.0, 0.0, 1.0])
            .unwrap()
            .is_coercive());
    }
}
