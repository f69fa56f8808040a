//! Discrete Legendre-Fenchel transform.
//!
//! A sampled function is treated as its piecewise-linear interpolant, so
//! every quantity here is exact for that interpolant: the conjugate
//! `f*(p) = max_i [p·xᵢ − fᵢ]` only ever sees the lower convex hull of the
//! points `(xᵢ, fᵢ)`, and the biconjugate is that hull.
//!
//! [`conjugate_bruteforce`] is the `O(N·M)` reference. [`conjugate_fast`]
//! builds the lower hull with one monotone-chain pass and then walks it
//! against the ascending slope grid, `O(N + M)` overall.

use crate::analytic::PolynomialLagrangian;
use crate::error::SampleError;

/// Gap between samples and their hull above which a region counts as
/// non-convex.
pub const FLAT_REGION_THRESHOLD: f64 = 1e-9;

/// Points within this relative distance of the hull keep their own value in
/// [`biconjugate`], which makes the hull operation idempotent in floating
/// point.
const ON_HULL_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    abscissae: Vec<f64>,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(abscissae: Vec<f64>, values: Vec<f64>) -> Result<Self, SampleError> {
        if abscissae.len() != values.len() {
            return Err(SampleError::LengthMismatch(abscissae.len(), values.len()));
        }
        check_grid(&abscissae)?;
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(SampleError::NonFinite(i));
        }
        Ok(SampledFunction { abscissae, values })
    }

    /// Samples `f` on `n` evenly spaced points of `[lo, hi]`.
    pub fn sample(lo: f64, hi: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self, SampleError> {
        let xs = linspace(lo, hi, n);
        let ys = xs.iter().map(|&x| f(x)).collect();
        SampledFunction::new(xs, ys)
    }

    pub fn abscissae(&self) -> &[f64] {
        &self.abscissae
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.abscissae.len()
    }

    pub fn is_empty(&self) -> bool {
        self.abscissae.is_empty()
    }

    /// Adds a constant to every value.
    pub fn shifted(&self, c: f64) -> Result<Self, SampleError> {
        SampledFunction::new(
            self.abscissae.clone(),
            self.values.iter().map(|v| v + c).collect(),
        )
    }

    fn objective(&self, i: usize, p: f64) -> f64 {
        p * self.abscissae[i] - self.values[i]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlopeGrid {
    slopes: Vec<f64>,
}

impl SlopeGrid {
    pub fn new(slopes: Vec<f64>) -> Result<Self, SampleError> {
        if slopes.is_empty() {
            return Err(SampleError::TooFew(0));
        }
        if let Some(i) = slopes.iter().position(|v| !v.is_finite()) {
            return Err(SampleError::NonFinite(i));
        }
        if let Some(i) = (1..slopes.len()).find(|&i| slopes[i] <= slopes[i - 1]) {
            return Err(SampleError::NotIncreasing(i));
        }
        Ok(SlopeGrid { slopes })
    }

    pub fn linspace(lo: f64, hi: f64, n: usize) -> Result<Self, SampleError> {
        if n == 1 {
            return SlopeGrid::new(vec![lo]);
        }
        let s = linspace(lo, hi, n);
        check_grid(&s)?;
        SlopeGrid::new(s)
    }

    pub fn slopes(&self) -> &[f64] {
        &self.slopes
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }
}

/// Conjugate values on a slope grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugateResult {
    pub slopes: SlopeGrid,
    pub values: Vec<f64>,
    /// Index into the source abscissae of a maximizer of `p·x − f(x)`.
    pub argsup: Vec<usize>,
    /// False where the conjugate of the underlying analytic function is `+∞`.
    pub finite: Vec<bool>,
}

impl ConjugateResult {
    /// Non-decreasing difference quotients over the finite entries.
    pub fn is_convex(&self, tol: f64) -> bool {
        let (xs, ys): (Vec<f64>, Vec<f64>) = self
            .slopes
            .slopes()
            .iter()
            .zip(&self.values)
            .zip(&self.finite)
            .filter(|(_, &ok)| ok)
            .map(|((&p, &h), _)| (p, h))
            .unzip();
        is_discretely_convex(&xs, &ys, tol)
    }
}

/// Lower convex hull of sampled data.
#[derive(Debug, Clone, PartialEq)]
pub struct HullSegments {
    /// Source indices of the hull vertices, strictly increasing.
    pub breakpoints: Vec<usize>,
    /// `(x_lo, x_hi)` hull edges under which some sample sits more than
    /// [`FLAT_REGION_THRESHOLD`] above the hull.
    pub flat_regions: Vec<(f64, f64)>,
}

/// Where the conjugate of an analytic Lagrangian is finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EffectiveDomain {
    AllMomenta,
    /// Finite at exactly this momentum (affine Lagrangians).
    Only(f64),
    /// `+∞` for every momentum.
    Empty,
}

impl EffectiveDomain {
    pub fn contains(&self, p: f64) -> bool {
        match *self {
            EffectiveDomain::AllMomenta => true,
            EffectiveDomain::Only(q) => p == q,
            EffectiveDomain::Empty => false,
        }
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![lo];
    }
    let step = (hi - lo) / (n - 1) as f64;
    let mut xs: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
    xs[n - 1] = hi;
    xs
}

fn check_grid(xs: &[f64]) -> Result<(), SampleError> {
    if xs.len() < 2 {
        return Err(SampleError::TooFew(xs.len()));
    }
    if let Some(i) = xs.iter().position(|v| !v.is_finite()) {
        return Err(SampleError::NonFinite(i));
    }
    if let Some(i) = (1..xs.len()).find(|&i| xs[i] <= xs[i - 1]) {
        return Err(SampleError::NotIncreasing(i));
    }
    Ok(())
}

/// Checks that the difference quotients of `(xs, ys)` never decrease by
/// more than `tol`.
pub fn is_discretely_convex(xs: &[f64], ys: &[f64], tol: f64) -> bool {
    let quotients: Vec<f64> = xs
        .windows(2)
        .zip(ys.windows(2))
        .map(|(x, y)| (y[1] - y[0]) / (x[1] - x[0]))
        .collect();
    quotients.windows(2).all(|q| q[1] >= q[0] - tol)
}

/// Indices of the lower convex hull, collinear points dropped.
pub fn lower_hull(f: &SampledFunction) -> Vec<usize> {
    let (x, y) = (f.abscissae(), f.values());
    let mut hull: Vec<usize> = Vec::with_capacity(f.len());
    for i in 0..f.len() {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (x[b] - x[a]) * (y[i] - y[a]) - (y[b] - y[a]) * (x[i] - x[a]);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    hull
}

/// Reference conjugate: exhaustive maximum per slope, smallest index on ties.
pub fn conjugate_bruteforce(f: &SampledFunction, g: &SlopeGrid) -> ConjugateResult {
    let mut values = Vec::with_capacity(g.len());
    let mut argsup = Vec::with_capacity(g.len());
    for &p in g.slopes() {
        let mut best = 0;
        let mut best_val = f.objective(0, p);
        for i in 1..f.len() {
            let v = f.objective(i, p);
            if v > best_val {
                best = i;
                best_val = v;
            }
        }
        values.push(best_val);
        argsup.push(best);
    }
    ConjugateResult {
        slopes: g.clone(),
        finite: vec![true; values.len()],
        values,
        argsup,
    }
}

/// Linear-time conjugate via the lower hull.
pub fn conjugate_fast(f: &SampledFunction, g: &SlopeGrid) -> ConjugateResult {
    let hull = lower_hull(f);
    let mut values = Vec::with_capacity(g.len());
    let mut argsup = Vec::with_capacity(g.len());
    let mut k = 0;
    for &p in g.slopes() {
        // the objective is unimodal along the hull and its peak moves right
        // as the slope grows
        let mut cur = f.objective(hull[k], p);
        while k + 1 < hull.len() {
            let next = f.objective(hull[k + 1], p);
            if next > cur {
                k += 1;
                cur = next;
            } else {
                break;
            }
        }
        values.push(cur);
        argsup.push(hull[k]);
    }
    ConjugateResult {
        slopes: g.clone(),
        finite: vec![true; values.len()],
        values,
        argsup,
    }
}

/// The convex hull of `f` evaluated on its own abscissae.
pub fn biconjugate(f: &SampledFunction) -> SampledFunction {
    let hull = lower_hull(f);
    let (x, y) = (f.abscissae(), f.values());
    let mut out = y.to_vec();
    for edge in hull.windows(2) {
        let (a, b) = (edge[0], edge[1]);
        let slope = (y[b] - y[a]) / (x[b] - x[a]);
        for i in a + 1..b {
            let interp = y[a] + slope * (x[i] - x[a]);
            if y[i] - interp > ON_HULL_RTOL * (1.0 + y[i].abs()) {
                out[i] = interp;
            }
        }
    }
    SampledFunction {
        abscissae: x.to_vec(),
        values: out,
    }
}

/// Lowest line of slope `p` touching the samples: returns its intercept
/// `min_i fᵢ − p·xᵢ` (the negated conjugate) and the touching index.
pub fn supporting_line(f: &SampledFunction, p: f64) -> (f64, usize) {
    let mut best = 0;
    let mut best_val = f.values[0] - p * f.abscissae[0];
    for i in 1..f.len() {
        let v = f.values[i] - p * f.abscissae[i];
        if v < best_val {
            best = i;
            best_val = v;
        }
    }
    (best_val, best)
}

pub fn effective_domain(f: &PolynomialLagrangian) -> EffectiveDomain {
    match f.degree() {
        0 => EffectiveDomain::Only(0.0),
        1 => EffectiveDomain::Only(f.coeffs()[1]),
        _ if f.is_coercive() => EffectiveDomain::AllMomenta,
        _ => EffectiveDomain::Empty,
    }
}

/// Conjugate of a polynomial sampled on `n` points of `[lo, hi]`, with the
/// finiteness flags taken from its analytic effective domain.
pub fn conjugate_polynomial(
    f: &PolynomialLagrangian,
    lo: f64,
    hi: f64,
    n: usize,
    g: &SlopeGrid,
) -> Result<ConjugateResult, SampleError> {
    let sampled = SampledFunction::sample(lo, hi, n, |v| f.eval(v))?;
    let domain = effective_domain(f);
    let mut result = conjugate_fast(&sampled, g);
    for (flag, &p) in result.finite.iter_mut().zip(g.slopes()) {
        *flag = domain.contains(p);
    }
    Ok(result)
}

pub fn flat_regions(f: &SampledFunction) -> HullSegments {
    let hull = lower_hull(f);
    let (x, y) = (f.abscissae(), f.values());
    let mut regions = Vec::new();
    for edge in hull.windows(2) {
        let (a, b) = (edge[0], edge[1]);
        let slope = (y[b] - y[a]) / (x[b] - x[a]);
        let lifted =
            (a + 1..b).any(|i| y[i] - (y[a] + slope * (x[i] - x[a])) > FLAT_REGION_THRESHOLD);
        if lifted {
            regions.push((x[a], x[b]));
        }
    }
    HullSegments {
        breakpoints: hull,
        flat_regions: regions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{hamiltonian_closed_form, lagrangian_eval, ModelParams};

    fn quartic(n: usize) -> SampledFunction {
        SampledFunction::sample(-3.0, 3.0, n, |v| lagrangian_eval(v, &ModelParams::UNIT)).unwrap()
    }

    #[test]
    fn rejects_bad_samples() {
        assert_eq!(
            SampledFunction::new(vec![0.0], vec![1.0]),
            Err(SampleError::TooFew(1))
        );
        assert_eq!(
            SampledFunction::new(vec![0.0, 1.0], vec![1.0]),
            Err(SampleError::LengthMismatch(2, 1))
        );
        assert_eq!(
            SampledFunction::new(vec![0.0, 0.0], vec![1.0, 2.0]),
            Err(SampleError::NotIncreasing(1))
        );
        assert_eq!(
            SampledFunction::new(vec![0.0, 1.0], vec![1.0, f64::NAN]),
            Err(SampleError::NonFinite(1))
        );
        assert!(SlopeGrid::new(vec![1.0, 0.5]).is_err());
        assert!(SlopeGrid::new(vec![]).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        let g = SlopeGrid::new(vec![0.0, 6.0]).unwrap();
        let r = conjugate_bruteforce(&quartic(4001), &g);
        assert!((r.values[0] - 0.25).abs() < 1e-6);
        assert!((r.values[1] - 10.0).abs() < 1e-4);

        let half = SampledFunction::sample(-5.0, 5.0, 1001, |x| 0.5 * x * x).unwrap();
        let r = conjugate_bruteforce(&half, &SlopeGrid::new(vec![1.0]).unwrap());
        assert!((r.values[0] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn linear_function_ties() {
        let f = SampledFunction::sample(0.0, 1.0, 11, |x| 2.0 * x).unwrap();
        let g = SlopeGrid::new(vec![2.0]).unwrap();
        let fast = conjugate_fast(&f, &g);
        assert!(fast.values[0].abs() < 1e-15);
        assert!(fast.argsup[0] == 0 || fast.argsup[0] == 10);
        assert_eq!(conjugate_bruteforce(&f, &g).argsup[0], 0);
    }

    #[test]
    fn biconjugate_examples() {
        let f = quartic(4001);
        let h = biconjugate(&f);
        assert!((h.values()[2000] + 0.25).abs() < 1e-6);
        // nearest sample to v = 2
        let i2 = 3333;
        assert!((f.abscissae()[i2] - 2.0).abs() < 1e-3);
        assert!((h.values()[i2] - f.values()[i2]).abs() < 1e-6);
        assert!((h.values()[i2] - 2.0).abs() < 1e-2);

        let sq = SampledFunction::sample(-2.0, 2.0, 101, |x| x * x).unwrap();
        assert_eq!(biconjugate(&sq), sq);
    }

    #[test]
    fn supporting_line_examples() {
        let (y, i) = supporting_line(&quartic(4001), 0.0);
        assert!((y + 0.25).abs() < 1e-6);
        let v = quartic(4001).abscissae()[i];
        assert!((v.abs() - 1.0).abs() < 2e-3);

        let half = SampledFunction::sample(-5.0, 5.0, 1001, |x| 0.5 * x * x).unwrap();
        let (y, i) = supporting_line(&half, 0.0);
        assert_eq!(y, 0.0);
        assert_eq!(half.abscissae()[i], 0.0);

        let (y, i) = supporting_line(&quartic(4001), 6.0);
        assert!((y + 10.0).abs() < 1e-4);
        assert!((quartic(4001).abscissae()[i] - 2.0).abs() < 2e-3);
        assert!((y + hamiltonian_closed_form(6.0)).abs() < 1e-4);
    }

    #[test]
    fn domains() {
        let q = PolynomialLagrangian::quartic(&ModelParams::UNIT);
        assert_eq!(effective_domain(&q), EffectiveDomain::AllMomenta);
        let lin = PolynomialLagrangian::new(vec![0.0, 3.0]).unwrap();
        assert_eq!(effective_domain(&lin), EffectiveDomain::Only(3.0));
        assert!(effective_domain(&lin).contains(3.0));
        assert!(!effective_domain(&lin).contains(2.9));
        let concave = PolynomialLagrangian::new(vec![0.0, 0.0, -1.0]).unwrap();
        assert_eq!(effective_domain(&concave), EffectiveDomain::Empty);
        let cubic = PolynomialLagrangian::new(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(effective_domain(&cubic), EffectiveDomain::Empty);
        let constant = PolynomialLagrangian::new(vec![2.0]).unwrap();
        assert_eq!(effective_domain(&constant), EffectiveDomain::Only(0.0));
    }

    #[test]
    fn analytic_finiteness_flags() {
        let g = SlopeGrid::new(vec![2.0, 3.0, 4.0]).unwrap();
        let lin = PolynomialLagrangian::new(vec![0.0, 3.0]).unwrap();
        let r = conjugate_polynomial(&lin, -1.0, 1.0, 11, &g).unwrap();
        assert_eq!(r.finite, vec![false, true, false]);
        assert!(r.values[1].abs() < 1e-15);
    }

    #[test]
    fn flat_region_examples() {
        let f = quartic(4001);
        let h = flat_regions(&f);
        assert_eq!(h.flat_regions.len(), 1);
        let (lo, hi) = h.flat_regions[0];
        let step = 6.0 / 4000.0;
        assert!((lo + 1.0).abs() <= 2.0 * step);
        assert!((hi - 1.0).abs() <= 2.0 * step);

        let sq = SampledFunction::sample(-2.0, 2.0, 101, |x| x * x).unwrap();
        assert!(flat_regions(&sq).flat_regions.is_empty());
    }
}
