//! Branches of the multi-valued Hamiltonian and the branched momentum remap.
//!
//! Inside the cusp band `(p₁, p₂)` the Legendre map `p = v³ − κv` has three
//! preimages, so the ordinary Legendre transform yields three Hamiltonian
//! values per momentum (the swallow tail). The remap `p ↦ ξ` below is applied
//! branch by branch; the audits count how many `ξ` each momentum receives and
//! how many velocities solve `v³ − κv = −ξ`.

use crate::analytic::{
    cusp_momenta, invert_legendre_map, legendre_map, multivalued_hamiltonian, ModelParams,
};
use crate::error::AnalyticError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Selector {
    Lowest,
    Middle,
    Highest,
}

/// Figure labels: `φ̇₃` is the lowest root, `φ̇₁` the highest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchLabel {
    Phi3,
    Phi2,
    Phi1,
}

impl BranchLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            BranchLabel::Phi3 => "phi3",
            BranchLabel::Phi2 => "phi2",
            BranchLabel::Phi1 => "phi1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    /// Closed interval; unbounded ends are infinite.
    pub momentum_interval: (f64, f64),
    pub velocity_selector: Selector,
    pub label: BranchLabel,
}

impl Branch {
    pub fn contains(&self, p: f64) -> bool {
        self.momentum_interval.0 <= p && p <= self.momentum_interval.1
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchValue {
    pub label: BranchLabel,
    pub velocity: f64,
    pub hamiltonian: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BranchSet {
    params: ModelParams,
    branches: [Branch; 3],
}

impl BranchSet {
    pub fn branches(&self) -> &[Branch; 3] {
        &self.branches
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// Velocity of one branch at `p`, `None` outside its interval.
    pub fn velocity(&self, selector: Selector, p: f64) -> Option<f64> {
        let roots = invert_legendre_map(p, &self.params);
        let expanded: Vec<f64> = roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity as usize))
            .collect();
        if expanded.len() == 3 {
            return Some(match selector {
                Selector::Lowest => expanded[0],
                Selector::Middle => expanded[1],
                Selector::Highest => expanded[2],
            });
        }
        // one real root: above the band it continues the highest branch,
        // below it the lowest
        let v = expanded[0];
        match selector {
            Selector::Highest if v > 0.0 => Some(v),
            Selector::Lowest if v < 0.0 => Some(v),
            _ => None,
        }
    }

    /// Every branch defined at `p`, lowest velocity first.
    pub fn evaluate(&self, p: f64) -> Vec<BranchValue> {
        self.branches
            .iter()
            .filter_map(|b| {
                self.velocity(b.velocity_selector, p).map(|v| BranchValue {
                    label: b.label,
                    velocity: v,
                    hamiltonian: multivalued_hamiltonian(v, &self.params),
                })
            })
            .collect()
    }

    /// Distinct velocities over all branches at `p`.
    pub fn distinct_velocities(&self, p: f64) -> Vec<f64> {
        let mut vs: Vec<f64> = self.evaluate(p).iter().map(|b| b.velocity).collect();
        vs.dedup();
        vs
    }

    /// Upper envelope of the branch Hamiltonians; equals the single-valued
    /// Hamiltonian wherever a branch is defined.
    pub fn max_hamiltonian(&self, p: f64) -> f64 {
        self.evaluate(p)
            .iter()
            .map(|b| b.hamiltonian)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn enumerate_branches(params: &ModelParams) -> Result<BranchSet, AnalyticError> {
    let (p1, p2) = cusp_momenta(params)?;
    Ok(BranchSet {
        params: *params,
        branches: [
            Branch {
                momentum_interval: (f64::NEG_INFINITY, p2),
                velocity_selector: Selector::Lowest,
                label: BranchLabel::Phi3,
            },
            Branch {
                momentum_interval: (p1, p2),
                velocity_selector: Selector::Middle,
                label: BranchLabel::Phi2,
            },
            Branch {
                momentum_interval: (p1, f64::INFINITY),
                velocity_selector: Selector::Highest,
                label: BranchLabel::Phi1,
            },
        ],
    })
}

/// Parametric samples `(p(v), H(v))` of the multi-valued Hamiltonian.
pub fn swallow_tail_curve(v_grid: &[f64], params: &ModelParams) -> Vec<(f64, f64)> {
    v_grid
        .iter()
        .map(|&v| (legendre_map(v, params), multivalued_hamiltonian(v, params)))
        .collect()
}

/// Cusp momenta of the branched remap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiRemap {
    p1: f64,
    p2: f64,
}

impl XiRemap {
    pub fn new(p1: f64, p2: f64) -> Result<Self, AnalyticError> {
        if !(p2 > 0.0 && p2.is_finite() && p1 == -p2) {
            return Err(AnalyticError::Domain {
                op: "XiRemap::new",
                p: p1,
            });
        }
        Ok(XiRemap { p1, p2 })
    }

    pub fn from_params(params: &ModelParams) -> Result<Self, AnalyticError> {
        let (p1, p2) = cusp_momenta(params)?;
        XiRemap::new(p1, p2)
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }

    /// `ξ` from one branch of the remap, if `p` lies in its range.
    pub fn branch(&self, k: usize, p: f64) -> Option<f64> {
        let (p1, p2) = (self.p1, self.p2);
        match k {
            0 if p <= p2 => Some(p - p2 + p1),
            1 if p1 <= p && p <= p2 => Some(-p + p2 + p1),
            2 if p1 <= p => Some(p + p2 - p1),
            _ => None,
        }
    }
}

/// The remap's output at one momentum, indexed by remap branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiSet {
    pub values: [Option<f64>; 3],
}

impl XiSet {
    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().flatten().copied()
    }

    /// Number of distinct `ξ` values.
    pub fn multiplicity(&self) -> usize {
        let mut xs: Vec<f64> = self.iter().collect();
        xs.sort_by(|a, b| a.total_cmp(b));
        xs.dedup();
        xs.len()
    }
}

/// Applies every branch of the remap whose momentum range contains `p`.
pub fn xi_remap(p: f64, remap: &XiRemap) -> XiSet {
    XiSet {
        values: [remap.branch(0, p), remap.branch(1, p), remap.branch(2, p)],
    }
}

/// Number of distinct real velocities solving `v³ − κv = −ξ`.
pub fn xi_multiplicity_audit(xi: f64, params: &ModelParams) -> Result<usize, AnalyticError> {
    cusp_momenta(params)?;
    Ok(invert_legendre_map(-xi, params).len())
}

/// One sample of the velocity/remapped-momentum relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiTracePoint {
    pub velocity: f64,
    pub momentum: f64,
    pub label: BranchLabel,
    pub xi: f64,
}

/// Walks the velocity grid, assigns each velocity to its branch of the
/// Legendre map and remaps its momentum with the matching remap branch
/// (lowest → first, middle → second, highest → third).
pub fn xi_trace(v_grid: &[f64], params: &ModelParams) -> Result<Vec<XiTracePoint>, AnalyticError> {
    let remap = XiRemap::from_params(params)?;
    let turn = (params.kappa() / 3.0).sqrt();
    Ok(v_grid
        .iter()
        .map(|&v| {
            let p = legendre_map(v, params);
            let (label, k) = if v <= -turn {
                (BranchLabel::Phi3, 0)
            } else if v < turn {
                (BranchLabel::Phi2, 1)
            } else {
                (BranchLabel::Phi1, 2)
            };
            // clamp rounding spill past the cusp
            let p = match k {
                0 => p.min(remap.p2),
                1 => p.clamp(remap.p1, remap.p2),
                _ => p.max(remap.p1),
            };
            XiTracePoint {
                velocity: v,
                momentum: p,
                label,
                xi: remap.branch(k, p).expect("clamped into branch range"),
            }
        })
        .collect())
}
