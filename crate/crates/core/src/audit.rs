//! Self-checks run by `lft audit`.
//!
//! Each check evaluates one structural property of the closed forms, the
//! discrete engine or the branch enumeration and reports the worst offender.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic::{
    hamiltonian_closed_form, invert_legendre_map, lagrangian_eval, momentum_of_velocity_revised,
    multivalued_hamiltonian, revised_lagrangian, tangent_point_left, unit_cusp_momentum,
    vacuum_cusp, vacuum_lft, ModelParams, VelocitySet,
};
use crate::branches::{enumerate_branches, xi_multiplicity_audit, xi_remap, XiRemap};
use crate::conjugate::{
    biconjugate, conjugate_bruteforce, conjugate_fast, SampledFunction, SlopeGrid,
};

const SEED: u64 = 0x05ee_d1f7;

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl AuditReport {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        AuditReport {
            name,
            passed,
            detail,
        }
    }
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

const UNIT: ModelParams = ModelParams::UNIT;

pub fn tangency() -> AuditReport {
    let worst = grid(-10.0, 10.0, 2001)
        .into_iter()
        .filter(|&p| p != 0.0)
        .map(|p| {
            let v = UNIT.tangent_point(p).velocity;
            (v * v * v - v - p).abs()
        })
        .fold(0.0, f64::max);
    AuditReport::new(
        "tangency",
        worst <= 1e-10,
        format!("max |v^3 - v - p| = {worst:e}"),
    )
}

pub fn imaginary_residue() -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let p2 = unit_cusp_momentum();
    let worst = (0..10_000)
        .map(|_| {
            let p = -rng.gen_range(p2..10.0);
            tangent_point_left(p)
                .map(|t| t.imaginary_residue)
                .unwrap_or(f64::INFINITY)
        })
        .fold(0.0, f64::max);
    AuditReport::new(
        "imaginary-residue",
        worst <= 1e-10,
        format!("max |Im| = {worst:e}"),
    )
}

pub fn fenchel_young() -> AuditReport {
    let vs = grid(-3.0, 3.0, 2001);
    let ps = grid(-2.0, 2.0, 2001);
    let mut violations = 0usize;
    let mut worst_gap = 0.0f64;
    for &p in &ps {
        let h = hamiltonian_closed_form(p);
        for &v in &vs {
            if p * v - lagrangian_eval(v, &UNIT) > h + 1e-9 {
                violations += 1;
            }
        }
        let t = UNIT.tangent_point(p);
        worst_gap = worst_gap.max((p * t.velocity - lagrangian_eval(t.velocity, &UNIT) - h).abs());
    }
    AuditReport::new(
        "fenchel-young",
        violations == 0 && worst_gap <= 1e-9,
        format!("{violations} violations, max equality gap {worst_gap:e}"),
    )
}

pub fn symmetry_and_seam() -> AuditReport {
    let worst = grid(0.0, 10.0, 1001)
        .into_iter()
        .map(|p| (hamiltonian_closed_form(p) - hamiltonian_closed_form(-p)).abs())
        .fold(0.0, f64::max);
    let seam = (hamiltonian_closed_form(-1e-12) - 0.25)
        .abs()
        .max((hamiltonian_closed_form(1e-12) - 0.25).abs());
    AuditReport::new(
        "evenness-and-seam",
        worst <= 1e-12 && seam <= 1e-9,
        format!("max |H(p) - H(-p)| = {worst:e}, seam jump {seam:e}"),
    )
}

pub fn hull_structure() -> AuditReport {
    let vs = grid(-4.0, 4.0, 4001);
    let monotone = vs
        .windows(2)
        .all(|w| momentum_of_velocity_revised(w[1]) >= momentum_of_velocity_revised(w[0]));
    let dominated = vs.iter().all(|&v| {
        let (hull, orig) = (revised_lagrangian(v), lagrangian_eval(v, &UNIT));
        hull <= orig + 1e-12 && (v.abs() < 1.0 || hull == orig)
    });
    AuditReport::new(
        "hull-structure",
        monotone && dominated,
        format!("monotone momentum: {monotone}, hull below Lagrangian: {dominated}"),
    )
}

pub fn root_structure() -> AuditReport {
    let p2 = unit_cusp_momentum();
    let bad = grid(-3.0, 3.0, 6001)
        .into_iter()
        .filter(|&p| (p.abs() - p2).abs() > 1e-9)
        .filter(|&p| {
            let expected = if p.abs() < p2 { 3 } else { 1 };
            invert_legendre_map(p, &UNIT).len() != expected
        })
        .count();
    AuditReport::new(
        "root-structure",
        bad == 0,
        format!("{bad} momenta with wrong root count"),
    )
}

pub fn vacua() -> AuditReport {
    let lft = vacuum_lft();
    let cusp = vacuum_cusp();
    let min_h = grid(-2.0, 2.0, 4001)
        .into_iter()
        .map(hamiltonian_closed_form)
        .fold(f64::INFINITY, f64::min);
    let min_mv = grid(-2.0, 2.0, 4001)
        .into_iter()
        .chain([-(1.0f64 / 3.0).sqrt(), (1.0f64 / 3.0).sqrt()])
        .map(|v| multivalued_hamiltonian(v, &UNIT))
        .fold(f64::INFINITY, f64::min);
    let ok = (lft.energy - min_h).abs() <= 1e-9
        && (cusp.energy - min_mv).abs() <= 1e-9
        && lft.velocity_set == VelocitySet::Interval { lo: -1.0, hi: 1.0 };
    AuditReport::new(
        "vacua",
        ok,
        format!("LFT H0 = {}, cusp H0 = {}", lft.energy, cusp.energy),
    )
}

pub fn oracle_equivalence() -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=200);
        let mut xs: Vec<f64> = (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect();
        xs.sort_by(|a, b| a.total_cmp(b));
        xs.dedup();
        if xs.len() < 2 {
            continue;
        }
        let fs: Vec<f64> = xs.iter().map(|_| rng.gen_range(-10.0..10.0)).collect();
        let f = SampledFunction::new(xs, fs).expect("sorted finite samples");
        let g = SlopeGrid::linspace(-5.0, 5.0, 101).expect("valid slope grid");
        let (a, b) = (conjugate_fast(&f, &g), conjugate_bruteforce(&f, &g));
        for (x, y) in a.values.iter().zip(&b.values) {
            worst = worst.max((x - y).abs());
        }
    }
    AuditReport::new(
        "oracle-equivalence",
        worst <= 1e-12,
        format!("max |fast - brute| = {worst:e}"),
    )
}

pub fn quartic_hull() -> AuditReport {
    let f = SampledFunction::sample(-3.0, 3.0, 4001, |v| lagrangian_eval(v, &UNIT))
        .expect("valid grid");
    let h = biconjugate(&f);
    let step = 6.0 / 4000.0;
    let worst = f
        .abscissae()
        .iter()
        .zip(h.values())
        .zip(f.values())
        .filter(|((v, _), _)| v.abs() <= 1.0 - 2.0 * step || v.abs() >= 1.0 + 2.0 * step)
        .map(|((v, hull), orig)| {
            let expected = if v.abs() < 1.0 { -0.25 } else { *orig };
            (hull - expected).abs()
        })
        .fold(0.0, f64::max);
    AuditReport::new(
        "quartic-hull",
        worst <= 1e-6,
        format!("max deviation {worst:e}"),
    )
}

pub fn xi_certificate() -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let remap = XiRemap::from_params(&UNIT).expect("unit model is non-convex");
    let (p1, p2) = (remap.p1(), remap.p2());
    let mut bad = 0;
    for _ in 0..1000 {
        let p = rng.gen_range(p1..p2);
        if p == p1 {
            continue;
        }
        if xi_remap(p, &remap).multiplicity() != 3 {
            bad += 1;
        }
        let xi = rng.gen_range(p1..p2);
        if xi != p1 && xi_multiplicity_audit(xi, &UNIT) != Ok(3) {
            bad += 1;
        }
    }
    let edges = xi_multiplicity_audit(p2, &UNIT) == Ok(2)
        && xi_multiplicity_audit(p1, &UNIT) == Ok(2)
        && xi_multiplicity_audit(2.0 * p2, &UNIT) == Ok(1);
    AuditReport::new(
        "xi-remap-multivalued",
        bad == 0 && edges,
        format!("{bad} interior samples without three values, endpoint counts ok: {edges}"),
    )
}

pub fn branch_envelope() -> AuditReport {
    let set = enumerate_branches(&UNIT).expect("unit model is non-convex");
    let p2 = unit_cusp_momentum();
    let worst = grid(-p2, p2, 2001)
        .into_iter()
        .map(|p| (set.max_hamiltonian(p) - hamiltonian_closed_form(p)).abs())
        .fold(0.0, f64::max);
    AuditReport::new(
        "branch-envelope",
        worst <= 1e-9,
        format!("max |max_branch H - H_lft| = {worst:e}"),
    )
}

pub fn run_all() -> Vec<AuditReport> {
    vec![
        tangency(),
        imaginary_residue(),
        fenchel_young(),
        symmetry_and_seam(),
        hull_structure(),
        root_structure(),
        vacua(),
        oracle_equivalence(),
        quartic_hull(),
        xi_certificate(),
        branch_envelope(),
    ]
}
