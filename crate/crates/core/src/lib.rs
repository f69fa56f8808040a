//! Single-valued Hamiltonians for non-convex Lagrangians.
//!
//! The [`conjugate`] module is a discrete Legendre-Fenchel engine, [`analytic`]
//! holds closed forms for the quartic model `L = v⁴/4 − κv²/2`, and
//! [`branches`] enumerates the multi-valued Hamiltonian obtained from the
//! ordinary Legendre transform together with the branched momentum remap.

pub mod analytic;
pub mod audit;
pub mod branches;
pub mod cli;
pub mod conjugate;
pub mod cubic;
pub mod error;
pub mod io;

pub use analytic::{ModelParams, PolynomialLagrangian, TangentPoint, VacuumState, VelocitySet};
pub use conjugate::{ConjugateResult, HullSegments, SampledFunction, SlopeGrid};
pub use error::{AnalyticError, ParseError, SampleError};
