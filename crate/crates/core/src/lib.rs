//! Quantum thermodynamic cycles for a one-dimensional power-law working medium.
//!
//! The working medium is a particle confined by `V(x) = V0 * (x/a)^(2q)`,
//! whose semiclassical spectrum interpolates between the harmonic oscillator
//! (`q = 1`, linear level spacing) and the infinite square well
//! (`q -> inf`, quadratic spacing). On top of that spectrum the crate builds
//! canonical-ensemble quantities and two closed cycles:
//!
//! * a quantum Stirling cycle (barrier insertion/removal plus two
//!   isochores), evaluated in two modes — [`stirling::CalcMode::AsPrinted`]
//!   reproduces the published closed-form expressions verbatim, while
//!   [`stirling::CalcMode::FirstPrinciples`] rebuilds every heat and the net
//!   work from partition functions and mean energies so the first law and
//!   the Carnot limit hold;
//! * a quantum Otto cycle parameterized by the frequency ratio `r`.
//!
//! All thermodynamic outputs are reduced: energies are reported as `E/kB` in
//! Kelvin and heats/work are divided by `kB * T_cold`. The [`sweep`] module
//! turns single-point evaluations into deterministic series and mode maps,
//! and the `qplaw` binary exposes everything on the command line.

pub mod constants;
pub mod error;
pub mod otto;
pub mod special;
pub mod spectrum;
pub mod stirling;
pub mod sweep;
pub mod thermo;
pub mod verify;

pub use error::Error;
pub use spectrum::PotentialSpec;
pub use thermo::ThermalPair;
