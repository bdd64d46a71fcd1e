//! Semiclassical energy spectrum of the power-law potential
//! `V(x) = V0 * (x/a)^(2q)` and its two analytic limits.
//!
//! The levels are `E_n = C_q * n^(2q/(q+1))` with `n = 1, 2, ...`. All
//! energies are reported in reduced form `E/kB` (Kelvin); conversion from SI
//! potential parameters happens only in [`c_q`].

use crate::constants::{HBAR, KB};
use crate::error::Error;
use crate::special::ln_gamma;
use std::f64::consts::PI;

/// The working medium: exponent `q` plus either physical potential
/// parameters or a directly supplied reduced energy scale `C_q/kB`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialSpec {
    /// Reduced mode: the energy scale `C_q/kB` is given directly, in Kelvin.
    Reduced { q: f64, c_red: f64 },
    /// SI mode: potential strength `v0` (J), length scale `a` (m),
    /// particle mass `m` (kg).
    Si { q: f64, v0: f64, a: f64, m: f64 },
}

impl PotentialSpec {
    pub fn reduced(q: f64, c_red: f64) -> Result<Self, Error> {
        if !(q >= 1.0) || !q.is_finite() {
            return Err(Error::Domain(format!("q must be >= 1, got {q}")));
        }
        if !(c_red > 0.0) || !c_red.is_finite() {
            return Err(Error::Domain(format!("c_red must be > 0, got {c_red}")));
        }
        Ok(PotentialSpec::Reduced { q, c_red })
    }

    pub fn si(q: f64, v0: f64, a: f64, m: f64) -> Result<Self, Error> {
        if !(q >= 1.0) || !q.is_finite() {
            return Err(Error::Domain(format!("q must be >= 1, got {q}")));
        }
        for (name, v) in [("V0", v0), ("a", a), ("m", m)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!("{name} must be > 0, got {v}")));
            }
        }
        Ok(PotentialSpec::Si { q, v0, a, m })
    }

    pub fn q(&self) -> f64 {
        match *self {
            PotentialSpec::Reduced { q, .. } | PotentialSpec::Si { q, .. } => q,
        }
    }
}

/// One spectrum entry: quantum number and level energy `E_n/kB` in Kelvin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub n: u32,
    pub value: f64,
}

/// Exponent of `n` in the spectrum: `2q/(q+1)`, in `[1, 2)`.
pub fn gap_exponent(q: f64) -> Result<f64, Error> {
    if !(q >= 1.0) || !q.is_finite() {
        return Err(Error::Domain(format!("q must be >= 1, got {q}")));
    }
    Ok(2.0 * q / (q + 1.0))
}

/// Reduced energy scale `C_q/kB` in Kelvin.
///
/// In reduced mode this is the pass-through of `c_red`. In SI mode it
/// evaluates, in the log domain,
///
/// ```text
/// C_q = (hbar^2 / (2 m a^2))^(q/(q+1)) * V0^(1/(q+1))
///       * (sqrt(pi) * Γ(3/2 + 1/(2q)) / Γ(1 + 1/(2q)))^(2q/(q+1))
/// ```
///
/// The kinetic prefactor carries hbar^2 so that the harmonic (`q = 1`) and
/// box (`q -> inf`) closed forms are recovered exactly.
pub fn c_q(spec: &PotentialSpec) -> Result<f64, Error> {
    match *spec {
        PotentialSpec::Reduced { c_red, .. } => Ok(c_red),
        PotentialSpec::Si { q, v0, a, m } => {
            let kinetic = HBAR * HBAR / (2.0 * m * a * a);
            let half_q = 1.0 / (2.0 * q);
            let gamma_part = 0.5 * PI.ln() + ln_gamma(1.5 + half_q) - ln_gamma(1.0 + half_q);
            let ln_c = q / (q + 1.0) * kinetic.ln()
                + v0.ln() / (q + 1.0)
                + (2.0 * q / (q + 1.0)) * gamma_part;
            let c = (ln_c - KB.ln()).exp();
            if !c.is_finite() || c <= 0.0 {
                return Err(Error::Overflow(format!(
                    "C_q evaluation left the representable range (ln C_q/kB = {})",
                    ln_c - KB.ln()
                )));
            }
            Ok(c)
        }
    }
}

/// Level energy `E_n/kB = n^(2q/(q+1)) * C_q/kB` in Kelvin.
pub fn energy_level(n: u32, spec: &PotentialSpec) -> Result<EnergyLevel, Error> {
    if n < 1 {
        return Err(Error::Domain("quantum number n must be >= 1".into()));
    }
    let x = gap_exponent(spec.q())?;
    let c = c_q(spec)?;
    Ok(EnergyLevel {
        n,
        value: (n as f64).powf(x) * c,
    })
}

/// Harmonic frequency of the `q = 1` member: `omega = sqrt(2 V0 / (m a^2))`.
fn harmonic_omega(v0: f64, a: f64, m: f64) -> f64 {
    (2.0 * v0 / (m * a * a)).sqrt()
}

/// The two analytic limits of the spectrum, in Kelvin:
/// harmonic oscillator `n * hbar * omega / kB` and
/// particle in a box `(pi^2 hbar^2 / (2 m a^2)) * n^2/4 / kB`.
///
/// Requires SI mode; the limits are expressed through physical constants.
pub fn limit_spectra(n: u32, spec: &PotentialSpec) -> Result<(f64, f64), Error> {
    if n < 1 {
        return Err(Error::Domain("quantum number n must be >= 1".into()));
    }
    match *spec {
        PotentialSpec::Reduced { .. } => Err(Error::ReducedModeUnsupported("limit_spectra")),
        PotentialSpec::Si { v0, a, m, .. } => {
            let harmonic = n as f64 * HBAR * harmonic_omega(v0, a, m) / KB;
            let box_level = PI * PI * HBAR * HBAR / (2.0 * m * a * a) * (n as f64).powi(2) / 4.0 / KB;
            Ok((harmonic, box_level))
        }
    }
}
