//! Test-support oracles, deliberately independent of the main series engine.
//!
//! Everything here is written as plain fixed-length summation or closed
//! forms, with no early termination and no code shared with [`crate::thermo`],
//! [`crate::stirling`] or [`crate::otto`]. The acceptance suite compares the
//! production paths against these.

use crate::thermo;

/// Outcome of comparing a production value against an oracle.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub quantity: String,
    pub main_value: f64,
    pub oracle_value: f64,
    pub abs_deviation: f64,
    pub rel_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl OracleReport {
    pub fn new(quantity: &str, main_value: f64, oracle_value: f64, tolerance: f64) -> Self {
        let abs_deviation = (main_value - oracle_value).abs();
        let rel_deviation = if oracle_value != 0.0 {
            abs_deviation / oracle_value.abs()
        } else {
            abs_deviation
        };
        OracleReport {
            quantity: quantity.to_string(),
            main_value,
            oracle_value,
            abs_deviation,
            rel_deviation,
            tolerance,
            pass: rel_deviation <= tolerance,
        }
    }
}

/// Closed forms for the linear-gap (q = 1) spectrum: with `y = exp(-c_red/t)`
/// the geometric sums give `Z = y/(1-y)` and `U/C = 1/(1-y)`.
pub fn geometric_oracle(c_red: f64, t: f64) -> (f64, f64) {
    let y = (-c_red / t).exp();
    (y / (1.0 - y), 1.0 / (1.0 - y))
}

/// Which series body a brute-force evaluation should sum.
#[derive(Debug, Clone, Copy)]
pub enum SeriesBody {
    /// `exp(-c n^x / t)` — the partition sum.
    Partition { q: f64, c_red: f64, t: f64 },
    /// `n^x exp(-c n^x / t)` — the energy-weighted sum.
    EnergyWeighted { q: f64, c_red: f64, t: f64 },
    /// `(n^x - 1) exp(-c (n^x - 1)/t) / Z'` with plain normalization — the
    /// excitation mean entering the verbatim Stirling stroke sums.
    ExcitationMean { q: f64, c_red: f64, t: f64 },
    /// Otto hot-intake body `E_n_hot (p_n_hot - p_n_cold) / t_cold`.
    OttoQIn { q: f64, c_red: f64, t_hot: f64, t_cold: f64, r: f64 },
    /// Otto cold-rejection body `E_n_cold (p_n_cold - p_n_hot) / t_cold`.
    OttoQOut { q: f64, c_red: f64, t_hot: f64, t_cold: f64, r: f64 },
    /// Otto work body `(E_n_hot - E_n_cold)(p_n_hot - p_n_cold) / t_cold`.
    OttoWork { q: f64, c_red: f64, t_hot: f64, t_cold: f64, r: f64 },
}

/// Plain sequential summation to exactly `n_max` terms, no early exit.
pub fn brute_force_sum(body: SeriesBody, n_max: usize) -> f64 {
    match body {
        SeriesBody::Partition { q, c_red, t } => {
            let x = 2.0 * q / (q + 1.0);
            let mut s = 0.0;
            for n in 1..=n_max {
                s += (-c_red * (n as f64).powf(x) / t).exp();
            }
            s
        }
        SeriesBody::EnergyWeighted { q, c_red, t } => {
            let x = 2.0 * q / (q + 1.0);
            let mut s = 0.0;
            for n in 1..=n_max {
                let nx = (n as f64).powf(x);
                s += nx * (-c_red * nx / t).exp();
            }
            s
        }
        SeriesBody::ExcitationMean { q, c_red, t } => {
            let x = 2.0 * q / (q + 1.0);
            let mut num = 0.0;
            let mut den = 0.0;
            for n in 1..=n_max {
                let e = (n as f64).powf(x) - 1.0;
                let b = (-c_red * e / t).exp();
                num += e * b;
                den += b;
            }
            num / den
        }
        SeriesBody::OttoQIn { q, c_red, t_hot, t_cold, r }
        | SeriesBody::OttoQOut { q, c_red, t_hot, t_cold, r }
        | SeriesBody::OttoWork { q, c_red, t_hot, t_cold, r } => {
            let x = 2.0 * q / (q + 1.0);
            let rx = r.powf(x);
            // normalizations first, same fixed length
            let mut zh = 0.0;
            let mut zc = 0.0;
            for n in 1..=n_max {
                let e = (n as f64).powf(x) - 1.0;
                zh += (-rx * c_red * e / t_hot).exp();
                zc += (-c_red * e / t_cold).exp();
            }
            let mut s = 0.0;
            for n in 1..=n_max {
                let nx = (n as f64).powf(x);
                let e = nx - 1.0;
                let ph = (-rx * c_red * e / t_hot).exp() / zh;
                let pc = (-c_red * e / t_cold).exp() / zc;
                let weight = match body {
                    SeriesBody::OttoQIn { .. } => rx * c_red * nx,
                    SeriesBody::OttoQOut { .. } => -(c_red * nx),
                    SeriesBody::OttoWork { .. } => (rx - 1.0) * c_red * nx,
                    _ => unreachable!(),
                };
                s += weight * (ph - pc) / t_cold;
            }
            s
        }
    }
}

/// Pick `n_max` so the last partition-sum term is below 1e-16 of the total.
pub fn oracle_n_max(q: f64, c_red: f64, t: f64) -> usize {
    let x = 2.0 * q / (q + 1.0);
    // solve c (n^x - 1)/t = 40 for a generous cutoff, then pad
    let n = ((40.0 * t / c_red + 1.0).powf(1.0 / x)).ceil() as usize;
    (n + 8).max(16)
}

/// Compare `mean_energy` against a central finite difference of `ln Z`
/// in beta, relative step 1e-6.
pub fn finite_difference_check(q: f64, c_red: f64, t: f64) -> OracleReport {
    let tol = crate::thermo::DEFAULT_TOL;
    let u = thermo::mean_energy(q, c_red, t, tol).unwrap().value * c_red;
    let beta = 1.0 / t;
    let h = 1e-6 * beta;
    let n_max = oracle_n_max(q, c_red, t);
    let zp = brute_force_sum(
        SeriesBody::Partition { q, c_red, t: 1.0 / (beta + h) },
        n_max,
    );
    let zm = brute_force_sum(
        SeriesBody::Partition { q, c_red, t: 1.0 / (beta - h) },
        n_max,
    );
    let fd = -(zp.ln() - zm.ln()) / (2.0 * h);
    OracleReport::new("mean_energy vs -dlnZ/dbeta", u, fd, 1e-6)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_values() {
        let (z, u) = geometric_oracle(1.0, 1.0);
        assert!((z - 0.581976706869).abs() < 1e-9);
        assert!((u - 1.581976706869).abs() < 1e-9);
        let (z, u) = geometric_oracle(700.0, 1.0);
        assert!((z - (-700.0f64).exp()).abs() < 1e-310);
        assert!((u - 1.0).abs() < 1e-12);
    }

    #[test]
    fn brute_force_quadratic_gap() {
        // Sigma e^{-n^2} to n = 10, frozen by direct evaluation.
        let s = brute_force_sum(
            SeriesBody::Partition { q: 1e9, c_red: 1.0, t: 1.0 },
            10,
        );
        assert!((s - 0.386318602).abs() < 1e-8);
    }

    #[test]
    fn brute_force_agrees_with_adaptive() {
        for &(q, c, t) in &[(1.0, 1.0, 1.0), (2.0, 0.5, 3.0), (100.0, 1.0, 10.0)] {
            let adaptive = thermo::partition_function(q, c, t, 1e-13).unwrap().value;
            let brute = brute_force_sum(
                SeriesBody::Partition { q, c_red: c, t },
                oracle_n_max(q, c, t),
            );
            assert!((adaptive - brute).abs() / brute < 1e-12);
        }
    }

    #[test]
    fn otto_work_zero_at_unit_ratio() {
        let w = brute_force_sum(
            SeriesBody::OttoWork { q: 1.0, c_red: 1.0, t_hot: 3.0, t_cold: 1.5, r: 1.0 },
            64,
        );
        assert_eq!(w, 0.0);
    }

    #[test]
    fn thermo_matches_geometric_oracle_across_ratios() {
        for &ratio in &[0.1, 0.5, 1.0, 5.0, 50.0] {
            let (z_o, u_o) = geometric_oracle(ratio, 1.0);
            let z = thermo::partition_function(1.0, ratio, 1.0, 1e-13).unwrap().value;
            let u = thermo::mean_energy(1.0, ratio, 1.0, 1e-13).unwrap().value;
            assert!((z - z_o).abs() / z_o < 1e-12, "Z at c/t={ratio}");
            assert!((u - u_o).abs() / u_o < 1e-12, "U at c/t={ratio}");
        }
    }

    #[test]
    fn finite_difference_reports() {
        for &(q, c_over_t) in &[(1.0, 1.0), (3.0, 0.5), (1e9, 2.0)] {
            let rep = finite_difference_check(q, c_over_t, 1.0);
            assert!(rep.pass, "{rep:?}");
        }
    }
}
