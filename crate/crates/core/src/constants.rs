//! Physical constants, CODATA 2018 (SI exact values where defined).

/// Reduced Planck constant, J·s. h = 6.62607015e-34 J·s exactly; this is
/// h / (2π) to 10 significant digits.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Boltzmann constant, J/K (exact by the 2019 SI redefinition).
pub const KB: f64 = 1.380_649e-23;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hbar_matches_defined_h() {
        let h = 6.626_070_15e-34;
        let hbar = h / (2.0 * std::f64::consts::PI);
        assert!((HBAR - hbar).abs() / hbar < 1e-9);
    }

    #[test]
    fn constants_positive_finite() {
        assert!(HBAR > 0.0 && HBAR.is_finite());
        assert!(KB > 0.0 && KB.is_finite());
    }
}
