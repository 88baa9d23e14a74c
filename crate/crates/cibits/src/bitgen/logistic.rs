//! The logistic map x <- mu*x*(1-x) in its chaotic regime.

use super::GenError;

/// Logistic-map iterator. `x` stays in the open interval (0,1); the control
/// parameter must lie in the chaotic window 3.57 < mu <= 4.0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticMap {
    x: f64,
    mu: f64,
}

/// Default control parameter. The value keeps the orbit chaotic while
/// avoiding the mu = 4 peak, where x = 0.5 maps straight onto 1.
pub const DEFAULT_MU: f64 = 3.9999;

impl LogisticMap {
    pub fn new(x0: f64, mu: f64) -> Result<Self, GenError> {
        if !(x0 > 0.0 && x0 < 1.0) || !(mu > 3.57 && mu <= 4.0) {
            return Err(GenError::LogisticParams { x0, mu });
        }
        Ok(LogisticMap { x: x0, mu })
    }

    /// One step. Fails with a degenerate-orbit error if the current iterate
    /// has already collapsed onto 0 or 1 (reachable only through rounding,
    /// or through mu = 4 exactly).
    pub fn next_f64(&mut self) -> Result<f64, GenError> {
        if !(self.x > 0.0 && self.x < 1.0) {
            return Err(GenError::DegenerateOrbit(self.x));
        }
        self.x = self.mu * self.x * (1.0 - self.x);
        Ok(self.x)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        assert!(LogisticMap::new(0.0, 3.9999).is_err());
        assert!(LogisticMap::new(1.0, 3.9999).is_err());
        assert!(LogisticMap::new(0.5, 3.5).is_err());
        assert!(LogisticMap::new(0.5, 4.0001).is_err());
        assert!(LogisticMap::new(0.5, 4.0).is_ok());
    }

    #[test]
    fn parabola_peak_then_degenerate() {
        let mut m = LogisticMap::new(0.5, 4.0).unwrap();
        assert_eq!(m.next_f64().unwrap(), 1.0);
        assert_eq!(m.next_f64(), Err(GenError::DegenerateOrbit(1.0)));
    }

    #[test]
    fn quarter_point() {
        let mut m = LogisticMap::new(0.25, 4.0).unwrap();
        assert_eq!(m.next_f64().unwrap(), 0.75);
    }

    // Direct evaluation: 3.9999 * 0.3 * 0.7 = 0.8399790.
    #[test]
    fn direct_evaluation_seven_digits() {
        let mut m = LogisticMap::new(0.3, 3.9999).unwrap();
        let x = m.next_f64().unwrap();
        assert!((x - 0.8399790).abs() < 5e-8, "got {x}");
    }

    #[test]
    fn orbit_stays_in_unit_interval() {
        let mut m = LogisticMap::new(0.3, 3.9999).unwrap();
        for _ in 0..100_000 {
            let x = m.next_f64().unwrap();
            assert!(x > 0.0 && x < 1.0);
        }
    }
}
