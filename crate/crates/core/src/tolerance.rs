/// Guard on `|a.a|` below which a vector is treated as non-invertible.
pub const INVERSE_EPS: f64 = 1e-300;

/// Allowed deviation from 1 for unit vectors, unit bivectors and rotors.
pub const UNIT_EPS: f64 = 1e-12;

/// `(a + e3)^2` below this value is the stereographic pole.
pub const POLE_EPS: f64 = 1e-24;

/// `|a^ ∧ b^|` at or below this value makes a triangle collinear.
pub const COLLINEAR_EPS: f64 = 1e-10;

/// Mixed absolute/relative comparison tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-12, rel: 1e-12 }
    }
}

impl Tolerance {
    /// Same value for the absolute and relative parts.
    pub fn uniform(tol: f64) -> Self {
        Tolerance { abs: tol, rel: tol }
    }

    pub fn eq(self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs + self.rel * a.abs().max(b.abs())
    }
}
