//! Stereographic projection of the unit sphere onto the `e12` plane from the
//! south pole `-e3`, its inverse, and the spin transition probabilities
//! `(1 ± a.b)/2` together with their plane-distance forms.
//!
//! The projection is `x = 2/(a + e3) - e3`. With `m = x + e3` the inverse is
//! the sandwich `a = m^ e3 m^`, a half-turn of `e3` about `I m^`.

use crate::error::{GaError, Result};
use crate::exec::Execution;
use crate::multivector::Multivector;
use crate::products::{dot_vectors, geometric_product, vector_inverse};
use crate::signature::Signature;
use crate::tolerance::{INVERSE_EPS, POLE_EPS, UNIT_EPS};
use crate::transforms::Rotor;

fn e3() -> Multivector {
    Multivector::basis_vector(Signature::G3, 3).expect("G3 has e3")
}

fn expect_g3_vector(x: &Multivector) -> Result<()> {
    x.sig().ensure(Signature::G3)?;
    x.expect_grade(1)
}

/// Unit vector of Euclidean 3-space.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint(Multivector);

impl SpherePoint {
    pub fn new(a: Multivector) -> Result<Self> {
        expect_g3_vector(&a)?;
        let deviation = (dot_vectors(&a, &a)? - 1.0).abs();
        if deviation > UNIT_EPS {
            return Err(GaError::OffSurface {
                what: "unit sphere",
                deviation,
            });
        }
        Ok(SpherePoint(a))
    }

    /// Scales a nonzero vector onto the sphere.
    pub fn normalize(a: Multivector) -> Result<Self> {
        expect_g3_vector(&a)?;
        let n = a.norm();
        if n == 0.0 {
            return Err(GaError::ZeroDirection);
        }
        Self::new(a.scale(1.0 / n))
    }

    pub fn vector(&self) -> &Multivector {
        &self.0
    }
}

/// Point of the plane `x . e3 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanePoint(Multivector);

impl PlanePoint {
    pub fn new(x: Multivector) -> Result<Self> {
        expect_g3_vector(&x)?;
        let deviation = dot_vectors(&x, &e3())?.abs();
        if deviation > UNIT_EPS {
            return Err(GaError::OffSurface {
                what: "projection plane",
                deviation,
            });
        }
        Ok(PlanePoint(x))
    }

    pub fn from_xy(x: f64, y: f64) -> Self {
        PlanePoint(Multivector::vector(Signature::G3, &[x, y]).expect("G3 vector"))
    }

    pub fn vector(&self) -> &Multivector {
        &self.0
    }

    /// `m = x + e3`.
    pub fn to_m(&self) -> MPoint {
        MPoint(self.0.try_add(&e3()).expect("same algebra"))
    }
}

/// Point of the shifted plane `m . e3 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MPoint(Multivector);

impl MPoint {
    pub fn new(m: Multivector) -> Result<Self> {
        expect_g3_vector(&m)?;
        let deviation = (dot_vectors(&m, &e3())? - 1.0).abs();
        if deviation > UNIT_EPS {
            return Err(GaError::OffSurface {
                what: "plane m.e3 = 1",
                deviation,
            });
        }
        Ok(MPoint(m))
    }

    pub fn vector(&self) -> &Multivector {
        &self.0
    }

    /// `x = m - e3`.
    pub fn to_plane(&self) -> PlanePoint {
        PlanePoint(self.0.try_sub(&e3()).expect("same algebra").grade_part(1))
    }
}

/// `x = 2 (a + e3) / (a + e3)^2 - e3`.
///
/// The e3 coefficient `2(1 + a3)/(a + e3)^2 - 1` vanishes identically on the
/// sphere and is stored as exactly zero.
pub fn stereo_project(a: &SpherePoint) -> Result<PlanePoint> {
    let c = a.0.vector_components();
    let (x, y, z1) = (c[0], c[1], c[2] + 1.0);
    let denom = x * x + y * y + z1 * z1;
    if denom < POLE_EPS {
        return Err(GaError::PoleSingularity);
    }
    Ok(PlanePoint::from_xy(2.0 * x / denom, 2.0 * y / denom))
}

/// `m = (a + e3) / (1 + a.e3)`, equal to `stereo_project(a) + e3`.
pub fn to_m(a: &SpherePoint) -> Result<MPoint> {
    Ok(stereo_project(a)?.to_m())
}

/// `a = m^ e3 m^` with `m = x + e3`.
pub fn stereo_unproject(x: &PlanePoint) -> SpherePoint {
    let m = x.to_m().0;
    let m_hat = m.scale(1.0 / m.norm());
    let a = geometric_product(&geometric_product(&m_hat, &e3()).expect("G3"), &m_hat).expect("G3");
    SpherePoint(a.grade_part(1))
}

/// Rotor `-I m^`, whose sandwich carries `e3` to `stereo_unproject(x)`.
pub fn rotation_form(x: &PlanePoint) -> Result<Rotor> {
    let m = x.to_m().0;
    let m_hat = m.scale(1.0 / m.norm());
    let i = Multivector::pseudoscalar(Signature::G3);
    Rotor::new(-geometric_product(&i, &m_hat)?)
}

/// `m_perp = -1/x + e3`, the m-point of the antipode of `stereo_unproject(x)`.
pub fn antipodal_m(x: &PlanePoint) -> Result<MPoint> {
    if dot_vectors(&x.0, &x.0)? <= INVERSE_EPS {
        return Err(GaError::AntipodeAtInfinity);
    }
    let inv = vector_inverse(&x.0)?;
    Ok(MPoint((-inv).try_add(&e3())?))
}

fn clamp_probability(p: f64) -> f64 {
    let c = p.clamp(0.0, 1.0);
    if (c - p).abs() > 1e-12 {
        log::warn!("probability {p} clamped to {c}");
    }
    c
}

/// `((1 + a.b)/2, (1 - a.b)/2)`.
///
/// The smaller value is computed directly and the larger as its complement,
/// which makes the two sum to exactly 1.
pub fn prob_pair(a: &SpherePoint, b: &SpherePoint) -> (f64, f64) {
    let d = dot_vectors(&a.0, &b.0).expect("G3 vectors");
    if d >= 0.0 {
        let minus = clamp_probability(0.5 * (1.0 - d));
        (1.0 - minus, minus)
    } else {
        let plus = clamp_probability(0.5 * (1.0 + d));
        (plus, 1.0 - plus)
    }
}

/// Probability of finding spin state `b` after preparing `a`: `(1 + a.b)/2`.
pub fn prob_plus(a: &SpherePoint, b: &SpherePoint) -> f64 {
    prob_pair(a, b).0
}

/// Complementary probability `(1 - a.b)/2`.
pub fn prob_minus(a: &SpherePoint, b: &SpherePoint) -> f64 {
    prob_pair(a, b).1
}

/// `(m_a - m_b)^2 / (m_a^2 m_b^2)`; fails at the pole.
fn m_distance_ratio(a: &SpherePoint, b: &SpherePoint) -> Result<f64> {
    let ma = to_m(a)?.0;
    let mb = to_m(b)?.0;
    let d = ma.try_sub(&mb)?;
    Ok(dot_vectors(&d, &d)? / (dot_vectors(&ma, &ma)? * dot_vectors(&mb, &mb)?))
}

/// `1 - (m_a - m_b)^2 / (m_a^2 m_b^2)`.
pub fn prob_plus_m_form(a: &SpherePoint, b: &SpherePoint) -> Result<f64> {
    Ok(clamp_probability(1.0 - m_distance_ratio(a, b)?))
}

/// `(m_a - m_b)^2 / (m_a^2 m_b^2)`.
pub fn prob_minus_m_form(a: &SpherePoint, b: &SpherePoint) -> Result<f64> {
    Ok(clamp_probability(m_distance_ratio(a, b)?))
}

pub fn stereo_project_many(points: &[SpherePoint], exec: Execution) -> Result<Vec<PlanePoint>> {
    exec.map(points, stereo_project).into_iter().collect()
}

pub fn stereo_unproject_many(points: &[PlanePoint], exec: Execution) -> Vec<SpherePoint> {
    exec.map(points, stereo_unproject)
}
