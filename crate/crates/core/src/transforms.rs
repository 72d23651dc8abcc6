//! Projections, reflections and rotors.

use crate::error::{GaError, Result};
use crate::exec::Execution;
use crate::multivector::Multivector;
use crate::products::{dot_vectors, geometric_product, outer_product};
use crate::signature::Signature;
use crate::tolerance::{INVERSE_EPS, UNIT_EPS};

/// Unit even multivector (grades 0 and 2 only) applied as `R x ~R`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rotor(Multivector);

impl Rotor {
    pub fn identity(sig: Signature) -> Self {
        Rotor(Multivector::scalar(sig, 1.0))
    }

    /// Accepts `r` as is if it has only grades 0 and 2 and `r ~r = 1`.
    pub fn new(r: Multivector) -> Result<Self> {
        if r.grades().iter().any(|&g| g != 0 && g != 2) {
            return Err(GaError::RotorGrades);
        }
        let rr = geometric_product(&r, &r.reverse())?;
        let deviation = (rr.scalar_part() - 1.0)
            .abs()
            .max(rr.filter(|b| b.grade() != 0).max_abs());
        if deviation > UNIT_EPS {
            return Err(GaError::NotUnit {
                what: "rotor",
                deviation,
            });
        }
        Ok(Rotor(r))
    }

    /// Scales an even value to unit norm.
    pub fn normalize(r: Multivector) -> Result<Self> {
        if !r.is_even() {
            return Err(GaError::RotorGrades);
        }
        let n = r.norm();
        if n == 0.0 {
            return Err(GaError::NotUnit {
                what: "rotor",
                deviation: 1.0,
            });
        }
        Self::new(r.scale(1.0 / n))
    }

    pub fn sig(&self) -> Signature {
        self.0.sig()
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.0
    }

    pub fn into_multivector(self) -> Multivector {
        self.0
    }

    /// `~R`, which is also the inverse.
    pub fn reverse(&self) -> Rotor {
        Rotor(self.0.reverse())
    }

    pub fn apply(&self, x: &Multivector) -> Result<Multivector> {
        rotate(x, self)
    }
}

fn expect_unit_vector(what: &'static str, n: &Multivector) -> Result<()> {
    let sq = dot_vectors(n, n)?;
    let deviation = (sq - 1.0).abs();
    if deviation > UNIT_EPS {
        return Err(GaError::NotUnit { what, deviation });
    }
    Ok(())
}

fn direction_square(a: &Multivector) -> Result<f64> {
    let q = dot_vectors(a, a)?;
    if q.abs() <= INVERSE_EPS {
        return Err(GaError::ZeroDirection);
    }
    Ok(q)
}

/// Component of `x` parallel to `a`: `(x . a^) a^`.
pub fn project(x: &Multivector, a: &Multivector) -> Result<Multivector> {
    let q = direction_square(a)?;
    Ok(a.scale(dot_vectors(x, a)? / q))
}

/// Component of `x` perpendicular to `a`: `(x ^ a^) a^`.
pub fn reject(x: &Multivector, a: &Multivector) -> Result<Multivector> {
    x.expect_grade(1)?;
    let q = direction_square(a)?;
    let xa = outer_product(x, a)?;
    Ok(geometric_product(&xa, a)?.scale(1.0 / q).grade_part(1))
}

/// Mirror image `B x B` of `x` in the plane of the unit 2-blade `B`:
/// the in-plane part is kept and the normal part negated. Works in any
/// signature as long as `B^2 = -1`.
pub fn reflect_in_plane(x: &Multivector, bv: &Multivector) -> Result<Multivector> {
    x.expect_grade(1)?;
    bv.expect_grade(2)?;
    let sq = geometric_product(bv, bv)?;
    let residual = sq.filter(|b| b.grade() != 0).max_abs();
    if residual > UNIT_EPS {
        return Err(GaError::NonBlade { residual });
    }
    let deviation = (sq.scalar_part() + 1.0).abs();
    if deviation > UNIT_EPS {
        return Err(GaError::NotUnit {
            what: "plane bivector",
            deviation,
        });
    }
    Ok(geometric_product(&geometric_product(bv, x)?, bv)?.grade_part(1))
}

/// `-n x n` in Euclidean 3-space: reflection in the plane with unit normal `n`.
pub fn reflect_normal(x: &Multivector, n: &Multivector) -> Result<Multivector> {
    n.sig().ensure(Signature::G3)?;
    x.expect_grade(1)?;
    expect_unit_vector("normal", n)?;
    Ok(-geometric_product(&geometric_product(n, x)?, n)?.grade_part(1))
}

/// Rotor taking unit `a` to unit `b` in their common plane:
/// `(1 + b a) / |1 + b a|`, the square root of `b a`.
pub fn rotor_between(a: &Multivector, b: &Multivector) -> Result<Rotor> {
    a.sig().ensure_same(b.sig())?;
    expect_unit_vector("vector", a)?;
    expect_unit_vector("vector", b)?;
    if 1.0 + dot_vectors(a, b)? <= UNIT_EPS {
        return Err(GaError::Antipodal);
    }
    let ba = geometric_product(b, a)?;
    Rotor::normalize(Multivector::scalar(a.sig(), 1.0).try_add(&ba)?)
}

/// `R x ~R`.
pub fn rotate(x: &Multivector, r: &Rotor) -> Result<Multivector> {
    x.expect_grade(1)?;
    let rx = geometric_product(r.as_multivector(), x)?;
    Ok(geometric_product(&rx, &r.as_multivector().reverse())?.grade_part(1))
}

/// Rotates every vector in `xs` by `r`.
pub fn rotate_many(xs: &[Multivector], r: &Rotor, exec: Execution) -> Result<Vec<Multivector>> {
    let rev = r.as_multivector().reverse();
    exec.map(xs, |x| {
        x.expect_grade(1)?;
        let rx = geometric_product(r.as_multivector(), x)?;
        Ok(geometric_product(&rx, &rev)?.grade_part(1))
    })
    .into_iter()
    .collect()
}

/// Rotor `n2 n1` equivalent to reflecting in the plane normal to `n1` and
/// then in the plane normal to `n2`. The rotation angle is twice the angle
/// between the normals.
pub fn rotor_from_reflections(n1: &Multivector, n2: &Multivector) -> Result<Rotor> {
    n1.sig().ensure(Signature::G3)?;
    n2.sig().ensure(Signature::G3)?;
    expect_unit_vector("normal", n1)?;
    expect_unit_vector("normal", n2)?;
    Rotor::normalize(geometric_product(n2, n1)?)
}

/// `R2 R1`, renormalized: apply `r1` first, then `r2`.
pub fn compose_rotors(r1: &Rotor, r2: &Rotor) -> Result<Rotor> {
    Rotor::normalize(geometric_product(r2.as_multivector(), r1.as_multivector())?)
}
