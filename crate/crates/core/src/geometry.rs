//! Lines, planes and triangles built from vectors and bivectors.
//!
//! Containment tests are relative: the wedge residual is compared against
//! `tol * |direction| * max(1, |x - x0|)`.

use crate::error::{GaError, Result};
use crate::multivector::Multivector;
use crate::products::{dot_vectors, geometric_product, outer_product};
use crate::signature::Signature;
use crate::tolerance::COLLINEAR_EPS;

/// `{ x : (x - x0) ^ a = 0 }`.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    origin: Multivector,
    direction: Multivector,
}

impl Line {
    pub fn new(origin: Multivector, direction: Multivector) -> Result<Self> {
        origin.sig().ensure_same(direction.sig())?;
        origin.expect_grade(1)?;
        if dot_vectors(&direction, &direction)? <= 0.0 {
            return Err(GaError::ZeroDirection);
        }
        Ok(Line { origin, direction })
    }

    pub fn origin(&self) -> &Multivector {
        &self.origin
    }

    pub fn direction(&self) -> &Multivector {
        &self.direction
    }

    fn unit_direction(&self) -> Multivector {
        self.direction.scale(1.0 / self.direction.norm())
    }
}

/// `{ x : (x - x0) ^ B = 0 }` for a 2-blade `B`.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane {
    origin: Multivector,
    bivector: Multivector,
}

impl Plane {
    pub fn new(origin: Multivector, bivector: Multivector) -> Result<Self> {
        origin.sig().ensure_same(bivector.sig())?;
        origin.expect_grade(1)?;
        bivector.expect_grade(2)?;
        if bivector.is_zero() {
            return Err(GaError::ZeroDirection);
        }
        let sq = geometric_product(&bivector, &bivector)?;
        let residual = sq.filter(|b| b.grade() != 0).max_abs();
        if residual > 1e-12 * sq.scalar_part().abs().max(1.0) {
            return Err(GaError::NonBlade { residual });
        }
        Ok(Plane { origin, bivector })
    }

    /// Plane through `origin` spanned by `a` and `b`.
    pub fn spanned(origin: Multivector, a: &Multivector, b: &Multivector) -> Result<Self> {
        a.expect_grade(1)?;
        b.expect_grade(1)?;
        Self::new(origin, outer_product(a, b)?)
    }

    pub fn origin(&self) -> &Multivector {
        &self.origin
    }

    pub fn bivector(&self) -> &Multivector {
        &self.bivector
    }
}

/// Triangle stored by its side vectors with `a + b = c`.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle {
    a: Multivector,
    b: Multivector,
    c: Multivector,
}

impl Triangle {
    /// Sides `a`, `b`; the third side is `c = a + b`.
    pub fn from_sides(a: Multivector, b: Multivector) -> Result<Self> {
        a.expect_grade(1)?;
        b.expect_grade(1)?;
        let c = a.try_add(&b)?;
        Ok(Triangle { a, b, c })
    }

    /// Sides `a = q - p`, `b = r - q`, `c = r - p`.
    pub fn from_vertices(p: &Multivector, q: &Multivector, r: &Multivector) -> Result<Self> {
        for x in [p, q, r] {
            x.expect_grade(1)?;
        }
        Ok(Triangle {
            a: q.try_sub(p)?,
            b: r.try_sub(q)?,
            c: r.try_sub(p)?,
        })
    }

    pub fn a(&self) -> &Multivector {
        &self.a
    }

    pub fn b(&self) -> &Multivector {
        &self.b
    }

    pub fn c(&self) -> &Multivector {
        &self.c
    }
}

pub fn line_contains(line: &Line, x: &Multivector, tol: f64) -> Result<bool> {
    let d = x.try_sub(&line.origin)?;
    d.expect_grade(1)?;
    let residual = outer_product(&d, &line.direction)?.norm();
    Ok(residual <= tol * line.direction.norm() * d.norm().max(1.0))
}

/// `x0 + [(p - x0) . a^] a^`.
pub fn closest_point_on_line(line: &Line, p: &Multivector) -> Result<Multivector> {
    let unit = line.unit_direction();
    let t = dot_vectors(&p.try_sub(&line.origin)?, &unit)?;
    line.origin.try_add(&unit.scale(t))
}

/// Length of the part of `x0 - p` perpendicular to the line.
///
/// `sqrt((x0-p)^2 - ((x0-p).a^)^2)` is evaluated as `|(x0 - p) ^ a^|`, the
/// same quantity without the cancellation near the line.
pub fn distance_to_line(line: &Line, p: &Multivector) -> Result<f64> {
    let d = line.origin.try_sub(p)?;
    d.expect_grade(1)?;
    Ok(outer_product(&d, &line.unit_direction())?.norm())
}

pub fn plane_contains(plane: &Plane, x: &Multivector, tol: f64) -> Result<bool> {
    let d = x.try_sub(&plane.origin)?;
    d.expect_grade(1)?;
    let residual = outer_product(&d, &plane.bivector)?.norm();
    Ok(residual <= tol * plane.bivector.norm() * d.norm().max(1.0))
}

/// Normal `n = -I B` of a plane in Euclidean 3-space, so that `B = I n`
/// and `(x - x0) . n = 0` on the plane.
pub fn plane_normal(plane: &Plane) -> Result<Multivector> {
    plane.bivector.sig().ensure(Signature::G3)?;
    let i = Multivector::pseudoscalar(Signature::G3);
    Ok(-geometric_product(&i, &plane.bivector)?)
}

/// `| |a|^2 + 2 a.b + |b|^2 - |c|^2 |`.
pub fn triangle_check_cosine_law(t: &Triangle) -> Result<f64> {
    let aa = dot_vectors(&t.a, &t.a)?;
    let bb = dot_vectors(&t.b, &t.b)?;
    let ab = dot_vectors(&t.a, &t.b)?;
    let cc = dot_vectors(&t.c, &t.c)?;
    Ok((aa + 2.0 * ab + bb - cc).abs())
}

/// The three ratios `sin A/|a|`, `sin B/|b|`, `sin C/|c|`, with the sines
/// taken as `|c^ ^ b^|`, `|a^ ^ c^|`, `|a^ ^ b^|`.
pub fn sine_law_ratios(t: &Triangle) -> Result<[f64; 3]> {
    let (la, lb, lc) = (t.a.norm(), t.b.norm(), t.c.norm());
    if la == 0.0 || lb == 0.0 || lc == 0.0 {
        return Err(GaError::Collinear);
    }
    let (ua, ub, uc) = (t.a.scale(1.0 / la), t.b.scale(1.0 / lb), t.c.scale(1.0 / lc));
    let sin_c = outer_product(&ua, &ub)?.norm();
    if sin_c <= COLLINEAR_EPS {
        return Err(GaError::Collinear);
    }
    let sin_a = outer_product(&uc, &ub)?.norm();
    let sin_b = outer_product(&ua, &uc)?.norm();
    Ok([sin_a / la, sin_b / lb, sin_c / lc])
}

/// Largest pairwise difference of the sine-law ratios.
pub fn triangle_check_sine_law(t: &Triangle) -> Result<f64> {
    let [x, y, z] = sine_law_ratios(t)?;
    Ok((x - y).abs().max((y - z).abs()).max((x - z).abs()))
}

/// `|a ^ b| / 2`.
pub fn triangle_area(t: &Triangle) -> Result<f64> {
    Ok(0.5 * outer_product(&t.a, &t.b)?.norm())
}
