//! Bilinear products and the algebraic services built on them.
//!
//! All three products share one accumulation loop and differ only in which
//! blade pairs they keep:
//!
//! * geometric: every pair;
//! * outer: disjoint pairs, i.e. `<A_r B_s>_{r+s}`;
//! * inner: nested pairs, i.e. `<A_r B_s>_{|r-s|}`, with scalars contracting
//!   to zero unless both operands are scalar.
//!
//! The inner product is defined in the source material only for `a.b` and
//! `a.(b^c)`; the grade contraction is the common extension of both cases.

use crate::blade::{blade_product, BladeIndex};
use crate::error::{GaError, Result};
use crate::exec::Execution;
use crate::multivector::Multivector;
use crate::signature::Signature;
use crate::tolerance::{INVERSE_EPS, UNIT_EPS};

/// Products with fewer term pairs than this stay on the calling thread.
const PARALLEL_PAIRS: usize = 1 << 14;

type Keep = fn(BladeIndex, BladeIndex) -> bool;

fn keep_all(_: BladeIndex, _: BladeIndex) -> bool {
    true
}

fn keep_outer(a: BladeIndex, b: BladeIndex) -> bool {
    a.bits() & b.bits() == 0
}

fn keep_inner(a: BladeIndex, b: BladeIndex) -> bool {
    let (x, y) = (a.bits(), b.bits());
    if x == 0 || y == 0 {
        return x == 0 && y == 0;
    }
    x & y == x || x & y == y
}

fn product(a: &Multivector, b: &Multivector, keep: Keep, exec: Execution) -> Result<Multivector> {
    let sig = a.sig();
    sig.ensure_same(b.sig())?;
    let n = sig.blade_count();
    let lhs: Vec<(BladeIndex, f64)> = a.terms().collect();

    if exec.is_parallel() && a.len() * b.len() >= PARALLEL_PAIRS {
        // Output-major: each output coefficient sums its contributions in
        // the same order (lhs terms ascending) as the pair-major loop below,
        // so both paths agree to the bit.
        let mut rhs: Vec<Option<f64>> = vec![None; n];
        for (blade, c) in b.terms() {
            rhs[blade.bits() as usize] = Some(c);
        }
        let dense = exec.map_range(0..n, |k| {
            let mut acc = 0.0;
            for &(ba, ca) in &lhs {
                let j = ba.bits() ^ k as u16;
                if let Some(cb) = rhs[j as usize] {
                    let bb = BladeIndex::from_bits(j);
                    if keep(ba, bb) {
                        let (s, _) = blade_product(sig, ba, bb);
                        acc += ca * cb * f64::from(s);
                    }
                }
            }
            acc
        });
        return Ok(Multivector::from_dense(sig, &dense));
    }

    let mut dense = vec![0.0; n];
    for &(ba, ca) in &lhs {
        for (bb, cb) in b.terms() {
            if keep(ba, bb) {
                let (s, out) = blade_product(sig, ba, bb);
                dense[out.bits() as usize] += ca * cb * f64::from(s);
            }
        }
    }
    Ok(Multivector::from_dense(sig, &dense))
}

/// Geometric product `AB`.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    product(a, b, keep_all, Execution::default())
}

/// Geometric product with an explicit execution mode. The result does not
/// depend on the mode.
pub fn geometric_product_with(a: &Multivector, b: &Multivector, exec: Execution) -> Result<Multivector> {
    product(a, b, keep_all, exec)
}

/// Outer (wedge) product `A ∧ B`.
pub fn outer_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    product(a, b, keep_outer, Execution::default())
}

/// Grade-contraction inner product `A . B`.
pub fn inner_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    product(a, b, keep_inner, Execution::default())
}

/// `a . b = (ab + ba)/2` for vectors, weighted by the metric.
pub fn dot_vectors(a: &Multivector, b: &Multivector) -> Result<f64> {
    a.expect_grade(1)?;
    b.expect_grade(1)?;
    Ok(inner_product(a, b)?.scalar_part())
}

/// `a . B = (aB - Ba)/2` for a vector and a bivector; a vector.
pub fn inner_mixed(a: &Multivector, bv: &Multivector) -> Result<Multivector> {
    a.expect_grade(1)?;
    bv.expect_grade(2)?;
    let ab = geometric_product(a, bv)?;
    let ba = geometric_product(bv, a)?;
    Ok(ab.try_sub(&ba)?.scale(0.5).grade_part(1))
}

/// `a^{-1} = a / (a.a)`.
pub fn vector_inverse(a: &Multivector) -> Result<Multivector> {
    let square = dot_vectors(a, a)?;
    if square.abs() <= INVERSE_EPS {
        return Err(GaError::SingularVector { square });
    }
    Ok(a.scale(1.0 / square))
}

/// Grade involution: odd grades negated.
pub fn involute(a: &Multivector) -> Multivector {
    let odd = a.filter(|b| b.grade() % 2 == 1);
    a.try_sub(&odd.scale(2.0)).expect("same algebra")
}

/// Inverse of scalars, vectors, and any value `A` for which `A ~A` or
/// `A conj(A)` is a nonzero scalar (blades, versors, rotors).
pub fn inverse(a: &Multivector) -> Result<Multivector> {
    if a.is_grade(0) {
        let s = a.scalar_part();
        if s == 0.0 {
            return Err(GaError::NonInvertible);
        }
        return Ok(Multivector::scalar(a.sig(), 1.0 / s));
    }
    if a.is_grade(1) {
        return vector_inverse(a);
    }
    let rev = a.reverse();
    let conj = involute(&rev);
    for partner in [rev, conj] {
        let norm = geometric_product(a, &partner)?;
        let s = norm.scalar_part();
        let residual = norm.filter(|b| b.grade() != 0).max_abs();
        if s.abs() > INVERSE_EPS && residual <= UNIT_EPS * s.abs() {
            return Ok(partner.scale(1.0 / s));
        }
    }
    Err(GaError::NonInvertible)
}

/// `I A` with `I = e123`, restricted to Euclidean 3-space.
pub fn dual_g3(a: &Multivector) -> Result<Multivector> {
    a.sig().ensure(Signature::G3)?;
    geometric_product(&Multivector::pseudoscalar(Signature::G3), a)
}

/// Determinant-expansion cross product of two vectors in Euclidean 3-space.
pub fn cross_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.sig().ensure(Signature::G3)?;
    b.sig().ensure(Signature::G3)?;
    a.expect_grade(1)?;
    b.expect_grade(1)?;
    let (x, y) = (a.vector_components(), b.vector_components());
    Multivector::vector(
        Signature::G3,
        &[
            x[1] * y[2] - x[2] * y[1],
            x[2] * y[0] - x[0] * y[2],
            x[0] * y[1] - x[1] * y[0],
        ],
    )
}

/// Exponential of a 2-blade.
///
/// With `B^2 = -θ^2` this is `cos θ + B sin θ / θ`; with `B^2 = +φ^2` (mixed
/// signatures) `cosh φ + B sinh φ / φ`; a null bivector gives `1 + B`.
/// Bivectors whose square is not scalar are rejected.
pub fn exp_bivector(bv: &Multivector) -> Result<Multivector> {
    bv.expect_grade(2)?;
    let sig = bv.sig();
    if bv.is_zero() {
        return Ok(Multivector::scalar(sig, 1.0));
    }
    let sq = geometric_product(bv, bv)?;
    let s = sq.scalar_part();
    let residual = sq.filter(|b| b.grade() != 0).max_abs();
    if residual > UNIT_EPS * s.abs().max(1.0) {
        return Err(GaError::NonBlade { residual });
    }
    let (c, k) = if s < 0.0 {
        let theta = (-s).sqrt();
        (theta.cos(), theta.sin() / theta)
    } else if s > 0.0 {
        let phi = s.sqrt();
        (phi.cosh(), phi.sinh() / phi)
    } else {
        (1.0, 1.0)
    };
    Multivector::scalar(sig, c).try_add(&bv.scale(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::Tolerance;
    use std::f64::consts::PI;

    fn g3() -> Signature {
        Signature::G3
    }

    fn v(c: &[f64]) -> Multivector {
        Multivector::vector(g3(), c).unwrap()
    }

    fn blade(name: &str, c: f64) -> Multivector {
        Multivector::blade(g3(), BladeIndex::from_name(name).unwrap(), c).unwrap()
    }

    fn scalar(s: f64) -> Multivector {
        Multivector::scalar(g3(), s)
    }

    /// Partial sums of the power series, independent of the closed form.
    fn exp_series(bv: &Multivector, terms: usize) -> Multivector {
        let mut sum = scalar(1.0);
        let mut term = scalar(1.0);
        for n in 1..terms {
            term = (&term * bv).scale(1.0 / n as f64);
            sum = &sum + &term;
        }
        sum
    }

    #[test]
    fn vector_product_example() {
        // (e1 + 2e2)(3e1 + e2) = 3 + e12 + 6 e21 + 2 = 5 - 5 e12
        let p = &v(&[1.0, 2.0]) * &v(&[3.0, 1.0]);
        assert_eq!(p, &scalar(5.0) + &blade("e12", -5.0));
    }

    #[test]
    fn identities_and_pseudoscalar() {
        let a = &v(&[1.0, -2.0, 0.5]) + &blade("e23", 3.0);
        assert_eq!(&a * &scalar(1.0), a);
        let e123 = &(&blade("e1", 1.0) * &blade("e2", 1.0)) * &blade("e3", 1.0);
        assert_eq!(e123, Multivector::pseudoscalar(g3()));
    }

    #[test]
    fn outer_examples() {
        assert!((&blade("e1", 1.0) ^ &blade("e1", 1.0)).is_zero());
        let (a1, a2, b1, b2) = (1.5, -2.0, 0.25, 4.0);
        let w = &v(&[a1, a2]) ^ &v(&[b1, b2]);
        assert_eq!(w, blade("e12", a1 * b2 - a2 * b1));
        let s = &scalar(2.5) ^ &blade("e12", 1.0);
        assert_eq!(s, blade("e12", 2.5));
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot_vectors(&blade("e1", 1.0), &blade("e2", 1.0)).unwrap(), 0.0);
        assert_eq!(dot_vectors(&v(&[1.0, 2.0, 0.0]), &v(&[3.0, 1.0, 0.0])).unwrap(), 5.0);
        assert_eq!(dot_vectors(&v(&[1.0, 2.0, 2.0]), &v(&[1.0, 2.0, 2.0])).unwrap(), 9.0);
        assert!(matches!(
            dot_vectors(&blade("e12", 1.0), &blade("e1", 1.0)),
            Err(GaError::Grade { .. })
        ));
        let mixed = Signature::new(1, 1).unwrap();
        let e2 = Multivector::basis_vector(mixed, 2).unwrap();
        assert_eq!(dot_vectors(&e2, &e2).unwrap(), -1.0);
    }

    #[test]
    fn inner_mixed_examples() {
        assert_eq!(
            inner_mixed(&blade("e1", 1.0), &blade("e12", 1.0)).unwrap(),
            blade("e2", 1.0)
        );
        assert!(inner_mixed(&blade("e3", 1.0), &blade("e12", 1.0)).unwrap().is_zero());
        // the contraction operator agrees on this case
        assert_eq!(&blade("e1", 1.0) | &blade("e12", 1.0), blade("e2", 1.0));
        assert!(inner_mixed(&blade("e12", 1.0), &blade("e12", 1.0)).is_err());
    }

    #[test]
    fn contraction_scalar_rule() {
        assert!((&scalar(2.0) | &blade("e1", 1.0)).is_zero());
        assert_eq!(&scalar(2.0) | &scalar(3.0), scalar(6.0));
        assert_eq!(&blade("e12", 1.0) | &blade("e12", 1.0), scalar(-1.0));
        assert_eq!(&blade("e12", 1.0) | &blade("e123", 1.0), blade("e3", -1.0));
    }

    #[test]
    fn inverses() {
        assert_eq!(vector_inverse(&blade("e1", 2.0)).unwrap(), blade("e1", 0.5));
        assert_eq!(vector_inverse(&v(&[1.0, 1.0])).unwrap(), v(&[0.5, 0.5]));
        assert!(matches!(
            vector_inverse(&Multivector::zero(g3())),
            Err(GaError::SingularVector { .. })
        ));
        let null = Multivector::vector(Signature::new(1, 1).unwrap(), &[1.0, 1.0]).unwrap();
        assert!(vector_inverse(&null).is_err());

        let r = exp_bivector(&blade("e12", 0.3)).unwrap();
        let ri = inverse(&r).unwrap();
        assert!((&r * &ri).approx_eq(&scalar(1.0), Tolerance::default()));
        assert_eq!(inverse(&scalar(4.0)).unwrap(), scalar(0.25));
        assert_eq!(inverse(&scalar(0.0)), Err(GaError::NonInvertible));
        assert_eq!(
            inverse(&(&scalar(1.0) + &blade("e1", 1.0))),
            Err(GaError::NonInvertible)
        );
    }

    #[test]
    fn duality() {
        assert_eq!(dual_g3(&blade("e3", 1.0)).unwrap(), blade("e12", 1.0));
        let a = &v(&[1.0, 2.0, 3.0]) + &blade("e13", -0.5);
        assert_eq!(dual_g3(&dual_g3(&a).unwrap()).unwrap(), -&a);
        assert!(matches!(
            dual_g3(&Multivector::scalar(Signature::G2, 1.0)),
            Err(GaError::WrongSignature { .. })
        ));
    }

    #[test]
    fn cross_examples() {
        assert_eq!(
            cross_product(&blade("e1", 1.0), &blade("e2", 1.0)).unwrap(),
            blade("e3", 1.0)
        );
        let a = v(&[1.0, -3.0, 2.0]);
        assert!(cross_product(&a, &a).unwrap().is_zero());
        assert_eq!(
            cross_product(&v(&[1.0, 0.0, 0.0]), &v(&[0.0, 2.0, 0.0])).unwrap(),
            v(&[0.0, 0.0, 2.0])
        );
    }

    #[test]
    fn exponential() {
        let q = exp_bivector(&blade("e12", PI / 2.0)).unwrap();
        assert!(q.approx_eq(&blade("e12", 1.0), Tolerance::default()));
        let series = exp_series(&blade("e12", PI / 2.0), 40);
        assert!(q.approx_eq(&series, Tolerance::default()));

        assert_eq!(exp_bivector(&Multivector::zero(g3())).unwrap(), scalar(1.0));

        // theta I n for a unit normal n
        let n = v(&[2.0, -1.0, 2.0]).scale(1.0 / 3.0);
        let theta = 0.7;
        let i_n = dual_g3(&n).unwrap().scale(theta);
        let got = exp_bivector(&i_n).unwrap();
        let want = &scalar(theta.cos()) + &dual_g3(&n).unwrap().scale(theta.sin());
        assert!(got.approx_eq(&want, Tolerance::default()));
        assert!(got.approx_eq(&exp_series(&i_n, 40), Tolerance::default()));

        // hyperbolic case
        let g11 = Signature::new(1, 1).unwrap();
        let e12 = Multivector::blade(g11, BladeIndex::from_bits(0b11), 0.5).unwrap();
        let h = exp_bivector(&e12).unwrap();
        assert!((h.scalar_part() - 0.5f64.cosh()).abs() < 1e-15);
        assert!((h.get(BladeIndex::from_bits(0b11)) - 0.5f64.sinh()).abs() < 1e-15);

        let g4 = Signature::euclidean(4).unwrap();
        let b = Multivector::from_terms(
            g4,
            [
                (BladeIndex::from_bits(0b0011), 1.0),
                (BladeIndex::from_bits(0b1100), 1.0),
            ],
        )
        .unwrap();
        assert!(matches!(exp_bivector(&b), Err(GaError::NonBlade { .. })));
    }

    #[test]
    fn execution_modes_match_bitwise() {
        use rand::{Rng, SeedableRng};
        let sig = Signature::euclidean(9).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut random = || {
            Multivector::from_terms(
                sig,
                (0..sig.blade_count()).map(|i| (BladeIndex::from_bits(i as u16), rng.gen_range(-1.0..1.0))),
            )
            .unwrap()
        };
        let (a, b) = (random(), random());
        let seq = geometric_product_with(&a, &b, Execution::Sequential).unwrap();
        let par = geometric_product_with(&a, &b, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }
}
