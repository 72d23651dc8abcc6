use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, BitOr, BitXor, Mul, Neg, Sub};

use crate::blade::BladeIndex;
use crate::error::{GaError, Result};
use crate::products;
use crate::signature::Signature;
use crate::tolerance::Tolerance;

/// Sparse multivector: a finite map from canonical blades to coefficients
/// within one algebra.
///
/// Exact zeros are never stored, so two values compare equal with `==`
/// precisely when they agree coefficient by coefficient. Iteration order is
/// canonical: by grade, then by blade bits.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<BladeIndex, f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        let mut mv = Self::zero(sig);
        mv.insert(BladeIndex::SCALAR, value);
        mv
    }

    pub fn blade(sig: Signature, blade: BladeIndex, coef: f64) -> Result<Self> {
        check_fits(sig, blade)?;
        let mut mv = Self::zero(sig);
        mv.insert(blade, coef);
        Ok(mv)
    }

    /// One-based basis vector `e_i`.
    pub fn basis_vector(sig: Signature, i: usize) -> Result<Self> {
        if i == 0 || i > sig.dim() {
            return Err(GaError::BladeOutOfRange { index: i, sig });
        }
        Self::blade(sig, BladeIndex::basis(i - 1), 1.0)
    }

    /// Grade-1 value from leading components; missing components are zero.
    pub fn vector(sig: Signature, components: &[f64]) -> Result<Self> {
        if components.len() > sig.dim() {
            return Err(GaError::BladeOutOfRange {
                index: components.len(),
                sig,
            });
        }
        let mut mv = Self::zero(sig);
        for (i, &c) in components.iter().enumerate() {
            mv.insert(BladeIndex::basis(i), c);
        }
        Ok(mv)
    }

    /// Sums coefficients of repeated blades.
    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BladeIndex, f64)>,
    {
        let mut acc: BTreeMap<BladeIndex, f64> = BTreeMap::new();
        for (b, c) in terms {
            check_fits(sig, b)?;
            *acc.entry(b).or_insert(0.0) += c;
        }
        let mut mv = Self::zero(sig);
        for (b, c) in acc {
            mv.insert(b, c);
        }
        Ok(mv)
    }

    /// Unit pseudoscalar `e12...n`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        let bits = (sig.blade_count() - 1) as u16;
        let mut mv = Self::zero(sig);
        mv.insert(BladeIndex::from_bits(bits), 1.0);
        mv
    }

    /// Builds from a dense coefficient array indexed by blade bits.
    pub(crate) fn from_dense(sig: Signature, dense: &[f64]) -> Self {
        debug_assert_eq!(dense.len(), sig.blade_count());
        let terms = dense
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(i, &c)| (BladeIndex::from_bits(i as u16), c))
            .collect();
        Multivector { sig, terms }
    }

    fn insert(&mut self, blade: BladeIndex, coef: f64) {
        if coef != 0.0 {
            self.terms.insert(blade, coef);
        }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (BladeIndex, f64)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, *c))
    }

    #[allow(clippy::len_without_is_empty)] // `is_zero` plays that role
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, blade: BladeIndex) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    pub fn scalar_part(&self) -> f64 {
        self.get(BladeIndex::SCALAR)
    }

    /// Coefficients of `e1..en`.
    pub fn vector_components(&self) -> Vec<f64> {
        (0..self.sig.dim()).map(|i| self.get(BladeIndex::basis(i))).collect()
    }

    /// Distinct grades present, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.dedup();
        g
    }

    /// True if every stored term has grade `k`. Zero is homogeneous of any grade.
    pub fn is_grade(&self, k: usize) -> bool {
        self.terms.keys().all(|b| b.grade() == k)
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    pub fn expect_grade(&self, k: usize) -> Result<()> {
        if self.is_grade(k) {
            Ok(())
        } else {
            Err(GaError::Grade {
                expected: k,
                found: self.grades(),
            })
        }
    }

    /// `<A>_k`. Grades above the dimension give zero.
    pub fn grade_part(&self, k: usize) -> Self {
        self.filter(|b| b.grade() == k)
    }

    pub(crate) fn filter(&self, keep: impl Fn(BladeIndex) -> bool) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, *c))
                .collect(),
        }
    }

    /// Reversion: grade `k` scaled by `(-1)^{k(k-1)/2}`.
    pub fn reverse(&self) -> Self {
        self.map_terms(|b, c| c * b.reverse_sign())
    }

    fn map_terms(&self, f: impl Fn(BladeIndex, f64) -> f64) -> Self {
        let mut out = Self::zero(self.sig);
        for (&b, &c) in &self.terms {
            out.insert(b, f(b, c));
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_terms(|_, c| c * s)
    }

    /// `<A ~A>_0`, evaluated term by term.
    pub fn reverse_norm_squared(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&b, &c)| {
                let (sign, _) = crate::blade::blade_product(self.sig, b, b);
                c * c * f64::from(sign) * b.reverse_sign()
            })
            .sum()
    }

    /// `sqrt(|<A ~A>_0|)`. Vector length, bivector area, 1 for unit rotors.
    pub fn norm(&self) -> f64 {
        self.reverse_norm_squared().abs().sqrt()
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient difference over the union of blades.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for (&b, &c) in &self.terms {
            m = m.max((c - other.get(b)).abs());
        }
        for (&b, &c) in &other.terms {
            if !self.terms.contains_key(&b) {
                m = m.max(c.abs());
            }
        }
        m
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.sig == other.sig
            && self.terms.iter().all(|(&b, &c)| tol.eq(c, other.get(b)))
            && other.terms.iter().all(|(&b, &c)| tol.eq(self.get(b), c))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.sig.ensure_same(other.sig)?;
        let mut out = self.clone();
        for (&b, &c) in &other.terms {
            let v = out.get(b) + c;
            if v == 0.0 {
                out.terms.remove(&b);
            } else {
                out.terms.insert(b, v);
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Geometric product.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        products::geometric_product(self, other)
    }

    /// Outer product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        products::outer_product(self, other)
    }

    /// Grade-contraction inner product.
    pub fn inner(&self, other: &Self) -> Result<Self> {
        products::inner_product(self, other)
    }
}

fn check_fits(sig: Signature, blade: BladeIndex) -> Result<()> {
    if blade.fits(sig) {
        Ok(())
    } else {
        Err(GaError::BladeOutOfRange {
            index: blade.max_index(),
            sig,
        })
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if b != BladeIndex::SCALAR && mag == 1.0 {
                write!(f, "{b}")?;
                continue;
            }
            write_coef(f, mag)?;
            if b != BladeIndex::SCALAR {
                write!(f, "*{b}")?;
            }
        }
        Ok(())
    }
}

/// Shortest round-trip decimal; exponent form outside `[1e-5, 1e16)`.
fn write_coef(f: &mut fmt::Formatter<'_>, x: f64) -> fmt::Result {
    if x.is_finite() && x != 0.0 && !(1e-5..1e16).contains(&x.abs()) {
        write!(f, "{x:e}")
    } else {
        write!(f, "{x}")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map_terms(|_, c| -c)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl $trait<&Multivector> for &Multivector {
            type Output = Multivector;
            /// Panics if the operands belong to different algebras.
            fn $method(self, rhs: &Multivector) -> Multivector {
                self.$call(rhs).expect("operands from different algebras")
            }
        }
        impl $trait<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                (&self).$method(rhs)
            }
        }
        impl $trait<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, gp);
binop!(BitXor, bitxor, wedge);
binop!(BitOr, bitor, inner);

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, mv: &Multivector) -> Multivector {
        mv.scale(self)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, mv: Multivector) -> Multivector {
        mv.scale(self)
    }
}
