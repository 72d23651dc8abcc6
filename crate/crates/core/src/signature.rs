use std::fmt;

use crate::error::{GaError, Result};

/// Largest supported dimension `p + q`.
pub const MAX_DIM: usize = 12;

/// Metric signature `G(p,q)`: basis vectors `e1..ep` square to +1 and
/// `e(p+1)..e(p+q)` square to -1. Degenerate metrics are not supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    /// Euclidean 3-space.
    pub const G3: Signature = Signature { p: 3, q: 0 };
    /// Euclidean plane.
    pub const G2: Signature = Signature { p: 2, q: 0 };

    pub fn new(p: usize, q: usize) -> Result<Self> {
        let dim = p + q;
        if dim == 0 || dim > MAX_DIM {
            return Err(GaError::InvalidSignature { p, q, max: MAX_DIM });
        }
        Ok(Signature { p: p as u8, q: q as u8 })
    }

    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn p(self) -> usize {
        self.p as usize
    }

    pub fn q(self) -> usize {
        self.q as usize
    }

    pub fn dim(self) -> usize {
        self.p() + self.q()
    }

    /// Number of basis blades, `2^dim`.
    pub fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Square of the zero-based basis vector `i`.
    pub fn square(self, i: usize) -> f64 {
        if i < self.p() {
            1.0
        } else {
            -1.0
        }
    }

    /// Bitmask of basis vectors squaring to -1.
    pub(crate) fn negative_mask(self) -> u16 {
        (((1u32 << self.dim()) - 1) & !((1u32 << self.p()) - 1)) as u16
    }

    pub(crate) fn ensure_same(self, other: Signature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(GaError::SignatureMismatch {
                left: self,
                right: other,
            })
        }
    }

    pub(crate) fn ensure(self, expected: Signature) -> Result<()> {
        if self == expected {
            Ok(())
        } else {
            Err(GaError::WrongSignature { expected, found: self })
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.p, self.q)
    }
}
