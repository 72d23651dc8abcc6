//! Canonical basis blades encoded as bitsets.
//!
//! Bit `i` set means basis vector `e(i+1)` participates. The canonical factor
//! order is ascending index, so `e13` exists and `e31` does not.

use std::cmp::Ordering;
use std::fmt;

use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BladeIndex(u16);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);

    pub const fn from_bits(bits: u16) -> Self {
        BladeIndex(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// Blade of a single zero-based basis vector.
    pub const fn basis(i: usize) -> Self {
        BladeIndex(1 << i)
    }

    /// Blade built from one-based basis indices. Order and repetition are
    /// ignored; use [`BladeIndex::from_name`] for strict parsing.
    pub fn from_indices(indices: &[usize]) -> Self {
        BladeIndex(indices.iter().fold(0u16, |acc, &i| acc | (1 << (i - 1))))
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn fits(self, sig: Signature) -> bool {
        (self.0 as u32) < (1u32 << sig.dim())
    }

    /// One-based basis indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..16).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    /// Highest one-based index, 0 for the scalar blade.
    pub fn max_index(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    /// Parses `e1`, `e12`, `e123` (strictly ascending digits 1-9) or the long
    /// form `e_1_10_12` (strictly ascending decimal indices).
    pub fn from_name(name: &str) -> Result<Self, BladeNameError> {
        let rest = name.strip_prefix('e').ok_or(BladeNameError::NotBlade)?;
        if rest.is_empty() {
            return Err(BladeNameError::NotBlade);
        }
        let indices: Vec<usize> = if let Some(long) = rest.strip_prefix('_') {
            let mut out = Vec::new();
            for part in long.split('_') {
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(BladeNameError::NotBlade);
                }
                out.push(part.parse().map_err(|_| BladeNameError::NotBlade)?);
            }
            out
        } else if rest.bytes().all(|b| b.is_ascii_digit()) {
            rest.bytes().map(|b| (b - b'0') as usize).collect()
        } else {
            return Err(BladeNameError::NotBlade);
        };
        if indices.iter().any(|&i| i == 0 || i > 16) {
            return Err(BladeNameError::NonCanonical);
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BladeNameError::NonCanonical);
        }
        Ok(Self::from_indices(&indices))
    }

    /// All blades of `sig` in canonical order: by grade, then by bits.
    pub fn all(sig: Signature) -> Vec<BladeIndex> {
        let mut v: Vec<BladeIndex> = (0..sig.blade_count() as u16).map(BladeIndex).collect();
        v.sort();
        v
    }

    /// Sign picked up by reversing the factor order, `(-1)^{k(k-1)/2}`.
    pub const fn reverse_sign(self) -> f64 {
        match self.grade() % 4 {
            0 | 1 => 1.0,
            _ => -1.0,
        }
    }
}

impl Ord for BladeIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for BladeIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        if self.max_index() <= 9 {
            f.write_str("e")?;
            for i in self.indices() {
                write!(f, "{i}")?;
            }
        } else {
            f.write_str("e")?;
            for i in self.indices() {
                write!(f, "_{i}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BladeNameError {
    /// Not of the form `e<digits>` or `e_<n>_<n>...`.
    NotBlade,
    /// Indices out of ascending order, repeated, or zero.
    NonCanonical,
}

/// Product of two basis blades: `(sign, blade)` with `a * b = sign * blade`.
///
/// The sign combines the parity of the transpositions that sort the
/// concatenated factor list with the metric squares of the annihilated
/// shared factors. Under a non-degenerate metric the sign is never 0.
pub fn blade_product(sig: Signature, a: BladeIndex, b: BladeIndex) -> (i8, BladeIndex) {
    let (x, y) = (a.0 as u32, b.0 as u32);
    // each factor of b must pass every factor of a with a larger index
    let mut swaps = 0u32;
    let mut rest = y;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (x >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    let negative_squares = (x & y & sig.negative_mask() as u32).count_ones();
    let sign = if (swaps + negative_squares).is_multiple_of(2) {
        1
    } else {
        -1
    };
    (sign, BladeIndex((x ^ y) as u16))
}
