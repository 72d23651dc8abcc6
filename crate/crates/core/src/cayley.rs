use std::fmt;

use crate::blade::{blade_product, BladeIndex};
use crate::error::{GaError, Result};
use crate::exec::Execution;
use crate::signature::Signature;

/// Largest dimension for which a full table is materialized.
pub const MAX_TABLE_DIM: usize = 6;

/// Signed basis blade, one cell of a multiplication table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedBlade {
    pub sign: i8,
    pub blade: BladeIndex,
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        write!(f, "{}", self.blade)
    }
}

/// Multiplication table of the basis blades, rows and columns in canonical
/// (grade, then index) order.
#[derive(Debug, Clone, PartialEq)]
pub struct CayleyTable {
    sig: Signature,
    blades: Vec<BladeIndex>,
    cells: Vec<SignedBlade>,
}

impl CayleyTable {
    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn blades(&self) -> &[BladeIndex] {
        &self.blades
    }

    pub fn size(&self) -> usize {
        self.blades.len()
    }

    /// Product of the `row`-th and `col`-th canonical blades.
    pub fn get(&self, row: usize, col: usize) -> SignedBlade {
        self.cells[row * self.size() + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[SignedBlade]> {
        self.cells.chunks(self.size())
    }
}

pub fn cayley_table(sig: Signature) -> Result<CayleyTable> {
    cayley_table_with(sig, Execution::default())
}

pub fn cayley_table_with(sig: Signature, exec: Execution) -> Result<CayleyTable> {
    if sig.dim() > MAX_TABLE_DIM {
        return Err(GaError::TableTooLarge {
            dim: sig.dim(),
            max: MAX_TABLE_DIM,
        });
    }
    let blades = BladeIndex::all(sig);
    let rows = exec.map(&blades, |&a| {
        blades
            .iter()
            .map(|&b| {
                let (sign, blade) = blade_product(sig, a, b);
                SignedBlade { sign, blade }
            })
            .collect::<Vec<_>>()
    });
    Ok(CayleyTable {
        sig,
        blades,
        cells: rows.into_iter().flatten().collect(),
    })
}
