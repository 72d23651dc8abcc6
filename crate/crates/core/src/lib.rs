//! Geometric (Clifford) algebra kernel over real signatures `G(p,q)`,
//! `p + q <= 12`.
//!
//! Values are sparse [`Multivector`]s keyed by bitset [`BladeIndex`]es. The
//! kernel provides the geometric, outer and inner products, reversion,
//! inverses and exponentials, and on top of them projections, reflections
//! and rotors ([`transforms`]), lines/planes/triangles ([`geometry`]) and
//! stereographic projection ([`stereo`]).
//!
//! ```
//! use ga_core::{Multivector, Signature};
//!
//! let g3 = Signature::G3;
//! let a = Multivector::vector(g3, &[1.0, 2.0]).unwrap();
//! let b = Multivector::vector(g3, &[3.0, 1.0]).unwrap();
//! // ab = a.b + a^b
//! assert_eq!((&a * &b).to_string(), "5 - 5*e12");
//! ```
//!
//! Batch routines take an [`Execution`]; with the default `parallel` feature
//! they can fan out over rayon.

pub mod blade;
pub mod cayley;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod multivector;
pub mod products;
pub mod signature;
pub mod stereo;
pub mod tolerance;
pub mod transforms;

pub use blade::{blade_product, BladeIndex, BladeNameError};
pub use cayley::{cayley_table, cayley_table_with, CayleyTable, SignedBlade, MAX_TABLE_DIM};
pub use error::{GaError, Result};
pub use exec::Execution;
pub use multivector::Multivector;
pub use products::{
    cross_product, dot_vectors, dual_g3, exp_bivector, geometric_product, geometric_product_with, inner_mixed,
    inner_product, inverse, outer_product, vector_inverse,
};
pub use signature::{Signature, MAX_DIM};
pub use tolerance::Tolerance;
pub use transforms::{
    compose_rotors, project, reflect_in_plane, reflect_normal, reject, rotate, rotate_many, rotor_between,
    rotor_from_reflections, Rotor,
};
