//! Exact computations with composition algebras, Albert algebras, Brown
//! algebras and their order-two automorphisms, plus the bookkeeping needed
//! to count k-involutions of groups of type E6 over common fields.
//!
//! Everything is exact: scalars live in `Q` (arbitrary precision) or `F_p`
//! with `p >= 5`. Real and p-adic places only appear as tags for
//! classification verdicts.

pub mod albert;
pub mod brown;
pub mod cda;
pub mod cli;
pub mod error;
pub mod invol;
pub mod kac;
pub mod linalg;
pub mod linmap;
pub mod qclass;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Cardinality, FieldSpec, Scalar};
