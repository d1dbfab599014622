//! Exact representation theory of the singlet vertex algebras `M(p)` and of
//! the cyclic orbifolds `W(p)^{A_m}` of the triplet algebra.
//!
//! The crate works with module labels rather than modules: simple and
//! projective classification, tensor products, duals, Loewy data, gradings,
//! twist phases and truncated characters, all in exact rational arithmetic.
//!
//! ```
//! use singlet_core::{fusion, structure::Indecomposable, weights::Params};
//!
//! let p = Params::new(2).unwrap();
//! let m12 = Indecomposable::simple(&p, 1, 2).unwrap();
//! let prod = fusion::fuse_pair(&p, &m12, &m12).unwrap();
//! assert_eq!(prod.to_string(), "P(1,1)");
//! ```

pub mod characters;
pub mod error;
pub mod fusion;
pub mod multiset;
pub mod oracle;
pub mod orbifold;
pub mod rational;
pub mod structure;
pub mod universe;
pub mod weights;

pub use error::{Error, Result};
pub use multiset::Multiset;
pub use structure::{Indecomposable, KClass, ModuleExpr};
pub use weights::{Params, UnitPhase, Weight};
