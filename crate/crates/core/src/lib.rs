//! Regular languages of the form `KaL` and their algebraic invariants.
//!
//! The crate computes minimal complete DFAs, the marked concatenation
//! `K·a·L`, transition and syntactic monoids, Green's-relation chain
//! statistics, the Schützenberger product `M◊N` with the homomorphism
//! `μ_a` into it, and the free monoids of the first level of the
//! polynomial hierarchy over a locally finite variety.
//!
//! ```
//! use kal_core::constructions::{prop2_k, prop2_l};
//! use kal_core::kal::kal_construct;
//!
//! let kal = kal_construct(&prop2_k(2)?, &prop2_l(3)?, 'a')?.minimize();
//! assert_eq!(kal.state_count(), 16);
//! # Ok::<(), kal_core::Error>(())
//! ```

pub mod alphabet;
pub mod bits;
pub mod bounds;
pub mod constructions;
pub mod dfa;
pub mod error;
pub mod kal;
pub mod monoid;
pub mod schutz;
pub mod verify;
pub mod xi;

pub use alphabet::{Alphabet, Letter, Word};
pub use dfa::{parse_dfa, CompleteDfa};
pub use error::{Error, Result};
pub use monoid::{FiniteMonoid, MonoidHom, RecognizedLanguage};
pub use schutz::{SchutzElement, SchutzProduct};
