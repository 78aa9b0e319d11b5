//! Finite categories as explicit composition tables, with decision
//! procedures for products, coproducts and biproducts that need no additive
//! structure on the homsets.
//!
//! Every check returns a [`Verdict`]: a pass, a vacuous pass, or a named
//! failing clause with a counterexample made of morphism ids that can be
//! replayed against the table.

pub mod biproduct;
pub mod category;
pub mod dsl;
pub mod error;
pub mod gallery;
pub mod report;
pub mod universal;
pub mod verdict;

pub use category::{Category, FinCat, MorId, Morphism, ObjId, Op, MAX_MORPHISMS};
pub use error::{CMonError, GalleryError, StructureError, VerifyError};
pub use verdict::{Counterexample, Failure, Verdict};
