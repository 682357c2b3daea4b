//! A laboratory for finite semigroups: inverse semigroups, automorphisms that
//! fix exactly the idempotents, the map `x ↦ x⁻¹·(xα)`, Clifford decomposition,
//! nilpotence, and exhaustive enumeration of small semigroups up to isomorphism
//! with executable checks of statements about them.

pub mod divisibility;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod io;
pub mod morphisms;
pub mod nilpotence;
pub mod partialperm;
pub mod structure;
pub mod table;
pub mod verify;

pub use enumerate::{canonical_form, enumerate_semigroups, CanonicalTable, Corpus, Filter};
pub use error::{Error, Result};
pub use morphisms::{automorphism_group, Automorphism, PsiMap};
pub use table::{ElementId, FiniteSemigroup, UnaryMap};
pub use verify::{Statement, TheoremReport};
