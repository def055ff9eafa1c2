//! Rough-set approximation operators and matroids on finite universes.
//!
//! A serial and transitive relation `R` induces a matroid `M(R)` whose
//! circuits are the minimal successor neighborhoods of `R`; a matroid `M`
//! induces the equivalence relation `R(M)` of elements sharing a circuit.
//! The [`enumeration`] module checks the relationships between the two
//! constructions, and between upper approximations and matroid closure,
//! exhaustively on universes of up to four elements.

pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod matroid;
pub mod relation;
pub mod sets;

pub use constructions::{
    compose_matroid_relation_matroid, compose_relation_matroid_relation,
    equivalence_upper_decomposition, matroid_from_relation, minimal_neighborhood_family,
    relation_from_matroid,
};
pub use enumeration::{
    catalog, enumerate_matroids, enumerate_relations, run_all, run_theorem, EntryKind, Outcome,
    PropertyFilter, VerificationReport, Witness,
};
pub use error::{Error, Result};
pub use matroid::{
    check_circuit_axioms, check_independence_axioms, circuits_from_independents, CircuitViolation,
    IndependenceViolation, Matroid,
};
pub use relation::{BinaryRelation, RelationProperties};
pub use sets::{ElemSet, SetFamily, Universe, MAX_UNIVERSE};
