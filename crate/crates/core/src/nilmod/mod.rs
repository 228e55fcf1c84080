//! Nilpotent operators over prime fields and their invariant subspaces.

pub mod catalog;
mod embedding;
pub mod gallery;
mod graded;
mod hom;
mod json;
mod module;
pub mod oracle;
mod witness;

pub use catalog::{
    catalog_multiplicities, default_catalog, iso_fingerprint, pole_catalog, s4_catalog, x_object, CatalogEntry,
};
pub use embedding::Embedding;
pub use graded::{
    empty_picket, graded_pole, is_graded_subspace, monomial_embedding, realize_pole, realize_tableau, zero_embedding,
    GradedPole,
};
pub use hom::{
    hom_dim, module_hom_dim, picket, picket_dominance_test, picket_embedding, picket_hom_profile, predicted_picket_hom,
};
pub use json::{matrix_residues, EmbeddingJson};
pub use module::{jordan_type, NilModule};
pub use oracle::{census_with_catalog, enumerate_submodules_oracle, Census, OracleOptions, TupleOrder};
pub use witness::{is_degree_zero, verify, witness_sequence, Check, WitnessReport, WitnessSequence};
