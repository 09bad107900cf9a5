//! The algebra of a graph over an exact coefficient field.

pub mod element;
pub mod free;
pub mod maps;
pub mod scalar;

pub use element::{
    degree_split, equal, multiply, multiply_raw, normal_form, AlgebraElement, Monomial, PathTerm,
};
pub use free::{defining_relations, FreeElement, FreeGen, FreeWord, Relation};
pub use maps::{
    end_iso_phi, in_split_pi, move_r_psi, verify_generator_map, GeneratorMap, MapReport,
};
pub use scalar::{Gf, Gf7, Scalar};
