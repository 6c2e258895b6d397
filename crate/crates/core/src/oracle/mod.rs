//! Brute-force ground truth over explicit small finite fields.

pub mod classes;
pub mod extensions;
pub mod field;
pub mod matrix;
pub mod subspace;

pub use classes::{
    all_matrices, class_of, ext_enumerate, families_enumerate, general_linear_group,
    irreducible_polys, unipotent_class_of, unipotent_elements, ExtVariant, FqPoly,
};
pub use extensions::{glu_extension_census, ExtensionCensus};
pub use field::FqField;
pub use matrix::FqMatrix;
pub use subspace::{
    count_fixed_flags, count_fixed_subspaces, schubert_cell_count, schubert_histogram, subspaces,
    SubspaceBasis,
};
