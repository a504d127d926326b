//! Exact linear algebra over the integers and over Z/2.

mod lattice;
mod matrix;
mod mod2;
mod skew;
mod snf;

pub use lattice::{gcd_vector, hermite_coordinates, hermite_rows, is_primitive, kernel_basis};
pub use matrix::{block_diagonal, dot, int_vec, standard_symplectic, IntMatrix, IntVector};
pub use mod2::{solve_mod2, Mod2Matrix};
pub use skew::{
    complete_family, complete_pair, complete_to_symplectic, isotropic_partners, skew_abs_det, skew_gram, skew_normal_form, SkewForm,
    SkewNormalForm,
};
pub use snf::{abs_det, is_unimodular, rank, snf, unimodular_inverse, SmithDecomposition};
