//! Galerkin assembly: fractional integrals of splines, Toeplitz generators of
//! the stiffness and mass matrices, and load vectors.

pub mod fractional;
pub mod generators;
pub mod load;

pub use fractional::{frac_integral_monomial, frac_integral_piecewise, FractionalProfile, ProfileTerm};
pub use generators::{
    assemble_a, assemble_c2d, highorder_generators_1d, mass_entry_exact, mass_generators_1d, reference_entry,
    stiffness_entry_exact, stiffness_generators_1d, FractionalForm1D, FractionalForm2D,
};
pub use load::{eval_terms, load_vector_1d, load_vector_2d, PowerTerm, SeparableTerm, Side};
