//! Finite-dimensional real algebras by structure constants, the Euclidean
//! Jordan algebras, and the checks that certify them.

pub mod algebra;
pub mod construct;
pub mod spec;
pub mod spectral;
pub mod spin;
pub mod trace;
pub mod verify;

pub use algebra::{isomorphism_witness, AlgebraSC};
pub use construct::{
    albert_algebra, direct_sum, division_algebra, hermitian_dim, make_hermitian, make_jspin, make_spin_factor, matrix_algebra,
};
pub use spec::AlgebraSpec;
pub use spectral::{capacity_estimate, minimal_polynomial, poly_calculus, spectral_resolution, SpectralResolution};
pub use spin::{jspin_recognize, SpinRecognition};
pub use trace::{euclidean_check, trace_form};
pub use verify::{verify_jordan, verify_power_assoc};
