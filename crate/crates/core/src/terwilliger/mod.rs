//! Subconstituent algebra objects at a base vertex and the irreducible
//! modules of endpoint 0, 1 and 2.

mod context;
mod delta;
mod modules;
mod polynomials;
mod recurrence;
mod spectrum;

pub use context::{build_context, ContextError, TContext};
pub use delta::{delta, p_i_2i, DeltaIndexError};
pub use modules::{
    endpoint1_space, endpoint2_modules, ladder, max_cross_class_overlap, primary_module, Endpoint1Space,
    Endpoint2Census, IsoClass, Ladder, ModuleError, NonThinSeed, NumericCheck, TModuleRecord,
};
pub use polynomials::{check_ai_eq_vi_of_a, scaled_v_polynomials, v_polynomials, PolynomialMismatch};
pub use recurrence::{phi_omega, psi, PhiOmegaSequences, Psi};
pub use spectrum::{local_spectrum, LocalSpectrum, Phi2Class, SpectrumError};
