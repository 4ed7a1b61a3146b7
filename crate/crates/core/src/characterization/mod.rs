//! The two sides of the characterization: triple-count fits with `Δ₂ > 0`,
//! and the endpoint-2 module census.

mod closed_form;
mod conditions;
mod fit;
mod triples;
mod wvectors;

pub use closed_form::{closed_form_alpha_beta, ClosedFormError};
pub use conditions::{condition_i, condition_ii, ConditionI, ConditionII, VertexSummary};
pub use fit::{fit_affine, three_scalar_fit, AffineFit, FitKind, ThreeScalarFit};
pub use triples::{collect_triples, collect_triples_at, TripleCountSample};
pub use wvectors::{
    vector_form_check, w_inner_products_check, w_vectors, LemmaCheck, LemmaFailure, VectorFormCheck, WVectors,
};
