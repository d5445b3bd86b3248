//! Numerical computation of geometric constants of two-dimensional Banach
//! spaces, with closed-form oracles for the Banaś–Frączek plane and its
//! generalization.
//!
//! The crate is organized around five layers:
//!
//! - [`norm_spaces`]: the normed planes themselves (norms, unit spheres,
//!   extreme points);
//! - [`functionals`]: the expression inside each constant's supremum,
//!   evaluated at fixed points;
//! - [`sup_search`]: deterministic grid search plus derivative-free
//!   refinement computing the suprema;
//! - [`closed_forms`]: the exact values known for these spaces, used as
//!   verification oracles;
//! - [`lemma_kernels`] and [`properties`]: the auxiliary inequalities behind
//!   the bounds and the structural-property predicates derived from them.

pub mod closed_forms;
pub mod error;
pub mod functionals;
pub mod lemma_kernels;
pub mod norm_spaces;
pub mod properties;
pub mod sup_search;

pub use error::{Error, Result};
pub use functionals::{ConstantKind, ConstantQuery};
pub use norm_spaces::{SpaceSpec, Vec2, EXTREME_POINT_TOL};
pub use sup_search::{
    compute_constant, refine_local, verify_against_closed_form, Branch, ComputationResult,
    Refined, SearchConfig, Verification, Witness, DEFAULT_VERIFY_TOL,
};
