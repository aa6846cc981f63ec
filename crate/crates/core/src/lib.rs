//! Exact computations around Diophantine approximation to closed subschemes
//! of projective space: β-constants, monomial filtrations of linear systems,
//! intersection theory on blow-ups of P², and Weil functions over ℚ.
//!
//! All quantities that the theory defines as rationals are computed as
//! [`Q`] values; logarithms are carried as [`heights::ExactLog`] so that
//! identities between them can be checked exactly.

pub mod beta;
pub mod error;
pub mod experiments;
pub mod filtration;
pub mod graded_ring;
pub mod heights;
pub mod linalg;
pub mod monomial_order;
pub mod rational;
pub mod surface;

pub use beta::{beta_blowup_crosscheck, beta_convergence, beta_truncated, BetaReport};
pub use error::{Error, Result};
pub use experiments::{
    example5_table, sample_points, scan_inequality, sigma_select, InequalityConfig, ScanReport,
};
pub use filtration::{
    build_profile, common_adapted_basis, concavity_bound, mu_value, scale_check, AdaptedBasis,
    FiltrationProfile,
};
pub use graded_ring::{
    check_general_position, dim_full, graded_dim_filtration_ideal, graded_dim_ideal_power,
    span_rank, HomogeneousForm, Subscheme,
};
pub use heights::{height, proximity, weil, ExactLog, Place, PlaceSet, ProjectivePoint};
pub use monomial_order::{
    expand_weights, intersect_saturated, threshold_set, ExponentVector, SaturatedSet, WeightVector,
};
pub use rational::Q;
pub use surface::{
    beta_closed_form, beta_surface_truncated, compare_beta_seshadri, intersect, is_nef, seshadri,
    zariski_h0, PicardClass, SurfaceModel,
};
