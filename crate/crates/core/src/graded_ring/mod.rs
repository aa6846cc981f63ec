//! Homogeneous forms over ℚ, subschemes of Pⁿ, graded pieces of their ideals
//! and the general-position checker.

mod form;
mod pieces;
mod position;
mod subscheme;

pub use form::{HomogeneousForm, Monomial};
pub use pieces::{
    binomial, dim_full, graded_dim_filtration_ideal, graded_dim_ideal_power, span_rank,
    IdealPieces, MonomialTable,
};
pub use position::{
    check_general_position, combinations, common_support_nonempty, on_support, support_codim,
    support_dim, PositionReport,
};
pub use subscheme::{load_catalog, Subscheme, SubschemeSpec};
