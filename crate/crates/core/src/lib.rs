//! Exact arithmetic for integral cubic forms and the bookkeeping of threefold
//! divisorial contractions.
//!
//! Forms are homogeneous cubics with arbitrary-precision integer (or exact
//! rational) coefficients. Matrices act by `T . F(x) = F(T x)`.

pub mod coeff;
pub mod error;
pub mod families;
pub mod form;
pub mod invariants;
pub mod lattice;
pub mod matrix;
pub mod mmp;
pub mod point;
pub mod poly;
pub mod reduction;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use families::{
    example_blowup_p3, pell_family, pell_form, pell_solutions, BlowupFixture, PellMember, PellSolution,
};
pub use form::{
    build_from_intersections, is_nondegenerate, parse_form, parse_form_in, CubicForm, Evaluation, IntForm, Monomial,
    Nondegeneracy, RatForm, TrilinearForm,
};
pub use invariants::{
    aronhold_st, binary_discriminant, discriminant_divides, singular_point_search, ternary_discriminant,
    DivisibilityVerdict, TernaryInvariants,
};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use mmp::{
    basket_stats, blowup_curve, chi_riemann_roch, contract_to_curve, contract_to_curve_with, contract_to_point,
    topological_bounds, Basket, BasketStats, BoundCheck, ContractionKind, ContractionRecord, ThreefoldState,
    TopologicalBounds, DEFAULT_S_RADIUS,
};
pub use point::PointProj;
pub use reduction::{
    detect_reduced, enumerate_binary_triples, estimate_s, low_rank_points, normalize_line, point_contraction_extract,
    point_contractions, search_reduced_triples, triple_classes, triples_equivalent, BinaryTriple, EquivalenceVerdict,
    FoundTriple, ReducedTriple, SearchOptions,
};
