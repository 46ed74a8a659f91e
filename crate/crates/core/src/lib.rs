//! Spin structures and Stiefel-Whitney classes of flat manifolds of diagonal type.
//!
//! A flat manifold of diagonal type is the quotient of a torus `T^n` by a free
//! action of Z₂^d in which every generator acts on each circle factor by one
//! of `z`, `-z`, `conj(z)`, `-conj(z)`. Such an action is recorded by a
//! [`DefiningMatrix`] over `{0, 1, 2, 3}`.
//!
//! The crate computes the characteristic ideal and characteristic algebra of a
//! matrix, the normal form of its total Stiefel-Whitney class, orientability
//! and spin verdicts, and sweeps all covers with smaller holonomy. The
//! [`family`] module builds the matrices `F_d` of orientable non-spin
//! manifolds whose proper covers all have trivial Stiefel-Whitney classes.

mod bits;

pub mod algebra;
pub mod covers;
pub mod dmatrix;
pub mod error;
pub mod family;
pub mod poly;
pub mod report;

pub use algebra::{
    ideal_from_matrix, is_orientable, is_spin, phi_functional, sw_class, w2_vanishes,
    GradedIdeal, NormalForm,
};
pub use covers::{
    cover_matrix, cover_sw, enumerate_subspaces, verify_minimal_nonspin, CoverReport, Subspace,
};
pub use dmatrix::{DSymbol, DefiningMatrix};
pub use error::{Error, Result};
pub use family::{build_stage, n_of_d, FamilyStage};
pub use poly::{Gf2Poly, Monomial};
pub use report::{verify_family, verify_matrix, AnalysisReport, FamilyCheck};
