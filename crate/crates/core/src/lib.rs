//! Exact dimension computations for restricted secant varieties of
//! Grassmannians.
//!
//! The crate samples points of σ_s^r(Gr(k,n)), assembles the Jacobian of the
//! Plücker parametrization from cofactors, and reads dimensions off its rank
//! over a prime field (or ℚ). Closed-form predictions live in [`formulas`],
//! the exterior-algebra side (Hodge star, 1-flattenings, the fiber-bundle
//! maps) in [`exterior`], and Grassmann codes over F_q together with the
//! SL₆(F₂) orbit classification of Λ³F₂⁶ in [`finite_codes`].

#[cfg(feature = "cli")]
pub mod cli;
pub mod combinat;
pub mod error;
pub mod exterior;
pub mod fields;
pub mod finite_codes;
pub mod formulas;
pub mod linalg;
pub mod terracini;

pub use error::{Error, Result};
