//! Arakelov degrees of special divisors on the moduli of CM abelian varieties
//! with nearby CM types, and the central derivatives of incoherent Hilbert
//! Eisenstein series they are predicted to match.
//!
//! Start with [`tower::build_tower`], then compare
//! [`degree::arithmetic_degree`] with [`eisenstein::b_phi`] through
//! [`eisenstein::degree_from_b_phi`].

pub mod arith;
pub mod beta;
pub mod config;
pub mod deformation;
pub mod degree;
pub mod eisenstein;
pub mod error;
pub mod field;
pub mod ideal;
pub mod oracle;
pub mod report;
pub mod tower;
pub mod verify;

pub use error::{Error, Result};
pub use field::{BaseField, ElementF, PrimeOfF};
pub use ideal::IdealF;
pub use tower::{build_tower, FieldConfig, FieldTower, SplittingType};
