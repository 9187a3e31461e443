//! Windowed sparse realisations of the representations on `ℓ²(Z)`,
//! `ℓ²(Z²)` and `C²`, with exact or floating scalars.

mod diag;
pub mod linalg;
mod operator;
mod represent;
mod window;

pub use diag::{homotopy_operator_ft, phase_operator_f0, sign_operator};
pub use operator::WindowedOperator;
pub use represent::{represent, RepName, RepresentationSpec};
pub use window::{Site, Window, WindowKind};
