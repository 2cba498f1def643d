//! Exact computations around the entropy of compositions of spherical twists.
//!
//! The crate is organized around a handful of small exact-arithmetic layers
//! (Laurent polynomials, graded dimension vectors, quadratic entropy values)
//! and the results built on top of them: the twist-composition entropy and
//! its piecewise-in-`t` profile, the induced action on the numerical
//! Grothendieck group with Kikuta–Takahashi verdicts, a generator for
//! Calabi–Yau hypersurfaces in products of projective spaces, and a
//! twisted-complex engine for the braid action on the A₂ Calabi–Yau
//! category.
//!
//! All dimension counts, Euler pairings, and closed forms are computed in
//! exact integer/rational arithmetic; floats appear only as derived
//! approximations alongside their exact forms.

pub mod braid;
pub mod error;
pub mod graded;
pub mod hypersurface;
pub mod ktheory;
pub mod laurent;
pub mod profile;
pub mod serre;
pub mod value;

pub use error::Error;
pub use graded::{GradedDim, VanishingChecks};
pub use laurent::{Laurent1, Laurent2};
pub use value::EntropyValue;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
