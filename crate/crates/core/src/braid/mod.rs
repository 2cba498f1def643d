//! Reachable spherical objects in the A₂ Calabi–Yau category, realized as
//! twisted complexes over the Ext algebra of the two simples, with the braid
//! action by spherical twists and exact graded Hom computation.

mod algebra;
mod complex;
mod hom;
mod report;
mod word;

pub use algebra::CyAlgebra;
pub use complex::{Generator, TwistedComplex};
pub use hom::hom_poincare;
pub use report::{reachable_pair_report, PairReport};
pub use word::{BraidLetter, BraidWord};
