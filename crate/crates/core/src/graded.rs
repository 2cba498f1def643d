//! Graded dimension vectors and the vanishing conditions that control when
//! the twist-composition machinery applies.

use crate::laurent::Laurent1;
use crate::{Error, Result};
use num::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Dimensions per degree of a finite-dimensional graded vector space.
///
/// Only nonzero dimensions are stored. The space itself (bases, maps) is
/// never materialized; everything downstream needs dimensions only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDim {
    dims: BTreeMap<i64, BigUint>,
}

/// The four vanishing flags controlling `H^{1+d}` of the derived dual of the
/// glued algebra: `V^{1+d} = 0`, `(V*)^d = 0`, `(V ⊗ V*)^d = 0` and
/// `(V* ⊗ V ⊗ V)^d = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VanishingChecks {
    /// `V^{1+d} = 0`.
    pub top: bool,
    /// `(V*)^d = 0`, i.e. `V^{-d} = 0`.
    pub dual: bool,
    /// `(V ⊗ V*)^d = 0`, i.e. no two support degrees differ by `d`.
    pub gap: bool,
    /// `(V* ⊗ V ⊗ V)^d = 0`, i.e. no support degrees `x, y, z` with
    /// `y + z - x = d`.
    pub triple: bool,
}

impl VanishingChecks {
    pub fn all_hold(&self) -> bool {
        self.top && self.dual && self.gap && self.triple
    }
}

impl GradedDim {
    pub fn empty() -> Self {
        GradedDim::default()
    }

    pub fn from_pairs<I, D>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, D)>,
        D: Into<BigUint>,
    {
        let mut g = GradedDim::empty();
        for (deg, dim) in pairs {
            g.add(deg, dim.into());
        }
        g
    }

    pub(crate) fn add(&mut self, deg: i64, dim: BigUint) {
        if dim.is_zero() {
            return;
        }
        *self.dims.entry(deg).or_insert_with(BigUint::zero) += dim;
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, deg: i64) -> BigUint {
        self.dims.get(&deg).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.dims.iter().map(|(&d, n)| (d, n))
    }

    pub fn total_dim(&self) -> BigUint {
        self.dims.values().sum()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.dims.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.dims.keys().next_back().copied()
    }

    /// `max - min`, or `None` for the zero space.
    pub fn width(&self) -> Option<i64> {
        Some(self.max_deg()? - self.min_deg()?)
    }

    /// Graded dimensions of the internal Hom `V* ⊗ W`: the degree-`n`
    /// dimension is `Σ_p dim V^p · dim W^{p+n}`.
    pub fn hom_dims(&self, w: &GradedDim) -> GradedDim {
        let mut out = GradedDim::empty();
        for (&p, dv) in &self.dims {
            for (&r, dw) in &w.dims {
                out.add(r - p, dv * dw);
            }
        }
        out
    }

    /// True iff no two support degrees differ by exactly `d`.
    pub fn gap_check(&self, d: i64) -> bool {
        self.dims.keys().all(|&p| !self.dims.contains_key(&(p + d)))
    }

    /// The four vanishing flags at distance `d`.
    pub fn vanishing_checks(&self, d: i64) -> VanishingChecks {
        let supp: Vec<i64> = self.support().collect();
        let triple = !supp.iter().any(|&x| {
            supp.iter()
                .any(|&y| supp.iter().any(|&z| y + z - x == d))
        });
        VanishingChecks {
            top: !self.dims.contains_key(&(1 + d)),
            dual: !self.dims.contains_key(&(-d)),
            gap: self.gap_check(d),
            triple,
        }
    }

    /// Translates the grading: `shift(V, n)^p = V^{p+n}`, so the support
    /// moves down by `n` and the maximal degree drops by `n`.
    pub fn shift(&self, n: i64) -> GradedDim {
        GradedDim {
            dims: self.dims.iter().map(|(&p, d)| (p - n, d.clone())).collect(),
        }
    }

    /// The minimal `n >= 0` such that all four vanishing checks hold for
    /// `shift(V, n)`. Fails when the gap condition fails, since the gap is
    /// shift-invariant and no shift can repair it.
    ///
    /// The three shift-dependent conditions hold for every
    /// `n > 2 max - min + d`, which bounds the search.
    pub fn find_shift(&self, d: i64) -> Result<i64> {
        if !self.gap_check(d) {
            return Err(Error::GapConditionFails { d });
        }
        if self.is_empty() {
            return Ok(0);
        }
        let bound = 2 * self.max_deg().unwrap() - self.min_deg().unwrap() + d;
        for n in 0..=bound.max(0) + 1 {
            if self.shift(n).vanishing_checks(d).all_hold() {
                return Ok(n);
            }
        }
        unreachable!("shift search exceeded its termination bound");
    }

    /// The Poincaré polynomial `Σ dim V^n · q^n`.
    pub fn poincare(&self) -> Laurent1 {
        Laurent1::from_terms(
            self.dims
                .iter()
                .map(|(&deg, dim)| (deg, BigInt::from(dim.clone()))),
        )
    }

    /// Reads graded dimensions off a Poincaré polynomial. Negative
    /// coefficients are rejected.
    pub fn from_poincare(p: &Laurent1) -> Result<GradedDim> {
        let mut g = GradedDim::empty();
        for (deg, c) in p.terms() {
            if c.is_negative() {
                return Err(Error::InvalidParameter(format!(
                    "negative coefficient {c} at q^{deg} cannot be a dimension"
                )));
            }
            g.add(deg, c.to_biguint().expect("nonnegative"));
        }
        Ok(g)
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (deg, dim)) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{deg}:{dim}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for GradedDim {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
