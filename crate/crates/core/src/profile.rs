//! Piecewise descriptions of `t -> h_t` for the composition of two twists
//! around d-spherical objects, and the exact value at `t = 0`.
//!
//! For `dim V <= 2` the profile carries exact linear pieces through the
//! origin and one-sided `<= 0` bounds; for `dim V >= 3` only band regions
//! between asymptotic-slope lines are known away from `t = 0`.

use crate::value::EntropyValue;
use crate::{Error, Result};
use num::rational::Ratio;
use num::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// Exact rational slope of a linear piece or bound line.
pub type Slope = Ratio<i64>;

/// Renders a slope as `p/q` with positive reduced denominator.
pub fn slope_str(s: &Slope) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

fn ratio_f64(r: Slope) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// What is known about an asymptotic slope `lim h_t / t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SlopeStatus {
    Exact,
    LowerBoundZero,
    UpperBoundZero,
    Unknown,
}

/// An asymptotic slope together with its knowledge status. `value` is
/// present exactly when the status is `Exact`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlopeBound {
    pub status: SlopeStatus,
    pub value: Option<Slope>,
}

impl SlopeBound {
    pub fn exact(v: Slope) -> Self {
        SlopeBound {
            status: SlopeStatus::Exact,
            value: Some(v),
        }
    }

    pub fn lower_bound_zero() -> Self {
        SlopeBound {
            status: SlopeStatus::LowerBoundZero,
            value: None,
        }
    }

    pub fn upper_bound_zero() -> Self {
        SlopeBound {
            status: SlopeStatus::UpperBoundZero,
            value: None,
        }
    }

    pub fn unknown() -> Self {
        SlopeBound {
            status: SlopeStatus::Unknown,
            value: None,
        }
    }
}

impl Serialize for SlopeBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SlopeBound", 2)?;
        s.serialize_field("status", &self.status)?;
        s.serialize_field("value", &self.value.as_ref().map(slope_str))?;
        s.end()
    }
}

/// What a profile asserts on one interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PieceKind {
    /// `h_t = slope · t` exactly.
    Exact { slope: Slope },
    /// `h_t <= 0`, nothing more.
    UpperBoundZero,
    /// `h_t = 0` exactly.
    ExactZero,
    /// `lower_slope · t <= h_t <= upper_offset + upper_slope · t`; a missing
    /// slope means the corresponding bound is not known.
    Band {
        lower_slope: Option<Slope>,
        upper_slope: Option<Slope>,
        upper_offset: EntropyValue,
    },
}

/// One interval of a profile. Endpoints are `None` at `-inf`/`+inf`; the
/// only finite endpoint produced by this crate is `t = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfilePiece {
    pub from: Option<Slope>,
    pub to: Option<Slope>,
    pub kind: PieceKind,
}

impl ProfilePiece {
    fn contains(&self, t: f64) -> bool {
        let lo_ok = self.from.is_none_or(|lo| t >= ratio_f64(lo));
        let hi_ok = self.to.is_none_or(|hi| t <= ratio_f64(hi));
        lo_ok && hi_ok
    }
}

fn endpoint_str(e: &Option<Slope>, positive: bool) -> String {
    match e {
        None if positive => "+inf".to_string(),
        None => "-inf".to_string(),
        Some(r) => slope_str(r),
    }
}

#[derive(Serialize)]
struct TagRepr {
    kind: &'static str,
}

#[derive(Serialize)]
struct ExactRepr {
    kind: &'static str,
    slope: String,
}

#[derive(Serialize)]
struct BandRepr {
    kind: &'static str,
    lower_slope: Option<String>,
    upper_slope: Option<String>,
    upper_offset: EntropyValue,
}

impl Serialize for ProfilePiece {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ProfilePiece", 3)?;
        s.serialize_field("from", &endpoint_str(&self.from, false))?;
        s.serialize_field("to", &endpoint_str(&self.to, true))?;
        match &self.kind {
            PieceKind::Exact { slope } => s.serialize_field(
                "kind",
                &ExactRepr {
                    kind: "exact",
                    slope: slope_str(slope),
                },
            )?,
            PieceKind::UpperBoundZero => s.serialize_field(
                "kind",
                &TagRepr {
                    kind: "upper_bound_zero",
                },
            )?,
            PieceKind::ExactZero => {
                s.serialize_field("kind", &TagRepr { kind: "exact_zero" })?
            }
            PieceKind::Band {
                lower_slope,
                upper_slope,
                upper_offset,
            } => s.serialize_field(
                "kind",
                &BandRepr {
                    kind: "band",
                    lower_slope: lower_slope.as_ref().map(slope_str),
                    upper_slope: upper_slope.as_ref().map(slope_str),
                    upper_offset: upper_offset.clone(),
                },
            )?,
        }
        s.end()
    }
}

/// Piecewise description of `t -> h_t` plus the exact value at `t = 0` and
/// the asymptotic slopes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyProfile {
    pub pieces: Vec<ProfilePiece>,
    pub h0: EntropyValue,
    pub tau_minus: SlopeBound,
    pub tau_plus: SlopeBound,
}

impl EntropyProfile {
    /// Bounds implied by the profile at `t`: `(lower, upper, exact)` with
    /// `None` standing for an unbounded side.
    pub fn bounds_at(&self, t: f64) -> (Option<f64>, Option<f64>, bool) {
        let piece = self
            .pieces
            .iter()
            .find(|p| p.contains(t))
            .expect("pieces cover the real line");
        match &piece.kind {
            PieceKind::Exact { slope } => {
                let v = ratio_f64(*slope) * t;
                (Some(v), Some(v), true)
            }
            PieceKind::ExactZero => (Some(0.0), Some(0.0), true),
            PieceKind::UpperBoundZero => (None, Some(0.0), false),
            PieceKind::Band {
                lower_slope,
                upper_slope,
                upper_offset,
            } => {
                let lo = lower_slope.map(|s| ratio_f64(s) * t);
                let hi = upper_slope.map(|s| upper_offset.approx() + ratio_f64(s) * t);
                (lo, hi, false)
            }
        }
    }

    fn new(mut pieces: Vec<ProfilePiece>, h0: EntropyValue, orthogonal_nonempty: bool) -> Self {
        if orthogonal_nonempty {
            for p in &mut pieces {
                upgrade_nonnegative(&mut p.kind);
            }
        }
        let tau_minus = tau_from_piece(pieces.first().expect("nonempty"), false);
        let tau_plus = tau_from_piece(pieces.last().expect("nonempty"), true);
        EntropyProfile {
            pieces,
            h0,
            tau_minus,
            tau_plus,
        }
    }
}

/// With a common orthogonal object, `h_t >= 0` everywhere, so a piece that is
/// bounded above by zero is identically zero. Exact pieces are untouched.
fn upgrade_nonnegative(kind: &mut PieceKind) {
    let zero_upper = match kind {
        PieceKind::UpperBoundZero => true,
        PieceKind::Band {
            upper_slope: Some(s),
            upper_offset,
            ..
        } => s.is_zero() && upper_offset.is_zero(),
        _ => false,
    };
    if zero_upper {
        *kind = PieceKind::ExactZero;
    }
}

/// Reads the asymptotic slope off the unbounded piece on one side.
fn tau_from_piece(piece: &ProfilePiece, positive_side: bool) -> SlopeBound {
    match &piece.kind {
        PieceKind::Exact { slope } => SlopeBound::exact(*slope),
        PieceKind::ExactZero => SlopeBound::exact(Slope::zero()),
        // h <= 0 gives h/t >= 0 as t -> -inf and h/t <= 0 as t -> +inf.
        PieceKind::UpperBoundZero if positive_side => SlopeBound::upper_bound_zero(),
        PieceKind::UpperBoundZero => SlopeBound::lower_bound_zero(),
        PieceKind::Band { lower_slope, upper_slope, .. } => match (lower_slope, upper_slope) {
            (Some(lo), Some(hi)) if lo == hi => SlopeBound::exact(*lo),
            // a finite upper line with zero slope pins the sign of tau
            (_, Some(hi)) if hi.is_zero() && positive_side => SlopeBound::upper_bound_zero(),
            (_, Some(hi)) if hi.is_zero() => SlopeBound::lower_bound_zero(),
            _ => SlopeBound::unknown(),
        },
    }
}

impl fmt::Display for EntropyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pieces {
            let range = format!(
                "[{}, {}]",
                endpoint_str(&p.from, false),
                endpoint_str(&p.to, true)
            );
            match &p.kind {
                PieceKind::Exact { slope } => {
                    writeln!(f, "  {range}: h_t = ({}) t", slope_str(slope))?
                }
                PieceKind::UpperBoundZero => writeln!(f, "  {range}: h_t <= 0")?,
                PieceKind::ExactZero => writeln!(f, "  {range}: h_t = 0")?,
                PieceKind::Band {
                    lower_slope,
                    upper_slope,
                    upper_offset,
                } => {
                    let lo = lower_slope
                        .map(|s| format!("({}) t <= ", slope_str(&s)))
                        .unwrap_or_default();
                    let hi = match upper_slope {
                        Some(s) if upper_offset.is_zero() => {
                            format!(" <= ({}) t", slope_str(s))
                        }
                        Some(s) => format!(" <= h0 + ({}) t", slope_str(s)),
                        None => String::new(),
                    };
                    writeln!(f, "  {range}: {lo}h_t{hi}")?;
                }
            }
        }
        writeln!(f, "  h0 = {}", self.h0)
    }
}

/// Entropy at `t = 0` of the composition of the two twists: zero for
/// `dim V <= 2`, `log((x^2 - 2 + sqrt(x^4 - 4 x^2)) / 2)` with `x = dim V`
/// otherwise.
pub fn h0_composition(dim_v: impl Into<BigInt>) -> EntropyValue {
    let x = dim_v.into();
    assert!(x >= BigInt::zero(), "dim V must be nonnegative");
    EntropyValue::quadratic(&x)
}

/// Asymptotic slopes of `h_t / t` for `dim V >= 2` under the smooth compact
/// ambient hypothesis: `τ- = 2 - (d + w)` when `d + w >= 2` (else only
/// `τ- >= 0` is known), and `τ+ = 2 - (d - w)` when `d - w <= 2` (else only
/// `τ+ <= 0`).
pub fn asymptotic_slopes(dim_v: i64, d: i64, w: i64) -> (SlopeBound, SlopeBound) {
    assert!(dim_v >= 2, "asymptotic slopes require dim V >= 2");
    assert!(d >= 1 && w >= 0);
    let tau_minus = if d + w >= 2 {
        SlopeBound::exact(Slope::from_integer(2 - (d + w)))
    } else {
        SlopeBound::lower_bound_zero()
    };
    let tau_plus = if d - w <= 2 {
        SlopeBound::exact(Slope::from_integer(2 - (d - w)))
    } else {
        SlopeBound::upper_bound_zero()
    };
    (tau_minus, tau_plus)
}

fn zero_t() -> Option<Slope> {
    Some(Slope::zero())
}

fn exact_piece(from: Option<Slope>, to: Option<Slope>, slope: Slope) -> ProfilePiece {
    ProfilePiece {
        from,
        to,
        kind: PieceKind::Exact { slope },
    }
}

fn ubz_piece(from: Option<Slope>, to: Option<Slope>) -> ProfilePiece {
    ProfilePiece {
        from,
        to,
        kind: PieceKind::UpperBoundZero,
    }
}

/// Exact slope on the half-line where `slope · t >= 0`, upper bound zero on
/// the other side. `zero_slope_left` picks the side for a vanishing slope,
/// matching how each closed form states its validity region.
fn half_line_profile(slope: Slope, zero_slope_left: bool) -> Vec<ProfilePiece> {
    if slope.is_zero() && !zero_slope_left {
        // `slope · t >= 0` holds everywhere.
        return vec![exact_piece(None, None, slope)];
    }
    if slope < Slope::zero() || slope.is_zero() {
        vec![
            exact_piece(None, zero_t(), slope),
            ubz_piece(zero_t(), None),
        ]
    } else {
        vec![
            ubz_piece(None, zero_t()),
            exact_piece(zero_t(), None, slope),
        ]
    }
}

/// The piecewise profile of `h_t` for the composition of two twists around
/// d-spherical objects with `dim V = dim_v` and width `w = max V - min V`,
/// assuming the gap condition `Hom(V, V[d]) = 0`.
///
/// * `dim V = 0`: exact slope `1 - d` for `t <= 0`, `h_t <= 0` beyond.
/// * `dim V = 1`: exact slope `4/3 - d` where `(4/3 - d) t >= 0`.
/// * `dim V = 2, w = 0`: exact slope `2 - d` where `(2 - d) t >= 0`.
/// * `dim V = 2, w > 0` (needs the ambient hypothesis): exact slopes
///   `2 - (d + w)` / `2 - (d - w)` on the sides where the asymptotic slopes
///   are exact, `h_t <= 0` on the others.
/// * `dim V >= 3`: band regions from the asymptotic slopes and the value at
///   zero; without the ambient hypothesis the slopes are unknown.
///
/// A nonzero common orthogonal (`orthogonal_nonempty`) forces `h_t >= 0`, so
/// every `h_t <= 0` region collapses to exactly zero.
pub fn entropy_profile(
    dim_v: impl Into<BigInt>,
    d: i64,
    w: i64,
    orthogonal_nonempty: bool,
    ambient_smooth_proper: bool,
) -> Result<EntropyProfile> {
    let dim_v = dim_v.into();
    if dim_v < BigInt::zero() {
        return Err(Error::InvalidParameter(format!(
            "dim V must be >= 0, got {dim_v}"
        )));
    }
    if d < 1 {
        return Err(Error::InvalidParameter(format!(
            "spherical dimension d must be >= 1, got {d}"
        )));
    }
    if w < 0 {
        return Err(Error::InvalidParameter(format!(
            "width w must be >= 0, got {w}"
        )));
    }
    if dim_v <= BigInt::from(1) && w != 0 {
        return Err(Error::InconsistentInput(format!(
            "dim V = {dim_v} forces width 0, got w = {w}"
        )));
    }
    let h0 = h0_composition(dim_v.clone());

    let pieces = if dim_v.is_zero() {
        // Exact on t <= 0 even when the slope vanishes (d = 1).
        half_line_profile(Slope::from_integer(1 - d), true)
    } else if dim_v == BigInt::from(1) {
        // 4/3 - d is never zero for integer d.
        half_line_profile(Slope::new(4 - 3 * d, 3), true)
    } else if dim_v == BigInt::from(2) {
        if w == 0 {
            // Exact wherever (2 - d) t >= 0; for d = 2 that is all of R.
            half_line_profile(Slope::from_integer(2 - d), false)
        } else {
            if !ambient_smooth_proper {
                return Err(Error::MissingAmbientHypothesis(
                    "the dim V = 2, w > 0 case analysis needs a smooth compact ambient dg algebra"
                        .into(),
                ));
            }
            let left_exact = d + w >= 2;
            let right_exact = d - w <= 2;
            let left = if left_exact {
                exact_piece(None, zero_t(), Slope::from_integer(2 - (d + w)))
            } else {
                ubz_piece(None, zero_t())
            };
            let right = if right_exact {
                exact_piece(zero_t(), None, Slope::from_integer(2 - (d - w)))
            } else {
                ubz_piece(zero_t(), None)
            };
            vec![left, right]
        }
    } else {
        // dim V >= 3: only bands are known away from t = 0.
        let (tau_minus, tau_plus) = if ambient_smooth_proper {
            let dv = num_traits::ToPrimitive::to_i64(&dim_v).unwrap_or(i64::MAX);
            asymptotic_slopes(dv, d, w)
        } else {
            (SlopeBound::unknown(), SlopeBound::unknown())
        };
        let band = |tau: SlopeBound| -> PieceKind {
            match tau.value {
                Some(s) => PieceKind::Band {
                    lower_slope: Some(s),
                    upper_slope: Some(s),
                    upper_offset: h0.clone(),
                },
                // With only the sign of tau known, `h0 + tau t <= h0` still
                // holds on this side, so a flat upper line survives.
                None if tau.status != SlopeStatus::Unknown => PieceKind::Band {
                    lower_slope: None,
                    upper_slope: Some(Slope::zero()),
                    upper_offset: h0.clone(),
                },
                None => PieceKind::Band {
                    lower_slope: None,
                    upper_slope: None,
                    upper_offset: h0.clone(),
                },
            }
        };
        vec![
            ProfilePiece {
                from: None,
                to: zero_t(),
                kind: band(tau_minus),
            },
            ProfilePiece {
                from: zero_t(),
                to: None,
                kind: band(tau_plus),
            },
        ]
    };

    Ok(EntropyProfile::new(pieces, h0, orthogonal_nonempty))
}

/// Profile of a single spherical twist around a d-spherical object:
/// exact slope `1 - d` for `t <= 0`, and `(1 - d) t <= h_t <= 0` for
/// `t >= 0`. With a nonzero orthogonal (or for `d = 1`, where the band
/// collapses) the right-hand side is exactly zero.
pub fn spherical_twist_profile(d: i64, orthogonal_nonempty: bool) -> Result<EntropyProfile> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!(
            "spherical dimension d must be >= 1, got {d}"
        )));
    }
    let slope = Slope::from_integer(1 - d);
    let right_kind = if d == 1 {
        PieceKind::ExactZero
    } else {
        PieceKind::Band {
            lower_slope: Some(slope),
            upper_slope: Some(Slope::zero()),
            upper_offset: EntropyValue::zero(),
        }
    };
    let pieces = vec![
        exact_piece(None, zero_t(), slope),
        ProfilePiece {
            from: zero_t(),
            to: None,
            kind: right_kind,
        },
    ];
    Ok(EntropyProfile::new(
        pieces,
        EntropyValue::zero(),
        orthogonal_nonempty,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::serre::h0_serre;

    fn slope(n: i64, d: i64) -> Slope {
        Slope::new(n, d)
    }

    #[test]
    fn h0_composition_values() {
        for x in 0..=2 {
            assert!(h0_composition(x).is_zero());
        }
        let v = h0_composition(3);
        assert_eq!(v.a(), &BigInt::from(7));
        assert_eq!(v.b(), &BigInt::from(45));
        assert!((v.approx() - 1.92485).abs() < 1e-5);
    }

    #[test]
    fn h0_composition_matches_serre() {
        for k in 2..=20 {
            assert_eq!(h0_composition(k), h0_serre(k).unwrap());
        }
    }

    #[test]
    fn slopes_examples() {
        let (tm, tp) = asymptotic_slopes(2, 3, 1);
        assert_eq!(tm, SlopeBound::exact(slope(-2, 1)));
        assert_eq!(tp, SlopeBound::exact(slope(0, 1)));

        let (tm, tp) = asymptotic_slopes(2, 1, 0);
        assert_eq!(tm.status, SlopeStatus::LowerBoundZero);
        assert_eq!(tp, SlopeBound::exact(slope(1, 1)));

        let (tm, tp) = asymptotic_slopes(2, 5, 1);
        assert_eq!(tm, SlopeBound::exact(slope(-4, 1)));
        assert_eq!(tp.status, SlopeStatus::UpperBoundZero);
    }

    #[test]
    fn profile_dimv0() {
        let p = entropy_profile(0, 2, 0, false, false).unwrap();
        assert_eq!(p.pieces.len(), 2);
        assert_eq!(p.pieces[0].kind, PieceKind::Exact { slope: slope(-1, 1) });
        assert_eq!(p.pieces[1].kind, PieceKind::UpperBoundZero);
        assert!(p.h0.is_zero());
        assert_eq!(p.tau_minus, SlopeBound::exact(slope(-1, 1)));
        assert_eq!(p.tau_plus.status, SlopeStatus::UpperBoundZero);
    }

    #[test]
    fn profile_dimv0_d1_splits_at_zero() {
        let p = entropy_profile(0, 1, 0, false, false).unwrap();
        assert_eq!(p.pieces.len(), 2);
        assert_eq!(p.pieces[0].kind, PieceKind::Exact { slope: slope(0, 1) });
        assert_eq!(p.pieces[1].kind, PieceKind::UpperBoundZero);
    }

    #[test]
    fn profile_dimv1() {
        let p = entropy_profile(1, 1, 0, false, false).unwrap();
        assert_eq!(p.pieces[0].kind, PieceKind::UpperBoundZero);
        assert_eq!(p.pieces[1].kind, PieceKind::Exact { slope: slope(1, 3) });

        let q = entropy_profile(1, 4, 0, false, false).unwrap();
        assert_eq!(q.pieces[0].kind, PieceKind::Exact { slope: slope(-8, 3) });
        assert_eq!(q.pieces[1].kind, PieceKind::UpperBoundZero);
    }

    #[test]
    fn profile_dimv2_w0() {
        // d = 2 makes the exact region all of R.
        let p = entropy_profile(2, 2, 0, false, false).unwrap();
        assert_eq!(p.pieces.len(), 1);
        assert_eq!(p.pieces[0].kind, PieceKind::Exact { slope: slope(0, 1) });
        assert_eq!(p.tau_minus, SlopeBound::exact(slope(0, 1)));
        assert_eq!(p.tau_plus, SlopeBound::exact(slope(0, 1)));

        let q = entropy_profile(2, 5, 0, false, false).unwrap();
        assert_eq!(q.pieces[0].kind, PieceKind::Exact { slope: slope(-3, 1) });
        assert_eq!(q.pieces[1].kind, PieceKind::UpperBoundZero);
    }

    #[test]
    fn profile_dimv2_case2() {
        // d = 3, w = 1: d + w = 4 >= 2 and d - w = 2 <= 2, both sides exact.
        let p = entropy_profile(2, 3, 1, false, true).unwrap();
        assert_eq!(p.pieces[0].kind, PieceKind::Exact { slope: slope(-2, 1) });
        assert_eq!(p.pieces[1].kind, PieceKind::Exact { slope: slope(0, 1) });
    }

    #[test]
    fn profile_dimv2_case1() {
        // d = 5, w = 1: d - w = 4 > 2, right side only bounded.
        let p = entropy_profile(2, 5, 1, false, true).unwrap();
        assert_eq!(p.pieces[0].kind, PieceKind::Exact { slope: slope(-4, 1) });
        assert_eq!(p.pieces[1].kind, PieceKind::UpperBoundZero);
    }

    #[test]
    fn profile_requires_hypotheses() {
        assert!(matches!(
            entropy_profile(1, 2, 1, false, false),
            Err(Error::InconsistentInput(_))
        ));
        assert!(matches!(
            entropy_profile(2, 3, 1, false, false),
            Err(Error::MissingAmbientHypothesis(_))
        ));
        assert!(entropy_profile(2, 0, 0, false, false).is_err());
    }

    #[test]
    fn profile_dimv3_bands() {
        let p = entropy_profile(5, 2, 0, false, true).unwrap();
        assert_eq!(p.h0, h0_composition(5));
        for piece in &p.pieces {
            match &piece.kind {
                PieceKind::Band {
                    lower_slope,
                    upper_slope,
                    upper_offset,
                } => {
                    assert_eq!(lower_slope, &Some(slope(0, 1)));
                    assert_eq!(upper_slope, &Some(slope(0, 1)));
                    assert_eq!(upper_offset, &h0_composition(5));
                }
                other => panic!("expected band, got {other:?}"),
            }
        }
        assert_eq!(p.tau_minus, SlopeBound::exact(slope(0, 1)));

        let q = entropy_profile(5, 2, 0, false, false).unwrap();
        assert_eq!(q.tau_minus.status, SlopeStatus::Unknown);
        for piece in &q.pieces {
            match &piece.kind {
                PieceKind::Band {
                    lower_slope: None,
                    upper_slope: None,
                    ..
                } => {}
                other => panic!("expected slope-free band, got {other:?}"),
            }
        }
    }

    #[test]
    fn orthogonal_upgrades_only_zero_bounds() {
        let p = entropy_profile(0, 2, 0, true, false).unwrap();
        assert_eq!(p.pieces[0].kind, PieceKind::Exact { slope: slope(-1, 1) });
        assert_eq!(p.pieces[1].kind, PieceKind::ExactZero);
        assert_eq!(p.tau_plus, SlopeBound::exact(slope(0, 1)));

        // exact pieces with positive values stay untouched
        let q = entropy_profile(2, 3, 1, true, true).unwrap();
        assert_eq!(q.pieces[0].kind, PieceKind::Exact { slope: slope(-2, 1) });
        assert_eq!(q.pieces[1].kind, PieceKind::Exact { slope: slope(0, 1) });
    }

    #[test]
    fn single_twist_profile() {
        let p = spherical_twist_profile(2, true).unwrap();
        assert_eq!(p.pieces[0].kind, PieceKind::Exact { slope: slope(-1, 1) });
        assert_eq!(p.pieces[1].kind, PieceKind::ExactZero);

        let q = spherical_twist_profile(1, false).unwrap();
        assert_eq!(q.pieces[0].kind, PieceKind::Exact { slope: slope(0, 1) });
        assert_eq!(q.pieces[1].kind, PieceKind::ExactZero);

        let r = spherical_twist_profile(3, false).unwrap();
        assert_eq!(r.pieces[0].kind, PieceKind::Exact { slope: slope(-2, 1) });
        assert_eq!(
            r.pieces[1].kind,
            PieceKind::Band {
                lower_slope: Some(slope(-2, 1)),
                upper_slope: Some(slope(0, 1)),
                upper_offset: EntropyValue::zero(),
            }
        );
        assert_eq!(r.tau_minus, SlopeBound::exact(slope(-2, 1)));
        assert_eq!(r.tau_plus.status, SlopeStatus::UpperBoundZero);
    }

    #[test]
    fn profiles_continuous_and_banded() {
        // every exact piece stays inside the band implied by an exact tau,
        // and exact pieces meeting at 0 agree there
        for dimv in 0..=2i64 {
            for d in 1..=6 {
                let ws: &[i64] = if dimv == 2 { &[0, 1, 2, 3] } else { &[0] };
                for &w in ws {
                    for orth in [false, true] {
                        let p = match entropy_profile(dimv, d, w, orth, true) {
                            Ok(p) => p,
                            Err(_) => continue,
                        };
                        let (lo0, hi0, _) = p.bounds_at(0.0);
                        if let (Some(lo), Some(hi)) = (lo0, hi0) {
                            assert_eq!(lo, 0.0);
                            assert_eq!(hi, 0.0);
                        }
                        for t in [-2.5f64, -1.0, -0.5, 0.5, 1.0, 2.5] {
                            let (lo, hi, exact) = p.bounds_at(t);
                            if let (Some(lo), Some(hi)) = (lo, hi) {
                                assert!(lo <= hi + 1e-12);
                            }
                            if !exact {
                                continue;
                            }
                            let v = lo.unwrap();
                            let tau = if t < 0.0 { p.tau_minus } else { p.tau_plus };
                            if let Some(s) = tau.value {
                                let line = ratio_f64(s) * t;
                                assert!(line <= v + 1e-12);
                                assert!(v <= p.h0.approx() + line + 1e-12);
                            }
                        }
                    }
                }
            }
        }
    }
}
