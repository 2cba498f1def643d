//! Cohomology of line bundles on products of projective spaces, restriction
//! to an anticanonical Calabi–Yau hypersurface, and assembly of the full
//! twist-composition report for the line-bundle pair `(O_X, O_X(n+1, 0))`.

use crate::graded::GradedDim;
use crate::ktheory::{kt_verdict, KTReport};
use crate::{Error, Result};
use num::{BigInt, BigUint};
use num_integer::binomial;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Which of the two admissible parity regimes `(n, m)` falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLabel {
    /// `n >= 3` odd, `m >= 2` even.
    Case1,
    /// `n, m >= 2` both even.
    Case2,
    /// Outside both regimes; the report is still produced.
    Outside,
}

/// `H^•(P^n, O(a))`: all global sections in degree 0 for `a >= 0`, all in
/// top degree `n` for `a <= -n-1`, acyclic in between.
pub fn pn_line_bundle_cohom(n: i64, a: i64) -> GradedDim {
    assert!(n >= 1, "projective space dimension must be >= 1");
    if a >= 0 {
        GradedDim::from_pairs([(0, binomial(BigUint::from((n + a) as u64), BigUint::from(n as u64)))])
    } else if a < -n {
        GradedDim::from_pairs([(
            n,
            binomial(BigUint::from((-a - 1) as u64), BigUint::from(n as u64)),
        )])
    } else {
        GradedDim::empty()
    }
}

/// `H^•(P^n x P^m, O(a, b))` by the Künneth formula: the degreewise
/// convolution of the two factors.
pub fn product_cohom(n: i64, m: i64, a: i64, b: i64) -> GradedDim {
    let left = pn_line_bundle_cohom(n, a);
    let right = pn_line_bundle_cohom(m, b);
    let mut out = GradedDim::empty();
    for (i, di) in left.entries() {
        for (j, dj) in right.entries() {
            out.add(i + j, di * dj);
        }
    }
    out
}

/// `H^•(X, O_X(a, b))` for `X` the zero locus of a section of
/// `O(n+1, m+1)`, via the restriction triangle
/// `O(a-n-1, b-m-1) -> O(a, b) -> O_X(a, b)`.
///
/// Requires the two ambient cohomologies to live in disjoint degrees so that
/// every connecting map vanishes for degree reasons; the degree-`i` dimension
/// is then `H^i(a, b) + H^{i+1}(a-n-1, b-m-1)`. Ranks of connecting maps are
/// never guessed.
pub fn hypersurface_section_cohom(n: i64, m: i64, a: i64, b: i64) -> Result<GradedDim> {
    let twisted = product_cohom(n, m, a - n - 1, b - m - 1);
    let plain = product_cohom(n, m, a, b);
    let overlap: Vec<i64> = plain
        .support()
        .filter(|deg| twisted.support().any(|t| t == *deg))
        .collect();
    if !overlap.is_empty() {
        return Err(Error::AmbiguousConnectingMap { degrees: overlap });
    }
    let mut out = plain;
    for (deg, dim) in twisted.entries() {
        out.add(deg - 1, dim.clone());
    }
    Ok(out)
}

/// Everything the scanner reports for one `(n, m)` point.
#[derive(Debug, Clone, PartialEq)]
pub struct ExampleReport {
    pub n: i64,
    pub m: i64,
    /// Dimension of the hypersurface, `m + n - 1`; its line bundles are
    /// d-spherical.
    pub d: i64,
    /// `binomial(2n+1, n+1)`, the rank of the degree-0 part of `V`.
    pub big_n: BigInt,
    /// Graded dimensions of `V = RHom(O_X, O_X(n+1, 0))`.
    pub v: GradedDim,
    pub dim_v: BigInt,
    pub w: i64,
    pub lambda: BigInt,
    pub gap_ok: bool,
    pub case_label: CaseLabel,
    pub kt: KTReport,
}

impl Serialize for ExampleReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExampleReport", 11)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("d", &self.d)?;
        s.serialize_field("N", &self.big_n.to_string())?;
        s.serialize_field("V", &self.v)?;
        s.serialize_field("dim_v", &self.dim_v.to_string())?;
        s.serialize_field("w", &self.w)?;
        s.serialize_field("lambda", &self.lambda.to_string())?;
        s.serialize_field("gap_ok", &self.gap_ok)?;
        s.serialize_field("case_label", &self.case_label)?;
        s.serialize_field("kt", &self.kt)?;
        s.end()
    }
}

fn case_label(n: i64, m: i64) -> CaseLabel {
    if n >= 3 && n % 2 == 1 && m >= 2 && m % 2 == 0 {
        CaseLabel::Case1
    } else if n >= 2 && n % 2 == 0 && m >= 2 && m % 2 == 0 {
        CaseLabel::Case2
    } else {
        CaseLabel::Outside
    }
}

/// Builds the full report for the pair `(O_X, L)`, `L = O_X(n+1, 0)`, on the
/// Calabi–Yau hypersurface in `P^n x P^m`.
///
/// Needs `m >= 2` so the two cohomology groups of `L` sit in distinct
/// degrees. The two line bundles have different first Chern classes, so
/// their classes are independent.
pub fn build_kt_example(n: i64, m: i64) -> Result<ExampleReport> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("n must be >= 1, got {n}")));
    }
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "m must be >= 2 so the two cohomology degrees of L are separated, got {m}"
        )));
    }
    let d = m + n - 1;
    let v = hypersurface_section_cohom(n, m, n + 1, 0)?;
    let big_n = BigInt::from(v.dim(0));
    let dim_v = BigInt::from(v.total_dim());
    let w = v.width().unwrap_or(0);
    // χ(L, O_X) = evaluation of the Poincaré polynomial at -1.
    let lambda = v.poincare().evaluate(-1)?;
    let gap_ok = v.gap_check(d);
    let kt = kt_verdict(dim_v.clone(), lambda.clone(), d, true);
    Ok(ExampleReport {
        n,
        m,
        d,
        big_n,
        v,
        dim_v,
        w,
        lambda,
        gap_ok,
        case_label: case_label(n, m),
        kt,
    })
}

/// `binomial(2n+1, n+1)` as a signed integer, handy for cross-checks.
pub fn section_rank(n: i64) -> BigInt {
    assert!(n >= 1);
    BigInt::from(binomial(
        BigUint::from((2 * n + 1) as u64),
        BigUint::from((n + 1) as u64),
    ))
}
