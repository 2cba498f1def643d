//! Exact entropy values of the form `log((a + sqrt(b)) / 2)`.

use num::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// An exact nonnegative value `log((a + sqrt(b)) / 2)` with integer `a` and
/// `b >= 0`, together with a floating approximation.
///
/// Zero is always encoded as `(a, b) = (2, 0)`. Equality compares the exact
/// pair only; the approximation is derived.
#[derive(Debug, Clone)]
pub struct EntropyValue {
    a: BigInt,
    b: BigInt,
    approx: f64,
}

impl EntropyValue {
    /// The zero value, `(a, b) = (2, 0)`.
    pub fn zero() -> Self {
        EntropyValue {
            a: BigInt::from(2),
            b: BigInt::zero(),
            approx: 0.0,
        }
    }

    /// `log((x^2 - 2 + sqrt(x^4 - 4x^2)) / 2)` for `x >= 3`, zero for `x <= 2`.
    ///
    /// This single quadratic form is shared by the Serre-functor entropy, the
    /// twist-composition entropy, and the spectral radius of the induced
    /// K-theory action.
    pub(crate) fn quadratic(x: &BigInt) -> Self {
        assert!(!x.is_negative(), "quadratic entropy takes x >= 0");
        if x <= &BigInt::from(2) {
            return EntropyValue::zero();
        }
        let x2 = x * x;
        let a: BigInt = &x2 - 2;
        let b: BigInt = &x2 * (&x2 - 4);
        let approx = match (a.to_f64(), b.to_f64()) {
            (Some(af), Some(bf)) if af.is_finite() && bf.is_finite() => {
                ((af + bf.sqrt()) / 2.0).ln()
            }
            // Out of f64 range: log((x^2-2+sqrt(x^4-4x^2))/2) = 2 log x - 2/x^2 + O(x^-4).
            _ => {
                let xf = x.to_f64().unwrap_or(f64::MAX);
                2.0 * xf.ln() - 2.0 / (xf * xf)
            }
        };
        EntropyValue { a, b, approx }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// Floating approximation of the exact value.
    pub fn approx(&self) -> f64 {
        self.approx
    }

    pub fn is_zero(&self) -> bool {
        self.a == BigInt::from(2) && self.b.is_zero()
    }

    /// Canonical exact rendering, e.g. `log((7+sqrt(45))/2)`.
    pub fn exact_str(&self) -> String {
        format!("log(({}+sqrt({}))/2)", self.a, self.b)
    }
}

impl PartialEq for EntropyValue {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl Eq for EntropyValue {}

impl fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{} ≈ {}", self.exact_str(), format_sig(self.approx, 12))
        }
    }
}

impl Serialize for EntropyValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EntropyValue", 2)?;
        s.serialize_field("exact", &self.exact_str())?;
        s.serialize_field("approx", &format_sig(self.approx, 12))?;
        s.end()
    }
}

/// Formats `x` with the given number of significant digits in plain decimal
/// notation. Used for every float the crate renders.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "+inf" } else { "-inf" }.to_string();
    }
    let exp = x.abs().log10().floor() as i64;
    let decimals = (sig as i64 - 1 - exp).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}
