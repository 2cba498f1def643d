//! Integer Laurent polynomials in one and two variables.
//!
//! Coefficients are arbitrary-precision integers and zero coefficients are
//! pruned on every operation, so structural equality is semantic equality.

use crate::{Error, Result};
use num::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A Laurent polynomial in one variable `q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent1 {
    coeffs: BTreeMap<i64, BigInt>,
}

impl Laurent1 {
    pub fn zero() -> Self {
        Laurent1::default()
    }

    pub fn one() -> Self {
        Laurent1::monomial(0, 1)
    }

    /// `c * q^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let mut coeffs = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Laurent1 { coeffs }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Laurent1::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Substitutes `q -> 1/q`.
    pub fn reversed(&self) -> Self {
        Laurent1 {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact evaluation at `x` in `{-1, 1}`. Other points are rejected since
    /// negative exponents have no integer value there.
    pub fn evaluate(&self, x: i64) -> Result<BigInt> {
        if x != 1 && x != -1 {
            return Err(Error::InvalidParameter(format!(
                "Laurent evaluation is defined at x = ±1 only, got {x}"
            )));
        }
        let mut total = BigInt::zero();
        for (&e, c) in &self.coeffs {
            if x == 1 || e % 2 == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        Ok(total)
    }
}

impl Add for &Laurent1 {
    type Output = Laurent1;
    fn add(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent1 {
    type Output = Laurent1;
    fn sub(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &Laurent1 {
    type Output = Laurent1;
    fn mul(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = Laurent1::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Laurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|(&e, c)| (var_str("q", e), c)))
    }
}

impl Serialize for Laurent1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A Laurent polynomial in two variables `q1`, `q2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent2 {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl Laurent2 {
    pub fn zero() -> Self {
        Laurent2::default()
    }

    pub fn one() -> Self {
        Laurent2::monomial(0, 0, 1)
    }

    /// `c * q1^e1 * q2^e2`.
    pub fn monomial(e1: i64, e2: i64, c: impl Into<BigInt>) -> Self {
        let mut coeffs = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            coeffs.insert((e1, e2), c);
        }
        Laurent2 { coeffs }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut p = Laurent2::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, e1: i64, e2: i64) -> BigInt {
        self.coeffs
            .get(&(e1, e2))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Substitutes `q1 -> q`, `q2 -> q^d`, collecting like exponents.
    pub fn specialize_cy(&self, d: i64) -> Laurent1 {
        let mut out = Laurent1::zero();
        for (&(e1, e2), c) in &self.coeffs {
            out.add_term(e1 + d * e2, c.clone());
        }
        out
    }
}

impl Add for &Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Mul for &Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&(a1, a2), c1) in &self.coeffs {
            for (&(b1, b2), c2) in &rhs.coeffs {
                out.add_term((a1 + b1, a2 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().map(|(&(e1, e2), c)| {
                let v1 = var_str("q1", e1);
                let v2 = var_str("q2", e2);
                let joined = match (v1.is_empty(), v2.is_empty()) {
                    (true, true) => String::new(),
                    (false, true) => v1,
                    (true, false) => v2,
                    (false, false) => format!("{v1} {v2}"),
                };
                (joined, c)
            }),
        )
    }
}

fn var_str(var: &str, exp: i64) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{exp}"),
    }
}

/// Renders terms as `q^-1 + 2 + q^3`, folding signs into the separators.
fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a BigInt)>,
{
    let mut first = true;
    let mut any = false;
    for (vars, c) in terms {
        any = true;
        let neg = c < &BigInt::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if vars.is_empty() {
            write!(f, "{abs}")?;
        } else if abs == BigInt::from(1) {
            write!(f, "{vars}")?;
        } else {
            write!(f, "{abs}{vars}")?;
        }
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q1q2(e1: i64, e2: i64) -> Laurent2 {
        Laurent2::monomial(e1, e2, 1)
    }

    #[test]
    fn mul_distributes_over_binomial() {
        // (1 + q1^-1 q2) * q1 = q1 + q2
        let p = &Laurent2::one() + &q1q2(-1, 1);
        let got = &p * &q1q2(1, 0);
        let want = &q1q2(1, 0) + &q1q2(0, 1);
        assert_eq!(got, want);
    }

    #[test]
    fn mul_identity() {
        let p = &(&Laurent2::monomial(2, -3, 5) + &q1q2(0, 1)) + &Laurent2::one();
        assert_eq!(&p * &Laurent2::one(), p);
    }

    #[test]
    fn mul_square_of_binomial() {
        // (1 + q1^-1 q2)^2 = 1 + 2 q1^-1 q2 + q1^-2 q2^2
        let p = &Laurent2::one() + &q1q2(-1, 1);
        let got = &p * &p;
        let want = Laurent2::from_terms([((0, 0), 1), ((-1, 1), 2), ((-2, 2), 1)]);
        assert_eq!(got, want);
    }

    #[test]
    fn specialize_binomial() {
        let p = &Laurent2::one() + &q1q2(-1, 1);
        let got = p.specialize_cy(3);
        assert_eq!(got, Laurent1::from_terms([(0, 1), (2, 1)]));
    }

    #[test]
    fn specialize_zero_weight() {
        assert_eq!(q1q2(0, 1).specialize_cy(0), Laurent1::one());
    }

    #[test]
    fn specialize_collects_like_exponents() {
        // q1^2 + q1^-1 q2 at d=3: both monomials land in exponent 2.
        let p = &q1q2(2, 0) + &q1q2(-1, 1);
        assert_eq!(p.specialize_cy(3), Laurent1::monomial(2, 2));
    }

    #[test]
    fn evaluate_at_one_and_minus_one() {
        let p = Laurent1::from_terms([(0, 1), (4, 1)]); // 1 + q^d, d = 4
        assert_eq!(p.evaluate(1).unwrap(), BigInt::from(2));

        // q^{d-1} with d even: (-1)^{d-1} = -1
        let q = Laurent1::monomial(3, 1);
        assert_eq!(q.evaluate(-1).unwrap(), BigInt::from(-1));

        // 10 + q at -1: Euler characteristic N - 1 with N = 10
        let r = Laurent1::from_terms([(0, 10), (1, 1)]);
        assert_eq!(r.evaluate(-1).unwrap(), BigInt::from(9));
    }

    #[test]
    fn evaluate_rejects_other_points() {
        assert!(Laurent1::one().evaluate(2).is_err());
        assert!(Laurent1::one().evaluate(0).is_err());
    }

    #[test]
    fn rendering() {
        let p = Laurent1::from_terms([(-1, 1), (0, 2), (3, 1)]);
        assert_eq!(p.to_string(), "q^-1 + 2 + q^3");
        assert_eq!(Laurent1::zero().to_string(), "0");
        assert_eq!(Laurent1::monomial(1, 1).to_string(), "q");
        let m = Laurent1::from_terms([(0, 1), (2, -3)]);
        assert_eq!(m.to_string(), "1 - 3q^2");
        // exponent pairs sort lexicographically
        let b = &Laurent2::one() + &q1q2(-1, 1);
        assert_eq!(b.to_string(), "q1^-1 q2 + 1");
    }

    fn arb_laurent2() -> impl Strategy<Value = Laurent2> {
        proptest::collection::vec(((-4i64..=4, -4i64..=4), -5i64..=5), 0..6)
            .prop_map(Laurent2::from_terms)
    }

    fn arb_laurent1() -> impl Strategy<Value = Laurent1> {
        proptest::collection::vec((-6i64..=6, -5i64..=5), 0..6).prop_map(Laurent1::from_terms)
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in arb_laurent2(), b in arb_laurent2(), c in arb_laurent2()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn mul_distributes(a in arb_laurent2(), b in arb_laurent2(), c in arb_laurent2()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn specialize_is_ring_hom(a in arb_laurent2(), b in arb_laurent2(), d in -3i64..=5) {
            prop_assert_eq!(
                (&a * &b).specialize_cy(d),
                &a.specialize_cy(d) * &b.specialize_cy(d)
            );
            prop_assert_eq!(
                (&a + &b).specialize_cy(d),
                &a.specialize_cy(d) + &b.specialize_cy(d)
            );
        }

        #[test]
        fn evaluate_at_one_sums_coefficients(p in arb_laurent1()) {
            let sum: BigInt = p.terms().map(|(_, c)| c.clone()).sum();
            prop_assert_eq!(p.evaluate(1).unwrap(), sum);
        }

        #[test]
        fn evaluate_respects_products(p in arb_laurent1(), r in arb_laurent1(), x in prop_oneof![Just(1i64), Just(-1i64)]) {
            prop_assert_eq!(
                (&p * &r).evaluate(x).unwrap(),
                p.evaluate(x).unwrap() * r.evaluate(x).unwrap()
            );
        }
    }
}
