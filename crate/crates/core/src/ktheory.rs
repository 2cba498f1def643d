//! The induced action of spherical twists on the numerical Grothendieck
//! group: Euler pairings, twist matrices, spectral radii, and verdicts on
//! the conjectured equality `h_0 = log ρ`.

use crate::value::EntropyValue;
use crate::{Error, Result};
use num::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

fn sign_pow(d: i64) -> BigInt {
    if d % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// A 2x2 integer matrix, column convention: `m[r][c]` is the coefficient of
/// the r-th basis vector in the image of the c-th.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2(pub [[BigInt; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Mat2([
            [BigInt::one(), BigInt::zero()],
            [BigInt::zero(), BigInt::one()],
        ])
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        Mat2(m.map(|row| row.map(BigInt::from)))
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut out = Mat2([
            [BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::zero()],
        ]);
        for r in 0..2 {
            for c in 0..2 {
                out.0[r][c] = &self.0[r][0] * &rhs.0[0][c] + &self.0[r][1] * &rhs.0[1][c];
            }
        }
        out
    }

    pub fn det(&self) -> BigInt {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    /// Exact inverse of a determinant-±1 matrix via the adjugate.
    pub fn inverse_unimodular(&self) -> Mat2 {
        let det = self.det();
        assert!(
            det.abs().is_one(),
            "inverse_unimodular needs determinant ±1, got {det}"
        );
        let adj = Mat2([
            [self.0[1][1].clone(), -self.0[0][1].clone()],
            [-self.0[1][0].clone(), self.0[0][0].clone()],
        ]);
        if det.is_one() {
            adj
        } else {
            Mat2(adj.0.map(|row| row.map(|x| -x)))
        }
    }

    pub fn apply(&self, v: &[BigInt; 2]) -> [BigInt; 2] {
        [
            &self.0[0][0] * &v[0] + &self.0[0][1] * &v[1],
            &self.0[1][0] * &v[0] + &self.0[1][1] * &v[1],
        ]
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    pub fn pow(&self, k: u32) -> Mat2 {
        let mut out = Mat2::identity();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

/// The Euler pairing on a chosen basis of the numerical Grothendieck group:
/// `gram[i][j] = χ(basis_i, basis_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerLattice {
    gram: Vec<Vec<BigInt>>,
}

impl EulerLattice {
    pub fn new(gram: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = gram.len();
        if n == 0 || gram.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidParameter(
                "Gram matrix must be square and nonempty".into(),
            ));
        }
        Ok(EulerLattice { gram })
    }

    /// The rank-2 lattice spanned by the classes of two d-spherical objects
    /// with `χ([E_2], [E_1]) = λ`. The diagonal is `1 + (-1)^d` and
    /// `χ([E_1], [E_2]) = (-1)^d λ` by Serre duality; basis order is
    /// `([E_1], [E_2])`.
    pub fn rank2_spherical(lambda: impl Into<BigInt>, d: i64) -> Self {
        let lambda = lambda.into();
        let diag = BigInt::one() + sign_pow(d);
        EulerLattice {
            gram: vec![
                vec![diag.clone(), sign_pow(d) * &lambda],
                vec![lambda, diag],
            ],
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn chi(&self, i: usize, j: usize) -> &BigInt {
        &self.gram[i][j]
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    /// Checks `gram[i][j] = (-1)^d gram[j][i]`, the symmetry a Serre functor
    /// acting as `[d]` imposes. Checked, never assumed.
    pub fn serre_symmetric(&self, d: i64) -> bool {
        let n = self.rank();
        let s = sign_pow(d);
        (0..n).all(|i| (0..n).all(|j| self.gram[i][j] == &s * &self.gram[j][i]))
    }

    /// Checks `gram[i][i] = 1 + (-1)^d` on every basis class.
    pub fn spherical_diagonal(&self, d: i64) -> bool {
        let diag = BigInt::one() + sign_pow(d);
        (0..self.rank()).all(|i| self.gram[i][i] == diag)
    }

    /// `χ(Σ a_i b_i, Σ c_j b_j)` for coordinate vectors `a, c`.
    pub fn pair(&self, a: &[BigInt], c: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (i, ai) in a.iter().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                total += ai * &self.gram[i][j] * cj;
            }
        }
        total
    }

    /// Matrix of the reflection `[T_i](v) = v - χ([E_i], v) [E_i]` in the
    /// lattice basis. Its determinant is ±1.
    pub fn twist_matrix(&self, i: usize) -> Vec<Vec<BigInt>> {
        assert!(i < self.rank(), "basis index out of range");
        let n = self.rank();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        for (c, cell) in m[i].iter_mut().enumerate() {
            *cell -= &self.gram[i][c];
        }
        m
    }

    /// The rank-2 twist matrix as a `Mat2` (rank-2 lattices only).
    pub fn twist_mat2(&self, i: usize) -> Mat2 {
        assert_eq!(self.rank(), 2, "twist_mat2 needs a rank-2 lattice");
        let m = self.twist_matrix(i);
        Mat2([
            [m[0][0].clone(), m[0][1].clone()],
            [m[1][0].clone(), m[1][1].clone()],
        ])
    }
}

/// Matrix of `[T_2 ∘ T_1]` on the span of the two spherical classes:
/// `(-1)^{1-d} [[1, λ], [-λ, 1-λ²]]` in the basis `([E_1], [E_2])`.
pub fn composition_matrix(lambda: impl Into<BigInt>, d: i64) -> Mat2 {
    let lambda = lambda.into();
    let sign = sign_pow(1 - d);
    let l2 = &lambda * &lambda;
    Mat2([
        [sign.clone(), &sign * &lambda],
        [-(&sign * &lambda), sign * (BigInt::one() - l2)],
    ])
}

/// `log ρ` of the induced action: zero for `|λ| <= 2` (a determinant-one
/// integer matrix with repeated or complex unit eigenvalues), and the exact
/// quadratic form `log((λ² - 2 + sqrt(λ⁴ - 4λ²)) / 2)` for `|λ| >= 3`.
/// Independent of `d`: the global sign does not change moduli.
pub fn log_spectral_radius(lambda: impl Into<BigInt>) -> EntropyValue {
    EntropyValue::quadratic(&lambda.into().abs())
}

/// Whether `(composition_matrix(λ, d))³` is the identity; true exactly for
/// the Torelli elements, in particular `λ = ±1` with even `d`.
pub fn torelli_check(lambda: impl Into<BigInt>, d: i64) -> bool {
    composition_matrix(lambda, d).pow(3).is_identity()
}

/// Outcome of the `h_0` versus `log ρ` comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Equal,
    StrictGap,
    HypothesisViolated,
}

/// Hypothesis labels attached to `Verdict::HypothesisViolated`.
pub mod hypothesis {
    pub const CLASSES_NOT_INDEPENDENT: &str = "classes_not_independent";
    pub const PAIRING_PM2_WITH_EVEN_D: &str = "euler_pairing_pm2_with_even_d";
    pub const PAIRING_ZERO_WITH_ODD_D: &str = "euler_pairing_zero_with_odd_d";
    /// `|χ| <= dim V` always holds for an actual graded Hom space; inputs
    /// breaking it cannot come from a pair of objects.
    pub const PAIRING_EXCEEDS_DIM: &str = "euler_pairing_exceeds_total_dim";
}

/// Comparison of the twist-composition entropy with the spectral radius of
/// the induced K-theory action for one pair `(dim V, λ, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTReport {
    pub dim_v: BigInt,
    pub lambda: BigInt,
    pub d: i64,
    pub h0: EntropyValue,
    pub log_rho: EntropyValue,
    pub verdict: Verdict,
    pub violated_hypotheses: Vec<&'static str>,
}

impl Serialize for KTReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("KTReport", 7)?;
        s.serialize_field("dim_v", &self.dim_v.to_string())?;
        s.serialize_field("lambda", &self.lambda.to_string())?;
        s.serialize_field("d", &self.d)?;
        s.serialize_field("h0", &self.h0)?;
        s.serialize_field("log_rho", &self.log_rho)?;
        s.serialize_field("verdict", &self.verdict)?;
        s.serialize_field("violated_hypotheses", &self.violated_hypotheses)?;
        s.end()
    }
}

/// Decides the equality `h_0(T_2 ∘ T_1) = log ρ([T_2 ∘ T_1])` for
/// `λ = χ([E_2], [E_1])`. Hypothesis failures are verdicts, not errors:
/// the report still carries both values.
pub fn kt_verdict(
    dim_v: impl Into<BigInt>,
    lambda: impl Into<BigInt>,
    d: i64,
    classes_independent: bool,
) -> KTReport {
    let dim_v = dim_v.into();
    let lambda = lambda.into();
    assert!(!dim_v.is_negative(), "dim V must be >= 0");
    assert!(d >= 1, "spherical dimension d must be >= 1");

    let mut violated = Vec::new();
    if !classes_independent {
        violated.push(hypothesis::CLASSES_NOT_INDEPENDENT);
    }
    if d % 2 == 0 && lambda.abs() == BigInt::from(2) {
        violated.push(hypothesis::PAIRING_PM2_WITH_EVEN_D);
    }
    if d % 2 != 0 && lambda.is_zero() {
        violated.push(hypothesis::PAIRING_ZERO_WITH_ODD_D);
    }
    if lambda.abs() > dim_v {
        violated.push(hypothesis::PAIRING_EXCEEDS_DIM);
    }

    let h0 = EntropyValue::quadratic(&dim_v);
    let log_rho = log_spectral_radius(lambda.clone());
    let verdict = if !violated.is_empty() {
        Verdict::HypothesisViolated
    } else if h0 == log_rho {
        Verdict::Equal
    } else {
        Verdict::StrictGap
    };
    KTReport {
        dim_v,
        lambda,
        d,
        h0,
        log_rho,
        verdict,
        violated_hypotheses: violated,
    }
}
