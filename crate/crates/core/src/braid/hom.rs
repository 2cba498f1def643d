//! Graded Hom computation between twisted complexes: the total Hom complex
//! is assembled degree by degree and its cohomology dimensions are computed
//! by exact rational Gaussian elimination.

use super::algebra::{CyAlgebra, PathElem};
use super::complex::TwistedComplex;
use crate::laurent::Laurent1;
use num::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// One basis element of `Hom^n(X, Y)`: a path from generator `k` of `X` to
/// generator `l` of `Y`.
type HomBasisElem = (usize, usize, PathElem);

fn hom_basis(
    alg: &CyAlgebra,
    x: &TwistedComplex,
    y: &TwistedComplex,
) -> BTreeMap<i64, Vec<HomBasisElem>> {
    let mut basis: BTreeMap<i64, Vec<HomBasisElem>> = BTreeMap::new();
    for (k, gk) in x.generators().iter().enumerate() {
        for (l, gl) in y.generators().iter().enumerate() {
            for b in alg.block(gk.vertex, gl.vertex) {
                let n = alg.degree(b) - gl.shift + gk.shift;
                basis.entry(n).or_default().push((k, l, b));
            }
        }
    }
    basis
}

/// Matrix of `D : Hom^n -> Hom^{n+1}`, `D f = δ_Y ∘ f - (-1)^n f ∘ δ_X`,
/// as rows indexed by the target basis.
fn differential_matrix(
    alg: &CyAlgebra,
    x: &TwistedComplex,
    y: &TwistedComplex,
    n: i64,
    from: &[HomBasisElem],
    to: &[HomBasisElem],
) -> Vec<Vec<BigRational>> {
    let index: BTreeMap<HomBasisElem, usize> =
        to.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
    let mut m = vec![vec![BigRational::zero(); from.len()]; to.len()];
    for (col, &(k, l, b)) in from.iter().enumerate() {
        // postcompose with the differential of Y
        for (&(l2, l1), e) in y.diff_entries() {
            if l1 != l {
                continue;
            }
            if let Some(p) = alg.compose(e.path, b) {
                let row = index[&(k, l2, p)];
                m[row][col] += &e.coeff;
            }
        }
        // precompose with the differential of X, with the Koszul sign
        for (&(k1, k2), e) in x.diff_entries() {
            if k1 != k {
                continue;
            }
            if let Some(p) = alg.compose(b, e.path) {
                let row = index[&(k2, l, p)];
                let term = &e.coeff * BigRational::from_integer((-sign).into());
                m[row][col] += term;
            }
        }
    }
    m
}

fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = m[pivot_row][col].recip();
        let (top, rest) = m.split_at_mut(pivot_row + 1);
        let pivot = &top[pivot_row];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (cell, pv) in row.iter_mut().zip(pivot).skip(col) {
                let sub = &factor * pv;
                *cell -= sub;
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// The Poincaré polynomial `Σ dim Hom(X, Y[n]) q^n` of the cohomology of
/// the total Hom complex. All coefficients are nonnegative by construction.
pub fn hom_poincare(alg: &CyAlgebra, x: &TwistedComplex, y: &TwistedComplex) -> Laurent1 {
    assert_eq!(x.d(), alg.d(), "complex built over a different algebra");
    assert_eq!(y.d(), alg.d(), "complex built over a different algebra");
    let basis = hom_basis(alg, x, y);
    let empty = Vec::new();
    let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
    for (&n, from) in &basis {
        let to = basis.get(&(n + 1)).unwrap_or(&empty);
        let m = differential_matrix(alg, x, y, n, from, to);
        ranks.insert(n, rank(m));
    }
    let mut p = Laurent1::zero();
    for (&n, elems) in &basis {
        let out_rank = ranks.get(&n).copied().unwrap_or(0);
        let in_rank = ranks.get(&(n - 1)).copied().unwrap_or(0);
        let dim = elems
            .len()
            .checked_sub(out_rank + in_rank)
            .expect("image lies in the kernel since D² = 0");
        p = &p + &Laurent1::monomial(n, dim as i64);
    }
    p
}
