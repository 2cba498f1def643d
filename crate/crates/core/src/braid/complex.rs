//! Twisted complexes of shifted projective generators over the A₂
//! Calabi–Yau Ext algebra, with the spherical twists acting by cones and a
//! Gaussian-elimination minimal form.

use super::algebra::{CyAlgebra, PathElem};
use super::word::{BraidLetter, BraidWord};
use num::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// One generator `P_vertex[shift]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Generator {
    pub vertex: u8,
    pub shift: i64,
}

/// A homogeneous differential entry: `coeff * path`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Entry {
    pub coeff: BigRational,
    pub path: PathElem,
}

/// A twisted complex: generators plus a square-zero degree-one differential.
///
/// The entry at `(k, l)` is a morphism from generator `l` to generator `k`
/// of algebra degree `shift_k - shift_l + 1`. Since every Hom block of the
/// algebra has at most one basis path per degree, each entry is a scalar
/// multiple of a single path.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedComplex {
    d: i64,
    gens: Vec<Generator>,
    diff: BTreeMap<(usize, usize), Entry>,
}

impl TwistedComplex {
    /// The simple object at a vertex: one generator, zero differential.
    pub fn simple(alg: &CyAlgebra, vertex: u8) -> Self {
        assert!(vertex == 1 || vertex == 2, "vertex must be 1 or 2");
        TwistedComplex {
            d: alg.d(),
            gens: vec![Generator { vertex, shift: 0 }],
            diff: BTreeMap::new(),
        }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub(crate) fn diff_entries(&self) -> impl Iterator<Item = (&(usize, usize), &Entry)> {
        self.diff.iter()
    }

    fn insert_entry(&mut self, k: usize, l: usize, coeff: BigRational, path: PathElem) {
        if coeff.is_zero() {
            return;
        }
        match self.diff.get_mut(&(k, l)) {
            Some(e) => {
                // the degree pins the path, so merging entries never mixes paths
                assert_eq!(e.path, path, "degree bookkeeping broke");
                e.coeff += coeff;
                if e.coeff.is_zero() {
                    self.diff.remove(&(k, l));
                }
            }
            None => {
                self.diff.insert((k, l), Entry { coeff, path });
            }
        }
    }

    /// Shift `X[n]`: generator shifts move up by `n`, the differential picks
    /// up the sign `(-1)^n`.
    pub fn shifted(&self, n: i64) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| Generator {
                vertex: g.vertex,
                shift: g.shift + n,
            })
            .collect();
        let flip = n.rem_euclid(2) == 1;
        let diff = self
            .diff
            .iter()
            .map(|(&key, e)| {
                let coeff = if flip { -e.coeff.clone() } else { e.coeff.clone() };
                (
                    key,
                    Entry {
                        coeff,
                        path: e.path,
                    },
                )
            })
            .collect();
        TwistedComplex {
            d: self.d,
            gens,
            diff,
        }
    }

    /// Structural checks: entries sit in the right Hom blocks with the right
    /// degrees, and the differential squares to zero.
    pub fn validate(&self, alg: &CyAlgebra) {
        assert_eq!(self.d, alg.d());
        for (&(k, l), e) in &self.diff {
            let gk = self.gens[k];
            let gl = self.gens[l];
            assert!(!e.coeff.is_zero());
            assert_eq!(e.path.source(), gl.vertex, "entry source mismatch");
            assert_eq!(e.path.target(), gk.vertex, "entry target mismatch");
            assert_eq!(
                alg.degree(e.path),
                gk.shift - gl.shift + 1,
                "entry degree mismatch at ({k}, {l})"
            );
        }
        self.assert_square_zero(alg);
    }

    /// `δ² = 0`, exactly.
    pub fn assert_square_zero(&self, alg: &CyAlgebra) {
        let mut square: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
        for (&(k, j), outer) in &self.diff {
            for (&(j2, l), inner) in &self.diff {
                if j2 != j {
                    continue;
                }
                if alg.compose(outer.path, inner.path).is_some() {
                    let c = &outer.coeff * &inner.coeff;
                    let slot = square.entry((k, l)).or_insert_with(BigRational::zero);
                    *slot += c;
                }
            }
        }
        for ((k, l), c) in square {
            assert!(c.is_zero(), "δ² has a nonzero entry at ({k}, {l})");
        }
    }

    /// The spherical twist `T_i(X) = cone(Hom•(P_i, X) ⊗ P_i -> X)`,
    /// without minimization.
    fn twist_cone(&self, alg: &CyAlgebra, i: u8) -> Self {
        // basis of Hom•(P_i, X): (generator index, path), hom degree
        // deg(path) - shift_k
        let mut hom: Vec<(usize, PathElem, i64)> = Vec::new();
        for (k, g) in self.gens.iter().enumerate() {
            for b in alg.block(i, g.vertex) {
                hom.push((k, b, alg.degree(b) - g.shift));
            }
        }
        let h = hom.len();
        let mut gens: Vec<Generator> = hom
            .iter()
            .map(|&(_, _, n)| Generator {
                vertex: i,
                shift: 1 - n,
            })
            .collect();
        gens.extend(self.gens.iter().copied());

        let mut out = TwistedComplex {
            d: self.d,
            gens,
            diff: BTreeMap::new(),
        };
        // internal differential of (Hom ⊗ P_i)[1]: minus the induced map
        for (f_idx, &(k, b, _)) in hom.iter().enumerate() {
            for (&(k2, l), e) in &self.diff {
                if l != k {
                    continue;
                }
                if let Some(p) = alg.compose(e.path, b) {
                    let g_idx = hom
                        .iter()
                        .position(|&(kg, bg, _)| kg == k2 && bg == p)
                        .expect("composite lives in the Hom basis");
                    out.insert_entry(g_idx, f_idx, -e.coeff.clone(), PathElem::Id(i));
                }
            }
        }
        // the original differential
        for (&(k, l), e) in &self.diff {
            out.insert_entry(h + k, h + l, e.coeff.clone(), e.path);
        }
        // evaluation map
        for (f_idx, &(k, b, _)) in hom.iter().enumerate() {
            out.insert_entry(h + k, f_idx, BigRational::one(), b);
        }
        out
    }

    /// The inverse twist `T_i^{-1}(X) = cone(X -> Hom•(X, P_i)* ⊗ P_i)[-1]`,
    /// without minimization.
    fn inverse_twist_cone(&self, alg: &CyAlgebra, i: u8) -> Self {
        // basis of Hom•(X, P_i): (generator index, path), hom degree
        // deg(path) + shift_k
        let mut hom: Vec<(usize, PathElem, i64)> = Vec::new();
        for (k, g) in self.gens.iter().enumerate() {
            for b in alg.block(g.vertex, i) {
                hom.push((k, b, alg.degree(b) + g.shift));
            }
        }
        let x = self.gens.len();
        let mut gens = self.gens.clone();
        gens.extend(hom.iter().map(|&(_, _, n)| Generator {
            vertex: i,
            shift: n - 1,
        }));

        let mut out = TwistedComplex {
            d: self.d,
            gens,
            diff: self.diff.clone(),
        };
        // coevaluation, negated by the overall shift
        for (f_idx, &(k, b, _)) in hom.iter().enumerate() {
            out.insert_entry(x + f_idx, k, -BigRational::one(), b);
        }
        // dual differential on the Hom part, negated by the overall shift
        for (f_idx, &(kf, bf, _)) in hom.iter().enumerate() {
            for (g_idx, &(kg, bg, _)) in hom.iter().enumerate() {
                let mut total = BigRational::zero();
                for (&(r, c), e) in &self.diff {
                    if r == kf && c == kg && alg.compose(bf, e.path) == Some(bg) {
                        total += &e.coeff;
                    }
                }
                out.insert_entry(x + f_idx, x + g_idx, -total, PathElem::Id(i));
            }
        }
        out
    }

    /// Applies one braid letter (a twist or an inverse twist) and minimizes.
    pub fn apply_letter(&self, alg: &CyAlgebra, letter: BraidLetter) -> Self {
        let cone = if letter.inverse {
            self.inverse_twist_cone(alg, letter.gen)
        } else {
            self.twist_cone(alg, letter.gen)
        };
        cone.assert_square_zero(alg);
        cone.minimize(alg)
    }

    /// Applies a braid word, rightmost letter first.
    pub fn apply_word(&self, alg: &CyAlgebra, word: &BraidWord) -> Self {
        let mut cur = self.clone();
        for &letter in word.letters().iter().rev() {
            cur = cur.apply_letter(alg, letter);
        }
        cur
    }

    /// Gaussian elimination of invertible (scalar) differential entries,
    /// scanning row-major so pivots are taken at the lowest generator index
    /// first. The result has no identity component in any entry.
    pub fn minimize(&self, alg: &CyAlgebra) -> Self {
        let mut cur = self.clone();
        loop {
            let pivot = cur
                .diff
                .iter()
                .find(|(_, e)| e.path.is_identity())
                .map(|(&key, e)| (key, e.coeff.clone()));
            let ((pk, pl), pcoeff) = match pivot {
                Some(p) => p,
                None => break,
            };
            debug_assert!(!pcoeff.is_zero());

            let mut next = TwistedComplex {
                d: cur.d,
                gens: Vec::new(),
                diff: BTreeMap::new(),
            };
            // index map skipping the two eliminated generators
            let mut remap: Vec<Option<usize>> = Vec::with_capacity(cur.gens.len());
            for (idx, g) in cur.gens.iter().enumerate() {
                if idx == pk || idx == pl {
                    remap.push(None);
                } else {
                    remap.push(Some(next.gens.len()));
                    next.gens.push(*g);
                }
            }
            for (&(k, l), e) in &cur.diff {
                if let (Some(nk), Some(nl)) = (remap[k], remap[l]) {
                    next.insert_entry(nk, nl, e.coeff.clone(), e.path);
                }
            }
            // correction δ'_{ab} = δ_{ab} - δ_{a,pl} φ^{-1} δ_{pk,b}
            let inv = pcoeff.recip();
            let into_pivot: Vec<(usize, Entry)> = cur
                .diff
                .iter()
                .filter(|(&(k, l), _)| l == pl && k != pk)
                .map(|(&(k, _), e)| (k, e.clone()))
                .collect();
            let from_pivot: Vec<(usize, Entry)> = cur
                .diff
                .iter()
                .filter(|(&(k, l), _)| k == pk && l != pl)
                .map(|(&(_, l), e)| (l, e.clone()))
                .collect();
            for (a, ea) in &into_pivot {
                for (b, eb) in &from_pivot {
                    if let (Some(na), Some(nb)) = (remap[*a], remap[*b]) {
                        if let Some(p) = alg.compose(ea.path, eb.path) {
                            let c = -(&ea.coeff * &inv * &eb.coeff);
                            next.insert_entry(na, nb, c, p);
                        }
                    }
                }
            }
            cur = next;
        }
        cur.assert_square_zero(alg);
        cur
    }
}

impl fmt::Display for TwistedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "P{}[{}]", g.vertex, g.shift)?;
        }
        write!(f, "]")?;
        if !self.diff.is_empty() {
            write!(f, " with {} differential entries", self.diff.len())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::hom::hom_poincare;
    use super::super::word::BraidWord;
    use super::*;
    use crate::laurent::Laurent1;

    fn letter(gen: u8, inverse: bool) -> BraidLetter {
        BraidLetter { gen, inverse }
    }

    #[test]
    fn twist_fixes_own_simple_up_to_shift() {
        for d in 2..=5 {
            let alg = CyAlgebra::new(d).unwrap();
            for v in [1u8, 2] {
                let s = TwistedComplex::simple(&alg, v);
                let t = s.apply_letter(&alg, letter(v, false));
                assert_eq!(
                    t.generators(),
                    &[Generator {
                        vertex: v,
                        shift: 1 - d
                    }]
                );
                assert!(t.diff.is_empty());
                let ti = s.apply_letter(&alg, letter(v, true));
                assert_eq!(
                    ti.generators(),
                    &[Generator {
                        vertex: v,
                        shift: d - 1
                    }]
                );
            }
        }
    }

    #[test]
    fn twist_of_other_simple_is_a_two_step_complex() {
        let alg = CyAlgebra::new(3).unwrap();
        let s2 = TwistedComplex::simple(&alg, 2);
        let t = s2.apply_letter(&alg, letter(1, false));
        let mut vertices: Vec<u8> = t.generators().iter().map(|g| g.vertex).collect();
        vertices.sort();
        assert_eq!(vertices, vec![1, 2]);
        assert_eq!(t.diff.len(), 1);
        let entry = t.diff.values().next().unwrap();
        assert_eq!(entry.path, PathElem::Arrow(1));
    }

    #[test]
    fn contractible_pair_minimizes_to_nothing() {
        let alg = CyAlgebra::new(3).unwrap();
        let mut x = TwistedComplex {
            d: 3,
            gens: vec![
                Generator { vertex: 1, shift: 1 },
                Generator { vertex: 1, shift: 0 },
            ],
            diff: BTreeMap::new(),
        };
        x.insert_entry(1, 0, BigRational::one(), PathElem::Id(1));
        x.validate(&alg);
        let m = x.minimize(&alg);
        assert!(m.generators().is_empty());

        let s1 = TwistedComplex::simple(&alg, 1);
        assert_eq!(s1.minimize(&alg), s1);
    }

    #[test]
    fn inverse_cancels_twist_exactly_on_simples() {
        for d in 2..=5 {
            let alg = CyAlgebra::new(d).unwrap();
            let s2 = TwistedComplex::simple(&alg, 2);
            let round = s2
                .apply_letter(&alg, letter(1, false))
                .apply_letter(&alg, letter(1, true));
            assert_eq!(round, s2);
            let round2 = s2
                .apply_letter(&alg, letter(1, true))
                .apply_letter(&alg, letter(1, false));
            assert_eq!(round2, s2);
        }
    }

    #[test]
    fn square_zero_along_words() {
        let alg = CyAlgebra::new(2).unwrap();
        let word: BraidWord = "1 2 1' 2 2 1".parse().unwrap();
        let mut x = TwistedComplex::simple(&alg, 1);
        for &l in word.letters().iter().rev() {
            x = x.apply_letter(&alg, l);
            x.validate(&alg);
        }
    }

    #[test]
    fn shift_convention_matches_hom_grading() {
        let alg = CyAlgebra::new(4).unwrap();
        let s1 = TwistedComplex::simple(&alg, 1);
        let shifted = s1.shifted(1 - 4);
        let p = hom_poincare(&alg, &s1, &shifted);
        assert_eq!(p, Laurent1::from_terms([(3, 1), (7, 1)]));
    }
}
