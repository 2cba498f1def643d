//! The graded Ext algebra of `S_1 ⊕ S_2` in the A₂ Calabi–Yau category of
//! dimension `d`: two idempotents `e_1, e_2`, an arrow `v : 1 -> 2` in
//! degree 1, an arrow `u : 2 -> 1` in degree `d - 1`, and the two loops
//! `uv, vu` in degree `d`. All products of length three or more vanish.

use crate::{Error, Result};

/// Basis paths of the algebra. `Arrow(i)` is the arrow out of vertex `i`:
/// `Arrow(1) = v` and `Arrow(2) = u`. `Loop(1) = uv`, `Loop(2) = vu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathElem {
    Id(u8),
    Arrow(u8),
    Loop(u8),
}

impl PathElem {
    pub fn source(&self) -> u8 {
        match *self {
            PathElem::Id(i) | PathElem::Loop(i) => i,
            PathElem::Arrow(i) => i,
        }
    }

    pub fn target(&self) -> u8 {
        match *self {
            PathElem::Id(i) | PathElem::Loop(i) => i,
            PathElem::Arrow(i) => 3 - i,
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, PathElem::Id(_))
    }
}

/// The Ext algebra for a fixed Calabi–Yau dimension `d >= 2`.
///
/// The presentation is pinned by the spherical condition on each vertex
/// (`Hom(S_i, S_i)` one-dimensional in degrees 0 and `d`) together with
/// `Hom(S_2, S_1)` in degree `d - 1` and `Hom(S_1, S_2)` in degree 1; the
/// constructor asserts these Hom profiles. `d = 1` is rejected: the degrees
/// of `v` and the idempotents would collide and formality no longer pins
/// the multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyAlgebra {
    d: i64,
}

impl CyAlgebra {
    pub fn new(d: i64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!(
                "the Calabi–Yau dimension must be >= 2, got {d}"
            )));
        }
        let alg = CyAlgebra { d };
        alg.assert_calibration();
        Ok(alg)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn degree(&self, x: PathElem) -> i64 {
        match x {
            PathElem::Id(_) => 0,
            PathElem::Arrow(1) => 1,
            PathElem::Arrow(_) => self.d - 1,
            PathElem::Loop(_) => self.d,
        }
    }

    /// Composition `x ∘ y` (apply `y` first). `None` is the zero product;
    /// composability (`source(x) = target(y)`) is a caller invariant.
    pub fn compose(&self, x: PathElem, y: PathElem) -> Option<PathElem> {
        debug_assert_eq!(x.source(), y.target(), "non-composable paths");
        match (x, y) {
            (PathElem::Id(_), y) => Some(y),
            (x, PathElem::Id(_)) => Some(x),
            // u ∘ v is the loop at 1, v ∘ u the loop at 2
            (PathElem::Arrow(a), PathElem::Arrow(b)) if a != b => Some(PathElem::Loop(b)),
            // any product involving a loop (or longer) vanishes
            _ => None,
        }
    }

    /// Basis of the Hom block from vertex `src` to vertex `tgt`, listed by
    /// increasing degree.
    pub fn block(&self, src: u8, tgt: u8) -> Vec<PathElem> {
        if src == tgt {
            vec![PathElem::Id(src), PathElem::Loop(src)]
        } else {
            vec![PathElem::Arrow(src)]
        }
    }

    /// The two calibration anchors plus gradedness and associativity of the
    /// multiplication table.
    fn assert_calibration(&self) {
        let basis = [
            PathElem::Id(1),
            PathElem::Id(2),
            PathElem::Arrow(1),
            PathElem::Arrow(2),
            PathElem::Loop(1),
            PathElem::Loop(2),
        ];
        for &x in &basis {
            for &y in &basis {
                if x.source() != y.target() {
                    continue;
                }
                if let Some(p) = self.compose(x, y) {
                    assert_eq!(p.source(), y.source());
                    assert_eq!(p.target(), x.target());
                    assert_eq!(self.degree(p), self.degree(x) + self.degree(y));
                }
                for &z in &basis {
                    if y.source() != z.target() {
                        continue;
                    }
                    let left = self
                        .compose(x, y)
                        .and_then(|xy| self.compose(xy, z));
                    let right = self
                        .compose(y, z)
                        .and_then(|yz| self.compose(x, yz));
                    assert_eq!(left, right, "associativity on ({x:?}, {y:?}, {z:?})");
                }
            }
        }
        // degree profiles of the four Hom blocks
        let degs = |src, tgt| -> Vec<i64> {
            self.block(src, tgt)
                .iter()
                .map(|&b| self.degree(b))
                .collect()
        };
        assert_eq!(degs(1, 1), vec![0, self.d]);
        assert_eq!(degs(2, 2), vec![0, self.d]);
        assert_eq!(degs(1, 2), vec![1]);
        assert_eq!(degs(2, 1), vec![self.d - 1]);
        // the loops pair the two arrows: u∘v and v∘u are nonzero, length
        // three vanishes
        assert_eq!(
            self.compose(PathElem::Arrow(2), PathElem::Arrow(1)),
            Some(PathElem::Loop(1))
        );
        assert_eq!(
            self.compose(PathElem::Arrow(1), PathElem::Arrow(2)),
            Some(PathElem::Loop(2))
        );
        assert_eq!(self.compose(PathElem::Loop(2), PathElem::Arrow(1)), None);
        assert_eq!(self.compose(PathElem::Arrow(1), PathElem::Loop(1)), None);
    }
}
