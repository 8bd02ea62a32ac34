//! Polygon spaces and their parameter region: side-length vectors and the
//! cone they live in, wall detection, closure residuals and degeneracy
//! tests, plus the Euclidean comparison polygons.

#[cfg(all(not(feature = "std"), feature = "libm"))]
use num_traits::Float;

use crate::borel::{phi_map, translation_length, word_product, BElem};
use crate::hyp3::{dist, dist_to_geodesic, HPoint};
use crate::mat2::Mat2;
use crate::{Error, Result};
use alloc::vec::Vec;

/// A vector of side lengths `r = (r_1, ..., r_n)`, all positive, `n >= 3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Weights {
    r: Vec<f64>,
}

impl Weights {
    pub fn new(r: Vec<f64>) -> Result<Self> {
        if r.len() < 3 {
            return Err(Error::Invalid("need at least 3 side lengths".into()));
        }
        for (i, v) in r.iter().enumerate() {
            if !(*v > 0.0) || !v.is_finite() {
                return Err(Error::NonPositiveLength(i));
            }
        }
        Ok(Weights { r })
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.r
    }

    pub fn total(&self) -> f64 {
        self.r.iter().sum()
    }
}

/// A based hyperbolic n-gon, stored as its word in `B`.
#[derive(Debug, Clone, PartialEq)]
pub struct HPolygon {
    word: Vec<BElem>,
}

impl HPolygon {
    pub fn new(word: Vec<BElem>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::Invalid("empty word".into()));
        }
        Ok(HPolygon { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[BElem] {
        &self.word
    }

    /// Vertices `(*, b_1 *, ..., b_1...b_n *)`; the first is always `*`.
    pub fn vertices(&self) -> Vec<HPoint> {
        phi_map(&self.word)
    }

    /// Side lengths, the translation lengths of the letters.
    pub fn side_lengths(&self) -> Vec<f64> {
        self.word.iter().map(translation_length).collect()
    }
}

/// A Euclidean n-gon given by its edge vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EPolygon {
    edges: Vec<[f64; 3]>,
}

impl EPolygon {
    pub fn new(edges: Vec<[f64; 3]>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            let n2 = e[0] * e[0] + e[1] * e[1] + e[2] * e[2];
            if !(n2 > 0.0) || !n2.is_finite() {
                return Err(Error::NonPositiveLength(i));
            }
        }
        Ok(EPolygon { edges })
    }

    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[f64; 3]] {
        &self.edges
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        self.edges
            .iter()
            .map(|e| (e[0] * e[0] + e[1] * e[1] + e[2] * e[2]).sqrt())
            .collect()
    }
}

/// Membership in the closed polyhedral cone of realizable side lengths:
/// every `r_i` is at most the sum of the others.  The comparison is exact
/// on floats; the closed cone includes its walls.
pub fn in_cone(r: &Weights) -> bool {
    let total = r.total();
    r.as_slice().iter().all(|&ri| ri <= total - ri)
}

/// Searches for a balanced partition `I | J` of the sides with
/// `|I| > 1`, `|J| > 1` and `sum_I r = sum_J r` within `tol`.  Returns the
/// witness `I` (indices, 0-based) when one exists.
///
/// The moduli space can be singular only on such walls, so callers reject
/// weights for which this returns a witness.
pub fn on_wall(r: &Weights, tol: f64) -> Result<Option<Vec<usize>>> {
    let n = r.n();
    if n > 24 {
        return Err(Error::EnumerationLimit(n));
    }
    let rs = r.as_slice();
    let total = r.total();
    // fix side n-1 in J so each partition is enumerated once
    for mask in 1u32..(1 << (n - 1)) {
        let size = mask.count_ones() as usize;
        if size < 2 || n - size < 2 {
            continue;
        }
        let sum_i: f64 = (0..n - 1).filter(|i| mask >> i & 1 == 1).map(|i| rs[i]).sum();
        if (2.0 * sum_i - total).abs() <= tol {
            return Ok(Some((0..n - 1).filter(|i| mask >> i & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// How far the word is from closing up: the distance the product moves the
/// basepoint plus the Frobenius deviation of the product from its
/// triangular part.  Zero exactly when `b_1 ... b_n = 1`.
pub fn closure_residual(p: &HPolygon) -> f64 {
    let w = word_product(p.word());
    let m = w.matrix();
    let g = w.sl2c();
    let framing = {
        let (b, _) = crate::borel::iwasawa(&g);
        m.dist(&b.matrix())
    };
    dist(&crate::hyp3::apply_isometry(&g, &HPoint::star()), &HPoint::star()) + framing
}

/// True when every vertex lies within `tol` of one geodesic.  The geodesic
/// is fitted through the two most distant vertices, which is exact for
/// genuinely degenerate polygons.
pub fn is_degenerate(p: &HPolygon, tol: f64) -> bool {
    let vs = p.vertices();
    let mut best = (0usize, 1usize, -1.0f64);
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            let d = dist(&vs[i], &vs[j]);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    if best.2 < tol {
        // all vertices coincide
        return true;
    }
    let (a, b) = (&vs[best.0], &vs[best.1]);
    vs.iter().all(|v| dist_to_geodesic(v, a, b).map(|d| d <= tol).unwrap_or(false))
}

/// `|sum of edges|` for a Euclidean polygon.
pub fn euclidean_closure_residual(p: &EPolygon) -> f64 {
    let mut s = [0.0f64; 3];
    for e in p.edges() {
        s[0] += e[0];
        s[1] += e[1];
        s[2] += e[2];
    }
    (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt()
}

/// Frobenius deviation of the word product from the identity; a
/// convenience used by conservation checks.
pub fn closure_matrix_defect(p: &HPolygon) -> f64 {
    word_product(p.word()).matrix().dist(&Mat2::identity())
}
