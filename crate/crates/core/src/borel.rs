//! The group layer: the subgroup `B` of upper-triangular matrices with
//! positive diagonal, the Iwasawa decomposition `SL2(C) = B * SU(2)`, the
//! imaginary-Killing pairing on `sl2(C)` with its `k`/`b` projections, the
//! dressing action of `SU(2)` on words in `B`, and the correspondence
//! between words and based polygons.
//!
//! `B` acts simply transitively on hyperbolic 3-space, so a word
//! `(b_1, ..., b_n)` is the same thing as the based polygon with vertices
//! `(*, b_1 *, b_1 b_2 *, ...)`; [`phi_map`] and [`phi_inverse`] convert
//! back and forth.

#[cfg(all(not(feature = "std"), feature = "libm"))]
use num_traits::Float;

use crate::hyp3::{apply_isometry, HPoint, Model, Sl2c};
use crate::mat2::{cplx, Mat2};
use crate::{Error, Result};
use alloc::vec::Vec;
use num_complex::Complex64;

/// An element of `B`: the matrix `[[a, z], [0, 1/a]]` with `a > 0`.
///
/// Stored as the pair `(a, z)` so positivity and unit determinant are
/// structural rather than numerical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BElem {
    a: f64,
    z: Complex64,
}

impl BElem {
    pub fn new(a: f64, z: Complex64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() || !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::Invalid("B element needs finite entries, a > 0".into()));
        }
        Ok(BElem { a, z })
    }

    pub fn identity() -> Self {
        BElem { a: 1.0, z: cplx(0.0, 0.0) }
    }

    /// Pure translation along the vertical axis: `diag(e^{t/2}, e^{-t/2})`.
    pub fn vertical(t: f64) -> Self {
        BElem { a: (t / 2.0).exp(), z: cplx(0.0, 0.0) }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(cplx(self.a, 0.0), self.z, cplx(0.0, 0.0), cplx(1.0 / self.a, 0.0))
    }

    pub fn sl2c(&self) -> Sl2c {
        Sl2c::new(self.matrix()).expect("B elements have unit determinant")
    }

    pub fn inverse(&self) -> Self {
        BElem { a: 1.0 / self.a, z: -self.z }
    }

    pub fn compose(&self, rhs: &BElem) -> Self {
        // [[a1,z1],[0,1/a1]] [[a2,z2],[0,1/a2]]
        BElem { a: self.a * rhs.a, z: cplx(self.a, 0.0) * rhs.z + self.z / rhs.a }
    }

    /// The unique element of `B` carrying the basepoint `*` to `p`.
    pub fn carrying_star_to(p: &HPoint) -> Self {
        let hs = p.convert(Model::HalfSpace);
        let c = hs.coords();
        let a = c[2].sqrt();
        BElem { a, z: cplx(c[0] / a, c[1] / a) }
    }
}

/// An element of `SU(2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SU2Elem(Mat2);

impl SU2Elem {
    /// Wraps a matrix, requiring unitarity and `det = 1` within `1e-12`.
    pub fn new(m: Mat2) -> Result<Self> {
        let u = (m * m.adjoint()).dist(&Mat2::identity());
        if u > 1e-12 || (m.det() - cplx(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::Invalid("matrix is not in SU(2)".into()));
        }
        Ok(SU2Elem(m))
    }

    /// Builds `[[q0 + i q1, q2 + i q3], [-q2 + i q3, q0 - i q1]]` from a
    /// unit quaternion; the input is normalized.
    pub fn from_quaternion(q: [f64; 4]) -> Result<Self> {
        let n = (q.iter().map(|c| c * c).sum::<f64>()).sqrt();
        if !(n > 1e-14) || !n.is_finite() {
            return Err(Error::Invalid("zero quaternion".into()));
        }
        let [w, x, y, z] = [q[0] / n, q[1] / n, q[2] / n, q[3] / n];
        Ok(SU2Elem(Mat2::new(cplx(w, x), cplx(y, z), cplx(-y, z), cplx(w, -x))))
    }

    pub fn quaternion(&self) -> [f64; 4] {
        [self.0.a.re, self.0.a.im, self.0.b.re, self.0.b.im]
    }

    pub fn identity() -> Self {
        SU2Elem(Mat2::identity())
    }

    pub fn matrix(&self) -> Mat2 {
        self.0
    }

    pub fn sl2c(&self) -> Sl2c {
        Sl2c::new(self.0).expect("SU(2) is inside SL2(C)")
    }

    pub fn inverse(&self) -> Self {
        SU2Elem(self.0.adjoint())
    }

    pub fn compose(&self, rhs: &SU2Elem) -> Self {
        SU2Elem(self.0 * rhs.0)
    }

    fn from_matrix_unchecked(m: Mat2) -> Self {
        SU2Elem(m)
    }
}

/// A traceless complex 2x2 matrix, an element of `sl2(C)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LieVec(Mat2);

impl LieVec {
    pub fn new(m: Mat2) -> Result<Self> {
        if m.trace().norm() > 1e-13 {
            return Err(Error::Invalid("Lie algebra element must be traceless".into()));
        }
        Ok(LieVec(m))
    }

    /// Projects an arbitrary matrix onto its traceless part first.
    pub fn traceless_part(m: Mat2) -> Self {
        LieVec(m.traceless())
    }

    pub fn zero() -> Self {
        LieVec(Mat2::zero())
    }

    pub fn matrix(&self) -> Mat2 {
        self.0
    }

    /// Is this in `k = su(2)` (anti-Hermitian)?
    pub fn is_in_k(&self, tol: f64) -> bool {
        self.0.is_anti_hermitian(tol)
    }

    /// Is this in `b` (upper triangular with real diagonal)?
    pub fn is_in_b(&self, tol: f64) -> bool {
        self.0.is_upper_real_diag(tol)
    }
}

/// `X = [[0, 1], [-1, 0]] / 2`, part of the standard `su(2)` basis.
pub fn basis_x() -> LieVec {
    LieVec(Mat2::new(cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(-0.5, 0.0), cplx(0.0, 0.0)))
}

/// `Y = [[0, i], [i, 0]] / 2`.
pub fn basis_y() -> LieVec {
    LieVec(Mat2::new(cplx(0.0, 0.0), cplx(0.0, 0.5), cplx(0.0, 0.5), cplx(0.0, 0.0)))
}

/// `H = diag(1, -1)`.
pub fn basis_h() -> LieVec {
    LieVec(Mat2::diag(cplx(1.0, 0.0), cplx(-1.0, 0.0)))
}

/// `E = [[0, 1], [0, 0]]`.
pub fn basis_e() -> LieVec {
    LieVec(Mat2::new(cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)))
}

/// The pairing `<u, v> = 2 Im tr(uv)`: twice the imaginary part of the
/// trace form.  `k` and `b` are totally isotropic and dually paired.
pub fn pairing(u: &LieVec, v: &LieVec) -> f64 {
    2.0 * (u.0 * v.0).trace().im
}

/// Projection of `u` onto `k = su(2)` along `b`.
///
/// For `u = [[alpha, beta], [gamma, -alpha]]` the `k` part is
/// `[[i Im alpha, -conj(gamma)], [gamma, -i Im alpha]]`.
pub fn project_k(u: &LieVec) -> LieVec {
    let m = u.0;
    let ia = cplx(0.0, m.a.im);
    LieVec(Mat2::new(ia, -m.c.conj(), m.c, -ia))
}

/// Projection of `u` onto `b` along `k`.
pub fn project_b(u: &LieVec) -> LieVec {
    let m = u.0;
    LieVec(Mat2::new(
        cplx(m.a.re, 0.0),
        m.b + m.c.conj(),
        cplx(0.0, 0.0),
        cplx(-m.a.re, 0.0),
    ))
}

/// The operator `R = rho_k - rho_b` entering the Sklyanin bracket.
pub fn r_operator(u: &LieVec) -> LieVec {
    let k = project_k(u);
    let b = project_b(u);
    LieVec(k.0 - b.0)
}

/// Adjoint action `Ad_g u = g u g^{-1}`.
pub fn ad(g: &Mat2, u: &LieVec) -> LieVec {
    LieVec(*g * u.0 * g.inverse())
}

/// Iwasawa decomposition `g = b k` with `b` upper triangular positive and
/// `k` in `SU(2)`; closed-form row normalization.
pub fn iwasawa(g: &Sl2c) -> (BElem, SU2Elem) {
    let m = g.matrix();
    let s = (m.c.norm_sqr() + m.d.norm_sqr()).sqrt();
    let k = Mat2::new(m.d.conj() / s, -m.c.conj() / s, m.c / s, m.d / s);
    // b = g k^*; read the (a, z) pair off the triangular product
    let a = 1.0 / s;
    let z = (m.a * m.c.conj() + m.b * m.d.conj()) / s;
    (BElem { a, z }, SU2Elem::from_matrix_unchecked(k))
}

/// `rho_B` of an arbitrary group element.
pub fn rho_b_group(g: &Sl2c) -> BElem {
    iwasawa(g).0
}

/// `rho_K` of an arbitrary group element.
pub fn rho_k_group(g: &Sl2c) -> SU2Elem {
    iwasawa(g).1
}

/// The dressing action of `k` on a word:
/// `b_i' = rho_B(rho_K(k b_1 ... b_{i-1}) b_i)`.
pub fn dressing(k: &SU2Elem, word: &[BElem]) -> Vec<BElem> {
    let mut out = Vec::with_capacity(word.len());
    // rho_K(k b_1 ... b_{i-1}) is maintained incrementally: one Iwasawa
    // split of (running unitary) * b_i yields both b_i' and the next unitary.
    let mut u = *k;
    for b in word {
        let g = Sl2c::new(u.matrix() * b.matrix()).expect("product stays in SL2(C)");
        let (bp, kp) = iwasawa(&g);
        out.push(bp);
        u = kp;
    }
    out
}

/// Infinitesimal dressing action of `x` in `k` on a word:
/// `xi_i = dL_{b_i} rho_b Ad_{b_i^{-1}} rho_k Ad_{(b_1...b_{i-1})^{-1}} x`,
/// returned as tangent matrices at each letter.
pub fn infinitesimal_dressing(x: &LieVec, word: &[BElem]) -> Vec<Mat2> {
    let mut out = Vec::with_capacity(word.len());
    let mut carried = *x; // rho_k Ad_{(b_1...b_{i-1})^{-1}} x, updated per letter
    for b in word {
        let m = b.matrix();
        let inner = project_b(&ad(&m.inverse(), &carried));
        out.push(m * inner.matrix());
        carried = project_k(&ad(&m.inverse(), &carried));
    }
    out
}

/// Vertices `(*, b_1 *, b_1 b_2 *, ..., b_1...b_n *)` of the based polygon
/// attached to a word.
pub fn phi_map(word: &[BElem]) -> Vec<HPoint> {
    let mut out = Vec::with_capacity(word.len() + 1);
    out.push(HPoint::star());
    let mut prefix = BElem::identity();
    for b in word {
        prefix = prefix.compose(b);
        out.push(apply_isometry(&prefix.sl2c(), &HPoint::star()));
    }
    out
}

/// Recovers the word from the vertices of a based polygon.  The first
/// vertex must be `*` (within `1e-9`); each letter is the unique element
/// of `B` carrying `*` to the next normalized vertex.
pub fn phi_inverse(vertices: &[HPoint]) -> Result<Vec<BElem>> {
    if vertices.is_empty() {
        return Err(Error::Invalid("empty vertex list".into()));
    }
    if crate::hyp3::dist(&vertices[0], &HPoint::star()) > 1e-9 {
        return Err(Error::NotBased);
    }
    let mut word = Vec::with_capacity(vertices.len() - 1);
    let mut prefix_inv = BElem::identity();
    for v in &vertices[1..] {
        let local = apply_isometry(&prefix_inv.sl2c(), v);
        let b = BElem::carrying_star_to(&local);
        word.push(b);
        prefix_inv = b.inverse().compose(&prefix_inv);
    }
    Ok(word)
}

/// Product of all letters.
pub fn word_product(word: &[BElem]) -> BElem {
    let mut p = BElem::identity();
    for b in word {
        p = p.compose(b);
    }
    p
}

/// Translation length `d(b *, *) = arccosh(tr(b b^*)/2)`, evaluated in a
/// cancellation-free form.
pub fn translation_length(b: &BElem) -> f64 {
    let s = b.a - 1.0 / b.a;
    // cosh(d) - 1 = ((a - 1/a)^2 + |z|^2)/2
    let delta = (s * s + b.z.norm_sqr()) / 2.0;
    (delta + (delta * (2.0 + delta)).sqrt()).ln_1p()
}

/// Maximum Frobenius distance between corresponding letters of two words.
pub fn word_distance(w1: &[BElem], w2: &[BElem]) -> f64 {
    assert_eq!(w1.len(), w2.len(), "words must have equal length");
    w1.iter()
        .zip(w2)
        .map(|(a, b)| a.matrix().dist(&b.matrix()))
        .fold(0.0, f64::max)
}
