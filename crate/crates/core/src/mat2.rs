//! Complex 2x2 matrices.
//!
//! Everything in this crate lives inside `SL2(C)` or its Lie algebra, so a
//! small dedicated type beats a general matrix library: operations are
//! closed-form and allocation-free.

#[cfg(all(not(feature = "std"), feature = "libm"))]
use num_traits::Float;

use core::ops::{Add, Mul, Neg, Sub};
use num_complex::Complex64;

/// A 2x2 complex matrix in row-major order:
/// `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

/// Shorthand for a complex number.
pub fn cplx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl Mat2 {
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_rows(row0: [Complex64; 2], row1: [Complex64; 2]) -> Self {
        Mat2::new(row0[0], row0[1], row1[0], row1[1])
    }

    pub fn identity() -> Self {
        Mat2::new(cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0))
    }

    pub fn zero() -> Self {
        Mat2::new(cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0))
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Mat2::new(a, cplx(0.0, 0.0), cplx(0.0, 0.0), d)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Mat2::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.a, self.c, self.b, self.d)
    }

    pub fn conj(&self) -> Self {
        Mat2::new(self.a.conj(), self.b.conj(), self.c.conj(), self.d.conj())
    }

    /// Inverse; intended for matrices with determinant near 1.
    pub fn inverse(&self) -> Self {
        let det = self.det();
        Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Mat2::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(cplx(s, 0.0))
    }

    /// Traceless part `A - tr(A)/2 * I`.
    pub fn traceless(&self) -> Self {
        let half_tr = self.trace() * 0.5;
        Mat2::new(self.a - half_tr, self.b, self.c, self.d - half_tr)
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    pub fn dist(&self, other: &Mat2) -> f64 {
        (*self - *other).frobenius_norm()
    }

    /// Matrix exponential of a traceless 2x2 matrix.
    ///
    /// For traceless `A` one has `A^2 = -det(A) I`, so with `mu^2 = -det(A)`
    /// (complex), `exp(A) = cosh(mu) I + sinh(mu)/mu * A`.  The ratio is
    /// evaluated by series near `mu = 0`.
    pub fn exp_traceless(&self) -> Self {
        let mu2 = -self.det();
        let mu = mu2.sqrt();
        let (ch, ratio) = if mu.norm() < 1e-6 {
            // cosh(mu) ~ 1 + mu2/2 + mu2^2/24, sinh(mu)/mu ~ 1 + mu2/6 + mu2^2/120
            (
                cplx(1.0, 0.0) + mu2 * 0.5 + mu2 * mu2 / 24.0,
                cplx(1.0, 0.0) + mu2 / 6.0 + mu2 * mu2 / 120.0,
            )
        } else {
            (mu.cosh(), mu.sinh() / mu)
        };
        Mat2::identity().scale(ch) + self.scale(ratio)
    }

    /// True when the matrix is (numerically) anti-Hermitian: `A + A^* = 0`.
    pub fn is_anti_hermitian(&self, tol: f64) -> bool {
        (*self + self.adjoint()).frobenius_norm() <= tol
    }

    /// True when the matrix is upper triangular with real diagonal.
    pub fn is_upper_real_diag(&self, tol: f64) -> bool {
        self.c.norm() <= tol && self.a.im.abs() <= tol && self.d.im.abs() <= tol
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale_re(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_traceless_matches_series() {
        // exp by direct 30-term series
        let series = |m: Mat2| {
            let mut acc = Mat2::identity();
            let mut term = Mat2::identity();
            for k in 1..30 {
                term = term * m;
                term = term.scale_re(1.0 / k as f64);
                acc = acc + term;
            }
            acc
        };
        let m = Mat2::new(cplx(0.3, -0.2), cplx(1.1, 0.4), cplx(-0.7, 0.9), cplx(-0.3, 0.2));
        let e1 = m.exp_traceless();
        let e2 = series(m);
        assert!(e1.dist(&e2) < 1e-13, "dist {}", e1.dist(&e2));
    }

    #[test]
    fn exp_traceless_near_zero() {
        let m = Mat2::new(cplx(1e-9, 0.0), cplx(2e-9, 1e-9), cplx(0.0, -1e-9), cplx(-1e-9, 0.0));
        let e = m.exp_traceless();
        assert!(e.dist(&(Mat2::identity() + m)) < 1e-16);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat2::new(cplx(1.2, 0.1), cplx(0.3, -0.5), cplx(0.0, 0.7), cplx(0.8, -0.2));
        let p = m * m.inverse();
        assert!(p.dist(&Mat2::identity()) < 1e-14);
    }
}
