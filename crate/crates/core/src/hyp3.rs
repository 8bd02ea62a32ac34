//! Hyperbolic 3-space: models, isometries, geodesic flow toward boundary
//! points, Busemann functions and rotations about geodesics.
//!
//! Three interchangeable models are carried by [`HPoint`]:
//!
//! * `half_space`: `(x, y, z)` with `z > 0` and metric `(dx^2+dy^2+dz^2)/z^2`;
//! * `ball`: `v` in the open unit ball with the conformal metric
//!   `4 |dv|^2 / (1-|v|^2)^2`;
//! * `hyperboloid`: `(t, x, y, z)` with `t^2 - x^2 - y^2 - z^2 = 1`, `t > 0`.
//!
//! All three have curvature -1, so `d((0,0,1), (0,0,e)) = 1` on the vertical
//! half-space axis.  The basepoint `*` fixed by `SU(2)` is `(0,0,1)` in the
//! half-space, the ball origin, and `(1,0,0,0)` on the hyperboloid.
//!
//! Geodesic flow and Busemann functions are evaluated in closed form on the
//! hyperboloid: for a boundary point with light-like lift `l = (1, xi)`,
//! the unit tangent at `p` toward `xi` is `w = l/<p,l> - p` and
//! `b(p, xi) = log <p, l>`, where `<,>` is the Minkowski pairing.  No limit
//! or ODE integration is ever taken.
//!
//! Points within roughly `1e-8` of a model boundary convert with reduced
//! precision; the operations do not fail there, they just lose digits.

#[cfg(all(not(feature = "std"), feature = "libm"))]
use num_traits::Float;

use crate::mat2::{cplx, Mat2};
use crate::{Error, Result};
use num_complex::Complex64;

/// Which coordinate chart an [`HPoint`] is carried in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    HalfSpace,
    Ball,
    Hyperboloid,
}

/// A point of hyperbolic 3-space, tagged with the model of its coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint {
    model: Model,
    /// `half_space`: `(x, y, z, _)`; `ball`: `(v1, v2, v3, _)`;
    /// `hyperboloid`: `(t, x, y, z)`.
    coords: [f64; 4],
}

/// Minkowski pairing with signature `(+,-,-,-)`.
pub fn minkowski_dot(p: [f64; 4], q: [f64; 4]) -> f64 {
    p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3]
}

fn acosh_clamped(x: f64) -> f64 {
    if x <= 1.0 {
        0.0
    } else {
        x.acosh()
    }
}

impl HPoint {
    /// The basepoint `*` fixed by `SU(2)`, in the ball model.
    pub fn star() -> Self {
        HPoint { model: Model::Ball, coords: [0.0; 4] }
    }

    pub fn half_space(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(z > 0.0) || !z.is_finite() || !x.is_finite() || !y.is_finite() {
            return Err(Error::Invalid("half-space point needs finite coords, z > 0".into()));
        }
        Ok(HPoint { model: Model::HalfSpace, coords: [x, y, z, 0.0] })
    }

    pub fn ball(v: [f64; 3]) -> Result<Self> {
        let n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        if !(n2 < 1.0) {
            return Err(Error::Invalid("ball point needs |v| < 1".into()));
        }
        Ok(HPoint { model: Model::Ball, coords: [v[0], v[1], v[2], 0.0] })
    }

    pub fn hyperboloid(t: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let q = minkowski_dot([t, x, y, z], [t, x, y, z]);
        if !(t > 0.0) || (q - 1.0).abs() > 1e-9 {
            return Err(Error::Invalid("hyperboloid point needs Minkowski norm 1, t > 0".into()));
        }
        // renormalize so the invariant holds to full precision
        let s = q.sqrt();
        Ok(HPoint { model: Model::Hyperboloid, coords: [t / s, x / s, y / s, z / s] })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    /// Raw coordinates: 3 entries for half-space/ball, 4 for hyperboloid.
    pub fn coords(&self) -> &[f64] {
        match self.model {
            Model::Hyperboloid => &self.coords,
            _ => &self.coords[..3],
        }
    }

    /// Minkowski 4-vector of the point, independent of the carried model.
    pub fn lift(&self) -> [f64; 4] {
        match self.model {
            Model::Hyperboloid => self.coords,
            Model::Ball => {
                let v = self.coords;
                let n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
                let f = 1.0 / (1.0 - n2);
                [(1.0 + n2) * f, 2.0 * v[0] * f, 2.0 * v[1] * f, 2.0 * v[2] * f]
            }
            Model::HalfSpace => {
                let [x, y, z, _] = self.coords;
                let s = x * x + y * y + z * z;
                [(s + 1.0) / (2.0 * z), x / z, y / z, (s - 1.0) / (2.0 * z)]
            }
        }
    }

    fn from_lift(l: [f64; 4], model: Model) -> Self {
        // renormalize against accumulated roundoff
        let q = minkowski_dot(l, l).sqrt();
        let l = [l[0] / q, l[1] / q, l[2] / q, l[3] / q];
        match model {
            Model::Hyperboloid => HPoint { model, coords: l },
            Model::Ball => {
                let f = 1.0 / (1.0 + l[0]);
                HPoint { model, coords: [l[1] * f, l[2] * f, l[3] * f, 0.0] }
            }
            Model::HalfSpace => {
                let f = 1.0 / (l[0] - l[3]);
                HPoint { model, coords: [l[1] * f, l[2] * f, f, 0.0] }
            }
        }
    }

    /// Ball-model coordinates of the point.
    pub fn ball_coords(&self) -> [f64; 3] {
        let p = self.convert(Model::Ball);
        [p.coords[0], p.coords[1], p.coords[2]]
    }

    /// The same point carried in `target` coordinates.
    pub fn convert(&self, target: Model) -> HPoint {
        if self.model == target {
            return *self;
        }
        HPoint::from_lift(self.lift(), target)
    }
}

/// Hyperbolic distance.
///
/// Evaluated from the lift difference as `log1p(delta + sqrt(delta(2+delta)))`
/// with `delta = cosh(d) - 1`, which keeps full relative precision for
/// nearby points where `acosh` of the Minkowski pairing would lose half the
/// mantissa.
pub fn dist(p: &HPoint, q: &HPoint) -> f64 {
    let a = p.lift();
    let b = q.lift();
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]];
    // cosh(dist) - 1 = -<p-q, p-q>/2
    let delta = (-minkowski_dot(d, d) / 2.0).max(0.0);
    (delta + (delta * (2.0 + delta)).sqrt()).ln_1p()
}

/// A point of the sphere at infinity, stored as a unit 3-vector in the
/// ball-boundary chart.  The companion half-space chart is the extended
/// complex plane reached by stereographic projection from the north pole,
/// so the north pole `(0,0,1)` is the chart point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    unit: [f64; 3],
}

/// A point of the extended complex plane, the half-space boundary chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtComplex {
    Finite(Complex64),
    Infinity,
}

impl BoundaryPoint {
    pub fn new(v: [f64; 3]) -> Result<Self> {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if !(n > 1e-14) || !n.is_finite() {
            return Err(Error::Invalid("boundary point needs a nonzero direction".into()));
        }
        Ok(BoundaryPoint { unit: [v[0] / n, v[1] / n, v[2] / n] })
    }

    /// The chart point at infinity (north pole).
    pub fn infinity() -> Self {
        BoundaryPoint { unit: [0.0, 0.0, 1.0] }
    }

    pub fn unit(&self) -> [f64; 3] {
        self.unit
    }

    /// Light-like Minkowski lift `(1, unit)`.
    pub fn lift(&self) -> [f64; 4] {
        [1.0, self.unit[0], self.unit[1], self.unit[2]]
    }

    /// Stereographic chart value on the extended complex plane.
    pub fn chart(&self) -> ExtComplex {
        let [x, y, z] = self.unit;
        if 1.0 - z < 1e-15 {
            ExtComplex::Infinity
        } else {
            ExtComplex::Finite(cplx(x / (1.0 - z), y / (1.0 - z)))
        }
    }

    pub fn from_chart(u: ExtComplex) -> Self {
        match u {
            ExtComplex::Infinity => BoundaryPoint::infinity(),
            ExtComplex::Finite(u) => {
                let n2 = u.norm_sqr();
                let f = 1.0 / (1.0 + n2);
                BoundaryPoint { unit: [2.0 * u.re * f, 2.0 * u.im * f, (n2 - 1.0) * f] }
            }
        }
    }

    /// Unit spinor `(w1, w2)` with chart value `w1/w2`; the projective line
    /// `SL2(C)` acts on.  Stable on both hemispheres.
    pub fn spinor(&self) -> [Complex64; 2] {
        let [x, y, z] = self.unit;
        if z >= 0.0 {
            let w1 = ((1.0 + z) / 2.0).sqrt();
            [cplx(w1, 0.0), cplx(x / (2.0 * w1), -y / (2.0 * w1))]
        } else {
            let w2 = ((1.0 - z) / 2.0).sqrt();
            [cplx(x / (2.0 * w2), y / (2.0 * w2)), cplx(w2, 0.0)]
        }
    }

    pub fn from_spinor(w: [Complex64; 2]) -> Result<Self> {
        let n2 = w[0].norm_sqr() + w[1].norm_sqr();
        if !(n2 > 1e-28) || !n2.is_finite() {
            return Err(Error::Invalid("zero spinor".into()));
        }
        let c = w[0] * w[1].conj();
        BoundaryPoint::new([
            2.0 * c.re / n2,
            2.0 * c.im / n2,
            (w[0].norm_sqr() - w[1].norm_sqr()) / n2,
        ])
    }

    /// Angular distance on the sphere, accurate down to machine precision
    /// for nearby directions.
    pub fn angle_to(&self, other: &BoundaryPoint) -> f64 {
        let u = self.unit;
        let v = other.unit;
        let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        let cx = u[1] * v[2] - u[2] * v[1];
        let cy = u[2] * v[0] - u[0] * v[2];
        let cz = u[0] * v[1] - u[1] * v[0];
        (cx * cx + cy * cy + cz * cz).sqrt().atan2(dot)
    }
}

/// An element of `SL2(C)`, acting on hyperbolic space and its boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2c(Mat2);

impl Sl2c {
    /// Wraps a matrix, requiring `det = 1` within `1e-12`.
    pub fn new(m: Mat2) -> Result<Self> {
        if (m.det() - cplx(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::Invalid("matrix is not in SL2(C)".into()));
        }
        Ok(Sl2c(m))
    }

    /// Rescales an invertible matrix onto determinant 1.
    pub fn normalized(m: Mat2) -> Result<Self> {
        let d = m.det();
        if d.norm() < 1e-30 {
            return Err(Error::Invalid("singular matrix".into()));
        }
        Ok(Sl2c(m.scale(cplx(1.0, 0.0) / d.sqrt())))
    }

    pub fn identity() -> Self {
        Sl2c(Mat2::identity())
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Sl2c(self.0.inverse())
    }

    pub fn compose(&self, rhs: &Sl2c) -> Self {
        Sl2c(self.0 * rhs.0)
    }
}

/// Applies `g` to an interior point, returning the image in the same model.
///
/// The action is evaluated in half-space quaternion coordinates
/// `w = u + z j`: `g.w = (aw + b)(cw + d)^{-1}`.
pub fn apply_isometry(g: &Sl2c, p: &HPoint) -> HPoint {
    let hs = p.convert(Model::HalfSpace);
    let [x, y, z, _] = hs.coords;
    let u = cplx(x, y);
    let m = g.matrix();
    let cu_d = m.c * u + m.d;
    let den = cu_d.norm_sqr() + m.c.norm_sqr() * z * z;
    let num = (m.a * u + m.b) * cu_d.conj() + m.a * m.c.conj() * z * z;
    let u2 = num / den;
    let z2 = z / den;
    let out = HPoint { model: Model::HalfSpace, coords: [u2.re, u2.im, z2, 0.0] };
    out.convert(p.model())
}

/// Applies `g` to a boundary point by the Moebius action on the projective
/// line (spinor coordinates, so the chart point at infinity needs no
/// special case).
pub fn apply_boundary(g: &Sl2c, xi: &BoundaryPoint) -> BoundaryPoint {
    let w = xi.spinor();
    let m = g.matrix();
    let w2 = [m.a * w[0] + m.b * w[1], m.c * w[0] + m.d * w[1]];
    BoundaryPoint::from_spinor(w2).expect("SL2(C) preserves nonzero spinors")
}

/// Time-`t` geodesic flow toward `xi`; negative `t` flows backward along
/// the same geodesic.
pub fn geodesic_flow(z: &HPoint, xi: &BoundaryPoint, t: f64) -> HPoint {
    let p = z.lift();
    let l = xi.lift();
    let q = minkowski_dot(p, l);
    // unit tangent toward xi: w = l/q - p
    let (ch, sh) = (t.cosh(), t.sinh());
    let mut out = [0.0; 4];
    for i in 0..4 {
        let w = l[i] / q - p[i];
        out[i] = ch * p[i] + sh * w;
    }
    HPoint::from_lift(out, z.model())
}

/// Busemann function `b(x, xi)`, normalized so `b(*, xi) = 0`.
///
/// On the vertical half-space axis `b((x,y,z), infinity) = -log z`.
pub fn busemann(x: &HPoint, xi: &BoundaryPoint) -> f64 {
    minkowski_dot(x.lift(), xi.lift()).ln()
}

/// Gradient of `b(., xi)` at `x`, as a Euclidean 3-vector in ball-model
/// coordinates.  It has unit Riemannian norm and `-grad` is the velocity of
/// the unit-speed geodesic flow toward `xi` in the same coordinates.
pub fn busemann_gradient(x: &HPoint, xi: &BoundaryPoint) -> [f64; 3] {
    let p = x.lift();
    let l = xi.lift();
    let q = minkowski_dot(p, l);
    // velocity of the flow: w = l/q - p, pushed to the ball chart
    let w = [l[0] / q - p[0], l[1] / q - p[1], l[2] / q - p[2], l[3] / q - p[3]];
    let f = 1.0 / (1.0 + p[0]);
    // d/dt [ spatial/(1+t) ] = (w_spatial (1+t) - spatial w_t) / (1+t)^2
    let mut v = [0.0; 3];
    for i in 0..3 {
        v[i] = -(w[i + 1] * (1.0 + p[0]) - p[i + 1] * w[0]) * f * f;
    }
    v
}

/// Forward ideal endpoint of the oriented segment from `x` through `y`.
pub fn ideal_endpoint(x: &HPoint, y: &HPoint) -> Result<BoundaryPoint> {
    let p = x.lift();
    let q = y.lift();
    let c = minkowski_dot(p, q);
    let d = acosh_clamped(c);
    if d < 1e-12 {
        return Err(Error::DegenerateSegment);
    }
    let sh = d.sinh();
    // light-like direction p + w with w the unit tangent from x toward y
    let mut l = [0.0; 4];
    for i in 0..4 {
        let w = (q[i] - c * p[i]) / sh;
        l[i] = p[i] + w;
    }
    BoundaryPoint::new([l[1] / l[0], l[2] / l[0], l[3] / l[0]])
}

/// The `SU(2)` element rotating the boundary sphere by `angle` about the
/// unit axis `n` (right-hand rule).
pub fn su2_rotation(n: [f64; 3], angle: f64) -> Sl2c {
    let nn = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    let (s, c) = ((angle / 2.0).sin(), (angle / 2.0).cos());
    let n = [n[0] / nn, n[1] / nn, n[2] / nn];
    // cos(a/2) I + i sin(a/2) (n . sigma)
    Sl2c(Mat2::new(
        cplx(c, s * n[2]),
        cplx(-s * n[1], s * n[0]),
        cplx(s * n[1], s * n[0]),
        cplx(c, -s * n[2]),
    ))
}

/// Elliptic element rotating by `angle` about the geodesic with ideal
/// endpoints `p`, `q`, oriented from `p` to `q` (right-hand rule).  The
/// axis is fixed pointwise.
pub fn rotation_about_axis(p: &BoundaryPoint, q: &BoundaryPoint, angle: f64) -> Result<Sl2c> {
    let pi = p.spinor();
    let si = q.spinor();
    let det = pi[0] * si[1] - pi[1] * si[0];
    if det.norm() < 1e-12 {
        return Err(Error::DegenerateAxis);
    }
    // m sends p -> 0 and q -> infinity on the chart
    let s = det.sqrt();
    let m = Mat2::new(pi[1] / s, -pi[0] / s, si[1] / s, -si[0] / s);
    let half = cplx(0.0, angle / 2.0).exp();
    let rot = Mat2::diag(half, half.conj());
    Ok(Sl2c(m.inverse() * rot * m))
}

/// Distance from `x` to the complete geodesic through `p` and `q`.
pub fn dist_to_geodesic(x: &HPoint, p: &HPoint, q: &HPoint) -> Result<f64> {
    let pl = p.lift();
    let ql = q.lift();
    let c = minkowski_dot(pl, ql);
    let d = acosh_clamped(c);
    if d < 1e-12 {
        return Err(Error::DegenerateSegment);
    }
    let sh = d.sinh();
    let xl = x.lift();
    // orthonormal frame of the geodesic plane: p (timelike), w (spacelike)
    let w = [
        (ql[0] - c * pl[0]) / sh,
        (ql[1] - c * pl[1]) / sh,
        (ql[2] - c * pl[2]) / sh,
        (ql[3] - c * pl[3]) / sh,
    ];
    let a = minkowski_dot(xl, pl);
    let b = -minkowski_dot(xl, w);
    // component of x off the geodesic plane; sinh(dist) is its spacelike norm
    let mut perp2 = 0.0;
    for i in 0..4 {
        let e = xl[i] - a * pl[i] - b * w[i];
        perp2 += [-1.0, 1.0, 1.0, 1.0][i] * e * e;
    }
    Ok(perp2.max(0.0).sqrt().asinh())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_point(rng: &mut ChaCha8Rng) -> HPoint {
        let v: [f64; 3] = [
            rng.gen_range(-0.8..0.8),
            rng.gen_range(-0.8..0.8),
            rng.gen_range(-0.8..0.8),
        ];
        let n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        let v = if n2 >= 0.9 {
            [v[0] * 0.9 / n2.sqrt(), v[1] * 0.9 / n2.sqrt(), v[2] * 0.9 / n2.sqrt()]
        } else {
            v
        };
        HPoint::ball(v).unwrap()
    }

    fn rand_boundary(rng: &mut ChaCha8Rng) -> BoundaryPoint {
        loop {
            let v: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
            if let Ok(b) = BoundaryPoint::new(v) {
                return b;
            }
        }
    }

    fn rand_sl2c(rng: &mut ChaCha8Rng) -> Sl2c {
        loop {
            let m = Mat2::new(
                cplx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                cplx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                cplx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                cplx(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            );
            if m.det().norm() > 0.05 {
                return Sl2c::normalized(m).unwrap();
            }
        }
    }

    #[test]
    fn conversions_hit_the_basepoint() {
        let hs = HPoint::half_space(0.0, 0.0, 1.0).unwrap();
        let b = hs.convert(Model::Ball);
        assert!(b.coords()[..3].iter().all(|c| c.abs() < 1e-15));
        let h = b.convert(Model::Hyperboloid);
        assert!((h.coords()[0] - 1.0).abs() < 1e-15);
        assert!(h.coords()[1..].iter().all(|c| c.abs() < 1e-15));
    }

    #[test]
    fn conversions_round_trip_and_preserve_dist() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let models = [Model::HalfSpace, Model::Ball, Model::Hyperboloid];
        for _ in 0..200 {
            let p = rand_point(&mut rng);
            let q = rand_point(&mut rng);
            let d0 = dist(&p, &q);
            for &m in &models {
                for &m2 in &models {
                    let p2 = p.convert(m).convert(m2).convert(Model::Ball);
                    let (u, v) = (p2.coords(), p.coords());
                    let db = (0..3).map(|i| (u[i] - v[i]).powi(2)).sum::<f64>().sqrt();
                    assert!(db < 1e-12, "round trip moved the point by {db}");
                    let d1 = dist(&p.convert(m), &q.convert(m2));
                    assert!((d1 - d0).abs() < 1e-11);
                }
            }
        }
    }

    #[test]
    fn dist_on_vertical_axis() {
        let p = HPoint::half_space(0.0, 0.0, 1.0).unwrap();
        let q = HPoint::half_space(0.0, 0.0, core::f64::consts::E).unwrap();
        assert!((dist(&p, &q) - 1.0).abs() < 1e-14);
        assert_eq!(dist(&p, &p), 0.0);
    }

    #[test]
    fn dist_triangle_inequality() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..300 {
            let (p, q, r) = (rand_point(&mut rng), rand_point(&mut rng), rand_point(&mut rng));
            assert!(dist(&p, &r) <= dist(&p, &q) + dist(&q, &r) + 1e-10);
            assert!((dist(&p, &q) - dist(&q, &p)).abs() < 1e-13);
        }
    }

    #[test]
    fn isometries_preserve_dist_and_su2_fixes_star() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let g = rand_sl2c(&mut rng);
            let p = rand_point(&mut rng);
            let q = rand_point(&mut rng);
            let d = (dist(&apply_isometry(&g, &p), &apply_isometry(&g, &q)) - dist(&p, &q)).abs();
            assert!(d < 1e-11, "isometry defect {d}");
        }
        for i in 0..20 {
            let k = su2_rotation([1.0, 2.0, i as f64 - 9.5], 0.3 * i as f64);
            let moved = apply_isometry(&k, &HPoint::star());
            assert!(dist(&moved, &HPoint::star()) < 1e-12);
        }
    }

    #[test]
    fn diagonal_matrix_scales_half_space() {
        let t: f64 = 0.73;
        let g = Sl2c::new(Mat2::diag(cplx((t / 2.0).exp(), 0.0), cplx((-t / 2.0).exp(), 0.0)))
            .unwrap();
        let p = HPoint::half_space(0.4, -1.1, 2.0).unwrap();
        let gp = apply_isometry(&g, &p);
        let e = t.exp();
        let c = gp.coords();
        assert!((c[0] - 0.4 * e).abs() < 1e-12);
        assert!((c[1] + 1.1 * e).abs() < 1e-12);
        assert!((c[2] - 2.0 * e).abs() < 1e-12);
    }

    #[test]
    fn boundary_chart_is_involutive() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..200 {
            let b = rand_boundary(&mut rng);
            let b2 = BoundaryPoint::from_chart(b.chart());
            assert!(b.angle_to(&b2) < 1e-12);
        }
        assert!(matches!(BoundaryPoint::infinity().chart(), ExtComplex::Infinity));
    }

    #[test]
    fn geodesic_flow_vertical_and_additive() {
        let p = HPoint::half_space(0.3, -0.4, 0.9).unwrap();
        let inf = BoundaryPoint::infinity();
        let q = geodesic_flow(&p, &inf, 1.3).convert(Model::HalfSpace);
        let c = q.coords();
        assert!((c[0] - 0.3).abs() < 1e-12);
        assert!((c[1] + 0.4).abs() < 1e-12);
        assert!((c[2] - 0.9 * 1.3f64.exp()).abs() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let z = rand_point(&mut rng);
            let xi = rand_boundary(&mut rng);
            let (s, t) = (rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
            let a = geodesic_flow(&geodesic_flow(&z, &xi, t), &xi, s);
            let b = geodesic_flow(&z, &xi, s + t);
            assert!(dist(&a, &b) < 1e-10);
            assert!((dist(&z, &geodesic_flow(&z, &xi, t)) - t.abs()).abs() < 1e-10);
            assert!(dist(&geodesic_flow(&z, &xi, 0.0), &z) < 1e-12);
        }
    }

    #[test]
    fn geodesic_flow_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let z1 = rand_point(&mut rng);
            let z2 = rand_point(&mut rng);
            let xi = rand_boundary(&mut rng);
            let t = rng.gen_range(0.01..2.0);
            let d1 = dist(&geodesic_flow(&z1, &xi, t), &geodesic_flow(&z2, &xi, t));
            assert!(d1 <= dist(&z1, &z2) + 1e-12);
        }
    }

    #[test]
    fn busemann_closed_forms() {
        let inf = BoundaryPoint::infinity();
        for t in [-1.0f64, -0.3, 0.0, 0.5, 2.0] {
            let p = HPoint::half_space(0.0, 0.0, t.exp()).unwrap();
            assert!((busemann(&p, &inf) + t).abs() < 1e-13);
        }
        // b(*, xi) = 0 for every direction
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let xi = rand_boundary(&mut rng);
            assert!(busemann(&HPoint::star(), &xi).abs() < 1e-14);
        }
    }

    #[test]
    fn busemann_su2_invariance_and_cocycle() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..100 {
            let x = rand_point(&mut rng);
            let xi = rand_boundary(&mut rng);
            let k = su2_rotation(
                [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)],
                rng.gen_range(0.0..6.0),
            );
            let lhs = busemann(&apply_isometry(&k, &x), &apply_boundary(&k, &xi));
            assert!((lhs - busemann(&x, &xi)).abs() < 1e-12);
            // unit decrease rate along the ray
            let t = rng.gen_range(0.0..2.0);
            let along = busemann(&geodesic_flow(&x, &xi, t), &xi);
            assert!((along - (busemann(&x, &xi) - t)).abs() < 1e-9);
        }
    }

    #[test]
    fn busemann_gradient_is_flow_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..50 {
            let x = rand_point(&mut rng);
            let xi = rand_boundary(&mut rng);
            let g = busemann_gradient(&x, &xi);
            // unit Riemannian norm in the ball chart
            let v = x.ball_coords();
            let lam = 2.0 / (1.0 - v.iter().map(|c| c * c).sum::<f64>());
            let en = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
            assert!((lam * en - 1.0).abs() < 1e-11);
            // finite-difference of the flow
            let h = 1e-5;
            let fp = geodesic_flow(&x, &xi, h).ball_coords();
            let fm = geodesic_flow(&x, &xi, -h).ball_coords();
            for i in 0..3 {
                let fd = (fp[i] - fm[i]) / (2.0 * h);
                assert!((fd + g[i]).abs() < 1e-7, "generator mismatch {}", (fd + g[i]).abs());
            }
        }
    }

    #[test]
    fn ideal_endpoint_examples() {
        let x = HPoint::half_space(0.0, 0.0, 1.0).unwrap();
        let y = HPoint::half_space(0.0, 0.0, 2.0).unwrap();
        let e = ideal_endpoint(&x, &y).unwrap();
        assert!(e.angle_to(&BoundaryPoint::infinity()) < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..100 {
            let x = rand_point(&mut rng);
            let xi = rand_boundary(&mut rng);
            let y = geodesic_flow(&x, &xi, rng.gen_range(0.2..2.0));
            let e = ideal_endpoint(&x, &y).unwrap();
            assert!(e.angle_to(&xi) < 1e-10);
            // flowing from x toward the endpoint passes through y
            let d = dist(&x, &y);
            assert!(dist(&geodesic_flow(&x, &e, d), &y) < 1e-10);
        }
        assert!(matches!(ideal_endpoint(&x, &x), Err(Error::DegenerateSegment)));
    }

    #[test]
    fn su2_rotation_convention() {
        // +90 degrees about e1 carries the south pole to +e2
        let k = su2_rotation([1.0, 0.0, 0.0], core::f64::consts::FRAC_PI_2);
        let south = BoundaryPoint::new([0.0, 0.0, -1.0]).unwrap();
        let moved = apply_boundary(&k, &south);
        assert!(moved.angle_to(&BoundaryPoint::new([0.0, 1.0, 0.0]).unwrap()) < 1e-12);
    }

    #[test]
    fn rotation_about_axis_fixes_endpoints() {
        // standard axis: diagonal rotation
        let south = BoundaryPoint::new([0.0, 0.0, -1.0]).unwrap();
        let north = BoundaryPoint::infinity();
        let g = rotation_about_axis(&south, &north, 0.9).unwrap();
        let expect = Mat2::diag(cplx(0.0, 0.45).exp(), cplx(0.0, -0.45).exp());
        let d = g.matrix().dist(&expect).min((-*g.matrix()).dist(&expect));
        assert!(d < 1e-12);

        let id = rotation_about_axis(&south, &north, 0.0).unwrap();
        let di = id.matrix().dist(&Mat2::identity()).min((-*id.matrix()).dist(&Mat2::identity()));
        assert!(di < 1e-14);

        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let p = rand_boundary(&mut rng);
            let q = rand_boundary(&mut rng);
            if p.angle_to(&q) < 1e-3 {
                continue;
            }
            let ang = rng.gen_range(-3.0..3.0);
            let g = rotation_about_axis(&p, &q, ang).unwrap();
            assert!(apply_boundary(&g, &p).angle_to(&p) < 1e-10);
            assert!(apply_boundary(&g, &q).angle_to(&q) < 1e-10);
            // elliptic with the requested rotation angle: trace = 2 cos(angle/2)
            let tr = g.matrix().trace();
            assert!(tr.im.abs() < 1e-10);
            assert!((tr.re.abs() - 2.0 * (ang / 2.0).cos().abs()).abs() < 1e-10);
        }
        assert!(rotation_about_axis(&south, &south, 1.0).is_err());
    }

    #[test]
    fn dist_to_geodesic_zero_on_axis() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..50 {
            let p = rand_point(&mut rng);
            let q = rand_point(&mut rng);
            if dist(&p, &q) < 1e-3 {
                continue;
            }
            let m = geodesic_flow(&p, &ideal_endpoint(&p, &q).unwrap(), 0.37 * dist(&p, &q));
            assert!(dist_to_geodesic(&m, &p, &q).unwrap() < 1e-10);
            let off = HPoint::ball([0.4, 0.1, -0.2]).unwrap();
            let d = dist_to_geodesic(&off, &p, &q).unwrap();
            assert!(d >= 0.0);
        }
    }
}
