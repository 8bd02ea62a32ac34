//! Seeded generators for matrices, words and configurations.
//!
//! Everything is driven by an explicit ChaCha stream so verification
//! suites and fixtures are reproducible bit-for-bit from a seed.

#[cfg(all(not(feature = "std"), feature = "libm"))]
use num_traits::Float;

use crate::borel::{word_product, BElem, SU2Elem};
use crate::gaussmap::Configuration;
use crate::hyp3::{BoundaryPoint, Sl2c};
use crate::mat2::{cplx, Mat2};
use crate::moduli::{on_wall, EPolygon, HPolygon, Weights};
use alloc::vec::Vec;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent stream for case `index` of a batch run, so
/// parallel evaluation order cannot change the data.
pub fn rng_for_case(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Uniform point on the unit sphere (Gaussian deviates, normalized).
pub fn unit_vector(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v = [gauss(rng), gauss(rng), gauss(rng)];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-3 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

fn gauss(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; two uniforms per deviate keeps the stream layout simple
    let u1: f64 = rng.gen_range(1e-12..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * core::f64::consts::PI * u2).cos()
}

pub fn boundary_point(rng: &mut ChaCha8Rng) -> BoundaryPoint {
    BoundaryPoint::new(unit_vector(rng)).expect("unit vector is a valid direction")
}

pub fn su2(rng: &mut ChaCha8Rng) -> SU2Elem {
    loop {
        let q = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        if let Ok(k) = SU2Elem::from_quaternion(q) {
            return k;
        }
    }
}

/// Random element of `SL2(C)` with entries of size about `spread`.
pub fn sl2c(rng: &mut ChaCha8Rng, spread: f64) -> Sl2c {
    loop {
        let m = Mat2::new(
            cplx(rng.gen_range(-spread..spread), rng.gen_range(-spread..spread)),
            cplx(rng.gen_range(-spread..spread), rng.gen_range(-spread..spread)),
            cplx(rng.gen_range(-spread..spread), rng.gen_range(-spread..spread)),
            cplx(rng.gen_range(-spread..spread), rng.gen_range(-spread..spread)),
        );
        if m.det().norm() > 0.05 * spread * spread {
            return Sl2c::normalized(m).expect("determinant checked above");
        }
    }
}

/// Random letter with `log a` uniform in `[-spread, spread]` and `z`
/// uniform in the square of half-side `spread`.
pub fn belem(rng: &mut ChaCha8Rng, spread: f64) -> BElem {
    BElem::new(
        rng.gen_range(-spread..spread).exp(),
        cplx(rng.gen_range(-spread..spread), rng.gen_range(-spread..spread)),
    )
    .expect("positive diagonal by construction")
}

pub fn word(rng: &mut ChaCha8Rng, n: usize, spread: f64) -> Vec<BElem> {
    (0..n).map(|_| belem(rng, spread)).collect()
}

/// A closed word: `n - 1` random letters and the inverse of their product.
pub fn closed_word(rng: &mut ChaCha8Rng, n: usize, spread: f64) -> Vec<BElem> {
    assert!(n >= 2);
    let mut w = word(rng, n - 1, spread);
    w.push(word_product(&w).inverse());
    w
}

/// A closed polygon that is reasonably far from degenerate: resamples
/// until no two Gauss directions nearly coincide and the closing side is
/// neither tiny nor huge.
pub fn closed_polygon(rng: &mut ChaCha8Rng, n: usize, spread: f64) -> HPolygon {
    loop {
        let w = closed_word(rng, n, spread);
        let p = HPolygon::new(w).expect("nonempty word");
        let lens = p.side_lengths();
        let min = lens.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = lens.iter().cloned().fold(0.0, f64::max);
        if min > 0.15 && max < 6.0 {
            if let Ok(c) = crate::gaussmap::gauss_h(&p) {
                let pts = c.points();
                let mut sep = f64::INFINITY;
                for i in 0..pts.len() {
                    for j in (i + 1)..pts.len() {
                        sep = sep.min(pts[i].angle_to(&pts[j]));
                    }
                }
                if sep > 0.05 {
                    return p;
                }
            }
        }
    }
}

/// A stable weighted configuration with pairwise angular separation at
/// least `min_sep` and stability margin: largest weight below 45% of the
/// total.
pub fn stable_config(rng: &mut ChaCha8Rng, n: usize, min_sep: f64) -> Configuration {
    assert!(n >= 3);
    'outer: loop {
        let mut pts: Vec<BoundaryPoint> = Vec::with_capacity(n);
        for _ in 0..n {
            let p = boundary_point(rng);
            if pts.iter().any(|q| q.angle_to(&p) < min_sep) {
                continue 'outer;
            }
            pts.push(p);
        }
        let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..1.5)).collect();
        let total: f64 = weights.iter().sum();
        let max = weights.iter().cloned().fold(0.0, f64::max);
        if max < 0.45 * total {
            return Configuration::new(pts, weights).expect("positive weights");
        }
    }
}

/// A closed Euclidean polygon with weights off the walls: `n - 1` random
/// edges plus the closing edge, resampled until the side lengths are
/// wall-free and comparable.
pub fn closed_epolygon(rng: &mut ChaCha8Rng, n: usize) -> EPolygon {
    assert!(n >= 3);
    loop {
        let mut edges: Vec<[f64; 3]> = (0..n - 1)
            .map(|_| {
                let u = unit_vector(rng);
                let l = rng.gen_range(0.5..1.5);
                [u[0] * l, u[1] * l, u[2] * l]
            })
            .collect();
        let close = [
            -edges.iter().map(|e| e[0]).sum::<f64>(),
            -edges.iter().map(|e| e[1]).sum::<f64>(),
            -edges.iter().map(|e| e[2]).sum::<f64>(),
        ];
        let cl = (close[0] * close[0] + close[1] * close[1] + close[2] * close[2]).sqrt();
        if !(0.3..3.0).contains(&cl) {
            continue;
        }
        edges.push(close);
        let p = EPolygon::new(edges).expect("nonzero edges");
        let r = Weights::new(p.side_lengths()).expect("positive lengths");
        if on_wall(&r, 1e-9).ok().flatten().is_none() {
            return p;
        }
    }
}
