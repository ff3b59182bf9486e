#![allow(dead_code)]

use projkit::nalgebra::{Matrix3, Vector3};
use projkit::rp2::is_generic_triple;
use projkit::{Flag, ProjLine, ProjPoint};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

pub fn unit3(r: &mut impl Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 0.1 && n <= 1.0 {
            return v.map(|x| x / n);
        }
    }
}

/// Point and a second spanning vector of its line, both uniform on the sphere.
pub fn random_flag(r: &mut impl Rng) -> Flag {
    loop {
        let p = unit3(r);
        let d = unit3(r);
        if let Ok(line) = ProjLine::new(p, d) {
            if let Ok(f) = Flag::new(ProjPoint::new(p).unwrap(), line) {
                return f;
            }
        }
    }
}

/// Flags whose unit-normalized pairings all exceed `margin`.
pub fn random_generic(r: &mut impl Rng, n: usize, margin: f64) -> Vec<Flag> {
    loop {
        let flags: Vec<Flag> = (0..n).map(|_| random_flag(r)).collect();
        let ok = (0..n).all(|i| {
            (i + 1..n).all(|j| {
                (j + 1..n).all(|k| is_generic_triple(&flags[i], &flags[j], &flags[k], margin))
            })
        });
        if ok {
            return flags;
        }
    }
}

pub fn random_scale(r: &mut impl Rng) -> f64 {
    let mag = 10f64.powf(r.gen_range(-3.0..3.0));
    if r.gen_bool(0.5) {
        mag
    } else {
        -mag
    }
}

fn random_orthogonal(r: &mut impl Rng) -> Matrix3<f64> {
    let m = Matrix3::from_fn(|_, _| r.gen_range(-1.0..1.0));
    m.qr().q()
}

/// `U Σ Vᵀ` with log-uniform singular values in `[1, cond]`, ends pinned so
/// the condition number is exactly `cond`.
pub fn random_conjugator(r: &mut impl Rng, cond: f64) -> Matrix3<f64> {
    let mid = cond.powf(r.gen_range(0.0..1.0));
    let sigma = Matrix3::from_diagonal(&Vector3::new(cond, mid, 1.0));
    random_orthogonal(r) * sigma * random_orthogonal(r).transpose()
}

pub fn condition_number(g: &Matrix3<f64>) -> f64 {
    let s = g.singular_values();
    s.max() / s.min()
}
