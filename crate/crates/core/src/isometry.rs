//! SL(3,R) elements: classification into hyperbolic, quasi-hyperbolic and
//! parabolic isometries, Goldman length data, and bulging deformations along a
//! geodesic in its adapted basis.

use nalgebra::{Complex, Matrix3, Vector3};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rp2::Flag;

/// Relative tolerance on `det = 1`, measured against the Hadamard bound
/// (product of column norms) so that large-norm conjugates are not rejected
/// for rounding in the determinant itself.
pub const DET_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SL3Matrix(Matrix3<f64>);

fn hadamard_bound(m: &Matrix3<f64>) -> f64 {
    m.column_iter().map(|c| c.norm()).product()
}

impl SL3Matrix {
    pub fn new(m: Matrix3<f64>) -> Result<Self> {
        let det = m.determinant();
        if !det.is_finite() || (det - 1.0).abs() > DET_TOL * hadamard_bound(&m).max(1.0) {
            return Err(Error::NotUnimodular { det });
        }
        Ok(SL3Matrix(m))
    }

    pub fn from_row_slice(entries: &[f64]) -> Result<Self> {
        if entries.len() != 9 {
            return Err(Error::NotUnimodular { det: f64::NAN });
        }
        Self::new(Matrix3::from_row_slice(entries))
    }

    /// Rescales an invertible matrix by `det^{-1/3}`; same projective class.
    pub fn normalized(m: Matrix3<f64>) -> Result<Self> {
        let det = m.determinant();
        if det == 0.0 || !det.is_finite() {
            return Err(Error::NotUnimodular { det });
        }
        Self::new(m / det.cbrt())
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    pub fn conjugate_by(&self, g: &Matrix3<f64>) -> Option<Matrix3<f64>> {
        g.try_inverse().map(|gi| g * self.0 * gi)
    }
}

/// Which eigenvalue carries the 2×2 Jordan block of a quasi-hyperbolic element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JordanPlacement {
    /// Block at the larger eigenvalue (`μ > ν`), the boundary-holonomy case.
    Larger,
    Smaller,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IsometryClass {
    /// Eigenvalues in decreasing order, product 1.
    Hyperbolic { eigenvalues: [f64; 3] },
    /// `mu` is the repeated eigenvalue carrying the Jordan block, `mu²·nu = 1`.
    QuasiHyperbolic {
        mu: f64,
        nu: f64,
        jordan_block: JordanPlacement,
    },
    Parabolic,
    Other,
}

impl IsometryClass {
    /// Validated hyperbolic class: `λ1 > λ2 > λ3 > 0`, `λ1λ2λ3 = 1`.
    pub fn hyperbolic(l1: f64, l2: f64, l3: f64) -> Result<Self> {
        if !(l1 > l2 && l2 > l3 && l3 > 0.0) {
            return Err(Error::InvalidBoundary(format!(
                "hyperbolic eigenvalues must satisfy l1 > l2 > l3 > 0, got ({l1}, {l2}, {l3})"
            )));
        }
        let prod = l1 * l2 * l3;
        if (prod - 1.0).abs() > 1e-9 {
            return Err(Error::NotUnimodular { det: prod });
        }
        Ok(IsometryClass::Hyperbolic { eigenvalues: [l1, l2, l3] })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            IsometryClass::Hyperbolic { .. } => "hyperbolic",
            IsometryClass::QuasiHyperbolic { .. } => "quasi-hyperbolic",
            IsometryClass::Parabolic => "parabolic",
            IsometryClass::Other => "other",
        }
    }
}

/// Thresholds for [`classify`].
///
/// `cluster` is the relative radius within which computed eigenvalues count
/// as one repeated eigenvalue. A defective eigenvalue of multiplicity k moves
/// by O(ε^{1/k}) under a perturbation of size ε, so this radius is much
/// coarser than `rank`, which is the singular-value threshold (relative to
/// ‖M‖) used to decide the rank of `M − λI`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyTol {
    pub cluster: f64,
    pub rank: f64,
}

impl Default for ClassifyTol {
    fn default() -> Self {
        ClassifyTol { cluster: 1e-2, rank: 1e-8 }
    }
}

fn close(a: Complex<f64>, b: Complex<f64>, tol: f64) -> bool {
    (a - b).norm() <= tol * 1f64.max(a.norm()).max(b.norm())
}

fn is_real(z: Complex<f64>, tol: f64) -> bool {
    z.im.abs() <= tol * 1f64.max(z.norm())
}

fn rank_of_shift(m: &Matrix3<f64>, lambda: f64, tol: f64) -> usize {
    let shifted = m - Matrix3::identity() * lambda;
    let threshold = tol * m.norm();
    shifted
        .singular_values()
        .iter()
        .filter(|&&s| s > threshold)
        .count()
}

/// Eigenvalues read off the real Schur form. A 2×2 diagonal block may be
/// left with a tiny positive discriminant near a defective pair, so both signs
/// are handled.
fn eigenvalues(m: &Matrix3<f64>) -> [Complex<f64>; 3] {
    let (_, t) = m.schur().unpack();
    let real = |x: f64| Complex::new(x, 0.0);
    let block = |k: usize| {
        let half = (t[(k, k)] - t[(k + 1, k + 1)]) / 2.0;
        let mean = (t[(k, k)] + t[(k + 1, k + 1)]) / 2.0;
        let disc = t[(k + 1, k)] * t[(k, k + 1)] + half * half;
        let root = if disc >= 0.0 {
            real(disc.sqrt())
        } else {
            Complex::new(0.0, (-disc).sqrt())
        };
        (real(mean) + root, real(mean) - root)
    };
    if t[(1, 0)] != 0.0 {
        let (a, b) = block(0);
        [a, b, real(t[(2, 2)])]
    } else if t[(2, 1)] != 0.0 {
        let (a, b) = block(1);
        [real(t[(0, 0)]), a, b]
    } else {
        [real(t[(0, 0)]), real(t[(1, 1)]), real(t[(2, 2)])]
    }
}

pub fn classify(m: &SL3Matrix, tol: &ClassifyTol) -> IsometryClass {
    let m = m.matrix();
    let z = eigenvalues(m);
    let trace = m.trace();

    let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
    let close_pairs: Vec<(usize, usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(i, j, _)| close(z[i], z[j], tol.cluster))
        .collect();

    if close_pairs.len() == 3 {
        // A real triple eigenvalue of a unimodular matrix is 1.
        let mean = trace / 3.0;
        if (mean - 1.0).abs() <= tol.cluster && rank_of_shift(m, 1.0, tol.rank) == 2 {
            return IsometryClass::Parabolic;
        }
        return IsometryClass::Other;
    }

    if let Some(&(_, _, k)) = close_pairs
        .iter()
        .min_by(|a, b| (z[a.0] - z[a.1]).norm().total_cmp(&(z[b.0] - z[b.1]).norm()))
    {
        if !is_real(z[k], tol.cluster) {
            return IsometryClass::Other;
        }
        let nu = z[k].re;
        // The simple eigenvalue is well conditioned, the pair is not: recover
        // the repeated one from the trace.
        let mu = (trace - nu) / 2.0;
        if nu <= 0.0 || mu <= 0.0 {
            return IsometryClass::Other;
        }
        if rank_of_shift(m, mu, tol.rank) != 2 {
            return IsometryClass::Other;
        }
        let scale = (mu * mu * nu).cbrt();
        let (mu, nu) = (mu / scale, nu / scale);
        let jordan_block = if mu > nu {
            JordanPlacement::Larger
        } else {
            JordanPlacement::Smaller
        };
        return IsometryClass::QuasiHyperbolic { mu, nu, jordan_block };
    }

    if z.iter().all(|&zi| is_real(zi, tol.cluster) && zi.re > 0.0) {
        let mut l = [z[0].re, z[1].re, z[2].re];
        l.sort_by(|a, b| b.total_cmp(a));
        let scale = (l[0] * l[1] * l[2]).cbrt();
        return IsometryClass::Hyperbolic {
            eigenvalues: [l[0] / scale, l[1] / scale, l[2] / scale],
        };
    }
    IsometryClass::Other
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GoldmanLengths {
    pub l1: f64,
    pub l2: f64,
    pub hilbert_length: f64,
}

/// `ℓ₁ = log λ₁ − log λ₂`, `ℓ₂ = log λ₂ − log λ₃` and the Hilbert length
/// `ℓ₁ + ℓ₂` of the closed geodesic of a hyperbolic element.
pub fn goldman_lengths(c: &IsometryClass) -> Result<GoldmanLengths> {
    match *c {
        IsometryClass::Hyperbolic { eigenvalues: [a, b, d] } => {
            let (la, lb, ld) = (a.ln(), b.ln(), d.ln());
            Ok(GoldmanLengths {
                l1: la - lb,
                l2: lb - ld,
                hilbert_length: la - ld,
            })
        }
        other => Err(Error::WrongClass {
            expected: "hyperbolic",
            found: other.kind_name(),
        }),
    }
}

/// `diag(e^{−v}, e^{2v}, e^{−v})` in the basis `l(−∞), l^⊥, l(∞)`.
pub fn bulging_matrix(v: f64) -> SL3Matrix {
    let a = (-v).exp();
    SL3Matrix(Matrix3::from_diagonal(&Vector3::new(a, (2.0 * v).exp(), a)))
}

/// Image `(1, e^{3v}y, x)` of the right-side vertex `(1, y, x)`.
pub fn bulge_vertex(y: f64, x: f64, v: f64) -> [f64; 3] {
    [1.0, (3.0 * v).exp() * y, x]
}

/// Shear pair after bulging by `v`: `(σ₁ − 3v, σ₂ + 3v)`.
pub fn shear_shift(s1: f64, s2: f64, v: f64) -> (f64, f64) {
    (s1 - 3.0 * v, s2 + 3.0 * v)
}

/// Four flags around the leaf from `l(−∞) = (1,0,0)` to `l(∞) = (0,0,1)`:
/// the two endpoints with their tangent lines through `l^⊥ = (0,1,0)`, the
/// left vertex `(1, −y, x)` and the right vertex `(1, y, x)`. All four points
/// lie on the conic `Y² = (y²/x)·XZ` and the last two carry its tangents.
pub fn bulging_configuration(y: f64, x: f64) -> Result<[Flag; 4]> {
    if !(y > 0.0) {
        return Err(Error::NonPositiveParameter { name: "y", value: y });
    }
    if !(x > 0.0) {
        return Err(Error::NonPositiveParameter { name: "x", value: x });
    }
    let k = y * y / x;
    let tangent = |p: [f64; 3]| [-k * p[2], 2.0 * p[1], -k * p[0]];
    let left = [1.0, -y, x];
    let right = [1.0, y, x];
    Ok([
        Flag::from_point_direction([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])?,
        Flag::from_point_direction([0.0, 0.0, 1.0], [0.0, 1.0, 0.0])?,
        Flag::from_point_normal(left, tangent(left))?,
        Flag::from_point_normal(right, tangent(right))?,
    ])
}

/// Bulges a leaf configuration `[E, F, G, L]` given in the adapted basis:
/// the flags at the leaf endpoints and the right-side flag `L` move by the
/// bulging matrix, the left-side flag `G` stays. `E` and `F` are fixed by the
/// matrix when they sit at `(1,0,0)` and `(0,0,1)` with tangents through `l^⊥`.
pub fn bulge_flags(flags: &[Flag; 4], v: f64) -> Result<[Flag; 4]> {
    let b = bulging_matrix(v);
    let b = b.matrix();
    Ok([flags[0].transform(b)?, flags[1].transform(b)?, flags[2], flags[3].transform(b)?])
}
