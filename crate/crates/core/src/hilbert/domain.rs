use nalgebra::{Matrix2, Vector2};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vec2 = Vector2<f64>;

/// Slack used when testing closed containment of boundary points.
const BOUNDARY_EPS: f64 = 1e-12;

/// Convex polygon stored as its vertices (counterclockwise) and the
/// half-planes `n·z ≤ c` bounding it, with `n` the outward edge normals.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vec2>,
    normals: Vec<Vec2>,
    offsets: Vec<f64>,
}

impl Polygon {
    /// Accepts either orientation; clockwise input is reversed.
    pub fn new(vertices: &[[f64; 2]]) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidDomain("a polygon needs at least 3 vertices".into()));
        }
        let mut vs: Vec<Vec2> = vertices.iter().map(|v| Vec2::new(v[0], v[1])).collect();
        if vs.iter().any(|v| !v.x.is_finite() || !v.y.is_finite()) {
            return Err(Error::InvalidDomain("non-finite polygon vertex".into()));
        }
        let signed_area: f64 = (0..vs.len())
            .map(|i| cross(&vs[i], &vs[(i + 1) % vs.len()]))
            .sum();
        if signed_area < 0.0 {
            vs.reverse();
        }
        let n = vs.len();
        for i in 0..n {
            let e0 = vs[(i + 1) % n] - vs[i];
            let e1 = vs[(i + 2) % n] - vs[(i + 1) % n];
            if cross(&e0, &e1) <= 0.0 {
                return Err(Error::InvalidDomain(format!(
                    "polygon is not strictly convex at vertex {}",
                    (i + 1) % n
                )));
            }
        }
        let mut normals = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        for i in 0..n {
            let d = vs[(i + 1) % n] - vs[i];
            let normal = Vec2::new(d.y, -d.x);
            offsets.push(normal.dot(&vs[i]));
            normals.push(normal);
        }
        Ok(Polygon { vertices: vs, normals, offsets })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    fn slacks(&self, x: &Vec2) -> impl Iterator<Item = f64> + '_ {
        let x = *x;
        self.normals
            .iter()
            .zip(&self.offsets)
            .map(move |(n, c)| (c - n.dot(&x)) / n.norm())
    }

    fn bounding_box(&self) -> (Vec2, Vec2) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            lo = lo.inf(v);
            hi = hi.sup(v);
        }
        (lo, hi)
    }
}

fn cross(a: &Vec2, b: &Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Interior of an ellipse `ax² + bxy + cy² + dx + ey + f < 0`, with the
/// coefficients normalised so the quadratic part is positive definite.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicOval {
    coeffs: [f64; 6],
    quad: Matrix2<f64>,
    lin: Vec2,
    center: Vec2,
}

impl ConicOval {
    pub fn new(coeffs: [f64; 6]) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidDomain("non-finite conic coefficient".into()));
        }
        let sign = if coeffs[0] < 0.0 { -1.0 } else { 1.0 };
        let k = coeffs.map(|c| c * sign);
        let quad = Matrix2::new(k[0], k[1] / 2.0, k[1] / 2.0, k[2]);
        if !(k[0] > 0.0 && quad.determinant() > 0.0) {
            return Err(Error::InvalidDomain(
                "quadratic part is not definite, the conic is not an ellipse".into(),
            ));
        }
        let lin = Vec2::new(k[3], k[4]);
        let center = -(quad.try_inverse().expect("definite") * lin) / 2.0;
        let oval = ConicOval { coeffs: k, quad, lin, center };
        if !(oval.eval(&center) < 0.0) {
            return Err(Error::InvalidDomain("conic has an empty real locus".into()));
        }
        Ok(oval)
    }

    /// Unit disk `x² + y² − 1 < 0`.
    pub fn unit_disk() -> Self {
        Self::disk([0.0, 0.0], 1.0).expect("valid disk")
    }

    pub fn disk(center: [f64; 2], radius: f64) -> Result<Self> {
        let [cx, cy] = center;
        Self::new([1.0, 0.0, 1.0, -2.0 * cx, -2.0 * cy, cx * cx + cy * cy - radius * radius])
    }

    pub fn coeffs(&self) -> [f64; 6] {
        self.coeffs
    }

    pub fn eval(&self, z: &Vec2) -> f64 {
        z.dot(&(self.quad * z)) + self.lin.dot(z) + self.coeffs[5]
    }

    /// Scale of the form near the oval, for relative boundary tests.
    fn scale(&self) -> f64 {
        -self.eval(&self.center)
    }

    /// Semi-axis extent along each coordinate: `sqrt(k · (A⁻¹)_ii)`.
    fn bounding_box(&self) -> (Vec2, Vec2) {
        let inv = self.quad.try_inverse().expect("definite");
        let k = self.scale();
        let half = Vec2::new((k * inv[(0, 0)]).sqrt(), (k * inv[(1, 1)]).sqrt());
        (self.center - half, self.center + half)
    }

    /// Boundary point in direction `theta` from the center.
    fn boundary_point(&self, theta: f64) -> Vec2 {
        let u = Vec2::new(theta.cos(), theta.sin());
        let r = (self.scale() / u.dot(&(self.quad * u))).sqrt();
        self.center + u * r
    }

    /// `max n·z` over the closed oval.
    fn support(&self, n: &Vec2) -> f64 {
        let inv = self.quad.try_inverse().expect("definite");
        n.dot(&self.center) + (self.scale() * n.dot(&(inv * n))).sqrt()
    }
}

/// Properly convex domain in an affine chart.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DomainRepr", into = "DomainRepr")]
pub enum ConvexDomain {
    Polygon(Polygon),
    Conic(ConicOval),
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum DomainRepr {
    Polygon(Vec<[f64; 2]>),
    Conic([f64; 6]),
}

impl TryFrom<DomainRepr> for ConvexDomain {
    type Error = Error;

    fn try_from(r: DomainRepr) -> Result<Self> {
        match r {
            DomainRepr::Polygon(v) => Ok(ConvexDomain::Polygon(Polygon::new(&v)?)),
            DomainRepr::Conic(c) => Ok(ConvexDomain::Conic(ConicOval::new(c)?)),
        }
    }
}

impl From<ConvexDomain> for DomainRepr {
    fn from(d: ConvexDomain) -> Self {
        match d {
            ConvexDomain::Polygon(p) => {
                DomainRepr::Polygon(p.vertices.iter().map(|v| [v.x, v.y]).collect())
            }
            ConvexDomain::Conic(c) => DomainRepr::Conic(c.coeffs),
        }
    }
}

/// Boundary intersections of the line through `x` and `y`, ordered so that
/// `p, x, y, q` appear in this order along it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub p: Vec2,
    pub q: Vec2,
}

impl ConvexDomain {
    pub fn polygon(vertices: &[[f64; 2]]) -> Result<Self> {
        Polygon::new(vertices).map(ConvexDomain::Polygon)
    }

    pub fn conic(coeffs: [f64; 6]) -> Result<Self> {
        ConicOval::new(coeffs).map(ConvexDomain::Conic)
    }

    pub fn unit_disk() -> Self {
        ConvexDomain::Conic(ConicOval::unit_disk())
    }

    pub fn is_interior(&self, x: &Vec2) -> bool {
        match self {
            ConvexDomain::Polygon(p) => p.slacks(x).all(|s| s > 0.0),
            ConvexDomain::Conic(c) => c.eval(x) < 0.0,
        }
    }

    /// Membership in the closure, with a small relative slack.
    pub fn contains_closed(&self, x: &Vec2) -> bool {
        match self {
            ConvexDomain::Polygon(p) => {
                let (lo, hi) = p.bounding_box();
                let eps = BOUNDARY_EPS * (hi - lo).norm().max(1.0);
                p.slacks(x).all(|s| s >= -eps)
            }
            ConvexDomain::Conic(c) => c.eval(x) <= BOUNDARY_EPS * c.scale(),
        }
    }

    pub fn bounding_box(&self) -> (Vec2, Vec2) {
        match self {
            ConvexDomain::Polygon(p) => p.bounding_box(),
            ConvexDomain::Conic(c) => c.bounding_box(),
        }
    }

    /// Whether `self` lies in the closure of `outer`. Exact for polygon
    /// regions and for ovals inside polygons; an oval inside an oval is
    /// checked on 1024 boundary samples.
    pub fn is_contained_in(&self, outer: &ConvexDomain) -> bool {
        match (self, outer) {
            (ConvexDomain::Polygon(p), _) => p.vertices.iter().all(|v| outer.contains_closed(v)),
            (ConvexDomain::Conic(c), ConvexDomain::Polygon(q)) => {
                let (lo, hi) = q.bounding_box();
                let eps = BOUNDARY_EPS * (hi - lo).norm().max(1.0);
                q.normals
                    .iter()
                    .zip(&q.offsets)
                    .all(|(n, off)| c.support(n) <= off + eps * n.norm())
            }
            (ConvexDomain::Conic(c), ConvexDomain::Conic(_)) => (0..1024)
                .map(|i| c.boundary_point(std::f64::consts::TAU * i as f64 / 1024.0))
                .all(|z| outer.contains_closed(&z)),
        }
    }

    /// Parameters `t₋ < 0 < t₊` with `x + t±·d` on the boundary.
    pub(crate) fn ray_params(&self, x: &Vec2, d: &Vec2) -> Result<(f64, f64)> {
        if !self.is_interior(x) {
            return Err(Error::PointOutsideDomain(x.x, x.y));
        }
        match self {
            ConvexDomain::Polygon(p) => {
                let mut t_minus = f64::NEG_INFINITY;
                let mut t_plus = f64::INFINITY;
                for (n, c) in p.normals.iter().zip(&p.offsets) {
                    let nd = n.dot(d);
                    let slack = c - n.dot(x);
                    if nd > 0.0 {
                        t_plus = t_plus.min(slack / nd);
                    } else if nd < 0.0 {
                        t_minus = t_minus.max(slack / nd);
                    }
                }
                Ok((t_minus, t_plus))
            }
            ConvexDomain::Conic(c) => {
                let qa = d.dot(&(c.quad * d));
                let qb = 2.0 * x.dot(&(c.quad * d)) + c.lin.dot(d);
                let qc = c.eval(x);
                let root = (qb * qb - 4.0 * qa * qc).sqrt();
                // roots of opposite sign since qa > 0 > qc; avoid cancellation
                if qb >= 0.0 {
                    let t_minus = (-qb - root) / (2.0 * qa);
                    Ok((t_minus, qc / (qa * t_minus)))
                } else {
                    let t_plus = (-qb + root) / (2.0 * qa);
                    Ok((qc / (qa * t_plus), t_plus))
                }
            }
        }
    }

    /// Image under `z ↦ m·z + b` (`m` invertible).
    pub fn affine_image(&self, m: &Matrix2<f64>, b: &Vec2) -> Result<Self> {
        let inv = m
            .try_inverse()
            .ok_or_else(|| Error::InvalidDomain("singular affine map".into()))?;
        match self {
            ConvexDomain::Polygon(p) => {
                let vs: Vec<[f64; 2]> = p
                    .vertices
                    .iter()
                    .map(|v| {
                        let w = m * v + b;
                        [w.x, w.y]
                    })
                    .collect();
                ConvexDomain::polygon(&vs)
            }
            ConvexDomain::Conic(c) => {
                // Q'(z) = Q(N z − N b) with N = m⁻¹
                let nb = inv * b;
                let a2 = inv.transpose() * c.quad * inv;
                let l2 = inv.transpose() * c.lin - 2.0 * inv.transpose() * c.quad * nb;
                let f2 = nb.dot(&(c.quad * nb)) - c.lin.dot(&nb) + c.coeffs[5];
                ConvexDomain::conic([a2[(0, 0)], 2.0 * a2[(0, 1)], a2[(1, 1)], l2.x, l2.y, f2])
            }
        }
    }
}

pub fn chord(dom: &ConvexDomain, x: &Vec2, y: &Vec2) -> Result<Chord> {
    if !dom.is_interior(y) {
        return Err(Error::PointOutsideDomain(y.x, y.y));
    }
    let d = y - x;
    if d.x == 0.0 && d.y == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    let (t_minus, t_plus) = dom.ray_params(x, &d)?;
    Ok(Chord {
        p: x + d * t_minus,
        q: x + d * t_plus,
    })
}

/// `½ log(|p−y||q−x| / (|p−x||q−y|))` for the chord `p, x, y, q`.
pub fn hilbert_distance(dom: &ConvexDomain, x: &Vec2, y: &Vec2) -> Result<f64> {
    if !dom.is_interior(y) {
        return Err(Error::PointOutsideDomain(y.x, y.y));
    }
    let d = y - x;
    if d.x == 0.0 && d.y == 0.0 {
        return if dom.is_interior(x) {
            Ok(0.0)
        } else {
            Err(Error::PointOutsideDomain(x.x, x.y))
        };
    }
    let (t_minus, t_plus) = dom.ray_params(x, &d)?;
    // With y = x + d: |p−y|/|p−x| = 1 + 1/(−t₋) and |q−x|/|q−y| = 1 + 1/(t₊−1).
    Ok(0.5 * ((1.0 / -t_minus).ln_1p() + (1.0 / (t_plus - 1.0)).ln_1p()))
}

/// Infinitesimal Hilbert norm `½(1/t₊ + 1/t₋)`, where `t±` are the distances
/// from `x` to the boundary along `±dir` in units of `dir`.
pub fn finsler_norm(dom: &ConvexDomain, x: &Vec2, dir: &Vec2) -> Result<f64> {
    if dir.x == 0.0 && dir.y == 0.0 {
        return Err(Error::DegenerateVector("zero tangent direction".into()));
    }
    let (t_minus, t_plus) = dom.ray_params(x, dir)?;
    Ok(0.5 * (1.0 / t_plus + 1.0 / -t_minus))
}
