//! Busemann area of regions inside a Hilbert geometry, by a midpoint rule on a
//! fixed lattice of square cells.
//!
//! Cell centers sit at `((i+½)h, (j+½)h)` for integer `i, j`, so the set of
//! cells a region picks up depends only on the region and `h`. Rows may be
//! evaluated in parallel; row sums are always reduced sequentially in row
//! order, which makes the result bit-identical with or without `parallel`.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use super::domain::{hilbert_distance, ConvexDomain, Vec2};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaOptions {
    pub cellsize: f64,
    /// Directions sampled around the local unit ball (even, at least 8).
    pub directions: usize,
    pub parallel: bool,
}

impl AreaOptions {
    pub fn new(cellsize: f64) -> Self {
        AreaOptions { cellsize, directions: 256, parallel: false }
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.cellsize > 0.0 && self.cellsize.is_finite()) {
            return Err(Error::NonPositiveParameter { name: "cellsize", value: self.cellsize });
        }
        if self.directions < 8 || self.directions % 2 != 0 {
            return Err(Error::NonPositiveParameter {
                name: "directions",
                value: self.directions as f64,
            });
        }
        Ok(())
    }
}

/// A planar set the integrator can enumerate cells of.
pub trait Region: Sync {
    /// `None` for the empty region.
    fn bounding_box(&self) -> Option<(Vec2, Vec2)>;
    fn contains(&self, p: &Vec2) -> bool;
}

impl Region for ConvexDomain {
    fn bounding_box(&self) -> Option<(Vec2, Vec2)> {
        Some(ConvexDomain::bounding_box(self))
    }

    fn contains(&self, p: &Vec2) -> bool {
        self.contains_closed(p)
    }
}

pub struct EmptyRegion;

impl Region for EmptyRegion {
    fn bounding_box(&self) -> Option<(Vec2, Vec2)> {
        None
    }

    fn contains(&self, _: &Vec2) -> bool {
        false
    }
}

/// Closed Hilbert ball of `domain` around `center`.
pub struct HilbertBall<'a> {
    pub domain: &'a ConvexDomain,
    pub center: Vec2,
    pub radius: f64,
}

impl Region for HilbertBall<'_> {
    fn bounding_box(&self) -> Option<(Vec2, Vec2)> {
        Some(self.domain.bounding_box())
    }

    fn contains(&self, p: &Vec2) -> bool {
        self.domain.is_interior(p)
            && hilbert_distance(self.domain, &self.center, p).is_ok_and(|d| d <= self.radius)
    }
}

pub struct Intersection<A, B>(pub A, pub B);

impl<A: Region, B: Region> Region for Intersection<A, B> {
    fn bounding_box(&self) -> Option<(Vec2, Vec2)> {
        let (lo_a, hi_a) = self.0.bounding_box()?;
        let (lo_b, hi_b) = self.1.bounding_box()?;
        let lo = lo_a.sup(&lo_b);
        let hi = hi_a.inf(&hi_b);
        (lo.x <= hi.x && lo.y <= hi.y).then_some((lo, hi))
    }

    fn contains(&self, p: &Vec2) -> bool {
        self.0.contains(p) && self.1.contains(p)
    }
}

impl<R: Region + ?Sized> Region for &R {
    fn bounding_box(&self) -> Option<(Vec2, Vec2)> {
        (**self).bounding_box()
    }

    fn contains(&self, p: &Vec2) -> bool {
        (**self).contains(p)
    }
}

/// Euclidean area of the unit ball of the Hilbert norm at `x`, as the
/// inscribed polygon through `directions` boundary points. The norm is
/// symmetric, so only half the directions need a chord solve.
pub fn unit_ball_area(dom: &ConvexDomain, x: &Vec2, directions: usize) -> Result<f64> {
    let half = directions / 2;
    let step = TAU / directions as f64;
    let mut radii = Vec::with_capacity(half);
    for k in 0..half {
        let th = step * k as f64;
        let (t_minus, t_plus) = dom.ray_params(x, &Vec2::new(th.cos(), th.sin()))?;
        radii.push(2.0 / (1.0 / t_plus + 1.0 / -t_minus));
    }
    let mut sum = 0.0;
    for k in 0..half {
        sum += radii[k] * radii[(k + 1) % half];
    }
    // each consecutive product appears twice around the full circle
    Ok(sum * step.sin())
}

/// Busemann density `π / area(unit ball)` at an interior point.
pub fn busemann_density(dom: &ConvexDomain, x: &Vec2, directions: usize) -> Result<f64> {
    Ok(PI / unit_ball_area(dom, x, directions)?)
}

/// Busemann area of a convex region lying in the closure of `dom`.
pub fn busemann_area(dom: &ConvexDomain, region: &ConvexDomain, opts: &AreaOptions) -> Result<f64> {
    if !region.is_contained_in(dom) {
        return Err(Error::RegionNotContained);
    }
    busemann_area_of(dom, region, opts)
}

/// Busemann area of an arbitrary region. Cells whose center is in the region
/// but outside the closure of `dom` raise `RegionNotContained`; centers on
/// the boundary of `dom` carry no area.
pub fn busemann_area_of<R: Region>(dom: &ConvexDomain, region: &R, opts: &AreaOptions) -> Result<f64> {
    opts.validate()?;
    let Some((lo, hi)) = region.bounding_box() else {
        return Ok(0.0);
    };
    let h = opts.cellsize;
    let i0 = (lo.x / h).floor() as i64 - 1;
    let i1 = (hi.x / h).ceil() as i64;
    let j0 = (lo.y / h).floor() as i64 - 1;
    let j1 = (hi.y / h).ceil() as i64;

    let row = |j: i64| -> Result<f64> {
        let y = (j as f64 + 0.5) * h;
        let mut acc = 0.0;
        for i in i0..=i1 {
            let c = Vec2::new((i as f64 + 0.5) * h, y);
            if !region.contains(&c) {
                continue;
            }
            if !dom.is_interior(&c) {
                if dom.contains_closed(&c) {
                    continue;
                }
                return Err(Error::RegionNotContained);
            }
            acc += busemann_density(dom, &c, opts.directions)?;
        }
        Ok(acc)
    };

    let rows: Vec<Result<f64>> = if opts.parallel {
        (j0..=j1).into_par_iter().map(row).collect()
    } else {
        (j0..=j1).map(row).collect()
    };
    let mut total = 0.0;
    for r in rows {
        total += r?;
    }
    Ok(total * h * h)
}

/// The tangent triangle `T` with vertices `(0,0), (1,0), (0,1)` in the chart
/// `z = 1`, and the inscribed triangle with vertices `(α,0), (½,½), (0,½)`.
pub fn standard_triangles(alpha: f64) -> Result<(ConvexDomain, ConvexDomain)> {
    if !(alpha > 0.0 && alpha <= 0.5) {
        return Err(Error::NonPositiveParameter { name: "alpha", value: alpha });
    }
    let outer = ConvexDomain::polygon(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])?;
    let inner = ConvexDomain::polygon(&[[alpha, 0.0], [0.5, 0.5], [0.0, 0.5]])?;
    Ok((outer, inner))
}

fn centroid(poly: &ConvexDomain) -> Vec2 {
    match poly {
        ConvexDomain::Polygon(p) => {
            p.vertices().iter().fold(Vec2::zeros(), |a, v| a + v) / p.vertices().len() as f64
        }
        ConvexDomain::Conic(_) => {
            let (lo, hi) = poly.bounding_box();
            (lo + hi) / 2.0
        }
    }
}

/// Area of `inner ∩ B(barycenter(inner), truncation)` in the Hilbert
/// geometry of `outer`.
pub fn truncated_area(
    outer: &ConvexDomain,
    inner: &ConvexDomain,
    truncation: f64,
    opts: &AreaOptions,
) -> Result<f64> {
    if !(truncation > 0.0) {
        return Err(Error::NonPositiveParameter { name: "truncation", value: truncation });
    }
    if !inner.is_contained_in(outer) {
        return Err(Error::RegionNotContained);
    }
    let ball = HilbertBall { domain: outer, center: centroid(inner), radius: truncation };
    busemann_area_of(outer, &Intersection(inner, ball), opts)
}

/// Truncated Busemann area of the inscribed triangle `△(α)` inside its
/// tangent triangle. Grows without bound as `α → 0`.
pub fn triangle_area_experiment(alpha: f64, truncation: f64, opts: &AreaOptions) -> Result<f64> {
    let (outer, inner) = standard_triangles(alpha)?;
    truncated_area(&outer, &inner, truncation, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::domain::ConicOval;

    #[test]
    fn unit_ball_at_center_of_disk_is_euclidean() {
        let a = unit_ball_area(&ConvexDomain::unit_disk(), &Vec2::zeros(), 256).unwrap();
        // inscribed 256-gon
        let expect = 128.0 * (TAU / 256.0).sin();
        assert!((a - expect).abs() < 1e-12);
        assert!((a - PI).abs() / PI < 1e-3);
    }

    #[test]
    fn unit_ball_in_disk_is_hyperbolic_ellipse() {
        // Klein model: the unit ball at radius r is an ellipse with semi-axes
        // (1 − r²) radially and sqrt(1 − r²) tangentially.
        let r: f64 = 0.6;
        let a = unit_ball_area(&ConvexDomain::unit_disk(), &Vec2::new(r, 0.0), 2048).unwrap();
        let expect = PI * (1.0 - r * r).powf(1.5);
        assert!((a - expect).abs() / expect < 1e-4);
    }

    #[test]
    fn empty_region_has_zero_area() {
        let a = busemann_area_of(&ConvexDomain::unit_disk(), &EmptyRegion, &AreaOptions::new(0.01));
        assert_eq!(a.unwrap(), 0.0);
    }

    #[test]
    fn region_outside_rejected() {
        let big = ConvexDomain::Conic(ConicOval::disk([0.5, 0.0], 0.8).unwrap());
        let r = busemann_area(&ConvexDomain::unit_disk(), &big, &AreaOptions::new(0.05));
        assert_eq!(r, Err(Error::RegionNotContained));
        let r = busemann_area_of(&ConvexDomain::unit_disk(), &big, &AreaOptions::new(0.05));
        assert_eq!(r, Err(Error::RegionNotContained));
    }

    #[test]
    fn bad_options_rejected() {
        let d = ConvexDomain::unit_disk();
        let r = ConvexDomain::Conic(ConicOval::disk([0.0, 0.0], 0.3).unwrap());
        assert!(busemann_area(&d, &r, &AreaOptions::new(0.0)).is_err());
        let odd = AreaOptions { directions: 7, ..AreaOptions::new(0.1) };
        assert!(busemann_area(&d, &r, &odd).is_err());
        assert!(triangle_area_experiment(0.0, 5.0, &AreaOptions::new(0.01)).is_err());
        assert!(triangle_area_experiment(0.6, 5.0, &AreaOptions::new(0.01)).is_err());
        assert!(triangle_area_experiment(0.3, -1.0, &AreaOptions::new(0.01)).is_err());
    }

    #[test]
    fn area_monotone_under_inclusion() {
        let d = ConvexDomain::unit_disk();
        let opts = AreaOptions::new(0.01);
        let mut prev = 0.0;
        for r in [0.1, 0.3, 0.5, 0.7] {
            let reg = ConvexDomain::Conic(ConicOval::disk([0.05, 0.0], r).unwrap());
            let a = busemann_area(&d, &reg, &opts).unwrap();
            assert!(a > prev);
            prev = a;
        }
    }

    #[test]
    fn parallel_is_bit_identical() {
        let d = ConvexDomain::unit_disk();
        let reg = ConvexDomain::Conic(ConicOval::disk([0.1, -0.2], 0.45).unwrap());
        let a = busemann_area(&d, &reg, &AreaOptions::new(0.01)).unwrap();
        let b = busemann_area(&d, &reg, &AreaOptions::new(0.01).parallel(true)).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
