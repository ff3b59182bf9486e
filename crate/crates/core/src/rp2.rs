//! Projective-linear primitives on RP²: homogeneous points, lines given by a
//! spanning pair, flags, the determinant pairings between them and the
//! transversality tests the invariants depend on.
//!
//! A line is kept as the two vectors spanning its plane in R³ rather than as
//! a covector. Every invariant built on top is a ratio of determinants that is
//! unchanged when any representative is rescaled, so the choice of spanning
//! pair never leaks into results.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;

/// Relative tolerance for the point-on-line check in [`Flag::new`].
pub const INCIDENCE_TOL: f64 = 1e-9;

fn nonzero(v: Vec3, what: &str) -> Result<Vec3> {
    if !v.iter().all(|c| c.is_finite()) {
        return Err(Error::DegenerateVector(format!("{what} has non-finite coordinates")));
    }
    if v.iter().all(|&c| c == 0.0) {
        return Err(Error::DegenerateVector(format!("{what} is the zero vector")));
    }
    Ok(v)
}

/// A point of RP² in homogeneous coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjPoint(Vec3);

impl ProjPoint {
    pub fn new(coords: [f64; 3]) -> Result<Self> {
        Self::from_vector(Vec3::from(coords))
    }

    pub fn from_vector(v: Vec3) -> Result<Self> {
        nonzero(v, "point").map(ProjPoint)
    }

    pub fn vector(&self) -> &Vec3 {
        &self.0
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    /// Same representative scaled by `c` (must be nonzero).
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::from_vector(self.0 * c)
    }

    /// Projective equality: the two representatives are parallel.
    pub fn projectively_eq(&self, other: &ProjPoint, tol: f64) -> bool {
        self.0.cross(&other.0).norm() <= tol * self.0.norm() * other.0.norm()
    }
}

/// A projective line, stored as an ordered pair of vectors spanning its plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjLine {
    a: Vec3,
    b: Vec3,
}

impl ProjLine {
    pub fn new(a: [f64; 3], b: [f64; 3]) -> Result<Self> {
        Self::from_vectors(Vec3::from(a), Vec3::from(b))
    }

    pub fn from_vectors(a: Vec3, b: Vec3) -> Result<Self> {
        let a = nonzero(a, "line spanning vector")?;
        let b = nonzero(b, "line spanning vector")?;
        let n = a.cross(&b);
        if n.norm() <= 1e-14 * a.norm() * b.norm() {
            return Err(Error::DegenerateVector(
                "line spanning vectors are linearly dependent".into(),
            ));
        }
        Ok(ProjLine { a, b })
    }

    /// The line through two distinct points.
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self> {
        Self::from_vectors(p.0, q.0)
    }

    /// The line `{x : n·x = 0}`, spanned by an orthonormal basis of `n⊥`.
    pub fn from_covector(n: [f64; 3]) -> Result<Self> {
        let n = nonzero(Vec3::from(n), "line covector")?.normalize();
        // Pick the coordinate axis least aligned with n.
        let axis = if n.x.abs() <= n.y.abs() && n.x.abs() <= n.z.abs() {
            Vec3::x()
        } else if n.y.abs() <= n.z.abs() {
            Vec3::y()
        } else {
            Vec3::z()
        };
        let a = n.cross(&axis).normalize();
        let b = n.cross(&a);
        Self::from_vectors(a, b)
    }

    pub fn spanning(&self) -> (&Vec3, &Vec3) {
        (&self.a, &self.b)
    }

    /// Covector `a × b`; `pairing13(p, l) == p · l.normal()`.
    pub fn normal(&self) -> Vec3 {
        self.a.cross(&self.b)
    }

    pub fn scaled(&self, ca: f64, cb: f64) -> Result<Self> {
        Self::from_vectors(self.a * ca, self.b * cb)
    }

    pub fn contains(&self, p: &ProjPoint, tol: f64) -> bool {
        pairing13(p, self).abs() <= tol * p.0.norm() * self.a.norm() * self.b.norm()
    }
}

/// A point together with a line through it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FlagRepr", into = "FlagRepr")]
pub struct Flag {
    point: ProjPoint,
    line: ProjLine,
}

impl Flag {
    pub fn new(point: ProjPoint, line: ProjLine) -> Result<Self> {
        Self::with_tolerance(point, line, INCIDENCE_TOL)
    }

    pub fn with_tolerance(point: ProjPoint, line: ProjLine, tol: f64) -> Result<Self> {
        let flag = Flag { point, line };
        let residual = flag.incidence_residual();
        let scale = point.0.norm() * line.a.norm() * line.b.norm();
        if residual.abs() > tol * scale {
            return Err(Error::NotIncident { residual });
        }
        Ok(flag)
    }

    /// Flag whose line is spanned by the point itself and `direction`.
    pub fn from_point_direction(point: [f64; 3], direction: [f64; 3]) -> Result<Self> {
        let p = ProjPoint::new(point)?;
        let line = ProjLine::new(point, direction)?;
        Flag::new(p, line)
    }

    /// Flag at `point` on the line with covector `normal`.
    pub fn from_point_normal(point: [f64; 3], normal: [f64; 3]) -> Result<Self> {
        let p = ProjPoint::new(point)?;
        let dir = Vec3::from(normal).cross(p.vector());
        Flag::new(p, ProjLine::from_vectors(p.0, dir)?)
    }

    pub fn point(&self) -> &ProjPoint {
        &self.point
    }

    pub fn line(&self) -> &ProjLine {
        &self.line
    }

    pub fn incidence_residual(&self) -> f64 {
        pairing13(&self.point, &self.line)
    }

    /// Image under a linear map of R³ (a projective transformation when invertible).
    pub fn transform(&self, g: &Matrix3<f64>) -> Result<Self> {
        let point = ProjPoint::from_vector(g * self.point.0)?;
        let line = ProjLine::from_vectors(g * self.line.a, g * self.line.b)?;
        Ok(Flag { point, line })
    }

    /// Rescales the point and both spanning vectors independently.
    pub fn rescaled(&self, cp: f64, ca: f64, cb: f64) -> Result<Self> {
        Ok(Flag {
            point: self.point.scaled(cp)?,
            line: self.line.scaled(ca, cb)?,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagRepr {
    point: [f64; 3],
    line: [[f64; 3]; 2],
}

impl TryFrom<FlagRepr> for Flag {
    type Error = Error;

    fn try_from(r: FlagRepr) -> Result<Self> {
        Flag::new(ProjPoint::new(r.point)?, ProjLine::new(r.line[0], r.line[1])?)
    }
}

impl From<Flag> for FlagRepr {
    fn from(f: Flag) -> Self {
        FlagRepr {
            point: f.point.coords(),
            line: [
                [f.line.a.x, f.line.a.y, f.line.a.z],
                [f.line.b.x, f.line.b.y, f.line.b.z],
            ],
        }
    }
}

/// `p ∧ l`: determinant of the matrix with columns `p` and the two spanning
/// vectors of `l`.
pub fn pairing13(p: &ProjPoint, l: &ProjLine) -> f64 {
    det3(&p.0, &l.a, &l.b)
}

/// Determinant of the matrix with columns `a`, `b`, `c`.
pub fn triple_det(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> f64 {
    det3(&a.0, &b.0, &c.0)
}

pub(crate) fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    a.dot(&b.cross(c))
}

fn unit_pairing(p: &ProjPoint, l: &ProjLine) -> f64 {
    let n = l.normal();
    p.0.dot(&n) / (p.0.norm() * n.norm())
}

fn unit_det(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    det3(a, b, c) / (a.norm() * b.norm() * c.norm())
}

/// Checks every transversality condition among `flags`: each point against
/// every other flag's line, every triple of points (not collinear) and every
/// triple of lines (not concurrent). Determinants are taken on unit
/// representatives and must exceed `tol` in absolute value.
fn generic_position(flags: &[&Flag], tol: f64) -> std::result::Result<(), String> {
    let n = flags.len();
    for i in 0..n {
        for j in 0..n {
            if i != j && unit_pairing(&flags[i].point, &flags[j].line).abs() <= tol {
                return Err(format!("point of flag {i} lies on the line of flag {j}"));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (flags[i], flags[j], flags[k]);
                if unit_det(&a.point.0, &b.point.0, &c.point.0).abs() <= tol {
                    return Err(format!("points of flags {i}, {j}, {k} are collinear"));
                }
                let (na, nb, nc) = (a.line.normal(), b.line.normal(), c.line.normal());
                if unit_det(&na, &nb, &nc).abs() <= tol {
                    return Err(format!("lines of flags {i}, {j}, {k} are concurrent"));
                }
            }
        }
    }
    Ok(())
}

pub fn is_generic_triple(e: &Flag, f: &Flag, g: &Flag, tol: f64) -> bool {
    generic_position(&[e, f, g], tol).is_ok()
}

pub fn is_generic_quadruple(e: &Flag, f: &Flag, g: &Flag, l: &Flag, tol: f64) -> bool {
    generic_position(&[e, f, g, l], tol).is_ok()
}

pub(crate) fn require_generic(flags: &[&Flag], tol: f64) -> Result<()> {
    generic_position(flags, tol).map_err(Error::NonGenericFlags)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(a: [f64; 3], b: [f64; 3]) -> ProjLine {
        ProjLine::new(a, b).unwrap()
    }

    fn p(c: [f64; 3]) -> ProjPoint {
        ProjPoint::new(c).unwrap()
    }

    fn example_flags(alpha: f64) -> (Flag, Flag, Flag) {
        (
            Flag::new(p([0.0, 0.5, 1.0]), l([0.0, 0.0, 1.0], [0.0, 1.0, 1.0])).unwrap(),
            Flag::new(p([0.5, 0.5, 1.0]), l([0.0, 1.0, 1.0], [1.0, 0.0, 1.0])).unwrap(),
            Flag::new(p([alpha, 0.0, 1.0]), l([0.0, 0.0, 1.0], [1.0, 0.0, 1.0])).unwrap(),
        )
    }

    #[test]
    fn pairing_examples() {
        let yz = l([0.0, 1.0, 0.0], [0.0, 0.0, 1.0]);
        assert_eq!(pairing13(&p([1.0, 0.0, 0.0]), &yz), 1.0);
        assert_eq!(pairing13(&p([0.0, 1.0, 0.0]), &yz), 0.0);
        assert_eq!(pairing13(&p([2.0, 0.0, 0.0]), &yz), 2.0);
    }

    #[test]
    fn triple_det_examples() {
        let (e1, e2, e3) = (p([1.0, 0.0, 0.0]), p([0.0, 1.0, 0.0]), p([0.0, 0.0, 1.0]));
        assert_eq!(triple_det(&e1, &e2, &e3), 1.0);
        assert_eq!(triple_det(&e1, &e2, &e1), 0.0);
        assert_eq!(triple_det(&e2, &e2, &e3), 0.0);
        assert_eq!(triple_det(&e1, &p([0.0, 2.0, 0.0]), &p([0.0, 0.0, 3.0])), 6.0);
    }

    #[test]
    fn zero_vectors_rejected() {
        assert!(matches!(ProjPoint::new([0.0; 3]), Err(Error::DegenerateVector(_))));
        assert!(ProjLine::new([0.0; 3], [1.0, 0.0, 0.0]).is_err());
        assert!(ProjLine::new([1.0, 2.0, 3.0], [2.0, 4.0, 6.0]).is_err());
        assert!(ProjPoint::new([f64::NAN, 1.0, 0.0]).is_err());
    }

    #[test]
    fn incidence_enforced() {
        let err = Flag::new(p([1.0, 0.0, 0.0]), l([0.0, 1.0, 0.0], [0.0, 0.0, 1.0]));
        assert!(matches!(err, Err(Error::NotIncident { .. })));
        let f = Flag::new(p([0.0, 1.0, 1.0]), l([0.0, 1.0, 0.0], [0.0, 0.0, 1.0])).unwrap();
        assert_eq!(f.incidence_residual(), pairing13(f.point(), f.line()));
    }

    #[test]
    fn worked_example_is_generic() {
        let (e, f, g) = example_flags(0.25);
        assert!(is_generic_triple(&e, &f, &g, 1e-9));
    }

    #[test]
    fn degenerate_triples() {
        let (e, f, g) = example_flags(0.25);
        assert!(!is_generic_triple(&e, &e, &g, 1e-9));
        // E's point on F's line
        let bad = Flag::new(p([0.0, 1.0, 1.0]), *e.line()).unwrap();
        assert!(!is_generic_triple(&bad, &f, &g, 1e-9));
    }

    #[test]
    fn degenerate_quadruples() {
        let (e, f, g) = example_flags(0.25);
        let l4 = Flag::from_point_direction([0.3, 0.3, 1.0], [1.0, -2.0, 0.5]).unwrap();
        assert!(is_generic_quadruple(&e, &f, &g, &l4, 1e-9));
        assert!(!is_generic_quadruple(&e, &f, &g, &g, 1e-9));
        // L's point on the line through E's and F's points
        let ep = e.point().vector();
        let fp = f.point().vector();
        let on = ep * 0.3 + fp * 0.7;
        let l5 = Flag::from_point_direction([on.x, on.y, on.z], [1.0, -2.0, 0.5]).unwrap();
        assert!(!is_generic_quadruple(&e, &f, &g, &l5, 1e-9));
    }

    #[test]
    fn covector_line_contains_orthogonal_points() {
        let line = ProjLine::from_covector([1.0, 2.0, -1.0]).unwrap();
        assert!(line.contains(&p([1.0, 0.0, 1.0]), 1e-12));
        assert!(line.contains(&p([0.0, 1.0, 2.0]), 1e-12));
        assert!(!line.contains(&p([1.0, 0.0, 0.0]), 1e-12));
    }

    #[test]
    fn flag_json_schema() {
        let f: Flag =
            serde_json::from_str(r#"{"point":[0,0.5,1],"line":[[0,0,1],[0,1,1]]}"#).unwrap();
        assert_eq!(f.point().coords(), [0.0, 0.5, 1.0]);
        let back = serde_json::to_string(&f).unwrap();
        assert_eq!(back, r#"{"point":[0.0,0.5,1.0],"line":[[0.0,0.0,1.0],[0.0,1.0,1.0]]}"#);
        let bad = serde_json::from_str::<Flag>(r#"{"point":[1,0,0],"line":[[0,1,0],[0,0,1]]}"#);
        assert!(bad.is_err());
    }
}
