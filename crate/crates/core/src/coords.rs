//! Goldman parameters and Bonahon-Dreyer coordinates of convex projective
//! structures on the pair of pants and the once-punctured torus, including
//! the degenerate strata where boundary holonomy becomes quasi-hyperbolic or
//! parabolic.
//!
//! Boundaries are `A₁, A₂, A₃` with the edge `Bᵢ` opposite `Aᵢ`; indices are
//! taken mod 3. Arrays are 0-based, so `sigma1[0]` is `σ₁(B₁)`.

use nalgebra::{SMatrix, SVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isometry::{IsometryClass, JordanPlacement};

/// Slack for the defining equalities of the degenerate boundary kinds.
const KIND_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryKind {
    Hyperbolic,
    #[serde(alias = "quasihyperbolic", alias = "quasi_hyperbolic")]
    QuasiHyperbolic,
    Parabolic,
}

impl BoundaryKind {
    pub fn codimension(self) -> usize {
        match self {
            BoundaryKind::Hyperbolic => 0,
            BoundaryKind::QuasiHyperbolic => 1,
            BoundaryKind::Parabolic => 2,
        }
    }
}

/// Goldman boundary invariants: the smallest eigenvalue `λ` and the sum `τ`
/// of the other two.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BoundaryRepr")]
pub struct BoundaryData {
    pub lambda: f64,
    pub tau: f64,
    pub kind: BoundaryKind,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundaryRepr {
    lambda: f64,
    tau: f64,
    kind: BoundaryKind,
}

impl TryFrom<BoundaryRepr> for BoundaryData {
    type Error = Error;

    fn try_from(r: BoundaryRepr) -> Result<Self> {
        BoundaryData::new(r.lambda, r.tau, r.kind)
    }
}

impl BoundaryData {
    pub fn new(lambda: f64, tau: f64, kind: BoundaryKind) -> Result<Self> {
        if !lambda.is_finite() || !tau.is_finite() {
            return Err(Error::InvalidBoundary("non-finite boundary data".into()));
        }
        let b = BoundaryData { lambda, tau, kind };
        match kind {
            BoundaryKind::Parabolic => {
                if (lambda - 1.0).abs() > KIND_TOL || (tau - 2.0).abs() > KIND_TOL {
                    return Err(Error::InvalidBoundary(format!(
                        "parabolic boundary needs lambda = 1 and tau = 2, got ({lambda}, {tau})"
                    )));
                }
            }
            BoundaryKind::QuasiHyperbolic => {
                if !(lambda > 0.0 && lambda < 1.0) {
                    return Err(Error::InvalidBoundary(format!("lambda = {lambda} is not in (0, 1)")));
                }
                if (tau * tau * lambda - 4.0).abs() > 4.0 * KIND_TOL {
                    return Err(Error::InvalidBoundary(format!(
                        "quasi-hyperbolic boundary needs tau^2 = 4/lambda, got tau^2 lambda = {}",
                        tau * tau * lambda
                    )));
                }
            }
            BoundaryKind::Hyperbolic => {
                if !(lambda > 0.0 && lambda < 1.0) {
                    return Err(Error::InvalidBoundary(format!("lambda = {lambda} is not in (0, 1)")));
                }
                let disc = tau * tau - 4.0 / lambda;
                if !(disc > 0.0) {
                    return Err(Error::ComplexEigenvalues { discriminant: disc });
                }
                let mu = middle_eigenvalue(&b)?;
                if !(mu > lambda) {
                    return Err(Error::InvalidBoundary(format!(
                        "lambda = {lambda} is not the smallest eigenvalue (middle one is {mu})"
                    )));
                }
            }
        }
        Ok(b)
    }

    pub fn parabolic() -> Self {
        BoundaryData { lambda: 1.0, tau: 2.0, kind: BoundaryKind::Parabolic }
    }

    /// Eigenvalues `μ, μ, ν = λ` with `μ²ν = 1`.
    pub fn quasi_hyperbolic(lambda: f64) -> Result<Self> {
        BoundaryData::new(lambda, 2.0 / lambda.sqrt(), BoundaryKind::QuasiHyperbolic)
    }

    pub fn hyperbolic(lambda: f64, tau: f64) -> Result<Self> {
        BoundaryData::new(lambda, tau, BoundaryKind::Hyperbolic)
    }

    /// From the smallest and middle eigenvalues; the largest is `1/(λμ)`.
    pub fn from_eigenvalues(lambda: f64, mu: f64) -> Result<Self> {
        BoundaryData::hyperbolic(lambda, mu + 1.0 / (lambda * mu))
    }

    pub fn from_class(c: &IsometryClass) -> Result<Self> {
        match *c {
            IsometryClass::Hyperbolic { eigenvalues: [l1, l2, l3] } => {
                BoundaryData::hyperbolic(l3, l1 + l2)
            }
            IsometryClass::QuasiHyperbolic { mu, nu, jordan_block: JordanPlacement::Larger } => {
                BoundaryData::new(nu, 2.0 * mu, BoundaryKind::QuasiHyperbolic)
            }
            IsometryClass::QuasiHyperbolic { jordan_block: JordanPlacement::Smaller, .. } => {
                Err(Error::InvalidBoundary(
                    "the Jordan block sits on the smaller eigenvalue".into(),
                ))
            }
            IsometryClass::Parabolic => Ok(BoundaryData::parabolic()),
            IsometryClass::Other => Err(Error::InvalidBoundary(
                "holonomy is neither hyperbolic, quasi-hyperbolic nor parabolic".into(),
            )),
        }
    }
}

/// `μ = (τ − √(τ² − 4/λ))/2`, the middle eigenvalue.
pub fn middle_eigenvalue(b: &BoundaryData) -> Result<f64> {
    match b.kind {
        BoundaryKind::Parabolic => Ok(1.0),
        BoundaryKind::QuasiHyperbolic => Ok(b.tau / 2.0),
        BoundaryKind::Hyperbolic => {
            let disc = b.tau * b.tau - 4.0 / b.lambda;
            if !(disc >= 0.0) {
                return Err(Error::ComplexEigenvalues { discriminant: disc });
            }
            // product of the two roots is 1/λ
            Ok(2.0 / (b.lambda * (b.tau + disc.sqrt())))
        }
    }
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositiveParameter { name, value })
    }
}

/// `log(1 + eˣ)` without overflow.
fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PantsGoldman {
    pub boundaries: [BoundaryData; 3],
    pub s: f64,
    pub t: f64,
}

impl PantsGoldman {
    pub fn new(boundaries: [BoundaryData; 3], s: f64, t: f64) -> Result<Self> {
        Ok(PantsGoldman { boundaries, s: positive("s", s)?, t: positive("t", t)? })
    }

    pub fn all_parabolic(s: f64, t: f64) -> Result<Self> {
        PantsGoldman::new([BoundaryData::parabolic(); 3], s, t)
    }

    pub fn kinds(&self) -> [BoundaryKind; 3] {
        self.boundaries.map(|b| b.kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TorusGoldman {
    /// Boundary curve `B`.
    pub b: BoundaryData,
    /// Meridian `C`, hyperbolic.
    pub c: BoundaryData,
    pub s: f64,
    pub t: f64,
    pub u: f64,
    pub v: f64,
}

impl TorusGoldman {
    pub fn new(b: BoundaryData, c: BoundaryData, s: f64, t: f64, u: f64, v: f64) -> Result<Self> {
        if c.kind != BoundaryKind::Hyperbolic {
            return Err(Error::InvalidBoundary("the meridian C must be hyperbolic".into()));
        }
        if !u.is_finite() || !v.is_finite() {
            return Err(Error::InvalidBoundary("non-finite gluing parameter".into()));
        }
        Ok(TorusGoldman { b, c, s: positive("s", s)?, t: positive("t", t)?, u, v })
    }

    /// Cutting along `C` leaves a pants with boundaries `(B, C, C)`.
    pub fn pants(&self) -> PantsGoldman {
        PantsGoldman { boundaries: [self.b, self.c, self.c], s: self.s, t: self.t }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PantsBD {
    pub sigma1: [f64; 3],
    pub sigma2: [f64; 3],
    pub tplus: f64,
    pub tminus: f64,
}

impl PantsBD {
    pub fn zero() -> Self {
        PantsBD { sigma1: [0.0; 3], sigma2: [0.0; 3], tplus: 0.0, tminus: 0.0 }
    }

    pub fn get(&self, c: Coordinate) -> Option<f64> {
        match c {
            Coordinate::Sigma1(i) => self.sigma1.get(i).copied(),
            Coordinate::Sigma2(i) => self.sigma2.get(i).copied(),
            Coordinate::TPlus => Some(self.tplus),
            Coordinate::TMinus => Some(self.tminus),
            Coordinate::SigmaC1 | Coordinate::SigmaC2 => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusBD {
    pub pants: PantsBD,
    #[serde(rename = "sigmaC1")]
    pub sigma_c1: f64,
    #[serde(rename = "sigmaC2")]
    pub sigma_c2: f64,
}

impl TorusBD {
    pub fn get(&self, c: Coordinate) -> Option<f64> {
        match c {
            Coordinate::SigmaC1 => Some(self.sigma_c1),
            Coordinate::SigmaC2 => Some(self.sigma_c2),
            other => self.pants.get(other),
        }
    }
}

/// Log-eigenvalue data `(ln λᵢ, ln μᵢ)` of the three boundaries.
fn log_boundary(bs: &[BoundaryData; 3]) -> Result<([f64; 3], [f64; 3])> {
    let mut ll = [0.0; 3];
    let mut mm = [0.0; 3];
    for (i, b) in bs.iter().enumerate() {
        match b.kind {
            BoundaryKind::Parabolic => {}
            _ => {
                ll[i] = positive("lambda", b.lambda)?.ln();
                mm[i] = positive("mu", middle_eigenvalue(b)?)?.ln();
            }
        }
    }
    Ok((ll, mm))
}

fn shears_from_logs(ll: &[f64; 3], mm: &[f64; 3], log_s: f64) -> ([f64; 3], [f64; 3]) {
    let mut sigma1 = [0.0; 3];
    let mut sigma2 = [0.0; 3];
    for i in 0..3 {
        let (prev, next) = ((i + 2) % 3, (i + 1) % 3);
        let c = 0.5 * (ll[prev] + ll[next] - ll[i]);
        sigma1[i] = log_s + mm[prev] + c;
        sigma2[i] = mm[next] - log_s + c;
    }
    (sigma1, sigma2)
}

/// `log [(e^{−σ₂(B₂)}+1)(e^{−σ₂(B₃)}+1) / (e^{σ₁(B₃)}+1)]`, the part of
/// `τ₁₁₁(T₊)` not involving `t`.
fn tplus_core(sigma1: &[f64; 3], sigma2: &[f64; 3]) -> f64 {
    softplus(-sigma2[1]) + softplus(-sigma2[2]) - softplus(sigma1[2])
}

/// `σ₁(Bᵢ) = log(s μ_{i−1} √(λ_{i−1}λ_{i+1}/λᵢ))`,
/// `σ₂(Bᵢ) = log((μ_{i+1}/s) √(λ_{i−1}λ_{i+1}/λᵢ))`,
/// `τ₁₁₁(T₊) = log (e^{−σ₂(B₂)}+1)(e^{−σ₂(B₃)}+1) / t(e^{σ₁(B₃)}+1)` and
/// `τ₁₁₁(T₋) = log t μ₁μ₂μ₃(e^{σ₁(B₃)}+1) / (e^{−σ₂(B₂)}+1)(e^{−σ₂(B₃)}+1)`.
pub fn pants_goldman_to_bd(g: &PantsGoldman) -> Result<PantsBD> {
    let (ll, mm) = log_boundary(&g.boundaries)?;
    let log_s = positive("s", g.s)?.ln();
    let log_t = positive("t", g.t)?.ln();
    let (sigma1, sigma2) = shears_from_logs(&ll, &mm, log_s);
    let core = tplus_core(&sigma1, &sigma2);
    Ok(PantsBD {
        sigma1,
        sigma2,
        tplus: core - log_t,
        tminus: log_t + (mm[0] + mm[1] + mm[2]) - core,
    })
}

/// `(σ₁(B₁), τ₁₁₁(T₊)) = (log s, log((s+1)/t))` on the all-parabolic stratum.
pub fn all_parabolic_coords(s: f64, t: f64) -> Result<(f64, f64)> {
    let s = positive("s", s)?;
    let t = positive("t", t)?;
    Ok((s.ln(), s.ln_1p() - t.ln()))
}

/// Inverse of [`all_parabolic_coords`].
pub fn all_parabolic_recover(sigma1_b1: f64, tplus: f64) -> (f64, f64) {
    let s = sigma1_b1.exp();
    (s, (1.0 + s) * (-tplus).exp())
}

/// `r₁ = σ₁(B₂) + σ₂(B₃)` and
/// `r₂ = σ₁(B₁) − σ₂(B₁) + σ₁(B₃) − σ₂(B₂) − 4 log s`, the relations of the
/// stratum where `A₁` is parabolic.
pub fn one_parabolic_residuals(bd: &PantsBD, s: f64) -> Result<(f64, f64)> {
    let log_s = positive("s", s)?.ln();
    let r1 = bd.sigma1[1] + bd.sigma2[2];
    let r2 = bd.sigma1[0] - bd.sigma2[0] + bd.sigma1[2] - bd.sigma2[1] - 4.0 * log_s;
    Ok((r1, r2))
}

/// `σ₁(B₂) + σ₂(B₃)`, which is `2 log(μ₁√λ₁)` and vanishes when `A₁` is
/// quasi-hyperbolic.
pub fn quasi_hyperbolic_residual(bd: &PantsBD) -> f64 {
    bd.sigma1[1] + bd.sigma2[2]
}

/// Pants coordinates of `(B, C, C)` plus `σ₁(C) = u − 3v`, `σ₂(C) = u + 3v`.
pub fn torus_goldman_to_bd(g: &TorusGoldman) -> Result<TorusBD> {
    if g.c.kind != BoundaryKind::Hyperbolic {
        return Err(Error::InvalidBoundary("the meridian C must be hyperbolic".into()));
    }
    Ok(TorusBD {
        pants: pants_goldman_to_bd(&g.pants())?,
        sigma_c1: g.u - 3.0 * g.v,
        sigma_c2: g.u + 3.0 * g.v,
    })
}

/// Inverse of the gluing map: `u = (σ₁(C)+σ₂(C))/2`, `v = (σ₂(C)−σ₁(C))/6`.
pub fn torus_gluing_recover(sigma_c1: f64, sigma_c2: f64) -> (f64, f64) {
    ((sigma_c1 + sigma_c2) / 2.0, (sigma_c2 - sigma_c1) / 6.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TorusParabolicRecovery {
    pub s: f64,
    pub lambda2: f64,
    pub mu2: f64,
    pub t: f64,
    pub bd: PantsBD,
}

fn check_hyperbolic(stratum: &'static str, label: &str, lambda: f64, mu: f64) -> Result<()> {
    let inconsistent = |reason: String| Error::InconsistentStratum { stratum, reason };
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(inconsistent(format!("recovered lambda{label} = {lambda} is not in (0, 1)")));
    }
    if !(mu > lambda) {
        return Err(inconsistent(format!(
            "recovered mu{label} = {mu} does not exceed lambda{label} = {lambda}"
        )));
    }
    if !(mu * mu * lambda < 1.0) {
        return Err(inconsistent(format!(
            "recovered mu{label} = {mu} is not below the largest eigenvalue 1/(lambda mu)"
        )));
    }
    Ok(())
}

/// Torus with parabolic boundary `B` from `σ₁(B₁..₃)` and `τ₁₁₁(T₊)`:
/// `s = e^{σ₁(B₂)}`, `μ₂ = e^{σ₁(B₃)}/s`, `λ₂ = e^{σ₁(B₁)−σ₁(B₃)}`, the
/// remaining shears `σ₂(B₃) = −log s`, `σ₂(B₁) = log(μ₂λ₂/s)`,
/// `σ₂(B₂) = log(μ₂/s)`, then `t` from `τ₁₁₁(T₊)` and `τ₁₁₁(T₋)` from `t`.
pub fn torus_parabolic_recover(sigma1: [f64; 3], tplus: f64) -> Result<TorusParabolicRecovery> {
    const STRATUM: &str = "torus-parabolic";
    let log_s = sigma1[1];
    let log_mu2 = sigma1[2] - log_s;
    let log_lambda2 = sigma1[0] - sigma1[2];
    let (s, mu2, lambda2) = (log_s.exp(), log_mu2.exp(), log_lambda2.exp());
    check_hyperbolic(STRATUM, "2", lambda2, mu2)?;
    let sigma2 = [log_mu2 + log_lambda2 - log_s, log_mu2 - log_s, -log_s];
    let log_t = tplus_core(&sigma1, &sigma2) - tplus;
    let t = log_t.exp();
    if !(s > 0.0 && s.is_finite() && t > 0.0 && t.is_finite()) {
        return Err(Error::InconsistentStratum {
            stratum: STRATUM,
            reason: format!("recovered s = {s}, t = {t} are not finite and positive"),
        });
    }
    let bd = PantsBD { sigma1, sigma2, tplus, tminus: 2.0 * log_mu2 - tplus };
    Ok(TorusParabolicRecovery { s, lambda2, mu2, t, bd })
}

/// `Σ` over boundaries of 0 (hyperbolic), 1 (quasi-hyperbolic), 2 (parabolic).
pub fn stratum_codimension(kinds: &[BoundaryKind]) -> usize {
    kinds.iter().map(|k| k.codimension()).sum()
}

/// A single Bonahon-Dreyer coordinate. Edge indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinate {
    Sigma1(usize),
    Sigma2(usize),
    TPlus,
    TMinus,
    SigmaC1,
    SigmaC2,
}

impl Coordinate {
    pub fn name(&self) -> String {
        match self {
            Coordinate::Sigma1(i) => format!("sigma1_B{}", i + 1),
            Coordinate::Sigma2(i) => format!("sigma2_B{}", i + 1),
            Coordinate::TPlus => "tplus".into(),
            Coordinate::TMinus => "tminus".into(),
            Coordinate::SigmaC1 => "sigmaC1".into(),
            Coordinate::SigmaC2 => "sigmaC2".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stratum {
    PantsInterior,
    PantsOneQuasiHyperbolic,
    PantsOneParabolic,
    PantsAllParabolic,
    TorusInterior,
    TorusQuasiHyperbolic,
    TorusParabolic,
}

use Coordinate::{Sigma1 as S1, Sigma2 as S2, SigmaC1, SigmaC2, TMinus, TPlus};
use BoundaryKind::{Hyperbolic as H, Parabolic as P, QuasiHyperbolic as Q};

impl Stratum {
    pub const ALL: [Stratum; 7] = [
        Stratum::PantsInterior,
        Stratum::PantsOneQuasiHyperbolic,
        Stratum::PantsOneParabolic,
        Stratum::PantsAllParabolic,
        Stratum::TorusInterior,
        Stratum::TorusQuasiHyperbolic,
        Stratum::TorusParabolic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Stratum::PantsInterior => "pants-interior",
            Stratum::PantsOneQuasiHyperbolic => "pants-one-quasi-hyperbolic",
            Stratum::PantsOneParabolic => "pants-one-parabolic",
            Stratum::PantsAllParabolic => "pants-all-parabolic",
            Stratum::TorusInterior => "torus-interior",
            Stratum::TorusQuasiHyperbolic => "torus-quasi-hyperbolic",
            Stratum::TorusParabolic => "torus-parabolic",
        }
    }

    pub fn is_torus(&self) -> bool {
        matches!(
            self,
            Stratum::TorusInterior | Stratum::TorusQuasiHyperbolic | Stratum::TorusParabolic
        )
    }

    /// The coordinates that parametrize the stratum, in input order.
    pub fn inputs(&self) -> &'static [Coordinate] {
        match self {
            Stratum::PantsInterior => &[S1(0), S2(0), S1(1), S2(1), S1(2), S2(2), TPlus, TMinus],
            Stratum::PantsOneQuasiHyperbolic => &[S1(0), S2(0), S1(1), S2(1), S1(2), TPlus, TMinus],
            Stratum::PantsOneParabolic => &[S1(0), S2(0), S1(1), S1(2), TPlus, TMinus],
            Stratum::PantsAllParabolic => &[S1(0), TPlus],
            Stratum::TorusInterior => &[S1(0), S2(0), S1(1), S1(2), TPlus, TMinus, SigmaC1, SigmaC2],
            Stratum::TorusQuasiHyperbolic => &[S1(0), S1(1), S1(2), TPlus, TMinus, SigmaC1, SigmaC2],
            Stratum::TorusParabolic => &[S1(0), S1(1), S1(2), TPlus, SigmaC1, SigmaC2],
        }
    }

    pub fn parameter_count(&self) -> usize {
        self.inputs().len()
    }

    /// Boundary kinds: `A₁, A₂, A₃` for the pants, `B` for the torus.
    pub fn boundary_kinds(&self) -> &'static [BoundaryKind] {
        match self {
            Stratum::PantsInterior => &[H, H, H],
            Stratum::PantsOneQuasiHyperbolic => &[Q, H, H],
            Stratum::PantsOneParabolic => &[P, H, H],
            Stratum::PantsAllParabolic => &[P, P, P],
            Stratum::TorusInterior => &[H],
            Stratum::TorusQuasiHyperbolic => &[Q],
            Stratum::TorusParabolic => &[P],
        }
    }

    pub fn codimension(&self) -> usize {
        stratum_codimension(self.boundary_kinds())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "surface", rename_all = "lowercase")]
pub enum GoldmanRecord {
    Pants(PantsGoldman),
    Torus(TorusGoldman),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GoldmanRepr {
    surface: String,
    boundaries: Vec<BoundaryData>,
    s: f64,
    t: f64,
    u: Option<f64>,
    v: Option<f64>,
}

impl TryFrom<GoldmanRepr> for GoldmanRecord {
    type Error = Error;

    fn try_from(r: GoldmanRepr) -> Result<Self> {
        match r.surface.as_str() {
            "pants" => {
                let b: [BoundaryData; 3] = r.boundaries.try_into().map_err(|v: Vec<_>| {
                    Error::InvalidBoundary(format!("pants needs 3 boundaries, got {}", v.len()))
                })?;
                if r.u.is_some() || r.v.is_some() {
                    return Err(Error::InvalidBoundary(
                        "gluing parameters u, v only apply to the torus".into(),
                    ));
                }
                Ok(GoldmanRecord::Pants(PantsGoldman::new(b, r.s, r.t)?))
            }
            "torus" => {
                let [b, c]: [BoundaryData; 2] = r.boundaries.try_into().map_err(|v: Vec<_>| {
                    Error::InvalidBoundary(format!(
                        "torus needs 2 boundaries (B, then C), got {}",
                        v.len()
                    ))
                })?;
                let (u, v) = (r.u.unwrap_or(0.0), r.v.unwrap_or(0.0));
                Ok(GoldmanRecord::Torus(TorusGoldman::new(b, c, r.s, r.t, u, v)?))
            }
            other => Err(Error::InvalidBoundary(format!("unknown surface {other:?}"))),
        }
    }
}

impl<'de> Deserialize<'de> for GoldmanRecord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GoldmanRepr::deserialize(d)?;
        GoldmanRecord::try_from(repr).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "surface", rename_all = "lowercase")]
pub enum BdRecord {
    Pants(PantsBD),
    Torus(TorusBD),
}

impl BdRecord {
    pub fn pants(&self) -> &PantsBD {
        match self {
            BdRecord::Pants(p) => p,
            BdRecord::Torus(t) => &t.pants,
        }
    }

    pub fn get(&self, c: Coordinate) -> Option<f64> {
        match self {
            BdRecord::Pants(p) => p.get(c),
            BdRecord::Torus(t) => t.get(c),
        }
    }

    /// Every coordinate in a fixed order, named.
    pub fn named_values(&self) -> Vec<(String, f64)> {
        let mut coords: Vec<Coordinate> = (0..3).map(S1).chain((0..3).map(S2)).collect();
        coords.extend([TPlus, TMinus]);
        if matches!(self, BdRecord::Torus(_)) {
            coords.extend([SigmaC1, SigmaC2]);
        }
        coords
            .into_iter()
            .map(|c| (c.name(), self.get(c).expect("coordinate present")))
            .collect()
    }
}

pub fn goldman_to_bd(g: &GoldmanRecord) -> Result<BdRecord> {
    match g {
        GoldmanRecord::Pants(p) => pants_goldman_to_bd(p).map(BdRecord::Pants),
        GoldmanRecord::Torus(t) => torus_goldman_to_bd(t).map(BdRecord::Torus),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Recovered {
    pub goldman: GoldmanRecord,
    pub bd: BdRecord,
}

/// Unknowns `x = (ln λ₁, ln λ₂, ln λ₃, ln μ₁, ln μ₂, ln μ₃, ln s)`.
type Row = SVector<f64, 7>;

fn l(i: usize) -> usize {
    i
}

fn m(i: usize) -> usize {
    3 + i
}

const S: usize = 6;

fn sigma_row(c: Coordinate) -> Row {
    let mut r = Row::zeros();
    let edge = |i: usize, r: &mut Row| {
        let (prev, next) = ((i + 2) % 3, (i + 1) % 3);
        r[l(prev)] += 0.5;
        r[l(next)] += 0.5;
        r[l(i)] -= 0.5;
    };
    match c {
        Coordinate::Sigma1(i) => {
            edge(i, &mut r);
            r[S] += 1.0;
            r[m((i + 2) % 3)] += 1.0;
        }
        Coordinate::Sigma2(i) => {
            edge(i, &mut r);
            r[S] -= 1.0;
            r[m((i + 1) % 3)] += 1.0;
        }
        _ => unreachable!("only edge shears are linear in the log-eigenvalues"),
    }
    r
}

fn tau_sum_row() -> Row {
    let mut r = Row::zeros();
    for i in 0..3 {
        r[m(i)] = 1.0;
    }
    r
}

fn unit_row(entries: &[(usize, f64)]) -> Row {
    let mut r = Row::zeros();
    for &(k, c) in entries {
        r[k] += c;
    }
    r
}

/// Determines every Goldman parameter, and the full coordinate record, from
/// the coordinates parametrizing `stratum` (in the order of
/// [`Stratum::inputs`]). Fails if the recovered boundary data leaves the
/// stratum.
pub fn recover(stratum: Stratum, values: &[f64]) -> Result<Recovered> {
    let inputs = stratum.inputs();
    if values.len() != inputs.len() {
        return Err(Error::WrongArity {
            stratum: stratum.name(),
            expected: inputs.len(),
            found: values.len(),
        });
    }
    if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::InconsistentStratum {
            stratum: stratum.name(),
            reason: format!("{} is not finite", inputs[bad].name()),
        });
    }
    let value = |c: Coordinate| inputs.iter().position(|&k| k == c).map(|i| values[i]);

    let (u, v) = match (value(SigmaC1), value(SigmaC2)) {
        (Some(a), Some(b)) => torus_gluing_recover(a, b),
        _ => (0.0, 0.0),
    };

    match stratum {
        Stratum::PantsAllParabolic => {
            let (s, t) = all_parabolic_recover(values[0], values[1]);
            let goldman = GoldmanRecord::Pants(PantsGoldman::all_parabolic(s, t)?);
            return Ok(Recovered { bd: goldman_to_bd(&goldman)?, goldman });
        }
        Stratum::TorusParabolic => {
            let r = torus_parabolic_recover([values[0], values[1], values[2]], values[3])?;
            let c = BoundaryData::from_eigenvalues(r.lambda2, r.mu2)?;
            let g = TorusGoldman::new(BoundaryData::parabolic(), c, r.s, r.t, u, v)?;
            let (sigma_c1, sigma_c2) = (values[4], values[5]);
            let bd = BdRecord::Torus(TorusBD { pants: r.bd, sigma_c1, sigma_c2 });
            return Ok(Recovered { goldman: GoldmanRecord::Torus(g), bd });
        }
        _ => {}
    }

    let mut rows: Vec<(Row, f64)> = Vec::with_capacity(7);
    for (c, &val) in inputs.iter().zip(values) {
        if matches!(c, S1(_) | S2(_)) {
            rows.push((sigma_row(*c), val));
        }
    }
    if let (Some(tp), Some(tm)) = (value(TPlus), value(TMinus)) {
        rows.push((tau_sum_row(), tp + tm));
    }
    match stratum.boundary_kinds()[0] {
        BoundaryKind::Parabolic => {
            rows.push((unit_row(&[(l(0), 1.0)]), 0.0));
            rows.push((unit_row(&[(m(0), 1.0)]), 0.0));
        }
        BoundaryKind::QuasiHyperbolic => rows.push((unit_row(&[(l(0), 1.0), (m(0), 2.0)]), 0.0)),
        BoundaryKind::Hyperbolic => {}
    }
    if stratum.is_torus() {
        rows.push((unit_row(&[(l(1), 1.0), (l(2), -1.0)]), 0.0));
        rows.push((unit_row(&[(m(1), 1.0), (m(2), -1.0)]), 0.0));
    }
    debug_assert_eq!(rows.len(), 7);

    let a = SMatrix::<f64, 7, 7>::from_fn(|i, j| rows[i].0[j]);
    let b = SVector::<f64, 7>::from_fn(|i, _| rows[i].1);
    let x = a.lu().solve(&b).ok_or(Error::InconsistentStratum {
        stratum: stratum.name(),
        reason: "coordinate system is singular".into(),
    })?;

    let inconsistent = |reason: String| Error::InconsistentStratum { stratum: stratum.name(), reason };
    let mut boundaries = [BoundaryData::parabolic(); 3];
    for (i, slot) in boundaries.iter_mut().enumerate() {
        let kind = if i == 0 { stratum.boundary_kinds()[0] } else { H };
        let (lambda, mu) = (x[l(i)].exp(), x[m(i)].exp());
        *slot = match kind {
            BoundaryKind::Parabolic => BoundaryData::parabolic(),
            BoundaryKind::QuasiHyperbolic => {
                if !(lambda < 1.0) {
                    return Err(inconsistent(format!(
                        "recovered lambda1 = {lambda} is not below 1"
                    )));
                }
                BoundaryData::new(lambda, 2.0 * mu, Q).map_err(|e| inconsistent(e.to_string()))?
            }
            BoundaryKind::Hyperbolic => {
                check_hyperbolic(stratum.name(), &(i + 1).to_string(), lambda, mu)?;
                BoundaryData::from_eigenvalues(lambda, mu).map_err(|e| inconsistent(e.to_string()))?
            }
        };
    }
    let s = x[S].exp();
    let sigma1 = [0, 1, 2].map(|i| sigma_row(S1(i)).dot(&x));
    let sigma2 = [0, 1, 2].map(|i| sigma_row(S2(i)).dot(&x));
    let tplus = value(TPlus).expect("every solved stratum fixes tplus");
    let t = (tplus_core(&sigma1, &sigma2) - tplus).exp();
    if !(s.is_finite() && s > 0.0 && t.is_finite() && t > 0.0) {
        return Err(inconsistent(format!("recovered s = {s}, t = {t} are not finite and positive")));
    }

    let goldman = if stratum.is_torus() {
        GoldmanRecord::Torus(TorusGoldman::new(boundaries[0], boundaries[1], s, t, u, v)?)
    } else {
        GoldmanRecord::Pants(PantsGoldman::new(boundaries, s, t)?)
    };
    Ok(Recovered { bd: goldman_to_bd(&goldman)?, goldman })
}

/// Goldman parameters of an interior pants from all eight coordinates.
pub fn pants_bd_to_goldman(bd: &PantsBD) -> Result<PantsGoldman> {
    let values: Vec<f64> = Stratum::PantsInterior
        .inputs()
        .iter()
        .map(|&c| bd.get(c).expect("pants coordinate"))
        .collect();
    match recover(Stratum::PantsInterior, &values)?.goldman {
        GoldmanRecord::Pants(p) => Ok(p),
        GoldmanRecord::Torus(_) => unreachable!(),
    }
}

/// Path `(λ, τ) → (1, 2)` pinching `b` to a cusp in `steps` steps, scaling
/// the log-eigenvalues linearly to zero. Every point keeps the kind of `b`
/// except the last, which is parabolic.
pub fn pinch_path(b: &BoundaryData, steps: usize) -> Result<Vec<BoundaryData>> {
    if steps == 0 {
        return Err(Error::NonPositiveParameter { name: "steps", value: 0.0 });
    }
    let (ll, mm) = log_boundary(&[*b, *b, *b])?;
    let (ll, mm) = (ll[0], mm[0]);
    (0..=steps)
        .map(|k| {
            if k == steps || b.kind == BoundaryKind::Parabolic {
                return Ok(BoundaryData::parabolic());
            }
            let f = 1.0 - k as f64 / steps as f64;
            let (lambda, mu) = ((f * ll).exp(), (f * mm).exp());
            match b.kind {
                BoundaryKind::QuasiHyperbolic => BoundaryData::quasi_hyperbolic(lambda),
                _ => BoundaryData::from_eigenvalues(lambda, mu),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub step: usize,
    pub boundary: BoundaryData,
    pub bd: BdRecord,
}

/// Coordinates along [`pinch_path`] for boundary `index` (0-based `A₁..A₃`
/// of the pants; only `0`, the curve `B`, for the torus).
pub fn sweep(record: &GoldmanRecord, index: usize, steps: usize) -> Result<Vec<SweepRow>> {
    let start = match record {
        GoldmanRecord::Pants(p) => *p.boundaries.get(index).ok_or_else(|| {
            Error::InvalidBoundary(format!("pants boundary index {} is not in 1..=3", index + 1))
        })?,
        GoldmanRecord::Torus(t) => {
            if index != 0 {
                return Err(Error::InvalidBoundary(
                    "only the torus boundary B can be pinched; the meridian stays hyperbolic".into(),
                ));
            }
            t.b
        }
    };
    pinch_path(&start, steps)?
        .into_iter()
        .enumerate()
        .map(|(step, boundary)| {
            let mut g = *record;
            match &mut g {
                GoldmanRecord::Pants(p) => p.boundaries[index] = boundary,
                GoldmanRecord::Torus(t) => t.b = boundary,
            }
            Ok(SweepRow { step, boundary, bd: goldman_to_bd(&g)? })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyp(lambda: f64, tau: f64) -> BoundaryData {
        BoundaryData::hyperbolic(lambda, tau).unwrap()
    }

    #[test]
    fn middle_eigenvalue_examples() {
        assert_eq!(middle_eigenvalue(&BoundaryData::parabolic()).unwrap(), 1.0);
        let mu = middle_eigenvalue(&hyp(0.2, 5.0)).unwrap();
        assert!((mu - (5.0 - 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((mu - 1.381966011250105).abs() < 1e-12);
        let q = BoundaryData::new(0.25, 4.0, BoundaryKind::QuasiHyperbolic).unwrap();
        assert_eq!(middle_eigenvalue(&q).unwrap(), 2.0);
        let bad = BoundaryData { lambda: 0.5, tau: 2.0, kind: BoundaryKind::Hyperbolic };
        assert!(matches!(middle_eigenvalue(&bad), Err(Error::ComplexEigenvalues { .. })));
    }

    #[test]
    fn boundary_validation() {
        assert!(matches!(
            BoundaryData::hyperbolic(0.5, 2.0),
            Err(Error::ComplexEigenvalues { .. })
        ));
        assert!(BoundaryData::hyperbolic(1.5, 5.0).is_err());
        assert!(BoundaryData::new(1.0, 2.1, BoundaryKind::Parabolic).is_err());
        assert!(BoundaryData::new(0.25, 4.5, BoundaryKind::QuasiHyperbolic).is_err());
        // 0.9 is not the smallest eigenvalue here
        assert!(BoundaryData::hyperbolic(0.9, 2.2).is_err());
    }

    #[test]
    fn boundary_from_class() {
        let c = IsometryClass::hyperbolic(4.0, 1.0, 0.25).unwrap();
        let b = BoundaryData::from_class(&c).unwrap();
        assert_eq!((b.lambda, b.tau, b.kind), (0.25, 5.0, BoundaryKind::Hyperbolic));
        let q = IsometryClass::QuasiHyperbolic { mu: 2.0, nu: 0.25, jordan_block: JordanPlacement::Larger };
        let b = BoundaryData::from_class(&q).unwrap();
        assert_eq!((b.lambda, b.tau), (0.25, 4.0));
        assert_eq!(BoundaryData::from_class(&IsometryClass::Parabolic).unwrap(), BoundaryData::parabolic());
        assert!(BoundaryData::from_class(&IsometryClass::Other).is_err());
    }

    #[test]
    fn all_parabolic_conversion() {
        let bd = pants_goldman_to_bd(&PantsGoldman::all_parabolic(2.0, 1.0).unwrap()).unwrap();
        for i in 0..3 {
            assert!((bd.sigma1[i] - 2f64.ln()).abs() < 1e-15);
            assert!((bd.sigma2[i] + 2f64.ln()).abs() < 1e-15);
        }
        assert!((bd.tplus - 3f64.ln()).abs() < 1e-15);
        assert!((bd.tminus + 3f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn all_parabolic_coords_examples() {
        assert_eq!(all_parabolic_coords(1.0, 1.0).unwrap(), (0.0, 2f64.ln()));
        let (a, b) = all_parabolic_coords(2.0, 3.0).unwrap();
        assert!((a - 2f64.ln()).abs() < 1e-15 && b.abs() < 1e-15);
        let e = std::f64::consts::E;
        let (a, b) = all_parabolic_coords(e, 1.0).unwrap();
        assert!((a - 1.0).abs() < 1e-15 && (b - (e + 1.0).ln()).abs() < 1e-15);
        assert!(all_parabolic_coords(0.0, 1.0).is_err());
        assert!(all_parabolic_coords(1.0, -1.0).is_err());

        let (s, t) = all_parabolic_recover(0.0, 2f64.ln());
        assert!((s - 1.0).abs() < 1e-15 && (t - 1.0).abs() < 1e-15);
        let (s, t) = all_parabolic_recover(2f64.ln(), 0.0);
        assert!((s - 2.0).abs() < 1e-15 && (t - 3.0).abs() < 1e-15);
    }

    #[test]
    fn conversion_agrees_with_all_parabolic_coords() {
        for (s, t) in [(0.3, 2.0), (1.0, 1.0), (7.5, 0.2)] {
            let bd = pants_goldman_to_bd(&PantsGoldman::all_parabolic(s, t).unwrap()).unwrap();
            assert_eq!((bd.sigma1[0], bd.tplus), all_parabolic_coords(s, t).unwrap());
        }
    }

    #[test]
    fn tau_sum_identity() {
        let g = PantsGoldman::new([hyp(0.2, 5.0), hyp(0.5, 3.1), hyp(0.05, 9.0)], 1.7, 0.4).unwrap();
        let bd = pants_goldman_to_bd(&g).unwrap();
        let mus: f64 = g.boundaries.iter().map(|b| middle_eigenvalue(b).unwrap().ln()).sum();
        assert!((bd.tplus + bd.tminus - mus).abs() < 1e-12);
    }

    #[test]
    fn residual_examples() {
        assert_eq!(one_parabolic_residuals(&PantsBD::zero(), 1.0).unwrap(), (0.0, 0.0));
        assert_eq!(quasi_hyperbolic_residual(&PantsBD::zero()), 0.0);

        let g = PantsGoldman::new([BoundaryData::parabolic(), hyp(0.2, 5.0), hyp(0.3, 4.0)], 1.3, 2.0)
            .unwrap();
        let mut bd = pants_goldman_to_bd(&g).unwrap();
        let (r1, _) = one_parabolic_residuals(&bd, 1.3).unwrap();
        assert!(r1.abs() < 1e-12);
        bd.sigma1[1] += 0.25;
        let (r1p, _) = one_parabolic_residuals(&bd, 1.3).unwrap();
        assert!((r1p - r1 - 0.25).abs() < 1e-12);

        // equal A₂, A₃ eigenvalues
        let g = PantsGoldman::new([BoundaryData::parabolic(), hyp(0.2, 5.0), hyp(0.2, 5.0)], 0.6, 3.0)
            .unwrap();
        let (r1, r2) = one_parabolic_residuals(&pants_goldman_to_bd(&g).unwrap(), 0.6).unwrap();
        assert!(r1.abs() < 1e-12 && r2.abs() < 1e-12);
    }

    #[test]
    fn second_residual_tracks_lambda_ratio() {
        let (b2, b3) = (hyp(0.2, 5.0), hyp(0.3, 4.0));
        let g = PantsGoldman::new([BoundaryData::parabolic(), b2, b3], 1.3, 2.0).unwrap();
        let (_, r2) = one_parabolic_residuals(&pants_goldman_to_bd(&g).unwrap(), 1.3).unwrap();
        assert!((r2 - (b2.lambda / b3.lambda).ln()).abs() < 1e-12);
    }

    #[test]
    fn quasi_hyperbolic_residual_examples() {
        let q = BoundaryData::new(0.25, 4.0, BoundaryKind::QuasiHyperbolic).unwrap();
        let g = PantsGoldman::new([q, hyp(0.2, 5.0), hyp(0.3, 4.0)], 1.1, 0.9).unwrap();
        assert!(quasi_hyperbolic_residual(&pants_goldman_to_bd(&g).unwrap()).abs() < 1e-12);

        let a1 = hyp(0.1, 7.0);
        let g = PantsGoldman::new([a1, hyp(0.2, 5.0), hyp(0.3, 4.0)], 1.1, 0.9).unwrap();
        let r = quasi_hyperbolic_residual(&pants_goldman_to_bd(&g).unwrap());
        let mu = middle_eigenvalue(&a1).unwrap();
        assert!((r - 2.0 * (mu * a1.lambda.sqrt()).ln()).abs() < 1e-12);
        assert!(r.abs() > 0.1);
    }

    #[test]
    fn torus_gluing_examples() {
        let c = hyp(0.2, 5.0);
        let g = TorusGoldman::new(BoundaryData::parabolic(), c, 2.0, 1.0, 1.0, 0.5).unwrap();
        let bd = torus_goldman_to_bd(&g).unwrap();
        assert_eq!((bd.sigma_c1, bd.sigma_c2), (-0.5, 2.5));
        let g0 = TorusGoldman::new(BoundaryData::parabolic(), c, 2.0, 1.0, 0.0, 0.0).unwrap();
        let bd0 = torus_goldman_to_bd(&g0).unwrap();
        assert_eq!((bd0.sigma_c1, bd0.sigma_c2), (0.0, 0.0));
        assert!(TorusGoldman::new(c, BoundaryData::parabolic(), 1.0, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn torus_parabolic_round_trip() {
        let c = hyp(0.2, 5.0);
        let g = TorusGoldman::new(BoundaryData::parabolic(), c, 2.0, 1.0, 0.0, 0.0).unwrap();
        let bd = torus_goldman_to_bd(&g).unwrap().pants;
        let r = torus_parabolic_recover(bd.sigma1, bd.tplus).unwrap();
        assert!((r.s - 2.0).abs() < 1e-12);
        assert!((r.lambda2 - 0.2).abs() < 1e-12);
        assert!((r.mu2 - middle_eigenvalue(&c).unwrap()).abs() < 1e-12);
        assert!((r.t - 1.0).abs() < 1e-12);
        for i in 0..3 {
            assert!((r.bd.sigma2[i] - bd.sigma2[i]).abs() < 1e-12);
        }
        assert!((r.bd.tminus - bd.tminus).abs() < 1e-12);
        assert!((r.bd.sigma1[1] + r.bd.sigma2[2]).abs() < 1e-15);
        let ln_s2 = 2.0 * r.s.ln();
        assert!((r.bd.sigma1[0] - r.bd.sigma2[0] - ln_s2).abs() < 1e-12);
        assert!((r.bd.sigma1[2] - r.bd.sigma2[1] - ln_s2).abs() < 1e-12);
    }

    #[test]
    fn torus_parabolic_recover_rejects_off_stratum() {
        // λ₂ = e^{1} > 1
        assert!(matches!(
            torus_parabolic_recover([1.0, 0.0, 0.0], 0.0),
            Err(Error::InconsistentStratum { .. })
        ));
    }

    #[test]
    fn codimension_examples() {
        assert_eq!(stratum_codimension(&[H, H, H]), 0);
        assert_eq!(stratum_codimension(&[P, H, H]), 2);
        assert_eq!(stratum_codimension(&[P, P, P]), 6);
        assert_eq!(stratum_codimension(&[Q]), 1);
    }

    #[test]
    fn arities_match_codimension() {
        for s in Stratum::ALL {
            assert_eq!(s.parameter_count() + s.codimension(), 8, "{}", s.name());
        }
    }

    #[test]
    fn wrong_arity_rejected() {
        assert!(matches!(
            recover(Stratum::PantsOneParabolic, &[0.0; 7]),
            Err(Error::WrongArity { expected: 6, found: 7, .. })
        ));
    }

    #[test]
    fn interior_pants_round_trip() {
        let g = PantsGoldman::new([hyp(0.2, 5.0), hyp(0.5, 3.1), hyp(0.05, 9.0)], 1.7, 0.4).unwrap();
        let bd = pants_goldman_to_bd(&g).unwrap();
        let back = pants_bd_to_goldman(&bd).unwrap();
        for i in 0..3 {
            assert!((back.boundaries[i].lambda - g.boundaries[i].lambda).abs() < 1e-12);
            assert!((back.boundaries[i].tau - g.boundaries[i].tau).abs() < 1e-10);
        }
        assert!((back.s - 1.7).abs() < 1e-12 && (back.t - 0.4).abs() < 1e-12);
    }

    #[test]
    fn pinch_path_ends_parabolic() {
        let path = pinch_path(&hyp(0.2, 5.0), 10).unwrap();
        assert_eq!(path.len(), 11);
        assert_eq!(path[0].kind, H);
        assert!((path[0].lambda - 0.2).abs() < 1e-15 && (path[0].tau - 5.0).abs() < 1e-12);
        assert_eq!(*path.last().unwrap(), BoundaryData::parabolic());
        for w in path.windows(2) {
            assert!(w[1].lambda > w[0].lambda && w[1].tau < w[0].tau);
        }
        assert!(pinch_path(&hyp(0.2, 5.0), 0).is_err());
    }

    #[test]
    fn goldman_record_json() {
        let g: GoldmanRecord = serde_json::from_str(
            r#"{"surface":"pants","boundaries":[{"lambda":1,"tau":2,"kind":"parabolic"},
               {"lambda":1,"tau":2,"kind":"parabolic"},{"lambda":1,"tau":2,"kind":"parabolic"}],
               "s":2,"t":1}"#,
        )
        .unwrap();
        assert_eq!(g, GoldmanRecord::Pants(PantsGoldman::all_parabolic(2.0, 1.0).unwrap()));
        let bad = r#"{"surface":"pants","boundaries":[],"s":2,"t":1}"#;
        assert!(serde_json::from_str::<GoldmanRecord>(bad).is_err());
        let torus: GoldmanRecord = serde_json::from_str(
            r#"{"surface":"torus","boundaries":[{"lambda":1,"tau":2,"kind":"parabolic"},
               {"lambda":0.2,"tau":5,"kind":"hyperbolic"}],"s":2,"t":1,"u":1,"v":0.5}"#,
        )
        .unwrap();
        assert!(matches!(torus, GoldmanRecord::Torus(TorusGoldman { u: 1.0, v: 0.5, .. })));
    }
}
