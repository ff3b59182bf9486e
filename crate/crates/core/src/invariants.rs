//! Triangle invariant of a flag triple and the two double ratios of a flag
//! quadruple, with their logarithms (the Bonahon-Dreyer triangle and shear
//! coordinates).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rp2::{pairing13, require_generic, triple_det, Flag};

/// Default genericity tolerance, applied to determinants of unit representatives.
pub const DEFAULT_GENERIC_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TripleRatio {
    pub value: f64,
}

impl TripleRatio {
    pub fn ln(&self) -> Result<f64> {
        positive_ln(self.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DoubleRatios {
    pub d1: f64,
    pub d2: f64,
}

impl DoubleRatios {
    pub fn get(&self, index: ShearIndex) -> f64 {
        match index {
            ShearIndex::First => self.d1,
            ShearIndex::Second => self.d2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShearIndex {
    First,
    Second,
}

fn positive_ln(value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value.ln())
    } else {
        Err(Error::NonPositiveRatio { value })
    }
}

fn nonzero(x: f64, what: &str) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        Err(Error::NonGenericFlags(format!("pairing {what} vanishes")))
    } else {
        Ok(x)
    }
}

pub fn triple_ratio(e: &Flag, f: &Flag, g: &Flag) -> Result<TripleRatio> {
    triple_ratio_with_tol(e, f, g, DEFAULT_GENERIC_TOL)
}

/// `T(E,F,G) = (e²∧f¹)/(f¹∧g²) · (e¹∧g²)/(e¹∧f²) · (f²∧g¹)/(e²∧g¹)`.
pub fn triple_ratio_with_tol(e: &Flag, f: &Flag, g: &Flag, tol: f64) -> Result<TripleRatio> {
    require_generic(&[e, f, g], tol)?;
    let (ep, fp, gp) = (e.point(), f.point(), g.point());
    let (el, fl, gl) = (e.line(), f.line(), g.line());

    let e2f1 = pairing13(fp, el);
    let f1g2 = nonzero(pairing13(fp, gl), "f1^g2")?;
    let e1g2 = pairing13(ep, gl);
    let e1f2 = nonzero(pairing13(ep, fl), "e1^f2")?;
    let f2g1 = pairing13(gp, fl);
    let e2g1 = nonzero(pairing13(gp, el), "e2^g1")?;

    // alternate multiply and divide so intermediates stay near unit scale
    let value = e2f1 / f1g2 * e1g2 / e1f2 * f2g1 / e2g1;
    Ok(TripleRatio { value })
}

/// `τ₁₁₁ = log T(E,F,G)`.
pub fn tau111(e: &Flag, f: &Flag, g: &Flag) -> Result<f64> {
    triple_ratio(e, f, g)?.ln()
}

pub fn double_ratios(e: &Flag, f: &Flag, g: &Flag, l: &Flag) -> Result<DoubleRatios> {
    double_ratios_with_tol(e, f, g, l, DEFAULT_GENERIC_TOL)
}

/// `D₁ = −(e¹∧f¹∧g¹)/(e¹∧f¹∧l¹) · (f²∧l¹)/(f²∧g¹)` and
/// `D₂ = −(e²∧g¹)/(e²∧l¹) · (e¹∧f¹∧l¹)/(e¹∧f¹∧g¹)`.
pub fn double_ratios_with_tol(
    e: &Flag,
    f: &Flag,
    g: &Flag,
    l: &Flag,
    tol: f64,
) -> Result<DoubleRatios> {
    require_generic(&[e, f, g, l], tol)?;
    let (ep, fp, gp, lp) = (e.point(), f.point(), g.point(), l.point());

    let efg = nonzero(triple_det(ep, fp, gp), "e1^f1^g1")?;
    let efl = nonzero(triple_det(ep, fp, lp), "e1^f1^l1")?;
    let f2l1 = pairing13(lp, f.line());
    let f2g1 = nonzero(pairing13(gp, f.line()), "f2^g1")?;
    let e2g1 = pairing13(gp, e.line());
    let e2l1 = nonzero(pairing13(lp, e.line()), "e2^l1")?;

    let d1 = -(efg / efl * f2l1 / f2g1);
    let d2 = -(e2g1 / e2l1 * efl / efg);
    Ok(DoubleRatios { d1, d2 })
}

/// `σᵢ = log Dᵢ(E,F,G,L)`.
pub fn shear(e: &Flag, f: &Flag, g: &Flag, l: &Flag, index: ShearIndex) -> Result<f64> {
    positive_ln(double_ratios(e, f, g, l)?.get(index))
}

/// Both shears at once.
pub fn shears(e: &Flag, f: &Flag, g: &Flag, l: &Flag) -> Result<(f64, f64)> {
    let d = double_ratios(e, f, g, l)?;
    Ok((positive_ln(d.d1)?, positive_ln(d.d2)?))
}
