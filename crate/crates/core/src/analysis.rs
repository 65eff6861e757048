//! Complex roots of integer polynomials and a numerical Salem / Pisot test
//! for growth rates.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gram::{classify, ClassifyError, GrowthType};
use crate::matrix::CoxeterMatrix;
use crate::poly::{euler_phi, CyclotomicTable, IntPolynomial};
use crate::steinberg::{growth_rate, Rate, SteinbergError};
use crate::sweep::{format_f64, FamilyMember};

pub const DEFAULT_TOL: f64 = 1e-8;
const MAX_ITERATIONS: usize = 1000;
const ROOT_RESIDUAL: f64 = 1e-12;
const PROFILE_RESIDUAL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("polynomial of degree < 1 has no roots to find")]
    Constant,
    #[error("root iteration did not converge; {} partial roots", partial.len())]
    NoConvergence { partial: Vec<Complex64> },
    #[error("root {root} has residual {residual:e} above the bound")]
    Residual { root: Complex64, residual: f64 },
    #[error("classification needs a non-affine system, got {0}")]
    NotNonAffine(GrowthType),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Steinberg(#[from] SteinbergError),
    #[error("empty family")]
    EmptyFamily,
    #[error("tolerance {0} must be positive and below 0.1")]
    Tolerance(f64),
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// `Σ |c_i| |z|^i`, the natural scale for the residual at `z`.
fn magnitude(c: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs())
}

fn relative_residual(c: &[f64], z: Complex64) -> f64 {
    let scale = magnitude(c, z);
    if scale == 0.0 {
        0.0
    } else {
        horner(c, z).0.norm() / scale
    }
}

/// All complex roots with multiplicity, by Aberth–Ehrlich simultaneous
/// iteration followed by Newton polishing.
pub fn all_roots(p: &IntPolynomial) -> Result<Vec<Complex64>, AnalysisError> {
    let deg = p
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(AnalysisError::Constant)?;
    let low = p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut roots = vec![Complex64::new(0.0, 0.0); low];
    let c: Vec<f64> = p.coeffs()[low..]
        .iter()
        .map(|a| a.to_f64().unwrap_or(f64::NAN))
        .collect();
    let n = deg - low;
    if n == 0 {
        return Ok(roots);
    }
    let lead = c[n];
    let c: Vec<f64> = c.iter().map(|a| a / lead).collect();
    let radius = c[0].abs().powf(1.0 / n as f64).max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (pv, dpv) = horner(&c, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..5 {
            let (pv, dpv) = horner(&c, *r);
            let step = pv / dpv;
            if !step.is_finite() || step.norm() == 0.0 {
                break;
            }
            let cand = *r - step;
            if relative_residual(&c, cand) <= relative_residual(&c, *r) {
                *r = cand;
            } else {
                break;
            }
        }
    }
    // clustered roots may stall the step test yet still meet the residual bound
    if z.iter().any(|&r| relative_residual(&c, r) > ROOT_RESIDUAL) {
        return Err(AnalysisError::NoConvergence { partial: z });
    }
    roots.extend(z);
    roots.sort_by(|a, b| {
        b.norm()
            .total_cmp(&a.norm())
            .then(b.re.total_cmp(&a.re))
            .then(b.im.total_cmp(&a.im))
    });
    Ok(roots)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    Salem,
    Pisot,
    Neither,
    Undetermined,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Salem => "Salem",
            Classification::Pisot => "Pisot",
            Classification::Neither => "Neither",
            Classification::Undetermined => "Undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootInfo {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraicProfile {
    /// `ω` to 10 significant digits.
    pub candidate: String,
    #[serde(skip)]
    pub omega: f64,
    /// Reciprocal numerator with cyclotomic factors removed; `ω` is a root.
    #[serde(serialize_with = "poly_as_string")]
    pub polynomial: IntPolynomial,
    /// Cyclotomic factors `(d, multiplicity)` divided out.
    pub stripped: Vec<(u64, u32)>,
    pub roots: Vec<RootInfo>,
    pub classification: Classification,
    pub tolerance: f64,
    /// Largest `||r| − 1|` over the roots other than `ω` and its reciprocal.
    pub max_unit_circle_deviation: f64,
}

fn poly_as_string<S: serde::Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Removes every factor `Φ_d`, `d ≤ 2·deg`, by exact division.
pub fn strip_cyclotomic(p: &IntPolynomial) -> (IntPolynomial, Vec<(u64, u32)>) {
    let mut table = CyclotomicTable::new();
    let mut rest = p.clone();
    let mut stripped = Vec::new();
    let deg = p.degree().unwrap_or(0) as u64;
    for d in 1..=2 * deg {
        if euler_phi(d) > rest.degree().unwrap_or(0) as u64 {
            continue;
        }
        let phi = table.get(d).clone();
        let mut k = 0;
        while rest.degree().unwrap_or(0) > 0 {
            match rest.div_exact(&phi) {
                Ok(q) => {
                    rest = q;
                    k += 1;
                }
                Err(_) => break,
            }
        }
        if k > 0 {
            stripped.push((d, k));
        }
    }
    (rest, stripped)
}

/// Verdict from the roots of a polynomial having `ω > 1` as a root.
pub fn classify_roots(roots: &[Complex64], omega: f64, tol: f64) -> (Classification, f64) {
    let is_omega = |r: &Complex64| r.im.abs() <= tol && (r.re - omega).abs() <= tol * omega;
    let is_recip = |r: &Complex64| r.im.abs() <= tol && (r.re * omega - 1.0).abs() <= tol;
    let outside: Vec<&Complex64> = roots.iter().filter(|r| r.norm() > 1.0 + tol).collect();
    let omega_ok = outside.len() == 1 && is_omega(outside[0]);
    let others: Vec<&Complex64> = {
        let mut skipped_omega = false;
        roots
            .iter()
            .filter(|r| {
                if !skipped_omega && is_omega(r) {
                    skipped_omega = true;
                    return false;
                }
                true
            })
            .collect()
    };
    let inside: Vec<&&Complex64> = others.iter().filter(|r| r.norm() < 1.0 - tol).collect();
    let near: Vec<&&Complex64> = others
        .iter()
        .filter(|r| (r.norm() - 1.0).abs() <= tol)
        .collect();
    let partner_present = inside.len() == 1 && is_recip(inside[0]);
    let deviation = others
        .iter()
        .filter(|r| !(partner_present && is_recip(r)))
        .map(|r| (r.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    if omega_ok && inside.len() == others.len() {
        return (Classification::Pisot, deviation);
    }
    if omega_ok && partner_present && !near.is_empty() && inside.len() + near.len() == others.len()
    {
        return (Classification::Salem, deviation);
    }
    if !near.is_empty() {
        (Classification::Undetermined, deviation)
    } else {
        (Classification::Neither, deviation)
    }
}

pub fn classify_algebraic(m: &CoxeterMatrix, tol: f64) -> Result<AlgebraicProfile, AnalysisError> {
    if !(tol > 0.0 && tol < 0.1) {
        return Err(AnalysisError::Tolerance(tol));
    }
    let growth_type = classify(m)?;
    if growth_type != GrowthType::NonAffine {
        return Err(AnalysisError::NotNonAffine(growth_type));
    }
    let rate = growth_rate(m)?;
    let numerator = rate.numerator.expect("non-affine rates carry a numerator");
    let reciprocal = numerator.reversed().primitive();
    let (polynomial, stripped) = strip_cyclotomic(&reciprocal);
    let omega = rate.rate.approx();
    let c = polynomial.to_f64_coeffs();
    let found = all_roots(&polynomial)?;
    let mut roots = Vec::with_capacity(found.len());
    for &r in &found {
        let residual = relative_residual(&c, r);
        if residual > PROFILE_RESIDUAL {
            return Err(AnalysisError::Residual { root: r, residual });
        }
        roots.push(RootInfo {
            re: r.re,
            im: r.im,
            modulus: r.norm(),
            residual,
        });
    }
    let (classification, max_unit_circle_deviation) = classify_roots(&found, omega, tol);
    Ok(AlgebraicProfile {
        candidate: rate.rate.decimal(),
        omega,
        polynomial,
        stripped,
        roots,
        classification,
        tolerance: tol,
        max_unit_circle_deviation,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRow {
    pub index: usize,
    pub label_params: String,
    pub growth_type: GrowthType,
    pub rate: String,
    /// `None` for members that are not non-affine.
    pub profile: Option<AlgebraicProfile>,
}

impl ExperimentRow {
    pub fn verdict(&self) -> String {
        match &self.profile {
            Some(p) => p.classification.to_string(),
            None => self.growth_type.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub tolerance: f64,
    pub rows: Vec<ExperimentRow>,
    /// First index classified Pisot right after a Salem member.
    pub transition: Option<usize>,
}

/// Classifies every family member (the limit last) and locates the
/// Salem-to-Pisot switch.
pub fn pisot_limit_experiment(
    members: &[FamilyMember],
    param_name: &str,
    tol: f64,
) -> Result<ExperimentReport, AnalysisError> {
    if members.is_empty() {
        return Err(AnalysisError::EmptyFamily);
    }
    let rows = members
        .par_iter()
        .enumerate()
        .map(|(index, f)| {
            let growth_type = classify(&f.matrix)?;
            let label_params = format!(
                "{param_name}={}",
                f.param.map_or("inf".to_string(), |p| p.to_string())
            );
            let (rate, profile) = if growth_type == GrowthType::NonAffine {
                let p = classify_algebraic(&f.matrix, tol)?;
                (p.candidate.clone(), Some(p))
            } else {
                (Rate::ExactlyOne.decimal(), None)
            };
            Ok(ExperimentRow {
                index,
                label_params,
                growth_type,
                rate,
                profile,
            })
        })
        .collect::<Result<Vec<_>, AnalysisError>>()?;
    let class = |r: &ExperimentRow| r.profile.as_ref().map(|p| p.classification);
    let transition = (1..rows.len()).find(|&i| {
        class(&rows[i]) == Some(Classification::Pisot)
            && class(&rows[i - 1]) == Some(Classification::Salem)
    });
    Ok(ExperimentReport {
        tolerance: tol,
        rows,
        transition,
    })
}

impl ExperimentReport {
    /// CSV `index,label_params,rate,classification,max_unit_circle_deviation`
    /// preceded by a comment line stating the evidential status.
    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# numerical evidence at tolerance {}, not a proof\n",
            format_f64(self.tolerance)
        );
        out.push_str("index,label_params,rate,classification,max_unit_circle_deviation\n");
        for r in &self.rows {
            let dev = r
                .profile
                .as_ref()
                .map_or(String::new(), |p| format_f64(p.max_unit_circle_deviation));
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.index,
                r.label_params,
                r.rate,
                r.verdict(),
                dev
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
