//! Parameter sweeps over families of Coxeter matrices: growth rates along
//! deformations, polygon and contractible-edge families, and sampled
//! deviations of the reciprocal growth series on a disk.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::matrix::{ContractibleEdgeSpec, CoxLabel, CoxeterMatrix, MatrixError};
use crate::poly::format_significant;
use crate::steinberg::{
    eval_in_disk, growth_rate, reciprocal_series, GrowthRateResult, SteinbergError,
};

pub const DEFAULT_L_LIST: [u32; 5] = [6, 12, 24, 48, 96];
pub const DEFAULT_RHO: f64 = 0.9;
/// Smallest deformation parameter accepted by the normal-convergence sweep.
pub const MIN_NORMAL_L: u32 = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SweepError {
    #[error(transparent)]
    Steinberg(#[from] SteinbergError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("matrix has no infinite entry; the deformation is constant")]
    NoInfinity,
    #[error("parameter {l} is below the minimum {min}")]
    ParameterTooSmall { l: u32, min: u32 },
    #[error("radius {0} must lie in (0, 1)")]
    Radius(f64),
    #[error("empty family")]
    EmptyFamily,
    #[error("sample grid must have at least one radius and one angle")]
    EmptyGrid,
    #[error("polygon template has no varying angle")]
    NoVaryingAngle,
}

/// Polar sample grid: radii `rho·k/radii` for `k = 1..=radii`, equally
/// spaced angles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepGrid {
    pub radii: usize,
    pub angles: usize,
}

impl Default for SweepGrid {
    fn default() -> Self {
        SweepGrid {
            radii: 16,
            angles: 64,
        }
    }
}

impl SweepGrid {
    pub fn points(&self, rho: f64) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.radii * self.angles);
        for k in 1..=self.radii {
            let r = rho * k as f64 / self.radii as f64;
            for j in 0..self.angles {
                out.push(Complex64::from_polar(
                    r,
                    2.0 * PI * j as f64 / self.angles as f64,
                ));
            }
        }
        out
    }
}

/// A family member; `param = None` marks the limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub param: Option<u32>,
    pub matrix: CoxeterMatrix,
}

pub fn deform_family(m: &CoxeterMatrix, l_list: &[u32]) -> Result<Vec<FamilyMember>, SweepError> {
    let mut out = Vec::with_capacity(l_list.len() + 1);
    for &l in l_list {
        out.push(FamilyMember {
            param: Some(l),
            matrix: m.deform(l)?,
        });
    }
    out.push(FamilyMember {
        param: None,
        matrix: m.clone(),
    });
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleSlot {
    Fixed(CoxLabel),
    Varying,
}

/// Parses `2,3,l` style templates; `l` marks the varying angles.
pub fn parse_polygon_template(s: &str) -> Result<Vec<AngleSlot>, MatrixError> {
    s.split(',')
        .map(|t| match t.trim() {
            "l" | "L" => Ok(AngleSlot::Varying),
            t => t.parse::<CoxLabel>().map(AngleSlot::Fixed),
        })
        .collect()
}

/// Polygon groups with every varying angle set to each parameter, followed
/// by the limit with those angles ideal.
pub fn polygon_family(
    slots: &[AngleSlot],
    params: &[u32],
) -> Result<Vec<FamilyMember>, SweepError> {
    if !slots.contains(&AngleSlot::Varying) {
        return Err(SweepError::NoVaryingAngle);
    }
    let build = |label: CoxLabel| -> Result<CoxeterMatrix, MatrixError> {
        let angles: Vec<CoxLabel> = slots
            .iter()
            .map(|s| match s {
                AngleSlot::Fixed(a) => *a,
                AngleSlot::Varying => label,
            })
            .collect();
        CoxeterMatrix::polygon(&angles)
    };
    let mut out = Vec::with_capacity(params.len() + 1);
    for &l in params {
        out.push(FamilyMember {
            param: Some(l),
            matrix: build(CoxLabel::finite(l as u64)?)?,
        });
    }
    out.push(FamilyMember {
        param: None,
        matrix: build(CoxLabel::Infinity)?,
    });
    Ok(out)
}

/// Members `P_m` of a contractible-edge family and the contracted limit.
pub fn edge_family_members(
    base: &CoxeterMatrix,
    spec: &ContractibleEdgeSpec,
    params: &[u32],
) -> Result<Vec<FamilyMember>, SweepError> {
    let mut out = Vec::with_capacity(params.len() + 1);
    for &m in params {
        out.push(FamilyMember {
            param: Some(m),
            matrix: base.edge_family(spec, CoxLabel::finite(m as u64)?)?,
        });
    }
    out.push(FamilyMember {
        param: None,
        matrix: base.edge_family(spec, CoxLabel::Infinity)?,
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub param: Option<u32>,
    pub rate: GrowthRateResult,
    pub sup_dev: Option<f64>,
}

/// Growth rate of every member, computed in parallel, in family order.
pub fn family_rates(members: &[FamilyMember]) -> Result<Vec<SweepRow>, SweepError> {
    if members.is_empty() {
        return Err(SweepError::EmptyFamily);
    }
    members
        .par_iter()
        .map(|f| {
            Ok(SweepRow {
                param: f.param,
                rate: growth_rate(&f.matrix)?,
                sup_dev: None,
            })
        })
        .collect()
}

/// `ω(M(l))` for each `l`, then the limit `ω(M)`.
pub fn rate_convergence_sweep(
    m: &CoxeterMatrix,
    l_list: &[u32],
) -> Result<Vec<SweepRow>, SweepError> {
    if let Some(&l) = l_list.iter().find(|&&l| l < 2) {
        return Err(SweepError::ParameterTooSmall { l, min: 2 });
    }
    family_rates(&deform_family(m, l_list)?)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalRow {
    pub l: u32,
    pub sup_dev: f64,
}

/// Sup over the sample grid of `|F_{M(l)}(z) − F_M(z)|` for each `l`.
pub fn normal_convergence_sweep(
    m: &CoxeterMatrix,
    rho: f64,
    grid: SweepGrid,
    l_list: &[u32],
) -> Result<Vec<NormalRow>, SweepError> {
    if !m.has_infinity() {
        return Err(SweepError::NoInfinity);
    }
    if !(rho > 0.0 && rho < 1.0) {
        return Err(SweepError::Radius(rho));
    }
    if grid.radii == 0 || grid.angles == 0 {
        return Err(SweepError::EmptyGrid);
    }
    if let Some(&l) = l_list.iter().find(|&&l| l < MIN_NORMAL_L) {
        return Err(SweepError::ParameterTooSmall {
            l,
            min: MIN_NORMAL_L,
        });
    }
    let points = grid.points(rho);
    let limit = reciprocal_series(m)?;
    let base: Vec<Complex64> = points
        .iter()
        .map(|&z| eval_in_disk(&limit, z))
        .collect::<Result<_, _>>()?;
    l_list
        .par_iter()
        .map(|&l| {
            let fl = reciprocal_series(&m.deform(l)?)?;
            let mut sup = 0.0f64;
            for (z, b) in points.iter().zip(&base) {
                sup = sup.max((eval_in_disk(&fl, *z)? - b).norm());
            }
            Ok(NormalRow { l, sup_dev: sup })
        })
        .collect()
}

/// Rate sweep along `M(l)` with the sampled deviation attached to each
/// finite-parameter row.
pub fn combined_sweep(
    m: &CoxeterMatrix,
    rho: f64,
    grid: SweepGrid,
    l_list: &[u32],
) -> Result<Vec<SweepRow>, SweepError> {
    let normal = normal_convergence_sweep(m, rho, grid, l_list)?;
    let mut rows = rate_convergence_sweep(m, l_list)?;
    for (row, n) in rows.iter_mut().zip(&normal) {
        row.sup_dev = Some(n.sup_dev);
    }
    Ok(rows)
}

/// An `f64` to 10 significant digits, exactly rounded.
pub fn format_f64(x: f64) -> String {
    match BigRational::from_float(x) {
        Some(q) => format_significant(&q, 10),
        None => x.to_string(),
    }
}

/// CSV with columns `l,rate_low,rate_high,rate_decimal[,sup_dev]`; the
/// limit row has `l = inf`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let with_dev = rows.iter().any(|r| r.sup_dev.is_some());
    let mut out = String::from("l,rate_low,rate_high,rate_decimal");
    if with_dev {
        out.push_str(",sup_dev");
    }
    out.push('\n');
    for r in rows {
        let l = r.param.map_or("inf".to_string(), |l| l.to_string());
        let rate = &r.rate.rate;
        out.push_str(&format!(
            "{l},{},{},{}",
            rate.low_decimal(),
            rate.high_decimal(),
            rate.decimal()
        ));
        if with_dev {
            out.push(',');
            if let Some(d) = r.sup_dev {
                out.push_str(&format_f64(d));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(v: u32) -> CoxLabel {
        CoxLabel::Finite(v)
    }

    #[test]
    fn grid_shape() {
        let pts = SweepGrid::default().points(0.9);
        assert_eq!(pts.len(), 16 * 64);
        let max = pts.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!((max - 0.9).abs() < 1e-15);
    }

    #[test]
    fn normal_sweep_requires_infinity() {
        let t = CoxeterMatrix::polygon(&[lab(2), lab(3), lab(7)]).unwrap();
        assert_eq!(
            normal_convergence_sweep(&t, 0.9, SweepGrid::default(), &[6]),
            Err(SweepError::NoInfinity)
        );
    }

    #[test]
    fn normal_sweep_dihedral_decreases() {
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        let rows = normal_convergence_sweep(&inf, 0.9, SweepGrid::default(), &[6, 12, 24]).unwrap();
        assert!(
            rows.windows(2).all(|w| w[1].sup_dev < w[0].sup_dev),
            "{rows:?}"
        );
    }

    #[test]
    fn polygon_template() {
        let slots = parse_polygon_template("2,3,l").unwrap();
        let fam = polygon_family(&slots, &[7, 8]).unwrap();
        assert_eq!(fam.len(), 3);
        assert_eq!(
            fam[0].matrix,
            CoxeterMatrix::polygon(&[lab(2), lab(3), lab(7)]).unwrap()
        );
        assert_eq!(fam[2].param, None);
        assert!(fam[2].matrix.has_infinity());
        assert_eq!(
            polygon_family(&parse_polygon_template("2,3,7").unwrap(), &[7]),
            Err(SweepError::NoVaryingAngle)
        );
    }

    #[test]
    fn constant_family_has_constant_rates() {
        let t = CoxeterMatrix::polygon(&[lab(2), lab(3), lab(7)]).unwrap();
        let rows = rate_convergence_sweep(&t, &[6, 12]).unwrap();
        assert!(rows.windows(2).all(|w| w[0].rate == w[1].rate));
        let csv = sweep_csv(&rows);
        assert!(csv.starts_with("l,rate_low,rate_high,rate_decimal\n6,"));
        assert!(csv.lines().last().unwrap().starts_with("inf,"));
    }
}
