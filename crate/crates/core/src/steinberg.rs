//! Steinberg's formula for the reciprocal growth series, exact series
//! coefficients, and growth rates by Sturm isolation.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::catalog::{enumerate_finite_subsets, CatalogError, ParabolicFamily};
use crate::gram::{classify, ClassifyError, GrowthType};
use crate::matrix::CoxeterMatrix;
use crate::poly::{
    format_significant, CyclotomicProduct, CyclotomicTable, IntPolynomial, PolyError,
    RationalFunction, RootBracket, SturmChain,
};

/// Width of the isolating bracket for the reciprocal growth rate.
pub fn rate_bracket_width() -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 12))
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SteinbergError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the group is finite; use the growth polynomial instead")]
    Elliptic,
    #[error("internal: no root of the numerator in (0, 1) for a non-affine system")]
    NoRootInUnitInterval,
    #[error("internal: affine system whose numerator has smallest root {0} in (0, 1]")]
    AffineRootMismatch(String),
    #[error("|z| = {0} is outside the open unit disk")]
    OutsideDisk(f64),
    #[error("bracket width must be positive")]
    BracketWidth,
}

/// Growth series of a Coxeter system: a polynomial for finite groups,
/// otherwise the reciprocal of Steinberg's sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthSeries {
    Finite(IntPolynomial),
    Infinite(RationalFunction),
}

impl GrowthSeries {
    pub fn coefficients(&self, m_max: usize) -> Result<Vec<BigInt>, PolyError> {
        match self {
            GrowthSeries::Finite(p) => Ok((0..=m_max).map(|i| p.coeff(i)).collect()),
            GrowthSeries::Infinite(r) => r.series_coefficients(m_max),
        }
    }

    pub fn as_rational(&self) -> RationalFunction {
        match self {
            GrowthSeries::Finite(p) => RationalFunction::from_polynomial(p.clone()),
            GrowthSeries::Infinite(r) => r.clone(),
        }
    }
}

impl fmt::Display for GrowthSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthSeries::Finite(p) => write!(f, "{p}"),
            GrowthSeries::Infinite(r) => write!(f, "{r}"),
        }
    }
}

/// The sum `Σ_{T∈𝓕} (−1)^{|T|} z^{d_T} / f_T(z)` in lowest terms, together
/// with the factored denominator.
#[derive(Clone, Debug)]
pub struct SteinbergSum {
    pub function: RationalFunction,
    pub denominator_factors: CyclotomicProduct,
}

fn steinberg_sum(family: &ParabolicFamily) -> SteinbergSum {
    let mut table = CyclotomicTable::new();
    let lcm = family
        .members()
        .iter()
        .fold(CyclotomicProduct::one(), |acc, t| acc.lcm(&t.factors()));
    let mut cofactors: HashMap<Vec<u64>, IntPolynomial> = HashMap::new();
    let mut num = IntPolynomial::zero();
    for t in family.members() {
        let mut key = t.degrees();
        key.sort_unstable();
        let cof = cofactors.entry(key).or_insert_with(|| {
            lcm.checked_div(&t.factors())
                .expect("lcm is divisible by each factor")
                .expand(&mut table)
        });
        let term = cof.shift(t.degree as usize);
        num = if t.set.len() % 2 == 0 {
            &num + &term
        } else {
            &num - &term
        };
    }
    // the denominator is cyclotomic, so cancelling is trial division
    let mut den = lcm.clone();
    for (d, e) in lcm.factors() {
        let phi = table.get(d).clone();
        let mut single = CyclotomicProduct::one();
        single.push(d, 1);
        for _ in 0..e {
            match num.div_exact(&phi) {
                Ok(q) => {
                    num = q;
                    den = den.checked_div(&single).expect("factor present");
                }
                Err(_) => break,
            }
        }
    }
    let den_poly = den.expand(&mut table);
    SteinbergSum {
        function: RationalFunction::from_coprime(num, den_poly),
        denominator_factors: den,
    }
}

/// Reciprocal growth series `F = 1/f` of an infinite Coxeter system.
pub fn steinberg_f(m: &CoxeterMatrix) -> Result<RationalFunction, SteinbergError> {
    Ok(steinberg_factored(m)?.function)
}

pub fn steinberg_factored(m: &CoxeterMatrix) -> Result<SteinbergSum, SteinbergError> {
    let family = enumerate_finite_subsets(m)?;
    if family.contains_full() {
        return Err(SteinbergError::Elliptic);
    }
    Ok(steinberg_sum(&family))
}

pub fn growth_series(m: &CoxeterMatrix) -> Result<GrowthSeries, SteinbergError> {
    let family = enumerate_finite_subsets(m)?;
    if let Some(top) = family.get(crate::subset::GeneratorSet::full(m.rank())) {
        return Ok(GrowthSeries::Finite(top.growth_polynomial()));
    }
    let f = steinberg_sum(&family).function;
    Ok(GrowthSeries::Infinite(RationalFunction::from_coprime(
        f.denominator().clone(),
        f.numerator().clone(),
    )))
}

/// `1/f` for every system: Steinberg's sum when infinite, the inverse
/// growth polynomial when finite.
pub fn reciprocal_series(m: &CoxeterMatrix) -> Result<RationalFunction, SteinbergError> {
    match growth_series(m)? {
        GrowthSeries::Finite(p) => Ok(RationalFunction::from_coprime(IntPolynomial::one(), p)),
        GrowthSeries::Infinite(r) => Ok(RationalFunction::from_coprime(
            r.denominator().clone(),
            r.numerator().clone(),
        )),
    }
}

/// Number of elements of each length `0..=m_max`.
pub fn coefficients(m: &CoxeterMatrix, m_max: usize) -> Result<Vec<BigInt>, SteinbergError> {
    Ok(growth_series(m)?.coefficients(m_max)?)
}

pub fn eval_f(m: &CoxeterMatrix, z: Complex64) -> Result<Complex64, SteinbergError> {
    let r = reciprocal_series(m)?;
    eval_in_disk(&r, z)
}

pub(crate) fn eval_in_disk(
    r: &RationalFunction,
    z: Complex64,
) -> Result<Complex64, SteinbergError> {
    if z.norm() >= 1.0 {
        return Err(SteinbergError::OutsideDisk(z.norm()));
    }
    Ok(r.eval_complex(z))
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Rate {
    ExactlyOne,
    /// `root` isolates `1/ω`; `low..high` is the induced bracket on `ω`.
    Bracket {
        root: RootBracket,
        low: BigRational,
        high: BigRational,
    },
}

impl Rate {
    pub fn approx(&self) -> f64 {
        match self {
            Rate::ExactlyOne => 1.0,
            Rate::Bracket { root, .. } => 1.0 / root.midpoint().to_f64().unwrap_or(f64::NAN),
        }
    }

    /// `ω` to 10 significant digits.
    pub fn decimal(&self) -> String {
        match self {
            Rate::ExactlyOne => "1".into(),
            Rate::Bracket { root, .. } => format_significant(&root.midpoint().recip(), 10),
        }
    }

    pub fn low_decimal(&self) -> String {
        match self {
            Rate::ExactlyOne => "1".into(),
            Rate::Bracket { low, .. } => format_significant(low, 10),
        }
    }

    pub fn high_decimal(&self) -> String {
        match self {
            Rate::ExactlyOne => "1".into(),
            Rate::Bracket { high, .. } => format_significant(high, 10),
        }
    }

    pub fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            Rate::ExactlyOne => (BigRational::one(), BigRational::one()),
            Rate::Bracket { low, high, .. } => (low.clone(), high.clone()),
        }
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rate::ExactlyOne => f.write_str("1 (exact)"),
            Rate::Bracket { .. } => write!(
                f,
                "{} in [{}, {}]",
                self.decimal(),
                self.low_decimal(),
                self.high_decimal()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRateResult {
    pub growth_type: GrowthType,
    pub rate: Rate,
    /// Reduced numerator of `F`, whose smallest positive root is `1/ω`;
    /// absent when `ω = 1`.
    pub numerator: Option<IntPolynomial>,
}

pub fn growth_rate(m: &CoxeterMatrix) -> Result<GrowthRateResult, SteinbergError> {
    growth_rate_with_width(m, &rate_bracket_width())
}

/// As [`growth_rate`], isolating `1/ω` to the given bracket width.
pub fn growth_rate_with_width(
    m: &CoxeterMatrix,
    width: &BigRational,
) -> Result<GrowthRateResult, SteinbergError> {
    if width <= &BigRational::zero() {
        return Err(SteinbergError::BracketWidth);
    }
    let growth_type = classify(m)?;
    let zero = BigRational::zero();
    let one = BigRational::one();
    match growth_type {
        GrowthType::Elliptic => Ok(GrowthRateResult {
            growth_type,
            rate: Rate::ExactlyOne,
            numerator: None,
        }),
        GrowthType::Affine => {
            // cross-check: the numerator's first root in (0, 1] must be 1
            let f = steinberg_f(m)?;
            let chain = SturmChain::new(f.numerator());
            match chain.smallest_root(&zero, &one, &rate_bracket_width()) {
                Some(b) if b.low == one && b.high == one => Ok(GrowthRateResult {
                    growth_type,
                    rate: Rate::ExactlyOne,
                    numerator: None,
                }),
                Some(b) => Err(SteinbergError::AffineRootMismatch(b.refined)),
                None => Err(SteinbergError::AffineRootMismatch("none".into())),
            }
        }
        GrowthType::NonAffine => {
            let f = steinberg_f(m)?;
            let num = f.numerator().clone();
            let chain = SturmChain::new(&num);
            let root = chain
                .smallest_root(&zero, &one, width)
                .ok_or(SteinbergError::NoRootInUnitInterval)?;
            if root.high >= one || root.low <= zero {
                return Err(SteinbergError::NoRootInUnitInterval);
            }
            Ok(GrowthRateResult {
                growth_type,
                rate: Rate::Bracket {
                    low: root.high.recip(),
                    high: root.low.recip(),
                    root,
                },
                numerator: Some(num),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CoxLabel;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| c.try_into().unwrap()).collect()
    }

    fn lab(v: u32) -> CoxLabel {
        CoxLabel::Finite(v)
    }

    #[test]
    fn steinberg_examples() {
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        let f = steinberg_f(&inf).unwrap();
        assert_eq!(
            (f.numerator(), f.denominator()),
            (&p(&[1, -1]), &p(&[1, 1]))
        );
        let all_inf = CoxeterMatrix::uniform(3, CoxLabel::Infinity).unwrap();
        let f = steinberg_f(&all_inf).unwrap();
        assert_eq!(
            (f.numerator(), f.denominator()),
            (&p(&[1, -2]), &p(&[1, 1]))
        );
        let a2 = CoxeterMatrix::dihedral(lab(3)).unwrap();
        assert_eq!(steinberg_f(&a2).unwrap_err(), SteinbergError::Elliptic);
    }

    #[test]
    fn growth_series_examples() {
        let a2 = CoxeterMatrix::dihedral(lab(3)).unwrap();
        assert_eq!(
            growth_series(&a2).unwrap(),
            GrowthSeries::Finite(p(&[1, 2, 2, 1]))
        );
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        let g = growth_series(&inf).unwrap();
        let expected = RationalFunction::new(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert_eq!(g, GrowthSeries::Infinite(expected));
        let a1 = CoxeterMatrix::new(1).unwrap();
        assert_eq!(
            growth_series(&a1).unwrap(),
            GrowthSeries::Finite(p(&[1, 1]))
        );
    }

    #[test]
    fn coefficient_examples() {
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        assert_eq!(
            ints(&coefficients(&inf, 5).unwrap()),
            vec![1, 2, 2, 2, 2, 2]
        );
        let a2 = CoxeterMatrix::dihedral(lab(3)).unwrap();
        assert_eq!(ints(&coefficients(&a2, 4).unwrap()), vec![1, 2, 2, 1, 0]);
        let a1 = CoxeterMatrix::new(1).unwrap();
        assert_eq!(ints(&coefficients(&a1, 2).unwrap()), vec![1, 1, 0]);
    }

    #[test]
    fn rate_examples() {
        let a2 = CoxeterMatrix::dihedral(lab(3)).unwrap();
        assert_eq!(growth_rate(&a2).unwrap().rate, Rate::ExactlyOne);
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        let r = growth_rate(&inf).unwrap();
        assert_eq!(
            (r.growth_type, r.rate),
            (GrowthType::Affine, Rate::ExactlyOne)
        );
        let t = CoxeterMatrix::polygon(&[lab(2), lab(3), lab(7)]).unwrap();
        let r = growth_rate(&t).unwrap();
        let Rate::Bracket { root, .. } = &r.rate else {
            panic!()
        };
        assert!(root.width() <= rate_bracket_width());
        assert!((r.rate.approx() - 1.176281).abs() < 1e-6, "{}", r.rate);
        let all_inf = CoxeterMatrix::uniform(3, CoxLabel::Infinity).unwrap();
        assert_eq!(growth_rate(&all_inf).unwrap().rate.decimal(), "2.000000000");
    }

    #[test]
    fn eval_examples() {
        let inf = CoxeterMatrix::dihedral(CoxLabel::Infinity).unwrap();
        let all_inf = CoxeterMatrix::uniform(3, CoxLabel::Infinity).unwrap();
        let t = CoxeterMatrix::polygon(&[lab(2), lab(3), lab(7)]).unwrap();
        for m in [&inf, &all_inf, &t] {
            assert!((eval_f(m, Complex64::new(0.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        }
        assert!((eval_f(&inf, Complex64::new(0.5, 0.0)).unwrap().re - 1.0 / 3.0).abs() < 1e-15);
        assert!((eval_f(&all_inf, Complex64::new(0.25, 0.0)).unwrap().re - 0.4).abs() < 1e-15);
        assert!(matches!(
            eval_f(&inf, Complex64::new(0.0, 1.0)),
            Err(SteinbergError::OutsideDisk(_))
        ));
    }
}
