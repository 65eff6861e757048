use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntPolynomial, PolyError};

/// A reduced quotient of integer polynomials: `gcd(num, den) = 1`, the
/// combined content is 1 and the denominator's lowest nonzero coefficient
/// is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::reduce_parts(num, den))
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    /// Builds from parts the caller has already made coprime; only the
    /// content and sign normalization are applied.
    pub(crate) fn from_coprime(num: IntPolynomial, den: IntPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        normalize_content(num, den)
    }

    fn reduce_parts(num: IntPolynomial, den: IntPolynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: IntPolynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        } else {
            (num, den)
        };
        normalize_content(num, den)
    }

    /// Re-applies the full reduction (idempotent on reduced values).
    pub fn reduce(&self) -> Self {
        Self::reduce_parts(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::reduce_parts(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce_parts(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x);
        (!d.is_zero()).then(|| self.num.eval_rational(x) / d)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }

    /// Taylor coefficients `a(0..=m_max)` at `z = 0`, from the recurrence
    /// `den(0)·a(k) = num_k − Σ_{i≥1} den_i·a(k−i)`.
    pub fn series_coefficients(&self, m_max: usize) -> Result<Vec<BigInt>, PolyError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(PolyError::DenominatorVanishesAtZero);
        }
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(m_max + 1);
        for k in 0..=m_max {
            let mut acc = self.num.coeff(k);
            for i in 1..den.len().min(k + 1) {
                acc -= &den[i] * &out[k - i];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(PolyError::NonIntegralSeries { index: k });
            }
            out.push(q);
        }
        Ok(out)
    }
}

fn normalize_content(num: IntPolynomial, den: IntPolynomial) -> RationalFunction {
    let mut c = num.content().gcd(&den.content());
    // power-series convention: the lowest nonzero denominator coefficient is positive
    if den
        .coeffs()
        .iter()
        .find(|a| !a.is_zero())
        .is_some_and(|l| l.is_negative())
    {
        c = -c;
    }
    if c.is_one() {
        return RationalFunction { num, den };
    }
    RationalFunction {
        num: div_all(&num, &c),
        den: div_all(&den, &c),
    }
}

fn div_all(p: &IntPolynomial, c: &BigInt) -> IntPolynomial {
    IntPolynomial::new(p.coeffs().iter().map(|a| a / c).collect())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn add_examples() {
        let one = rf(&[1], &[1]);
        let term = rf(&[0, -2], &[1, 1]);
        assert_eq!(one.add(&term), rf(&[1, -1], &[1, 1]));
        let zero = rf(&[], &[1]);
        assert_eq!(term.add(&zero), term);
    }

    #[test]
    fn reduce_examples() {
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(r.numerator(), &p(&[-1, 1]));
        assert_eq!(r.denominator(), &p(&[1]));
        let r = RationalFunction::new(p(&[2, 4]), p(&[-6, 0, -6])).unwrap();
        assert_eq!(r.numerator(), &p(&[-1, -2]));
        assert_eq!(r.denominator(), &p(&[3, 0, 3]));
        assert_eq!(r.reduce(), r);
        assert_eq!(
            RationalFunction::new(p(&[1]), IntPolynomial::zero()).unwrap_err(),
            PolyError::ZeroDenominator
        );
    }

    #[test]
    fn series_examples() {
        let f = rf(&[1, 1], &[1, -1]);
        let a: Vec<i64> = f
            .series_coefficients(4)
            .unwrap()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(a, vec![1, 2, 2, 2, 2]);
        let poly = RationalFunction::from_polynomial(p(&[1, 2, 2, 1]));
        let a = poly.series_coefficients(5).unwrap();
        assert_eq!(a, [1, 2, 2, 1, 0, 0].map(BigInt::from).to_vec());
        let unit = RationalFunction::from_polynomial(IntPolynomial::one());
        assert_eq!(
            unit.series_coefficients(2).unwrap(),
            [1, 0, 0].map(BigInt::from).to_vec()
        );
        assert_eq!(
            rf(&[1], &[0, 1]).series_coefficients(3).unwrap_err(),
            PolyError::DenominatorVanishesAtZero
        );
        assert_eq!(
            rf(&[1], &[2, 1]).series_coefficients(3).unwrap_err(),
            PolyError::NonIntegralSeries { index: 0 }
        );
    }

    #[test]
    fn evaluation() {
        let f = rf(&[1, -1], &[1, 1]);
        let v = f
            .eval_rational(&BigRational::new(1.into(), 2.into()))
            .unwrap();
        assert_eq!(v, BigRational::new(1.into(), 3.into()));
        let z = f.eval_complex(Complex64::new(0.5, 0.0));
        assert!((z.re - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(f.to_string(), "(1 - z) / (1 + z)");
    }
}
