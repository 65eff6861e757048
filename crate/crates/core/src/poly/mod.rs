//! Exact polynomial arithmetic over arbitrary-precision integers.

mod cyclotomic;
mod rational;
mod sturm;

pub use cyclotomic::{cyclotomic, euler_phi, CyclotomicProduct, CyclotomicTable};
pub use rational::RationalFunction;
pub use sturm::{format_significant, RootBracket, SturmChain};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("denominator vanishes at z = 0")]
    DenominatorVanishesAtZero,
    #[error("series coefficient {index} is not an integer")]
    NonIntegralSeries { index: usize },
    #[error("bracket part must be at least 1, got {0}")]
    BracketPart(u64),
}

/// Dense integer polynomial, coefficients in ascending degree, trailing
/// zeros trimmed. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + z + … + z^{m-1}`.
    pub fn geometric(m: usize) -> Self {
        Self::new(vec![BigInt::one(); m])
    }

    /// The bracket polynomial `[m_1; …; m_k] = ∏ (1 + z + … + z^{m_i - 1})`.
    pub fn bracket(parts: &[u64]) -> Result<Self, PolyError> {
        let mut acc = Self::one();
        for &m in parts {
            if m < 1 {
                return Err(PolyError::BracketPart(m));
            }
            acc = &acc * &Self::geometric(m as usize);
        }
        Ok(acc)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    fn div_scalar(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `z^{deg p} p(1/z)`: the coefficient sequence reversed.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `z^{deg f} f(1/z) = f(z)`.
    pub fn is_palindromic(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.coeffs.iter().eq(self.coeffs.iter().rev()))
    }

    /// Exact division; fails unless `divisor` divides `self` in `Z[z]`.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem_integral(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    /// True when `divisor` divides `self` in `Z[z]`.
    pub fn is_divisible_by(&self, divisor: &IntPolynomial) -> bool {
        matches!(self.div_rem_integral(divisor), Ok((_, r)) if r.is_zero())
    }

    /// Long division staying in `Z[z]`; stops early (returning a nonzero
    /// remainder) as soon as a quotient coefficient would be fractional.
    fn div_rem_integral(&self, divisor: &IntPolynomial) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::ZeroDivisor)?;
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Ok((Self::zero(), Self::one()));
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Pseudo-remainder `lc(b)^δ · a mod b` with `δ = deg a − deg b + 1`.
    /// Returns the remainder and whether the multiplier `lc(b)^δ` is negative.
    pub fn pseudo_rem(&self, b: &IntPolynomial) -> Result<(Self, bool), PolyError> {
        let db = b.degree().ok_or(PolyError::ZeroDivisor)?;
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), false));
        };
        if da < db {
            return Ok((self.clone(), false));
        }
        let delta = da - db + 1;
        let lc = b.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut steps = 0;
        let mut top = r.len();
        while top > db {
            let lead = r[top - 1].clone();
            for c in r.iter_mut().take(top) {
                *c *= &lc;
            }
            if !lead.is_zero() {
                let off = top - 1 - db;
                for (i, c) in b.coeffs.iter().enumerate() {
                    r[off + i] -= &lead * c;
                }
            }
            steps += 1;
            top -= 1;
        }
        debug_assert_eq!(steps, delta);
        r.truncate(db);
        let rem = Self::new(r);
        let negative = lc.is_negative() && delta % 2 == 1;
        Ok((rem, negative))
    }

    /// Greatest common divisor over `Q[z]`, returned primitive with a
    /// positive leading coefficient (`gcd(0, 0) = 0`).
    pub fn gcd(&self, other: &IntPolynomial) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.pseudo_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive();
        }
        if a.degree() == Some(0) {
            return Self::one();
        }
        a
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides")
            .primitive()
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from(c.clone())
            })
    }

    pub fn eval_integer(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)` for rational `x`, computed in integers by
    /// homogenizing at the denominator.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(n) = self.degree() else {
            return Ordering::Equal;
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = self.coeffs[n].clone();
        let mut bpow = BigInt::one();
        for i in (0..n).rev() {
            bpow *= b;
            acc = acc * a + &self.coeffs[i] * &bpow;
        }
        // the homogenizing factor b^n is positive
        acc.sign().cmp_zero()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// Degree-ascending JSON integer array.
    pub fn to_json_array(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

fn to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

trait SignExt {
    fn cmp_zero(self) -> Ordering;
}

impl SignExt for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders as `c0 + c1*z + c2*z^2 + …`, skipping zero terms and unit
/// coefficients.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("z")?,
                1 => write!(f, "{mag}*z")?,
                _ if unit => write!(f, "z^{i}")?,
                _ => write!(f, "{mag}*z^{i}")?,
            }
        }
        Ok(())
    }
}
