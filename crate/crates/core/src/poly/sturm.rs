//! Sturm chains over the integers and real-root isolation on rational
//! intervals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;

/// An isolating interval `[low, high]` for one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBracket {
    pub low: BigRational,
    pub high: BigRational,
    /// Midpoint to 10 significant digits.
    pub refined: String,
}

impl RootBracket {
    fn new(low: BigRational, high: BigRational) -> Self {
        let mid = (&low + &high) / BigRational::from_integer(2.into());
        RootBracket {
            refined: format_significant(&mid, 10),
            low,
            high,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.high - &self.low
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.low + &self.high) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.low <= x && x <= &self.high
    }
}

/// Renders as `[low, high] ≈ decimal`.
impl fmt::Display for RootBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] ≈ {}", self.low, self.high, self.refined)
    }
}

/// Sturm sequence of the square-free part of a polynomial. Each member is
/// stored primitive; only signs matter.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        let q = p.square_free();
        let mut chain = vec![q.clone()];
        let d = q.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
            loop {
                let n = chain.len();
                let (r, negative_multiplier) = chain[n - 2]
                    .pseudo_rem(&chain[n - 1])
                    .expect("chain members are nonzero");
                if r.is_zero() {
                    break;
                }
                // next = -rem up to a positive factor
                let mut next = r.primitive();
                let r_lead_negative = r.leading().unwrap().is_negative();
                // primitive() forced a positive leading coefficient; restore the
                // sign of -r / multiplier
                if r_lead_negative == negative_multiplier {
                    next = -&next;
                }
                chain.push(next);
            }
        }
        SturmChain { chain }
    }

    /// The square-free polynomial at the head of the chain.
    pub fn base(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn sign_variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.sign_variations(a)
            .saturating_sub(self.sign_variations(b))
    }

    /// Isolates the smallest root in `(lo, hi]` and refines it to a bracket
    /// of width at most `width`.
    pub fn smallest_root(
        &self,
        lo: &BigRational,
        hi: &BigRational,
        width: &BigRational,
    ) -> Option<RootBracket> {
        let mut count = self.count_roots(lo, hi);
        if count == 0 {
            return None;
        }
        let q = self.base();
        let two = BigRational::from_integer(2.into());
        let (mut a, mut b) = (lo.clone(), hi.clone());
        // Sturm bisection until one root remains and the left end is not a root
        while count > 1 || q.sign_at(&a) == Ordering::Equal {
            let mid = (&a + &b) / &two;
            let left = self.count_roots(&a, &mid);
            if left >= 1 {
                b = mid;
                count = left;
            } else {
                a = mid;
            }
        }
        if q.sign_at(&b) == Ordering::Equal {
            return Some(RootBracket::new(b.clone(), b));
        }
        let sa = q.sign_at(&a);
        while &(&b - &a) > width {
            let mid = (&a + &b) / &two;
            match q.sign_at(&mid) {
                Ordering::Equal => return Some(RootBracket::new(mid.clone(), mid)),
                s if s == sa => a = mid,
                _ => b = mid,
            }
        }
        Some(RootBracket::new(a, b))
    }
}

/// Exact decimal rendering of a rational to `digits` significant digits,
/// rounding half away from zero. Plain notation for magnitudes in
/// `[1e-5, 1e10)`, scientific otherwise.
pub fn format_significant(x: &BigRational, digits: usize) -> String {
    assert!(digits >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let ax = x.abs();
    let ten = BigInt::from(10);
    // e = floor(log10 |x|), seeded from f64 and corrected exactly
    let approx = ax.to_f64().unwrap_or(1.0);
    let mut e: i64 = if approx.is_finite() && approx > 0.0 {
        approx.log10().floor() as i64
    } else {
        0
    };
    let pow10 = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while pow10(e) > ax {
        e -= 1;
    }
    while pow10(e + 1) <= ax {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = &ax * pow10(shift);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut n = q;
    if r * BigInt::from(2) >= *scaled.denom() {
        n += 1;
    }
    if n == num_traits::pow(ten.clone(), digits) {
        n /= &ten;
        e += 1;
    }
    let ds = n.to_string();
    let sign = if negative { "-" } else { "" };
    if !(-5..10).contains(&e) {
        let (head, tail) = ds.split_at(1);
        let tail = tail.trim_end_matches('0');
        return if tail.is_empty() {
            format!("{sign}{head}e{e}")
        } else {
            format!("{sign}{head}.{tail}e{e}")
        };
    }
    let body = if e >= 0 {
        let int_len = (e + 1) as usize;
        if ds.len() <= int_len {
            format!("{}{}", ds, "0".repeat(int_len - ds.len()))
        } else {
            format!("{}.{}", &ds[..int_len], &ds[int_len..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
    };
    format!("{sign}{body}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn tol() -> BigRational {
        BigRational::new(1.into(), num_traits::pow(BigInt::from(10), 12))
    }

    #[test]
    fn linear_root_is_exact() {
        let chain = SturmChain::new(&p(&[-1, 2]));
        let b = chain.smallest_root(&q(0, 1), &q(1, 1), &tol()).unwrap();
        assert_eq!(b.low, q(1, 2));
        assert_eq!(b.high, q(1, 2));
        assert_eq!(b.refined, "0.5000000000");
    }

    #[test]
    fn quadratic_root() {
        let chain = SturmChain::new(&p(&[1, -3, 1]));
        let b = chain.smallest_root(&q(0, 1), &q(1, 1), &tol()).unwrap();
        let root = (3.0 - 5f64.sqrt()) / 2.0;
        assert!(b.width() <= tol());
        assert!(
            b.low.to_f64().unwrap() <= root + 1e-15 && root - 1e-15 <= b.high.to_f64().unwrap()
        );
        // the true value sits 1e-13 above a rounding tie, so only closeness is stable
        let refined: f64 = b.refined.parse().unwrap();
        assert!((refined - root).abs() < 1e-10);
    }

    #[test]
    fn root_at_right_endpoint() {
        let chain = SturmChain::new(&p(&[1, -1]));
        let b = chain.smallest_root(&q(0, 1), &q(1, 1), &tol()).unwrap();
        assert_eq!((b.low.clone(), b.high.clone()), (q(1, 1), q(1, 1)));
        assert!(chain.smallest_root(&q(0, 1), &q(1, 2), &tol()).is_none());
    }

    #[test]
    fn counts_distinct_roots() {
        // (z - 1/4)^2 (z - 1/2)(z - 3)
        let f = &(&(&p(&[-1, 4]) * &p(&[-1, 4])) * &p(&[-1, 2])) * &p(&[-3, 1]);
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_roots(&q(0, 1), &q(1, 1)), 2);
        assert_eq!(chain.count_roots(&q(0, 1), &q(1, 4)), 1);
        assert_eq!(chain.count_roots(&q(1, 4), &q(1, 2)), 1);
        assert_eq!(chain.count_roots(&q(-10, 1), &q(10, 1)), 3);
        let b = chain.smallest_root(&q(0, 1), &q(1, 1), &tol()).unwrap();
        assert!(b.contains(&q(1, 4)));
        // the left endpoint is itself a root and must be excluded
        let b = chain.smallest_root(&q(1, 4), &q(1, 1), &tol()).unwrap();
        assert!(b.contains(&q(1, 2)));
    }

    #[test]
    fn negative_leading_coefficients() {
        let f = p(&[1, 0, -5, 0, 4]); // (z^2-1)(4z^2-1) ... roots ±1, ±1/2
        let g = -&f;
        for h in [f, g] {
            let chain = SturmChain::new(&h);
            assert_eq!(chain.count_roots(&q(-2, 1), &q(2, 1)), 4);
            assert_eq!(chain.count_roots(&q(0, 1), &q(1, 1)), 2);
        }
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(&q(1, 3), 10), "0.3333333333");
        assert_eq!(format_significant(&q(2, 3), 4), "0.6667");
        assert_eq!(format_significant(&q(-5, 2), 3), "-2.50");
        assert_eq!(format_significant(&q(999_999, 1_000_000), 3), "1.00");
        assert_eq!(format_significant(&q(123_456, 1), 3), "123000");
        assert_eq!(format_significant(&q(1, 1_000_000_000), 3), "1e-9");
        assert_eq!(format_significant(&q(12, 1_000_000_000), 3), "1.2e-8");
        assert_eq!(format_significant(&BigRational::zero(), 3), "0");
    }
}
