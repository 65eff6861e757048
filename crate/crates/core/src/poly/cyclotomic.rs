use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{IntPolynomial, PolyError};

/// Euler's totient, the degree of `Φ_d`.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(d: u64) -> impl Iterator<Item = u64> {
    (1..=d).filter(move |e| d.is_multiple_of(*e))
}

/// Memo table of cyclotomic polynomials, built by the recursive division
/// `Φ_d = (z^d − 1) / ∏_{e | d, e < d} Φ_e`.
#[derive(Debug, Default)]
pub struct CyclotomicTable {
    cache: BTreeMap<u64, IntPolynomial>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, d: u64) -> &IntPolynomial {
        assert!(d >= 1, "cyclotomic index must be positive");
        if !self.cache.contains_key(&d) {
            let mut acc =
                &IntPolynomial::monomial(BigInt::one(), d as usize) - &IntPolynomial::one();
            for e in divisors(d).filter(|&e| e < d) {
                let phi_e = self.get(e).clone();
                acc = acc.div_exact(&phi_e).expect("Φ_e divides z^d - 1");
            }
            self.cache.insert(d, acc);
        }
        &self.cache[&d]
    }
}

/// `Φ_d`.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    CyclotomicTable::new().get(d).clone()
}

/// A product `∏ Φ_d^{e_d}` kept in factored form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclotomicProduct {
    factors: BTreeMap<u64, u32>,
}

impl CyclotomicProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// Factored form of `[m_1; …; m_k]`: each `1 + … + z^{m−1}` is
    /// `∏_{d | m, d > 1} Φ_d`.
    pub fn bracket(parts: &[u64]) -> Result<Self, PolyError> {
        let mut out = Self::one();
        for &m in parts {
            if m < 1 {
                return Err(PolyError::BracketPart(m));
            }
            for d in divisors(m).filter(|&d| d > 1) {
                out.push(d, 1);
            }
        }
        Ok(out)
    }

    pub fn push(&mut self, d: u64, multiplicity: u32) {
        assert!(d >= 1);
        if multiplicity > 0 {
            *self.factors.entry(d).or_insert(0) += multiplicity;
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&d, &e)| (d, e))
    }

    pub fn multiplicity(&self, d: u64) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.factors().map(|(d, e)| euler_phi(d) * e as u64).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, e) in other.factors() {
            out.push(d, e);
        }
        out
    }

    /// Exponent-wise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, e) in other.factors() {
            let slot = out.factors.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        out
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut out = self.clone();
        for (d, e) in other.factors() {
            let slot = out.factors.get_mut(&d)?;
            *slot = slot.checked_sub(e)?;
            if *slot == 0 {
                out.factors.remove(&d);
            }
        }
        Some(out)
    }

    pub fn expand(&self, table: &mut CyclotomicTable) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for (d, e) in self.factors() {
            let phi = table.get(d).clone();
            for _ in 0..e {
                acc = &acc * &phi;
            }
        }
        acc
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(d, e)| {
                if e == 1 {
                    format!("Φ{d}")
                } else {
                    format!("Φ{d}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("·"))
    }
}
