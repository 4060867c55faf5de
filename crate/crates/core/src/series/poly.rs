//! Integer polynomials in s and rational functions built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// 1 - s
    pub fn one_minus_s() -> Self {
        Self::from_i64s(&[1, -1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, s: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * s + c)
    }

    fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    fn scaled(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.content();
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Fixes the sign so that the lowest nonzero coefficient is positive,
    /// matching the power-series convention 1 - s rather than s - 1.
    fn normalized_sign(self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => -self,
            _ => self,
        }
    }

    /// Exact quotient self / divisor over the integers, if one exists.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - divisor.degree() + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + divisor.degree()];
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }

    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let lead = divisor.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= divisor.degree() {
            let shift = r.degree() - divisor.degree();
            let top = r.leading();
            r = &r.scaled(&lead) - &divisor.scaled(&top).shifted(shift);
        }
        r
    }

    /// Primitive greatest common divisor (content discarded), sign
    /// normalized so the lowest nonzero coefficient is positive.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        if a.is_zero() {
            return b.normalized_sign();
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.normalized_sign()
    }

    /// Multiplicity of s = 1 as a root.
    pub fn multiplicity_at_one(&self) -> u32 {
        let mut p = self.clone();
        let mut k = 0;
        if p.is_zero() {
            return 0;
        }
        while let Some(q) = p.div_exact(&IntPoly::one_minus_s()) {
            p = q;
            k += 1;
        }
        k
    }

    /// Factors the polynomial over the cyclotomic polynomials Φ_n with
    /// φ(n) ≤ 2, i.e. n ∈ {1, 2, 3, 4, 6}, whose roots are the eight roots
    /// of unity of degree 1 or 2. Returns the multiplicity of each Φ_n, or
    /// None if some root lies outside that set.
    pub fn unit_root_factorization(&self) -> Option<BTreeMap<u32, u32>> {
        if self.is_zero() {
            return None;
        }
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        for (n, phi) in low_degree_cyclotomics() {
            let mut k = 0;
            while let Some(q) = rest.div_exact(&phi) {
                rest = q;
                k += 1;
            }
            if k > 0 {
                out.insert(n, k);
            }
        }
        (rest.degree() == 0).then_some(out)
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, self.coeffs.iter().cloned().map(BigRational::from_integer))
    }
}

/// Φ_1, Φ_2, Φ_3, Φ_4, Φ_6.
pub fn low_degree_cyclotomics() -> [(u32, IntPoly); 5] {
    [
        (1, IntPoly::from_i64s(&[-1, 1])),
        (2, IntPoly::from_i64s(&[1, 1])),
        (3, IntPoly::from_i64s(&[1, 1, 1])),
        (4, IntPoly::from_i64s(&[1, 0, 1])),
        (6, IntPoly::from_i64s(&[1, -1, 1])),
    ]
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "s")?,
                _ => write!(f, "s^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

/// numerator / denominator with an invertible denominator at s = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionRep {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalFunctionRep {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::ConstantTerm { expected: "nonzero", found: "0".into() });
        }
        Ok(RationalFunctionRep { numerator, denominator })
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    /// Power-series expansion to order T.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let num = self.numerator.to_series(order);
        let den = self.denominator.to_series(order);
        num.div(&den).expect("denominator constant term checked at construction")
    }

    /// Lowest-terms form together with the cancelled common factor.
    pub fn reduced(&self) -> (RationalFunctionRep, IntPoly) {
        let g = self.numerator.gcd(&self.denominator);
        let num = self.numerator.div_exact(&g).expect("gcd divides numerator");
        let den = self.denominator.div_exact(&g).expect("gcd divides denominator");
        (RationalFunctionRep { numerator: num, denominator: den }, g)
    }

    /// Equality as rational functions (cross-multiplication).
    pub fn same_function(&self, other: &RationalFunctionRep) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    /// Order of the pole at s = 1 in lowest terms (0 if no pole there).
    pub fn pole_order_at_one(&self) -> u32 {
        let (reduced, _) = self.reduced();
        reduced.denominator.multiplicity_at_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic_basics() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 0, 1]) * &p(&[1, 0, 0, 0, 0, 0, -1]), p(&[1, 0, 1, 0, 0, 0, -1, 0, -1]));
        assert_eq!(IntPoly::one_minus_s().pow(8).coeff(1), BigInt::from(-8));
        assert_eq!(&p(&[1, 2, 3]) - &p(&[1, 2, 3]), IntPoly::zero());
        assert_eq!(p(&[3, 0, 0]).degree(), 0);
        assert_eq!(p(&[1, 0, 1]).eval(&BigInt::from(2)), BigInt::from(5));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(a.div_exact(&p(&[1, -1])), Some(p(&[1, 1, 1, 1, 1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 1]).div_exact(&p(&[1, 2])), None);
    }

    #[test]
    fn gcd_normalization() {
        let num = p(&[1, 0, 1, 0, 0, 0, -1, 0, -1]);
        let den = IntPoly::one_minus_s().pow(8);
        assert_eq!(num.gcd(&den), p(&[1, -1]));
        assert_eq!(p(&[2, 2]).gcd(&p(&[3, 3])), p(&[1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])), IntPoly::one());
        assert_eq!(IntPoly::zero().gcd(&p(&[-1, 1])), p(&[1, -1]));
    }

    #[test]
    fn unit_roots() {
        let f = p(&[1, 0, 1, 0, 0, 0, -1, 0, -1]).unit_root_factorization().unwrap();
        assert_eq!(f, BTreeMap::from([(1, 1), (2, 1), (3, 1), (4, 1), (6, 1)]));
        assert_eq!(p(&[1, -1]).pow(3).unit_root_factorization(), Some(BTreeMap::from([(1, 3)])));
        assert_eq!(p(&[1, 1, 0, 1]).unit_root_factorization(), None);
        assert_eq!(p(&[2, 0, 1]).unit_root_factorization(), None);
    }

    #[test]
    fn rational_function_reduction() {
        let r = RationalFunctionRep::new(p(&[1, -1]), p(&[1, -1])).unwrap();
        let (red, g) = r.reduced();
        assert_eq!(g, p(&[1, -1]));
        assert_eq!(red.numerator(), &IntPoly::one());
        assert_eq!(red.denominator(), &IntPoly::one());
        assert!(RationalFunctionRep::new(IntPoly::one(), p(&[0, 1])).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, 1, 0, 0, 0, -1, 0, -1]).to_string(), "1 + s^2 - s^6 - s^8");
        assert_eq!(p(&[0, -2, 3]).to_string(), "-2s + 3s^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
