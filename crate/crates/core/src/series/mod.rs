//! Exact formal power series truncated at a fixed order, and the
//! dynamical zeta constructions built on them.
//!
//! Coefficients are [`BigRational`]s, always in lowest terms; there is no
//! floating point anywhere in this module. Binary operations refuse to mix
//! truncation orders.

mod dynamics;
mod poly;

pub use dynamics::{
    artin_mazur_from_n, dold_residues, euler_from_k, extract_n, k_from_n, lambert_from_k,
    lambert_series, lambert_verbatim_from_k, n_from_k, PeriodCounts,
};
pub use poly::{low_degree_cyclotomics, IntPoly, RationalFunctionRep};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 50;

/// c_0 + c_1 s + … + c_T s^T + O(s^{T+1}).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Builds a series of the given order; missing coefficients are zero and
    /// terms beyond the order are dropped.
    pub fn from_coeffs<I>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigRational>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))))
    }

    /// Geometric series 1/(1 - s).
    pub fn geometric(order: usize) -> Self {
        Self::from_coeffs(order, std::iter::repeat_n(BigRational::one(), order + 1))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &BigRational {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let t = self.order();
        let mut out = Self::zero(t);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=t - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Quotient self / denom by long division; requires denom(0) ≠ 0.
    pub fn div(&self, denom: &Self) -> Result<Self> {
        self.check_order(denom)?;
        let d0 = denom.coeffs[0].clone();
        if d0.is_zero() {
            return Err(Error::ConstantTerm { expected: "nonzero", found: "0".into() });
        }
        let mut q: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if !denom.coeffs[k].is_zero() {
                    acc -= &denom.coeffs[k] * &q[n - k];
                }
            }
            q.push(acc / &d0);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    pub fn derivative_coeff(&self, n: usize) -> BigRational {
        // coefficient of s^{n-1} in f', i.e. n·c_n
        &self.coeffs[n] * BigRational::from_integer(BigInt::from(n))
    }

    /// exp(f) for f(0) = 0, from n·g_n = Σ_{k=1..n} k·f_k·g_{n-k}.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0", found: self.coeffs[0].to_string() });
        }
        let t = self.order();
        let mut g = Vec::with_capacity(t + 1);
        g.push(BigRational::one());
        for n in 1..=t {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += self.derivative_coeff(k) * &g[n - k];
                }
            }
            g.push(acc / BigRational::from_integer(BigInt::from(n)));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// log(f) for f(0) = 1, from f·g' = f': n·g_n = n·f_n - Σ_{k=1..n-1} k·g_k·f_{n-k}.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm { expected: "1", found: self.coeffs[0].to_string() });
        }
        let t = self.order();
        let mut g: Vec<BigRational> = vec![BigRational::zero(); t + 1];
        for n in 1..=t {
            let mut acc = self.derivative_coeff(n);
            for (k, gk) in g.iter().enumerate().take(n).skip(1) {
                if !self.coeffs[n - k].is_zero() && !gk.is_zero() {
                    acc -= BigRational::from_integer(BigInt::from(k)) * gk * &self.coeffs[n - k];
                }
            }
            g[n] = acc / BigRational::from_integer(BigInt::from(n));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// Coefficients as integers, if every one is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Coefficients as i64, if every one is integral and fits.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.to_integers()?.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Exponents with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(m, _)| m).collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match m {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})s")?,
                _ => write!(f, "({c})s^{m}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(s^{})", self.order() + 1)
    }
}

/// Power-series expansion of a rational function to order T.
pub fn expand_rational(r: &RationalFunctionRep, order: usize) -> TruncatedSeries {
    r.expand(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_i64s().unwrap()
    }

    /// C(m + 7, 7), the coefficients of (1 - s)^-8.
    fn binom8(m: i64) -> i64 {
        (1..=7).fold(1i64, |acc, k| acc * (m + k) / k)
    }

    #[test]
    fn mul_examples() {
        let a = TruncatedSeries::from_integers(2, &[1, 1]);
        let b = TruncatedSeries::from_integers(2, &[1, -1]);
        assert_eq!(ints(&a.mul(&b).unwrap()), vec![1, 0, -1]);

        let geo = TruncatedSeries::geometric(4);
        let b = TruncatedSeries::from_integers(4, &[1, -1]);
        assert_eq!(ints(&geo.mul(&b).unwrap()), vec![1, 0, 0, 0, 0]);

        let a = TruncatedSeries::from_integers(8, &[1, 0, 1]);
        let b = TruncatedSeries::from_integers(8, &[1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(ints(&a.mul(&b).unwrap()), vec![1, 0, 1, 0, 0, 0, -1, 0, -1]);

        let c = TruncatedSeries::one(3);
        assert_eq!(a.mul(&c), Err(Error::OrderMismatch { left: 8, right: 3 }));
    }

    #[test]
    fn exp_log_examples() {
        assert_eq!(TruncatedSeries::zero(5).exp().unwrap(), TruncatedSeries::one(5));

        let log_geo = TruncatedSeries::geometric(4).log().unwrap();
        let want = TruncatedSeries::from_coeffs(4, [q(0, 1), q(1, 1), q(1, 2), q(1, 3), q(1, 4)]);
        assert_eq!(log_geo, want);

        let f = TruncatedSeries::from_coeffs(3, [q(0, 1), q(8, 1), q(8, 2), q(8, 3)]);
        let want: Vec<i64> = (0..=3).map(binom8).collect();
        assert_eq!(want, vec![1, 8, 36, 120]);
        assert_eq!(ints(&f.exp().unwrap()), want);

        assert!(TruncatedSeries::one(3).exp().is_err());
        assert!(TruncatedSeries::zero(3).log().is_err());
    }

    #[test]
    fn expand_rational_examples() {
        let zeta = RationalFunctionRep::new(
            IntPoly::from_i64s(&[1, 0, 1, 0, 0, 0, -1, 0, -1]),
            IntPoly::one_minus_s().pow(8),
        )
        .unwrap();
        // oracle: numerator coefficients convolved with C(m+7, 7)
        let num = [1i64, 0, 1, 0, 0, 0, -1, 0, -1];
        let oracle: Vec<i64> = (0..=10)
            .map(|m: i64| (0..=m.min(8)).map(|k| num[k as usize] * binom8(m - k)).sum())
            .collect();
        assert_eq!(&oracle[..4], &[1, 8, 37, 128]);
        assert_eq!(ints(&expand_rational(&zeta, 10)), oracle);

        let geo = RationalFunctionRep::new(IntPoly::one(), IntPoly::one_minus_s()).unwrap();
        assert_eq!(ints(&expand_rational(&geo, 3)), vec![1, 1, 1, 1]);

        let ghost = RationalFunctionRep::new(IntPoly::one_minus_s(), IntPoly::one_minus_s()).unwrap();
        assert_eq!(expand_rational(&ghost, 5), TruncatedSeries::one(5));
    }

    #[test]
    fn div_requires_invertible_constant() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::from_integers(3, &[0, 1]);
        assert!(matches!(a.div(&b), Err(Error::ConstantTerm { .. })));
    }

    fn rational() -> impl Strategy<Value = BigRational> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn exp_inverts_log(t in 1usize..=20, tail in prop::collection::vec(rational(), 20)) {
            let f = TruncatedSeries::from_coeffs(t, std::iter::once(BigRational::one()).chain(tail));
            prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
        }

        #[test]
        fn log_inverts_exp(t in 1usize..=20, tail in prop::collection::vec(rational(), 20)) {
            let g = TruncatedSeries::from_coeffs(t, std::iter::once(BigRational::zero()).chain(tail));
            prop_assert_eq!(g.exp().unwrap().log().unwrap(), g);
        }

        #[test]
        fn division_undoes_multiplication(
            t in 1usize..=15,
            a in prop::collection::vec(rational(), 16),
            b in prop::collection::vec(rational(), 16),
        ) {
            let a = TruncatedSeries::from_coeffs(t, a);
            let mut b = TruncatedSeries::from_coeffs(t, b);
            if b.coeff(0).is_zero() {
                b.coeffs[0] = BigRational::one();
            }
            prop_assert_eq!(a.mul(&b).unwrap().div(&b).unwrap(), a);
        }
    }
}
