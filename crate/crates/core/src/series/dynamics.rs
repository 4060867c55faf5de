//! Zeta functions of maps with finitely many periodic points.
//!
//! `N_m` counts fixed points of the m-th iterate, `K_m` counts points of
//! least period m, and N_m = Σ_{d|m} K_d. The same zeta function can be
//! assembled three ways:
//!
//! * Artin–Mazur: exp(Σ N_m s^m / m)
//! * Lambert: s·ζ'/ζ = Σ K_m s^m / (1 - s^m)
//! * Euler: Π (1 - s^m)^(-K_m/m)
//!
//! The Euler form is expanded with generalized binomial series, so it shares
//! no code path with the two exponential forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::numtheory::{divisors, moebius_table};

fn ratio(n: i64, d: usize) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn need(seq: &[i64], order: usize) -> Result<()> {
    if seq.len() < order {
        return Err(Error::TooShort { needed: order, got: seq.len() });
    }
    Ok(())
}

/// exp(Σ_{m=1}^{T} N_m s^m / m).
pub fn artin_mazur_from_n(n: &[i64], order: usize) -> Result<TruncatedSeries> {
    need(n, order)?;
    let exponent =
        TruncatedSeries::from_coeffs(order, std::iter::once(BigRational::zero()).chain(
            n[..order].iter().enumerate().map(|(i, &v)| ratio(v, i + 1)),
        ));
    exponent.exp()
}

/// Lambert series Σ_{m=1}^{T} K_m · s^m/(1 - s^m), each term expanded to
/// order T. Its coefficients are the fixed-point counts N_n.
pub fn lambert_series(k: &[i64], order: usize) -> Result<TruncatedSeries> {
    need(k, order)?;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (i, &km) in k[..order].iter().enumerate() {
        let m = i + 1;
        if km == 0 {
            continue;
        }
        let w = ratio(km, 1);
        for slot in coeffs.iter_mut().skip(m).step_by(m) {
            *slot += &w;
        }
    }
    Ok(TruncatedSeries::from_coeffs(order, coeffs))
}

/// ζ from its Lambert series: the Lambert series is s·ζ'/ζ, so
/// ζ = exp(Σ_n (L_n/n) s^n) with L = Σ K_m s^m/(1 - s^m).
pub fn lambert_from_k(k: &[i64], order: usize) -> Result<TruncatedSeries> {
    let lambert = lambert_series(k, order)?;
    let exponent = TruncatedSeries::from_coeffs(
        order,
        lambert
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| if n == 0 { BigRational::zero() } else { c / ratio(n as i64, 1) }),
    );
    exponent.exp()
}

/// exp(Σ_{m=1}^{T} (K_m/m) · s^m/(1 - s^m)) evaluated exactly as written.
/// This is not the zeta function of the counts: its exponent weights
/// s^{mj} by K_m/m where the true logarithm has K_m/(mj). Kept so the
/// discrepancy can be measured.
pub fn lambert_verbatim_from_k(k: &[i64], order: usize) -> Result<TruncatedSeries> {
    need(k, order)?;
    let mut exponent = vec![BigRational::zero(); order + 1];
    for (i, &km) in k[..order].iter().enumerate() {
        let m = i + 1;
        if km == 0 {
            continue;
        }
        let w = ratio(km, m);
        for slot in exponent.iter_mut().skip(m).step_by(m) {
            *slot += &w;
        }
    }
    TruncatedSeries::from_coeffs(order, exponent).exp()
}

/// Π_{m=1}^{T} (1 - s^m)^(-K_m/m). Exponents need not be integers:
/// (1 - x)^(-α) = Σ_j C(α + j - 1, j) x^j with c_j = c_{j-1}·(α + j - 1)/j.
pub fn euler_from_k(k: &[i64], order: usize) -> Result<TruncatedSeries> {
    need(k, order)?;
    let mut acc: Vec<BigRational> = TruncatedSeries::one(order).coeffs;
    for (i, &km) in k[..order].iter().enumerate() {
        let m = i + 1;
        if km == 0 {
            continue;
        }
        let alpha = ratio(km, m);
        // binomial series coefficients of the factor, at powers s^{m j}
        let mut factor = vec![BigRational::from_integer(1.into())];
        for j in 1..=order / m {
            let prev = &factor[j - 1];
            let next = prev * (&alpha + ratio(j as i64 - 1, 1)) / ratio(j as i64, 1);
            factor.push(next);
        }
        let mut out = vec![BigRational::zero(); order + 1];
        for (n, slot) in out.iter_mut().enumerate() {
            for (j, c) in factor.iter().enumerate().take(n / m + 1) {
                let a = &acc[n - m * j];
                if !a.is_zero() && !c.is_zero() {
                    *slot += a * c;
                }
            }
        }
        acc = out;
    }
    Ok(TruncatedSeries::from_coeffs(order, acc))
}

/// Recovers N_m = m · [s^m] log ζ for m = 1..=T. A non-integral N_m means
/// the input is not the Artin–Mazur series of an integer sequence.
pub fn extract_n(zeta: &TruncatedSeries) -> Result<Vec<i64>> {
    let log = zeta.log()?;
    (1..=zeta.order())
        .map(|m| {
            let v = log.coeff(m) * ratio(m as i64, 1);
            if !v.is_integer() {
                return Err(Error::NonInteger { m, value: v.to_string() });
            }
            v.to_integer().to_i64().ok_or(Error::Overflow("extract_n"))
        })
        .collect()
}

/// Möbius inversion: K_m = Σ_{l|m} μ(l) · N_{m/l}.
pub fn k_from_n(n: &[i64]) -> Result<Vec<i64>> {
    let mu = moebius_table(n.len());
    (1..=n.len())
        .map(|m| {
            divisors(m as u64).into_iter().try_fold(0i64, |acc, l| {
                let term = (mu[l as usize] as i64)
                    .checked_mul(n[m / l as usize - 1])
                    .ok_or(Error::Overflow("k_from_n"))?;
                acc.checked_add(term).ok_or(Error::Overflow("k_from_n"))
            })
        })
        .collect()
}

/// Divisor sums: N_m = Σ_{d|m} K_d.
pub fn n_from_k(k: &[i64]) -> Result<Vec<i64>> {
    (1..=k.len())
        .map(|m| {
            divisors(m as u64).into_iter().try_fold(0i64, |acc, d| {
                acc.checked_add(k[d as usize - 1]).ok_or(Error::Overflow("n_from_k"))
            })
        })
        .collect()
}

/// (m, K_m mod m) with the residue in [0, m); residue 0 means K_m ≡ 0 (mod m).
pub fn dold_residues(k: &[i64]) -> Vec<(usize, u64)> {
    k.iter()
        .enumerate()
        .map(|(i, &km)| (i + 1, km.rem_euclid(i as i64 + 1) as u64))
        .collect()
}

/// Fixed-point counts N_1..N_M paired with least-period counts K_1..K_M.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodCounts {
    fixed: Vec<i64>,
    least: Vec<i64>,
}

impl PeriodCounts {
    pub fn from_fixed_points(n: Vec<i64>) -> Result<Self> {
        let least = k_from_n(&n)?;
        Ok(PeriodCounts { fixed: n, least })
    }

    pub fn from_least_periods(k: Vec<i64>) -> Result<Self> {
        let fixed = n_from_k(&k)?;
        Ok(PeriodCounts { fixed, least: k })
    }

    pub fn len(&self) -> usize {
        self.fixed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixed.is_empty()
    }

    /// N_1..N_M
    pub fn fixed_points(&self) -> &[i64] {
        &self.fixed
    }

    /// K_1..K_M
    pub fn least_periods(&self) -> &[i64] {
        &self.least
    }

    /// Checks N_m = Σ_{d|m} K_d for every m.
    pub fn is_consistent(&self) -> bool {
        n_from_k(&self.least).is_ok_and(|n| n == self.fixed)
    }
}
