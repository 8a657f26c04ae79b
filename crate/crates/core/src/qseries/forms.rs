use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::LaurentSeries;
use crate::error::{Error, Result};

type Series = LaurentSeries<BigInt>;

/// Sum of the `r`-th powers of the positive divisors of `n`.
pub fn sigma(r: u32, n: u64) -> BigInt {
    assert!(n >= 1, "sigma is defined for n >= 1");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += BigInt::from(d).pow(r);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(r);
            }
        }
        d += 1;
    }
    total
}

/// `prod_{n >= 1} (1 - q^n)` known below `q^order`, via the pentagonal
/// number theorem.
pub fn euler_product(order: i64) -> Series {
    let mut s = Series::zero(0, order.max(0));
    if order <= 0 {
        return s;
    }
    let mut coeffs = s.coefficients().to_vec();
    for k in 0i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let e1 = k * (3 * k - 1) / 2;
        if e1 >= order {
            break;
        }
        coeffs[e1 as usize] += sign;
        if k > 0 {
            let e2 = k * (3 * k + 1) / 2;
            if e2 < order {
                coeffs[e2 as usize] += sign;
            }
        }
    }
    s = Series::new(0, coeffs);
    s
}

/// A product `prod_d eta(d z)^{e_d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotientSpec {
    pub factors: Vec<(u32, i32)>,
}

impl EtaQuotientSpec {
    pub fn new(factors: &[(u32, i32)]) -> Self {
        Self {
            factors: factors.to_vec(),
        }
    }

    /// `sum d * e`; the q-expansion starts at `q^(weight_sum / 24)`.
    pub fn weight_sum(&self) -> i64 {
        self.factors
            .iter()
            .map(|&(d, e)| i64::from(d) * i64::from(e))
            .sum()
    }
}

/// Exact expansion of an eta quotient below `q^order`.
pub fn eta_quotient(spec: &EtaQuotientSpec, order: i64) -> Result<Series> {
    let s = spec.weight_sum();
    if s % 24 != 0 {
        return Err(Error::FractionalExponent(s));
    }
    let shift = s / 24;
    let len = order - shift;
    if len <= 0 {
        return Ok(Series::zero(order, order));
    }
    let mut acc = Series::one(len);
    for &(d, e) in &spec.factors {
        if e == 0 {
            continue;
        }
        let d64 = i64::from(d);
        let base = euler_product((len + d64 - 1) / d64)
            .substitute(d)
            .truncate(len);
        let base = if e < 0 { base.inverse()? } else { base };
        acc = &acc * &base.pow(e.unsigned_abs());
    }
    Ok(acc.truncate(len).shift(shift))
}

/// `E_4 = 1 + 240 sum sigma_3(n) q^n` or `E_6 = 1 - 504 sum sigma_5(n) q^n`.
pub fn eisenstein_normalized(k: u32, order: i64) -> Result<Series> {
    let (r, factor) = match k {
        4 => (3, BigInt::from(240)),
        6 => (5, BigInt::from(-504)),
        _ => return Err(Error::UnsupportedWeight(k)),
    };
    let len = order.max(0) as usize;
    let coeffs = (0..len)
        .map(|n| {
            if n == 0 {
                BigInt::one()
            } else {
                &factor * sigma(r, n as u64)
            }
        })
        .collect();
    Ok(Series::new(0, coeffs))
}

/// The discriminant `(E_4^3 - E_6^2) / 1728` below `q^order`.
pub fn delta_series(order: i64) -> Result<Series> {
    if order < 2 {
        return Err(Error::PreconditionFailed(format!(
            "delta series needs order >= 2, got {order}"
        )));
    }
    let e4 = eisenstein_normalized(4, order)?;
    let e6 = eisenstein_normalized(6, order)?;
    let diff = &e4.pow(3) - &e6.pow(2);
    diff.div_exact(&BigInt::from(1728))
        .ok_or_else(|| Error::PreconditionFailed("E4^3 - E6^2 not divisible by 1728".into()))
}

/// `j = 1728 E_4^3 / (E_4^3 - E_6^2) = E_4^3 / Delta`, known below `q^order`.
pub fn j_series(order: i64) -> Result<Series> {
    if order < 0 {
        return Err(Error::PreconditionFailed(format!(
            "j series needs order >= 0, got {order}"
        )));
    }
    // Dividing by Delta (valuation 1) costs two orders of precision.
    let inner = order + 2;
    let e4_cubed = eisenstein_normalized(4, inner)?.pow(3);
    let delta_inv = delta_series(inner)?.inverse()?;
    let j = &e4_cubed * &delta_inv;
    Ok(j.truncate(order))
}

/// `a_n` of `eta(z)^2 eta(11z)^2`, the weight-2 newform of level 11,
/// computed from its expansion below `q^order`.
pub fn hecke_coeff_level11(n: u64, order: i64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::PreconditionFailed("coefficient index must be positive".into()));
    }
    if n as i64 >= order {
        return Err(Error::TruncationTooSmall {
            needed: n as i64,
            order,
        });
    }
    let f = eta_quotient(&EtaQuotientSpec::new(&[(1, 2), (11, 2)]), order)?;
    f.coeff(n as i64)
}
