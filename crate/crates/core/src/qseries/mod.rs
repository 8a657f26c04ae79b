//! Truncated Laurent series in `q` with exact coefficients, and the
//! q-expansions built on them.

mod forms;
mod modpoly;

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Num, Signed};

pub use forms::{
    delta_series, eisenstein_normalized, eta_quotient, euler_product, hecke_coeff_level11,
    j_series, sigma, EtaQuotientSpec,
};
pub use modpoly::{find_modular_relation, modular_poly_check, BivariatePoly, ModularPolyCheck};

use crate::error::{Error, Result};

/// `sum_{e >= lowest} c_e q^e`, with coefficients known for exponents below
/// `order` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries<T> {
    lowest: i64,
    coeffs: Vec<T>,
}

impl<T: Clone + Num> LaurentSeries<T> {
    /// Series with `coeffs[i]` the coefficient of `q^(lowest + i)`; the
    /// truncation order is `lowest + coeffs.len()`.
    pub fn new(lowest: i64, coeffs: Vec<T>) -> Self {
        Self { lowest, coeffs }
    }

    /// The zero series known below `order`.
    pub fn zero(lowest: i64, order: i64) -> Self {
        let len = (order - lowest).max(0) as usize;
        Self {
            lowest,
            coeffs: vec![T::zero(); len],
        }
    }

    pub fn one(order: i64) -> Self {
        let mut s = Self::zero(0, order.max(0));
        if let Some(c) = s.coeffs.first_mut() {
            *c = T::one();
        }
        s
    }

    /// `c q^e` known below `order`.
    pub fn monomial(c: T, e: i64, order: i64) -> Self {
        let mut s = Self::zero(e.min(order), order);
        if e < order {
            s.coeffs[(e - s.lowest) as usize] = c;
        }
        s
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lowest
    }

    pub fn order(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `q^e`; zero below the lowest stored exponent.
    pub fn coeff(&self, e: i64) -> Result<T> {
        if e >= self.order() {
            return Err(Error::TruncationTooSmall {
                needed: e,
                order: self.order(),
            });
        }
        if e < self.lowest {
            return Ok(T::zero());
        }
        Ok(self.coeffs[(e - self.lowest) as usize].clone())
    }

    fn coeff_or_zero(&self, e: i64) -> T {
        if e < self.lowest || e >= self.order() {
            T::zero()
        } else {
            self.coeffs[(e - self.lowest) as usize].clone()
        }
    }

    /// Exponent of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.lowest + i as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero)
    }

    /// Drops everything at or above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order());
        let lowest = self.lowest.min(order);
        let coeffs = (lowest..order).map(|e| self.coeff_or_zero(e)).collect();
        Self { lowest, coeffs }
    }

    /// Strips leading zero coefficients.
    pub fn normalized(&self) -> Self {
        match self.valuation() {
            Some(v) => Self {
                lowest: v,
                coeffs: self.coeffs[(v - self.lowest) as usize..].to_vec(),
            },
            None => Self::zero(self.order(), self.order()),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            lowest: self.lowest + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Divides every coefficient by `c`, failing unless all divisions are exact.
    pub fn div_exact(&self, c: &T) -> Option<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            if !(x.clone() % c.clone()).is_zero() {
                return None;
            }
            coeffs.push(x.clone() / c.clone());
        }
        Some(Self {
            lowest: self.lowest,
            coeffs,
        })
    }

    /// Substitutes `q -> q^n`.
    pub fn substitute(&self, n: u32) -> Self {
        let n = i64::from(n);
        let lowest = self.lowest * n;
        let order = self.order() * n;
        let mut out = Self::zero(lowest, order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (self.lowest + i as i64) * n;
            out.coeffs[(e - lowest) as usize] = c.clone();
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one(self.order() - self.lowest);
        let mut base = self.clone();
        // q^(n*lowest) is tracked by the product rule, so start from 1.
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse. The first nonzero coefficient must be +1 or
    /// -1; a series with valuation `v` known below `M` inverts to a series
    /// known below `M - 2v`.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::NonUnitLeading)?;
        let unit = &self.coeffs[(v - self.lowest) as usize..];
        let lead = unit[0].clone();
        let neg_one = T::zero() - T::one();
        if lead != T::one() && lead != neg_one {
            return Err(Error::NonUnitLeading);
        }
        let len = unit.len();
        let mut inv: Vec<T> = Vec::with_capacity(len);
        inv.push(lead.clone());
        for m in 1..len {
            let mut acc = T::zero();
            for i in 1..=m {
                acc = acc + unit[i].clone() * inv[m - i].clone();
            }
            // lead is its own inverse
            inv.push((T::zero() - acc) * lead.clone());
        }
        Ok(Self {
            lowest: -v,
            coeffs: inv,
        })
    }
}

impl<T: Clone + Num> Add for &LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn add(self, rhs: &LaurentSeries<T>) -> LaurentSeries<T> {
        let order = self.order().min(rhs.order());
        let lowest = self.lowest.min(rhs.lowest).min(order);
        let coeffs = (lowest..order)
            .map(|e| self.coeff_or_zero(e) + rhs.coeff_or_zero(e))
            .collect();
        LaurentSeries { lowest, coeffs }
    }
}

impl<T: Clone + Num> Sub for &LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn sub(self, rhs: &LaurentSeries<T>) -> LaurentSeries<T> {
        let order = self.order().min(rhs.order());
        let lowest = self.lowest.min(rhs.lowest).min(order);
        let coeffs = (lowest..order)
            .map(|e| self.coeff_or_zero(e) - rhs.coeff_or_zero(e))
            .collect();
        LaurentSeries { lowest, coeffs }
    }
}

impl<T: Clone + Num> Mul for &LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn mul(self, rhs: &LaurentSeries<T>) -> LaurentSeries<T> {
        let lowest = self.lowest + rhs.lowest;
        let order = (self.order() + rhs.lowest).min(rhs.order() + self.lowest);
        let mut out: LaurentSeries<T> = LaurentSeries::zero(lowest.min(order), order);
        let len = out.coeffs.len();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let idx = i + j;
                if idx >= len {
                    break;
                }
                let cell = &mut out.coeffs[idx];
                *cell = cell.clone() + a.clone() * b.clone();
            }
        }
        out
    }
}

impl<T: Clone + Num + Signed + fmt::Display> fmt::Display for LaurentSeries<T> {
    /// Renders `c_{-1}*q^-1 + c_0 + c_1*q + ... + O(q^M)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lowest + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*q")?,
                _ => write!(f, "{mag}*q^{e}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type S = LaurentSeries<i64>;

    #[test]
    fn truncation_orders_propagate() {
        let a = S::new(-1, vec![1, 2, 3, 4]); // known below q^3
        let b = S::new(0, vec![1, 1]); // known below q^2
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 1); // min(3 + 0, 2 - 1)
        assert_eq!(a.substitute(3).order(), 9);
        assert_eq!(a.substitute(3).coeff(6).unwrap(), 4);
        assert_eq!(a.substitute(3).coeff(7).unwrap(), 0);
        assert!(a.coeff(3).is_err());
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let s = S::new(0, vec![1, -1, 0, 0, 0]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coefficients(), &[1, 1, 1, 1, 1]);
        let shifted = s.shift(1).inverse().unwrap();
        assert_eq!(shifted.lowest_exponent(), -1);
        assert_eq!(shifted.order(), 5 + 1 - 2);
        assert!(S::new(0, vec![2, 1]).inverse().is_err());
    }

    #[test]
    fn display_format() {
        let s = LaurentSeries::new(-1, vec![BigInt::from(1), BigInt::from(744), BigInt::from(-3)]);
        assert_eq!(s.to_string(), "1*q^-1 + 744 - 3*q + O(q^2)");
    }

    fn series() -> impl Strategy<Value = S> {
        (-1i64..2, prop::collection::vec(-20i64..20, 1..12)).prop_map(|(l, c)| S::new(l, c))
    }

    proptest! {
        #[test]
        fn distributive(a in series(), b in series(), c in series()) {
            let lhs = &(&a + &b) * &c;
            let rhs = &(&a * &c) + &(&b * &c);
            let order = lhs.order().min(rhs.order());
            prop_assert_eq!(lhs.truncate(order).normalized(), rhs.truncate(order).normalized());
        }

        #[test]
        fn inverse_times_self_is_one(mut c in prop::collection::vec(-5i64..5, 1..10), v in 0i64..3) {
            c[0] = 1;
            let s = S::new(v, c);
            let inv = s.inverse().unwrap();
            let prod = &s * &inv;
            let order = prod.order();
            prop_assert_eq!(prod.normalized(), S::one(order).truncate(order).normalized());
        }
    }
}
