//! Genus of the modular curve X_0(N) in exact rational arithmetic.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::field::{is_prime, legendre_symbol};

/// Distinct prime divisors of `n` in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "phi is defined for n >= 1");
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Index of Gamma_0(N) in SL(2, Z): `N prod_{p | N} (1 + 1/p)`.
pub fn mu(n: u64) -> u64 {
    assert!(n >= 1, "mu is defined for n >= 1");
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p + 1))
}

/// Number of elliptic points of order 2.
pub fn mu2(n: u64) -> u64 {
    if n % 4 == 0 {
        return 0;
    }
    // (-4/2) = 0, so the prime 2 contributes a factor of 1.
    prime_divisors(n)
        .into_iter()
        .filter(|&p| p != 2)
        .map(|p| (1 + legendre_symbol(-4, p).unwrap()) as u64)
        .product()
}

/// Number of elliptic points of order 3.
pub fn mu3(n: u64) -> u64 {
    if n % 2 == 0 || n % 9 == 0 {
        return 0;
    }
    prime_divisors(n)
        .into_iter()
        .map(|p| {
            if p == 3 {
                1
            } else {
                (1 + legendre_symbol(-3, p).unwrap()) as u64
            }
        })
        .product()
}

/// Number of cusps: `sum_{d | N} phi(gcd(d, N/d))`.
pub fn mu_inf(n: u64) -> u64 {
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| euler_phi(gcd(d, n / d)))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusReport {
    pub level: u64,
    pub mu: u64,
    pub mu2: u64,
    pub mu3: u64,
    pub mu_inf: u64,
    pub genus: u64,
}

/// `g = 1 + mu/12 - mu2/4 - mu3/3 - mu_inf/2`.
pub fn genus_x0(n: u64) -> Result<GenusReport> {
    if n == 0 {
        return Err(Error::PreconditionFailed("level must be positive".into()));
    }
    let (m, m2, m3, mi) = (mu(n), mu2(n), mu3(n), mu_inf(n));
    let r = |a: u64, b: i64| Ratio::new(a as i64, b);
    let g = Ratio::from_integer(1) + r(m, 12) - r(m2, 4) - r(m3, 3) - r(mi, 2);
    if !g.is_integer() || g < Ratio::from_integer(0) {
        return Err(Error::NonIntegralGenus(g.to_string()));
    }
    Ok(GenusReport {
        level: n,
        mu: m,
        mu2: m2,
        mu3: m3,
        mu_inf: mi,
        genus: g.to_integer() as u64,
    })
}

/// Shortcut for prime `N = 12m + 1`: the genus is `m - 1`.
pub fn genus_prime_1mod12(n: u64) -> Result<u64> {
    if !is_prime(n) || n % 12 != 1 {
        return Err(Error::PreconditionFailed(format!(
            "{n} is not a prime congruent to 1 mod 12"
        )));
    }
    Ok((n - 1) / 12 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_examples() {
        assert_eq!(mu(1), 1);
        assert_eq!(mu(2), 3);
        assert_eq!(mu(11), 12);
        assert_eq!(mu(36), 72);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        for p in [2, 3, 5, 97, 101] {
            assert_eq!(euler_phi(p), p - 1);
        }
    }

    #[test]
    fn cusps() {
        assert_eq!(mu_inf(11), 2);
        assert_eq!(mu_inf(27), 6);
        assert_eq!(mu_inf(36), 12);
    }

    #[test]
    fn genus_known_levels() {
        assert_eq!(genus_x0(11).unwrap().genus, 1);
        assert_eq!(genus_x0(13).unwrap().genus, 0);
        assert_eq!(genus_x0(2).unwrap().genus, 0);
        assert_eq!(genus_x0(10).unwrap().genus, 0);
        assert_eq!(genus_x0(37).unwrap().genus, 2);
        assert_eq!(genus_x0(61).unwrap().genus, 4);
        for n in [1, 3, 4, 5, 6, 7, 8, 9, 12, 13, 16, 18, 25] {
            assert_eq!(genus_x0(n).unwrap().genus, 0, "N={n}");
        }
        for n in [11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49] {
            assert_eq!(genus_x0(n).unwrap().genus, 1, "N={n}");
        }
        assert!(genus_x0(0).is_err());
    }

    #[test]
    fn genus_integral_up_to_1000() {
        for n in 1..=1000 {
            genus_x0(n).unwrap();
        }
    }

    #[test]
    fn prime_shortcut() {
        assert_eq!(genus_prime_1mod12(13).unwrap(), 0);
        assert_eq!(genus_prime_1mod12(37).unwrap(), 2);
        assert_eq!(genus_prime_1mod12(61).unwrap(), 4);
        assert!(genus_prime_1mod12(25).is_err());
        assert!(genus_prime_1mod12(11).is_err());
        for n in (13..=601).filter(|&n| is_prime(n) && n % 12 == 1) {
            assert_eq!(genus_prime_1mod12(n).unwrap(), genus_x0(n).unwrap().genus);
        }
    }
}
