use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Number of codewords `A_0..A_n` of each Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    counts: Vec<BigInt>,
}

/// How a distribution is rendered as a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// `sum A_w x^(n-w)`, highest power first.
    #[default]
    Descending,
    /// `sum A_w x^w`, lowest power first.
    Plain,
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "descending" => Ok(Self::Descending),
            "plain" => Ok(Self::Plain),
            other => Err(Error::PreconditionFailed(format!("unknown convention {other}"))),
        }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn big_pow(base: u64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigInt>) -> Self {
        Self { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Code length `n`.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Counts as `u64`; panics if one does not fit.
    pub fn counts_u64(&self) -> Vec<u64> {
        self.counts.iter().map(|c| c.to_u64().expect("count fits in u64")).collect()
    }

    pub fn get(&self, w: usize) -> &BigInt {
        &self.counts[w]
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| !self.counts[w].is_zero())
    }

    /// `A_0 = 1`, nonnegative counts, total a power of `p`; returns `k`.
    pub fn dimension(&self, p: u64) -> Option<usize> {
        if !self.counts[0].is_one() || self.counts.iter().any(Signed::is_negative) {
            return None;
        }
        let mut total = self.total();
        let p = BigInt::from(p);
        let mut k = 0;
        while !total.is_one() {
            let (q, r) = total.div_rem(&p);
            if !r.is_zero() {
                return None;
            }
            total = q;
            k += 1;
        }
        Some(k)
    }

    pub fn render(&self, convention: Convention) -> String {
        let n = self.n();
        let term = |c: &BigInt, e: usize| -> String {
            let mono = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else {
                format!("{c}{mono}")
            }
        };
        let terms: Vec<String> = match convention {
            Convention::Descending => (0..=n)
                .filter(|&w| !self.counts[w].is_zero())
                .map(|w| term(&self.counts[w], n - w))
                .collect(),
            Convention::Plain => (0..=n)
                .filter(|&w| !self.counts[w].is_zero())
                .map(|w| term(&self.counts[w], w))
                .collect(),
        };
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Convention::Descending))
    }
}

/// Krawtchouk polynomial `K_w(v)` for length `n` over an alphabet of size `p`.
fn krawtchouk(w: usize, v: usize, n: usize, p: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=w.min(v) {
        if w - j > n - v {
            continue;
        }
        let term = binomial(v, j) * binomial(n - v, w - j) * big_pow(p - 1, w - j);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Distribution of the dual of an `[n, k]` code over GF(p).
pub fn macwilliams_transform(
    w: &WeightDistribution,
    n: usize,
    k: usize,
    p: u64,
) -> Result<WeightDistribution> {
    if w.n() != n {
        return Err(Error::LengthMismatch(w.n(), n));
    }
    if w.dimension(p) != Some(k) {
        return Err(Error::NonIntegralResult);
    }
    let scale = big_pow(p, k);
    let mut out = Vec::with_capacity(n + 1);
    for wt in 0..=n {
        let s: BigInt = (0..=n)
            .filter(|&v| !w.counts[v].is_zero())
            .map(|v| &w.counts[v] * krawtchouk(wt, v, n, p))
            .sum();
        let (q, r) = s.div_rem(&scale);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::NonIntegralResult);
        }
        out.push(q);
    }
    Ok(WeightDistribution::new(out))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShokrollahiReport {
    pub consistent: bool,
    /// Constant quotient `B_a` when the remainder vanishes.
    pub b_a: Option<BigInt>,
    /// Whether `gcd(n, a!) = 1`, the theorem's hypothesis.
    pub gcd_condition: bool,
}

/// Divides `c` (coefficients low to high) by `x - 1`; returns the remainder.
fn divide_by_x_minus_1(c: &mut Vec<BigInt>) -> BigInt {
    if c.is_empty() {
        return BigInt::zero();
    }
    let deg = c.len() - 1;
    let mut carry = BigInt::zero();
    let mut q = vec![BigInt::zero(); deg];
    for i in (0..=deg).rev() {
        carry += &c[i];
        if i > 0 {
            q[i - 1] = carry.clone();
        }
    }
    *c = q;
    carry
}

/// Fits `W(x) = x^n + sum_{i<a} C(n,i)(p^(a-i)-1)(x-1)^i + B_a (x-1)^a`,
/// with `W(x) = sum A_w x^(n-w)`.
pub fn shokrollahi_check(w: &WeightDistribution, n: usize, a: usize, p: u64) -> ShokrollahiReport {
    let fact: u64 = (1..=a as u64).product();
    let gcd_condition = (n as u64).gcd(&fact) == 1;
    let fail = ShokrollahiReport {
        consistent: false,
        b_a: None,
        gcd_condition,
    };
    if w.n() != n || a > n {
        return fail;
    }
    let mut r: Vec<BigInt> = (0..=n).map(|e| w.counts[n - e].clone()).collect();
    r[n] -= 1;
    // (x - 1)^i expanded, low to high.
    let mut pow_xm1 = vec![BigInt::one()];
    for i in 0..a {
        let coeff = binomial(n, i) * (big_pow(p, a - i) - 1);
        for (e, c) in pow_xm1.iter().enumerate() {
            r[e] -= &coeff * c;
        }
        let mut next = vec![BigInt::zero(); pow_xm1.len() + 1];
        for (e, c) in pow_xm1.iter().enumerate() {
            next[e + 1] += c;
            next[e] -= c;
        }
        pow_xm1 = next;
    }
    for _ in 0..a {
        if !divide_by_x_minus_1(&mut r).is_zero() {
            return fail;
        }
    }
    while r.last().is_some_and(Zero::is_zero) {
        r.pop();
    }
    let b = match r.len() {
        0 => BigInt::zero(),
        1 => r[0].clone(),
        _ => return fail,
    };
    if b.is_negative() {
        return fail;
    }
    ShokrollahiReport {
        consistent: true,
        b_a: Some(b),
        gcd_condition,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerator_a2() -> WeightDistribution {
        let mut c = vec![0u64; 18];
        c[0] = 1;
        c[15] = 96;
        c[16] = 12;
        c[17] = 60;
        WeightDistribution::from_u64(&c)
    }

    #[test]
    fn rendering() {
        let w = enumerator_a2();
        assert_eq!(w.render(Convention::Descending), "x^17+96x^2+12x+60");
        let w = WeightDistribution::from_u64(&[1, 0, 0, 0, 0, 0, 42, 6]);
        assert_eq!(w.render(Convention::Plain), "1+42x^6+6x^7");
        assert_eq!("plain".parse::<Convention>().unwrap(), Convention::Plain);
        assert!("other".parse::<Convention>().is_err());
    }

    #[test]
    fn dimension_and_distance() {
        let w = enumerator_a2();
        assert_eq!(w.dimension(13), Some(2));
        assert_eq!(w.min_distance(), Some(15));
        assert_eq!(WeightDistribution::from_u64(&[1, 1, 1]).dimension(2), None);
    }

    #[test]
    fn macwilliams_whole_space() {
        // [3, 3] over GF(3): A_w = C(3,w) 2^w.
        let w = WeightDistribution::from_u64(&[1, 6, 12, 8]);
        let d = macwilliams_transform(&w, 3, 3, 3).unwrap();
        assert_eq!(d.counts_u64(), [1, 0, 0, 0]);
        let back = macwilliams_transform(&d, 3, 0, 3).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn macwilliams_involution_and_errors() {
        let w = WeightDistribution::from_u64(&[1, 0, 0, 0, 0, 0, 42, 6]);
        let d = macwilliams_transform(&w, 7, 2, 7).unwrap();
        assert_eq!(d.total(), BigInt::from(7u64.pow(5)));
        assert_eq!(macwilliams_transform(&d, 7, 5, 7).unwrap(), w);
        // Totals are 3^2 but no code has these distributions.
        let bad = WeightDistribution::from_u64(&[1, 0, 1, 7]);
        assert_eq!(macwilliams_transform(&bad, 3, 2, 3), Err(Error::NonIntegralResult));
        let bad = WeightDistribution::from_u64(&[1, 0, 0, 8]);
        assert_eq!(macwilliams_transform(&bad, 3, 2, 3), Err(Error::NonIntegralResult));
        assert_eq!(macwilliams_transform(&w, 7, 3, 7), Err(Error::NonIntegralResult));
    }

    #[test]
    fn shokrollahi_a2() {
        let r = shokrollahi_check(&enumerator_a2(), 17, 2, 13);
        assert!(r.consistent);
        assert_eq!(r.b_a, Some(BigInt::from(96)));
        assert!(r.gcd_condition);
        let mut c = enumerator_a2().counts_u64();
        c[16] += 1;
        assert!(!shokrollahi_check(&WeightDistribution::from_u64(&c), 17, 2, 13).consistent);
    }

    #[test]
    fn shokrollahi_repetition() {
        // [4, 1] repetition code over GF(5): 1 + 4x^4.
        let w = WeightDistribution::from_u64(&[1, 0, 0, 0, 4]);
        let r = shokrollahi_check(&w, 4, 1, 5);
        assert!(r.consistent);
        assert_eq!(r.b_a, Some(BigInt::zero()));
    }
}
