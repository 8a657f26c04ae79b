//! Prime-field arithmetic over GF(p) for word-sized primes.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest modulus accepted (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Validates `p` by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn elem(&self, v: i64) -> Fp {
        Fp {
            value: v.rem_euclid(self.p as i64) as u64,
            p: self.p,
        }
    }

    pub fn zero(&self) -> Fp {
        Fp { value: 0, p: self.p }
    }

    pub fn one(&self) -> Fp {
        Fp { value: 1, p: self.p }
    }

    /// All elements in increasing order of representative.
    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.p).map(move |value| Fp { value, p: self.p })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of GF(p), carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    p: u64,
}

/// The arithmetic operations exposed through [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Raise `a` to the power given by the representative of `b`.
    Pow,
    Inv,
    Neg,
}

impl Fp {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn centered(&self) -> i64 {
        let v = self.value as i64;
        if 2 * self.value > self.p {
            v - self.p as i64
        } else {
            v
        }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = self.value;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        Fp { value: acc, p: self.p }
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(&self) -> Result<Fp> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.p - 2))
    }

    fn check(&self, other: &Fp) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Fp) -> Result<Fp> {
        self.check(rhs)?;
        Ok(Fp {
            value: (self.value + rhs.value) % self.p,
            p: self.p,
        })
    }

    pub fn try_sub(&self, rhs: &Fp) -> Result<Fp> {
        self.check(rhs)?;
        Ok(Fp {
            value: (self.value + self.p - rhs.value) % self.p,
            p: self.p,
        })
    }

    pub fn try_mul(&self, rhs: &Fp) -> Result<Fp> {
        self.check(rhs)?;
        Ok(Fp {
            value: self.value * rhs.value % self.p,
            p: self.p,
        })
    }

    pub fn try_div(&self, rhs: &Fp) -> Result<Fp> {
        self.check(rhs)?;
        self.try_mul(&rhs.inv()?)
    }
}

/// Single entry point for the field operations. Unary operations ignore `b`
/// apart from the modulus check.
pub fn field_arith(a: Fp, b: Fp, op: FieldOp) -> Result<Fp> {
    a.check(&b)?;
    match op {
        FieldOp::Add => a.try_add(&b),
        FieldOp::Sub => a.try_sub(&b),
        FieldOp::Mul => a.try_mul(&b),
        FieldOp::Div => a.try_div(&b),
        FieldOp::Pow => Ok(a.pow(b.value)),
        FieldOp::Inv => a.inv(),
        FieldOp::Neg => Ok(-a),
    }
}

// Operator impls panic on mismatched moduli; use the `try_*` forms when the
// moduli are not known to agree.
impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.try_add(&rhs).expect("modulus mismatch")
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.try_sub(&rhs).expect("modulus mismatch")
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.try_mul(&rhs).expect("modulus mismatch")
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self.try_div(&rhs).expect("modulus mismatch or division by zero")
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    if p == 2 {
        return Err(Error::EvenModulus);
    }
    let field = PrimeField::new(p)?;
    let r = field.elem(a).pow((p - 1) / 2).value();
    Ok(match r {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

/// Table `sqrt[v]` giving some square root of `v`, or `None` for non-squares.
/// Built by exhaustion, which is fine for desk-scale moduli.
pub(crate) fn sqrt_table(p: u64) -> Vec<Option<u64>> {
    let mut table = vec![None; p as usize];
    for y in 0..p {
        let s = (y * y % p) as usize;
        if table[s].is_none() {
            table[s] = Some(y);
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_examples() {
        let f = gf(7);
        assert_eq!(f.elem(3).inv().unwrap(), f.elem(5));
        assert_eq!(f.elem(5).inv().unwrap(), f.elem(3));
        assert_eq!(f.elem(2) + f.elem(6), f.elem(1));
        assert_eq!(f.elem(-1).value(), 6);
    }

    #[test]
    fn field_arith_dispatch() {
        let f = gf(7);
        let (a, b) = (f.elem(3), f.elem(4));
        assert_eq!(field_arith(a, b, FieldOp::Add).unwrap(), f.elem(0));
        assert_eq!(field_arith(a, b, FieldOp::Sub).unwrap(), f.elem(6));
        assert_eq!(field_arith(a, b, FieldOp::Mul).unwrap(), f.elem(5));
        assert_eq!(field_arith(a, b, FieldOp::Div).unwrap(), f.elem(6));
        assert_eq!(field_arith(a, b, FieldOp::Pow).unwrap(), f.elem(4));
        assert_eq!(field_arith(a, b, FieldOp::Inv).unwrap(), f.elem(5));
        assert_eq!(field_arith(a, b, FieldOp::Neg).unwrap(), f.elem(4));
    }

    #[test]
    fn errors() {
        let f = gf(7);
        assert!(matches!(f.zero().inv(), Err(Error::ZeroInverse)));
        assert!(matches!(
            field_arith(f.one(), f.zero(), FieldOp::Div),
            Err(Error::ZeroInverse)
        ));
        let g = gf(5);
        assert!(matches!(
            f.one().try_add(&g.one()),
            Err(Error::ModulusMismatch(7, 5))
        ));
        assert!(matches!(PrimeField::new(15), Err(Error::NotPrime(15))));
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(PrimeField::new(MAX_MODULUS).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn inverse_exhaustive_small_primes() {
        for p in (2..=101).filter(|&p| is_prime(p)) {
            let f = gf(p);
            for a in f.elements().filter(|a| !a.is_zero()) {
                assert_eq!(a * a.inv().unwrap(), f.one(), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(-4, 5).unwrap(), 1);
        assert_eq!(legendre_symbol(-3, 7).unwrap(), 1);
        assert_eq!(legendre_symbol(3, 7).unwrap(), -1);
        assert_eq!(legendre_symbol(14, 7).unwrap(), 0);
        assert!(matches!(legendre_symbol(1, 2), Err(Error::EvenModulus)));
    }

    #[test]
    fn legendre_matches_square_enumeration() {
        for p in (3..=101).filter(|&p| is_prime(p)) {
            let squares: Vec<u64> = (1..p).map(|y| y * y % p).collect();
            for a in -(p as i64)..(2 * p as i64) {
                let r = a.rem_euclid(p as i64) as u64;
                let expected = if r == 0 {
                    0
                } else if squares.contains(&r) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre_symbol(a, p).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn centered_representative() {
        let f = gf(7);
        assert_eq!(f.elem(6).centered(), -1);
        assert_eq!(f.elem(3).centered(), 3);
        assert_eq!(f.elem(4).centered(), -3);
    }
}
