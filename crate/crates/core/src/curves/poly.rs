//! Dense univariate polynomials over GF(p), coefficients low to high.

use crate::field::PrimeField;

pub(crate) type PolyFp = Vec<u64>;

pub(crate) fn reduce(field: PrimeField, coeffs: &[i64]) -> PolyFp {
    let mut out: PolyFp = coeffs.iter().map(|&c| field.elem(c).value()).collect();
    trim(&mut out);
    out
}

pub(crate) fn trim(a: &mut PolyFp) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

pub(crate) fn derivative(a: &[u64], p: u64) -> PolyFp {
    let mut out: PolyFp = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (i as u64 % p) * c % p)
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> PolyFp {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + y) % p;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> PolyFp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> PolyFp {
    let mut out: PolyFp = a.iter().map(|&x| x * c % p).collect();
    trim(&mut out);
    out
}

fn rem(a: &[u64], b: &[u64], field: PrimeField) -> PolyFp {
    let p = field.modulus();
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = field.elem(b[db] as i64).inv().expect("nonzero leading coefficient").value();
    while r.len() > db {
        let lead = *r.last().unwrap() * inv % p;
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn gcd(a: &[u64], b: &[u64], field: PrimeField) -> PolyFp {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, field);
        a = b;
        b = r;
    }
    a
}

/// Degree of the gcd; zero (a nonzero constant) means coprime.
pub(crate) fn coprime(a: &[u64], b: &[u64], field: PrimeField) -> bool {
    gcd(a, b, field).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_detects_repeated_root() {
        let f = PrimeField::new(7).unwrap();
        // (x - 1)^2 (x + 2)
        let a = mul(&mul(&reduce(f, &[-1, 1]), &reduce(f, &[-1, 1]), 7), &reduce(f, &[2, 1]), 7);
        let d = derivative(&a, 7);
        assert_eq!(gcd(&a, &d, f).len(), 2);
        assert!(coprime(&reduce(f, &[0, -1, 0, 0, 0, 0, 0, 1]), &[6], f));
        assert_eq!(eval(&reduce(f, &[1, 2, 3]), 2, 7), (1 + 4 + 12) % 7);
    }
}
