use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::CurvePoint;
use crate::error::{Error, Result};
use crate::field::{sqrt_table, Fp, PrimeField};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeierstrassModel {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub a4: i64,
    pub a6: i64,
}

/// The b-invariants `(b2, b4, b6, b8)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BInvariants {
    pub b2: BigInt,
    pub b4: BigInt,
    pub b6: BigInt,
    pub b8: BigInt,
}

impl WeierstrassModel {
    /// Rejects models with vanishing discriminant.
    pub fn new(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64) -> Result<Self> {
        let m = Self { a1, a2, a3, a4, a6 };
        if m.discriminant().is_zero() {
            return Err(Error::SingularModel);
        }
        Ok(m)
    }

    pub fn coefficients(&self) -> [i64; 5] {
        [self.a1, self.a2, self.a3, self.a4, self.a6]
    }

    pub fn b_invariants(&self) -> BInvariants {
        let [a1, a2, a3, a4, a6] = self.coefficients().map(BigInt::from);
        BInvariants {
            b2: &a1 * &a1 + 4 * &a2,
            b4: 2 * &a4 + &a1 * &a3,
            b6: &a3 * &a3 + 4 * &a6,
            b8: &a1 * &a1 * &a6 + 4 * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3 - &a4 * &a4,
        }
    }

    /// `-b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6`.
    pub fn discriminant(&self) -> BigInt {
        let BInvariants { b2, b4, b6, b8 } = self.b_invariants();
        -(&b2 * &b2 * &b8) - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6
    }

    /// Reduction modulo `p`; fails when `p` divides the discriminant.
    pub fn over(&self, field: PrimeField) -> Result<EllipticCurveFp> {
        let p = BigInt::from(field.modulus());
        if (self.discriminant() % &p).is_zero() {
            return Err(Error::SingularReduction(field.modulus()));
        }
        let e = |v: i64| field.elem(v);
        Ok(EllipticCurveFp {
            field,
            a1: e(self.a1),
            a2: e(self.a2),
            a3: e(self.a3),
            a4: e(self.a4),
            a6: e(self.a6),
        })
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(out: &mut String, c: i64, mono: &str) {
            if c == 0 {
                return;
            }
            let sign = if c < 0 { "-" } else { "+" };
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            match (mag, mono) {
                (m, "") => out.push_str(&m.to_string()),
                (1, mono) => out.push_str(mono),
                (m, mono) => out.push_str(&format!("{m}*{mono}")),
            }
        }
        let mut lhs = String::from("y^2");
        for (c, mono) in [(self.a1, "x*y"), (self.a3, "y")] {
            if c != 0 {
                let sign = if c < 0 { "-" } else { "+" };
                let mag = c.unsigned_abs();
                if mag == 1 {
                    lhs.push_str(&format!(" {sign} {mono}"));
                } else {
                    lhs.push_str(&format!(" {sign} {mag}*{mono}"));
                }
            }
        }
        let mut rhs = String::from("x^3");
        let mut rest = String::new();
        term(&mut rest, self.a2, "x^2");
        term(&mut rest, self.a4, "x");
        term(&mut rest, self.a6, "");
        if !rest.is_empty() {
            if let Some(stripped) = rest.strip_prefix('-') {
                rhs.push_str(&format!(" - {stripped}"));
            } else {
                rhs.push_str(&format!(" + {rest}"));
            }
        }
        write!(f, "{lhs} = {rhs}")
    }
}

/// A Weierstrass model reduced modulo a prime of good reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EllipticCurveFp {
    field: PrimeField,
    a1: Fp,
    a2: Fp,
    a3: Fp,
    a4: Fp,
    a6: Fp,
}

/// Invariant factors `(d1, d2)` with `E(F_p) = C_d1 x C_d2` and `d1 | d2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupStructure {
    pub d1: u64,
    pub d2: u64,
}

impl EllipticCurveFp {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn contains(&self, pt: &CurvePoint) -> bool {
        match *pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                if x.modulus() != self.field.modulus() || y.modulus() != self.field.modulus() {
                    return false;
                }
                let lhs = y * y + self.a1 * x * y + self.a3 * y;
                let rhs = x * x * x + self.a2 * x * x + self.a4 * x + self.a6;
                lhs == rhs
            }
        }
    }

    /// All GF(p)-points, sorted by `(x, y)` with infinity last.
    pub fn enumerate_points(&self) -> Vec<CurvePoint> {
        let f = self.field;
        let p = f.modulus();
        let mut pts = Vec::new();
        if p == 2 {
            for x in f.elements() {
                for y in f.elements() {
                    let pt = CurvePoint::Affine { x, y };
                    if self.contains(&pt) {
                        pts.push(pt);
                    }
                }
            }
        } else {
            // (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2
            let roots = sqrt_table(p);
            let two_inv = f.elem(2).inv().unwrap();
            let four = f.elem(4);
            for x in f.elements() {
                let lin = self.a1 * x + self.a3;
                let rhs = four * (x * x * x + self.a2 * x * x + self.a4 * x + self.a6) + lin * lin;
                let Some(s) = roots[rhs.value() as usize] else {
                    continue;
                };
                let s = f.elem(s as i64);
                let mut ys = vec![(s - lin) * two_inv];
                if !s.is_zero() {
                    ys.push((-s - lin) * two_inv);
                }
                for y in ys {
                    pts.push(CurvePoint::Affine { x, y });
                }
            }
        }
        pts.sort();
        pts.push(CurvePoint::Infinity);
        for pt in &pts {
            assert!(self.contains(pt), "enumerated point {pt} is not on the curve");
        }
        pts
    }

    pub fn count_points(&self) -> u64 {
        self.enumerate_points().len() as u64
    }

    fn check(&self, pt: &CurvePoint) -> Result<()> {
        if self.contains(pt) {
            Ok(())
        } else {
            Err(Error::PointNotOnCurve)
        }
    }

    /// `-(x, y) = (x, -y - a1 x - a3)`.
    pub fn neg(&self, pt: &CurvePoint) -> Result<CurvePoint> {
        self.check(pt)?;
        Ok(self.neg_unchecked(pt))
    }

    fn neg_unchecked(&self, pt: &CurvePoint) -> CurvePoint {
        match *pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x,
                y: -y - self.a1 * x - self.a3,
            },
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (*p, *q) {
            (CurvePoint::Infinity, _) => return *q,
            (_, CurvePoint::Infinity) => return *p,
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let lambda = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else {
            let denom = y1 + y1 + self.a1 * x1 + self.a3;
            if y1 != y2 || denom.is_zero() {
                return CurvePoint::Infinity;
            }
            let three = self.field.elem(3);
            let two = self.field.elem(2);
            (three * x1 * x1 + two * self.a2 * x1 + self.a4 - self.a1 * y1) / denom
        };
        let nu = y1 - lambda * x1;
        let x3 = lambda * lambda + self.a1 * lambda - self.a2 - x1 - x2;
        let y3 = -(lambda + self.a1) * x3 - nu - self.a3;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    /// `k * pt` by double-and-add; negative `k` uses the inverse.
    pub fn mul(&self, pt: &CurvePoint, k: i64) -> Result<CurvePoint> {
        self.check(pt)?;
        let mut base = if k < 0 { self.neg_unchecked(pt) } else { *pt };
        let mut k = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Order of `pt` by repeated addition.
    pub fn order(&self, pt: &CurvePoint) -> Result<u64> {
        self.check(pt)?;
        let mut acc = *pt;
        let mut n = 1;
        while acc != CurvePoint::Infinity {
            acc = self.add_unchecked(&acc, pt);
            n += 1;
        }
        Ok(n)
    }

    /// Invariant factors from the element orders: `d2` is the exponent
    /// (the largest order) and `d1 = |E| / d2`.
    pub fn group_structure(&self) -> GroupStructure {
        let pts = self.enumerate_points();
        let total = pts.len() as u64;
        let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
        for pt in &pts {
            *by_order.entry(self.order(pt).unwrap()).or_default() += 1;
        }
        let d2 = *by_order.keys().next_back().unwrap();
        let d1 = total / d2;
        assert_eq!(d1 * d2, total);
        assert_eq!(d2 % d1, 0, "d1 must divide d2");
        assert_eq!((self.field.modulus() - 1) % d1, 0, "d1 must divide p - 1");
        GroupStructure { d1, d2 }
    }
}

/// Frobenius trace `p + 1 - |E(F_p)|`.
pub fn trace_of_frobenius(curve: &EllipticCurveFp) -> i64 {
    let p = curve.field().modulus() as i64;
    p + 1 - curve.count_points().to_i64().unwrap()
}
