use std::fmt;

use super::poly::{self, PolyFp};
use super::CurvePoint;
use crate::error::{Error, Result};
use crate::field::{sqrt_table, PrimeField};

/// `y^2 + h(x) y = f(x)` with integer coefficients listed from the constant
/// term up.
///
/// Odd-degree `f` gives one point at infinity and supports one-point codes.
/// Even-degree models are accepted for point counting only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperellipticModel {
    f: Vec<i64>,
    h: Vec<i64>,
}

fn degree(c: &[i64]) -> Option<usize> {
    c.iter().rposition(|&v| v != 0)
}

impl HyperellipticModel {
    pub fn new(f: Vec<i64>, h: Vec<i64>) -> Result<Self> {
        let df = degree(&f).ok_or_else(|| Error::InvalidModel("f is zero".into()))?;
        let dh = degree(&h);
        let d = df.max(2 * dh.unwrap_or(0));
        if d < 3 {
            return Err(Error::InvalidModel(format!("model degree {d} < 3")));
        }
        let mut f = f;
        let mut h = h;
        f.truncate(df + 1);
        h.truncate(dh.map_or(0, |d| d + 1));
        Ok(Self { f, h })
    }

    /// `y^2 = x^p - x`.
    pub fn x_pow_minus_x(p: usize) -> Result<Self> {
        let mut f = vec![0; p + 1];
        f[1] = -1;
        f[p] = 1;
        Self::new(f, Vec::new())
    }

    pub fn f(&self) -> &[i64] {
        &self.f
    }

    pub fn h(&self) -> &[i64] {
        &self.h
    }

    /// `max(deg f, 2 deg h)`, the degree of `4f + h^2`.
    pub fn degree(&self) -> usize {
        (self.f.len() - 1).max(2 * self.h.len().saturating_sub(1))
    }

    pub fn is_odd_degree(&self) -> bool {
        self.degree() % 2 == 1
    }

    pub fn genus(&self) -> usize {
        (self.degree() - 1) / 2
    }

    /// Reduction modulo `p`; checks that the model stays smooth, including
    /// at infinity.
    pub fn over(&self, field: PrimeField) -> Result<HyperellipticFp> {
        let p = field.modulus();
        let f = poly::reduce(field, &self.f);
        let h = poly::reduce(field, &self.h);
        let d = self.degree();
        let g = self.genus();
        let coeff = |c: &PolyFp, i: usize| c.get(i).copied().unwrap_or(0);
        let nonsingular = if p == 2 {
            let smooth_at_infinity = if d % 2 == 1 {
                coeff(&f, d) != 0
            } else {
                coeff(&h, g + 1) != 0
            };
            // Affine singular points satisfy h(x) = 0 and f'^2 + h'^2 f = 0.
            let fd = poly::derivative(&f, p);
            let hd = poly::derivative(&h, p);
            let w = poly::add(&poly::mul(&fd, &fd, p), &poly::mul(&poly::mul(&hd, &hd, p), &f, p), p);
            smooth_at_infinity && !h.is_empty() && (h.len() == 1 || poly::coprime(&h, &w, field))
        } else {
            // 4f + h^2 squarefree of full degree.
            let q = poly::add(&poly::scale(&f, 4, p), &poly::mul(&h, &h, p), p);
            let qd = poly::derivative(&q, p);
            q.len() == d + 1 && !qd.is_empty() && poly::coprime(&q, &qd, field)
        };
        if !nonsingular {
            return Err(Error::SingularReduction(p));
        }
        Ok(HyperellipticFp {
            field,
            f,
            h,
            odd: d % 2 == 1,
            genus: g,
        })
    }
}

impl fmt::Display for HyperellipticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn render(c: &[i64]) -> String {
            let mut out = String::new();
            for (i, &v) in c.iter().enumerate().rev() {
                if v == 0 {
                    continue;
                }
                let mono = match i {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{i}"),
                };
                let mag = v.unsigned_abs();
                let body = match (mag, mono.is_empty()) {
                    (_, true) => mag.to_string(),
                    (1, false) => mono,
                    (_, false) => format!("{mag}*{mono}"),
                };
                if out.is_empty() {
                    if v < 0 {
                        out.push('-');
                    }
                    out.push_str(&body);
                } else {
                    out.push_str(if v < 0 { " - " } else { " + " });
                    out.push_str(&body);
                }
            }
            if out.is_empty() {
                out.push('0');
            }
            out
        }
        if self.h.is_empty() {
            write!(f, "y^2 = {}", render(&self.f))
        } else {
            write!(f, "y^2 + ({})*y = {}", render(&self.h), render(&self.f))
        }
    }
}

/// A hyperelliptic model reduced modulo a prime where it stays smooth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticFp {
    field: PrimeField,
    f: PolyFp,
    h: PolyFp,
    odd: bool,
    genus: usize,
}

impl HyperellipticFp {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Pole order of `y` at the point at infinity of an odd-degree model.
    pub fn y_pole_order(&self) -> Option<usize> {
        self.odd.then(|| 2 * self.genus + 1)
    }

    pub fn contains(&self, pt: &CurvePoint) -> bool {
        match *pt {
            CurvePoint::Infinity => self.odd,
            CurvePoint::Affine { x, y } => {
                let p = self.field.modulus();
                if x.modulus() != p || y.modulus() != p {
                    return false;
                }
                let (x, y) = (x.value(), y.value());
                let hx = poly::eval(&self.h, x, p);
                (y * y + hx * y) % p == poly::eval(&self.f, x, p)
            }
        }
    }

    /// Affine GF(p)-points sorted by `(x, y)`.
    pub fn affine_points(&self) -> Vec<CurvePoint> {
        let fld = self.field;
        let p = fld.modulus();
        let mut pts = Vec::new();
        if p == 2 {
            for x in fld.elements() {
                for y in fld.elements() {
                    let pt = CurvePoint::Affine { x, y };
                    if self.contains(&pt) {
                        pts.push(pt);
                    }
                }
            }
        } else {
            let roots = sqrt_table(p);
            let two_inv = fld.elem(2).inv().unwrap();
            for x in fld.elements() {
                let hx = fld.elem(poly::eval(&self.h, x.value(), p) as i64);
                let fx = fld.elem(poly::eval(&self.f, x.value(), p) as i64);
                let disc = fld.elem(4) * fx + hx * hx;
                let Some(s) = roots[disc.value() as usize] else {
                    continue;
                };
                let s = fld.elem(s as i64);
                pts.push(CurvePoint::Affine { x, y: (s - hx) * two_inv });
                if !s.is_zero() {
                    pts.push(CurvePoint::Affine { x, y: (-s - hx) * two_inv });
                }
            }
        }
        pts.sort();
        for pt in &pts {
            assert!(self.contains(pt), "enumerated point {pt} is not on the curve");
        }
        pts
    }

    /// Rational points at infinity of the smooth model: one for odd degree,
    /// otherwise the roots of `Y^2 + h_{g+1} Y - f_{2g+2}`.
    pub fn points_at_infinity(&self) -> usize {
        if self.odd {
            return 1;
        }
        let p = self.field.modulus();
        let top = 2 * self.genus + 2;
        let lead_f = self.f.get(top).copied().unwrap_or(0);
        let lead_h = self.h.get(self.genus + 1).copied().unwrap_or(0);
        (0..p)
            .filter(|&y| (y * y + lead_h * y + p - lead_f) % p == 0)
            .count()
    }

    pub fn count_points(&self) -> u64 {
        (self.affine_points().len() + self.points_at_infinity()) as u64
    }

    /// All points, infinity last. Only odd-degree models have a single,
    /// unambiguous point at infinity.
    pub fn enumerate_points(&self) -> Result<Vec<CurvePoint>> {
        if !self.odd {
            return Err(Error::InvalidModel(
                "point listing needs an odd-degree model".into(),
            ));
        }
        let mut pts = self.affine_points();
        pts.push(CurvePoint::Infinity);
        Ok(pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn x7_minus_x() {
        let c = HyperellipticModel::x_pow_minus_x(7).unwrap();
        assert_eq!(c.genus(), 3);
        let r = c.over(gf(7)).unwrap();
        let pts = r.enumerate_points().unwrap();
        assert_eq!(pts.len(), 8);
        assert!(pts[..7].iter().all(|p| matches!(p, CurvePoint::Affine { y, .. } if y.is_zero())));
        assert_eq!(r.y_pole_order(), Some(7));
        assert_eq!(c.to_string(), "y^2 = x^7 - x");
    }

    #[test]
    fn validation() {
        assert!(HyperellipticModel::new(vec![0, 1], vec![]).is_err());
        assert!(HyperellipticModel::new(vec![0, 1, 1], vec![1]).is_err());
        // y^2 = x^3 has a cusp at the origin
        let cusp = HyperellipticModel::new(vec![0, 0, 0, 1], vec![]).unwrap();
        assert_eq!(cusp.over(gf(5)).unwrap_err(), Error::SingularReduction(5));
        // leading coefficient vanishing mod p
        let c = HyperellipticModel::new(vec![1, 0, 0, 7], vec![]).unwrap();
        assert_eq!(c.over(gf(7)).unwrap_err(), Error::SingularReduction(7));
        // char 2 needs h != 0
        let c = HyperellipticModel::new(vec![0, 1, 1, 1], vec![]).unwrap();
        assert!(c.over(gf(2)).is_err());
        let c = HyperellipticModel::new(vec![0, 1, 1, 1], vec![1]).unwrap();
        assert!(c.over(gf(2)).is_ok());
    }

    #[test]
    fn matches_brute_force() {
        let c = HyperellipticModel::new(vec![0, 1, 1, 1], vec![1]).unwrap();
        for p in [2u64, 3, 5, 7, 11, 13] {
            let r = c.over(gf(p)).unwrap();
            let fld = gf(p);
            let brute = fld
                .elements()
                .flat_map(|x| fld.elements().map(move |y| CurvePoint::Affine { x, y }))
                .filter(|pt| r.contains(pt))
                .count();
            assert_eq!(r.affine_points().len(), brute, "p={p}");
        }
    }

    #[test]
    fn quartic_points_at_infinity() {
        // y^2 + (x^2 + 1) y = x^3 - 2x^2 + x has two points at infinity
        let c = HyperellipticModel::new(vec![0, 1, -2, 1], vec![1, 0, 1]).unwrap();
        assert_eq!(c.degree(), 4);
        assert_eq!(c.genus(), 1);
        let r = c.over(gf(5)).unwrap();
        assert_eq!(r.points_at_infinity(), 2);
        assert!(r.enumerate_points().is_err());
    }
}
