//! Explicit Riemann–Roch bases: monomials with bounded pole order at the
//! point at infinity, and quadratic-form ratios on a plane cubic.

use std::fmt;

use crate::curves::{CurvePoint, EllipticCurveFp};
use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};

/// A point that can be compared up to its canonical representative.
pub trait EvaluationPoint: Clone + Eq + std::hash::Hash + fmt::Display {
    fn canonical(&self) -> Self {
        self.clone()
    }
}

impl EvaluationPoint for CurvePoint {}

impl EvaluationPoint for ProjectivePoint {
    fn canonical(&self) -> Self {
        self.normalized()
    }
}

/// Something that can be evaluated at a point to give a field element.
pub trait EvaluationFunction {
    type Point: EvaluationPoint;
    fn evaluate(&self, pt: &Self::Point, field: PrimeField) -> Result<Fp>;
}

/// Which one-point space to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnePointKind {
    /// Weierstrass cubic: `x` has pole order 2, `y` pole order 3.
    Elliptic,
    /// Odd-degree hyperelliptic model `y^2 + h y = f` with `deg f = degree`.
    Hyperelliptic { degree: u32 },
}

impl OnePointKind {
    pub fn y_weight(&self) -> u32 {
        match *self {
            OnePointKind::Elliptic => 3,
            OnePointKind::Hyperelliptic { degree } => degree,
        }
    }

    pub fn genus(&self) -> u32 {
        (self.y_weight() - 1) / 2
    }
}

/// `x^i y^j` with `j` in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialFunction {
    pub i: u32,
    pub j: u32,
    /// Pole order at infinity, `2i + w j`.
    pub pole_order: u32,
}

impl fmt::Display for MonomialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}*y^{}", self.i, self.j)
    }
}

/// Monomials with pole order at most `a` at infinity, ascending.
pub fn one_point_basis(kind: OnePointKind, a: u32) -> Vec<MonomialFunction> {
    let w = kind.y_weight();
    let mut out = Vec::new();
    for j in 0..=1u32 {
        if j * w > a {
            break;
        }
        for i in 0..=(a - j * w) / 2 {
            out.push(MonomialFunction {
                i,
                j,
                pole_order: 2 * i + w * j,
            });
        }
    }
    out.sort_by_key(|m| m.pole_order);
    out
}

/// `x(P)^i y(P)^j`.
pub fn eval_monomial(m: &MonomialFunction, pt: &CurvePoint) -> Result<Fp> {
    let (x, y) = pt.affine().ok_or(Error::InfinityEvaluation)?;
    Ok(x.pow(u64::from(m.i)) * y.pow(u64::from(m.j)))
}

impl EvaluationFunction for MonomialFunction {
    type Point = CurvePoint;

    fn evaluate(&self, pt: &CurvePoint, field: PrimeField) -> Result<Fp> {
        if let Some((x, _)) = pt.affine() {
            if x.modulus() != field.modulus() {
                return Err(Error::ModulusMismatch(field.modulus(), x.modulus()));
            }
        }
        eval_monomial(self, pt).map_err(|e| match e {
            Error::InfinityEvaluation => Error::SupportCollision(pt.to_string()),
            other => other,
        })
    }
}

/// A point `[x : y : z]` of the projective plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(pub [Fp; 3]);

impl ProjectivePoint {
    pub fn new(field: PrimeField, x: i64, y: i64, z: i64) -> Result<Self> {
        let pt = Self([field.elem(x), field.elem(y), field.elem(z)]);
        if pt.0.iter().all(Fp::is_zero) {
            return Err(Error::ZeroTriple);
        }
        Ok(pt)
    }

    /// Representative whose first nonzero coordinate is 1. The zero
    /// triple is returned unchanged.
    pub fn normalized(&self) -> Self {
        match self.0.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let inv = lead.inv().unwrap();
                Self(self.0.map(|c| c * inv))
            }
            None => *self,
        }
    }

    pub fn scaled(&self, lambda: Fp) -> Self {
        Self(self.0.map(|c| c * lambda))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.0;
        write!(f, "[{x}, {y}, {z}]")
    }
}

/// Points of a Weierstrass curve in `[x : y : z]` coordinates, normalized
/// and sorted; the point at infinity is `[0 : 1 : 0]`.
pub fn projective_points(curve: &EllipticCurveFp) -> Vec<ProjectivePoint> {
    let field = curve.field();
    let mut pts: Vec<ProjectivePoint> = curve
        .enumerate_points()
        .into_iter()
        .map(|pt| match pt.affine() {
            Some((x, y)) => ProjectivePoint([x, y, field.one()]),
            None => ProjectivePoint([field.zero(), field.one(), field.zero()]),
        })
        .map(|pt| pt.normalized())
        .collect();
    pts.sort();
    pts
}

/// Homogeneous quadratic form, coefficients of `x^2, y^2, z^2, xy, yz, xz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticForm(pub [i64; 6]);

impl QuadraticForm {
    pub const X2: Self = Self([1, 0, 0, 0, 0, 0]);
    pub const Y2: Self = Self([0, 1, 0, 0, 0, 0]);
    pub const Z2: Self = Self([0, 0, 1, 0, 0, 0]);
    pub const XY: Self = Self([0, 0, 0, 1, 0, 0]);
    pub const YZ: Self = Self([0, 0, 0, 0, 1, 0]);
    pub const XZ: Self = Self([0, 0, 0, 0, 0, 1]);
    /// `x^2 + y^2 + z^2`.
    pub const SUM_OF_SQUARES: Self = Self([1, 1, 1, 0, 0, 0]);

    pub fn eval(&self, pt: &ProjectivePoint) -> Fp {
        let [x, y, z] = pt.0;
        let field = PrimeField::new(x.modulus()).unwrap();
        let monos = [x * x, y * y, z * z, x * y, y * z, x * z];
        monos
            .iter()
            .zip(self.0)
            .fold(field.zero(), |acc, (&m, c)| acc + m * field.elem(c))
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["x^2", "y^2", "z^2", "x*y", "y*z", "x*z"];
        let mut parts = Vec::new();
        for (c, name) in self.0.iter().zip(NAMES) {
            match c {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{c}*{name}")),
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Ratio of two quadratic forms; a well-defined function on the plane
/// away from the zeros of the denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjectiveFormRatio {
    pub numerator: QuadraticForm,
    pub denominator: QuadraticForm,
}

impl fmt::Display for ProjectiveFormRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator == self.denominator {
            return write!(f, "1");
        }
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

pub fn eval_projective(r: &ProjectiveFormRatio, pt: &ProjectivePoint) -> Result<Fp> {
    if pt.0.iter().all(Fp::is_zero) {
        return Err(Error::ZeroTriple);
    }
    let den = r.denominator.eval(pt);
    if den.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    Ok(r.numerator.eval(pt) / den)
}

impl EvaluationFunction for ProjectiveFormRatio {
    type Point = ProjectivePoint;

    fn evaluate(&self, pt: &ProjectivePoint, field: PrimeField) -> Result<Fp> {
        if pt.0[0].modulus() != field.modulus() {
            return Err(Error::ModulusMismatch(field.modulus(), pt.0[0].modulus()));
        }
        eval_projective(self, pt).map_err(|e| match e {
            Error::DenominatorVanishes => Error::SupportCollision(pt.to_string()),
            other => other,
        })
    }
}

/// `{1, x^2/phi, y^2/phi, z^2/phi, xy/phi, yz/phi}` with
/// `phi = x^2 + y^2 + z^2`; `1` is stored as `phi/phi`.
pub fn conic_basis() -> Vec<ProjectiveFormRatio> {
    let phi = QuadraticForm::SUM_OF_SQUARES;
    [
        phi,
        QuadraticForm::X2,
        QuadraticForm::Y2,
        QuadraticForm::Z2,
        QuadraticForm::XY,
        QuadraticForm::YZ,
    ]
    .into_iter()
    .map(|numerator| ProjectiveFormRatio {
        numerator,
        denominator: phi,
    })
    .collect()
}

/// All six quadratic monomials over `phi`; a basis of the full space of
/// conic ratios on a plane cubic.
pub fn full_conic_basis() -> Vec<ProjectiveFormRatio> {
    [
        QuadraticForm::X2,
        QuadraticForm::Y2,
        QuadraticForm::Z2,
        QuadraticForm::XY,
        QuadraticForm::YZ,
        QuadraticForm::XZ,
    ]
    .into_iter()
    .map(|numerator| ProjectiveFormRatio {
        numerator,
        denominator: QuadraticForm::SUM_OF_SQUARES,
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::WeierstrassModel;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn exps(v: &[MonomialFunction]) -> Vec<(u32, u32)> {
        v.iter().map(|m| (m.i, m.j)).collect()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(exps(&one_point_basis(OnePointKind::Elliptic, 2)), [(0, 0), (1, 0)]);
        assert_eq!(
            exps(&one_point_basis(OnePointKind::Elliptic, 6)),
            [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0)]
        );
        assert_eq!(
            exps(&one_point_basis(OnePointKind::Hyperelliptic { degree: 7 }, 4)),
            [(0, 0), (1, 0), (2, 0)]
        );
        assert_eq!(one_point_basis(OnePointKind::Elliptic, 0).len(), 1);
    }

    #[test]
    fn elliptic_dimension_and_distinct_poles() {
        for a in 1..=30 {
            let b = one_point_basis(OnePointKind::Elliptic, a);
            assert_eq!(b.len(), a as usize, "a={a}");
            let mut poles: Vec<u32> = b.iter().map(|m| m.pole_order).collect();
            poles.dedup();
            assert_eq!(poles.len(), b.len());
            assert!(!poles.contains(&1));
        }
    }

    #[test]
    fn monomial_evaluation() {
        let f13 = gf(13);
        let pt = CurvePoint::Affine { x: f13.elem(5), y: f13.elem(3) };
        let one = MonomialFunction { i: 0, j: 0, pole_order: 0 };
        let x = MonomialFunction { i: 1, j: 0, pole_order: 2 };
        assert_eq!(eval_monomial(&one, &pt).unwrap(), f13.one());
        assert_eq!(eval_monomial(&x, &pt).unwrap(), f13.elem(5));
        let f7 = gf(7);
        let xy = MonomialFunction { i: 1, j: 1, pole_order: 5 };
        let pt = CurvePoint::Affine { x: f7.elem(1), y: f7.elem(3) };
        assert_eq!(eval_monomial(&xy, &pt).unwrap(), f7.elem(3));
        assert_eq!(
            eval_monomial(&x, &CurvePoint::Infinity),
            Err(Error::InfinityEvaluation)
        );
    }

    #[test]
    fn conic_ratios() {
        let basis = conic_basis();
        assert_eq!(basis.len(), 6);
        let f7 = gf(7);
        let p4 = ProjectivePoint::new(f7, 1, 0, 2).unwrap();
        assert_eq!(eval_projective(&basis[0], &p4).unwrap(), f7.one());
        assert_eq!(eval_projective(&basis[1], &p4).unwrap(), f7.elem(3));
        let p1 = ProjectivePoint::new(f7, 0, 0, 1).unwrap();
        assert_eq!(eval_projective(&basis[1], &p1).unwrap(), f7.zero());
        for l in 1..7 {
            let scaled = p4.scaled(f7.elem(l));
            assert_eq!(eval_projective(&basis[1], &scaled).unwrap(), f7.elem(3));
        }
        assert_eq!(ProjectivePoint::new(f7, 0, 0, 0), Err(Error::ZeroTriple));
        // phi(1, 3, 5) = 1 + 9 + 25 = 35 = 0 mod 7
        let on_conic = ProjectivePoint::new(f7, 1, 3, 5).unwrap();
        assert_eq!(
            eval_projective(&basis[2], &on_conic),
            Err(Error::DenominatorVanishes)
        );
    }

    #[test]
    fn scaling_invariance_exhaustive() {
        let f7 = gf(7);
        for r in conic_basis() {
            for x in 0..7 {
                for y in 0..7 {
                    for z in 0..7 {
                        let Ok(pt) = ProjectivePoint::new(f7, x, y, z) else { continue };
                        let Ok(v) = eval_projective(&r, &pt) else { continue };
                        for l in 1..7 {
                            assert_eq!(eval_projective(&r, &pt.scaled(f7.elem(l))).unwrap(), v);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn level_19_over_f7_projective() {
        let e = WeierstrassModel::new(0, 1, 1, 1, 0).unwrap().over(gf(7)).unwrap();
        let pts: Vec<String> = projective_points(&e).iter().map(|p| p.to_string()).collect();
        assert_eq!(
            pts,
            [
                "[0, 0, 1]", "[0, 1, 0]", "[0, 1, 6]", "[1, 0, 2]", "[1, 0, 4]", "[1, 3, 4]",
                "[1, 3, 6]", "[1, 5, 2]", "[1, 5, 6]"
            ]
        );
    }
}
