//! Evaluation (Goppa) codes and their parameters.

mod enumerate;
mod weights;

use std::collections::HashSet;

use log::warn;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::{check_matrix, FFMatrix};
use crate::riemannroch::{EvaluationFunction, EvaluationPoint};

pub use enumerate::{
    enumerate_row_space, rank_profile_distribution, weight_distribution,
    weight_distribution_with, Strategy, ENUMERATION_LIMIT,
};
pub use weights::{
    macwilliams_transform, shokrollahi_check, Convention, ShokrollahiReport, WeightDistribution,
};

/// A linear `[n, k]` code over GF(p) given by a full-rank generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: PrimeField,
    generator: FFMatrix,
    provenance: String,
    dropped_rows: Vec<usize>,
}

/// Systematic generator `[I | A]` and check matrix `[-A^T | I]`, both in
/// the code's own coordinate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystematicForm {
    /// The generator with its columns permuted so that it reads `[I | A]`.
    pub generator: FFMatrix,
    /// `[-A^T | I]` with the permutation undone, so `H G^T = 0` for the
    /// code's original generator.
    pub check: FFMatrix,
    /// Column `j` of `generator` is coordinate `permutation[j]` of the code.
    pub permutation: Vec<usize>,
}

impl LinearCode {
    /// Keeps a maximal independent prefix-greedy subset of the rows.
    pub fn from_generator(generator: FFMatrix, provenance: impl Into<String>) -> Self {
        let field = generator.field();
        let mut kept: Vec<usize> = Vec::new();
        let mut dropped = Vec::new();
        for r in 0..generator.rows() {
            let mut trial = kept.clone();
            trial.push(r);
            if generator.select_rows(&trial).rank() == trial.len() {
                kept = trial;
            } else {
                dropped.push(r);
            }
        }
        let provenance = provenance.into();
        if !dropped.is_empty() {
            warn!(
                "{provenance}: rows {dropped:?} are dependent; dimension {} instead of {}",
                kept.len(),
                generator.rows()
            );
        }
        let generator = if dropped.is_empty() {
            generator
        } else {
            generator.select_rows(&kept)
        };
        Self {
            field,
            generator,
            provenance,
            dropped_rows: dropped,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.modulus()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &FFMatrix {
        &self.generator
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Indices of evaluation rows removed as linearly dependent.
    pub fn dropped_rows(&self) -> &[usize] {
        &self.dropped_rows
    }

    pub fn systematic(&self) -> Result<SystematicForm> {
        let sf = self.generator.standard_form();
        let check_std = check_matrix(&sf.matrix)?;
        let mut inverse = vec![0; sf.permutation.len()];
        for (j, &c) in sf.permutation.iter().enumerate() {
            inverse[c] = j;
        }
        Ok(SystematicForm {
            generator: sf.matrix,
            check: check_std.select_columns(&inverse),
            permutation: sf.permutation,
        })
    }

    pub fn check_matrix(&self) -> Result<FFMatrix> {
        Ok(self.systematic()?.check)
    }

    /// The dual code, generated by the check matrix.
    pub fn dual(&self) -> Result<LinearCode> {
        Ok(LinearCode::from_generator(
            self.check_matrix()?,
            format!("dual of {}", self.provenance),
        ))
    }
}

/// Evaluation matrix with row `r` holding `basis[r]` at every point.
pub fn evaluation_matrix<F: EvaluationFunction>(
    basis: &[F],
    points: &[F::Point],
    field: PrimeField,
) -> Result<FFMatrix> {
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let mut seen = HashSet::new();
    for pt in points {
        if !seen.insert(pt.canonical()) {
            return Err(Error::DuplicatePoint(pt.to_string()));
        }
    }
    let mut data = Vec::with_capacity(basis.len() * points.len());
    for f in basis {
        for pt in points {
            data.push(f.evaluate(pt, field)?.value() as i64);
        }
    }
    FFMatrix::new(field, basis.len(), points.len(), &data)
}

/// `(f(P_1), ..., f(P_n))` for each basis function `f`.
pub fn evaluation_code<F: EvaluationFunction>(
    basis: &[F],
    points: &[F::Point],
    field: PrimeField,
    provenance: impl Into<String>,
) -> Result<LinearCode> {
    let g = evaluation_matrix(basis, points, field)?;
    Ok(LinearCode::from_generator(g, provenance))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub mds: bool,
    /// Number of correctable errors, `(d - 1) / 2`.
    pub t: usize,
}

impl CodeParameters {
    pub fn from_distribution(n: usize, k: usize, w: &WeightDistribution) -> Self {
        // The zero code has no nonzero word; use the convention d = n + 1.
        let d = w.min_distance().unwrap_or(n + 1);
        Self {
            n,
            k,
            d,
            mds: d + k == n + 1,
            t: d.saturating_sub(1) / 2,
        }
    }

    pub fn singleton_holds(&self) -> bool {
        self.d + self.k <= self.n + 1
    }
}

pub fn min_distance(code: &LinearCode, jobs: usize) -> Result<usize> {
    Ok(code_parameters(code, jobs)?.d)
}

pub fn code_parameters(code: &LinearCode, jobs: usize) -> Result<CodeParameters> {
    let w = weight_distribution(code, jobs)?;
    Ok(CodeParameters::from_distribution(code.n(), code.k(), &w))
}

/// `k + d >= n - g + 1`, and for genus one also `k + d <= n + 1`.
pub fn elliptic_sum_property(params: &CodeParameters, genus: usize) -> bool {
    let s = params.k + params.d;
    let lower = s + genus >= params.n + 1;
    if genus == 1 {
        lower && s <= params.n + 1
    } else {
        lower
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{CurvePoint, HyperellipticModel, WeierstrassModel};
    use crate::riemannroch::{one_point_basis, OnePointKind};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn level19(p: u64, a: u32) -> LinearCode {
        let e = WeierstrassModel::new(0, 1, 1, 1, 0).unwrap().over(gf(p)).unwrap();
        let pts: Vec<CurvePoint> = e.enumerate_points().into_iter().filter(|p| p.affine().is_some()).collect();
        evaluation_code(&one_point_basis(OnePointKind::Elliptic, a), &pts, gf(p), "level 19").unwrap()
    }

    #[test]
    fn level_19_over_f3() {
        let c = level19(3, 2);
        assert_eq!((c.n(), c.k()), (5, 2));
        let w = weight_distribution(&c, 1).unwrap();
        assert_eq!(w.counts_u64(), [1, 0, 0, 4, 2, 2]);
        assert_eq!(min_distance(&c, 1).unwrap(), 3);
        assert_eq!(w.render(Convention::Descending), "x^5+4x^2+2x+2");
    }

    #[test]
    fn x7_minus_x_codes() {
        let curve = HyperellipticModel::x_pow_minus_x(7).unwrap().over(gf(7)).unwrap();
        let pts: Vec<CurvePoint> = curve.affine_points();
        let basis = one_point_basis(OnePointKind::Hyperelliptic { degree: 7 }, 2);
        let c = evaluation_code(&basis, &pts, gf(7), "x^7 - x").unwrap();
        let params = code_parameters(&c, 1).unwrap();
        assert_eq!((params.n, params.k, params.d, params.mds), (7, 2, 6, true));
        assert!(elliptic_sum_property(&params, 3));
        let s = c.systematic().unwrap();
        assert!(c.generator().mul(&s.check.transpose()).unwrap().is_zero());
    }

    #[test]
    fn errors() {
        let f = gf(13);
        let basis = one_point_basis(OnePointKind::Elliptic, 2);
        let pt = CurvePoint::Affine { x: f.elem(0), y: f.elem(0) };
        assert!(matches!(
            evaluation_code(&basis, &[pt, pt], f, ""),
            Err(Error::DuplicatePoint(_))
        ));
        assert!(matches!(
            evaluation_code(&basis, &[pt, CurvePoint::Infinity], f, ""),
            Err(Error::SupportCollision(_))
        ));
        let empty: Vec<crate::riemannroch::MonomialFunction> = Vec::new();
        assert_eq!(evaluation_code(&empty, &[pt], f, "").unwrap_err(), Error::EmptyBasis);
    }

    #[test]
    fn dependent_rows_are_dropped() {
        let g = FFMatrix::from_rows(gf(5), &[[1, 0, 0], [0, 1, 0], [1, 1, 1]]).unwrap();
        let c = LinearCode::from_generator(g, "test");
        assert_eq!(c.k(), 3);
        let g = FFMatrix::from_rows(gf(5), &[[1, 2, 3], [2, 4, 1], [0, 1, 1]]).unwrap();
        let c = LinearCode::from_generator(g, "test");
        assert_eq!(c.k(), 2);
        assert_eq!(c.dropped_rows(), [1]);
    }

    #[test]
    fn sum_property_examples() {
        let p = |n, k, d| CodeParameters { n, k, d, mds: d + k == n + 1, t: (d - 1) / 2 };
        assert!(elliptic_sum_property(&p(17, 2, 15), 1));
        assert!(elliptic_sum_property(&p(7, 2, 6), 3));
        assert!(!elliptic_sum_property(&p(17, 2, 14), 1));
    }
}
