//! Weierstrass and hyperelliptic curves over prime fields.

mod catalog;
mod hyperelliptic;
mod poly;
mod weierstrass;

use std::fmt;

pub use catalog::{
    frobenius_count, hecke_trace_by_count, x0_model, ModelCatalogEntry, PrintedForm,
    GENUS_ONE_LEVELS,
};
pub use hyperelliptic::{HyperellipticFp, HyperellipticModel};
pub use weierstrass::{
    trace_of_frobenius, BInvariants, EllipticCurveFp, GroupStructure, WeierstrassModel,
};

use crate::field::Fp;

/// A rational point. Sorting puts affine points in `(x, y)` order and the
/// point at infinity last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Affine { x: Fp, y: Fp },
    Infinity,
}

impl CurvePoint {
    pub fn affine(&self) -> Option<(Fp, Fp)> {
        match *self {
            CurvePoint::Affine { x, y } => Some((x, y)),
            CurvePoint::Infinity => None,
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Affine { x, y } => write!(f, "[{x}, {y}]"),
            CurvePoint::Infinity => write!(f, "inf"),
        }
    }
}
