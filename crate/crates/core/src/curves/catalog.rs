//! Weierstrass models of the genus-one modular curves X_0(N), and
//! Eichler–Shimura traces obtained by counting points on them.

use num_bigint::BigInt;
use num_traits::One;

use super::{HyperellipticModel, WeierstrassModel};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Every level with a stored model.
pub const GENUS_ONE_LEVELS: [u64; 12] = [11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49];

/// A `y^2 + h(x) y = f(x)` genus-one form as printed in the literature,
/// together with the discriminant printed for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedForm {
    pub model: HyperellipticModel,
    pub printed_discriminant: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelCatalogEntry {
    pub level: u64,
    pub model: WeierstrassModel,
    pub discriminant: i64,
    pub source: &'static str,
    /// Non-Weierstrass form printed alongside the level, if any.
    pub printed_form: Option<PrintedForm>,
}

fn w(a: [i64; 5]) -> WeierstrassModel {
    WeierstrassModel::new(a[0], a[1], a[2], a[3], a[4]).expect("catalog models are nonsingular")
}

/// The stored model for level `N`.
pub fn x0_model(level: u64) -> Result<ModelCatalogEntry> {
    let (model, discriminant, source, printed_form) = match level {
        11 => (w([0, -1, 1, 0, 0]), -11, "Birch-Kuyk table 1", None),
        14 => (w([1, 0, -1, 0, 0]), -28, "Knapp table 12.1", None),
        15 => (w([7, 4, 2, 1, 0]), 15, "Knapp table 3.2", None),
        17 => (w([3, 0, 0, 1, 0]), 17, "Knapp table 3.2", None),
        19 => (w([0, 1, 1, 1, 0]), -19, "Birch-Kuyk table 1", None),
        20 => (w([0, 1, 0, -1, 0]), 80, "Knapp table 12.1", None),
        21 => (w([1, 0, 0, 1, 0]), -63, "Knapp table 12.1", None),
        24 => (w([0, -1, 0, 1, 0]), -48, "Knapp table 12.1", None),
        27 => (w([0, 0, 1, 0, 0]), -27, "Knapp table 12.1", None),
        32 => (w([0, 0, 0, -1, 0]), 64, "Knapp table 12.1", None),
        36 => (
            w([0, 0, 0, 0, 1]),
            -432,
            "minimal model of 36a; quartic form y^2 + (x^2 + 1)y = x^3 - 2x^2 + x",
            Some(PrintedForm {
                model: HyperellipticModel::new(vec![0, 1, -2, 1], vec![1, 0, 1]).unwrap(),
                printed_discriminant: -1_769_472,
            }),
        ),
        49 => (
            w([1, -1, 0, -2, -1]),
            -343,
            "minimal model of 49a; quartic form y^2 + (-x^2 - x - 1)y = x^3 - 3x^2 - 2x - 1",
            Some(PrintedForm {
                model: HyperellipticModel::new(vec![-1, -2, -3, 1], vec![-1, -1, -1]).unwrap(),
                printed_discriminant: -1_404_928,
            }),
        ),
        _ => return Err(Error::NoModelForLevel(level)),
    };
    Ok(ModelCatalogEntry {
        level,
        model,
        discriminant,
        source,
        printed_form,
    })
}

/// `Tr(T_p) = p + 1 - |X_0(N)(F_p)|` at a prime of good reduction.
pub fn hecke_trace_by_count(level: u64, p: u64) -> Result<i64> {
    let entry = x0_model(level)?;
    let field = PrimeField::new(p)?;
    if level % p == 0 || (entry.discriminant % p as i64) == 0 {
        return Err(Error::BadReduction { level, p });
    }
    let count = entry.model.over(field)?.count_points();
    Ok(p as i64 + 1 - count as i64)
}

/// `|E(F_{p^k})| = p^k + 1 - s_k` from the trace `a_p` via
/// `s_k = a_p s_{k-1} - p s_{k-2}`, `s_0 = 2`, `s_1 = a_p`.
pub fn frobenius_count(a_p: i64, p: u64, k: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::PreconditionFailed("extension degree must be positive".into()));
    }
    if (a_p as i128) * (a_p as i128) > 4 * p as i128 {
        return Err(Error::HasseViolation { trace: a_p, p });
    }
    let a = BigInt::from(a_p);
    let pb = BigInt::from(p);
    let mut prev = BigInt::from(2);
    let mut cur = a.clone();
    for _ in 1..k {
        let next = &a * &cur - &pb * &prev;
        prev = cur;
        cur = next;
    }
    let mut pk = BigInt::one();
    for _ in 0..k {
        pk *= &pb;
    }
    Ok(pk + 1 - cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::prime_divisors;
    use crate::field::is_prime;

    #[test]
    fn stored_discriminants_match() {
        for n in GENUS_ONE_LEVELS {
            let e = x0_model(n).unwrap();
            assert_eq!(e.model.discriminant(), BigInt::from(e.discriminant), "level {n}");
            assert_eq!(
                prime_divisors(n),
                prime_divisors(e.discriminant.unsigned_abs()),
                "level and discriminant share prime factors"
            );
        }
        assert_eq!(x0_model(20).unwrap().discriminant, 80);
        assert_eq!(x0_model(27).unwrap().model, w([0, 0, 1, 0, 0]));
        assert_eq!(x0_model(13).unwrap_err(), Error::NoModelForLevel(13));
    }

    #[test]
    fn printed_forms_scale_by_2_to_12() {
        for n in [36, 49] {
            let e = x0_model(n).unwrap();
            let pf = e.printed_form.unwrap();
            assert_eq!(pf.printed_discriminant, e.discriminant * 4096);
            assert_eq!(pf.model.genus(), 1);
        }
    }

    fn printed_count(n: u64, p: u64) -> u64 {
        let pf = x0_model(n).unwrap().printed_form.unwrap();
        pf.model.over(PrimeField::new(p).unwrap()).unwrap().count_points()
    }

    #[test]
    fn printed_forms_against_minimal_models() {
        for p in [5u64, 11, 13, 17, 19, 23] {
            let e = x0_model(36).unwrap().model.over(PrimeField::new(p).unwrap()).unwrap();
            assert_eq!(printed_count(36, p), e.count_points(), "36, p={p}");
        }
        // The printed level-49 form applies x -> -x to f but not to h.
        assert_eq!(printed_count(49, 5), 8);
        let e = x0_model(49).unwrap().model.over(PrimeField::new(5).unwrap()).unwrap();
        assert_eq!(e.count_points(), 6);
        let fixed = HyperellipticModel::new(vec![-1, -2, -3, 1], vec![-1, 1, -1]).unwrap();
        for p in [3u64, 5, 11, 13, 17, 19, 23] {
            let e = x0_model(49).unwrap().model.over(PrimeField::new(p).unwrap()).unwrap();
            let c = fixed.over(PrimeField::new(p).unwrap()).unwrap();
            assert_eq!(c.count_points(), e.count_points(), "49, p={p}");
        }
    }

    #[test]
    fn level_11_traces() {
        assert_eq!(hecke_trace_by_count(11, 3).unwrap(), -1);
        assert_eq!(hecke_trace_by_count(11, 2).unwrap(), -2);
        assert!(matches!(
            hecke_trace_by_count(11, 11),
            Err(Error::BadReduction { .. })
        ));
        assert!(matches!(
            hecke_trace_by_count(14, 7),
            Err(Error::BadReduction { .. })
        ));
    }

    #[test]
    fn hasse_bound_for_catalog() {
        for n in GENUS_ONE_LEVELS {
            for p in (2..=101).filter(|&p| is_prime(p)) {
                let Ok(a) = hecke_trace_by_count(n, p) else { continue };
                assert!((a * a) as u64 <= 4 * p, "level {n} p {p} a {a}");
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_count(-1, 3, 1).unwrap(), BigInt::from(5));
        assert_eq!(frobenius_count(0, 3, 2).unwrap(), BigInt::from(16));
        assert_eq!(
            frobenius_count(4, 3, 1).unwrap_err(),
            Error::HasseViolation { trace: 4, p: 3 }
        );
        assert!(frobenius_count(0, 3, 0).is_err());
        assert_eq!(frobenius_count(2, 5, 3).unwrap(), BigInt::from(148));
    }
}
