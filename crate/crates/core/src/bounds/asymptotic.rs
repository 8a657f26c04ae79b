//! Asymptotic rate/distance curves, generic over the float type.

use num_traits::{Float, FromPrimitive};

use crate::error::{Error, Result};

/// Guard band applied before declaring one curve above another.
pub const GUARD: f64 = 1e-12;
/// Bisection tolerance for interval endpoints.
pub const ENDPOINT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePoint<F> {
    pub delta: F,
    pub rate: F,
}

impl<F: Float> RatePoint<F> {
    pub fn new(delta: F, rate: F) -> Result<Self> {
        let unit = |v: F| v >= F::zero() && v <= F::one();
        if !unit(delta) || !unit(rate) {
            return Err(Error::PreconditionFailed(
                "rate point coordinates must lie in [0, 1]".into(),
            ));
        }
        Ok(Self { delta, rate })
    }
}

fn c<F: FromPrimitive>(v: f64) -> F {
    F::from_f64(v).expect("float conversion")
}

/// `x log_q x`, with `0 log 0 = 0`.
fn xlogx<F: Float>(x: F, ln_q: F) -> F {
    if x <= F::zero() {
        F::zero()
    } else {
        x * x.ln() / ln_q
    }
}

/// q-ary entropy `H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x)`.
pub fn entropy<F: Float + FromPrimitive>(q: u64, x: F) -> F {
    let qf: F = c(q as f64);
    let ln_q = qf.ln();
    x * (qf - F::one()).ln() / ln_q - xlogx(x, ln_q) - xlogx(F::one() - x, ln_q)
}

/// Gilbert–Varshamov lower bound `1 - H_q(delta)`, zero for
/// `delta >= (q-1)/q`.
pub fn gv_bound<F: Float + FromPrimitive>(q: u64, delta: F) -> F {
    assert!(q >= 2, "alphabet size must be at least 2");
    let qf: F = c(q as f64);
    if delta >= (qf - F::one()) / qf {
        return F::zero();
    }
    (F::one() - entropy(q, delta)).max(F::zero())
}

/// Integer square root of `q` when `q` is a perfect square.
pub fn exact_sqrt(q: u64) -> Result<u64> {
    let mut r = (q as f64).sqrt() as u64;
    while r * r > q {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= q {
        r += 1;
    }
    if r * r == q {
        Ok(r)
    } else {
        Err(Error::NotASquare(q))
    }
}

/// Line `R = 1 - delta - 1/(sqrt(q) - 1)` reached by codes from curve
/// families meeting the Drinfeld–Vladut bound, clamped at zero.
pub fn tvz_line<F: Float + FromPrimitive>(q: u64, delta: F) -> Result<F> {
    let r = exact_sqrt(q)?;
    if r < 2 {
        return Err(Error::PreconditionFailed(format!("q = {q} is too small")));
    }
    let slope: F = F::one() / c::<F>((r - 1) as f64);
    Ok((F::one() - delta - slope).max(F::zero()))
}

/// `1 - (g - 1)/n`, the lower bound on `delta + R` for an AG code of
/// length `n` on a genus-`g` curve.
pub fn prop7_bound<F: Float + FromPrimitive>(genus: u64, n: u64) -> F {
    assert!(n >= 1, "code length must be positive");
    F::one() - (c::<F>(genus as f64) - F::one()) / c::<F>(n as f64)
}

fn tvz_minus_gv<F: Float + FromPrimitive>(q: u64, delta: F) -> F {
    tvz_line(q, delta).unwrap() - gv_bound(q, delta)
}

/// Bisects for the crossing of `tvz - gv` through the guard band between
/// `inside` (above) and `outside` (not above).
fn refine<F: Float + FromPrimitive>(q: u64, mut inside: F, mut outside: F) -> F {
    let guard: F = c(GUARD);
    let tol: F = c(ENDPOINT_TOL);
    while (inside - outside).abs() > tol {
        let mid = (inside + outside) / c(2.0);
        if tvz_minus_gv(q, mid) > guard {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    (inside + outside) / c(2.0)
}

/// Scans `delta` over a uniform grid on `[0, 1]` and returns the longest
/// interval on which the TVZ line lies strictly above the GV curve, with
/// endpoints refined by bisection.
pub fn tvz_exceeds_gv<F: Float + FromPrimitive>(q: u64, grid: usize) -> Result<Option<(F, F)>> {
    exact_sqrt(q)?;
    if grid < 100 {
        return Err(Error::PreconditionFailed(format!(
            "grid must have at least 100 steps, got {grid}"
        )));
    }
    let guard: F = c(GUARD);
    let at = |i: usize| c::<F>(i as f64) / c::<F>(grid as f64);
    let above: Vec<bool> = (0..=grid).map(|i| tvz_minus_gv(q, at(i)) > guard).collect();

    let mut best: Option<(usize, usize)> = None;
    let mut i = 0;
    while i <= grid {
        if !above[i] {
            i += 1;
            continue;
        }
        let start = i;
        while i < grid && above[i + 1] {
            i += 1;
        }
        if best.is_none_or(|(s, e)| i - start > e - s) {
            best = Some((start, i));
        }
        i += 1;
    }
    Ok(best.map(|(s, e)| {
        let lo = if s == 0 { at(0) } else { refine(q, at(s), at(s - 1)) };
        let hi = if e == grid { at(grid) } else { refine(q, at(e), at(e + 1)) };
        (lo, hi)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gv_endpoints() {
        for q in [2u64, 3, 4, 49] {
            assert!((gv_bound(q, 0.0f64) - 1.0).abs() < 1e-12);
            let edge = (q as f64 - 1.0) / q as f64;
            assert!(gv_bound(q, edge).abs() < 1e-12);
            // the unclamped formula also reaches zero there
            assert!((1.0 - entropy(q, edge)).abs() < 1e-12);
        }
    }

    #[test]
    fn gv_strictly_decreasing() {
        for q in [2u64, 3, 4, 49] {
            let edge = (q as f64 - 1.0) / q as f64;
            let steps = 10_000;
            let mut prev = gv_bound(q, 0.0f64);
            for i in 1..steps {
                let d = edge * i as f64 / steps as f64;
                let v = gv_bound(q, d);
                assert!(v < prev, "q={q} d={d}");
                assert!((v - prev).abs() < 0.01, "jump at q={q} d={d}");
                prev = v;
            }
        }
    }

    #[test]
    fn gv_single_precision() {
        assert!((gv_bound(49, 0.0f32) - 1.0).abs() < 1e-6);
        let v = gv_bound(49, 0.5f32);
        assert!(v > 0.0 && v < 1.0);
    }

    #[test]
    fn tvz_examples() {
        assert!((tvz_line(49, 0.0f64).unwrap() - 5.0 / 6.0).abs() < 1e-15);
        assert_eq!(tvz_line(49, 5.0f64 / 6.0).unwrap(), 0.0);
        assert_eq!(tvz_line(4, 0.0f64).unwrap(), 0.0);
        assert_eq!(tvz_line::<f64>(50, 0.0), Err(Error::NotASquare(50)));
    }

    #[test]
    fn prop7() {
        for n in 1..50 {
            assert_eq!(prop7_bound::<f64>(1, n), 1.0);
        }
        assert!((prop7_bound::<f64>(0, 10) - 1.1).abs() < 1e-15);
    }

    #[test]
    fn tvz_vs_gv() {
        let (lo, hi) = tvz_exceeds_gv::<f64>(49, 1000).unwrap().unwrap();
        assert!(lo < hi);
        let mid = (lo + hi) / 2.0;
        assert!(tvz_line(49, mid).unwrap() > gv_bound(49, mid));
        assert!(tvz_exceeds_gv::<f64>(4, 1000).unwrap().is_none());
        assert!(tvz_exceeds_gv::<f64>(49, 10).is_err());
        assert!(tvz_exceeds_gv::<f64>(48, 1000).is_err());
    }

    #[test]
    fn exceedance_agrees_with_max_difference_scan() {
        for q in [4u64, 9, 25, 49, 121, 169] {
            let max_diff = (0..=100_000)
                .map(|i| tvz_minus_gv(q, i as f64 / 100_000.0))
                .fold(f64::NEG_INFINITY, f64::max);
            let found = tvz_exceeds_gv::<f64>(q, 1000).unwrap();
            assert_eq!(found.is_some(), max_diff > GUARD, "q={q} max={max_diff}");
        }
    }
}
