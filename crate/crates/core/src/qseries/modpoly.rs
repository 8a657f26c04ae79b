use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{j_series, LaurentSeries};
use crate::bounds::mu;
use crate::error::Result;

type Series = LaurentSeries<BigInt>;

/// Integer polynomial in two variables, stored as `(deg_x, deg_y) -> coeff`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((u32, u32), C)>) -> Self {
        let mut p = Self::new();
        for (m, c) in terms {
            p.add_term(m.0, m.1, c.into());
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(i, j), c)| self.terms.get(&(j, i)) == Some(c))
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            write!(f, "{}", c.abs())?;
            match i {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "*y")?,
                _ => write!(f, "*y^{j}")?,
            }
        }
        Ok(())
    }
}

/// Outcome of substituting `x = j(q)`, `y = j(q^N)` into a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularPolyCheck {
    /// `H(j(q), j(q^N))` known below the requested order.
    pub residual: Series,
    pub vanishes: bool,
    /// Whether both partial degrees equal the index `mu(N)`.
    pub degree_ok: bool,
}

impl ModularPolyCheck {
    pub fn holds(&self) -> bool {
        self.vanishes && self.degree_ok
    }
}

/// Powers `j(q)^a j(q^N)^b` for `a, b <= max_deg`, each known below `order`.
fn monomial_series(level: u32, max_deg: u32, order: i64) -> Result<BTreeMap<(u32, u32), Series>> {
    let d = i64::from(max_deg);
    let n = i64::from(level);
    let j_order = order + d + n * d + 1;
    let j = j_series(j_order)?;
    let jn = j.substitute(level);
    let mut pow_x = vec![Series::one(j_order + d)];
    let mut pow_y = vec![Series::one(n * j_order + n * d)];
    for k in 1..=max_deg as usize {
        pow_x.push(&pow_x[k - 1] * &j);
        pow_y.push(&pow_y[k - 1] * &jn);
    }
    let mut out = BTreeMap::new();
    for a in 0..=max_deg {
        for b in 0..=max_deg {
            let s = &pow_x[a as usize] * &pow_y[b as usize];
            debug_assert!(s.order() >= order);
            out.insert((a, b), s.truncate(order));
        }
    }
    Ok(out)
}

/// Substitutes `j(q)` and `j(q^N)` into `poly` and tests whether the result
/// vanishes below `q^order`.
pub fn modular_poly_check(poly: &BivariatePoly, level: u32, order: i64) -> Result<ModularPolyCheck> {
    let max_deg = poly.degree_x().max(poly.degree_y());
    let monomials = monomial_series(level, max_deg, order)?;
    let lowest = -i64::from(max_deg) * (1 + i64::from(level));
    let mut residual = Series::zero(lowest, order);
    for (key, c) in poly.terms() {
        residual = &residual + &monomials[key].scale(c);
    }
    let index = mu(u64::from(level));
    Ok(ModularPolyCheck {
        vanishes: residual.is_zero(),
        degree_ok: u64::from(poly.degree_x()) == index && u64::from(poly.degree_y()) == index,
        residual,
    })
}

/// Searches for an integer relation `sum c_ab j(q)^a j(q^N)^b = 0` with
/// `a, b <= max_deg`, matching q-coefficients below `q^order`. Returns the
/// primitive relation when the solution space is one-dimensional.
pub fn find_modular_relation(level: u32, max_deg: u32, order: i64) -> Result<Option<BivariatePoly>> {
    let monomials = monomial_series(level, max_deg, order)?;
    let keys: Vec<(u32, u32)> = monomials.keys().copied().collect();
    let lowest = -i64::from(max_deg) * (1 + i64::from(level));
    let cols = keys.len();
    let mut rows: Vec<Vec<BigRational>> = (lowest..order)
        .map(|e| {
            keys.iter()
                .map(|k| BigRational::from_integer(monomials[k].coeff(e).unwrap()))
                .collect()
        })
        .collect();

    // Gauss-Jordan over Q.
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &f * p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Ok(None);
    }
    let fc = free[0];
    let mut sol = vec![BigRational::zero(); cols];
    sol[fc] = BigRational::one();
    for (ri, &pc) in pivots.iter().enumerate() {
        sol[pc] = -rows[ri][fc].clone();
    }
    // Clear denominators and make primitive.
    let lcm = sol
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = sol.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut poly = BivariatePoly::new();
    for (k, c) in keys.iter().zip(ints) {
        poly.add_term(k.0, k.1, c / &g);
    }
    // Sign: make the x^max_deg coefficient positive when present.
    let lead = poly
        .terms()
        .filter(|(k, _)| k.1 == 0)
        .max_by_key(|(k, _)| k.0)
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false);
    if lead {
        let negated = poly.terms().map(|(k, c)| (*k, -c.clone())).collect::<Vec<_>>();
        poly = BivariatePoly::from_terms(negated);
    }
    Ok(Some(poly))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_minus_y() -> BivariatePoly {
        BivariatePoly::from_terms([((1, 0), 1), ((0, 1), -1)])
    }

    #[test]
    fn level_one_identity() {
        let check = modular_poly_check(&x_minus_y(), 1, 10).unwrap();
        assert!(check.vanishes);
        assert!(check.degree_ok);
        assert!(check.holds());
    }

    #[test]
    fn level_two_rejects_x_minus_y() {
        let check = modular_poly_check(&x_minus_y(), 2, 10).unwrap();
        assert!(!check.vanishes);
        assert!(!check.residual.is_zero());
        assert!(!check.holds());
    }

    #[test]
    fn display() {
        let p = BivariatePoly::from_terms([((1, 0), 1), ((0, 1), -1), ((0, 0), 5)]);
        assert_eq!(p.to_string(), "1*x - 1*y + 5");
    }
}
