use num_bigint::BigInt;
use num_traits::Zero;

use super::{macwilliams_transform, LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::FFMatrix;

/// Largest number of codewords an exhaustive enumeration will visit.
pub const ENUMERATION_LIMIT: u128 = 20_000_000_000;

/// How [`weight_distribution_with`] obtains the distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Direct when `k <= n - k`, otherwise dual enumeration plus MacWilliams.
    #[default]
    Auto,
    Direct,
    Dual,
    /// Counts of codewords vanishing on every coordinate subset, from ranks
    /// of column submatrices. Exponential in `n`, not in `k`.
    RankProfile,
}

pub fn weight_distribution(code: &LinearCode, jobs: usize) -> Result<WeightDistribution> {
    weight_distribution_with(code, Strategy::Auto, jobs)
}

pub fn weight_distribution_with(
    code: &LinearCode,
    strategy: Strategy,
    jobs: usize,
) -> Result<WeightDistribution> {
    let (n, k) = (code.n(), code.k());
    let strategy = match strategy {
        Strategy::Auto if k <= n - k => Strategy::Direct,
        Strategy::Auto => Strategy::Dual,
        s => s,
    };
    match strategy {
        Strategy::Direct => enumerate_row_space(code.generator(), jobs),
        Strategy::Dual => {
            let h = code.check_matrix()?;
            let dual = enumerate_row_space(&h, jobs)?;
            macwilliams_transform(&dual, n, n - k, code.p())
        }
        Strategy::RankProfile => rank_profile_distribution(code.generator()),
        Strategy::Auto => unreachable!(),
    }
}

/// Weight distribution of the row space of a full-rank matrix, by visiting
/// every codeword.
///
/// Information vectors are taken in lexicographic order. The first `k - 1`
/// digits are split into `jobs` contiguous ranges; for each prefix the `p`
/// multiples of the last row are counted at once.
pub fn enumerate_row_space(g: &FFMatrix, jobs: usize) -> Result<WeightDistribution> {
    let (k, n) = (g.rows(), g.cols());
    let p = g.field().modulus();
    if k == 0 {
        let mut counts = vec![BigInt::zero(); n + 1];
        counts[0] = BigInt::from(1);
        return Ok(WeightDistribution::new(counts));
    }
    if g.rank() != k {
        return Err(Error::DimensionMismatch(format!(
            "generator has {k} rows but rank {}",
            g.rank()
        )));
    }
    let words = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if words > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!("{p}^{k} codewords")));
    }
    let prefixes = p.pow(k as u32 - 1);
    let jobs = (jobs.max(1) as u64).min(prefixes) as usize;
    let rows = g.to_rows();
    let tally = |start: u64, end: u64| count_range(&rows, p, start, end);
    let partials: Vec<Vec<u64>> = if jobs == 1 {
        vec![tally(0, prefixes)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs as u64)
                .map(|i| {
                    let lo = prefixes * i / jobs as u64;
                    let hi = prefixes * (i + 1) / jobs as u64;
                    s.spawn(move || tally(lo, hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let mut counts = vec![BigInt::zero(); n + 1];
    for part in partials {
        for (c, v) in counts.iter_mut().zip(part) {
            *c += v;
        }
    }
    Ok(WeightDistribution::new(counts))
}

fn count_range(rows: &[Vec<u64>], p: u64, start: u64, end: u64) -> Vec<u64> {
    let k = rows.len();
    let n = rows[0].len();
    let last = &rows[k - 1];
    let mut hist = vec![0u64; n + 1];
    if start >= end {
        return hist;
    }
    let active: Vec<usize> = (0..n).filter(|&j| last[j] != 0).collect();
    let idle: Vec<usize> = (0..n).filter(|&j| last[j] == 0).collect();
    // kill[j][v]: the multiplier c with v + c * last[j] = 0.
    let use_table = (active.len() as u64).saturating_mul(p) <= 1 << 22;
    let field = PrimeField::new(p).expect("modulus of an existing field");
    let inv: Vec<u64> = active
        .iter()
        .map(|&j| field.elem(last[j] as i64).inv().unwrap().value())
        .collect();
    let kill: Vec<u64> = if use_table {
        inv.iter()
            .flat_map(|&iv| (0..p).map(move |v| (p - v) % p * iv % p))
            .collect()
    } else {
        Vec::new()
    };

    let prefix_len = k - 1;
    let mut digits = vec![0u64; prefix_len];
    let mut rem = start;
    for d in digits.iter_mut().rev() {
        *d = rem % p;
        rem /= p;
    }
    let mut word = vec![0u64; n];
    for (i, &d) in digits.iter().enumerate() {
        for j in 0..n {
            word[j] = (word[j] + d * rows[i][j]) % p;
        }
    }

    let mut hits = vec![0u32; p as usize];
    for _ in start..end {
        let fixed = idle.iter().filter(|&&j| word[j] != 0).count() + active.len();
        for (a, &j) in active.iter().enumerate() {
            let c = if use_table {
                kill[a * p as usize + word[j] as usize]
            } else {
                (p - word[j]) % p * inv[a] % p
            };
            hits[c as usize] += 1;
        }
        if (active.len() as u64) < p {
            // Multipliers that zero no column all share the same weight.
            let mut untouched = p;
            for (a, &j) in active.iter().enumerate() {
                let c = if use_table {
                    kill[a * p as usize + word[j] as usize]
                } else {
                    (p - word[j]) % p * inv[a] % p
                } as usize;
                if hits[c] > 0 {
                    hist[fixed - hits[c] as usize] += 1;
                    hits[c] = 0;
                    untouched -= 1;
                }
            }
            hist[fixed] += untouched;
        } else {
            for h in hits.iter_mut() {
                hist[fixed - *h as usize] += 1;
                *h = 0;
            }
        }
        // Odometer step: bumping digit i always adds row i, since p * row = 0.
        let mut i = prefix_len;
        while i > 0 {
            i -= 1;
            let row = &rows[i];
            for j in 0..n {
                let v = word[j] + row[j];
                word[j] = if v >= p { v - p } else { v };
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
    hist
}

/// Weight distribution of the row space of `m` from the ranks of its
/// column submatrices.
///
/// The row space has `p^(r - rank M_S)` words vanishing on a coordinate
/// set `S`; summing over `|S| = j` and inverting by inclusion-exclusion
/// gives the number of words with exactly `i` zeros.
pub fn rank_profile_distribution(m: &FFMatrix) -> Result<WeightDistribution> {
    let n = m.cols();
    if n > 30 {
        return Err(Error::TooLarge(format!("2^{n} coordinate subsets")));
    }
    let p = m.field().modulus();
    let total_rank = m.rank();
    let columns: Vec<Vec<u64>> = m.transpose().to_rows();
    // table[j][r]: number of j-subsets whose columns have rank r.
    let mut table = vec![vec![0u64; total_rank + 1]; n + 1];
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let field = m.field();
    fn walk(
        col: usize,
        size: usize,
        columns: &[Vec<u64>],
        basis: &mut Vec<(usize, Vec<u64>)>,
        table: &mut [Vec<u64>],
        p: u64,
        field: PrimeField,
    ) {
        if col == columns.len() {
            table[size][basis.len()] += 1;
            return;
        }
        walk(col + 1, size, columns, basis, table, p, field);
        let mut v = columns[col].clone();
        for (piv, b) in basis.iter() {
            let f = v[*piv];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            Some(piv) => {
                let inv = field.elem(v[piv] as i64).inv().unwrap().value();
                for x in v.iter_mut() {
                    *x = *x * inv % p;
                }
                basis.push((piv, v));
                walk(col + 1, size + 1, columns, basis, table, p, field);
                basis.pop();
            }
            None => walk(col + 1, size + 1, columns, basis, table, p, field),
        }
    }
    walk(0, 0, &columns, &mut basis, &mut table, p, field);

    let pb = BigInt::from(p);
    let z: Vec<BigInt> = table
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(r, &c)| BigInt::from(c) * num_traits::pow(pb.clone(), total_rank - r))
                .sum()
        })
        .collect();
    let binom = |a: usize, b: usize| -> BigInt {
        (0..b).fold(BigInt::from(1), |acc, i| acc * (a - i) / (i + 1))
    };
    let mut counts = vec![BigInt::zero(); n + 1];
    for i in 0..=n {
        let mut e = BigInt::zero();
        for (j, zj) in z.iter().enumerate().skip(i) {
            let term = binom(j, i) * zj;
            if (j - i) % 2 == 0 {
                e += term;
            } else {
                e -= term;
            }
        }
        counts[n - i] = e;
    }
    Ok(WeightDistribution::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(g: &FFMatrix) -> Vec<u64> {
        let (k, n) = (g.rows(), g.cols());
        let p = g.field().modulus();
        let mut hist = vec![0u64; n + 1];
        for idx in 0..p.pow(k as u32) {
            let mut u = idx;
            let mut w = vec![0u64; n];
            for i in (0..k).rev() {
                let d = u % p;
                u /= p;
                for j in 0..n {
                    w[j] = (w[j] + d * g.get(i, j).value()) % p;
                }
            }
            hist[w.iter().filter(|&&x| x != 0).count()] += 1;
        }
        hist
    }

    fn full_rank(p: u64, k: usize, n: usize, vals: &[i64]) -> Option<FFMatrix> {
        let g = FFMatrix::new(PrimeField::new(p).unwrap(), k, n, &vals[..k * n]).unwrap();
        (g.rank() == k).then_some(g)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn all_methods_agree(
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
            k in 1usize..4,
            n in 4usize..8,
            vals in prop::collection::vec(0i64..7, 32),
            jobs in 1usize..5,
        ) {
            let Some(g) = full_rank(p, k, n, &vals) else { return Ok(()) };
            let expect = naive(&g);
            prop_assert_eq!(enumerate_row_space(&g, 1).unwrap().counts_u64(), expect.clone());
            prop_assert_eq!(enumerate_row_space(&g, jobs).unwrap().counts_u64(), expect.clone());
            prop_assert_eq!(rank_profile_distribution(&g).unwrap().counts_u64(), expect);
        }
    }

    #[test]
    fn large_prime_without_table() {
        let f = PrimeField::new(1_000_003).unwrap();
        let g = FFMatrix::from_rows(f, &[[1, 0, 5, 7, 2]]).unwrap();
        let w = enumerate_row_space(&g, 2).unwrap();
        assert_eq!(w.counts_u64(), [1, 0, 0, 0, 1_000_002, 0]);
        assert_eq!(w, rank_profile_distribution(&g).unwrap());
    }

    #[test]
    fn limits() {
        let f = PrimeField::new(13).unwrap();
        let g = FFMatrix::identity(f, 10);
        assert!(matches!(enumerate_row_space(&g, 1), Err(Error::TooLarge(_))));
        let g = FFMatrix::from_rows(f, &[[1, 2], [2, 4]]).unwrap();
        assert!(matches!(enumerate_row_space(&g, 1), Err(Error::DimensionMismatch(_))));
    }
}
