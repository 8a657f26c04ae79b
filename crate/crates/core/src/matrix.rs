//! Dense vectors and matrices over GF(p), Gauss–Jordan reduction, and
//! systematic/check matrix construction.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};

/// A vector over GF(p). Entries are stored as reduced residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FFVector {
    field: PrimeField,
    data: Vec<u64>,
}

impl FFVector {
    pub fn new(field: PrimeField, values: &[i64]) -> Self {
        let data = values.iter().map(|&v| field.elem(v).value()).collect();
        Self { field, data }
    }

    pub fn from_elems(field: PrimeField, elems: &[Fp]) -> Result<Self> {
        let mut data = Vec::with_capacity(elems.len());
        for e in elems {
            if e.modulus() != field.modulus() {
                return Err(Error::ModulusMismatch(field.modulus(), e.modulus()));
            }
            data.push(e.value());
        }
        Ok(Self { field, data })
    }

    pub fn zeros(field: PrimeField, len: usize) -> Self {
        Self {
            field,
            data: vec![0; len],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> Fp {
        self.field.elem(self.data[i] as i64)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    /// Hamming weight: the number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }
}

/// Hamming distance `|{i : x_i != y_i}|`.
pub fn hamming(x: &FFVector, y: &FFVector) -> Result<usize> {
    if x.field != y.field {
        return Err(Error::ModulusMismatch(x.field.modulus(), y.field.modulus()));
    }
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.data.iter().zip(&y.data).filter(|(a, b)| a != b).count())
}

/// Row-major dense matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FFMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Result of [`FFMatrix::standard_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    /// The reduced row-echelon form with its columns permuted so the pivot
    /// columns come first; the top `rank` rows read `[I | A]`.
    pub matrix: FFMatrix,
    /// Column `j` of `matrix` is column `permutation[j]` of the input.
    pub permutation: Vec<usize>,
    pub rank: usize,
}

impl StandardForm {
    pub fn is_identity_permutation(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl FFMatrix {
    /// Builds a matrix from signed entries in row-major order.
    pub fn new(field: PrimeField, rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        if values.len() != rows * cols {
            return Err(Error::LengthMismatch(values.len(), rows * cols));
        }
        let data = values.iter().map(|&v| field.elem(v).value()).collect();
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut values = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch(r.len(), cols));
            }
            values.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, &values)
    }

    pub(crate) fn from_raw(field: PrimeField, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < field.modulus()));
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self::from_raw(field, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fp {
        self.field.elem(self.data[r * self.cols + c] as i64)
    }

    /// Raw residues of row `r`.
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> FFVector {
        FFVector {
            field: self.field,
            data: self.row(r).to_vec(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> FFMatrix {
        let mut data = vec![0; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        Self::from_raw(self.field, self.cols, self.rows, data)
    }

    pub fn mul(&self, rhs: &FFMatrix) -> Result<FFMatrix> {
        if self.field != rhs.field {
            return Err(Error::ModulusMismatch(
                self.field.modulus(),
                rhs.field.modulus(),
            ));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.field.modulus();
        let mut data = vec![0; self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cell = &mut data[i * rhs.cols + j];
                    *cell = (*cell + a * rhs.data[k * rhs.cols + j]) % p;
                }
            }
        }
        Ok(Self::from_raw(self.field, self.rows, rhs.cols, data))
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> FFMatrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Self::from_raw(self.field, self.rows, cols.len(), data)
    }

    pub fn select_rows(&self, rows: &[usize]) -> FFMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Self::from_raw(self.field, rows.len(), self.cols, data)
    }

    /// Scales column `c` by `factors[c]`.
    pub fn scale_columns(&self, factors: &[Fp]) -> Result<FFMatrix> {
        if factors.len() != self.cols {
            return Err(Error::LengthMismatch(factors.len(), self.cols));
        }
        let p = self.field.modulus();
        let mut out = self.clone();
        for r in 0..self.rows {
            for (c, f) in factors.iter().enumerate() {
                let cell = &mut out.data[r * self.cols + c];
                *cell = *cell * f.value() % p;
            }
        }
        Ok(out)
    }

    /// In-place Gauss–Jordan elimination; returns the pivot columns.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let p = self.field.modulus();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = self.field.elem(self.data[r * cols + c] as i64).inv().unwrap().value();
            for j in 0..cols {
                self.data[r * cols + j] = self.data[r * cols + j] * inv % p;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                for j in 0..cols {
                    let sub = f * self.data[r * cols + j] % p;
                    self.data[i * cols + j] = (self.data[i * cols + j] + p - sub) % p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (FFMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.reduce_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row-echelon form, with a column permutation moving the pivot
    /// columns to the front when they are not already leading.
    pub fn standard_form(&self) -> StandardForm {
        let (reduced, pivots) = self.rref();
        let rank = pivots.len();
        let mut permutation = pivots.clone();
        permutation.extend((0..self.cols).filter(|c| !pivots.contains(c)));
        let matrix = if permutation.iter().enumerate().all(|(i, &j)| i == j) {
            reduced
        } else {
            reduced.select_columns(&permutation)
        };
        StandardForm {
            matrix,
            permutation,
            rank,
        }
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &FFMatrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let base = self.rank();
        let mut stacked = self.data.clone();
        stacked.extend_from_slice(&other.data);
        Self::from_raw(self.field, self.rows + other.rows, self.cols, stacked).rank() == base
    }

    pub fn same_row_space(&self, other: &FFMatrix) -> bool {
        self.row_space_contains(other) && other.row_space_contains(self)
    }

    /// Whether the leading square block is the identity and there are no
    /// more rows than columns.
    pub fn is_systematic(&self) -> bool {
        let k = self.rows;
        k <= self.cols
            && (0..k).all(|r| (0..k).all(|c| self.data[r * self.cols + c] == u64::from(r == c)))
    }
}

/// Check matrix `[-A^T | I_{n-k}]` of a systematic generator `[I_k | A]`.
pub fn check_matrix(gstd: &FFMatrix) -> Result<FFMatrix> {
    if !gstd.is_systematic() {
        return Err(Error::NotSystematic);
    }
    let (k, n) = (gstd.rows(), gstd.cols());
    let p = gstd.field().modulus();
    let r = n - k;
    let mut data = vec![0; r * n];
    for i in 0..r {
        for j in 0..k {
            let a = gstd.data[j * n + k + i];
            data[i * n + j] = (p - a) % p;
        }
        data[i * n + k + i] = 1;
    }
    Ok(FFMatrix::from_raw(gstd.field(), r, n, data))
}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FFMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(u64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
