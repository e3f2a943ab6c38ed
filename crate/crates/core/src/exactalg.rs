//! Prime-field arithmetic and Gauss–Jordan elimination with a caller-supplied
//! column order.
//!
//! The column order matters: pivots are found by scanning columns left to
//! right and taking the first row with a nonzero entry, so when the columns
//! are monomials in descending order the pivot labels of a basis matrix are
//! exactly its leading monomials.

use std::collections::HashSet;
use std::hash::Hash;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Residue in `[0, p)`. The modulus lives in the [`PrimeField`] context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FFElement(u32);

impl FFElement {
    pub const ZERO: FFElement = FFElement(0);
    pub const ONE: FFElement = FFElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FFElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `GF(p)` for a prime `p < 2³¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub const DEFAULT_PRIME: u32 = 32003;

    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn element(&self, v: u64) -> FFElement {
        FFElement((v % self.p as u64) as u32)
    }

    pub fn from_i64(&self, v: i64) -> FFElement {
        FFElement(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, a: FFElement, b: FFElement) -> FFElement {
        let s = a.0 as u64 + b.0 as u64;
        FFElement((s % self.p as u64) as u32)
    }

    pub fn neg(&self, a: FFElement) -> FFElement {
        if a.0 == 0 {
            a
        } else {
            FFElement(self.p - a.0)
        }
    }

    pub fn sub(&self, a: FFElement, b: FFElement) -> FFElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FFElement, b: FFElement) -> FFElement {
        FFElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: FFElement, mut e: u64) -> FFElement {
        let mut base = a;
        let mut acc = FFElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FFElement) -> Result<FFElement> {
        modular_inverse(self, a)
    }
}

/// Inverse by the extended Euclidean algorithm.
pub fn modular_inverse(field: &PrimeField, a: FFElement) -> Result<FFElement> {
    if a.is_zero() {
        return Err(Error::ZeroInverse);
    }
    let (mut old_r, mut r) = (a.0 as i64, field.p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    Ok(field.from_i64(old_s))
}

/// Dense row-major matrix over `GF(p)` whose columns carry distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFMatrix<L> {
    rows: usize,
    cols: usize,
    entries: Vec<FFElement>,
    column_labels: Vec<L>,
}

impl FFMatrix<usize> {
    /// Matrix whose column labels are the indices `0..cols`.
    pub fn unlabeled(rows: usize, cols: usize, entries: Vec<FFElement>) -> Result<Self> {
        FFMatrix::new(rows, (0..cols).collect(), entries)
    }
}

impl<L: Clone + Eq + Hash> FFMatrix<L> {
    pub fn new(rows: usize, column_labels: Vec<L>, entries: Vec<FFElement>) -> Result<Self> {
        let cols = column_labels.len();
        if entries.len() != rows * cols {
            return Err(Error::DegenerateInput(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        let distinct: HashSet<&L> = column_labels.iter().collect();
        if distinct.len() != cols {
            return Err(Error::DegenerateInput("column labels are not distinct".into()));
        }
        Ok(FFMatrix { rows, cols, entries, column_labels })
    }

    /// Builds a matrix from row vectors, each of length `column_labels.len()`.
    pub fn from_rows(column_labels: Vec<L>, rows: &[Vec<FFElement>]) -> Result<Self> {
        let entries: Vec<FFElement> = rows.iter().flatten().copied().collect();
        FFMatrix::new(rows.len(), column_labels, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column_labels(&self) -> &[L] {
        &self.column_labels
    }

    pub fn get(&self, row: usize, col: usize) -> FFElement {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[FFElement] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// `M · v`.
    pub fn apply(&self, field: &PrimeField, v: &[FFElement]) -> Vec<FFElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(FFElement::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b))))
            .collect()
    }

    pub fn row_reduce(&self, field: &PrimeField) -> RowReduction<L> {
        self.row_reduce_with(field, Execution::Sequential)
    }

    /// Reduced row-echelon form, scanning columns in stored order.
    ///
    /// With [`Execution::Parallel`] the elimination of the other rows against
    /// each pivot row is spread over the rayon pool; the result is identical.
    pub fn row_reduce_with(&self, field: &PrimeField, exec: Execution) -> RowReduction<L> {
        let (rows, cols) = (self.rows, self.cols);
        let p = field.prime() as u64;
        let mut a: Vec<u32> = self.entries.iter().map(|e| e.0).collect();
        let mut pivot_indices = Vec::new();
        let mut pivot_row = 0;

        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(found) = (pivot_row..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            if found != pivot_row {
                for j in 0..cols {
                    a.swap(found * cols + j, pivot_row * cols + j);
                }
            }
            let inv = field.inv(FFElement(a[pivot_row * cols + col])).expect("pivot is nonzero").0 as u64;
            let pivot: Vec<u32> =
                a[pivot_row * cols..(pivot_row + 1) * cols].iter().map(|&v| ((v as u64 * inv) % p) as u32).collect();
            a[pivot_row * cols..(pivot_row + 1) * cols].copy_from_slice(&pivot);

            let eliminate = |(i, row): (usize, &mut [u32])| {
                if i == pivot_row || row[col] == 0 {
                    return;
                }
                let factor = p - row[col] as u64;
                for j in col..cols {
                    if pivot[j] != 0 {
                        row[j] = ((row[j] as u64 + factor * pivot[j] as u64) % p) as u32;
                    }
                }
            };
            match exec {
                Execution::Sequential => a.chunks_mut(cols).enumerate().for_each(eliminate),
                #[cfg(feature = "parallel")]
                Execution::Parallel => a.par_chunks_mut(cols).enumerate().for_each(eliminate),
            }
            pivot_indices.push(col);
            pivot_row += 1;
        }

        let rank = pivot_indices.len();
        let echelon: Vec<Vec<FFElement>> =
            (0..rank).map(|i| a[i * cols..(i + 1) * cols].iter().map(|&v| FFElement(v)).collect()).collect();

        let mut is_pivot = vec![false; cols];
        for &c in &pivot_indices {
            is_pivot[c] = true;
        }
        let kernel_basis = (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![FFElement::ZERO; cols];
                v[free] = FFElement::ONE;
                for (i, &pc) in pivot_indices.iter().enumerate() {
                    v[pc] = field.neg(echelon[i][free]);
                }
                v
            })
            .collect();

        RowReduction {
            rank,
            pivot_columns: pivot_indices.iter().map(|&c| self.column_labels[c].clone()).collect(),
            pivot_indices,
            echelon,
            kernel_basis,
        }
    }
}

/// Output of [`FFMatrix::row_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReduction<L> {
    pub rank: usize,
    /// Labels of the pivot columns in scan order.
    pub pivot_columns: Vec<L>,
    pub pivot_indices: Vec<usize>,
    /// Nonzero rows of the reduced row-echelon form.
    pub echelon: Vec<Vec<FFElement>>,
    /// Basis of the right null space, one vector per free column.
    pub kernel_basis: Vec<Vec<FFElement>>,
}
