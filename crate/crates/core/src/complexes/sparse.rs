use nalgebra::DMatrix;
use num_traits::Zero;

use crate::laurent::{ratio_to_f64, Rational};

/// Row-sparse rational matrix; each row sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOp {
    /// Number of rows.
    pub n: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, Rational)>>,
    pub label: String,
}

fn compress(mut row: Vec<(usize, Rational)>) -> Vec<(usize, Rational)> {
    row.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
    for (j, v) in row {
        match out.last_mut() {
            Some((k, w)) if *k == j => *w += v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

impl SparseOp {
    pub fn zero(n: usize) -> Self {
        SparseOp { n, ncols: n, rows: vec![vec![]; n], label: "0".into() }
    }

    pub fn identity(n: usize) -> Self {
        SparseOp { n, ncols: n, rows: (0..n).map(|i| vec![(i, Rational::from_integer(1))]).collect(), label: "1".into() }
    }

    pub fn from_rows(n: usize, rows: Vec<Vec<(usize, Rational)>>, label: impl Into<String>) -> Self {
        Self::rect(n, n, rows, label)
    }

    pub fn rect(n: usize, ncols: usize, rows: Vec<Vec<(usize, Rational)>>, label: impl Into<String>) -> Self {
        SparseOp { n, ncols, rows: rows.into_iter().map(compress).collect(), label: label.into() }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn mul(&self, o: &SparseOp) -> SparseOp {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = vec![];
                for (k, a) in r {
                    for (j, b) in &o.rows[*k] {
                        acc.push((*j, a * b));
                    }
                }
                acc
            })
            .collect();
        SparseOp::rect(self.n, o.ncols, rows, format!("{}·{}", self.label, o.label))
    }

    pub fn add(&self, o: &SparseOp) -> SparseOp {
        let rows = self.rows.iter().zip(&o.rows).map(|(a, b)| a.iter().chain(b).cloned().collect()).collect();
        SparseOp::rect(self.n, self.ncols, rows, format!("{}+{}", self.label, o.label))
    }

    pub fn scale(&self, c: Rational) -> SparseOp {
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect()).collect();
        SparseOp::rect(self.n, self.ncols, rows, self.label.clone())
    }

    pub fn transpose(&self) -> SparseOp {
        let mut rows = vec![vec![]; self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                rows[*j].push((i, *v));
            }
        }
        SparseOp::rect(self.ncols, self.n, rows, format!("({})ᵀ", self.label))
    }

    /// Equality of the matrices, ignoring labels.
    pub fn same(&self, o: &SparseOp) -> bool {
        self.n == o.n && self.ncols == o.ncols && self.rows == o.rows
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r.iter().map(|e| e.1).sum()).collect()
    }

    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        self.rows.iter().map(|r| r.iter().map(|(j, v)| ratio_to_f64(v) * f[*j]).sum()).collect()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.n, self.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                m[(i, *j)] = ratio_to_f64(v);
            }
        }
        m
    }

    /// Frobenius norm of the difference, for error messages.
    pub fn residual(&self, o: &SparseOp) -> f64 {
        (self.to_dense() - o.to_dense()).norm()
    }
}
