//! Dense matrices over GF(q) with exact Gaussian elimination.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.id() == other.field.id()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&x| self.field.display(x)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Debug serialization `{"rows":r,"cols":c,"entries":[[coeffs,...],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<u64>>>,
}

impl Matrix {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries from `field`.
    pub fn from_rows(field: &Arc<Field>, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    r.len(),
                    cols
                )));
            }
            for &x in r {
                field.check(x)?;
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FieldElement) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field.id() != other.field.id() {
            return Err(Error::ForeignElement);
        }
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::ColsMismatch(self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Raises every entry to `p^j` (`j` taken modulo `h`).
    pub fn entrywise_frobenius(&self, j: u32) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.frobenius(x, j)).collect(),
        }
    }

    /// `M^{T_e} = (M^{(p^{h-e})})^T`.
    pub fn galois_transpose(&self, e: u32) -> Matrix {
        let h = self.field.degree();
        self.entrywise_frobenius((h - e % h) % h).transpose()
    }

    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let x = m.get(r, j);
                m.set(r, j, f.mul(x, inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let x = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let Rref { matrix, rank, .. } = self.rref();
        Matrix {
            field: matrix.field.clone(),
            rows: rank,
            cols: matrix.cols,
            data: matrix.data[..rank * matrix.cols].to_vec(),
        }
    }

    /// Basis (in RREF) of `{ x : M x^T = 0 }`, one vector per row.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix: red, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(red.get(r, fc)));
            }
        }
        basis.row_space_basis()
    }

    /// Is `v` in the row space?
    pub fn row_space_contains(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::ColsMismatch(self.cols, v.len()));
        }
        let single = Matrix::from_rows(&self.field, self.cols, vec![v.to_vec()])?;
        Ok(self.vstack(&single)?.rank() == self.rank())
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|r| self.row(r).iter().map(|&x| self.field.coeffs(x)).collect())
                .collect(),
        }
    }

    pub fn from_json(field: &Arc<Field>, j: &MatrixJson) -> Result<Matrix> {
        if j.entries.len() != j.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} rows declared, {} present",
                j.rows,
                j.entries.len()
            )));
        }
        let rows = j
            .entries
            .iter()
            .map(|r| r.iter().map(|c| field.element(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, j.cols, rows)
    }
}

/// `dim(rowspace A ∩ rowspace B) = rank A + rank B - rank [A; B]`.
pub fn row_space_intersection_dim(a: &Matrix, b: &Matrix) -> Result<usize> {
    if a.cols != b.cols {
        return Err(Error::ColsMismatch(a.cols, b.cols));
    }
    let stacked = a.vstack(b)?;
    Ok(a.rank() + b.rank() - stacked.rank())
}
