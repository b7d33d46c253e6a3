use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// A dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of element indices, checking every entry belongs to `field`.
    pub fn from_rows<R: AsRef<[Elem]>>(field: &Field, rows: &[R]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape(format!("ragged rows: {} vs {}", r.len(), cols)));
            }
            for &x in r {
                field.check(x as u32)?;
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Maps integer entries into the field by reduction mod p.
    pub fn from_ints(field: &Field, rows: &[Vec<i64>]) -> Result<Matrix> {
        let mapped: Vec<Vec<Elem>> =
            rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect();
        Matrix::from_rows(field, &mapped)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
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

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hconcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!("{} rows vs {} rows", self.rows, other.rows)));
        }
        let rows: Vec<Vec<Elem>> = (0..self.rows)
            .map(|r| self.row(r).iter().chain(other.row(r)).copied().collect())
            .collect();
        Matrix::from_rows(&self.field, &rows)
    }

    /// Keeps the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows: Vec<Vec<Elem>> =
            (0..self.rows).map(|r| cols.iter().map(|&c| self.get(r, c)).collect()).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: cols.len(), data: rows.concat() }
    }

    /// Reduced row-echelon form with zero rows dropped, plus the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            let s = f.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, s);
            for i in 0..m.rows {
                let x = m.get(i, c);
                if i != r && x != 0 {
                    m.add_row_multiple(i, r, f.neg(x));
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : self * x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![0; self.cols];
                x[fc] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(r.get(i, fc));
                }
                x
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self.field.mul(self.get(r, c), s);
            self.set(r, c, v);
        }
    }

    /// row[dst] += s * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self.field.add(self.get(dst, c), self.field.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let f = Field::new(3).unwrap();
        let m = Matrix::from_ints(&f, &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]]).unwrap();
        // rows 0 and 1 are proportional over GF(3)
        assert_eq!(m.rank(), 2);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(r.row(0), &[1, 2, 0]);
        assert_eq!(r.row(1), &[0, 0, 1]);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f = Field::new(5).unwrap();
        let m = Matrix::from_ints(&f, &[vec![1, 2, 3, 4], vec![0, 1, 1, 1]]).unwrap();
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for x in ker {
            let col = Matrix::from_rows(&f, &[x]).unwrap().transpose();
            assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn rejects_foreign_entries() {
        let f = Field::new(2).unwrap();
        assert!(Matrix::from_rows(&f, &[vec![0u8, 2]]).is_err());
        assert!(Matrix::from_rows(&f, &[vec![0u8, 1], vec![1]]).is_err());
    }
}
