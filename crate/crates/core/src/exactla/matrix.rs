use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, LinAlgError, Scalar};

/// Dense row-major matrix over an exact field. `0 x n` and `n x 0` shapes are legal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Which side the unknown sits on in [`Matrix::solve_factor`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `x * a = b`
    Left,
    /// `a * x = b`
    Right,
}

/// Output of [`Matrix::rref`]: `reduced = transform * m`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub transform: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = entry(r, c);
                assert_eq!(s.field(), field, "field mismatch in Matrix::from_fn");
                data.push(s);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Small-integer constructor, mostly for tests and fixtures.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Matrix::from_fn(field, rows, cols, |r, c| field.from_i64(entries[r * cols + c]))
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        for col in columns {
            assert_eq!(col.len(), rows, "column length does not match row count");
        }
        Matrix::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "field mismatch in Matrix::set");
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(LinAlgError::ShapeMismatch {
                op: "multiply",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        op: &'static str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix, LinAlgError> {
        self.check_field(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(LinAlgError::ShapeMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    /// Horizontal concatenation. All blocks must share the row count `rows`.
    pub fn hstack(field: Field, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.set_block(0, offset, b);
            offset += b.cols;
        }
        out
    }

    /// Vertical concatenation. All blocks must share the column count `cols`.
    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.set_block(offset, 0, b);
            offset += b.rows;
        }
        out
    }

    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &Matrix) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(row + r, col + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| self.get(row + r, col + c).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    /// Reduced row-echelon form together with an invertible transform `T`
    /// such that `T * self` is the reduced form.
    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let mut transform = Matrix::identity(self.field, self.rows);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !reduced.get(r, col).is_zero()) else {
                continue;
            };
            reduced.swap_rows(row, p);
            transform.swap_rows(row, p);
            let inv = reduced.get(row, col).inv().expect("pivot is nonzero");
            reduced.scale_row(row, &inv);
            transform.scale_row(row, &inv);
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = reduced.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                reduced.add_row_multiple(r, row, &-&factor);
                transform.add_row_multiple(r, row, &-&factor);
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            reduced,
            transform,
            rank: row,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        // Eliminating on the short side is cheaper; rank is transpose-invariant.
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = &self.data[idx] * s;
        }
    }

    /// row[dst] += s * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(src, c);
            if v.is_zero() {
                continue;
            }
            let add = v * s;
            let idx = dst * self.cols + c;
            self.data[idx] = &self.data[idx] + &add;
        }
    }

    /// Canonical basis of the column space: reduced column-echelon form with
    /// zero columns dropped. Every column has leading entry 1.
    pub fn image_basis(&self) -> Matrix {
        let r = self.transpose().rref();
        r.reduced.select_rows(&(0..r.rank).collect::<Vec<_>>()).transpose()
    }

    /// Canonical basis of the right null space, normalized like [`Matrix::image_basis`].
    pub fn kernel_basis(&self) -> Matrix {
        let r = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let mut raw = Matrix::zeros(self.field, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            raw.set(f, k, self.field.one());
            for (i, &p) in r.pivots.iter().enumerate() {
                raw.set(p, k, -r.reduced.get(i, f));
            }
        }
        raw.image_basis()
    }

    /// Solves `self * x = b` (right) or `x * self = b` (left). `Ok(None)` means the
    /// system is inconsistent. Free variables of the returned particular solution are zero.
    pub fn solve_factor(&self, b: &Matrix, side: Side) -> Result<Option<Matrix>, LinAlgError> {
        self.check_field(b)?;
        match side {
            Side::Right => {
                if self.rows != b.rows {
                    return Err(LinAlgError::ShapeMismatch {
                        op: "solve a*x = b",
                        left: self.shape(),
                        right: b.shape(),
                    });
                }
                let r = self.rref();
                let tb = &r.transform * b;
                for i in r.rank..tb.rows {
                    if (0..tb.cols).any(|c| !tb.get(i, c).is_zero()) {
                        return Ok(None);
                    }
                }
                let mut x = Matrix::zeros(self.field, self.cols, b.cols);
                for (i, &p) in r.pivots.iter().enumerate() {
                    for c in 0..b.cols {
                        x.set(p, c, tb.get(i, c).clone());
                    }
                }
                Ok(Some(x))
            }
            Side::Left => {
                if self.cols != b.cols {
                    return Err(LinAlgError::ShapeMismatch {
                        op: "solve x*a = b",
                        left: self.shape(),
                        right: b.shape(),
                    });
                }
                Ok(self
                    .transpose()
                    .solve_factor(&b.transpose(), Side::Right)?
                    .map(|x| x.transpose()))
            }
        }
    }

    /// Splits an idempotent `e` as `e = f * g` with `g * f = 1`; `f` is the
    /// canonical image basis of `e`.
    pub fn split_idempotent(&self) -> Result<(Matrix, Matrix), LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NotSquare(self.shape()));
        }
        if &(self * self) != self {
            return Err(LinAlgError::NotIdempotent);
        }
        let f = self.image_basis();
        let g = f
            .solve_factor(self, Side::Right)?
            .expect("an idempotent lies in the span of its own image");
        debug_assert!((&g * &f).is_identity());
        Ok((f, g))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}
