//! Dense row-major matrices over exact integers and rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { rows, cols, data }
    }

    /// Build from row vectors; `cols` fixes the width even when there are no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    /// Rows `range` as a new matrix.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_rows(self.cols, idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let p = a * &rhs[(k, j)];
                    out[(i, j)] = out[(i, j)].clone() + p;
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![T::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(self.row(i)) {
                *o = o.clone() + vi * m;
            }
        }
        out
    }

    /// `x · M · yᵀ`.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> T {
        self.left_mul_vec(x)
            .iter()
            .zip(y)
            .fold(T::zero(), |acc, (a, b)| acc + a * b)
    }
}

impl<T: Clone + Neg<Output = T>> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Clone + Add<Output = T>> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

impl IntMatrix {
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Matrix::new(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Product of the diagonal entries.
    pub fn diagonal_product(&self) -> BigInt {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .product()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    /// `det(M) · M⁻¹`, exact.
    pub fn adjugate(&self) -> IntMatrix {
        let det = self.determinant();
        if det.is_zero() {
            // Rank-deficient adjugates are not needed here.
            return IntMatrix::zeros(self.rows, self.cols);
        }
        let inv = self.to_rational().inverse().expect("nonzero determinant");
        let d = BigRational::from_integer(det);
        inv.map(|x| (x * &d).to_integer())
    }
}

impl RatMatrix {
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Matrix::new(
            rows,
            cols,
            data.iter().map(|&x| BigRational::from_integer(x.into())).collect(),
        )
    }

    /// Least common multiple of all denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.data
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        self.is_integral().then(|| self.map(|x| x.to_integer()))
    }

    /// Scale by the common denominator: returns `(d, d·M)` with `d·M` integral.
    pub fn clear_denominators(&self) -> (BigInt, IntMatrix) {
        let d = self.denominator_lcm();
        let dr = BigRational::from_integer(d.clone());
        (d, self.map(|x| (x * &dr).to_integer()))
    }

    pub fn determinant(&self) -> BigRational {
        let (d, m) = self.clear_denominators();
        let n = self.rows as u32;
        BigRational::new(m.determinant(), num_traits::pow(d, n as usize))
    }

    /// Gauss–Jordan inverse; errors on singular input.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a[(i, k)].is_zero())
                .ok_or_else(|| Error::Degenerate("singular matrix".into()))?;
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let pivot = a[(k, k)].recip();
            for j in 0..n {
                a[(k, j)] = &a[(k, j)] * &pivot;
                inv[(k, j)] = &inv[(k, j)] * &pivot;
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    let t = &f * &a[(k, j)];
                    a[(i, j)] = &a[(i, j)] - t;
                    let t = &f * &inv[(k, j)];
                    inv[(i, j)] = &inv[(i, j)] - t;
                }
            }
        }
        Ok(inv)
    }

    /// Numbers of positive, negative and zero entries in a diagonalization by
    /// congruence (Sylvester's law of inertia), computed exactly.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut pos = 0;
        let mut neg = 0;
        let mut k = 0;
        while k < n {
            if a[(k, k)].is_zero() {
                // Bring a nonzero diagonal entry forward, or create one from
                // an off-diagonal entry by adding a row/column.
                if let Some(i) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                    a.swap_rows(k, i);
                    a.swap_cols(k, i);
                } else if let Some(i) = (k + 1..n).find(|&i| !a[(k, i)].is_zero()) {
                    for j in 0..n {
                        let v = &a[(k, j)] + &a[(i, j)];
                        a[(k, j)] = v;
                    }
                    for j in 0..n {
                        let v = &a[(j, k)] + &a[(j, i)];
                        a[(j, k)] = v;
                    }
                    if a[(k, k)].is_zero() {
                        // a_kk + 2a_ki + a_ii with a_ii = 0, a_kk = 0 -> 2a_ki != 0
                        unreachable!("congruence step produced zero pivot");
                    }
                } else {
                    k += 1;
                    continue;
                }
            }
            let p = a[(k, k)].clone();
            if p.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &p;
                for j in k..n {
                    let t = &f * &a[(k, j)];
                    a[(i, j)] = &a[(i, j)] - t;
                }
                for j in k..n {
                    let t = &f * &a[(j, k)];
                    a[(j, i)] = &a[(j, i)] - t;
                }
            }
            k += 1;
        }
        (pos, neg, n - pos - neg)
    }

    /// Exact positive-definiteness test by symmetric elimination.
    pub fn is_positive_definite(&self) -> bool {
        let (pos, _, _) = self.inertia();
        pos == self.rows
    }
}

pub fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cofactor expansion, an oracle independent of Bareiss.
    fn cofactor_det(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let minor = IntMatrix::from_rows(
                n - 1,
                (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| m[(i, c)].clone()).collect())
                    .collect(),
            );
            let term = &m[(0, j)] * cofactor_det(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn vtilde_gram_determinant() {
        let g = IntMatrix::from_i64(
            5,
            5,
            &[
                4, 2, 0, 0, 0, 2, 4, 2, 0, 1, 0, 2, 4, 2, -1, 0, 0, 2, 4, 0, 0, 1, -1, 0, 4,
            ],
        );
        assert_eq!(cofactor_det(&g), int(160));
        assert_eq!(g.determinant(), int(160));
        assert_eq!(IntMatrix::from_i64(2, 2, &[4, 0, 0, 40]).determinant(), int(160));
    }

    #[test]
    fn determinant_with_row_swaps_matches_cofactor() {
        let m = IntMatrix::from_i64(4, 4, &[0, 2, 1, 3, 0, 0, 5, 1, 7, 1, 0, 2, 1, 1, 1, 1]);
        assert_eq!(m.determinant(), cofactor_det(&m));
    }

    #[test]
    fn inverse_and_adjugate() {
        let m = IntMatrix::from_i64(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        let inv = m.to_rational().inverse().unwrap();
        assert_eq!(m.to_rational().mul(&inv), RatMatrix::identity(3));
        let adj = m.adjugate();
        let prod = m.mul(&adj);
        assert_eq!(prod, IntMatrix::diagonal(&[m.determinant(), m.determinant(), m.determinant()]));
    }

    #[test]
    fn inertia_counts() {
        let m = RatMatrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, -3]);
        assert_eq!(m.inertia(), (1, 2, 0));
        let h = RatMatrix::from_i64(2, 2, &[4, 0, 0, -2]);
        assert_eq!(h.inertia(), (1, 1, 0));
        let d = RatMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert_eq!(d.inertia(), (1, 0, 1));
        assert!(RatMatrix::from_i64(2, 2, &[2, 1, 1, 2]).is_positive_definite());
    }
}
