//! Dense matrices over any [`Scalar`] domain and exact elimination routines.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{ExtScalar, GaussRat, LaurentScalar, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Square matrix over the series field.
pub type KMatrix = Matrix<LaurentScalar>;
/// Square matrix over a rank-2 algebra over the series field (usually K[j]).
pub type ExtMatrix = Matrix<ExtScalar>;

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros_like(proto: &T, rows: usize, cols: usize) -> Self {
        let z = proto.zero_like();
        Matrix { rows, cols, data: vec![z; rows * cols] }
    }

    pub fn identity_like(proto: &T, n: usize) -> Self {
        let (z, o) = (proto.zero_like(), proto.one_like());
        Matrix::from_fn(n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let z = entries[0].zero_like();
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { z.clone() })
    }

    /// The constant matrix `c` embedded in the domain of `proto`.
    pub fn embed(proto: &T, m: &Matrix<GaussRat>) -> Self {
        m.map(|c| proto.embed(c))
    }

    fn proto(&self) -> &T {
        &self.data[0]
    }

    pub fn diag(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let z = self.proto().zero_like();
        let mut out = Matrix { rows: self.rows, cols: rhs.cols, data: vec![z; self.rows * rhs.cols] };
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
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// Entrywise quadratic Galois involution.
    pub fn sigma2(&self) -> Self {
        self.map(|x| x.sigma2())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> T {
        let mut acc = self.proto().zero_like();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        if self.is_diagonal() {
            let d: Vec<T> = self.diag().iter().map(|v| v.inverse().ok_or(Error::Singular)).collect::<Result<_>>()?;
            return Ok(Matrix::diagonal(&d));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity_like(self.proto(), n);
        for c in 0..n {
            let p = pick_pivot(&a, c, c).ok_or(Error::Singular)?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let pinv = a.get(c, c).inverse().ok_or(Error::Singular)?;
            a.scale_row(c, &pinv);
            inv.scale_row(c, &pinv);
            for r in 0..n {
                if r != c && !a.get(r, c).is_zero() {
                    let f = a.get(r, c).clone();
                    a.add_row_multiple(r, c, &f);
                    inv.add_row_multiple(r, c, &f);
                }
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = self.proto().one_like();
        for c in 0..n {
            let Some(p) = pick_pivot(&a, c, c) else {
                return self.proto().zero_like();
            };
            if p != c {
                a.swap_rows(c, p);
                det = -det;
            }
            let piv = a.get(c, c).clone();
            let pinv = piv.inverse().expect("pivot is invertible");
            det = det * piv;
            for r in c + 1..n {
                if !a.get(r, c).is_zero() {
                    let f = a.get(r, c).clone() * pinv.clone();
                    a.add_row_multiple(r, c, &f);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &T) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = c.clone() * self.data[idx].clone();
        }
    }

    /// row[r] −= f · row[src]
    fn add_row_multiple(&mut self, r: usize, src: usize, f: &T) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let idx = r * self.cols + j;
            self.data[idx] = self.data[idx].clone() - f.clone() * s.clone();
        }
    }
}

/// Row index `≥ from` with an invertible entry of least weight in column `c`.
fn pick_pivot<T: Scalar>(a: &Matrix<T>, c: usize, from: usize) -> Option<usize> {
    let mut best: Option<(i64, usize)> = None;
    for r in from..a.rows {
        if let Some(w) = a.get(r, c).pivot_weight() {
            if best.is_none_or(|(bw, _)| w < bw) {
                best = Some((w, r));
            }
        }
    }
    best.map(|(_, r)| r)
}

/// Reduced row echelon form; returns the reduced matrix and its pivot columns.
pub fn rref<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = pick_pivot(&a, c, row) else { continue };
        a.swap_rows(row, p);
        let pinv = a.get(row, c).inverse().expect("pivot is invertible");
        a.scale_row(row, &pinv);
        for r in 0..a.rows {
            if r != row && !a.get(r, c).is_zero() {
                let f = a.get(r, c).clone();
                a.add_row_multiple(r, row, &f);
            }
        }
        pivots.push(c);
        row += 1;
    }
    (a, pivots)
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (r, pivots) = rref(m);
    let proto = &m.data[0];
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![proto.zero_like(); m.cols];
            v[f] = proto.one_like();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

/// One solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve<T: Scalar>(m: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(m.rows, b.len());
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| if j < m.cols { m.get(i, j).clone() } else { b[i].clone() });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let proto = &b[0];
    let mut x = vec![proto.zero_like(); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, m.cols).clone();
    }
    Some(x)
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Lifts a K-matrix into K[j] (or another rank-2 algebra).
pub fn lift(m: &KMatrix, kind: crate::scalar::AlgebraKind) -> ExtMatrix {
    m.map(|x| ExtScalar::from_base(kind, x.clone()))
}

/// The K-matrix underlying an ExtMatrix whose entries all lie in K.
pub fn descend(m: &ExtMatrix) -> Option<KMatrix> {
    let rows: Option<Vec<Vec<LaurentScalar>>> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).base_part()).collect()).collect();
    rows.map(Matrix::from_rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix<GaussRat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| GaussRat::from_int(x)).collect()).collect())
    }

    #[test]
    fn inverse_and_det() {
        let a = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let ai = a.inverse().unwrap();
        assert_eq!(a.mul(&ai), Matrix::identity_like(&GaussRat::one(), 3));
        assert_eq!(a.det(), GaussRat::from_int(18));
        assert!(matches!(q(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular)));
    }

    #[test]
    fn nullspace_and_solve() {
        let a = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let mv = a.mul(&Matrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect()));
            assert!(mv.is_zero());
        }
        let x = solve(&a, &[GaussRat::from_int(1), GaussRat::from_int(2)]).unwrap();
        assert_eq!(&(&x[0] + &(&x[1] * &GaussRat::from_int(2))) + &(&x[2] * &GaussRat::from_int(3)), GaussRat::one());
        assert!(solve(&a, &[GaussRat::from_int(1), GaussRat::from_int(3)]).is_none());
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn series_pivoting_prefers_low_valuation() {
        let n = 16;
        let h = LaurentScalar::hbar(n);
        let one = LaurentScalar::one(n);
        let m = Matrix::from_rows(vec![vec![h.clone(), one.clone()], vec![one.clone(), h.clone()]]);
        let mi = m.inverse().unwrap();
        assert_eq!(m.mul(&mi), Matrix::identity_like(&one, 2));
    }
}
