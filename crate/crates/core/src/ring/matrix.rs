//! Dense square matrices over the Gaussian rationals with exact elimination.
//!
//! Pivoting always selects the first nonzero entry: arithmetic is exact, so
//! there is no numerical reason to prefer large pivots, and a fixed rule keeps
//! every factorization (and therefore every canonical inverse built from one)
//! deterministic.

use super::gaussian::GaussianRational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    // row-major, dim*dim entries
    entries: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![GaussianRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            *m.at_mut(i, i) = GaussianRational::one();
        }
        m
    }

    /// q on the diagonal, zero elsewhere.
    pub fn scalar(dim: usize, q: &GaussianRational) -> Self {
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            *m.at_mut(i, i) = q.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidShape(format!(
                "expected a square matrix, got {} rows of lengths {:?}",
                dim,
                rows.iter().map(|r| r.len()).collect::<Vec<_>>()
            )));
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Unit matrix e_{rc}.
    pub fn unit(dim: usize, r: usize, c: usize) -> Self {
        let mut m = Matrix::zero(dim);
        *m.at_mut(r, c) = GaussianRational::one();
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.dim + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut GaussianRational {
        &mut self.entries[r * self.dim + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                if r == c {
                    self.at(r, c).is_one()
                } else {
                    self.at(r, c).is_zero()
                }
            })
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.dim, o.dim);
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.dim, o.dim);
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = GaussianRational::zero();
                for k in 0..n {
                    acc = acc.add(&self.at(r, k).mul(o.at(k, c)));
                }
                *out.at_mut(r, c) = acc;
            }
        }
        out
    }

    /// Conjugate transpose; an involution compatible with multiplication.
    pub fn conj_transpose(&self) -> Self {
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                *out.at_mut(r, c) = self.at(c, r).conj();
            }
        }
        out
    }

    /// Plain transpose, no conjugation. Used only to move right-sided linear
    /// systems to left-sided form; scalars commute, so (AB)^T = B^T A^T.
    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for r in 0..n {
            for c in 0..n {
                *out.at_mut(r, c) = self.at(c, r).clone();
            }
        }
        out
    }

    /// Reduced row echelon form. Returns (R, E, pivots) with E invertible,
    /// E * self = R, and pivots the columns holding the leading ones.
    pub fn rref_with_transform(&self) -> (Self, Self, Vec<usize>) {
        let n = self.dim;
        let mut r = self.clone();
        let mut e = Matrix::identity(n);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            if row == n {
                break;
            }
            let Some(p) = (row..n).find(|&i| !r.at(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                r.swap_rows(p, row);
                e.swap_rows(p, row);
            }
            let inv = r.at(row, col).inverse().expect("pivot is nonzero");
            r.scale_row(row, &inv);
            e.scale_row(row, &inv);
            for i in 0..n {
                if i != row && !r.at(i, col).is_zero() {
                    let f = r.at(i, col).clone();
                    r.sub_scaled_row(i, row, &f);
                    e.sub_scaled_row(i, row, &f);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (r, e, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.dim {
            let i = a * self.dim + c;
            let j = b * self.dim + c;
            self.entries.swap(i, j);
        }
    }

    fn scale_row(&mut self, r: usize, f: &GaussianRational) {
        for c in 0..self.dim {
            let v = self.at(r, c).mul(f);
            *self.at_mut(r, c) = v;
        }
    }

    // row i -= f * row j
    fn sub_scaled_row(&mut self, i: usize, j: usize, f: &GaussianRational) {
        for c in 0..self.dim {
            let v = self.at(i, c).sub(&f.mul(self.at(j, c)));
            *self.at_mut(i, c) = v;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.dim {
            let i = r * self.dim + a;
            let j = r * self.dim + b;
            self.entries.swap(i, j);
        }
    }

    // col i -= f * col j
    fn sub_scaled_col(&mut self, i: usize, j: usize, f: &GaussianRational) {
        for r in 0..self.dim {
            let v = self.at(r, i).sub(&f.mul(self.at(r, j)));
            *self.at_mut(r, i) = v;
        }
    }

    /// Two-sided inverse via Gauss-Jordan; None when singular.
    pub fn inverse(&self) -> Option<Self> {
        let (_, e, pivots) = self.rref_with_transform();
        if pivots.len() == self.dim {
            Some(e)
        } else {
            None
        }
    }

    /// Rank of the matrix.
    pub fn rank(&self) -> usize {
        self.rref_with_transform().2.len()
    }

    /// Canonical inner inverse X with self * X * self = self.
    ///
    /// Built from the factorization E * self * F = J where J is the identity
    /// truncated to the rank: X = F * J * E then satisfies the equation, since
    /// self = E^-1 J F^-1 and J is idempotent under J * J * J = J.
    pub fn inner_inverse(&self) -> Self {
        let n = self.dim;
        let (mut c, e, pivots) = self.rref_with_transform();
        let rank = pivots.len();
        let mut f = Matrix::identity(n);
        for i in 0..rank {
            // leading entry of row i sits at or right of column i
            let lead = (i..n)
                .find(|&j| !c.at(i, j).is_zero())
                .expect("rref row below rank is nonzero");
            if lead != i {
                c.swap_cols(lead, i);
                f.swap_cols(lead, i);
            }
            for j in 0..n {
                if j != i && !c.at(i, j).is_zero() {
                    let fac = c.at(i, j).clone();
                    c.sub_scaled_col(j, i, &fac);
                    f.sub_scaled_col(j, i, &fac);
                }
            }
        }
        debug_assert!((0..n).all(|r| (0..n).all(|cc| {
            if r == cc && r < rank {
                c.at(r, cc).is_one()
            } else {
                c.at(r, cc).is_zero()
            }
        })));
        let mut j = Matrix::zero(n);
        for i in 0..rank {
            *j.at_mut(i, i) = GaussianRational::one();
        }
        f.mul(&j).mul(&e)
    }

    /// Solve self * Y = B exactly; None when inconsistent. Free variables are
    /// set to zero, so the solution is canonical.
    pub fn solve_right(&self, b: &Self) -> Option<Self> {
        debug_assert_eq!(self.dim, b.dim);
        let n = self.dim;
        let (r, e, pivots) = self.rref_with_transform();
        let eb = e.mul(b);
        let rank = pivots.len();
        // zero rows of R demand zero rows of E*B
        for i in rank..n {
            for c in 0..n {
                if !eb.at(i, c).is_zero() {
                    return None;
                }
            }
        }
        let mut y = Matrix::zero(n);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..n {
                *y.at_mut(pc, c) = eb.at(i, c).clone();
            }
        }
        // R has non-pivot columns; the particular solution must be re-checked
        // only in debug builds, the construction is exact.
        debug_assert_eq!(self.mul(&y), *b, "solver postcondition");
        let _ = r;
        Some(y)
    }

    /// Solve X * self = B exactly; None when inconsistent.
    pub fn solve_left(&self, b: &Self) -> Option<Self> {
        self.transpose()
            .solve_right(&b.transpose())
            .map(|x| x.transpose())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational};

    fn q(p: i64, d: i64) -> GaussianRational {
        GaussianRational::new(
            BigRational::new(BigInt::from(p), BigInt::from(d)),
            BigRational::new(BigInt::from(0), BigInt::from(1)),
        )
    }

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| q(v, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn inverse_of_unit_triangular() {
        let u = m(vec![vec![1, 1], vec![0, 2]]);
        let inv = u.inverse().unwrap();
        assert!(u.mul(&inv).is_identity());
        assert!(inv.mul(&u).is_identity());
        assert_eq!(inv.at(0, 1), &q(-1, 2));
    }

    #[test]
    fn singular_matrices_have_no_inverse() {
        assert!(m(vec![vec![1, 1], vec![1, 1]]).inverse().is_none());
        assert!(Matrix::zero(3).inverse().is_none());
    }

    #[test]
    fn inner_inverse_certifies_regularity() {
        for a in [
            m(vec![vec![1, 1], vec![0, 0]]),
            m(vec![vec![1, 0], vec![1, 0]]),
            m(vec![vec![0, 0], vec![0, 0]]),
            m(vec![vec![2, 1], vec![4, 2]]),
            m(vec![vec![1, 2], vec![3, 4]]),
        ] {
            let x = a.inner_inverse();
            assert_eq!(a.mul(&x).mul(&a), a);
        }
        // the canonical choice for a row-echelon idempotent
        assert_eq!(
            m(vec![vec![1, 1], vec![0, 0]]).inner_inverse(),
            m(vec![vec![1, 0], vec![0, 0]])
        );
    }

    #[test]
    fn solvers_pick_free_variables_zero() {
        let d = m(vec![vec![0, 0], vec![1, 1]]);
        let b = m(vec![vec![1, 1], vec![0, 0]]);
        // X * d = b has solutions; canonical one puts nothing on free rows
        let x = d.solve_left(&b).unwrap();
        assert_eq!(x.mul(&d), b);
        assert_eq!(x, m(vec![vec![0, 1], vec![0, 0]]));
        // inconsistent system
        assert!(m(vec![vec![0, 0], vec![0, 0]]).solve_left(&b).is_none());
    }
}
