use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_traits::{One, Zero};

use super::{LinAlgError, RatVec, Rational};

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: alloc::vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self, LinAlgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMat {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_vecs(rows: &[RatVec], cols: usize) -> Result<Self, LinAlgError> {
        Self::from_rows(rows.iter().map(|r| r.coords().to_vec()).collect(), cols)
    }

    /// Build from integer rows. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| RatVec::from_ints(r).into_coords())
            .collect();
        Self::from_rows(vecs, cols).expect("ragged integer rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[RatVec], rows: usize) -> Result<Self, LinAlgError> {
        Ok(Self::from_vecs(columns, rows)?.transpose())
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> RatVec {
        RatVec::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> RatVec {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<RatVec> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> RatMat {
        let mut t = RatMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn checked_mul(&self, rhs: &RatMat) -> Result<RatMat, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = RatMat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &RatVec) -> Result<RatVec, LinAlgError> {
        if self.cols != v.dim() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        Ok((0..self.rows).map(|r| self.row(r).dot(v)).collect())
    }

    /// Covector times matrix: `c ↦ cᵀ·M`.
    pub fn vec_mul(&self, covector: &RatVec) -> Result<RatVec, LinAlgError> {
        self.transpose().mul_vec(covector)
    }

    pub fn scale(&self, k: &Rational) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RatMat {
        let mut m = RatMat::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..a.cols {
            if pr == a.rows {
                break;
            }
            let Some(p) = (pr..a.rows).find(|&r| !a.get(r, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, pr);
            let inv = a.get(pr, c).recip();
            for j in c..a.cols {
                let v = a.get(pr, j) * &inv;
                a.set(pr, j, v);
            }
            for r in 0..a.rows {
                if r == pr || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in c..a.cols {
                    let sub = &f * a.get(pr, j);
                    if !sub.is_zero() {
                        let v = a.get(r, j) - sub;
                        a.set(r, j, v);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M·x = 0}`, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<RatVec> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = RatVec::zeros(self.cols).into_coords();
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            basis.push(RatVec::new(v));
        }
        basis
    }

    /// Nonzero rows of the reduced row echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Vec<RatVec> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|i| r.row(i)).collect()
    }

    pub fn determinant(&self) -> Result<Rational, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let pivot = a.get(c, c).clone();
            det *= &pivot;
            for r in c + 1..n {
                if a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c) / &pivot;
                for j in c..n {
                    let sub = &f * a.get(c, j);
                    if !sub.is_zero() {
                        let v = a.get(r, j) - sub;
                        a.set(r, j, v);
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<RatMat, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = RatMat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinAlgError::Singular);
        }
        let idx: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(red.select(&idx, &cols))
    }
}

impl Mul for &RatMat {
    type Output = RatMat;

    /// Panics on shape mismatch; use [`RatMat::checked_mul`] for fallible code.
    fn mul(self, rhs: &RatMat) -> RatMat {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl fmt::Display for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.row(r))?;
        }
        f.write_str("]")
    }
}

/// Square integer matrix with machine-word entries.
///
/// Weyl group elements in simple-root coordinates are integral with small
/// entries; enumerating groups of order ~10⁵ is only practical in this form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn identity(n: usize) -> Self {
        let mut data = alloc::vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMat { n, data }
    }

    /// Build from row-major data. Panics unless `data.len() == n * n`.
    pub fn from_data(n: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), n * n, "IntMat data length");
        IntMat { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.n.max(1))
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn to_rat(&self) -> RatMat {
        let rows: Vec<&[i64]> = self.data.chunks(self.n.max(1)).collect();
        if self.n == 0 {
            return RatMat::zeros(0, 0);
        }
        RatMat::from_int_rows(&rows)
    }
}

impl Mul for &IntMat {
    type Output = IntMat;

    fn mul(self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n, "IntMat size mismatch");
        let n = self.n;
        let mut data = alloc::vec![0i64; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * rhs.data[k * n + c];
                }
            }
        }
        IntMat { n, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, rat};
    use alloc::vec;

    #[test]
    fn determinant_and_inverse() {
        let m = RatMat::from_int_rows(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(m.determinant().unwrap(), rat(4));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RatMat::identity(3));
        assert_eq!(*inv.get(0, 0), frac(3, 4));
    }

    #[test]
    fn singular_matrix_has_kernel() {
        let m = RatMat::from_int_rows(&[&[1, 1, 1], &[2, 2, 2]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().is_zero());
        }
        assert_eq!(
            m.inverse(),
            Err(LinAlgError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        let sq = RatMat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(sq.inverse(), Err(LinAlgError::Singular));
        assert_eq!(sq.determinant().unwrap(), rat(0));
    }

    #[test]
    fn int_and_rational_products_agree() {
        let a = IntMat::from_data(2, vec![0, 1, -1, 2]);
        let b = IntMat::from_data(2, vec![3, -1, 1, 1]);
        assert_eq!((&a * &b).to_rat(), &a.to_rat() * &b.to_rat());
    }
}
