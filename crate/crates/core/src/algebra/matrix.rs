//! Dense exact matrices over ℚ(ζ₈) and the small amount of linear algebra
//! the crate needs (determinant, inverse, reduced row echelon form).

use std::fmt;
use std::ops::Mul;

use super::cyc8::Cyc8;
use crate::error::Error;

/// Row-major dense matrix. The derived ordering compares shape first and then
/// entries lexicographically, which is the canonical order for group
/// elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyc8>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Cyc8>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Cyc8>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix scaled by `factor`.
    pub fn from_int_rows(rows: &[&[i64]], factor: &Cyc8) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| &Cyc8::from_int(n) * factor).collect())
                .collect(),
        )
        .expect("well-formed integer rows")
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Cyc8::one(); n])
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Cyc8::zero(); rows * cols],
        }
    }

    pub fn diagonal(diag: &[Cyc8]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (k, d) in diag.iter().enumerate() {
            m.entries[k * n + k] = d.clone();
        }
        m
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

    pub fn get(&self, r: usize, c: usize) -> &Cyc8 {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Cyc8) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Cyc8] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Cyc8> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyc8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Cyc8] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn scale(&self, k: &Cyc8) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Cyc8::from_int(-1))
    }

    pub fn try_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * rhs.cols + c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Cyc8]) -> Vec<Cyc8> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<Cyc8, Error> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows = self.to_rows();
        let mut det = Cyc8::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Ok(Cyc8::zero());
            };
            if pivot != col {
                rows.swap(pivot, col);
                det = -det;
            }
            let p = rows[col][col].clone();
            det *= &p;
            let p_inv = p.inverse().expect("nonzero pivot");
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = &rows[r][col] * &p_inv;
                for c in col..n {
                    let delta = &factor * &rows[col][c];
                    rows[r][c] -= &delta;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<ExactMatrix, Error> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Cyc8::one());
        }
        let (reduced, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, reduced.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(pivot) = (next..self.rows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(pivot, next);
            let inv = rows[next][col].inverse().expect("nonzero pivot");
            for e in rows[next].iter_mut() {
                *e = &*e * &inv;
            }
            for r in 0..self.rows {
                if r == next || rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].clone();
                for c in col..self.cols {
                    let delta = &factor * &rows[next][c];
                    rows[r][c] -= &delta;
                }
            }
            pivots.push(col);
            next += 1;
        }
        (
            ExactMatrix::from_rows(rows).expect("same shape"),
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : self·v = 0}.
    pub fn nullspace(&self) -> Vec<Vec<Cyc8>> {
        let (reduced, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Cyc8::zero(); self.cols];
                v[f] = Cyc8::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(r, f);
                }
                v
            })
            .collect()
    }

    pub fn is_orthogonal(&self) -> bool {
        self.is_square()
            && self
                .transpose()
                .try_mul(self)
                .is_ok_and(|p| p == Self::identity(self.rows))
    }

    /// Every row and column has exactly one nonzero entry, equal to ±1.
    pub fn is_signed_permutation(&self) -> bool {
        let unit = |e: &Cyc8| e.is_one() || (-e).is_one();
        self.is_square()
            && (0..self.rows).all(|r| {
                let nz: Vec<_> = self.row(r).iter().filter(|e| !e.is_zero()).collect();
                nz.len() == 1 && unit(nz[0])
            })
            && (0..self.cols).all(|c| {
                let nz: Vec<_> = (0..self.rows)
                    .map(|r| self.get(r, c))
                    .filter(|e| !e.is_zero())
                    .collect();
                nz.len() == 1 && unit(nz[0])
            })
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Mul for ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: ExactMatrix) -> ExactMatrix {
        &self * &rhs
    }
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
pub fn solve_in_span(basis: &[Vec<Cyc8>], target: &[Cyc8]) -> Option<Vec<Cyc8>> {
    let n = basis.len();
    let dim = target.len();
    let mut aug = ExactMatrix::zeros(dim, n + 1);
    for (j, b) in basis.iter().enumerate() {
        for (i, e) in b.iter().enumerate() {
            aug.set(i, j, e.clone());
        }
    }
    for (i, e) in target.iter().enumerate() {
        aug.set(i, n, e.clone());
    }
    let (reduced, pivots) = aug.rref();
    if pivots.contains(&n) {
        return None;
    }
    let mut coords = vec![Cyc8::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        coords[p] = reduced.get(r, n).clone();
    }
    Some(coords)
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows, &Cyc8::one())
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.determinant().unwrap(), Cyc8::from_int(18));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, ExactMatrix::identity(3));
    }

    #[test]
    fn singular_inverse_fails() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.determinant().unwrap(), Cyc8::zero());
        assert!(matches!(a.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn cyclotomic_determinant() {
        let z = Cyc8::zeta();
        let d = ExactMatrix::diagonal(&[z.clone(), z.inverse().unwrap()]);
        assert_eq!(d.determinant().unwrap(), Cyc8::one());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(m(&[&[1, 2]]).try_mul(&m(&[&[1, 2]])).is_err());
        assert!(ExactMatrix::new(2, 2, vec![Cyc8::one()]).is_err());
    }

    #[test]
    fn nullspace_and_span() {
        let a = m(&[&[1, -1, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.apply(v).iter().all(Cyc8::is_zero));
        }
        let basis = vec![
            vec![Cyc8::from_int(1), Cyc8::from_int(0)],
            vec![Cyc8::from_int(1), Cyc8::from_int(1)],
        ];
        let target = [Cyc8::from_int(3), Cyc8::from_rational(rat(1, 2))];
        let coords = solve_in_span(&basis, &target).unwrap();
        assert_eq!(coords, vec![Cyc8::from_rational(rat(5, 2)), Cyc8::from_rational(rat(1, 2))]);
        let line = vec![vec![Cyc8::from_int(1), Cyc8::from_int(1)]];
        assert!(solve_in_span(&line, &target).is_none());
    }

    #[test]
    fn signed_permutation() {
        assert!(m(&[&[0, -1], &[1, 0]]).is_signed_permutation());
        assert!(!m(&[&[1, 1], &[0, 1]]).is_signed_permutation());
    }
}
