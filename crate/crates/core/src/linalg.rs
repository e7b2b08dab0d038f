//! Dense exact linear algebra over the rationals.
//!
//! Rank, nullspace, image and solve are the primitives every cohomology
//! computation in this crate reduces to. Pivoting is deterministic (first
//! nonzero entry in column order) so every basis is reproducible across
//! runs and platforms.

use crate::rat::Rat;
use crate::Error;

/// A dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {}x{} = {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Mat {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Result<Self, Error> {
        let mut m = Mat::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!(
                    "column {} has length {}, expected {}",
                    c,
                    col.len(),
                    rows
                )));
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat, Error> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.at(r, k).is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = self.at(r, k) * rhs.at(k, c) + out.at(r, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, Error> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector length {} does not match {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c) * &v[c]).sum())
            .collect())
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape("matrix addition shape mismatch".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape("matrix subtraction shape mismatch".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Reduced row echelon form together with the (strictly increasing)
    /// pivot column indices.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // first nonzero in column order
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let a = m.at(row, c).clone();
                    let b = m.at(p, c).clone();
                    m.set(row, c, b);
                    m.set(p, c, a);
                }
            }
            let inv = m.at(row, col).recip();
            for c in 0..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in 0..m.cols {
                    let v = m.at(r, c) - &(&factor * m.at(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the kernel. Each vector is normalized so its first
    /// nonzero coordinate is 1.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (row, &col) in pivots.iter().enumerate() {
                vec[col] = -r.at(row, free);
            }
            normalize_leading(&mut vec);
            basis.push(vec);
        }
        basis
    }

    /// A basis of the column space: the original columns at the pivot
    /// positions of the reduced form.
    pub fn image_basis(&self) -> Vec<Vec<Rat>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Some solution of `self * x = b`, or `None` when inconsistent.
    /// Free variables are set to zero; the result is verified by exact
    /// multiplication before being returned.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>, Error> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = red.at(row, self.cols).clone();
        }
        debug_assert_eq!(self.mul_vec(&x)?, b.to_vec());
        Ok(Some(x))
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn invert(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Rat::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.at(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

fn normalize_leading(v: &mut [Rat]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        let inv = first.recip();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
    }
}

/// `dim span(ambient) - dim span(subspace)`, after checking exactly that
/// every subspace vector lies in the ambient span.
pub fn quotient_dimension(subspace: &[Vec<Rat>], ambient: &[Vec<Rat>]) -> Result<usize, Error> {
    let n = ambient
        .first()
        .map(|v| v.len())
        .or_else(|| subspace.first().map(|v| v.len()))
        .unwrap_or(0);
    let amb = Mat::from_columns(n, ambient)?;
    for (i, v) in subspace.iter().enumerate() {
        if v.len() != n {
            return Err(Error::Shape(format!(
                "subspace vector {i} has wrong length"
            )));
        }
        if amb.solve(v)?.is_none() {
            return Err(Error::Inclusion(format!(
                "subspace vector {i} is not contained in the ambient span"
            )));
        }
    }
    let sub = Mat::from_columns(n, subspace)?;
    Ok(amb.rank() - sub.rank())
}
