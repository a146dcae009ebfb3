//! Dense exact-rational matrices and polynomials.
//!
//! The matrices here are small (module dimensions in the default grids stay
//! below ten), so everything is a dense row-major `Vec<Rat>` with O(n³)
//! classical algorithms: Gauss–Jordan inversion with exact pivoting,
//! determinants by fraction-full elimination, characteristic polynomials by
//! determinant interpolation, and Lagrange interpolation for the cap
//! polynomials. Equality is entrywise exact equality of reduced fractions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Dense matrix over ℚ, row-major.
///
/// JSON form (used by `emit` and accepted everywhere a matrix is read):
/// `{"rows": 2, "cols": 2, "entries": [["1/1", "-1/1"], ["0/1", "1/1"]]}`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl TryFrom<MatrixRepr> for Matrix {
    type Error = Error;
    fn try_from(r: MatrixRepr) -> Result<Self> {
        if r.entries.len() != r.rows {
            return Err(Error::Dimension(format!(
                "matrix JSON declares {} rows but has {} entry rows",
                r.rows,
                r.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(r.rows * r.cols);
        for (i, row) in r.entries.iter().enumerate() {
            if row.len() != r.cols {
                return Err(Error::Dimension(format!(
                    "matrix JSON row {i} has {} entries, expected {}",
                    row.len(),
                    r.cols
                )));
            }
            for s in row {
                entries.push(s.parse::<Rat>()?);
            }
        }
        Ok(Matrix { rows: r.rows, cols: r.cols, entries })
    }
}

impl From<Matrix> for MatrixRepr {
    fn from(m: Matrix) -> Self {
        let entries = (0..m.rows)
            .map(|i| (0..m.cols).map(|j| m.entry(i, j).to_string()).collect())
            .collect();
        MatrixRepr { rows: m.rows, cols: m.cols, entries }
    }
}

impl Matrix {
    /// Builds a matrix from a row-major entry vector.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn diagonal(diag: &[Rat]) -> Self {
        let n = diag.len();
        Matrix::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { Rat::zero() })
    }

    /// `c · I_n`.
    pub fn scalar(n: usize, c: &Rat) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { c.clone() } else { Rat::zero() })
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

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Matrix product with an explicit shape check; `Err` on mismatch where
    /// the `*` operator would panic.
    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.entry(i, j) + &(a * b);
                    out.set_entry(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// `self^k` for a square matrix (`k = 0` gives the identity).
    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[I, m, m², …, m^count]` — one multiplication per step.
    pub fn power_table(&self, count: usize) -> Vec<Matrix> {
        assert!(self.is_square(), "power table of non-square matrix");
        let mut out = Vec::with_capacity(count + 1);
        out.push(Matrix::identity(self.rows));
        for k in 1..=count {
            let next = &out[k - 1] * self;
            out.push(next);
        }
        out
    }

    /// Exact inverse by Gauss–Jordan elimination with column pivot search.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a.entry(r, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot_row != col {
                a.swap_rows(pivot_row, col);
                inv.swap_rows(pivot_row, col);
            }
            let pivot = a.entry(col, col).clone();
            let pivot_inv = pivot.inv();
            a.scale_row(col, &pivot_inv);
            inv.scale_row(col, &pivot_inv);
            for r in 0..n {
                if r == col || a.entry(r, col).is_zero() {
                    continue;
                }
                let factor = a.entry(r, col).clone();
                a.sub_scaled_row(r, col, &factor);
                inv.sub_scaled_row(r, col, &factor);
            }
        }
        Ok(inv)
    }

    /// Exact determinant by Gaussian elimination with row swaps.
    pub fn determinant(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !a.entry(r, col).is_zero()) {
                Some(r) => r,
                None => return Ok(Rat::zero()),
            };
            if pivot_row != col {
                a.swap_rows(pivot_row, col);
                det = -det;
            }
            let pivot = a.entry(col, col).clone();
            det = det * pivot.clone();
            let pivot_inv = pivot.inv();
            for r in (col + 1)..n {
                if a.entry(r, col).is_zero() {
                    continue;
                }
                let factor = a.entry(r, col) * &pivot_inv;
                a.sub_scaled_row(r, col, &factor);
            }
        }
        Ok(det)
    }

    /// Smallest r ≥ 1 with `self^r = 0`, or `Err(NotNilpotent)`. A square
    /// zero matrix has index 1; a nilpotent n×n matrix has index ≤ n.
    pub fn nilpotency_index(&self) -> Result<usize> {
        assert!(self.is_square(), "nilpotency index of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut p = self.clone();
        for r in 1..=n {
            if p.is_zero() {
                return Ok(r);
            }
            p = &p * self;
        }
        Err(Error::NotNilpotent(n))
    }

    /// `Some(c)` iff `self = c·I` exactly.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<Rat> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.entry(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { &c } else { &Rat::zero() } as &Rat;
                if self.entry(i, j) != expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Square block-diagonal assembly of square blocks.
    pub fn block_diagonal(blocks: &[Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(Matrix::rows).sum();
        let mut out = Matrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            assert!(b.is_square(), "block-diagonal of non-square block");
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set_entry(off + i, off + j, b.entry(i, j).clone());
                }
            }
            off += b.rows;
        }
        out
    }

    /// The square sub-block of size `size` at diagonal offset `offset`.
    pub fn diagonal_block(&self, offset: usize, size: usize) -> Matrix {
        Matrix::from_fn(size, size, |i, j| self.entry(offset + i, offset + j).clone())
    }

    /// Copy with every column **not** listed zeroed out (same shape); this is
    /// right-multiplication by the coordinate projection onto `cols`.
    pub fn restrict_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for &j in cols {
            for i in 0..self.rows {
                out.set_entry(i, j, self.entry(i, j).clone());
            }
        }
        out
    }

    /// First entry where two equally-shaped matrices differ, as
    /// `(row, col, left, right)`.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize, Rat, Rat)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0, Rat::zero(), Rat::zero()));
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.entry(i, j) != other.entry(i, j) {
                    return Some((i, j, self.entry(i, j).clone(), other.entry(i, j).clone()));
                }
            }
        }
        None
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Rat) {
        for j in 0..self.cols {
            let v = self.entry(r, j) * c;
            self.set_entry(r, j, v);
        }
    }

    /// row[r] -= factor · row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Rat) {
        for j in 0..self.cols {
            let v = self.entry(r, j) - &(self.entry(src, j) * factor);
            self.set_entry(r, j, v);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sub shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix mul shape")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

/// Polynomial over ℚ as a dense coefficient vector, `coeffs[i]` the
/// coefficient of degree i; trailing zeros are trimmed, the zero polynomial
/// has an empty vector.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyCoeffs {
    coeffs: Vec<Rat>,
}

impl PolyCoeffs {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        PolyCoeffs { coeffs }
    }

    pub fn zero() -> Self {
        PolyCoeffs { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        PolyCoeffs::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Monic product `∏ (X - rᵢ)`; used to cross-check characteristic
    /// polynomials against known spectra.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut coeffs = vec![Rat::one()];
        for r in roots {
            // multiply by (X - r)
            let mut next = vec![Rat::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - &(c * r);
            }
            coeffs = next;
        }
        PolyCoeffs::new(coeffs)
    }

    /// Horner evaluation at a scalar.
    pub fn eval_scalar(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix: `p(M) = Σ cᵢ Mⁱ`.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix> {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "polynomial evaluation at non-square {}x{} matrix",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::scalar(n, c);
        }
        Ok(acc)
    }

    fn add(&self, other: &PolyCoeffs) -> PolyCoeffs {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        PolyCoeffs::new(out)
    }

    fn scale(&self, c: &Rat) -> PolyCoeffs {
        PolyCoeffs::new(self.coeffs.iter().map(|x| x * c).collect())
    }
}

/// Unique polynomial of degree < nodes.len() through `(nodes[i], values[i])`.
/// Nodes must be pairwise distinct (`Err(DuplicateNode)` otherwise).
pub fn lagrange_interpolate(nodes: &[Rat], values: &[Rat]) -> Result<PolyCoeffs> {
    if nodes.len() != values.len() {
        return Err(Error::Dimension(format!(
            "{} interpolation nodes but {} values",
            nodes.len(),
            values.len()
        )));
    }
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::DuplicateNode(nodes[i].to_string()));
            }
        }
    }
    let mut acc = PolyCoeffs::zero();
    for (i, yi) in values.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        // Basis polynomial ℓᵢ = ∏_{j≠i} (X - xⱼ) / (xᵢ - xⱼ).
        let mut numer = PolyCoeffs::constant(Rat::one());
        let mut denom = Rat::one();
        for (j, xj) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            numer = PolyCoeffs::from_roots(std::slice::from_ref(xj)).mul(&numer);
            denom = denom * (&nodes[i] - xj);
        }
        acc = acc.add(&numer.scale(&(yi / &denom)));
    }
    Ok(acc)
}

impl PolyCoeffs {
    fn mul(&self, other: &PolyCoeffs) -> PolyCoeffs {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return PolyCoeffs::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyCoeffs::new(out)
    }
}

/// Characteristic polynomial `det(X·I - M)`, computed by evaluating the
/// determinant at n+1 integer points and interpolating — no eigensolver, no
/// floating point.
pub fn char_poly(m: &Matrix) -> Result<PolyCoeffs> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut nodes = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let x = Rat::int(k as i64);
        let shifted = &Matrix::scalar(n, &x) - m;
        nodes.push(x);
        values.push(shifted.determinant()?);
    }
    lagrange_interpolate(&nodes, &values)
}
