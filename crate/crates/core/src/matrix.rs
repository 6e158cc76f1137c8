//! Dense exact rational matrices and the linear-algebra kernels built on them.
//!
//! Determinant and rank use fraction-free (Bareiss) elimination on an integer
//! copy of the matrix: every row is first scaled by the lcm of its
//! denominators, so all intermediate quantities are minors of an integer
//! matrix. Kernels and inverses use ordinary Gauss-Jordan reduction over the
//! rationals. The characteristic polynomial is computed by the
//! Faddeev-LeVerrier recurrence and the minimal polynomial as the first linear
//! dependency among the flattened powers `I, M, M^2, ...`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CmError, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// Row-major dense matrix with at least one row and one column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(CmError::DimensionMismatch(format!(
                "matrix must have at least one row and column, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(CmError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(CmError::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer literals. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| rational::int(v)).collect())
                .collect(),
        )
        .expect("well-formed integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Single `1` at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Rational::one();
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

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(CmError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn same_shape(&self, other: &Matrix, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CmError::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "add")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "sub")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(CmError::DimensionMismatch(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Rational> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self[(i, i)].clone()).sum())
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// `XY - YX + I`.
    pub fn commutator_plus_identity(x: &Matrix, y: &Matrix) -> Result<Matrix> {
        let n = x.require_square()?;
        if y.rows != n || y.cols != n {
            return Err(CmError::DimensionMismatch(format!(
                "commutator of {n}x{n} with {}x{}",
                y.rows, y.cols
            )));
        }
        let xy = x.try_mul(y)?;
        let yx = y.try_mul(x)?;
        Ok(&(&xy - &yx) + &Matrix::identity(n))
    }

    /// Rows scaled by the lcm of their denominators, as integers.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut out = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            out.push(row.iter().map(|q| q.numer() * (&l / q.denom())).collect());
            scales.push(l);
        }
        (out, scales)
    }

    pub fn det(&self) -> Result<Rational> {
        let n = self.require_square()?;
        let (mut a, scales) = self.integer_rows();
        let echelon = bareiss(&mut a);
        if echelon.rank < n {
            return Ok(Rational::zero());
        }
        let mut d = a[n - 1][n - 1].clone();
        if echelon.odd_swaps {
            d = -d;
        }
        let denom = scales.iter().fold(BigInt::one(), |p, s| p * s);
        Ok(Rational::new(d, denom))
    }

    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        bareiss(&mut a).rank
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                m[(r, j)] *= &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let delta = &f * &m[(r, j)];
                    m[(i, j)] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Basis of the right null space, one vector per free column in increasing
    /// column order. Each vector sets its free variable to 1 and the other free
    /// variables to 0, then is scaled so its first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for f in 0..self.cols {
            if pivot_iter.peek() == Some(&&f) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, f)].clone();
            }
            normalize_leading(&mut v);
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(CmError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// `det(tI - M)` by the Faddeev-LeVerrier recurrence.
    pub fn charpoly(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        // aux_k = M * aux_{k-1} + c_{n-k+1} I, with aux_0 = 0
        let mut aux = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.try_mul(&aux)?;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            aux = next;
            let tr = self.try_mul(&aux)?.trace()?;
            coeffs[n - k] = -tr / rational::int(k as i64);
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Monic minimal polynomial: the first linear relation among `I, M, M^2, ...`.
    pub fn minpoly(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        let mut powers = vec![Matrix::identity(n)];
        for k in 1..=n {
            let next = powers[k - 1].try_mul(self)?;
            powers.push(next);
            let mut cols = Matrix::zeros(n * n, k + 1);
            for (j, p) in powers.iter().enumerate() {
                for (i, e) in p.data.iter().enumerate() {
                    cols[(i, j)] = e.clone();
                }
            }
            if let Some(v) = cols.kernel_basis().into_iter().next() {
                let lead = v[k].clone();
                debug_assert!(!lead.is_zero());
                return Ok(Polynomial::new(v.iter().map(|c| c / &lead).collect()));
            }
        }
        Err(CmError::InvariantViolation(
            "no relation among matrix powers up to the size".into(),
        ))
    }

    /// `p(M)` by Horner's rule; the constant term contributes `c I`.
    pub fn poly_eval(p: &Polynomial, m: &Matrix) -> Result<Matrix> {
        let n = m.require_square()?;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = m.try_mul(&acc)?;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        Ok(acc)
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.charpoly()? == Polynomial::monomial(Rational::one(), n))
    }

    /// Scales so the first nonzero entry (row-major) is 1. Zero stays zero.
    pub fn normalized(&self) -> Matrix {
        let mut m = self.clone();
        normalize_leading(&mut m.data);
        m
    }
}

pub(crate) fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|c| !c.is_zero()).cloned() {
        if !lead.is_one() {
            for c in v.iter_mut() {
                *c /= &lead;
            }
        }
    }
}

struct Echelon {
    rank: usize,
    odd_swaps: bool,
}

/// In-place fraction-free elimination. Every division is exact, and on a
/// full-rank square input the last diagonal entry is the determinant up to
/// the sign of the row permutation.
fn bareiss(a: &mut [Vec<BigInt>]) -> Echelon {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut odd_swaps = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            odd_swaps = !odd_swaps;
        }
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        r += 1;
    }
    Echelon { rank: r, odd_swaps }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &mut self.data[i * self.cols + j]
    }
}

// Operator forms panic on shape mismatch; the `try_*` methods report it.
impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix add")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix sub")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix mul")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{self}")
    }
}

/// JSON: array of rows, each an array of rational strings.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(rational::format).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| rational::parse(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Matrix::from_rows(parsed).map_err(D::Error::custom)
    }
}
