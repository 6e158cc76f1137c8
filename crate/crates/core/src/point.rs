//! Points of the Calogero-Moser spaces `C_n`: pairs `(X, Y)` of `n x n`
//! matrices with `[X, Y] + I` of rank one.
//!
//! A [`CmPoint`] is a concrete representative; equality of the underlying
//! points of `C_n` is simultaneous conjugacy (see [`crate::conjugacy`]).

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CmError, Result};
use crate::matrix::Matrix;
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CmPoint {
    x: Matrix,
    y: Matrix,
}

impl CmPoint {
    /// Checks shapes and the rank-one condition.
    pub fn validate(x: Matrix, y: Matrix) -> Result<CmPoint> {
        let c = Matrix::commutator_plus_identity(&x, &y)?;
        match c.rank() {
            1 => Ok(CmPoint { x, y }),
            rank => Err(CmError::RankConditionViolated { rank }),
        }
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    pub fn into_parts(self) -> (Matrix, Matrix) {
        (self.x, self.y)
    }

    pub fn commutator_plus_identity(&self) -> Matrix {
        Matrix::commutator_plus_identity(&self.x, &self.y).expect("validated shapes")
    }
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(CmError::InvalidSize(
            0,
            "C_0 is excluded, n must be at least 1",
        ));
    }
    Ok(())
}

/// Matrix with `a_1, ..., a_{n-1}` just below the diagonal.
pub fn subdiagonal(a: &[Rational]) -> Matrix {
    let n = a.len() + 1;
    let mut m = Matrix::zeros(n, n);
    for (i, v) in a.iter().enumerate() {
        m[(i + 1, i)] = v.clone();
    }
    m
}

/// The nilpotent shift with ones just above the diagonal.
pub fn shift(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        m[(i, i + 1)] = Rational::one();
    }
    m
}

/// The base point `(X_0, Y_0)`: `X_0` has `1, 2, ..., n-1` below the diagonal
/// and `Y_0` is the upper shift. For `n = 1` this is `((0), (0))`.
pub fn base_point(n: usize) -> Result<CmPoint> {
    require_positive(n)?;
    let a: Vec<Rational> = (1..n as i64).map(rational::int).collect();
    CmPoint::validate(subdiagonal(&a), shift(n))
}

/// Entries below the diagonal of `X(a)`; `n` is one more than the length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubdiagVector {
    a: Vec<Rational>,
}

impl SubdiagVector {
    pub fn new(n: usize, a: Vec<Rational>) -> Result<Self> {
        require_positive(n)?;
        if a.len() + 1 != n {
            return Err(CmError::DimensionMismatch(format!(
                "subdiagonal vector of length {} for n = {n}",
                a.len()
            )));
        }
        Ok(SubdiagVector { a })
    }

    pub fn from_ints(a: &[i64]) -> Self {
        SubdiagVector {
            a: a.iter().map(|&v| rational::int(v)).collect(),
        }
    }

    /// `(1, 2, ..., r-1, -(n-r), ..., -2, -1)` for `1 <= r <= n`.
    pub fn admissible(n: usize, r: usize) -> Result<Self> {
        if n < 1 || r < 1 || r > n {
            return Err(CmError::InvalidSize(r, "r must satisfy 1 <= r <= n"));
        }
        let head = (1..r as i64).map(rational::int);
        let tail = (1..=(n - r) as i64).rev().map(|k| rational::int(-k));
        Ok(SubdiagVector {
            a: head.chain(tail).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.a.len() + 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.a
    }

    pub fn matrix(&self) -> Matrix {
        subdiagonal(&self.a)
    }
}

/// `(X(a), Y_0)`, rejected unless the rank-one condition holds.
pub fn subdiag_point(a: &SubdiagVector) -> Result<CmPoint> {
    CmPoint::validate(a.matrix(), shift(a.n()))
}

/// The `n` points `(X(a_r), Y_0)` with `X` nilpotent, indexed by `r = 1..=n`.
/// Element 0 is `(X_1, Y_0)`; the last element is the base point.
pub fn nilpotent_points(n: usize) -> Result<Vec<CmPoint>> {
    if n < 2 {
        return Err(CmError::InvalidSize(
            n,
            "nilpotent point enumeration needs n >= 2",
        ));
    }
    (1..=n)
        .map(|r| subdiag_point(&SubdiagVector::admissible(n, r)?))
        .collect()
}

/// `X = diag(xs)`, `Y_ij = 1/(x_i - x_j)` off the diagonal and `Y_ii = ys_i`;
/// then `[X, Y] + I` is the all-ones matrix.
pub fn diagonal_point(xs: &[Rational], ys: &[Rational]) -> Result<CmPoint> {
    let n = xs.len();
    require_positive(n)?;
    if ys.len() != n {
        return Err(CmError::DimensionMismatch(format!(
            "{n} eigenvalues but {} diagonal Y entries",
            ys.len()
        )));
    }
    let mut y = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                y[(i, i)] = ys[i].clone();
                continue;
            }
            let d = &xs[i] - &xs[j];
            if d.is_zero() {
                return Err(CmError::DuplicateEigenvalue);
            }
            y[(i, j)] = d.recip();
        }
    }
    CmPoint::validate(Matrix::diag(xs), y)
}

/// Wire format: `{"n": int, "X": [[...]], "Y": [[...]]}` with rational strings.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CmPointJson {
    pub n: usize,
    #[serde(rename = "X")]
    pub x: Matrix,
    #[serde(rename = "Y")]
    pub y: Matrix,
}

impl From<&CmPoint> for CmPointJson {
    fn from(p: &CmPoint) -> Self {
        CmPointJson {
            n: p.n(),
            x: p.x.clone(),
            y: p.y.clone(),
        }
    }
}

impl TryFrom<CmPointJson> for CmPoint {
    type Error = CmError;

    fn try_from(j: CmPointJson) -> Result<CmPoint> {
        for (name, m) in [("X", &j.x), ("Y", &j.y)] {
            if m.rows() != j.n || m.cols() != j.n {
                return Err(CmError::DimensionMismatch(format!(
                    "{name} is {}x{} but n = {}",
                    m.rows(),
                    m.cols(),
                    j.n
                )));
            }
        }
        CmPoint::validate(j.x, j.y)
    }
}

impl Serialize for CmPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CmPointJson::from(self).serialize(s)
    }
}
