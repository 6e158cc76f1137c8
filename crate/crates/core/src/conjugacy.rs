//! Simultaneous conjugacy of pairs: deciding whether two representatives are
//! the same point of `C_n`, with an exact witness.
//!
//! An intertwiner from `(X, Y)` to `(X', Y')` is a matrix `A` with
//! `A X = X' A` and `A Y = Y' A`; the pairs are conjugate iff some intertwiner
//! is invertible, and then `A X A^-1 = X'`, `A Y A^-1 = Y'`.

use num_traits::Zero;
use serde::Serialize;

use crate::automorphism::AutoWord;
use crate::error::{CmError, Result};
use crate::matrix::Matrix;
use crate::point::CmPoint;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwinerBasis {
    pub n: usize,
    pub basis: Vec<Matrix>,
}

impl IntertwinerBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NotConjugateReason {
    EmptyIntertwiners,
    NoInvertibleIntertwiner,
    InvariantMismatch,
}

impl NotConjugateReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NotConjugateReason::EmptyIntertwiners => "EmptyIntertwiners",
            NotConjugateReason::NoInvertibleIntertwiner => "NoInvertibleIntertwiner",
            NotConjugateReason::InvariantMismatch => "InvariantMismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyVerdict {
    /// `witness * X * witness^-1 = X'` and likewise for `Y`.
    Conjugate(Matrix),
    NotConjugate(NotConjugateReason),
}

impl ConjugacyVerdict {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, ConjugacyVerdict::Conjugate(_))
    }

    pub fn witness(&self) -> Option<&Matrix> {
        match self {
            ConjugacyVerdict::Conjugate(w) => Some(w),
            ConjugacyVerdict::NotConjugate(_) => None,
        }
    }

    pub fn reason(&self) -> Option<NotConjugateReason> {
        match self {
            ConjugacyVerdict::Conjugate(_) => None,
            ConjugacyVerdict::NotConjugate(r) => Some(*r),
        }
    }

    pub fn to_json(&self) -> VerdictJson {
        VerdictJson {
            conjugate: self.is_conjugate(),
            witness: self.witness().cloned(),
            reason: self.reason().map(|r| r.as_str().to_owned()),
        }
    }
}

/// `{"conjugate": bool, "witness": [[...]] | null, "reason": string | null}`
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct VerdictJson {
    pub conjugate: bool,
    pub witness: Option<Matrix>,
    pub reason: Option<String>,
}

fn same_size(p: &CmPoint, q: &CmPoint) -> Result<usize> {
    if p.n() != q.n() {
        return Err(CmError::DimensionMismatch(format!(
            "points of C_{} and C_{}",
            p.n(),
            q.n()
        )));
    }
    Ok(p.n())
}

/// Rows of `A M - M' A = 0` as linear equations in the row-major entries of `A`.
fn push_intertwining_rows(m: &Matrix, m2: &Matrix, system: &mut Matrix, offset: usize) {
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            let row = offset + i * n + j;
            for k in 0..n {
                if !m[(k, j)].is_zero() {
                    system[(row, i * n + k)] += &m[(k, j)];
                }
                if !m2[(i, k)].is_zero() {
                    system[(row, k * n + j)] -= &m2[(i, k)];
                }
            }
        }
    }
}

/// Basis of `{A : A X = X' A, A Y = Y' A}`.
pub fn intertwiners(p: &CmPoint, q: &CmPoint) -> Result<IntertwinerBasis> {
    let n = same_size(p, q)?;
    let mut system = Matrix::zeros(2 * n * n, n * n);
    push_intertwining_rows(p.x(), q.x(), &mut system, 0);
    push_intertwining_rows(p.y(), q.y(), &mut system, n * n);
    let basis = system
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::new(n, n, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntertwinerBasis { n, basis })
}

/// An invertible element of the span, if any.
///
/// With several basis elements, `det(c_1 A_1 + ... + c_k A_k)` is a polynomial
/// of total degree at most `n` in the `c_i`, so it is identically zero iff it
/// vanishes on the grid `{0, ..., n}^k`. The grid is scanned in lexicographic
/// order and the first hit is returned.
pub fn invertible_in_span(b: &IntertwinerBasis) -> Result<Option<Matrix>> {
    match b.basis.as_slice() {
        [] => Ok(None),
        [a] => Ok((!a.det()?.is_zero()).then(|| a.clone())),
        basis => {
            let side = b.n as u64 + 1;
            let k = basis.len();
            let mut coords = vec![0u64; k];
            loop {
                if coords.iter().any(|&c| c != 0) {
                    let mut m = Matrix::zeros(b.n, b.n);
                    for (c, a) in coords.iter().zip(basis) {
                        if *c != 0 {
                            m = &m + &a.scale(&rational::int(*c as i64));
                        }
                    }
                    if !m.det()?.is_zero() {
                        return Ok(Some(m));
                    }
                }
                // odometer, last coordinate fastest
                let mut pos = k;
                loop {
                    if pos == 0 {
                        return Ok(None);
                    }
                    pos -= 1;
                    coords[pos] += 1;
                    if coords[pos] < side {
                        break;
                    }
                    coords[pos] = 0;
                }
            }
        }
    }
}

fn invariants_differ(p: &CmPoint, q: &CmPoint) -> Result<bool> {
    if p.x().charpoly()? != q.x().charpoly()? || p.y().charpoly()? != q.y().charpoly()? {
        return Ok(true);
    }
    let sp = p.x().try_add(p.y())?;
    let sq = q.x().try_add(q.y())?;
    Ok(sp.charpoly()? != sq.charpoly()?)
}

fn verify_witness(w: &Matrix, p: &CmPoint, q: &CmPoint) -> Result<()> {
    let inv = w.inverse()?;
    let ok = &(w * p.x()) * &inv == *q.x() && &(w * p.y()) * &inv == *q.y();
    if ok {
        Ok(())
    } else {
        Err(CmError::InvariantViolation(
            "conjugacy witness failed verification".into(),
        ))
    }
}

/// Decides whether `p` and `q` are the same point of `C_n`.
pub fn are_conjugate(p: &CmPoint, q: &CmPoint) -> Result<ConjugacyVerdict> {
    same_size(p, q)?;
    if invariants_differ(p, q)? {
        return Ok(ConjugacyVerdict::NotConjugate(
            NotConjugateReason::InvariantMismatch,
        ));
    }
    let basis = intertwiners(p, q)?;
    if basis.dim() == 0 {
        return Ok(ConjugacyVerdict::NotConjugate(
            NotConjugateReason::EmptyIntertwiners,
        ));
    }
    match invertible_in_span(&basis)? {
        None => Ok(ConjugacyVerdict::NotConjugate(
            NotConjugateReason::NoInvertibleIntertwiner,
        )),
        Some(w) => {
            let w = w.normalized();
            verify_witness(&w, p, q)?;
            Ok(ConjugacyVerdict::Conjugate(w))
        }
    }
}

/// True iff `w` maps `p` to the same point of `C_n`.
pub fn fixes(w: &AutoWord, p: &CmPoint) -> Result<bool> {
    Ok(are_conjugate(&w.act(p)?, p)?.is_conjugate())
}

/// The self-intertwiners of a point of `C_n` are expected to be the scalars.
/// Any other dimension is reported as [`CmError::IntertwinerAnomaly`].
pub fn stabilizer_dimension(p: &CmPoint) -> Result<usize> {
    match intertwiners(p, p)?.dim() {
        1 => Ok(1),
        dim => Err(CmError::IntertwinerAnomaly { dim }),
    }
}

/// `diag(lambda, lambda^2, ..., lambda^n)`.
pub fn scaling_witness(n: usize, lambda: &Rational) -> Matrix {
    let mut entries = Vec::with_capacity(n);
    let mut acc = lambda.clone();
    for _ in 0..n {
        entries.push(acc.clone());
        acc *= lambda;
    }
    Matrix::diag(&entries)
}
