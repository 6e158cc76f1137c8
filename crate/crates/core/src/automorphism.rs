//! Words in the generators `Phi_p`, `Psi_q`, `R_lambda` and their action on
//! points of `C_n`:
//!
//! * `Phi_p (X, Y) = (X + p(Y), Y)`
//! * `Psi_q (X, Y) = (X, Y + q(X))`
//! * `R_lambda (X, Y) = (X / lambda, lambda Y)`
//!
//! A word `[g_1, ..., g_k]` is the composite `g_1 o ... o g_k`, so `g_k` acts
//! first.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CmError, Result};
use crate::matrix::Matrix;
use crate::point::CmPoint;
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Generator {
    Phi(Polynomial),
    Psi(Polynomial),
    Scale(Rational),
}

impl Generator {
    pub fn scale(lambda: Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(CmError::ZeroScale);
        }
        Ok(Generator::Scale(lambda))
    }

    fn is_identity(&self) -> bool {
        match self {
            Generator::Phi(p) | Generator::Psi(p) => p.is_zero(),
            Generator::Scale(l) => l.is_one(),
        }
    }

    fn inverse(&self) -> Generator {
        match self {
            Generator::Phi(p) => Generator::Phi(-p),
            Generator::Psi(q) => Generator::Psi(-q),
            Generator::Scale(l) => Generator::Scale(l.recip()),
        }
    }

    /// Product of two adjacent factors of the same kind.
    fn merge(&self, next: &Generator) -> Option<Generator> {
        match (self, next) {
            (Generator::Phi(a), Generator::Phi(b)) => Some(Generator::Phi(a + b)),
            (Generator::Psi(a), Generator::Psi(b)) => Some(Generator::Psi(a + b)),
            (Generator::Scale(a), Generator::Scale(b)) => Some(Generator::Scale(a * b)),
            _ => None,
        }
    }

    fn apply(&self, x: &Matrix, y: &Matrix) -> Result<(Matrix, Matrix)> {
        Ok(match self {
            Generator::Phi(p) => (x.try_add(&Matrix::poly_eval(p, y)?)?, y.clone()),
            Generator::Psi(q) => (x.clone(), y.try_add(&Matrix::poly_eval(q, x)?)?),
            Generator::Scale(l) => {
                if l.is_zero() {
                    return Err(CmError::ZeroScale);
                }
                (x.scale(&l.recip()), y.scale(l))
            }
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AutoWord {
    factors: Vec<Generator>,
}

impl AutoWord {
    pub fn identity() -> Self {
        AutoWord::default()
    }

    /// The word exactly as given, without merging.
    pub fn from_factors(factors: Vec<Generator>) -> Result<Self> {
        if factors
            .iter()
            .any(|g| matches!(g, Generator::Scale(l) if l.is_zero()))
        {
            return Err(CmError::ZeroScale);
        }
        Ok(AutoWord { factors })
    }

    pub fn single(g: Generator) -> Self {
        AutoWord { factors: vec![g] }
    }

    pub fn phi(p: Polynomial) -> Self {
        Self::single(Generator::Phi(p))
    }

    pub fn psi(q: Polynomial) -> Self {
        Self::single(Generator::Psi(q))
    }

    pub fn scaling(lambda: Rational) -> Result<Self> {
        Ok(Self::single(Generator::scale(lambda)?))
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `self o other`, with adjacent factors of the same kind merged and
    /// identity factors dropped.
    pub fn compose(&self, other: &AutoWord) -> AutoWord {
        let mut out: Vec<Generator> = Vec::with_capacity(self.len() + other.len());
        for g in self.factors.iter().chain(&other.factors) {
            let merged = match out.last() {
                Some(top) => top.merge(g),
                None => None,
            };
            match merged {
                Some(m) => {
                    out.pop();
                    if !m.is_identity() {
                        out.push(m);
                    }
                }
                None if g.is_identity() => {}
                None => out.push(g.clone()),
            }
        }
        AutoWord { factors: out }
    }

    pub fn inverse(&self) -> AutoWord {
        AutoWord {
            factors: self.factors.iter().rev().map(Generator::inverse).collect(),
        }
    }

    /// Applies the factors right to left and re-validates the result.
    pub fn act(&self, p: &CmPoint) -> Result<CmPoint> {
        let (mut x, mut y) = (p.x().clone(), p.y().clone());
        for g in self.factors.iter().rev() {
            (x, y) = g.apply(&x, &y)?;
        }
        CmPoint::validate(x, y)
            .map_err(|e| CmError::InvariantViolation(format!("action left C_n: {e}")))
    }
}

/// `Phi_{-p} Psi_chi Phi_p` with `chi` the minimal polynomial of `X + p(Y)`.
/// It fixes `point` entrywise.
pub fn isotropy_element(point: &CmPoint, p: &Polynomial) -> Result<(AutoWord, Polynomial)> {
    let shifted = point.x().try_add(&Matrix::poly_eval(p, point.y())?)?;
    let chi = shifted.minpoly()?;
    Ok((conjugated_psi(p, &chi), chi))
}

/// `Phi_{-p} Psi_chi Phi_p` for an arbitrary `chi`.
pub fn conjugated_psi(p: &Polynomial, chi: &Polynomial) -> AutoWord {
    AutoWord {
        factors: vec![
            Generator::Phi(-p),
            Generator::Psi(chi.clone()),
            Generator::Phi(p.clone()),
        ],
    }
}

/// Wire format for one factor.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum GeneratorJson {
    Phi {
        p: Polynomial,
    },
    Psi {
        #[serde(alias = "q")]
        p: Polynomial,
    },
    Scale {
        #[serde(with = "rational::as_string")]
        lambda: Rational,
    },
}

impl From<&Generator> for GeneratorJson {
    fn from(g: &Generator) -> Self {
        match g {
            Generator::Phi(p) => GeneratorJson::Phi { p: p.clone() },
            Generator::Psi(q) => GeneratorJson::Psi { p: q.clone() },
            Generator::Scale(l) => GeneratorJson::Scale { lambda: l.clone() },
        }
    }
}

impl TryFrom<GeneratorJson> for Generator {
    type Error = CmError;
    fn try_from(g: GeneratorJson) -> Result<Generator> {
        match g {
            GeneratorJson::Phi { p } => Ok(Generator::Phi(p)),
            GeneratorJson::Psi { p } => Ok(Generator::Psi(p)),
            GeneratorJson::Scale { lambda } => Generator::scale(lambda),
        }
    }
}

impl Serialize for AutoWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<GeneratorJson> = self.factors.iter().map(GeneratorJson::from).collect();
        v.serialize(s)
    }
}

/// Parses the word format; a zero scaling factor is reported as
/// [`CmError::ZeroScale`], not as a parse error.
pub fn word_from_json(factors: Vec<GeneratorJson>) -> Result<AutoWord> {
    let gens = factors
        .into_iter()
        .map(Generator::try_from)
        .collect::<Result<Vec<_>>>()?;
    AutoWord::from_factors(gens)
}
