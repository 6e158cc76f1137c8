//! Replays the finite computations behind the statement that the identity is
//! the only equivariant self-map of the Calogero-Moser spaces, and that there
//! are no equivariant maps `C_n -> C_m` for `n != m`.
//!
//! Each check returns a [`CheckReport`] whose verdict is the conjunction of
//! exact equalities or exact conjugacy verdicts. Nothing here uses a
//! tolerance.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::automorphism::{conjugated_psi, isotropy_element, AutoWord};
use crate::conjugacy::{
    are_conjugate, fixes, scaling_witness, ConjugacyVerdict, NotConjugateReason,
};
use crate::error::{CmError, Result};
use crate::matrix::Matrix;
use crate::point::{base_point, diagonal_point, nilpotent_points, CmPoint, SubdiagVector};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub pass: bool,
    pub details: Value,
}

impl CheckReport {
    fn new(check: &str, n: usize, pass: bool, details: Value) -> Self {
        CheckReport {
            check: check.to_owned(),
            n,
            m: None,
            r: None,
            pass,
            details,
        }
    }
}

fn t_pow(k: usize) -> Polynomial {
    Polynomial::monomial(Rational::one(), k)
}

/// `t^n + c1 * t + c0`
fn sparse_monic(n: usize, c1: Rational, c0: Rational) -> Polynomial {
    &(&t_pow(n) + &Polynomial::monomial(c1, 1)) + &Polynomial::constant(c0)
}

fn verdict_json(v: &ConjugacyVerdict) -> Value {
    serde_json::to_value(v.to_json()).expect("serializable verdict")
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn shift_power(n: usize, k: u32) -> Matrix {
    crate::point::shift(n).pow(k).expect("square")
}

/// `d(lambda)^-1 X_0 d(lambda) = X_0 / lambda`, `d(lambda)^-1 Y_0 d(lambda) = lambda Y_0`,
/// and `R_lambda` fixes the base point.
pub fn check_scaling(n: usize, lambda: &Rational) -> Result<CheckReport> {
    let base = base_point(n)?;
    let scaled = AutoWord::scaling(lambda.clone())?.act(&base)?;
    let d = scaling_witness(n, lambda);
    let d_inv = d.inverse()?;
    let x_ok = &(&d_inv * base.x()) * &d == base.x().scale(&lambda.recip());
    let y_ok = &(&d_inv * base.y()) * &d == base.y().scale(lambda);
    let verdict = are_conjugate(&scaled, &base)?;
    // the point is a trivial-stabilizer point, so the witness is d(lambda) up to scale
    let witness_is_d = verdict.witness() == Some(&d.normalized());
    Ok(CheckReport::new(
        "scaling_fixes_base_point",
        n,
        x_ok && y_ok && witness_is_d,
        json!({
            "lambda": rational::format(lambda),
            "x_identity": x_ok,
            "y_identity": y_ok,
            "witness_is_d_lambda": witness_is_d,
            "verdict": verdict_json(&verdict),
        }),
    ))
}

/// If `X` or `Y` is not nilpotent, some `R_lambda` with `lambda` in `lambdas`
/// must move the point, detected by a characteristic-polynomial mismatch.
pub fn check_scale_forces_nilpotent(p: &CmPoint, lambdas: &[Rational]) -> Result<CheckReport> {
    if lambdas.is_empty() {
        return Err(CmError::Precondition("no scaling factors supplied".into()));
    }
    let x_nil = p.x().is_nilpotent()?;
    let y_nil = p.y().is_nilpotent()?;
    if x_nil && y_nil {
        return Ok(CheckReport::new(
            "scale_forces_nilpotent",
            p.n(),
            true,
            json!({ "vacuous": true }),
        ));
    }
    let mut trials = Vec::new();
    let mut moved = false;
    for lambda in lambdas {
        let image = AutoWord::scaling(lambda.clone())?.act(p)?;
        let verdict = are_conjugate(&image, p)?;
        let mismatch = verdict.reason() == Some(NotConjugateReason::InvariantMismatch);
        moved |= mismatch;
        trials.push(json!({
            "lambda": rational::format(lambda),
            "charpoly_x": to_value(&image.x().charpoly()?),
            "charpoly_y": to_value(&image.y().charpoly()?),
            "moved": mismatch,
        }));
    }
    Ok(CheckReport::new(
        "scale_forces_nilpotent",
        p.n(),
        moved,
        json!({
            "vacuous": false,
            "x_nilpotent": x_nil,
            "y_nilpotent": y_nil,
            "charpoly_x": to_value(&p.x().charpoly()?),
            "charpoly_y": to_value(&p.y().charpoly()?),
            "trials": trials,
        }),
    ))
}

fn product(a: &[Rational]) -> Rational {
    a.iter().fold(Rational::one(), |acc, v| acc * v)
}

/// `charpoly(X(a) + Y_0^(n-1)) = t^n - prod a_i`, and for `n >= 3`
/// `charpoly(X(a) + Y_0^(n-2)) = t^n - (prod_1^(n-2) a_i + prod_2^(n-1) a_i) t`,
/// for every admissible vector `a`.
pub fn check_char_identities(n: usize) -> Result<CheckReport> {
    if n < 2 {
        return Err(CmError::Precondition(
            "character identities need n >= 2".into(),
        ));
    }
    let top = shift_power(n, (n - 1) as u32);
    let second = (n >= 3).then(|| shift_power(n, (n - 2) as u32));
    let mut rows = Vec::new();
    let mut pass = true;
    for r in 1..=n {
        let a = SubdiagVector::admissible(n, r)?;
        let xa = a.matrix();
        let vals = a.values();
        let got1 = xa.try_add(&top)?.charpoly()?;
        let want1 = sparse_monic(n, Rational::zero(), -product(vals));
        let ok1 = got1 == want1;
        let mut row = json!({
            "r": r,
            "a": vals.iter().map(rational::format).collect::<Vec<_>>(),
            "top_power": { "charpoly": to_value(&got1), "holds": ok1 },
        });
        pass &= ok1;
        if let Some(second) = &second {
            let got2 = xa.try_add(second)?.charpoly()?;
            let c = product(&vals[..n - 2]) + product(&vals[1..]);
            let want2 = sparse_monic(n, -c, Rational::zero());
            let ok2 = got2 == want2;
            pass &= ok2;
            row["second_power"] = json!({ "charpoly": to_value(&got2), "holds": ok2 });
        }
        if r == n {
            let want = sparse_monic(n, Rational::zero(), -rational::factorial(n as u64 - 1));
            let ok = got1 == want;
            pass &= ok;
            row["base_point_identity"] = json!(ok);
        }
        rows.push(row);
    }
    Ok(CheckReport::new(
        "char_identities",
        n,
        pass,
        json!({ "cases": rows }),
    ))
}

/// `Phi_{-p} Psi_chi Phi_p`, `chi` the minimal polynomial of `X + p(Y)`,
/// returns the point entrywise.
pub fn check_lemma_ppp(p: &CmPoint, poly: &Polynomial) -> Result<CheckReport> {
    let (word, chi) = isotropy_element(p, poly)?;
    let image = word.act(p)?;
    let pass = image == *p;
    Ok(CheckReport::new(
        "isotropy_element_fixes_point",
        p.n(),
        pass,
        json!({ "p": to_value(poly), "chi": to_value(&chi), "entrywise_equal": pass }),
    ))
}

/// No equivariant map `C_n -> C_m` for `n > m`: the word built from
/// `p = t^(n-1)`, `chi = t^n - (n-1)!` fixes the base point of `C_n` but moves
/// every both-nilpotent point `(P, Q)` of `C_m` to `(*, Q - (n-1)! I)`.
pub fn check_prop_n_gt_m(n: usize, m: usize) -> Result<CheckReport> {
    if !(n > m && m >= 2) {
        return Err(CmError::Precondition(format!(
            "need n > m >= 2, got n={n}, m={m}"
        )));
    }
    let fact = rational::factorial(n as u64 - 1);
    let p = t_pow(n - 1);
    let chi = sparse_monic(n, Rational::zero(), -fact.clone());
    let base = base_point(n)?;
    let minpoly = base
        .x()
        .try_add(&Matrix::poly_eval(&p, base.y())?)?
        .minpoly()?;
    let chi_is_minpoly = minpoly == chi;
    let word = conjugated_psi(&p, &chi);
    let fixes_base = word.act(&base)? == base;
    let mut pass = chi_is_minpoly && fixes_base;
    let mut cases = Vec::new();
    for (idx, point) in nilpotent_points(m)?.iter().enumerate() {
        let image = word.act(point)?;
        let want_y = point.y().try_sub(&Matrix::scalar(m, fact.clone()))?;
        let y_ok = *image.y() == want_y;
        let verdict = are_conjugate(&image, point)?;
        let moved = !verdict.is_conjugate();
        pass &= y_ok && moved;
        cases.push(json!({
            "r": idx + 1,
            "y_component_is_shifted": y_ok,
            "verdict": verdict_json(&verdict),
        }));
    }
    let mut rep = CheckReport::new(
        "no_map_to_smaller_space",
        n,
        pass,
        json!({
            "chi": to_value(&chi),
            "chi_is_minpoly": chi_is_minpoly,
            "fixes_base_point": fixes_base,
            "cases": cases,
        }),
    );
    rep.m = Some(m);
    Ok(rep)
}

/// Even `n`: the base point cannot be sent to `(X_1, Y_0)`.
pub fn check_even_case(n: usize) -> Result<CheckReport> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(CmError::Precondition(format!(
            "even case needs even n >= 2, got {n}"
        )));
    }
    let pts = nilpotent_points(n)?;
    let (x1_point, base) = (&pts[0], &pts[n - 1]);
    let fact = rational::factorial(n as u64 - 1);
    let p = t_pow(n - 1);
    let chi = sparse_monic(n, Rational::zero(), -fact.clone());
    let top = shift_power(n, (n - 1) as u32);
    let base_char = base.x().try_add(&top)?.charpoly()? == chi;
    let m1 = x1_point.x().try_add(&top)?;
    let x1_char = m1.charpoly()? == sparse_monic(n, Rational::zero(), fact.clone());
    let two_fact = rational::int(2) * &fact;
    let chi_at_m1 = Matrix::poly_eval(&chi, &m1)? == Matrix::scalar(n, -two_fact.clone());
    let word = conjugated_psi(&p, &chi);
    let fixes_base = word.act(base)? == *base;
    let image = word.act(x1_point)?;
    let want_y = x1_point.y().try_sub(&Matrix::scalar(n, two_fact.clone()))?;
    let y_ok = *image.y() == want_y;
    let verdict = are_conjugate(&image, x1_point)?;
    let moved = !verdict.is_conjugate();
    Ok(CheckReport::new(
        "even_case",
        n,
        base_char && x1_char && chi_at_m1 && fixes_base && y_ok && moved,
        json!({
            "chi": to_value(&chi),
            "base_charpoly_is_chi": base_char,
            "x1_charpoly_is_t^n_plus_factorial": x1_char,
            "chi_at_x1_is_minus_2_factorial_identity": chi_at_m1,
            "minus_2_factorial": rational::format(&-two_fact),
            "fixes_base_point": fixes_base,
            "y_component_is_shifted": y_ok,
            "verdict": verdict_json(&verdict),
        }),
    ))
}

/// Odd `n`: with `alpha = (n-1)! + (n-2)!` and `chi = t^n - alpha t`, the word
/// for `p = t^(n-2)` fixes the base point but sends `(X_1, Y_0)` to a point
/// whose `Y` has `trace(Y^2) != 0`.
pub fn check_odd_case(n: usize) -> Result<CheckReport> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(CmError::Precondition(format!(
            "odd case needs odd n >= 3, got {n}"
        )));
    }
    let pts = nilpotent_points(n)?;
    let (x1_point, base) = (&pts[0], &pts[n - 1]);
    let alpha = rational::factorial(n as u64 - 1) + rational::factorial(n as u64 - 2);
    let p = t_pow(n - 2);
    let chi = sparse_monic(n, -alpha.clone(), Rational::zero());
    let second = shift_power(n, (n - 2) as u32);
    let base_char = base.x().try_add(&second)?.charpoly()? == chi;
    let m1 = x1_point.x().try_add(&second)?;
    let x1_char = m1.charpoly()? == sparse_monic(n, alpha.clone(), Rational::zero());
    let two_alpha = rational::int(2) * &alpha;
    let chi_at_m1 = Matrix::poly_eval(&chi, &m1)? == m1.scale(&-two_alpha.clone());
    let big_n = x1_point.y().try_sub(&m1.scale(&two_alpha))?;
    let trace_sq = big_n.try_mul(&big_n)?.trace()?;
    let n_not_nilpotent = !big_n.is_nilpotent()?;
    let word = conjugated_psi(&p, &chi);
    let fixes_base = word.act(base)? == *base;
    let image = word.act(x1_point)?;
    let y_ok = *image.y() == big_n;
    let moved = !fixes(&word, x1_point)?;
    Ok(CheckReport::new(
        "odd_case",
        n,
        base_char
            && x1_char
            && chi_at_m1
            && !trace_sq.is_zero()
            && n_not_nilpotent
            && fixes_base
            && y_ok
            && moved,
        json!({
            "alpha": rational::format(&alpha),
            "chi": to_value(&chi),
            "base_charpoly_is_chi": base_char,
            "x1_charpoly_is_t^n_plus_alpha_t": x1_char,
            "chi_at_x1_is_minus_2_alpha_x1": chi_at_m1,
            "trace_n_squared": rational::format(&trace_sq),
            "n_not_nilpotent": n_not_nilpotent,
            "fixes_base_point": fixes_base,
            "y_component_is_n": y_ok,
            "moves_x1_point": moved,
        }),
    ))
}

/// `(X, Y) -> (X + Y^(n-2), Y)` fixes `(X(a_r), Y_0)` for `1 < r < n` (with an
/// explicit witness) and moves the base point.
pub fn check_middle_r(n: usize) -> Result<CheckReport> {
    if n < 4 {
        return Err(CmError::Precondition(format!(
            "middle-r check needs n >= 4, got {n}"
        )));
    }
    let pts = nilpotent_points(n)?;
    let word = AutoWord::phi(t_pow(n - 2));
    let mut pass = true;
    let mut cases = Vec::new();
    for r in 2..n {
        let point = &pts[r - 1];
        let image = word.act(point)?;
        let verdict = are_conjugate(&image, point)?;
        pass &= verdict.is_conjugate();
        cases.push(json!({ "r": r, "verdict": verdict_json(&verdict) }));
    }
    let base = &pts[n - 1];
    let base_verdict = are_conjugate(&word.act(base)?, base)?;
    pass &= !base_verdict.is_conjugate();
    Ok(CheckReport::new(
        "middle_r_fixed_points",
        n,
        pass,
        json!({ "cases": cases, "base_point_verdict": verdict_json(&base_verdict) }),
    ))
}

/// For a diagonal point with distinct eigenvalues, `(X, Y)` and
/// `(X, Y + chi(X))` are conjugate iff `chi` vanishes at every eigenvalue.
pub fn check_lemma_diag(
    n: usize,
    chi: &Polynomial,
    xs: &[Rational],
    ys: &[Rational],
) -> Result<CheckReport> {
    if xs.len() != n {
        return Err(CmError::Precondition(format!(
            "{} eigenvalues for n = {n}",
            xs.len()
        )));
    }
    let point = diagonal_point(xs, ys)?;
    let moved = AutoWord::psi(chi.clone()).act(&point)?;
    let kills_spectrum = xs.iter().all(|x| chi.eval(x).is_zero());
    let verdict = are_conjugate(&point, &moved)?;
    Ok(CheckReport::new(
        "diagonal_spectrum_criterion",
        n,
        kills_spectrum == verdict.is_conjugate(),
        json!({
            "chi": to_value(chi),
            "chi_kills_spectrum": kills_spectrum,
            "verdict": verdict_json(&verdict),
        }),
    ))
}

/// One entry of the replay schedule.
#[derive(Clone, Debug)]
pub enum Check {
    Scaling {
        n: usize,
        lambda: Rational,
    },
    ScaleForcesNilpotent {
        point: CmPoint,
        lambdas: Vec<Rational>,
    },
    CharIdentities {
        n: usize,
    },
    LemmaPpp {
        point: CmPoint,
        p: Polynomial,
    },
    LemmaDiag {
        n: usize,
        chi: Polynomial,
        xs: Vec<Rational>,
        ys: Vec<Rational>,
    },
    EvenCase {
        n: usize,
    },
    OddCase {
        n: usize,
    },
    MiddleR {
        n: usize,
    },
    PropNGtM {
        n: usize,
        m: usize,
    },
}

impl Check {
    fn name(&self) -> &'static str {
        match self {
            Check::Scaling { .. } => "scaling_fixes_base_point",
            Check::ScaleForcesNilpotent { .. } => "scale_forces_nilpotent",
            Check::CharIdentities { .. } => "char_identities",
            Check::LemmaPpp { .. } => "isotropy_element_fixes_point",
            Check::LemmaDiag { .. } => "diagonal_spectrum_criterion",
            Check::EvenCase { .. } => "even_case",
            Check::OddCase { .. } => "odd_case",
            Check::MiddleR { .. } => "middle_r_fixed_points",
            Check::PropNGtM { .. } => "no_map_to_smaller_space",
        }
    }

    fn n(&self) -> usize {
        match self {
            Check::Scaling { n, .. }
            | Check::CharIdentities { n }
            | Check::LemmaDiag { n, .. }
            | Check::EvenCase { n }
            | Check::OddCase { n }
            | Check::MiddleR { n }
            | Check::PropNGtM { n, .. } => *n,
            Check::ScaleForcesNilpotent { point, .. } | Check::LemmaPpp { point, .. } => point.n(),
        }
    }

    pub fn run(&self) -> Result<CheckReport> {
        match self {
            Check::Scaling { n, lambda } => check_scaling(*n, lambda),
            Check::ScaleForcesNilpotent { point, lambdas } => {
                check_scale_forces_nilpotent(point, lambdas)
            }
            Check::CharIdentities { n } => check_char_identities(*n),
            Check::LemmaPpp { point, p } => check_lemma_ppp(point, p),
            Check::LemmaDiag { n, chi, xs, ys } => check_lemma_diag(*n, chi, xs, ys),
            Check::EvenCase { n } => check_even_case(*n),
            Check::OddCase { n } => check_odd_case(*n),
            Check::MiddleR { n } => check_middle_r(*n),
            Check::PropNGtM { n, m } => check_prop_n_gt_m(*n, *m),
        }
    }

    /// Like [`Check::run`], but an error becomes a failing report.
    pub fn report(&self) -> CheckReport {
        self.run().unwrap_or_else(|e| {
            let mut rep = CheckReport::new(
                self.name(),
                self.n(),
                false,
                json!({ "error": e.to_string() }),
            );
            if let Check::PropNGtM { m, .. } = self {
                rep.m = Some(*m);
            }
            rep
        })
    }
}

/// The full replay schedule for sizes up to `n_max`, in report order.
pub fn schedule(n_max: usize) -> Result<Vec<Check>> {
    if n_max < 2 {
        return Err(CmError::Precondition(format!(
            "n_max must be at least 2, got {n_max}"
        )));
    }
    let ints = |r: std::ops::RangeInclusive<i64>| r.map(rational::int).collect::<Vec<_>>();
    let mut checks = vec![Check::Scaling {
        n: 1,
        lambda: rational::int(7),
    }];
    for n in 2..=n_max {
        let xs = ints(1..=n as i64);
        let ys = vec![Rational::zero(); n];
        checks.push(Check::Scaling {
            n,
            lambda: rational::int(2),
        });
        checks.push(Check::ScaleForcesNilpotent {
            point: diagonal_point(&xs, &ys)?,
            lambdas: ints(2..=3),
        });
        checks.push(Check::CharIdentities { n });
        checks.push(Check::LemmaPpp {
            point: base_point(n)?,
            p: t_pow(n - 1),
        });
        // vanishes on every eigenvalue but the last, so the point must move
        let chi = xs[..n - 1].iter().fold(Polynomial::one(), |acc, x| {
            &acc * &Polynomial::new(vec![-x.clone(), Rational::one()])
        });
        checks.push(Check::LemmaDiag { n, chi, xs, ys });
        if n.is_multiple_of(2) {
            checks.push(Check::EvenCase { n });
        } else {
            checks.push(Check::OddCase { n });
        }
        if n >= 4 {
            checks.push(Check::MiddleR { n });
        }
        for m in 2..n {
            checks.push(Check::PropNGtM { n, m });
        }
    }
    Ok(checks)
}

/// Runs every check for sizes up to `n_max`. Checks run in parallel; the
/// returned order is the schedule order.
pub fn run_all(n_max: usize) -> Result<Vec<CheckReport>> {
    Ok(schedule(n_max)?.par_iter().map(Check::report).collect())
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
