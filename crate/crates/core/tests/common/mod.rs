#![allow(dead_code)]

//! Test-only oracles and random generators. The oracles deliberately avoid
//! the library's elimination, kernel and characteristic-polynomial code.

use cmspace::automorphism::{AutoWord, Generator};
use cmspace::rational::{frac, int};
use cmspace::{base_point, CmPoint, Matrix, Polynomial, Rational};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn minor(rows: &[Vec<Rational>], skip_col: usize) -> Vec<Vec<Rational>> {
    rows[1..]
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(rows: &[Vec<Rational>]) -> Rational {
    match rows.len() {
        0 => Rational::one(),
        1 => rows[0][0].clone(),
        _ => {
            let mut acc = Rational::zero();
            for (j, a) in rows[0].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let term = a * cofactor_det(&minor(rows, j));
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn poly_minor(rows: &[Vec<Polynomial>], skip_col: usize) -> Vec<Vec<Polynomial>> {
    rows[1..]
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

fn poly_cofactor_det(rows: &[Vec<Polynomial>]) -> Polynomial {
    match rows.len() {
        0 => Polynomial::one(),
        1 => rows[0][0].clone(),
        _ => {
            let mut acc = Polynomial::zero();
            for (j, a) in rows[0].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let term = a * &poly_cofactor_det(&poly_minor(rows, j));
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

/// `det(tI - M)` by cofactor expansion over the polynomial ring.
pub fn cofactor_charpoly(m: &Matrix) -> Polynomial {
    let n = m.rows();
    let rows: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Polynomial::constant(-m[(i, j)].clone());
                    if i == j {
                        &c + &Polynomial::t()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    poly_cofactor_det(&rows)
}

/// Null space of a dense system by plain Gaussian elimination (no pivot
/// normalization tricks, no shared code with the library).
pub fn naive_null_space(mut a: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let piv = a[row][c].clone();
        for v in a[row].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = a[row].clone();
        for (i, r) in a.iter_mut().enumerate() {
            if i != row && !r[c].is_zero() {
                let f = r[c].clone();
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(c);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Brute-force simultaneous-conjugacy decision: solve the full intertwining
/// system, then search a dense rational grid of combinations for one with
/// nonzero cofactor determinant.
pub fn brute_force_conjugate(p: &CmPoint, q: &CmPoint) -> bool {
    let n = p.n();
    if q.n() != n {
        return false;
    }
    let mut eqs = Vec::new();
    for (m, m2) in [(p.x(), q.x()), (p.y(), q.y())] {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] += &m[(k, j)];
                    row[k * n + j] -= &m2[(i, k)];
                }
                eqs.push(row);
            }
        }
    }
    let basis = naive_null_space(eqs, n * n);
    if basis.is_empty() {
        return false;
    }
    let grid = [
        frac(-2, 1),
        frac(-1, 1),
        frac(-1, 2),
        int(0),
        frac(1, 2),
        int(1),
        int(2),
        int(3),
    ];
    let k = basis.len();
    let mut idx = vec![0usize; k];
    loop {
        let mut entries = vec![Rational::zero(); n * n];
        for (b, &g) in basis.iter().zip(&idx) {
            for (e, v) in entries.iter_mut().zip(b) {
                *e += &grid[g] * v;
            }
        }
        let rows: Vec<Vec<Rational>> = entries.chunks(n).map(<[Rational]>::to_vec).collect();
        if !cofactor_det(&rows).is_zero() {
            return true;
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < grid.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn random_rational<R: Rng>(rng: &mut R, range: i64) -> Rational {
    let d = *[1, 1, 1, 2, 3].choose(rng).unwrap();
    frac(rng.gen_range(-range..=range), d)
}

pub fn random_int_poly<R: Rng>(rng: &mut R, max_deg: usize, range: i64) -> Polynomial {
    let deg = rng.gen_range(0..=max_deg);
    Polynomial::new(
        (0..=deg)
            .map(|_| int(rng.gen_range(-range..=range)))
            .collect(),
    )
}

pub fn random_generator<R: Rng>(rng: &mut R, max_deg: usize) -> Generator {
    match rng.gen_range(0..5) {
        0 | 1 => Generator::Phi(random_int_poly(rng, max_deg, 2)),
        2 | 3 => Generator::Psi(random_int_poly(rng, max_deg, 2)),
        _ => {
            let l = [int(2), int(-1), frac(1, 2), int(3), frac(-2, 3)]
                .choose(rng)
                .unwrap()
                .clone();
            Generator::Scale(l)
        }
    }
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize, max_deg: usize) -> AutoWord {
    let len = rng.gen_range(0..=max_len);
    AutoWord::from_factors((0..len).map(|_| random_generator(rng, max_deg)).collect()).unwrap()
}

/// A point of `C_n` reached from the base point by a random word.
pub fn random_point<R: Rng>(rng: &mut R, n: usize, max_len: usize, max_deg: usize) -> CmPoint {
    random_word(rng, max_len, max_deg)
        .act(&base_point(n).unwrap())
        .unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, range: i64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| random_rational(rng, range))
        .collect();
    Matrix::new(rows, cols, data).unwrap()
}

/// Integer matrix with determinant +-1: a random row permutation times
/// elementary shears.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut a = Matrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        a[(i, j)] = int(1);
    }
    if n == 1 {
        return a;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let mut e = Matrix::identity(n);
        e[(i, j)] = int(rng.gen_range(-2..=2));
        a = &e * &a;
    }
    a
}

pub fn conjugate_point(p: &CmPoint, a: &Matrix) -> CmPoint {
    let inv = a.inverse().unwrap();
    CmPoint::validate(&(a * p.x()) * &inv, &(a * p.y()) * &inv).unwrap()
}
