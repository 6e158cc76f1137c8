mod common;

use cmspace::conjugacy::{are_conjugate, intertwiners, stabilizer_dimension};
use cmspace::{nilpotent_points, ConjugacyVerdict};
use rand::Rng;

#[test]
fn verdicts_are_sound_symmetric_and_reflexive() {
    let mut rng = common::rng(21);
    for case in 0..60 {
        let n = rng.gen_range(1..=4);
        let p = common::random_point(&mut rng, n, 4, 3);
        let q = if case % 2 == 0 {
            let a = common::random_unimodular(&mut rng, n);
            common::conjugate_point(&p, &a)
        } else {
            common::random_point(&mut rng, n, 4, 3)
        };
        let pq = are_conjugate(&p, &q).unwrap();
        let qp = are_conjugate(&q, &p).unwrap();
        assert_eq!(pq.is_conjugate(), qp.is_conjugate());
        if let ConjugacyVerdict::Conjugate(w) = &pq {
            let inv = w.inverse().unwrap();
            assert_eq!(&(w * p.x()) * &inv, *q.x());
            assert_eq!(&(w * p.y()) * &inv, *q.y());
        }
        if case % 2 == 0 {
            assert!(pq.is_conjugate());
        }
        assert!(are_conjugate(&p, &p).unwrap().is_conjugate());
    }
}

#[test]
fn agrees_with_brute_force_for_small_n() {
    let mut rng = common::rng(22);
    for _ in 0..80 {
        let n = rng.gen_range(1..=3);
        let p = common::random_point(&mut rng, n, 3, 2);
        let q = if rng.gen_bool(0.5) {
            common::conjugate_point(&p, &common::random_unimodular(&mut rng, n))
        } else {
            common::random_point(&mut rng, n, 3, 2)
        };
        assert_eq!(
            are_conjugate(&p, &q).unwrap().is_conjugate(),
            common::brute_force_conjugate(&p, &q)
        );
    }
}

#[test]
fn self_intertwiners_are_one_dimensional() {
    let mut rng = common::rng(23);
    for _ in 0..40 {
        let n = rng.gen_range(1..=5);
        let p = common::random_point(&mut rng, n, 4, 3);
        assert_eq!(stabilizer_dimension(&p).unwrap(), 1);
    }
    for n in 2..=6 {
        for p in nilpotent_points(n).unwrap() {
            assert_eq!(stabilizer_dimension(&p).unwrap(), 1);
        }
    }
}

#[test]
fn intertwiners_satisfy_both_equations() {
    let mut rng = common::rng(24);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let p = common::random_point(&mut rng, n, 3, 3);
        let q = common::conjugate_point(&p, &common::random_unimodular(&mut rng, n));
        let b = intertwiners(&p, &q).unwrap();
        assert_eq!(b.dim(), 1);
        for a in &b.basis {
            assert_eq!(a * p.x(), q.x() * a);
            assert_eq!(a * p.y(), q.y() * a);
        }
    }
}
