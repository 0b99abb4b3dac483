mod common;

use common::*;
use galois_hulls::grs::{delta, min_distance_exact, psi, u_vector, EXACT_DISTANCE_GUARD};
use galois_hulls::matrix::row_space_intersection_dim;
use galois_hulls::{Error, Field, GrsCode, Matrix, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn rank_nullity_and_rref_idempotence() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (p, h) in [(3, 2), (5, 2), (3, 3)] {
        let f = Field::new(p, h, None).unwrap();
        for _ in 0..1000 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..8);
            // low-rank products hit the interesting cases
            let m = if rng.gen_bool(0.5) {
                let inner = rng.gen_range(1..4);
                random_matrix(&f, rows, inner, &mut rng).matmul(&random_matrix(&f, inner, cols, &mut rng)).unwrap()
            } else {
                random_matrix(&f, rows, cols, &mut rng)
            };
            let r = m.rref();
            let null = m.null_space();
            assert_eq!(r.rank + null.rows(), cols);
            assert!(m.matmul(&null.transpose()).unwrap().is_zero());
            assert_eq!(r.matrix.rref().matrix, r.matrix);
            assert_eq!(null.rank(), null.rows());
        }
    }
}

#[test]
fn vandermonde_has_full_rank() {
    let f = Field::new(3, 2, None).unwrap();
    let pts: Vec<_> = f.elements().skip(2).take(3).collect();
    let rows = (0..3).map(|j| pts.iter().map(|&a| f.pow(a, j)).collect()).collect();
    assert_eq!(Matrix::from_rows(&f, 3, rows).unwrap().rank(), 3);
    assert_eq!(Matrix::zeros(&f, 2, 4).rank(), 0);
}

#[test]
fn planted_intersection() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let f = Field::new(3, 2, None).unwrap();
    for _ in 0..100 {
        let basis = random_full_rank(&f, 6, 6, &mut rng).to_rows();
        // A = <b0, b1, b2, b3>, B = <b0 + b1, b1, b4, b5>: overlap of dimension 2
        let a = Matrix::from_rows(&f, 6, basis[0..4].to_vec()).unwrap();
        let sum: Vec<_> = basis[0].iter().zip(&basis[1]).map(|(&x, &y)| f.add(x, y)).collect();
        let b = Matrix::from_rows(&f, 6, vec![sum, basis[1].clone(), basis[4].clone(), basis[5].clone()]).unwrap();
        assert_eq!(row_space_intersection_dim(&a, &b).unwrap(), 2);
        assert_eq!(row_space_intersection_dim(&b, &a).unwrap(), 2);
    }
    let a = Matrix::identity(&f, 3);
    assert_eq!(row_space_intersection_dim(&a, &a).unwrap(), 3);
    assert_eq!(
        row_space_intersection_dim(&a, &Matrix::identity(&f, 2)).unwrap_err(),
        Error::ColsMismatch(3, 2)
    );
}

#[test]
fn transpose_and_frobenius_compatibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = Field::new(5, 2, None).unwrap();
    for _ in 0..100 {
        let a = random_matrix(&f, 3, 4, &mut rng);
        let b = random_matrix(&f, 4, 2, &mut rng);
        let ab = a.matmul(&b).unwrap();
        assert_eq!(ab.transpose(), b.transpose().matmul(&a.transpose()).unwrap());
        assert_eq!(a.matmul(&Matrix::identity(&f, 4)).unwrap(), a);
        for j in 0..3 {
            let lhs = ab.entrywise_frobenius(j);
            let rhs = a.entrywise_frobenius(j).matmul(&b.entrywise_frobenius(j)).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert_eq!(a.entrywise_frobenius(0), a);
        assert_eq!(a.entrywise_frobenius(2), a);
    }
    let ones = Matrix::from_rows(&f, 2, vec![vec![f.one(); 2]; 2]).unwrap();
    assert_eq!(ones.entrywise_frobenius(1), ones);
    assert!(Matrix::zeros(&f, 2, 3).matmul(&Matrix::zeros(&f, 2, 3)).is_err());
}

#[test]
fn u_vector_is_inverse_delta() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (p, h) in [(3, 2), (5, 2), (3, 3)] {
        let f = Field::new(p, h, None).unwrap();
        for _ in 0..50 {
            let n = rng.gen_range(1..=f.order() as usize);
            let a = random_points(&f, n, &mut rng);
            let u = u_vector(&f, &a).unwrap();
            for (&ai, &ui) in a.iter().zip(&u) {
                assert_eq!(f.inv(delta(&f, &a, ai)), ui);
                assert!(psi(&f, &a, ai).is_zero());
            }
        }
        let all: Vec<_> = f.elements().collect();
        assert!(u_vector(&f, &all).unwrap().iter().all(|&u| u == f.from_int(-1)));
        assert_eq!(u_vector(&f, &[f.one()]).unwrap(), vec![f.one()]);
        assert_eq!(u_vector(&f, &[f.one(), f.one()]).unwrap_err(), Error::DuplicatePoints);
    }
}

#[test]
fn encode_matches_generator() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = Field::new(3, 2, None).unwrap();
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let k = rng.gen_range(1..=n);
        let code = random_code(&f, n, k, rng.gen_bool(0.5), &mut rng);
        let g = code.generator_matrix();
        assert_eq!(g.rank(), k);
        let poly = random_poly(&f, k, &mut rng);
        let mut coeffs = poly.coeffs().to_vec();
        coeffs.resize(k, f.zero());
        let msg = Matrix::from_rows(&f, k, vec![coeffs]).unwrap();
        assert_eq!(code.encode(&poly).unwrap(), msg.matmul(&g).unwrap().row(0).to_vec());
    }
    let code = random_code(&f, 4, 2, false, &mut rng);
    let too_high = Polynomial::monomial(&f, 2, f.one());
    assert_eq!(code.encode(&too_high).unwrap_err(), Error::DegreeTooHigh { degree: 2, bound: 1 });
}

#[test]
fn every_small_grs_code_over_gf9_is_mds() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let f = Field::new(3, 2, None).unwrap();
    for n in 1..=8 {
        for k in 1..=n {
            for extended in [false, true] {
                let code = random_code(&f, n, k, extended, &mut rng);
                let d = min_distance_exact(&code, EXACT_DISTANCE_GUARD).unwrap();
                assert_eq!(d, code.length() - k + 1, "n={n} k={k} ext={extended}");
            }
        }
    }
}

#[test]
fn distance_guard_refuses_long_codes() {
    let f = Field::new(5, 2, None).unwrap();
    let code = GrsCode::new(&f, f.elements().collect(), vec![f.one(); 25], 3, false).unwrap();
    assert_eq!(min_distance_exact(&code, EXACT_DISTANCE_GUARD).unwrap_err(), Error::TooLargeForExact(25, 22));
    let check = galois_hulls::grs::mds_check(&code, EXACT_DISTANCE_GUARD);
    assert!(check.mds && !check.exhaustive);
}

#[test]
fn dual_multipliers_give_the_euclidean_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = Field::new(3, 2, None).unwrap();
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let k = rng.gen_range(1..n);
        let code = random_code(&f, n, k, false, &mut rng);
        let w = code.dual_multipliers().unwrap();
        let dual = GrsCode::new(&f, code.points().to_vec(), w, n - k, false).unwrap();
        let prod = dual.generator_matrix().matmul(&code.generator_matrix().transpose()).unwrap();
        assert!(prod.is_zero());
    }
    let ext = random_code(&f, 4, 2, true, &mut rng);
    assert_eq!(ext.dual_multipliers().unwrap_err(), Error::ExtendedUnsupported);
}

#[test]
fn json_round_trip_for_random_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let f = Field::new(3, 3, None).unwrap();
    for _ in 0..50 {
        let code = random_code(&f, 6, 3, rng.gen_bool(0.5), &mut rng);
        let text = serde_json::to_string(&code.to_json()).unwrap();
        let back = GrsCode::from_json_in(&f, &serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.points(), code.points());
        assert_eq!(back.multipliers(), code.multipliers());
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
    }
}
