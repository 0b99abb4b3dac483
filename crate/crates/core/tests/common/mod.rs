#![allow(dead_code)]

use std::sync::Arc;

use galois_hulls::{Field, FieldElement, GrsCode, Matrix, Polynomial};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_element<R: Rng>(f: &Field, rng: &mut R) -> FieldElement {
    f.from_index(rng.gen_range(0..f.order()))
}

pub fn random_nonzero<R: Rng>(f: &Field, rng: &mut R) -> FieldElement {
    f.from_index(rng.gen_range(1..f.order()))
}

pub fn random_matrix<R: Rng>(f: &Arc<Field>, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let data = (0..rows).map(|_| (0..cols).map(|_| random_element(f, rng)).collect()).collect();
    Matrix::from_rows(f, cols, data).unwrap()
}

/// Random `rows x cols` matrix of full row rank.
pub fn random_full_rank<R: Rng>(f: &Arc<Field>, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    loop {
        let m = random_matrix(f, rows, cols, rng);
        if m.rank() == rows {
            return m;
        }
    }
}

pub fn random_points<R: Rng>(f: &Field, n: usize, rng: &mut R) -> Vec<FieldElement> {
    let mut all: Vec<_> = f.elements().collect();
    all.shuffle(rng);
    all.truncate(n);
    all
}

pub fn random_code<R: Rng>(f: &Arc<Field>, n: usize, k: usize, extended: bool, rng: &mut R) -> GrsCode {
    let a = random_points(f, n, rng);
    let v = (0..n).map(|_| random_nonzero(f, rng)).collect();
    GrsCode::new(f, a, v, k, extended).unwrap()
}

pub fn random_poly<R: Rng>(f: &Field, max_len: usize, rng: &mut R) -> Polynomial {
    Polynomial::new((0..max_len).map(|_| random_element(f, rng)).collect())
}

/// Brute-force membership of `word` in `C ∩ C^{⊥e}`, where
/// `C^{⊥e} = { x : sum x_i c_i^(p^e) = 0 for all c in C }`.
pub fn in_hull(g: &Matrix, word: &[FieldElement], e: u32) -> bool {
    let f = g.field();
    g.row_space_contains(word).unwrap()
        && g.to_rows().iter().all(|row| {
            f.sum(word.iter().zip(row).map(|(&x, &c)| f.mul(x, f.frobenius(c, e)))).is_zero()
        })
}
