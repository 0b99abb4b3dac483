//! e-Galois inner products, duals and hulls.
//!
//! `<x, y>_e = sum x_i y_i^(p^e)`. The dual `C^{⊥e}` is represented by an
//! explicit RREF basis, and `Hull_e(C) = C ∩ C^{⊥e}` is measured by honest
//! subspace intersection, cross-checked against `k - rank(G^{(p^e)} G^T)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::grs::GrsCode;
use crate::matrix::{row_space_intersection_dim, Matrix};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullReport {
    pub e: u32,
    pub hull_dim: usize,
    pub dual_dim: usize,
    #[serde(rename = "agreement")]
    pub method_agreement: bool,
}

pub fn galois_inner(field: &Field, x: &[FieldElement], y: &[FieldElement], e: u32) -> Result<FieldElement> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    for &c in x.iter().chain(y) {
        field.check(c)?;
    }
    Ok(field.sum(x.iter().zip(y).map(|(&a, &b)| field.mul(a, field.frobenius(b, e)))))
}

/// Basis of `C^{⊥e}` for the code generated by the full-rank `g`: the null
/// space of `g^{(p^e)}`.
pub fn galois_dual_basis(g: &Matrix, e: u32) -> Result<Matrix> {
    let rank = g.rank();
    if rank != g.rows() {
        return Err(Error::RankDeficient { rank, rows: g.rows() });
    }
    Ok(g.entrywise_frobenius(e % g.field().degree()).null_space())
}

/// Hull dimension of the code generated by a full-rank matrix.
pub fn hull_of_generator(g: &Matrix, e: u32) -> Result<HullReport> {
    let e = e % g.field().degree();
    let dual = galois_dual_basis(g, e)?;
    let by_intersection = row_space_intersection_dim(g, &dual)?;
    let gram = g.entrywise_frobenius(e).matmul(&g.transpose())?;
    let by_rank = g.rows() - gram.rank();
    Ok(HullReport {
        e,
        hull_dim: by_intersection,
        dual_dim: dual.rows(),
        method_agreement: by_intersection == by_rank,
    })
}

pub fn hull_dim(code: &GrsCode, e: u32) -> HullReport {
    hull_of_generator(&code.generator_matrix(), e).expect("GRS generators have full rank")
}

pub fn euclidean_hull(code: &GrsCode) -> HullReport {
    hull_dim(code, 0)
}

/// The `e = h/2` hull; needs an even extension degree.
pub fn hermitian_hull(code: &GrsCode) -> Result<HullReport> {
    let h = code.field().degree();
    if !h.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("Hermitian hull needs even h, got h = {h}")));
    }
    Ok(hull_dim(code, h / 2))
}

/// Polynomial hull-membership criterion for `GRS_k(a, v)` and
/// `GRS_k(a, v, ∞)`.
///
/// Interpolates the unique `g` with `u_i g(a_i) = v_i^(p^e+1) f(a_i)^(p^e)`
/// and returns it when it meets the degree bound (`n-k-1` plain, `n-k`
/// extended) and, for extended codes, `f_{k-1}^(p^e) = -g_{n-k}`.
pub fn lemma1_membership(code: &GrsCode, f: &Polynomial, e: u32) -> Result<Option<Polynomial>> {
    let field = code.field();
    let (n, k) = (code.num_points(), code.dimension());
    if let Some(d) = f.degree() {
        if d >= k {
            return Err(Error::DegreeTooHigh { degree: d, bound: k - 1 });
        }
    }
    let e = e % field.degree();
    let pe = field.p_pow(e);
    let a = code.points();
    let targets: Vec<FieldElement> = a
        .iter()
        .zip(code.multipliers())
        .map(|(&ai, &vi)| field.mul(field.pow(vi, pe + 1), field.frobenius(f.eval(field, ai), e)))
        .collect();

    // Lagrange basis with u_i as the barycentric weights already folded in:
    // g = sum_i targets_i * Psi_A(x) / (x - a_i)
    let psi_a = Polynomial::from_roots(field, a);
    let top = psi_a.coeffs();
    let mut g = vec![field.zero(); n];
    for (&ai, &t) in a.iter().zip(&targets) {
        if t.is_zero() {
            continue;
        }
        let mut carry = field.zero();
        for j in (0..n).rev() {
            carry = field.add(top[j + 1], field.mul(ai, carry));
            g[j] = field.add(g[j], field.mul(t, carry));
        }
    }
    let g = Polynomial::new(g);

    let bound = if code.is_extended() { n as i64 - k as i64 } else { n as i64 - k as i64 - 1 };
    if g.degree().is_some_and(|d| d as i64 > bound) {
        return Ok(None);
    }
    if code.is_extended() {
        let lhs = field.frobenius(f.coeff(field, k - 1), e);
        let rhs = field.neg(g.coeff(field, n - k));
        if lhs != rhs {
            return Ok(None);
        }
    }
    Ok(Some(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn gf9() -> Arc<Field> {
        Field::new(3, 2, Some(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let f = gf9();
        let x = f.element(&[0, 1]).unwrap();
        assert_eq!(galois_inner(&f, &[x], &[x], 1).unwrap(), f.one());
        assert_eq!(galois_inner(&f, &[x], &[x], 0).unwrap(), f.mul(x, x));
        assert_eq!(galois_inner(&f, &[x, x], &[f.zero(), f.zero()], 1).unwrap(), f.zero());
        assert_eq!(galois_inner(&f, &[x], &[x, x], 1).unwrap_err(), Error::LengthMismatch(1, 2));
    }

    #[test]
    fn dual_of_all_ones_row() {
        let f = Field::new(3, 1, None).unwrap();
        let g = Matrix::from_rows(&f, 3, vec![vec![f.one(); 3]]).unwrap();
        let d = galois_dual_basis(&g, 0).unwrap();
        assert_eq!(d.rows(), 2);
        for r in d.to_rows() {
            assert!(f.sum(r).is_zero());
        }
        let full = Matrix::identity(&f, 3);
        assert_eq!(galois_dual_basis(&full, 0).unwrap().rows(), 0);
        let deficient = Matrix::zeros(&f, 1, 3);
        assert_eq!(
            galois_dual_basis(&deficient, 0).unwrap_err(),
            Error::RankDeficient { rank: 0, rows: 1 }
        );
    }

    #[test]
    fn zero_polynomial_is_always_a_member() {
        let f = gf9();
        let a: Vec<_> = f.elements().take(5).collect();
        let v: Vec<_> = f.nonzero_elements().take(5).collect();
        for ext in [false, true] {
            let code = GrsCode::new(&f, a.clone(), v.clone(), 2, ext).unwrap();
            assert_eq!(lemma1_membership(&code, &Polynomial::zero(), 1).unwrap(), Some(Polynomial::zero()));
        }
    }

    #[test]
    fn hermitian_needs_even_degree() {
        let f = Field::new(3, 3, None).unwrap();
        let a: Vec<_> = f.elements().take(4).collect();
        let code = GrsCode::new(&f, a, vec![f.one(); 4], 2, false).unwrap();
        assert!(hermitian_hull(&code).is_err());
        assert_eq!(euclidean_hull(&code).e, 0);
    }
}
