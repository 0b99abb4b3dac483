//! Generalized Reed-Solomon codes and their extended versions.
//!
//! `GRS_k(a, v) = { (v_1 f(a_1), ..., v_n f(a_n)) : deg f <= k-1 }`; the
//! extended code appends the coefficient `f_{k-1}` as a last coordinate.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, FieldElement, FieldOptions};
use crate::matrix::Matrix;
use crate::poly::Polynomial;

/// Largest code length for which distances are computed by enumeration.
pub const EXACT_DISTANCE_GUARD: usize = 22;

#[derive(Debug, Clone)]
pub struct GrsCode {
    field: Arc<Field>,
    a: Vec<FieldElement>,
    v: Vec<FieldElement>,
    k: usize,
    extended: bool,
}

/// Stable interchange format for codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrsCodeJson {
    pub field: FieldDescriptor,
    pub a: Vec<Vec<u64>>,
    pub v: Vec<Vec<u64>>,
    pub k: usize,
    pub extended: bool,
}

impl GrsCode {
    pub fn new(
        field: &Arc<Field>,
        a: Vec<FieldElement>,
        v: Vec<FieldElement>,
        k: usize,
        extended: bool,
    ) -> Result<GrsCode> {
        if a.len() != v.len() {
            return Err(Error::LengthMismatch(a.len(), v.len()));
        }
        let n = a.len();
        if n == 0 || n as u64 > field.order() {
            return Err(Error::InvalidDimension(format!(
                "need 1 <= n <= q, got n = {n}, q = {}",
                field.order()
            )));
        }
        if k == 0 || k > n {
            return Err(Error::InvalidDimension(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
        }
        for &x in a.iter().chain(&v) {
            field.check(x)?;
        }
        let mut seen = HashSet::with_capacity(n);
        if !a.iter().all(|x| seen.insert(*x)) {
            return Err(Error::DuplicatePoints);
        }
        if let Some(i) = v.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroMultiplier(i));
        }
        Ok(GrsCode { field: field.clone(), a, v, k, extended })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn points(&self) -> &[FieldElement] {
        &self.a
    }
    pub fn multipliers(&self) -> &[FieldElement] {
        &self.v
    }
    pub fn dimension(&self) -> usize {
        self.k
    }
    pub fn is_extended(&self) -> bool {
        self.extended
    }
    /// Number of evaluation points `n`.
    pub fn num_points(&self) -> usize {
        self.a.len()
    }
    /// Code length: `n`, or `n + 1` when extended.
    pub fn length(&self) -> usize {
        self.a.len() + usize::from(self.extended)
    }

    /// Row `j` is `(v_1 a_1^j, ..., v_n a_n^j)`; the extended column is the
    /// last one, `1` in row `k-1` and `0` elsewhere.
    pub fn generator_matrix(&self) -> Matrix {
        let f = &self.field;
        let mut g = Matrix::zeros(f, self.k, self.length());
        for (i, (&a, &v)) in self.a.iter().zip(&self.v).enumerate() {
            let mut acc = v;
            for j in 0..self.k {
                g.set(j, i, acc);
                acc = f.mul(acc, a);
            }
        }
        if self.extended {
            g.set(self.k - 1, self.a.len(), f.one());
        }
        g
    }

    pub fn encode(&self, poly: &Polynomial) -> Result<Vec<FieldElement>> {
        let f = &self.field;
        if let Some(d) = poly.degree() {
            if d >= self.k {
                return Err(Error::DegreeTooHigh { degree: d, bound: self.k - 1 });
            }
        }
        for &c in poly.coeffs() {
            f.check(c)?;
        }
        let mut word: Vec<FieldElement> =
            self.a.iter().zip(&self.v).map(|(&a, &v)| f.mul(v, poly.eval(f, a))).collect();
        if self.extended {
            word.push(poly.coeff(f, self.k - 1));
        }
        Ok(word)
    }

    pub fn u_vector(&self) -> Vec<FieldElement> {
        u_vector(&self.field, &self.a).expect("points of a valid code are distinct")
    }

    /// `w_i = u_i / v_i`, the multipliers of the Euclidean dual `GRS_{n-k}(a, w)`.
    pub fn dual_multipliers(&self) -> Result<Vec<FieldElement>> {
        if self.extended {
            return Err(Error::ExtendedUnsupported);
        }
        if self.k >= self.a.len() {
            return Err(Error::InvalidDimension(format!(
                "dual multipliers need k <= n-1, got k = {}, n = {}",
                self.k,
                self.a.len()
            )));
        }
        let f = &self.field;
        Ok(self.u_vector().iter().zip(&self.v).map(|(&u, &v)| f.div(u, v)).collect())
    }

    pub fn to_json(&self) -> GrsCodeJson {
        let f = &self.field;
        GrsCodeJson {
            field: f.descriptor(),
            a: self.a.iter().map(|&x| f.coeffs(x)).collect(),
            v: self.v.iter().map(|&x| f.coeffs(x)).collect(),
            k: self.k,
            extended: self.extended,
        }
    }

    pub fn from_json(j: &GrsCodeJson, opts: FieldOptions) -> Result<GrsCode> {
        let field = Field::from_descriptor(&j.field, opts)?;
        Self::from_json_in(&field, j)
    }

    /// Decodes a code whose field has already been built.
    pub fn from_json_in(field: &Arc<Field>, j: &GrsCodeJson) -> Result<GrsCode> {
        if field.descriptor() != j.field {
            return Err(Error::ForeignElement);
        }
        let conv = |xs: &[Vec<u64>]| xs.iter().map(|c| field.element(c)).collect::<Result<Vec<_>>>();
        GrsCode::new(field, conv(&j.a)?, conv(&j.v)?, j.k, j.extended)
    }
}

/// `u_i = prod_{j != i} (a_i - a_j)^{-1}`.
pub fn u_vector(field: &Field, a: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let mut seen = HashSet::with_capacity(a.len());
    if !a.iter().all(|x| seen.insert(*x)) {
        return Err(Error::DuplicatePoints);
    }
    Ok(a.iter()
        .enumerate()
        .map(|(i, &ai)| {
            let prod = field.product(
                a.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &aj)| field.sub(ai, aj)),
            );
            field.inv(prod)
        })
        .collect())
}

/// `Psi_B(x) = prod_{b in B} (x - b)`.
pub fn psi(field: &Field, set: &[FieldElement], x: FieldElement) -> FieldElement {
    field.product(set.iter().map(|&b| field.sub(x, b)))
}

/// `Delta_B(x) = Psi_B'(x)`, evaluated from the formal derivative.
pub fn delta(field: &Field, set: &[FieldElement], x: FieldElement) -> FieldElement {
    Polynomial::from_roots(field, set).derivative(field).eval(field, x)
}

/// Outcome of an MDS check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsCheck {
    pub mds: bool,
    pub distance: usize,
    /// `false` when the result rests on the GRS structure rather than on
    /// enumerating column subsets.
    pub exhaustive: bool,
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn columns_rank(g: &Matrix, cols: &[usize]) -> usize {
    let rows = (0..g.rows()).map(|r| cols.iter().map(|&c| g.get(r, c)).collect()).collect();
    Matrix::from_rows(g.field(), cols.len(), rows).expect("same field").rank()
}

/// Minimum distance of the code spanned by `g` (full row rank), by column
/// subsets: `d = N - max{|Z| : rank(G_Z) < k}`.
pub fn min_distance_of_generator(g: &Matrix) -> usize {
    let (k, n) = (g.rows(), g.cols());
    if k == 0 {
        return n + 1;
    }
    let mut max_deficient = k - 1;
    for z in k..=n {
        let mut idx: Vec<usize> = (0..z).collect();
        let mut found = false;
        loop {
            if columns_rank(g, &idx) < k {
                found = true;
                break;
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
        if !found {
            break;
        }
        max_deficient = z;
    }
    n - max_deficient
}

/// Exact minimum distance, refusing codes longer than `guard`.
pub fn min_distance_exact(code: &GrsCode, guard: usize) -> Result<usize> {
    if code.length() > guard {
        return Err(Error::TooLargeForExact(code.length(), guard));
    }
    Ok(min_distance_of_generator(&code.generator_matrix()))
}

/// MDS status: exhaustive within `guard`, structural beyond it.
pub fn mds_check(code: &GrsCode, guard: usize) -> MdsCheck {
    let singleton = code.length() - code.dimension() + 1;
    match min_distance_exact(code, guard) {
        Ok(d) => MdsCheck { mds: d == singleton, distance: d, exhaustive: true },
        Err(_) => {
            // distinct points and nonzero multipliers make every k columns a
            // scaled Vandermonde block, so full generator rank is all we check
            let mds = code.generator_matrix().rank() == code.dimension();
            MdsCheck { mds, distance: singleton, exhaustive: false }
        }
    }
}

pub fn is_mds(code: &GrsCode) -> bool {
    mds_check(code, EXACT_DISTANCE_GUARD).mds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf5() -> Arc<Field> {
        Field::new(5, 1, None).unwrap()
    }

    fn ints(f: &Field, xs: &[i64]) -> Vec<FieldElement> {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn u_vector_examples() {
        let f = gf5();
        assert_eq!(u_vector(&f, &ints(&f, &[0, 1, 2])).unwrap(), ints(&f, &[3, 4, 3]));
        assert_eq!(u_vector(&f, &ints(&f, &[4])).unwrap(), vec![f.one()]);
        let f9 = Field::new(3, 2, None).unwrap();
        let all: Vec<_> = f9.elements().collect();
        assert!(u_vector(&f9, &all).unwrap().iter().all(|&u| u == f9.from_int(-1)));
        assert_eq!(u_vector(&f, &ints(&f, &[1, 1])).unwrap_err(), Error::DuplicatePoints);
    }

    #[test]
    fn extended_generator_example() {
        let f = gf5();
        let code = GrsCode::new(&f, ints(&f, &[0, 1, 2]), ints(&f, &[1, 1, 1]), 2, true).unwrap();
        let g = code.generator_matrix();
        assert_eq!(g.to_rows(), vec![ints(&f, &[1, 1, 1, 0]), ints(&f, &[0, 1, 2, 1])]);
    }

    #[test]
    fn invalid_codes_rejected() {
        let f = gf5();
        let a = ints(&f, &[0, 1, 2]);
        assert_eq!(
            GrsCode::new(&f, a.clone(), ints(&f, &[1, 0, 1]), 2, false).unwrap_err(),
            Error::ZeroMultiplier(1)
        );
        assert_eq!(
            GrsCode::new(&f, ints(&f, &[0, 0, 2]), ints(&f, &[1, 1, 1]), 2, false).unwrap_err(),
            Error::DuplicatePoints
        );
        assert!(matches!(
            GrsCode::new(&f, a, ints(&f, &[1, 1, 1]), 0, false),
            Err(Error::InvalidDimension(_))
        ));
    }

    #[test]
    fn encode_examples() {
        let f = gf5();
        let a = ints(&f, &[0, 1, 2, 3]);
        let u = u_vector(&f, &a).unwrap();
        let code = GrsCode::new(&f, a, u.clone(), 2, false).unwrap();
        assert_eq!(code.encode(&Polynomial::zero()).unwrap(), vec![f.zero(); 4]);
        assert_eq!(code.encode(&Polynomial::constant(f.one())).unwrap(), u);
        let too_high = Polynomial::monomial(&f, 2, f.one());
        assert_eq!(code.encode(&too_high).unwrap_err(), Error::DegreeTooHigh { degree: 2, bound: 1 });
    }

    #[test]
    fn distance_examples() {
        let f = Field::new(3, 2, None).unwrap();
        let a: Vec<_> = f.elements().take(6).collect();
        let v: Vec<_> = f.nonzero_elements().take(6).collect();
        let plain = GrsCode::new(&f, a.clone(), v.clone(), 3, false).unwrap();
        assert_eq!(min_distance_exact(&plain, EXACT_DISTANCE_GUARD).unwrap(), 4);
        let ext = GrsCode::new(&f, a.clone(), v.clone(), 3, true).unwrap();
        assert_eq!(min_distance_exact(&ext, EXACT_DISTANCE_GUARD).unwrap(), 5);
        let full = GrsCode::new(&f, a, v, 6, false).unwrap();
        assert_eq!(min_distance_exact(&full, EXACT_DISTANCE_GUARD).unwrap(), 1);
        assert!(is_mds(&plain) && is_mds(&ext) && is_mds(&full));
        assert_eq!(min_distance_exact(&plain, 5).unwrap_err(), Error::TooLargeForExact(6, 5));
        let structural = mds_check(&plain, 5);
        assert!(structural.mds && !structural.exhaustive);
    }

    #[test]
    fn distance_of_non_mds_generator() {
        // repetition-like [4,2] code over GF(3) with d = 2
        let f = Field::new(3, 1, None).unwrap();
        let (o, z) = (f.one(), f.zero());
        let g = Matrix::from_rows(&f, 4, vec![vec![o, o, z, z], vec![z, z, o, o]]).unwrap();
        assert_eq!(min_distance_of_generator(&g), 2);
    }

    #[test]
    fn psi_delta_examples() {
        let f = gf5();
        let x = f.from_int(3);
        assert_eq!(psi(&f, &[f.zero()], x), x);
        assert_eq!(delta(&f, &[f.zero()], x), f.one());
        let b = ints(&f, &[0, 1, 2]);
        assert_eq!(delta(&f, &b, f.zero()), f.from_int(2));
    }

    #[test]
    fn dual_multiplier_example() {
        let f = gf5();
        let a = ints(&f, &[0, 1, 2]);
        let code = GrsCode::new(&f, a.clone(), ints(&f, &[1, 1, 1]), 1, false).unwrap();
        let w = code.dual_multipliers().unwrap();
        assert_eq!(w, ints(&f, &[3, 4, 3]));
        let dual = GrsCode::new(&f, a, w, 2, false).unwrap();
        let prod = dual.generator_matrix().matmul(&code.generator_matrix().transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn json_round_trip_is_stable() {
        let f = gf5();
        let code = GrsCode::new(&f, ints(&f, &[0, 1, 2]), ints(&f, &[1, 2, 3]), 2, true).unwrap();
        let s = serde_json::to_string(&code.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"field":{"p":5,"h":1,"modulus":[0,1]},"a":[[0],[1],[2]],"v":[[1],[2],[3]],"k":2,"extended":true}"#
        );
        let back = GrsCode::from_json(&serde_json::from_str(&s).unwrap(), FieldOptions::default()).unwrap();
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), s);
    }
}
