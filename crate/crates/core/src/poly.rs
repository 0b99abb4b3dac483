use crate::field::{Field, FieldElement};

/// Polynomial over GF(q), coefficients constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        Polynomial::new(vec![c])
    }

    /// `c * x^j`
    pub fn monomial(field: &Field, j: usize, c: FieldElement) -> Polynomial {
        let mut coeffs = vec![field.zero(); j + 1];
        coeffs[j] = c;
        Polynomial::new(coeffs)
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(field: &Field, roots: &[FieldElement]) -> Polynomial {
        let mut out = Polynomial::constant(field.one());
        for &r in roots {
            out = out.mul(field, &Polynomial::new(vec![field.neg(r), field.one()]));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero past the degree).
    pub fn coeff(&self, field: &Field, j: usize) -> FieldElement {
        self.coeffs.get(j).copied().unwrap_or_else(|| field.zero())
    }

    pub fn eval(&self, field: &Field, x: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(field.zero(), |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn add(&self, field: &Field, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| field.add(self.coeff(field, i), other.coeff(field, i))).collect())
    }

    pub fn scale(&self, field: &Field, c: FieldElement) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, field: &Field, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Polynomial::new(out)
    }

    /// Formal derivative.
    pub fn derivative(&self, field: &Field) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| field.mul(field.from_int((i as u64 % field.characteristic()) as i64), c))
                .collect(),
        )
    }

    /// Applies the Frobenius `c -> c^(p^e)` to every coefficient.
    pub fn frobenius_coeffs(&self, field: &Field, e: u32) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| field.frobenius(c, e)).collect())
    }
}
