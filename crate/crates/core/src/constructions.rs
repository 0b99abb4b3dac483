//! MDS (extended) GRS codes with an e-Galois hull of prescribed dimension.
//!
//! Two direct constructions (affine cosets of a subspace, trace cosets) and
//! two lifts from Euclidean-orthogonal seeds. Every construction rescales
//! the first `s` multipliers by a primitive element `α` with
//! `α^(p^e+1) != 1`; `s` fixes the hull dimension.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, FieldElement, FieldOptions};
use crate::grs::{mds_check, u_vector, GrsCode, MdsCheck, EXACT_DISTANCE_GUARD};
use crate::hull::{hull_dim, HullReport};

#[derive(Debug, Clone, Copy)]
pub struct ConstructOptions {
    /// Recompute the hull (and MDS status) of the result.
    pub verify: bool,
    pub field: FieldOptions,
    /// Longest code for which the MDS check enumerates column subsets.
    pub exact_guard: usize,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { verify: true, field: FieldOptions::default(), exact_guard: EXACT_DISTANCE_GUARD }
    }
}

/// A constructed code with the target hull dimension and, when verified,
/// the measured hull and MDS status.
#[derive(Debug, Clone)]
pub struct Construction {
    pub code: GrsCode,
    pub e: u32,
    pub l: usize,
    pub hull: Option<HullReport>,
    pub mds: Option<MdsCheck>,
}

/// `floor((p^e + n - 1) / (p^e + 1))`
pub fn dimension_bound(pe: u64, n: u64) -> u64 {
    (pe + n - 1) / (pe + 1)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !arith::is_prime(p) {
        return Err(invalid(format!("p must be an odd prime, got {p}")));
    }
    Ok(())
}

fn checked_pow(p: u64, j: u32, what: &str) -> Result<u64> {
    p.checked_pow(j).ok_or_else(|| invalid(format!("{what} overflows 64 bits")))
}

fn check_k_l(k: usize, l: usize, bound: u64, l_max_is_k: bool) -> Result<()> {
    if k == 0 || k as u64 > bound {
        return Err(invalid(format!("k must satisfy 1 <= k <= {bound}, got k = {k}")));
    }
    if l_max_is_k {
        if l > k {
            return Err(invalid(format!("l must satisfy 0 <= l <= k = {k}, got l = {l}")));
        }
    } else if l + 1 > k {
        return Err(invalid(format!("l must satisfy 0 <= l <= k-1 = {}, got l = {l}", k - 1)));
    }
    Ok(())
}

/// α = the primitive element, guarded by `α^(p^e+1) != 1`.
fn scaling_element(field: &Field, e: u32) -> Result<FieldElement> {
    let alpha = field.generator();
    if field.pow(alpha, field.p_pow(e) + 1) == field.one() {
        return Err(invalid("no scaling element: (q-1) divides p^e+1"));
    }
    Ok(alpha)
}

fn scale_prefix(field: &Field, v: &mut [FieldElement], s: usize, alpha: FieldElement) {
    for x in v.iter_mut().take(s) {
        *x = field.mul(alpha, *x);
    }
}

/// Hull must equal `l` and the code must be MDS.
pub fn verify_construction(code: &GrsCode, e: u32, l: usize, guard: usize) -> Result<(HullReport, MdsCheck)> {
    let hull = hull_dim(code, e);
    if !hull.method_agreement {
        return Err(Error::VerificationFailed("hull methods disagree".into()));
    }
    if hull.hull_dim != l {
        return Err(Error::VerificationFailed(format!(
            "hull dimension {} differs from l = {l}",
            hull.hull_dim
        )));
    }
    let mds = mds_check(code, guard);
    if !mds.mds {
        return Err(Error::VerificationFailed(format!("code is not MDS (d = {})", mds.distance)));
    }
    Ok((hull, mds))
}

fn finish(code: GrsCode, e: u32, l: usize, opts: &ConstructOptions) -> Result<Construction> {
    let (hull, mds) = if opts.verify {
        let (h, m) = verify_construction(&code, e, l, opts.exact_guard)?;
        (Some(h), Some(m))
    } else {
        (None, None)
    };
    Ok(Construction { code, e, l, hull, mds })
}

// ---------------------------------------------------------------------------
// Affine cosets ω^j + V of an F_{p^e}-subspace V

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm31Params {
    pub p: u64,
    pub e: u32,
    pub m: u32,
    pub t: u64,
    pub r: u32,
    pub k: usize,
    pub l: usize,
}

impl Thm31Params {
    /// Checks every constraint; returns `(q, n)`.
    pub fn validate(&self) -> Result<(u64, u64)> {
        check_odd_prime(self.p)?;
        if self.e == 0 {
            return Err(invalid("e must be at least 1"));
        }
        if self.m == 0 || !self.m.is_multiple_of(2) {
            return Err(invalid(format!("m must be even, got m = {}", self.m)));
        }
        let pe = checked_pow(self.p, self.e, "p^e")?;
        if self.t == 0 || (pe - 1) % self.t != 0 {
            return Err(invalid(format!("t must divide p^e - 1 = {}, got t = {}", pe - 1, self.t)));
        }
        if self.r + 1 > self.m {
            return Err(invalid(format!("r must satisfy r <= m-1 = {}, got r = {}", self.m - 1, self.r)));
        }
        let q = checked_pow(self.p, self.e * self.m, "q")?;
        let n = self.t * checked_pow(self.p, self.e * self.r, "p^(er)")?;
        check_k_l(self.k, self.l, dimension_bound(pe, n), false)?;
        Ok((q, n))
    }
}

/// Intermediate data of the coset construction, exposed for inspection.
#[derive(Debug, Clone)]
pub struct Thm31Layout {
    pub field: Arc<Field>,
    pub omega: FieldElement,
    /// The subspace V in canonical order.
    pub subspace: Vec<FieldElement>,
    /// Evaluation points: coset j = ω^j + V for j ascending.
    pub points: Vec<FieldElement>,
    /// Coset index of each point.
    pub coset: Vec<usize>,
    /// `b = prod_{γ≠0} γ · prod_{γ∈V} prod_{d=1}^{t-1} (1 + γ - ω^d)`
    pub b: FieldElement,
    pub lambda: FieldElement,
    /// Roots `v_i` of `v_i^(p^e+1) = λ u_i`, before α-scaling.
    pub roots: Vec<FieldElement>,
}

pub fn thm31_layout(params: &Thm31Params, fopts: FieldOptions) -> Result<Thm31Layout> {
    params.validate()?;
    let Thm31Params { p, e, m, t, r, .. } = *params;
    let field = Field::with_options(p, e * m, None, fopts)?;
    let f = &field;
    let sub = f.subfield_elements(e)?;
    let omega = f.find_element_of_order(t, Some(e))?;

    // V = span over F_{p^e} of g^1..g^r; {1, g, ..., g^{m-1}} is a basis of
    // F_q over F_{p^e}, so V meets the subfield only in 0
    let basis: Vec<FieldElement> = (1..=r as u64).map(|j| f.pow(f.generator(), j)).collect();
    let mut subspace = vec![f.zero()];
    for &bj in &basis {
        subspace = subspace
            .iter()
            .flat_map(|&x| sub.iter().map(move |&c| (x, c)))
            .map(|(x, c)| f.add(x, f.mul(c, bj)))
            .collect();
    }
    subspace.sort();
    subspace.dedup();
    let expected = f.p_pow(e * r) as usize;
    if subspace.len() != expected {
        return Err(Error::VerificationFailed(format!(
            "V has {} elements, expected {expected}",
            subspace.len()
        )));
    }
    if subspace.iter().any(|&x| !x.is_zero() && sub.binary_search(&x).is_ok()) {
        return Err(Error::VerificationFailed("V meets the subfield nontrivially".into()));
    }

    let mut points = Vec::with_capacity(t as usize * subspace.len());
    let mut coset = Vec::with_capacity(points.capacity());
    for j in 0..t {
        let shift = f.pow(omega, j);
        for &g in &subspace {
            points.push(f.add(shift, g));
            coset.push(j as usize);
        }
    }

    let nonzero_prod = f.product(subspace.iter().copied().filter(|x| !x.is_zero()));
    let omega_pows: Vec<FieldElement> = (1..t).map(|d| f.pow(omega, d)).collect();
    let cross = f.product(
        subspace
            .iter()
            .flat_map(|&g| omega_pows.iter().map(move |&w| (g, w)))
            .map(|(g, w)| f.sub(f.add(f.one(), g), w)),
    );
    let b = f.mul(nonzero_prod, cross);

    // prod_{j != i} (a_i - a_j) = ω^{-j0 p^{er}} b for a_i in coset j0, so
    // u_i = ω^{j0 p^{er}} / b and λ = b puts every λ u_i in F_{p^e}^*
    let u = u_vector(f, &points)?;
    let per = f.p_pow(e * r);
    for (i, (&ui, &j0)) in u.iter().zip(&coset).enumerate() {
        let shift = (t - (j0 as u64 * per) % t) % t;
        if f.inv(ui) != f.mul(f.pow(omega, shift), b) {
            return Err(Error::VerificationFailed(format!("closed form for u_{i} does not hold")));
        }
    }
    let lambda = b;
    let roots = u
        .iter()
        .enumerate()
        .map(|(i, &ui)| f.solve_norm_equation(f.mul(lambda, ui), e).map_err(|_| Error::NormEquationFailed(i)))
        .collect::<Result<Vec<_>>>()?;

    Ok(Thm31Layout { field, omega, subspace, points, coset, b, lambda, roots })
}

/// `[n+1, k]` extended GRS code with `l`-dimensional e-Galois hull over
/// `GF(p^{em})`, `n = t p^{er}`.
pub fn thm31_construct(params: &Thm31Params, opts: &ConstructOptions) -> Result<Construction> {
    let layout = thm31_layout(params, opts.field)?;
    let f = &layout.field;
    let alpha = scaling_element(f, params.e)?;
    let mut v = layout.roots.clone();
    scale_prefix(f, &mut v, params.k - 1 - params.l, alpha);
    let code = GrsCode::new(f, layout.points.clone(), v, params.k, true)?;
    finish(code, params.e, params.l, opts)
}

// ---------------------------------------------------------------------------
// Trace cosets T_i = { x : Tr(x) = b_i }

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm32Params {
    pub p: u64,
    pub h: u32,
    pub e: u32,
    pub t: u64,
    pub k: usize,
    pub l: usize,
}

impl Thm32Params {
    pub fn validate(&self) -> Result<(u64, u64)> {
        check_odd_prime(self.p)?;
        if self.e == 0 || !self.h.is_multiple_of(2 * self.e) {
            return Err(invalid(format!("2e must divide h (h = {}, e = {})", self.h, self.e)));
        }
        let pe = checked_pow(self.p, self.e, "p^e")?;
        if self.t == 0 || self.t > pe {
            return Err(invalid(format!("t must satisfy 1 <= t <= p^e = {pe}, got t = {}", self.t)));
        }
        let q = checked_pow(self.p, self.h, "q")?;
        let n = self.t * checked_pow(self.p, self.h - self.e, "p^(h-e)")?;
        check_k_l(self.k, self.l, dimension_bound(pe, n), false)?;
        Ok((q, n))
    }
}

#[derive(Debug, Clone)]
pub struct Thm32Layout {
    pub field: Arc<Field>,
    /// `b_1 = 0, b_2, ..., b_t` from `B = F_{p^e}`.
    pub targets: Vec<FieldElement>,
    /// The trace cosets, each in canonical order.
    pub cosets: Vec<Vec<FieldElement>>,
    pub points: Vec<FieldElement>,
    /// `u_i`, each lying in `F_{p^e}^*`.
    pub u: Vec<FieldElement>,
    pub roots: Vec<FieldElement>,
}

/// Preimages of each target under the trace to `F_{p^e}`, by scanning the field.
pub fn trace_cosets_by_scan(field: &Field, e: u32, targets: &[FieldElement]) -> Result<Vec<Vec<FieldElement>>> {
    let mut cosets = vec![Vec::new(); targets.len()];
    for x in field.elements() {
        let tr = field.trace_to(x, e)?;
        if let Some(i) = targets.iter().position(|&b| b == tr) {
            cosets[i].push(x);
        }
    }
    Ok(cosets)
}

/// Same cosets through linear algebra over `F_p`: a particular solution of
/// `Tr(x) = b` plus the kernel of the trace.
pub fn trace_cosets_by_linear_algebra(
    field: &Field,
    e: u32,
    targets: &[FieldElement],
) -> Result<Vec<Vec<FieldElement>>> {
    let p = field.characteristic();
    let h = field.degree() as usize;
    let prime = Field::new(p, 1, None)?;
    let to_prime = |c: u64| prime.from_int(c as i64);
    // columns: coordinates of Tr(basis_j); augmented with -b for each target
    let basis: Vec<FieldElement> = (0..h)
        .map(|j| {
            let mut c = vec![0; h];
            c[j] = 1;
            field.element(&c)
        })
        .collect::<Result<_>>()?;
    let images: Vec<Vec<u64>> =
        basis.iter().map(|&x| field.trace_to(x, e).map(|t| field.coeffs(t))).collect::<Result<_>>()?;
    let rows: Vec<Vec<FieldElement>> =
        (0..h).map(|i| (0..h).map(|j| to_prime(images[j][i])).collect()).collect();
    let tr = crate::matrix::Matrix::from_rows(&prime, h, rows.clone())?;
    let kernel = tr.null_space();
    let kernel_vecs: Vec<Vec<u64>> = {
        let mut span = vec![vec![0u64; h]];
        for r in 0..kernel.rows() {
            let row: Vec<u64> = kernel.row(r).iter().map(|&c| prime.coeffs(c)[0]).collect();
            span = span
                .iter()
                .flat_map(|x| (0..p).map(move |c| (x.clone(), c)))
                .map(|(x, c)| x.iter().zip(&row).map(|(a, b)| (a + c * b) % p).collect())
                .collect();
        }
        span
    };
    let mut out = Vec::with_capacity(targets.len());
    for &b in targets {
        let bc = field.coeffs(b);
        // solve Tr · x = b by row reduction of [Tr | b]
        let aug_rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .zip(&bc)
            .map(|(r, &bi)| r.iter().copied().chain(std::iter::once(to_prime(bi))).collect())
            .collect();
        let red = crate::matrix::Matrix::from_rows(&prime, h + 1, aug_rows)?.rref();
        if red.pivots.contains(&h) {
            return Err(Error::VerificationFailed("trace target outside the image".into()));
        }
        let mut particular = vec![0u64; h];
        for (r, &pc) in red.pivots.iter().enumerate() {
            particular[pc] = prime.coeffs(red.matrix.get(r, h))[0];
        }
        let mut coset: Vec<FieldElement> = kernel_vecs
            .iter()
            .map(|kv| {
                let c: Vec<u64> = kv.iter().zip(&particular).map(|(a, b)| (a + b) % p).collect();
                field.element(&c)
            })
            .collect::<Result<_>>()?;
        coset.sort();
        out.push(coset);
    }
    Ok(out)
}

pub fn thm32_layout(params: &Thm32Params, fopts: FieldOptions) -> Result<Thm32Layout> {
    params.validate()?;
    let Thm32Params { p, h, e, t, .. } = *params;
    let field = Field::with_options(p, h, None, fopts)?;
    let f = &field;
    let targets: Vec<FieldElement> = f.subfield_elements(e)?.into_iter().take(t as usize).collect();
    let cosets = if f.order() <= crate::field::DEFAULT_DLOG_LIMIT {
        trace_cosets_by_scan(f, e, &targets)?
    } else {
        trace_cosets_by_linear_algebra(f, e, &targets)?
    };
    let points: Vec<FieldElement> = cosets.iter().flatten().copied().collect();
    let u = u_vector(f, &points)?;
    for (i, (&ui, &x)) in u.iter().zip(&points).enumerate() {
        let tr = f.trace_to(x, e)?;
        let j0 = targets.iter().position(|&b| b == tr).expect("point lies in one coset");
        let closed = f.product(targets.iter().enumerate().filter(|&(j, _)| j != j0).map(|(_, &b)| f.sub(tr, b)));
        if f.inv(ui) != closed {
            return Err(Error::VerificationFailed(format!("closed form for u_{i} does not hold")));
        }
        if !f.in_subfield(ui, e)? {
            return Err(Error::VerificationFailed(format!("u_{i} is not in the subfield")));
        }
    }
    let roots = u
        .iter()
        .enumerate()
        .map(|(i, &ui)| f.solve_norm_equation(ui, e).map_err(|_| Error::NormEquationFailed(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Thm32Layout { field, targets, cosets, points, u, roots })
}

/// `[n+1, k]` extended GRS code with `l`-dimensional e-Galois hull over
/// `GF(p^h)`, `n = t p^{h-e}`.
pub fn thm32_construct(params: &Thm32Params, opts: &ConstructOptions) -> Result<Construction> {
    let layout = thm32_layout(params, opts.field)?;
    let f = &layout.field;
    let alpha = scaling_element(f, params.e)?;
    let mut v = layout.roots.clone();
    scale_prefix(f, &mut v, params.k - 1 - params.l, alpha);
    let code = GrsCode::new(f, layout.points.clone(), v, params.k, true)?;
    finish(code, params.e, params.l, opts)
}

// ---------------------------------------------------------------------------
// Lifts of Euclidean-orthogonal seeds

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedLambda {
    Value(FieldElement),
    /// The extended witness `v_i^2 = -u_i`.
    MinusOne,
}

/// Points and multipliers witnessing Euclidean orthogonality:
/// `v_i^2 = λ u_i` (plain) or `v_i^2 = -u_i` (extended).
#[derive(Debug, Clone)]
pub struct EuclideanSeed {
    pub field: Arc<Field>,
    pub a: Vec<FieldElement>,
    pub v: Vec<FieldElement>,
    pub lambda: SeedLambda,
    pub extended: bool,
}

impl EuclideanSeed {
    /// Checks the witness at every coordinate.
    pub fn validate(&self) -> Result<()> {
        let f = &self.field;
        if self.a.len() != self.v.len() {
            return Err(Error::LengthMismatch(self.a.len(), self.v.len()));
        }
        for &x in self.a.iter().chain(&self.v) {
            f.check(x)?;
        }
        let lambda = match (self.lambda, self.extended) {
            (SeedLambda::MinusOne, true) => f.from_int(-1),
            (SeedLambda::Value(l), false) if !l.is_zero() => {
                f.check(l)?;
                l
            }
            _ => return Err(invalid("seed λ must be nonzero (plain) or minus-one (extended)")),
        };
        let u = u_vector(f, &self.a)?;
        for (i, (&ui, &vi)) in u.iter().zip(&self.v).enumerate() {
            if vi.is_zero() || f.mul(vi, vi) != f.mul(lambda, ui) {
                return Err(Error::SeedInvalidWitness(i));
            }
        }
        Ok(())
    }

    fn lambda_value(&self) -> FieldElement {
        match self.lambda {
            SeedLambda::Value(l) => l,
            SeedLambda::MinusOne => self.field.from_int(-1),
        }
    }
}

/// Serialized seed: `lambda` is a coefficient list or the string `"minus-one"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclideanSeedJson {
    pub field: FieldDescriptor,
    pub a: Vec<Vec<u64>>,
    pub v: Vec<Vec<u64>>,
    pub lambda: LambdaJson,
    pub extended: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaJson {
    Value(Vec<u64>),
    Marker(String),
}

impl EuclideanSeed {
    pub fn to_json(&self) -> EuclideanSeedJson {
        let f = &self.field;
        EuclideanSeedJson {
            field: f.descriptor(),
            a: self.a.iter().map(|&x| f.coeffs(x)).collect(),
            v: self.v.iter().map(|&x| f.coeffs(x)).collect(),
            lambda: match self.lambda {
                SeedLambda::Value(l) => LambdaJson::Value(f.coeffs(l)),
                SeedLambda::MinusOne => LambdaJson::Marker("minus-one".into()),
            },
            extended: self.extended,
        }
    }

    pub fn from_json(j: &EuclideanSeedJson, opts: FieldOptions) -> Result<EuclideanSeed> {
        let field = Field::from_descriptor(&j.field, opts)?;
        let conv = |xs: &[Vec<u64>]| xs.iter().map(|c| field.element(c)).collect::<Result<Vec<_>>>();
        let lambda = match &j.lambda {
            LambdaJson::Value(c) => SeedLambda::Value(field.element(c)?),
            LambdaJson::Marker(s) if s == "minus-one" => SeedLambda::MinusOne,
            LambdaJson::Marker(s) => return Err(Error::Serialization(format!("unknown lambda marker {s:?}"))),
        };
        Ok(EuclideanSeed { a: conv(&j.a)?, v: conv(&j.v)?, lambda, extended: j.extended, field })
    }
}

/// Searches for the multipliers of a Euclidean seed on the given points.
///
/// Plain: all `u_i` must share a quadratic character; `λ = 1` for squares,
/// otherwise the smallest non-square. Extended: every `-u_i` must be a square.
pub fn find_euclidean_seed(field: &Arc<Field>, a: &[FieldElement], extended: bool) -> Result<Option<EuclideanSeed>> {
    let f = field;
    let u = u_vector(f, a)?;
    let (lambda, scale) = if extended {
        (SeedLambda::MinusOne, f.from_int(-1))
    } else {
        let squares = u.iter().filter(|&&x| f.is_square(x)).count();
        if squares == u.len() {
            (SeedLambda::Value(f.one()), f.one())
        } else if squares == 0 {
            let ns = f.nonzero_elements().find(|&x| !f.is_square(x)).expect("odd q has non-squares");
            (SeedLambda::Value(ns), ns)
        } else {
            return Ok(None);
        }
    };
    let mut v = Vec::with_capacity(a.len());
    for &ui in &u {
        match f.sqrt(f.mul(scale, ui)) {
            Some(r) => v.push(r),
            None => return Ok(None),
        }
    }
    Ok(Some(EuclideanSeed { field: f.clone(), a: a.to_vec(), v, lambda, extended }))
}

/// Extended seed on the whole field: `u_i = -1`, so `v = 1`.
pub fn full_field_seed(field: &Arc<Field>) -> Result<EuclideanSeed> {
    let seed = EuclideanSeed {
        field: field.clone(),
        a: field.elements().collect(),
        v: vec![field.one(); field.order() as usize],
        lambda: SeedLambda::MinusOne,
        extended: true,
    };
    seed.validate()?;
    Ok(seed)
}

/// Plain seed on the n-th roots of unity `a_j = ω^j`, `n | (q-1)/2`.
/// Here `u_i = a_i / n`, so with `λ = n` the witness is `v_i^2 = a_i`.
pub fn mu_n_seed(field: &Arc<Field>, n: u64) -> Result<EuclideanSeed> {
    let f = field;
    if n == 0 || !((f.order() - 1) / 2).is_multiple_of(n) {
        return Err(invalid(format!("n must divide (q-1)/2 = {}, got n = {n}", (f.order() - 1) / 2)));
    }
    let omega = f.find_element_of_order(n, None)?;
    let a: Vec<FieldElement> = (0..n).map(|j| f.pow(omega, j)).collect();
    let v: Vec<FieldElement> = if n % 2 == 1 {
        a.iter().map(|&x| f.pow(x, n.div_ceil(2))).collect()
    } else {
        a.iter().map(|&x| f.sqrt(x).expect("roots of unity of order | (q-1)/2 are squares")).collect()
    };
    let seed = EuclideanSeed {
        field: f.clone(),
        a,
        v,
        lambda: SeedLambda::Value(f.from_int((n % f.characteristic()) as i64)),
        extended: false,
    };
    seed.validate()?;
    Ok(seed)
}

/// `μ` with `μ(p^e+1) + ν(p^h-1) = 2`; requires the gcd to be 2.
pub fn lift_exponent(p: u64, e: u32, h: u32) -> Result<i128> {
    let (mu, _nu, g) = arith::bezout(p.pow(e) + 1, p.pow(h) - 1);
    if g != 2 {
        return Err(Error::GcdNotTwo(g));
    }
    Ok(mu)
}

fn check_h_over_e_odd(h: u32, e: u32) -> Result<()> {
    if e == 0 || !h.is_multiple_of(e) || (h / e).is_multiple_of(2) {
        return Err(Error::HOverENotOdd { h, e });
    }
    Ok(())
}

/// `v_i -> v_i^μ`, turning the Euclidean witness into `v'^(p^e+1) = λ u_i`.
fn lifted_multipliers(seed: &EuclideanSeed, e: u32) -> Result<Vec<FieldElement>> {
    let f = &seed.field;
    let mu = lift_exponent(f.characteristic(), e, f.degree())?;
    let lu: Vec<FieldElement> =
        u_vector(f, &seed.a)?.iter().map(|&u| f.mul(seed.lambda_value(), u)).collect();
    let pe1 = f.p_pow(e) + 1;
    seed.v
        .iter()
        .zip(&lu)
        .enumerate()
        .map(|(i, (&vi, &target))| {
            let w = f.pow_signed(vi, mu);
            if f.pow(w, pe1) != target {
                return Err(Error::VerificationFailed(format!("lift exponent identity fails at {i}")));
            }
            Ok(w)
        })
        .collect()
}

/// `[n, k]` GRS code with `l`-dimensional e-Galois hull from a plain seed,
/// for `0 <= l <= k`.
pub fn thm41_lift(seed: &EuclideanSeed, e: u32, k: usize, l: usize, opts: &ConstructOptions) -> Result<Construction> {
    if seed.extended {
        return Err(invalid("this lift needs a plain (non-extended) seed"));
    }
    let f = &seed.field;
    check_h_over_e_odd(f.degree(), e)?;
    seed.validate()?;
    let n = seed.a.len() as u64;
    check_k_l(k, l, dimension_bound(f.p_pow(e), n), true)?;
    let alpha = scaling_element(f, e)?;
    let mut v = lifted_multipliers(seed, e)?;
    scale_prefix(f, &mut v, k - l, alpha);
    let code = GrsCode::new(f, seed.a.clone(), v, k, false)?;
    finish(code, e, l, opts)
}

/// `[n+1, k]` extended GRS code with `l`-dimensional e-Galois hull from an
/// extended seed, for `0 <= l <= k-1`.
pub fn thm42_lift(seed: &EuclideanSeed, e: u32, k: usize, l: usize, opts: &ConstructOptions) -> Result<Construction> {
    if !seed.extended {
        return Err(Error::ExtendedSeedRequired);
    }
    let f = &seed.field;
    check_h_over_e_odd(f.degree(), e)?;
    seed.validate()?;
    let n = seed.a.len() as u64;
    check_k_l(k, l, dimension_bound(f.p_pow(e), n), false)?;
    let alpha = scaling_element(f, e)?;
    let mut v = lifted_multipliers(seed, e)?;
    scale_prefix(f, &mut v, k - l - 1, alpha);
    let code = GrsCode::new(f, seed.a.clone(), v, k, true)?;
    finish(code, e, l, opts)
}
