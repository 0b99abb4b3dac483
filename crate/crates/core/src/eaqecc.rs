//! Entanglement-assisted quantum code parameters from Galois hulls.
//!
//! A code `C = [n, k, d]` with `l = dim Hull_e(C)` gives
//! `[[n, k - l, d; n - k - l]]`, and its dual side gives
//! `[[n, n - k - l', d⊥; k - l']]` with `l' = dim Hull_{h-e}(C)`.

use std::io::Write;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};
use crate::grs::{mds_check, min_distance_of_generator, GrsCode, EXACT_DISTANCE_GUARD};
use crate::hull::{hull_dim, hull_of_generator};
use crate::matrix::Matrix;

/// `[[n, k_q, d; c]]` over GF(p^h).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EaqeccParams {
    pub n: u64,
    pub kq: u64,
    pub d: u64,
    pub c: u64,
    pub p: u64,
    pub h: u32,
    pub mds: bool,
}

impl std::fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{},{},{};{}]]", self.n, self.kq, self.d, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingletonStatus {
    Satisfied,
    Violated,
    /// `d > (n+2)/2`: the bound says nothing.
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletonCheck {
    pub status: SingletonStatus,
    /// `n + c - k_q = 2(d - 1)` with the guard in force.
    pub equality: bool,
}

/// Quantum Singleton bound `n + c - k_q >= 2(d - 1)`, only under `d <= (n+2)/2`.
pub fn singleton_check(n: u64, kq: u64, d: u64, c: u64) -> SingletonCheck {
    if 2 * d > n + 2 {
        return SingletonCheck { status: SingletonStatus::NotApplicable, equality: false };
    }
    let lhs = (n + c) as i128 - kq as i128;
    let rhs = 2 * (d as i128 - 1);
    let status = if lhs >= rhs { SingletonStatus::Satisfied } else { SingletonStatus::Violated };
    SingletonCheck { status, equality: lhs == rhs }
}

impl EaqeccParams {
    pub fn new(n: u64, kq: u64, d: u64, c: u64, p: u64, h: u32) -> EaqeccParams {
        let mds = singleton_check(n, kq, d, c).equality;
        EaqeccParams { n, kq, d, c, p, h, mds }
    }

    pub fn singleton(&self) -> SingletonCheck {
        singleton_check(self.n, self.kq, self.d, self.c)
    }
}

/// Both quantum codes derived from one classical code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedEaqecc {
    pub e: u32,
    /// `dim Hull_e(C)`
    pub l: usize,
    /// `dim Hull_{h-e}(C)`
    pub l_dual: usize,
    pub primal: EaqeccParams,
    pub dual: EaqeccParams,
    /// Whether the distances were enumerated rather than read off the MDS structure.
    pub exhaustive: bool,
}

/// Derives both EAQECC parameter sets. Distances are exact within the
/// column-subset guard; beyond it the code must be MDS.
pub fn derive_eaqecc(code: &GrsCode, e: u32) -> Result<DerivedEaqecc> {
    let field = code.field();
    let h = field.degree();
    let e = e % h;
    let (n, k) = (code.length(), code.dimension());
    let l = hull_dim(code, e).hull_dim;
    let l_dual = hull_dim(code, (h - e) % h).hull_dim;
    let mds = mds_check(code, EXACT_DISTANCE_GUARD);
    let d = mds.distance;
    let d_dual = if mds.mds {
        k + 1
    } else if n <= EXACT_DISTANCE_GUARD {
        // any Galois dual has the same weights as the Euclidean one up to Frobenius
        min_distance_of_generator(&code.generator_matrix().null_space())
    } else {
        return Err(Error::TooLargeForExact(n, EXACT_DISTANCE_GUARD));
    };
    let (p, n64) = (field.characteristic(), n as u64);
    let primal = EaqeccParams::new(n64, (k - l) as u64, d as u64, (n - k - l) as u64, p, h);
    let dual = EaqeccParams::new(n64, (n - k - l_dual) as u64, d_dual as u64, (k - l_dual) as u64, p, h);
    Ok(DerivedEaqecc { e, l, l_dual, primal, dual, exhaustive: mds.exhaustive })
}

/// Which Frobenius power builds `M^{T_e}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransposeConvention {
    /// `(M^{(p^{h-e})})^T`
    HMinusE,
    /// `(M^{(p^e)})^T`
    E,
}

/// `rank(H H^{T_e})` for a parity-check matrix `H` of the code spanned by `g`,
/// with `H` the RREF basis of the Euclidean dual.
pub fn rank_formula_c_of_generator(g: &Matrix, e: u32, conv: TransposeConvention) -> Result<usize> {
    let h = g.field().degree();
    let e = e % h;
    let rank = g.rank();
    if rank != g.rows() {
        return Err(Error::RankDeficient { rank, rows: g.rows() });
    }
    let parity = g.null_space();
    if parity.rows() == 0 {
        return Ok(0);
    }
    let power = match conv {
        TransposeConvention::HMinusE => (h - e) % h,
        TransposeConvention::E => e,
    };
    Ok(parity.matmul(&parity.entrywise_frobenius(power).transpose())?.rank())
}

pub fn rank_formula_c(code: &GrsCode, e: u32) -> usize {
    rank_formula_c_of_generator(&code.generator_matrix(), e, TransposeConvention::HMinusE)
        .expect("GRS generators have full rank")
}

/// Literal rank next to `n - k - dim Hull_e` for both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankIdentity {
    pub predicted: usize,
    pub literal_h_minus_e: usize,
    pub literal_e: usize,
    pub hull_methods_agree: bool,
}

pub fn rank_identity(g: &Matrix, e: u32) -> Result<RankIdentity> {
    let hull = hull_of_generator(g, e)?;
    Ok(RankIdentity {
        predicted: g.cols() - g.rows() - hull.hull_dim,
        literal_h_minus_e: rank_formula_c_of_generator(g, e, TransposeConvention::HMinusE)?,
        literal_e: rank_formula_c_of_generator(g, e, TransposeConvention::E)?,
        hull_methods_agree: hull.method_agreement,
    })
}

// ---------------------------------------------------------------------------
// Parameter tables in exact integer arithmetic

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableTheorem {
    /// Affine cosets: inputs `p, m, r, e, t`, length `t p^{er} + 1`.
    #[serde(rename = "5.5")]
    AffineCosets,
    /// Trace cosets: inputs `p, h, e, t`, length `t p^{h-e} + 1`.
    #[serde(rename = "5.6")]
    TraceCosets,
    /// Plain Euclidean self-dual seed of length `n`.
    #[serde(rename = "5.7")]
    PlainSeed,
    /// Extended Euclidean self-dual seed, length `n + 1`.
    #[serde(rename = "5.8")]
    ExtendedSeed,
}

impl TableTheorem {
    pub fn label(&self) -> &'static str {
        match self {
            TableTheorem::AffineCosets => "5.5",
            TableTheorem::TraceCosets => "5.6",
            TableTheorem::PlainSeed => "5.7",
            TableTheorem::ExtendedSeed => "5.8",
        }
    }

    pub fn parse(s: &str) -> Result<TableTheorem> {
        match s {
            "5.5" => Ok(TableTheorem::AffineCosets),
            "5.6" => Ok(TableTheorem::TraceCosets),
            "5.7" => Ok(TableTheorem::PlainSeed),
            "5.8" => Ok(TableTheorem::ExtendedSeed),
            _ => Err(Error::InvalidRanges(format!("unknown table theorem {s:?}"))),
        }
    }

    /// Whether the primal side allows `l = k`.
    fn l_up_to_k(&self) -> bool {
        matches!(self, TableTheorem::PlainSeed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    /// `[[N, k-l, N-k+1; N-k-l]]`
    #[serde(rename = "i")]
    Primal,
    /// `[[N, N-k-l', k+1; k-l']]`
    #[serde(rename = "ii")]
    Dual,
}

impl Part {
    pub fn label(&self) -> &'static str {
        match self {
            Part::Primal => "i",
            Part::Dual => "ii",
        }
    }
}

/// Inputs of a table; `h_or_m` is `m` for 5.5 and `h` otherwise, `n` is the
/// seed length for 5.7/5.8.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub theorem: TableTheorem,
    pub p: u64,
    pub h_or_m: u32,
    pub e: u32,
    pub t: Option<u64>,
    pub r: Option<u32>,
    pub n: Option<u64>,
    pub parts: Vec<Part>,
    /// Inclusive ranges.
    pub k: (u64, u64),
    pub l: (u64, u64),
}

/// Length of the quantum code and the two dimension bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableBounds {
    pub q: BigUint,
    pub length: BigUint,
    pub primal_k_bound: BigUint,
    pub dual_k_bound: BigUint,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidRanges(msg.into())
}

fn big_pow(p: u64, j: u32) -> BigUint {
    BigUint::from(p).pow(j)
}

/// `floor((P + n - 1) / (P + 1))` with `P = p^j`.
pub fn big_dimension_bound(p: u64, j: u32, n: &BigUint) -> BigUint {
    let pj = big_pow(p, j);
    (&pj + n - 1u32) / (pj + 1u32)
}

/// Validates the theorem's constraints symbolically; no field is built.
pub fn table_bounds(spec: &TableSpec) -> Result<TableBounds> {
    let p = spec.p;
    if p < 3 || !arith::is_prime(p) {
        return Err(bad(format!("p must be an odd prime, got {p}")));
    }
    let e = spec.e;
    if e == 0 {
        return Err(bad("e must be at least 1"));
    }
    let need = |x: Option<u64>, name: &str| x.ok_or_else(|| bad(format!("--{name} is required")));
    let (h, n, length) = match spec.theorem {
        TableTheorem::AffineCosets => {
            let m = spec.h_or_m;
            let t = need(spec.t, "t")?;
            let r = need(spec.r.map(u64::from), "r")? as u32;
            if m == 0 || !m.is_multiple_of(2) {
                return Err(bad(format!("m must be even, got m = {m}")));
            }
            let pe1 = big_pow(p, e) - 1u32;
            if t == 0 || &pe1 % t != BigUint::from(0u32) {
                return Err(bad(format!("t must divide p^e - 1 = {pe1}, got t = {t}")));
            }
            if r + 1 > m {
                return Err(bad(format!("r must satisfy r <= m-1 = {}, got r = {r}", m - 1)));
            }
            let n = big_pow(p, e * r) * t;
            (e * m, n.clone(), n + 1u32)
        }
        TableTheorem::TraceCosets => {
            let h = spec.h_or_m;
            let t = need(spec.t, "t")?;
            if !h.is_multiple_of(2 * e) {
                return Err(bad(format!("2e must divide h (h = {h}, e = {e})")));
            }
            if t == 0 || BigUint::from(t) > big_pow(p, e) {
                return Err(bad(format!("t must satisfy 1 <= t <= p^e, got t = {t}")));
            }
            let n = big_pow(p, h - e) * t;
            (h, n.clone(), n + 1u32)
        }
        TableTheorem::PlainSeed | TableTheorem::ExtendedSeed => {
            let h = spec.h_or_m;
            let n = need(spec.n, "n")?;
            if !h.is_multiple_of(e) || (h / e).is_multiple_of(2) {
                return Err(bad(format!("h/e must be an odd integer (h = {h}, e = {e})")));
            }
            if n == 0 || BigUint::from(n) > big_pow(p, h) {
                return Err(bad(format!("n must satisfy 1 <= n <= q, got n = {n}")));
            }
            let n = BigUint::from(n);
            let length = if spec.theorem == TableTheorem::ExtendedSeed { &n + 1u32 } else { n.clone() };
            (h, n, length)
        }
    };
    Ok(TableBounds {
        q: big_pow(p, h),
        primal_k_bound: big_dimension_bound(p, e, &n),
        dual_k_bound: big_dimension_bound(p, h - e, &n),
        length,
    })
}

/// One row of a parameter table. Serializes every integer as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigParamRow {
    pub theorem: TableTheorem,
    pub part: Part,
    pub p: u64,
    pub h_or_m: u32,
    pub e: u32,
    pub t: Option<u64>,
    pub r: Option<u32>,
    pub k: u64,
    pub l: u64,
    pub n: BigUint,
    pub kq: BigUint,
    pub d: BigUint,
    pub c: BigUint,
    pub mds: bool,
}

impl BigParamRow {
    pub fn theorem_label(&self) -> String {
        format!("{}({})", self.theorem.label(), self.part.label())
    }

    /// Same guard and equality as [`singleton_check`], exactly.
    pub fn singleton(&self) -> SingletonCheck {
        let two = BigUint::from(2u32);
        if &two * &self.d > &self.n + 2u32 {
            return SingletonCheck { status: SingletonStatus::NotApplicable, equality: false };
        }
        let lhs = &self.n + &self.c;
        let rhs = &two * (&self.d - 1u32) + &self.kq;
        let status = if lhs >= rhs { SingletonStatus::Satisfied } else { SingletonStatus::Violated };
        SingletonCheck { status, equality: lhs == rhs }
    }

    fn csv_fields(&self) -> [String; 13] {
        let opt = |x: Option<u64>| x.map(|v| v.to_string()).unwrap_or_default();
        [
            self.theorem_label(),
            self.p.to_string(),
            self.h_or_m.to_string(),
            self.e.to_string(),
            opt(self.t),
            opt(self.r.map(u64::from)),
            self.n.to_string(),
            self.k.to_string(),
            self.l.to_string(),
            self.kq.to_string(),
            self.d.to_string(),
            self.c.to_string(),
            self.mds.to_string(),
        ]
    }
}

pub const CSV_HEADER: &str = "theorem,p,h_or_m,e,t,r,n,k,l,kq,d,c,mds";

#[derive(Serialize)]
struct RowJson {
    theorem: String,
    p: String,
    h_or_m: String,
    e: String,
    t: Option<String>,
    r: Option<String>,
    n: String,
    k: String,
    l: String,
    kq: String,
    d: String,
    c: String,
    mds: bool,
}

impl Serialize for BigParamRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [theorem, p, h_or_m, e, t, r, n, k, l, kq, d, c, _] = self.csv_fields();
        let opt = |x: String| (!x.is_empty()).then_some(x);
        RowJson { theorem, p, h_or_m, e, t: opt(t), r: opt(r), n, k, l, kq, d, c, mds: self.mds }.serialize(s)
    }
}

/// Parses `a..b` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<(u64, u64)> {
    let num = |x: &str| x.trim().parse::<u64>().map_err(|_| bad(format!("not an integer range: {s:?}")));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad(format!("empty range {s:?}")));
    }
    Ok((lo, hi))
}

/// Enumerates `(k, l)` rows for every requested part. The `l` range is
/// intersected with each theorem's cap (`k - 1`, or `k` on the primal side
/// of 5.7); the `k` range must lie within the dimension bound of each part.
pub fn param_table(spec: &TableSpec) -> Result<Vec<BigParamRow>> {
    let bounds = table_bounds(spec)?;
    if spec.parts.is_empty() {
        return Err(bad("no part selected"));
    }
    let (k_lo, k_hi) = spec.k;
    if k_lo == 0 {
        return Err(bad("k must be at least 1"));
    }
    let big_n = &bounds.length;
    let mut rows = Vec::new();
    for &part in &spec.parts {
        let bound = match part {
            Part::Primal => &bounds.primal_k_bound,
            Part::Dual => &bounds.dual_k_bound,
        };
        if BigUint::from(k_hi) > *bound {
            return Err(bad(format!(
                "k must satisfy 1 <= k <= {bound} for part ({}), got k up to {k_hi}",
                part.label()
            )));
        }
        let l_up_to_k = spec.theorem.l_up_to_k();
        for k in k_lo..=k_hi {
            let l_cap = if l_up_to_k { k } else { k - 1 };
            for l in spec.l.0..=spec.l.1.min(l_cap) {
                let (kb, lb) = (BigUint::from(k), BigUint::from(l));
                let (kq, d, c) = match part {
                    Part::Primal => (&kb - &lb, big_n - &kb + 1u32, big_n - &kb - &lb),
                    Part::Dual => (big_n - &kb - &lb, &kb + 1u32, &kb - &lb),
                };
                let mut row = BigParamRow {
                    theorem: spec.theorem,
                    part,
                    p: spec.p,
                    h_or_m: spec.h_or_m,
                    e: spec.e,
                    t: spec.t,
                    r: spec.r,
                    k,
                    l,
                    n: big_n.clone(),
                    kq,
                    d,
                    c,
                    mds: false,
                };
                row.mds = row.singleton().equality;
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Err(bad("no (k, l) pairs in the given ranges"));
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BigParamRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_fields().join(","))?;
    }
    Ok(())
}

pub fn write_json<W: Write>(rows: &[BigParamRow], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)
}
