//! JSON construction requests: `{"theorem": "3.1", "params": {...}, "verify": true}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::constructions::{
    find_euclidean_seed, full_field_seed, mu_n_seed, thm31_construct, thm32_construct, thm41_lift, thm42_lift,
    ConstructOptions, Construction, EuclideanSeed, EuclideanSeedJson, Thm31Params, Thm32Params,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, FieldOptions};
use crate::grs::{GrsCodeJson, MdsCheck};
use crate::hull::HullReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "3.1")]
    AffineCosets,
    #[serde(rename = "3.2")]
    TraceCosets,
    #[serde(rename = "4.1")]
    PlainLift,
    #[serde(rename = "4.2")]
    ExtendedLift,
}

impl Theorem {
    pub fn parse(s: &str) -> Result<Theorem> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::InvalidParams(format!("unknown theorem {s:?} (expected 3.1, 3.2, 4.1 or 4.2)")))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Theorem::AffineCosets => "3.1",
            Theorem::TraceCosets => "3.2",
            Theorem::PlainLift => "4.1",
            Theorem::ExtendedLift => "4.2",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstructionRequest {
    pub theorem: Theorem,
    pub params: serde_json::Value,
    #[serde(default = "default_verify")]
    pub verify: bool,
}

fn default_verify() -> bool {
    true
}

/// Where a lift takes its seed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeedSource {
    /// `"full-field"` or `"mu:N"`, built over GF(p^h).
    Named(String),
    Seed(EuclideanSeedJson),
    /// Points only; the multipliers are searched for.
    Points { field: FieldDescriptor, a: Vec<Vec<u64>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftParams {
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub h: Option<u32>,
    pub e: u32,
    pub k: usize,
    pub l: usize,
    pub seed: SeedSource,
}

/// Resolves a seed for a plain (`extended = false`) or extended lift.
pub fn resolve_seed(
    source: &SeedSource,
    p: Option<u64>,
    h: Option<u32>,
    extended: bool,
    opts: FieldOptions,
) -> Result<EuclideanSeed> {
    let named_field = || -> Result<Arc<Field>> {
        match (p, h) {
            (Some(p), Some(h)) => Field::with_options(p, h, None, opts),
            _ => Err(Error::InvalidParams("named seeds need p and h".into())),
        }
    };
    match source {
        SeedSource::Named(name) if name == "full-field" => full_field_seed(&named_field()?),
        SeedSource::Named(name) => {
            let n = name
                .strip_prefix("mu:")
                .and_then(|n| n.parse::<u64>().ok())
                .ok_or_else(|| Error::InvalidParams(format!("unknown seed {name:?} (expected full-field or mu:N)")))?;
            mu_n_seed(&named_field()?, n)
        }
        SeedSource::Seed(json) => EuclideanSeed::from_json(json, opts),
        SeedSource::Points { field, a } => {
            let field = Field::from_descriptor(field, opts)?;
            let pts = a.iter().map(|c| field.element(c)).collect::<Result<Vec<_>>>()?;
            find_euclidean_seed(&field, &pts, extended)?
                .ok_or_else(|| Error::InvalidParams("no Euclidean seed exists on the given points".into()))
        }
    }
}

fn parse_params<T: for<'de> Deserialize<'de>>(v: &serde_json::Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::InvalidParams(e.to_string()))
}

pub fn run_request(req: &ConstructionRequest, opts: FieldOptions) -> Result<Construction> {
    let copts = ConstructOptions { verify: req.verify, field: opts, ..ConstructOptions::default() };
    match req.theorem {
        Theorem::AffineCosets => thm31_construct(&parse_params::<Thm31Params>(&req.params)?, &copts),
        Theorem::TraceCosets => thm32_construct(&parse_params::<Thm32Params>(&req.params)?, &copts),
        Theorem::PlainLift | Theorem::ExtendedLift => {
            let lp: LiftParams = parse_params(&req.params)?;
            let extended = req.theorem == Theorem::ExtendedLift;
            let seed = resolve_seed(&lp.seed, lp.p, lp.h, extended, opts)?;
            if extended {
                thm42_lift(&seed, lp.e, lp.k, lp.l, &copts)
            } else {
                thm41_lift(&seed, lp.e, lp.k, lp.l, &copts)
            }
        }
    }
}

/// Stable output: the code plus whatever was verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionOutput {
    pub theorem: Theorem,
    pub code: GrsCodeJson,
    pub length: usize,
    pub dimension: usize,
    pub e: u32,
    pub l: usize,
    pub verified: bool,
    pub hull: Option<HullReport>,
    pub mds: Option<MdsCheck>,
}

impl ConstructionOutput {
    pub fn new(theorem: Theorem, c: &Construction) -> ConstructionOutput {
        ConstructionOutput {
            theorem,
            code: c.code.to_json(),
            length: c.code.length(),
            dimension: c.code.dimension(),
            e: c.e,
            l: c.l,
            verified: c.hull.is_some(),
            hull: c.hull,
            mds: c.mds,
        }
    }
}
