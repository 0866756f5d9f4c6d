//! JSON forms of the domain objects.
//!
//! Ring elements are written as strings in the ring's canonical text form
//! and read from strings or JSON integers. A multiset is either an array of
//! plain elements, an array of `{"value", "mult"}` entries, or an object
//! with an `"elements"` field holding one of those. A grid is an array of
//! multisets.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::applications::{
    CoverInstance, CoverSearchReport, CoveringCertificate, CubeCoverReport, Hyperplane,
    MultCoverReport,
};
use crate::error::{Error, Result};
use crate::hermite::InterpolationData;
use crate::multiset::{Grid, Multiset};
use crate::nonvanishing::Witness;
use crate::poly::{ExpansionTable, MultivarPoly};
use crate::reduction::ReductionResult;
use crate::ring::{RingSpec, RingValue};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Text(String),
    Int(i64),
}

impl ValueJson {
    pub fn to_value(&self, ring: &RingSpec) -> Result<RingValue> {
        match self {
            ValueJson::Text(s) => ring.parse_value(s),
            ValueJson::Int(v) => Ok(ring.from_integer(*v)),
        }
    }
}

impl From<&RingValue> for ValueJson {
    fn from(v: &RingValue) -> Self {
        ValueJson::Text(v.to_string())
    }
}

fn check_ring(ring: &RingSpec, declared: Option<&str>) -> Result<()> {
    if let Some(text) = declared {
        let found: RingSpec = text.parse()?;
        if &found != ring {
            return Err(Error::ring_mismatch(ring, found));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: ValueJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &MultivarPoly) -> Self {
        PolyJson {
            ring: Some(p.ring().to_string()),
            nvars: p.nvars(),
            terms: p
                .terms()
                .rev()
                .map(|(e, c)| TermJson {
                    exp: e.to_vec(),
                    coeff: c.into(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self, ring: &RingSpec) -> Result<MultivarPoly> {
        check_ring(ring, self.ring.as_deref())?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), t.coeff.to_value(ring)?)))
            .collect::<Result<Vec<_>>>()?;
        MultivarPoly::from_terms(ring, self.nvars, terms)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryJson {
    pub value: ValueJson,
    #[serde(default = "one")]
    pub mult: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementJson {
    Entry(EntryJson),
    Plain(ValueJson),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultisetJson {
    Elements(Vec<ElementJson>),
    Object {
        #[serde(default)]
        ring: Option<String>,
        elements: Vec<ElementJson>,
    },
}

impl MultisetJson {
    pub fn from_multiset(ms: &Multiset) -> Self {
        MultisetJson::Object {
            ring: Some(ms.ring().to_string()),
            elements: ms
                .entries()
                .iter()
                .map(|(v, m)| {
                    ElementJson::Entry(EntryJson {
                        value: v.into(),
                        mult: *m,
                    })
                })
                .collect(),
        }
    }

    pub fn to_multiset(&self, ring: &RingSpec) -> Result<Multiset> {
        let elements = match self {
            MultisetJson::Elements(e) => e,
            MultisetJson::Object {
                ring: declared,
                elements,
            } => {
                check_ring(ring, declared.as_deref())?;
                elements
            }
        };
        let entries = elements
            .iter()
            .map(|e| match e {
                ElementJson::Entry(EntryJson { value, mult }) => Ok((value.to_value(ring)?, *mult)),
                ElementJson::Plain(v) => Ok((v.to_value(ring)?, 1)),
            })
            .collect::<Result<Vec<_>>>()?;
        Multiset::new(ring, entries)
    }
}

pub fn parse_multiset(text: &str, ring: &RingSpec) -> Result<Multiset> {
    serde_json::from_str::<MultisetJson>(text)?.to_multiset(ring)
}

pub fn parse_grid(text: &str, ring: &RingSpec) -> Result<Grid> {
    grid_from_json(&serde_json::from_str::<Vec<MultisetJson>>(text)?, ring)
}

pub fn grid_from_json(factors: &[MultisetJson], ring: &RingSpec) -> Result<Grid> {
    Grid::new(
        factors
            .iter()
            .map(|f| f.to_multiset(ring))
            .collect::<Result<_>>()?,
    )
}

pub fn grid_to_json(grid: &Grid) -> Value {
    serde_json::to_value(
        grid.factors()
            .iter()
            .map(MultisetJson::from_multiset)
            .collect::<Vec<_>>(),
    )
    .expect("plain data")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlaneJson {
    pub a: Vec<ValueJson>,
    pub b: ValueJson,
}

impl PlaneJson {
    pub fn from_plane(h: &Hyperplane) -> Self {
        PlaneJson {
            a: h.coeffs.iter().map(Into::into).collect(),
            b: (&h.offset).into(),
        }
    }

    pub fn to_plane(&self, ring: &RingSpec) -> Result<Hyperplane> {
        let a = self
            .a
            .iter()
            .map(|v| v.to_value(ring))
            .collect::<Result<_>>()?;
        Hyperplane::new(a, self.b.to_value(ring)?)
    }
}

pub fn parse_planes(text: &str, ring: &RingSpec) -> Result<Vec<Hyperplane>> {
    serde_json::from_str::<Vec<PlaneJson>>(text)?
        .iter()
        .map(|p| p.to_plane(ring))
        .collect()
}

pub fn planes_to_json(planes: &[Hyperplane]) -> Value {
    serde_json::to_value(planes.iter().map(PlaneJson::from_plane).collect::<Vec<_>>())
        .expect("plain data")
}

/// `{"grid": [...], "planes": [...]}` for multiplicity covers, or
/// `{"n": .., "planes": [...]}` for cube covers.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceJson {
    #[serde(default)]
    pub ring: Option<String>,
    #[serde(default)]
    pub grid: Option<Vec<MultisetJson>>,
    #[serde(default)]
    pub n: Option<usize>,
    pub planes: Vec<PlaneJson>,
}

impl InstanceJson {
    /// The ring declared in the file, if any.
    pub fn declared_ring(&self) -> Result<Option<RingSpec>> {
        self.ring.as_deref().map(str::parse).transpose()
    }

    pub fn planes(&self, ring: &RingSpec) -> Result<Vec<Hyperplane>> {
        check_ring(ring, self.ring.as_deref())?;
        self.planes.iter().map(|p| p.to_plane(ring)).collect()
    }

    pub fn to_cover_instance(&self, ring: &RingSpec) -> Result<CoverInstance> {
        let grid = self
            .grid
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("instance has no \"grid\"".into()))?;
        CoverInstance::new(grid_from_json(grid, ring)?, self.planes(ring)?)
    }

    /// Cube dimension: `"n"` if present, else the arity of the first plane.
    pub fn cube_dim(&self) -> Result<usize> {
        self.n
            .or_else(|| self.planes.first().map(|p| p.a.len()))
            .ok_or_else(|| {
                Error::InvalidArgument("cube instance needs \"n\" or at least one plane".into())
            })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConditionJson {
    pub s: ValueJson,
    pub u: u32,
    pub y: ValueJson,
}

/// `{"multiset": ..., "values": [{"s", "u", "y"}, ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InterpolationJson {
    pub multiset: MultisetJson,
    pub values: Vec<ConditionJson>,
}

impl InterpolationJson {
    pub fn to_data(&self, ring: &RingSpec) -> Result<InterpolationData> {
        let ms = self.multiset.to_multiset(ring)?;
        let triples = self
            .values
            .iter()
            .map(|c| Ok((c.s.to_value(ring)?, c.u, c.y.to_value(ring)?)))
            .collect::<Result<Vec<_>>>()?;
        InterpolationData::from_triples(ms, triples)
    }
}

pub fn values_to_json(values: &[RingValue]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

/// Keys are the orders `u` joined by commas.
pub fn expansion_to_json(table: &ExpansionTable) -> Value {
    let mut out = Map::new();
    for (u, c) in &table.coeffs {
        let key = u.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        out.insert(key, Value::String(c.to_string()));
    }
    Value::Object(out)
}

pub fn poly_to_json(p: &MultivarPoly) -> Value {
    serde_json::to_value(PolyJson::from_poly(p)).expect("plain data")
}

pub fn reduction_to_json(r: &ReductionResult) -> Value {
    json!({
        "remainder": r.remainder.to_string(),
        "quotients": r.quotients.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "remainder_terms": poly_to_json(&r.remainder),
    })
}

pub fn witness_to_json(w: &Witness) -> Value {
    json!({
        "point": values_to_json(&w.point),
        "orders": w.orders,
        "value": w.value.to_string(),
    })
}

pub fn mult_cover_to_json(r: &MultCoverReport) -> Value {
    json!({
        "valid_cover": r.valid_cover,
        "bound_holds": r.bound_holds,
        "k": r.k,
        "bound": r.bound,
        "origin_coverage": r.origin_coverage,
        "undercovered": r.undercovered.as_deref().map(values_to_json),
        "theorem_violation": r.theorem_violation,
    })
}

pub fn cube_cover_to_json(r: &CubeCoverReport) -> Value {
    json!({
        "valid": r.valid,
        "covers_nonzero_vertices": r.covers_nonzero_vertices,
        "b_product_nonzero": r.b_product_nonzero,
        "m": r.m,
        "n": r.n,
        "bound_holds": r.bound_holds,
        "uncovered": r.uncovered.iter().map(|v| values_to_json(v)).collect::<Vec<_>>(),
        "theorem_violation": r.theorem_violation,
    })
}

pub fn cover_search_to_json(r: &CoverSearchReport) -> Value {
    json!({
        "minimum": r.minimum,
        "planes": planes_to_json(&r.planes),
        "examined": r.examined,
        "truncated": r.truncated,
        "violation": r.violation.as_deref().map(planes_to_json),
    })
}

pub fn certificate_to_json(c: &CoveringCertificate) -> Value {
    json!({
        "p": c.p.to_string(),
        "plane_product": c.plane_product.to_string(),
        "refutation": c.refutation.to_string(),
        "p_at_origin": c.p_at_origin.to_string(),
        "plane_product_at_origin": c.plane_product_at_origin.to_string(),
        "witness": witness_to_json(&c.witness),
        "p_coeff": c.p_coeff.to_string(),
        "plane_coeff": c.plane_coeff.to_string(),
        "coverage": c.coverage,
        "required": c.required,
    })
}
