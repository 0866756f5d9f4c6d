//! Multisets `(S, m)` with the unit-difference property, and grids
//! `S_1 x ... x S_n` built from them.

use crate::error::{Error, HypothesisViolation, Result};
use crate::poly::{ExponentBox, MultivarPoly};
use crate::ring::{RingSpec, RingValue};

/// A finite multiset of ring elements whose pairwise differences are
/// units. Entry order is the construction order and is significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiset {
    ring: RingSpec,
    entries: Vec<(RingValue, u32)>,
}

impl Multiset {
    pub fn new(ring: &RingSpec, entries: Vec<(RingValue, u32)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidMultiset(
                "a multiset needs at least one element".into(),
            ));
        }
        for (i, (v, m)) in entries.iter().enumerate() {
            if v.ring() != ring {
                return Err(Error::ring_mismatch(ring, v.ring()));
            }
            if *m == 0 {
                return Err(Error::InvalidMultiset(format!(
                    "element {v} has multiplicity 0"
                )));
            }
            if entries[..i].iter().any(|(w, _)| w == v) {
                return Err(Error::InvalidMultiset(format!("element {v} is repeated")));
            }
        }
        let elements: Vec<RingValue> = entries.iter().map(|(v, _)| v.clone()).collect();
        let pairs = check_unit_differences(&elements);
        if !pairs.is_empty() {
            return Err(HypothesisViolation::NonUnitDifference {
                pairs: pairs
                    .iter()
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .collect(),
            }
            .into());
        }
        Ok(Multiset {
            ring: ring.clone(),
            entries,
        })
    }

    /// Every element with multiplicity one.
    pub fn plain(ring: &RingSpec, elements: Vec<RingValue>) -> Result<Self> {
        Multiset::new(ring, elements.into_iter().map(|v| (v, 1)).collect())
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn entries(&self) -> &[(RingValue, u32)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `d(S)`, the sum of multiplicities.
    pub fn size(&self) -> u64 {
        self.entries.iter().map(|(_, m)| u64::from(*m)).sum()
    }

    pub fn multiplicity(&self, value: &RingValue) -> Option<u32> {
        self.position(value).map(|i| self.entries[i].1)
    }

    pub fn position(&self, value: &RingValue) -> Option<usize> {
        self.entries.iter().position(|(v, _)| v == value)
    }

    pub fn is_plain(&self) -> bool {
        self.entries.iter().all(|(_, m)| *m == 1)
    }

    /// Keeps the first `size` units of multiplicity, dropping from the end
    /// of the entry order: the last multiplicity shrinks before its element
    /// is removed.
    pub fn truncated(&self, size: u64) -> Result<Multiset> {
        if size == 0 || size > self.size() {
            return Err(Error::InvalidArgument(format!(
                "cannot truncate a multiset of size {} to {size}",
                self.size()
            )));
        }
        let mut remaining = size;
        let mut entries = Vec::new();
        for (v, m) in &self.entries {
            if remaining == 0 {
                break;
            }
            let keep = u64::from(*m).min(remaining);
            entries.push((v.clone(), keep as u32));
            remaining -= keep;
        }
        Ok(Multiset {
            ring: self.ring.clone(),
            entries,
        })
    }

    /// `prod_s (x_var - s)^m(s)` as a polynomial in `nvars` variables.
    pub fn vanishing_poly(&self, var: usize, nvars: usize) -> Result<MultivarPoly> {
        let mut acc = MultivarPoly::constant(self.ring.one(), nvars);
        for (s, m) in &self.entries {
            let lin = MultivarPoly::linear(s, nvars, var)?;
            acc = &acc * &lin.pow(*m);
        }
        Ok(acc)
    }
}

/// Every pair of distinct elements whose difference is not a unit, in
/// input order `(earlier, later)`. Equal elements are not compared.
pub fn check_unit_differences(elements: &[RingValue]) -> Vec<(RingValue, RingValue)> {
    let mut bad = Vec::new();
    for (i, a) in elements.iter().enumerate() {
        for b in &elements[i + 1..] {
            if a != b && !(a - b).is_unit() {
                bad.push((a.clone(), b.clone()));
            }
        }
    }
    bad
}

/// `S = S_1 x ... x S_n` over a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    factors: Vec<Multiset>,
}

/// A support point of a grid with its multiplicity vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoint {
    /// Entry index of each coordinate within its factor.
    pub indices: Vec<usize>,
    pub point: Vec<RingValue>,
    pub mults: Vec<u32>,
}

impl GridPoint {
    /// `|m(s)|`.
    pub fn mult_sum(&self) -> u64 {
        self.mults.iter().map(|&m| u64::from(m)).sum()
    }

    /// Every `u < m(s)` in lexicographic order.
    pub fn orders(&self) -> ExponentBox {
        ExponentBox::new(&self.mults)
    }
}

impl Grid {
    pub fn new(factors: Vec<Multiset>) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::InvalidArgument("a grid needs at least one factor".into()))?;
        if let Some(f) = factors.iter().find(|f| f.ring() != first.ring()) {
            return Err(Error::ring_mismatch(first.ring(), f.ring()));
        }
        Ok(Grid { factors })
    }

    pub fn ring(&self) -> &RingSpec {
        self.factors[0].ring()
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Multiset] {
        &self.factors
    }

    pub fn num_points(&self) -> usize {
        self.factors.iter().map(Multiset::len).product()
    }

    /// Support points in lexicographic order over factor entry order.
    pub fn points(&self) -> GridPoints<'_> {
        GridPoints {
            grid: self,
            next: Some(vec![0; self.factors.len()]),
        }
    }

    pub fn point_at(&self, indices: &[usize]) -> GridPoint {
        let (point, mults) = indices
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f.entries[i].clone())
            .unzip();
        GridPoint {
            indices: indices.to_vec(),
            point,
            mults,
        }
    }
}

pub struct GridPoints<'a> {
    grid: &'a Grid,
    next: Option<Vec<usize>>,
}

impl Iterator for GridPoints<'_> {
    type Item = GridPoint;

    fn next(&mut self) -> Option<GridPoint> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.grid.factors[i].len() {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(self.grid.point_at(&current))
    }
}
