//! Nonvanishing with multiplicities over commutative rings.
//!
//! Given `f` of total degree `t_1 + ... + t_n` whose coefficient at
//! `x^t` is nonzero, and multisets with `d(S_i) > t_i`, some admissible
//! pair `(s, u)` has `f_u(s) != 0`. With `d(S_i) = t_i + 1` the weighted sum
//! `sum_{s,u} alpha(s,u) f_u(s)` equals the coefficient `c_t`, where
//! `alpha(s,u) = prod_i alpha_i(s_i,u_i)` comes from the per-factor alpha
//! tables. That identity both certifies and locates a witness.

use crate::error::{Error, HypothesisViolation, Result};
use crate::hermite::{alpha_table, AlphaTable};
use crate::multiset::Grid;
use crate::poly::{Degree, MultivarPoly};
use crate::ring::RingValue;

/// A polynomial, a target exponent `t` and a grid satisfying the theorem's
/// hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessProblem {
    f: MultivarPoly,
    t: Vec<u32>,
    grid: Grid,
}

impl WitnessProblem {
    /// Validates every hypothesis; the grid is kept as given.
    pub fn new(f: MultivarPoly, t: Vec<u32>, grid: Grid) -> Result<Self> {
        let n = f.nvars();
        for found in [t.len(), grid.dim()] {
            if found != n {
                return Err(Error::ArityMismatch { expected: n, found });
            }
        }
        if f.ring() != grid.ring() {
            return Err(Error::ring_mismatch(f.ring(), grid.ring()));
        }
        let expected: u64 = t.iter().map(|&k| u64::from(k)).sum();
        let degree = f.total_degree();
        if degree != Degree::Finite(expected) {
            return Err(HypothesisViolation::DegreeMismatch {
                degree: degree.to_string(),
                expected,
            }
            .into());
        }
        if f.coefficient_of(&t)?.is_zero() {
            return Err(HypothesisViolation::TargetCoefficientZero { t }.into());
        }
        for (i, (factor, &ti)) in grid.factors().iter().zip(&t).enumerate() {
            if factor.size() <= u64::from(ti) {
                return Err(HypothesisViolation::MultisetTooSmall {
                    factor: i,
                    size: factor.size(),
                    t: ti,
                }
                .into());
            }
        }
        Ok(WitnessProblem { f, t, grid })
    }

    pub fn poly(&self) -> &MultivarPoly {
        &self.f
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// `d(S_i) = t_i + 1` for every factor.
    pub fn is_normalized(&self) -> bool {
        self.grid
            .factors()
            .iter()
            .zip(&self.t)
            .all(|(s, &ti)| s.size() == u64::from(ti) + 1)
    }

    /// The same problem with each multiset cut down to size `t_i + 1`.
    pub fn normalized(&self) -> Result<WitnessProblem> {
        if self.is_normalized() {
            return Ok(self.clone());
        }
        let factors = self
            .grid
            .factors()
            .iter()
            .zip(&self.t)
            .map(|(s, &ti)| s.truncated(u64::from(ti) + 1))
            .collect::<Result<Vec<_>>>()?;
        Ok(WitnessProblem {
            f: self.f.clone(),
            t: self.t.clone(),
            grid: Grid::new(factors)?,
        })
    }
}

/// Validates the hypotheses and trims the grid so that `d(S_i) = t_i + 1`.
pub fn normalize_problem(f: MultivarPoly, grid: Grid, t: Vec<u32>) -> Result<WitnessProblem> {
    WitnessProblem::new(f, t, grid)?.normalized()
}

/// An admissible pair `(s, u)` with `f_u(s) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: Vec<RingValue>,
    pub orders: Vec<u32>,
    pub value: RingValue,
}

impl Witness {
    /// Re-derives `f_u(s)` through the direct expansion formula and checks
    /// admissibility against the grid.
    pub fn verify(&self, f: &MultivarPoly, grid: &Grid) -> Result<bool> {
        if self.point.len() != grid.dim() || self.orders.len() != grid.dim() {
            return Ok(false);
        }
        for ((s, &u), factor) in self.point.iter().zip(&self.orders).zip(grid.factors()) {
            match factor.multiplicity(s) {
                Some(m) if u < m => {}
                _ => return Ok(false),
            }
        }
        let value = f.single_expansion_coeff(&self.point, &self.orders)?;
        Ok(!value.is_zero() && value == self.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessMode {
    /// Locate the first pair contributing to the certificate sum.
    Algebraic,
    /// Scan every admissible pair of the untrimmed grid.
    Exhaustive,
}

struct Certificate {
    sum: RingValue,
    first: Option<Witness>,
}

fn scan_certificate(problem: &WitnessProblem) -> Result<Certificate> {
    debug_assert!(problem.is_normalized());
    let tables: Vec<AlphaTable> = problem
        .grid
        .factors()
        .iter()
        .map(alpha_table)
        .collect::<Result<_>>()?;
    let ring = problem.f.ring();
    let mut sum = ring.zero();
    let mut first = None;
    for pt in problem.grid.points() {
        let expansion = problem.f.expand_at(&pt.point, &pt.mults)?;
        for (u, value) in &expansion.coeffs {
            if value.is_zero() {
                continue;
            }
            let mut alpha = ring.one();
            for (i, table) in tables.iter().enumerate() {
                alpha *= table.alpha(pt.indices[i], u[i]);
            }
            let term = &alpha * value;
            if term.is_zero() {
                continue;
            }
            sum += &term;
            if first.is_none() {
                first = Some(Witness {
                    point: pt.point.clone(),
                    orders: u.clone(),
                    value: value.clone(),
                });
            }
        }
    }
    Ok(Certificate { sum, first })
}

/// `sum_{s in S} sum_{u < m(s)} alpha(s,u) f_u(s)` over the normalized grid.
/// Equals the coefficient of `x^t` in `f`.
pub fn certificate_sum(problem: &WitnessProblem) -> Result<RingValue> {
    Ok(scan_certificate(&problem.normalized()?)?.sum)
}

pub fn find_witness(problem: &WitnessProblem, mode: WitnessMode) -> Result<Witness> {
    match mode {
        WitnessMode::Algebraic => {
            let normalized = problem.normalized()?;
            let cert = scan_certificate(&normalized)?;
            let target = problem.f.coefficient_of(&problem.t)?;
            if cert.sum != target {
                return Err(Error::InternalContradiction(format!(
                    "certificate sum {} differs from the target coefficient {target}",
                    cert.sum
                )));
            }
            cert.first.ok_or_else(|| {
                Error::InternalContradiction(
                    "nonzero certificate sum without a nonzero term".into(),
                )
            })
        }
        WitnessMode::Exhaustive => {
            for pt in problem.grid.points() {
                let expansion = problem.f.expand_at(&pt.point, &pt.mults)?;
                if let Some((u, v)) = expansion.coeffs.iter().find(|(_, v)| !v.is_zero()) {
                    return Ok(Witness {
                        point: pt.point.clone(),
                        orders: u.clone(),
                        value: v.clone(),
                    });
                }
            }
            Err(Error::InternalContradiction(
                "no admissible pair has a nonzero expansion coefficient".into(),
            ))
        }
    }
}
