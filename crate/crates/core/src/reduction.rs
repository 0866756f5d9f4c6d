//! Reduction modulo the grid basis `g_i(x_i) = prod_{s in S_i} (x_i - s)`.
//!
//! Any occurrence of `x_i^{|S_i|}` is rewritten through `g_i` until no
//! term is divisible by a leading monomial. The remainder is independent of
//! the rewriting order, which [`groebner_remainder_stability`] checks.

use crate::error::{Error, HypothesisViolation, Result};
use crate::multiset::Multiset;
use crate::poly::{Exponent, MultivarPoly};

/// Which reducible term to rewrite next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionStrategy {
    /// Graded-lex largest reducible term, smallest eligible variable.
    GradedLex,
    /// Pure-lex largest reducible term, smallest eligible variable.
    Lex,
    /// Graded-lex smallest reducible term, smallest eligible variable.
    GradedLexAscending,
    /// Graded-lex largest reducible term, largest eligible variable.
    LastVariableFirst,
}

impl ReductionStrategy {
    pub const ALL: [ReductionStrategy; 4] = [
        ReductionStrategy::GradedLex,
        ReductionStrategy::Lex,
        ReductionStrategy::GradedLexAscending,
        ReductionStrategy::LastVariableFirst,
    ];
}

/// `f = remainder + sum_i quotients[i] * g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub remainder: MultivarPoly,
    pub quotients: Vec<MultivarPoly>,
}

/// The grid basis `g_1(x_1), ..., g_n(x_n)` for plain sets.
pub fn grid_basis(sets: &[Multiset]) -> Result<Vec<MultivarPoly>> {
    let n = sets.len();
    sets.iter()
        .enumerate()
        .map(|(i, s)| s.vanishing_poly(i, n))
        .collect()
}

fn check_sets(f: &MultivarPoly, sets: &[Multiset]) -> Result<()> {
    if sets.len() != f.nvars() {
        return Err(Error::ArityMismatch {
            expected: f.nvars(),
            found: sets.len(),
        });
    }
    for (i, s) in sets.iter().enumerate() {
        if s.ring() != f.ring() {
            return Err(Error::ring_mismatch(f.ring(), s.ring()));
        }
        if !s.is_plain() {
            return Err(HypothesisViolation::MultiplicitiesUnsupported { factor: i }.into());
        }
    }
    Ok(())
}

pub fn reduce(f: &MultivarPoly, sets: &[Multiset]) -> Result<ReductionResult> {
    reduce_with(f, sets, ReductionStrategy::GradedLex)
}

pub fn reduce_with(
    f: &MultivarPoly,
    sets: &[Multiset],
    strategy: ReductionStrategy,
) -> Result<ReductionResult> {
    check_sets(f, sets)?;
    let n = f.nvars();
    let basis = grid_basis(sets)?;
    let degs: Vec<u32> = sets.iter().map(|s| s.len() as u32).collect();
    let mut rem = f.clone();
    let mut quotients = vec![MultivarPoly::zero(f.ring(), n); n];
    while let Some((exp, coeff, var)) = pick(&rem, &degs, strategy) {
        let mut q = exp.into_vec();
        q[var] -= degs[var];
        // c*x^w -> c*x^w - (c*x^(w - d_i e_i)) * g_i
        let step = MultivarPoly::monomial(coeff, q);
        quotients[var] = &quotients[var] + &step;
        rem = &rem - &(&step * &basis[var]);
    }

    let deg_f = f.total_degree();
    for (i, (h, &d)) in quotients.iter().zip(&degs).enumerate() {
        if !h.total_degree().at_most_shifted(deg_f, u64::from(d)) {
            return Err(Error::InternalContradiction(format!(
                "quotient {i} has degree {} above deg f - |S_i| = {deg_f} - {d}",
                h.total_degree()
            )));
        }
    }
    Ok(ReductionResult {
        remainder: rem,
        quotients,
    })
}

fn eligible_var(exp: &Exponent, degs: &[u32], last: bool) -> Option<usize> {
    let mut vars = (0..degs.len()).filter(|&i| exp[i] >= degs[i]);
    if last {
        vars.next_back()
    } else {
        vars.next()
    }
}

fn pick(
    p: &MultivarPoly,
    degs: &[u32],
    strategy: ReductionStrategy,
) -> Option<(Exponent, crate::ring::RingValue, usize)> {
    let found = match strategy {
        ReductionStrategy::GradedLex => p
            .terms()
            .rev()
            .find_map(|(e, c)| eligible_var(e, degs, false).map(|v| (e, c, v))),
        ReductionStrategy::LastVariableFirst => p
            .terms()
            .rev()
            .find_map(|(e, c)| eligible_var(e, degs, true).map(|v| (e, c, v))),
        ReductionStrategy::GradedLexAscending => p
            .terms()
            .find_map(|(e, c)| eligible_var(e, degs, false).map(|v| (e, c, v))),
        ReductionStrategy::Lex => p
            .terms()
            .filter_map(|(e, c)| eligible_var(e, degs, false).map(|v| (e, c, v)))
            .max_by(|a, b| a.0[..].cmp(&b.0[..])),
    };
    found.map(|(e, c, v)| (e.clone(), c.clone(), v))
}

/// Membership in the vanishing ideal of the grid: the remainder is zero.
pub fn in_ideal(f: &MultivarPoly, sets: &[Multiset]) -> Result<bool> {
    Ok(reduce(f, sets)?.remainder.is_zero())
}

/// True iff every strategy yields the same remainder.
pub fn groebner_remainder_stability(
    f: &MultivarPoly,
    sets: &[Multiset],
    strategies: &[ReductionStrategy],
) -> Result<bool> {
    let mut first: Option<MultivarPoly> = None;
    for &s in strategies {
        let r = reduce_with(f, sets, s)?.remainder;
        match &first {
            None => first = Some(r),
            Some(r0) if *r0 != r => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}
