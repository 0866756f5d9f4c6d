//! Random instances for property checks and randomized verification.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::multiset::{Grid, Multiset};
use crate::nonvanishing::WitnessProblem;
use crate::poly::{ExponentBox, MultivarPoly};
use crate::ring::{RingSpec, RingValue};

/// A small element: integers in `-5..=5`, rationals with denominators up
/// to 3, uniform residues in finite rings.
pub fn random_value<R: Rng + ?Sized>(rng: &mut R, ring: &RingSpec) -> RingValue {
    match ring {
        RingSpec::Integers => ring.from_integer(rng.gen_range(-5..=5)),
        RingSpec::Rationals => {
            let r = BigRational::new(
                BigInt::from(rng.gen_range(-5..=5)),
                BigInt::from(rng.gen_range(1..=3)),
            );
            ring.parse_value(&r.to_string()).expect("valid fraction")
        }
        _ => {
            let n = ring.small_modulus().expect("finite ring");
            ring.from_integer(rng.gen_range(0..n))
        }
    }
}

pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, ring: &RingSpec) -> RingValue {
    loop {
        let v = random_value(rng, ring);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Up to `max_len` distinct elements with pairwise unit differences,
/// greedily drawn; always at least one.
pub fn random_unit_difference_set<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingSpec,
    max_len: usize,
) -> Vec<RingValue> {
    let mut chosen: Vec<RingValue> = Vec::new();
    for _ in 0..8 * max_len.max(1) {
        if chosen.len() >= max_len.max(1) {
            break;
        }
        let v = random_value(rng, ring);
        if chosen.iter().all(|c| (c - &v).is_unit()) {
            chosen.push(v);
        }
    }
    chosen
}

pub fn random_multiset<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingSpec,
    max_len: usize,
    max_mult: u32,
) -> Multiset {
    let len = rng.gen_range(1..=max_len.max(1));
    let entries = random_unit_difference_set(rng, ring, len)
        .into_iter()
        .map(|v| (v, rng.gen_range(1..=max_mult.max(1))))
        .collect();
    Multiset::new(ring, entries).expect("unit differences by construction")
}

/// Up to `nterms` random terms with each exponent of total degree at most
/// `max_degree`.
pub fn random_poly<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingSpec,
    nvars: usize,
    max_degree: u32,
    nterms: usize,
) -> MultivarPoly {
    let mut p = MultivarPoly::zero(ring, nvars);
    for _ in 0..nterms {
        let mut budget = rng.gen_range(0..=max_degree);
        let mut exp = vec![0u32; nvars];
        let mut order: Vec<usize> = (0..nvars).collect();
        order.shuffle(rng);
        for &i in &order {
            let e = rng.gen_range(0..=budget);
            exp[i] = e;
            budget -= e;
        }
        p = &p + &MultivarPoly::monomial(random_value(rng, ring), exp);
    }
    p
}

/// A random polynomial with every exponent inside `bounds` (exclusive).
pub fn random_poly_in_box<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingSpec,
    bounds: &[u32],
) -> MultivarPoly {
    let mut terms = Vec::new();
    for e in ExponentBox::new(bounds) {
        if rng.gen_bool(0.6) {
            terms.push((e, random_value(rng, ring)));
        }
    }
    MultivarPoly::from_terms(ring, bounds.len(), terms).expect("arity matches")
}

/// A nonvanishing problem: `n <= max_vars`, multiplicities at most 3, and
/// `sum t_i <= max_t_sum`, with `f` of degree `sum t_i` and a nonzero
/// coefficient at `x^t`. Grids may be larger than `t + 1`.
pub fn random_witness_problem<R: Rng + ?Sized>(
    rng: &mut R,
    ring: &RingSpec,
    max_vars: usize,
    max_t_sum: u32,
) -> Result<WitnessProblem> {
    let n = rng.gen_range(1..=max_vars.max(1));
    let factors: Vec<Multiset> = (0..n).map(|_| random_multiset(rng, ring, 3, 3)).collect();
    let mut t: Vec<u32> = factors
        .iter()
        .map(|f| rng.gen_range(0..f.size()) as u32)
        .collect();
    while t.iter().sum::<u32>() > max_t_sum {
        let i = rng.gen_range(0..n);
        t[i] = t[i].saturating_sub(1);
    }
    let deg: u32 = t.iter().sum();
    let nterms = rng.gen_range(0..=6);
    let mut f = random_poly(rng, ring, n, deg, nterms);
    let current = f.coefficient_of(&t)?;
    f = &f - &MultivarPoly::monomial(current, t.clone());
    f = &f + &MultivarPoly::monomial(random_nonzero(rng, ring), t.clone());
    WitnessProblem::new(f, t, Grid::new(factors)?)
}
