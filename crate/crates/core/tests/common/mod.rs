//! Independent reference computations shared by the integration tests.

#![allow(dead_code)]

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nullstellensatz::applications::Hyperplane;
use nullstellensatz::{binomial, Multiset, MultivarPoly, RingSpec, RingValue};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn test_rings() -> Vec<RingSpec> {
    vec![
        RingSpec::integers(),
        RingSpec::rationals(),
        RingSpec::prime_field(7).unwrap(),
        RingSpec::residue_ring(12).unwrap(),
        RingSpec::residue_ring(4).unwrap(),
    ]
}

/// `f(y + s)` built by multiplying out `(y_i + s_i)` factor by factor.
pub fn shifted_by_products(f: &MultivarPoly, s: &[RingValue]) -> MultivarPoly {
    let ring = f.ring();
    let n = f.nvars();
    let lin: Vec<MultivarPoly> = (0..n)
        .map(|i| {
            &MultivarPoly::variable(ring, n, i).unwrap() + &MultivarPoly::constant(s[i].clone(), n)
        })
        .collect();
    let mut out = MultivarPoly::zero(ring, n);
    for (e, c) in f.terms() {
        let mut term = MultivarPoly::constant(c.clone(), n);
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                term = &term * &lin[i];
            }
        }
        out = &out + &term;
    }
    out
}

/// `f_u(s)` read off the product expansion.
pub fn expansion_oracle(f: &MultivarPoly, s: &[RingValue], u: &[u32]) -> RingValue {
    shifted_by_products(f, s).coefficient_of(u).unwrap()
}

/// Every support point of the grid spanned by `sets`.
pub fn grid_points(sets: &[Vec<RingValue>]) -> Vec<Vec<RingValue>> {
    let mut out = vec![Vec::new()];
    for set in sets {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                set.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    out
}

pub fn vanishes_on_grid(f: &MultivarPoly, sets: &[Vec<RingValue>]) -> bool {
    grid_points(sets)
        .iter()
        .all(|p| f.evaluate(p).unwrap().is_zero())
}

/// Coefficient vectors, lowest degree first.
fn poly_mul_dense(a: &[RingValue], b: &[RingValue], zero: &RingValue) -> Vec<RingValue> {
    let mut out = vec![zero.clone(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Long division of a univariate `f` by the monic `prod (x - s)^m(s)`.
pub fn divides_oracle(f: &MultivarPoly, ms: &Multiset) -> bool {
    let ring = ms.ring();
    let zero = ring.zero();
    let mut divisor = vec![ring.one()];
    for (s, m) in ms.entries() {
        for _ in 0..*m {
            divisor = poly_mul_dense(&divisor, &[-s, ring.one()], &zero);
        }
    }
    let deg = f.terms().map(|(e, _)| e[0] as usize).max();
    let Some(deg) = deg else { return true };
    let mut rem = vec![zero.clone(); deg + 1];
    for (e, c) in f.terms() {
        rem[e[0] as usize] = c.clone();
    }
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = rem.pop().unwrap();
        let shift = rem.len() - dd;
        for (k, d) in divisor[..dd].iter().enumerate() {
            rem[shift + k] = &rem[shift + k] - &(&lead * d);
        }
    }
    rem.iter().all(RingValue::is_zero)
}

pub fn to_rational(v: &RingValue) -> BigRational {
    BigRational::from_str(&v.to_string()).unwrap()
}

/// Coefficients `c_0..c_{d-1}` of the polynomial over `Q` with prescribed
/// `f_u(s)`, by Gaussian elimination on the confluent Vandermonde system.
pub fn hermite_oracle_q(conditions: &[(BigRational, u32, BigRational)]) -> Vec<BigRational> {
    let d = conditions.len();
    let mut rows: Vec<Vec<BigRational>> = conditions
        .iter()
        .map(|(s, u, y)| {
            let mut row: Vec<BigRational> = (0..d as u32)
                .map(|k| {
                    if k < *u {
                        BigRational::zero()
                    } else {
                        BigRational::from_integer(binomial(k, *u))
                            * num_traits::pow(s.clone(), (k - u) as usize)
                    }
                })
                .collect();
            row.push(y.clone());
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d)
            .find(|&r| !rows[r][col].is_zero())
            .expect("nonsingular system");
        rows.swap(col, pivot);
        let inv = BigRational::one() / rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (x, p) in rows[r].iter_mut().zip(pivot_row).skip(col) {
                    *x = x.clone() - factor.clone() * p;
                }
            }
        }
    }
    rows.into_iter().map(|r| r[d].clone()).collect()
}

pub fn rational_poly(coeffs: &[BigRational]) -> MultivarPoly {
    let q = RingSpec::rationals();
    MultivarPoly::from_terms(
        &q,
        1,
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (vec![k as u32], q.parse_value(&c.to_string()).unwrap())),
    )
    .unwrap()
}

pub fn int(ring: &RingSpec, v: i64) -> RingValue {
    ring.from_integer(BigInt::from(v))
}

/// Whether any permutation of `b` has the Snevily property, by trying all.
pub fn snevily_brute(p: u64, a: &[u64], b: &[u64]) -> bool {
    fn ok(p: u64, a: &[u64], b: &[u64], perm: &[usize]) -> bool {
        for i in 0..a.len() {
            for j in 0..a.len() {
                if i != j
                    && (a[i] + b[perm[i]]) % p == (a[j] + b[perm[j]]) % p
                    && !(a[i] == a[j] && b[perm[i]] == b[perm[j]])
                {
                    return false;
                }
            }
        }
        true
    }
    fn rec(p: u64, a: &[u64], b: &[u64], perm: &mut Vec<usize>, k: usize) -> bool {
        if k == perm.len() {
            return ok(p, a, b, perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if rec(p, a, b, perm, k + 1) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    let a: Vec<u64> = a.iter().map(|x| x % p).collect();
    let b: Vec<u64> = b.iter().map(|x| x % p).collect();
    let mut perm: Vec<usize> = (0..a.len()).collect();
    rec(p, &a, &b, &mut perm, 0)
}

/// `(a, x) - b` evaluated directly.
pub fn plane_value(h: &Hyperplane, x: &[RingValue]) -> RingValue {
    let mut acc = -&h.offset;
    for (a, v) in h.coeffs.iter().zip(x) {
        acc = &acc + &(a * v);
    }
    acc
}

/// Smallest family from `pool` (with repetition) covering all nonzero 0/1
/// vertices with nonzero offset product, trying sizes `0..=max`.
pub fn brute_min_cube_cover(
    ring: &RingSpec,
    n: usize,
    pool: &[Hyperplane],
    max: usize,
) -> Option<usize> {
    let vertices: Vec<Vec<RingValue>> = (1u32..1 << n)
        .map(|m| {
            (0..n)
                .map(|i| {
                    if m >> i & 1 == 1 {
                        ring.one()
                    } else {
                        ring.zero()
                    }
                })
                .collect()
        })
        .collect();
    fn families(
        pool_len: usize,
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..pool_len {
            cur.push(i);
            families(pool_len, size, i, cur, out);
            cur.pop();
        }
    }
    for size in 0..=max {
        let mut all = Vec::new();
        families(pool.len(), size, 0, &mut Vec::new(), &mut all);
        for fam in all {
            let covers = vertices
                .iter()
                .all(|v| fam.iter().any(|&i| plane_value(&pool[i], v).is_zero()));
            let prod = fam
                .iter()
                .fold(ring.one(), |acc, &i| &acc * &pool[i].offset);
            if covers && !prod.is_zero() {
                return Some(size);
            }
        }
    }
    None
}
