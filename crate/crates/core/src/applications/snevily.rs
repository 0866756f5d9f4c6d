//! Brute-force search for Snevily permutations in `F_p`.
//!
//! Given `a_1..a_k` and `b_1..b_k` in `F_p` with `k <= p`, look for a
//! permutation `pi` such that `a_i + b_pi(i) = a_j + b_pi(j)` forces
//! `a_i = a_j` and `b_pi(i) = b_pi(j)`.

use crate::error::{HypothesisViolation, Result};
use crate::ring::RingSpec;
use crate::Error;

/// Whether `perm` has the required property. `perm[i]` is the index into
/// `b` paired with `a[i]`.
pub fn is_snevily_permutation(p: u64, a: &[u64], b: &[u64], perm: &[usize]) -> bool {
    let k = a.len();
    if b.len() != k || perm.len() != k {
        return false;
    }
    let mut seen = vec![false; k];
    for &j in perm {
        if j >= k || std::mem::replace(&mut seen[j], true) {
            return false;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let (ai, aj, bi, bj) = (a[i] % p, a[j] % p, b[perm[i]] % p, b[perm[j]] % p);
            if (ai + bi) % p == (aj + bj) % p && (ai != aj || bi != bj) {
                return false;
            }
        }
    }
    true
}

/// Finds a Snevily permutation, or `None` if none exists. Inputs are
/// reduced mod `p`, sorted and translated to start at zero before the
/// search; the answer refers to the original indices.
pub fn check_snevily_fp(p: u64, a: &[u64], b: &[u64]) -> Result<Option<Vec<usize>>> {
    RingSpec::prime_field(p)?;
    if a.len() != b.len() {
        return Err(Error::ArityMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    let k = a.len();
    if k as u64 > p {
        return Err(HypothesisViolation::TooManyElements { k, p }.into());
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let (a_idx, a_can) = canonicalize(p, a);
    let (b_idx, b_can) = canonicalize(p, b);
    Ok(search_canonical(p, &a_can, &b_can).map(|sigma| {
        let mut perm = vec![0; k];
        for (i, &s) in sigma.iter().enumerate() {
            perm[a_idx[i]] = b_idx[s];
        }
        perm
    }))
}

/// Sort order of `xs mod p` and the sorted values shifted so the first is 0.
fn canonicalize(p: u64, xs: &[u64]) -> (Vec<usize>, Vec<u64>) {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by_key(|&i| (xs[i] % p, i));
    let base = xs[idx[0]] % p;
    let vals = idx.iter().map(|&i| (xs[i] % p + p - base) % p).collect();
    (idx, vals)
}

fn search_canonical(p: u64, a: &[u64], b: &[u64]) -> Option<Vec<usize>> {
    let k = a.len();
    let mut perm = Vec::with_capacity(k);
    let mut used = vec![false; k];
    backtrack(p, a, b, &mut perm, &mut used).then_some(perm)
}

fn backtrack(p: u64, a: &[u64], b: &[u64], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = perm.len();
    if i == a.len() {
        return true;
    }
    for j in 0..b.len() {
        if used[j] {
            continue;
        }
        let sum = (a[i] + b[j]) % p;
        let clash = perm
            .iter()
            .enumerate()
            .any(|(i2, &j2)| (a[i2] + b[j2]) % p == sum && (a[i2] != a[i] || b[j2] != b[j]));
        if clash {
            continue;
        }
        used[j] = true;
        perm.push(j);
        if backtrack(p, a, b, perm, used) {
            return true;
        }
        perm.pop();
        used[j] = false;
    }
    false
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SnevilySweep {
    pub p: u64,
    pub tuples: u64,
    pub counterexamples: Vec<(Vec<u64>, Vec<u64>)>,
}

/// Every canonical pair `(a, b)` with `1 <= k <= p`: nondecreasing
/// sequences in `0..p` starting at 0.
pub fn snevily_sweep(p: u64) -> Result<SnevilySweep> {
    RingSpec::prime_field(p)?;
    if p > 11 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive sweep for p = {p} is too large"
        )));
    }
    let mut out = SnevilySweep {
        p,
        ..Default::default()
    };
    for k in 1..=p as usize {
        let seqs = canonical_sequences(p, k);
        for a in &seqs {
            for b in &seqs {
                out.tuples += 1;
                if search_canonical(p, a, b).is_none() {
                    out.counterexamples.push((a.clone(), b.clone()));
                }
            }
        }
    }
    Ok(out)
}

fn canonical_sequences(p: u64, k: usize) -> Vec<Vec<u64>> {
    fn extend(p: u64, k: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let lo = *cur.last().expect("starts with 0");
        for v in lo..p {
            cur.push(v);
            extend(p, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(p, k, &mut vec![0], &mut out);
    out
}
