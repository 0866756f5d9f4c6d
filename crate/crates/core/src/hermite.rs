//! Univariate Hermite interpolation over a commutative ring.
//!
//! For a multiset `(S, m)` with unit differences, the data prescribed at
//! each admissible pair `(s, u)` with `u < m(s)` are the expansion
//! coefficients `f_u(s)`, not derivatives, so no factorial is ever divided
//! out and the construction works in `Z/nZ` as well as in fields.

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::poly::MultivarPoly;
use crate::ring::{binomial, RingValue};

/// Outcome of [`divisibility_status`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisibility {
    pub divides: bool,
    /// First admissible `(s, u)` with `f_u(s) != 0`, in entry order.
    pub first_failure: Option<(RingValue, u32)>,
}

fn check_univariate(f: &MultivarPoly, ms: &Multiset) -> Result<()> {
    if f.nvars() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: f.nvars(),
        });
    }
    if f.ring() != ms.ring() {
        return Err(Error::ring_mismatch(f.ring(), ms.ring()));
    }
    Ok(())
}

/// Whether `prod (x - s)^m(s)` divides `f`, decided by checking that every
/// `f_u(s)` with `u < m(s)` vanishes.
pub fn divisibility_status(f: &MultivarPoly, ms: &Multiset) -> Result<Divisibility> {
    check_univariate(f, ms)?;
    for (s, m) in ms.entries() {
        let table = f.expand_at(std::slice::from_ref(s), &[*m])?;
        if let Some((u, _)) = table.coeffs.iter().find(|(_, v)| !v.is_zero()) {
            return Ok(Divisibility {
                divides: false,
                first_failure: Some((s.clone(), u[0])),
            });
        }
    }
    Ok(Divisibility {
        divides: true,
        first_failure: None,
    })
}

/// All basis polynomials `h^(s0, u)` for `u < m(s0)`, indexed by `u`.
///
/// Built from `f^(v) = (x - s0)^v prod_{s != s0} ((x - s)/(s0 - s))^m(s)` by
/// downward induction on `u`.
pub fn base_polynomials_at(ms: &Multiset, s0: &RingValue) -> Result<Vec<MultivarPoly>> {
    let idx = ms
        .position(s0)
        .ok_or_else(|| Error::InvalidArgument(format!("{s0} is not in the multiset")))?;
    let ring = ms.ring();
    let m0 = ms.entries()[idx].1;

    let mut others = MultivarPoly::constant(ring.one(), 1);
    for (s, m) in ms.entries() {
        if s == s0 {
            continue;
        }
        let scale = (s0 - s).invert()?;
        let factor = MultivarPoly::linear(s, 1, 0)?.scale(&scale)?;
        others = &others * &factor.pow(*m);
    }
    let shift = MultivarPoly::linear(s0, 1, 0)?;

    let aux: Vec<MultivarPoly> = (0..m0).map(|v| &shift.pow(v) * &others).collect();
    let mut h: Vec<Option<MultivarPoly>> = vec![None; m0 as usize];
    for u0 in (0..m0).rev() {
        let f = &aux[u0 as usize];
        let table = f.expand_at(std::slice::from_ref(s0), &[m0])?;
        let mut acc = f.clone();
        for u in u0 + 1..m0 {
            let c = &table.coeffs[&vec![u]];
            if c.is_zero() {
                continue;
            }
            let hu = h[u as usize]
                .as_ref()
                .expect("filled by the downward induction");
            acc = &acc - &hu.scale(c)?;
        }
        h[u0 as usize] = Some(acc);
    }
    Ok(h.into_iter().map(|p| p.expect("filled")).collect())
}

/// `h^(s0, u0)`: degree below `d(S)`, with `h_u(s)` equal to one at
/// `(s0, u0)` and zero at every other admissible pair.
pub fn base_polynomial(ms: &Multiset, s0: &RingValue, u0: u32) -> Result<MultivarPoly> {
    let m0 = ms
        .multiplicity(s0)
        .ok_or_else(|| Error::InvalidArgument(format!("{s0} is not in the multiset")))?;
    if u0 >= m0 {
        return Err(Error::InvalidArgument(format!(
            "order {u0} out of range for {s0} with multiplicity {m0}"
        )));
    }
    let mut all = base_polynomials_at(ms, s0)?;
    Ok(all.swap_remove(u0 as usize))
}

/// Prescribed values `y_{s,u}` for every admissible pair of a multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationData {
    multiset: Multiset,
    /// `values[i][u]` belongs to the `i`-th entry.
    values: Vec<Vec<RingValue>>,
}

impl InterpolationData {
    /// `values[i]` must hold exactly `m(s_i)` ring elements.
    pub fn new(multiset: Multiset, values: Vec<Vec<RingValue>>) -> Result<Self> {
        if values.len() != multiset.len() {
            return Err(Error::ArityMismatch {
                expected: multiset.len(),
                found: values.len(),
            });
        }
        for ((s, m), ys) in multiset.entries().iter().zip(&values) {
            if ys.len() != *m as usize {
                return Err(Error::InvalidArgument(format!(
                    "{s} has multiplicity {m} but {} values were given",
                    ys.len()
                )));
            }
            if let Some(y) = ys.iter().find(|y| y.ring() != multiset.ring()) {
                return Err(Error::ring_mismatch(multiset.ring(), y.ring()));
            }
        }
        Ok(InterpolationData { multiset, values })
    }

    /// Takes `(s, u, y)` triples in any order; every admissible pair must
    /// appear exactly once.
    pub fn from_triples(
        multiset: Multiset,
        triples: Vec<(RingValue, u32, RingValue)>,
    ) -> Result<Self> {
        let mut values: Vec<Vec<Option<RingValue>>> = multiset
            .entries()
            .iter()
            .map(|(_, m)| vec![None; *m as usize])
            .collect();
        for (s, u, y) in triples {
            let i = multiset
                .position(&s)
                .ok_or_else(|| Error::InvalidArgument(format!("{s} is not in the multiset")))?;
            let slot = values[i]
                .get_mut(u as usize)
                .ok_or_else(|| Error::InvalidArgument(format!("order {u} out of range at {s}")))?;
            if slot.replace(y).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "value at ({s}, {u}) given twice"
                )));
            }
        }
        let mut filled = Vec::with_capacity(values.len());
        for ((s, _), ys) in multiset.entries().iter().zip(values) {
            let ys = ys
                .into_iter()
                .enumerate()
                .map(|(u, y)| {
                    y.ok_or_else(|| Error::InvalidArgument(format!("missing value at ({s}, {u})")))
                })
                .collect::<Result<Vec<_>>>()?;
            filled.push(ys);
        }
        InterpolationData::new(multiset, filled)
    }

    pub fn multiset(&self) -> &Multiset {
        &self.multiset
    }

    pub fn value(&self, entry: usize, u: u32) -> &RingValue {
        &self.values[entry][u as usize]
    }
}

/// The unique polynomial of degree below `d(S)` with `f_u(s) = y_{s,u}`,
/// assembled as `sum y_{s,u} h^(s,u)`.
pub fn hermite_interpolate(data: &InterpolationData) -> Result<MultivarPoly> {
    let ms = &data.multiset;
    let mut acc = MultivarPoly::zero(ms.ring(), 1);
    for ((s, _), ys) in ms.entries().iter().zip(&data.values) {
        if ys.iter().all(RingValue::is_zero) {
            continue;
        }
        let basis = base_polynomials_at(ms, s)?;
        for (h, y) in basis.iter().zip(ys) {
            if !y.is_zero() {
                acc = &acc + &h.scale(y)?;
            }
        }
    }
    Ok(acc)
}

/// The coefficients `alpha(s, u)` extracting the degree-`t` coefficient,
/// `t = d(S) - 1`, from expansion data on the multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    multiset: Multiset,
    alphas: Vec<Vec<RingValue>>,
    t: u32,
}

impl AlphaTable {
    pub fn multiset(&self) -> &Multiset {
        &self.multiset
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `alpha(s_entry, u)`.
    pub fn alpha(&self, entry: usize, u: u32) -> &RingValue {
        &self.alphas[entry][u as usize]
    }

    /// `sum_{s,u} alpha(s,u) C(l,u) s^(l-u)`; pairs with `u > l` contribute
    /// nothing and are skipped before any power is formed.
    pub fn moment(&self, l: u32) -> RingValue {
        let ring = self.multiset.ring();
        let mut acc = ring.zero();
        for ((s, _), row) in self.multiset.entries().iter().zip(&self.alphas) {
            for (u, a) in row.iter().enumerate() {
                let u = u as u32;
                if u > l || a.is_zero() {
                    continue;
                }
                let term = &(a * &ring.from_integer(binomial(l, u))) * &s.pow(l - u);
                acc += &term;
            }
        }
        acc
    }

    /// First `l <= t` whose moment is wrong, if any.
    pub fn first_moment_failure(&self) -> Option<u32> {
        (0..=self.t).find(|&l| {
            let m = self.moment(l);
            if l < self.t {
                !m.is_zero()
            } else {
                !m.is_one()
            }
        })
    }
}

/// `alpha(s, u)` is the coefficient of `x^t` in `h^(s,u)`. The moment
/// identities are re-checked before the table is returned.
pub fn alpha_table(ms: &Multiset) -> Result<AlphaTable> {
    let t = (ms.size() - 1) as u32;
    let mut alphas = Vec::with_capacity(ms.len());
    for (s, _) in ms.entries() {
        let row = base_polynomials_at(ms, s)?
            .iter()
            .map(|h| h.coefficient_of(&[t]))
            .collect::<Result<Vec<_>>>()?;
        alphas.push(row);
    }
    let table = AlphaTable {
        multiset: ms.clone(),
        alphas,
        t,
    };
    if let Some(l) = table.first_moment_failure() {
        return Err(Error::InternalContradiction(format!(
            "alpha moment identity fails at l = {l}"
        )));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn ms(ring: &RingSpec, entries: &[(i64, u32)]) -> Multiset {
        Multiset::new(
            ring,
            entries
                .iter()
                .map(|&(v, m)| (ring.from_integer(v), m))
                .collect(),
        )
        .unwrap()
    }

    fn poly(ring: &RingSpec, coeffs: &[i64]) -> MultivarPoly {
        MultivarPoly::from_terms(
            ring,
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (vec![k as u32], ring.from_integer(c))),
        )
        .unwrap()
    }

    #[test]
    fn divisibility() {
        let z = RingSpec::integers();
        let st = divisibility_status(&poly(&z, &[0, -1, 1]), &ms(&z, &[(0, 1), (1, 1)])).unwrap();
        assert!(st.divides);
        assert!(
            divisibility_status(&poly(&z, &[0, 0, 1]), &ms(&z, &[(0, 2)]))
                .unwrap()
                .divides
        );
        let st = divisibility_status(&poly(&z, &[0, 1]), &ms(&z, &[(0, 2)])).unwrap();
        assert!(!st.divides);
        assert_eq!(st.first_failure, Some((z.zero(), 1)));
    }

    #[test]
    fn divisibility_rejects_mixed_rings() {
        let z = RingSpec::integers();
        let q = RingSpec::rationals();
        assert!(matches!(
            divisibility_status(&poly(&z, &[1]), &ms(&q, &[(0, 1)])),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn lagrange_basis() {
        let z = RingSpec::integers();
        let s = ms(&z, &[(0, 1), (1, 1)]);
        assert_eq!(base_polynomial(&s, &z.one(), 0).unwrap(), poly(&z, &[0, 1]));
        assert_eq!(
            base_polynomial(&s, &z.zero(), 0).unwrap(),
            poly(&z, &[1, -1])
        );
    }

    #[test]
    fn hermite_basis_with_double_point() {
        let q = RingSpec::rationals();
        let s = ms(&q, &[(0, 2), (1, 1)]);
        assert_eq!(
            base_polynomial(&s, &q.zero(), 1).unwrap(),
            poly(&q, &[0, 1, -1])
        );
    }

    #[test]
    fn base_polynomial_argument_errors() {
        let q = RingSpec::rationals();
        let s = ms(&q, &[(0, 2), (1, 1)]);
        assert!(base_polynomial(&s, &q.from_integer(5), 0).is_err());
        assert!(base_polynomial(&s, &q.one(), 1).is_err());
    }

    #[test]
    fn interpolation_examples() {
        let q = RingSpec::rationals();
        let s = ms(&q, &[(0, 2), (1, 1)]);
        let data = InterpolationData::new(s.clone(), vec![vec![q.zero(), q.one()], vec![q.zero()]])
            .unwrap();
        assert_eq!(hermite_interpolate(&data).unwrap(), poly(&q, &[0, 1, -1]));

        let zeros =
            InterpolationData::new(s, vec![vec![q.zero(), q.zero()], vec![q.zero()]]).unwrap();
        assert!(hermite_interpolate(&zeros).unwrap().is_zero());
    }

    #[test]
    fn interpolation_data_shape_is_checked() {
        let q = RingSpec::rationals();
        let s = ms(&q, &[(0, 2), (1, 1)]);
        assert!(InterpolationData::new(s.clone(), vec![vec![q.zero()], vec![q.zero()]]).is_err());
        assert!(InterpolationData::new(s.clone(), vec![vec![q.zero(), q.zero()]]).is_err());
        let missing = vec![(q.zero(), 0, q.one()), (q.one(), 0, q.one())];
        assert!(InterpolationData::from_triples(s.clone(), missing).is_err());
        let twice = vec![
            (q.zero(), 0, q.one()),
            (q.zero(), 0, q.one()),
            (q.zero(), 1, q.one()),
            (q.one(), 0, q.one()),
        ];
        assert!(InterpolationData::from_triples(s, twice).is_err());
    }

    #[test]
    fn alpha_examples() {
        let z = RingSpec::integers();
        let a = alpha_table(&ms(&z, &[(0, 1), (1, 1)])).unwrap();
        assert_eq!(a.alpha(0, 0), &z.from_integer(-1));
        assert_eq!(a.alpha(1, 0), &z.one());
        assert_eq!(a.t(), 1);

        let a = alpha_table(&ms(&z, &[(0, 1)])).unwrap();
        assert_eq!(a.alpha(0, 0), &z.one());
        assert_eq!(a.t(), 0);

        let a = alpha_table(&ms(&z, &[(0, 2)])).unwrap();
        assert!(a.alpha(0, 0).is_zero());
        assert!(a.alpha(0, 1).is_one());
    }

    #[test]
    fn alpha_table_over_residue_ring_with_zero_divisors() {
        let z12 = RingSpec::residue_ring(12).unwrap();
        let a = alpha_table(&ms(&z12, &[(0, 3), (5, 2)])).unwrap();
        assert_eq!(a.t(), 4);
        assert_eq!(a.first_moment_failure(), None);
    }
}
