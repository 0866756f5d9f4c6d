//! Sparse multivariate polynomials over a [`RingSpec`] and their shifted
//! expansions `f(x) = sum_u f_u(s) (x - s)^u`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{binomial, RingSpec, RingValue};

/// Exponent vector of a monomial, ordered graded-lexicographically with
/// `x1 > x2 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(exps: Vec<u32>) -> Self {
        Exponent(exps)
    }

    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for Exponent {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree of a polynomial; the zero polynomial has degree `MinusInfinity`,
/// which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::MinusInfinity => None,
        }
    }

    /// `self <= bound - shift`, where a negative right-hand side only admits
    /// `MinusInfinity`.
    pub fn at_most_shifted(self, bound: Degree, shift: u64) -> bool {
        match (self, bound) {
            (Degree::MinusInfinity, _) => true,
            (Degree::Finite(_), Degree::MinusInfinity) => false,
            (Degree::Finite(d), Degree::Finite(b)) => d + shift <= b,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse polynomial in `nvars` variables. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivarPoly {
    ring: RingSpec,
    nvars: usize,
    terms: BTreeMap<Exponent, RingValue>,
}

impl MultivarPoly {
    pub fn zero(ring: &RingSpec, nvars: usize) -> Self {
        MultivarPoly {
            ring: ring.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(value: RingValue, nvars: usize) -> Self {
        let mut p = MultivarPoly::zero(value.ring(), nvars);
        p.add_term(Exponent::zero(nvars), value);
        p
    }

    /// The variable `x_{index+1}` (indices are zero-based).
    pub fn variable(ring: &RingSpec, nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::VariableOutOfRange { index, nvars });
        }
        let mut exp = vec![0; nvars];
        exp[index] = 1;
        Ok(MultivarPoly::monomial(ring.one(), exp))
    }

    pub fn monomial(coeff: RingValue, exp: Vec<u32>) -> Self {
        let nvars = exp.len();
        let mut p = MultivarPoly::zero(coeff.ring(), nvars);
        p.add_term(Exponent(exp), coeff);
        p
    }

    /// `x_{index+1} - value`.
    pub fn linear(value: &RingValue, nvars: usize, index: usize) -> Result<Self> {
        let x = MultivarPoly::variable(value.ring(), nvars, index)?;
        Ok(&x - &MultivarPoly::constant(value.clone(), nvars))
    }

    pub fn from_terms(
        ring: &RingSpec,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, RingValue)>,
    ) -> Result<Self> {
        let mut p = MultivarPoly::zero(ring, nvars);
        for (exp, coeff) in terms {
            if exp.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: exp.len(),
                });
            }
            if coeff.ring() != ring {
                return Err(Error::ring_mismatch(ring, coeff.ring()));
            }
            p.add_term(Exponent(exp), coeff);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &RingValue)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &RingValue)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, coeff: RingValue) {
        debug_assert_eq!(exp.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn check_compatible(&self, other: &MultivarPoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::ring_mismatch(&self.ring, &other.ring));
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    fn check_point(&self, point: &[RingValue]) -> Result<()> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        if let Some(v) = point.iter().find(|v| v.ring() != &self.ring) {
            return Err(Error::ring_mismatch(&self.ring, v.ring()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultivarPoly) -> Result<MultivarPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultivarPoly) -> Result<MultivarPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultivarPoly) -> Result<MultivarPoly> {
        self.check_compatible(other)?;
        let mut out = MultivarPoly::zero(&self.ring, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(Exponent(exp), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RingValue) -> Result<MultivarPoly> {
        if c.ring() != &self.ring {
            return Err(Error::ring_mismatch(&self.ring, c.ring()));
        }
        let mut out = MultivarPoly::zero(&self.ring, self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> MultivarPoly {
        let mut acc = MultivarPoly::constant(self.ring.one(), self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::MinusInfinity, |e| Degree::Finite(e.total()))
    }

    /// Degree in the variable with zero-based `index`.
    pub fn degree_in(&self, index: usize) -> Result<Degree> {
        if index >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        Ok(self
            .terms
            .keys()
            .map(|e| u64::from(e[index]))
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite))
    }

    pub fn coefficient_of(&self, exp: &[u32]) -> Result<RingValue> {
        if exp.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: exp.len(),
            });
        }
        Ok(self
            .terms
            .get(&Exponent(exp.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.ring.zero()))
    }

    pub fn evaluate(&self, point: &[RingValue]) -> Result<RingValue> {
        self.check_point(point)?;
        let mut acc = self.ring.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    term *= &x.pow(k);
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// The polynomial `g(y) = f(y + s)`, whose coefficient at `y^u` is the
    /// expansion coefficient `f_u(s)`.
    pub fn shifted(&self, point: &[RingValue]) -> Result<MultivarPoly> {
        self.check_point(point)?;
        Ok(self.taylor_shift(point, None))
    }

    /// Expansion coefficients `f_u(s)` for every `u < bounds` componentwise.
    pub fn expand_at(&self, point: &[RingValue], bounds: &[u32]) -> Result<ExpansionTable> {
        self.check_point(point)?;
        if bounds.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: bounds.len(),
            });
        }
        let shifted = self.taylor_shift(point, Some(bounds));
        let mut coeffs = BTreeMap::new();
        for u in ExponentBox::new(bounds) {
            let v = shifted
                .terms
                .get(&Exponent(u.clone()))
                .cloned()
                .unwrap_or_else(|| self.ring.zero());
            coeffs.insert(u, v);
        }
        Ok(ExpansionTable {
            base_point: point.to_vec(),
            bounds: bounds.to_vec(),
            coeffs,
        })
    }

    // Per-variable synthetic division: x_i -> x_i + s_i on the dense
    // coefficient list of each x_i-column. Exponents >= bounds[i] are
    // dropped once variable i has been shifted.
    fn taylor_shift(&self, point: &[RingValue], bounds: Option<&[u32]>) -> MultivarPoly {
        let mut current = self.clone();
        for (i, s) in point.iter().enumerate() {
            let limit = bounds.map(|b| b[i]);
            let mut columns: BTreeMap<Vec<u32>, Vec<RingValue>> = BTreeMap::new();
            for (e, c) in &current.terms {
                let mut rest = e.0.clone();
                let k = std::mem::replace(&mut rest[i], 0) as usize;
                let col = columns.entry(rest).or_default();
                if col.len() <= k {
                    col.resize(k + 1, self.ring.zero());
                }
                col[k] = c.clone();
            }
            let mut next = MultivarPoly::zero(&self.ring, self.nvars);
            for (rest, mut col) in columns {
                if !s.is_zero() {
                    let d = col.len() - 1;
                    for start in 0..d {
                        for j in (start..d).rev() {
                            let carry = s * &col[j + 1];
                            col[j] += &carry;
                        }
                    }
                }
                for (k, c) in col.into_iter().enumerate() {
                    if limit.is_some_and(|l| k as u64 >= u64::from(l)) {
                        break;
                    }
                    let mut e = rest.clone();
                    e[i] = k as u32;
                    next.add_term(Exponent(e), c);
                }
            }
            current = next;
        }
        current
    }

    /// `f_u(s)` straight from `sum_k c_k prod_i C(k_i, u_i) s_i^(k_i - u_i)`.
    pub fn single_expansion_coeff(&self, point: &[RingValue], u: &[u32]) -> Result<RingValue> {
        self.check_point(point)?;
        if u.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: u.len(),
            });
        }
        let mut acc = self.ring.zero();
        'terms: for (k, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..self.nvars {
                if u[i] > k[i] {
                    continue 'terms;
                }
                let b = self.ring.from_integer(binomial(k[i], u[i]));
                term = &(&term * &b) * &point[i].pow(k[i] - u[i]);
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Dense coefficient list of a univariate polynomial, lowest degree first.
    pub fn univariate_coeffs(&self) -> Result<Vec<RingValue>> {
        if self.nvars != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: self.nvars,
            });
        }
        let len = self.total_degree().finite().map_or(0, |d| d as usize + 1);
        let mut out = vec![self.ring.zero(); len];
        for (e, c) in &self.terms {
            out[e[0] as usize] = c.clone();
        }
        Ok(out)
    }
}

impl fmt::Display for MultivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !magnitude.is_one() || e.total() == 0 {
                factors.push(magnitude.to_string());
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultivarPoly> for &'a MultivarPoly {
    type Output = MultivarPoly;
    fn add(self, rhs: &'a MultivarPoly) -> MultivarPoly {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a MultivarPoly> for &'a MultivarPoly {
    type Output = MultivarPoly;
    fn sub(self, rhs: &'a MultivarPoly) -> MultivarPoly {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Mul<&'a MultivarPoly> for &'a MultivarPoly {
    type Output = MultivarPoly;
    fn mul(self, rhs: &'a MultivarPoly) -> MultivarPoly {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &MultivarPoly {
    type Output = MultivarPoly;
    fn neg(self) -> MultivarPoly {
        let mut out = MultivarPoly::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

/// The coefficients `f_u(s)` of a polynomial at a base point, for every `u`
/// below the truncation bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTable {
    pub base_point: Vec<RingValue>,
    pub bounds: Vec<u32>,
    /// Keyed by `u` in lexicographic order; zero entries are kept.
    pub coeffs: BTreeMap<Vec<u32>, RingValue>,
}

impl ExpansionTable {
    pub fn get(&self, u: &[u32]) -> Option<&RingValue> {
        self.coeffs.get(u)
    }
}

/// Every exponent vector `u` with `u < bounds` componentwise, in
/// lexicographic order (last coordinate fastest).
#[derive(Clone, Debug)]
pub struct ExponentBox {
    bounds: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl ExponentBox {
    pub fn new(bounds: &[u32]) -> Self {
        let next = if bounds.iter().all(|&b| b > 0) {
            Some(vec![0; bounds.len()])
        } else {
            None
        };
        ExponentBox {
            bounds: bounds.to_vec(),
            next,
        }
    }
}

impl Iterator for ExponentBox {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.bounds[i] {
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::integers()
    }

    fn x(ring: &RingSpec, nvars: usize, i: usize) -> MultivarPoly {
        MultivarPoly::variable(ring, nvars, i).unwrap()
    }

    fn c(ring: &RingSpec, nvars: usize, v: i64) -> MultivarPoly {
        MultivarPoly::constant(ring.from_integer(v), nvars)
    }

    #[test]
    fn difference_of_squares() {
        let r = z();
        let x1 = x(&r, 1, 0);
        let p = &(&x1 + &c(&r, 1, 1)) * &(&x1 - &c(&r, 1, 1));
        let expected =
            MultivarPoly::from_terms(&r, 1, [(vec![2], r.one()), (vec![0], r.from_integer(-1))])
                .unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x1^2 - 1");
    }

    #[test]
    fn identities_and_absorption() {
        let r = z();
        let p = &x(&r, 2, 0) + &x(&r, 2, 1);
        assert_eq!(&p + &MultivarPoly::zero(&r, 2), p);
        assert!((&p * &MultivarPoly::zero(&r, 2)).is_zero());
    }

    #[test]
    fn degrees() {
        let r = z();
        let p = MultivarPoly::from_terms(&r, 2, [(vec![2, 1], r.one()), (vec![1, 0], r.one())])
            .unwrap();
        assert_eq!(p.total_degree(), Degree::Finite(3));
        assert_eq!(p.degree_in(1).unwrap(), Degree::Finite(1));
        assert_eq!(p.degree_in(0).unwrap(), Degree::Finite(2));
        assert!(p.degree_in(2).is_err());
        let zero = MultivarPoly::zero(&r, 2);
        assert_eq!(zero.total_degree(), Degree::MinusInfinity);
        assert_eq!(zero.degree_in(0).unwrap(), Degree::MinusInfinity);
        assert_eq!(c(&r, 2, 5).total_degree(), Degree::Finite(0));
        assert!(Degree::MinusInfinity < Degree::Finite(0));
    }

    #[test]
    fn degree_bounds_with_minus_infinity() {
        assert!(Degree::MinusInfinity.at_most_shifted(Degree::Finite(0), 5));
        assert!(!Degree::Finite(0).at_most_shifted(Degree::Finite(1), 2));
        assert!(Degree::Finite(1).at_most_shifted(Degree::Finite(3), 2));
        assert!(!Degree::Finite(0).at_most_shifted(Degree::MinusInfinity, 0));
    }

    #[test]
    fn coefficient_lookup() {
        let r = z();
        let p = MultivarPoly::from_terms(
            &r,
            2,
            [(vec![1, 1], r.from_integer(3)), (vec![1, 0], r.one())],
        )
        .unwrap();
        assert_eq!(p.coefficient_of(&[1, 1]).unwrap(), r.from_integer(3));
        assert!(p.coefficient_of(&[0, 1]).unwrap().is_zero());
        let q = &x(&r, 1, 0).pow(2) - &c(&r, 1, 1);
        assert_eq!(q.coefficient_of(&[0]).unwrap(), r.from_integer(-1));
        assert!(p.coefficient_of(&[1]).is_err());
    }

    #[test]
    fn evaluation() {
        let r = z();
        let p = &x(&r, 2, 0) * &x(&r, 2, 1);
        assert!(p.evaluate(&[r.one(), r.one()]).unwrap().is_one());
        let q = &x(&r, 1, 0).pow(2) - &x(&r, 1, 0);
        assert!(q.evaluate(&[r.zero()]).unwrap().is_zero());
        assert!(q.evaluate(&[r.one()]).unwrap().is_zero());
        let z4 = RingSpec::residue_ring(4).unwrap();
        let s = &x(&z4, 2, 0) + &x(&z4, 2, 1);
        assert_eq!(
            s.evaluate(&[z4.from_integer(2), z4.from_integer(3)])
                .unwrap(),
            z4.one()
        );
        assert!(matches!(
            s.evaluate(&[z4.one()]),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            s.evaluate(&[r.one(), r.one()]),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn expansion_of_square_at_one() {
        let r = z();
        let p = x(&r, 1, 0).pow(2);
        let table = p.expand_at(&[r.one()], &[3]).unwrap();
        let got: Vec<String> = table.coeffs.values().map(|v| v.to_string()).collect();
        assert_eq!(got, ["1", "2", "1"]);
        assert_eq!(
            p.single_expansion_coeff(&[r.one()], &[1]).unwrap(),
            r.from_integer(2)
        );
    }

    #[test]
    fn expansion_at_origin_is_identity() {
        let r = z();
        let p = MultivarPoly::from_terms(
            &r,
            2,
            [
                (vec![2, 1], r.from_integer(4)),
                (vec![0, 1], r.from_integer(-3)),
            ],
        )
        .unwrap();
        let origin = [r.zero(), r.zero()];
        assert_eq!(p.shifted(&origin).unwrap(), p);
        let table = p.expand_at(&origin, &[3, 2]).unwrap();
        assert_eq!(table.get(&[2, 1]).unwrap(), &r.from_integer(4));
        assert_eq!(table.get(&[0, 1]).unwrap(), &r.from_integer(-3));
        assert!(table.get(&[1, 1]).unwrap().is_zero());
    }

    #[test]
    fn product_expansion_at_ones() {
        let r = z();
        let p = &x(&r, 2, 0) * &x(&r, 2, 1);
        let table = p.expand_at(&[r.one(), r.one()], &[2, 2]).unwrap();
        assert!(table.get(&[1, 1]).unwrap().is_one());
        assert_eq!(table.coeffs.len(), 4);
    }

    #[test]
    fn direct_formula_edge_cases() {
        let r = RingSpec::prime_field(7).unwrap();
        let p = &x(&r, 2, 0).pow(2) + &x(&r, 2, 1);
        let s = [r.from_integer(3), r.from_integer(5)];
        assert!(p.single_expansion_coeff(&s, &[3, 0]).unwrap().is_zero());
        assert!(p.single_expansion_coeff(&s, &[2, 1]).unwrap().is_zero());
        let k = c(&r, 2, 4);
        assert_eq!(
            k.single_expansion_coeff(&s, &[0, 0]).unwrap(),
            r.from_integer(4)
        );
    }

    #[test]
    fn exponent_box_order() {
        let all: Vec<_> = ExponentBox::new(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(ExponentBox::new(&[2, 0]).count(), 0);
        assert_eq!(ExponentBox::new(&[]).count(), 1);
    }

    #[test]
    fn rendering() {
        let q = RingSpec::rationals();
        let p = MultivarPoly::from_terms(
            &q,
            2,
            [
                (vec![2, 1], q.from_integer(3)),
                (vec![1, 0], q.from_integer(-1)),
                (vec![0, 0], q.from_integer(4)),
                (vec![0, 1], q.parse_value("-3/2").unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "3*x1^2*x2 - x1 - 3/2*x2 + 4");
        assert_eq!((-&x(&q, 1, 0)).to_string(), "-x1");
        assert_eq!(MultivarPoly::zero(&q, 1).to_string(), "0");
    }
}
