//! Exact arithmetic in the four concrete commutative rings the library
//! works over: the integers, the rationals, prime fields `F_p` and residue
//! rings `Z/nZ`.
//!
//! Every [`RingValue`] carries its [`RingSpec`] and is kept in canonical
//! form, so structural equality is ring equality. Residues live in
//! `[0, n)` and rationals are reduced with a positive denominator.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Modulus of a finite ring. Shared so that cloning a ring is cheap.
#[derive(Clone, Debug, Eq)]
pub struct Modulus(Arc<BigInt>);

impl Modulus {
    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl PartialEq for Modulus {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl std::hash::Hash for Modulus {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

/// A commutative ring instance.
///
/// Text form: `Z`, `Q`, `Fp:<p>`, `Zn:<n>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField(Modulus),
    ResidueRing(Modulus),
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec::Integers
    }

    pub fn rationals() -> Self {
        RingSpec::Rationals
    }

    /// `F_p`. Fails unless `p` is prime.
    pub fn prime_field(p: impl Into<BigInt>) -> Result<Self> {
        let p = p.into();
        if !is_prime(&p)? {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(RingSpec::PrimeField(Modulus(Arc::new(p))))
    }

    /// `Z/nZ` for `n >= 2`. A prime `n` is still a residue ring here; use
    /// [`RingSpec::prime_field`] to get field semantics.
    pub fn residue_ring(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if n < BigInt::from(2) {
            return Err(Error::InvalidRing(format!(
                "residue modulus {n} must be at least 2"
            )));
        }
        Ok(RingSpec::ResidueRing(Modulus(Arc::new(n))))
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            RingSpec::PrimeField(m) | RingSpec::ResidueRing(m) => Some(m.value()),
            _ => None,
        }
    }

    /// Modulus as a machine word, for the finite rings small enough to
    /// enumerate.
    pub fn small_modulus(&self) -> Option<u64> {
        self.modulus().and_then(|m| m.to_u64())
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingSpec::Rationals | RingSpec::PrimeField(_))
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    pub fn zero(&self) -> RingValue {
        self.from_integer(0)
    }

    pub fn one(&self) -> RingValue {
        self.from_integer(1)
    }

    /// Image of `n` under the canonical homomorphism `Z -> R`.
    pub fn from_integer(&self, n: impl Into<BigInt>) -> RingValue {
        let n = n.into();
        let rep = match self {
            RingSpec::Integers => Rep::Int(n),
            RingSpec::Rationals => Rep::Rat(BigRational::from_integer(n)),
            RingSpec::PrimeField(m) | RingSpec::ResidueRing(m) => Rep::Int(n.mod_floor(m.value())),
        };
        RingValue {
            ring: self.clone(),
            rep,
        }
    }

    /// All elements in canonical order, for finite rings.
    pub fn elements(&self) -> Option<Vec<RingValue>> {
        let n = self.small_modulus()?;
        Some((0..n).map(|k| self.from_integer(k)).collect())
    }

    /// Parses `"7"`, `"-3"` or `"p/q"`. A fraction is accepted whenever the
    /// denominator is invertible in the ring (or divides the numerator in `Z`).
    pub fn parse_value(&self, text: &str) -> Result<RingValue> {
        let invalid = || Error::InvalidValue {
            value: text.to_string(),
            ring: self.to_string(),
        };
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num.parse().map_err(|_| invalid())?;
        let Some(den) = den else {
            return Ok(self.from_integer(num));
        };
        let den: BigInt = den.parse().map_err(|_| invalid())?;
        if den.is_zero() {
            return Err(invalid());
        }
        match self {
            RingSpec::Rationals => Ok(RingValue {
                ring: self.clone(),
                rep: Rep::Rat(BigRational::new(num, den)),
            }),
            RingSpec::Integers => {
                if num.is_multiple_of(&den) {
                    Ok(self.from_integer(num / den))
                } else {
                    Err(invalid())
                }
            }
            _ => {
                let inv = self.from_integer(den).invert().map_err(|_| invalid())?;
                Ok(self.from_integer(num) * inv)
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::PrimeField(m) => write!(f, "Fp:{}", m.value()),
            RingSpec::ResidueRing(m) => write!(f, "Zn:{}", m.value()),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let modulus = |digits: &str| {
            digits
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidRing(format!("bad modulus in {s:?}")))
        };
        match s {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            _ => {
                if let Some(p) = s.strip_prefix("Fp:") {
                    RingSpec::prime_field(modulus(p)?)
                } else if let Some(n) = s.strip_prefix("Zn:") {
                    RingSpec::residue_ring(modulus(n)?)
                } else {
                    Err(Error::InvalidRing(format!("unknown ring {s:?}")))
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Rep {
    Int(BigInt),
    Rat(BigRational),
}

/// An element of a [`RingSpec`], in canonical representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingValue {
    ring: RingSpec,
    rep: Rep,
}

impl RingValue {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.rep {
            Rep::Int(n) => n.is_zero(),
            Rep::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.rep {
            Rep::Int(n) => n.is_one(),
            Rep::Rat(q) => q.is_one(),
        }
    }

    /// True for negative integers and rationals; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.rep {
            Rep::Int(n) => n.is_negative(),
            Rep::Rat(q) => q.is_negative(),
        }
    }

    /// Integer representative: the value itself in `Z`, the residue in
    /// `[0, n)` for modular rings, `None` for non-integral rationals.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match &self.rep {
            Rep::Int(n) => Some(n.clone()),
            Rep::Rat(q) => q.is_integer().then(|| q.to_integer()),
        }
    }

    pub fn is_unit(&self) -> bool {
        match (&self.ring, &self.rep) {
            (RingSpec::Integers, Rep::Int(n)) => n.abs().is_one(),
            (RingSpec::Rationals, Rep::Rat(q)) => !q.is_zero(),
            (RingSpec::PrimeField(_), Rep::Int(n)) => !n.is_zero(),
            (RingSpec::ResidueRing(m), Rep::Int(n)) => n.gcd(m.value()).is_one(),
            _ => unreachable!("representation does not match ring"),
        }
    }

    pub fn invert(&self) -> Result<RingValue> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(format!("{self} in {}", self.ring)));
        }
        let rep = match (&self.ring, &self.rep) {
            (RingSpec::Integers, Rep::Int(n)) => Rep::Int(n.clone()),
            (RingSpec::Rationals, Rep::Rat(q)) => Rep::Rat(q.recip()),
            (RingSpec::PrimeField(m) | RingSpec::ResidueRing(m), Rep::Int(n)) => {
                let m = m.value();
                let egcd = n.extended_gcd(m);
                Rep::Int(egcd.x.mod_floor(m))
            }
            _ => unreachable!("representation does not match ring"),
        };
        Ok(RingValue {
            ring: self.ring.clone(),
            rep,
        })
    }

    pub fn pow(&self, mut exp: u32) -> RingValue {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_ring(&self, other: &RingValue) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ring_mismatch(&self.ring, &other.ring))
        }
    }

    pub fn try_add(&self, other: &RingValue) -> Result<RingValue> {
        self.check_ring(other)?;
        Ok(self.combine(other, |a, b| a + b, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &RingValue) -> Result<RingValue> {
        self.check_ring(other)?;
        Ok(self.combine(other, |a, b| a - b, |a, b| a - b))
    }

    pub fn try_mul(&self, other: &RingValue) -> Result<RingValue> {
        self.check_ring(other)?;
        Ok(self.combine(other, |a, b| a * b, |a, b| a * b))
    }

    fn combine(
        &self,
        other: &RingValue,
        int_op: impl Fn(&BigInt, &BigInt) -> BigInt,
        rat_op: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> RingValue {
        let rep = match (&self.rep, &other.rep) {
            (Rep::Int(a), Rep::Int(b)) => {
                let r = int_op(a, b);
                match self.ring.modulus() {
                    Some(m) => Rep::Int(r.mod_floor(m)),
                    None => Rep::Int(r),
                }
            }
            (Rep::Rat(a), Rep::Rat(b)) => Rep::Rat(rat_op(a, b)),
            _ => unreachable!("representation does not match ring"),
        };
        RingValue {
            ring: self.ring.clone(),
            rep,
        }
    }

    fn expect_same_ring(&self, other: &RingValue) {
        if let Err(e) = self.check_ring(other) {
            panic!("{e}");
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rep {
            Rep::Int(n) => write!(f, "{n}"),
            Rep::Rat(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Rep::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

// Operator forms panic on mixed rings; the `try_*` methods return
// `Error::RingMismatch` instead.
impl<'a> Add<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn add(self, rhs: &'a RingValue) -> RingValue {
        self.expect_same_ring(rhs);
        self.combine(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl<'a> Sub<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn sub(self, rhs: &'a RingValue) -> RingValue {
        self.expect_same_ring(rhs);
        self.combine(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl<'a> Mul<&'a RingValue> for &'a RingValue {
    type Output = RingValue;
    fn mul(self, rhs: &'a RingValue) -> RingValue {
        self.expect_same_ring(rhs);
        self.combine(rhs, |a, b| a * b, |a, b| a * b)
    }
}

impl Add for RingValue {
    type Output = RingValue;
    fn add(self, rhs: RingValue) -> RingValue {
        &self + &rhs
    }
}

impl Sub for RingValue {
    type Output = RingValue;
    fn sub(self, rhs: RingValue) -> RingValue {
        &self - &rhs
    }
}

impl Mul for RingValue {
    type Output = RingValue;
    fn mul(self, rhs: RingValue) -> RingValue {
        &self * &rhs
    }
}

impl AddAssign<&RingValue> for RingValue {
    fn add_assign(&mut self, rhs: &RingValue) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RingValue> for RingValue {
    fn sub_assign(&mut self, rhs: &RingValue) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RingValue> for RingValue {
    fn mul_assign(&mut self, rhs: &RingValue) {
        *self = &*self * rhs;
    }
}

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        let rep = match (&self.rep, self.ring.modulus()) {
            (Rep::Int(n), Some(m)) => Rep::Int((-n).mod_floor(m)),
            (Rep::Int(n), None) => Rep::Int(-n),
            (Rep::Rat(q), _) => Rep::Rat(-q),
        };
        RingValue {
            ring: self.ring.clone(),
            rep,
        }
    }
}

impl Neg for RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        -&self
    }
}

/// Binomial coefficient over the integers.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}

// Deterministic Miller-Rabin: these bases certify every n below 3.3e24.
const WITNESS_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn is_prime(n: &BigInt) -> Result<bool> {
    let two = BigInt::from(2);
    if n < &two {
        return Ok(false);
    }
    for &b in &WITNESS_BASES {
        let b = BigInt::from(b);
        if n == &b {
            return Ok(true);
        }
        if n.is_multiple_of(&b) {
            return Ok(false);
        }
    }
    let limit: BigInt = "3317044064679887385961981".parse().expect("constant");
    if n >= &limit {
        return Err(Error::InvalidRing(format!(
            "cannot certify primality of {n}; prime fields are limited to moduli below {limit}"
        )));
    }
    let n_minus_one = n - 1u32;
    let mut d = n_minus_one.clone();
    let mut r = 0u32;
    while d.is_even() {
        d >>= 1;
        r += 1;
    }
    'bases: for &b in &WITNESS_BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..r {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return Ok(false);
    }
    Ok(true)
}
