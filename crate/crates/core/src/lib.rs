//! Exact polynomial-method toolkit over commutative rings.
//!
//! Expansion coefficients `f_u(s)` of a polynomial at a point, Hermite
//! interpolation over multisets whose elements differ by units, reduction
//! modulo grid vanishing polynomials, nonvanishing witnesses on grids with
//! multiplicities, and the hyperplane-covering and Snevily applications.

pub mod applications;
pub mod error;
pub mod hermite;
pub mod io;
pub mod multiset;
pub mod nonvanishing;
pub mod parse;
pub mod poly;
pub mod random;
pub mod reduction;
pub mod ring;

pub use error::{Error, HypothesisViolation, Result};
pub use hermite::{
    alpha_table, base_polynomial, base_polynomials_at, divisibility_status, hermite_interpolate,
    AlphaTable, Divisibility, InterpolationData,
};
pub use multiset::{check_unit_differences, Grid, GridPoint, Multiset};
pub use nonvanishing::{
    certificate_sum, find_witness, normalize_problem, Witness, WitnessMode, WitnessProblem,
};
pub use parse::parse_poly;
pub use poly::{Degree, ExpansionTable, Exponent, ExponentBox, MultivarPoly};
pub use reduction::{
    groebner_remainder_stability, in_ideal, reduce, reduce_with, ReductionResult, ReductionStrategy,
};
pub use ring::{binomial, RingSpec, RingValue};
