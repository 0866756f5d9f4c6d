//! Hyperplane covers of grids with multiplicities and of the Boolean cube.

use crate::error::{Error, HypothesisViolation, Result};
use crate::multiset::{Grid, GridPoint};
use crate::nonvanishing::{find_witness, Witness, WitnessMode, WitnessProblem};
use crate::poly::MultivarPoly;
use crate::ring::{RingSpec, RingValue};

/// The zero set of `(a, x) - b`. Stored exactly as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub coeffs: Vec<RingValue>,
    pub offset: RingValue,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<RingValue>, offset: RingValue) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.ring() != offset.ring()) {
            return Err(Error::ring_mismatch(offset.ring(), c.ring()));
        }
        Ok(Hyperplane { coeffs, offset })
    }

    pub fn ring(&self) -> &RingSpec {
        self.offset.ring()
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `(a, point) - b`.
    pub fn eval(&self, point: &[RingValue]) -> Result<RingValue> {
        if point.len() != self.coeffs.len() {
            return Err(Error::ArityMismatch {
                expected: self.coeffs.len(),
                found: point.len(),
            });
        }
        let mut acc = -&self.offset;
        for (a, x) in self.coeffs.iter().zip(point) {
            acc = acc.try_add(&a.try_mul(x)?)?;
        }
        Ok(acc)
    }

    pub fn contains(&self, point: &[RingValue]) -> Result<bool> {
        Ok(self.eval(point)?.is_zero())
    }

    /// The defining linear polynomial.
    pub fn to_poly(&self) -> MultivarPoly {
        let n = self.coeffs.len();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, a.clone())
            })
            .chain(std::iter::once((vec![0; n], -&self.offset)));
        MultivarPoly::from_terms(self.ring(), n, terms)
            .expect("coefficients share the offset's ring")
    }
}

/// Number of planes through `point`.
pub fn coverage_count(planes: &[Hyperplane], point: &[RingValue]) -> Result<usize> {
    let mut count = 0;
    for h in planes {
        if h.contains(point)? {
            count += 1;
        }
    }
    Ok(count)
}

/// A grid containing the origin and a family of planes over its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInstance {
    pub grid: Grid,
    pub planes: Vec<Hyperplane>,
}

impl CoverInstance {
    pub fn new(grid: Grid, planes: Vec<Hyperplane>) -> Result<Self> {
        for h in &planes {
            if h.ring() != grid.ring() {
                return Err(Error::ring_mismatch(grid.ring(), h.ring()));
            }
            if h.dim() != grid.dim() {
                return Err(Error::ArityMismatch {
                    expected: grid.dim(),
                    found: h.dim(),
                });
            }
        }
        let zero = grid.ring().zero();
        if let Some(i) = grid
            .factors()
            .iter()
            .position(|f| f.multiplicity(&zero).is_none())
        {
            return Err(HypothesisViolation::OriginMissing { factor: i }.into());
        }
        Ok(CoverInstance { grid, planes })
    }

    /// `sum d(S_i) - n`.
    pub fn bound(&self) -> u64 {
        self.grid.factors().iter().map(|f| f.size()).sum::<u64>() - self.grid.dim() as u64
    }

    fn origin(&self) -> Vec<RingValue> {
        vec![self.grid.ring().zero(); self.grid.dim()]
    }

    fn check_field_and_origin(&self) -> Result<()> {
        let ring = self.grid.ring();
        if !ring.is_field() {
            return Err(HypothesisViolation::NotAField(ring.to_string()).into());
        }
        let zero = ring.zero();
        for (i, f) in self.grid.factors().iter().enumerate() {
            match f.multiplicity(&zero) {
                Some(1) => {}
                Some(mult) => {
                    return Err(HypothesisViolation::OriginMultiplicity { factor: i, mult }.into())
                }
                None => return Err(HypothesisViolation::OriginMissing { factor: i }.into()),
            }
        }
        Ok(())
    }
}

/// Coverage a nonzero support point must receive: `|m(s)| - n + 1`,
/// clamped at zero.
pub fn required_coverage(point: &GridPoint) -> u64 {
    (point.mult_sum() + 1).saturating_sub(point.mults.len() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultCoverReport {
    /// Every nonzero support point is covered often enough and the origin
    /// is not covered.
    pub valid_cover: bool,
    pub bound_holds: bool,
    pub k: usize,
    pub bound: u64,
    pub origin_coverage: usize,
    /// First nonzero support point below its required coverage.
    pub undercovered: Option<Vec<RingValue>>,
    /// A valid cover with fewer planes than the bound.
    pub theorem_violation: bool,
}

pub fn check_mult_cover(instance: &CoverInstance) -> Result<MultCoverReport> {
    instance.check_field_and_origin()?;
    let origin = instance.origin();
    let origin_coverage = coverage_count(&instance.planes, &origin)?;
    let mut undercovered = None;
    for pt in instance.grid.points() {
        if pt.point == origin {
            continue;
        }
        let count = coverage_count(&instance.planes, &pt.point)? as u64;
        if count < required_coverage(&pt) {
            undercovered = Some(pt.point);
            break;
        }
    }
    let valid_cover = origin_coverage == 0 && undercovered.is_none();
    let k = instance.planes.len();
    let bound = instance.bound();
    let bound_holds = k as u64 >= bound;
    Ok(MultCoverReport {
        valid_cover,
        bound_holds,
        k,
        bound,
        origin_coverage,
        undercovered,
        theorem_violation: valid_cover && !bound_holds,
    })
}

/// The refutation built from a plane family with fewer than `sum d_i - n`
/// planes and the origin uncovered: the nonvanishing theorem applied to
/// `F = P - (P(0)/f(0)) f` locates a nonzero point that the planes cover
/// too rarely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringCertificate {
    /// `prod_i prod_{s != 0} (x_i - s)^m_i(s)`.
    pub p: MultivarPoly,
    /// Product of the plane polynomials.
    pub plane_product: MultivarPoly,
    /// `P - (P(0)/f(0)) f`.
    pub refutation: MultivarPoly,
    pub p_at_origin: RingValue,
    pub plane_product_at_origin: RingValue,
    pub witness: Witness,
    /// `P_u(s)` at the witness; always zero.
    pub p_coeff: RingValue,
    /// `f_u(s)` at the witness; nonzero.
    pub plane_coeff: RingValue,
    pub coverage: usize,
    pub required: u64,
}

impl CoveringCertificate {
    /// The witness point is covered fewer than `|m(s)| - n + 1` times.
    pub fn refutes_cover(&self) -> bool {
        (self.coverage as u64) < self.required
    }
}

pub fn covering_certificate(instance: &CoverInstance) -> Result<CoveringCertificate> {
    instance.check_field_and_origin()?;
    let grid = &instance.grid;
    let ring = grid.ring();
    let n = grid.dim();
    let origin = instance.origin();

    let k = instance.planes.len();
    let bound = instance.bound();
    if k as u64 >= bound {
        return Err(HypothesisViolation::NoCounterexample { k, bound }.into());
    }
    let origin_coverage = coverage_count(&instance.planes, &origin)?;
    if origin_coverage > 0 {
        return Err(HypothesisViolation::OriginCovered {
            count: origin_coverage,
        }
        .into());
    }

    let mut p = MultivarPoly::constant(ring.one(), n);
    for (i, factor) in grid.factors().iter().enumerate() {
        for (s, m) in factor.entries() {
            if !s.is_zero() {
                p = &p * &MultivarPoly::linear(s, n, i)?.pow(*m);
            }
        }
    }
    let mut plane_product = MultivarPoly::constant(ring.one(), n);
    for h in &instance.planes {
        plane_product = &plane_product * &h.to_poly();
    }
    let p0 = p.evaluate(&origin)?;
    let f0 = plane_product.evaluate(&origin)?;
    let ratio = &p0 * &f0.invert()?;
    let refutation = &p - &plane_product.scale(&ratio)?;

    let t: Vec<u32> = grid
        .factors()
        .iter()
        .map(|f| (f.size() - 1) as u32)
        .collect();
    let problem = WitnessProblem::new(refutation.clone(), t, grid.clone())?;
    let witness = find_witness(&problem, WitnessMode::Algebraic)?;
    if witness.point == origin {
        return Err(Error::InternalContradiction(
            "refutation polynomial is nonzero at the origin".into(),
        ));
    }
    let p_coeff = p.single_expansion_coeff(&witness.point, &witness.orders)?;
    if !p_coeff.is_zero() {
        return Err(Error::InternalContradiction(
            "P has a nonzero expansion coefficient at a nonzero support point".into(),
        ));
    }
    let plane_coeff = plane_product.single_expansion_coeff(&witness.point, &witness.orders)?;
    let coverage = coverage_count(&instance.planes, &witness.point)?;
    let indices: Vec<usize> = witness
        .point
        .iter()
        .zip(grid.factors())
        .map(|(s, f)| f.position(s).expect("witness lies on the grid"))
        .collect();
    let required = required_coverage(&grid.point_at(&indices));
    let cert = CoveringCertificate {
        p,
        plane_product,
        refutation,
        p_at_origin: p0,
        plane_product_at_origin: f0,
        witness,
        p_coeff,
        plane_coeff,
        coverage,
        required,
    };
    if !cert.refutes_cover() {
        return Err(Error::TheoremViolation(format!(
            "a point covered {} >= {} times carries a nonzero plane-product coefficient",
            cert.coverage, cert.required
        )));
    }
    Ok(cert)
}

/// Nonzero vertices of `{0,1}^n` in binary counting order.
pub fn cube_vertices(ring: &RingSpec, n: usize) -> Vec<Vec<RingValue>> {
    (1u64..1 << n)
        .map(|mask| {
            (0..n)
                .map(|i| {
                    if mask >> (n - 1 - i) & 1 == 1 {
                        ring.one()
                    } else {
                        ring.zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeCoverReport {
    pub covers_nonzero_vertices: bool,
    pub b_product_nonzero: bool,
    /// Both hypotheses hold.
    pub valid: bool,
    pub m: usize,
    pub n: usize,
    pub bound_holds: bool,
    pub uncovered: Vec<Vec<RingValue>>,
    pub theorem_violation: bool,
}

/// Checks exactly the cube-cover hypotheses: all nonzero vertices covered
/// and `prod b_i != 0`. Planes through the origin are not excluded.
pub fn check_cube_cover(
    planes: &[Hyperplane],
    ring: &RingSpec,
    n: usize,
) -> Result<CubeCoverReport> {
    for h in planes {
        if h.ring() != ring {
            return Err(Error::ring_mismatch(ring, h.ring()));
        }
        if h.dim() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: h.dim(),
            });
        }
    }
    let mut uncovered = Vec::new();
    for v in cube_vertices(ring, n) {
        if coverage_count(planes, &v)? == 0 {
            uncovered.push(v);
        }
    }
    let mut product = ring.one();
    for h in planes {
        product *= &h.offset;
    }
    let covers = uncovered.is_empty();
    let b_product_nonzero = !product.is_zero();
    let valid = covers && b_product_nonzero;
    let bound_holds = planes.len() >= n;
    Ok(CubeCoverReport {
        covers_nonzero_vertices: covers,
        b_product_nonzero,
        valid,
        m: planes.len(),
        n,
        bound_holds,
        uncovered,
        theorem_violation: valid && !bound_holds,
    })
}

/// Every plane `(a, x) - b` over a finite ring, optionally only `b != 0`.
pub fn full_pool(ring: &RingSpec, n: usize, nonzero_offset: bool) -> Result<Vec<Hyperplane>> {
    let elems = ring
        .elements()
        .ok_or_else(|| Error::InvalidArgument(format!("{ring} is not a small finite ring")))?;
    let q = elems.len();
    let total = q
        .checked_pow(n as u32 + 1)
        .filter(|&t| t <= 1 << 20)
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "plane pool over {ring} in {n} variables is too large"
            ))
        })?;
    let mut pool = Vec::new();
    for code in 0..total {
        let mut digits = Vec::with_capacity(n + 1);
        let mut c = code;
        for _ in 0..=n {
            digits.push(elems[c % q].clone());
            c /= q;
        }
        digits.reverse();
        let offset = digits.pop().expect("n + 1 digits");
        if nonzero_offset && offset.is_zero() {
            continue;
        }
        pool.push(Hyperplane::new(digits, offset)?);
    }
    Ok(pool)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSearchReport {
    /// Smallest plane count meeting both cube-cover hypotheses.
    pub minimum: Option<usize>,
    /// A family attaining the minimum.
    pub planes: Vec<Hyperplane>,
    /// Plane families examined.
    pub examined: u64,
    /// The cap was hit before the search finished.
    pub truncated: bool,
    /// A family with fewer than `n` planes meeting the hypotheses.
    pub violation: Option<Vec<Hyperplane>>,
}

/// Searches plane multisets drawn from `pool`, by increasing size up to
/// `max_size`, for the smallest family covering every nonzero vertex of
/// `{0,1}^n` with `prod b_i != 0`. At most `cap` families are examined.
pub fn search_min_cover(
    ring: &RingSpec,
    n: usize,
    pool: &[Hyperplane],
    max_size: usize,
    cap: u64,
) -> Result<CoverSearchReport> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidArgument(format!(
            "cube dimension {n} outside 1..=6"
        )));
    }
    let vertices = cube_vertices(ring, n);
    let full: u64 = if vertices.len() == 64 {
        u64::MAX
    } else {
        (1u64 << vertices.len()) - 1
    };
    let mut masks = Vec::with_capacity(pool.len());
    for h in pool {
        if h.ring() != ring {
            return Err(Error::ring_mismatch(ring, h.ring()));
        }
        let mut mask = 0u64;
        for (j, v) in vertices.iter().enumerate() {
            if h.contains(v)? {
                mask |= 1 << j;
            }
        }
        masks.push(mask);
    }

    let mut search = CubeSearch {
        pool,
        masks: &masks,
        full,
        cap,
        examined: 0,
        truncated: false,
        chosen: Vec::new(),
    };
    let mut report = CoverSearchReport {
        minimum: None,
        planes: Vec::new(),
        examined: 0,
        truncated: false,
        violation: None,
    };
    for size in 0..=max_size {
        let found = search.run(size, 0, 0, ring.one());
        if let Some(idx) = found {
            let planes: Vec<Hyperplane> = idx.iter().map(|&i| pool[i].clone()).collect();
            if size < n {
                report.violation = Some(planes.clone());
            }
            report.minimum = Some(size);
            report.planes = planes;
            break;
        }
        if search.truncated {
            break;
        }
    }
    report.examined = search.examined;
    report.truncated = search.truncated;
    Ok(report)
}

struct CubeSearch<'a> {
    pool: &'a [Hyperplane],
    masks: &'a [u64],
    full: u64,
    cap: u64,
    examined: u64,
    truncated: bool,
    chosen: Vec<usize>,
}

impl CubeSearch<'_> {
    fn run(
        &mut self,
        remaining: usize,
        start: usize,
        covered: u64,
        product: RingValue,
    ) -> Option<Vec<usize>> {
        if remaining == 0 {
            if self.examined >= self.cap {
                self.truncated = true;
                return None;
            }
            self.examined += 1;
            return (covered == self.full && !product.is_zero()).then(|| self.chosen.clone());
        }
        if product.is_zero() {
            return None;
        }
        for i in start..self.pool.len() {
            self.chosen.push(i);
            let next = &product * &self.pool[i].offset;
            let found = self.run(remaining - 1, i, covered | self.masks[i], next);
            self.chosen.pop();
            if found.is_some() {
                return found;
            }
            if self.truncated {
                return None;
            }
        }
        None
    }
}

/// Result of sweeping every plane multiset up to a size over one grid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultCoverSweep {
    pub plane_sets: u64,
    pub valid_covers: u64,
    /// Smallest `k` among valid covers found.
    pub min_valid_k: Option<usize>,
    /// Valid covers with fewer than `sum d_i - n` planes, as pool indices.
    pub violations: Vec<Vec<usize>>,
    pub truncated: bool,
}

/// Examines every multiset of at most `max_planes` planes from `pool`
/// against the multiplicity-cover hypotheses on `grid`.
pub fn sweep_mult_covers(
    grid: &Grid,
    pool: &[Hyperplane],
    max_planes: usize,
    cap: u64,
) -> Result<MultCoverSweep> {
    let instance = CoverInstance::new(grid.clone(), pool.to_vec())?;
    instance.check_field_and_origin()?;
    let bound = instance.bound();
    let origin = instance.origin();
    let points: Vec<GridPoint> = grid.points().filter(|p| p.point != origin).collect();
    let required: Vec<u64> = points.iter().map(required_coverage).collect();

    // Planes through the origin can never be part of a valid cover.
    let mut usable = Vec::new();
    let mut hits: Vec<Vec<usize>> = Vec::new();
    for (i, h) in pool.iter().enumerate() {
        if h.contains(&origin)? {
            continue;
        }
        let mut covered = Vec::new();
        for (j, p) in points.iter().enumerate() {
            if h.contains(&p.point)? {
                covered.push(j);
            }
        }
        usable.push(i);
        hits.push(covered);
    }

    let mut sweep = MultCoverSweep::default();
    let mut counts = vec![0u64; points.len()];
    let mut chosen = Vec::new();
    sweep_rec(
        &SweepCtx {
            usable: &usable,
            hits: &hits,
            required: &required,
            bound,
            max_planes,
            cap,
        },
        0,
        &mut counts,
        &mut chosen,
        &mut sweep,
    );
    Ok(sweep)
}

struct SweepCtx<'a> {
    usable: &'a [usize],
    hits: &'a [Vec<usize>],
    required: &'a [u64],
    bound: u64,
    max_planes: usize,
    cap: u64,
}

fn sweep_rec(
    ctx: &SweepCtx<'_>,
    start: usize,
    counts: &mut [u64],
    chosen: &mut Vec<usize>,
    out: &mut MultCoverSweep,
) {
    if out.plane_sets >= ctx.cap {
        out.truncated = true;
        return;
    }
    out.plane_sets += 1;
    if counts.iter().zip(ctx.required).all(|(c, r)| c >= r) {
        out.valid_covers += 1;
        let k = chosen.len();
        out.min_valid_k = Some(out.min_valid_k.map_or(k, |m| m.min(k)));
        if (k as u64) < ctx.bound {
            out.violations
                .push(chosen.iter().map(|&i| ctx.usable[i]).collect());
        }
    }
    if chosen.len() == ctx.max_planes {
        return;
    }
    for i in start..ctx.usable.len() {
        for &j in &ctx.hits[i] {
            counts[j] += 1;
        }
        chosen.push(i);
        sweep_rec(ctx, i, counts, chosen, out);
        chosen.pop();
        for &j in &ctx.hits[i] {
            counts[j] -= 1;
        }
        if out.truncated {
            return;
        }
    }
}
