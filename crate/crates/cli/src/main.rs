use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use nullstellensatz::applications::{
    check_cube_cover, check_mult_cover, check_snevily_fp, covering_certificate, full_pool,
    search_min_cover, snevily_sweep,
};
use nullstellensatz::io::{self, InstanceJson, InterpolationJson};
use nullstellensatz::random::{random_multiset, random_witness_problem};
use nullstellensatz::{
    alpha_table, certificate_sum, find_witness, hermite_interpolate, parse_poly, reduce_with,
    Error, Grid, MultivarPoly, ReductionStrategy, RingSpec, WitnessMode, WitnessProblem,
};

#[derive(Parser)]
#[command(
    name = "nullstellensatz",
    version,
    about = "Polynomial-method computations over commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyArgs {
    /// Ring: Z, Q, Fp:<p> or Zn:<n>.
    #[arg(long)]
    ring: String,
    /// Polynomial expression in x1, x2, ..., or @file.
    #[arg(long)]
    poly: String,
    #[arg(long)]
    nvars: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients f_u(s) of f in powers of (x - s).
    Expand {
        #[command(flatten)]
        poly: PolyArgs,
        /// Base point, comma separated.
        #[arg(long)]
        at: String,
        /// Exclusive per-variable bounds on u, comma separated.
        #[arg(long)]
        bounds: String,
    },
    /// Reduce modulo the grid vanishing polynomials.
    Reduce {
        #[command(flatten)]
        poly: PolyArgs,
        /// JSON array of sets, inline or @file.
        #[arg(long)]
        sets: String,
        #[arg(long, value_enum, default_value_t = Strategy::GradedLex)]
        strategy: Strategy,
    },
    /// Hermite interpolation on a multiset.
    Interpolate {
        #[arg(long)]
        ring: String,
        /// {"multiset": ..., "values": [{"s", "u", "y"}]}, inline or @file.
        #[arg(long)]
        data: String,
    },
    /// Find a nonvanishing witness on a grid.
    Witness {
        #[command(flatten)]
        poly: PolyArgs,
        /// JSON array of multisets, inline or @file.
        #[arg(long)]
        grid: String,
        /// Target exponent, comma separated.
        #[arg(long)]
        t: String,
        #[arg(long, value_enum, default_value_t = Mode::Algebraic)]
        mode: Mode,
    },
    /// Check a hyperplane cover against its bound.
    CoverCheck {
        #[arg(long, value_enum)]
        mode: CoverMode,
        /// Instance JSON, inline or @file.
        #[arg(long)]
        instance: String,
        /// Overrides or supplies the instance ring.
        #[arg(long)]
        ring: Option<String>,
        /// Also build the refutation certificate (multiplicity covers below the bound).
        #[arg(long)]
        certificate: bool,
    },
    /// Smallest cube cover drawn from a plane pool.
    CoverSearch {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        n: usize,
        /// JSON array of planes; defaults to every plane with b != 0.
        #[arg(long)]
        pool: Option<String>,
        /// Largest family size tried; defaults to n.
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 10_000_000)]
        max_cases: u64,
    },
    /// Search for a Snevily permutation in F_p.
    Snevily {
        #[arg(long)]
        p: u64,
        #[arg(long, required_unless_present = "exhaustive")]
        a: Option<String>,
        #[arg(long, required_unless_present = "exhaustive")]
        b: Option<String>,
        /// Sweep every canonical pair of sequences instead.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        exhaustive: bool,
    },
    /// Check the alpha moment identities and the certificate sum.
    VerifyIdentities {
        #[arg(long)]
        ring: String,
        /// Multiset to check; random multisets and problems otherwise.
        #[arg(long)]
        multiset: Option<String>,
        /// With --multiset: polynomial for the certificate-sum check.
        #[arg(long, requires = "multiset")]
        poly: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        max_cases: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    GradedLex,
    Lex,
    GradedLexAscending,
    LastVariableFirst,
}

impl From<Strategy> for ReductionStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::GradedLex => ReductionStrategy::GradedLex,
            Strategy::Lex => ReductionStrategy::Lex,
            Strategy::GradedLexAscending => ReductionStrategy::GradedLexAscending,
            Strategy::LastVariableFirst => ReductionStrategy::LastVariableFirst,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Algebraic,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverMode {
    Mult,
    Cube,
}

/// A finished command: JSON for stdout and whether it detected a theorem
/// violation.
struct Outcome {
    output: Value,
    violation: bool,
}

impl From<Value> for Outcome {
    fn from(output: Value) -> Self {
        Outcome {
            output,
            violation: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.output);
            if outcome.violation {
                eprintln!("error: theorem violation detected");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Hypothesis(_) | Error::NotAUnit(_) => 1,
        Error::TheoremViolation(_) | Error::InternalContradiction(_) => 3,
        _ => 2,
    }
}

/// `@path` reads a file, as does a bare path naming an existing file;
/// anything else is taken literally.
fn resolve(arg: &str) -> nullstellensatz::Result<String> {
    let path = match arg.strip_prefix('@') {
        Some(path) => path,
        None if std::path::Path::new(arg).is_file() => arg,
        None => return Ok(arg.to_string()),
    };
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))
}

fn ring(text: &str) -> nullstellensatz::Result<RingSpec> {
    text.parse()
}

fn list<T: std::str::FromStr>(text: &str, what: &str) -> nullstellensatz::Result<Vec<T>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::InvalidArgument(format!("bad {what} entry {s:?}")))
        })
        .collect()
}

fn load_poly(args: &PolyArgs) -> nullstellensatz::Result<(RingSpec, MultivarPoly)> {
    let r = ring(&args.ring)?;
    let p = parse_poly(resolve(&args.poly)?.trim(), &r, args.nvars)?;
    Ok((r, p))
}

fn run(command: Command) -> nullstellensatz::Result<Outcome> {
    match command {
        Command::Expand { poly, at, bounds } => {
            let (r, p) = load_poly(&poly)?;
            let point = at
                .split(',')
                .map(|s| r.parse_value(s.trim()))
                .collect::<nullstellensatz::Result<Vec<_>>>()?;
            let bounds: Vec<u32> = list(&bounds, "bound")?;
            let table = p.expand_at(&point, &bounds)?;
            Ok(io::expansion_to_json(&table).into())
        }
        Command::Reduce {
            poly,
            sets,
            strategy,
        } => {
            let (r, p) = load_poly(&poly)?;
            let grid = io::parse_grid(&resolve(&sets)?, &r)?;
            let result = reduce_with(&p, grid.factors(), strategy.into())?;
            Ok(io::reduction_to_json(&result).into())
        }
        Command::Interpolate {
            ring: ring_text,
            data,
        } => {
            let r = ring(&ring_text)?;
            let parsed: InterpolationJson = serde_json::from_str(&resolve(&data)?)?;
            let h = hermite_interpolate(&parsed.to_data(&r)?)?;
            Ok(json!({"poly": h.to_string(), "terms": io::poly_to_json(&h)}).into())
        }
        Command::Witness {
            poly,
            grid,
            t,
            mode,
        } => {
            let (r, p) = load_poly(&poly)?;
            let grid = io::parse_grid(&resolve(&grid)?, &r)?;
            let t: Vec<u32> = list(&t, "t")?;
            witness(p, t, grid, mode)
        }
        Command::CoverCheck {
            mode,
            instance,
            ring: ring_text,
            certificate,
        } => {
            let parsed: InstanceJson = serde_json::from_str(&resolve(&instance)?)?;
            let r = match ring_text {
                Some(text) => ring(&text)?,
                None => parsed.declared_ring()?.ok_or_else(|| {
                    Error::InvalidArgument("no ring given by --ring or the instance".into())
                })?,
            };
            cover_check(&parsed, &r, mode, certificate)
        }
        Command::CoverSearch {
            ring: ring_text,
            n,
            pool,
            max_size,
            max_cases,
        } => {
            let r = ring(&ring_text)?;
            let pool = match pool {
                Some(text) => io::parse_planes(&resolve(&text)?, &r)?,
                None => full_pool(&r, n, true)?,
            };
            let report = search_min_cover(&r, n, &pool, max_size.unwrap_or(n), max_cases)?;
            Ok(Outcome {
                output: io::cover_search_to_json(&report),
                violation: report.violation.is_some(),
            })
        }
        Command::Snevily {
            p,
            a,
            b,
            exhaustive,
        } => snevily(p, a, b, exhaustive),
        Command::VerifyIdentities {
            ring: ring_text,
            multiset,
            poly,
            seed,
            max_cases,
        } => {
            let r = ring(&ring_text)?;
            verify_identities(&r, multiset.as_deref(), poly.as_deref(), seed, max_cases)
        }
    }
}

fn witness(
    p: MultivarPoly,
    t: Vec<u32>,
    grid: Grid,
    mode: Mode,
) -> nullstellensatz::Result<Outcome> {
    let problem = WitnessProblem::new(p, t, grid)?;
    let mode = match mode {
        Mode::Algebraic => WitnessMode::Algebraic,
        Mode::Exhaustive => WitnessMode::Exhaustive,
    };
    let w = find_witness(&problem, mode)?;
    if !w.verify(problem.poly(), problem.grid())? {
        return Err(Error::InternalContradiction(
            "returned witness does not verify".into(),
        ));
    }
    let mut out = io::witness_to_json(&w);
    out["verified"] = json!(true);
    if matches!(mode, WitnessMode::Algebraic) {
        out["certificate_sum"] = json!(certificate_sum(&problem)?.to_string());
    }
    Ok(out.into())
}

fn cover_check(
    parsed: &InstanceJson,
    r: &RingSpec,
    mode: CoverMode,
    certificate: bool,
) -> nullstellensatz::Result<Outcome> {
    match mode {
        CoverMode::Mult => {
            let instance = parsed.to_cover_instance(r)?;
            let report = check_mult_cover(&instance)?;
            let mut out = io::mult_cover_to_json(&report);
            if certificate {
                out["certificate"] = io::certificate_to_json(&covering_certificate(&instance)?);
            }
            Ok(Outcome {
                output: out,
                violation: report.theorem_violation,
            })
        }
        CoverMode::Cube => {
            let planes = parsed.planes(r)?;
            let report = check_cube_cover(&planes, r, parsed.cube_dim()?)?;
            Ok(Outcome {
                output: io::cube_cover_to_json(&report),
                violation: report.theorem_violation,
            })
        }
    }
}

fn snevily(
    p: u64,
    a: Option<String>,
    b: Option<String>,
    exhaustive: bool,
) -> nullstellensatz::Result<Outcome> {
    if exhaustive {
        let sweep = snevily_sweep(p)?;
        if !sweep.counterexamples.is_empty() {
            eprintln!(
                "warning: {} canonical pairs in F_{p} admit no permutation",
                sweep.counterexamples.len()
            );
        }
        let examples: Vec<Value> = sweep
            .counterexamples
            .iter()
            .map(|(a, b)| json!({"a": a, "b": b}))
            .collect();
        return Ok(json!({"p": p, "tuples": sweep.tuples, "counterexamples": examples}).into());
    }
    let a: Vec<u64> = list(a.as_deref().unwrap_or_default(), "a")?;
    let b: Vec<u64> = list(b.as_deref().unwrap_or_default(), "b")?;
    let found = check_snevily_fp(p, &a, &b)?;
    if found.is_none() {
        eprintln!("warning: no permutation exists for these sequences; the conjecture fails here");
    }
    Ok(json!({
        "permutation": found,
        "conjecture_fails": found.is_none(),
    })
    .into())
}

fn verify_identities(
    r: &RingSpec,
    multiset: Option<&str>,
    poly: Option<&str>,
    seed: u64,
    max_cases: usize,
) -> nullstellensatz::Result<Outcome> {
    let mut moment_failures = Vec::new();
    let mut certificate_failures = Vec::new();
    let mut multisets = 0usize;
    let mut problems = 0usize;

    if let Some(text) = multiset {
        let ms = io::parse_multiset(&resolve(text)?, r)?;
        multisets += 1;
        let table = alpha_table(&ms)?;
        if let Some(l) = table.first_moment_failure() {
            moment_failures
                .push(json!({"multiset": io::grid_to_json(&Grid::new(vec![ms.clone()])?), "l": l}));
        }
        if let Some(text) = poly {
            let f = parse_poly(resolve(text)?.trim(), r, Some(1))?;
            let t = u32::try_from(ms.size() - 1)
                .map_err(|_| Error::InvalidArgument("multiset too large".into()))?;
            let problem = WitnessProblem::new(f, vec![t], Grid::new(vec![ms])?)?;
            problems += 1;
            let sum = certificate_sum(&problem)?;
            let expected = problem.poly().coefficient_of(problem.t())?;
            if sum != expected {
                certificate_failures
                    .push(json!({"sum": sum.to_string(), "coefficient": expected.to_string()}));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..max_cases {
            let ms = random_multiset(&mut rng, r, 3, 3);
            multisets += 1;
            match alpha_table(&ms) {
                Ok(table) => {
                    if let Some(l) = table.first_moment_failure() {
                        moment_failures.push(
                            json!({"multiset": io::grid_to_json(&Grid::new(vec![ms])?), "l": l}),
                        );
                    }
                }
                Err(Error::InternalContradiction(msg)) => {
                    moment_failures.push(json!({"error": msg}))
                }
                Err(e) => return Err(e),
            }
            let problem = random_witness_problem(&mut rng, r, 3, 6)?;
            problems += 1;
            let sum = certificate_sum(&problem)?;
            let expected = problem.poly().coefficient_of(problem.t())?;
            if sum != expected {
                certificate_failures.push(json!({
                    "poly": problem.poly().to_string(),
                    "t": problem.t(),
                    "grid": io::grid_to_json(problem.grid()),
                    "sum": sum.to_string(),
                    "coefficient": expected.to_string(),
                }));
            }
        }
    }
    let violation = !moment_failures.is_empty() || !certificate_failures.is_empty();
    Ok(Outcome {
        output: json!({
            "ring": r.to_string(),
            "multisets": multisets,
            "problems": problems,
            "moment_failures": moment_failures,
            "certificate_failures": certificate_failures,
        }),
        violation,
    })
}
