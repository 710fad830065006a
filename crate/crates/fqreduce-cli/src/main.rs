//! Command-line driver: factorization and the reduction web over prime
//! fields, with text-line polynomial I/O.
//!
//! Exit codes: 0 success, 1 parse/usage, 2 precondition violation,
//! 3 oracle or validation failure. Diagnostics go to stderr only.

use clap::{Parser, Subcommand, ValueEnum};
use fqreduce::bench::{fit_loglog, BenchRecord, CSV_HEADER};
use fqreduce::carlitz::{carlitz_charpoly, CharPolyMode};
use fqreduce::error::Error;
use fqreduce::factor::{factor, factor_degree_ref, trial_factor};
use fqreduce::frobenius::{frob_minpoly, FrobMode, FrobTable};
use fqreduce::moore::{moore_zero_test, vandermonde_det};
use fqreduce::poly::{is_squarefree, random_monic_squarefree};
use fqreduce::reductions::{
    easy_directions, factor_degree_via_carlitz, factor_degree_via_determinant,
    reduce_factor_via_factordegree, reduce_factor_via_frobminpoly, validate_factor_degree,
    DetVariant, EasyTarget, OracleMode, OracleSet,
};
use fqreduce::sqfree::squarefree_decompose;
use fqreduce::text::{format_factorization, format_poly, parse_poly_line};
use fqreduce::{Factorization, ModCtx, Poly, PrimeField, Rng};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const DEFAULT_SEED: u64 = 0x5EED_CAFE_F00D_0001;

#[derive(Parser)]
#[command(
    name = "fqreduce",
    version,
    about = "Polynomial factorization over prime fields and its reduction web",
    long_about = "Reads polynomials as lines of the form `q=<prime> f=<c0>,<c1>,...,<cn>`\n\
        (decimal coefficients, ascending degree) from stdin or --in FILE, one\n\
        instance per line. Results go to stdout, diagnostics to stderr.\n\
        Exit codes: 0 ok, 1 parse/usage, 2 precondition, 3 oracle/validation failure.\n\
        The random seed comes from --seed, else the FQREDUCE_SEED environment\n\
        variable, else a fixed default; identical seed and input give identical output."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum FactorVia {
    /// Direct engine: squarefree decomposition + DDF + EDF.
    Reference,
    /// Reduction through a Frobenius minimal polynomial oracle.
    Frobminpoly,
    /// Reduction through a factor-degree oracle.
    Factordegree,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OracleChoice {
    /// Oracles answered by the reference factorization engine.
    Reference,
    /// Factorization-free oracles.
    Independent,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum DegreeVia {
    /// Smallest factor degree by distinct-degree iteration.
    Ddf,
    /// Smallest factor degree from the Carlitz characteristic polynomial
    /// (validated; untrusted when p divides the smallest-degree count).
    Carlitz,
    /// Largest factor degree by Moore determinant zero tests.
    Moore,
    /// Largest factor degree by Vandermonde determinant zero tests.
    Vandermonde,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum PolyMode {
    Independent,
    Reference,
}

#[derive(Subcommand)]
enum Cmd {
    /// Factor monic polynomials into canonical irreducible factors.
    Factor {
        #[arg(long, value_enum, default_value_t = FactorVia::Reference)]
        via: FactorVia,
        #[arg(long, value_enum, default_value_t = OracleChoice::Independent)]
        oracle: OracleChoice,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Report one irreducible factor degree of a squarefree input.
    FactorDegree {
        #[arg(long, value_enum, default_value_t = DegreeVia::Ddf)]
        via: DegreeVia,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Minimal polynomial of the Frobenius endomorphism on F_q[x]/(f).
    FrobMinpoly {
        #[arg(long, value_enum, default_value_t = PolyMode::Independent)]
        mode: PolyMode,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Characteristic polynomial of the Frobenius endomorphism
    /// (assembled from reference factor degrees).
    FrobCharpoly {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Characteristic polynomial of the Carlitz action rho_x.
    CarlitzCharpoly {
        #[arg(long, value_enum, default_value_t = PolyMode::Independent)]
        mode: PolyMode,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Decide whether the Moore determinant Delta(1, x, ..., x^m) vanishes
    /// mod f; prints ZERO or NONZERO.
    MooreDet {
        #[arg(long)]
        m: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Decide whether the Vandermonde determinant over the index set S_m
    /// vanishes mod f; prints ZERO or NONZERO plus the residue.
    VandermondeDet {
        #[arg(long)]
        m: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Emit a random monic squarefree polynomial.
    Gen {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Timing harness: CSV rows (stdout or --out) and per-q log-log slope
    /// fits (stderr). Slopes are reports, not assertions.
    Bench {
        #[arg(long)]
        problem: String,
        #[arg(long, value_delimiter = ',')]
        q_list: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: u32,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the embedded exhaustive cross-check suites.
    Selftest,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("FQREDUCE_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_SEED)
}

fn fail(e: &Error) -> u8 {
    eprintln!("error: {e}");
    exit_code_for(e)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InsufficientData(_) => 1,
        Error::NotPrime(_)
        | Error::TooLarge(_)
        | Error::NotMonic
        | Error::NotSquarefree
        | Error::BadInput(_)
        | Error::EmptyRange
        | Error::BothZero
        | Error::DivisionByZero => 2,
        _ => 3,
    }
}

fn read_inputs(input: &Option<PathBuf>) -> Result<Vec<Poly>, u8> {
    let mut text = String::new();
    match input {
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| {
                eprintln!("error: cannot read {}: {e}", path.display());
                1u8
            })?;
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| {
                eprintln!("error: cannot read stdin: {e}");
                1u8
            })?;
        }
    }
    let mut out = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_poly_line(line).map_err(|e| fail(&e))?);
    }
    if out.is_empty() {
        eprintln!("error: no input polynomials");
        return Err(1);
    }
    Ok(out)
}

fn require_monic_nonconstant(f: &Poly) -> Result<(), u8> {
    if f.is_zero() || f.is_constant() || !f.is_monic() {
        eprintln!("error: input must be monic and nonconstant");
        return Err(2);
    }
    Ok(())
}

fn require_squarefree(f: &Poly) -> Result<(), u8> {
    require_monic_nonconstant(f)?;
    if !is_squarefree(f) {
        eprintln!("error: input must be squarefree");
        return Err(2);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), u8> {
    match cli.cmd {
        Cmd::Factor {
            via,
            oracle,
            seed,
            input,
        } => cmd_factor(via, oracle, resolve_seed(seed), &input),
        Cmd::FactorDegree { via, seed, input } => {
            cmd_factor_degree(via, resolve_seed(seed), &input)
        }
        Cmd::FrobMinpoly { mode, seed, input } => {
            let mut rng = Rng::new(resolve_seed(seed));
            for f in read_inputs(&input)? {
                require_squarefree(&f)?;
                let ctx = ModCtx::new(f.clone()).map_err(|e| fail(&e))?;
                let fm = match mode {
                    PolyMode::Independent => FrobMode::Independent,
                    PolyMode::Reference => FrobMode::Reference,
                };
                let g = frob_minpoly(&ctx, &mut rng, fm).map_err(|e| fail(&e))?;
                println!("{}", format_poly(&g));
            }
            Ok(())
        }
        Cmd::FrobCharpoly { seed, input } => {
            let mut rng = Rng::new(resolve_seed(seed));
            for f in read_inputs(&input)? {
                require_squarefree(&f)?;
                let g = easy_directions(&f, EasyTarget::FrobCharPoly, &mut rng)
                    .map_err(|e| fail(&e))?;
                println!("{}", format_poly(&g));
            }
            Ok(())
        }
        Cmd::CarlitzCharpoly { mode, seed, input } => {
            let mut rng = Rng::new(resolve_seed(seed));
            for f in read_inputs(&input)? {
                require_squarefree(&f)?;
                let chi = match mode {
                    PolyMode::Independent => {
                        carlitz_charpoly(&f, CharPolyMode::Direct).map_err(|e| fail(&e))?
                    }
                    PolyMode::Reference => {
                        easy_directions(&f, EasyTarget::CarlitzCharPoly, &mut rng)
                            .map_err(|e| fail(&e))?
                    }
                };
                println!("{}", format_poly(&chi));
            }
            Ok(())
        }
        Cmd::MooreDet { m, input } => {
            for f in read_inputs(&input)? {
                require_squarefree(&f)?;
                check_m(m, &f)?;
                let ctx = ModCtx::new(f.clone()).map_err(|e| fail(&e))?;
                let mut table = FrobTable::new(&ctx);
                let zero = moore_zero_test(&ctx, m, &mut table);
                println!("{}", if zero { "ZERO" } else { "NONZERO" });
            }
            Ok(())
        }
        Cmd::VandermondeDet { m, input } => {
            for f in read_inputs(&input)? {
                require_squarefree(&f)?;
                check_m(m, &f)?;
                let ctx = ModCtx::new(f.clone()).map_err(|e| fail(&e))?;
                let mut table = FrobTable::new(&ctx);
                let v = vandermonde_det(&ctx, m, &mut table);
                println!("{}", if v.is_zero() { "ZERO" } else { "NONZERO" });
                println!("{}", format_poly(&v));
            }
            Ok(())
        }
        Cmd::Gen { q, deg, seed } => {
            let field = PrimeField::new(q).map_err(|e| fail(&e))?;
            if deg < 1 {
                eprintln!("error: --deg must be at least 1");
                return Err(2);
            }
            let mut rng = Rng::new(resolve_seed(seed));
            let f = random_monic_squarefree(field, deg, &mut rng);
            println!("{}", format_poly(&f));
            Ok(())
        }
        Cmd::Bench {
            problem,
            q_list,
            n_list,
            reps,
            seed,
            out,
        } => cmd_bench(&problem, &q_list, &n_list, reps, resolve_seed(seed), &out),
        Cmd::Selftest => cmd_selftest(),
    }
}

fn check_m(m: usize, f: &Poly) -> Result<(), u8> {
    if m < 1 || m > f.degree() {
        eprintln!("error: need 1 <= m <= deg f = {}", f.degree());
        return Err(2);
    }
    Ok(())
}

fn cmd_factor(
    via: FactorVia,
    oracle: OracleChoice,
    seed: u64,
    input: &Option<PathBuf>,
) -> Result<(), u8> {
    let mut rng = Rng::new(seed);
    let mode = match oracle {
        OracleChoice::Reference => OracleMode::Reference,
        OracleChoice::Independent => OracleMode::Independent,
    };
    let mut fallback_seen = false;
    for f in read_inputs(input)? {
        require_monic_nonconstant(&f)?;
        let fz = match via {
            FactorVia::Reference => factor(&f, &mut rng).map_err(|e| fail(&e))?,
            FactorVia::Frobminpoly | FactorVia::Factordegree => {
                // The reductions expect squarefree inputs; decompose first
                // and carry multiplicities through.
                let oracles = OracleSet::all(mode);
                let mut items: Vec<(Poly, u32)> = Vec::new();
                for (g, e) in squarefree_decompose(&f).map_err(|e| fail(&e))? {
                    let part = match via {
                        FactorVia::Frobminpoly => {
                            let (fz, diag) =
                                reduce_factor_via_frobminpoly(&g, &oracles, &mut rng)
                                    .map_err(|e| fail(&e))?;
                            if diag.fallback_used {
                                eprintln!(
                                    "warning: reference fallback used while factoring {}",
                                    format_poly(&g)
                                );
                                fallback_seen = true;
                            }
                            fz
                        }
                        FactorVia::Factordegree => {
                            reduce_factor_via_factordegree(&g, &oracles, None, &mut rng)
                                .map_err(|e| fail(&e))?
                        }
                        FactorVia::Reference => unreachable!(),
                    };
                    for (p, m) in part.factors() {
                        items.push((p.clone(), m * e as u32));
                    }
                }
                Factorization::new(f.field(), items)
            }
        };
        print!("{}", format_factorization(&fz));
    }
    if fallback_seen {
        return Err(3);
    }
    Ok(())
}

fn cmd_factor_degree(via: DegreeVia, seed: u64, input: &Option<PathBuf>) -> Result<(), u8> {
    let mut rng = Rng::new(seed);
    for f in read_inputs(input)? {
        require_squarefree(&f)?;
        match via {
            DegreeVia::Ddf => {
                let d = factor_degree_ref(&f).map_err(|e| fail(&e))?;
                println!("{d}");
            }
            DegreeVia::Carlitz => {
                let oracles = OracleSet::independent();
                let d = factor_degree_via_carlitz(&f, &oracles, &mut rng)
                    .map_err(|e| fail(&e))?;
                let valid = validate_factor_degree(&f, d).map_err(|e| fail(&e))?;
                println!("{d} {}", if valid { "VALIDATED" } else { "UNVALIDATED" });
                if !valid {
                    eprintln!("error: carlitz degree estimate failed gcd validation");
                    return Err(3);
                }
            }
            DegreeVia::Moore | DegreeVia::Vandermonde => {
                let variant = if via == DegreeVia::Moore {
                    DetVariant::Moore
                } else {
                    DetVariant::Vandermonde
                };
                let oracles = OracleSet::independent();
                let (d, _) = factor_degree_via_determinant(&f, variant, &oracles, &mut rng)
                    .map_err(|e| fail(&e))?;
                println!("{d}");
            }
        }
    }
    Ok(())
}

fn cmd_bench(
    problem: &str,
    q_list: &[u64],
    n_list: &[usize],
    reps: u32,
    seed: u64,
    out: &Option<PathBuf>,
) -> Result<(), u8> {
    if q_list.is_empty() || n_list.is_empty() || reps == 0 {
        eprintln!("error: bench needs --q-list, --n-list and --reps >= 1");
        return Err(1);
    }
    let mut records: Vec<BenchRecord> = Vec::new();
    let mut master = Rng::new(seed);
    for &q in q_list {
        let field = PrimeField::new(q).map_err(|e| fail(&e))?;
        for &n in n_list {
            if n < 1 {
                eprintln!("error: degrees must be positive");
                return Err(1);
            }
            for rep in 0..reps {
                let cell_seed = master.next_u64();
                let mut rng = Rng::new(cell_seed);
                let f = random_monic_squarefree(field, n, &mut rng);
                let (nanos, oracle_calls, success) =
                    run_bench_problem(problem, &f, &mut rng).map_err(|e| fail(&e))?;
                records.push(BenchRecord {
                    problem: problem.to_string(),
                    q,
                    n,
                    seed: cell_seed,
                    rep,
                    nanos,
                    oracle_calls,
                    success,
                });
            }
        }
    }

    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in &records {
        csv.push_str(&r.csv_row());
        csv.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, &csv).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            1u8
        })?,
        None => print!("{csv}"),
    }

    match fit_loglog(&records) {
        Ok(fits) => {
            for fit in fits {
                eprintln!(
                    "fit problem={problem} q={} slope={:.4} intercept={:.4} r2={:.6} points={}",
                    fit.q, fit.slope, fit.intercept, fit.r2, fit.points
                );
            }
        }
        Err(e) => eprintln!("fit skipped: {e}"),
    }
    Ok(())
}

fn run_bench_problem(problem: &str, f: &Poly, rng: &mut Rng) -> fqreduce::Result<(u128, u64, bool)> {
    let start = Instant::now();
    let (oracle_calls, success) = match problem {
        "factor" => {
            let fz = factor(f, rng)?;
            (0, fz.product() == *f)
        }
        "factor-frobminpoly" => {
            let oracles = OracleSet::independent();
            let (fz, diag) = reduce_factor_via_frobminpoly(f, &oracles, rng)?;
            (
                oracles.counters().frob_minpoly_calls.get(),
                fz.product() == *f && !diag.fallback_used,
            )
        }
        "factor-factordegree" => {
            let oracles = OracleSet::independent();
            let fz = reduce_factor_via_factordegree(f, &oracles, None, rng)?;
            (
                oracles.counters().factor_degree_calls.get(),
                fz.product() == *f,
            )
        }
        "frob-minpoly" => {
            let ctx = ModCtx::new(f.clone())?;
            let g = frob_minpoly(&ctx, rng, FrobMode::Independent)?;
            (0, !g.is_zero())
        }
        "carlitz-charpoly" => {
            let chi = carlitz_charpoly(f, CharPolyMode::Direct)?;
            (0, chi.degree() == f.degree())
        }
        "factor-degree" => {
            let d = factor_degree_ref(f)?;
            (0, d >= 1)
        }
        "moore-det" | "vandermonde-det" => {
            let variant = if problem == "moore-det" {
                DetVariant::Moore
            } else {
                DetVariant::Vandermonde
            };
            let oracles = OracleSet::independent();
            let (d, calls) = factor_degree_via_determinant(f, variant, &oracles, rng)?;
            (calls as u64, d >= 1)
        }
        other => {
            return Err(Error::BadInput(format!(
                "unknown bench problem {other:?}; expected one of factor, \
                 factor-frobminpoly, factor-factordegree, frob-minpoly, \
                 carlitz-charpoly, factor-degree, moore-det, vandermonde-det"
            )))
        }
    };
    Ok((start.elapsed().as_nanos(), oracle_calls, success))
}

// ---------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------

/// Enumerates every monic polynomial over F_q with degree in [1, max_deg].
fn all_monic(field: PrimeField, max_deg: usize) -> Vec<Poly> {
    let q = field.modulus();
    let mut out = Vec::new();
    for d in 1..=max_deg {
        let mut counter = vec![0u64; d];
        loop {
            let mut coeffs = counter.clone();
            coeffs.push(1);
            out.push(Poly::from_u64(field, &coeffs));
            let mut pos = 0;
            while pos < d {
                counter[pos] += 1;
                if counter[pos] < q {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
            if pos == d {
                break;
            }
        }
    }
    out
}

fn cmd_selftest() -> Result<(), u8> {
    let mut failures = 0u32;
    let mut suite = |name: &str, ok: bool| {
        println!("{}: {}", name, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    // Exhaustive factor vs trial division.
    let mut ok = true;
    for (q, dmax) in [(2u64, 8usize), (3, 6), (5, 4)] {
        let field = PrimeField::new(q).unwrap();
        let mut rng = Rng::new(0x7E57 + q);
        for f in all_monic(field, dmax) {
            let a = factor(&f, &mut rng);
            let b = trial_factor(&f);
            if a.is_err() || b.is_err() || a.unwrap() != b.unwrap() {
                ok = false;
                break;
            }
        }
    }
    suite("exhaustive factor = trial division (F2<=8, F3<=6, F5<=4)", ok);

    // Frobenius minimal polynomial: independent route vs reference lcm.
    let mut ok = true;
    for q in [2u64, 3] {
        let field = PrimeField::new(q).unwrap();
        let mut rng = Rng::new(0xF40B + q);
        for f in all_monic(field, 6) {
            if !is_squarefree(&f) {
                continue;
            }
            let ctx = match ModCtx::new(f.clone()) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let ind = frob_minpoly(&ctx, &mut rng, FrobMode::Independent);
            let rf = frob_minpoly(&ctx, &mut rng, FrobMode::Reference);
            if ind.is_err() || rf.is_err() || ind.unwrap() != rf.unwrap() {
                ok = false;
                break;
            }
        }
    }
    suite("frobenius minpoly independent = reference (F2, F3, deg<=6)", ok);

    // Carlitz characteristic polynomial: matrix route vs product route.
    let mut ok = true;
    for q in [2u64, 3] {
        let field = PrimeField::new(q).unwrap();
        let mut rng = Rng::new(0xCA12 + q);
        for f in all_monic(field, 6) {
            if !is_squarefree(&f) {
                continue;
            }
            let fz = factor(&f, &mut rng).unwrap();
            let a = carlitz_charpoly(&f, CharPolyMode::Direct).unwrap();
            let b = carlitz_charpoly(&f, CharPolyMode::FromFactors(&fz)).unwrap();
            if a != b {
                ok = false;
                break;
            }
        }
    }
    suite("carlitz charpoly direct = product (F2, F3, deg<=6)", ok);

    // Moore / Vandermonde zero tests against the factor engine.
    let mut ok = true;
    for q in [2u64, 3, 5] {
        let field = PrimeField::new(q).unwrap();
        let mut rng = Rng::new(0x300 + q);
        for f in all_monic(field, 5) {
            if !is_squarefree(&f) {
                continue;
            }
            let dmax = factor(&f, &mut rng).unwrap().max_degree().unwrap();
            let ctx = ModCtx::new(f.clone()).unwrap();
            let mut table = FrobTable::new(&ctx);
            for m in 1..=f.degree().min(4) {
                let z = moore_zero_test(&ctx, m, &mut table);
                let v = vandermonde_det(&ctx, m, &mut table).is_zero();
                if z != (dmax <= m) || v != z {
                    ok = false;
                    break;
                }
            }
        }
    }
    suite("moore/vandermonde zero test = degree threshold (deg<=5)", ok);

    // Reduction sanity on random instances.
    let mut ok = true;
    for q in [2u64, 5] {
        let field = PrimeField::new(q).unwrap();
        let mut rng = Rng::new(0x4ED + q);
        for _ in 0..10 {
            let n = 2 + rng.below(16) as usize;
            let f = random_monic_squarefree(field, n, &mut rng);
            let oracles = OracleSet::independent();
            let via_fd = reduce_factor_via_factordegree(&f, &oracles, None, &mut rng);
            let via_fm = reduce_factor_via_frobminpoly(&f, &oracles, &mut rng);
            let reference = factor(&f, &mut rng).unwrap();
            if via_fd.is_err() || via_fd.unwrap() != reference {
                ok = false;
                break;
            }
            match via_fm {
                Ok((fz, _)) if fz == reference => {}
                _ => {
                    ok = false;
                    break;
                }
            }
        }
    }
    suite("reductions match reference factor (random instances)", ok);

    if failures > 0 {
        eprintln!("error: {failures} selftest suite(s) failed");
        return Err(3);
    }
    Ok(())
}
