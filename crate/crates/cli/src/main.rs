mod ideal_file;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use surfgen_core::constructions::{run_recipe, RunOptions, RECIPES};
use surfgen_core::numeric::{
    adjunction_step, bott_h0, chi_ideal_sheaf, le_barz, liaison_chi, liaison_link, chi_of_ci_surface, severi_genus,
    severi_residual, AdjunctionRow, SurfaceInvariants,
};
use surfgen_core::scheme::{analyze_with_resolution, smoothness_check};
use surfgen_core::{AlgebraError, Field, PrimeField, Rationals, Ring, DEFAULT_CHARACTERISTIC};

/// `println!` that exits quietly once stdout is closed.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

use report::{betti_json, CheckJson, IdealJson, RunReport, SchemeJson, SCHEMA};

#[derive(Parser)]
#[command(name = "surfgen", version, about = "Construct and analyze surfaces in projective 4-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named recipes and write their ideals and reports.
    Construct(ConstructArgs),
    /// Analyze an ideal file.
    Invariants(InvariantsArgs),
    /// Evaluate a closed formula.
    Numeric(NumericArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Recipe names; `all` runs every recipe.
    #[arg(required = true)]
    recipes: Vec<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Prime characteristic, or 0 for the rationals.
    #[arg(long = "char", default_value_t = DEFAULT_CHARACTERISTIC)]
    characteristic: u32,
    #[arg(long, default_value = "surfgen-out")]
    out: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    smooth_check: bool,
    /// Reseed bound for degenerate random choices.
    #[arg(long, default_value_t = 5)]
    attempts: usize,
}

#[derive(Args)]
struct InvariantsArgs {
    file: PathBuf,
    #[arg(long)]
    smooth_check: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct NumericArgs {
    /// One of double-point, lebarz, liaison, adjunction, chi-ideal, severi, bott.
    formula: String,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    pi: Option<i64>,
    #[arg(long)]
    chi: Option<i64>,
    #[arg(long)]
    k2: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    h2: Option<i64>,
    #[arg(long)]
    hk: Option<i64>,
    /// Number of contracted (-1)-curves.
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    t: Option<i64>,
    /// h^1(O_S(H)).
    #[arg(long)]
    h1: Option<i64>,
    /// h^0(O_S(K - H)).
    #[arg(long)]
    h0: Option<i64>,
    #[arg(long)]
    json: bool,
}

/// Failure with its exit code.
struct Exit(u8, String);

impl From<AlgebraError> for Exit {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse { .. } | AlgebraError::Usage(_) | AlgebraError::NotPrime(_) | AlgebraError::BadInteger(_) => {
                Exit(2, e.to_string())
            }
            _ => Exit(1, e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Construct(a) => construct(&a),
        Command::Invariants(a) => invariants(&a),
        Command::Numeric(a) => numeric(&a),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn construct(a: &ConstructArgs) -> Result<u8, Exit> {
    let names: Vec<String> = if a.recipes.iter().any(|r| r == "all") {
        RECIPES.iter().map(|s| s.to_string()).collect()
    } else {
        a.recipes.clone()
    };
    if let Some(bad) = names.iter().find(|n| !RECIPES.contains(&n.as_str())) {
        return Err(Exit(2, format!("unknown recipe `{bad}`; known: {}", RECIPES.join(", "))));
    }
    std::fs::create_dir_all(&a.out).map_err(|e| Exit(2, format!("{}: {e}", a.out.display())))?;
    let opts = RunOptions { attempts: a.attempts, smooth_check: a.smooth_check };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(a.jobs.max(1)).build().map_err(|e| Exit(2, e.to_string()))?;
    let results: Vec<Result<RunReport, Exit>> = pool.install(|| {
        use rayon::prelude::*;
        names
            .par_iter()
            .map(|name| {
                if a.characteristic == 0 {
                    construct_one(&Ring::new(Rationals, 5), name, a, opts)
                } else {
                    let f = PrimeField::new(a.characteristic)?;
                    construct_one(&Ring::new(f, 5), name, a, opts)
                }
            })
            .collect()
    });
    let mut code = 0;
    let mut reports = Vec::new();
    for (name, r) in names.iter().zip(results) {
        match r {
            Ok(rep) => {
                if !rep.passed {
                    code = 1;
                }
                reports.push(rep);
            }
            Err(Exit(c, msg)) => {
                eprintln!("error: {name}: {msg}");
                code = code.max(c);
            }
        }
    }
    if a.json {
        let v: Vec<Value> = reports.iter().map(|r| serde_json::to_value(r).expect("report serializes")).collect();
        let out = if v.len() == 1 { v[0].clone() } else { Value::Array(v) };
        out!("{}", serde_json::to_string_pretty(&out).expect("json"));
    } else {
        for r in &reports {
            print_report(r);
        }
    }
    Ok(code)
}

fn construct_one<F: Field>(ring: &Ring<F>, name: &str, a: &ConstructArgs, opts: RunOptions) -> Result<RunReport, Exit> {
    let start = Instant::now();
    let run = run_recipe(name, ring, a.seed, opts)?;
    let comment = format!("{name} seed {} (effective {}) char {}", a.seed, run.effective_seed, a.characteristic);
    let mut ideals = Vec::new();
    for (k, (label, ideal)) in run.ideals.iter().enumerate() {
        let file = if k == 0 { format!("{name}.ideal") } else { format!("{name}.{label}.ideal") };
        write(&a.out.join(&file), &ideal_file::write_ideal(ideal, &format!("{comment}\n{label}")))?;
        ideals.push(IdealJson { name: label.clone(), file: Some(file), generator_degrees: ideal.generator_degrees() });
    }
    let smooth = run.checks.iter().find(|c| c.name == "smooth").map(|c| c.passed);
    let rep = RunReport {
        schema: SCHEMA,
        recipe: Some(name.to_string()),
        input: None,
        seed: a.seed,
        effective_seed: run.effective_seed,
        characteristic: a.characteristic,
        wall_time_ms: start.elapsed().as_millis() as u64,
        scheme: run.report.as_ref().map(SchemeJson::from),
        smooth,
        betti: run.betti.as_ref().map(betti_json),
        checks: run.checks.iter().map(CheckJson::from).collect(),
        ideals,
        passed: run.passed(),
    };
    write(&a.out.join(format!("{name}.json")), &serde_json::to_string_pretty(&rep).expect("json"))?;
    Ok(rep)
}

fn write(path: &Path, text: &str) -> Result<(), Exit> {
    std::fs::write(path, text).map_err(|e| Exit(1, format!("{}: {e}", path.display())))
}

fn print_report(r: &RunReport) {
    let head = r.recipe.clone().or_else(|| r.input.clone()).unwrap_or_default();
    out!("{head}  seed {}  char {}  {} ms  {}", r.seed, r.characteristic, r.wall_time_ms, if r.passed { "PASS" } else { "FAIL" });
    if let Some(s) = &r.scheme {
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        out!("  dim {}  degree {}  genus {}  chi_O {}", s.dim, s.degree, opt(s.sectional_genus), opt(s.chi_o));
    }
    if let Some(b) = &r.betti {
        let table = surfgen_core::BettiTable::from_entries(b);
        for line in table.to_string().lines() {
            out!("  {line}");
        }
    }
    for c in &r.checks {
        out!("  [{}] {} {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
    }
}

fn invariants(a: &InvariantsArgs) -> Result<u8, Exit> {
    let text = std::fs::read_to_string(&a.file).map_err(|e| Exit(2, format!("{}: {e}", a.file.display())))?;
    let where_ = |e: ideal_file::FileError| Exit(2, format!("{}: {e}", a.file.display()));
    let (header, gens) = ideal_file::split(&text).map_err(where_)?;
    let rep = if header.characteristic == 0 {
        let ring = Ring::new(Rationals, header.nvars);
        let i = ideal_file::parse_ideal(&ring, &gens).map_err(where_)?;
        invariants_of(&i, a, header.characteristic)?
    } else {
        let ring = Ring::new(PrimeField::new(header.characteristic)?, header.nvars);
        let i = ideal_file::parse_ideal(&ring, &gens).map_err(where_)?;
        invariants_of(&i, a, header.characteristic)?
    };
    if a.json {
        out!("{}", serde_json::to_string_pretty(&rep).expect("json"));
    } else {
        print_report(&rep);
    }
    Ok(if rep.passed { 0 } else { 1 })
}

fn invariants_of<F: Field>(i: &surfgen_core::Ideal<F>, a: &InvariantsArgs, ch: u32) -> Result<RunReport, Exit> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let (scheme, betti) = analyze_with_resolution(i, &mut rng)?;
    let mut checks = Vec::new();
    let n = i.ring().nvars() as i32;
    let smooth = if a.smooth_check && scheme.dim >= 0 {
        let sat = surfgen_core::ideal::saturate(i, &mut rng)?;
        let s = smoothness_check(&sat, (n - 1 - scheme.dim) as usize, &mut rng)?;
        checks.push(CheckJson {
            name: "smooth".into(),
            passed: s.smooth,
            detail: format!("singular locus dim {} degree {}", s.singular_dim, s.singular_degree),
        });
        Some(s.smooth)
    } else {
        None
    };
    if n == 5 && scheme.dim == 2 {
        let (d, pi, chi) = (scheme.degree, scheme.sectional_genus.unwrap_or(0), scheme.chi_o.unwrap_or(0));
        match SurfaceInvariants::from_double_point(d, pi, chi) {
            Ok(inv) => checks.push(CheckJson { name: "double point formula".into(), passed: true, detail: format!("K^2 = {}", inv.k2) }),
            Err(e) => checks.push(CheckJson { name: "double point formula".into(), passed: false, detail: e.to_string() }),
        }
        match le_barz(d, pi, chi) {
            Ok(lb) => checks.push(CheckJson { name: "le barz".into(), passed: true, detail: format!("N6 = {}", lb.n6) }),
            Err(e) => checks.push(CheckJson { name: "le barz".into(), passed: false, detail: e.to_string() }),
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(RunReport {
        schema: SCHEMA,
        recipe: None,
        input: Some(a.file.display().to_string()),
        seed: a.seed,
        effective_seed: a.seed,
        characteristic: ch,
        wall_time_ms: start.elapsed().as_millis() as u64,
        scheme: Some(SchemeJson::from(&scheme)),
        smooth,
        betti: Some(betti_json(&betti)),
        checks,
        ideals: Vec::new(),
        passed,
    })
}

fn need(v: Option<i64>, flag: &str) -> Result<i64, Exit> {
    v.ok_or_else(|| Exit(2, format!("missing --{flag}")))
}

fn numeric(a: &NumericArgs) -> Result<u8, Exit> {
    let mut out = Map::new();
    out.insert("formula".into(), json!(a.formula));
    match a.formula.as_str() {
        "double-point" => {
            let (d, pi, chi) = (need(a.d, "d")?, need(a.pi, "pi")?, need(a.chi, "chi")?);
            let inv = match a.k2 {
                Some(k2) => SurfaceInvariants { d, pi, chi, k2 },
                None => SurfaceInvariants::from_double_point(d, pi, chi)?,
            };
            out.insert("k2".into(), json!(inv.k2));
            out.insert("hk".into(), json!(inv.hk()));
            out.insert("residual".into(), json!(inv.double_point_residual()));
        }
        "lebarz" => {
            let lb = le_barz(need(a.d, "d")?, need(a.pi, "pi")?, need(a.chi, "chi")?)?;
            out.insert("delta".into(), json!(lb.delta));
            out.insert("t".into(), json!(lb.t));
            out.insert("h".into(), json!(lb.h));
            out.insert("n6".into(), json!(lb.n6));
        }
        "liaison" => {
            let (d, pi, m, n) = (need(a.d, "d")?, need(a.pi, "pi")?, need(a.m, "m")?, need(a.n, "n")?);
            let (d2, pi2) = liaison_link(d, pi, m, n)?;
            out.insert("d".into(), json!(d2));
            out.insert("pi".into(), json!(pi2));
            if let Some(chi) = a.chi {
                out.insert("chi".into(), json!(liaison_chi(chi_of_ci_surface(m, n, 0), d, pi, chi, m, n)));
            }
        }
        "adjunction" => {
            let (hsq, hk, ksq) = (need(a.h2, "h2")?, need(a.hk, "hk")?, need(a.k2, "k2")?);
            if (hsq + hk) % 2 != 0 {
                return Err(Exit(1, "H^2 + HK must be even".into()));
            }
            let row = AdjunctionRow { hsq, hk, ksq, pi: (hsq + hk) / 2 + 1, ambient_dim: 4 };
            let next = adjunction_step(&row, need(a.chi, "chi")?, need(a.a, "a")?);
            out.insert("h2".into(), json!(next.hsq));
            out.insert("hk".into(), json!(next.hk));
            out.insert("k2".into(), json!(next.ksq));
            out.insert("pi".into(), json!(next.pi));
            out.insert("ambient_dim".into(), json!(next.ambient_dim));
        }
        "chi-ideal" => {
            let inv = SurfaceInvariants { d: need(a.d, "d")?, pi: need(a.pi, "pi")?, chi: need(a.chi, "chi")?, k2: a.k2.unwrap_or(0) };
            out.insert("chi".into(), json!(chi_ideal_sheaf(need(a.p, "p")?, &inv)));
        }
        "severi" => {
            let (chi, h1, h0) = (need(a.chi, "chi")?, need(a.h1, "h1")?, need(a.h0, "h0")?);
            out.insert("pi".into(), json!(severi_genus(chi, h1, h0)));
            if let Some(pi) = a.pi {
                out.insert("residual".into(), json!(severi_residual(pi, chi, h1, h0)));
            }
        }
        "bott" => {
            out.insert("h0".into(), json!(bott_h0(need(a.p, "p")?, need(a.t, "t")?)));
        }
        other => {
            return Err(Exit(2, format!("unknown formula `{other}`; known: double-point, lebarz, liaison, adjunction, chi-ideal, severi, bott")))
        }
    }
    if a.json {
        out!("{}", Value::Object(out));
    } else {
        for (k, v) in &out {
            if k != "formula" {
                out!("{k} = {v}");
            }
        }
    }
    Ok(0)
}
