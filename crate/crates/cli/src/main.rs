//! `stressca`: generate complexes, print invariants and run certificate checks.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use stressca::chordality;
use stressca::cone;
use stressca::generators;
use stressca::homology;
use stressca::io::{self, ComplexDocument};
use stressca::lefschetz;
use stressca::partition::{self, ShellingSearch};
use stressca::report::{Certificate, Hypothesis, Report, Verdict};
use stressca::triangulation;
use stressca::{Error, GeometricComplex, LinearDifferential, StressSpace};

const DEFAULT_SEED: u64 = 1;

/// `println!` that stays quiet when stdout is closed early (e.g. piped to `head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "stressca", version, about = "Exact stress spaces and chordality certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a stock complex as JSON.
    Generate(GenerateArgs),
    /// Face numbers, stress dimensions, properness and homology of a complex.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        human: bool,
    },
    /// Run one theorem check and exit 0 when it is verified.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Simplex,
    Cross,
    Cyclic,
    Stacked,
    BipyramidSplit,
}

#[derive(Args)]
struct GenerateArgs {
    kind: Kind,
    #[arg(long, default_value_t = 3)]
    d: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    CertifyChordal,
    WeakBadSet,
    Mcmullen,
    Propagation,
    ConeLemma,
    Partition,
    BalancedPartition,
    Cut,
    Reisner,
    SubsetBetti,
    BadSetBetti,
    IsoTay,
    Glbt,
    BalancedClique,
    Lefschetz,
}

#[derive(Clone, Copy, ValueEnum)]
enum Omega {
    Ones,
    Generic,
}

#[derive(Args)]
struct VerifyArgs {
    theorem: Theorem,
    file: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: isize,
    /// Falls back to `STRESSCA_SEED`, then 1.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Omega::Ones)]
    omega: Omega,
    /// Largest vertex count for checks that enumerate all vertex subsets.
    #[arg(long, default_value_t = 16)]
    cap: usize,
    #[arg(long)]
    human: bool,
    /// 1-based vertex for vertex-local checks.
    #[arg(long, default_value_t = 1)]
    vertex: usize,
    #[arg(long, default_value_t = 1)]
    color: usize,
    /// Cut form as comma-separated rationals, one per vertex; defaults to
    /// the last coordinate.
    #[arg(long)]
    psi: Option<String>,
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Generate(args) => generate(&args).map(|()| 0),
        Command::Invariants { file, human } => invariants(&file, human).map(|()| 0),
        Command::Verify(args) => verify(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn generate(args: &GenerateArgs) -> Result<(), Error> {
    let need_n = || args.n.ok_or_else(|| Error::Contract("--n is required for this kind".into()));
    let text = match args.kind {
        Kind::Simplex => io::complex_to_json(&generators::simplex_boundary(args.d), None),
        Kind::Cross => io::complex_to_json(&generators::cross_polytope_boundary(args.d), None),
        Kind::Cyclic => io::complex_to_json(&generators::cyclic_boundary(args.d, need_n()?), None),
        Kind::Stacked => io::complex_to_json(&generators::stacked_boundary(args.d, need_n()?), None),
        Kind::BipyramidSplit => {
            let b = generators::bipyramid_split();
            io::complex_to_json(&b.complex, Some((&b.upper, &b.lower)))
        }
    };
    match &args.output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => out!("{text}"),
    }
    Ok(())
}

fn invariants(path: &Path, human: bool) -> Result<(), Error> {
    let doc = io::read_complex(path)?;
    let geo = &doc.complex;
    let complex = geo.complex();
    let fhg = complex.fhg();
    let d = geo.ambient_dim() as isize;
    let stress_dims: Vec<usize> = (0..=d + 1).map(|k| StressSpace::of(geo, k, None).dim()).collect();
    let stress_g: Vec<i64> = (0..=d / 2).map(|k| homology::stress_g(geo, k)).collect();
    let missing = complex.missing_faces(1, complex.dim() + 1);
    let mut missing_by_dim = std::collections::BTreeMap::new();
    for f in &missing {
        *missing_by_dim.entry(f.dim()).or_insert(0usize) += 1;
    }
    let value = json!({
        "schema": stressca::report::SCHEMA,
        "vertices": complex.vertex_set().len(),
        "dim": complex.dim(),
        "ambient_dim": geo.ambient_dim(),
        "f": fhg.f,
        "h": fhg.h,
        "g": fhg.g,
        "stress_dims": stress_dims,
        "stress_g": stress_g,
        "proper": geo.is_proper(),
        "improper_face": geo.improper_face(),
        "reduced_betti": homology::reduced_betti(complex),
        "missing_faces_by_dim": missing_by_dim,
    });
    if human {
        out!("f-vector        {:?}", fhg.f);
        out!("h-vector        {}", fhg.h.map_or("n/a".into(), |h| format!("{h:?}")));
        out!("stress dims     {stress_dims:?}");
        out!("proper          {}", geo.is_proper());
        out!("reduced betti   {:?}", homology::reduced_betti(complex).from_zero());
        out!("missing faces   {}", missing.len());
    } else {
        out!("{}", serde_json::to_string_pretty(&value)?);
    }
    Ok(())
}

fn seed(args: &VerifyArgs) -> Result<u64, Error> {
    if let Some(s) = args.seed {
        return Ok(s);
    }
    match std::env::var("STRESSCA_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("STRESSCA_SEED is not an integer: {v}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn omega(args: &VerifyArgs, n: usize, seed: u64) -> LinearDifferential {
    match args.omega {
        Omega::Ones => LinearDifferential::ones(n),
        Omega::Generic => LinearDifferential::generic(n, seed),
    }
}

fn nonnegative(k: isize) -> Result<usize, Error> {
    usize::try_from(k).map_err(|_| Error::Contract(format!("k must be nonnegative, got {k}")))
}

fn verify(args: &VerifyArgs) -> Result<u8, Error> {
    let seed = seed(args)?;
    let doc = io::read_complex(&args.file)?;
    let geo = &doc.complex;
    let n = geo.ground_size();
    let w = omega(args, n, seed);
    let k = args.k;
    let vertex = args.vertex.checked_sub(1).ok_or(Error::NotAVertex(0))?;
    let report: Report = match args.theorem {
        Theorem::CertifyChordal => chordality::certify_toric_chordal(geo, k, &w).report(),
        Theorem::WeakBadSet => chordality::weak_chordality_bad_set(geo, k, &w).report(),
        Theorem::Mcmullen => chordality::mcmullen_integral_check(geo, k)?.report(),
        Theorem::Propagation => chordality::propagation_verify(geo, k, &w).report(),
        Theorem::ConeLemma => cone::cone_lemma_check(geo, vertex, k)?.report(),
        Theorem::Partition => partition_report(geo, k)?,
        Theorem::BalancedPartition => partition::balanced_partition_check(geo, args.color, seed)?.report(),
        Theorem::Cut => cut_report(&doc, k, args.psi.as_deref(), &w, seed)?,
        Theorem::Reisner => homology::reisner_cm_check(geo.complex()).report(),
        Theorem::SubsetBetti => homology::subset_betti_bound_check(geo, k, args.cap)?.report(),
        Theorem::BadSetBetti => homology::bad_set_betti_check(geo, k, &w, args.cap)?.report(),
        Theorem::IsoTay => homology::iso_tay_check(geo).report(),
        Theorem::Glbt => triangulation::k_stacked_triangulation(geo, nonnegative(k)?)?.1.report(),
        Theorem::BalancedClique => triangulation::balanced_clique_complex(geo, nonnegative(k)?)?.1.report(),
        Theorem::Lefschetz => lefschetz::hard_lefschetz_check(geo, &w).report(),
    };
    if args.human {
        print_human(&report);
    } else {
        out!("{}", report.to_json());
    }
    Ok(report.verdict.exit_code() as u8)
}

fn partition_report(geo: &GeometricComplex, k: isize) -> Result<Report, Error> {
    match partition::shelling_search(geo.complex(), partition::DEFAULT_SHELLING_BUDGET)? {
        ShellingSearch::Found(order) => Ok(partition::partition_of_unity_check(geo, k, &order)?.report()),
        outcome => {
            let detail = match outcome {
                ShellingSearch::NoneFound => "no shelling exists",
                _ => "search budget exhausted",
            };
            let verdict = match outcome {
                ShellingSearch::NoneFound => Verdict::HypothesesNotMet,
                _ => Verdict::Inconclusive,
            };
            let hyps = vec![Hypothesis::with_detail("valid shelling", false, detail)];
            Ok(Report::new("partition", hyps, verdict, serde_json::Value::Null, serde_json::Value::Null))
        }
    }
}

fn parse_psi(text: &str, n: usize) -> Result<LinearDifferential, Error> {
    let coeffs = text.split(',').map(|s| io::parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() != n {
        return Err(Error::Parse(format!("--psi needs {n} values, got {}", coeffs.len())));
    }
    Ok(LinearDifferential::new(coeffs))
}

fn cut_report(doc: &ComplexDocument, k: isize, psi: Option<&str>, w: &LinearDifferential, seed: u64) -> Result<Report, Error> {
    let (first, second) = doc
        .parts
        .as_ref()
        .ok_or_else(|| Error::Contract("the cut check needs a file with \"parts\"".into()))?;
    let geo = &doc.complex;
    let psi = match psi {
        Some(text) => parse_psi(text, geo.ground_size())?,
        None => chordality::last_coordinate(geo),
    };
    let (a, b) = chordality::split_parts(geo, first, second);
    Ok(chordality::cut_theorem_check(&a, &b, k, &psi, w, seed)?.report())
}

fn print_human(report: &Report) {
    out!("theorem   {}", report.theorem);
    out!("verdict   {}", serde_json::to_value(report.verdict).map(|v| v.as_str().unwrap_or("").to_owned()).unwrap_or_default());
    for h in &report.hypotheses {
        let mark = if h.holds { "ok  " } else { "FAIL" };
        match &h.detail {
            Some(d) => out!("  [{mark}] {} ({d})", h.name),
            None => out!("  [{mark}] {}", h.name),
        }
    }
    if !report.witness.is_null() {
        out!("witness   {}", report.witness);
    }
}
