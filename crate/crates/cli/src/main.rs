use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use lltlab::cumulants::{llt_cumulant, llt_variant, macdonald_cumulant_qsym, Normalization};
use lltlab::error::Error;
use lltlab::graphpoly::{inversion_poly, tutte};
use lltlab::input;
use lltlab::llt::macdonald_qsym;
use lltlab::lltgraphs::{fundamental_cumulant_expansion, graph_cumulant, llt_of_graph};
use lltlab::ring::QTPoly;
use lltlab::scan::{self, ScanReport};
use lltlab::special::{
    blasiak_expansion, hny_schur, melting_lollipop, parking_to_schroder, schroder_to_tuple, tuple_to_schroder,
    vertical_e_cumulant,
};
use lltlab::symfunc::{QSymExpansion, SymExpansion};
use lltlab::verify::{self, VerificationReport};

#[derive(Parser)]
#[command(name = "lltlab", version, about = "Exact LLT polynomials, Macdonald polynomials and their cumulants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object from a JSON literal.
    Compute {
        object: Object,
        /// JSON input; see the README for the literal formats.
        input: String,
        #[arg(long, value_enum, default_value = "mqsym")]
        basis: Basis,
        /// plain, cospin, min-shift or mac; used by llt and llt-cumulant.
        #[arg(long, default_value = "plain")]
        normalization: String,
        /// Evaluation point `x,y` for tutte.
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check an identity on every instance up to a size budget.
    Verify {
        identity: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Look for negative Schur coefficients predicted not to exist.
    Scan {
        conjecture: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Llt,
    Cospin,
    Mac,
    Macdonald,
    LltCumulant,
    MacdonaldCumulant,
    FundamentalCumulant,
    Tutte,
    Invpoly,
    GraphLlt,
    GraphCumulant,
    VerticalE,
    Schroder,
    Parking,
    Lollipop,
    Blasiak,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Mqsym,
    Fund,
    Schur,
    Elem,
}

enum Failure {
    Identity,
    Input(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidInput(_) | Error::InvalidParkingFunction(_) => {
                Failure::Input(e.to_string())
            }
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn render_qsym(f: &QSymExpansion, basis: Basis) -> Result<String, Error> {
    Ok(match basis {
        Basis::Mqsym => f.to_monomialq().to_string(),
        Basis::Fund => f.to_fundamental().to_string(),
        Basis::Schur => f.to_schur()?.to_string(),
        Basis::Elem => f.to_schur()?.to_elementary().to_string(),
    })
}

fn render_sym(f: &SymExpansion, basis: Basis) -> String {
    match basis {
        Basis::Mqsym => f.to_monomialq().to_string(),
        Basis::Fund => f.to_fundamental().to_string(),
        Basis::Schur => f.to_schur().to_string(),
        Basis::Elem => f.to_elementary().to_string(),
    }
}

fn parse_at(at: &str) -> Result<(QTPoly, QTPoly), Error> {
    let (x, y) = at
        .split_once(',')
        .ok_or_else(|| Error::InvalidInput(format!("--at expects x,y, found {at:?}")))?;
    Ok((x.trim().parse()?, y.trim().parse()?))
}

fn compute(object: Object, text: &str, basis: Basis, norm: &str, at: Option<&str>) -> Result<String, Error> {
    let v: Value = input::parse_value(text)?;
    let norm: Normalization = norm.parse()?;
    if at.is_some() && !matches!(object, Object::Tutte) {
        return Err(Error::InvalidInput("--at applies to tutte only".into()));
    }
    match object {
        Object::Llt => render_qsym(&llt_variant(&input::tuple_from(&v)?, norm)?, basis),
        Object::Cospin => render_qsym(&llt_variant(&input::tuple_from(&v)?, Normalization::Cospin)?, basis),
        Object::Mac => render_qsym(&llt_variant(&input::tuple_from(&v)?, Normalization::Mac)?, basis),
        Object::Macdonald => render_qsym(&macdonald_qsym(&input::partition_from(&v)?)?, basis),
        Object::LltCumulant => render_qsym(&llt_cumulant(&input::tuple_from(&v)?, norm)?, basis),
        Object::MacdonaldCumulant => render_qsym(&macdonald_cumulant_qsym(&input::partitions_from(&v)?)?, basis),
        Object::FundamentalCumulant => render_qsym(&fundamental_cumulant_expansion(&input::tuple_from(&v)?), basis),
        Object::Tutte => {
            let t = tutte(&input::multigraph_from(&v)?);
            match at {
                Some(at) => {
                    let (x, y) = parse_at(at)?;
                    Ok(t.eval(&x, &y).to_string())
                }
                None => Ok(t.to_string()),
            }
        }
        Object::Invpoly => Ok(inversion_poly(&input::multigraph_from(&v)?).to_string()),
        Object::GraphLlt => render_qsym(&llt_of_graph(&input::graph_from(&v)?), basis),
        Object::GraphCumulant => render_qsym(&graph_cumulant(&input::graph_from(&v)?)?, basis),
        Object::VerticalE => Ok(render_sym(&vertical_e_cumulant(&input::tuple_from(&v)?)?, basis)),
        Object::Schroder => Ok(tuple_to_schroder(&input::tuple_from(&v)?)?.to_string()),
        Object::Parking => {
            let path = parking_to_schroder(&input::parking_from(&v)?);
            Ok(format!("{path}\n{}", input::tuple_json(&schroder_to_tuple(&path)?)))
        }
        Object::Lollipop => {
            let (m, n, k) = input::lollipop_from(&v)?;
            Ok(render_sym(&hny_schur(&melting_lollipop(m, n, k)?), basis))
        }
        Object::Blasiak => Ok(render_sym(&blasiak_expansion(&input::tuple_from(&v)?)?, basis)),
    }
}

fn print_verification(identity: &str, reports: &[VerificationReport], json: bool) -> Outcome {
    let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.pass).collect();
    if json {
        println!("{}", serde_json::to_string_pretty(reports).expect("reports serialize"));
    } else {
        for r in reports {
            println!("{} {}", if r.pass { "PASS" } else { "FAIL" }, r.instance);
        }
        println!("{identity}: {}/{} passed", reports.len() - failed.len(), reports.len());
        if let Some(r) = failed.first() {
            println!("first failing instance: {}", r.instance);
            println!("lhs:\n{}\nrhs:\n{}", r.lhs, r.rhs);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn print_scan(report: &ScanReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
        return;
    }
    println!(
        "{}: {} instances up to size {}, {} violations",
        report.conjecture,
        report.instances,
        report.max_size,
        report.violations.len()
    );
    for v in &report.violations {
        println!("violation {}\n{}", v.instance, v.witness);
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute { object, input, basis, normalization, at, json } => {
            let out = compute(object, &input, basis, &normalization, at.as_deref())?;
            if json {
                println!("{}", serde_json::json!({ "result": out }));
            } else {
                println!("{out}");
            }
            Ok(())
        }
        Command::Verify { identity, max_size, seed, json } => {
            let n = max_size.unwrap_or_else(|| verify::default_max_size(&identity));
            let reports = verify::verify(&identity, n, seed)?;
            print_verification(&identity, &reports, json)
        }
        Command::Scan { conjecture, max_size, json } => {
            let n = max_size.unwrap_or_else(|| scan::default_max_size(&conjecture));
            print_scan(&scan::scan(&conjecture, n)?, json);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("LLTLAB_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().ok();
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}
