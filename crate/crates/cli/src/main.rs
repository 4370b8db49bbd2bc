use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arank_core::betti::{ideal_betti, Field};
use arank_core::constructions::{
    adual_line_family, ara_plus_one, bt_cone_elements, construct_h2cm_with, GeneratorWitness, H2cmOptions,
    Provenance,
};
use arank_core::format::{parse_complex, parse_elements, parse_face, parse_ideal, write_complex, write_elements, write_ideal};
use arank_core::monomial::{MonomialIdeal, VarSet};
use arank_core::poly::MonomialOrder;
use arank_core::simplicial::{complex_of_ideal, is_generalized_tree, stanley_reisner_ideal, SimplicialComplex};
use arank_core::verifier::{verify_up_to_radical_with, RadicalReport, VerifyOptions};
use arank_core::{Error, Polynomial};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "arank", version, about = "Generators up to radical for squarefree monomial ideals")]
struct Cli {
    /// Monomial order for Gröbner computations.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
    /// Field characteristic for Betti numbers: 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    /// Largest power tried in power-membership searches.
    #[arg(long, global = true)]
    lmax: Option<u32>,
    /// Seed for the sampling prefilter.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for `batch`.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    H2cm,
    Prop31,
    BtCone,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander dual of an ideal.
    Dual { ideal: PathBuf },
    /// Stanley–Reisner ideal of a complex.
    Ideal { complex: PathBuf },
    /// Complex whose Stanley–Reisner ideal is the given ideal.
    Complex { ideal: PathBuf },
    /// Height, pd, regularity and Cohen–Macaulayness of an ideal.
    Analyze { ideal: PathBuf },
    /// Build generators up to radical and verify them.
    Construct {
        ideal: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::H2cm)]
        method: Method,
        /// Face for the cone constructions, e.g. `x1,x3` or `{}`.
        #[arg(long)]
        face: Option<String>,
        /// Elements generating the input ideal up to radical; defaults to a
        /// two-element witness when one exists, else the generators.
        #[arg(long)]
        elements: Option<PathBuf>,
        /// Read the input as a complex instead of an ideal.
        #[arg(long)]
        complex: bool,
    },
    /// The two generators of the dual of the path on n vertices.
    Family { n: usize },
    /// Check that elements generate an ideal up to radical.
    Verify { ideal: PathBuf, elements: PathBuf },
    /// Run `construct --method h2cm` on every ideal file in a directory.
    Batch { inputs: Vec<PathBuf> },
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Lib(Error),
    NotVerified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) => 2,
            Failure::Lib(e) if e.is_parse() => 2,
            Failure::Lib(e) if e.is_internal() => 1,
            Failure::Lib(Error::PowerLimitExceeded { .. }) => 1,
            Failure::Lib(_) => 3,
            Failure::NotVerified(_) => 1,
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn with_file<T>(path: &Path, r: arank_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match e {
        Error::Parse { line, column, message } => Failure::Io(format!("{}:{line}:{column}: {message}", path.display())),
        other => Failure::Lib(other),
    })
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    with_file(path, parse_ideal(&read(path)?))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    with_file(path, parse_complex(&read(path)?))
}

fn load_elements(path: &Path) -> Result<Vec<Polynomial>, Failure> {
    with_file(path, parse_elements(&read(path)?))
}

impl Cli {
    fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            order: match self.order {
                OrderArg::Degrevlex => MonomialOrder::degrevlex(),
                OrderArg::Lex => MonomialOrder::lex(),
            },
            power_limit: self.lmax,
            prefilter: true,
            seed: self.seed,
        }
    }

    fn emit_json(&self, v: &Value) {
        println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Io(msg) => eprintln!("error: {msg}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::NotVerified(msg) => eprintln!("not verified: {msg}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Dual { ideal } => {
            let dual = load_ideal(ideal)?.alexander_dual()?;
            print_ideal(cli, &dual);
            Ok(())
        }
        Command::Ideal { complex } => {
            print_ideal(cli, &stanley_reisner_ideal(&load_complex(complex)?));
            Ok(())
        }
        Command::Complex { ideal } => {
            let c = complex_of_ideal(&load_ideal(ideal)?)?;
            if cli.json {
                let facets: Vec<Vec<usize>> = c.facets().iter().map(|f| f.to_vec()).collect();
                cli.emit_json(&json!({ "vars": c.ambient_n(), "facets": facets }));
            } else {
                print!("{}", write_complex(&c));
            }
            Ok(())
        }
        Command::Analyze { ideal } => analyze(cli, &load_ideal(ideal)?),
        Command::Construct {
            ideal,
            method,
            face,
            elements,
            complex,
        } => {
            let input = if *complex {
                stanley_reisner_ideal(&load_complex(ideal)?)
            } else {
                load_ideal(ideal)?
            };
            let face = face.as_deref().map(parse_face).transpose()?;
            let qs = elements.as_deref().map(load_elements).transpose()?;
            let w = construct(cli, &input, *method, face, qs)?;
            finish_witness(cli, w)
        }
        Command::Family { n } => {
            let fam = adual_line_family(*n)?;
            let report = verify_up_to_radical_with(&[fam.q1.clone(), fam.q2.clone()], &fam.ideal, &cli.verify_options())?;
            let w = GeneratorWitness {
                elements: vec![fam.q1, fam.q2],
                target: fam.ideal,
                provenance: Provenance::ConeLift,
                verified: report.verdict,
                flags: Vec::new(),
                report: Some(report),
            };
            finish_witness(cli, w)
        }
        Command::Verify { ideal, elements } => {
            let i = load_ideal(ideal)?;
            let els = load_elements(elements)?;
            let report = verify_up_to_radical_with(&els, &i, &cli.verify_options())?;
            print_report(cli, &report);
            if report.verdict {
                Ok(())
            } else {
                Err(Failure::NotVerified(format!("elements do not generate {i} up to radical")))
            }
        }
        Command::Batch { inputs } => batch(cli, inputs),
    }
}

fn print_ideal(cli: &Cli, i: &MonomialIdeal) {
    if cli.json {
        let gens: Vec<String> = i.generators().iter().map(|m| m.to_string()).collect();
        cli.emit_json(&json!({ "vars": i.ambient_n(), "generators": gens }));
    } else {
        print!("{}", write_ideal(i));
    }
}

fn analyze(cli: &Cli, i: &MonomialIdeal) -> Outcome {
    if i.is_zero() {
        return Err(Error::ZeroIdeal.into());
    }
    let field = Field::from_char(cli.characteristic)?;
    let table = ideal_betti(i, field)?;
    let height = i.height()?;
    let pd = table.pd();
    let reg = table.reg();
    let linear = table.has_linear_resolution();
    let x = i.used_variables();
    let dual_facets: Vec<VarSet> = i.supports().into_iter().map(|s| x.difference(s)).collect();
    // a vertex in every generator lies in no facet of the dual complex
    let tree = SimplicialComplex::with_vertex_set(i.ambient_n(), x, &dual_facets)
        .map(|gamma| is_generalized_tree(&gamma))
        .unwrap_or(false);
    let v = json!({
        "vars": i.ambient_n(),
        "mu": i.mu(),
        "height": height,
        "indeg": i.indeg()?,
        "pd": pd,
        "reg": reg,
        "linear": linear,
        "k": if linear { table.indeg() } else { None },
        "cohen_macaulay": pd == height,
        "dual_generalized_tree": tree,
        "betti": table.to_json(),
    });
    if cli.json {
        cli.emit_json(&v);
    } else {
        for key in ["vars", "mu", "height", "indeg", "pd", "reg", "linear", "k", "cohen_macaulay", "dual_generalized_tree"] {
            println!("{key}: {}", v[key]);
        }
    }
    Ok(())
}

/// Input elements for the cone constructions when none are given.
fn default_elements(cli: &Cli, i: &MonomialIdeal) -> Vec<Polynomial> {
    let opts = H2cmOptions {
        lmax: cli.lmax,
        verify_steps: false,
    };
    match construct_h2cm_with(i, &opts) {
        Ok(w) => w.elements,
        Err(_) => i
            .generators()
            .iter()
            .map(|&m| Polynomial::from_monomial(i.ambient_n(), m))
            .collect(),
    }
}

fn construct(
    cli: &Cli,
    input: &MonomialIdeal,
    method: Method,
    face: Option<VarSet>,
    qs: Option<Vec<Polynomial>>,
) -> Result<GeneratorWitness, Failure> {
    let need_face = || face.ok_or_else(|| Failure::Lib(Error::precondition("--face is required for this method")));
    let w = match method {
        Method::H2cm => {
            let opts = H2cmOptions {
                lmax: cli.lmax,
                verify_steps: true,
            };
            construct_h2cm_with(input, &opts)?
        }
        Method::Prop31 => {
            let face = need_face()?;
            let qs = qs.unwrap_or_else(|| default_elements(cli, input));
            ara_plus_one(input, face, &qs)?
        }
        Method::BtCone => {
            let face = need_face()?;
            let delta = complex_of_ideal(input)?;
            let qs = qs.unwrap_or_else(|| default_elements(cli, input));
            bt_cone_elements(&delta, face, &qs)?
        }
    };
    Ok(w)
}

/// Re-verifies under the command-line options and prints the witness.
fn finish_witness(cli: &Cli, mut w: GeneratorWitness) -> Outcome {
    let opts = cli.verify_options();
    let report = verify_up_to_radical_with(&w.elements, &w.target, &opts)?;
    w.verified = report.verdict;
    w.report = Some(report);
    if cli.json {
        cli.emit_json(&w.to_json());
    } else {
        println!("# target {}", w.target);
        println!("# provenance {}", w.provenance);
        for f in &w.flags {
            println!("# flag {f}");
        }
        println!("# verified {}", w.verified);
        print!("{}", write_elements(&w.elements));
    }
    if w.verified {
        Ok(())
    } else {
        Err(Failure::NotVerified(format!("{} elements for {}", w.provenance, w.target)))
    }
}

fn print_report(cli: &Cli, r: &RadicalReport) {
    if cli.json {
        cli.emit_json(&r.to_json());
        return;
    }
    println!("containment: {}", r.containment_ok);
    for c in &r.coverage {
        println!("{}: {}", c.generator, if c.in_radical { "in radical" } else { "not in radical" });
    }
    println!("verdict: {}", r.verdict);
}

fn batch_files(inputs: &[PathBuf]) -> Result<Vec<PathBuf>, Failure> {
    let mut files = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let entries = fs::read_dir(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
            for e in entries {
                let path = e.map_err(|e| Failure::Io(e.to_string()))?.path();
                if path.is_file() {
                    files.push(path);
                }
            }
        } else {
            files.push(p.clone());
        }
    }
    files.sort();
    Ok(files)
}

fn batch(cli: &Cli, inputs: &[PathBuf]) -> Outcome {
    let files = batch_files(inputs)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Io(e.to_string()))?;
    let results: Vec<(Value, bool)> = pool.install(|| {
        files
            .par_iter()
            .map(|path| {
                let attempt = load_ideal(path).and_then(|i| {
                    let w = construct(cli, &i, Method::H2cm, None, None)?;
                    let report = verify_up_to_radical_with(&w.elements, &w.target, &cli.verify_options())?;
                    Ok((w, report))
                });
                match attempt {
                    Ok((mut w, report)) => {
                        w.verified = report.verdict;
                        w.report = None;
                        let mut v = w.to_json();
                        v["file"] = json!(path.display().to_string());
                        (v, w.verified)
                    }
                    Err(f) => {
                        let msg = match &f {
                            Failure::Io(m) | Failure::NotVerified(m) => m.clone(),
                            Failure::Lib(e) => e.to_string(),
                        };
                        (
                            json!({ "file": path.display().to_string(), "error": msg, "exit": f.exit_code() }),
                            false,
                        )
                    }
                }
            })
            .collect()
    });
    let failed = results.iter().filter(|(_, ok)| !ok).count();
    for (v, _) in &results {
        println!("{}", serde_json::to_string(v).expect("json values serialize"));
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::NotVerified(format!("{failed} of {} inputs failed", results.len())))
    }
}
