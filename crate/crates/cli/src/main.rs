use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pfiliform::catalog::{build_family, build_g0, list_families, Coefficient, PairPattern, Parity};
use pfiliform::derivations::{derivation_space, diagonal_torus, is_characteristically_nilpotent};
use pfiliform::e6roots::{
    build_e6, layers, nilradical_lcs_dims, two_abelian_witness, verify_witness, Abelianity, ParabolicSpec,
};
use pfiliform::exactlin::parse_rational;
use pfiliform::LieAlgebra;
use pfiliform_cli::{run, AlgebraFile, Suite, SuiteConfig};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "pfiliform",
    version,
    about = "Exact computations on (n-5)-filiform Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect or serialize catalog algebras.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Shorthand for `catalog build`.
    Build(BuildArgs),
    /// Invariants of an algebra read from a file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 16)]
        max_dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Nilradical of the parabolic subalgebra of E6 given by simple roots, e.g. `1,4`.
    E6 {
        subset: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Table of the 45 families.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Write one catalog algebra as an algebra file.
    Build(BuildArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// `g0`, `g1`..`g45`, or the bare number.
    family: String,
    #[arg(long)]
    dim: usize,
    /// Parameter of families 24 and 25, as a rational such as `3/2`.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Output path; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit status 2: the input could not be used.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` signals a failed verification.
fn dispatch(cmd: Command) -> Result<bool, InputError> {
    match cmd {
        Command::Catalog(CatalogCommand::List { json }) => catalog_list(json),
        Command::Catalog(CatalogCommand::Build(args)) | Command::Build(args) => build(&args),
        Command::Analyze {
            file,
            json,
            seed,
            samples,
        } => analyze(&file, json, seed, samples),
        Command::Verify {
            suite,
            max_dim,
            seed,
            json,
        } => {
            let report = run(
                suite,
                &SuiteConfig {
                    max_dim,
                    seed,
                    ..SuiteConfig::default()
                },
            );
            print!(
                "{}",
                if json {
                    report.to_json() + "\n"
                } else {
                    report.to_text()
                }
            );
            Ok(report.all_passed())
        }
        Command::E6 { subset, json } => e6(&subset, json),
    }
}

#[derive(Serialize)]
struct FamilyRow {
    id: usize,
    dims: String,
    derived_dim: usize,
    terms: Vec<String>,
    sum: String,
    listed_cn_dims: Vec<usize>,
}

fn catalog_list(json: bool) -> Result<bool, InputError> {
    let rows: Vec<FamilyRow> = list_families()
        .iter()
        .map(|e| {
            let dims = match e.parity {
                Parity::Even => format!("2m, m >= {}", e.min_m),
                Parity::Odd => format!("2m+1, m >= {}", e.min_m),
            };
            let terms = e
                .terms
                .iter()
                .map(|t| match t.coeff {
                    Coefficient::One => t.map.to_string(),
                    Coefficient::Alpha => format!("alpha*{}", t.map),
                })
                .collect();
            let s = e.guarded_sum;
            let pattern = match s.pattern {
                PairPattern::OddEven => "psi1(2t-1,2t)",
                PairPattern::EvenOdd => "psi1(2t,2t+1)",
                PairPattern::Shifted => "psi1(2t+1,2t+2)",
            };
            let guard = s.guard.map(|g| format!(", m > {g}")).unwrap_or_default();
            FamilyRow {
                id: e.id,
                dims,
                derived_dim: e.expected_derived_dim,
                terms,
                sum: format!("t = {}..m-{}{guard}: {pattern}", s.start, s.offset),
                listed_cn_dims: e.claimed_cn_dims.to_vec(),
            }
        })
        .collect();
    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        for r in &rows {
            println!(
                "g{:<3} n = {:<14} dim C1 = {}  {} + sum[{}]{}",
                r.id,
                r.dims,
                r.derived_dim,
                r.terms.join(" + "),
                r.sum,
                if r.listed_cn_dims.is_empty() {
                    String::new()
                } else {
                    format!("  CN at n in {:?}", r.listed_cn_dims)
                }
            );
        }
    }
    Ok(true)
}

fn build(args: &BuildArgs) -> Result<bool, InputError> {
    let name = args.family.trim_start_matches(['g', 'G']);
    let id: usize = name
        .parse()
        .map_err(|_| InputError(format!("unknown family '{}'", args.family)))?;
    let alpha = args.alpha.as_deref().map(parse_rational).transpose()?;
    let g = if id == 0 {
        if alpha.is_some() {
            return Err(InputError("g0 takes no parameter".into()));
        }
        build_g0(args.dim)?
    } else {
        build_family(id, args.dim, alpha.as_ref())?
    };
    let text = AlgebraFile::from_algebra(&g).to_json() + "\n";
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(true)
}

#[derive(Serialize)]
struct AnalyzeOutput {
    dim: usize,
    lcs_dims: Vec<usize>,
    nilindex: Option<usize>,
    commutativity_index: Option<usize>,
    char_seq_first_generator: Option<String>,
    char_seq_sampled: Option<String>,
    derived_dim: usize,
    derivation_dim: usize,
    torus_dim: usize,
    characteristically_nilpotent: bool,
}

fn load(path: &PathBuf) -> Result<LieAlgebra, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let g = AlgebraFile::parse(&text)?.to_algebra()?;
    let bad = g.verify_jacobi();
    if !bad.is_empty() {
        let triples: Vec<String> = bad
            .iter()
            .map(|v| {
                let (i, j, k) = v.triple;
                format!("({},{},{})", g.label(i), g.label(j), g.label(k))
            })
            .collect();
        return Err(InputError(format!("Jacobi identity fails at {}", triples.join(" "))));
    }
    Ok(g)
}

fn analyze(path: &PathBuf, json: bool, seed: u64, samples: usize) -> Result<bool, InputError> {
    let g = load(path)?;
    let a = g.analyze(seed, samples);
    let cn = is_characteristically_nilpotent(&g);
    let out = AnalyzeOutput {
        dim: a.dim,
        lcs_dims: a.lcs_dims,
        nilindex: a.nilindex,
        commutativity_index: a.commutativity_index,
        char_seq_first_generator: a.char_seq_claimed_vector.map(|p| p.to_string()),
        char_seq_sampled: a.char_seq_sampled.map(|p| p.to_string()),
        derived_dim: a.derived_dim,
        derivation_dim: derivation_space(&g).dim(),
        torus_dim: diagonal_torus(&g).dim(),
        characteristically_nilpotent: cn.characteristically_nilpotent,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(true);
    }
    let opt = |o: Option<usize>| o.map_or("-".to_string(), |v| v.to_string());
    println!("dim                          {}", out.dim);
    println!("lower central series dims    {:?}", out.lcs_dims);
    println!("nilindex                     {}", opt(out.nilindex));
    println!("commutativity index          {}", opt(out.commutativity_index));
    println!(
        "c(first generator)           {}",
        out.char_seq_first_generator.as_deref().unwrap_or("-")
    );
    println!(
        "characteristic sequence      {} (sampled, seed {seed})",
        out.char_seq_sampled.as_deref().unwrap_or("-")
    );
    println!("dim C1                       {}", out.derived_dim);
    println!("dim Der                      {}", out.derivation_dim);
    println!("diagonal torus dim           {}", out.torus_dim);
    println!("characteristically nilpotent {}", out.characteristically_nilpotent);
    Ok(true)
}

#[derive(Serialize)]
struct E6Output {
    subset: String,
    phi2_size: usize,
    layer_sizes: Vec<(i32, usize)>,
    lcs_dims: Vec<usize>,
    verdict: String,
    alpha: Option<String>,
    beta: Option<String>,
    heights: Option<(i32, i32)>,
    sum: Option<String>,
}

fn e6(subset: &str, json: bool) -> Result<bool, InputError> {
    let spec = ParabolicSpec::parse(subset)?;
    let rs = build_e6();
    let l = layers(&rs, &spec);
    let mut out = E6Output {
        subset: spec.to_string(),
        phi2_size: l.phi2.len(),
        layer_sizes: l.by_height.iter().map(|(h, v)| (*h, v.len())).collect(),
        lcs_dims: nilradical_lcs_dims(&rs, &spec),
        verdict: String::new(),
        alpha: None,
        beta: None,
        heights: None,
        sum: None,
    };
    let (verdict, pair) = match two_abelian_witness(&rs, &spec) {
        Abelianity::OneAbelian => ("OneAbelian", None),
        Abelianity::TwoAbelian { alpha, beta } => ("TwoAbelian", Some((alpha, beta))),
        Abelianity::DeeperAbelian { gamma, epsilon } => ("DeeperAbelian", Some((gamma, epsilon))),
    };
    out.verdict = verdict.to_string();
    if let Some((a, b)) = pair {
        let w = verify_witness(&rs, &spec, &a, &b);
        out.alpha = Some(a.to_string());
        out.beta = Some(b.to_string());
        out.heights = Some(w.heights);
        out.sum = Some(w.sum.to_string());
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(true);
    }
    println!("subset       {}", out.subset);
    println!("|Phi2+|      {}", out.phi2_size);
    let layer: Vec<String> = out.layer_sizes.iter().map(|(h, c)| format!("{h}:{c}")).collect();
    println!("layers       {}", layer.join(" "));
    println!("C^k dims     {:?}", out.lcs_dims);
    println!("verdict      {}", out.verdict);
    if let (Some(a), Some(b), Some(h), Some(s)) = (&out.alpha, &out.beta, out.heights, &out.sum) {
        println!("witness      {a} + {b} = {s}");
        println!("heights      {},{}", h.0, h.1);
    }
    Ok(true)
}
