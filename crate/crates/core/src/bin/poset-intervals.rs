use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use poset_intervals::flag::{ab_index, cd_index, ce_index, flag_f_vector, upsilon};
use poset_intervals::ncpoly::{Alphabet, NcPoly};
use poset_intervals::poset::{
    count_chains_with_support, diamond_product, direct_product, dual, generate, graded_interval_poset, interval_poset,
    second_kind_transform, GradedPoset, Poset, PosetKind,
};
use poset_intervals::transforms::{delannoy_m, Transforms};
use poset_intervals::verify::{self, Suite};

const USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "poset-intervals", version, about = "Interval posets, flag indices and their transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build posets and poset constructions.
    Poset {
        #[arg(value_enum)]
        op: PosetOp,
        #[command(flatten)]
        input: Input,
        /// Comma-separated chain labels from bottom to top (for `chains`).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        support: Vec<String>,
    },
    /// Flag f-vector and the ab-, cd- and ce-indices of a graded poset.
    Index {
        #[arg(value_enum)]
        op: IndexOp,
        #[command(flatten)]
        input: Input,
    },
    /// Apply an operator to polynomials given as JSON files or text.
    Transform {
        #[arg(value_enum)]
        op: TransformOp,
        /// Polynomial JSON file; repeat for the two arguments of `M`.
        #[arg(long = "in")]
        inputs: Vec<PathBuf>,
        /// Polynomial in text form such as `c^2+d`; repeatable.
        #[arg(long)]
        poly: Vec<String>,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long, default_value_t = 0)]
        j: usize,
    },
    /// Run a verification suite and print its report.
    Verify {
        suite: Option<String>,
        #[arg(long = "suite")]
        suite_flag: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct Input {
    /// Poset JSON file; `product` and `diamond` take two.
    #[arg(long = "in")]
    inputs: Vec<PathBuf>,
    #[arg(long)]
    kind: Option<PosetKind>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetOp {
    Gen,
    Intervals,
    GradedIntervals,
    SecondKind,
    Product,
    Diamond,
    Dual,
    Eulerian,
    Chains,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexOp {
    Flag,
    Upsilon,
    Ab,
    Cd,
    Ce,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Iota,
    #[value(name = "Iab")]
    Iab,
    #[value(name = "Icd")]
    Icd,
    #[value(name = "IIab")]
    IIab,
    #[value(name = "IIcd")]
    IIcd,
    #[value(name = "M")]
    M,
    Pyr,
    Lift,
    Delannoy,
}

enum Failure {
    Usage(String),
    Domain(String),
    Verification(String),
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

impl Input {
    fn graded(&self) -> Result<Vec<GradedPoset>, Failure> {
        match (self.kind, self.n) {
            (Some(kind), Some(n)) => Ok(vec![generate(kind, n).map_err(domain)?]),
            (Some(_), None) | (None, Some(_)) => Err(Failure::Usage("--kind and --n go together".into())),
            (None, None) => self
                .inputs
                .iter()
                .map(|p| GradedPoset::from_json(&read(p)?).map_err(domain))
                .collect(),
        }
    }

    fn one_graded(&self) -> Result<GradedPoset, Failure> {
        let mut v = self.graded()?;
        match v.len() {
            1 => Ok(v.pop().expect("one")),
            k => Err(Failure::Usage(format!("expected one poset, got {k}"))),
        }
    }

    fn two_graded(&self) -> Result<(GradedPoset, GradedPoset), Failure> {
        let mut v = self.graded()?;
        match v.len() {
            2 => {
                let q = v.pop().expect("two");
                Ok((v.pop().expect("two"), q))
            }
            k => Err(Failure::Usage(format!("expected two posets (--in twice), got {k}"))),
        }
    }

    fn plain(&self) -> Result<Poset, Failure> {
        if self.kind.is_some() {
            return Ok(self.one_graded()?.into_poset());
        }
        match self.inputs.as_slice() {
            [p] => Poset::from_json(&read(p)?).map_err(domain),
            _ => Err(Failure::Usage("expected one --in".into())),
        }
    }
}

fn poly_json(p: &NcPoly) -> Value {
    serde_json::to_value(p.to_json_value()).expect("polynomial serializes")
}

fn poset_cmd(op: PosetOp, input: &Input, support: &[String]) -> Result<Value, Failure> {
    let graded = |g: GradedPoset| serde_json::to_value(g.to_json_value()).expect("poset serializes");
    Ok(match op {
        PosetOp::Gen => graded(input.one_graded()?),
        PosetOp::Intervals => serde_json::to_value(interval_poset(&input.plain()?).to_json_value()).expect("poset"),
        PosetOp::GradedIntervals => graded(graded_interval_poset(&input.one_graded()?)),
        PosetOp::SecondKind => Value::Array(
            second_kind_transform(&input.one_graded()?)
                .iter()
                .map(|m| json!({"generator": m.generator, "poset": m.poset.to_json_value()}))
                .collect(),
        ),
        PosetOp::Product => {
            let (p, q) = input.two_graded()?;
            graded(direct_product(&p, &q))
        }
        PosetOp::Diamond => {
            let (p, q) = input.two_graded()?;
            graded(diamond_product(&p, &q))
        }
        PosetOp::Dual => graded(dual(&input.one_graded()?)),
        PosetOp::Eulerian => json!(input.one_graded()?.is_eulerian()),
        PosetOp::Chains => {
            if support.is_empty() {
                return Err(Failure::Usage("chains needs --support".into()));
            }
            json!(count_chains_with_support(&input.one_graded()?, support).map_err(domain)?)
        }
    })
}

fn index_cmd(op: IndexOp, input: &Input) -> Result<Value, Failure> {
    let p = input.one_graded()?;
    let poly = match op {
        IndexOp::Flag => {
            let f = flag_f_vector(&p).map_err(domain)?;
            return Ok(serde_json::to_value(f.to_json_value()).expect("flag vector serializes"));
        }
        IndexOp::Upsilon => upsilon(&p),
        IndexOp::Ab => ab_index(&p),
        IndexOp::Cd => cd_index(&p),
        IndexOp::Ce => ce_index(&p),
    };
    Ok(poly_json(&poly.map_err(domain)?))
}

/// Text polynomials share one alphabet, guessed from all of their letters.
fn parse_polys(texts: &[String]) -> Result<Vec<NcPoly>, Failure> {
    let all = texts.concat();
    let alphabet = if all.contains('e') {
        Alphabet::Ce
    } else if all.contains(['c', 'd']) {
        Alphabet::Cd
    } else {
        Alphabet::Ab
    };
    texts.iter().map(|t| NcPoly::parse(alphabet, t).map_err(domain)).collect()
}

fn transform_cmd(op: TransformOp, inputs: &[PathBuf], texts: &[String], i: usize, j: usize) -> Result<Value, Failure> {
    if let TransformOp::Delannoy = op {
        return Ok(poly_json(&delannoy_m(i, j)));
    }
    let mut polys = Vec::new();
    for p in inputs {
        polys.push(NcPoly::from_json(&read(p)?).map_err(domain)?);
    }
    polys.extend(parse_polys(texts)?);
    let want = if let TransformOp::M = op { 2 } else { 1 };
    if polys.len() != want {
        return Err(Failure::Usage(format!("expected {want} polynomial input(s), got {}", polys.len())));
    }
    let mut t = Transforms::new();
    let u = &polys[0];
    let out = match op {
        TransformOp::Iota => t.iota(u),
        TransformOp::Iab => t.interval_ab(u),
        TransformOp::Icd => t.interval_cd(u),
        TransformOp::IIab => t.second_kind_ab(u),
        TransformOp::IIcd => t.second_kind_cd(u),
        TransformOp::M => t.mixing(u, &polys[1]),
        TransformOp::Pyr => t.pyr(u),
        TransformOp::Lift => t.lift(u),
        TransformOp::Delannoy => unreachable!("handled above"),
    };
    Ok(poly_json(&out.map_err(domain)?))
}

fn verify_cmd(suite: Option<&str>, seed: u64) -> Result<Value, Failure> {
    let suite: Suite = suite.unwrap_or("all").parse().map_err(Failure::Usage)?;
    let report = verify::run(suite, seed);
    let value = serde_json::to_value(&report).expect("report serializes");
    if let Some(c) = report.failures().next() {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        return Err(Failure::Verification(format!(
            "{} of {} cases failed; first counterexample: {}\n  expected: {}\n  actual:   {}",
            report.summary.failed, report.summary.total, c.description, c.expected, c.actual
        )));
    }
    Ok(value)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let value = match &cli.command {
        Command::Poset { op, input, support } => poset_cmd(*op, input, support)?,
        Command::Index { op, input } => index_cmd(*op, input)?,
        Command::Transform { op, inputs, poly, i, j } => transform_cmd(*op, inputs, poly, *i, *j)?,
        Command::Verify { suite, suite_flag, seed } => verify_cmd(suite.as_deref().or(suite_flag.as_deref()), *seed)?,
    };
    let text = serde_json::to_string_pretty(&value).expect("json") + "\n";
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}
