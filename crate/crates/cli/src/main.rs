use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use casimir_core::casimir::{
    virtual_k_scalar, virtual_lowest_point, virtual_weights, CasimirMap, ParamContext, WeylOracle,
};
use casimir_core::region::{self, Format, SvgOptions};
use casimir_core::rootdata::{LieType, RootDatum, WeylWord, DEFAULT_WEYL_CAP};
use casimir_core::verify::{self, VerifyOptions};
use casimir_core::Error;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(name = "casimir", version, about = "Central characters of positive representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data, symmetrizers, positive roots, w_0 and the diagram involution.
    Roots {
        lie_type: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate C_1..C_n at a point.
    Character(CharacterArgs),
    /// Run the identity suite and print a JSON report.
    Verify {
        /// A type such as `B3`, or `all`.
        target: String,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
    },
    /// Sample the image region and write CSV, JSON or SVG.
    Region(RegionArgs),
    /// Virtual lowest weight point, K-scalars and virtual weights.
    Virtual(VirtualArgs),
}

#[derive(Args)]
struct CharacterArgs {
    lie_type: String,
    /// Rescaled parameters t_1..t_n.
    #[arg(long, num_args = 1.., allow_negative_numbers = true, conflicts_with = "lambda", required_unless_present = "lambda")]
    t: Option<Vec<f64>>,
    /// Unscaled parameters; needs --b.
    #[arg(long, num_args = 1.., allow_negative_numbers = true, requires = "b")]
    lambda: Option<Vec<f64>>,
    #[arg(long)]
    b: Option<f64>,
    /// Also evaluate the Weyl character formula.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RegionArgs {
    lie_type: String,
    /// Output path, `-` for stdout.
    #[arg(long)]
    csv: Option<String>,
    #[arg(long)]
    json: Option<String>,
    #[arg(long)]
    svg: Option<String>,
    /// Grid points per axis (default 200 for rank 2, 40 otherwise).
    #[arg(long)]
    steps: Option<usize>,
    /// Grid covers [0, range] on every axis.
    #[arg(long, default_value_t = region::DEFAULT_RANGE)]
    range: f64,
    /// Sample only the face t_i = 0 for this node label.
    #[arg(long, allow_negative_numbers = true)]
    face: Option<i64>,
    /// Log-scaled SVG axes.
    #[arg(long)]
    log: bool,
}

#[derive(Args)]
struct VirtualArgs {
    lie_type: String,
    #[arg(long)]
    b: f64,
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    lambda: Vec<f64>,
    /// Reduced word of w_0 as node labels; defaults to a fixed one.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    word: Option<Vec<i64>>,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Overflow | Error::DegeneratePoint { .. } | Error::CapExceeded { .. } => EXIT_NUMERIC,
            Error::KScalarMismatch { .. } => EXIT_VERIFY,
            Error::DimensionBound { .. } | Error::DenominatorTooSmall(_) | Error::DegreeTooLow(_) => {
                EXIT_NUMERIC
            }
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Roots { lie_type, json } => cmd_roots(&lie_type, json),
        Command::Character(a) => cmd_character(a),
        Command::Verify { target, seed } => cmd_verify(&target, seed),
        Command::Region(a) => cmd_region(a),
        Command::Virtual(a) => cmd_virtual(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn weyl_cap() -> std::result::Result<usize, Failure> {
    match std::env::var("CASIMIR_WEYL_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("CASIMIR_WEYL_CAP must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_WEYL_CAP),
    }
}

fn datum(s: &str) -> std::result::Result<RootDatum, Failure> {
    let t: LieType = s.parse()?;
    Ok(RootDatum::new(t))
}

fn check_len(d: &RootDatum, v: &[f64], what: &str) -> std::result::Result<(), Failure> {
    if v.len() != d.rank() {
        return Err(usage(format!(
            "{what} needs {} values for {}, got {}",
            d.rank(),
            d.lie_type(),
            v.len()
        )));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err(usage(format!("{what} values must be finite")));
    }
    Ok(())
}

fn check_b(b: f64) -> std::result::Result<(), Failure> {
    if b > 0.0 && b < 1.0 {
        Ok(())
    } else {
        Err(usage(format!("--b must lie in (0, 1), got {b}")))
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn fmt_vec(v: &[f64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_roots(s: &str, as_json: bool) -> CmdResult {
    let d = datum(s)?;
    let t = d.lie_type();
    let dsym: Vec<String> = d.dsym().iter().map(|r| r.to_string()).collect();
    let w0 = d.longest_word().labels(&t);
    let sigma: Vec<i64> = d.diagram_involution().iter().map(|&i| t.label(i)).collect();
    if as_json {
        print_json(&json!({
            "type": t.to_string(),
            "labels": t.labels(),
            "bourbaki": (0..t.rank()).map(|i| t.bourbaki_node(i)).collect::<Vec<_>>(),
            "cartan": d.cartan(),
            "d": dsym,
            "positive_roots": d.positive_roots(),
            "w0": w0,
            "sigma": sigma,
        }));
        return Ok(0);
    }
    println!("type {t}");
    println!("labels {:?}", t.labels());
    println!("cartan");
    for row in d.cartan() {
        println!("  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
    }
    println!("d {}", dsym.join(" "));
    println!("positive roots ({})", d.num_positive_roots());
    for r in d.positive_roots() {
        println!("  {r:?}");
    }
    println!("w0 {w0:?}");
    println!("sigma {sigma:?}");
    Ok(0)
}

fn cmd_character(a: CharacterArgs) -> CmdResult {
    let d = datum(&a.lie_type)?;
    let t = match (&a.t, &a.lambda) {
        (Some(t), _) => {
            check_len(&d, t, "--t")?;
            t.clone()
        }
        (None, Some(lambda)) => {
            check_len(&d, lambda, "--lambda")?;
            let b = a.b.ok_or_else(|| usage("--lambda requires --b"))?;
            check_b(b)?;
            ParamContext::new(&d, b).rescale(lambda)
        }
        (None, None) => return Err(usage("give --t or --lambda with --b")),
    };
    let map = CasimirMap::new(&d)?;
    let c = map.eval(&t)?;
    let oracle = if a.oracle {
        let o = WeylOracle::new(&d, weyl_cap()?)?;
        Some((0..d.rank()).map(|k| o.eval(k, &t)).collect::<casimir_core::Result<Vec<f64>>>()?)
    } else {
        None
    };
    if a.json {
        print_json(&json!({ "type": d.lie_type().to_string(), "t": t, "c": c, "oracle": oracle }));
    } else {
        println!("{}", fmt_vec(&c));
        if let Some(o) = oracle {
            println!("oracle {}", fmt_vec(&o));
        }
    }
    Ok(0)
}

fn cmd_verify(target: &str, seed: u64) -> CmdResult {
    let opts = VerifyOptions {
        weyl_cap: weyl_cap()?,
        seed,
        ..VerifyOptions::default()
    };
    let report = if target.eq_ignore_ascii_case("all") {
        verify::verify_all(&opts)
    } else {
        let t: LieType = target.parse()?;
        verify::verify_types(&[t], &opts)
    };
    print_json(&report.to_json());
    Ok(if report.ok() { 0 } else { EXIT_VERIFY })
}

fn write_output(path: &str, bytes: &[u8]) -> std::result::Result<(), Failure> {
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(bytes)?;
        out.flush()?;
    } else {
        fs::write(Path::new(path), bytes)
            .map_err(|e| usage(format!("cannot write {path}: {e}")))?;
    }
    Ok(())
}

fn cmd_region(a: RegionArgs) -> CmdResult {
    let d = datum(&a.lie_type)?;
    let outputs: Vec<(Format, &String)> = [
        (Format::Csv, a.csv.as_ref()),
        (Format::Json, a.json.as_ref()),
        (Format::Svg, a.svg.as_ref()),
    ]
    .into_iter()
    .filter_map(|(f, p)| p.map(|p| (f, p)))
    .collect();
    if outputs.is_empty() {
        return Err(usage("give at least one of --csv, --json, --svg"));
    }
    if outputs.iter().filter(|(_, p)| p.as_str() == "-").count() > 1 {
        return Err(usage("only one output may go to stdout"));
    }
    if a.svg.is_some() && d.rank() != 2 {
        return Err(Error::SvgRank(d.rank()).into());
    }
    let steps = a.steps.unwrap_or_else(|| region::default_steps(d.rank()));
    let map = CasimirMap::new(&d)?;
    let sample = match a.face {
        Some(label) => {
            let i = d.lie_type().index_of_label(label)?;
            region::sample_boundary(&map, i, a.range, steps)?
        }
        None => region::sample_region(&map, a.range, steps)?,
    };
    let svg = SvgOptions { log_axes: a.log };
    for (format, path) in outputs {
        let bytes = region::emit(&sample, format, svg)?;
        write_output(path, &bytes)?;
    }
    Ok(0)
}

fn cmd_virtual(a: VirtualArgs) -> CmdResult {
    let d = datum(&a.lie_type)?;
    let t = d.lie_type();
    check_b(a.b)?;
    check_len(&d, &a.lambda, "--lambda")?;
    let word = match &a.word {
        Some(labels) => WeylWord::new(
            labels
                .iter()
                .map(|&l| t.index_of_label(l))
                .collect::<casimir_core::Result<Vec<_>>>()?,
        ),
        None => d.longest_word(),
    };
    let ctx = ParamContext::new(&d, a.b);
    let vp = virtual_lowest_point(&d, &word, &ctx, &a.lambda)?;
    let ks = (0..d.rank())
        .map(|i| virtual_k_scalar(&d, &vp, &ctx, &a.lambda, i))
        .collect::<casimir_core::Result<Vec<_>>>()?;
    let (lowest, highest) = virtual_weights(&ctx, &a.lambda, &d.diagram_involution());
    if a.json {
        print_json(&json!({
            "type": t.to_string(),
            "b": a.b,
            "word": word.labels(&t),
            "v": vp.v,
            "k_scalars": ks,
            "lowest": lowest,
            "highest": highest,
        }));
        return Ok(0);
    }
    println!("word {:?}", word.labels(&t));
    for (j, v) in vp.v.iter().enumerate() {
        println!("v_{} = {v}", j + 1);
    }
    for (i, k) in ks.iter().enumerate() {
        println!("K_{} = {k}", t.label(i));
    }
    for (i, l) in lowest.iter().enumerate() {
        println!("Lambda_{} lowest = {l}", t.label(i));
    }
    for (i, h) in highest.iter().enumerate() {
        println!("Lambda_{} highest = {h}", t.label(i));
    }
    Ok(0)
}
