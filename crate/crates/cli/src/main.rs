//! `staircase-groth`: compute skew Schur and Grothendieck functions, change
//! bases, count coefficients and run the identity suites.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use staircase_core::grothendieck::{
    alpha, dual_grothendieck, expand_in_dual_grothendieck, expand_in_grothendieck, grothendieck,
    grothendieck_rook, lr_coeff, schur,
};
use staircase_core::symfunc::{m_to_complete, m_to_elementary, m_to_schur, Coeffs};
use staircase_core::verify::{self, HopfBounds, Plan};
use staircase_core::{Partition, SignedCount, SkewShape, SymFunc, TruncationProfile};

#[derive(Parser)]
#[command(
    name = "staircase-groth",
    version,
    about = "Stable and dual stable Grothendieck functions of skew shapes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Skew Schur function s.
    S,
    /// Dual stable Grothendieck g.
    #[value(name = "g")]
    SmallG,
    /// Stable Grothendieck G.
    #[value(name = "G")]
    BigG,
    /// Rook-strip form G_{λ//μ}; the shape is written `λ//μ`.
    #[value(name = "G-double")]
    Double,
}

impl Kind {
    fn tag(self) -> &'static str {
        match self {
            Kind::S => "s",
            Kind::SmallG => "g",
            Kind::BigG => "G",
            Kind::Double => "G-double",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    S,
    #[value(name = "g")]
    SmallG,
    #[value(name = "G")]
    BigG,
    E,
    H,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoeffKind {
    C,
    Alpha,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[value(name = "stembridge-g")]
    StembridgeG,
    #[value(name = "stembridge-G")]
    StembridgeBigG,
    Lattice,
    AlphaRecurrence,
    Basis,
    Hopf,
    Converse,
    Arith,
}

#[derive(clap::Args)]
struct FunctionArgs {
    /// Function to compute.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Shape `outer/inner` (or `outer//mu` for G-double).
    #[arg(long)]
    shape: String,
    /// Number of variables; defaults to the degree bound.
    #[arg(long)]
    vars: Option<usize>,
    /// Degree bound; defaults to the size of the shape.
    #[arg(long)]
    deg: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial coefficients of s, g, G or G-double of a shape.
    Compute(FunctionArgs),
    /// Expand a computed function in another basis.
    Expand {
        #[command(flatten)]
        function: FunctionArgs,
        /// Target basis.
        #[arg(long, value_enum)]
        target: Target,
    },
    /// A Littlewood-Richardson coefficient c or a skew coefficient alpha.
    Coeff {
        #[arg(value_enum)]
        which: CoeffKind,
        /// c: first lower index.
        #[arg(long)]
        nu: Option<String>,
        /// c: second lower index.
        #[arg(long)]
        mu: Option<String>,
        /// c: upper index (the lattice content).
        #[arg(long)]
        lambda: Option<String>,
        /// alpha: skew shape.
        #[arg(long)]
        shape: Option<String>,
        /// alpha: content.
        #[arg(long)]
        content: Option<String>,
    },
    /// Run an identity suite.
    Verify(VerifyArgs),
    /// Scan all partitions for the converse of the staircase equality.
    Scan {
        #[arg(long, default_value_t = 12)]
        max_size: usize,
        /// Run a single case by its inputs.
        #[arg(long)]
        case: Option<String>,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    extra: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    refined: bool,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    deg: Option<usize>,
    #[arg(long)]
    big_n: Option<usize>,
    #[arg(long)]
    small: Option<usize>,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    pairs: Option<usize>,
    /// Run a single case by its inputs.
    #[arg(long)]
    case: Option<String>,
}

/// A usage error: bad option values or combinations.
struct Usage(String);

fn usage(option: &str, e: impl std::fmt::Display) -> Usage {
    Usage(format!("{option}: {e}"))
}

fn parse_partition(option: &str, s: &str) -> Result<Partition, Usage> {
    s.parse().map_err(|e| usage(option, e))
}

/// Function document shared by `compute` and `expand`.
#[derive(Serialize, Deserialize)]
struct FunctionDoc {
    kind: String,
    shape: String,
    basis: String,
    trunc: TruncDoc,
    coeffs: Vec<CoeffDoc>,
}

#[derive(Serialize, Deserialize)]
struct TruncDoc {
    vars: usize,
    max_deg: usize,
}

#[derive(Serialize, Deserialize)]
struct CoeffDoc {
    partition: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct CountDoc {
    coeff: String,
    inputs: Vec<(String, Vec<usize>)>,
    value: String,
    sign_exponent: i64,
    signed: String,
}

fn function_doc(
    kind: Kind,
    shape: &str,
    basis: &str,
    trunc: TruncationProfile,
    coeffs: &Coeffs,
) -> FunctionDoc {
    FunctionDoc {
        kind: kind.tag().to_string(),
        shape: shape.to_string(),
        basis: basis.to_string(),
        trunc: TruncDoc {
            vars: trunc.num_vars(),
            max_deg: trunc.max_degree(),
        },
        coeffs: coeffs
            .iter()
            .map(|(p, c)| CoeffDoc {
                partition: p.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

fn function_text(doc: &FunctionDoc) -> String {
    let body = if doc.coeffs.is_empty() {
        "0".to_string()
    } else {
        doc.coeffs
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.partition.iter().map(usize::to_string).collect();
                format!("{}[{}]={}", doc.basis, parts.join(","), c.coeff)
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "# kind={} shape={} basis={} vars={} max_deg={}\n{body}\n",
        doc.kind, doc.shape, doc.basis, doc.trunc.vars, doc.trunc.max_deg
    )
}

fn compute(args: &FunctionArgs) -> Result<(SymFunc, String), Usage> {
    let (shape_text, size, rook) = if args.kind == Kind::Double {
        let (outer, mu) = args
            .shape
            .split_once("//")
            .ok_or_else(|| usage("--shape", "G-double expects `outer//mu`"))?;
        let outer = parse_partition("--shape", outer)?;
        let mu = parse_partition("--shape", mu)?;
        if !outer.contains(&mu) {
            return Err(usage(
                "--shape",
                format!("({mu}) is not contained in ({outer})"),
            ));
        }
        let size = outer.size() - mu.size();
        (args.shape.clone(), size, Some((outer, mu)))
    } else {
        if args.shape.contains("//") {
            return Err(usage(
                "--shape",
                "`//` is only meaningful with --kind G-double",
            ));
        }
        let shape: SkewShape = args.shape.parse().map_err(|e| usage("--shape", e))?;
        (shape.to_string(), shape.size(), None)
    };
    let deg = args.deg.unwrap_or(size);
    let vars = args.vars.unwrap_or(deg);
    let trunc = TruncationProfile::new(deg, vars).map_err(|e| usage("--vars", e))?;
    let f = match (args.kind, rook) {
        (Kind::Double, Some((outer, mu))) => {
            grothendieck_rook(&outer, &mu, trunc).map_err(|e| usage("--shape", e))?
        }
        (kind, _) => {
            let shape: SkewShape = args.shape.parse().expect("parsed above");
            match kind {
                Kind::S => schur(&shape, trunc).map_err(|e| usage("--deg", e))?,
                Kind::SmallG => dual_grothendieck(&shape, trunc).map_err(|e| usage("--deg", e))?,
                _ => grothendieck(&shape, trunc),
            }
        }
    };
    Ok((f, shape_text))
}

fn count_doc(which: &str, inputs: Vec<(&str, &Partition)>, c: SignedCount) -> CountDoc {
    CountDoc {
        coeff: which.to_string(),
        inputs: inputs
            .into_iter()
            .map(|(k, p)| (k.to_string(), p.parts().to_vec()))
            .collect(),
        value: c.value.to_string(),
        sign_exponent: c.sign_exponent,
        signed: c.signed().to_string(),
    }
}

fn required<'a>(option: &str, v: &'a Option<String>) -> Result<&'a str, Usage> {
    v.as_deref()
        .ok_or_else(|| Usage(format!("{option}: required")))
}

fn forbid(which: &str, present: &[(&str, bool)]) -> Result<(), Usage> {
    match present.iter().find(|(_, p)| *p) {
        Some((name, _)) => Err(Usage(format!("{name}: not accepted by {which}"))),
        None => Ok(()),
    }
}

fn plan_for(v: &VerifyArgs) -> Result<Plan, Usage> {
    let given = |name: &'static str, present: bool| (name, present);
    let all = [
        given("--n", v.n.is_some()),
        given("--extra", v.extra.is_some()),
        given("--k", v.k.is_some()),
        given("--refined", v.refined),
        given("--k-max", v.k_max.is_some()),
        given("--deg", v.deg.is_some()),
        given("--big-n", v.big_n.is_some()),
        given("--small", v.small.is_some()),
        given("--max-size", v.max_size.is_some()),
        given("--seed", v.seed.is_some()),
        given("--pairs", v.pairs.is_some()),
    ];
    let allow = |names: &[&str]| -> Result<(), Usage> {
        let stray: Vec<(&str, bool)> = all
            .iter()
            .filter(|(n, _)| !names.contains(n))
            .copied()
            .collect();
        forbid("this suite", &stray)
    };
    let positive = |name: &str, v: usize| {
        if v == 0 {
            Err(usage(name, "must be positive"))
        } else {
            Ok(v)
        }
    };
    Ok(match v.suite {
        Suite::StembridgeG => {
            allow(&["--n"])?;
            verify::plan_stembridge_g(positive("--n", v.n.unwrap_or(4))?)
        }
        Suite::StembridgeBigG => {
            allow(&["--n", "--extra"])?;
            verify::plan_stembridge_big_g(positive("--n", v.n.unwrap_or(3))?, v.extra.unwrap_or(3))
        }
        Suite::Lattice => {
            allow(&["--n", "--extra"])?;
            verify::plan_lattice_rules(positive("--n", v.n.unwrap_or(4))?, v.extra)
        }
        Suite::AlphaRecurrence => {
            allow(&["--n", "--k", "--refined"])?;
            let n = positive("--n", v.n.unwrap_or(4))?;
            if let Some(k) = v.k {
                if k == 0 || k >= n {
                    return Err(usage("--k", format!("need 1 <= k < n = {n}")));
                }
            }
            verify::plan_alpha_recurrence(n, v.k, v.refined)
        }
        Suite::Basis => {
            allow(&["--k-max", "--deg"])?;
            let k_max = positive("--k-max", v.k_max.unwrap_or(4))?;
            let d = v.deg.unwrap_or(7);
            if d < k_max {
                return Err(usage(
                    "--deg",
                    format!("must be at least --k-max = {k_max}"),
                ));
            }
            verify::plan_basis_identities(k_max, d)
        }
        Suite::Hopf => {
            allow(&["--n", "--big-n", "--extra", "--small"])?;
            let def = HopfBounds::default();
            verify::plan_hopf(HopfBounds {
                n: v.n.unwrap_or(def.n),
                big_n: v.big_n.unwrap_or(def.big_n),
                extra: v.extra.unwrap_or(def.extra),
                small: v.small.unwrap_or(def.small),
            })
        }
        Suite::Converse => {
            allow(&["--max-size"])?;
            verify::plan_converse_scan(v.max_size.unwrap_or(12))
        }
        Suite::Arith => {
            allow(&["--seed", "--pairs"])?;
            verify::plan_arithmetic(
                v.seed.unwrap_or(verify::DEFAULT_SEED),
                v.pairs.unwrap_or(100),
            )
        }
    })
}

fn run_plan(
    plan: Plan,
    case: &Option<String>,
    format: Format,
    out: &mut dyn Write,
) -> Result<u8, Usage> {
    let plan = match case {
        Some(c) => {
            let one = plan.only(c);
            if one.is_empty() {
                return Err(usage("--case", format!("no case named '{c}'")));
            }
            one
        }
        None => plan,
    };
    let report = plan.run();
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => serde_json::to_string(&report).expect("report serializes") + "\n",
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Usage(e.to_string()))?;
    Ok(if report.passed { 0 } else { 1 })
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, Usage> {
    let emit = |out: &mut dyn Write, s: String| {
        out.write_all(s.as_bytes())
            .map_err(|e| Usage(e.to_string()))
    };
    match &cli.command {
        Command::Compute(args) => {
            let (f, shape) = compute(args)?;
            let doc = function_doc(args.kind, &shape, "m", f.trunc(), f.coeffs());
            emit(out, render(&doc, cli.format, function_text))?;
        }
        Command::Expand { function, target } => {
            let (f, shape) = compute(function)?;
            let expansion = match target {
                Target::S => m_to_schur(&f),
                Target::E => m_to_elementary(&f),
                Target::H => m_to_complete(&f).map_err(|e| usage("--target", e))?,
                Target::SmallG => {
                    expand_in_dual_grothendieck(&f).map_err(|e| usage("--target", e))?
                }
                Target::BigG => expand_in_grothendieck(&f).map_err(|e| usage("--target", e))?,
            };
            let doc = function_doc(
                function.kind,
                &shape,
                expansion.basis().tag(),
                expansion.trunc(),
                expansion.coeffs(),
            );
            emit(out, render(&doc, cli.format, function_text))?;
        }
        Command::Coeff {
            which,
            nu,
            mu,
            lambda,
            shape,
            content,
        } => {
            let doc = match which {
                CoeffKind::C => {
                    forbid(
                        "coeff c",
                        &[
                            ("--shape", shape.is_some()),
                            ("--content", content.is_some()),
                        ],
                    )?;
                    let nu = parse_partition("--nu", required("--nu", nu)?)?;
                    let mu = parse_partition("--mu", required("--mu", mu)?)?;
                    let lam = parse_partition("--lambda", required("--lambda", lambda)?)?;
                    count_doc(
                        "c",
                        vec![("nu", &nu), ("mu", &mu), ("lambda", &lam)],
                        lr_coeff(&nu, &mu, &lam),
                    )
                }
                CoeffKind::Alpha => {
                    forbid(
                        "coeff alpha",
                        &[
                            ("--nu", nu.is_some()),
                            ("--mu", mu.is_some()),
                            ("--lambda", lambda.is_some()),
                        ],
                    )?;
                    let sh: SkewShape = required("--shape", shape)?
                        .parse()
                        .map_err(|e| usage("--shape", e))?;
                    let c = parse_partition("--content", required("--content", content)?)?;
                    let count = alpha(&sh, &c);
                    count_doc(
                        "alpha",
                        vec![
                            ("outer", sh.outer()),
                            ("inner", sh.inner()),
                            ("content", &c),
                        ],
                        count,
                    )
                }
            };
            emit(out, render(&doc, cli.format, count_text))?;
        }
        Command::Verify(v) => return run_plan(plan_for(v)?, &v.case, cli.format, out),
        Command::Scan { max_size, case } => {
            return run_plan(verify::plan_converse_scan(*max_size), case, cli.format, out);
        }
    }
    Ok(0)
}

fn count_text(doc: &CountDoc) -> String {
    let inputs: Vec<String> = doc
        .inputs
        .iter()
        .map(|(k, p)| {
            let parts: Vec<String> = p.iter().map(usize::to_string).collect();
            format!("{k}={}", parts.join(","))
        })
        .collect();
    format!(
        "{} {} value={} sign_exponent={} signed={}\n",
        doc.coeff,
        inputs.join(" "),
        doc.value,
        doc.sign_exponent,
        doc.signed
    )
}

fn render<T: Serialize>(doc: &T, format: Format, text: impl Fn(&T) -> String) -> String {
    match format {
        Format::Text => text(doc),
        Format::Json => serde_json::to_string(doc).expect("document serializes") + "\n",
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("STAIRCASE_GROTH_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if n > 0 {
            // Only fails if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    configure_threads();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
