//! Command-line frontend. [`run`] takes the argument list and output
//! streams and returns the exit code: 0 on success, 1 when a law fails or a
//! counterexample is found, 2 on usage or parse errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use weightkit_core::impedance::reduce_network;
use weightkit_core::linlog::{self, Environment, Validity};
use weightkit_core::transform::{transform, transform_back, FloatWeight, Scale};
use weightkit_core::wcat::{best_cost, CatKind};
use weightkit_core::weight::parse_rational;
use weightkit_core::wset::{self, WSet};
use weightkit_core::{Structure, Weight};

use crate::formats;
use crate::laws::{self, Config, Model};

const GRAMMARS: &str = "\
Formula grammar (eval):
  formula := add (\"-o\" formula)?
  add     := mul ((\"&\" | \"(+)\") mul)*
  mul     := unary ((\"*\" | \"@\") unary)*
  unary   := primary \"^\"*
  primary := atom | \"1\" | \"bot\" | \"top\" | \"0\" | \"(\" formula \")\"
  atom    := [a-z][a-z0-9_]*
  * tensor, @ par, & with, (+) plus, ^ dual, -o implication (right-assoc).

Weight literals: inf | <int> | <int>/<int> | decimal with at most 9 fractional digits.
Bindings: <atom>=<weight>

File formats (blank lines and lines starting with # are ignored):
  weighted set   one `<id> <weight>` per line
  map            one `<src-id> -> <dst-id>` per source element
  graph          one `<src> <dst> <weight>` per edge; a lone `<name>` declares an object
  hom table      `<additive|multiplicative> <a> <b> <value>` overriding hom(a, b)
  network        JSON: {\"series\": [..]}, {\"parallel\": [..]}, {\"R\": \"3/2\"}, {\"L\": ..}, {\"C\": ..}

Exit codes: 0 success, 1 law failure or counterexample, 2 usage or parse error.";

#[derive(Parser, Debug)]
#[command(name = "weightkit", version, about = "Exact computation with weights on [0, inf]", after_help = GRAMMARS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a formula in ([0, inf], >=, ., 1).
    Eval {
        expr: String,
        /// `<atom>=<weight>` assignments.
        bindings: Vec<String>,
        /// Check `[[expr]] <= 1` with unbound atoms ranging over the grid.
        #[arg(long)]
        check_valid: bool,
    },
    /// Run a law suite, or `all`.
    Laws {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(suite_names()))]
        suite: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replace hom entries from a table file.
        #[arg(long)]
        hom_table: Option<PathBuf>,
    },
    /// Weighted-set constructions.
    Wset {
        #[command(subcommand)]
        op: WsetOp,
    },
    /// Best-cost matrix of a weighted graph, as TSV.
    Closure {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "additive")]
        kind: KindArg,
    },
    /// Reduce a series-parallel network at angular frequency omega.
    Impedance {
        network: PathBuf,
        #[arg(long)]
        omega: String,
    },
    /// Probabilistic or relative reading of a weight, or back with --back.
    Transform {
        value: String,
        #[arg(long, value_enum, default_value = "probabilistic")]
        scale: ScaleArg,
        /// Read `value` as a float on the scale and return the weight.
        #[arg(long)]
        back: bool,
    },
}

#[derive(Subcommand, Debug)]
enum WsetOp {
    /// Weight of a map and whether it is a contraction.
    Map {
        source: PathBuf,
        target: PathBuf,
        map: PathBuf,
        #[arg(long, value_enum, default_value = "additive")]
        structure: StructureArg,
        /// Exit 1 unless the map is a contraction.
        #[arg(long)]
        check: bool,
    },
    /// Hom object [Y, Z].
    Hom {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, value_enum, default_value = "additive")]
        structure: StructureArg,
    },
    /// Tensor X (x) Y.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum, default_value = "additive")]
        structure: StructureArg,
    },
    /// Cartesian product.
    Product { sets: Vec<PathBuf> },
    /// Coproduct.
    Coproduct { sets: Vec<PathBuf> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StructureArg {
    Additive,
    Multiplicative,
}

impl From<StructureArg> for Structure {
    fn from(s: StructureArg) -> Self {
        match s {
            StructureArg::Additive => Structure::Additive,
            StructureArg::Multiplicative => Structure::Multiplicative,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Additive,
    Multiplicative,
    Sup,
}

impl From<KindArg> for CatKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Additive => CatKind::Additive,
            KindArg::Multiplicative => CatKind::Multiplicative,
            KindArg::Sup => CatKind::Sup,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScaleArg {
    Probabilistic,
    Relative,
}

fn suite_names() -> Vec<&'static str> {
    let mut names = laws::SUITES.to_vec();
    names.push("all");
    names
}

/// Exit code 2 with a message.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<(String, i32), UsageError>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Eval { expr, bindings, check_valid } => eval(&expr, &bindings, check_valid),
        Command::Laws { suite, samples, seed, hom_table } => {
            let model = match hom_table {
                Some(path) => Model::parse_hom_table(&read(&path)?)?,
                None => Model::standard(),
            };
            let reports = laws::run(&suite, Config { samples, seed }, &model)?;
            let code = if reports.iter().all(laws::SuiteReport::passed) { 0 } else { 1 };
            Ok((laws::render(&reports), code))
        }
        Command::Wset { op } => wset_op(op),
        Command::Closure { graph, kind } => {
            let g = formats::parse_graph(&read(&graph)?)?;
            Ok((formats::write_cost_matrix(&best_cost(&g, kind.into())), 0))
        }
        Command::Impedance { network, omega } => {
            let net = formats::parse_network(&read(&network)?)?;
            let omega = parse_rational(&omega).ok_or_else(|| UsageError(format!("bad omega `{omega}`")))?;
            Ok((formats::write_impedance(&reduce_network(&net, &omega)?), 0))
        }
        Command::Transform { value, scale, back } => {
            let scale = match scale {
                ScaleArg::Probabilistic => Scale::Probabilistic,
                ScaleArg::Relative => Scale::Relative,
            };
            if back {
                let v: f64 = value.parse().map_err(|_| UsageError(format!("bad float `{value}`")))?;
                let w = transform_back(FloatWeight { value: v, scale });
                Ok((format!("{}\tinexact\n", render_float(w.value)), 0))
            } else {
                let w: Weight = value.parse()?;
                Ok((format!("{}\n", render_float(transform(&w, scale).value)), 0))
            }
        }
    }
}

fn render_float(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v}")
    }
}

fn read(path: &Path) -> Result<String, UsageError> {
    std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn read_wset(path: &Path) -> Result<WSet, UsageError> {
    Ok(formats::parse_wset(&read(path)?)?)
}

fn eval(expr: &str, bindings: &[String], check_valid: bool) -> Outcome {
    let f = linlog::parse(expr)?;
    let mut env = Environment::new();
    for b in bindings {
        let (name, w) = b.split_once('=').ok_or_else(|| UsageError(format!("binding `{b}` is not name=weight")))?;
        env.bind(name.trim(), w.trim().parse()?);
    }
    if !check_valid {
        return Ok((format!("{}\n", linlog::eval(&f, &env)?), 0));
    }
    let free: Vec<&str> = f.atoms().into_iter().filter(|a| env.get(a).is_none()).collect();
    let envs = linlog::extend_environments(&env, free, &Weight::grid());
    Ok(match linlog::valid(&f, &envs)? {
        Validity::Valid => ("valid\n".into(), 0),
        Validity::Counterexample { env, value } => {
            let assignment: Vec<String> = env.iter().map(|(a, w)| format!("{a}={w}")).collect();
            (format!("counterexample\t{}\tvalue={value}\n", assignment.join(" ")), 1)
        }
    })
}

fn wset_op(op: WsetOp) -> Outcome {
    match op {
        WsetOp::Map { source, target, map, structure, check } => {
            let (x, y) = (read_wset(&source)?, read_wset(&target)?);
            let f = formats::parse_map(&read(&map)?, &x, &y)?;
            let contraction = f.is_contraction();
            let text = format!(
                "weight\t{}\ncontraction\t{}\n",
                f.weight(structure.into()),
                if contraction { "yes" } else { "no" }
            );
            Ok((text, if check && !contraction { 1 } else { 0 }))
        }
        WsetOp::Hom { source, target, structure } => {
            let hom = wset::hom_object(&read_wset(&source)?, &read_wset(&target)?, structure.into())?;
            Ok((formats::write_wset(&hom), 0))
        }
        WsetOp::Tensor { left, right, structure } => {
            let t = wset::tensor(&read_wset(&left)?, &read_wset(&right)?, structure.into());
            Ok((formats::write_wset(&t), 0))
        }
        WsetOp::Product { sets } => {
            let sets = sets.iter().map(|p| read_wset(p)).collect::<Result<Vec<_>, _>>()?;
            Ok((formats::write_wset(&wset::product(&sets)), 0))
        }
        WsetOp::Coproduct { sets } => {
            let sets = sets.iter().map(|p| read_wset(p)).collect::<Result<Vec<_>, _>>()?;
            Ok((formats::write_wset(&wset::coproduct(&sets)), 0))
        }
    }
}
