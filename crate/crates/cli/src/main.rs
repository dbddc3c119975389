//! `dessinum`: command-line front end for weighted bicolored plane trees.

mod render;

use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dessinum::counting::{count_rooted, count_rooted_by_edges, gj_count, mass_count};
use dessinum::enumerate::enumerate_codes_with;
use dessinum::galois::{is_self_dual, signature, tree_group_report};
use dessinum::surgery::{self, all_loci, PathLocus};
use dessinum::unitrees::catalog;
use dessinum::{
    automorphism_order, canonical_code, construct_witness, count_trees, is_unitree_bruteforce, match_family, min_deg_r,
    orbit_report, unique_tree, Error, ParseError, Passport, TreeCode, WeightedTree,
};
use dessinum_selftest::{run, run_all, Config, CRITERIA};

use render::Style;

#[derive(Parser)]
#[command(name = "dessinum", version, about = "Weighted bicolored plane trees: enumeration, bounds, unitrees, Galois invariants")]
struct Cli {
    /// Output format. `dot` and `svg` only apply to `render`.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// List every tree with a passport, one record per line, sorted by canonical code.
    Enumerate {
        #[arg(long)]
        passport: String,
        #[arg(long, env = "DESSINUM_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Count rooted trees, trees with a given number of edges, the mass, or trees with a passport.
    Count {
        /// Rooted trees of total weight `--weight` (edge-rooted, black end first).
        #[arg(long)]
        rooted: bool,
        #[arg(long)]
        weight: Option<u64>,
        /// Restrict the rooted count to this many edges.
        #[arg(long)]
        edges: Option<u64>,
        /// Sum of 1/|Aut| over all trees of weight `--weight`.
        #[arg(long)]
        mass: bool,
        #[arg(long)]
        passport: Option<String>,
    },
    /// Least degree of `P - Q` for a passport and the regime that gives it.
    Bounds {
        #[arg(long)]
        passport: String,
    },
    /// Build one tree with the passport.
    Construct {
        #[arg(long)]
        passport: String,
    },
    /// Recognise unitrees, or print the family catalog.
    Classify {
        #[arg(long, conflicts_with_all = ["passport", "catalog"])]
        tree: Option<String>,
        #[arg(long, conflicts_with = "catalog")]
        passport: Option<String>,
        #[arg(long)]
        catalog: bool,
    },
    /// Symmetry, monodromy group and self-duality of trees.
    Invariants {
        #[arg(long, conflicts_with = "stdin")]
        tree: Option<String>,
        /// Read codes from standard input, bare or as JSON objects with a `code` field.
        #[arg(long)]
        stdin: bool,
    },
    /// Split a passport's trees into classes of equal invariants.
    OrbitReport {
        #[arg(long)]
        passport: String,
        #[arg(long, env = "DESSINUM_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Apply a surgery or normalization to a tree.
    Transform {
        #[arg(value_enum)]
        op: Transform,
        #[arg(long)]
        tree: String,
        /// Factor for `scale`.
        #[arg(long)]
        factor: Option<u64>,
        /// Three consecutive edges `e1,e2,e3`, numbered by the order of the
        /// opening tokens in the code. Every path is used when omitted.
        #[arg(long)]
        path: Option<String>,
    },
    /// Draw a tree as DOT (default) or SVG with `--format svg`.
    Render {
        #[arg(long)]
        tree: String,
        /// Draw only black vertices; needs every white vertex of degree 2.
        #[arg(long)]
        implicit_white: bool,
        /// Rotates the layout; identical seeds give identical output.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the acceptance suite; exits nonzero if any criterion fails.
    Selftest {
        /// Cap on total weight for the exhaustive sweeps.
        #[arg(long)]
        max_weight: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=CRITERIA as i64))]
        criterion: Option<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Transform {
    ColorSwap,
    Reflect,
    Scale,
    Reduce,
    Exchange,
    Rip,
    StsMoves,
}

enum Failure {
    Domain(Error),
    Parse(String),
    Io(io::Error),
    /// Already reported; only the exit code is left.
    Silent,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Parse(p.to_string()),
            other => Failure::Domain(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = execute(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // A closed pipe (`| head`) is not an error.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Silent) => ExitCode::from(1),
    }
}

fn passport(s: &str) -> Outcome<Passport> {
    Ok(s.parse::<Passport>()?)
}

fn tree(s: &str) -> Outcome<WeightedTree> {
    Ok(s.parse::<TreeCode>()?.to_tree())
}

fn emit(out: &mut impl Write, format: Format, value: &Value) -> Outcome {
    match format {
        Format::Table => writeln!(out, "{}", table_row(value))?,
        _ => writeln!(out, "{value}")?,
    }
    Ok(())
}

/// Tab-separated `key=value` pairs; nested values stay as JSON.
fn table_row(value: &Value) -> String {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join("\t"),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn execute(cli: &Cli, out: &mut impl Write) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Enumerate { passport: p, jobs } => {
            let p = passport(p)?;
            for code in enumerate_codes_with(&p, *jobs) {
                let aut = automorphism_order(&code.to_tree());
                emit(out, format, &json!({ "code": code.to_string(), "automorphisms": aut }))?;
            }
        }
        Command::Count { rooted, weight, edges, mass, passport: p } => {
            if let Some(p) = p {
                let p = passport(p)?;
                let trees = count_trees(&p);
                let mut record = json!({ "passport": p.to_string(), "trees": trees });
                if p.is_ordinary() {
                    let face = p.face_partition()?;
                    record["weighted_count"] = json!(gj_count(&[p.black().clone(), p.white().clone(), face])?.to_string());
                }
                emit(out, format, &record)?;
                return Ok(());
            }
            let n = weight.ok_or_else(|| Failure::Parse("`count` needs --weight or --passport".into()))?;
            if *mass {
                writeln!(out, "{}", mass_count(n)?)?;
            } else if let Some(m) = edges {
                writeln!(out, "{}", count_rooted_by_edges(n, *m)?)?;
            } else if *rooted {
                writeln!(out, "{}", count_rooted(n as usize))?;
            } else {
                return Err(Failure::Parse("`count --weight` needs one of --rooted, --edges, --mass".into()));
            }
        }
        Command::Bounds { passport: p } => {
            let p = passport(p)?;
            let r = min_deg_r(&p);
            let record = json!({
                "passport": p.to_string(),
                "regime": r.regime.to_string(),
                "min_deg_R": r.min_deg_r,
                "d": r.d,
                "n": r.n,
                "p": r.p,
                "q": r.q,
            });
            emit(out, format, &record)?;
        }
        Command::Construct { passport: p } => {
            let p = passport(p)?;
            let t = construct_witness(&p)?;
            emit(out, format, &json!({ "passport": p.to_string(), "code": canonical_code(&t).to_string() }))?;
        }
        Command::Classify { tree: t, passport: p, catalog: all } => {
            if *all {
                for entry in catalog() {
                    let record = json!({
                        "family": entry.family.to_string(),
                        "sporadic": entry.family.is_sporadic(),
                        "parameters": entry.parameters,
                        "description": entry.description,
                        "examples": entry.examples.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    });
                    emit(out, format, &record)?;
                }
            } else if let Some(t) = t {
                let t = tree(t)?;
                emit(out, format, &classify(&t))?;
            } else if let Some(p) = p {
                let p = passport(p)?;
                let record = match unique_tree(&p) {
                    Some(t) => {
                        let mut r = classify(&t);
                        r["passport"] = json!(p.to_string());
                        r["unitree"] = json!(true);
                        r
                    }
                    None => json!({ "passport": p.to_string(), "unitree": false, "trees": count_trees(&p) }),
                };
                emit(out, format, &record)?;
            } else {
                return Err(Failure::Parse("`classify` needs --tree, --passport or --catalog".into()));
            }
        }
        Command::Invariants { tree: t, stdin } => {
            if let Some(t) = t {
                let t = tree(t)?;
                emit(out, format, &invariants(&t))?;
            } else if *stdin {
                for (i, line) in io::stdin().lock().lines().enumerate() {
                    let line = line?;
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    let code = code_from_line(line).map_err(|m| Failure::Parse(format!("line {}: {m}", i + 1)))?;
                    emit(out, format, &invariants(&code.to_tree()))?;
                }
            } else {
                return Err(Failure::Parse("`invariants` needs --tree or --stdin".into()));
            }
        }
        Command::OrbitReport { passport: p, jobs } => {
            let p = passport(p)?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads((*jobs).max(1))
                .build()
                .map_err(|e| Failure::Domain(Error::OutOfRange(e.to_string())))?;
            let report = pool.install(|| orbit_report(&p));
            let classes: Vec<Value> = report
                .classes
                .iter()
                .map(|c| {
                    json!({
                        "signature": c.signature.to_string(),
                        "automorphisms": c.signature.automorphisms,
                        "monodromy_order": c.signature.monodromy_order.to_string(),
                        "primitive": c.signature.primitive,
                        "self_dual": c.signature.self_dual,
                        "mirror_pair": c.mirror_pair,
                        "trees": c.trees.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let record = json!({
                "passport": p.to_string(),
                "trees": report.tree_count(),
                "class_sizes": report.class_sizes(),
                "classes": classes,
                "shape_disagreements": report.shape_disagreements.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "note": "equal invariants do not prove that trees form one Galois orbit",
            });
            match format {
                Format::Table => {
                    writeln!(out, "passport {} with {} trees", p, report.tree_count())?;
                    for c in &report.classes {
                        let mirror = if c.mirror_pair { " mirror pair" } else { "" };
                        writeln!(out, "{} trees  {}{mirror}", c.trees.len(), c.signature)?;
                        for code in &c.trees {
                            writeln!(out, "    {code}")?;
                        }
                    }
                }
                _ => writeln!(out, "{record}")?,
            }
        }
        Command::Transform { op, tree: t, factor, path } => {
            let t = tree(t)?;
            for result in transform(&t, *op, *factor, path.as_deref())? {
                emit(out, format, &result)?;
            }
        }
        Command::Render { tree: t, implicit_white, seed } => {
            let t = tree(t)?;
            let style = if *implicit_white { Style::ImplicitWhite } else { Style::Full };
            let doc = match format {
                Format::Svg => render::to_svg(&t, style, *seed)?,
                _ => render::to_dot(&t, style, *seed)?,
            };
            out.write_all(doc.as_bytes())?;
        }
        Command::Selftest { max_weight, criterion } => {
            let config = Config { max_weight: *max_weight };
            let outcomes = match criterion {
                Some(id) => vec![run(*id, &config)],
                None => run_all(&config),
            };
            let mut failed = 0;
            for o in &outcomes {
                write!(out, "{o}")?;
                out.flush()?;
                failed += usize::from(!o.passed());
            }
            writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed)?;
            if failed > 0 {
                out.flush()?;
                return Err(Failure::Silent);
            }
        }
    }
    Ok(())
}

fn code_from_line(line: &str) -> Result<TreeCode, String> {
    if line.starts_with('{') {
        let v: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let code = v.get("code").and_then(Value::as_str).ok_or("JSON record without a string `code` field")?;
        code.parse().map_err(|e: Error| e.to_string())
    } else {
        line.parse().map_err(|e: Error| e.to_string())
    }
}

fn classify(t: &WeightedTree) -> Value {
    let p = t.passport();
    match match_family(t) {
        Some(tag) => json!({
            "code": canonical_code(t).to_string(),
            "family": tag.family.to_string(),
            "parameters": tag.params.to_string(),
            "swapped": tag.swapped,
            "scale": tag.scale,
            "tag": tag.to_string(),
        }),
        None => json!({
            "code": canonical_code(t).to_string(),
            "family": Value::Null,
            "unitree": is_unitree_bruteforce(&p),
        }),
    }
}

fn invariants(t: &WeightedTree) -> Value {
    let sig = signature(t);
    let group = tree_group_report(t);
    json!({
        "code": canonical_code(t).to_string(),
        "passport": sig.passport.to_string(),
        "automorphisms": sig.automorphisms,
        "monodromy_order": sig.monodromy_order.to_string(),
        "primitive": sig.primitive,
        "self_dual": sig.self_dual,
        "group": group.tag.to_string(),
        "block_size": group.block_size,
        "jones_note": group.jones_note,
    })
}

fn parse_path(t: &WeightedTree, path: Option<&str>) -> Outcome<Vec<PathLocus>> {
    let Some(s) = path else {
        return Ok(all_loci(t));
    };
    const RULE: &str = "three edge indices `e1,e2,e3`";
    let edges: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::from(ParseError::new(x, RULE))))
        .collect::<Result<_, _>>()?;
    let edges: [usize; 3] = edges.try_into().map_err(|_| Error::from(ParseError::new(s, RULE)))?;
    Ok(vec![PathLocus::new(t, edges)?])
}

fn transform(t: &WeightedTree, op: Transform, factor: Option<u64>, path: Option<&str>) -> Outcome<Vec<Value>> {
    let code = |t: &WeightedTree| canonical_code(t).to_string();
    let single = |t: WeightedTree| vec![json!({ "code": code(&t) })];
    Ok(match op {
        Transform::ColorSwap => single(surgery::color_swap(t)),
        Transform::Reflect => single(surgery::reflect(t)),
        Transform::Scale => {
            let f = factor.ok_or_else(|| Failure::Parse("`scale` needs --factor".into()))?;
            single(surgery::scale_weights(t, f)?)
        }
        Transform::Reduce => {
            let (r, d) = surgery::reduce_weights(t);
            vec![json!({ "code": code(&r), "factor": d })]
        }
        Transform::Exchange => parse_path(t, path)?
            .iter()
            .map(|l| {
                let r = surgery::weight_exchange(t, l)?;
                Ok(json!({ "path": l.edges(), "code": code(&r), "isomorphic": dessinum::is_isomorphic(t, &r) }))
            })
            .collect::<Result<_, Error>>()?,
        Transform::Rip => parse_path(t, path)?
            .iter()
            .map(|l| {
                let (a, b) = surgery::sts_rip(t, l)?;
                Ok(json!({ "path": l.edges(), "pieces": [code(&a), code(&b)] }))
            })
            .collect::<Result<_, Error>>()?,
        Transform::StsMoves => {
            let mut rows = Vec::new();
            for l in parse_path(t, path)? {
                for r in surgery::sts_moves(t, &l)? {
                    rows.push(json!({
                        "path": l.edges(),
                        "code": code(&r),
                        "same_passport": r.passport() == t.passport(),
                        "self_dual": is_self_dual(&r),
                    }));
                }
            }
            rows
        }
    })
}
