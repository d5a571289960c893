use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use weighted_inertia::base::describe_base;
use weighted_inertia::closed_forms::Branch;
use weighted_inertia::graph::{Inertia, WeightedGraph};
use weighted_inertia::io::{parse_graph, serialize_graph, Format};
use weighted_inertia::oracle::inertia_oracle;
use weighted_inertia::reduction::reduce_to_core;
use weighted_inertia::solver::{solve, SolveResult};
use weighted_inertia::structure::two_core;
use weighted_inertia::testgen::{generate, table1_reproduction, GenClass, GenSpec, WeightRegime};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

/// Inertia of edge-weighted trees, unicyclic and bicyclic graphs.
#[derive(Debug, Parser)]
#[command(name = "winertia", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print (i+, i-, i0) and how it was obtained.
    Inertia(InertiaArgs),
    /// Print the graph class and the base descriptor, if any.
    Classify(InputArgs),
    /// Print the pendant-pair and path-contraction trace.
    Reduce(InputArgs),
    /// Compare the structural solver with the oracle on generated graphs.
    Verify(VerifyArgs),
    /// Generate a graph.
    Gen(GenArgs),
    /// Reproduce the infinity-graph table with sampled witnesses.
    Table1(Table1Args),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::EdgeList,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Structural,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Human,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Tree,
    Unicyclic,
    Bicyclic,
}

impl From<ClassArg> for GenClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Tree => GenClass::Tree,
            ClassArg::Unicyclic => GenClass::Unicyclic,
            ClassArg::Bicyclic => GenClass::Bicyclic,
        }
    }
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputArg,
}

#[derive(Debug, Args)]
struct InertiaArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "structural")]
    method: MethodArg,
    /// Also print the adjacency matrix.
    #[arg(long)]
    dump_matrix: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Largest vertex count; each instance draws its size up to this.
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Force this condition branch (e.g. `table1:3-2-3:eq`).
    #[arg(long)]
    branch: Option<String>,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputArg,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Force this condition branch (e.g. `theta33:eq`).
    #[arg(long)]
    branch: Option<String>,
    /// Use unit weights.
    #[arg(long, conflicts_with = "branch")]
    unit: bool,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct Table1Args {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "human")]
    output: OutputArg,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let text = e.to_string();
                let first = text.lines().next().unwrap_or("invalid arguments");
                eprintln!("error: {}", first.trim_start_matches("error: "));
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Inertia(args) => cmd_inertia(args, out),
        Command::Classify(args) => cmd_classify(args, out),
        Command::Reduce(args) => cmd_reduce(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Gen(args) => cmd_gen(args, out),
        Command::Table1(args) => cmd_table1(args, out),
    }
}

fn write_out(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn read_graph(args: &InputArgs) -> Result<WeightedGraph, Failure> {
    let mut bytes = Vec::new();
    let read = if args.input == "-" {
        io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(&args.input).map(|b| bytes = b)
    };
    read.map_err(|e| Failure::usage(format!("cannot read `{}`: {e}", args.input)))?;
    parse_graph(&bytes, args.format.into()).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: e.to_string(),
    })
}

fn solve_or_fail(g: &WeightedGraph) -> Result<SolveResult, Failure> {
    solve(g).map_err(|e| Failure::usage(e.to_string()))
}

#[derive(Serialize)]
struct InertiaReport {
    structural: Option<Inertia>,
    oracle: Option<Inertia>,
    methods: Vec<String>,
    bases: Vec<String>,
    #[serde(rename = "match")]
    matched: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<String>>>,
}

fn cmd_inertia(args: InertiaArgs, out: &mut impl Write) -> Outcome {
    let g = read_graph(&args.input)?;
    let structural = match args.method {
        MethodArg::Oracle => None,
        _ => Some(solve_or_fail(&g)?),
    };
    let oracle = match args.method {
        MethodArg::Structural => None,
        _ => Some(inertia_oracle(&g)),
    };
    let matched = match (&structural, &oracle) {
        (Some(s), Some(o)) => Some(s.inertia == *o),
        _ => None,
    };
    let methods: Vec<String> = structural
        .iter()
        .flat_map(|s| s.methods().into_iter().map(|m| m.to_string()))
        .collect();
    let bases: Vec<String> = structural
        .iter()
        .flat_map(|s| s.components.iter().filter_map(|c| c.base.clone()))
        .collect();
    let matrix = g.adjacency_matrix();
    match args.input.output {
        OutputArg::Json => {
            let report = InertiaReport {
                structural: structural.as_ref().map(|s| s.inertia),
                oracle,
                methods,
                bases,
                matched,
                matrix: args.dump_matrix.then(|| {
                    matrix
                        .rows()
                        .map(|r| {
                            r.iter()
                                .map(weighted_inertia::rational::format_rational)
                                .collect()
                        })
                        .collect()
                }),
            };
            let text = serde_json::to_string(&report).expect("report serializes");
            write_out(out, &format!("{text}\n"))?;
        }
        OutputArg::Human => {
            let mut text = String::new();
            if args.dump_matrix {
                text.push_str(&format!("{matrix}"));
                if !text.ends_with('\n') {
                    text.push('\n');
                }
            }
            if let Some(s) = &structural {
                text.push_str(&format!("{}\n", s.inertia));
                text.push_str(&format!("methods: {}\n", methods.join(" ")));
                if !bases.is_empty() {
                    text.push_str(&format!("bases: {}\n", bases.join(" ")));
                }
            }
            if let Some(o) = &oracle {
                text.push_str(&format!("{o}\n"));
            }
            if let Some(m) = matched {
                text.push_str(if m { "match\n" } else { "mismatch\n" });
            }
            write_out(out, &text)?;
        }
    }
    Ok(if matched == Some(false) {
        EXIT_MISMATCH
    } else {
        0
    })
}

#[derive(Serialize)]
struct ClassifyReport {
    kind: String,
    components: Vec<String>,
    base: Option<String>,
}

fn cmd_classify(args: InputArgs, out: &mut impl Write) -> Outcome {
    let g = read_graph(&args)?;
    let class = g.classify();
    let mut bases = Vec::new();
    for part in g.connected_components() {
        if part.size() >= part.order() && part.size() <= part.order() + 1 {
            if let Ok(d) = two_core(&part).and_then(|core| describe_base(&core)) {
                bases.push(d.to_string());
            }
        }
    }
    let base = (!bases.is_empty()).then(|| bases.join(" "));
    match args.output {
        OutputArg::Json => {
            let report = ClassifyReport {
                kind: class.kind.to_string(),
                components: class
                    .components
                    .iter()
                    .map(|c| {
                        serde_json::to_value(c)
                            .expect("enum")
                            .as_str()
                            .unwrap_or_default()
                            .to_string()
                    })
                    .collect(),
                base,
            };
            write_out(
                out,
                &format!(
                    "{}\n",
                    serde_json::to_string(&report).expect("report serializes")
                ),
            )?;
        }
        OutputArg::Human => match base {
            Some(b) => write_out(out, &format!("{} {b}\n", class.kind))?,
            None => write_out(out, &format!("{}\n", class.kind))?,
        },
    }
    Ok(0)
}

#[derive(Serialize)]
struct ReduceReport {
    steps: Vec<String>,
    offset: (usize, usize),
    residual_vertices: usize,
    residual_edges: usize,
}

fn cmd_reduce(args: InputArgs, out: &mut impl Write) -> Outcome {
    let g = read_graph(&args)?;
    let (rest, trace) = reduce_to_core(&g);
    let offset = trace.accumulated();
    match args.output {
        OutputArg::Json => {
            let report = ReduceReport {
                steps: trace.steps.iter().map(|s| s.to_string()).collect(),
                offset,
                residual_vertices: rest.order(),
                residual_edges: rest.size(),
            };
            write_out(
                out,
                &format!(
                    "{}\n",
                    serde_json::to_string(&report).expect("report serializes")
                ),
            )?;
        }
        OutputArg::Human => {
            let mut text = trace.to_string();
            text.push_str(&format!("offset=(+{},+{})\n", offset.0, offset.1));
            text.push_str(&format!("residual n={} m={}\n", rest.order(), rest.size()));
            write_out(out, &text)?;
        }
    }
    Ok(0)
}

fn parse_branch(text: &Option<String>) -> Result<Option<Branch>, Failure> {
    text.as_deref()
        .map(|b| b.parse::<Branch>().map_err(Failure::usage))
        .transpose()
}

#[derive(Serialize)]
struct VerifySummary {
    total: usize,
    matched: usize,
    mismatches: Vec<u64>,
}

fn cmd_verify(args: VerifyArgs, out: &mut impl Write) -> Outcome {
    let class: GenClass = args.class.into();
    let branch = parse_branch(&args.branch)?;
    let min = class.min_order();
    if args.n < min {
        return Err(Failure::usage(format!(
            "--n must be at least {min} for this class"
        )));
    }
    let regime = branch.map_or(
        WeightRegime::RandomRational,
        WeightRegime::ForceEqualityBranch,
    );
    let mut matched = 0;
    let mut mismatches = Vec::new();
    for i in 0..args.count {
        let seed = args.seed.wrapping_add(i as u64);
        let n = min + (seed as usize).wrapping_mul(2_654_435_761) % (args.n - min + 1);
        let n = if branch.is_some() { args.n } else { n };
        let g = generate(GenSpec {
            class,
            n,
            seed,
            weight_regime: regime,
        })
        .map_err(|e| Failure::usage(e.to_string()))?;
        let structural = solve_or_fail(&g)?;
        if structural.inertia == inertia_oracle(&g) {
            matched += 1;
        } else {
            mismatches.push(seed);
        }
    }
    match args.output {
        OutputArg::Json => {
            let summary = VerifySummary {
                total: args.count,
                matched,
                mismatches: mismatches.clone(),
            };
            write_out(
                out,
                &format!(
                    "{}\n",
                    serde_json::to_string(&summary).expect("summary serializes")
                ),
            )?;
        }
        OutputArg::Human => {
            let mut text = format!("{matched}/{} match\n", args.count);
            for seed in &mismatches {
                text.push_str(&format!("mismatch seed={seed}\n"));
            }
            write_out(out, &text)?;
        }
    }
    Ok(if mismatches.is_empty() {
        0
    } else {
        EXIT_MISMATCH
    })
}

fn cmd_gen(args: GenArgs, out: &mut impl Write) -> Outcome {
    let branch = parse_branch(&args.branch)?;
    let regime = match (branch, args.unit) {
        (Some(b), _) => WeightRegime::ForceEqualityBranch(b),
        (None, true) => WeightRegime::UnitWeights,
        (None, false) => WeightRegime::RandomRational,
    };
    let spec = GenSpec {
        class: args.class.into(),
        n: args.n,
        seed: args.seed,
        weight_regime: regime,
    };
    let g = generate(spec).map_err(|e| Failure::usage(e.to_string()))?;
    let mut text = serialize_graph(&g, args.format.into());
    if !text.ends_with('\n') {
        text.push('\n');
    }
    write_out(out, &text)?;
    Ok(0)
}

fn cmd_table1(args: Table1Args, out: &mut impl Write) -> Outcome {
    let rows = table1_reproduction(args.seed);
    let all_match = rows.iter().all(|r| r.matched);
    let mut text = String::new();
    match args.output {
        OutputArg::Json => {
            for row in &rows {
                text.push_str(&serde_json::to_string(row).expect("row serializes"));
                text.push('\n');
            }
        }
        OutputArg::Human => {
            for row in &rows {
                let cond = match (&row.condition, &row.branch) {
                    (Some(c), Some(b)) => format!("{c} {b} 0"),
                    _ => "-".to_string(),
                };
                text.push_str(&format!(
                    "{:<16} {:<32} table=({},{}) closed=({},{}) oracle=({},{}) {}\n",
                    row.row,
                    cond,
                    row.table.0,
                    row.table.1,
                    row.closed_form.0,
                    row.closed_form.1,
                    row.oracle.0,
                    row.oracle.1,
                    if row.matched { "match" } else { "MISMATCH" }
                ));
            }
            let ok = rows.iter().filter(|r| r.matched).count();
            text.push_str(&format!("{ok}/{} match\n", rows.len()));
        }
    }
    write_out(out, &text)?;
    Ok(if all_match { 0 } else { EXIT_MISMATCH })
}
