//! `domrec` — dominating-set reconfiguration from the command line.
//!
//! Exit codes: 0 success; 1 usage or parse failure; 2 no walk exists at the
//! requested level (or a verification failed); 3 an internal construction
//! guarantee was violated.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use domrec::bipartite::bipartition_min_side;
use domrec::chordal::chordal_structure;
use domrec::domination::{
    domination_number, domination_profile, is_dominating, upper_domination_number,
};
use domrec::enumerate::enumerate_small_graphs;
use domrec::format::{encode_graph6, parse_edge_list, parse_graph6};
use domrec::reconfig::{
    build, checkpoint_line, component_diameters, connectivity, d0, parse_checkpoint,
    scan_conjecture, EdgeRule, ScanRecord,
};
use domrec::walks::{
    oracle_bfs, route_from_text, route_to_text, verify_jump_path, verify_walk, walk_bipartite,
    walk_chordal, walk_gamma_union, walk_near_full, Route, StrategyError, Walk,
};
use domrec::{Graph, VertexSet};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_NO_WALK: u8 = 2;
const EXIT_PROOF_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "domrec", version, about = "Dominating-set reconfiguration analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural parameters as key=value lines
    Info(InfoArgs),
    /// Materialize a reconfiguration graph, report components, export DOT
    Build(BuildArgs),
    /// Construct a verified walk between two dominating sets
    Walk(WalkArgs),
    /// Re-verify a serialized walk or jump path
    Verify(VerifyArgs),
    /// Scan graphs for disconnected levels at Γ+1
    Scan(ScanArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    AddRemove,
    Jump,
    Slide,
}

impl From<RuleArg> for EdgeRule {
    fn from(r: RuleArg) -> EdgeRule {
        match r {
            RuleArg::AddRemove => EdgeRule::TokenAddRemove,
            RuleArg::Jump => EdgeRule::TokenJump,
            RuleArg::Slide => EdgeRule::TokenSlide,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    GammaUnion,
    NearFull,
    Bipartite,
    Chordal,
    Oracle,
}

#[derive(Args)]
struct GraphInput {
    /// Input path, or '-' for stdin
    input: Option<PathBuf>,
    /// Treat INPUT as the graph text itself rather than a path
    #[arg(long)]
    inline: bool,
    /// Input format
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    format: InputFormat,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        let text = match (&self.input, self.inline) {
            (Some(path), true) => path
                .to_str()
                .ok_or_else(|| anyhow!("inline graph text is not valid UTF-8"))?
                .to_string(),
            (Some(path), false) if path.as_os_str() != "-" => {
                std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
            }
            _ => {
                let mut text = String::new();
                std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
                text
            }
        };
        match self.format {
            InputFormat::Edgelist => parse_edge_list(&text).map_err(|e| anyhow!("{e}")),
            InputFormat::Graph6 => {
                let line = text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty())
                    .ok_or_else(|| anyhow!("no graph6 line in input"))?;
                parse_graph6(line).map_err(|e| anyhow!("{e}"))
            }
        }
    }
}

#[derive(Args)]
struct InfoArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Also compute the connectivity threshold (builds every level)
    #[arg(long)]
    d0: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Cardinality bound of the level
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = RuleArg::AddRemove)]
    rule: RuleArg,
    /// Write DOT here; without it the DOT goes to stdout and the summary to
    /// stderr
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WalkArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Start set as an 0/1 string, vertex 0 leftmost
    #[arg(long)]
    from: String,
    /// Goal set as an 0/1 string
    #[arg(long)]
    to: String,
    /// Cardinality bound; defaults to the chosen strategy's own bound
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Jump and slide rules route through the oracle
    #[arg(long, value_enum, default_value_t = RuleArg::AddRemove)]
    rule: RuleArg,
    /// Write the serialized walk here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Serialized walk file, or '-' for stdin
    #[arg(long)]
    walk: PathBuf,
    /// Override the governing bound (default: largest cardinality seen)
    #[arg(long)]
    k: Option<usize>,
    /// Verify jump paths under the slide restriction
    #[arg(long, value_enum, default_value_t = RuleArg::Jump)]
    rule: RuleArg,
}

#[derive(Args)]
struct ScanArgs {
    /// Scan graphs from a graph6 file (one per line) instead of enumerating
    #[arg(long)]
    input: Option<PathBuf>,
    /// Largest order to enumerate (1..=8)
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Enumerate connected graphs only
    #[arg(long)]
    connected_only: bool,
    /// Restrict the scan to one graph family
    #[arg(long, value_enum, default_value_t = FilterArg::All)]
    filter: FilterArg,
    /// Progress file; an existing one resumes the scan
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    Bipartite,
    Chordal,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap uses 2 for usage errors; parse failures are exit 1 here
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Info(args) => cmd_info(args),
        Command::Build(args) => cmd_build(args),
        Command::Walk(args) => cmd_walk(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn cmd_info(args: InfoArgs) -> Result<ExitCode> {
    let g = args.graph.load()?;
    println!("n={}", g.n());
    println!("m={}", g.edge_count());
    println!("gamma={}", domination_number(&g));
    println!("Gamma={}", upper_domination_number(&g));
    println!("bipartite={}", bipartition_min_side(&g).is_some());
    println!("chordal={}", chordal_structure(&g).is_some());
    if g.n() <= 20 {
        println!("alpha={}", g.independence_number());
    }
    if args.d0 {
        let result = d0(&g);
        println!("d0={}", result.value);
        if result.edgeless {
            println!("d0_note=edgeless-convention");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_build(args: BuildArgs) -> Result<ExitCode> {
    let g = args.graph.load()?;
    let rg = build(&g, args.rule.into(), args.k).map_err(|e| anyhow!("{e}"))?;
    let report = connectivity(&rg);
    let dot = domrec::reconfig::to_dot(&rg);
    let diameters: Vec<String> =
        component_diameters(&rg, &report).iter().map(|d| d.to_string()).collect();
    let summary = format!(
        "nodes={}\nedges={}\ncomponents={}\nisolated={}\ndiameters={}",
        rg.node_count(),
        rg.edge_count(),
        report.component_count,
        report.isolated_nodes.len(),
        diameters.join(",")
    );
    match &args.out {
        Some(path) => {
            std::fs::write(path, dot).with_context(|| format!("writing {}", path.display()))?;
            println!("{summary}");
        }
        None => {
            eprintln!("{summary}");
            print!("{dot}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_set(s: &str, n: usize, name: &str) -> Result<VertexSet> {
    let (set, width) = VertexSet::parse_bitstring(s)
        .ok_or_else(|| anyhow!("--{name} must be an 0/1 string"))?;
    if width != n {
        bail!("--{name} has {width} characters, the graph has {n} vertices");
    }
    Ok(set)
}

fn cmd_walk(args: WalkArgs) -> Result<ExitCode> {
    let g = args.graph.load()?;
    let n = g.n();
    let from = parse_set(&args.from, n, "from")?;
    let to = parse_set(&args.to, n, "to")?;
    for (set, name) in [(from, "from"), (to, "to")] {
        if !is_dominating(&g, set) {
            bail!("--{name} is not a dominating set");
        }
    }

    let rule: EdgeRule = args.rule.into();
    if rule != EdgeRule::TokenAddRemove {
        return jump_walk(&g, from, to, args.k, rule, &args.out);
    }

    if let Some(k) = args.k {
        if from.card() > k || to.card() > k {
            bail!("endpoint cardinality exceeds --k {k}");
        }
    }

    let strategy = match args.strategy {
        StrategyArg::Auto => pick_strategy(&g),
        other => other,
    };
    let built = if from == to {
        Ok(Walk::trivial(args.k.unwrap_or(from.card()).max(from.card()), from))
    } else {
        run_strategy(&g, strategy, from, to)
    };

    let mut walk = match built {
        Ok(w) => w,
        Err(StrategyError::ProofViolation(msg)) => {
            eprintln!("proof violation: {msg}");
            return Ok(ExitCode::from(EXIT_PROOF_VIOLATION));
        }
        Err(e) => {
            eprintln!("notice: strategy unavailable ({e}), falling back to the oracle");
            let k = args.k.unwrap_or(n);
            match oracle_bfs(&g, from, to, k, EdgeRule::TokenAddRemove)
                .map_err(|e| anyhow!("{e}"))?
            {
                Some(Route::Walk(w)) => w,
                Some(Route::Jump(_)) => unreachable!("add-remove oracle yields walks"),
                None => {
                    eprintln!("disconnected: no walk at k={k}");
                    return Ok(ExitCode::from(EXIT_NO_WALK));
                }
            }
        }
    };

    // an explicit --k tighter than the strategy's walk forces the oracle
    if let Some(k) = args.k {
        if walk.max_card() > k {
            eprintln!("notice: strategy walk needs cardinality {}, retrying at k={k}", walk.max_card());
            match oracle_bfs(&g, from, to, k, EdgeRule::TokenAddRemove)
                .map_err(|e| anyhow!("{e}"))?
            {
                Some(Route::Walk(w)) => walk = w,
                Some(Route::Jump(_)) => unreachable!("add-remove oracle yields walks"),
                None => {
                    eprintln!("disconnected: no walk at k={k}");
                    return Ok(ExitCode::from(EXIT_NO_WALK));
                }
            }
        } else {
            walk.k = k;
        }
    }

    verify_walk(&g, &walk).map_err(|v| anyhow!("constructed walk failed verification: {v}"))?;
    emit(&route_to_text(&Route::Walk(walk), n), &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn pick_strategy(g: &Graph) -> StrategyArg {
    if chordal_structure(g).is_some() {
        StrategyArg::Chordal
    } else if bipartition_min_side(g).is_some() {
        StrategyArg::Bipartite
    } else if g.has_two_disjoint_edges() {
        let profile = domination_profile(g);
        if profile.big_gamma + profile.gamma < g.n() {
            StrategyArg::GammaUnion
        } else {
            StrategyArg::NearFull
        }
    } else {
        StrategyArg::Oracle
    }
}

/// Runs one strategy endpoint-to-endpoint; strategies that target a
/// canonical set are concatenated through it.
fn run_strategy(
    g: &Graph,
    strategy: StrategyArg,
    from: VertexSet,
    to: VertexSet,
) -> Result<Walk, StrategyError> {
    match strategy {
        StrategyArg::Chordal => {
            let there = walk_chordal(g, from)?;
            let back = walk_chordal(g, to)?;
            Ok(there.concat(back.reversed()))
        }
        StrategyArg::Bipartite => {
            let there = walk_bipartite(g, from)?;
            let back = walk_bipartite(g, to)?;
            Ok(there.concat(back.reversed()))
        }
        StrategyArg::GammaUnion => {
            let profile = domination_profile(g);
            let target = profile.gamma_sets[0];
            let k = (g.n() - 1).min(profile.big_gamma + profile.gamma).max(from.card()).max(to.card());
            let there = walk_gamma_union(g, from, target, k)?;
            let back = walk_gamma_union(g, to, target, k)?;
            Ok(there.concat(back.reversed()))
        }
        StrategyArg::NearFull => walk_near_full(g, from, to),
        StrategyArg::Oracle => {
            match oracle_bfs(g, from, to, g.n(), EdgeRule::TokenAddRemove)? {
                Some(Route::Walk(w)) => Ok(w),
                _ => Err(StrategyError::Precondition("endpoints are not connected at k=n".into())),
            }
        }
        StrategyArg::Auto => unreachable!("auto resolves before dispatch"),
    }
}

fn jump_walk(
    g: &Graph,
    from: VertexSet,
    to: VertexSet,
    k: Option<usize>,
    rule: EdgeRule,
    out: &Option<PathBuf>,
) -> Result<ExitCode> {
    if from.card() != to.card() {
        bail!("jump endpoints must share a cardinality");
    }
    let k = k.unwrap_or(from.card());
    match oracle_bfs(g, from, to, k, rule).map_err(|e| anyhow!("{e}"))? {
        Some(route) => {
            if let Route::Jump(p) = &route {
                verify_jump_path(g, p, rule == EdgeRule::TokenSlide)
                    .map_err(|v| anyhow!("constructed path failed verification: {v}"))?;
            }
            emit(&route_to_text(&route, g.n()), out)?;
            Ok(ExitCode::SUCCESS)
        }
        None => {
            eprintln!("disconnected: no {rule} path at k={k}");
            Ok(ExitCode::from(EXIT_NO_WALK))
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let g = args.graph.load()?;
    let text = if args.walk.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        text
    } else {
        std::fs::read_to_string(&args.walk)
            .with_context(|| format!("reading {}", args.walk.display()))?
    };
    let (route, width) = route_from_text(&text).map_err(|e| anyhow!("{e}"))?;
    if width != g.n() {
        bail!("walk sets have {width} characters, the graph has {} vertices", g.n());
    }
    let outcome = match route {
        Route::Walk(mut w) => {
            if let Some(k) = args.k {
                w.k = k;
            }
            verify_walk(&g, &w).map(|()| w.steps.len())
        }
        Route::Jump(mut p) => {
            if let Some(k) = args.k {
                p.k = k;
            }
            verify_jump_path(&g, &p, args.rule == RuleArg::Slide).map(|()| p.steps.len())
        }
    };
    match outcome {
        Ok(steps) => {
            println!("valid=true steps={steps}");
            Ok(ExitCode::SUCCESS)
        }
        Err(v) => {
            println!("valid=false index={} reason={}", v.index, v);
            Ok(ExitCode::from(EXIT_NO_WALK))
        }
    }
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode> {
    let mut graphs: Vec<Graph> = match &args.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let mut graphs = Vec::new();
            for (idx, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = parse_graph6(line)
                    .map_err(|e| anyhow!("{}:{}: {e}", path.display(), idx + 1))?;
                graphs.push(g);
            }
            graphs
        }
        None => {
            if args.max_n == 0 || args.max_n > 8 {
                bail!("--max-n must be between 1 and 8");
            }
            (1..=args.max_n)
                .flat_map(|n| enumerate_small_graphs(n, args.connected_only).expect("order checked"))
                .collect()
        }
    };
    graphs.retain(|g| g.edge_count() >= 1);
    graphs.retain(|g| match args.filter {
        FilterArg::All => true,
        FilterArg::Bipartite => bipartition_min_side(g).is_some(),
        FilterArg::Chordal => chordal_structure(g).is_some(),
    });

    // resume from a checkpoint when it matches the front of this run
    let mut done: Vec<ScanRecord> = Vec::new();
    if let Some(path) = &args.checkpoint {
        if let Ok(text) = std::fs::read_to_string(path) {
            match parse_checkpoint(&text) {
                Ok(records)
                    if records.len() <= graphs.len()
                        && records
                            .iter()
                            .zip(&graphs)
                            .all(|(r, g)| r.graph6 == encode_graph6(g)) =>
                {
                    done = records;
                }
                Ok(_) => {
                    eprintln!("warning: checkpoint does not match this scan, restarting");
                    std::fs::write(path, "").ok();
                }
                Err(e) => {
                    eprintln!("warning: {e}, restarting");
                    std::fs::write(path, "").ok();
                }
            }
        }
    }

    let mut counterexamples = Vec::new();
    let resumed = done.len();
    for batch in graphs[resumed..].chunks(64) {
        let outcome = scan_conjecture(batch, args.workers.max(1));
        if let Some(path) = &args.checkpoint {
            let lines: String =
                outcome.records.iter().map(|r| checkpoint_line(r) + "\n").collect();
            let mut text = std::fs::read_to_string(path).unwrap_or_default();
            text.push_str(&lines);
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        }
        done.extend(outcome.records);
        counterexamples.extend(outcome.counterexamples);
    }

    for c in &counterexamples {
        let sets: Vec<String> = c.component.iter().map(|s| format!("{s:?}")).collect();
        println!("COUNTEREXAMPLE {} Gamma={} component={}", c.graph6, c.big_gamma, sets.join(","));
    }
    println!("scanned={} counterexamples={}", done.len(), counterexamples.len());
    Ok(ExitCode::SUCCESS)
}
