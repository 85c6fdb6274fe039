use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use trisquare::enumerate::{augment_level, enumerate_levels, prune_partial, seed_level};
use trisquare::extremal::{counting_inequality, max_feasible_n};
use trisquare::local::{
    check_p2, check_p2bar, check_p3, check_p3bar, has_c4, has_triangle, srg_params,
};
use trisquare::oracle;
use trisquare::{
    canonical_form, generate, parse_graph6, search_p2p3, to_graph6, Certificate, GeneratorSpec,
    Graph, SearchConfig, VertexPair,
};

const JOBS_ENV: &str = "TRISQUARE_JOBS";

#[derive(Parser)]
#[command(
    name = "trisquare",
    version,
    about = "Unique-triangle / unique-quadrilateral graph checker and exhaustive search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check graphs given as a graph6 literal, a file of graph6 lines, or `-`.
    Check {
        input: String,
        #[arg(long, value_enum, default_value_t = CheckProperty::P2p3)]
        property: CheckProperty,
    },
    /// List one graph6 line per isomorphism class on `n` vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Disable prefix pruning for the p2p3 filter.
        #[arg(long)]
        no_prune: bool,
        #[command(flatten)]
        jobs: Jobs,
        /// Write graph6 lines here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// With `--filter p2p3`, also write a JSON array of certificates.
        #[arg(long)]
        certificates: Option<PathBuf>,
    },
    /// Counting-inequality report for one `n`, or the largest feasible `n`.
    Bounds {
        #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
        n: Option<u64>,
        #[arg(long)]
        max_n: bool,
    },
    /// Reproduce a theorem or lemma by computation.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Print a named graph as graph6.
    Gen {
        /// complete, cycle, empty, bowtie, rook or paley
        name: String,
        params: Vec<usize>,
    },
    /// Convert between graph6 and adjacency-list JSON.
    Convert {
        input: String,
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
    },
    #[command(hide = true, subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Naive per-pair triangle and 4-cycle counts.
    Counts { graph6: String },
    /// Brute-force isomorphism test.
    Iso { a: String, b: String },
    /// Isomorphism classes among all labelled graphs on `n` vertices.
    Classes { n: usize },
}

#[derive(Args, Clone, Copy)]
struct Jobs {
    /// Worker threads.
    #[arg(long, env = JOBS_ENV, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckProperty {
    P2p3,
    Conway,
    Srg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    P2p3,
    TriangleFree,
    C4Free,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Lemma1,
    Lemma2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    AdjlistJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AdjList {
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

impl AdjList {
    fn from_graph(g: &Graph) -> Self {
        AdjList {
            n: g.order(),
            adjacency: (0..g.order())
                .map(|u| (0..g.order()).filter(|&v| g.has_edge(u, v)).collect())
                .collect(),
        }
    }

    fn into_graph(self) -> Result<Graph> {
        if self.adjacency.len() != self.n {
            bail!(
                "adjacency has {} rows for n = {}",
                self.adjacency.len(),
                self.n
            );
        }
        let edges: Vec<(usize, usize)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u, v)))
            .collect();
        let g = Graph::build(self.n, edges.iter().copied())?;
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| !self.adjacency[v].contains(&u))
        {
            bail!("adjacency is not symmetric: {v} is listed for {u} but not {u} for {v}");
        }
        Ok(g)
    }
}

/// Non-empty lines from a literal, a file path, or standard input.
fn input_records(input: &str) -> Result<Vec<String>> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(input).is_file() {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    } else {
        input.to_string()
    };
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

fn read_graph6_inputs(input: &str) -> Result<Vec<(String, Graph)>> {
    let records = input_records(input)?;
    if records.is_empty() {
        bail!("no graphs in input");
    }
    records
        .into_iter()
        .map(|r| {
            let g = parse_graph6(&r).with_context(|| format!("parsing graph6 `{r}`"))?;
            Ok((r, g))
        })
        .collect()
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_check(input: &str, property: CheckProperty) -> Result<ExitCode> {
    let graphs = read_graph6_inputs(input)?;
    let mut out = io::stdout().lock();
    let mut all_hold = true;
    for (text, g) in graphs {
        let value = match property {
            CheckProperty::P2p3 | CheckProperty::Conway => {
                let reports = match property {
                    CheckProperty::P2p3 => [check_p2(&g), check_p3(&g)],
                    _ => [check_p2bar(&g), check_p3bar(&g)],
                };
                let holds = reports.iter().all(|r| r.holds);
                all_hold &= holds;
                let name = match property {
                    CheckProperty::P2p3 => "p2p3",
                    _ => "conway",
                };
                json!({ "input": text, "n": g.order(), "property": name, "holds": holds, "reports": reports })
            }
            CheckProperty::Srg => {
                let outcome = srg_params(&g);
                let holds = outcome.params().is_some();
                all_hold &= holds;
                json!({ "input": text, "n": g.order(), "property": "srg", "holds": holds, "srg": outcome })
            }
        };
        emit(&mut out, &value)?;
    }
    Ok(status(all_hold))
}

fn matches_filter(g: &Graph, filter: Filter) -> bool {
    match filter {
        Filter::All => true,
        Filter::P2p3 => check_p2(g).holds && check_p3(g).holds,
        Filter::TriangleFree => !has_triangle(g),
        Filter::C4Free => !has_c4(g),
    }
}

fn cmd_enumerate(
    n: usize,
    filter: Filter,
    prune: bool,
    jobs: usize,
    output: Option<&Path>,
    certificates: Option<&Path>,
) -> Result<ExitCode> {
    if n > trisquare::canon::MAX_CANON_VERTICES {
        bail!(
            "--n must be at most {}",
            trisquare::canon::MAX_CANON_VERTICES
        );
    }
    if jobs == 0 {
        bail!("--jobs must be positive");
    }
    if certificates.is_some() && filter != Filter::P2p3 {
        bail!("--certificates requires --filter p2p3");
    }
    let prune = prune && filter == Filter::P2p3;
    let mut level = seed_level();
    for k in 1..=n {
        if prune {
            level.retain(|c| !prune_partial(c.graph(), k - 1));
        }
        level = augment_level(&level, jobs)?;
        eprintln!("n={k}: {} classes", level.len());
    }
    let kept: Vec<_> = level
        .into_iter()
        .filter(|c| matches_filter(c.graph(), filter))
        .collect();

    let mut text = String::new();
    for c in &kept {
        text.push_str(c.canon_g6());
        text.push('\n');
    }
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    if let Some(path) = certificates {
        let certs: Vec<Certificate> = kept.iter().filter_map(Certificate::issue).collect();
        fs::write(path, serde_json::to_string_pretty(&certs)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(n: Option<u64>, max_n: bool) -> Result<ExitCode> {
    let mut out = io::stdout().lock();
    if max_n {
        emit(&mut out, &json!({ "max_feasible_n": max_feasible_n() }))?;
        return Ok(ExitCode::SUCCESS);
    }
    let n = n.context("one of --n or --max-n is required")?;
    if n > 1 << 30 {
        bail!("--n must be at most 2^30");
    }
    let report = counting_inequality(n);
    emit(&mut out, &report)?;
    Ok(status(report.inequality_holds))
}

fn canonical_g6(g: &Graph) -> String {
    canonical_form(g)
        .expect("small graph")
        .canon_g6()
        .to_string()
}

/// The two graphs the search is expected to find.
fn expected_hits() -> Vec<String> {
    [GeneratorSpec::Complete(3), GeneratorSpec::Bowtie]
        .iter()
        .map(|s| canonical_g6(&generate(s).expect("valid generator")))
        .collect()
}

fn search(n_max: usize, prune: bool, jobs: usize) -> Result<Vec<Certificate>> {
    Ok(search_p2p3(&SearchConfig {
        n_max,
        prune,
        workers: jobs,
        nontrivial_only: true,
    })?)
}

fn cmd_verify(theorem: Theorem, jobs: usize) -> Result<ExitCode> {
    const N_MAX: usize = 8;
    let summary = match theorem {
        Theorem::One => {
            let certs = search(N_MAX, true, jobs)?;
            let hits: Vec<String> = certs.iter().map(|c| c.canon_g6.clone()).collect();
            let verified = hits == expected_hits();
            json!({
                "theorem": "1",
                "n_max": N_MAX,
                "hits": hits,
                "expected": expected_hits(),
                "certificates": certs,
                "verified": verified,
            })
        }
        Theorem::Two => {
            let max_n = max_feasible_n();
            let n9 = counting_inequality(9).inequality_holds;
            json!({
                "theorem": "2",
                "max_n": max_n,
                "inequality_holds_at_9": n9,
                "verified": max_n == 8 && !n9,
            })
        }
        Theorem::Lemma1 | Theorem::Lemma2 => {
            let (name, counterexample): (&str, fn(&Graph) -> bool) = match theorem {
                Theorem::Lemma1 => ("lemma1", |g| has_triangle(&g.complement())),
                _ => ("lemma2", has_c4),
            };
            let levels = enumerate_levels(N_MAX, jobs)?;
            let mut graphs_checked = 0usize;
            let mut hits = Vec::new();
            let mut counterexamples = Vec::new();
            for class in levels.iter().skip(2).flatten() {
                graphs_checked += 1;
                let g = class.graph();
                if check_p2(g).holds && check_p3(g).holds {
                    hits.push(class.canon_g6().to_string());
                    if counterexample(g) {
                        counterexamples.push(class.canon_g6().to_string());
                    }
                }
            }
            let pruned: Vec<String> = search(N_MAX, true, jobs)?
                .into_iter()
                .map(|c| c.canon_g6)
                .collect();
            let unpruned: Vec<String> = search(N_MAX, false, jobs)?
                .into_iter()
                .map(|c| c.canon_g6)
                .collect();
            let agree = pruned == unpruned && unpruned == hits;
            eprintln!("{name}: checked {graphs_checked} classes on 2..={N_MAX} vertices");
            json!({
                "theorem": name,
                "n_max": N_MAX,
                "graphs_checked": graphs_checked,
                "hits": hits,
                "counterexamples": counterexamples,
                "pruned_matches_unpruned": agree,
                "verified": counterexamples.is_empty() && agree,
            })
        }
    };
    let verified = summary["verified"].as_bool().unwrap_or(false);
    emit(&mut io::stdout().lock(), &summary)?;
    Ok(status(verified))
}

fn cmd_gen(name: &str, params: &[usize]) -> Result<ExitCode> {
    let spec = GeneratorSpec::from_parts(name, params)?;
    let g = generate(&spec)?;
    println!("{}", to_graph6(&g)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_convert(input: &str, from: Format, to: Format) -> Result<ExitCode> {
    let graphs: Vec<Graph> = match from {
        Format::G6 => read_graph6_inputs(input)?
            .into_iter()
            .map(|(_, g)| g)
            .collect(),
        Format::AdjlistJson => input_records(input)?
            .iter()
            .map(|r| {
                let adj: AdjList =
                    serde_json::from_str(r).with_context(|| format!("parsing `{r}`"))?;
                adj.into_graph()
            })
            .collect::<Result<_>>()?,
    };
    if graphs.is_empty() {
        bail!("no graphs in input");
    }
    let mut out = io::stdout().lock();
    for g in &graphs {
        match to {
            Format::G6 => writeln!(out, "{}", to_graph6(g)?)?,
            Format::AdjlistJson => emit(&mut out, &AdjList::from_graph(g))?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(cmd: OracleCommand) -> Result<ExitCode> {
    let mut out = io::stdout().lock();
    match cmd {
        OracleCommand::Counts { graph6 } => {
            let g = parse_graph6(&graph6)?;
            if g.order() > oracle::MAX_COUNT_ORDER {
                bail!(
                    "oracle counts need at most {} vertices",
                    oracle::MAX_COUNT_ORDER
                );
            }
            let rows: Vec<_> = g
                .pairs()
                .map(|p: VertexPair| {
                    json!({
                        "pair": p,
                        "edge": g.has_edge(p.u(), p.v()),
                        "triangles": oracle::naive_triangles_through(&g, p),
                        "c4": oracle::naive_c4_through(&g, p),
                    })
                })
                .collect();
            emit(&mut out, &rows)?;
        }
        OracleCommand::Iso { a, b } => {
            let (a, b) = (parse_graph6(&a)?, parse_graph6(&b)?);
            if a.order().max(b.order()) > oracle::MAX_PERM_ORDER {
                bail!(
                    "oracle isomorphism needs at most {} vertices",
                    oracle::MAX_PERM_ORDER
                );
            }
            let iso = oracle::naive_isomorphic(&a, &b);
            emit(&mut out, &json!({ "isomorphic": iso }))?;
            return Ok(status(iso));
        }
        OracleCommand::Classes { n } => {
            let count = oracle::labeled_class_count(n)
                .with_context(|| format!("n must be at most {}", oracle::MAX_LABELED_ORDER))?;
            emit(&mut out, &json!({ "n": n, "classes": count }))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check { input, property } => cmd_check(&input, property),
        Command::Enumerate {
            n,
            filter,
            no_prune,
            jobs,
            output,
            certificates,
        } => cmd_enumerate(
            n,
            filter,
            !no_prune,
            jobs.jobs,
            output.as_deref(),
            certificates.as_deref(),
        ),
        Command::Bounds { n, max_n } => cmd_bounds(n, max_n),
        Command::Verify { theorem, jobs } => cmd_verify(theorem, jobs.jobs),
        Command::Gen { name, params } => cmd_gen(&name, &params),
        Command::Convert { input, from, to } => cmd_convert(&input, from, to),
        Command::Oracle(cmd) => cmd_oracle(cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
