use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use ramsey_core::biclique::{embed_vs_biclique, ev_vs_biclique, strong_degeneracy_order};
use ramsey_core::graph::io::{parse_any, to_graph6};
use ramsey_core::k4star::{k4star_vs_bipartite, k4star_vs_clique};
use ramsey_core::lemmas::BipartitePattern;
use ramsey_core::oracle::ramsey::{ramsey_exact, RamseyValue};
use ramsey_core::oracle::search::subgraph_find;
use ramsey_core::oracle::stress::{stress, Driver};
use ramsey_core::subdivision::{classify_subdivision, subdivision_vs_graph};
use ramsey_core::treewidth::{embed_via_treewidth, smooth_tree_decomposition, sparse_pattern_vs_clique};
use ramsey_core::{patterns, verify_witness, Config, DichotomyResult, Graph, WitnessContext};

/// Witness-producing Ramsey embedding tools.
#[derive(Parser, Debug)]
#[command(name = "ramsey", version)]
struct Cli {
    #[command(flatten)]
    consts: Consts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Consts {
    /// Host-size multiplier.
    #[arg(long, global = true, default_value_t = 64)]
    c: u64,
    /// Triangle threshold of the elimination process.
    #[arg(long, global = true, default_value_t = 3)]
    c0: usize,
    #[arg(long, global = true, default_value_t = 32)]
    c1: u64,
    #[arg(long, global = true, env = "RAMSEY_SEED", default_value_t = 0)]
    seed: u64,
    /// Node budget of exact searches inside drivers.
    #[arg(long, global = true, default_value_t = 200_000)]
    budget: u64,
    /// Largest accepted host.
    #[arg(long, global = true, default_value_t = 4096)]
    vertex_limit: usize,
}

impl Consts {
    fn config(&self) -> Result<Config> {
        let cfg = Config {
            c: self.c,
            c0: self.c0,
            c1: self.c1,
            seed: self.seed,
            search_budget: self.budget,
            vertex_limit: self.vertex_limit,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Exact search for a pattern in a graph.
    Detect { pattern: String, graph: String },
    /// Run a dichotomy driver and print its verified witness.
    Dichotomy {
        #[command(subcommand)]
        which: Dichotomy,
    },
    /// Exact small Ramsey numbers.
    Ramsey {
        #[command(subcommand)]
        which: RamseyCmd,
    },
    /// Randomized soundness campaign over one driver.
    Stress {
        /// k4star, subdivision, tw, biclique, ev-biclique or sparse.
        driver: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// CSV destination (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON summary destination.
        #[arg(long)]
        summary: Option<PathBuf>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Identify a subdivision of K4 and its base.
    ClassifySubdivision { graph: String },
    /// Exact treewidth, optionally with a smooth decomposition.
    Treewidth {
        graph: String,
        #[arg(long)]
        bags: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Dichotomy {
    /// K4* against a bipartite target (--target) or an independent set (-n).
    K4star {
        graph: String,
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        target: Option<String>,
        #[arg(short, long)]
        n: Option<usize>,
    },
    /// A subdivision of K4 against an arbitrary target.
    Subdivision {
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        target: String,
    },
    /// Bounded-treewidth pattern against an independent set.
    Tw {
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(short, long)]
        n: usize,
    },
    /// Connected pattern with e - v <= 4 against an independent set.
    Sparse {
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(short, long)]
        n: usize,
    },
    /// Pattern against an empty n × n pair; with --k runs the e - v
    /// recursion, otherwise the h² nʳ embedding.
    Biclique {
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(short, long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Certificate level for the direct embedding (default: max degree).
        #[arg(long, conflicts_with = "k")]
        r: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum RamseyCmd {
    Exact {
        #[arg(short = 'H', long = "pattern")]
        h: String,
        #[arg(short = 'F', long = "target")]
        f: String,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
}

/// A graph argument: an existing file (edge list or graph6), otherwise a
/// pattern shorthand or graph6 string.
fn load_graph(arg: &str, cfg: &Config) -> Result<Graph> {
    let g = if Path::new(arg).is_file() {
        let text = fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        parse_any(&text).with_context(|| format!("parsing {arg}"))?
    } else {
        patterns::resolve(arg).with_context(|| format!("{arg:?} is neither a file nor a pattern"))?
    };
    if g.n() > cfg.vertex_limit {
        bail!("{arg} has {} vertices, the limit is {}", g.n(), cfg.vertex_limit);
    }
    Ok(g)
}

fn report(out: &mut impl Write, res: &DichotomyResult, ctx: &WitnessContext<'_>) -> Result<ExitCode> {
    write!(out, "{res}")?;
    if res.is_failure() {
        return Ok(ExitCode::from(2));
    }
    let ok = verify_witness(res, ctx);
    writeln!(out, "verified: {ok}")?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn dichotomy(which: &Dichotomy, cfg: &Config, out: &mut impl Write) -> Result<ExitCode> {
    match which {
        Dichotomy::K4star { graph, target, n } => {
            let g = load_graph(graph, cfg)?;
            let k = patterns::k4_star();
            match (target, n) {
                (Some(t), _) => {
                    let f = BipartitePattern::from_graph(load_graph(t, cfg)?)?;
                    let res = k4star_vs_bipartite(&g, &f, cfg)?;
                    report(out, &res, &WitnessContext::new(&g).pattern(&k).target(f.graph()))
                }
                (None, Some(n)) => {
                    let res = k4star_vs_clique(&g, *n, cfg)?;
                    report(out, &res, &WitnessContext::new(&g).pattern(&k).size(*n))
                }
                (None, None) => bail!("give --target or -n"),
            }
        }
        Dichotomy::Subdivision { graph, pattern, target } => {
            let g = load_graph(graph, cfg)?;
            let h = load_graph(pattern, cfg)?;
            let f = load_graph(target, cfg)?;
            let res = subdivision_vs_graph(&g, &h, &f, cfg)?;
            report(out, &res, &WitnessContext::new(&g).pattern(&h).target(&f))
        }
        Dichotomy::Tw { graph, pattern, n } => {
            let g = load_graph(graph, cfg)?;
            let h = load_graph(pattern, cfg)?;
            let res = embed_via_treewidth(&h, &g, *n, cfg)?;
            report(out, &res, &WitnessContext::new(&g).pattern(&h).size(*n))
        }
        Dichotomy::Sparse { graph, pattern, n } => {
            let g = load_graph(graph, cfg)?;
            let h = load_graph(pattern, cfg)?;
            let res = sparse_pattern_vs_clique(&h, &g, *n, cfg)?;
            report(out, &res, &WitnessContext::new(&g).pattern(&h).size(*n))
        }
        Dichotomy::Biclique {
            graph,
            pattern,
            n,
            k,
            r,
        } => {
            let g = load_graph(graph, cfg)?;
            let h = load_graph(pattern, cfg)?;
            let res = match k {
                Some(k) => ev_vs_biclique(&h, &g, *n, *k, cfg)?,
                None => {
                    let level = r.unwrap_or(h.max_degree()).max(1);
                    let cert = strong_degeneracy_order(&h, level)
                        .with_context(|| format!("pattern is not {level}-strongly-degenerate"))?;
                    embed_vs_biclique(&h, &cert, &g, *n)?
                }
            };
            report(out, &res, &WitnessContext::new(&g).pattern(&h).size(*n))
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    let cfg = cli.consts.config()?;
    match &cli.cmd {
        Cmd::Detect { pattern, graph } => {
            let h = load_graph(pattern, &cfg)?;
            let g = load_graph(graph, &cfg)?;
            match subgraph_find(&g, &h) {
                Some(e) => {
                    let res = DichotomyResult::PatternCopy(e);
                    report(out, &res, &WitnessContext::new(&g).pattern(&h))
                }
                None => {
                    writeln!(out, "tag: ABSENT")?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Cmd::Dichotomy { which } => dichotomy(which, &cfg, out),
        Cmd::Ramsey {
            which: RamseyCmd::Exact { h, f, nmax },
        } => {
            let h = load_graph(h, &cfg)?;
            let f = load_graph(f, &cfg)?;
            match ramsey_exact(&h, &f, *nmax)? {
                RamseyValue::Exact { value, witness } => {
                    writeln!(out, "{value}")?;
                    writeln!(out, "witness: {}", to_graph6(&witness))?;
                }
                RamseyValue::Above { nmax, witness } => {
                    writeln!(out, "> {nmax}")?;
                    writeln!(out, "witness: {}", to_graph6(&witness))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Stress {
            driver,
            trials,
            out: csv_path,
            summary,
            jobs,
        } => {
            let d = Driver::parse(driver)?;
            let rep = stress(d, *trials, cfg.seed, *jobs, &cfg)?;
            match csv_path {
                Some(p) => rep.write_csv(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?)?,
                None => rep.write_csv(&mut *out)?,
            }
            if let Some(p) = summary {
                fs::write(p, rep.to_json()).with_context(|| format!("writing {}", p.display()))?;
            }
            eprintln!(
                "{}: {} trials, {} witness failures, {} errors, {} ms",
                rep.driver, rep.trials, rep.witness_failures, rep.errors, rep.wall_ms
            );
            Ok(if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Cmd::ClassifySubdivision { graph } => {
            let h = load_graph(graph, &cfg)?;
            let p = classify_subdivision(&h)?;
            writeln!(out, "base: {}", p.base)?;
            let lengths: Vec<String> = p.lengths().iter().map(|l| l.to_string()).collect();
            writeln!(out, "lengths: {}", lengths.join(" "))?;
            let branch: Vec<String> = p.branch.iter().map(|v| v.to_string()).collect();
            writeln!(out, "branch: {}", branch.join(" "))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Treewidth { graph, bags } => {
            let h = load_graph(graph, &cfg)?;
            let td = smooth_tree_decomposition(&h)?;
            writeln!(out, "treewidth: {}", td.width())?;
            if *bags {
                for (i, b) in td.bags.iter().enumerate() {
                    let vs: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "bag {i}: {}", vs.join(" "))?;
                }
                for (a, b) in &td.edges {
                    writeln!(out, "tree {a} {b}")?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
