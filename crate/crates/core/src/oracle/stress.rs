//! Randomized soundness campaigns over the dichotomy drivers.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::OnceLock;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::biclique::{embed_vs_biclique, ev_vs_biclique, excess_bound, strong_degeneracy_order};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::k4star::k4star_vs_bipartite;
use crate::oracle::canon::connected_graphs;
use crate::oracle::instances::{
    adversarial_host, gnp_with, planted_independent_set, random_bipartite_pattern, random_multipartite, random_target,
    rng,
};
use crate::patterns;
use crate::subdivision::{build_subdivision, subdivision_vs_graph};
use crate::treewidth::{embed_via_treewidth, sparse_pattern_vs_clique};
use crate::witness::{verify_witness, DichotomyResult, WitnessContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Driver {
    /// `K4*` versus bipartite targets.
    K4Star,
    /// Subdivisions of `K4` versus arbitrary targets.
    Subdivision,
    /// Bounded-treewidth patterns versus independent sets.
    Treewidth,
    /// The `h² nʳ` lemma at its threshold host size.
    BicliqueLemma,
    /// Sparse connected patterns versus empty `n × n` pairs.
    Biclique,
    /// Sparse connected patterns versus independent sets.
    Sparse,
}

impl Driver {
    pub const ALL: [Driver; 6] = [
        Driver::K4Star,
        Driver::Subdivision,
        Driver::Treewidth,
        Driver::BicliqueLemma,
        Driver::Biclique,
        Driver::Sparse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Driver::K4Star => "k4star",
            Driver::Subdivision => "subdivision",
            Driver::Treewidth => "tw",
            Driver::BicliqueLemma => "biclique",
            Driver::Biclique => "ev-biclique",
            Driver::Sparse => "sparse",
        }
    }

    pub fn parse(s: &str) -> Result<Driver> {
        Driver::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown driver {s:?}")))
    }
}

/// Outcome of one trial.
#[derive(Clone, Debug)]
pub struct Trial {
    pub family: &'static str,
    /// Result tag, or `ERROR` when the driver returned an error.
    pub tag: String,
    pub verified: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub family: String,
    pub tag: String,
    pub count: u64,
    pub witness_failures: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StressReport {
    pub driver: String,
    pub trials: u64,
    pub seed: u64,
    pub per_tag: BTreeMap<String, u64>,
    pub witness_failures: u64,
    pub errors: u64,
    pub failure_reasons: BTreeMap<String, u64>,
    pub classes: Vec<ClassRow>,
    #[serde(skip)]
    pub wall_ms: u128,
}

impl StressReport {
    pub fn passed(&self) -> bool {
        self.witness_failures == 0 && self.errors == 0
    }

    pub fn count(&self, tag: &str) -> u64 {
        self.per_tag.get(tag).copied().unwrap_or(0)
    }

    /// One row per (instance family, result tag).
    pub fn write_csv<W: Write>(&self, w: W) -> std::io::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["driver", "family", "tag", "count", "witness_failures"])?;
        for row in &self.classes {
            out.write_record([
                self.driver.as_str(),
                row.family.as_str(),
                row.tag.as_str(),
                &row.count.to_string(),
                &row.witness_failures.to_string(),
            ])?;
        }
        out.flush()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Connected graphs on 2 to 7 vertices, one per isomorphism class.
pub fn connected_catalog() -> &'static [Graph] {
    static CATALOG: OnceLock<Vec<Graph>> = OnceLock::new();
    CATALOG.get_or_init(|| (2..=7).flat_map(connected_graphs).collect())
}

fn pick<'a>(r: &mut ChaCha8Rng, from: &[&'a Graph]) -> &'a Graph {
    from[r.random_range(0..from.len())]
}

/// Random host of one of three families.
fn host(r: &mut ChaCha8Rng, n: usize) -> (&'static str, Graph) {
    match r.random_range(0..3) {
        0 => {
            let p = r.random_range(0.05..0.7);
            ("gnp", gnp_with(n, p, r))
        }
        1 => {
            let kind = r.random_range(0..6);
            ("adversarial", adversarial_host(n, kind, r))
        }
        _ => ("planted", planted_independent_set(n, 0.8, n / 4, r)),
    }
}

fn trial_of(family: &'static str, out: Result<DichotomyResult>, ctx: WitnessContext<'_>) -> Trial {
    match out {
        Err(e) => Trial {
            family,
            tag: "ERROR".into(),
            verified: false,
            reason: Some(e.to_string()),
        },
        Ok(DichotomyResult::Failure(why)) => Trial {
            family,
            tag: "FAILURE".into(),
            verified: true,
            reason: Some(why),
        },
        Ok(res) => Trial {
            family,
            tag: res.tag().to_string(),
            verified: verify_witness(&res, &ctx),
            reason: None,
        },
    }
}

fn random_subdivision(r: &mut ChaCha8Rng) -> Graph {
    let extra = r.random_range(2..=4);
    let mut lengths = [1usize; 6];
    for _ in 0..extra {
        lengths[r.random_range(0..6)] += 1;
    }
    build_subdivision(lengths).expect("positive lengths")
}

/// Runs one generated instance through `driver`.
pub fn run_trial(driver: Driver, seed: u64, cfg: &Config) -> Trial {
    let mut r = rng(seed);
    let cfg = cfg.clone().with_seed(seed);
    let cat = connected_catalog();
    match driver {
        Driver::K4Star => {
            let f = random_bipartite_pattern(r.random_range(1..=3), r.random_range(1..=3), 0.5, &mut r);
            let n = r.random_range(12..=80);
            let (family, g) = host(&mut r, n);
            let k = patterns::k4_star();
            let out = k4star_vs_bipartite(&g, &f, &cfg);
            trial_of(family, out, WitnessContext::new(&g).pattern(&k).target(f.graph()))
        }
        Driver::Subdivision => {
            let h = random_subdivision(&mut r);
            let f = random_target(r.random_range(2..=4), 0.5, &mut r);
            let n = r.random_range(16..=60);
            let (family, g) = host(&mut r, n);
            let out = subdivision_vs_graph(&g, &h, &f, &cfg);
            trial_of(family, out, WitnessContext::new(&g).pattern(&h).target(&f))
        }
        Driver::Treewidth => {
            let small: Vec<&Graph> = cat.iter().filter(|h| h.n() <= 6).collect();
            let h = pick(&mut r, &small);
            let size = r.random_range(3..=4);
            let n = r.random_range(16..=80);
            let (family, g) = if r.random_bool(0.25) {
                ("multipartite", random_multipartite(n, size - 1, &mut r))
            } else {
                host(&mut r, n)
            };
            let out = embed_via_treewidth(h, &g, size, &cfg);
            trial_of(family, out, WitnessContext::new(&g).pattern(h).size(size))
        }
        Driver::BicliqueLemma => {
            let cases: [(Graph, usize); 5] = [
                (Graph::complete(2), 1),
                (Graph::complete(2), 2),
                (Graph::complete(2), 3),
                (patterns::path(3), 2),
                (patterns::cycle(4), 2),
            ];
            let (h, size) = &cases[r.random_range(0..cases.len())];
            let cert = strong_degeneracy_order(h, h.max_degree()).expect("maximum degree certificate");
            let n = h.n() * h.n() * size.pow(cert.r as u32);
            let (family, g) = if r.random_bool(0.5) {
                let p = r.random_range(0.0..1.0);
                ("gnp", gnp_with(n, p, &mut r))
            } else {
                let kind = r.random_range(0..6);
                ("adversarial", adversarial_host(n, kind, &mut r))
            };
            let out = embed_vs_biclique(h, &cert, &g, *size);
            trial_of(family, out, WitnessContext::new(&g).pattern(h).size(*size))
        }
        Driver::Biclique => {
            let small: Vec<&Graph> = cat.iter().filter(|h| h.n() <= 6).collect();
            let h = pick(&mut r, &small);
            let excess = h.edge_count() as i64 - h.n() as i64;
            let k = (1..).find(|&k| excess_bound(k) >= excess).expect("some level fits");
            let size = r.random_range(2..=3);
            let n = r.random_range(20..=100);
            let (family, g) = host(&mut r, n);
            let out = ev_vs_biclique(h, &g, size, k, &cfg);
            trial_of(family, out, WitnessContext::new(&g).pattern(h).size(size))
        }
        Driver::Sparse => {
            let sparse: Vec<&Graph> = cat
                .iter()
                .filter(|h| h.edge_count() as i64 - h.n() as i64 <= 4)
                .collect();
            let h = pick(&mut r, &sparse);
            let size = r.random_range(3..=4);
            let n = r.random_range(16..=80);
            let (family, g) = host(&mut r, n);
            let out = sparse_pattern_vs_clique(h, &g, size, &cfg);
            trial_of(family, out, WitnessContext::new(&g).pattern(h).size(size))
        }
    }
}

/// Failure reasons with digit runs collapsed, cut at the first clause.
fn reason_key(why: &str) -> String {
    let head = why.split(';').next().unwrap_or("").trim();
    let mut out = String::new();
    let mut in_digits = false;
    for c in head.chars() {
        if c.is_ascii_digit() {
            if !in_digits {
                out.push('#');
            }
            in_digits = true;
        } else {
            out.push(c);
            in_digits = false;
        }
    }
    out.chars().take(100).collect()
}

/// Runs `trials` trials, trial `i` seeded with `seed ^ i`. Results do not
/// depend on `jobs` (0 means the default pool).
pub fn stress(driver: Driver, trials: u64, seed: u64, jobs: usize, cfg: &Config) -> Result<StressReport> {
    cfg.validate()?;
    let start = Instant::now();
    let run = || -> Vec<Trial> {
        (0..trials)
            .into_par_iter()
            .map(|i| run_trial(driver, seed ^ i, cfg))
            .collect()
    };
    let results = if jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(run)
    };
    let mut per_tag = BTreeMap::new();
    let mut reasons = BTreeMap::new();
    let mut classes: BTreeMap<(String, String), (u64, u64)> = BTreeMap::new();
    let (mut witness_failures, mut errors) = (0, 0);
    for t in &results {
        *per_tag.entry(t.tag.clone()).or_insert(0) += 1;
        let slot = classes.entry((t.family.to_string(), t.tag.clone())).or_insert((0, 0));
        slot.0 += 1;
        if t.tag == "ERROR" {
            errors += 1;
        } else if !t.verified {
            witness_failures += 1;
            slot.1 += 1;
        }
        if let Some(why) = &t.reason {
            *reasons.entry(reason_key(why)).or_insert(0) += 1;
        }
    }
    Ok(StressReport {
        driver: driver.name().into(),
        trials,
        seed,
        per_tag,
        witness_failures,
        errors,
        failure_reasons: reasons,
        classes: classes
            .into_iter()
            .map(|((family, tag), (count, bad))| ClassRow {
                family,
                tag,
                count,
                witness_failures: bad,
            })
            .collect(),
        wall_ms: start.elapsed().as_millis(),
    })
}
