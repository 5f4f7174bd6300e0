//! Command-line front end: parse inputs, call the library, print.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bqk::biquasile::{check_axioms, AlexanderParams, Biquasile, BiquasileJson, Verdict};
use bqk::boltzmann::{
    check_weight, enhanced_polynomial, linear_weight, scan_unit, solve_weights, BoltzmannWeight,
    ScanRecord, WeightJson, WeightVerdict,
};
use bqk::coloring::{count_colorings, enumerate_colorings, presentation};
use bqk::corpus;
use bqk::diagram::{DualGraphDiagram, LinkDiagram};

#[derive(Parser)]
#[command(name = "bqk", version, about = "Biquasile counting invariants and Boltzmann weight enhancements for oriented knots and links")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads for parallel subcommands (default: all cores).
    #[arg(long, global = true, env = "BQK_THREADS")]
    threads: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct BiquasileSource {
    /// Path to a biquasile JSON file { "order", "star", "dot" }.
    #[arg(long, conflicts_with = "alexander")]
    biquasile: Option<PathBuf>,
    /// Modular affine biquasile parameters "modulus,d,s,n".
    #[arg(long, value_name = "M,D,S,N")]
    alexander: Option<String>,
}

#[derive(Args)]
struct WeightSource {
    /// Path to a weight JSON file { "order", "modulus", "coeffs" }.
    #[arg(long, conflicts_with = "linear")]
    weight: Option<PathBuf>,
    /// Gamma for the linear weight of an affine biquasile.
    #[arg(long, value_name = "GAMMA")]
    linear: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the biquasile axioms of a table file.
    CheckBiquasile { path: PathBuf },
    /// List every biquasile of a given order (at most 4).
    EnumerateBiquasiles {
        order: usize,
        /// Write the list as JSON into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the operation tables of a modular affine biquasile.
    Alexander {
        #[command(flatten)]
        source: BiquasileSource,
    },
    /// Trace the regions of a link diagram and print its dual-graph records.
    Regions { link: String },
    /// Enumerate all colorings of a link by a biquasile.
    Color {
        link: String,
        #[command(flatten)]
        bq: BiquasileSource,
    },
    /// Counting invariant, or the enhanced polynomial when a weight is given.
    Invariant {
        link: String,
        #[command(flatten)]
        bq: BiquasileSource,
        #[command(flatten)]
        weight: WeightSource,
    },
    /// Generators-and-relations presentation of a diagram.
    Presentation {
        link: String,
        /// Use plain ASCII operation symbols.
        #[arg(long)]
        ascii: bool,
    },
    /// Verify the Boltzmann weight axioms.
    CheckWeight {
        #[command(flatten)]
        bq: BiquasileSource,
        #[arg(long)]
        weight: PathBuf,
    },
    /// Solve for all Boltzmann weights over Z/m.
    SolveWeights {
        #[command(flatten)]
        bq: BiquasileSource,
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the linear Boltzmann weight of an affine biquasile.
    LinearWeight {
        #[command(flatten)]
        bq: BiquasileSource,
        #[arg(long, default_value_t = 1)]
        linear: u64,
    },
    /// Classify linear-weight enhancements over the bundled corpus.
    ScanConjecture {
        /// Largest modulus to scan (from 2).
        #[arg(long, default_value_t = 5)]
        max_n: u64,
        /// Largest knot crossing number to include.
        #[arg(long, default_value_t = 7)]
        knots: usize,
        /// Largest link crossing number to include.
        #[arg(long, default_value_t = 7)]
        links: usize,
        /// Directory for the report (scan.jsonl); resumes if present.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// 1 = validation or axiom failure, 2 = I/O or format error.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn validation(msg: impl Into<String>) -> Self {
        Failure { code: 1, msg: msg.into() }
    }
    fn format(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::format(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::format(format!("json error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

/// Load either a bundled name, a file, or a literal: PD codes give a full
/// diagram; dual-graph JSON is accepted as direct input so hand-labelled
/// region data can bypass PD parsing.
fn load_dual_graph(input: &str) -> Result<DualGraphDiagram, Failure> {
    if let Some(d) = corpus::by_name(input) {
        return d.to_dual_graph().map_err(from_diagram_err);
    }
    let text = if input.trim_start().starts_with("PD[") || input.trim_start().starts_with("pd[") {
        input.to_string()
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input)?
    } else {
        return Err(Failure::format(format!(
            "`{input}` is not a bundled name, a file, or a PD literal"
        )));
    };
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let g: DualGraphDiagram = serde_json::from_str(trimmed)?;
        for rec in &g.crossings {
            if rec.sign.abs() != 1 || [rec.x, rec.a, rec.b, rec.y].iter().any(|&r| r >= g.regions) {
                return Err(Failure::validation("dual-graph record out of range"));
            }
        }
        Ok(g)
    } else {
        LinkDiagram::parse_pd(trimmed)
            .map_err(from_diagram_err)?
            .to_dual_graph()
            .map_err(from_diagram_err)
    }
}

fn from_diagram_err(e: bqk::diagram::DiagramError) -> Failure {
    match e {
        bqk::diagram::DiagramError::Parse(_) => Failure::format(e.to_string()),
        _ => Failure::validation(e.to_string()),
    }
}

fn parse_alexander(input: &str) -> Result<AlexanderParams, Failure> {
    let parts: Vec<&str> = input.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Failure::format(format!("expected `m,d,s,n`, got `{input}`")));
    }
    let nums: Result<Vec<u64>, _> = parts.iter().map(|p| p.parse::<u64>()).collect();
    let nums = nums.map_err(|_| Failure::format(format!("bad integer in `{input}`")))?;
    AlexanderParams::new(nums[0], nums[1], nums[2], nums[3])
        .map_err(|e| Failure::validation(e.to_string()))
}

fn load_biquasile(src: &BiquasileSource) -> Result<(Biquasile, Option<AlexanderParams>), Failure> {
    match (&src.biquasile, &src.alexander) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            let j: BiquasileJson = serde_json::from_str(&text)?;
            let b = Biquasile::from_json(&j).map_err(|e| Failure::validation(e.to_string()))?;
            Ok((b, None))
        }
        (None, Some(a)) => {
            let p = parse_alexander(a)?;
            Ok((Biquasile::alexander(p), Some(p)))
        }
        _ => Err(Failure::format("exactly one of --biquasile and --alexander is required")),
    }
}

fn load_weight(src: &WeightSource, params: Option<AlexanderParams>) -> Result<Option<BoltzmannWeight>, Failure> {
    match (&src.weight, src.linear) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            let j: WeightJson = serde_json::from_str(&text)?;
            let w = BoltzmannWeight::from_json(&j).map_err(|e| Failure::validation(e.to_string()))?;
            Ok(Some(w))
        }
        (None, Some(gamma)) => {
            let p = params.ok_or_else(|| Failure::format("--linear requires an --alexander biquasile"))?;
            Ok(Some(linear_weight(p, gamma)))
        }
        (None, None) => Ok(None),
        _ => Err(Failure::format("--weight conflicts with --linear")),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.format == Format::Json;
    match cli.cmd {
        Cmd::CheckBiquasile { path } => {
            let text = std::fs::read_to_string(&path)?;
            let j: BiquasileJson = serde_json::from_str(&text)?;
            if j.star.len() != j.order || j.dot.len() != j.order {
                return Err(Failure::validation("table row count does not match order"));
            }
            match check_axioms(&j.star, &j.dot).map_err(|e| Failure::validation(e.to_string()))? {
                Verdict::Pass => {
                    println!("pass");
                    Ok(())
                }
                Verdict::Fail(v) => Err(Failure::validation(format!("fail: {v}"))),
            }
        }
        Cmd::EnumerateBiquasiles { order, out } => {
            let all = bqk::enumerate_biquasiles(order).map_err(|e| Failure::validation(e.to_string()))?;
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir)?;
                let list: Vec<BiquasileJson> = all.iter().map(|b| b.to_json()).collect();
                let path = dir.join(format!("biquasiles_order_{order}.json"));
                std::fs::write(&path, serde_json::to_string_pretty(&list)?)?;
            }
            if json {
                let list: Vec<BiquasileJson> = all.iter().map(|b| b.to_json()).collect();
                println!("{}", serde_json::to_string(&list)?);
            } else {
                let plural = if all.len() == 1 { "" } else { "s" };
                println!("{} biquasile{plural} of order {order}", all.len());
            }
            Ok(())
        }
        Cmd::Alexander { source } => {
            let (b, _) = load_biquasile(&source)?;
            if json {
                println!("{}", serde_json::to_string(&b.to_json())?);
            } else {
                print!("{}", b.render_block_matrix());
            }
            Ok(())
        }
        Cmd::Regions { link } => {
            let g = load_dual_graph(&link)?;
            if json {
                println!("{}", serde_json::to_string(&g)?);
            } else {
                println!("{} regions, {} crossings", g.regions, g.crossings.len());
                for rec in &g.crossings {
                    println!(
                        "sign {:+} : g{} = g{} * (g{} . g{})",
                        rec.sign,
                        rec.y + 1,
                        rec.x + 1,
                        rec.a + 1,
                        rec.b + 1
                    );
                }
            }
            Ok(())
        }
        Cmd::Color { link, bq } => {
            let g = load_dual_graph(&link)?;
            let (b, _) = load_biquasile(&bq)?;
            let all = enumerate_colorings(&g, &b);
            if json {
                let rows: Vec<&Vec<u8>> = all.iter().map(|c| &c.colors).collect();
                println!("{}", serde_json::to_string(&rows)?);
            } else {
                for c in &all {
                    let row: Vec<String> = c.colors.iter().map(|v| v.to_string()).collect();
                    println!("{}", row.join(" "));
                }
                println!("{} colorings", all.len());
            }
            Ok(())
        }
        Cmd::Invariant { link, bq, weight } => {
            let g = load_dual_graph(&link)?;
            let (b, params) = load_biquasile(&bq)?;
            match load_weight(&weight, params)? {
                None => {
                    let n = count_colorings(&g, &b);
                    if json {
                        println!("{{\"count\":{n}}}");
                    } else {
                        println!("{n}");
                    }
                }
                Some(w) => {
                    if w.order() != b.order() {
                        return Err(Failure::validation(format!(
                            "weight order {} does not match biquasile order {}",
                            w.order(),
                            b.order()
                        )));
                    }
                    let p = enhanced_polynomial(&g, &b, &w);
                    if json {
                        let coeffs: Vec<u64> = (0..w.modulus()).map(|k| p.coefficient(k)).collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "modulus": w.modulus(),
                                "coefficients": coeffs,
                                "text": p.to_string(),
                            })
                        );
                    } else {
                        println!("{p}");
                    }
                }
            }
            Ok(())
        }
        Cmd::Presentation { link, ascii } => {
            let g = load_dual_graph(&link)?;
            let p = presentation(&g);
            println!("{}", p.render(ascii));
            Ok(())
        }
        Cmd::CheckWeight { bq, weight } => {
            let (b, _) = load_biquasile(&bq)?;
            let text = std::fs::read_to_string(&weight)?;
            let j: WeightJson = serde_json::from_str(&text)?;
            let w = BoltzmannWeight::from_json(&j).map_err(|e| Failure::validation(e.to_string()))?;
            match check_weight(&b, &w).map_err(|e| Failure::validation(e.to_string()))? {
                WeightVerdict::Pass => {
                    println!("pass");
                    Ok(())
                }
                WeightVerdict::Fail(v) => Err(Failure::validation(format!("fail: {v:?}"))),
            }
        }
        Cmd::SolveWeights { bq, modulus, out } => {
            if modulus < 2 {
                return Err(Failure::validation("modulus must be at least 2"));
            }
            let (b, _) = load_biquasile(&bq)?;
            let sol = solve_weights(&b, modulus);
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir)?;
                let path = dir.join(format!("weights_order{}_mod{modulus}.json", b.order()));
                let gens: Vec<WeightJson> = sol
                    .generators()
                    .iter()
                    .map(|g| BoltzmannWeight::new(b.order(), modulus, g.clone()).unwrap().to_json())
                    .collect();
                let doc = serde_json::json!({
                    "order": b.order(),
                    "modulus": modulus,
                    "count": sol.count().to_string(),
                    "generators": gens,
                });
                std::fs::write(&path, serde_json::to_string_pretty(&doc)?)?;
            }
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "count": sol.count().to_string(),
                        "generators": sol.generators().len(),
                    })
                );
            } else {
                println!("{} solutions", sol.count());
            }
            Ok(())
        }
        Cmd::LinearWeight { bq, linear } => {
            let (_, params) = load_biquasile(&bq)?;
            let p = params.ok_or_else(|| Failure::format("linear-weight requires --alexander"))?;
            let w = linear_weight(p, linear);
            println!("{}", serde_json::to_string(&w.to_json())?);
            Ok(())
        }
        Cmd::ScanConjecture { max_n, knots, links, out } => {
            let corpus: Vec<(String, DualGraphDiagram)> = corpus::knots_up_to(knots)
                .into_iter()
                .chain(corpus::links_up_to(links))
                .map(|(n, d)| Ok((n, d.to_dual_graph().map_err(from_diagram_err)?)))
                .collect::<Result<_, Failure>>()?;
            let moduli: Vec<u64> = (2..=max_n).collect();
            // Work units are (biquasile, link) pairs; units already present
            // in an existing report are not recomputed, and the merged
            // report is rewritten in sorted order so the file content does
            // not depend on thread count or interruption history.
            let mut done: BTreeSet<(u64, u64, u64, u64, String)> = BTreeSet::new();
            let mut records: Vec<ScanRecord> = Vec::new();
            let report = out.as_ref().map(|dir| dir.join("scan.jsonl"));
            if let Some(path) = &report {
                if path.exists() {
                    for line in std::fs::read_to_string(path)?.lines() {
                        if line.trim().is_empty() {
                            continue;
                        }
                        let r: ScanRecord = serde_json::from_str(line)?;
                        done.insert((r.modulus, r.d, r.s, r.n_param, r.link.clone()));
                        records.push(r);
                    }
                }
            }
            use rayon::prelude::*;
            let mut units = Vec::new();
            for &m in &moduli {
                for p in AlexanderParams::all_unit_triples(m) {
                    for (name, g) in &corpus {
                        if !done.contains(&(m, p.d, p.s, p.n_param, name.clone())) {
                            units.push((p, name, g));
                        }
                    }
                }
            }
            let fresh: Vec<ScanRecord> = units
                .par_iter()
                .flat_map_iter(|(p, name, g)| scan_unit(*p, name, g))
                .collect();
            records.extend(fresh);
            records.sort_by(|r1, r2| {
                (r1.modulus, r1.d, r1.s, r1.n_param, r1.gamma, &r1.link).cmp(&(
                    r2.modulus,
                    r2.d,
                    r2.s,
                    r2.n_param,
                    r2.gamma,
                    &r2.link,
                ))
            });
            let mut counts = std::collections::BTreeMap::new();
            for r in &records {
                *counts.entry(format!("{:?}", r.predicate)).or_insert(0usize) += 1;
            }
            if let Some(path) = &report {
                if let Some(parent) = path.parent() {
                    std::fs::create_dir_all(parent)?;
                }
                let mut body = String::new();
                for r in &records {
                    body.push_str(&serde_json::to_string(r)?);
                    body.push('\n');
                }
                std::fs::write(path, body)?;
            }
            if json {
                println!("{}", serde_json::json!({ "records": records.len(), "by_predicate": counts }));
            } else {
                println!("{} records", records.len());
                for (k, v) in &counts {
                    println!("  {k}: {v}");
                }
            }
            Ok(())
        }
    }
}
