//! Command-line front end. `run` parses argv, dispatches to the library
//! and returns the process exit code: 0 on success, 1 when a verification
//! fails, 2 on a usage or parse error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grammar::{format_symmetric_or_x, format_w, ClassExpr};
use crate::milnor::{apply_q, apply_q_so, check_milnor_laws, verify_q0_even_classes};
use crate::motivic::{
    compute_y, dimension_table, ses_odd, verify_main_theorem,
    verify_main_theorem_without_weight_comparison, verify_topological_exactness,
    verify_torsion_sanity, verify_weight_comparison, DimTable, TorsionModule,
};
use crate::rings::{RingKind, RingPresentation};
use crate::weightfilt::{
    stiefel_whitney_weight_table, verify_iota_strictness, verify_strictness,
    verify_wilson_decomposition, weight_of_symmetric, wilson_candidates, WeightEngine,
};

/// Default seed for the randomized suites.
pub const DEFAULT_SEED: u64 = 0x5eed_2010;

/// Environment variable naming the default directory for golden tables.
pub const OUT_DIR_ENV: &str = "MOTIVIC_BSO_OUT_DIR";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "bso-motivic",
    version,
    about = "Mod 2 motivic cohomology of BO_n and BSO_n"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for independent checks
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Dimensions of H^{d,j}, split into free and torsion parts
    Dims(DimsArgs),
    /// Weight of a class
    Weight {
        /// bo:N, bso:N, optionally /cK
        #[arg(long)]
        group: String,
        #[arg(long)]
        class: String,
    },
    /// Apply the Milnor operation Q_k
    Qop {
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        class: String,
        /// Work in H*(BSO_n) instead of H*(BO_n)
        #[arg(long)]
        so: bool,
    },
    /// List the Wilson basis of H^d(BO_n)
    Wilson {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        degree: u32,
        /// Skip the admissibility filter
        #[arg(long)]
        unfiltered: bool,
    },
    /// Torsion kernel Y_m of realization for BSO_{2m}, computed and closed form
    Kernel {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
    },
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct DimsArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_twist: Option<u32>,
    /// Also write the table to this directory
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Write the table to the directory named by MOTIVIC_BSO_OUT_DIR
    #[arg(long)]
    write: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Milnor,
    Wilson,
    Weights,
    Q0,
    Strictness,
    Exactness,
    Theorem,
    Torsion,
    Comparison,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    m: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: Option<u32>,
    /// Number of random samples for the Milnor laws
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

/// Runs with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs with explicit output streams; progress lines still go to stderr.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new()
            .num_threads(j as usize)
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Internal(e.to_string())),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Input(_) | Error::Parse { .. } => 2,
                Error::Verification(_) | Error::Internal(_) => 1,
            }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(String, i32)> {
    match &cli.verb {
        Verb::Dims(a) => dims(cli.format, a),
        Verb::Weight { group, class } => weight(cli.format, group, class),
        Verb::Qop { k, n, class, so } => qop(cli.format, *k, *n as usize, class, *so),
        Verb::Wilson {
            n,
            degree,
            unfiltered,
        } => wilson(cli.format, *n as usize, *degree, !unfiltered),
        Verb::Kernel { m, max_degree } => kernel(cli.format, *m as usize, *max_degree),
        Verb::Verify(a) => verify(cli.format, cli.seed, a),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

const DIM_HEADER: [&str; 5] = ["group", "degree", "twist", "dim", "torsion_dim"];

fn render_dims(format: Format, t: &DimTable) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(t),
        Format::Csv => {
            let rows: Vec<Vec<String>> = t
                .entries
                .iter()
                .map(|e| {
                    vec![
                        t.group.clone(),
                        e.degree.to_string(),
                        e.twist.to_string(),
                        e.dim.to_string(),
                        e.torsion_dim.to_string(),
                    ]
                })
                .collect();
            csv_string(&DIM_HEADER, &rows)?
        }
        Format::Text => {
            let mut s = format!(
                "{}\n{:>6} {:>6} {:>6} {:>8}\n",
                t.group, "degree", "twist", "dim", "torsion"
            );
            for e in &t.entries {
                writeln!(
                    s,
                    "{:>6} {:>6} {:>6} {:>8}",
                    e.degree, e.twist, e.dim, e.torsion_dim
                )
                .unwrap();
            }
            s
        }
    })
}

fn dims(format: Format, a: &DimsArgs) -> Result<(String, i32)> {
    let ring = RingPresentation::parse(&a.group)?;
    if ring.kind() == RingKind::Exterior {
        return Err(Error::Input("dims supports bo:N and bso:N groups".into()));
    }
    let table = dimension_table(&ring, a.max_degree, a.max_twist)?;
    let text = render_dims(format, &table)?;
    let dir = match (&a.out_dir, a.write) {
        (Some(d), _) => Some(d.clone()),
        (None, true) => Some(
            std::env::var_os(OUT_DIR_ENV)
                .map(PathBuf::from)
                .ok_or_else(|| Error::Input(format!("--write needs {OUT_DIR_ENV} or --out-dir")))?,
        ),
        (None, false) => None,
    };
    if let Some(dir) = dir {
        let ext = match format {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Text => "txt",
        };
        let name = ring.to_string().replace([':', '/'], "_");
        let path = dir.join(format!("{name}.{ext}"));
        std::fs::create_dir_all(&dir)
            .and_then(|_| std::fs::write(&path, &text))
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
        eprintln!("wrote {}", path.display());
    }
    Ok((text, 0))
}

fn weight(format: Format, group: &str, class: &str) -> Result<(String, i32)> {
    let ring = RingPresentation::parse(group)?;
    let expr = ClassExpr::parse(class)?;
    let w = if ring.kind() == RingKind::Bo && ring.quotient().is_none() && expr.mentions().x {
        weight_of_symmetric(&expr.to_x(ring.n())?)?
    } else {
        WeightEngine::new().weight(&ring, &expr.to_w(ring.n())?)?
    };
    Ok(match format {
        Format::Text => format!("{w}\n"),
        Format::Json => {
            to_json(&json!({ "group": ring.group_name(), "class": class, "weight": w }))
        }
        Format::Csv => csv_string(
            &["group", "class", "weight"],
            &[vec![ring.group_name(), class.into(), w.to_string()]],
        )?,
    })
    .map(|s| (s, 0))
}

fn qop(format: Format, k: u32, n: usize, class: &str, so: bool) -> Result<(String, i32)> {
    let expr = ClassExpr::parse(class)?;
    let image = if so {
        format_w(&apply_q_so(k, &expr.to_w(n)?, n)?)
    } else {
        format_symmetric_or_x(&apply_q(k, &expr.to_x(n)?))
    };
    let group = if so {
        format!("BSO_{n}")
    } else {
        format!("BO_{n}")
    };
    Ok(match format {
        Format::Text => format!("{image}\n"),
        Format::Json => to_json(&json!({ "group": group, "k": k, "class": class, "image": image })),
        Format::Csv => csv_string(
            &["group", "k", "class", "image"],
            &[vec![group, k.to_string(), class.into(), image]],
        )?,
    })
    .map(|s| (s, 0))
}

fn wilson(format: Format, n: usize, d: u32, filtered: bool) -> Result<(String, i32)> {
    let elems = wilson_candidates(n, d, filtered);
    let label = |e: &crate::weightfilt::WilsonElement| {
        let qs: String = e.applied.iter().rev().map(|i| format!("Q{i}")).collect();
        if qs.is_empty() {
            format!("m{}", e.partition())
        } else {
            format!("{qs} m{}", e.partition())
        }
    };
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            for e in &elems {
                writeln!(s, "{:<32} degree {:>3} weight {}", label(e), e.degree(), e.weight()).unwrap();
            }
            writeln!(s, "{} elements", elems.len()).unwrap();
            s
        }
        Format::Json => {
            let items: Vec<Value> = elems
                .iter()
                .map(|e| json!({ "element": label(e), "odd": e.odd, "even": e.even, "applied": e.applied, "weight": e.weight() }))
                .collect();
            to_json(&json!({ "n": n, "degree": d, "filtered": filtered, "elements": items }))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = elems.iter().map(|e| vec![label(e), e.degree().to_string(), e.weight().to_string()]).collect();
            csv_string(&["element", "degree", "weight"], &rows)?
        }
    })
    .map(|s| (s, 0))
}

fn kernel(format: Format, m: usize, max_degree: u32) -> Result<(String, i32)> {
    let mut engine = WeightEngine::new();
    let table = compute_y(&mut engine, m, max_degree)?;
    let module = TorsionModule::new(m);
    let mut rows = Vec::new();
    for d in 0..=max_degree {
        for j in d.div_ceil(2)..=d {
            let (c, e) = (table.y(d, j), module.hilbert(d, j));
            if c > 0 || e > 0 {
                rows.push((d, j, c, e));
            }
        }
    }
    let pass = rows.iter().all(|r| r.2 == r.3);
    let text = match format {
        Format::Text => {
            let mut s = format!(
                "Y_{m} in BSO_{}\n{:>6} {:>6} {:>8} {:>11}\n",
                2 * m,
                "degree",
                "twist",
                "computed",
                "closed_form"
            );
            for (d, j, c, e) in &rows {
                writeln!(s, "{d:>6} {j:>6} {c:>8} {e:>11}").unwrap();
            }
            s
        }
        Format::Json => {
            let entries: Vec<Value> =
                rows.iter().map(|(d, j, c, e)| json!({ "degree": d, "twist": j, "computed": c, "closed_form": e })).collect();
            to_json(&json!({ "group": format!("BSO_{}", 2 * m), "entries": entries, "pass": pass }))
        }
        Format::Csv => {
            let r: Vec<Vec<String>> = rows
                .iter()
                .map(|(d, j, c, e)| {
                    vec![
                        format!("BSO_{}", 2 * m),
                        d.to_string(),
                        j.to_string(),
                        c.to_string(),
                        e.to_string(),
                    ]
                })
                .collect();
            csv_string(&["group", "degree", "twist", "computed", "closed_form"], &r)?
        }
    };
    Ok((text, if pass { 0 } else { 1 }))
}

/// Result of one verification sub-check.
#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub name: String,
    pub pass: bool,
    pub summary: String,
}

type Job = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

fn job(f: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn outcome(name: impl Into<String>, pass: bool, summary: impl Into<String>) -> Result<Outcome> {
    let name = name.into();
    eprintln!("[verify] {name}: {}", if pass { "ok" } else { "FAILED" });
    Ok(Outcome {
        name,
        pass,
        summary: summary.into(),
    })
}

fn jobs_for(check: Check, seed: u64, a: &VerifyArgs) -> Vec<Job> {
    let md = a.max_degree;
    let mut jobs: Vec<Job> = Vec::new();
    let all = check == Check::All;
    if all || check == Check::Milnor {
        let samples = a.samples;
        jobs.push(job(move || {
            let r = check_milnor_laws(seed, samples, 5, 20, 3);
            outcome(
                "milnor laws",
                r.pass,
                format!(
                    "{} samples, seed {}: derivation {} / square {} / commutation {} failures",
                    r.samples,
                    r.seed,
                    r.derivation_failures,
                    r.square_failures,
                    r.commutation_failures
                ),
            )
        }));
    }
    if all || check == Check::Wilson {
        let nmax = a.n.unwrap_or(5) as usize;
        let dmax = md.unwrap_or(16);
        for n in 1..=nmax {
            jobs.push(job(move || {
                let mut bad = Vec::new();
                for d in 0..=dmax {
                    let r = verify_wilson_decomposition(n, d, true)?;
                    if !r.pass {
                        bad.push(format!(
                            "d={d}: {} elements, rank {}, dim {}",
                            r.count, r.rank, r.dim
                        ));
                    }
                }
                outcome(
                    format!("wilson basis n={n}"),
                    bad.is_empty(),
                    format!("d <= {dmax}; {}", summary_list(&bad)),
                )
            }));
        }
        jobs.push(job(move || {
            let mut first = None;
            'outer: for n in 3..=nmax.max(3) {
                for d in 0..=dmax {
                    let r = verify_wilson_decomposition(n, d, false)?;
                    if !r.pass {
                        first = Some(format!(
                            "n={n} d={d}: {} elements for dim {}",
                            r.count, r.dim
                        ));
                        break 'outer;
                    }
                }
            }
            let fails = first.is_some();
            outcome(
                "wilson negative control (no admissibility)",
                fails,
                first.unwrap_or_else(|| "control did not fail".into()),
            )
        }));
    }
    if all || check == Check::Weights {
        let nmax = a.n.unwrap_or(8) as usize;
        jobs.push(job(move || {
            let t = stiefel_whitney_weight_table(nmax)?;
            let bad: Vec<String> = t
                .iter()
                .filter(|e| !e.ok)
                .map(|e| format!("{} w{}: {} vs {}", e.group, e.l, e.weight, e.expected))
                .collect();
            outcome(
                "stiefel-whitney weights",
                bad.is_empty(),
                format!("n <= {nmax}, {} entries; {}", t.len(), summary_list(&bad)),
            )
        }));
    }
    if all || check == Check::Q0 {
        let nmax = a.n.unwrap_or(8) as usize;
        jobs.push(job(move || {
            let t = verify_q0_even_classes(nmax)?;
            let bad: Vec<String> = t
                .iter()
                .filter(|e| !e.ok)
                .map(|e| format!("n={} l={}: {}", e.n, e.l, e.image))
                .collect();
            outcome(
                "Q0 w_2l = w_2l+1 in BSO_n",
                bad.is_empty(),
                format!("n <= {nmax}, {} entries; {}", t.len(), summary_list(&bad)),
            )
        }));
    }
    if all || check == Check::Strictness {
        let nmax = a.n.unwrap_or(6) as usize;
        let dmax = md.unwrap_or(12);
        for n in 3..=nmax.max(3) {
            jobs.push(job(move || {
                let r = verify_strictness(n, dmax)?;
                outcome(
                    format!("kappa* strict n={n}"),
                    r.pass,
                    format!(
                        "d <= {dmax}, injective {}, failing degrees {:?}",
                        r.injective,
                        r.failing_degrees()
                    ),
                )
            }));
        }
        let mmax = a.m.unwrap_or(3) as usize;
        for m in 1..=mmax {
            jobs.push(job(move || {
                let r = verify_iota_strictness(m, 2 * m as u32)?;
                let first = r.failing_degrees().first().copied();
                outcome(
                    format!("iota* negative control m={m}"),
                    first == Some(2 * m as u32),
                    format!("first non-strict degree {first:?}, expected {}", 2 * m),
                )
            }));
        }
    }
    if all || check == Check::Exactness {
        let mmax = a.m.unwrap_or(3) as usize;
        let dmax = md.unwrap_or(14);
        for n in 3..=2 * mmax + 2 {
            jobs.push(job(move || {
                let ok = verify_topological_exactness(n, dmax)?;
                outcome(
                    format!("localization sequence n={n}"),
                    ok,
                    format!("d <= {dmax}"),
                )
            }));
        }
        for m in 1..=mmax {
            jobs.push(job(move || {
                let r = ses_odd(m, dmax)?;
                let bad: Vec<String> = r
                    .entries
                    .iter()
                    .filter(|e| !e.exact)
                    .map(|e| format!("d={} w={}", e.degree, e.weight))
                    .collect();
                outcome(
                    format!("filtered sequence m={m}"),
                    r.pass,
                    format!(
                        "d <= {dmax}, {} bidegrees; {}",
                        r.entries.len(),
                        summary_list(&bad)
                    ),
                )
            }));
        }
    }
    if all || check == Check::Theorem {
        let ms: Vec<(usize, u32)> = match (a.m, md) {
            (Some(m), Some(d)) => vec![(m as usize, d)],
            (Some(m), None) => vec![(m as usize, if m == 2 { 20 } else { 16 })],
            (None, Some(d)) => vec![(2, d), (3, d)],
            (None, None) => vec![(2, 20), (3, 16)],
        };
        for (m, d) in ms {
            jobs.push(job(move || {
                if m < 2 {
                    return Err(Error::Input("the theorem needs m >= 2".into()));
                }
                let r = verify_main_theorem(m, d)?;
                let vals: Vec<String> = r
                    .nonzero
                    .iter()
                    .map(|e| format!("({},{}):{}", e.degree, e.twist, e.computed))
                    .collect();
                let bad: Vec<String> = r
                    .mismatches
                    .iter()
                    .map(|e| {
                        format!(
                            "({},{}) {} vs {}",
                            e.degree, e.twist, e.computed, e.expected
                        )
                    })
                    .collect();
                outcome(
                    format!("Y_{m} vs closed form, d <= {d}"),
                    r.pass,
                    format!(
                        "routes agree {}; nonzero {}; mismatches {}",
                        r.routes_agree,
                        vals.join(" "),
                        summary_list(&bad)
                    ),
                )
            }));
            if m >= 3 {
                jobs.push(job(move || {
                    let r = verify_main_theorem_without_weight_comparison(m, d)?;
                    outcome(
                        format!("Y_{m} negative control (weights ignored)"),
                        !r.pass,
                        format!("{} mismatching bidegrees", r.mismatches.len()),
                    )
                }));
            }
        }
    }
    if all || check == Check::Torsion {
        let mmax = a.m.unwrap_or(3) as usize;
        let dmax = md.unwrap_or(16);
        for m in 2..=mmax.max(2) {
            jobs.push(job(move || {
                let r = verify_torsion_sanity(m, dmax)?;
                outcome(
                    format!("torsion sanity m={m}"),
                    r.pass,
                    format!(
                        "degree {} twists {:?}; below diagonal {}; generators {}; products {}",
                        2 * m,
                        r.bottom_twists,
                        r.below_diagonal,
                        r.generator_law,
                        r.products
                    ),
                )
            }));
        }
    }
    if all || check == Check::Comparison {
        let ms: Vec<usize> = a.m.map_or(vec![2, 3], |m| vec![m as usize]);
        let dmax = md.unwrap_or(14);
        for m in ms {
            jobs.push(job(move || {
                let r = verify_weight_comparison(m, dmax)?;
                let bad: Vec<String> = r
                    .failures()
                    .map(|e| format!("{} ({}, {})", e.z, e.weight_top, e.weight_mixed))
                    .collect();
                outcome(
                    format!("weight comparison m={m}"),
                    r.pass,
                    format!(
                        "special cases {}; general inequality {}; failures {}",
                        r.special_cases_pass,
                        r.general_inequality_pass,
                        summary_list(&bad)
                    ),
                )
            }));
        }
    }
    jobs
}

fn summary_list(items: &[String]) -> String {
    match items.len() {
        0 => "none".into(),
        n if n <= 6 => items.join(", "),
        n => format!("{} ... ({n} total)", items[..6].join(", ")),
    }
}

fn verify(format: Format, seed: u64, a: &VerifyArgs) -> Result<(String, i32)> {
    let jobs = jobs_for(a.check, seed, a);
    let outcomes: Vec<Outcome> = jobs.par_iter().map(|j| j()).collect::<Result<_>>()?;
    let pass = outcomes.iter().all(|o| o.pass);
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for o in &outcomes {
                writeln!(
                    s,
                    "{} {}: {}",
                    if o.pass { "PASS" } else { "FAIL" },
                    o.name,
                    o.summary
                )
                .unwrap();
            }
            s
        }
        Format::Json => to_json(&json!({ "pass": pass, "checks": outcomes })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = outcomes
                .iter()
                .map(|o| vec![o.name.clone(), o.pass.to_string(), o.summary.clone()])
                .collect();
            csv_string(&["check", "pass", "summary"], &rows)?
        }
    };
    Ok((text, if pass { 0 } else { 1 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bso-motivic").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn dims_json() {
        let (code, out, _) = call(&[
            "dims",
            "--group",
            "bo:3",
            "--max-degree",
            "4",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["group"], "BO_3");
        let e = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["degree"] == 4 && e["twist"] == 4)
            .unwrap();
        assert_eq!(e["dim"], 4);
        assert_eq!(e["torsion_dim"], 0);
    }

    #[test]
    fn dims_csv_header() {
        let (code, out, _) = call(&[
            "dims",
            "--group",
            "bso:4",
            "--max-degree",
            "4",
            "--format",
            "csv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            out.lines().next().unwrap(),
            "group,degree,twist,dim,torsion_dim"
        );
        assert!(out.lines().any(|l| l == "BSO_4,4,2,2,1"));
    }

    #[test]
    fn weight_and_qop() {
        assert_eq!(
            call(&["weight", "--group", "bso:6", "--class", "w6"]).1,
            "4\n"
        );
        assert_eq!(
            call(&["weight", "--group", "bo:3", "--class", "x1*x2*x3"]).1,
            "3\n"
        );
        assert_eq!(
            call(&["qop", "--k", "0", "--n", "4", "--class", "m[1,1,1]"]).1,
            "m[2,1,1]\n"
        );
        assert_eq!(
            call(&["qop", "--k", "0", "--n", "5", "--class", "w4", "--so"]).1,
            "w5\n"
        );
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, out, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("Usage"));
        assert_eq!(call(&["dims", "--group", "bo:3", "--bogus"]).0, 2);
        assert_eq!(call(&["weight", "--group", "bx:3", "--class", "w1"]).0, 2);
        assert_eq!(
            call(&["weight", "--group", "bo:3", "--class", "w2 + + w3"]).0,
            2
        );
        assert_eq!(call(&["dims", "--group", "bo:3", "--max-degree", "0"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            call(&["verify", "theorem", "--m", "2", "--max-degree", "12"]).0,
            0
        );
        let (code, out, _) = call(&["verify", "comparison", "--m", "2", "--max-degree", "8"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("FAIL"));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = call(&[
            "--jobs", "3", "verify", "q0", "--n", "6", "--format", "json",
        ]);
        let b = call(&[
            "--jobs", "1", "verify", "q0", "--n", "6", "--format", "json",
        ]);
        assert_eq!(a, b);
    }

    #[test]
    fn emitted_classes_reparse() {
        let (_, out, _) = call(&["qop", "--k", "1", "--n", "4", "--class", "w3*w1"]);
        let back = ClassExpr::parse(out.trim()).unwrap().to_x(4).unwrap();
        let direct = apply_q(1, &ClassExpr::parse("w3*w1").unwrap().to_x(4).unwrap());
        assert_eq!(back, direct);
    }
}
