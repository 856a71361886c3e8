use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use eliahou_core::family::evaluate;
use eliahou_core::search::SearchStats;
use eliahou_core::{
    detect_h, hat_params, read_rows, render_critical_interval, run_search, verify, Completeness, FamilyParams,
    Format, Fraction, GenBound, IntSet, ResultRow, SearchConfig, Semigroup, Table,
};

#[derive(Parser)]
#[command(name = "eliahou", version, about = "Construct, classify and search for Eliahou semigroups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exhaustive search, one JSON row per semigroup
    Search(SearchArgs),
    /// Parameters, classification and family of a semigroup "m,g1,...;c"
    Classify {
        literal: Semigroup,
        /// Farey order, detected when omitted
        #[arg(long)]
        h: Option<i64>,
        /// only the JSON row
        #[arg(long)]
        json: bool,
    },
    /// Builds S(h, a/b, Delta, tau, m)
    Construct(ConstructArgs),
    /// Classification table of a search output ("-" for stdin)
    Table { file: PathBuf },
    /// Draws the critical interval
    Render {
        literal: Semigroup,
        #[arg(long, conflicts_with = "ascii")]
        svg: bool,
        #[arg(long)]
        ascii: bool,
        #[arg(long)]
        h: Option<i64>,
    },
    /// Runs the invariant suite
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    cmax: i64,
    #[arg(long, default_value_t = 1)]
    cmin: i64,
    #[arg(long, default_value_t = 8)]
    interval_len: i64,
    #[arg(long, env = "ELIAHOU_WORKERS")]
    workers: Option<usize>,
    /// disable the (k+1)(l+1) < c pruning
    #[arg(long)]
    no_prune: bool,
    /// try left generators up to c_max + m - gamma1 (unconditional result)
    #[arg(long)]
    safe_bound: bool,
    #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
    bound_offset: i64,
    /// give up after this many seconds
    #[arg(long)]
    time_limit: Option<u64>,
    /// write rows here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    h: i64,
    /// upper end a/b of the h-Farey interval
    #[arg(long)]
    frac: Fraction,
    /// finite set, e.g. 0,1,5
    #[arg(long, allow_hyphen_values = true)]
    delta: IntSet,
    #[arg(long, required_unless_present = "hat", allow_hyphen_values = true)]
    tau: Option<i64>,
    #[arg(long, required_unless_present = "hat")]
    m: Option<i64>,
    /// the extremal member, tau and m computed
    #[arg(long, conflicts_with_all = ["tau", "m"])]
    hat: bool,
}

#[derive(Serialize)]
struct SearchMeta {
    cmax: i64,
    cmin: i64,
    completeness: Completeness,
    bound: GenBound,
    prune: bool,
    count: usize,
    stats: SearchStats,
}

fn search(a: SearchArgs) -> Result<()> {
    let mut cfg = SearchConfig::new(a.cmax);
    cfg.c_min = a.cmin;
    cfg.interval_len = a.interval_len;
    cfg.workers = a.workers;
    cfg.prune = !a.no_prune;
    cfg.bound = if a.safe_bound { GenBound::Safe } else { GenBound::Conjectured { offset: a.bound_offset } };
    cfg.time_limit = a.time_limit.map(Duration::from_secs);
    let out = run_search(&cfg)?;
    let mut w: Box<dyn Write> = match &a.out {
        Some(p) => Box::new(BufWriter::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for s in &out.semigroups {
        writeln!(w, "{}", ResultRow::new(s).to_json())?;
    }
    w.flush()?;
    let meta = SearchMeta {
        cmax: cfg.c_max,
        cmin: cfg.c_min,
        completeness: out.completeness,
        bound: cfg.bound,
        prune: cfg.prune,
        count: out.semigroups.len(),
        stats: out.stats,
    };
    eprintln!("{}", serde_json::to_string(&meta)?);
    Ok(())
}

fn describe(row: &ResultRow) -> String {
    let mut t = vec![
        ("semigroup", row.literal.clone()),
        ("canonical", row.canonical.to_string()),
        ("m c", format!("{} {}", row.m, row.c)),
        ("k l r e g", format!("{} {} {} {} {}", row.k, row.l, row.r, row.e, row.g)),
        ("q rho s", format!("{} {} {}", row.q, row.rho, row.s)),
        ("E W", format!("{} {}", row.eliahou, row.wilf)),
    ];
    if let Some(e0) = row.e0 {
        t.push(("E0", e0.to_string()));
    }
    match &row.classification {
        Some(c) => {
            t.push(("h", c.h.to_string()));
            t.push(("Farey interval", c.farey.to_string()));
            t.push(("h-regular", c.h_regular.to_string()));
            t.push(("collision-free", format!("{} ({} collisions, {} primitive)", c.collision_free, c.collisions, c.primitive_collisions)));
            t.push(("long elements", c.long_elements.to_string()));
            t.push(("short split", format!("{} {}", c.short, c.split)));
        }
        None => t.push(("h", "not detected".into())),
    }
    if let Some(f) = &row.family {
        t.push(("family", format!("S({}, {}, {{{}}}, {}, {})", f.h, f.frac, f.delta, f.tau, f.m)));
    }
    t.iter().map(|(k, v)| format!("{k:<16}{v}\n")).collect()
}

fn row_with_h(s: &Semigroup, h: Option<i64>) -> ResultRow {
    let mut row = ResultRow::new(s);
    if let Some(h) = h.filter(|&h| Some(h) != row.h) {
        row.h = Some(h);
        row.classification = eliahou_core::classify(s, h).ok();
        row.family = eliahou_core::attribute(s, h);
        row.e0 = None;
    }
    row
}

fn classify(s: Semigroup, h: Option<i64>, json: bool) -> Result<()> {
    if !s.is_canonical() {
        eprintln!("warning: {s} is not canonically defined");
    }
    let row = row_with_h(&s, h);
    println!("{}", row.to_json());
    if !json {
        print!("{}", describe(&row));
    }
    Ok(())
}

fn construct(a: ConstructArgs) -> Result<()> {
    let p = if a.hat {
        hat_params(a.h, a.frac, a.delta)?
    } else {
        FamilyParams::new(a.h, a.frac, a.delta, a.tau.unwrap(), a.m.unwrap())?
    };
    let c = evaluate(&p)?;
    let verdict = c.verdict.map_or("Farey interval mismatch".to_string(), |v| format!("short {} split {}", v.short, v.split));
    let row = row_with_h(&c.semigroup, Some(p.h));
    println!("{}", row.to_json());
    println!("{:<16}{p}", "family");
    println!("{:<16}t = {} w = {} h-regular {}", "parameters", c.t, c.w, p.is_h_regular());
    println!("{:<16}{verdict}", "criteria");
    if let Some(cf) = c.closed_form {
        println!("{:<16}E0 = {} E = {} k = {}", "closed form", cf.e0, cf.record.e, cf.k);
    }
    print!("{}", describe(&row));
    Ok(())
}

fn table(file: PathBuf) -> Result<()> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?
    };
    let rows = read_rows(&text)?;
    print!("{}", Table::from_rows(&rows).render());
    Ok(())
}

fn render(s: Semigroup, svg: bool, h: Option<i64>) -> Result<()> {
    let Some(h) = h.or_else(|| detect_h(&s)) else { bail!("no h detected for {s}, pass --h") };
    let fmt = if svg { Format::Svg } else { Format::Ascii };
    print!("{}", render_critical_interval(&s, h, fmt)?);
    Ok(())
}

fn verify_suite(seed: u64) -> Result<bool> {
    let checks = verify::run_suite(seed);
    for c in &checks {
        println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    Ok(checks.iter().all(|c| c.passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.cmd {
        Cmd::Search(a) => search(a).map(|_| true),
        Cmd::Classify { literal, h, json } => classify(literal, h, json).map(|_| true),
        Cmd::Construct(a) => construct(a).map(|_| true),
        Cmd::Table { file } => table(file).map(|_| true),
        Cmd::Render { literal, svg, ascii: _, h } => render(literal, svg, h).map(|_| true),
        Cmd::Verify { seed } => verify_suite(seed),
    };
    match r {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
