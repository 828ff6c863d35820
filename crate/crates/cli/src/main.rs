//! sigrb: run the signature-based or classic engine on an input system,
//! generate benchmark families, and verify claimed bases.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sigrb_core::event::render_log;
use sigrb_core::generate::{gen_binomial, gen_cyclic, gen_katsura};
use sigrb_core::gm::{buchberger_run, GmConfig};
use sigrb_core::problem::parse_problem;
use sigrb_core::rb::{rb_run, RbConfig, RewriteOrder};
use sigrb_core::report::{
    emit_report, full_matrix, run_experiment, EngineKind, OrderKindTag, ReportFormat, ReportRow,
    RewriteTag, RunConfig,
};
use sigrb_core::signature::OrderKind;
use sigrb_core::verify::{bases_equal, check_claimed_basis, reduce_basis};

#[derive(Parser)]
#[command(
    name = "sigrb",
    version,
    about = "signature-based Groebner basis engine with zero-reduction accounting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one engine configuration on an input file and report it.
    Run(RunArgs),
    /// Generate a benchmark system on stdout (or --out).
    Gen(GenArgs),
    /// Check a claimed Groebner basis against an input system.
    Verify(VerifyArgs),
    /// Run the full configuration matrix over one or more inputs.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Rb,
    Gm,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Pot,
    #[value(name = "pot-rev")]
    PotRev,
    Dpot,
    Ltpot,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> OrderKind {
        match o {
            OrderArg::Pot => OrderKind::Pot,
            OrderArg::PotRev => OrderKind::PotRev,
            OrderArg::Dpot => OrderKind::DPot,
            OrderArg::Ltpot => OrderKind::LtPot,
        }
    }
}

impl From<OrderArg> for OrderKindTag {
    fn from(o: OrderArg) -> OrderKindTag {
        match o {
            OrderArg::Pot => OrderKindTag::Pot,
            OrderArg::PotRev => OrderKindTag::PotRev,
            OrderArg::Dpot => OrderKindTag::DPot,
            OrderArg::Ltpot => OrderKindTag::LtPot,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RewriteArg {
    Add,
    Rat,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> ReportFormat {
        match f {
            FormatArg::Table => ReportFormat::Table,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Input system file.
    file: PathBuf,
    #[arg(long, value_enum, default_value = "rb")]
    engine: EngineArg,
    #[arg(long, value_enum, default_value = "pot")]
    module_order: OrderArg,
    #[arg(long, value_enum, default_value = "rat")]
    rewrite: RewriteArg,
    /// Refresh the syzygy set with principal-syzygy signatures.
    #[arg(long)]
    update_syz: bool,
    /// Use the product-criterion variant of the rewritability check.
    #[arg(long)]
    product_criterion: bool,
    /// Also check pairs at generation time, not only when popped.
    #[arg(long)]
    prefilter: bool,
    #[arg(long, value_enum, default_value = "table")]
    report: FormatArg,
    /// Write the decision log to this path.
    #[arg(long)]
    log: Option<PathBuf>,
    /// Print the reduced Groebner basis after the report.
    #[arg(long)]
    print_basis: bool,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
    /// Write the system here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Homogeneous binomials x^a - x^b of fixed degree.
    Binomial {
        /// Number of variables.
        #[arg(long, short = 'n')]
        vars: usize,
        /// Degree of every binomial.
        #[arg(long, short = 'd')]
        degree: u32,
        /// Number of generators (defaults to the variable count).
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value = "1")]
        seed: u64,
    },
    /// The cyclic-n system.
    Cyclic {
        #[arg(long, short = 'n')]
        n: usize,
        /// Homogenize with an extra variable (the `-h` families).
        #[arg(long)]
        homogenize: bool,
    },
    /// The katsura-n system.
    Katsura {
        #[arg(long, short = 'n')]
        n: usize,
        #[arg(long)]
        homogenize: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Input system file.
    file: PathBuf,
    /// Claimed Groebner basis file (same char and vars lines).
    basis_file: PathBuf,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Input system files.
    files: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    report: FormatArg,
    /// Directory to write per-run decision logs into.
    #[arg(long)]
    log_dir: Option<PathBuf>,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run(args) => run(args),
        Command::Gen(args) => gen(args),
        Command::Verify(args) => verify(args),
        Command::Experiment(args) => experiment(args),
    }
}

fn load(path: &PathBuf) -> Result<sigrb_core::ProblemSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_problem(&text).with_context(|| format!("parsing {}", path.display()))
}

fn bench_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn run(args: RunArgs) -> Result<()> {
    let spec = load(&args.file)?;
    let ring = spec.ring();
    let (basis, stats, events, config) = match args.engine {
        EngineArg::Gm => {
            let run = buchberger_run(&ring, &spec.generators, GmConfig::default())?;
            (run.basis, run.stats, run.events, RunConfig::gm())
        }
        EngineArg::Rb => {
            let cfg = RbConfig {
                order: args.module_order.into(),
                rewrite: match args.rewrite {
                    RewriteArg::Add => RewriteOrder::Add,
                    RewriteArg::Rat => RewriteOrder::Rat,
                },
                update_syz: args.update_syz,
                product_criterion: args.product_criterion,
                prefilter: args.prefilter,
                criteria_off: false,
            };
            let run = rb_run(&ring, &spec.generators, cfg)?;
            (
                run.projected_basis(),
                run.stats,
                run.events,
                RunConfig {
                    engine: EngineKind::Rb,
                    order: Some(args.module_order.into()),
                    rewrite: Some(match args.rewrite {
                        RewriteArg::Add => RewriteTag::Add,
                        RewriteArg::Rat => RewriteTag::Rat,
                    }),
                    update_syz: args.update_syz,
                    product_criterion: args.product_criterion,
                },
            )
        }
    };
    let row = ReportRow {
        benchmark: bench_name(&args.file),
        config,
        label: config.label(),
        zero_reductions: stats.zero_reductions,
        pc_bracket: config
            .product_criterion
            .then_some((stats.pc_not_rewritable_h, stats.pc_not_rewritable_h_or_g)),
        stats: stats.clone(),
    };
    print!("{}", emit_report(&[row], args.report.into()));
    eprintln!(
        "basis: {} elements ({} after reduction); pairs: {} generated, {} rewritten-H, \
         {} rewritten-G, {} pc-removed, {} singular, {} born zero",
        basis.len(),
        reduce_basis(&ring, &basis).len(),
        stats.spairs_generated,
        stats.spairs_rewritten_h,
        stats.spairs_rewritten_g,
        stats.spairs_removed_pc,
        stats.spairs_singular,
        stats.spairs_born_zero,
    );
    if let Some(path) = args.log {
        fs::write(&path, render_log(&ring, &events))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if args.print_basis {
        for g in reduce_basis(&ring, &basis) {
            println!("{}", g.render(&ring));
        }
    }
    Ok(())
}

fn gen(args: GenArgs) -> Result<()> {
    let spec = match args.family {
        GenFamily::Binomial {
            vars,
            degree,
            count,
            seed,
        } => gen_binomial(vars, degree, count.unwrap_or(vars), seed),
        GenFamily::Cyclic { n, homogenize } => gen_cyclic(n, homogenize),
        GenFamily::Katsura { n, homogenize } => gen_katsura(n, homogenize),
    };
    match args.out {
        Some(path) => fs::write(&path, spec.render())
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", spec.render()),
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<()> {
    let spec = load(&args.file)?;
    let claimed = load(&args.basis_file)?;
    if spec.characteristic != claimed.characteristic || spec.vars != claimed.vars {
        bail!("input and basis files declare different rings");
    }
    let ring = spec.ring();
    let report = check_claimed_basis(&ring, &spec.generators, &claimed.generators);
    println!(
        "buchberger criterion: {}",
        if report.buchberger_ok { "ok" } else { "FAILED" }
    );
    println!(
        "input generators reduce to zero: {}",
        if report.inputs_reduce_to_zero {
            "ok"
        } else {
            "FAILED"
        }
    );
    // reverse inclusion via an independently computed basis
    let gm = buchberger_run(&ring, &spec.generators, GmConfig::default())?;
    let same_ideal = bases_equal(&ring, &gm.basis, &claimed.generators);
    println!(
        "reduced basis matches a computed one: {}",
        if same_ideal { "ok" } else { "FAILED" }
    );
    if report.buchberger_ok && report.inputs_reduce_to_zero && same_ideal {
        println!("verified");
        Ok(())
    } else {
        bail!("verification failed")
    }
}

fn experiment(args: ExperimentArgs) -> Result<()> {
    if args.files.is_empty() {
        bail!("no input files");
    }
    let mut problems = Vec::new();
    for f in &args.files {
        problems.push((bench_name(f), load(f)?));
    }
    let keep_logs = args.log_dir.is_some();
    let outcome = run_experiment(&problems, &full_matrix(), keep_logs);
    print!("{}", emit_report(&outcome.rows, args.report.into()));
    if let Some(dir) = args.log_dir {
        fs::create_dir_all(&dir)?;
        for (key, log) in &outcome.logs {
            let file = dir.join(format!("{}.log", key.replace(['/', ' '], "_")));
            fs::write(&file, log)?;
        }
    }
    if !outcome.verification_failures.is_empty() {
        for f in &outcome.verification_failures {
            eprintln!("verification failure: {f}");
        }
        bail!(
            "{} verification failure(s)",
            outcome.verification_failures.len()
        );
    }
    Ok(())
}
