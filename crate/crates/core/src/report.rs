//! The experiment driver and its report formats.

use serde::Serialize;

use crate::event::render_log;
use crate::gm::{buchberger_run, GmConfig};
use crate::problem::ProblemSpec;
use crate::rb::{rb_run, RbConfig, RewriteOrder};
use crate::signature::OrderKind;
use crate::stats::RunStats;
use crate::polynomial::normal_form;
use crate::verify::{reduce_basis, verify_gb};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EngineKind {
    Gm,
    Rb,
}

/// One cell of the experiment matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub engine: EngineKind,
    pub order: Option<OrderKindTag>,
    pub rewrite: Option<RewriteTag>,
    pub update_syz: bool,
    pub product_criterion: bool,
}

// serde-friendly mirrors of the engine enums
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrderKindTag {
    Pot,
    PotRev,
    DPot,
    LtPot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RewriteTag {
    Add,
    Rat,
}

impl From<OrderKindTag> for OrderKind {
    fn from(t: OrderKindTag) -> OrderKind {
        match t {
            OrderKindTag::Pot => OrderKind::Pot,
            OrderKindTag::PotRev => OrderKind::PotRev,
            OrderKindTag::DPot => OrderKind::DPot,
            OrderKindTag::LtPot => OrderKind::LtPot,
        }
    }
}

impl From<RewriteTag> for RewriteOrder {
    fn from(t: RewriteTag) -> RewriteOrder {
        match t {
            RewriteTag::Add => RewriteOrder::Add,
            RewriteTag::Rat => RewriteOrder::Rat,
        }
    }
}

impl RunConfig {
    pub fn gm() -> Self {
        RunConfig {
            engine: EngineKind::Gm,
            order: None,
            rewrite: None,
            update_syz: false,
            product_criterion: false,
        }
    }

    pub fn rb(order: OrderKindTag, rewrite: RewriteTag, u: bool, pc: bool) -> Self {
        RunConfig {
            engine: EngineKind::Rb,
            order: Some(order),
            rewrite: Some(rewrite),
            update_syz: u,
            product_criterion: pc,
        }
    }

    pub fn order_label(&self) -> &'static str {
        match self.order {
            Some(OrderKindTag::Pot) => "pot",
            Some(OrderKindTag::PotRev) => "pot-rev",
            Some(OrderKindTag::DPot) => "d-pot",
            Some(OrderKindTag::LtPot) => "lt-pot",
            None => "",
        }
    }

    pub fn rewrite_label(&self) -> &'static str {
        match self.rewrite {
            Some(RewriteTag::Add) => "add",
            Some(RewriteTag::Rat) => "rat",
            None => "",
        }
    }

    /// Report column label: `gm`, `rb pot rat`, `rb lt-pot rat U+PC`.
    pub fn label(&self) -> String {
        match self.engine {
            EngineKind::Gm => "gm".to_string(),
            EngineKind::Rb => {
                let mut s = format!("rb {} {}", self.order_label(), self.rewrite_label());
                match (self.update_syz, self.product_criterion) {
                    (true, true) => s.push_str(" U+PC"),
                    (true, false) => s.push_str(" U"),
                    (false, true) => s.push_str(" PC"),
                    (false, false) => {}
                }
                s
            }
        }
    }

    pub fn to_rb_config(&self) -> RbConfig {
        RbConfig {
            order: self.order.expect("rb config").into(),
            rewrite: self.rewrite.expect("rb config").into(),
            update_syz: self.update_syz,
            product_criterion: self.product_criterion,
            prefilter: false,
            criteria_off: false,
        }
    }
}

/// The fixed full matrix: gm first, then rb over orders x rewrite x U x PC
/// in declaration order.
pub fn full_matrix() -> Vec<RunConfig> {
    let mut out = vec![RunConfig::gm()];
    for order in [
        OrderKindTag::Pot,
        OrderKindTag::PotRev,
        OrderKindTag::DPot,
        OrderKindTag::LtPot,
    ] {
        for rewrite in [RewriteTag::Add, RewriteTag::Rat] {
            for u in [false, true] {
                for pc in [false, true] {
                    out.push(RunConfig::rb(order, rewrite, u, pc));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub benchmark: String,
    pub config: RunConfig,
    pub label: String,
    pub zero_reductions: u64,
    /// (not rewritable w.r.t. H, not rewritable w.r.t. H or G); present iff
    /// the product-criterion flag was on.
    pub pc_bracket: Option<(u64, u64)>,
    #[serde(skip)]
    pub stats: RunStats,
}

impl ReportRow {
    pub fn cell(&self) -> String {
        match self.pc_bracket {
            Some((h, hg)) => format!("{}({},{})", self.zero_reductions, h, hg),
            None => self.zero_reductions.to_string(),
        }
    }
}

#[derive(Debug, Default)]
pub struct ExperimentOutcome {
    pub rows: Vec<ReportRow>,
    /// Rendered event logs keyed by `benchmark/label`, kept only on request.
    pub logs: Vec<(String, String)>,
    /// Human-readable verification failures; empty on a clean run.
    pub verification_failures: Vec<String>,
}

/// Runs every config on every problem, verifies each result and checks all
/// reduced bases agree per benchmark. Rows come back sorted
/// benchmark-alphabetical, configs in the order given.
///
/// Verification per benchmark, all of it engine-free:
/// 1. the first config's reduced basis R passes the brute-force Buchberger
///    oracle, and every input generator reduces to zero w.r.t. R;
/// 2. every config's reduced basis equals R (reduced-basis uniqueness);
/// 3. every config's raw basis lies in <R> (each member reduces to zero
///    w.r.t. R) and its leads cover the leads of R.
///
/// Together 1-3 imply every config's raw basis is a Groebner basis of the
/// input ideal, without brute-forcing every redundant S-pair of every run.
pub fn run_experiment(
    problems: &[(String, ProblemSpec)],
    configs: &[RunConfig],
    keep_logs: bool,
) -> ExperimentOutcome {
    let mut outcome = ExperimentOutcome::default();
    let mut sorted: Vec<&(String, ProblemSpec)> = problems.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    for (name, spec) in sorted {
        let ring = spec.ring();

        // matrix entries are independent; run them concurrently and merge in
        // config order
        struct Slot {
            basis: Vec<crate::polynomial::Polynomial>,
            reduced: Vec<crate::polynomial::Polynomial>,
            stats: RunStats,
            log: Option<String>,
        }
        let mut slots: Vec<Option<Slot>> = (0..configs.len()).map(|_| None).collect();
        {
            let next = std::sync::atomic::AtomicUsize::new(0);
            let slot_refs: Vec<std::sync::Mutex<&mut Option<Slot>>> =
                slots.iter_mut().map(std::sync::Mutex::new).collect();
            std::thread::scope(|scope| {
                for _ in 0..workers.min(configs.len()) {
                    scope.spawn(|| loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if i >= configs.len() {
                            break;
                        }
                        let config = &configs[i];
                        let (basis, stats, log) = match config.engine {
                            EngineKind::Gm => {
                                let run =
                                    buchberger_run(&ring, &spec.generators, GmConfig::default())
                                        .expect("validated inputs");
                                let log = keep_logs.then(|| render_log(&ring, &run.events));
                                (run.basis, run.stats, log)
                            }
                            EngineKind::Rb => {
                                let run = rb_run(&ring, &spec.generators, config.to_rb_config())
                                    .expect("validated inputs");
                                let log = keep_logs.then(|| render_log(&ring, &run.events));
                                (run.projected_basis(), run.stats, log)
                            }
                        };
                        let reduced = reduce_basis(&ring, &basis);
                        **slot_refs[i].lock().unwrap() = Some(Slot {
                            basis,
                            reduced,
                            stats,
                            log,
                        });
                    });
                }
            });
        }

        let slots: Vec<Slot> = slots.into_iter().map(|s| s.unwrap()).collect();
        let reference = &slots[0].reduced;
        if !verify_gb(&ring, reference) {
            outcome.verification_failures.push(format!(
                "{name}/{}: reduced basis fails the Buchberger oracle",
                configs[0].label()
            ));
        }
        if !spec
            .generators
            .iter()
            .all(|f| normal_form(&ring.field, f, reference, false).is_zero())
        {
            outcome.verification_failures.push(format!(
                "{name}: an input generator does not reduce to zero w.r.t. the reference"
            ));
        }
        {
            let failures: Vec<std::sync::Mutex<Vec<String>>> =
                (0..configs.len()).map(|_| std::sync::Mutex::new(Vec::new())).collect();
            let next = std::sync::atomic::AtomicUsize::new(0);
            // identical basis members recur across configs; memoize their
            // membership checks
            let membership: std::sync::Mutex<
                std::collections::HashMap<crate::polynomial::Polynomial, bool>,
            > = std::sync::Mutex::new(std::collections::HashMap::new());
            std::thread::scope(|scope| {
                for _ in 0..workers.min(configs.len()) {
                    scope.spawn(|| loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if i >= configs.len() {
                            break;
                        }
                        let slot = &slots[i];
                        let mut local = Vec::new();
                        if &slot.reduced != reference {
                            local.push("reduced basis differs from the first config's");
                        }
                        let member_ok = slot.basis.iter().all(|g| {
                            if let Some(ok) = membership.lock().unwrap().get(g) {
                                return *ok;
                            }
                            let ok = normal_form(&ring.field, g, reference, false).is_zero();
                            membership.lock().unwrap().insert(g.clone(), ok);
                            ok
                        });
                        if !member_ok {
                            local.push("a basis member lies outside the reference ideal");
                        }
                        if !reference.iter().all(|rg| {
                            slot.basis
                                .iter()
                                .any(|g| g.lead_mono().unwrap().divides(rg.lead_mono().unwrap()))
                        }) {
                            local.push("basis leads do not cover the reference leads");
                        }
                        if !local.is_empty() {
                            let mut slot_failures = failures[i].lock().unwrap();
                            slot_failures.extend(local.into_iter().map(String::from));
                        }
                    });
                }
            });
            for (config, f) in configs.iter().zip(failures) {
                for msg in f.into_inner().unwrap() {
                    outcome
                        .verification_failures
                        .push(format!("{name}/{}: {msg}", config.label()));
                }
            }
        }
        for (config, slot) in configs.iter().zip(slots) {
            if let Some(log) = slot.log {
                outcome.logs.push((format!("{name}/{}", config.label()), log));
            }
            outcome.rows.push(ReportRow {
                benchmark: name.clone(),
                config: *config,
                label: config.label(),
                zero_reductions: slot.stats.zero_reductions,
                pc_bracket: config.product_criterion.then_some((
                    slot.stats.pc_not_rewritable_h,
                    slot.stats.pc_not_rewritable_h_or_g,
                )),
                stats: slot.stats,
            });
        }
    }
    outcome
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Csv,
    Json,
}

/// Renders rows; ordering is whatever the row list carries, which
/// `run_experiment` fixes as benchmark-alphabetical with configs in matrix
/// order. An empty row list renders headers only.
pub fn emit_report(rows: &[ReportRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => emit_csv(rows),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows).unwrap();
            s.push('\n');
            s
        }
        ReportFormat::Table => emit_table(rows),
    }
}

fn emit_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(
        "benchmark,engine,order,rewrite,update_syz,pc,zero_reductions,pc_miss_h,pc_miss_hg\n",
    );
    for r in rows {
        let (engine, u, pc) = match r.config.engine {
            EngineKind::Gm => ("gm", String::new(), String::new()),
            EngineKind::Rb => (
                "rb",
                (r.config.update_syz as u8).to_string(),
                (r.config.product_criterion as u8).to_string(),
            ),
        };
        let (miss_h, miss_hg) = match r.pc_bracket {
            Some((h, hg)) => (h.to_string(), hg.to_string()),
            None => (String::new(), String::new()),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.benchmark,
            engine,
            r.config.order_label(),
            r.config.rewrite_label(),
            u,
            pc,
            r.zero_reductions,
            miss_h,
            miss_hg
        ));
    }
    out
}

fn emit_table(rows: &[ReportRow]) -> String {
    // benchmarks as rows, configs as columns, in first-seen order
    let mut benches: Vec<&str> = Vec::new();
    let mut labels: Vec<&str> = Vec::new();
    for r in rows {
        if !benches.contains(&r.benchmark.as_str()) {
            benches.push(&r.benchmark);
        }
        if !labels.contains(&r.label.as_str()) {
            labels.push(&r.label);
        }
    }
    let cell = |bench: &str, label: &str| -> String {
        rows.iter()
            .find(|r| r.benchmark == bench && r.label == label)
            .map(|r| r.cell())
            .unwrap_or_default()
    };
    let mut widths: Vec<usize> = labels.iter().map(|l| l.len()).collect();
    for (i, label) in labels.iter().enumerate() {
        for b in &benches {
            widths[i] = widths[i].max(cell(b, label).len());
        }
    }
    let bench_width = benches
        .iter()
        .map(|b| b.len())
        .chain(["benchmark".len()])
        .max()
        .unwrap();
    let mut out = format!("{:bench_width$}", "benchmark");
    for (label, w) in labels.iter().zip(&widths) {
        out.push_str(&format!(" | {:>w$}", label, w = w));
    }
    out.push('\n');
    for b in &benches {
        out.push_str(&format!("{:bench_width$}", b));
        for (label, w) in labels.iter().zip(&widths) {
            out.push_str(&format!(" | {:>w$}", cell(b, label), w = w));
        }
        out.push('\n');
    }
    out
}
